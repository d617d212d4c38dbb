//! Independent oracles: the symmetric-group model of type A, group orders,
//! root counts and brute-force filtering of letter sequences.

use std::collections::{BTreeMap, BTreeSet};

use bsdh_core::bsdh;
use bsdh_core::weyl;
use bsdh_core::{RootSystem, Weight, Word};
use itertools::Itertools;

fn rs(t: &str) -> RootSystem {
    RootSystem::new(t.parse().unwrap())
}

/// Applies `s_{i_1} ... s_{i_r}` to the identity permutation of `0..=n`,
/// with `s_i` swapping positions `i - 1` and `i`.
fn permutation_of(n: usize, word: &Word) -> Vec<usize> {
    let mut p: Vec<usize> = (0..=n).collect();
    for &i in word.letters() {
        p.swap(i - 1, i);
    }
    p
}

fn inversions(p: &[usize]) -> usize {
    p.iter().tuple_combinations().filter(|(a, b)| a > b).count()
}

#[test]
fn type_a_matches_permutation_model() {
    for n in 1..=4 {
        let r = rs(&format!("A{n}"));
        let elements = weyl::all_elements(&r);
        let perms: BTreeSet<Vec<usize>> = elements
            .iter()
            .map(|w| permutation_of(n, w.canonical_word()))
            .collect();
        // bijection with S_{n+1}, length = number of inversions
        assert_eq!(perms.len(), (1..=n + 1).product::<usize>());
        for w in &elements {
            let p = permutation_of(n, w.canonical_word());
            assert_eq!(inversions(&p), w.length());
            for word in weyl::all_reduced_words(&r, w) {
                assert_eq!(permutation_of(n, &word), p);
            }
        }
    }
}

#[test]
fn reduced_words_of_longest_permutation() {
    // Staircase tableau counts: 1, 2, 16, 768, 292864.
    let expected = [1u128, 2, 16, 768, 292_864];
    for (n, &count) in (1..=5).zip(&expected) {
        let r = rs(&format!("A{n}"));
        assert_eq!(
            weyl::count_reduced_words(&r, &weyl::longest_element(&r)),
            count
        );
    }
}

#[test]
fn filtering_letter_sequences_recovers_reduced_words() {
    for t in ["A3", "B3", "C3"] {
        let r = rs(t);
        let mut by_element: BTreeMap<Weight, Vec<Word>> = BTreeMap::new();
        for len in 0..=6 {
            for letters in itertools::repeat_n(1..=3usize, len).multi_cartesian_product() {
                let word = Word(letters);
                if weyl::is_reduced(&r, &word) {
                    let fp = weyl::apply_word(&r, &word, r.rho()).unwrap();
                    by_element.entry(fp).or_default().push(word);
                }
            }
        }
        for w in weyl::all_elements(&r)
            .into_iter()
            .filter(|w| w.length() <= 6)
        {
            let mut filtered = by_element.remove(w.fingerprint()).unwrap_or_default();
            filtered.sort();
            assert_eq!(filtered, weyl::all_reduced_words(&r, &w), "{t} {w}");
        }
        assert!(by_element.is_empty());
    }
}

#[test]
fn weyl_group_orders_and_root_counts() {
    let cases = [
        ("A3", 24, 6),
        ("B3", 48, 9),
        ("C3", 48, 9),
        ("D4", 192, 12),
        ("G2", 12, 6),
        ("F4", 1152, 24),
        ("B4", 384, 16),
    ];
    for (t, order, roots) in cases {
        let r = rs(t);
        assert_eq!(r.positive_roots().len(), roots, "{t}");
        assert_eq!(weyl::all_elements(&r).len(), order, "{t}");
        assert_eq!(weyl::longest_element(&r).length(), roots, "{t}");
    }
    for (t, roots) in [("E6", 36), ("E7", 63), ("E8", 120), ("D6", 30), ("C5", 25)] {
        assert_eq!(rs(t).positive_roots().len(), roots, "{t}");
    }
}

#[test]
fn commutation_classes_of_longest_elements() {
    let a3 = rs("A3");
    let words = weyl::all_reduced_words(&a3, &weyl::longest_element(&a3));
    assert_eq!(weyl::commutation_classes(&a3, &words).unwrap().len(), 8);
    let b2 = rs("B2");
    let words = weyl::all_reduced_words(&b2, &weyl::longest_element(&b2));
    assert_eq!(words.len(), 2);
    assert_eq!(weyl::commutation_classes(&b2, &words).unwrap().len(), 2);
}

#[test]
fn coxeter_element_counts_follow_acyclic_orientations() {
    // A tree diagram with n nodes has 2^(n-1) Coxeter elements.
    for (t, n) in [
        ("A3", 3),
        ("A4", 4),
        ("B3", 3),
        ("D4", 4),
        ("F4", 4),
        ("E6", 6),
    ] {
        assert_eq!(weyl::coxeter_elements(&rs(t)).len(), 1 << (n - 1), "{t}");
    }
}

#[test]
fn m_vectors_by_hand_in_a2() {
    // m_j = sum_{k >= j} cartan(i_j, i_k), worked out by hand.
    let a2 = rs("A2");
    for (word, expected) in [
        ("1,2", vec![1, 2]),
        ("2,1", vec![1, 2]),
        ("1,2,1", vec![1, 1, 2]),
    ] {
        let w: Word = word.parse().unwrap();
        assert_eq!(
            bsdh::anticanonical_o_coeffs(&a2, &w).unwrap().coeffs(),
            &expected[..],
            "{word}"
        );
    }
}
