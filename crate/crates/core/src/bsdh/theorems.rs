//! Decision procedures for the Coxeter and minuscule cases, and their
//! brute-force counterparts.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::picard::classify;
use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem, RootVector};
use crate::weyl::{self, WeylElement, Word};

/// Global generation of `K^{-1}` for a Coxeter word `sigma`: for every `r`,
/// `<alpha_{sigma(r)} + ... + alpha_{sigma(n)}, alpha_{sigma(r)}> >= 0`.
pub fn coxeter_gg_criterion(rs: &RootSystem, word: &Word) -> Result<bool> {
    if !weyl::is_coxeter_word(rs, word) {
        return Err(Error::NotCoxeter);
    }
    let sigma = word.letters();
    Ok((0..sigma.len()).all(|r| {
        let head = sigma[r];
        sigma[r..].iter().map(|&k| rs.cartan(head, k)).sum::<i64>() >= 0
    }))
}

/// `w^{-1}(alpha_1 + ... + alpha_n)`.
pub fn inverse_image_of_root_sum(rs: &RootSystem, w: &WeylElement) -> RootVector {
    weyl::apply_word_to_root(rs, &w.canonical_word().reversed(), &rs.simple_root_sum())
        .expect("canonical word is valid")
}

/// The simple index `i` with `v = -alpha_i`, if any.
pub fn negative_simple_index(v: &RootVector) -> Option<usize> {
    let mut hit = None;
    for (k, &c) in v.coords().iter().enumerate() {
        match c {
            0 => {}
            -1 if hit.is_none() => hit = Some(k + 1),
            _ => return None,
        }
    }
    hit
}

fn check_full_support_and_type(rs: &RootSystem, w: &WeylElement) -> Result<()> {
    let ty = rs.dynkin_type();
    if ty.family() == Family::A && ty.rank() == 2 {
        return Err(Error::ExcludedTypeA2);
    }
    let supp = weyl::element_support(w);
    if supp.len() != rs.rank() {
        return Err(Error::SupportNotFull {
            support: supp.into_iter().collect(),
        });
    }
    Ok(())
}

/// For full-support `w` outside type A2: `Z(w, i)` is Fano for every reduced
/// word iff `w` is Coxeter and `w^{-1}(sum of simple roots)` is a negative
/// simple root.
pub fn fano_all_expressions_criterion(rs: &RootSystem, w: &WeylElement) -> Result<bool> {
    check_full_support_and_type(rs, w)?;
    Ok(weyl::is_coxeter(rs, w)
        && negative_simple_index(&inverse_image_of_root_sum(rs, w)).is_some())
}

/// Brute-force counterpart of [`fano_all_expressions_criterion`]: classifies
/// every reduced word of `w`.
pub fn fano_all_expressions_bruteforce(rs: &RootSystem, w: &WeylElement) -> Result<bool> {
    check_full_support_and_type(rs, w)?;
    Ok(all_expressions_fano(rs, w))
}

/// Whether every reduced word of `w` gives a Fano variety. No hypotheses.
pub fn all_expressions_fano(rs: &RootSystem, w: &WeylElement) -> bool {
    first_non_fano_word(rs, w).is_none()
}

/// The lexicographically first reduced word of `w` whose variety is not Fano.
pub fn first_non_fano_word(rs: &RootSystem, w: &WeylElement) -> Option<Word> {
    weyl::for_each_reduced_word(rs, w, |word| match classify(rs, word) {
        Ok(c) if c.fano => ControlFlow::Continue(()),
        _ => ControlFlow::Break(word.clone()),
    })
}

/// A census entry: the Coxeter element and its smallest permutation word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub element: WeylElement,
    pub word: Word,
}

/// For each simple index `i`, the unique Coxeter element `c` with
/// `c^{-1}(alpha_1 + ... + alpha_n) = -alpha_i`, if one exists. Found by
/// scanning every Coxeter element; a second hit for the same `i` is an
/// invariant violation.
pub fn coxeter_census(rs: &RootSystem) -> Result<BTreeMap<usize, Option<CensusEntry>>> {
    if rs.rank() < 2 {
        return Err(Error::RankTooSmall);
    }
    let mut census: BTreeMap<usize, Option<CensusEntry>> =
        (1..=rs.rank()).map(|i| (i, None)).collect();
    for (element, word) in weyl::coxeter_elements(rs) {
        if let Some(i) = negative_simple_index(&inverse_image_of_root_sum(rs, &element)) {
            let slot = census.get_mut(&i).expect("index in range");
            if let Some(prev) = slot {
                return Err(Error::InvariantViolation(format!(
                    "two Coxeter elements ({} and {word}) send the root sum to -alpha_{i}",
                    prev.word
                )));
            }
            *slot = Some(CensusEntry { element, word });
        }
    }
    Ok(census)
}

/// `J_1 = { alpha in S : <alpha_1 + ... + alpha_n, alpha> = 1 }` as 1-based indices.
pub fn j1(rs: &RootSystem) -> BTreeSet<usize> {
    let sum = rs.simple_root_sum();
    (1..=rs.rank())
        .filter(|&a| rs.pair_root_simple(&sum, a) == 1)
        .collect()
}

/// The sets `J_r`, `r = 1..n-1`, attached to a Coxeter word `(i_1, ..., i_n)`:
/// simple roots outside `{alpha_{i_1}, ..., alpha_{i_{r-1}}}` pairing to 1
/// with `alpha_{i_r} + ... + alpha_{i_n}`.
pub fn j_sets(rs: &RootSystem, word: &Word) -> Result<Vec<BTreeSet<usize>>> {
    if !weyl::is_coxeter_word(rs, word) {
        return Err(Error::NotCoxeter);
    }
    let letters = word.letters();
    let n = letters.len();
    Ok((0..n.saturating_sub(1))
        .map(|r| {
            let mut tail = RootVector::zero(rs.rank());
            for &k in &letters[r..] {
                tail.0[k - 1] += 1;
            }
            let used: BTreeSet<usize> = letters[..r].iter().copied().collect();
            (1..=rs.rank())
                .filter(|a| !used.contains(a))
                .filter(|&a| rs.pair_root_simple(&tail, a) == 1)
                .collect()
        })
        .collect())
}

/// Whether `alpha_{i_r} in J_r` for every `r < n`.
pub fn j_chain_holds(rs: &RootSystem, word: &Word) -> Result<bool> {
    let sets = j_sets(rs, word)?;
    Ok(sets
        .iter()
        .zip(word.letters())
        .all(|(set, letter)| set.contains(letter)))
}

/// A reduced word of a minuscule element whose m-vector has a negative entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinusculeViolation {
    pub element: Word,
    pub word: Word,
    pub m: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinusculeReport {
    pub minuscule_index: usize,
    pub elements: usize,
    /// Number of (element, reduced word) pairs examined.
    pub pairs_checked: usize,
    pub violations: Vec<MinusculeViolation>,
}

/// Sweeps every reduced word of every minimal coset representative for the
/// minuscule `omega_m` and collects words with some `m_j < 0`.
pub fn minuscule_gg_check(rs: &RootSystem, m: usize) -> Result<MinusculeReport> {
    let elements = weyl::minuscule_elements(rs, m)?;
    let per_element: Vec<Result<(usize, Vec<MinusculeViolation>)>> = elements
        .par_iter()
        .map(|w| {
            let words = weyl::all_reduced_words(rs, w);
            let mut bad = Vec::new();
            for word in &words {
                let c = classify(rs, word)?;
                if !c.globally_generated {
                    bad.push(MinusculeViolation {
                        element: w.canonical_word().clone(),
                        word: word.clone(),
                        m: c.m.into_coeffs(),
                    });
                }
            }
            Ok((words.len(), bad))
        })
        .collect();
    let mut pairs_checked = 0;
    let mut violations = Vec::new();
    for r in per_element {
        let (n, mut bad) = r?;
        pairs_checked += n;
        violations.append(&mut bad);
    }
    Ok(MinusculeReport {
        minuscule_index: m,
        elements: elements.len(),
        pairs_checked,
        violations,
    })
}
