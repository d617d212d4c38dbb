//! Brute-force verification suites.
//!
//! Each suite checks one family of identities on a single root system and
//! returns a [`SuiteReport`] with the number of cases examined and every
//! violation found. Output order is deterministic: elements are visited by
//! length then canonical word, and words lexicographically.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bsdh::{self, Basis, PicardClass};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{self, WeylElement, Word};

/// How many cases a suite visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scope {
    /// Every element and every reduced word.
    Exhaustive,
    /// `count` random reduced words drawn with a seeded generator.
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub target: String,
    pub checked: usize,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, rs: &RootSystem) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            target: rs.dynkin_type().to_string(),
            checked: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A uniformly random walk up the weak order: starts at the identity and
/// left-multiplies by random lengthening simple reflections until the word
/// reaches `len` letters or `w_0`.
pub fn random_reduced_word(rs: &RootSystem, rng: &mut impl Rng, len: usize) -> Word {
    let mut mu = rs.rho().0.clone();
    let mut letters = Vec::with_capacity(len);
    while letters.len() < len {
        let up: Vec<usize> = (0..rs.rank()).filter(|&i| mu[i] > 0).collect();
        if up.is_empty() {
            break;
        }
        let i0 = up[rng.gen_range(0..up.len())];
        rs.reflect_weight_in_place(i0, &mut mu);
        letters.push(i0 + 1);
    }
    // letters were applied on the left, so the word reads in reverse
    letters.reverse();
    Word(letters)
}

/// Random reduced words with lengths spread over `1..=l(w_0)`.
pub fn sample_words(rs: &RootSystem, count: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max = rs.positive_roots().len();
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max);
            random_reduced_word(rs, &mut rng, len)
        })
        .collect()
}

/// Total number of reduced words over all elements of `W`, by the recursion
/// `N(w) = sum over left descents i of N(s_i w)` along the weak order.
pub fn total_reduced_words(rs: &RootSystem) -> u128 {
    let mut counts: HashMap<Weight, u128> = HashMap::new();
    let mut total = 0;
    for w in weyl::all_elements(rs) {
        let n = if w.is_identity() {
            1
        } else {
            weyl::left_descents(&w)
                .into_iter()
                .map(|i| counts[weyl::left_multiply(rs, i, &w).fingerprint()])
                .sum()
        };
        total += n;
        counts.insert(w.fingerprint().clone(), n);
    }
    total
}

fn describe(scope: Scope) -> String {
    match scope {
        Scope::Exhaustive => "scope: exhaustive".into(),
        Scope::Sampled { count, seed } => format!("scope: {count} sampled words, seed {seed}"),
    }
}

/// Every reduced word of every element, or a random sample.
fn words_in_scope(rs: &RootSystem, scope: Scope) -> Vec<Word> {
    match scope {
        Scope::Exhaustive => weyl::all_elements(rs)
            .par_iter()
            .flat_map_iter(|w| weyl::all_reduced_words(rs, w))
            .collect(),
        Scope::Sampled { count, seed } => sample_words(rs, count, seed),
    }
}

/// Closed-form m-vector against the line-bundle decomposition.
pub fn oracle_m(rs: &RootSystem, scope: Scope) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("oracle-m", rs);
    report.notes.push(describe(scope));
    let words = words_in_scope(rs, scope);
    let outcomes: Vec<Result<Option<String>>> = words
        .par_iter()
        .map(|word| {
            let formula = bsdh::anticanonical_o_coeffs(rs, word)?;
            let decomposed = bsdh::o_coeffs_via_decomposition(rs, word)?;
            Ok((formula != decomposed).then(|| {
                format!(
                    "word {word}: formula {:?} vs decomposition {:?}",
                    formula.coeffs(),
                    decomposed.coeffs()
                )
            }))
        })
        .collect();
    for o in outcomes {
        report.checked += 1;
        if let Some(v) = o? {
            report.violations.push(v);
        }
    }
    Ok(report)
}

/// Fano-for-every-reduced-word: criterion against brute force over every
/// full-support element.
pub fn fano_all_words(rs: &RootSystem) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("thm56", rs);
    let full: Vec<WeylElement> = weyl::all_elements(rs)
        .into_iter()
        .filter(|w| weyl::element_support(w).len() == rs.rank())
        .collect();
    let outcomes: Vec<Result<(bool, bool, Option<Word>)>> = full
        .par_iter()
        .map(|w| {
            let criterion = bsdh::fano_all_expressions_criterion(rs, w)?;
            let witness = bsdh::first_non_fano_word(rs, w);
            Ok((criterion, witness.is_none(), witness))
        })
        .collect();
    let mut positives = 0;
    for (w, o) in full.iter().zip(outcomes) {
        let (criterion, brute, witness) = o?;
        report.checked += 1;
        if brute {
            positives += 1;
        }
        if criterion != brute {
            report.violations.push(format!(
                "element {w}: criterion {criterion}, brute force {brute} (non-Fano word: {})",
                witness
                    .map(|x| x.to_string())
                    .unwrap_or_else(|| "none".into())
            ));
        }
    }
    report.notes.push(format!(
        "{} full-support elements, {positives} Fano for every reduced word",
        full.len()
    ));
    Ok(report)
}

/// Global generation for every reduced word of every minuscule element.
pub fn minuscule_gg(rs: &RootSystem, m: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("thm58", rs);
    report.target = format!("{}:{m}", rs.dynkin_type());
    let sweep = bsdh::minuscule_gg_check(rs, m)?;
    report.checked = sweep.pairs_checked;
    report.violations = sweep
        .violations
        .iter()
        .map(|v| format!("element {} word {}: m = {:?}", v.element, v.word, v.m))
        .collect();
    report
        .notes
        .push(format!("{} minuscule elements", sweep.elements));
    Ok(report)
}

/// Coxeter global-generation criterion against m-vector nonnegativity on
/// every permutation word.
pub fn coxeter_gg(rs: &RootSystem) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("cor54", rs);
    let n = rs.rank();
    let mut gg = 0;
    for perm in itertools::Itertools::permutations(1..=n, n) {
        let word = Word(perm);
        let criterion = bsdh::coxeter_gg_criterion(rs, &word)?;
        let classified = bsdh::classify(rs, &word)?.globally_generated;
        report.checked += 1;
        gg += classified as usize;
        if criterion != classified {
            report.violations.push(format!(
                "word {word}: criterion {criterion}, m-vector says {classified}"
            ));
        }
    }
    report.notes.push(format!(
        "{gg} of {} Coxeter words globally generated",
        report.checked
    ));
    Ok(report)
}

/// Census shape, uniqueness and the `J_r` chain.
pub fn census(rs: &RootSystem) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("census", rs);
    let census = bsdh::coxeter_census(rs)?;
    let simply_laced = rs.dynkin_type().is_simply_laced();
    for (&i, entry) in &census {
        report.checked += 1;
        let expected = simply_laced || rs.is_short(i);
        match (entry, expected) {
            (Some(e), false) => report.violations.push(format!(
                "long simple root alpha_{i} has census element {}",
                e.word
            )),
            (None, true) => report
                .violations
                .push(format!("alpha_{i} has no census element")),
            _ => {}
        }
        if let Some(e) = entry {
            report.notes.push(format!("alpha_{i} -> {}", e.element));
            // simple roots inverted by c^{-1} are J_1 without alpha_i
            let inv = weyl::inverse(rs, &e.element);
            let inverted: BTreeSet<usize> = weyl::inversion_set(rs, &inv)
                .into_iter()
                .filter(|&k| k < rs.rank())
                .map(|k| k + 1)
                .collect();
            let mut expected = bsdh::j1(rs);
            expected.remove(&i);
            report.checked += 1;
            if inverted != expected {
                report.violations.push(format!(
                    "alpha_{i}: simple inversions of c^-1 {inverted:?}, J_1 minus alpha_{i} {expected:?}"
                ));
            }
            for word in weyl::all_reduced_words(rs, &e.element) {
                report.checked += 1;
                if !bsdh::j_chain_holds(rs, &word)? {
                    report
                        .violations
                        .push(format!("census word {word} breaks the J_r chain"));
                }
            }
        } else {
            report.notes.push(format!("alpha_{i} -> none"));
        }
    }

    // J_r chain holds exactly for the Coxeter words of census elements.
    let census_elements: BTreeSet<_> = census
        .values()
        .flatten()
        .map(|e| e.element.fingerprint().clone())
        .collect();
    let n = rs.rank();
    for perm in itertools::Itertools::permutations(1..=n, n) {
        let word = Word(perm);
        let fp = weyl::apply_word(rs, &word, rs.rho())?;
        let chain = bsdh::j_chain_holds(rs, &word)?;
        report.checked += 1;
        if chain != census_elements.contains(&fp) {
            report.violations.push(format!(
                "word {word}: J_r chain {chain} disagrees with the census"
            ));
        }
    }

    report.notes.push(format!("J_1 = {:?}", bsdh::j1(rs)));
    Ok(report)
}

/// `|J_1| >= 2` in simply-laced types and `|J_1| = 1` otherwise.
///
/// The second half fails for `C_n` (`n >= 3`) and `F_4`, where `J_1` has two
/// elements; those violations are genuine and reported as such.
pub fn j1_cardinality(rs: &RootSystem) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("j1", rs);
    if rs.rank() < 2 {
        return Err(Error::RankTooSmall);
    }
    let j1 = bsdh::j1(rs);
    report.checked = 1;
    report.notes.push(format!("J_1 = {j1:?}"));
    let simply_laced = rs.dynkin_type().is_simply_laced();
    let ok = if simply_laced {
        j1.len() >= 2
    } else {
        j1.len() == 1
    };
    if !ok {
        report.violations.push(format!(
            "|J_1| = {} in non-simply-laced {} (expected 1)",
            j1.len(),
            rs.dynkin_type()
        ));
    }
    Ok(report)
}

/// Character invariants on every Coxeter word: nonnegative multiplicities,
/// `w.0` with multiplicity one, all weights above `w.0`.
pub fn character(rs: &RootSystem) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("character", rs);
    let n = rs.rank();
    for i in 1..=n {
        let chi = bsdh::anticanonical_character(rs, &Word(vec![i]))?;
        report.checked += 1;
        if chi.dimension() != 3 {
            report
                .violations
                .push(format!("length-1 word {i}: dimension {}", chi.dimension()));
        }
    }
    for perm in itertools::Itertools::permutations(1..=n, n) {
        let word = Word(perm);
        report.checked += 1;
        match bsdh::character_lowest_weight_report(rs, &word) {
            Ok(r) if r.passed => {}
            Ok(r) => report.violations.push(format!(
                "word {word}: certified {}, mult(w.0) = {}, {} weights below w.0",
                r.certified,
                r.lowest_multiplicity,
                r.below_lowest.len()
            )),
            Err(Error::InvariantViolation(msg)) => report.violations.push(msg),
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Dot-action identity, basis round trip, `m_r = 2` and `X`-coefficients `>= 2`.
pub fn structural(rs: &RootSystem, scope: Scope, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("structural", rs);
    report.notes.push(describe(scope));
    let elements = match scope {
        Scope::Exhaustive => weyl::all_elements(rs),
        Scope::Sampled { count, seed } => sample_words(rs, count, seed)
            .iter()
            .map(|w| weyl::element_of(rs, w))
            .collect::<Result<_>>()?,
    };
    for w in &elements {
        report.checked += 1;
        match weyl::w_dot_zero(rs, w) {
            Ok(_) => {}
            Err(Error::InvariantViolation(msg)) => report.violations.push(msg),
            Err(e) => return Err(e),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for word in words_in_scope(rs, scope) {
        if word.is_empty() {
            continue;
        }
        report.checked += 1;
        let m = bsdh::anticanonical_o_coeffs(rs, &word)?;
        if m.coeffs().last() != Some(&2) {
            report.violations.push(format!(
                "word {word}: last m-coefficient {:?}",
                m.coeffs().last()
            ));
        }
        let x = bsdh::anticanonical_x_coeffs(rs, &word)?;
        if x.coeffs().iter().any(|&c| c < 2) {
            report
                .violations
                .push(format!("word {word}: X-coefficients {:?}", x.coeffs()));
        }
        if bsdh::x_to_o(rs, &x)? != m {
            report.violations.push(format!(
                "word {word}: X-basis class does not map to the m-vector"
            ));
        }
        let random: Vec<i64> = (0..word.len()).map(|_| rng.gen_range(-20..=20)).collect();
        let v = PicardClass::new(Basis::X, random, word.clone())?;
        if bsdh::o_to_x(rs, &bsdh::x_to_o(rs, &v)?)? != v {
            report
                .violations
                .push(format!("word {word}: basis round trip failed"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn random_words_are_reduced_and_deterministic() {
        let f4 = rs("F4");
        let a = sample_words(&f4, 50, 7);
        assert_eq!(a, sample_words(&f4, 50, 7));
        assert!(a.iter().all(|w| weyl::is_reduced(&f4, w)));
        assert!(a.iter().all(|w| !w.is_empty()));
    }

    #[test]
    fn j1_cardinality_fails_exactly_for_c_and_f() {
        for t in ["A2", "A4", "D4", "E6", "B2", "B3", "B5", "G2"] {
            assert!(j1_cardinality(&rs(t)).unwrap().passed(), "{t}");
        }
        for t in ["C3", "C4", "C6", "F4"] {
            let r = j1_cardinality(&rs(t)).unwrap();
            assert_eq!(r.violations.len(), 1, "{t}");
        }
        let c3 = rs("C3");
        assert_eq!(bsdh::j1(&c3).into_iter().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(
            bsdh::j1(&rs("F4")).into_iter().collect::<Vec<_>>(),
            vec![1, 4]
        );
    }

    #[test]
    fn total_word_counts() {
        assert_eq!(total_reduced_words(&rs("A3")), 66);
        assert_eq!(total_reduced_words(&rs("B3")), 209);
        assert_eq!(total_reduced_words(&rs("G2")), 13);
        assert_eq!(total_reduced_words(&rs("D4")), 9719);
    }

    #[test]
    fn small_suites_pass() {
        let b2 = rs("B2");
        assert!(oracle_m(&b2, Scope::Exhaustive).unwrap().passed());
        assert!(fano_all_words(&b2).unwrap().passed());
        assert!(coxeter_gg(&b2).unwrap().passed());
        assert!(census(&b2).unwrap().passed());
        assert!(character(&b2).unwrap().passed());
        assert!(structural(&b2, Scope::Exhaustive, 0).unwrap().passed());
    }
}
