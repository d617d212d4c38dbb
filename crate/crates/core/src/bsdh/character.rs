//! Formal characters and Demazure operators.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{self, Word};

/// A virtual `T`-character: weights with nonzero integer multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn zero() -> Self {
        Character::default()
    }

    /// `e^0` in rank `n`.
    pub fn unit(n: usize) -> Self {
        Character::monomial(Weight::zero(n))
    }

    pub fn monomial(lambda: Weight) -> Self {
        let mut c = Character::zero();
        c.add_term(lambda, 1);
        c
    }

    pub fn add_term(&mut self, lambda: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(mult);
            }
        }
    }

    pub fn multiplicity(&self, lambda: &Weight) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Sum of multiplicities.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn num_weights(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// No negative multiplicities.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&v| v > 0)
    }

    /// Multiplies by `e^mu`.
    pub fn shifted(&self, mu: &Weight) -> Character {
        Character {
            terms: self.terms.iter().map(|(k, &v)| (k + mu, v)).collect(),
        }
    }
}

/// Demazure operator for the simple root `alpha_i` (1-based), extended
/// linearly. With `m = <lambda, alpha_i>`:
///
/// * `m >= 0`: `e^lambda -> e^lambda + e^{lambda - alpha} + ... + e^{lambda - m alpha}`
/// * `m = -1`: `e^lambda -> 0`
/// * `m <= -2`: `e^lambda -> -(e^{lambda + alpha} + ... + e^{lambda + (-m-1) alpha})`
pub fn demazure_operator(rs: &RootSystem, i: usize, chi: &Character) -> Result<Character> {
    rs.check_simple(i)?;
    let alpha = rs.root_to_weight(&rs.simple_root(i));
    let mut out = Character::zero();
    for (lambda, mult) in chi.terms() {
        if lambda.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: lambda.len(),
            });
        }
        let m = lambda.pair_simple(i);
        if m >= 0 {
            for k in 0..=m {
                out.add_term(lambda - &(k * &alpha), mult);
            }
        } else if m <= -2 {
            for k in 1..=(-m - 1) {
                out.add_term(lambda + &(k * &alpha), -mult);
            }
        }
    }
    Ok(out)
}

/// Euler characteristic of `K^{-1}` on `Z(w, i)` as a virtual character:
/// `chi(empty) = e^0` and `chi(i_1, ..., i_r) = D_{i_1}(e^{alpha_{i_1}} chi(i_2, ..., i_r))`.
pub fn anticanonical_character(rs: &RootSystem, word: &Word) -> Result<Character> {
    weyl::require_reduced(rs, word)?;
    let mut chi = Character::unit(rs.rank());
    for &i in word.letters().iter().rev() {
        let alpha = rs.root_to_weight(&rs.simple_root(i));
        chi = demazure_operator(rs, i, &chi.shifted(&alpha))?;
    }
    Ok(chi)
}

/// Outcome of checking the lowest-weight structure of the anti-canonical character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowestWeightReport {
    pub word: Word,
    pub dimension: i64,
    pub num_weights: usize,
    /// All multiplicities are nonnegative, so the character may be read as `H^0`.
    pub certified: bool,
    /// `w . 0`.
    pub lowest_weight: Weight,
    pub lowest_multiplicity: i64,
    /// Weights `nu` with `nu - w.0` outside the nonnegative root cone.
    pub below_lowest: Vec<Weight>,
    /// Weights carrying a negative multiplicity.
    pub negative: Vec<(Weight, i64)>,
    pub passed: bool,
}

/// Checks that `w . 0` occurs exactly once and every weight dominates it in
/// the root-cone order.
///
/// Failures on uncertified characters are report content. On a certified
/// character a failure contradicts the lowest-weight theorems and is
/// returned as an invariant violation.
pub fn character_lowest_weight_report(rs: &RootSystem, word: &Word) -> Result<LowestWeightReport> {
    let chi = anticanonical_character(rs, word)?;
    let w = weyl::element_of(rs, word)?;
    let lowest = weyl::w_dot_zero(rs, &w)?;
    let mut below = Vec::new();
    let mut negative = Vec::new();
    for (nu, mult) in chi.terms() {
        if mult < 0 {
            negative.push((nu.clone(), mult));
        }
        let diff = rs.weight_to_root(&(nu - &lowest))?;
        if !diff.is_nonnegative() {
            below.push(nu.clone());
        }
    }
    let certified = negative.is_empty();
    let lowest_multiplicity = chi.multiplicity(&lowest);
    let passed = certified && lowest_multiplicity == 1 && below.is_empty();
    if certified && !passed {
        return Err(Error::InvariantViolation(format!(
            "certified character of word {word} fails the lowest-weight check \
             (mult of w.0 = {lowest_multiplicity}, {} weights below w.0)",
            below.len()
        )));
    }
    Ok(LowestWeightReport {
        word: word.clone(),
        dimension: chi.dimension(),
        num_weights: chi.num_weights(),
        certified,
        lowest_weight: lowest,
        lowest_multiplicity,
        below_lowest: below,
        negative,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootVector;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn add_term_drops_zeros() {
        let mut c = Character::unit(2);
        c.add_term(Weight(vec![1, 1]), 2);
        c.add_term(Weight(vec![0, 0]), -1);
        assert_eq!(c.num_weights(), 1);
        assert_eq!(c.multiplicity(&Weight(vec![0, 0])), 0);
        assert_eq!(c.dimension(), 2);
    }

    #[test]
    fn demazure_operator_cases() {
        let a2 = rs("A2");
        let alpha1 = a2.root_to_weight(&a2.simple_root(1));
        let img = demazure_operator(&a2, 1, &Character::monomial(alpha1.clone())).unwrap();
        let mut expected = Character::monomial(alpha1.clone());
        expected.add_term(Weight::zero(2), 1);
        expected.add_term(-&alpha1, 1);
        assert_eq!(img, expected);

        let minus_one = Weight(vec![-1, 4]);
        assert!(demazure_operator(&a2, 1, &Character::monomial(minus_one))
            .unwrap()
            .is_zero());

        let unit = Character::unit(2);
        assert_eq!(demazure_operator(&a2, 2, &unit).unwrap(), unit);

        // m = -3: -(e^{lambda + alpha} + e^{lambda + 2 alpha})
        let lam = Weight(vec![-3, 0]);
        let img = demazure_operator(&a2, 1, &Character::monomial(lam.clone())).unwrap();
        assert_eq!(img.dimension(), -2);
        assert_eq!(img.multiplicity(&(&lam + &alpha1)), -1);
        assert_eq!(img.multiplicity(&(&lam + &(2 * &alpha1))), -1);
    }

    #[test]
    fn demazure_is_idempotent_on_its_image() {
        let b2 = rs("B2");
        let chi = Character::monomial(Weight(vec![3, -1]));
        for i in 1..=2 {
            let once = demazure_operator(&b2, i, &chi).unwrap();
            assert_eq!(demazure_operator(&b2, i, &once).unwrap(), once);
        }
    }

    #[test]
    fn length_one_character() {
        let g2 = rs("G2");
        for i in 1..=2 {
            let chi = anticanonical_character(&g2, &Word(vec![i])).unwrap();
            assert_eq!(chi.dimension(), 3);
            let alpha = g2.root_to_weight(&g2.simple_root(i));
            assert_eq!(chi.multiplicity(&alpha), 1);
            assert_eq!(chi.multiplicity(&Weight::zero(2)), 1);
            assert_eq!(chi.multiplicity(&-&alpha), 1);
        }
        assert_eq!(
            anticanonical_character(&g2, &Word::empty()).unwrap(),
            Character::unit(2)
        );
    }

    #[test]
    fn a2_coxeter_word_report() {
        let a2 = rs("A2");
        let report = character_lowest_weight_report(&a2, &w("1,2")).unwrap();
        assert!(report.passed && report.certified);
        assert_eq!(
            a2.weight_to_root(&report.lowest_weight).unwrap(),
            RootVector(vec![-2, -1])
        );
        assert_eq!(report.lowest_multiplicity, 1);
    }

    #[test]
    fn rejects_non_reduced() {
        assert!(matches!(
            anticanonical_character(&rs("A2"), &w("2,2")),
            Err(Error::NotReduced { .. })
        ));
    }
}
