//! Picard-group coordinates of the anti-canonical bundle.
//!
//! For a reduced word `(i_1, ..., i_r)` the Picard group of the
//! Bott-Samelson-Demazure-Hansen variety has two bases: the boundary
//! divisors `X_l` and the pulled-back bundles `O_j(1) = O_j(omega_{i_j})`.
//! `O_k(lambda)` expands in the `X`-basis with coefficients
//! `r_kl(lambda) = <lambda, s_{i_k} ... s_{i_{l+1}}(alpha_{i_l})>`, `l <= k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{self, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// Boundary divisors `X_1, ..., X_r`.
    X,
    /// Line bundles `O_1(1), ..., O_r(1)`.
    O,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::X => "X",
            Basis::O => "O",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A line bundle on `Z(w, i)` as integer coordinates in one basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PicardClass {
    basis: Basis,
    coeffs: Vec<i64>,
    word: Word,
}

impl PicardClass {
    pub fn new(basis: Basis, coeffs: Vec<i64>, word: Word) -> Result<Self> {
        if coeffs.len() != word.len() {
            return Err(Error::DimensionMismatch {
                expected: word.len(),
                got: coeffs.len(),
            });
        }
        Ok(PicardClass {
            basis,
            coeffs,
            word,
        })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }
}

/// `r_kl(lambda)` for `l = 1..=k` (1-based `k`).
pub fn demazure_x_coeffs(
    rs: &RootSystem,
    word: &Word,
    k: usize,
    lambda: &Weight,
) -> Result<Vec<i64>> {
    weyl::require_reduced(rs, word)?;
    if k == 0 || k > word.len() {
        return Err(Error::DimensionMismatch {
            expected: word.len(),
            got: k,
        });
    }
    x_coeffs_unchecked(rs, word, k, lambda)
}

fn x_coeffs_unchecked(rs: &RootSystem, word: &Word, k: usize, lambda: &Weight) -> Result<Vec<i64>> {
    let letters = word.letters();
    (1..=k)
        .map(|l| {
            // s_{i_k} ... s_{i_{l+1}} (alpha_{i_l}); the rightmost factor acts first
            let beta = letters[l..k]
                .iter()
                .fold(rs.simple_root(letters[l - 1]), |acc, &i| {
                    rs.reflect_root_vector(i, &acc).expect("letters checked")
                });
            rs.pairing_with_root(lambda, &beta)
        })
        .collect()
}

/// `K^{-1}` in the `X`-basis: coefficient `1 + <rho, s_{i_r} ... s_{i_{l+1}}(alpha_{i_l})>`.
pub fn anticanonical_x_coeffs(rs: &RootSystem, word: &Word) -> Result<PicardClass> {
    weyl::require_reduced(rs, word)?;
    let coeffs = if word.is_empty() {
        Vec::new()
    } else {
        x_coeffs_unchecked(rs, word, word.len(), rs.rho())?
            .into_iter()
            .map(|c| c + 1)
            .collect()
    };
    PicardClass::new(Basis::X, coeffs, word.clone())
}

/// The m-vector of `K^{-1}` in the `O`-basis by the closed formula
/// `m_j = <alpha_{i_j} + ... + alpha_{i_{q-1}}, alpha_{i_j}>`, where `q` is
/// the next position carrying the letter `i_j` (or `r + 1` if none).
pub fn anticanonical_o_coeffs(rs: &RootSystem, word: &Word) -> Result<PicardClass> {
    weyl::require_reduced(rs, word)?;
    let letters = word.letters();
    let r = letters.len();
    let coeffs = (0..r)
        .map(|j| {
            let e = letters[j];
            let stop = (j + 1..r).find(|&q| letters[q] == e).unwrap_or(r);
            letters[j..stop].iter().map(|&k| rs.cartan(e, k)).sum()
        })
        .collect();
    PicardClass::new(Basis::O, coeffs, word.clone())
}

/// The m-vector again, by expanding `K^{-1} = O_1(alpha_{i_1}) x ... x O_r(alpha_{i_r})`
/// and rewriting each `O_k(alpha_{i_k})` on the last occurrence of every
/// letter in the prefix of length `k`.
pub fn o_coeffs_via_decomposition(rs: &RootSystem, word: &Word) -> Result<PicardClass> {
    weyl::require_reduced(rs, word)?;
    let letters = word.letters();
    let mut coeffs = vec![0i64; letters.len()];
    let mut last: Vec<Option<usize>> = vec![None; rs.rank() + 1];
    for (k, &ik) in letters.iter().enumerate() {
        last[ik] = Some(k);
        for (a, pos) in last.iter().enumerate() {
            if let Some(t) = *pos {
                coeffs[t] += rs.cartan(a, ik);
            }
        }
    }
    PicardClass::new(Basis::O, coeffs, word.clone())
}

/// Row `k` holds `r_kl(omega_{i_k})` for `l <= k`; unit diagonal.
fn transition_matrix(rs: &RootSystem, word: &Word) -> Result<Vec<Vec<i64>>> {
    let letters = word.letters();
    (1..=letters.len())
        .map(|k| {
            let omega = rs.fundamental_weight(letters[k - 1]);
            x_coeffs_unchecked(rs, word, k, &omega)
        })
        .collect()
}

fn check_class(rs: &RootSystem, class: &PicardClass, expected: Basis) -> Result<()> {
    if class.basis != expected {
        return Err(Error::BasisMismatch {
            expected: expected.name(),
            got: class.basis.name(),
        });
    }
    weyl::require_reduced(rs, &class.word)
}

/// Rewrites an `O`-basis class in the `X`-basis.
pub fn o_to_x(rs: &RootSystem, class: &PicardClass) -> Result<PicardClass> {
    check_class(rs, class, Basis::O)?;
    let t = transition_matrix(rs, &class.word)?;
    let r = class.coeffs.len();
    let x = (0..r)
        .map(|l| (l..r).map(|k| class.coeffs[k] * t[k][l]).sum())
        .collect();
    PicardClass::new(Basis::X, x, class.word.clone())
}

/// Rewrites an `X`-basis class in the `O`-basis by back substitution.
pub fn x_to_o(rs: &RootSystem, class: &PicardClass) -> Result<PicardClass> {
    check_class(rs, class, Basis::X)?;
    let t = transition_matrix(rs, &class.word)?;
    let r = class.coeffs.len();
    let mut m = vec![0i64; r];
    for l in (0..r).rev() {
        debug_assert_eq!(t[l][l], 1);
        let tail: i64 = (l + 1..r).map(|k| m[k] * t[k][l]).sum();
        m[l] = class.coeffs[l] - tail;
    }
    PicardClass::new(Basis::O, m, class.word.clone())
}

/// Positivity of `K^{-1}` read off the m-vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub globally_generated: bool,
    pub very_ample: bool,
    pub fano: bool,
    /// Globally generated and big; nefness beyond that is not tested.
    pub weak_fano_certified: bool,
    pub big: bool,
    pub m: PicardClass,
}

/// Classifies `K^{-1}` on `Z(w, i)`: globally generated iff every
/// `m_j >= 0`, very ample (hence Fano) iff every `m_j >= 1`. The empty word
/// is a point and counts as Fano.
pub fn classify(rs: &RootSystem, word: &Word) -> Result<Classification> {
    let m = anticanonical_o_coeffs(rs, word)?;
    let globally_generated = m.coeffs.iter().all(|&c| c >= 0);
    let very_ample = m.coeffs.iter().all(|&c| c >= 1);
    Ok(Classification {
        globally_generated,
        very_ample,
        fano: very_ample,
        weak_fano_certified: globally_generated,
        big: true,
        m,
    })
}
