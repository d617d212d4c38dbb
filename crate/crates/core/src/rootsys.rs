//! Finite crystallographic root systems of simple type.
//!
//! Simple roots are numbered as in Humphreys' table of connected Dynkin
//! diagrams. With `i -- j` a simple edge and `=>` pointing at the shorter
//! root:
//!
//! | type | diagram                          | short simple roots  |
//! |------|----------------------------------|---------------------|
//! | A_n  | 1 - 2 - ... - n                  | (simply laced)      |
//! | B_n  | 1 - 2 - ... - (n-1) => n         | n                   |
//! | C_n  | 1 - 2 - ... - (n-1) <= n         | 1, ..., n-1         |
//! | D_n  | 1 - ... - (n-2) - {n-1, n}       | (simply laced)      |
//! | E_n  | 1 - 3 - 4 - 5 - ... - n, 2 - 4   | (simply laced)      |
//! | F_4  | 1 - 2 => 3 - 4                   | 3, 4                |
//! | G_2  | 1 <= 2 (triple edge)             | 1                   |
//!
//! Weights live in the fundamental-weight basis and roots in the
//! simple-root basis. The Cartan integer `<beta, alpha>` is
//! `2 (beta, alpha) / (alpha, alpha)`, and the stored matrix has
//! `cartan[i][j] = <alpha_j, alpha_i>`, so column `j` is the weight of
//! `alpha_j`. Coroots of non-simple roots are carried through the closure
//! so that every pairing is an integer dot product.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted rank for the classical families.
pub const MAX_CLASSICAL_RANK: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(format!("unknown Dynkin family {other:?}")),
        }
    }
}

/// A simple Dynkin type such as `A3` or `G2`. Construction validates the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = |bound| {
            Err(Error::InvalidRank {
                family,
                rank,
                bound,
            })
        };
        match family {
            Family::A if rank < 1 => return bad("type A needs rank >= 1"),
            Family::B if rank < 2 => return bad("type B needs rank >= 2"),
            Family::C if rank < 3 => return bad("type C needs rank >= 3 (C2 is B2)"),
            Family::D if rank < 4 => return bad("type D needs rank >= 4"),
            Family::E if !(6..=8).contains(&rank) => return bad("type E needs rank 6, 7 or 8"),
            Family::F if rank != 4 => return bad("type F needs rank 4"),
            Family::G if rank != 2 => return bad("type G needs rank 2"),
            _ => {}
        }
        if rank > MAX_CLASSICAL_RANK {
            return bad("classical ranks are capped at 10");
        }
        Ok(DynkinType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Expected number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    /// Edges `(i, j)` of the Dynkin diagram, 0-based.
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let chain = |len: usize| {
            (0..len.saturating_sub(1))
                .map(|i| (i, i + 1))
                .collect::<Vec<_>>()
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => chain(n),
            Family::D => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                // 1-3-4-5-...-n with 2 attached to 4
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Squared root lengths, scaled so the short simple roots have length 2.
    fn squared_lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![2; n],
            Family::B => (0..n).map(|i| if i == n - 1 { 2 } else { 4 }).collect(),
            Family::C => (0..n).map(|i| if i == n - 1 { 4 } else { 2 }).collect(),
            Family::F => vec![4, 4, 2, 2],
            Family::G => vec![2, 6],
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = String;

    /// Parses `"A3"`, `"e8"`, etc.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.len() < 2 || !s.is_char_boundary(1) {
            return Err(format!("cannot parse Dynkin type {s:?}"));
        }
        let family: Family = s[..1].parse()?;
        let rank: usize = s[1..]
            .parse()
            .map_err(|_| format!("cannot parse rank in {s:?}"))?;
        DynkinType::new(family, rank).map_err(|e| e.to_string())
    }
}

macro_rules! int_vector {
    ($name:ident) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(n: usize) -> Self {
                $name(vec![0; n])
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Mul<&$name> for i64 {
            type Output = $name;
            fn mul(self, rhs: &$name) -> $name {
                $name(rhs.0.iter().map(|a| self * a).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (k, c) in self.0.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

int_vector!(Weight);
int_vector!(RootVector);

impl Weight {
    /// `<lambda, alpha_i>` for a 1-based simple index; this is a coordinate lookup.
    pub fn pair_simple(&self, i: usize) -> i64 {
        self.0[i - 1]
    }
}

impl RootVector {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// All coordinates nonnegative and not all zero.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && !self.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && !self.is_zero()
    }

    /// All coordinates nonnegative (zero allowed); the root-cone order test.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

/// Immutable Cartan, root and coroot data for one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: DynkinType,
    /// `cartan[i][j] = <alpha_j, alpha_i>`, 0-based.
    cartan: Vec<Vec<i64>>,
    lengths: Vec<i64>,
    positive_roots: Vec<RootVector>,
    coroots: Vec<RootVector>,
    index: HashMap<Vec<i64>, usize>,
    rho: Weight,
    // inverse Cartan matrix as (numerators, common denominator)
    inv_cartan: Vec<Vec<i64>>,
    det: i64,
}

impl RootSystem {
    /// Builds the full root system by reflection closure from the simple roots.
    pub fn new(ty: DynkinType) -> Self {
        let n = ty.rank();
        let lengths = ty.squared_lengths();
        let mut form = vec![vec![0i64; n]; n];
        for i in 0..n {
            form[i][i] = lengths[i];
        }
        for (i, j) in ty.edges() {
            let b = -lengths[i].max(lengths[j]) / 2;
            form[i][j] = b;
            form[j][i] = b;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * form[j][i] / form[i][i]).collect())
            .collect();

        let unit = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            RootVector(v)
        };
        let mut positive_roots: Vec<RootVector> = (0..n).map(unit).collect();
        let mut coroots: Vec<RootVector> = (0..n).map(unit).collect();
        let mut index: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.0.clone(), k))
            .collect();

        let mut cursor = 0;
        while cursor < positive_roots.len() {
            for i in 0..n {
                let beta = positive_roots[cursor].clone();
                let p = pair_root_simple(&cartan, &beta, i);
                if p == 0 || beta.0 == unit(i).0 {
                    continue;
                }
                let mut image = beta.0.clone();
                image[i] -= p;
                if index.contains_key(&image) {
                    continue;
                }
                // s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee
                let cob = &coroots[cursor];
                let q: i64 = (0..n).map(|j| cob.0[j] * cartan[j][i]).sum();
                let mut co_image = cob.0.clone();
                co_image[i] -= q;
                index.insert(image.clone(), positive_roots.len());
                positive_roots.push(RootVector(image));
                coroots.push(RootVector(co_image));
            }
            cursor += 1;
        }

        // Sort by height, then coordinates, keeping simple roots first.
        let mut order: Vec<usize> = (0..positive_roots.len()).collect();
        order.sort_by(|&a, &b| {
            let (ra, rb) = (&positive_roots[a], &positive_roots[b]);
            ra.height().cmp(&rb.height()).then_with(|| rb.0.cmp(&ra.0))
        });
        let positive_roots: Vec<RootVector> =
            order.iter().map(|&k| positive_roots[k].clone()).collect();
        let coroots: Vec<RootVector> = order.iter().map(|&k| coroots[k].clone()).collect();
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.0.clone(), k))
            .collect();

        let (inv_cartan, det) = integer_inverse(&cartan);

        RootSystem {
            ty,
            cartan,
            lengths,
            positive_roots,
            coroots,
            index,
            rho: Weight(vec![1; n]),
            inv_cartan,
            det,
        }
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// `<alpha_j, alpha_i>` for 1-based `i`, `j`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Whether `alpha_i` (1-based) is a short root of a non-simply-laced system.
    pub fn is_short(&self, i: usize) -> bool {
        let max = *self.lengths.iter().max().unwrap();
        self.lengths[i - 1] < max
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    /// Coroot of the `k`-th positive root in the simple-coroot basis.
    pub fn coroot(&self, k: usize) -> &RootVector {
        &self.coroots[k]
    }

    pub fn root_index(&self, beta: &RootVector) -> Option<usize> {
        self.index.get(&beta.0).copied()
    }

    pub fn highest_root(&self) -> &RootVector {
        self.positive_roots.last().unwrap()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// `alpha_i` in the simple-root basis (1-based `i`).
    pub fn simple_root(&self, i: usize) -> RootVector {
        self.positive_roots[i - 1].clone()
    }

    /// `alpha_1 + ... + alpha_n`.
    pub fn simple_root_sum(&self) -> RootVector {
        RootVector(vec![1; self.rank()])
    }

    pub fn check_simple(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::SimpleIndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: len,
            })
        } else {
            Ok(())
        }
    }

    /// `<lambda, beta>` for the `beta_index`-th stored positive root.
    pub fn pairing(&self, lambda: &Weight, beta_index: usize) -> Result<i64> {
        self.check_len(lambda.len())?;
        let co = self
            .coroots
            .get(beta_index)
            .ok_or(Error::RootIndexOutOfRange {
                index: beta_index,
                count: self.positive_roots.len(),
            })?;
        Ok(dot(&lambda.0, &co.0))
    }

    /// `<lambda, beta>` for any root `beta` given by coordinates; negative
    /// roots pair through `-beta`.
    pub fn pairing_with_root(&self, lambda: &Weight, beta: &RootVector) -> Result<i64> {
        if let Some(k) = self.root_index(beta) {
            return self.pairing(lambda, k);
        }
        let neg = -beta;
        match self.root_index(&neg) {
            Some(k) => Ok(-self.pairing(lambda, k)?),
            None => Err(Error::NotARoot(beta.0.clone())),
        }
    }

    /// `<beta, alpha_i>` for a root-lattice vector and 1-based `i`.
    pub fn pair_root_simple(&self, beta: &RootVector, i: usize) -> i64 {
        pair_root_simple(&self.cartan, beta, i - 1)
    }

    pub fn root_to_weight(&self, beta: &RootVector) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| pair_root_simple(&self.cartan, beta, i))
                .collect(),
        )
    }

    /// Inverse of [`root_to_weight`](Self::root_to_weight); fails off the root lattice.
    pub fn weight_to_root(&self, lambda: &Weight) -> Result<RootVector> {
        self.check_len(lambda.len())?;
        let mut out = Vec::with_capacity(self.rank());
        for row in &self.inv_cartan {
            let num = dot(row, &lambda.0);
            if num % self.det != 0 {
                return Err(Error::NotInRootLattice(lambda.0.clone()));
            }
            out.push(num / self.det);
        }
        Ok(RootVector(out))
    }

    /// `s_i(lambda) = lambda - <lambda, alpha_i> alpha_i`.
    pub fn simple_reflection(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        self.check_simple(i)?;
        self.check_len(lambda.len())?;
        Ok(self.reflect_weight(i - 1, lambda))
    }

    /// Same as [`simple_reflection`](Self::simple_reflection) on a root-lattice vector.
    pub fn reflect_root_vector(&self, i: usize, beta: &RootVector) -> Result<RootVector> {
        self.check_simple(i)?;
        self.check_len(beta.len())?;
        Ok(self.reflect_root(i - 1, beta))
    }

    pub(crate) fn reflect_weight(&self, i0: usize, lambda: &Weight) -> Weight {
        let mut out = lambda.0.clone();
        self.reflect_weight_in_place(i0, &mut out);
        Weight(out)
    }

    pub(crate) fn reflect_weight_in_place(&self, i0: usize, coords: &mut [i64]) {
        let p = coords[i0];
        if p != 0 {
            for (j, c) in coords.iter_mut().enumerate() {
                *c -= p * self.cartan[j][i0];
            }
        }
    }

    pub(crate) fn reflect_root(&self, i0: usize, beta: &RootVector) -> RootVector {
        let mut out = beta.0.clone();
        out[i0] -= pair_root_simple(&self.cartan, beta, i0);
        RootVector(out)
    }

    /// 1-based indices `m` with `<omega_m, beta> <= 1` for every positive root.
    pub fn minuscule_weights(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&m| self.coroots.iter().all(|co| co.0[m] <= 1))
            .map(|m| m + 1)
            .collect()
    }

    /// Fundamental weight `omega_m` (1-based).
    pub fn fundamental_weight(&self, m: usize) -> Weight {
        let mut v = vec![0; self.rank()];
        v[m - 1] = 1;
        Weight(v)
    }
}

fn pair_root_simple(cartan: &[Vec<i64>], beta: &RootVector, i0: usize) -> i64 {
    dot(&cartan[i0], &beta.0)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact inverse of an integer matrix, returned as integer numerators over
/// the absolute determinant.
fn integer_inverse(m: &[Vec<i64>]) -> (Vec<Vec<i64>>, i64) {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| Ratio::from_integer((i == j) as i64)));
            r
        })
        .collect();
    let mut det = Ratio::from_integer(1);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Ratio::from_integer(0))
            .expect("Cartan matrix is nonsingular");
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Ratio::from_integer(0) {
                    let pivot_row = a[col].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
    }
    let d = det.to_integer().abs();
    let inv = a
        .iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| {
                    let scaled = *x * Ratio::from_integer(d);
                    debug_assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect()
        })
        .collect();
    (inv, d)
}
