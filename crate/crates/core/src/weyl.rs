//! Weyl group elements, words and their enumeration.
//!
//! An element is identified by its fingerprint `w(rho)`; since `rho` is
//! regular the fingerprint is faithful. Words are 1-based letter sequences
//! read left to right as the product `s_{i_1} ... s_{i_r}`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::ControlFlow;
use std::rc::Rc;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootVector, Weight};

/// A sequence of 1-based simple-reflection indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl FromStr for Word {
    type Err = String;

    /// Parses the comma-separated wire format, e.g. `"1,2,1,3,2,1"`.
    /// The empty string is the empty word.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| {
                let t = t.trim();
                match t.parse::<usize>() {
                    Ok(0) => Err("letters are 1-based; found 0".to_string()),
                    Ok(v) => Ok(v),
                    Err(_) => Err(format!("invalid letter {t:?}")),
                }
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

/// A Weyl group element with its length and lexicographically smallest reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    fingerprint: Weight,
    length: usize,
    canonical_word: Word,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            fingerprint: rs.rho().clone(),
            length: 0,
            canonical_word: Word::empty(),
        }
    }

    /// `w(rho)`.
    pub fn fingerprint(&self) -> &Weight {
        &self.fingerprint
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn canonical_word(&self) -> &Word {
        &self.canonical_word
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.canonical_word.is_empty() {
            write!(f, "id")
        } else {
            write!(
                f,
                "{}",
                self.canonical_word
                    .0
                    .iter()
                    .map(|i| format!("s{i}"))
                    .join("")
            )
        }
    }
}

pub fn check_word(rs: &RootSystem, word: &Word) -> Result<()> {
    word.0.iter().try_for_each(|&i| rs.check_simple(i))
}

/// `s_{i_1}(s_{i_2}(... s_{i_r}(lambda)))`.
pub fn apply_word(rs: &RootSystem, word: &Word, lambda: &Weight) -> Result<Weight> {
    check_word(rs, word)?;
    if lambda.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lambda.len(),
        });
    }
    let mut v = lambda.0.clone();
    for &i in word.0.iter().rev() {
        rs.reflect_weight_in_place(i - 1, &mut v);
    }
    Ok(Weight(v))
}

/// The action of a word on a root-lattice vector.
pub fn apply_word_to_root(rs: &RootSystem, word: &Word, beta: &RootVector) -> Result<RootVector> {
    check_word(rs, word)?;
    if beta.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: beta.len(),
        });
    }
    Ok(word
        .0
        .iter()
        .rev()
        .fold(beta.clone(), |acc, &i| rs.reflect_root(i - 1, &acc)))
}

/// The first position (1-based, scanning from the right) whose letter fails
/// to lengthen the suffix after it, or `None` for a reduced word.
///
/// Position `k` lengthens iff `s_{i_r} ... s_{i_{k+1}}(alpha_{i_k}) > 0`,
/// equivalently `<s_{i_{k+1}} ... s_{i_r}(rho), alpha_{i_k}> > 0`.
pub fn reduced_failure(rs: &RootSystem, word: &Word) -> Result<Option<usize>> {
    check_word(rs, word)?;
    let mut mu = rs.rho().0.clone();
    for (k, &i) in word.0.iter().enumerate().rev() {
        if mu[i - 1] <= 0 {
            return Ok(Some(k + 1));
        }
        rs.reflect_weight_in_place(i - 1, &mut mu);
    }
    Ok(None)
}

pub fn is_reduced(rs: &RootSystem, word: &Word) -> bool {
    matches!(reduced_failure(rs, word), Ok(None))
}

/// Errors with the failing position when `word` is not reduced.
pub fn require_reduced(rs: &RootSystem, word: &Word) -> Result<()> {
    match reduced_failure(rs, word)? {
        None => Ok(()),
        Some(position) => Err(Error::NotReduced {
            position,
            letter: word.0[position - 1],
        }),
    }
}

/// Recovers the element with fingerprint `mu` by peeling left descents,
/// smallest index first; this yields the lexicographically smallest
/// reduced word.
pub fn element_from_fingerprint(rs: &RootSystem, mu: &Weight) -> WeylElement {
    let mut cur = mu.0.clone();
    let mut letters = Vec::new();
    while let Some(i0) = cur.iter().position(|&c| c < 0) {
        letters.push(i0 + 1);
        rs.reflect_weight_in_place(i0, &mut cur);
    }
    debug_assert!(
        cur.iter().all(|&c| c == 1),
        "fingerprint was not in the orbit of rho"
    );
    WeylElement {
        fingerprint: mu.clone(),
        length: letters.len(),
        canonical_word: Word(letters),
    }
}

/// The element represented by an arbitrary (not necessarily reduced) word.
pub fn element_of(rs: &RootSystem, word: &Word) -> Result<WeylElement> {
    let mu = apply_word(rs, word, rs.rho())?;
    let w = element_from_fingerprint(rs, &mu);
    debug_assert_eq!(w.length, inversion_set(rs, &w).len());
    Ok(w)
}

pub fn inverse(rs: &RootSystem, w: &WeylElement) -> WeylElement {
    element_of(rs, &w.canonical_word.reversed()).expect("canonical word is valid")
}

/// `w(beta)` for a root-lattice vector.
pub fn act_on_root(rs: &RootSystem, w: &WeylElement, beta: &RootVector) -> RootVector {
    apply_word_to_root(rs, &w.canonical_word, beta).expect("canonical word is valid")
}

/// Indices of the positive roots sent to negative roots by `w`.
pub fn inversion_set(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    rs.positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, beta)| act_on_root(rs, w, beta).is_negative())
        .map(|(k, _)| k)
        .collect()
}

/// 1-based `i` with `l(s_i w) < l(w)`.
pub fn left_descents(w: &WeylElement) -> Vec<usize> {
    w.fingerprint
        .0
        .iter()
        .enumerate()
        .filter(|(_, &c)| c < 0)
        .map(|(i, _)| i + 1)
        .collect()
}

/// 1-based `i` with `l(w s_i) < l(w)`, i.e. `w(alpha_i) < 0`.
pub fn right_descents(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    (1..=rs.rank())
        .filter(|&i| act_on_root(rs, w, &rs.simple_root(i)).is_negative())
        .collect()
}

/// `s_i w` for a 1-based `i`.
pub fn left_multiply(rs: &RootSystem, i: usize, w: &WeylElement) -> WeylElement {
    element_from_fingerprint(rs, &rs.reflect_weight(i - 1, &w.fingerprint))
}

/// The longest element `w_0`, characterised by `w_0(rho) = -rho`.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    element_from_fingerprint(rs, &-rs.rho())
}

/// Every reduced word of `w`, sorted lexicographically.
///
/// Words are built by peeling left descents (`w = s_i (s_i w)`), with the
/// sub-results memoised on fingerprints for the duration of the call.
pub fn all_reduced_words(rs: &RootSystem, w: &WeylElement) -> Vec<Word> {
    let mut memo: HashMap<Weight, Rc<Vec<Vec<usize>>>> = HashMap::new();
    let words = reduced_words_memo(rs, &w.fingerprint, &mut memo);
    words.iter().map(|l| Word(l.clone())).collect()
}

fn reduced_words_memo(
    rs: &RootSystem,
    mu: &Weight,
    memo: &mut HashMap<Weight, Rc<Vec<Vec<usize>>>>,
) -> Rc<Vec<Vec<usize>>> {
    if let Some(hit) = memo.get(mu) {
        return Rc::clone(hit);
    }
    let mut out = Vec::new();
    let descents: Vec<usize> = (0..mu.len()).filter(|&i| mu.0[i] < 0).collect();
    if descents.is_empty() {
        out.push(Vec::new());
    }
    for i0 in descents {
        let sub = reduced_words_memo(rs, &rs.reflect_weight(i0, mu), memo);
        for tail in sub.iter() {
            let mut word = Vec::with_capacity(tail.len() + 1);
            word.push(i0 + 1);
            word.extend_from_slice(tail);
            out.push(word);
        }
    }
    let out = Rc::new(out);
    memo.insert(mu.clone(), Rc::clone(&out));
    out
}

/// Visits the reduced words of `w` in lexicographic order without storing
/// them; the visitor stops the walk by returning `ControlFlow::Break`.
pub fn for_each_reduced_word<B>(
    rs: &RootSystem,
    w: &WeylElement,
    mut visit: impl FnMut(&Word) -> ControlFlow<B>,
) -> Option<B> {
    fn go<B>(
        rs: &RootSystem,
        mu: &mut [i64],
        prefix: &mut Word,
        visit: &mut impl FnMut(&Word) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let mut any = false;
        for i0 in 0..mu.len() {
            if mu[i0] < 0 {
                any = true;
                rs.reflect_weight_in_place(i0, mu);
                prefix.0.push(i0 + 1);
                let flow = go(rs, mu, prefix, visit);
                prefix.0.pop();
                rs.reflect_weight_in_place(i0, mu);
                flow?;
            }
        }
        if !any {
            visit(prefix)?;
        }
        ControlFlow::Continue(())
    }
    let mut mu = w.fingerprint.0.clone();
    match go(rs, &mut mu, &mut Word::empty(), &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

/// Number of reduced words of `w`, without materialising them.
pub fn count_reduced_words(rs: &RootSystem, w: &WeylElement) -> u128 {
    fn go(rs: &RootSystem, mu: &Weight, memo: &mut HashMap<Weight, u128>) -> u128 {
        if let Some(&c) = memo.get(mu) {
            return c;
        }
        let descents: Vec<usize> = (0..mu.len()).filter(|&i| mu.0[i] < 0).collect();
        let c = if descents.is_empty() {
            1
        } else {
            descents
                .into_iter()
                .map(|i0| go(rs, &rs.reflect_weight(i0, mu), memo))
                .sum()
        };
        memo.insert(mu.clone(), c);
        c
    }
    go(rs, &w.fingerprint, &mut HashMap::new())
}

/// Partitions reduced words of one element into commutation classes.
///
/// Two words are related when they differ by swapping an adjacent pair of
/// distinct commuting letters. Classes are sorted internally and ordered by
/// their smallest word.
pub fn commutation_classes(rs: &RootSystem, words: &[Word]) -> Result<Vec<Vec<Word>>> {
    if let Some(first) = words.first() {
        let fp = apply_word(rs, first, rs.rho())?;
        for w in &words[1..] {
            if apply_word(rs, w, rs.rho())? != fp {
                return Err(Error::MixedElements);
            }
        }
    }
    let position: HashMap<&[usize], usize> = words
        .iter()
        .enumerate()
        .map(|(k, w)| (w.0.as_slice(), k))
        .collect();
    let mut dsu = DisjointSets::new(words.len());
    let mut scratch = Vec::new();
    for (k, w) in words.iter().enumerate() {
        for p in 0..w.len().saturating_sub(1) {
            let (a, b) = (w.0[p], w.0[p + 1]);
            if a != b && rs.cartan(a, b) == 0 {
                scratch.clear();
                scratch.extend_from_slice(&w.0);
                scratch.swap(p, p + 1);
                if let Some(&other) = position.get(scratch.as_slice()) {
                    dsu.union(k, other);
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Word>> = HashMap::new();
    for (k, w) in words.iter().enumerate() {
        groups.entry(dsu.find(k)).or_default().push(w.clone());
    }
    let mut classes: Vec<Vec<Word>> = groups
        .into_values()
        .map(|mut g| {
            g.sort();
            g.dedup();
            g
        })
        .collect();
    classes.sort();
    Ok(classes)
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// All distinct Coxeter elements with their lexicographically smallest
/// permutation word, sorted by that word.
pub fn coxeter_elements(rs: &RootSystem) -> Vec<(WeylElement, Word)> {
    let n = rs.rank();
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut out = Vec::new();
    for perm in (1..=n).permutations(n) {
        let word = Word(perm);
        let mu = apply_word(rs, &word, rs.rho()).expect("letters in range");
        if seen.insert(mu.clone()) {
            out.push((element_from_fingerprint(rs, &mu), word));
        }
    }
    out
}

/// Whether `w` is a product of all simple reflections, each exactly once.
pub fn is_coxeter(rs: &RootSystem, w: &WeylElement) -> bool {
    w.length == rs.rank() && w.canonical_word.0.iter().collect::<BTreeSet<_>>().len() == rs.rank()
}

/// Whether `word` uses each simple reflection exactly once.
pub fn is_coxeter_word(rs: &RootSystem, word: &Word) -> bool {
    word.len() == rs.rank()
        && word.0.iter().all(|&i| (1..=rs.rank()).contains(&i))
        && word.0.iter().collect::<BTreeSet<_>>().len() == rs.rank()
}

/// The set of letters of a reduced word. Non-reduced words are rejected,
/// since their letter set can exceed the support of the element.
pub fn support(rs: &RootSystem, word: &Word) -> Result<BTreeSet<usize>> {
    require_reduced(rs, word)?;
    Ok(word.0.iter().copied().collect())
}

pub fn element_support(w: &WeylElement) -> BTreeSet<usize> {
    w.canonical_word.0.iter().copied().collect()
}

/// Every element of `W`, ordered by length then canonical word.
pub fn all_elements(rs: &RootSystem) -> Vec<WeylElement> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let id = WeylElement::identity(rs);
    seen.insert(id.fingerprint.clone());
    let mut layer = vec![id];
    let mut out = Vec::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for w in &layer {
            for i0 in 0..rs.rank() {
                if w.fingerprint.0[i0] > 0 {
                    let mu = rs.reflect_weight(i0, &w.fingerprint);
                    if seen.insert(mu.clone()) {
                        next.push(element_from_fingerprint(rs, &mu));
                    }
                }
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    out.sort_by(|a, b| {
        a.length
            .cmp(&b.length)
            .then_with(|| a.canonical_word.cmp(&b.canonical_word))
    });
    out
}

/// Minimal-length representatives of `W / W_{S \ {alpha_m}}` for a
/// minuscule `omega_m`, ordered by length then canonical word.
pub fn minuscule_elements(rs: &RootSystem, m: usize) -> Result<Vec<WeylElement>> {
    rs.check_simple(m)?;
    if !rs.minuscule_weights().contains(&m) {
        return Err(Error::NotMinuscule { index: m });
    }
    let is_min_rep = |w: &WeylElement| {
        (1..=rs.rank())
            .filter(|&j| j != m)
            .all(|j| act_on_root(rs, w, &rs.simple_root(j)).is_positive())
    };
    let id = WeylElement::identity(rs);
    let mut seen: HashSet<Weight> = HashSet::from([id.fingerprint.clone()]);
    let mut layer = vec![id];
    let mut out = Vec::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for w in &layer {
            for i0 in 0..rs.rank() {
                if w.fingerprint.0[i0] > 0 {
                    let mu = rs.reflect_weight(i0, &w.fingerprint);
                    if seen.contains(&mu) {
                        continue;
                    }
                    let v = element_from_fingerprint(rs, &mu);
                    if is_min_rep(&v) {
                        seen.insert(mu);
                        next.push(v);
                    }
                }
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    out.sort_by(|a, b| {
        a.length
            .cmp(&b.length)
            .then_with(|| a.canonical_word.cmp(&b.canonical_word))
    });
    Ok(out)
}

/// `w . 0 = w(rho) - rho`, cross-checked against `-sum R+(w^{-1})`.
pub fn w_dot_zero(rs: &RootSystem, w: &WeylElement) -> Result<Weight> {
    let direct = &w.fingerprint - rs.rho();
    let winv = inverse(rs, w);
    let mut sum = RootVector::zero(rs.rank());
    for k in inversion_set(rs, &winv) {
        sum = &sum + &rs.positive_roots()[k];
    }
    let via_inversions = rs.root_to_weight(&-&sum);
    if via_inversions != direct {
        return Err(Error::InvariantViolation(format!(
            "w(rho) - rho = {direct} but -sum R+(w^-1) = {via_inversions} for w = {w}"
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn word_wire_format() {
        assert_eq!(w("1,2,1,3,2,1").0, vec![1, 2, 1, 3, 2, 1]);
        assert_eq!(w(" 3 , 4 ").to_string(), "3,4");
        assert!(w("").is_empty());
        assert!("1,0".parse::<Word>().is_err());
        assert!("1,,2".parse::<Word>().is_err());
        assert!("a".parse::<Word>().is_err());
    }

    #[test]
    fn apply_word_examples() {
        let a2 = rs("A2");
        let lam = Weight(vec![4, -1]);
        assert_eq!(apply_word(&a2, &Word::empty(), &lam).unwrap(), lam);
        let sum = a2.root_to_weight(&RootVector(vec![1, 1]));
        let minus_a2 = a2.root_to_weight(&RootVector(vec![0, -1]));
        assert_eq!(apply_word(&a2, &w("2,1"), &sum).unwrap(), minus_a2);
        let word = w("1,2,2,1,2");
        let there = apply_word(&a2, &word, &lam).unwrap();
        assert_eq!(apply_word(&a2, &word.reversed(), &there).unwrap(), lam);
        assert!(apply_word(&a2, &w("3"), &lam).is_err());
    }

    #[test]
    fn reducedness_examples() {
        let a3 = rs("A3");
        assert!(!is_reduced(&a3, &w("1,1")));
        assert!(is_reduced(&a3, &w("1,2,1,3,2,1")));
        assert!(is_reduced(&rs("D4"), &w("2,1,3,4")));
        assert!(is_reduced(&a3, &Word::empty()));
        assert_eq!(
            require_reduced(&a3, &w("1,2,1,2")),
            Err(Error::NotReduced {
                position: 1,
                letter: 1
            })
        );
    }

    #[test]
    fn element_examples() {
        let a2 = rs("A2");
        let id = element_of(&a2, &Word::empty()).unwrap();
        assert_eq!(id.length(), 0);
        assert_eq!(id, WeylElement::identity(&a2));
        let x = element_of(&a2, &w("1,2,1")).unwrap();
        let y = element_of(&a2, &w("2,1,2")).unwrap();
        assert_eq!(x.fingerprint(), y.fingerprint());
        assert_eq!(x.canonical_word(), &w("1,2,1"));
        let a3 = rs("A3");
        let w0 = element_of(&a3, &w("1,2,1,3,2,1")).unwrap();
        assert_eq!(w0.length(), 6);
        assert_eq!(w0, longest_element(&a3));
        // non-reduced input collapses
        assert_eq!(
            element_of(&a3, &w("2,1,1,3")).unwrap().canonical_word(),
            &w("2,3")
        );
    }

    #[test]
    fn inversion_examples() {
        let a2 = rs("A2");
        assert!(inversion_set(&a2, &WeylElement::identity(&a2)).is_empty());
        for i in 1..=2 {
            let s = element_of(&a2, &Word(vec![i])).unwrap();
            assert_eq!(inversion_set(&a2, &s), vec![i - 1]);
        }
        assert_eq!(inversion_set(&a2, &longest_element(&a2)), vec![0, 1, 2]);
    }

    #[test]
    fn descents_agree() {
        let b3 = rs("B3");
        for x in all_elements(&b3) {
            for i in 1..=3 {
                let left = left_descents(&x).contains(&i);
                let shorter = left_multiply(&b3, i, &x).length() < x.length();
                assert_eq!(left, shorter);
                let right = right_descents(&b3, &x).contains(&i);
                let xi = element_of(&b3, &x.canonical_word().concat(&Word(vec![i]))).unwrap();
                assert_eq!(right, xi.length() < x.length());
            }
        }
    }

    #[test]
    fn reduced_word_counts() {
        let a3 = rs("A3");
        let w0 = longest_element(&a3);
        let words = all_reduced_words(&a3, &w0);
        assert_eq!(words.len(), 16);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
        assert!(words.iter().all(|x| is_reduced(&a3, x)));
        assert_eq!(count_reduced_words(&a3, &w0), 16);
        let mut visited = Vec::new();
        for_each_reduced_word::<()>(&a3, &w0, |x| {
            visited.push(x.clone());
            ControlFlow::Continue(())
        });
        assert_eq!(visited, words);
        let a4 = rs("A4");
        assert_eq!(all_reduced_words(&a4, &longest_element(&a4)).len(), 768);
        let s2 = element_of(&a4, &w("2")).unwrap();
        assert_eq!(all_reduced_words(&a4, &s2), vec![w("2")]);
        assert_eq!(
            all_reduced_words(&a4, &WeylElement::identity(&a4)),
            vec![Word::empty()]
        );
    }

    #[test]
    fn commutation_class_examples() {
        let a3 = rs("A3");
        let words = all_reduced_words(&a3, &longest_element(&a3));
        let classes = commutation_classes(&a3, &words).unwrap();
        assert_eq!(classes.len(), 8);
        let class_of = |x: &Word| classes.iter().position(|c| c.contains(x)).unwrap();
        assert_eq!(class_of(&w("2,3,1,2,3,1")), class_of(&w("2,3,1,2,1,3")));
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), 16);

        let single = vec![w("1,2,1")];
        assert_eq!(
            commutation_classes(&a3, &single).unwrap(),
            vec![single.clone()]
        );

        let mixed = vec![w("1,2"), w("2,1")];
        assert_eq!(commutation_classes(&a3, &mixed), Err(Error::MixedElements));
    }

    #[test]
    fn coxeter_element_examples() {
        let a2 = rs("A2");
        let cox = coxeter_elements(&a2);
        assert_eq!(cox.len(), 2);
        assert_eq!(cox[0].1, w("1,2"));
        assert_eq!(cox[1].1, w("2,1"));
        let a3 = rs("A3");
        let cox3 = coxeter_elements(&a3);
        // 6 permutation words; 1,3,2 and 3,1,2 coincide, as do 2,1,3 and 2,3,1
        assert_eq!(cox3.len(), 4);
        for (c, _) in &cox3 {
            assert!(is_coxeter(&a3, c));
        }
        let a1 = rs("A1");
        let cox1 = coxeter_elements(&a1);
        assert_eq!(cox1.len(), 1);
        assert_eq!(cox1[0].1, w("1"));
    }

    #[test]
    fn support_examples() {
        assert_eq!(
            support(&rs("A2"), &w("1,2,1")).unwrap(),
            BTreeSet::from([1, 2])
        );
        assert_eq!(
            support(&rs("D4"), &w("2,1,3,4")).unwrap(),
            BTreeSet::from([1, 2, 3, 4])
        );
        assert_eq!(
            support(&rs("A5"), &w("3,4,5,4,2,1,2")).unwrap(),
            BTreeSet::from([1, 2, 3, 4, 5])
        );
        assert!(matches!(
            support(&rs("A3"), &w("1,2,2")),
            Err(Error::NotReduced { .. })
        ));
    }

    #[test]
    fn minuscule_element_examples() {
        let a3 = rs("A3");
        let els = minuscule_elements(&a3, 1).unwrap();
        assert_eq!(els.len(), 4);
        assert!(els[0].is_identity());
        assert_eq!(minuscule_elements(&rs("D4"), 4).unwrap().len(), 8);
        assert_eq!(minuscule_elements(&a3, 2).unwrap().len(), 6);
        assert_eq!(
            minuscule_elements(&rs("G2"), 1),
            Err(Error::NotMinuscule { index: 1 })
        );
    }

    #[test]
    fn dot_action_examples() {
        let a2 = rs("A2");
        assert!(w_dot_zero(&a2, &WeylElement::identity(&a2))
            .unwrap()
            .is_zero());
        let s1 = element_of(&a2, &w("1")).unwrap();
        assert_eq!(
            w_dot_zero(&a2, &s1).unwrap(),
            a2.root_to_weight(&RootVector(vec![-1, 0]))
        );
        assert_eq!(
            w_dot_zero(&a2, &longest_element(&a2)).unwrap(),
            Weight(vec![-2, -2])
        );
        assert_eq!(
            a2.weight_to_root(&Weight(vec![-2, -2])).unwrap(),
            RootVector(vec![-2, -2])
        );
    }

    #[test]
    fn group_orders() {
        for (s, order) in [
            ("A3", 24),
            ("B3", 48),
            ("C3", 48),
            ("G2", 12),
            ("D4", 192),
            ("F4", 1152),
        ] {
            let r = rs(s);
            let els = all_elements(&r);
            assert_eq!(els.len(), order, "{s}");
            assert_eq!(
                els.iter().map(WeylElement::length).max().unwrap(),
                r.positive_roots().len()
            );
        }
    }
}
