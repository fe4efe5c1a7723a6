//! Integer partitions, skew shapes, and the closed-form dimension formulas
//! that index every other layer.
//!
//! Canonical order: partitions sort first by weight, then reverse
//! lexicographically, so `(3) < (2,1) < (1,1,1)`. All enumerations and
//! decompositions report keys in this order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates a weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero before a nonzero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition (used for cycle types).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(n)`, the one-row partition.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// `(1^n)`, the one-column partition.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Cell-wise containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Cells `(row, col)` in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i) - j - 1;
        let leg = self.parts[i + 1..].iter().filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Multiplicities `m_k` = number of parts equal to `k`, for `k = 1..=max`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Sign of a permutation with this cycle type.
    pub fn cycle_sign(&self) -> i64 {
        let even_cycles = self.parts.iter().filter(|&&p| p % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Partitions `μ ⊆ self`, all weights.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], cap: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::from_unsorted(acc.clone()));
            let i = acc.len();
            if i >= outer.len() {
                return;
            }
            for v in 1..=outer[i].min(cap) {
                acc.push(v);
                rec(outer, v, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `5,3,1`; the empty partition is `0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.is_empty() {
            return Err(Error::Parse("empty partition string (use \"0\")".into()));
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in canonical (reverse lexicographic) order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: acc.clone() });
            return;
        }
        for v in (1..=rest.min(cap)).rev() {
            acc.push(v);
            rec(rest - v, v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts.
pub fn enumerate_partitions_with_length(n: usize, max_len: usize) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of standard Young tableaux of shape `λ`, by the hook-length formula.
pub fn specht_dimension(lambda: &Partition) -> u64 {
    let hooks = lambda
        .cells()
        .fold(BigUint::one(), |acc, (i, j)| acc * lambda.hook_length(i, j));
    (factorial(lambda.weight()) / hooks)
        .to_u64()
        .expect("Specht dimension exceeds u64")
}

/// `dim S_λ(Q^d)` by the hook-content formula; zero exactly when `len(λ) > d`.
pub fn schur_gl_dimension(lambda: &Partition, d: usize) -> u64 {
    if lambda.len() > d {
        return 0;
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, j) in lambda.cells() {
        num *= d + j - i;
        den *= lambda.hook_length(i, j);
    }
    (num / den).to_u64().expect("Schur dimension exceeds u64")
}

/// `dim Sym^k(Q^n) = C(n + k - 1, k)`.
pub fn sym_power_dimension(n: usize, k: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    binomial((n + k - 1) as u128, k as u128)
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::InvalidSkewShape {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        j >= self.inner.part(i) && j < self.outer.part(i)
    }

    /// Cells in reading order (rows top to bottom, left to right).
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|i| (self.inner.part(i)..self.outer.part(i)).map(move |j| (i, j)))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Weight multiset of semistandard tableaux of `shape` with entries in `1..=d`,
/// i.e. the monomial expansion of the (skew) Schur polynomial in `d` variables.
pub fn ssyt_weights(shape: &SkewShape, d: usize) -> BTreeMap<Vec<i64>, u64> {
    let cells = shape.cells();
    let index: BTreeMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let mut filling = vec![0usize; cells.len()];
    let mut weight = vec![0i64; d];
    let mut out = BTreeMap::new();

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        index: &BTreeMap<(usize, usize), usize>,
        d: usize,
        filling: &mut Vec<usize>,
        weight: &mut Vec<i64>,
        out: &mut BTreeMap<Vec<i64>, u64>,
    ) {
        if k == cells.len() {
            *out.entry(weight.clone()).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 0;
        if j > 0 {
            if let Some(&l) = index.get(&(i, j - 1)) {
                lo = lo.max(filling[l]);
            }
        }
        if i > 0 {
            if let Some(&u) = index.get(&(i - 1, j)) {
                lo = lo.max(filling[u] + 1);
            }
        }
        for v in lo..d {
            filling[k] = v;
            weight[v] += 1;
            rec(k + 1, cells, index, d, filling, weight, out);
            weight[v] -= 1;
        }
    }

    rec(0, &cells, &index, d, &mut filling, &mut weight, &mut out);
    out
}

/// Weight multiset of `S_λ(Q^d)`.
pub fn schur_weights(lambda: &Partition, d: usize) -> BTreeMap<Vec<i64>, u64> {
    ssyt_weights(&SkewShape::straight(lambda.clone()), d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn construction_normalizes_and_validates() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p("3,1"));
        assert!(Partition::new(vec![1, 3]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(p("0"), Partition::empty());
        assert!("".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3), vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(enumerate_partitions(8).len(), 22);
        let mut sorted = enumerate_partitions(6);
        sorted.sort();
        assert_eq!(sorted, enumerate_partitions(6));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("5,3,1").transpose(), p("3,2,2,1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(Partition::column(4).transpose(), Partition::row(4));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(specht_dimension(&p("4")), 1);
        assert_eq!(specht_dimension(&p("2,1")), 2);
        assert_eq!(specht_dimension(&p("3,2")), 5);
        assert_eq!(specht_dimension(&Partition::empty()), 1);
        assert_eq!(schur_gl_dimension(&p("1,1,1"), 2), 0);
        assert_eq!(schur_gl_dimension(&p("2,1"), 2), 2);
        assert_eq!(schur_gl_dimension(&p("2"), 3), 6);
        assert_eq!(schur_gl_dimension(&Partition::empty(), 1), 1);
    }

    #[test]
    fn skew_shape_validation() {
        assert!(SkewShape::new(p("2,1"), p("1")).is_ok());
        assert!(SkewShape::new(p("2,1"), p("1,1,1")).is_err());
        assert!(SkewShape::new(p("2,1"), p("3")).is_err());
        assert_eq!(SkewShape::new(p("2,1"), p("1")).unwrap().size(), 2);
    }

    #[test]
    fn ssyt_counts_match_hook_content() {
        for n in 0..=5 {
            for lam in enumerate_partitions(n) {
                for d in 1..=4 {
                    let total: u64 = schur_weights(&lam, d).values().sum();
                    assert_eq!(total, schur_gl_dimension(&lam, d), "{lam:?} d={d}");
                }
            }
        }
    }

    #[test]
    fn subpartitions_of_21() {
        assert_eq!(
            p("2,1").subpartitions(),
            vec![Partition::empty(), p("1"), p("2"), p("1,1"), p("2,1")]
        );
    }

    #[test]
    fn serde_uses_text_syntax() {
        let json = serde_json::to_string(&p("5,3,1")).unwrap();
        assert_eq!(json, "\"5,3,1\"");
        assert_eq!(serde_json::from_str::<Partition>("\"0\"").unwrap(), Partition::empty());
    }
}
