use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TensorIndex;
use crate::linalg::{sparse_from_pairs, SparseVec, Q};
use crate::partitions::{Partition, SkewShape};
use crate::perm::Permutation;

/// Integral element `Σ x_g g` of `Z[Σ_r]`, multiplied by composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_perm(Permutation::identity(degree))
    }

    pub fn from_perm(g: Permutation) -> Self {
        let degree = g.degree();
        let mut terms = BTreeMap::new();
        terms.insert(g, BigInt::one());
        GroupAlgebraElement { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, g: &Permutation) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, g: Permutation, x: BigInt) {
        let e = self.terms.entry(g.clone()).or_insert_with(BigInt::zero);
        *e += x;
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, x) in &other.terms {
            out.push(g.clone(), x.clone());
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let mut out = Self::zero(self.degree);
        if !s.is_zero() {
            for (g, x) in &self.terms {
                out.terms.insert(g.clone(), x * s);
            }
        }
        out
    }

    /// `self · other`, with `(g·h)(i) = g(h(i))`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree);
        for (g, x) in &self.terms {
            for (h, y) in &other.terms {
                out.push(g.compose(h), x * y);
            }
        }
        out
    }

    /// Action on a sparse vector of `(Q^d)^{⊗r}`.
    pub fn act_on_tensor(&self, t: &TensorIndex, v: &SparseVec) -> SparseVec {
        sparse_from_pairs(self.terms.iter().flat_map(|(g, x)| {
            let x = Q::from_integer(x.clone());
            v.iter().map(move |(idx, y)| (t.permute(g, *idx), &x * y))
        }))
    }

    /// Coordinates in `Q[Σ_r]` with respect to a fixed indexing of permutations.
    pub fn to_sparse<F: Fn(&Permutation) -> usize>(&self, index: F) -> SparseVec {
        sparse_from_pairs(
            self.terms
                .iter()
                .map(|(g, x)| (index(g), Q::from_integer(x.clone()))),
        )
    }
}

/// Young symmetrizer `c = a · b` of a (skew) diagram, for the tableau that
/// numbers the cells `0, 1, ..` in row-reading order. `a` sums the row
/// group and `b` is the signed sum over the column group.
#[derive(Debug, Clone)]
pub struct YoungSymmetrizer {
    rows: Vec<Vec<usize>>,
    columns: Vec<Vec<usize>>,
    degree: usize,
}

impl YoungSymmetrizer {
    pub fn for_partition(lambda: &Partition) -> Self {
        Self::from_cells(&lambda.cells().collect::<Vec<_>>())
    }

    pub fn for_skew(shape: &SkewShape) -> Self {
        Self::from_cells(&shape.cells())
    }

    /// `cells` in row-reading order.
    fn from_cells(cells: &[(usize, usize)]) -> Self {
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut columns: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, &(i, j)) in cells.iter().enumerate() {
            rows.entry(i).or_default().push(k);
            columns.entry(j).or_default().push(k);
        }
        YoungSymmetrizer {
            rows: rows.into_values().collect(),
            columns: columns.into_values().collect(),
            degree: cells.len(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Entries of each row of the numbered tableau.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn row_symmetrizer(&self) -> GroupAlgebraElement {
        self.subgroup_sum(&self.rows, false)
    }

    pub fn column_antisymmetrizer(&self) -> GroupAlgebraElement {
        self.subgroup_sum(&self.columns, true)
    }

    pub fn element(&self) -> GroupAlgebraElement {
        self.row_symmetrizer().mul(&self.column_antisymmetrizer())
    }

    /// `c · v` on tensor space, applying `b` then `a` without forming `c`.
    pub fn act_on_tensor(&self, t: &TensorIndex, v: &SparseVec) -> SparseVec {
        let b = self.column_antisymmetrizer().act_on_tensor(t, v);
        self.row_symmetrizer().act_on_tensor(t, &b)
    }

    fn subgroup_sum(&self, blocks: &[Vec<usize>], signed: bool) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::identity(self.degree);
        for block in blocks.iter().filter(|b| b.len() > 1) {
            let mut factor = GroupAlgebraElement::zero(self.degree);
            for local in Permutation::all(block.len()) {
                let mut images: Vec<usize> = (0..self.degree).collect();
                for (a, &src) in block.iter().enumerate() {
                    images[src] = block[local.apply(a)];
                }
                let coeff = if signed { local.sign() } else { 1 };
                factor.push(Permutation::from_images(images), BigInt::from(coeff));
            }
            out = out.mul(&factor);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn symmetrizer_is_quasi_idempotent() {
        // c^2 = (r! / dim S^λ) c
        for (shape, factor) in [("2,1", 3), ("3", 6), ("1,1,1", 6), ("2,2", 12), ("3,1", 8)] {
            let c = YoungSymmetrizer::for_partition(&p(shape)).element();
            assert_eq!(c.mul(&c), c.scale(&BigInt::from(factor)), "{shape}");
        }
    }

    #[test]
    fn row_and_column_groups() {
        let y = YoungSymmetrizer::for_partition(&p("3,1"));
        assert_eq!(y.rows(), &[vec![0, 1, 2], vec![3]]);
        assert_eq!(y.columns(), &[vec![0, 3], vec![1], vec![2]]);
        assert_eq!(y.row_symmetrizer().terms().len(), 6);
        assert_eq!(y.column_antisymmetrizer().terms().len(), 2);
    }

    #[test]
    fn skew_shape_cells_are_renumbered() {
        let s = SkewShape::new(p("2,1"), p("1")).unwrap();
        let y = YoungSymmetrizer::for_skew(&s);
        assert_eq!(y.degree(), 2);
        // the two cells share neither a row nor a column
        assert_eq!(y.element(), GroupAlgebraElement::identity(2));
    }
}
