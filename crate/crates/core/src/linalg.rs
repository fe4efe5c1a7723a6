//! Exact rational linear algebra.
//!
//! Matrices are stored row-sparse because every action matrix built here
//! (permutations of tensor factors, Lie-algebra derivations, symmetrizers)
//! has only a handful of nonzeros per row. Rank uses fraction-free
//! elimination over the integers with content reduction, so no rational
//! normalization happens inside the inner loop.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Q)>;

/// `y += alpha * x` on sorted sparse vectors.
pub fn axpy(y: &SparseVec, alpha: &Q, x: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        let take_y = j >= x.len() || (i < y.len() && y[i].0 < x[j].0);
        let take_x = i >= y.len() || (j < x.len() && x[j].0 < y[i].0);
        if take_y {
            out.push(y[i].clone());
            i += 1;
        } else if take_x {
            out.push((x[j].0, alpha * &x[j].1));
            j += 1;
        } else {
            let v = &y[i].1 + alpha * &x[j].1;
            if !v.is_zero() {
                out.push((y[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Collects `(index, value)` pairs into a sorted sparse vector, summing repeats.
pub fn sparse_from_pairs<I: IntoIterator<Item = (usize, Q)>>(pairs: I) -> SparseVec {
    let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
    for (i, v) in pairs {
        *acc.entry(i).or_insert_with(Q::zero) += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        ExactMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, Q::one())]).collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions add up.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Q)>,
    {
        let mut buckets: Vec<Vec<(usize, Q)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of bounds");
            buckets[r].push((c, v));
        }
        ExactMatrix {
            rows,
            cols,
            data: buckets.into_iter().map(sparse_from_pairs).collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows
            .iter()
            .map(|row| {
                assert_eq!(row.len(), cols, "ragged dense matrix");
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        ExactMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let entries = columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v.clone())));
        Self::from_triplets(rows, columns.len(), entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.data
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().all(|(j, _)| *j == i))
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Self {
        let entries = self
            .data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (*j, i, v.clone())));
        Self::from_triplets(self.cols, self.rows, entries)
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|row| row.iter().map(|(j, v)| (*j, v * s)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, &Q::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, &-Q::one())
    }

    fn combine(&self, other: &Self, alpha: &Q) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| axpy(a, alpha, b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        *acc.entry(*j).or_insert_with(Q::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        ExactMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Commutator `AB - BA`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// `M v` for a sparse column vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let dense: HashMap<usize, &Q> = v.iter().map(|(i, x)| (*i, x)).collect();
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, row)| {
                let s: Q = row
                    .iter()
                    .filter_map(|(j, a)| dense.get(j).map(|x| a * *x))
                    .sum();
                (!s.is_zero()).then_some((i, s))
            })
            .collect()
    }

    /// Columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseVec> {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                cols[*j].push((i, v.clone()));
            }
        }
        cols
    }

    pub fn rank(&self) -> usize {
        rank_of_vectors(self.data.iter())
    }

    /// Basis of the null space, from the reduced row echelon form.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let mut rows = self.to_dense();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for x in rows[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    for k in c..self.cols {
                        let t = &f * &rows[r][k];
                        rows[i][k] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        let free = (0..self.cols).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut v: SparseVec = pivots
                .iter()
                .enumerate()
                .filter(|(i, _)| !rows[*i][f].is_zero())
                .map(|(i, &pc)| (pc, -rows[i][f].clone()))
                .collect();
            v.push((f, Q::one()));
            v.sort_by_key(|e| e.0);
            v
        })
        .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Integer row echelon form built by insertion.
///
/// Rows are kept primitive (content 1, positive leading entry) and are
/// reduced against stored pivots by cross-multiplication, which keeps every
/// intermediate an integer.
#[derive(Debug, Default, Clone)]
pub struct IntegerEchelon {
    pivots: BTreeMap<usize, Vec<(usize, BigInt)>>,
}

impl IntegerEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, mut row: Vec<(usize, BigInt)>) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        loop {
            let Some((lead, lead_val)) = row.first().cloned() else {
                return false;
            };
            let Some(pivot) = self.pivots.get(&lead) else {
                make_primitive(&mut row);
                self.pivots.insert(lead, row);
                return true;
            };
            let pivot_val = &pivot[0].1;
            let g = lead_val.gcd(pivot_val);
            let row_mul = pivot_val / &g;
            let piv_mul = &lead_val / &g;
            row = int_combine(&row, &row_mul, pivot, &piv_mul);
            make_primitive(&mut row);
        }
    }
}

/// `a * x - b * y` on sorted sparse integer vectors.
fn int_combine(
    x: &[(usize, BigInt)],
    a: &BigInt,
    y: &[(usize, BigInt)],
    b: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if i >= x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(row: &mut [(usize, BigInt)]) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let flip = first.1.is_negative();
    if !g.is_one() || flip {
        let g = if flip { -g } else { g };
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Scales a rational sparse vector to a primitive integer vector.
pub fn clear_denominators(v: &[(usize, Q)]) -> Vec<(usize, BigInt)> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    v.iter()
        .map(|(i, x)| (*i, x.numer() * (&lcm / x.denom())))
        .collect()
}

/// Exact rank of a family of sparse rational vectors.
pub fn rank_of_vectors<'a, I>(vectors: I) -> usize
where
    I: IntoIterator<Item = &'a SparseVec>,
{
    let mut ech = IntegerEchelon::new();
    for v in vectors {
        ech.insert(clear_denominators(v));
    }
    ech.rank()
}

/// Incrementally built subspace that remembers how its echelon rows are
/// written in terms of the vectors that were accepted as its basis.
#[derive(Debug, Clone, Default)]
pub struct Span {
    basis: Vec<SparseVec>,
    // leading index -> (echelon row, its coordinates in `basis`)
    echelon: BTreeMap<usize, (SparseVec, SparseVec)>,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<SparseVec> {
        self.basis
    }

    /// Adds `v` to the basis if it is not already in the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let k = self.basis.len();
        let mut row = v.clone();
        let mut coords: SparseVec = vec![(k, Q::one())];
        loop {
            let Some((lead, lead_val)) = row.first().cloned() else {
                return false;
            };
            match self.echelon.get(&lead) {
                Some((piv, piv_coords)) => {
                    let alpha = -(&lead_val / &piv[0].1);
                    row = axpy(&row, &alpha, piv);
                    coords = axpy(&coords, &alpha, piv_coords);
                }
                None => {
                    self.echelon.insert(lead, (row, coords));
                    self.basis.push(v);
                    return true;
                }
            }
        }
    }

    /// Coordinates of `v` in the accepted basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Q>> {
        let mut row = v.clone();
        let mut coords: SparseVec = Vec::new();
        while let Some((lead, lead_val)) = row.first().cloned() {
            let (piv, piv_coords) = self.echelon.get(&lead)?;
            let alpha = &lead_val / &piv[0].1;
            row = axpy(&row, &-alpha.clone(), piv);
            coords = axpy(&coords, &alpha, piv_coords);
        }
        let mut dense = vec![Q::zero(); self.basis.len()];
        for (i, x) in coords {
            dense[i] = x;
        }
        Some(dense)
    }

    /// Matrix of a linear map that preserves this span, in the accepted basis.
    /// Returns `None` if some image leaves the span.
    pub fn restrict<F>(&self, mut image: F) -> Option<ExactMatrix>
    where
        F: FnMut(&SparseVec) -> SparseVec,
    {
        let n = self.basis.len();
        let mut entries = Vec::new();
        for (j, b) in self.basis.iter().enumerate() {
            let coords = self.coordinates(&image(b))?;
            for (i, x) in coords.into_iter().enumerate() {
                if !x.is_zero() {
                    entries.push((i, j, x));
                }
            }
        }
        Some(ExactMatrix::from_triplets(n, n, entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        let dense: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|x| q(*x)).collect()).collect();
        ExactMatrix::from_dense(&dense)
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2], &[3, 4]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[2, 4, 6], &[1, 1, 1], &[3, 5, 7]]).rank(), 2);
    }

    #[test]
    fn rank_handles_fractions() {
        let half = Q::new(BigInt::from(1), BigInt::from(2));
        let a = ExactMatrix::from_dense(&[vec![half.clone(), q(1)], vec![q(1), q(2)]]);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn product_and_bracket() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.bracket(&b), m(&[&[1, 0], &[0, -1]]));
        assert_eq!(a.mul(&a), ExactMatrix::zeros(2, 2));
        assert_eq!(a.transpose(), b);
    }

    #[test]
    fn kernel_dimension_and_vectors() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.apply(v).is_empty());
        }
        assert!(m(&[&[1, 0], &[0, 1]]).kernel().is_empty());
        assert_eq!(ExactMatrix::zeros(0, 3).kernel().len(), 3);
    }

    #[test]
    fn span_coordinates_roundtrip() {
        let mut s = Span::new();
        assert!(s.insert(vec![(0, q(1)), (1, q(1))]));
        assert!(s.insert(vec![(1, q(2)), (2, q(1))]));
        assert!(!s.insert(vec![(0, q(2)), (1, q(4)), (2, q(1))]));
        let c = s.coordinates(&vec![(0, q(3)), (1, q(5)), (2, q(1))]).unwrap();
        assert_eq!(c, vec![q(3), q(1)]);
        assert!(s.coordinates(&vec![(2, q(1))]).is_none());
    }
}
