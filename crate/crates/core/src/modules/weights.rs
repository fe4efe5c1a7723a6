//! Torus weights of polynomial `gl_d`-modules and highest-weight bookkeeping.

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExplicitModule, TensorIndex};
use crate::characters::{ClassFunction, IrredDecomposition};
use crate::error::{Error, Result};
use crate::linalg::{q, rank_of_vectors, ExactMatrix, SparseVec, Q};
use crate::partitions::{schur_weights, Partition};

/// Weight vector ↦ multiplicity.
pub type WeightMultiset = BTreeMap<Vec<i64>, u64>;

/// A `gl_d`-module presented in a weight basis: every basis vector is a
/// torus eigenvector, and the raising operators `E_{k,k+1}` are available
/// column by column.
pub trait WeightGraded {
    fn dim(&self) -> usize;
    fn gl_rank(&self) -> usize;
    fn weight_of(&self, idx: usize) -> Vec<i64>;
    /// `E_{k,k+1}` applied to basis vector `idx`.
    fn raise(&self, k: usize, idx: usize) -> SparseVec;
}

impl WeightGraded for TensorIndex {
    fn dim(&self) -> usize {
        TensorIndex::dim(self)
    }

    fn gl_rank(&self) -> usize {
        self.d
    }

    fn weight_of(&self, idx: usize) -> Vec<i64> {
        self.weight(idx)
    }

    fn raise(&self, k: usize, idx: usize) -> SparseVec {
        self.apply_gl(k, k + 1, &vec![(idx, Q::one())])
    }
}

/// Valid only when the torus acts diagonally in the given basis, which holds
/// for every module built in this crate; see [`weight_multiset`] otherwise.
impl WeightGraded for ExplicitModule {
    fn dim(&self) -> usize {
        self.dimension()
    }

    fn gl_rank(&self) -> usize {
        ExplicitModule::gl_rank(self)
    }

    fn weight_of(&self, idx: usize) -> Vec<i64> {
        (0..ExplicitModule::gl_rank(self))
            .map(|i| {
                self.gl_generator(i, i)
                    .get(idx, idx)
                    .to_integer()
                    .to_i64()
                    .expect("weight fits i64")
            })
            .collect()
    }

    fn raise(&self, k: usize, idx: usize) -> SparseVec {
        self.gl_generator(k, k + 1).apply(&vec![(idx, Q::one())])
    }
}

fn integral_weight(v: &Q) -> Result<i64> {
    if !v.is_integer() {
        return Err(Error::NonPolynomialAction(v.to_string()));
    }
    v.to_integer()
        .to_i64()
        .ok_or_else(|| Error::NonPolynomialAction(v.to_string()))
}

fn check_polynomial(w: &[i64]) -> Result<()> {
    if w.iter().any(|&x| x < 0) {
        return Err(Error::NonPolynomialAction(format!("{w:?}")));
    }
    Ok(())
}

/// Weight multiset of the torus action. Reads the diagonal when every
/// `E_ii` is diagonal; otherwise splits the space into simultaneous integer
/// eigenspaces by exact kernels.
pub fn weight_multiset(m: &ExplicitModule) -> Result<WeightMultiset> {
    let d = m.gl_rank();
    let n = m.dimension();
    let diag: Vec<&ExactMatrix> = (0..d).map(|i| m.gl_generator(i, i)).collect();
    let mut out = WeightMultiset::new();
    if diag.iter().all(|h| h.is_diagonal()) {
        for idx in 0..n {
            let w = diag
                .iter()
                .map(|h| integral_weight(&h.get(idx, idx)))
                .collect::<Result<Vec<_>>>()?;
            check_polynomial(&w)?;
            *out.entry(w).or_insert(0) += 1;
        }
        return Ok(out);
    }

    // Candidate eigenvalues are integers inside the Gershgorin discs.
    let bounds: Vec<i64> = diag
        .iter()
        .map(|h| {
            (0..n)
                .map(|i| h.row(i).iter().map(|(_, x)| x.abs()).sum::<Q>())
                .max()
                .unwrap_or_else(Q::zero)
                .ceil()
                .to_integer()
                .to_i64()
                .unwrap_or(i64::MAX)
        })
        .collect();
    let mut prefix = Vec::new();
    split_eigenspaces(&diag, &bounds, n, &mut prefix, &mut out)?;
    let total: u64 = out.values().sum();
    if total as usize != n {
        return Err(Error::NonDiagonalizableTorus);
    }
    for w in out.keys() {
        check_polynomial(w)?;
    }
    Ok(out)
}

fn split_eigenspaces(
    diag: &[&ExactMatrix],
    bounds: &[i64],
    n: usize,
    prefix: &mut Vec<i64>,
    out: &mut WeightMultiset,
) -> Result<()> {
    let k = prefix.len();
    let stacked = |prefix: &[i64]| {
        let mut entries = Vec::new();
        for (i, c) in prefix.iter().enumerate() {
            let shifted = diag[i].sub(&ExactMatrix::identity(n).scale(&q(*c)));
            for r in 0..n {
                for (col, x) in shifted.row(r) {
                    entries.push((i * n + r, *col, x.clone()));
                }
            }
        }
        ExactMatrix::from_triplets(prefix.len() * n, n, entries)
    };
    if k == diag.len() {
        let dim = stacked(prefix).kernel().len();
        if dim > 0 {
            out.insert(prefix.clone(), dim as u64);
        }
        return Ok(());
    }
    for c in -bounds[k]..=bounds[k] {
        prefix.push(c);
        if !stacked(prefix).kernel().is_empty() {
            split_eigenspaces(diag, bounds, n, prefix, out)?;
        }
        prefix.pop();
    }
    Ok(())
}

fn weight_to_partition(w: &[i64]) -> Option<Partition> {
    if w.windows(2).any(|p| p[0] < p[1]) || w.iter().any(|&x| x < 0) {
        return None;
    }
    Partition::new(w.iter().map(|&x| x as usize).collect()).ok()
}

/// Peels off Schur weight multisets, largest weight first.
pub fn decompose_weights(weights: &WeightMultiset, d: usize) -> Result<IrredDecomposition<Partition>> {
    let mut rest: BTreeMap<Vec<i64>, i64> =
        weights.iter().map(|(w, &m)| (w.clone(), m as i64)).collect();
    let mut out = IrredDecomposition::new();
    while let Some((top, &mult)) = rest.iter().next_back() {
        let top = top.clone();
        check_polynomial(&top)?;
        let lambda = weight_to_partition(&top)
            .ok_or_else(|| Error::InvalidArgs(format!("top weight {top:?} is not dominant")))?;
        if mult <= 0 {
            return Err(Error::InvalidArgs(format!(
                "weights do not form a character (at {top:?})"
            )));
        }
        for (w, k) in schur_weights(&lambda, d) {
            let e = rest.entry(w.clone()).or_insert(0);
            *e -= mult * k as i64;
            if *e == 0 {
                rest.remove(&w);
            }
        }
        out.add(lambda, mult);
    }
    Ok(out)
}

/// `S_λ` multiplicities of a polynomial `gl_d`-module.
pub fn gl_decompose(m: &ExplicitModule) -> Result<IrredDecomposition<Partition>> {
    decompose_weights(&weight_multiset(m)?, m.gl_rank())
}

/// Dimension of the highest-weight space of weight `lambda`: the joint
/// kernel of the raising operators on the `lambda` weight space. This is the
/// multiplicity of `S_λ`.
pub fn highest_weight_dimension<M: WeightGraded + ?Sized>(m: &M, lambda: &[i64]) -> usize {
    let idxs: Vec<usize> = (0..m.dim()).filter(|&i| m.weight_of(i) == lambda).collect();
    highest_weight_dimension_on(m, &idxs)
}

pub(crate) fn highest_weight_dimension_on<M: WeightGraded + ?Sized>(m: &M, idxs: &[usize]) -> usize {
    let n = m.dim();
    let d = m.gl_rank();
    // Row `j` of the stacked map: (E_{0,1} e_j, E_{1,2} e_j, ..) concatenated.
    let images: Vec<SparseVec> = idxs
        .iter()
        .map(|&j| {
            (0..d.saturating_sub(1))
                .flat_map(|k| m.raise(k, j).into_iter().map(move |(i, x)| (k * n + i, x)))
                .collect()
        })
        .collect();
    idxs.len() - rank_of_vectors(&images)
}

/// Highest-weight multiplicities of every dominant weight that occurs.
pub fn highest_weight_multiplicities<M: WeightGraded + ?Sized>(m: &M) -> BTreeMap<Partition, usize> {
    let mut by_weight: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for i in 0..m.dim() {
        by_weight.entry(m.weight_of(i)).or_default().push(i);
    }
    by_weight
        .into_iter()
        .filter_map(|(w, idxs)| weight_to_partition(&w).map(|l| (l, idxs)))
        .filter_map(|(l, idxs)| {
            let k = highest_weight_dimension_on(m, &idxs);
            (k > 0).then_some((l, k))
        })
        .collect()
}

/// Given the trace of each group element on every weight space of a
/// `gl_d × G` module, returns the character of `G` on each highest-weight
/// space, i.e. `M = ⊕_λ S_λ ⊗ M_λ` with `M_λ` as class functions.
pub fn decompose_graded_traces(
    traces: &BTreeMap<Vec<i64>, ClassFunction>,
    d: usize,
) -> Result<BTreeMap<Partition, ClassFunction>> {
    let mut rest = traces.clone();
    rest.retain(|_, f| f.values().values().any(|v| !v.is_zero()));
    let mut out = BTreeMap::new();
    while let Some((top, f)) = rest.iter().next_back() {
        let top = top.clone();
        let f = f.clone();
        check_polynomial(&top)?;
        let lambda = weight_to_partition(&top)
            .ok_or_else(|| Error::InvalidArgs(format!("top weight {top:?} is not dominant")))?;
        for (w, k) in schur_weights(&lambda, d) {
            let cur = match rest.get(&w) {
                Some(g) => g.clone(),
                None => ClassFunction::zero(f.degree()),
            };
            let next = cur.sub(&f.scale(&q(k as i64)))?;
            if next.values().values().all(Zero::is_zero) {
                rest.remove(&w);
            } else {
                rest.insert(w, next);
            }
        }
        out.insert(lambda, f);
    }
    Ok(out)
}
