use num_traits::One;

use super::ExplicitModule;
use crate::budget::{checked_pow, Budget};
use crate::error::{Error, Result};
use crate::linalg::{sparse_from_pairs, ExactMatrix, SparseVec, Q};
use crate::perm::Permutation;

/// Standard basis of `(Q^d)^{⊗r}`: multi-indices `(i_0, .., i_{r-1})` in
/// lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorIndex {
    pub d: usize,
    pub r: usize,
}

impl TensorIndex {
    pub fn new(d: usize, r: usize, budget: &Budget) -> Result<Self> {
        let size = checked_pow(d, r).ok_or_else(|| Error::SizeBudgetExceeded {
            what: format!("(Q^{d})^⊗{r}"),
            size: usize::MAX,
            budget: budget.ambient,
        })?;
        budget.check_ambient(&format!("(Q^{d})^⊗{r}"), size)?;
        Ok(TensorIndex { d, r })
    }

    pub fn dim(&self) -> usize {
        self.d.pow(self.r as u32)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.r];
        for k in (0..self.r).rev() {
            out[k] = idx % self.d;
            idx /= self.d;
        }
        out
    }

    pub fn encode(&self, indices: &[usize]) -> usize {
        indices.iter().fold(0, |acc, &i| acc * self.d + i)
    }

    /// Weight of a basis tensor: how often each `e_i` occurs.
    pub fn weight(&self, idx: usize) -> Vec<i64> {
        let mut w = vec![0i64; self.d];
        for i in self.decode(idx) {
            w[i] += 1;
        }
        w
    }

    /// `σ · e_I`, moving the factor in position `k` to position `σ(k)`.
    pub fn permute(&self, sigma: &Permutation, idx: usize) -> usize {
        let old = self.decode(idx);
        let mut new = vec![0; self.r];
        for (k, &i) in old.iter().enumerate() {
            new[sigma.apply(k)] = i;
        }
        self.encode(&new)
    }

    /// `E_ij · e_I` by the Leibniz rule: one term per factor equal to `e_j`.
    pub fn raise(&self, i: usize, j: usize, idx: usize) -> Vec<usize> {
        let old = self.decode(idx);
        old.iter()
            .enumerate()
            .filter(|(_, &x)| x == j)
            .map(|(k, _)| {
                let mut new = old.clone();
                new[k] = i;
                self.encode(&new)
            })
            .collect()
    }

    /// `E_ij` applied to a sparse tensor.
    pub fn apply_gl(&self, i: usize, j: usize, v: &SparseVec) -> SparseVec {
        sparse_from_pairs(
            v.iter()
                .flat_map(|(idx, x)| self.raise(i, j, *idx).into_iter().map(move |t| (t, x.clone()))),
        )
    }

    pub fn gl_matrix(&self, i: usize, j: usize) -> ExactMatrix {
        let entries = (0..self.dim())
            .flat_map(|col| self.raise(i, j, col).into_iter().map(move |row| (row, col, Q::one())));
        ExactMatrix::from_triplets(self.dim(), self.dim(), entries)
    }

    pub fn permutation_matrix(&self, sigma: &Permutation) -> ExactMatrix {
        let entries = (0..self.dim()).map(|col| (self.permute(sigma, col), col, Q::one()));
        ExactMatrix::from_triplets(self.dim(), self.dim(), entries)
    }
}

/// `(Q^d)^{⊗r}` with `Σ_r` permuting factors and `gl_d` acting by derivations.
pub fn tensor_power_module(d: usize, r: usize, budget: &Budget) -> Result<ExplicitModule> {
    if d == 0 {
        return Err(Error::InvalidArgs("tensor power needs d ≥ 1".into()));
    }
    let t = TensorIndex::new(d, r, budget)?;
    let sym = (0..r.saturating_sub(1))
        .map(|i| t.permutation_matrix(&Permutation::adjacent(r, i)))
        .collect();
    let mut gl = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            gl.push(t.gl_matrix(i, j));
        }
    }
    Ok(ExplicitModule::new(t.dim(), sym, d, gl)?.with_grading(r as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn small_tensor_powers() {
        let b = Budget::default();
        let m = tensor_power_module(2, 0, &b).unwrap();
        assert_eq!(m.dimension(), 1);
        assert!(m.gl_generators().iter().all(ExactMatrix::is_zero));

        let m = tensor_power_module(2, 2, &b).unwrap();
        assert_eq!(m.dimension(), 4);
        assert_eq!(m.sym_generators()[0].trace(), q(2));
        assert!(m.satisfies_relations());

        assert_eq!(tensor_power_module(3, 2, &b).unwrap().dimension(), 9);
    }

    #[test]
    fn relations_hold_on_cubes() {
        let m = tensor_power_module(2, 3, &Budget::default()).unwrap();
        assert!(m.satisfies_relations());
    }

    #[test]
    fn budget_is_enforced() {
        let err = tensor_power_module(10, 5, &Budget::with_ambient(1000)).unwrap_err();
        assert!(matches!(err, Error::SizeBudgetExceeded { .. }));
    }
}
