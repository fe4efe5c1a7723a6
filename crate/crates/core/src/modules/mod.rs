//! Explicit finite-dimensional modules with exact action matrices.
//!
//! This layer is deliberately brute force: it builds actual bases by exact
//! rank computations and serves as the oracle against which the closed-form
//! character computations are checked.

mod group_algebra;
mod schur;
mod specht;
mod tensor;
mod verify;
mod weights;

use crate::error::{Error, Result};
use num_traits::ToPrimitive;

use crate::linalg::ExactMatrix;
use crate::perm::Permutation;

pub use group_algebra::{GroupAlgebraElement, YoungSymmetrizer};
pub use schur::{schur_apply, skew_schur_apply};
pub use specht::specht_module;
pub use tensor::{tensor_power_module, TensorIndex};
pub use verify::{split_extension_filtration_check, verify_cauchy, verify_schur_weyl};
pub use weights::{
    decompose_graded_traces, decompose_weights, gl_decompose, highest_weight_dimension,
    highest_weight_multiplicities, weight_multiset, WeightGraded, WeightMultiset,
};

/// Finite-dimensional rational vector space with a `Σ_r` action (through
/// adjacent transpositions) and/or a polynomial `gl_d` action (through the
/// elementary matrices `E_ij`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitModule {
    dimension: usize,
    sym_generators: Vec<ExactMatrix>,
    gl_rank: usize,
    gl_generators: Vec<ExactMatrix>,
    grading: Option<i64>,
}

impl ExplicitModule {
    /// `gl_generators[i * gl_rank + j]` is the action of `E_ij`.
    pub fn new(
        dimension: usize,
        sym_generators: Vec<ExactMatrix>,
        gl_rank: usize,
        gl_generators: Vec<ExactMatrix>,
    ) -> Result<Self> {
        if gl_generators.len() != gl_rank * gl_rank && !gl_generators.is_empty() {
            return Err(Error::InvalidArgs(format!(
                "expected {} gl generators, got {}",
                gl_rank * gl_rank,
                gl_generators.len()
            )));
        }
        let square = |m: &ExactMatrix| m.rows() == dimension && m.cols() == dimension;
        if !sym_generators.iter().chain(&gl_generators).all(square) {
            return Err(Error::InvalidArgs(format!(
                "generator matrices must be {dimension}x{dimension}"
            )));
        }
        Ok(ExplicitModule {
            dimension,
            sym_generators,
            gl_rank: if gl_generators.is_empty() { 0 } else { gl_rank },
            gl_generators,
            grading: None,
        })
    }

    /// One-dimensional module with trivial actions.
    pub fn trivial(sym_degree: usize, gl_rank: usize) -> Self {
        let n_sym = sym_degree.saturating_sub(1);
        ExplicitModule {
            dimension: 1,
            sym_generators: vec![ExactMatrix::identity(1); n_sym],
            gl_rank,
            gl_generators: vec![ExactMatrix::zeros(1, 1); gl_rank * gl_rank],
            grading: Some(0),
        }
    }

    pub fn with_grading(mut self, degree: i64) -> Self {
        self.grading = Some(degree);
        self
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn grading(&self) -> Option<i64> {
        self.grading
    }

    pub fn sym_generators(&self) -> &[ExactMatrix] {
        &self.sym_generators
    }

    /// Degree `r` of the symmetric group acting, when a `Σ_r` action is present.
    pub fn sym_degree(&self) -> usize {
        if self.sym_generators.is_empty() {
            0
        } else {
            self.sym_generators.len() + 1
        }
    }

    pub fn gl_rank(&self) -> usize {
        self.gl_rank
    }

    pub fn gl_generators(&self) -> &[ExactMatrix] {
        &self.gl_generators
    }

    pub fn gl_generator(&self, i: usize, j: usize) -> &ExactMatrix {
        &self.gl_generators[i * self.gl_rank + j]
    }

    /// Matrix of a permutation, built as a product of the adjacent generators.
    pub fn permutation_matrix(&self, sigma: &Permutation) -> ExactMatrix {
        sigma
            .adjacent_word()
            .iter()
            .fold(ExactMatrix::identity(self.dimension), |acc, &i| {
                acc.mul(&self.sym_generators[i])
            })
    }

    /// `s_i^2 = 1`, `(s_i s_{i+1})^3 = 1`, `(s_i s_j)^2 = 1` for `|i-j| ≥ 2`.
    pub fn satisfies_coxeter_relations(&self) -> bool {
        let id = ExactMatrix::identity(self.dimension);
        let s = &self.sym_generators;
        for i in 0..s.len() {
            if s[i].mul(&s[i]) != id {
                return false;
            }
            for j in i + 1..s.len() {
                let prod = s[i].mul(&s[j]);
                let order = if j == i + 1 { 3 } else { 2 };
                let mut pow = prod.clone();
                for _ in 1..order {
                    pow = pow.mul(&prod);
                }
                if pow != id {
                    return false;
                }
            }
        }
        true
    }

    /// `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj`.
    pub fn satisfies_gl_relations(&self) -> bool {
        let d = self.gl_rank;
        let zero = ExactMatrix::zeros(self.dimension, self.dimension);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let lhs = self.gl_generator(i, j).bracket(self.gl_generator(k, l));
                        let mut rhs = zero.clone();
                        if j == k {
                            rhs = rhs.add(self.gl_generator(i, l));
                        }
                        if l == i {
                            rhs = rhs.sub(self.gl_generator(k, j));
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn actions_commute(&self) -> bool {
        self.sym_generators.iter().all(|s| {
            self.gl_generators
                .iter()
                .all(|e| s.mul(e) == e.mul(s))
        })
    }

    pub fn satisfies_relations(&self) -> bool {
        self.satisfies_coxeter_relations() && self.satisfies_gl_relations() && self.actions_commute()
    }

    /// Trace of the permutation with the given cycle type.
    pub fn character_value(&self, sigma: &Permutation) -> crate::linalg::Q {
        self.permutation_matrix(sigma).trace()
    }

    /// Direct sum of two modules with the same kinds of action.
    pub fn direct_sum(&self, other: &ExplicitModule) -> Result<ExplicitModule> {
        if self.sym_generators.len() != other.sym_generators.len() || self.gl_rank != other.gl_rank {
            return Err(Error::InvalidArgs("direct sum of incompatible modules".into()));
        }
        let n = self.dimension;
        let block = |a: &ExactMatrix, b: &ExactMatrix| {
            let entries = (0..a.rows())
                .flat_map(|i| a.row(i).iter().map(move |(j, v)| (i, *j, v.clone())))
                .chain((0..b.rows()).flat_map(|i| b.row(i).iter().map(move |(j, v)| (n + i, n + *j, v.clone()))))
                .collect::<Vec<_>>();
            ExactMatrix::from_triplets(n + b.rows(), n + b.cols(), entries)
        };
        let sym = self.sym_generators.iter().zip(&other.sym_generators).map(|(a, b)| block(a, b)).collect();
        let gl = self.gl_generators.iter().zip(&other.gl_generators).map(|(a, b)| block(a, b)).collect();
        ExplicitModule::new(n + other.dimension, sym, self.gl_rank, gl)
    }

    /// Scalar action of the Euler element `Σ_i E_ii`, if it acts by an integer scalar.
    pub fn polynomial_degree(&self) -> Option<i64> {
        let d = self.gl_rank;
        let euler = (0..d).fold(ExactMatrix::zeros(self.dimension, self.dimension), |acc, i| {
            acc.add(self.gl_generator(i, i))
        });
        if !euler.is_diagonal() {
            return None;
        }
        let first = euler.get(0, 0);
        if !first.is_integer() || (1..self.dimension).any(|i| euler.get(i, i) != first) {
            return None;
        }
        first.to_integer().to_i64()
    }
}
