//! The weight-`p` piece of `F_W(V) = Sym^•(⊕_i W_i ⊗ Sym^i V)` with
//! `W_i = Q Ω_i`, in its monomial basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::{Label, LabelAlphabet};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg::{q, sparse_from_pairs, ExactMatrix, SparseVec};
use crate::modules::{ExplicitModule, WeightGraded};
use crate::perm::Permutation;

/// Generator `[ω; e^m]` with `ω ∈ Ω_{|m|}` and `m` an exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub label: Label,
    pub exponents: Vec<u8>,
}

impl Symbol {
    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.label)?;
        for (i, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "e{}", i + 1)?,
                _ => write!(f, "e{}^{e}", i + 1)?,
            }
        }
        write!(f, "]")
    }
}

/// Commutative product of symbols, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<Symbol>);

impl Monomial {
    pub fn new(mut symbols: Vec<Symbol>) -> Self {
        symbols.sort_unstable();
        Monomial(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(Symbol::degree).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct FWGradedPiece {
    p: usize,
    d: usize,
    alphabet: LabelAlphabet,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    weights: Vec<Vec<i64>>,
}

fn exponent_vectors(d: usize, total: usize) -> Vec<Vec<u8>> {
    if d == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in exponent_vectors(d - 1, total - first) {
            rest.insert(0, first as u8);
            out.push(rest);
        }
    }
    out
}

/// Weight-`p` piece for the standard alphabet with `q` numeric labels.
pub fn build_fw_piece(p: usize, qq: usize, d: usize, budget: &Budget) -> Result<FWGradedPiece> {
    FWGradedPiece::new(p, &LabelAlphabet::standard(qq), d, budget)
}

impl FWGradedPiece {
    pub fn new(p: usize, alphabet: &LabelAlphabet, d: usize, budget: &Budget) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgs("F_W(V) needs dim V ≥ 1".into()));
        }
        let mut symbols = Vec::new();
        for i in 1..=p {
            for &label in alphabet.alphabet(i) {
                for exponents in exponent_vectors(d, i) {
                    symbols.push(Symbol { label, exponents });
                }
            }
        }
        symbols.sort_unstable();

        let mut basis = Vec::new();
        let mut cur: Vec<Symbol> = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn rec(
            start: usize,
            remaining: usize,
            symbols: &[Symbol],
            cur: &mut Vec<Symbol>,
            out: &mut Vec<Monomial>,
            budget: &Budget,
            p: usize,
        ) -> Result<()> {
            if remaining == 0 {
                out.push(Monomial(cur.clone()));
                return budget.check_ambient(&format!("F_W(V) in weight {p}"), out.len());
            }
            for k in start..symbols.len() {
                let deg = symbols[k].degree();
                if deg <= remaining {
                    cur.push(symbols[k].clone());
                    rec(k, remaining - deg, symbols, cur, out, budget, p)?;
                    cur.pop();
                }
            }
            Ok(())
        }
        rec(0, p, &symbols, &mut cur, &mut basis, budget, p)?;

        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let weights = basis
            .iter()
            .map(|m| {
                let mut w = vec![0i64; d];
                for s in m.symbols() {
                    for (k, &e) in s.exponents.iter().enumerate() {
                        w[k] += e as i64;
                    }
                }
                w
            })
            .collect();
        Ok(FWGradedPiece {
            p,
            d,
            alphabet: alphabet.clone(),
            basis,
            index,
            weights,
        })
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn alphabet(&self) -> &LabelAlphabet {
        &self.alphabet
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn weight(&self, idx: usize) -> &[i64] {
        &self.weights[idx]
    }

    /// `E_ab` acting as a derivation on basis monomial `idx`.
    pub fn apply_gl(&self, a: usize, b: usize, idx: usize) -> SparseVec {
        let m = &self.basis[idx].0;
        let mut terms = Vec::new();
        for (k, s) in m.iter().enumerate() {
            let eb = s.exponents[b];
            if eb == 0 {
                continue;
            }
            let mut t = s.clone();
            t.exponents[b] -= 1;
            t.exponents[a] += 1;
            let mut syms = m.clone();
            syms[k] = t;
            let target = self.index[&Monomial::new(syms)];
            terms.push((target, q(eb as i64)));
        }
        sparse_from_pairs(terms)
    }

    pub fn gl_matrix(&self, a: usize, b: usize) -> ExactMatrix {
        let n = self.dimension();
        let entries = (0..n).flat_map(|col| {
            self.apply_gl(a, b, col)
                .into_iter()
                .map(move |(row, x)| (row, col, x))
        });
        ExactMatrix::from_triplets(n, n, entries.collect::<Vec<_>>())
    }

    /// The piece as an explicit `gl_d`-module (all `d^2` generator matrices).
    pub fn to_module(&self) -> Result<ExplicitModule> {
        let mut gl = Vec::with_capacity(self.d * self.d);
        for a in 0..self.d {
            for b in 0..self.d {
                gl.push(self.gl_matrix(a, b));
            }
        }
        Ok(ExplicitModule::new(self.dimension(), Vec::new(), self.d, gl)?.with_grading(self.p as i64))
    }

    /// Basis index of `τ` applied to the labels of monomial `idx`.
    pub fn label_action(&self, tau: &Permutation, idx: usize) -> usize {
        let syms = self.basis[idx]
            .0
            .iter()
            .map(|s| Symbol {
                label: s.label.act(tau),
                exponents: s.exponents.clone(),
            })
            .collect();
        self.index[&Monomial::new(syms)]
    }

    /// Trace of `τ` on every weight space: the number of fixed monomials.
    pub fn label_traces(&self, tau: &Permutation) -> BTreeMap<Vec<i64>, u64> {
        let mut out = BTreeMap::new();
        for idx in 0..self.dimension() {
            let e = out.entry(self.weights[idx].clone()).or_insert(0);
            if self.label_action(tau, idx) == idx {
                *e += 1;
            }
        }
        out
    }
}

impl WeightGraded for FWGradedPiece {
    fn dim(&self) -> usize {
        self.dimension()
    }

    fn gl_rank(&self) -> usize {
        self.d
    }

    fn weight_of(&self, idx: usize) -> Vec<i64> {
        self.weights[idx].clone()
    }

    fn raise(&self, k: usize, idx: usize) -> SparseVec {
        self.apply_gl(k, k + 1, idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Q;
    use num_traits::One;

    #[test]
    fn dimensions() {
        let b = Budget::default();
        assert_eq!(build_fw_piece(0, 2, 2, &b).unwrap().dimension(), 1);
        assert_eq!(build_fw_piece(1, 0, 2, &b).unwrap().dimension(), 2);
        assert_eq!(build_fw_piece(2, 1, 2, &b).unwrap().dimension(), 13);
    }

    #[test]
    fn gl_relations_hold() {
        let b = Budget::default();
        let m = build_fw_piece(2, 1, 2, &b).unwrap().to_module().unwrap();
        assert!(m.satisfies_gl_relations());
        assert_eq!(m.polynomial_degree(), Some(2));
        let m = build_fw_piece(3, 1, 2, &b).unwrap().to_module().unwrap();
        assert!(m.satisfies_gl_relations());
    }

    #[test]
    fn label_action_commutes_with_gl() {
        let piece = build_fw_piece(3, 2, 2, &Budget::default()).unwrap();
        let tau = Permutation::from_images(vec![1, 0]);
        let n = piece.dimension();
        let t = ExactMatrix::from_triplets(n, n, (0..n).map(|i| (piece.label_action(&tau, i), i, Q::one())));
        for a in 0..2 {
            for b in 0..2 {
                let e = piece.gl_matrix(a, b);
                assert_eq!(t.mul(&e), e.mul(&t));
            }
        }
    }

    #[test]
    fn budget_is_checked() {
        assert!(build_fw_piece(4, 4, 4, &Budget::with_ambient(100)).is_err());
    }
}
