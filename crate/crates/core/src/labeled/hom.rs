//! The maps `Φ_{P,l}` and the space `Hom_{GL(V)}(V^{⊗p}, F_W(V))`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{build_fw_piece, FWGradedPiece, GeneralLabeledPartition, Monomial, Symbol};
use crate::budget::Budget;
use crate::characters::{BiClassFunction, ClassFunction};
use crate::error::{Error, Result};
use crate::linalg::{q, rank_of_vectors, sparse_from_pairs, ExactMatrix, SparseVec, Q};
use crate::modules::{
    decompose_graded_traces, decompose_weights, highest_weight_multiplicities, TensorIndex,
    WeightGraded, WeightMultiset,
};
use crate::partitions::enumerate_partitions;
use crate::perm::Permutation;

/// Basis monomial `Φ_{P,l}(e_I) = Π_X [l_X; Π_{k∈X} e_{I_k}]`.
pub(crate) fn phi_image(x: &GeneralLabeledPartition, piece: &FWGradedPiece, indices: &[usize]) -> usize {
    let syms = x
        .parts()
        .map(|(part, label)| {
            let mut exponents = vec![0u8; piece.rank()];
            for &k in part {
                exponents[indices[k]] += 1;
            }
            Symbol { label, exponents }
        })
        .collect();
    piece
        .index_of(&Monomial::new(syms))
        .expect("Φ lands in the weight-p piece")
}

fn check_compatible(x: &GeneralLabeledPartition, piece: &FWGradedPiece) -> Result<()> {
    if x.base().size() != piece.degree() {
        return Err(Error::DegreeMismatch {
            left: format!("partition of {{1..{}}}", x.base().size()),
            right: format!("F_W(V) in weight {}", piece.degree()),
        });
    }
    for (part, l) in x.parts() {
        if !piece.alphabet().alphabet(part.len()).contains(&l) {
            return Err(Error::InvalidArgs(format!(
                "label {l} not in the alphabet for parts of size {}",
                part.len()
            )));
        }
    }
    Ok(())
}

/// Matrix of `Φ_{P,l}: (Q^d)^{⊗p} → F_W(V)_p` in the standard bases.
pub fn phi_matrix(x: &GeneralLabeledPartition, piece: &FWGradedPiece, budget: &Budget) -> Result<ExactMatrix> {
    check_compatible(x, piece)?;
    let t = TensorIndex::new(piece.rank(), piece.degree(), budget)?;
    let entries: Vec<_> = (0..t.dim())
        .map(|col| (phi_image(x, piece, &t.decode(col)), col, Q::one()))
        .collect();
    Ok(ExactMatrix::from_triplets(piece.dimension(), t.dim(), entries))
}

/// `dim Hom_{GL}(V^{⊗p}, F_W(V)_p)` computed twice: from highest-weight
/// spaces (joint kernels of the raising operators on both sides) and from
/// the `S_λ` decompositions of the two weight multisets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomDimension {
    pub highest_weight: usize,
    pub weight_decomposition: usize,
}

impl HomDimension {
    pub fn value(&self) -> usize {
        self.highest_weight
    }
}

fn weights_of<M: WeightGraded>(m: &M) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for i in 0..m.dim() {
        *out.entry(m.weight_of(i)).or_insert(0) += 1;
    }
    out
}

pub fn hom_space_dimension_gl(p: usize, qq: usize, d: usize, budget: &Budget) -> Result<HomDimension> {
    let t = TensorIndex::new(d, p, budget)?;
    let piece = build_fw_piece(p, qq, d, budget)?;

    let hw_a = highest_weight_multiplicities(&t);
    let hw_f = highest_weight_multiplicities(&piece);
    let highest_weight = hw_a
        .iter()
        .map(|(l, m)| m * hw_f.get(l).copied().unwrap_or(0))
        .sum();

    let dec_a = decompose_weights(&weights_of(&t), d)?;
    let dec_f = decompose_weights(&weights_of(&piece), d)?;
    let weight_decomposition = dec_a
        .iter()
        .map(|(l, m)| (m * dec_f.get(l)) as usize)
        .sum();

    if highest_weight != weight_decomposition {
        return Err(Error::OracleDisagreement(format!(
            "Hom dimension for p={p}, q={qq}, d={d}: {highest_weight} by highest weights, \
             {weight_decomposition} by weight multisets"
        )));
    }
    Ok(HomDimension {
        highest_weight,
        weight_decomposition,
    })
}

/// `dim Hom` as the solution space of the linear system "`X` preserves torus
/// weights and `E_ab X = X E_ab` for all `a ≠ b`", with one unknown per
/// weight-compatible matrix entry. Only practical for small cases.
pub fn hom_space_dimension_literal(p: usize, qq: usize, d: usize, budget: &Budget) -> Result<usize> {
    let t = TensorIndex::new(d, p, budget)?;
    let piece = build_fw_piece(p, qq, d, budget)?;
    let n_a = t.dim();
    let n_f = piece.dimension();

    let mut unknown: HashMap<(usize, usize), usize> = HashMap::new();
    for f in 0..n_f {
        for a in 0..n_a {
            if piece.weight(f) == t.weight(a).as_slice() {
                let k = unknown.len();
                unknown.insert((f, a), k);
            }
        }
    }
    budget.check_ambient("weight-preserving maps", unknown.len())?;

    // Equation (gen, f, a) is the (f, a) entry of E_F X - X E_A.
    let mut equations: HashMap<(usize, usize, usize), Vec<(usize, Q)>> = HashMap::new();
    let mut gen = 0;
    for b in 0..d {
        for c in 0..d {
            if b == c {
                continue;
            }
            // E_F X: column f' of E_F hits rows f.
            for (&(f1, a1), &k) in &unknown {
                for (f, x) in piece.apply_gl(b, c, f1) {
                    equations.entry((gen, f, a1)).or_default().push((k, x));
                }
            }
            // X E_A: E_A e_a = Σ x e_{a'}, so X[f][a'] feeds entry (f, a).
            for a in 0..n_a {
                for a1 in t.raise(b, c, a) {
                    for f in 0..n_f {
                        if let Some(&k) = unknown.get(&(f, a1)) {
                            equations.entry((gen, f, a)).or_default().push((k, -Q::one()));
                        }
                    }
                }
            }
            gen += 1;
        }
    }
    let rows: Vec<SparseVec> = equations
        .into_values()
        .map(sparse_from_pairs)
        .filter(|r| !r.is_empty())
        .collect();
    Ok(unknown.len() - rank_of_vectors(&rows))
}

/// Character of `Σ_p × Σ_q` on `Hom_{GL}(V^{⊗p}, F_W(V)_p)`, with `Σ_p`
/// permuting tensor factors and `Σ_q` permuting labels. Computed from the
/// traces of both actions on every weight space.
pub fn hom_bicharacter(p: usize, qq: usize, d: usize, budget: &Budget) -> Result<BiClassFunction> {
    let t = TensorIndex::new(d, p, budget)?;
    let piece = build_fw_piece(p, qq, d, budget)?;

    let mut a_traces: BTreeMap<Vec<i64>, BTreeMap<_, Q>> = BTreeMap::new();
    for rho in enumerate_partitions(p) {
        let sigma = Permutation::from_cycle_type(&rho);
        for idx in 0..t.dim() {
            let e = a_traces
                .entry(t.weight(idx))
                .or_default()
                .entry(rho.clone())
                .or_insert_with(Q::zero);
            if t.permute(&sigma, idx) == idx {
                *e += Q::one();
            }
        }
    }
    let a_traces: BTreeMap<Vec<i64>, ClassFunction> = a_traces
        .into_iter()
        .map(|(w, vals)| (w, ClassFunction::from_fn(p, |rho| vals[rho].clone())))
        .collect();

    let mut f_traces: BTreeMap<Vec<i64>, BTreeMap<_, Q>> = BTreeMap::new();
    for rho in enumerate_partitions(qq) {
        let tau = Permutation::from_cycle_type(&rho);
        for (w, n) in piece.label_traces(&tau) {
            f_traces.entry(w).or_default().insert(rho.clone(), q(n as i64));
        }
    }
    let f_traces: BTreeMap<Vec<i64>, ClassFunction> = f_traces
        .into_iter()
        .map(|(w, vals)| (w, ClassFunction::from_fn(qq, |rho| vals[rho].clone())))
        .collect();

    let hw_a = decompose_graded_traces(&a_traces, d)?;
    let hw_f = decompose_graded_traces(&f_traces, d)?;
    let mut out = BiClassFunction::zero(p, qq);
    for (lambda, chi_a) in &hw_a {
        if let Some(chi_f) = hw_f.get(lambda) {
            out = out.add(&chi_a.outer(chi_f))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeled::{enumerate_general, LabelAlphabet};

    #[test]
    fn hom_dimension_examples() {
        let b = Budget::default();
        assert_eq!(hom_space_dimension_gl(2, 1, 2, &b).unwrap().value(), 5);
        assert_eq!(hom_space_dimension_gl(1, 0, 1, &b).unwrap().value(), 1);
        assert_eq!(hom_space_dimension_gl(2, 0, 2, &b).unwrap().value(), 2);
    }

    #[test]
    fn literal_system_agrees() {
        let b = Budget::default();
        for (p, qq, d) in [(1, 0, 1), (2, 0, 2), (2, 1, 2), (2, 1, 1), (3, 0, 2), (3, 1, 2)] {
            let lit = hom_space_dimension_literal(p, qq, d, &b).unwrap();
            assert_eq!(lit, hom_space_dimension_gl(p, qq, d, &b).unwrap().value(), "{p} {qq} {d}");
        }
    }

    #[test]
    fn phi_examples() {
        let b = Budget::default();
        let piece = build_fw_piece(2, 1, 2, &b).unwrap();
        let x: GeneralLabeledPartition = "{1,2}:labels=*".parse().unwrap();
        let m = phi_matrix(&x, &piece, &b).unwrap();
        // e_1 ⊗ e_2 is column 1
        let row = m.columns()[1][0].0;
        assert_eq!(piece.basis()[row].to_string(), "[*;e1e2]");
        let y: GeneralLabeledPartition = "{1|2}:labels=*,1".parse().unwrap();
        let m = phi_matrix(&y, &piece, &b).unwrap();
        let row = m.columns()[1][0].0;
        assert_eq!(piece.basis()[row].to_string(), "[*;e1][1;e2]");
    }

    #[test]
    fn phi_is_equivariant() {
        let b = Budget::default();
        let piece = build_fw_piece(3, 1, 2, &b).unwrap();
        let t = TensorIndex::new(2, 3, &b).unwrap();
        for x in enumerate_general(3, &LabelAlphabet::standard(1), &b).unwrap() {
            let phi = phi_matrix(&x, &piece, &b).unwrap();
            for a in 0..2 {
                for c in 0..2 {
                    assert_eq!(phi.mul(&t.gl_matrix(a, c)), piece.gl_matrix(a, c).mul(&phi), "{x}");
                }
            }
        }
    }

    #[test]
    fn hom_bicharacter_dimension() {
        let b = Budget::default();
        let f = hom_bicharacter(2, 1, 2, &b).unwrap();
        assert_eq!(f.at_identity(), &q(5));
    }
}
