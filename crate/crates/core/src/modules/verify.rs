use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};

use super::{decompose_graded_traces, tensor_power_module, weight_multiset};
use crate::budget::Budget;
use crate::characters::{irreducible_character, lr_coefficient, ClassFunction};
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::partitions::{
    binomial, enumerate_partitions, schur_gl_dimension, schur_weights, ssyt_weights, Partition,
    SkewShape,
};
use crate::perm::Permutation;
use crate::report::{Report, Witness};

type BiWeights = BTreeMap<(Vec<i64>, Vec<i64>), u64>;

fn render_biweights(w: &BiWeights) -> String {
    let terms: Vec<String> = w
        .iter()
        .map(|((a, b), m)| format!("{m}x({a:?};{b:?})"))
        .collect();
    format!("{{{}}}", terms.join(", "))
}

/// `Λ^r(V ⊗ W) ≅ ⊕_{|λ|=r} S_λ(V) ⊗ S_{λ^T}(W)`, compared through dimensions
/// and through the full `GL(V) × GL(W)` weight multisets.
pub fn verify_cauchy(r: usize, dv: usize, dw: usize, budget: &Budget) -> Result<Report> {
    if dv == 0 || dw == 0 {
        return Err(Error::InvalidArgs("dimensions must be positive".into()));
    }
    let n = dv * dw;
    let left_dim = binomial(n as u128, r as u128);
    budget.check_ambient(
        &format!("Λ^{r}(Q^{dv} ⊗ Q^{dw})"),
        left_dim.to_usize().unwrap_or(usize::MAX),
    )?;

    // Left: one weight per r-subset of the basis e_a ⊗ f_b.
    let mut left = BiWeights::new();
    let mut subset: Vec<usize> = Vec::with_capacity(r);
    fn walk(start: usize, n: usize, r: usize, dv: usize, dw: usize, cur: &mut Vec<usize>, out: &mut BiWeights) {
        if cur.len() == r {
            let mut a = vec![0i64; dv];
            let mut b = vec![0i64; dw];
            for &x in cur.iter() {
                a[x / dw] += 1;
                b[x % dw] += 1;
            }
            *out.entry((a, b)).or_insert(0) += 1;
            return;
        }
        for x in start..n {
            if n - x < r - cur.len() {
                break;
            }
            cur.push(x);
            walk(x + 1, n, r, dv, dw, cur, out);
            cur.pop();
        }
    }
    walk(0, n, r, dv, dw, &mut subset, &mut left);

    let mut right = BiWeights::new();
    let mut right_dim: u128 = 0;
    for lambda in enumerate_partitions(r) {
        let a = schur_weights(&lambda, dv);
        let b = schur_weights(&lambda.transpose(), dw);
        right_dim += schur_gl_dimension(&lambda, dv) as u128 * schur_gl_dimension(&lambda.transpose(), dw) as u128;
        for (wa, ma) in &a {
            for (wb, mb) in &b {
                *right.entry((wa.clone(), wb.clone())).or_insert(0) += ma * mb;
            }
        }
    }

    let witnesses = vec![
        Witness::compare("dimension", left_dim, right_dim),
        Witness::check(
            "bi-weight multiset",
            left == right,
            render_biweights(&left),
            render_biweights(&right),
        ),
    ];
    Ok(Report::new(
        format!("Λ^{r}(Q^{dv}⊗Q^{dw}) = ⊕_λ S_λ(Q^{dv})⊗S_λT(Q^{dw})"),
        format!("C({n},{r}) = {left_dim}"),
        format!("Σ_λ s_λ({dv})·s_λT({dw}) = {right_dim}"),
        witnesses,
    ))
}

/// `V^{⊗r} ≅ ⊕_λ S_λ(V) ⊗ S^λ`: for each cycle type and each torus weight,
/// the trace of the permutation on that weight space of the explicit tensor
/// module equals `Σ_λ K_{λ,μ} χ^λ(ρ)`.
pub fn verify_schur_weyl(r: usize, d: usize, budget: &Budget) -> Result<Report> {
    let m = tensor_power_module(d, r, budget)?;
    let weights = weight_multiset(&m)?;
    let basis_weights: Vec<Vec<i64>> = (0..m.dimension())
        .map(|i| {
            (0..d)
                .map(|k| m.gl_generator(k, k).get(i, i).to_integer().to_i64().unwrap())
                .collect()
        })
        .collect();

    // Weight space μ ↦ class function ρ ↦ trace.
    let mut traces: BTreeMap<Vec<i64>, ClassFunction> = BTreeMap::new();
    let classes = enumerate_partitions(r);
    let mut per_weight: BTreeMap<Vec<i64>, BTreeMap<Partition, Q>> = BTreeMap::new();
    for rho in &classes {
        let mat = m.permutation_matrix(&Permutation::from_cycle_type(rho));
        for (i, w) in basis_weights.iter().enumerate() {
            let e = per_weight.entry(w.clone()).or_default().entry(rho.clone()).or_insert_with(Q::zero);
            *e += mat.get(i, i);
        }
    }
    for (w, vals) in per_weight {
        traces.insert(w, ClassFunction::from_fn(r, |rho| vals[rho].clone()));
    }

    let mut expected: BTreeMap<Vec<i64>, ClassFunction> = BTreeMap::new();
    for lambda in &classes {
        let chi = irreducible_character(lambda);
        for (w, k) in schur_weights(lambda, d) {
            let cur = expected.remove(&w).unwrap_or_else(|| ClassFunction::zero(r));
            expected.insert(w, cur.add(&chi.scale(&q(k as i64)))?);
        }
    }

    let mut witnesses = Vec::new();
    for (w, f) in &traces {
        let g = expected.get(w).cloned().unwrap_or_else(|| ClassFunction::zero(r));
        witnesses.push(Witness::check(
            format!("weight {w:?}"),
            f == &g,
            format!("{:?}", f.values().values().map(ToString::to_string).collect::<Vec<_>>()),
            format!("{:?}", g.values().values().map(ToString::to_string).collect::<Vec<_>>()),
        ));
    }
    let missing = expected.keys().filter(|w| !traces.contains_key(*w)).count();
    witnesses.push(Witness::compare("weights only on the right", 0, missing));

    // Multiplicity spaces recovered from the traces must be the Specht characters.
    let recovered = decompose_graded_traces(&traces, d)?;
    let mut recovered_ok = true;
    let mut parts = Vec::new();
    for lambda in &classes {
        let want = if lambda.len() <= d {
            Some(irreducible_character(lambda))
        } else {
            None
        };
        let got = recovered.get(lambda);
        recovered_ok &= got == want.as_ref();
        if want.is_some() {
            parts.push(format!("S_{lambda:?}⊠S^{lambda:?}"));
        }
    }
    recovered_ok &= recovered.keys().all(|l| l.len() <= d && l.weight() == r);
    witnesses.push(Witness::check(
        "multiplicity spaces",
        recovered_ok,
        format!("{} summands recovered", recovered.len()),
        parts.join(" + "),
    ));

    let total: u64 = weights.values().sum();
    let right_dim: u64 = classes
        .iter()
        .map(|l| schur_gl_dimension(l, d) * crate::partitions::specht_dimension(l))
        .sum();
    witnesses.push(Witness::compare("dimension", total, right_dim));

    Ok(Report::new(
        format!("(Q^{d})^⊗{r} = ⊕_λ S_λ(Q^{d}) ⊗ S^λ"),
        format!("{d}^{r} = {total}"),
        format!("Σ_λ s_λ({d})·f^λ = {right_dim}"),
        witnesses,
    ))
}

fn skew_dim(lambda: &Partition, mu: &Partition, d: usize) -> i128 {
    enumerate_partitions(lambda.weight() - mu.weight())
        .iter()
        .map(|nu| lr_coefficient(lambda, mu, nu) as i128 * schur_gl_dimension(nu, d) as i128)
        .sum()
}

/// Dimension-level shadows of the Schur functor of a split extension
/// `0 → C → A ⊕ C → A → 0`:
/// (i) `dim S_λ(A ⊕ C) = Σ_{μ⊆λ} dim S_{λ/μ}(A) · dim S_μ(C)`;
/// (ii) `dim S_λ(A) = Σ_{μ⊆λ} (-1)^{|μ|} dim S_{λ/μ}(A ⊕ C) · dim S_{μ^T}(C)`,
/// with `dim S_{λ/μ}` expanded through Littlewood–Richardson coefficients.
pub fn split_extension_filtration_check(lambda: &Partition, da: usize, dc: usize) -> Result<Report> {
    if da == 0 || dc == 0 {
        return Err(Error::InvalidArgs("dimensions must be positive".into()));
    }
    let db = da + dc;
    let subs = lambda.subpartitions();

    let left_i = schur_gl_dimension(lambda, db) as i128;
    let right_i: i128 = subs
        .iter()
        .map(|mu| skew_dim(lambda, mu, da) * schur_gl_dimension(mu, dc) as i128)
        .sum();

    let left_ii = schur_gl_dimension(lambda, da) as i128;
    let right_ii: i128 = subs
        .iter()
        .map(|mu| {
            let sign = if mu.weight() % 2 == 0 { 1 } else { -1 };
            sign * skew_dim(lambda, mu, db) * schur_gl_dimension(&mu.transpose(), dc) as i128
        })
        .sum();

    // LR expansion of each graded piece against a direct tableau count.
    let mut lr_ok = true;
    for mu in &subs {
        let shape = SkewShape::new(lambda.clone(), mu.clone())?;
        for d in [da, db] {
            let count: u64 = ssyt_weights(&shape, d).values().sum();
            lr_ok &= count as i128 == skew_dim(lambda, mu, d);
        }
    }

    let witnesses = vec![
        Witness::compare("(i) filtration", left_i, right_i),
        Witness::compare("(ii) Euler characteristic", left_ii, right_ii),
        Witness::check(
            "skew pieces: LR sum = tableau count",
            lr_ok,
            "Σ_ν c^λ_μν s_ν(d)",
            "#SSYT(λ/μ, d)",
        ),
    ];
    Ok(Report::new(
        format!("S_{lambda:?} of Q^{da} ⊕ Q^{dc}"),
        format!("s_λ({db}) = {left_i}, s_λ({da}) = {left_ii}"),
        format!("{right_i}, {right_ii}"),
        witnesses,
    ))
}
