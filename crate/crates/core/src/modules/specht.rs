use std::collections::HashMap;

use super::{ExplicitModule, GroupAlgebraElement, YoungSymmetrizer};
use crate::budget::Budget;
use crate::error::Result;
use crate::linalg::{sparse_from_pairs, Span, SparseVec};
use crate::partitions::Partition;
use crate::perm::Permutation;

/// `S^λ` as the left ideal `Q[Σ_r] · c_λ`, with `Σ_r` acting by left multiplication.
pub fn specht_module(lambda: &Partition, budget: &Budget) -> Result<ExplicitModule> {
    let r = lambda.weight();
    budget.check_specht(r)?;
    let perms = Permutation::all(r);
    let index: HashMap<Permutation, usize> =
        perms.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
    let gens: Vec<Permutation> = (0..r.saturating_sub(1))
        .map(|i| Permutation::adjacent(r, i))
        .collect();
    let left_mult = |s: &Permutation, v: &SparseVec| -> SparseVec {
        sparse_from_pairs(v.iter().map(|(k, x)| (index[&s.compose(&perms[*k])], x.clone())))
    };

    let c: GroupAlgebraElement = YoungSymmetrizer::for_partition(lambda).element();
    let mut span = Span::new();
    let mut queue = vec![c.to_sparse(|g| index[g])];
    while let Some(v) = queue.pop() {
        if span.insert(v.clone()) {
            queue.extend(gens.iter().map(|s| left_mult(s, &v)));
        }
    }

    let sym = gens
        .iter()
        .map(|s| {
            span.restrict(|v| left_mult(s, v))
                .expect("left ideal is closed under left multiplication")
        })
        .collect();
    ExplicitModule::new(span.dim(), sym, 0, Vec::new())
}
