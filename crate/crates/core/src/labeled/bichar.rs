use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{enumerate_general, enumerate_pi, enumerate_pq, GeneralLabeledPartition, LabelAlphabet, QLabeledPartition};
use crate::budget::Budget;
use crate::characters::BiClassFunction;
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::partitions::{enumerate_partitions, Partition};
use crate::perm::Permutation;

/// Which finite `Σ_p × Σ_q`-set to count fixed points on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BicharacterSource {
    /// `𝒫_p(Ω)` for the standard alphabet with `q` numeric labels.
    General,
    /// `𝒫_{p,q}`.
    Labeled,
    /// `⊔_{I ⊆ {1..q}} 𝒫_{p,I}`, with `Σ_q` moving between the pieces.
    SplitUnion,
}

/// Elements of a labeled-partition set that `Σ_p × Σ_q` acts on.
pub trait LabeledAction: Sized + PartialEq + Sync {
    fn act(&self, sigma: &Permutation, tau: &Permutation) -> Self;
}

impl LabeledAction for GeneralLabeledPartition {
    fn act(&self, sigma: &Permutation, tau: &Permutation) -> Self {
        GeneralLabeledPartition::act(self, sigma, tau)
    }
}

impl LabeledAction for QLabeledPartition {
    fn act(&self, sigma: &Permutation, tau: &Permutation) -> Self {
        QLabeledPartition::act(self, sigma, tau)
    }
}

pub fn count_fixed<T: LabeledAction>(items: &[T], sigma: &Permutation, tau: &Permutation) -> usize {
    items.iter().filter(|x| &x.act(sigma, tau) == *x).count()
}

/// Fixed-point counts at the canonical representatives of every class pair.
pub fn fixed_point_bicharacter<T: LabeledAction>(items: &[T], p: usize, qq: usize) -> BiClassFunction {
    let pairs: Vec<(Partition, Partition)> = enumerate_partitions(p)
        .into_iter()
        .flat_map(|s| enumerate_partitions(qq).into_iter().map(move |t| (s.clone(), t)))
        .collect();
    let values: BTreeMap<(Partition, Partition), Q> = pairs
        .into_par_iter()
        .map(|(s, t)| {
            let n = count_fixed(items, &Permutation::from_cycle_type(&s), &Permutation::from_cycle_type(&t));
            ((s, t), q(n as i64))
        })
        .collect();
    BiClassFunction::from_values(p, qq, values).expect("all class pairs present")
}

/// `⊔_{I ⊆ {1..q}} 𝒫_{p,I}`.
pub fn enumerate_split_union(p: usize, qq: usize, budget: &Budget) -> Result<Vec<QLabeledPartition>> {
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << qq) {
        let labels: Vec<u32> = (0..qq as u32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
        if labels.len() <= p {
            out.extend(enumerate_pi(p, &labels, budget)?);
        }
    }
    Ok(out)
}

/// Permutation character of `Σ_p × Σ_q` on the chosen set.
pub fn permutation_bicharacter(
    p: usize,
    qq: usize,
    source: BicharacterSource,
    budget: &Budget,
) -> Result<BiClassFunction> {
    Ok(match source {
        BicharacterSource::General => {
            let xs = enumerate_general(p, &LabelAlphabet::standard(qq), budget)?;
            fixed_point_bicharacter(&xs, p, qq)
        }
        BicharacterSource::Labeled => {
            if qq > p {
                return Err(Error::InvalidArgs(format!("𝒫_{{p,q}} needs q ≤ p, got p={p}, q={qq}")));
            }
            fixed_point_bicharacter(&enumerate_pq(p, qq, budget)?, p, qq)
        }
        BicharacterSource::SplitUnion => {
            fixed_point_bicharacter(&enumerate_split_union(p, qq, budget)?, p, qq)
        }
    })
}
