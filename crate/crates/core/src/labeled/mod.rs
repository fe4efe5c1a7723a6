//! Labeled set partitions of `{1..p}` and the algebra `F_W(V)`.
//!
//! Two kinds of labeling appear:
//! - [`GeneralLabeledPartition`]: every part of size `i` carries a label from
//!   an alphabet `Ω_i`, and labels may repeat (the set `𝒫_p(Ω)`);
//! - [`QLabeledPartition`]: a set `I` of numeric labels is placed injectively
//!   on distinct parts, the other parts stay unlabeled (`𝒫_{p,I}`, and
//!   `𝒫_{p,q}` for `I = {1..q}`).
//!
//! [`splitting_map`] turns the second kind into the first.

mod bichar;
mod fw;
mod hom;
mod text;
mod verify;

use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use bichar::{
    count_fixed, enumerate_split_union, fixed_point_bicharacter, permutation_bicharacter, BicharacterSource,
    LabeledAction,
};
pub use fw::{build_fw_piece, FWGradedPiece, Monomial, Symbol};
pub use hom::{
    hom_bicharacter, hom_space_dimension_gl, hom_space_dimension_literal, phi_matrix, HomDimension,
};
pub use verify::{verify_rw_prop, verify_splitting_lemma};

/// Set partition of `{0..p-1}` in canonical form: each part sorted, parts
/// ordered by their minimum. Displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    size: usize,
    parts: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates that `parts` cover `0..size` disjointly, then canonicalizes.
    pub fn new(size: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; size];
        for part in &parts {
            if part.is_empty() {
                return Err(Error::Parse("empty part".into()));
            }
            for &x in part {
                if x >= size || seen[x] {
                    return Err(Error::Parse(format!("element {} repeated or out of range", x + 1)));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Parse("parts do not cover the whole set".into()));
        }
        Ok(Self::canonical(size, parts))
    }

    fn canonical(size: usize, mut parts: Vec<Vec<usize>>) -> Self {
        for part in parts.iter_mut() {
            part.sort_unstable();
        }
        parts.sort_unstable_by_key(|p| p[0]);
        SetPartition { size, parts }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Image under `σ`, together with where each old part went.
    fn permuted(&self, sigma: &Permutation) -> (SetPartition, Vec<usize>) {
        let mut moved: Vec<(Vec<usize>, usize)> = self
            .parts
            .iter()
            .enumerate()
            .map(|(k, part)| {
                let mut image: Vec<usize> = part.iter().map(|&x| sigma.apply(x)).collect();
                image.sort_unstable();
                (image, k)
            })
            .collect();
        moved.sort_unstable_by_key(|(p, _)| p[0]);
        let mut position = vec![0; self.parts.len()];
        for (new_pos, (_, old)) in moved.iter().enumerate() {
            position[*old] = new_pos;
        }
        let parts = moved.into_iter().map(|(p, _)| p).collect();
        (SetPartition { size: self.size, parts }, position)
    }

    pub fn act(&self, sigma: &Permutation) -> SetPartition {
        self.permuted(sigma).0
    }
}

/// All set partitions of `{0..p-1}`, by restricted growth strings.
pub fn enumerate_set_partitions(p: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(x: usize, p: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartition>) {
        if x == p {
            out.push(SetPartition {
                size: p,
                parts: blocks.clone(),
            });
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(x);
            rec(x + 1, p, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![x]);
        rec(x + 1, p, blocks, out);
        blocks.pop();
    }
    rec(0, p, &mut blocks, &mut out);
    out
}

/// Part label: the distinguished `*` or a numeric label `1, 2, ..`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Star,
    Index(u32),
}

impl Label {
    /// `τ` permutes numeric labels (0-based permutation of `1..q`).
    pub fn act(self, tau: &Permutation) -> Label {
        match self {
            Label::Star => Label::Star,
            Label::Index(k) => Label::Index(tau.apply(k as usize - 1) as u32 + 1),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Star => write!(f, "*"),
            Label::Index(k) => write!(f, "{k}"),
        }
    }
}

impl std::str::FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "*" => Ok(Label::Star),
            t => match t.parse::<u32>() {
                Ok(k) if k >= 1 => Ok(Label::Index(k)),
                _ => Err(Error::Parse(format!("bad label {t:?}"))),
            },
        }
    }
}

/// Finite alphabets `Ω_i` for parts of size `i`. Sizes without an explicit
/// alphabet use `rest`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelAlphabet {
    by_size: Vec<Vec<Label>>,
    rest: Vec<Label>,
}

impl LabelAlphabet {
    /// `Ω_1 = {*} ⊔ {1..q}`, `Ω_i = {*}` for `i ≥ 2`.
    pub fn standard(q: usize) -> Self {
        let mut omega1 = vec![Label::Star];
        omega1.extend((1..=q as u32).map(Label::Index));
        LabelAlphabet {
            by_size: vec![Vec::new(), omega1],
            rest: vec![Label::Star],
        }
    }

    /// `by_size[i]` is `Ω_i` (index 0 is ignored); larger sizes use `rest`.
    pub fn new(by_size: Vec<Vec<Label>>, rest: Vec<Label>) -> Self {
        let clean = |mut v: Vec<Label>| {
            v.sort_unstable();
            v.dedup();
            v
        };
        LabelAlphabet {
            by_size: by_size.into_iter().map(clean).collect(),
            rest: clean(rest),
        }
    }

    pub fn alphabet(&self, size: usize) -> &[Label] {
        self.by_size
            .get(size)
            .filter(|_| size > 0)
            .unwrap_or(&self.rest)
    }

    /// Largest numeric label, i.e. the degree of the symmetric group that
    /// permutes labels.
    pub fn label_degree(&self) -> usize {
        self.by_size
            .iter()
            .flatten()
            .chain(&self.rest)
            .filter_map(|l| match l {
                Label::Index(k) => Some(*k as usize),
                Label::Star => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Whether `τ ∈ Σ_q` maps every alphabet to itself.
    pub fn is_stable_under(&self, tau: &Permutation) -> bool {
        let stable = |a: &[Label]| {
            let mut img: Vec<Label> = a.iter().map(|l| l.act(tau)).collect();
            img.sort_unstable();
            img == a
        };
        self.by_size.iter().all(|a| stable(a)) && stable(&self.rest)
    }
}

/// Element of `𝒫_p(Ω)`: a set partition whose `k`-th part carries `labels[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralLabeledPartition {
    base: SetPartition,
    labels: Vec<Label>,
}

impl GeneralLabeledPartition {
    /// Checks each label against the alphabet of its part size.
    pub fn new(base: SetPartition, labels: Vec<Label>, alphabet: &LabelAlphabet) -> Result<Self> {
        let x = Self::unchecked(base, labels)?;
        for (part, l) in x.base.parts.iter().zip(&x.labels) {
            if !alphabet.alphabet(part.len()).contains(l) {
                return Err(Error::InvalidArgs(format!(
                    "label {l} not allowed on a part of size {}",
                    part.len()
                )));
            }
        }
        Ok(x)
    }

    /// Labels aligned with `base.parts()`, without alphabet checks.
    pub fn unchecked(base: SetPartition, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != base.num_parts() {
            return Err(Error::InvalidArgs(format!(
                "{} labels for {} parts",
                labels.len(),
                base.num_parts()
            )));
        }
        Ok(GeneralLabeledPartition { base, labels })
    }

    pub fn base(&self) -> &SetPartition {
        &self.base
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn parts(&self) -> impl Iterator<Item = (&[usize], Label)> {
        self.base.parts.iter().map(Vec::as_slice).zip(self.labels.iter().copied())
    }

    /// `(σ, τ)` acting on elements and on numeric labels.
    pub fn act(&self, sigma: &Permutation, tau: &Permutation) -> Self {
        let (base, position) = self.base.permuted(sigma);
        let mut labels = vec![Label::Star; self.labels.len()];
        for (old, l) in self.labels.iter().enumerate() {
            labels[position[old]] = l.act(tau);
        }
        GeneralLabeledPartition { base, labels }
    }
}

/// All of `𝒫_p(Ω)`.
pub fn enumerate_general(
    p: usize,
    alphabet: &LabelAlphabet,
    budget: &Budget,
) -> Result<Vec<GeneralLabeledPartition>> {
    budget.check_enumeration(p)?;
    let mut out = Vec::new();
    for base in enumerate_set_partitions(p) {
        let choices: Vec<&[Label]> = base.parts.iter().map(|b| alphabet.alphabet(b.len())).collect();
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; choices.len()];
        loop {
            let labels = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            out.push(GeneralLabeledPartition {
                base: base.clone(),
                labels,
            });
            // odometer
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Element of `𝒫_{p,I}`: numeric labels from `I` placed on distinct parts,
/// every label of `I` used once; `labels[k]` is `None` for unlabeled parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QLabeledPartition {
    base: SetPartition,
    labels: Vec<Option<u32>>,
}

impl QLabeledPartition {
    pub fn new(base: SetPartition, labels: Vec<Option<u32>>) -> Result<Self> {
        if labels.len() != base.num_parts() {
            return Err(Error::InvalidArgs(format!(
                "{} labels for {} parts",
                labels.len(),
                base.num_parts()
            )));
        }
        let mut used: Vec<u32> = labels.iter().flatten().copied().collect();
        let n = used.len();
        used.sort_unstable();
        used.dedup();
        if used.len() != n || used.first() == Some(&0) {
            return Err(Error::InvalidArgs("labels must be distinct and positive".into()));
        }
        Ok(QLabeledPartition { base, labels })
    }

    pub fn base(&self) -> &SetPartition {
        &self.base
    }

    pub fn labels(&self) -> &[Option<u32>] {
        &self.labels
    }

    /// The label set `I`, sorted.
    pub fn label_set(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.labels.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn act(&self, sigma: &Permutation, tau: &Permutation) -> Self {
        let (base, position) = self.base.permuted(sigma);
        let mut labels = vec![None; self.labels.len()];
        for (old, l) in self.labels.iter().enumerate() {
            labels[position[old]] = l.map(|k| tau.apply(k as usize - 1) as u32 + 1);
        }
        QLabeledPartition { base, labels }
    }
}

/// `𝒫_{p,I}` for an arbitrary finite label set `I ⊂ {1, 2, ..}`.
pub fn enumerate_pi(p: usize, label_set: &[u32], budget: &Budget) -> Result<Vec<QLabeledPartition>> {
    budget.check_enumeration(p)?;
    let mut labels: Vec<u32> = label_set.to_vec();
    labels.sort_unstable();
    labels.dedup();
    if labels.contains(&0) {
        return Err(Error::InvalidArgs("labels start at 1".into()));
    }
    let k = labels.len();
    let mut out = Vec::new();
    for base in enumerate_set_partitions(p) {
        let n = base.num_parts();
        if n < k {
            continue;
        }
        // injective maps label j -> part slots[j]
        let mut slots: Vec<usize> = Vec::with_capacity(k);
        fn rec(
            n: usize,
            k: usize,
            labels: &[u32],
            base: &SetPartition,
            slots: &mut Vec<usize>,
            out: &mut Vec<QLabeledPartition>,
        ) {
            if slots.len() == k {
                let mut assigned = vec![None; n];
                for (j, &s) in slots.iter().enumerate() {
                    assigned[s] = Some(labels[j]);
                }
                out.push(QLabeledPartition {
                    base: base.clone(),
                    labels: assigned,
                });
                return;
            }
            for s in 0..n {
                if !slots.contains(&s) {
                    slots.push(s);
                    rec(n, k, labels, base, slots, out);
                    slots.pop();
                }
            }
        }
        rec(n, k, &labels, &base, &mut slots, &mut out);
    }
    Ok(out)
}

/// `𝒫_{p,q}`: partitions with at least `q` parts, `q` of them labeled `1..q`.
pub fn enumerate_pq(p: usize, q: usize, budget: &Budget) -> Result<Vec<QLabeledPartition>> {
    if q > p {
        return Err(Error::InvalidArgs(format!("𝒫_{{p,q}} needs q ≤ p, got p={p}, q={q}")));
    }
    let labels: Vec<u32> = (1..=q as u32).collect();
    enumerate_pi(p, &labels, budget)
}

/// Splits each labeled part of size `i` into `i` singletons carrying the same
/// label; unlabeled parts are kept and labeled `*`.
pub fn splitting_map(x: &QLabeledPartition) -> GeneralLabeledPartition {
    let mut parts = Vec::new();
    let mut labels = Vec::new();
    for (part, l) in x.base.parts.iter().zip(&x.labels) {
        match l {
            None => {
                parts.push(part.clone());
                labels.push(Label::Star);
            }
            Some(k) => {
                for &e in part {
                    parts.push(vec![e]);
                    labels.push(Label::Index(*k));
                }
            }
        }
    }
    // re-canonicalize keeping labels attached
    let mut paired: Vec<(Vec<usize>, Label)> = parts.into_iter().zip(labels).collect();
    paired.sort_unstable_by_key(|(p, _)| p[0]);
    let (parts, labels): (Vec<_>, Vec<_>) = paired.into_iter().unzip();
    GeneralLabeledPartition {
        base: SetPartition {
            size: x.base.size,
            parts,
        },
        labels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn set_partition_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        for (p, &b) in bell.iter().enumerate() {
            assert_eq!(enumerate_set_partitions(p).len(), b);
        }
    }

    #[test]
    fn general_counts() {
        let b = Budget::default();
        assert_eq!(enumerate_general(2, &LabelAlphabet::standard(1), &b).unwrap().len(), 5);
        assert_eq!(enumerate_general(1, &LabelAlphabet::standard(0), &b).unwrap().len(), 1);
        assert_eq!(enumerate_general(3, &LabelAlphabet::standard(0), &b).unwrap().len(), 5);
    }

    #[test]
    fn pq_counts() {
        let b = Budget::default();
        assert_eq!(enumerate_pq(2, 1, &b).unwrap().len(), 3);
        assert_eq!(enumerate_pq(3, 1, &b).unwrap().len(), 10);
        assert_eq!(enumerate_pq(3, 3, &b).unwrap().len(), 6);
        assert_eq!(enumerate_pq(0, 0, &b).unwrap().len(), 1);
        assert!(matches!(enumerate_pq(1, 2, &b), Err(Error::InvalidArgs(_))));
    }

    #[test]
    fn splitting_examples() {
        let b = Budget::default();
        let xs = enumerate_pq(2, 1, &b).unwrap();
        let images: HashSet<_> = xs.iter().map(splitting_map).collect();
        assert_eq!(images.len(), 3);
        for img in &images {
            assert_eq!(img.base().num_parts(), 2);
        }
        let whole = QLabeledPartition::new(SetPartition::new(2, vec![vec![0, 1]]).unwrap(), vec![Some(1)]).unwrap();
        let split = splitting_map(&whole);
        assert_eq!(split.labels(), &[Label::Index(1), Label::Index(1)]);
    }

    #[test]
    fn actions_respect_labels() {
        let x = QLabeledPartition::new(
            SetPartition::new(3, vec![vec![0], vec![1, 2]]).unwrap(),
            vec![Some(1), Some(2)],
        )
        .unwrap();
        let sigma = Permutation::from_images(vec![2, 1, 0]);
        let tau = Permutation::from_images(vec![1, 0]);
        let y = x.act(&sigma, &tau);
        assert_eq!(y.base().parts(), &[vec![0, 1], vec![2]]);
        assert_eq!(y.labels(), &[Some(1), Some(2)]);
    }

    #[test]
    fn alphabet_lookup() {
        let a = LabelAlphabet::standard(2);
        assert_eq!(a.alphabet(1).len(), 3);
        assert_eq!(a.alphabet(2), &[Label::Star]);
        assert_eq!(a.alphabet(7), &[Label::Star]);
        assert_eq!(a.label_degree(), 2);
    }
}
