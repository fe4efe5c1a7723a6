use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{bi_inner_product, inner_product, irreducible_character, BiClassFunction, CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::partitions::{specht_dimension, Partition};

pub type Multiplicity = i64;

/// Whether negative multiplicities are an error (genuine representation) or
/// allowed (virtual character, e.g. an Euler characteristic).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecomposeMode {
    Genuine,
    Virtual,
}

/// Irreducible keys with nonzero multiplicities, in canonical key order.
#[derive(Clone, PartialEq, Eq)]
pub struct IrredDecomposition<K: Ord> {
    terms: BTreeMap<K, Multiplicity>,
}

impl<K: Ord> Default for IrredDecomposition<K> {
    fn default() -> Self {
        IrredDecomposition {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> IrredDecomposition<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Drops zero multiplicities.
    pub fn from_terms<I: IntoIterator<Item = (K, Multiplicity)>>(terms: I) -> Self {
        let mut out = Self::new();
        for (k, m) in terms {
            out.add(k, m);
        }
        out
    }

    pub fn add(&mut self, key: K, mult: Multiplicity) {
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn get(&self, key: &K) -> Multiplicity {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, Multiplicity)> {
        self.terms.iter().map(|(k, m)| (k, *m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_genuine(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    /// `Σ mult · dim(key)` for a caller-supplied dimension function.
    pub fn total_dimension<F: Fn(&K) -> i128>(&self, dim: F) -> i128 {
        self.terms.iter().map(|(k, &m)| m as i128 * dim(k)).sum()
    }
}

impl IrredDecomposition<Partition> {
    /// Reassembles `Σ m_λ χ^λ`.
    pub fn character(&self, degree: usize) -> ClassFunction {
        let mut out = ClassFunction::zero(degree);
        for (lambda, m) in self.iter() {
            let chi = irreducible_character(lambda).scale(&q(m));
            out = out.add(&chi).expect("keys have the requested degree");
        }
        out
    }

    pub fn specht_total(&self) -> i128 {
        self.total_dimension(|l| specht_dimension(l) as i128)
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for IrredDecomposition<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct Term<K> {
    key: K,
    multiplicity: Multiplicity,
}

impl<K: Ord + Clone + Serialize> Serialize for IrredDecomposition<K> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<Term<&K>> = self
            .terms
            .iter()
            .map(|(k, &m)| Term { key: k, multiplicity: m })
            .collect();
        terms.serialize(s)
    }
}

impl<'de, K: Ord + Clone + Deserialize<'de>> Deserialize<'de> for IrredDecomposition<K> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<Term<K>> = Vec::deserialize(d)?;
        if terms.iter().any(|t| t.multiplicity == 0) {
            return Err(serde::de::Error::custom("zero multiplicity in decomposition"));
        }
        Ok(IrredDecomposition::from_terms(
            terms.into_iter().map(|t| (t.key, t.multiplicity)),
        ))
    }
}

fn to_multiplicity(key: String, value: &Q, mode: DecomposeMode) -> Result<Multiplicity> {
    if !value.is_integer() {
        return Err(Error::NonIntegralMultiplicity {
            key,
            value: value.to_string(),
        });
    }
    if mode == DecomposeMode::Genuine && value.is_negative() {
        return Err(Error::NegativeMultiplicity {
            key,
            value: value.to_string(),
        });
    }
    value
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::InvalidArgs(format!("multiplicity {value} does not fit in i64")))
}

/// `m_λ = ⟨f, χ^λ⟩` for every `λ ⊢ r`.
pub fn decompose(f: &ClassFunction, mode: DecomposeMode) -> Result<IrredDecomposition<Partition>> {
    let table = CharacterTable::new(f.degree());
    let mut out = IrredDecomposition::new();
    for (lambda, chi) in table.rows() {
        let m = inner_product(f, chi)?;
        if !m.is_zero() {
            out.add(lambda.clone(), to_multiplicity(format!("{lambda:?}"), &m, mode)?);
        }
    }
    Ok(out)
}

/// `m_{λ,μ} = ⟨f, χ^λ ⊠ χ^μ⟩`.
pub fn decompose_bi(
    f: &BiClassFunction,
    mode: DecomposeMode,
) -> Result<IrredDecomposition<(Partition, Partition)>> {
    let (p, qq) = f.degrees();
    let left = CharacterTable::new(p);
    let right = CharacterTable::new(qq);
    let mut out = IrredDecomposition::new();
    for (lambda, chi) in left.rows() {
        for (mu, psi) in right.rows() {
            let m = bi_inner_product(f, &chi.outer(psi))?;
            if !m.is_zero() {
                let key = (lambda.clone(), mu.clone());
                out.add(key, to_multiplicity(format!("{lambda:?}⊠{mu:?}"), &m, mode)?);
            }
        }
    }
    Ok(out)
}

impl IrredDecomposition<(Partition, Partition)> {
    pub fn bicharacter(&self, p: usize, qq: usize) -> BiClassFunction {
        let mut out = BiClassFunction::zero(p, qq);
        for ((l, m), mult) in self.iter() {
            let term = irreducible_character(l)
                .outer(&irreducible_character(m))
                .map(|_, _, v| v * q(mult));
            out = out.add(&term).expect("keys have the requested degrees");
        }
        out
    }

    pub fn specht_total(&self) -> i128 {
        self.total_dimension(|(l, m)| specht_dimension(l) as i128 * specht_dimension(m) as i128)
    }
}
