//! Class functions on `Σ_r` and `Σ_p × Σ_q`, irreducible characters,
//! induction from Young subgroups, Littlewood–Richardson coefficients and the
//! graded dimension series.

mod decomposition;
mod lr;
mod murnaghan;
mod series;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::partitions::{binomial, enumerate_partitions, factorial, Partition};
use crate::perm::Permutation;

pub use decomposition::{decompose, decompose_bi, DecomposeMode, IrredDecomposition, Multiplicity};
pub use lr::{lr_coefficient, lr_coefficient_by_characters, skew_schur_decompose};
pub use murnaghan::{irreducible_character, CharacterTable};
pub use series::{graded_sym_algebra_dimension, sym_algebra_series_coefficient};

/// Order of the centralizer of a permutation with cycle type `ρ`:
/// `z_ρ = Π_k k^{m_k} m_k!`.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    rho.multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (k, m)| {
            acc * BigInt::from(k).pow(m as u32) * BigInt::from(factorial(m))
        })
}

/// Number of permutations with cycle type `ρ`.
pub fn class_size(rho: &Partition) -> BigInt {
    BigInt::from(factorial(rho.weight())) / centralizer_order(rho)
}

/// Rational-valued function on the conjugacy classes of `Σ_r`, stored densely
/// over every cycle type.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    degree: usize,
    values: BTreeMap<Partition, Q>,
}

impl ClassFunction {
    pub fn zero(degree: usize) -> Self {
        Self::from_fn(degree, |_| Q::zero())
    }

    pub fn from_fn<F: FnMut(&Partition) -> Q>(degree: usize, mut f: F) -> Self {
        let values = enumerate_partitions(degree)
            .into_iter()
            .map(|rho| {
                let v = f(&rho);
                (rho, v)
            })
            .collect();
        ClassFunction { degree, values }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_fn(degree, |_| Q::one())
    }

    pub fn sign(degree: usize) -> Self {
        Self::from_fn(degree, |rho| q(rho.cycle_sign()))
    }

    /// Character of the regular representation `Q[Σ_r]`.
    pub fn regular(degree: usize) -> Self {
        let n = Q::from_integer(BigInt::from(factorial(degree)));
        Self::from_fn(degree, |rho| {
            if rho.parts().iter().all(|&p| p == 1) {
                n.clone()
            } else {
                Q::zero()
            }
        })
    }

    /// Permutation character of `Σ_r` acting on a finite set, given a
    /// fixed-point counter evaluated on one representative per class.
    pub fn from_fixed_points<F: FnMut(&Permutation) -> usize>(degree: usize, mut fixed: F) -> Self {
        Self::from_fn(degree, |rho| {
            q(fixed(&Permutation::from_cycle_type(rho)) as i64)
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, rho: &Partition) -> &Q {
        &self.values[rho]
    }

    pub fn values(&self) -> &BTreeMap<Partition, Q> {
        &self.values
    }

    /// Value at the identity class, i.e. the dimension for a genuine character.
    pub fn at_identity(&self) -> &Q {
        self.get(&Partition::column(self.degree))
    }

    pub fn scale(&self, s: &Q) -> Self {
        self.map(|_, v| v * s)
    }

    pub fn map<F: FnMut(&Partition, &Q) -> Q>(&self, mut f: F) -> Self {
        ClassFunction {
            degree: self.degree,
            values: self.values.iter().map(|(k, v)| (k.clone(), f(k, v))).collect(),
        }
    }

    fn zip<F: FnMut(&Q, &Q) -> Q>(&self, other: &Self, mut f: F) -> Result<Self> {
        self.check_degree(other)?;
        Ok(ClassFunction {
            degree: self.degree,
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), f(v, other.get(k))))
                .collect(),
        })
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: format!("Σ_{}", self.degree),
                right: format!("Σ_{}", other.degree),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product (character of the tensor product).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    /// Outer product on `Σ_r × Σ_s`.
    pub fn outer(&self, other: &Self) -> BiClassFunction {
        BiClassFunction::from_fn(self.degree, other.degree, |a, b| self.get(a) * other.get(b))
    }

    /// Restriction to the Young subgroup `Σ_i × Σ_{r-i}`.
    pub fn restrict(&self, i: usize) -> Result<BiClassFunction> {
        if i > self.degree {
            return Err(Error::InvalidArgs(format!(
                "cannot restrict Σ_{} to Σ_{i} × Σ_{}",
                self.degree,
                self.degree as isize - i as isize
            )));
        }
        Ok(BiClassFunction::from_fn(i, self.degree - i, |a, b| {
            self.get(&a.union(b)).clone()
        }))
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassFunction(Σ_{})", self.degree)?;
        f.debug_map().entries(self.values.iter().map(|(k, v)| (k, v.to_string()))).finish()
    }
}

/// `(1/r!) Σ_ρ |class ρ| a(ρ) b(ρ)`.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Q> {
    a.check_degree(b)?;
    let total: Q = a
        .values
        .iter()
        .map(|(rho, x)| Q::from_integer(class_size(rho)) * x * b.get(rho))
        .sum();
    Ok(total / Q::from_integer(BigInt::from(factorial(a.degree))))
}

/// Class function on `Σ_p × Σ_q`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiClassFunction {
    degrees: (usize, usize),
    values: BTreeMap<(Partition, Partition), Q>,
}

impl BiClassFunction {
    pub fn from_fn<F: FnMut(&Partition, &Partition) -> Q>(p: usize, q: usize, mut f: F) -> Self {
        let left = enumerate_partitions(p);
        let right = enumerate_partitions(q);
        let mut values = BTreeMap::new();
        for a in &left {
            for b in &right {
                values.insert((a.clone(), b.clone()), f(a, b));
            }
        }
        BiClassFunction {
            degrees: (p, q),
            values,
        }
    }

    pub fn zero(p: usize, q: usize) -> Self {
        Self::from_fn(p, q, |_, _| Q::zero())
    }

    /// Builds from explicit values; every class pair must be present.
    pub fn from_values(p: usize, q: usize, values: BTreeMap<(Partition, Partition), Q>) -> Result<Self> {
        let expected = Self::zero(p, q);
        if values.len() != expected.values.len()
            || !expected.values.keys().all(|k| values.contains_key(k))
        {
            return Err(Error::InvalidArgs(format!(
                "values do not cover the class pairs of Σ_{p} × Σ_{q}"
            )));
        }
        Ok(BiClassFunction {
            degrees: (p, q),
            values,
        })
    }

    pub fn degrees(&self) -> (usize, usize) {
        self.degrees
    }

    pub fn get(&self, sigma: &Partition, tau: &Partition) -> &Q {
        &self.values[&(sigma.clone(), tau.clone())]
    }

    pub fn values(&self) -> &BTreeMap<(Partition, Partition), Q> {
        &self.values
    }

    pub fn at_identity(&self) -> &Q {
        self.get(&Partition::column(self.degrees.0), &Partition::column(self.degrees.1))
    }

    pub fn map<F: FnMut(&Partition, &Partition, &Q) -> Q>(&self, mut f: F) -> Self {
        BiClassFunction {
            degrees: self.degrees,
            values: self
                .values
                .iter()
                .map(|((a, b), v)| ((a.clone(), b.clone()), f(a, b, v)))
                .collect(),
        }
    }

    fn check_degrees(&self, other: &Self) -> Result<()> {
        if self.degrees != other.degrees {
            return Err(Error::DegreeMismatch {
                left: format!("Σ_{} × Σ_{}", self.degrees.0, self.degrees.1),
                right: format!("Σ_{} × Σ_{}", other.degrees.0, other.degrees.1),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degrees(other)?;
        Ok(self.map(|a, b, v| v + other.get(a, b)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_degrees(other)?;
        Ok(self.map(|a, b, v| v - other.get(a, b)))
    }

    /// Tensor with the sign of the first factor.
    pub fn sign_twist(&self) -> Self {
        self.map(|a, _, v| v * q(a.cycle_sign()))
    }

    /// Class pairs where the two functions differ.
    pub fn differences(&self, other: &Self) -> Vec<(Partition, Partition)> {
        if self.degrees != other.degrees {
            return vec![];
        }
        self.values
            .iter()
            .filter(|((a, b), v)| *v != other.get(a, b))
            .map(|(k, _)| k.clone())
            .collect()
    }

    /// Values as integers, if they all are.
    pub fn integer_values(&self) -> Option<BTreeMap<(Partition, Partition), i64>> {
        self.values
            .iter()
            .map(|(k, v)| {
                v.is_integer()
                    .then(|| v.to_integer().to_i64())
                    .flatten()
                    .map(|x| (k.clone(), x))
            })
            .collect()
    }
}

impl fmt::Debug for BiClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiClassFunction(Σ_{} × Σ_{})", self.degrees.0, self.degrees.1)?;
        f.debug_map()
            .entries(self.values.iter().map(|((a, b), v)| (format!("{a:?}×{b:?}"), v.to_string())))
            .finish()
    }
}

pub fn bi_inner_product(a: &BiClassFunction, b: &BiClassFunction) -> Result<Q> {
    a.check_degrees(b)?;
    let (p, qq) = a.degrees;
    let total: Q = a
        .values
        .iter()
        .map(|((s, t), x)| {
            Q::from_integer(class_size(s) * class_size(t)) * x * b.get(s, t)
        })
        .sum();
    Ok(total / Q::from_integer(BigInt::from(factorial(p) * factorial(qq))))
}

/// Pairs `(α ⊢ i, β ⊢ |ρ|-i)` with `α ∪ β = ρ`, each with the fusion weight
/// `z_ρ / (z_α z_β) = Π_k C(m_k(ρ), m_k(α))`.
pub fn young_fusion(rho: &Partition, i: usize) -> Vec<(Partition, Partition, u128)> {
    let mult: Vec<(usize, usize)> = rho.multiplicities().into_iter().collect();
    let mut out = Vec::new();

    fn rec(
        mult: &[(usize, usize)],
        k: usize,
        remaining: usize,
        alpha: &mut Vec<usize>,
        beta: &mut Vec<usize>,
        weight: u128,
        out: &mut Vec<(Partition, Partition, u128)>,
    ) {
        if k == mult.len() {
            if remaining == 0 {
                out.push((
                    Partition::from_unsorted(alpha.clone()),
                    Partition::from_unsorted(beta.clone()),
                    weight,
                ));
            }
            return;
        }
        let (part, m) = mult[k];
        for a in 0..=m {
            if a * part > remaining {
                break;
            }
            let (alen, blen) = (alpha.len(), beta.len());
            alpha.extend(std::iter::repeat(part).take(a));
            beta.extend(std::iter::repeat(part).take(m - a));
            rec(
                mult,
                k + 1,
                remaining - a * part,
                alpha,
                beta,
                weight * binomial(m as u128, a as u128),
                out,
            );
            alpha.truncate(alen);
            beta.truncate(blen);
        }
    }

    rec(&mult, 0, i, &mut Vec::new(), &mut Vec::new(), 1, &mut out);
    out
}

/// Induction from the Young subgroup `Σ_i × Σ_j` to `Σ_{i+j}`.
pub fn induce(f: &BiClassFunction) -> ClassFunction {
    let (i, j) = f.degrees;
    ClassFunction::from_fn(i + j, |rho| {
        young_fusion(rho, i)
            .into_iter()
            .map(|(a, b, w)| Q::from_integer(BigInt::from(w)) * f.get(&a, &b))
            .sum()
    })
}

/// `Ind_{Σ_p × Σ_i × Σ_{q-i}}^{Σ_p × Σ_q} (f ⊠ 1)`: induce the second factor of
/// a `Σ_p × Σ_i` class function, with `Σ_{q-i}` acting trivially.
pub fn induce_second_factor(f: &BiClassFunction, q_total: usize) -> Result<BiClassFunction> {
    let (p, i) = f.degrees;
    if i > q_total {
        return Err(Error::InvalidArgs(format!(
            "cannot induce from Σ_{i} × Σ_{} into Σ_{q_total}",
            q_total as isize - i as isize
        )));
    }
    Ok(BiClassFunction::from_fn(p, q_total, |sigma, rho| {
        young_fusion(rho, i)
            .into_iter()
            .map(|(a, _, w)| Q::from_integer(BigInt::from(w)) * f.get(sigma, &a))
            .sum()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for r in 0..=7 {
            let total: BigInt = enumerate_partitions(r).iter().map(class_size).sum();
            assert_eq!(total, BigInt::from(factorial(r)));
        }
    }

    #[test]
    fn regular_character_inner_products() {
        let reg = ClassFunction::regular(3);
        let chi = irreducible_character(&p("2,1"));
        assert_eq!(inner_product(&reg, &chi).unwrap(), q(2));
        assert!(inner_product(&reg, &ClassFunction::trivial(4)).is_err());
    }

    #[test]
    fn induce_examples() {
        let triv11 = ClassFunction::trivial(1).outer(&ClassFunction::trivial(1));
        assert_eq!(induce(&triv11), ClassFunction::regular(2));

        let triv12 = ClassFunction::trivial(1).outer(&ClassFunction::trivial(2));
        let perm3 = ClassFunction::from_fixed_points(3, |s| (0..3).filter(|&i| s.apply(i) == i).count());
        assert_eq!(induce(&triv12), perm3);
    }

    #[test]
    fn fusion_weights_match_class_sizes() {
        for rho in enumerate_partitions(6) {
            for i in 0..=6 {
                for (a, b, w) in young_fusion(&rho, i) {
                    let expect = centralizer_order(&rho) / (centralizer_order(&a) * centralizer_order(&b));
                    assert_eq!(BigInt::from(w), expect);
                }
            }
        }
    }

    #[test]
    fn restrict_rejects_oversized_split() {
        assert!(ClassFunction::trivial(2).restrict(3).is_err());
    }
}
