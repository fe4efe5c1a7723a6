//! Irreducible characters of `Σ_r` by the Murnaghan–Nakayama rule on
//! beta-sets: removing a rim hook of length `k` moves one bead down by `k`,
//! with sign `(-1)^{beads jumped}`.

use std::collections::HashMap;

use num_traits::Zero;

use super::ClassFunction;
use crate::linalg::q;
use crate::partitions::{enumerate_partitions, Partition};

#[derive(Default)]
struct Memo {
    cache: HashMap<(Partition, Partition), i64>,
}

impl Memo {
    fn value(&mut self, lambda: &Partition, rho: &Partition) -> i64 {
        if rho.is_empty() {
            return if lambda.is_empty() { 1 } else { 0 };
        }
        if let Some(&v) = self.cache.get(&(lambda.clone(), rho.clone())) {
            return v;
        }
        let k = rho.parts()[0];
        let rest = Partition::from_unsorted(rho.parts()[1..].to_vec());
        let total = rim_hook_removals(lambda, k)
            .into_iter()
            .map(|(mu, sign)| sign * self.value(&mu, &rest))
            .sum();
        self.cache.insert((lambda.clone(), rho.clone()), total);
        total
    }
}

/// All `(λ minus a rim hook of length k, (-1)^height)`.
pub(crate) fn rim_hook_removals(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .collect();
        out.push((
            Partition::new(parts).expect("beta-set gives a partition"),
            sign,
        ));
    }
    out
}

/// `χ^λ` as a class function on `Σ_{|λ|}`.
pub fn irreducible_character(lambda: &Partition) -> ClassFunction {
    let mut memo = Memo::default();
    ClassFunction::from_fn(lambda.weight(), |rho| q(memo.value(lambda, rho)))
}

/// All irreducible characters of `Σ_r`, sharing one recursion cache.
#[derive(Clone)]
pub struct CharacterTable {
    degree: usize,
    rows: Vec<(Partition, ClassFunction)>,
}

impl CharacterTable {
    pub fn new(degree: usize) -> Self {
        let mut memo = Memo::default();
        let rows = enumerate_partitions(degree)
            .into_iter()
            .map(|lambda| {
                let chi = ClassFunction::from_fn(degree, |rho| q(memo.value(&lambda, rho)));
                (lambda, chi)
            })
            .collect();
        CharacterTable { degree, rows }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rows(&self) -> &[(Partition, ClassFunction)] {
        &self.rows
    }

    pub fn character(&self, lambda: &Partition) -> Option<&ClassFunction> {
        self.rows.iter().find(|(l, _)| l == lambda).map(|(_, c)| c)
    }

    /// Integer table, rows and columns in canonical partition order.
    pub fn integer_rows(&self) -> Vec<(Partition, Vec<i64>)> {
        self.rows
            .iter()
            .map(|(l, chi)| {
                let vals = chi
                    .values()
                    .values()
                    .map(|v| {
                        debug_assert!(v.is_integer());
                        let n = v.to_integer();
                        if n.is_zero() {
                            0
                        } else {
                            i64::try_from(n).expect("character value fits i64")
                        }
                    })
                    .collect();
                (l.clone(), vals)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::specht_dimension;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn character_of_21() {
        let chi = irreducible_character(&p("2,1"));
        assert_eq!(chi.get(&p("1,1,1")), &q(2));
        assert_eq!(chi.get(&p("2,1")), &q(0));
        assert_eq!(chi.get(&p("3")), &q(-1));
    }

    #[test]
    fn trivial_and_sign() {
        for r in 1..=6 {
            assert_eq!(irreducible_character(&Partition::row(r)), ClassFunction::trivial(r));
            assert_eq!(irreducible_character(&Partition::column(r)), ClassFunction::sign(r));
        }
    }

    #[test]
    fn identity_value_is_specht_dimension() {
        for lambda in enumerate_partitions(7) {
            let chi = irreducible_character(&lambda);
            assert_eq!(chi.at_identity(), &q(specht_dimension(&lambda) as i64));
        }
    }

    #[test]
    fn table_matches_single_characters() {
        let t = CharacterTable::new(5);
        for (l, chi) in t.rows() {
            assert_eq!(chi, &irreducible_character(l));
        }
    }
}
