use std::fmt;

use crate::partitions::Partition;

/// Permutation of `{0, .., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Panics if `images` is not a bijection of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Permutation { images }
    }

    /// Canonical representative of a cycle type: consecutive cycles
    /// `(0 1 .. ρ_1-1)(ρ_1 ..)..`.
    pub fn from_cycle_type(cycle_type: &Partition) -> Self {
        let n = cycle_type.weight();
        let mut images = vec![0; n];
        let mut start = 0;
        for &len in cycle_type.parts() {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }

    /// Swap of `i` and `i + 1`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                i = self.images[i];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn sign(&self) -> i64 {
        self.cycle_type().cycle_sign()
    }

    /// Indices `i` such that `self = s_{i_1} ∘ s_{i_2} ∘ ...` with `s_i` the
    /// adjacent swap of `i, i+1`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble-sort the image list; each swap peels one generator off the right.
        let mut a = self.images.clone();
        let mut word = Vec::new();
        let n = a.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(1 + pass) {
                if a[i] > a[i + 1] {
                    a.swap(i, i + 1);
                    word.push(i);
                }
            }
        }
        // a = images ∘ s_{w1} ∘ s_{w2} ... = id, so images = s_{wk} ∘ ... ∘ s_{w1}.
        word.reverse();
        word
    }

    /// All permutations of `n` points in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let s: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
                format!("({})", s.join(" "))
            })
            .collect();
        if cycles.is_empty() {
            write!(f, "id{}", self.degree())
        } else {
            write!(f, "{}", cycles.concat())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_type_representatives() {
        let rho: Partition = "3,2,1".parse().unwrap();
        let s = Permutation::from_cycle_type(&rho);
        assert_eq!(s.cycle_type(), rho);
        assert_eq!(s.sign(), -1);
    }

    #[test]
    fn adjacent_word_reconstructs() {
        for s in Permutation::all(5) {
            let n = s.degree();
            let rebuilt = s
                .adjacent_word()
                .iter()
                .fold(Permutation::identity(n), |acc, &i| {
                    acc.compose(&Permutation::adjacent(n, i))
                });
            assert_eq!(rebuilt, s);
        }
    }

    #[test]
    fn all_counts_and_inverse() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        for s in Permutation::all(4) {
            assert_eq!(s.compose(&s.inverse()), Permutation::identity(4));
        }
    }
}
