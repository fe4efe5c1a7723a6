//! Littlewood–Richardson coefficients by counting LR skew tableaux, with the
//! character-theoretic route kept alongside as an independent check.

use num_traits::ToPrimitive;

use super::{induce, inner_product, irreducible_character, IrredDecomposition};
use crate::partitions::{enumerate_partitions, Partition, SkewShape};

/// `c^λ_{μ,ν}`: number of semistandard fillings of `λ/μ` with content `ν`
/// whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.weight() + nu.weight() != lambda.weight()
        || !mu.is_contained_in(lambda)
        || !nu.is_contained_in(lambda)
    {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("checked containment");
    // Reverse reading order: rows top to bottom, each row right to left.
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (mu.part(i)..lambda.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut search = LrSearch {
        shape: &shape,
        cells: &cells,
        content: nu.parts(),
        filling: vec![vec![usize::MAX; lambda.part(0)]; lambda.len()],
        used: vec![0; nu.len()],
    };
    search.count(0)
}

struct LrSearch<'a> {
    shape: &'a SkewShape,
    cells: &'a [(usize, usize)],
    content: &'a [usize],
    filling: Vec<Vec<usize>>,
    used: Vec<usize>,
}

impl LrSearch<'_> {
    fn count(&mut self, k: usize) -> u64 {
        if k == self.cells.len() {
            return 1;
        }
        let (i, j) = self.cells[k];
        // Entries are 0-based letters; the row to the right is already filled.
        let hi = if self.shape.contains_cell(i, j + 1) {
            self.filling[i][j + 1]
        } else {
            self.content.len() - 1
        };
        let lo = if i > 0 && self.shape.contains_cell(i - 1, j) {
            self.filling[i - 1][j] + 1
        } else {
            0
        };
        let mut total = 0;
        for v in lo..=hi.min(self.content.len() - 1) {
            if self.used[v] >= self.content[v] {
                continue;
            }
            if v > 0 && self.used[v] + 1 > self.used[v - 1] {
                continue;
            }
            self.used[v] += 1;
            self.filling[i][j] = v;
            total += self.count(k + 1);
            self.used[v] -= 1;
        }
        self.filling[i][j] = usize::MAX;
        total
    }
}

/// `⟨χ^λ, Ind(χ^μ ⊠ χ^ν)⟩`, the same coefficient through induced characters.
pub fn lr_coefficient_by_characters(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.weight() + nu.weight() != lambda.weight() {
        return 0;
    }
    let induced = induce(&irreducible_character(mu).outer(&irreducible_character(nu)));
    let m = inner_product(&irreducible_character(lambda), &induced).expect("degrees agree");
    assert!(m.is_integer(), "LR inner product must be integral");
    m.to_integer().to_u64().expect("LR coefficient is non-negative")
}

/// `S_{λ/μ} = ⊕_ν c^λ_{μ,ν} S_ν`.
pub fn skew_schur_decompose(shape: &SkewShape) -> IrredDecomposition<Partition> {
    IrredDecomposition::from_terms(
        enumerate_partitions(shape.size())
            .into_iter()
            .filter(|nu| nu.is_contained_in(shape.outer()))
            .map(|nu| {
                let c = lr_coefficient(shape.outer(), shape.inner(), &nu) as i64;
                (nu, c)
            }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient(&p("2,1"), &p("1"), &p("1,1")), 1);
        assert_eq!(lr_coefficient(&p("2,2"), &p("2"), &p("1")), 0);
        assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")), 2);
        for n in 0..=4 {
            for l in enumerate_partitions(n) {
                assert_eq!(lr_coefficient(&l, &l, &Partition::empty()), 1);
                assert_eq!(lr_coefficient(&l, &Partition::empty(), &l), 1);
            }
        }
    }

    #[test]
    fn skew_examples() {
        let col = |n| Partition::column(n);
        for pp in 1..=5 {
            for k in 0..=pp {
                let s = SkewShape::new(col(pp), col(k)).unwrap();
                assert_eq!(skew_schur_decompose(&s), IrredDecomposition::from_terms([(col(pp - k), 1)]));
            }
        }
        let s = SkewShape::new(p("2,1"), p("1")).unwrap();
        assert_eq!(
            skew_schur_decompose(&s),
            IrredDecomposition::from_terms([(p("2"), 1), (p("1,1"), 1)])
        );
        let straight = SkewShape::straight(p("3,1"));
        assert_eq!(skew_schur_decompose(&straight), IrredDecomposition::from_terms([(p("3,1"), 1)]));
    }
}
