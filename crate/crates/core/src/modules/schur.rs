use super::{ExplicitModule, TensorIndex, YoungSymmetrizer};
use crate::budget::Budget;
use crate::error::Result;
use crate::linalg::{Span, SparseVec, Q};
use crate::partitions::{Partition, SkewShape};
use num_traits::One;

/// `S_λ(Q^d)` as the image of the Young symmetrizer on `(Q^d)^{⊗|λ|}`,
/// with the restricted `gl_d` action.
pub fn schur_apply(lambda: &Partition, d: usize, budget: &Budget) -> Result<ExplicitModule> {
    symmetrizer_image(&YoungSymmetrizer::for_partition(lambda), d, budget)
}

/// `S_{λ/μ}(Q^d)` as the image of the skew Young symmetrizer.
pub fn skew_schur_apply(shape: &SkewShape, d: usize, budget: &Budget) -> Result<ExplicitModule> {
    symmetrizer_image(&YoungSymmetrizer::for_skew(shape), d, budget)
}

fn symmetrizer_image(c: &YoungSymmetrizer, d: usize, budget: &Budget) -> Result<ExplicitModule> {
    let r = c.degree();
    let t = TensorIndex::new(d, r, budget)?;
    let mut span = Span::new();
    for idx in 0..t.dim() {
        let e: SparseVec = vec![(idx, Q::one())];
        let v = c.act_on_tensor(&t, &e);
        if !v.is_empty() {
            span.insert(v);
        }
    }
    let mut gl = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            gl.push(
                span.restrict(|v| t.apply_gl(i, j, v))
                    .expect("symmetrizer image is gl-stable"),
            );
        }
    }
    Ok(ExplicitModule::new(span.dim(), Vec::new(), d, gl)?.with_grading(r as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::schur_gl_dimension;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let b = Budget::default();
        assert_eq!(schur_apply(&p("1"), 3, &b).unwrap().dimension(), 3);
        assert_eq!(schur_apply(&p("1,1,1"), 2, &b).unwrap().dimension(), 0);
        let m = schur_apply(&p("2,1"), 2, &b).unwrap();
        assert_eq!(m.dimension(), 2);
        assert!(m.satisfies_gl_relations());
    }

    #[test]
    fn dimensions_match_hook_content() {
        let b = Budget::default();
        for r in 1..=3 {
            for lambda in crate::partitions::enumerate_partitions(r) {
                for d in 1..=3 {
                    let m = schur_apply(&lambda, d, &b).unwrap();
                    assert_eq!(m.dimension() as u64, schur_gl_dimension(&lambda, d), "{lambda:?} {d}");
                }
            }
        }
    }

    #[test]
    fn skew_of_two_disjoint_cells_is_tensor_square() {
        let s = SkewShape::new(p("2,1"), p("1")).unwrap();
        assert_eq!(skew_schur_apply(&s, 3, &Budget::default()).unwrap().dimension(), 9);
    }
}
