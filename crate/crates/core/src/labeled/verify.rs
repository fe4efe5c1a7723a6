use super::{
    build_fw_piece, enumerate_general, hom_bicharacter, hom_space_dimension_gl, hom::phi_image,
    permutation_bicharacter, BicharacterSource, LabelAlphabet,
};
use crate::budget::Budget;
use crate::characters::{induce_second_factor, BiClassFunction};
use crate::error::Result;
use crate::linalg::{rank_of_vectors, SparseVec, Q};
use crate::modules::TensorIndex;
use crate::report::{Report, Witness};
use num_traits::One;

/// Injectivity and surjectivity of `φ: Q𝒫_p(Ω) → Hom_{GL}(V^{⊗p}, F_W(V))`:
/// the rank of the family `{Φ_{P,l}}` against `|𝒫_p(Ω)|` and against the
/// dimension of the Hom space. The isomorphism is expected when `d ≥ p`.
pub fn verify_rw_prop(p: usize, qq: usize, d: usize, budget: &Budget) -> Result<Report> {
    let xs = enumerate_general(p, &LabelAlphabet::standard(qq), budget)?;
    let piece = build_fw_piece(p, qq, d, budget)?;
    let t = TensorIndex::new(d, p, budget)?;
    let n_f = piece.dimension();

    // Put tensors with many distinct indices first: when d ≥ p, e_1⊗..⊗e_p
    // alone already separates the Φ's, so elimination finishes immediately.
    let mut cols: Vec<usize> = (0..t.dim()).collect();
    cols.sort_by_key(|&c| {
        let mut idx = t.decode(c);
        idx.sort_unstable();
        idx.dedup();
        std::cmp::Reverse(idx.len())
    });
    let decoded: Vec<Vec<usize>> = cols.iter().map(|&c| t.decode(c)).collect();

    let vectors: Vec<SparseVec> = xs
        .iter()
        .map(|x| {
            let mut v: SparseVec = decoded
                .iter()
                .enumerate()
                .map(|(pos, indices)| (pos * n_f + phi_image(x, &piece, indices), Q::one()))
                .collect();
            v.sort_by_key(|e| e.0);
            v
        })
        .collect();
    let rank = rank_of_vectors(&vectors);
    let hom = hom_space_dimension_gl(p, qq, d, budget)?;

    let hypothesis = if d >= p { "d ≥ p" } else { "d < p" };
    Ok(Report::new(
        format!("φ: Q𝒫_{p}(Ω) → Hom_GL(V^⊗{p}, F_W(V)) is an isomorphism (q={qq}, d={d}, {hypothesis})"),
        format!("rank = {rank}"),
        format!("|𝒫_p(Ω)| = {}, dim Hom = {}", xs.len(), hom.value()),
        vec![
            Witness::compare("injective: rank = |𝒫_p(Ω)|", rank, xs.len()),
            Witness::compare("surjective: rank = dim Hom", rank, hom.value()),
        ],
    ))
}

fn render_value(v: &Q) -> String {
    v.to_string()
}

/// `⊕_{i=0}^q Ind_{Σ_i×Σ_{q-i}}^{Σ_q} Q𝒫_{p,i} ≅ Hom_{GL}(V^{⊗p}, F_W(V))`
/// as `Σ_p × Σ_q` characters, class by class, together with the fixed-point
/// character of `Q𝒫_p(Ω)` and the dimension count.
pub fn verify_splitting_lemma(p: usize, qq: usize, d: usize, budget: &Budget) -> Result<Report> {
    let general = permutation_bicharacter(p, qq, BicharacterSource::General, budget)?;
    let mut induced = BiClassFunction::zero(p, qq);
    for i in 0..=qq.min(p) {
        let piece = permutation_bicharacter(p, i, BicharacterSource::Labeled, budget)?;
        induced = induced.add(&induce_second_factor(&piece, qq)?)?;
    }
    let hom = hom_bicharacter(p, qq, d, budget)?;
    let hom_dim = hom_space_dimension_gl(p, qq, d, budget)?;

    let mut witnesses = Vec::new();
    for ((sigma, tau), v) in induced.values() {
        witnesses.push(Witness::compare(
            format!("({sigma}; {tau})"),
            render_value(v),
            render_value(hom.get(sigma, tau)),
        ));
    }
    let mismatch = general.differences(&induced);
    witnesses.push(Witness::check(
        "fixed points of 𝒫_p(Ω) = Σ_i Ind 𝒫_{p,i}",
        mismatch.is_empty(),
        format!("{} classes differ", mismatch.len()),
        "0 classes differ",
    ));
    witnesses.push(Witness::compare(
        "dimension: |𝒫_p(Ω)| = dim Hom",
        general.at_identity().to_string(),
        hom_dim.value().to_string(),
    ));

    Ok(Report::new(
        format!("⊕_i Ind Q𝒫_{{{p},i}} ≅ Hom_GL(V^⊗{p}, F_W(V)) as Σ_{p}×Σ_{qq} (d={d})"),
        format!("Σ_i Ind 𝒫_{{p,i}}: dim {}", induced.at_identity()),
        format!("Hom space: dim {}", hom.at_identity()),
        witnesses,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rw_examples() {
        let b = Budget::default();
        for (p, qq, d) in [(2, 1, 2), (1, 0, 1), (3, 0, 3)] {
            let r = verify_rw_prop(p, qq, d, &b).unwrap();
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn rw_fails_below_hypothesis() {
        let b = Budget::default();
        assert!(!verify_rw_prop(3, 0, 1, &b).unwrap().pass);
        assert!(!verify_rw_prop(2, 1, 1, &b).unwrap().pass);
    }

    #[test]
    fn splitting_examples() {
        let b = Budget::default();
        for (p, qq, d) in [(2, 1, 2), (2, 0, 2), (3, 2, 3)] {
            let r = verify_splitting_lemma(p, qq, d, &b).unwrap();
            assert!(r.pass, "{r}");
        }
    }
}
