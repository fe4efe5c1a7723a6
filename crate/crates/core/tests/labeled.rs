//! Labeled set partitions, F_W(V) and the map φ.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{seq::SliceRandom, SeedableRng};
use stablerep::labeled::{
    build_fw_piece, count_fixed, enumerate_general, enumerate_pq, enumerate_set_partitions, enumerate_split_union,
    hom_space_dimension_gl, hom_space_dimension_literal, permutation_bicharacter, phi_matrix, splitting_map,
    verify_rw_prop, verify_splitting_lemma, BicharacterSource, GeneralLabeledPartition, LabelAlphabet,
    QLabeledPartition,
};
use stablerep::modules::TensorIndex;
use stablerep::partitions::Partition;
use stablerep::perm::Permutation;
use stablerep::Budget;

/// Bell numbers from the Bell triangle.
fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

/// Stirling numbers of the second kind.
fn stirling2(n: usize, k: usize) -> u64 {
    let mut s = vec![vec![0u64; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for j in 1..=i {
            s[i][j] = j as u64 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    if k > n {
        0
    } else {
        s[n][k]
    }
}

fn falling(k: usize, q: usize) -> u64 {
    if q > k {
        0
    } else {
        ((k - q + 1)..=k).map(|x| x as u64).product()
    }
}

/// `|𝒫_{p,q}| = Σ_k S(p,k)·k!/(k−q)!`.
fn labeled_count(p: usize, q: usize) -> u64 {
    (0..=p).map(|k| stirling2(p, k) * falling(k, q)).sum()
}

/// `|𝒫_p(Ω)|`: singletons choose from q+1 labels, larger parts only `*`.
fn general_count(p: usize, q: usize) -> u64 {
    enumerate_set_partitions(p)
        .iter()
        .map(|s| {
            let singletons = s.parts().iter().filter(|x| x.len() == 1).count() as u32;
            (q as u64 + 1).pow(singletons)
        })
        .sum()
}

fn budget() -> Budget {
    Budget::default()
}

fn random_perm(n: usize, rng: &mut rand::rngs::StdRng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images)
}

#[test]
fn set_partitions_are_counted_by_bell_numbers() {
    for p in 0..=8 {
        let xs = enumerate_set_partitions(p);
        assert_eq!(xs.len() as u64, bell(p), "p={p}");
        let distinct: BTreeSet<_> = xs.iter().cloned().collect();
        assert_eq!(distinct.len(), xs.len());
    }
}

#[test]
fn labeled_counts_match_stirling_formula() {
    for p in 0..=6 {
        for q in 0..=p {
            let xs = enumerate_pq(p, q, &budget()).unwrap();
            assert_eq!(xs.len() as u64, labeled_count(p, q), "p={p}, q={q}");
            let distinct: BTreeSet<_> = xs.iter().cloned().collect();
            assert_eq!(distinct.len(), xs.len());
        }
    }
    assert_eq!(enumerate_pq(2, 1, &budget()).unwrap().len(), 3);
    assert_eq!(enumerate_pq(3, 1, &budget()).unwrap().len(), 10);
    assert_eq!(enumerate_pq(4, 4, &budget()).unwrap().len(), 24);
    assert!(enumerate_pq(2, 3, &budget()).is_err());
}

#[test]
fn general_counts_match_independent_count() {
    for p in 0..=6 {
        for q in 0..=4 {
            let xs = enumerate_general(p, &LabelAlphabet::standard(q), &budget()).unwrap();
            assert_eq!(xs.len() as u64, general_count(p, q), "p={p}, q={q}");
        }
    }
    assert_eq!(enumerate_general(2, &LabelAlphabet::standard(1), &budget()).unwrap().len(), 5);
    assert_eq!(enumerate_general(3, &LabelAlphabet::standard(0), &budget()).unwrap().len(), 5);
    assert_eq!(enumerate_general(4, &LabelAlphabet::standard(4), &budget()).unwrap().len(), 799);
}

#[test]
fn splitting_map_is_a_bijection_onto_the_general_set() {
    for p in 0..=5 {
        for q in 0..=5 {
            let union = enumerate_split_union(p, q, &budget()).unwrap();
            let images: BTreeSet<GeneralLabeledPartition> = union.iter().map(splitting_map).collect();
            assert_eq!(images.len(), union.len(), "not injective at p={p}, q={q}");
            let general: BTreeSet<_> =
                enumerate_general(p, &LabelAlphabet::standard(q), &budget()).unwrap().into_iter().collect();
            assert_eq!(images, general, "p={p}, q={q}");
        }
    }
}

#[test]
fn splitting_map_examples() {
    let x: QLabeledPartition = "{1,2}:labels=1".parse().unwrap();
    assert_eq!(splitting_map(&x).to_string(), "{1|2}:labels=1,1");
    let y: QLabeledPartition = "{1,2|3}:labels=*,*".parse().unwrap();
    assert_eq!(splitting_map(&y).to_string(), "{1,2|3}:labels=*,*");
}

#[test]
fn text_and_json_round_trip() {
    for x in enumerate_general(4, &LabelAlphabet::standard(2), &budget()).unwrap() {
        let back: GeneralLabeledPartition = x.to_string().parse().unwrap();
        assert_eq!(back, x);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<GeneralLabeledPartition>(&json).unwrap(), x);
    }
    for x in enumerate_pq(4, 2, &budget()).unwrap() {
        let back: QLabeledPartition = x.to_string().parse().unwrap();
        assert_eq!(back, x);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<QLabeledPartition>(&json).unwrap(), x);
    }
    let x: GeneralLabeledPartition = "{1,2|3}:labels=*,2".parse().unwrap();
    assert_eq!(
        serde_json::to_string(&x).unwrap(),
        r#"[{"part":[1,2],"label":"*"},{"part":[3],"label":"2"}]"#
    );
    assert!("{1,1}:labels=*".parse::<GeneralLabeledPartition>().is_err());
}

#[test]
fn bicharacter_examples() {
    let b = permutation_bicharacter(2, 1, BicharacterSource::Labeled, &budget()).unwrap();
    assert_eq!(b.get(&Partition::row(2), &Partition::row(1)), &BigRational::from_integer(1.into()));
    assert_eq!(b.get(&Partition::column(2), &Partition::row(1)), &BigRational::from_integer(3.into()));
    let b = permutation_bicharacter(2, 0, BicharacterSource::Labeled, &budget()).unwrap();
    assert_eq!(b.get(&Partition::row(2), &Partition::empty()), &BigRational::from_integer(2.into()));
}

#[test]
fn general_and_split_union_bicharacters_agree() {
    for p in 0..=4 {
        for q in 0..=4 {
            let a = permutation_bicharacter(p, q, BicharacterSource::General, &budget()).unwrap();
            let b = permutation_bicharacter(p, q, BicharacterSource::SplitUnion, &budget()).unwrap();
            assert!(a.differences(&b).is_empty(), "p={p}, q={q}");
        }
    }
}

#[test]
fn fw_piece_dimensions() {
    assert_eq!(build_fw_piece(0, 0, 2, &budget()).unwrap().dimension(), 1);
    assert_eq!(build_fw_piece(1, 0, 2, &budget()).unwrap().dimension(), 2);
    assert_eq!(build_fw_piece(2, 1, 2, &budget()).unwrap().dimension(), 13);
    for (p, q, d) in [(3, 1, 2), (3, 2, 3), (4, 1, 2)] {
        let piece = build_fw_piece(p, q, d, &budget()).unwrap();
        let expected = stablerep::characters::graded_sym_algebra_dimension(d, q, p);
        assert_eq!(piece.dimension() as u128, expected, "p={p}, q={q}, d={d}");
    }
}

#[test]
fn fw_gl_action_satisfies_commutation_relations() {
    let piece = build_fw_piece(3, 1, 2, &budget()).unwrap();
    let d = piece.rank();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                for e in 0..d {
                    let lhs = piece.gl_matrix(a, b).bracket(&piece.gl_matrix(c, e));
                    let mut rhs = stablerep::linalg::ExactMatrix::zeros(piece.dimension(), piece.dimension());
                    if b == c {
                        rhs = rhs.add(&piece.gl_matrix(a, e));
                    }
                    if e == a {
                        rhs = rhs.sub(&piece.gl_matrix(c, b));
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn phi_is_gl_equivariant() {
    for p in 1..=4 {
        for d in 1..=3usize {
            let q = if p <= 3 { 1 } else { 0 };
            let piece = build_fw_piece(p, q, d, &budget()).unwrap();
            let t = TensorIndex::new(d, p, &budget()).unwrap();
            for x in enumerate_general(p, &LabelAlphabet::standard(q), &budget()).unwrap() {
                let phi = phi_matrix(&x, &piece, &budget()).unwrap();
                for a in 0..d {
                    for b in 0..d {
                        assert_eq!(
                            phi.mul(&t.gl_matrix(a, b)),
                            piece.gl_matrix(a, b).mul(&phi),
                            "{x}, d={d}, E_{a}{b}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn phi_formula_instances() {
    let piece = build_fw_piece(2, 1, 2, &budget()).unwrap();
    let t = TensorIndex::new(2, 2, &budget()).unwrap();
    let e1e2 = t.encode(&[0, 1]);
    for (text, monomial) in [("{1,2}:labels=*", "[*;e1e2]"), ("{1|2}:labels=*,1", "[*;e1][1;e2]")] {
        let x: GeneralLabeledPartition = text.parse().unwrap();
        let phi = phi_matrix(&x, &piece, &budget()).unwrap();
        let col = &phi.columns()[e1e2];
        assert_eq!(col.len(), 1);
        assert_eq!(piece.basis()[col[0].0].to_string(), monomial);
    }
}

#[test]
fn hom_dimension_examples_and_routes_agree() {
    assert_eq!(hom_space_dimension_gl(2, 1, 2, &budget()).unwrap().value(), 5);
    assert_eq!(hom_space_dimension_gl(1, 0, 1, &budget()).unwrap().value(), 1);
    assert_eq!(hom_space_dimension_gl(2, 0, 2, &budget()).unwrap().value(), 2);
    for (p, q, d) in [(1, 0, 1), (2, 0, 1), (2, 1, 1), (2, 1, 2), (2, 0, 2), (3, 0, 2), (3, 1, 2)] {
        let h = hom_space_dimension_gl(p, q, d, &budget()).unwrap();
        assert_eq!(h.highest_weight, h.weight_decomposition);
        assert_eq!(hom_space_dimension_literal(p, q, d, &budget()).unwrap(), h.value(), "({p},{q},{d})");
    }
}

#[test]
fn rw_prop_examples() {
    for (p, q, d, rank) in [(2, 1, 2, "5"), (1, 0, 1, "1"), (3, 0, 3, "5")] {
        let r = verify_rw_prop(p, q, d, &budget()).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r.witnesses[0].left, rank);
    }
    let r = verify_rw_prop(2, 1, 1, &budget()).unwrap();
    assert!(!r.pass);
    assert!(!r.witnesses[0].pass);
}

#[test]
fn splitting_lemma_examples() {
    for (p, q, d) in [(2, 1, 2), (2, 0, 2), (3, 2, 3)] {
        let r = verify_splitting_lemma(p, q, d, &budget()).unwrap();
        assert!(r.pass, "{r}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bicharacter_is_representative_independent(p in 0usize..=4, q in 0usize..=3, seed in any::<u64>()) {
        prop_assume!(q <= p);
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let items = enumerate_pq(p, q, &budget()).unwrap();
        let b = permutation_bicharacter(p, q, BicharacterSource::Labeled, &budget()).unwrap();
        let sigma = random_perm(p, &mut rng);
        let tau = random_perm(q, &mut rng);
        let fixed = count_fixed(&items, &sigma, &tau);
        let value = b.get(&sigma.cycle_type(), &tau.cycle_type());
        prop_assert_eq!(value, &BigRational::from_integer(BigInt::from(fixed)));
    }

    #[test]
    fn action_preserves_the_labeled_set(p in 0usize..=5, q in 0usize..=3, seed in any::<u64>()) {
        prop_assume!(q <= p);
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let items: BTreeSet<_> = enumerate_pq(p, q, &budget()).unwrap().into_iter().collect();
        let sigma = random_perm(p, &mut rng);
        let tau = random_perm(q, &mut rng);
        let moved: BTreeSet<_> = items.iter().map(|x| x.act(&sigma, &tau)).collect();
        prop_assert_eq!(moved, items);
    }
}

#[test]
fn identity_bicharacter_value_is_cardinality() {
    for p in 0..=4 {
        for q in 0..=p {
            let b = permutation_bicharacter(p, q, BicharacterSource::Labeled, &budget()).unwrap();
            let id = b.get(&Partition::column(p), &Partition::column(q));
            assert_eq!(id, &BigRational::from_integer(BigInt::from(labeled_count(p, q))));
            for (_, v) in b.values() {
                assert!(v.is_integer() && *v >= BigRational::from_integer(0.into()));
            }
        }
    }
}
