//! Property tests for the word, pattern and algebra layers.

use proptest::prelude::*;

use posbraid::algebra::{
    matrix_rank_rational, poly_det, symmetric_inertia, symmetric_signature, IntMatrix, LaurentPoly,
};
use posbraid::braid::{contains_subword, BraidWord, SubwordOpts};
use posbraid::census::canonical_word;
use posbraid::pattern::{brick_diagram, linking_pattern};
use posbraid::seifert::{alexander_burau, invariants};

fn braid_word(max_strands: usize, max_syllables: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands, 1..=max_syllables).prop_flat_map(|(strands, len)| {
        prop::collection::vec((1..strands, 1..=3usize), len)
            .prop_map(move |syllables| BraidWord::new(strands, syllables).unwrap())
    })
}

/// Words where every generator occurs at least twice (the precondition of
/// the invariant computations).
fn full_braid_word() -> impl Strategy<Value = BraidWord> {
    braid_word(5, 6).prop_filter("all generators twice", |w| {
        w.all_generators_at_least(2) && w.crossings() <= 14
    })
}

fn laurent(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(-4i64..=4, 1..=max_terms))
        .prop_map(|(min, coeffs)| LaurentPoly::from_i64_coeffs(min, &coeffs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn component_count_invariant_under_transforms(w in braid_word(5, 6), k in 0usize..12) {
        let b = w.component_count();
        prop_assert_eq!(w.rotate(k).component_count(), b);
        prop_assert_eq!(w.reverse().component_count(), b);
        prop_assert_eq!(w.flip_indices().component_count(), b);
    }

    #[test]
    fn rotation_conjugates_closure_permutation(w in braid_word(5, 6), k in 0usize..12) {
        // Conjugate permutations have equal cycle types.
        let cycle_type = |w: &BraidWord| {
            let mut lens: Vec<usize> = w
                .closure_permutation()
                .cycles()
                .into_iter()
                .map(|c| c.len())
                .collect();
            lens.sort_unstable();
            lens
        };
        prop_assert_eq!(cycle_type(&w.rotate(k)), cycle_type(&w));
    }

    #[test]
    fn canonical_form_is_orbit_invariant(w in braid_word(5, 6), k in 0usize..12) {
        let c = canonical_word(&w);
        prop_assert_eq!(canonical_word(&w.rotate(k)), c.clone());
        prop_assert_eq!(canonical_word(&w.flip_indices()), c.clone());
        prop_assert_eq!(canonical_word(&c), c);
    }

    #[test]
    fn linking_pattern_shape(w in braid_word(5, 8)) {
        let bricks = brick_diagram(&w);
        let lp = linking_pattern(&bricks);
        let distinct = w.occurrence_counts().iter().skip(1).filter(|&&c| c > 0).count();
        prop_assert_eq!(lp.vertex_count(), w.crossings() - distinct);
        for (a, b) in lp.edges() {
            prop_assert!(bricks[a].column.abs_diff(bricks[b].column) <= 1);
        }
        // The index flip preserves the degree multiset.
        let flipped = linking_pattern(&brick_diagram(&w.flip_indices()));
        let mut da: Vec<usize> = (0..lp.vertex_count()).map(|v| lp.degree(v)).collect();
        let mut db: Vec<usize> = (0..flipped.vertex_count()).map(|v| flipped.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        prop_assert_eq!(da, db);
    }

    #[test]
    fn every_word_contains_itself(w in braid_word(5, 6)) {
        let witness = contains_subword(&w, &w, SubwordOpts::none());
        prop_assert!(witness.is_some());
        let witness = witness.unwrap();
        prop_assert!(witness.verify(&w, &w));
        prop_assert!(witness.positions.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn betti_identity_and_oracle(w in full_braid_word()) {
        let rec = invariants(&w).unwrap();
        prop_assert_eq!(2 * rec.genus + rec.components - 1, rec.first_betti);
        prop_assert_eq!(rec.first_betti, rec.crossings - (rec.strands - 1));
        prop_assert!(rec.abs_signature as usize <= rec.first_betti);
        prop_assert!(rec.alexander.equal_up_to_unit(&alexander_burau(&w)));
    }

    #[test]
    fn laurent_ring_laws(p in laurent(5), q in laurent(5), r in laurent(4)) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.add(&q).mul(&r), p.mul(&r).add(&q.mul(&r)));
        prop_assert!(p.shifted(3).neg().equal_up_to_unit(&p));
        if !q.is_zero() {
            prop_assert_eq!(p.mul(&q).divide_exact(&q), Some(p.clone()));
        }
    }

    #[test]
    fn inertia_relations(entries in prop::collection::vec(-4i64..=4, 10)) {
        let mut s = IntMatrix::zero(4, 4);
        let mut it = entries.into_iter();
        for i in 0..4 {
            for j in i..4 {
                let v = it.next().unwrap();
                s.set_i64(i, j, v);
                s.set_i64(j, i, v);
            }
        }
        let (pos, neg, zero) = symmetric_inertia(&s).unwrap();
        let rank = matrix_rank_rational(&s);
        prop_assert_eq!(pos + neg, rank);
        prop_assert_eq!(pos + neg + zero, 4);
        let sigma = symmetric_signature(&s).unwrap();
        prop_assert_eq!(sigma, pos as i64 - neg as i64);
        prop_assert_eq!((sigma.unsigned_abs() as usize) % 2, rank % 2);
    }

    #[test]
    fn det_multiplies_by_unit_rows(p in laurent(4)) {
        // det of [[p, 0], [0, 1]] is p; scaling a row by -t^2 scales det.
        let z = LaurentPoly::zero();
        let one = LaurentPoly::one();
        let m = vec![vec![p.clone(), z.clone()], vec![z.clone(), one.clone()]];
        prop_assert_eq!(poly_det(&m), p.clone());
        let u = LaurentPoly::monomial(-1, 2);
        let m2 = vec![vec![p.mul(&u), z.clone()], vec![z, one]];
        prop_assert_eq!(poly_det(&m2), p.mul(&u));
    }
}
