mod common;

use bqarrow_core::{
    compute_invariant, counting_invariant, crossing_terms, enumerate_colorings, parse_gauss_code, random_move_walk,
    weight_sum, ArrowWeight, GaussDiagram, InvariantError, WeightError,
};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

fn flip_weights() -> Vec<ArrowWeight> {
    vec![z8(), w1(), w2()]
}

#[test]
fn unknot_is_two_zeros() {
    let v = compute_invariant(&GaussDiagram::unknot(), &flip(), &z8()).unwrap();
    assert_eq!(v.multiset(), vec![0, 0]);
    assert_eq!(v.polynomial(), "2");
}

#[test]
fn worked_example() {
    let d = parse_gauss_code(V4_72).unwrap();
    let v = compute_invariant(&d, &flip(), &z8()).unwrap();
    assert_eq!(v.counts, BTreeMap::from([(4, 2)]));
    assert_eq!(v.polynomial(), "2u^4");
    for c in enumerate_colorings(&d, &flip()) {
        let mut terms: Vec<i64> = crossing_terms(&d, &flip(), &z8(), &c).unwrap().iter().map(|t| t.value).collect();
        terms.sort_unstable();
        assert_eq!(terms, vec![-6, -2, 4]);
        assert_eq!(weight_sum(&d, &flip(), &z8(), &c), Ok(4));
    }
}

#[test]
fn enhancement_is_proper() {
    let u = GaussDiagram::unknot();
    let d = parse_gauss_code(V4_72).unwrap();
    assert_eq!(counting_invariant(&u, &flip()), counting_invariant(&d, &flip()));
    assert_ne!(compute_invariant(&u, &flip(), &z8()), compute_invariant(&d, &flip(), &z8()));
}

#[test]
fn virtual_trefoil_values() {
    let d = parse_gauss_code(VIRTUAL_TREFOIL).unwrap();
    let p = |w| compute_invariant(&d, &flip(), &w).unwrap().polynomial();
    assert_eq!(p(w1()), "2u^2");
    assert_eq!(p(w2()), "2");
}

#[test]
fn trefoil_tricolor_is_nine() {
    let d = parse_gauss_code(TREFOIL).unwrap();
    assert_eq!(compute_invariant(&d, &tricolor(), &tricolor_z3()).unwrap().polynomial(), "9");
}

#[test]
fn disjoint_arrows_give_zero() {
    let d = parse_gauss_code("O1+U1+O2+U2+").unwrap();
    let v = compute_invariant(&d, &flip(), &z8()).unwrap();
    assert_eq!(v.counts.keys().copied().collect::<Vec<_>>(), vec![0]);
}

#[test]
fn mismatched_weight_is_an_error() {
    let d = parse_gauss_code(TREFOIL).unwrap();
    assert_eq!(
        compute_invariant(&d, &tricolor(), &z8()),
        Err(InvariantError::Weight(WeightError::Dimension { expected: 3 }))
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zero_weight_collapses_to_count(k in 0..6usize, seed: u64) {
        let d = GaussDiagram::random(k, &mut ChaCha8Rng::seed_from_u64(seed));
        for (_, b) in move_safe_biquandles() {
            let v = compute_invariant(&d, &b, &ArrowWeight::zero(b.size(), 5).unwrap()).unwrap();
            let n = counting_invariant(&d, &b) as u64;
            prop_assert_eq!(v.counts, BTreeMap::from([(0, n)]));
        }
    }

    #[test]
    fn total_is_the_count(k in 0..6usize, seed: u64) {
        let d = GaussDiagram::random(k, &mut ChaCha8Rng::seed_from_u64(seed));
        for w in flip_weights() {
            prop_assert_eq!(compute_invariant(&d, &flip(), &w).unwrap().total(), counting_invariant(&d, &flip()) as u64);
        }
        prop_assert_eq!(
            compute_invariant(&d, &tricolor(), &tricolor_z3()).unwrap().total(),
            counting_invariant(&d, &tricolor()) as u64
        );
    }

    #[test]
    fn rotation_keeps_value(k in 0..6usize, seed: u64, r in 0..12usize) {
        let d = GaussDiagram::random(k, &mut ChaCha8Rng::seed_from_u64(seed));
        for w in flip_weights() {
            prop_assert_eq!(compute_invariant(&d.rotate(r), &flip(), &w), compute_invariant(&d, &flip(), &w));
        }
        prop_assert_eq!(
            compute_invariant(&d.rotate(r), &tricolor(), &tricolor_z3()),
            compute_invariant(&d, &tricolor(), &tricolor_z3())
        );
    }

    #[test]
    fn two_element_weights_survive_walks(k in 0..6usize, seed: u64, steps in 0..10usize) {
        let d = GaussDiagram::random(k, &mut ChaCha8Rng::seed_from_u64(seed));
        let e = random_move_walk(&d, steps, seed.wrapping_mul(31));
        for w in flip_weights() {
            prop_assert_eq!(compute_invariant(&e, &flip(), &w), compute_invariant(&d, &flip(), &w));
        }
    }
}
