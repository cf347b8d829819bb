mod common;

use bqarrow_core::weight::Tuple;
use bqarrow_core::{
    axiom_instance_count, solve_weight_space, verify_weight, ArrowWeight, Biquandle, WeightAxiom, WeightError,
};
use common::*;
use proptest::prelude::*;
use std::collections::HashSet;

fn all_binary_tensors(n: usize) -> impl Iterator<Item = ArrowWeight> {
    let cells = n.pow(4);
    (0u32..1 << cells).map(move |bits| {
        let mut w = ArrowWeight::zero(n, 2).unwrap();
        for i in 0..cells {
            if bits >> i & 1 == 1 {
                let (x, y, u, v) = (i / (n * n * n), i / (n * n) % n, i / n % n, i % n);
                w = w.with_entry((x, y), (u, v), 1);
            }
        }
        w
    })
}

#[test]
fn published_tensors_are_weights() {
    for (b, w) in [(flip(), z8()), (flip(), w1()), (flip(), w2()), (tricolor(), tricolor_z3())] {
        assert_eq!(verify_weight(&b, &w), Ok(axiom_instance_count(b.size())));
        assert!(naive_weight_ok(&b, &w));
    }
}

#[test]
fn instance_counts() {
    assert_eq!(axiom_instance_count(2), 16 + 4 + 16);
    assert_eq!(axiom_instance_count(3), 81 + 9 + 54);
}

#[test]
fn lookups_in_the_z8_tensor() {
    let w = z8();
    assert_eq!(w.lookup((0, 1), (0, 0)), Ok(2));
    assert_eq!(w.lookup((0, 0), (1, 1)), Ok(4));
    assert_eq!(w.lookup((1, 0), (1, 0)), Ok(0));
    assert!(matches!(w.lookup((0, 2), (0, 0)), Err(WeightError::Index(_))));
}

#[test]
fn broken_symmetry_is_reported() {
    let w = z8().with_entry((0, 0), (0, 1), 3);
    assert_eq!(
        verify_weight(&flip(), &w),
        Err(WeightError::Violation { axiom: WeightAxiom::Symmetric, witness: Tuple(vec![0, 0, 0, 1]) })
    );
    assert!(!naive_weight_ok(&flip(), &w));
    assert!(!solve_weight_space(&flip(), 8).unwrap().contains(&w));
}

#[test]
fn shape_and_modulus_errors() {
    assert_eq!(verify_weight(&tricolor(), &z8()), Err(WeightError::Dimension { expected: 3 }));
    assert!(matches!(ArrowWeight::from_nested(8, &[vec![vec![vec![9]]]]), Err(WeightError::Entry { value: 9, .. })));
    assert!(matches!(ArrowWeight::from_nested(8, &[vec![vec![vec![0, 0]]]]), Err(WeightError::Dimension { .. })));
    assert_eq!(ArrowWeight::zero(2, 0).unwrap_err(), WeightError::Modulus(0));
    assert!(matches!(solve_weight_space(&flip(), 1), Err(WeightError::Modulus(1))));
}

#[test]
fn zero_tensor_is_always_a_weight() {
    for (_, b) in move_safe_biquandles() {
        for m in [1, 2, 5, 12] {
            assert!(verify_weight(&b, &ArrowWeight::zero(b.size(), m).unwrap()).is_ok());
        }
    }
}

#[test]
fn binary_solutions_match_exhaustive_filter() {
    for b in [flip(), Biquandle::trivial(2)] {
        let brute: HashSet<ArrowWeight> = all_binary_tensors(2).filter(|w| verify_weight(&b, w).is_ok()).collect();
        let naive: HashSet<ArrowWeight> = all_binary_tensors(2).filter(|w| naive_weight_ok(&b, w)).collect();
        assert_eq!(brute, naive);
        let space = solve_weight_space(&b, 2).unwrap();
        let listed = space.enumerate(1 << 16, false).unwrap();
        assert_eq!(listed.len() as u128, space.count());
        let solved: HashSet<ArrowWeight> = listed.into_iter().collect();
        assert_eq!(solved.len() as u128, space.count());
        assert_eq!(solved, brute);
    }
}

#[test]
fn one_element_space_is_zero() {
    let s = solve_weight_space(&Biquandle::trivial(1), 2).unwrap();
    assert_eq!(s.count(), 1);
    assert!(s.generators().is_empty());
}

#[test]
fn published_tensors_lie_in_their_spaces() {
    for (b, w) in [(flip(), z8()), (flip(), w1()), (flip(), w2()), (tricolor(), tricolor_z3())] {
        let space = solve_weight_space(&b, w.modulus()).unwrap();
        let c = space.coordinates(&w).expect("member");
        assert_eq!(space.combine(&c), w);
    }
}

#[test]
fn counts_multiply_over_coprime_moduli() {
    for (_, b) in move_safe_biquandles().into_iter().take(3) {
        let c = |m| solve_weight_space(&b, m).unwrap().count();
        assert_eq!(c(6), c(2) * c(3));
        assert_eq!(c(12), c(4) * c(3));
    }
}

#[test]
fn enumeration_limits() {
    let space = solve_weight_space(&flip(), 8).unwrap();
    assert!(space.count() > 4);
    assert!(matches!(space.enumerate(4, false), Err(WeightError::TooMany { .. })));
    let some = space.enumerate(4, true).unwrap();
    assert_eq!(some.len(), 4);
    assert_eq!(some[0], ArrowWeight::zero(2, 8).unwrap());
    assert_eq!(some.iter().collect::<HashSet<_>>().len(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn combinations_of_solutions_are_solutions(pick in 0..3usize, m in prop::sample::select(vec![2u64, 3, 4, 6, 8, 9]), seeds in prop::collection::vec(any::<u64>(), 3)) {
        let (_, b) = move_safe_biquandles().swap_remove(pick);
        let space = solve_weight_space(&b, m).unwrap();
        for g in space.generators() {
            prop_assert!(verify_weight(&b, g).is_ok());
        }
        let pick_w = |s: u64| {
            let coeffs: Vec<u64> = space.orders().iter().enumerate().map(|(i, &o)| s.rotate_left(i as u32 * 7) % o).collect();
            space.combine(&coeffs)
        };
        let (w1, w2) = (pick_w(seeds[0]), pick_w(seeds[1]));
        let sum = w1.add_scaled(seeds[2] % m, &w2);
        prop_assert!(verify_weight(&b, &sum).is_ok());
        prop_assert!(naive_weight_ok(&b, &sum));
        prop_assert!(space.contains(&sum));
    }
}
