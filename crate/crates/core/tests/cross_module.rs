use std::collections::BTreeSet;

use proptest::prelude::*;
use typeii_core::codes::{golay24, hamming8, BinaryCode};
use typeii_core::harmonic_design::{
    brute_force_t_design, delsarte_t_design_test, harm_basis, specht_basis, SupportDesign,
};
use typeii_core::harmonic_enum::{vanishing_weights, HarmonicEnumeratorCase, SymmetricFactor};
use typeii_core::vanishing::{search_zero_coeffs_q, search_zero_coeffs_r, ZeroHit};

/// Zero hits of the coefficient searches, mirrored to the full index range
/// and shifted by the minimum weight, are exactly the vanishing weights.
#[test]
fn zero_hits_map_to_vanishing_weights() {
    let alpha_max = 4 * 40;
    let q1 = search_zero_coeffs_q(1, alpha_max).unwrap();
    let q2 = search_zero_coeffs_q(2, alpha_max).unwrap();
    let r = search_zero_coeffs_r(alpha_max);
    let mut compared = 0;
    for (t, rr) in [(4, 2), (5, 2), (6, 1), (6, 2), (7, 1), (8, 0), (8, 1)] {
        for m in 1..=40 {
            let Ok(case) = HarmonicEnumeratorCase::new(m, rr, t) else {
                continue;
            };
            let (hits, half_degree): (&[ZeroHit], u32) = match case.factor {
                SymmetricFactor::P8Power(1) => (&q1, case.alpha + 2),
                SymmetricFactor::P8Power(2) => (&q2, case.alpha + 4),
                SymmetricFactor::R => (&r, case.alpha + 3),
                _ => continue,
            };
            let mut expected = BTreeSet::new();
            for h in hits.iter().filter(|h| h.alpha == case.alpha) {
                for i in [h.i, half_degree - h.i] {
                    expected.insert(4 * m + 4 + 4 * i);
                }
            }
            assert_eq!(
                vanishing_weights(m, rr, t).unwrap(),
                expected,
                "t={t} r={rr} m={m}"
            );
            compared += 1;
        }
    }
    assert!(compared > 200);
}

#[test]
fn builtin_codes_are_doubly_even_self_dual() {
    for code in [golay24(), hamming8()] {
        let p = code.profile().unwrap();
        assert!(p.is_self_dual && p.is_doubly_even);
        let round_trip = BinaryCode::from_ascii(&code.to_ascii()).unwrap();
        assert_eq!(
            round_trip.weight_distribution().unwrap(),
            p.weight_distribution
        );
    }
}

fn arb_design() -> impl Strategy<Value = SupportDesign> {
    (4usize..=8).prop_flat_map(|n| {
        (1..n).prop_flat_map(move |w| {
            let total = 1u64 << n;
            let masks: Vec<u128> = (0..total as u128)
                .filter(|m| m.count_ones() as usize == w)
                .collect();
            proptest::sample::subsequence(masks.clone(), 1..=masks.len())
                .prop_map(move |blocks| SupportDesign::from_masks(n, w, blocks).unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn delsarte_matches_brute_force(d in arb_design(), t in 1usize..=3) {
        prop_assume!(t <= d.block_size());
        let brute = brute_force_t_design(&d, t).unwrap();
        prop_assert_eq!(delsarte_t_design_test(&d, t), brute.is_some());
    }

    #[test]
    fn kernel_basis_gives_same_verdict(d in arb_design(), t in 1usize..=2) {
        prop_assume!(t <= d.block_size());
        let via_kernel = (1..=t).all(|k| {
            typeii_core::harmonic_design::annihilated_by(&d, &harm_basis(d.points(), k).unwrap())
        });
        let via_specht = (1..=t).all(|k| {
            typeii_core::harmonic_design::annihilated_by(&d, &specht_basis(d.points(), k))
        });
        prop_assert_eq!(via_kernel, via_specht);
    }

    #[test]
    fn complement_preserves_design_property(d in arb_design(), t in 1usize..=2) {
        let c = d.complement();
        prop_assume!(t <= d.block_size() && t <= c.block_size());
        prop_assert_eq!(
            brute_force_t_design(&d, t).unwrap().is_some(),
            brute_force_t_design(&c, t).unwrap().is_some()
        );
    }
}
