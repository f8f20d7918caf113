//! Closed-form harmonic weight enumerators `W_{C,f}` of extremal Type II
//! codes, normalised so the scalar `c(f)` equals 1.
//!
//! Every supported case has the shape
//! `x^(4m+4) y^(4m+4) (x^4 - y^4)^α · S(x, y)` with `S` symmetric, so
//! vanishing is decided entirely by the core polynomial
//! `(x^4 - y^4)^α · S`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gleason::{invariant_class, ExtremalClass, GleasonGenerators};
use crate::xypoly::{octic_minus34, octic_plus14, x4_minus_y4, x4_plus_y4, xy_power, XYPoly};

/// `(t, r)` pairs with a closed form.
pub const SUPPORTED_CASES: [(u32, u32); 8] = [
    (4, 2),
    (5, 2),
    (6, 1),
    (6, 2),
    (7, 1),
    (8, 0),
    (8, 1),
    (9, 1),
];

/// The symmetric factor multiplying `(x^4 - y^4)^α` in the core polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SymmetricFactor {
    /// `P8^β` with `β ∈ {0, 1, 2}`: the Q family.
    P8Power(u32),
    /// `(x^4 + y^4)(x^8 - 34x^4y^4 + y^8)`: the R family.
    R,
    /// `(x^4 + y^4)(x^8 - 34x^4y^4 + y^8) P8`.
    RTimesP8,
}

impl SymmetricFactor {
    pub fn poly(self) -> XYPoly {
        match self {
            SymmetricFactor::P8Power(b) => octic_plus14().pow(b),
            SymmetricFactor::R => x4_plus_y4().mul(&octic_minus34()),
            SymmetricFactor::RTimesP8 => x4_plus_y4().mul(&octic_minus34()).mul(&octic_plus14()),
        }
    }
}

/// Parameters of one supported case: `W = (xy)^(4m+4) (x^4-y^4)^alpha · S`
/// and, equivalently, `W = (xy)^t · prefactor(t) · P8^p8_exp · P24^p24_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HarmonicEnumeratorCase {
    pub t: u32,
    pub r: u32,
    pub m: u32,
    pub alpha: u32,
    pub factor: SymmetricFactor,
    pub p8_exp: u32,
    pub p24_exp: u32,
}

fn supported_list() -> String {
    SUPPORTED_CASES
        .iter()
        .map(|(t, r)| format!("({t},{r})"))
        .collect::<Vec<_>>()
        .join(", ")
}

impl HarmonicEnumeratorCase {
    pub fn new(m: u32, r: u32, t: u32) -> Result<Self> {
        if !SUPPORTED_CASES.contains(&(t, r)) {
            return Err(Error::UnsupportedCase {
                t,
                r,
                supported: supported_list(),
            });
        }
        let min_m = if t == 9 { 2 } else { 1 };
        if m < min_m {
            return Err(Error::CaseTooSmall { t, r, m, min_m });
        }
        ExtremalClass::new(m, r)?;
        // (alpha, factor, P8 exponent, P24 exponent)
        let (alpha, factor, p8_exp, p24_exp) = match t {
            4 => (4 * m, SymmetricFactor::P8Power(1), 1, m),
            5 => (4 * m - 1, SymmetricFactor::R, 0, m - 1),
            6 => (4 * m - 2, SymmetricFactor::P8Power(r), r, m - 1),
            7 => (4 * m - 3, SymmetricFactor::R, 0, m - 1),
            8 => (4 * m - 4, SymmetricFactor::P8Power(r + 1), r + 1, m - 1),
            9 => (4 * m - 5, SymmetricFactor::RTimesP8, 1, m - 2),
            _ => unreachable!(),
        };
        Ok(HarmonicEnumeratorCase {
            t,
            r,
            m,
            alpha,
            factor,
            p8_exp,
            p24_exp,
        })
    }

    pub fn class(&self) -> ExtremalClass {
        ExtremalClass::new(self.m, self.r).expect("validated in new")
    }

    pub fn length(&self) -> u32 {
        24 * self.m + 8 * self.r
    }

    /// True when some factor appears with exponent zero (e.g. `t = 8, m = 1`).
    pub fn is_edge(&self) -> bool {
        self.alpha == 0 || self.p24_exp == 0
    }

    /// `(x^4 - y^4)^α · S`, without the `(xy)^(4m+4)` factor.
    pub fn core(&self) -> XYPoly {
        x4_minus_y4().pow(self.alpha).mul(&self.factor.poly())
    }

    /// The enumerator assembled from the explicit factored form.
    pub fn poly(&self) -> XYPoly {
        xy_power(4 * self.m as usize + 4).mul(&self.core())
    }

    /// The enumerator assembled from Gleason generators:
    /// `(xy)^t · prefactor(t mod 4) · P8^a · P24^b`.
    pub fn poly_from_generators(&self, gens: &GleasonGenerators) -> XYPoly {
        let pre = invariant_class(self.t).prefactor.poly(gens);
        xy_power(self.t as usize)
            .mul(&pre)
            .mul(&gens.p8.pow(self.p8_exp))
            .mul(&gens.p24.pow(self.p24_exp))
    }
}

pub fn harmonic_enumerator(m: u32, r: u32, t: u32) -> Result<XYPoly> {
    Ok(HarmonicEnumeratorCase::new(m, r, t)?.poly())
}

/// Weights `w ≡ 0 (mod 4)`, `4m+4 <= w <= n-(4m+4)`, where the enumerator's
/// `y^w` coefficient vanishes.
pub fn vanishing_weights(m: u32, r: u32, t: u32) -> Result<BTreeSet<u32>> {
    let case = HarmonicEnumeratorCase::new(m, r, t)?;
    Ok(vanishing_weights_of(&case, &case.poly()))
}

pub(crate) fn vanishing_weights_of(case: &HarmonicEnumeratorCase, poly: &XYPoly) -> BTreeSet<u32> {
    case.class()
        .design_weights()
        .into_iter()
        .filter(|&w| poly.coeff_ref(w as usize).is_none())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn unsupported_cases_are_rejected() {
        let err = harmonic_enumerator(3, 0, 6).unwrap_err();
        assert!(matches!(err, Error::UnsupportedCase { t: 6, r: 0, .. }));
        assert!(err.to_string().contains("(9,1)"));
        assert!(harmonic_enumerator(3, 1, 10).is_err());
        assert!(harmonic_enumerator(3, 2, 3).is_err());
        assert!(matches!(
            harmonic_enumerator(1, 1, 9),
            Err(Error::CaseTooSmall { min_m: 2, .. })
        ));
        assert!(harmonic_enumerator(159, 1, 6).is_err());
    }

    #[test]
    fn case_t4_r2_m1() {
        let expected = xy_power(8).mul(&x4_minus_y4().pow(4)).mul(&octic_plus14());
        assert_eq!(harmonic_enumerator(1, 2, 4).unwrap(), expected);
        assert_eq!(expected.degree(), 40);
    }

    #[test]
    fn case_t8_r0_m1_exponent_zero_edge() {
        let case = HarmonicEnumeratorCase::new(1, 0, 8).unwrap();
        assert!(case.is_edge());
        assert_eq!(case.alpha, 0);
        assert_eq!(case.poly(), xy_power(8).mul(&octic_plus14()));
        assert_eq!(case.poly().degree(), 24);
    }

    #[test]
    fn exceptional_m4_t6() {
        let w = harmonic_enumerator(4, 1, 6).unwrap();
        assert!(w.coeff(24).is_zero());
        assert!(w.coeff(80).is_zero());
        assert_eq!(
            vanishing_weights(4, 1, 6).unwrap(),
            BTreeSet::from([24, 80])
        );
    }

    #[test]
    fn middle_weight_t7() {
        assert_eq!(vanishing_weights(2, 1, 7).unwrap(), BTreeSet::from([28]));
    }

    #[test]
    fn structure_matches_gleason_form() {
        let gens = GleasonGenerators::new();
        for &(t, r) in &SUPPORTED_CASES {
            for m in 1..=6 {
                let Ok(case) = HarmonicEnumeratorCase::new(m, r, t) else {
                    continue;
                };
                let p = case.poly();
                assert_eq!(p, case.poly_from_generators(&gens), "t={t} r={r} m={m}");
                assert_eq!(p.degree() as u32, case.length());
                let z = p.div_xy_power(t as usize).expect("divisible by (xy)^t");
                assert_eq!(z.degree() as u32, case.length() - 2 * t);
                let d = 4 * m as usize + 4;
                for (j, _) in p.terms() {
                    assert!(j >= d && j <= p.degree() - d && j % 4 == 0);
                }
            }
        }
    }

    #[test]
    fn vanishing_set_is_mirror_symmetric() {
        for &(t, r) in &SUPPORTED_CASES {
            for m in 2..=12 {
                let n = 24 * m + 8 * r;
                let set = vanishing_weights(m, r, t).unwrap();
                for &w in &set {
                    assert!(set.contains(&(n - w)));
                }
            }
        }
    }

    #[test]
    fn nonzero_coefficient_sanity() {
        let w = harmonic_enumerator(2, 2, 5).unwrap();
        assert_ne!(w.coeff(12), BigInt::zero());
        assert!(w.coeff(32).is_zero());
    }
}
