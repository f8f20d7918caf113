//! Gleason generator polynomials, the relative-invariant case table, and
//! extremal weight enumerators of doubly even self-dual codes.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::xypoly::{octic_minus34, octic_plus14, x4_minus_y4, xy_power, XYPoly};

/// Largest `m` for which an extremal code of length `24m + 8r` may exist.
pub const fn existence_bound(r: u32) -> u32 {
    match r {
        0 => 153,
        1 => 158,
        _ => 163,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GleasonGenerators {
    pub p8: XYPoly,
    pub p12: XYPoly,
    pub p18: XYPoly,
    pub p24: XYPoly,
    pub p30: XYPoly,
}

impl GleasonGenerators {
    pub fn new() -> Self {
        let p8 = octic_plus14();
        let p12 = xy_power(2).mul(&x4_minus_y4().pow(2));
        let x8_minus_y8 = XYPoly::from_terms(8, [(0usize, 1i64), (8, -1)]);
        let p18 = xy_power(1).mul(&x8_minus_y8).mul(&octic_minus34());
        let p24 = xy_power(4).mul(&x4_minus_y4().pow(4));
        let p30 = p12.mul(&p18);
        GleasonGenerators {
            p8,
            p12,
            p18,
            p24,
            p30,
        }
    }
}

impl Default for GleasonGenerators {
    fn default() -> Self {
        Self::new()
    }
}

/// Which fixed factor multiplies the free algebra `⟨P8, P24⟩` for the
/// relative invariants of character `χ_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Prefactor {
    One,
    P12,
    P18,
    P30,
}

impl Prefactor {
    pub fn poly(self, gens: &GleasonGenerators) -> XYPoly {
        match self {
            Prefactor::One => XYPoly::one(),
            Prefactor::P12 => gens.p12.clone(),
            Prefactor::P18 => gens.p18.clone(),
            Prefactor::P30 => gens.p30.clone(),
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Prefactor::One => 0,
            Prefactor::P12 => 12,
            Prefactor::P18 => 18,
            Prefactor::P30 => 30,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantClass {
    pub k_mod_4: u32,
    pub prefactor: Prefactor,
}

impl InvariantClass {
    /// Every monomial `prefactor · P8^a · P24^b` of total degree `degree`,
    /// listed by increasing `b`. Empty when the degree is unreachable.
    pub fn basis(&self, gens: &GleasonGenerators, degree: usize) -> Vec<XYPoly> {
        let pre = self.prefactor.degree();
        if degree < pre || (degree - pre) % 8 != 0 {
            return Vec::new();
        }
        let units = (degree - pre) / 8;
        let pre_poly = self.prefactor.poly(gens);
        (0..=units / 3)
            .map(|b| {
                let a = (units - 3 * b) as u32;
                pre_poly.mul(&gens.p8.pow(a)).mul(&gens.p24.pow(b as u32))
            })
            .collect()
    }
}

pub fn invariant_class(k: u32) -> InvariantClass {
    let prefactor = match k % 4 {
        0 => Prefactor::One,
        1 => Prefactor::P30,
        2 => Prefactor::P12,
        _ => Prefactor::P18,
    };
    InvariantClass {
        k_mod_4: k % 4,
        prefactor,
    }
}

/// Length `24m + 8r` extremal parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExtremalClass {
    m: u32,
    r: u32,
}

impl ExtremalClass {
    /// Validates `r ∈ {0,1,2}` and `m` against the existence bound. `m = 0`
    /// is accepted for `r ≥ 1` (lengths 8 and 16).
    pub fn new(m: u32, r: u32) -> Result<Self> {
        if r > 2 {
            return Err(Error::InvalidClass {
                m,
                r,
                reason: "r must be 0, 1 or 2".into(),
            });
        }
        if m == 0 && r == 0 {
            return Err(Error::InvalidClass {
                m,
                r,
                reason: "length 0".into(),
            });
        }
        if m > existence_bound(r) {
            return Err(Error::InvalidClass {
                m,
                r,
                reason: format!("m exceeds the existence bound {}", existence_bound(r)),
            });
        }
        Ok(ExtremalClass { m, r })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn length(&self) -> u32 {
        24 * self.m + 8 * self.r
    }

    pub fn min_weight(&self) -> u32 {
        4 * self.m + 4
    }

    pub fn middle_weight(&self) -> u32 {
        self.length() / 2
    }

    /// Nonzero weights `w ≡ 0 (mod 4)` with `d <= w <= n - d`.
    pub fn design_weights(&self) -> Vec<u32> {
        let d = self.min_weight();
        let n = self.length();
        if n < 2 * d {
            return Vec::new();
        }
        (d..=n - d).step_by(4).collect()
    }
}

fn truncated_mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn truncated_pow(a: &[BigInt], e: u32, len: usize) -> Vec<BigInt> {
    let mut result = vec![BigInt::zero(); len];
    result[0] = BigInt::one();
    let mut base = a.to_vec();
    base.resize(len, BigInt::zero());
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = truncated_mul(&result, &base, len);
        }
        e >>= 1;
        if e > 0 {
            base = truncated_mul(&base, &base, len);
        }
    }
    result
}

/// Elimination for the coefficients `a_0..a_m` of
/// `W = Σ a_i P8^(3(m-i)+r) P24^i`, together with the truncated series of
/// `W(1, Y^{1/4})` through `Y^(m+1)`.
///
/// Works in the dehomogenised variable `Y = y^4 / x^4`, where `P8 = 1 + 14Y + Y²`
/// and `P24 = Y(1 - Y)^4`. `P24^i` starts at `Y^i` with coefficient 1, so the
/// system is unit lower triangular.
fn eliminate(cls: ExtremalClass) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let m = cls.m as usize;
    let len = m + 2;
    let p8: Vec<BigInt> = [1, 14, 1].into_iter().map(BigInt::from).collect();
    let p24: Vec<BigInt> = [0, 1, -4, 6, -4, 1].into_iter().map(BigInt::from).collect();
    let p8_cubed = truncated_pow(&p8, 3, len);

    // p8_pows[k] = P8^(r + 3k)
    let mut p8_pows = Vec::with_capacity(m + 1);
    p8_pows.push(truncated_pow(&p8, cls.r, len));
    for k in 1..=m {
        let next = truncated_mul(&p8_pows[k - 1], &p8_cubed, len);
        p8_pows.push(next);
    }

    let mut a = vec![BigInt::zero(); m + 1];
    let mut series = vec![BigInt::zero(); len];
    let mut p24_pow = vec![BigInt::zero(); len];
    p24_pow[0] = BigInt::one();
    for j in 0..=m {
        let basis = truncated_mul(&p8_pows[m - j], &p24_pow, len);
        if !basis[j].is_one() {
            return Err(Error::Degenerate(j));
        }
        let target = if j == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        a[j] = target - &series[j];
        for (s, b) in series.iter_mut().zip(&basis) {
            *s += &a[j] * b;
        }
        p24_pow = truncated_mul(&p24_pow, &p24, len);
    }
    Ok((a, series))
}

/// The weight enumerator of an extremal doubly even self-dual code of length
/// `24m + 8r`: the unique element of `span{P8^(3m+r-3i) P24^i}` equal to
/// `x^n + 0·y^4 + … + 0·y^(4m) + …`.
pub fn extremal_weight_enumerator(cls: ExtremalClass) -> Result<XYPoly> {
    let (a, _) = eliminate(cls)?;
    let gens = GleasonGenerators::new();
    let p8_cubed = gens.p8.pow(3);
    // Horner: H_k = H_{k-1}·P8³ + a_k·P24^k, so H_m = Σ a_i P8^(3(m-i)) P24^i.
    let mut acc = XYPoly::from_terms(0, [(0usize, a[0].clone())]);
    let mut p24_pow = XYPoly::one();
    for coeff in a.iter().skip(1) {
        p24_pow = p24_pow.mul(&gens.p24);
        acc = acc.mul(&p8_cubed).add(&p24_pow.scale(coeff));
    }
    Ok(acc.mul(&gens.p8.pow(cls.r)))
}

/// `A_{4m+4}`, the number of minimum-weight codewords. Memoised, since the
/// λ filters ask for every class repeatedly.
pub fn min_weight_block_count(cls: ExtremalClass) -> Result<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("cache poisoned").get(&(cls.m, cls.r)) {
        return Ok(b.clone());
    }
    let (_, series) = eliminate(cls)?;
    let b = series[cls.m as usize + 1].clone();
    cache
        .lock()
        .expect("cache poisoned")
        .insert((cls.m, cls.r), b.clone());
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::binomial;
    use num_rational::BigRational;

    fn expand_generator_definitions() -> [XYPoly; 4] {
        // Independent expansions written out term by term.
        let p8 = XYPoly::from_terms(8, [(0usize, 1i64), (4, 14), (8, 1)]);
        // x^2 y^2 (x^8 - 2x^4y^4 + y^8)
        let p12 = XYPoly::from_terms(12, [(2usize, 1i64), (6, -2), (10, 1)]);
        // xy (x^8 - y^8)(x^8 - 34x^4y^4 + y^8)
        //   = xy (x^16 - 34x^12y^4 + 34x^4y^12 - y^16)
        let p18 = XYPoly::from_terms(18, [(1usize, 1i64), (5, -34), (13, 34), (17, -1)]);
        // x^4 y^4 (x^4 - y^4)^4
        let p24 = XYPoly::from_terms(24, [(4usize, 1i64), (8, -4), (12, 6), (16, -4), (20, 1)]);
        [p8, p12, p18, p24]
    }

    #[test]
    fn generators_match_definitions() {
        let gens = GleasonGenerators::new();
        let [p8, p12, p18, p24] = expand_generator_definitions();
        assert_eq!(gens.p8, p8);
        assert_eq!(gens.p12, p12);
        assert_eq!(gens.p18, p18);
        assert_eq!(gens.p24, p24);
        assert_eq!(gens.p30, p12.mul(&p18));
        assert_eq!(gens.p30.degree(), 30);
    }

    #[test]
    fn case_table() {
        assert_eq!(invariant_class(4).prefactor, Prefactor::One);
        assert_eq!(invariant_class(0).prefactor, Prefactor::One);
        assert_eq!(invariant_class(6).prefactor, Prefactor::P12);
        assert_eq!(invariant_class(7).prefactor, Prefactor::P18);
        assert_eq!(invariant_class(9).prefactor, Prefactor::P30);
        assert_eq!(invariant_class(5).prefactor, Prefactor::P30);
        assert_eq!(invariant_class(9).k_mod_4, 1);
    }

    #[test]
    fn class_validation() {
        assert!(ExtremalClass::new(153, 0).is_ok());
        assert!(ExtremalClass::new(154, 0).is_err());
        assert!(ExtremalClass::new(158, 1).is_ok());
        assert!(ExtremalClass::new(159, 1).is_err());
        assert!(ExtremalClass::new(163, 2).is_ok());
        assert!(ExtremalClass::new(164, 2).is_err());
        assert!(ExtremalClass::new(1, 3).is_err());
        assert!(ExtremalClass::new(0, 0).is_err());
        let c = ExtremalClass::new(4, 1).unwrap();
        assert_eq!(
            (c.length(), c.min_weight(), c.middle_weight()),
            (104, 20, 52)
        );
    }

    #[test]
    fn golay_enumerator() {
        // Hand elimination: W = a0 P8^3 + a1 P24 with a0 = 1 and the y^4
        // coefficient 3·14 + a1 = 0, so a1 = -42.
        let gens = GleasonGenerators::new();
        let by_hand = gens.p8.pow(3).add(&gens.p24.scale(&BigInt::from(-42)));
        let w = extremal_weight_enumerator(ExtremalClass::new(1, 0).unwrap()).unwrap();
        assert_eq!(w, by_hand);
        let expected = XYPoly::from_terms(
            24,
            [(0usize, 1i64), (8, 759), (12, 2576), (16, 759), (24, 1)],
        );
        assert_eq!(w, expected);
    }

    #[test]
    fn hamming_enumerator() {
        let w = extremal_weight_enumerator(ExtremalClass::new(0, 1).unwrap()).unwrap();
        assert_eq!(w, GleasonGenerators::new().p8);
        assert_eq!(
            min_weight_block_count(ExtremalClass::new(0, 1).unwrap()).unwrap(),
            BigInt::from(14)
        );
    }

    #[test]
    fn block_count_matches_full_enumerator() {
        for r in 0..=2 {
            for m in 0..=12 {
                let Ok(cls) = ExtremalClass::new(m, r) else {
                    continue;
                };
                let w = extremal_weight_enumerator(cls).unwrap();
                assert_eq!(w.degree() as u32, cls.length());
                assert_eq!(w.coeff(0), BigInt::one());
                for j in 1..=m as i64 {
                    assert!(w.coeff(4 * j).is_zero());
                }
                assert_eq!(
                    min_weight_block_count(cls).unwrap(),
                    w.coeff(cls.min_weight() as i64)
                );
                assert!(w.is_palindromic());
                assert!(w.terms().all(|(_, c)| c > &BigInt::zero()));
            }
        }
    }

    #[test]
    fn golay_block_count_lambda_identity() {
        let b = min_weight_block_count(ExtremalClass::new(1, 0).unwrap()).unwrap();
        assert_eq!(b, BigInt::from(759));
        // b = λ5 C(24,5) / C(8,5) with λ5 = C(3,0) = 1.
        assert_eq!(b, binomial(3, 0) * binomial(24, 5) / binomial(8, 5));
    }

    #[test]
    fn lambda5_identity_for_all_admissible_m() {
        for m in 1..=existence_bound(0) {
            let cls = ExtremalClass::new(m, 0).unwrap();
            let b = min_weight_block_count(cls).unwrap();
            let m64 = m as u64;
            let lambda = BigRational::new(b * binomial(4 * m64 + 4, 5), binomial(24 * m64, 5));
            assert_eq!(
                lambda,
                BigRational::from_integer(binomial(5 * m64 - 2, (m - 1) as i64)),
                "m = {m}"
            );
        }
    }

    #[test]
    fn invariant_basis_sizes() {
        let gens = GleasonGenerators::new();
        assert_eq!(invariant_class(0).basis(&gens, 24).len(), 2);
        assert_eq!(invariant_class(2).basis(&gens, 12).len(), 1);
        assert_eq!(invariant_class(2).basis(&gens, 14).len(), 0);
        assert_eq!(invariant_class(1).basis(&gens, 30).len(), 1);
    }
}
