//! Homogeneous bivariate polynomials in `x`, `y` with big-integer
//! coefficients.
//!
//! A polynomial of total degree `n` is stored sparsely, keyed by the
//! exponent of `y`: key `j` holds the coefficient of `x^(n-j) y^j`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::binomial;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XYPoly {
    degree: usize,
    coeffs: BTreeMap<usize, BigInt>,
}

impl XYPoly {
    pub fn zero(degree: usize) -> Self {
        XYPoly {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `c · x^a · y^b`.
    pub fn monomial(c: impl Into<BigInt>, xexp: usize, yexp: usize) -> Self {
        let mut p = Self::zero(xexp + yexp);
        let c = c.into();
        if !c.is_zero() {
            p.coeffs.insert(yexp, c);
        }
        p
    }

    /// Builds a polynomial from `(yexp, coeff)` pairs; repeated exponents
    /// accumulate. Panics if an exponent exceeds `degree`.
    pub fn from_terms<I, C>(degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut dense = vec![BigInt::zero(); degree + 1];
        for (j, c) in terms {
            assert!(j <= degree, "y-exponent {j} exceeds degree {degree}");
            dense[j] += c.into();
        }
        Self::from_dense(degree, dense)
    }

    /// Dense coefficient vector indexed by y-exponent, length `degree + 1`.
    pub fn from_dense(degree: usize, dense: Vec<BigInt>) -> Self {
        debug_assert!(dense.len() <= degree + 1);
        let coeffs = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        XYPoly { degree, coeffs }
    }

    pub fn to_dense(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.degree + 1];
        for (&j, c) in &self.coeffs {
            v[j] = c.clone();
        }
        v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^(deg - yexp) y^yexp`; zero when absent or out of range.
    pub fn coeff(&self, yexp: i64) -> BigInt {
        if yexp < 0 {
            return BigInt::zero();
        }
        self.coeffs
            .get(&(yexp as usize))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn coeff_ref(&self, yexp: usize) -> Option<&BigInt> {
        self.coeffs.get(&yexp)
    }

    /// Nonzero terms in increasing y-exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&j, c)| (j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn mul(&self, other: &XYPoly) -> XYPoly {
        let degree = self.degree + other.degree;
        if self.is_zero() || other.is_zero() {
            return XYPoly::zero(degree);
        }
        let mut dense = vec![BigInt::zero(); degree + 1];
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                dense[i + j] += a * b;
            }
        }
        XYPoly::from_dense(degree, dense)
    }

    pub fn pow(&self, e: u32) -> XYPoly {
        let mut result = XYPoly::one();
        if e == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut e = e;
        loop {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        result
    }

    /// Sum of two polynomials of the same degree. Panics on degree mismatch
    /// unless one side is the zero polynomial.
    pub fn add(&self, other: &XYPoly) -> XYPoly {
        let degree = self.common_degree(other);
        let mut coeffs = self.coeffs.clone();
        for (&j, c) in &other.coeffs {
            let entry = coeffs.entry(j).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&j);
            }
        }
        XYPoly { degree, coeffs }
    }

    pub fn neg(&self) -> XYPoly {
        XYPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(&j, c)| (j, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &XYPoly) -> XYPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &BigInt) -> XYPoly {
        if s.is_zero() {
            return XYPoly::zero(self.degree);
        }
        XYPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(&j, c)| (j, c * s)).collect(),
        }
    }

    fn common_degree(&self, other: &XYPoly) -> usize {
        if self.degree == other.degree {
            self.degree
        } else if self.is_zero() {
            other.degree
        } else if other.is_zero() {
            self.degree
        } else {
            panic!(
                "adding homogeneous polynomials of degrees {} and {}",
                self.degree, other.degree
            )
        }
    }

    /// Divides by `(xy)^k`, returning `None` unless every term is divisible.
    pub fn div_xy_power(&self, k: usize) -> Option<XYPoly> {
        if self.degree < 2 * k {
            return if self.is_zero() {
                Some(XYPoly::zero(0))
            } else {
                None
            };
        }
        let mut coeffs = BTreeMap::new();
        for (&j, c) in &self.coeffs {
            if j < k || self.degree - j < k {
                return None;
            }
            coeffs.insert(j - k, c.clone());
        }
        Some(XYPoly {
            degree: self.degree - 2 * k,
            coeffs,
        })
    }

    /// Exact division by another homogeneous polynomial. Returns `None` when
    /// the divisor does not divide `self` over the integers.
    pub fn div_exact(&self, divisor: &XYPoly) -> Option<XYPoly> {
        if divisor.is_zero() || divisor.degree > self.degree {
            return None;
        }
        let (&low, lead) = divisor.coeffs.iter().next()?;
        let qdeg = self.degree - divisor.degree;
        let mut rem = self.to_dense();
        let mut quot = vec![BigInt::zero(); qdeg + 1];
        for j in 0..=qdeg {
            let c = &rem[j + low];
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (&dj, dc) in &divisor.coeffs {
                rem[j + dj] -= &q * dc;
            }
            quot[j] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(XYPoly::from_dense(qdeg, quot))
    }

    /// Evaluates `p(a·x + b·y, c·x + d·y)` exactly.
    pub fn linear_substitute(&self, a: i64, b: i64, c: i64, d: i64) -> XYPoly {
        let n = self.degree;
        let first = XYPoly::from_terms(1, [(0usize, a), (1, b)]);
        let second = XYPoly::from_terms(1, [(0usize, c), (1, d)]);
        let mut first_pows = vec![XYPoly::one()];
        let mut second_pows = vec![XYPoly::one()];
        for _ in 0..n {
            let f = first_pows.last().unwrap().mul(&first);
            first_pows.push(f);
            let s = second_pows.last().unwrap().mul(&second);
            second_pows.push(s);
        }
        let mut acc = XYPoly::zero(n);
        for (&j, coeff) in &self.coeffs {
            let term = first_pows[n - j].mul(&second_pows[j]).scale(coeff);
            acc = acc.add(&term);
        }
        acc
    }

    /// Checks `coeff(j) == coeff(deg - j)` for every `j`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&j, c)| self.coeffs.get(&(self.degree - j)) == Some(c))
    }

    /// JSON-friendly `[yexp, decimal]` pairs.
    pub fn to_pairs(&self) -> Vec<(usize, String)> {
        self.coeffs
            .iter()
            .map(|(&j, c)| (j, c.to_string()))
            .collect()
    }

    /// Polynomial `(x + s·y)^e` expanded via binomials. Used by oracles.
    pub fn binomial_power(s: i64, e: u32) -> XYPoly {
        let e64 = e as u64;
        let s = BigInt::from(s);
        let mut spow = BigInt::one();
        let mut terms = Vec::with_capacity(e as usize + 1);
        for j in 0..=e64 {
            terms.push((j as usize, binomial(e64, j as i64) * &spow));
            spow *= &s;
        }
        XYPoly::from_terms(e as usize, terms)
    }
}

impl fmt::Display for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&j, c) in &self.coeffs {
            let xe = self.degree - j;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut parts = Vec::new();
            if !mag.is_one() || (xe == 0 && j == 0) {
                parts.push(mag.to_string());
            }
            match xe {
                0 => {}
                1 => parts.push("x".to_string()),
                _ => parts.push(format!("x^{xe}")),
            }
            match j {
                0 => {}
                1 => parts.push("y".to_string()),
                _ => parts.push(format!("y^{j}")),
            }
            write!(f, "{}", parts.join("·"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XYPoly[deg {}]({})", self.degree, self)
    }
}

impl Mul for &XYPoly {
    type Output = XYPoly;
    fn mul(self, rhs: &XYPoly) -> XYPoly {
        XYPoly::mul(self, rhs)
    }
}

impl Add for &XYPoly {
    type Output = XYPoly;
    fn add(self, rhs: &XYPoly) -> XYPoly {
        XYPoly::add(self, rhs)
    }
}

impl Sub for &XYPoly {
    type Output = XYPoly;
    fn sub(self, rhs: &XYPoly) -> XYPoly {
        XYPoly::sub(self, rhs)
    }
}

impl Neg for &XYPoly {
    type Output = XYPoly;
    fn neg(self) -> XYPoly {
        XYPoly::neg(self)
    }
}

/// `x^4 - y^4`.
pub fn x4_minus_y4() -> XYPoly {
    XYPoly::from_terms(4, [(0usize, 1i64), (4, -1)])
}

/// `x^4 + y^4`.
pub fn x4_plus_y4() -> XYPoly {
    XYPoly::from_terms(4, [(0usize, 1i64), (4, 1)])
}

/// `x^8 - 34 x^4 y^4 + y^8`.
pub fn octic_minus34() -> XYPoly {
    XYPoly::from_terms(8, [(0usize, 1i64), (4, -34), (8, 1)])
}

/// `x^8 + 14 x^4 y^4 + y^8`.
pub fn octic_plus14() -> XYPoly {
    XYPoly::from_terms(8, [(0usize, 1i64), (4, 14), (8, 1)])
}

/// `(xy)^k`.
pub fn xy_power(k: usize) -> XYPoly {
    XYPoly::monomial(1, k, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(deg: usize, terms: &[(usize, i64)]) -> XYPoly {
        XYPoly::from_terms(deg, terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let prod = x4_minus_y4().mul(&x4_plus_y4());
        assert_eq!(prod, p(8, &[(0, 1), (8, -1)]));
    }

    #[test]
    fn square_of_linear() {
        let l = p(1, &[(0, 1), (1, -1)]);
        assert_eq!(l.mul(&l), p(2, &[(0, 1), (1, -2), (2, 1)]));
    }

    #[test]
    fn powers() {
        assert_eq!(x4_minus_y4().pow(2), p(8, &[(0, 1), (4, -2), (8, 1)]));
        let one = octic_plus14().pow(0);
        assert_eq!(one.degree(), 0);
        assert_eq!(one.coeff(0), BigInt::one());
        let q = x4_minus_y4().pow(14).mul(&octic_plus14());
        assert_eq!(q.degree(), 64);
        assert!(q.coeff(4).is_zero());
        assert!(!q.coeff(8).is_zero());
    }

    #[test]
    fn coefficient_lookup() {
        let p8 = octic_plus14();
        assert_eq!(p8.coeff(4), BigInt::from(14));
        assert!(p8.coeff(1).is_zero());
        assert!(p8.coeff(-3).is_zero());
        assert!(p8.coeff(99).is_zero());
        let q = x4_minus_y4().pow(3).mul(&octic_plus14());
        // (X-Y)^3 (X^2 + 14XY + Y^2) expanded by hand: coefficient of X^3 Y^2.
        let by_hand = 1 * 3 + 14 * (-3) + 1 * 1;
        assert_eq!(by_hand, -38);
        assert_eq!(q.coeff(8), BigInt::from(-38));
    }

    #[test]
    fn rendering() {
        assert_eq!(octic_plus14().to_string(), "x^8 + 14·x^4·y^4 + y^8");
        assert_eq!(p(2, &[(1, -2)]).to_string(), "-2·x·y");
        assert_eq!(XYPoly::zero(3).to_string(), "0");
        assert_eq!(
            octic_plus14().to_pairs(),
            vec![(0, "1".into()), (4, "14".into()), (8, "1".into())]
        );
    }

    #[test]
    fn xy_division() {
        let q = xy_power(3).mul(&octic_plus14());
        assert_eq!(q.div_xy_power(3), Some(octic_plus14()));
        assert_eq!(octic_plus14().div_xy_power(1), None);
        let d = octic_plus14().mul(&x4_minus_y4());
        assert_eq!(d.div_exact(&x4_minus_y4()), Some(octic_plus14()));
        assert_eq!(octic_plus14().div_exact(&x4_minus_y4()), None);
    }

    #[test]
    fn substitution_matches_binomial_expansion() {
        // (x + y)^5 from substituting into x^5.
        let x5 = XYPoly::monomial(1, 5, 0);
        assert_eq!(
            x5.linear_substitute(1, 1, 1, -1),
            XYPoly::binomial_power(1, 5)
        );
        // P8 is invariant under the MacWilliams map: 2^4 P8(x,y) = P8(x+y, x-y).
        let p8 = octic_plus14();
        assert_eq!(
            p8.linear_substitute(1, 1, 1, -1),
            p8.scale(&BigInt::from(16))
        );
    }

    #[test]
    fn symmetric_factor_mirror_property() {
        // For S symmetric in x, y: coeff(p, 4i) = (-1)^α coeff(p, deg - 4i).
        let s = octic_plus14().mul(&octic_minus34()).mul(&x4_plus_y4());
        for alpha in 0..=50u32 {
            let q = x4_minus_y4().pow(alpha).mul(&s);
            let deg = q.degree() as i64;
            let sign = if alpha % 2 == 0 { 1 } else { -1 };
            for i in 0..=(deg / 4) {
                assert_eq!(q.coeff(4 * i), q.coeff(deg - 4 * i) * BigInt::from(sign));
            }
        }
    }

    fn small_poly() -> impl Strategy<Value = XYPoly> {
        (0usize..5).prop_flat_map(|deg| {
            proptest::collection::vec(-9i64..9, deg + 1)
                .prop_map(move |cs| XYPoly::from_terms(deg, cs.into_iter().enumerate()))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b).degree(), a.degree() + b.degree());
            // Distributivity needs b and c of a common degree.
            let c2 = XYPoly::from_terms(b.degree(), c.to_dense().into_iter().take(b.degree() + 1).enumerate());
            prop_assert_eq!(a.mul(&b.add(&c2)), a.mul(&b).add(&a.mul(&c2)));
        }

        #[test]
        fn pow_matches_repeated_product(a in small_poly(), e in 0u32..6) {
            let mut acc = XYPoly::one();
            for _ in 0..e {
                acc = acc.mul(&a);
            }
            prop_assert_eq!(a.pow(e), acc);
        }
    }
}
