//! Exact integer and rational arithmetic shared by every other module.
//!
//! Integers are [`num_bigint::BigInt`] and rationals are
//! [`num_rational::BigRational`], which is always kept in lowest terms with
//! a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type BigRat = BigRational;

/// Binomial coefficient `C(n, k)`, zero whenever `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient with a possibly negative top argument treated as an
/// empty range (returns zero). Convenient for formulas such as `C(α, j+1)`
/// evaluated near the edges.
pub fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    binomial(n as u64, k)
}

pub fn is_integer(q: &BigRat) -> bool {
    q.denom().is_one()
}

pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRat {
    BigRational::new(num.into(), den.into())
}

pub fn rat_int(n: impl Into<BigInt>) -> BigRat {
    BigRational::from_integer(n.into())
}

/// Integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Decimal rendering of a rational: `p` for integers, `p/q` otherwise.
pub fn rat_to_string(q: &BigRat) -> String {
    if is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn product_formula(n: u64, k: u64) -> BigInt {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..k {
            num *= BigInt::from(n - i);
            den *= BigInt::from(i + 1);
        }
        num / den
    }

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(24, 5), product_formula(24, 5));
        assert_eq!(binomial(24, 5), BigInt::from(42504));
        assert_eq!(binomial(17, 0), BigInt::one());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(3, 0), BigInt::one());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial_i(-1, 0), BigInt::zero());
    }

    #[test]
    fn binomial_symmetry_up_to_200() {
        for n in 0..=200u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), binomial(n, (n - k) as i64));
            }
        }
    }

    #[test]
    fn integrality() {
        assert!(is_integer(&rat(6, 3)));
        assert!(!is_integer(&rat(7, 3)));
        assert!(is_integer(&rat(-8, 4)));
        // λ6 for m = 15 with n = 24m, k = 4m+4.
        let m = 15u64;
        let lambda6 = BigRat::new(
            binomial(5 * m - 2, (m - 1) as i64) * binomial(4 * m - 1, 1),
            binomial(24 * m - 5, 1),
        );
        assert!(is_integer(&lambda6));
        // m = 14 is not in the admissible set.
        let m = 14u64;
        let lambda6 = BigRat::new(
            binomial(5 * m - 2, (m - 1) as i64) * binomial(4 * m - 1, 1),
            binomial(24 * m - 5, 1),
        );
        assert!(!is_integer(&lambda6));
    }

    #[test]
    fn sqrt_detection() {
        assert_eq!(exact_sqrt(&BigInt::from(784)), Some(BigInt::from(28)));
        assert_eq!(exact_sqrt(&BigInt::from(154)), None);
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
        assert_eq!(exact_sqrt(&BigInt::zero()), Some(BigInt::zero()));
    }

    proptest! {
        #[test]
        fn pascal(n in 1u64..400, k in 0i64..400) {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
        }

        #[test]
        fn rational_field_axioms(
            a in -50i64..50, b in 1i64..50,
            c in -50i64..50, d in 1i64..50,
            e in -50i64..50, f in 1i64..50,
        ) {
            let x = rat(a, b);
            let y = rat(c, d);
            let z = rat(e, f);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
            prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            prop_assert_eq!(&x - &x, BigRat::zero());
            if !x.is_zero() {
                prop_assert_eq!(&x * x.recip(), BigRat::one());
            }
            prop_assert!(x.denom().is_positive());
        }
    }
}
