//! Coefficient vanishing for the two polynomial families behind every
//! harmonic enumerator:
//!
//! * `Q = (x^4 - y^4)^α (x^8 + 14x^4y^4 + y^8)^β`, `β ∈ {1, 2}`
//! * `R = (x^4 - y^4)^α (x^4 + y^4)(x^8 - 34x^4y^4 + y^8)`
//!
//! Coefficients are addressed by the signed index `i`: the term
//! `(x^4)^(D-i) (-y^4)^i` where `D` is the degree in `x^4, y^4`. The signed
//! coefficient is `(-1)^i` times the raw coefficient of `x^(4D-4i) y^(4i)`.
//! Zero tests do not care about the sign; [`raw_to_signed`] converts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{binomial_i, exact_sqrt, rat, rat_int, BigRat};
use crate::xypoly::{octic_minus34, octic_plus14, x4_minus_y4, x4_plus_y4, XYPoly};

/// Largest α the searches cover (`4m` with `m <= 163`).
pub const ALPHA_MAX: u32 = 652;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ZeroHit {
    pub alpha: u32,
    pub i: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Q,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QFamily {
    pub alpha: u32,
    pub beta: u32,
}

impl QFamily {
    pub fn new(alpha: u32, beta: u32) -> Result<Self> {
        if beta != 1 && beta != 2 {
            return Err(Error::InvalidParameter(format!(
                "beta must be 1 or 2, got {beta}"
            )));
        }
        Ok(QFamily { alpha, beta })
    }

    /// Degree in `x^4, y^4`.
    pub fn half_degree(&self) -> u32 {
        self.alpha + 2 * self.beta
    }

    pub fn poly(&self) -> XYPoly {
        x4_minus_y4()
            .pow(self.alpha)
            .mul(&octic_plus14().pow(self.beta))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RFamily {
    pub alpha: u32,
}

impl RFamily {
    pub fn half_degree(&self) -> u32 {
        self.alpha + 3
    }

    pub fn poly(&self) -> XYPoly {
        x4_minus_y4()
            .pow(self.alpha)
            .mul(&x4_plus_y4())
            .mul(&octic_minus34())
    }
}

/// Converts a raw coefficient at signed index `i` to the signed form.
pub fn raw_to_signed(raw: BigInt, i: u32) -> BigInt {
    if i % 2 == 0 {
        raw
    } else {
        -raw
    }
}

/// y-exponent of the term with signed index `i`.
pub fn y_exponent(i: u32) -> usize {
    4 * i as usize
}

/// Which closed-form formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QIndex {
    /// Small signed index handled by an explicit edge formula:
    /// `i ∈ {0, 1}` for `β = 1`, `i ∈ {0, 1, 2, 3}` for `β = 2`.
    Edge(u32),
    /// Interior formula in the proof variable `j`; addresses signed index
    /// `j + 1` (β = 1) or `j + 2` (β = 2).
    Interior(u32),
}

fn alt_binomial(alpha: u32, k: i64) -> BigInt {
    binomial_i(alpha as i64, k)
}

fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Raw coefficient of `x^(4(α+2β-i)) y^(4i)` in `Q`, evaluated through the
/// edge formulas or the rational interior formula.
pub fn q_coeff_closed_form(alpha: u32, beta: u32, index: QIndex) -> Result<BigInt> {
    QFamily::new(alpha, beta)?;
    let a = alpha as i64;
    match (beta, index) {
        (1, QIndex::Edge(0)) | (2, QIndex::Edge(0)) => Ok(BigInt::one()),
        (1, QIndex::Edge(1)) => Ok(BigInt::from(14) - alt_binomial(alpha, 1)),
        (2, QIndex::Edge(1)) => Ok(BigInt::from(28) - alt_binomial(alpha, 1)),
        (2, QIndex::Edge(2)) => Ok(
            BigInt::from(198) - BigInt::from(28) * alt_binomial(alpha, 1) + alt_binomial(alpha, 2),
        ),
        (2, QIndex::Edge(3)) => Ok(
            BigInt::from(28) - BigInt::from(198) * alt_binomial(alpha, 1)
                + BigInt::from(28) * alt_binomial(alpha, 2)
                - alt_binomial(alpha, 3),
        ),
        (_, QIndex::Edge(i)) => Err(Error::IndexOutOfRange {
            what: format!("edge formulas of the beta = {beta} family"),
            index: i as i64,
            valid: if beta == 1 {
                "0..=1".into()
            } else {
                "0..=3".into()
            },
        }),
        (1, QIndex::Interior(j)) => {
            let j = j as i64;
            if !(1..=a - 1).contains(&j) {
                return Err(interior_range_error(alpha, beta, j));
            }
            let factor = rat(j, a - j + 1) - rat_int(14) + rat(a - j, j + 1);
            finish_interior(factor, alpha, j, j - 1)
        }
        (2, QIndex::Interior(j)) => {
            let j = j as i64;
            if !(2..=a - 2).contains(&j) {
                return Err(interior_range_error(alpha, beta, j));
            }
            let factor = rat(j * (j - 1), (a - j + 2) * (a - j + 1)) - rat(28 * j, a - j + 1)
                + rat_int(198)
                - rat(28 * (a - j), j + 1)
                + rat((a - j) * (a - j - 1), (j + 1) * (j + 2));
            finish_interior(factor, alpha, j, j - 2)
        }
        _ => unreachable!("beta validated"),
    }
}

fn interior_range_error(alpha: u32, beta: u32, j: i64) -> Error {
    Error::IndexOutOfRange {
        what: format!("interior formula (alpha = {alpha}, beta = {beta})"),
        index: j,
        valid: format!("{}..={}", beta, alpha as i64 - beta as i64),
    }
}

fn finish_interior(factor: BigRat, alpha: u32, j: i64, sign_exp: i64) -> Result<BigInt> {
    let value = factor * rat_int(alt_binomial(alpha, j) * sign(sign_exp));
    debug_assert!(value.is_integer(), "interior coefficient must be integral");
    Ok(value.to_integer())
}

/// Raw coefficient of `Q` at signed index `i` (any `0 <= i <= α+2β`),
/// dispatching to edge, interior, or mirrored edge formulas.
pub fn q_coeff(alpha: u32, beta: u32, i: u32) -> Result<BigInt> {
    let fam = QFamily::new(alpha, beta)?;
    let top = fam.half_degree();
    if i > top {
        return Err(Error::IndexOutOfRange {
            what: "Q coefficient".into(),
            index: i as i64,
            valid: format!("0..={top}"),
        });
    }
    let edge_max = 2 * beta - 1;
    if i <= edge_max {
        q_coeff_closed_form(alpha, beta, QIndex::Edge(i))
    } else if top - i <= edge_max {
        // The symmetric factor is palindromic, so the top coefficients mirror
        // the bottom ones up to (-1)^α.
        let mirrored = q_coeff_closed_form(alpha, beta, QIndex::Edge(top - i))?;
        Ok(if alpha % 2 == 0 { mirrored } else { -mirrored })
    } else {
        q_coeff_closed_form(alpha, beta, QIndex::Interior(i - beta))
    }
}

/// The factored form of the R-family interior ratio
/// `J = (α-2j-1)(32j² - 32(α-1)j - (α+1)(α+66)) / ((α-j+1)(j+1)(j+2))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFactorization {
    pub linear: BigInt,
    pub quadratic: BigInt,
    pub denominator: BigInt,
    pub value: BigRat,
}

pub fn j_factorization(alpha: u32, j: u32) -> Result<JFactorization> {
    let (a, jj) = (alpha as i64, j as i64);
    if !(1..=a - 1).contains(&jj) {
        return Err(Error::IndexOutOfRange {
            what: format!("J factorization (alpha = {alpha})"),
            index: jj,
            valid: format!("1..={}", a - 1),
        });
    }
    let linear = BigInt::from(a - 2 * jj - 1);
    let quadratic = BigInt::from(32 * jj * jj - 32 * (a - 1) * jj - (a + 1) * (a + 66));
    let denominator = BigInt::from((a - jj + 1) * (jj + 1) * (jj + 2));
    let value = BigRat::new(&linear * &quadratic, denominator.clone());
    Ok(JFactorization {
        linear,
        quadratic,
        denominator,
        value,
    })
}

/// `J` evaluated term by term from its defining sum.
pub fn j_unfactored(alpha: u32, j: u32) -> BigRat {
    let (a, j) = (alpha as i64, j as i64);
    rat(j, a - j + 1) + rat_int(33)
        - rat(33 * (a - j), j + 1)
        - rat((a - j) * (a - j - 1), (j + 1) * (j + 2))
}

/// Raw coefficient of `R` at signed index `i`.
pub fn r_coeff(alpha: u32, i: u32) -> Result<BigInt> {
    let top = alpha + 3;
    if i > top {
        return Err(Error::IndexOutOfRange {
            what: "R coefficient".into(),
            index: i as i64,
            valid: format!("0..={top}"),
        });
    }
    let edge = |k: u32| -> BigInt {
        match k {
            0 => BigInt::one(),
            1 => BigInt::from(-33) - alt_binomial(alpha, 1),
            _ => BigInt::from(33) * (BigInt::from(alpha) - 1) + alt_binomial(alpha, 2),
        }
    };
    if i <= 2 {
        Ok(edge(i))
    } else if top - i <= 2 {
        let mirrored = edge(top - i);
        Ok(if alpha % 2 == 0 { mirrored } else { -mirrored })
    } else {
        let j = i - 2;
        let jf = j_factorization(alpha, j)?;
        let value = jf.value * rat_int(alt_binomial(alpha, j as i64) * sign(j as i64 - 1));
        debug_assert!(value.is_integer());
        Ok(value.to_integer())
    }
}

fn sorted_hits(mut hits: Vec<ZeroHit>) -> Vec<ZeroHit> {
    hits.sort();
    hits
}

/// All `(α, i)` with `0 <= α <= alpha_max`, `0 <= i <= (α+2β)/2` where the
/// closed-form coefficient of `Q` vanishes.
pub fn search_zero_coeffs_q(beta: u32, alpha_max: u32) -> Result<Vec<ZeroHit>> {
    QFamily::new(0, beta)?;
    let hits = (0..=alpha_max)
        .into_par_iter()
        .flat_map_iter(|alpha| {
            let half = (alpha + 2 * beta) / 2;
            (0..=half).filter_map(move |i| {
                let c = q_coeff(alpha, beta, i).expect("index within range");
                c.is_zero().then_some(ZeroHit { alpha, i })
            })
        })
        .collect();
    Ok(sorted_hits(hits))
}

/// All `(α, i)` with `1 <= α <= alpha_max`, `0 <= i <= (α+3)/2` where the
/// closed-form coefficient of `R` vanishes.
pub fn search_zero_coeffs_r(alpha_max: u32) -> Vec<ZeroHit> {
    let hits = (1..=alpha_max)
        .into_par_iter()
        .flat_map_iter(|alpha| {
            let half = (alpha + 3) / 2;
            (0..=half).filter_map(move |i| {
                let c = r_coeff(alpha, i).expect("index within range");
                c.is_zero().then_some(ZeroHit { alpha, i })
            })
        })
        .collect();
    sorted_hits(hits)
}

/// Zero hits found by expanding each polynomial with [`XYPoly`]. Shares no
/// code with the closed forms; `(x^4 - y^4)^α` is built incrementally.
pub fn search_zero_coeffs_expanded(
    family: Family,
    beta: u32,
    alpha_min: u32,
    alpha_max: u32,
) -> Result<Vec<ZeroHit>> {
    let (symmetric, offset) = match family {
        Family::Q => {
            QFamily::new(0, beta)?;
            (octic_plus14().pow(beta), 2 * beta)
        }
        Family::R => (x4_plus_y4().mul(&octic_minus34()), 3),
    };
    let step = x4_minus_y4();
    let mut power = XYPoly::one();
    let mut hits = Vec::new();
    for alpha in 0..=alpha_max {
        if alpha > 0 {
            power = power.mul(&step);
        }
        if alpha < alpha_min {
            continue;
        }
        let poly = power.mul(&symmetric);
        let half = (alpha + offset) / 2;
        for i in 0..=half {
            if poly.coeff_ref(y_exponent(i)).is_none() {
                hits.push(ZeroHit { alpha, i });
            }
        }
    }
    Ok(hits)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellSolution {
    pub x: BigInt,
    pub y: BigInt,
}

impl PellSolution {
    pub fn satisfies(&self) -> bool {
        &self.x * &self.x - BigInt::from(3) * &self.y * &self.y == BigInt::one()
    }

    /// `α = Y² - 2` from `α + 2 = Y²`.
    pub fn alpha(&self) -> BigInt {
        &self.y * &self.y - 2
    }
}

/// First `count` nontrivial solutions of `X² - 3Y² = 1`, from `(2, 1)` by
/// `(X, Y) -> (2X + 3Y, X + 2Y)`.
pub fn pell_solutions(count: usize) -> Vec<PellSolution> {
    let mut out = Vec::with_capacity(count);
    let mut x = BigInt::from(2);
    let mut y = BigInt::one();
    for _ in 0..count {
        out.push(PellSolution {
            x: x.clone(),
            y: y.clone(),
        });
        let nx = BigInt::from(2) * &x + BigInt::from(3) * &y;
        let ny = &x + BigInt::from(2) * &y;
        x = nx;
        y = ny;
    }
    out
}

/// Integer roots of `16j² - 16αj + α² - 13α - 14 = 0`, i.e.
/// `j = (2α ± √((3α+7)(α+2))) / 4`. Sorted and deduplicated.
pub fn quadratic_j_roots(alpha: u32) -> Vec<i64> {
    let a = BigInt::from(alpha);
    let disc = (BigInt::from(3) * &a + 7) * (&a + 2);
    let Some(s) = exact_sqrt(&disc) else {
        return Vec::new();
    };
    let four = BigInt::from(4);
    let mut roots: Vec<i64> = [&a * 2 - &s, &a * 2 + &s]
        .into_iter()
        .filter(|num: &BigInt| num.is_multiple_of(&four))
        .map(|num| i64::try_from(num / &four).expect("root fits in i64"))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots
}

/// Numerator `16j² - 16αj + α² - 13α - 14` of the β = 1 interior ratio.
pub fn q_interior_numerator(alpha: u32, j: i64) -> BigInt {
    let a = alpha as i64;
    BigInt::from(16 * j * j - 16 * a * j + a * a - 13 * a - 14)
}

/// Whether both `3α + 7` and `α + 2` are perfect squares.
pub fn pell_square_pair(alpha: u32) -> bool {
    let a = BigInt::from(alpha);
    exact_sqrt(&(BigInt::from(3) * &a + 7)).is_some() && exact_sqrt(&(&a + 2)).is_some()
}

/// Whether `J`'s quadratic factor is negative (the sign that forces
/// `α = 2j + 1` at any zero).
pub fn j_quadratic_is_negative(alpha: u32, j: u32) -> bool {
    j_factorization(alpha, j)
        .map(|f| f.quadratic.is_negative())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    /// Direct convolution oracle: raw coefficient of `Y^k` in
    /// `(1 - Y)^α · Σ s_l Y^l`.
    fn convolution(alpha: u32, sym: &[i64], k: i64) -> BigInt {
        sym.iter()
            .enumerate()
            .map(|(l, &s)| {
                let e = k - l as i64;
                BigInt::from(s) * binomial_i(alpha as i64, e) * sign(e)
            })
            .sum()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            q_coeff_closed_form(3, 1, QIndex::Interior(1)).unwrap(),
            BigInt::from(-38)
        );
        assert_eq!(convolution(3, &[1, 14, 1], 2), BigInt::from(-38));
        assert!(q_coeff_closed_form(14, 1, QIndex::Edge(1))
            .unwrap()
            .is_zero());
        assert!(q_coeff_closed_form(28, 2, QIndex::Edge(1))
            .unwrap()
            .is_zero());
        assert!(q_coeff_closed_form(10, 1, QIndex::Interior(0)).is_err());
        assert!(q_coeff_closed_form(10, 1, QIndex::Interior(10)).is_err());
        assert!(q_coeff_closed_form(10, 2, QIndex::Interior(1)).is_err());
        assert!(q_coeff_closed_form(10, 2, QIndex::Interior(9)).is_err());
        assert!(q_coeff_closed_form(10, 1, QIndex::Edge(2)).is_err());
        assert!(q_coeff_closed_form(10, 3, QIndex::Edge(0)).is_err());
    }

    #[test]
    fn closed_forms_match_convolution() {
        for alpha in 0..=40 {
            for i in 0..=alpha + 2 {
                assert_eq!(
                    q_coeff(alpha, 1, i).unwrap(),
                    convolution(alpha, &[1, 14, 1], i as i64)
                );
            }
            for i in 0..=alpha + 4 {
                assert_eq!(
                    q_coeff(alpha, 2, i).unwrap(),
                    convolution(alpha, &[1, 28, 198, 28, 1], i as i64)
                );
            }
            for i in 0..=alpha + 3 {
                assert_eq!(
                    r_coeff(alpha, i).unwrap(),
                    convolution(alpha, &[1, -33, -33, 1], i as i64)
                );
            }
        }
    }

    #[test]
    fn small_searches() {
        assert!(search_zero_coeffs_q(1, 10).unwrap().is_empty());
        assert!(search_zero_coeffs_expanded(Family::Q, 1, 0, 10)
            .unwrap()
            .is_empty());
        let r = search_zero_coeffs_r(5);
        assert_eq!(
            r,
            vec![
                ZeroHit { alpha: 1, i: 2 },
                ZeroHit { alpha: 3, i: 3 },
                ZeroHit { alpha: 5, i: 4 },
            ]
        );
        assert_eq!(search_zero_coeffs_expanded(Family::R, 0, 1, 5).unwrap(), r);
    }

    #[test]
    fn r_alpha_one_and_two() {
        let r1 = RFamily { alpha: 1 }.poly();
        assert_eq!(
            r1,
            XYPoly::from_terms(16, [(0usize, 1i64), (4, -34), (12, 34), (16, -1)])
        );
        let r2 = RFamily { alpha: 2 }.poly();
        for i in 0..=5u32 {
            assert!(r2.coeff_ref(y_exponent(i)).is_some());
        }
    }

    #[test]
    fn j_examples() {
        let f = j_factorization(5, 1).unwrap();
        assert_eq!(f.value, rat(-174, 5));
        assert_eq!(
            (f.linear.clone(), f.quadratic.clone()),
            (BigInt::from(2), BigInt::from(-522))
        );
        assert_eq!(j_unfactored(5, 1), f.value);
        assert_eq!(j_factorization(3, 1).unwrap().quadratic, BigInt::from(-308));
        for j in 1..40 {
            assert!(j_factorization(2 * j + 1, j).unwrap().value.is_zero());
        }
        assert!(j_factorization(5, 0).is_err());
        assert!(j_factorization(5, 5).is_err());
    }

    #[test]
    fn pell() {
        let sols = pell_solutions(5);
        let pairs: Vec<(i64, i64)> = sols
            .iter()
            .map(|s| (i64::try_from(&s.x).unwrap(), i64::try_from(&s.y).unwrap()))
            .collect();
        assert_eq!(pairs, vec![(2, 1), (7, 4), (26, 15), (97, 56), (362, 209)]);
        assert!(sols.iter().all(PellSolution::satisfies));
        let alphas: Vec<BigInt> = sols.iter().map(PellSolution::alpha).collect();
        assert_eq!(
            alphas,
            [-1, 14, 223, 3134, 43679].map(BigInt::from).to_vec()
        );
        assert!(pell_solutions(40).iter().all(PellSolution::satisfies));
    }

    #[test]
    fn quadratic_roots() {
        assert_eq!(quadratic_j_roots(223), vec![14, 209]);
        assert_eq!(quadratic_j_roots(14), vec![0, 14]);
        assert!(quadratic_j_roots(5).is_empty());
        for &r in &quadratic_j_roots(223) {
            assert!(q_interior_numerator(223, r).is_zero());
        }
    }

    #[test]
    fn gcd_is_one() {
        for alpha in 0..=ALPHA_MAX {
            let a = BigInt::from(alpha);
            let lhs: BigInt = BigInt::from(3) * &a + 7;
            let rhs: BigInt = &a + 2;
            assert!(lhs.gcd(&rhs).is_one());
        }
    }

    #[test]
    fn interior_zero_iff_square_pair() {
        for alpha in 0..=ALPHA_MAX {
            let a = alpha as i64;
            let has_root = (-a - 10..=2 * a + 10).any(|j| q_interior_numerator(alpha, j).is_zero());
            assert_eq!(has_root, pell_square_pair(alpha), "alpha = {alpha}");
            assert_eq!(has_root, !quadratic_j_roots(alpha).is_empty());
        }
        // Only α = 223 has a root strictly inside 1..α-1.
        let interior: Vec<u32> = (3..=ALPHA_MAX)
            .filter(|&a| (1..a as i64).any(|j| q_interior_numerator(a, j).is_zero()))
            .collect();
        assert_eq!(interior, vec![223]);
    }

    #[test]
    fn j_quadratic_negative_everywhere() {
        for alpha in 3..=ALPHA_MAX {
            for j in 1..alpha {
                assert!(j_quadratic_is_negative(alpha, j));
            }
        }
    }
}
