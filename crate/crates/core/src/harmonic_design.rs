//! Discrete harmonic functions on `k`-subsets and the design tests built on
//! them.
//!
//! Points are `0..n` and subsets are bit masks. A block system is a
//! `T`-design when `Σ_b f̃(b) = 0` for every harmonic `f` of each degree
//! `k ∈ T`; a `t`-design is a `{1, …, t}`-design.
//!
//! Two bases of `Harm_k` are available:
//!
//! * [`harm_basis`] solves `γ f = 0` exactly over the rationals. It is only
//!   practical for small `n`.
//! * [`specht_basis`] lists the functions `Π_i (e_{b_i} - e_{a_i})` for the
//!   column pairs of each standard tableau of shape `(n-k, k)`. These are
//!   integer valued, their extension is
//!   `f̃(u) = Π_i ([b_i ∈ u] - [a_i ∈ u])`, and there are exactly
//!   `C(n,k) - C(n,k-1)` of them, so the design test stays cheap at `n = 24`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{BinaryCode, Word};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, BigRat};
use crate::gleason::{invariant_class, GleasonGenerators};
use crate::xypoly::XYPoly;

/// Bound on `C(n, t)` for brute-force counting.
pub const BRUTE_FORCE_MAX_SUBSETS: u64 = 10_000_000;
/// Bound on `C(n, k)` for the elimination basis.
pub const KERNEL_MAX_COLUMNS: u64 = 4_000;

fn binom_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).unwrap_or(u64::MAX)
}

/// Colexicographic rank of a subset mask among subsets of the same size.
pub fn colex_rank(mask: Word) -> u64 {
    let mut rank = 0;
    let mut m = mask;
    let mut i = 1;
    while m != 0 {
        let p = m.trailing_zeros() as usize;
        rank += binom_u64(p, i);
        m &= m - 1;
        i += 1;
    }
    rank
}

/// Inverse of [`colex_rank`] for `k`-subsets.
pub fn colex_unrank(mut rank: u64, k: usize) -> Word {
    let mut mask: Word = 0;
    for i in (1..=k).rev() {
        let mut p = i - 1;
        while binom_u64(p + 1, i) <= rank {
            p += 1;
        }
        rank -= binom_u64(p, i);
        mask |= 1 << p;
    }
    mask
}

/// All `k`-subsets of the set bits of `within`, in colex order of positions.
pub fn subsets_of(within: Word, k: usize) -> Vec<Word> {
    let points: Vec<u32> = (0..128).filter(|&p| within >> p & 1 == 1).collect();
    let mut out = Vec::new();
    if k > points.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0, |m, &i| m | (1 << points[i])));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < points.len() - k + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        if idx[i] >= points.len() - k + i {
            return out;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    /// Values keyed by colex rank; zero values omitted.
    Table(BTreeMap<u64, BigRat>),
    /// `Π (e_b - e_a)` over disjoint `(a, b)` pairs.
    Pairs(Vec<(u8, u8)>),
}

/// A rational function on the `k`-subsets of `{0..n}` lying in `ker γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicFunction {
    n: usize,
    k: usize,
    repr: Repr,
}

impl HarmonicFunction {
    /// Wraps a table of values by colex rank. The kernel condition is not
    /// checked here; see [`HarmonicFunction::is_harmonic`].
    pub fn from_table(n: usize, k: usize, values: BTreeMap<u64, BigRat>) -> Self {
        let values = values.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        HarmonicFunction {
            n,
            k,
            repr: Repr::Table(values),
        }
    }

    /// `Π_i (e_{b_i} - e_{a_i})` for disjoint pairs `(a_i, b_i)`.
    pub fn from_pairs(n: usize, pairs: Vec<(u8, u8)>) -> Result<Self> {
        let mut seen: Word = 0;
        for &(a, b) in &pairs {
            for p in [a, b] {
                if p as usize >= n || seen >> p & 1 == 1 {
                    return Err(Error::InvalidParameter(format!(
                        "pairs must be disjoint points below {n}"
                    )));
                }
                seen |= 1 << p;
            }
        }
        Ok(HarmonicFunction {
            n,
            k: pairs.len(),
            repr: Repr::Pairs(pairs),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// `f(z)` for a `k`-subset `z`.
    pub fn value(&self, z: Word) -> BigRat {
        if z.count_ones() as usize != self.k {
            return BigRat::zero();
        }
        match &self.repr {
            Repr::Table(t) => t.get(&colex_rank(z)).cloned().unwrap_or_else(BigRat::zero),
            Repr::Pairs(_) => BigRat::from_integer(BigInt::from(self.pair_tilde(z))),
        }
    }

    fn pair_tilde(&self, u: Word) -> i64 {
        let Repr::Pairs(pairs) = &self.repr else {
            unreachable!()
        };
        let mut acc = 1i64;
        for &(a, b) in pairs {
            let d = (u >> b & 1) as i64 - (u >> a & 1) as i64;
            if d == 0 {
                return 0;
            }
            acc *= d;
        }
        acc
    }

    /// Integer-valued `f̃(u)` when available without summation.
    pub fn tilde_int(&self, u: Word) -> Option<i64> {
        match self.repr {
            Repr::Pairs(_) => Some(self.pair_tilde(u)),
            Repr::Table(_) => None,
        }
    }

    /// Dense table of values over all `k`-subsets, by colex rank.
    pub fn to_table(&self) -> BTreeMap<u64, BigRat> {
        match &self.repr {
            Repr::Table(t) => t.clone(),
            Repr::Pairs(_) => (0..binom_u64(self.n, self.k))
                .filter_map(|r| {
                    let v = self.value(colex_unrank(r, self.k));
                    (!v.is_zero()).then_some((r, v))
                })
                .collect(),
        }
    }

    /// Checks `Σ_{z ⊃ y} f(z) = 0` for every `(k-1)`-subset `y`.
    pub fn is_harmonic(&self) -> bool {
        if self.k == 0 {
            return true;
        }
        let full: Word = if self.n == 128 {
            Word::MAX
        } else {
            (1 << self.n) - 1
        };
        (0..binom_u64(self.n, self.k - 1)).all(|r| {
            let y = colex_unrank(r, self.k - 1);
            let mut sum = BigRat::zero();
            let mut rest = full & !y;
            while rest != 0 {
                let p = rest.trailing_zeros();
                sum += self.value(y | 1 << p);
                rest &= rest - 1;
            }
            sum.is_zero()
        })
    }
}

/// `f̃(u) = Σ_{z ⊂ u, |z| = k} f(z)`; zero when `|u| < k`.
pub fn tilde_extend(f: &HarmonicFunction, u: Word) -> BigRat {
    if let Some(v) = f.tilde_int(u) {
        return BigRat::from_integer(BigInt::from(v));
    }
    subsets_of(u, f.k)
        .into_iter()
        .map(|z| f.value(z))
        .fold(BigRat::zero(), |acc, v| acc + v)
}

/// Exact kernel of `γ` on degree-`k` functions, by rational row reduction
/// of the `C(n,k-1) × C(n,k)` incidence matrix.
pub fn harm_basis(n: usize, k: usize) -> Result<Vec<HarmonicFunction>> {
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    let cols = binom_u64(n, k);
    if cols > KERNEL_MAX_COLUMNS {
        return Err(Error::TooManySubsets {
            count: cols.to_string(),
            max: KERNEL_MAX_COLUMNS,
        });
    }
    let cols = cols as usize;
    if k == 0 {
        // γ on X_0 is the zero map into nothing; the constant 1 spans Harm_0.
        let mut t = BTreeMap::new();
        t.insert(0, BigRat::one());
        return Ok(vec![HarmonicFunction::from_table(n, 0, t)]);
    }
    let rows = binom_u64(n, k - 1) as usize;
    let full: Word = if n == 128 { Word::MAX } else { (1 << n) - 1 };
    let mut matrix: Vec<Vec<BigRat>> = (0..rows)
        .map(|r| {
            let y = colex_unrank(r as u64, k - 1);
            let mut row = vec![BigRat::zero(); cols];
            let mut rest = full & !y;
            while rest != 0 {
                let p = rest.trailing_zeros();
                row[colex_rank(y | 1 << p) as usize] = BigRat::one();
                rest &= rest - 1;
            }
            row
        })
        .collect();

    let pivots = rref(&mut matrix, cols);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut values = BTreeMap::new();
        values.insert(free as u64, BigRat::one());
        for &(row, col) in &pivots {
            let v = -matrix[row][free].clone();
            if !v.is_zero() {
                values.insert(col as u64, v);
            }
        }
        basis.push(HarmonicFunction::from_table(n, k, values));
    }
    Ok(basis)
}

/// Reduced row echelon form in place; returns `(row, column)` pivots.
fn rref(matrix: &mut [Vec<BigRat>], cols: usize) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == matrix.len() {
            break;
        }
        let Some(p) = (row..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, p);
        let inv = matrix[row][col].recip();
        for v in matrix[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = matrix[row].clone();
        for (r, other) in matrix.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (v, pv) in other.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    pivots
}

/// Column pairs `(a_i, b_i)` of every standard tableau of shape `(n-k, k)`.
pub fn standard_tableau_pairs(n: usize, k: usize) -> Vec<Vec<(u8, u8)>> {
    fn walk(
        next: usize,
        n: usize,
        k: usize,
        top: &mut Vec<u8>,
        bottom: &mut Vec<u8>,
        out: &mut Vec<Vec<(u8, u8)>>,
    ) {
        if next == n {
            out.push(
                bottom
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| (top[i], b))
                    .collect(),
            );
            return;
        }
        if top.len() < n - k {
            top.push(next as u8);
            walk(next + 1, n, k, top, bottom, out);
            top.pop();
        }
        if bottom.len() < k && bottom.len() < top.len() {
            bottom.push(next as u8);
            walk(next + 1, n, k, top, bottom, out);
            bottom.pop();
        }
    }
    let mut out = Vec::new();
    if 2 * k > n {
        return out;
    }
    walk(0, n, k, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Basis of `Harm_k` indexed by standard tableaux. Empty when `2k > n`
/// (where `Harm_k` is zero).
pub fn specht_basis(n: usize, k: usize) -> Vec<HarmonicFunction> {
    standard_tableau_pairs(n, k)
        .into_iter()
        .map(|pairs| HarmonicFunction {
            n,
            k,
            repr: Repr::Pairs(pairs),
        })
        .collect()
}

/// Dimension `C(n,k) - C(n,k-1)` of `Harm_k` (zero when negative).
pub fn harm_dimension(n: usize, k: usize) -> BigInt {
    let d = binomial(n as u64, k as i64) - binomial(n as u64, k as i64 - 1);
    d.max(BigInt::zero())
}

/// A block system on `n` points with blocks of size `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportDesign {
    n: usize,
    w: usize,
    blocks: Vec<Word>,
}

impl SupportDesign {
    pub fn from_masks(n: usize, w: usize, blocks: Vec<Word>) -> Result<Self> {
        let full: Word = if n == 128 { Word::MAX } else { (1 << n) - 1 };
        for &b in &blocks {
            if b & !full != 0 || b.count_ones() as usize != w {
                return Err(Error::InvalidParameter(format!(
                    "block {b:#x} is not a {w}-subset of {n} points"
                )));
            }
        }
        Ok(SupportDesign { n, w, blocks })
    }

    pub fn from_index_sets(n: usize, w: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let masks = blocks
            .iter()
            .map(|b| {
                b.iter().try_fold(0 as Word, |m, &p| {
                    if p >= n || m >> p & 1 == 1 {
                        Err(Error::InvalidParameter(format!("bad point {p} in block")))
                    } else {
                        Ok(m | 1 << p)
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(n, w, masks)
    }

    /// All `w`-subsets of `n` points.
    pub fn complete(n: usize, w: usize) -> Self {
        let blocks = (0..binom_u64(n, w)).map(|r| colex_unrank(r, w)).collect();
        SupportDesign { n, w, blocks }
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn block_size(&self) -> usize {
        self.w
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn masks(&self) -> &[Word] {
        &self.blocks
    }

    pub fn index_sets(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|&b| (0..self.n).filter(|&p| b >> p & 1 == 1).collect())
            .collect()
    }

    pub fn complement(&self) -> SupportDesign {
        let full: Word = if self.n == 128 {
            Word::MAX
        } else {
            (1 << self.n) - 1
        };
        SupportDesign {
            n: self.n,
            w: self.n - self.w,
            blocks: self.blocks.iter().map(|&b| full & !b).collect(),
        }
    }

    /// Equal to its complement as a multiset of blocks.
    pub fn is_self_complementary(&self) -> bool {
        if 2 * self.w != self.n {
            return false;
        }
        let mut a = self.blocks.clone();
        let mut b = self.complement().blocks;
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

pub fn complementary_design(d: &SupportDesign) -> SupportDesign {
    d.complement()
}

fn sum_tilde_over_blocks(f: &HarmonicFunction, blocks: &[Word]) -> BigRat {
    match f.repr {
        Repr::Pairs(_) => BigRat::from_integer(BigInt::from(
            blocks.iter().map(|&b| f.pair_tilde(b)).sum::<i64>(),
        )),
        Repr::Table(_) => blocks
            .iter()
            .map(|&b| tilde_extend(f, b))
            .fold(BigRat::zero(), |a, v| a + v),
    }
}

/// Whether `Σ_b f̃(b) = 0` for every function in `basis`.
pub fn annihilated_by(d: &SupportDesign, basis: &[HarmonicFunction]) -> bool {
    basis
        .par_iter()
        .all(|f| sum_tilde_over_blocks(f, &d.blocks).is_zero())
}

/// `T`-design test over the degrees in `levels`.
pub fn is_t_set_design(d: &SupportDesign, levels: &[usize]) -> bool {
    levels
        .iter()
        .all(|&k| annihilated_by(d, &specht_basis(d.n, k)))
}

/// Delsarte's criterion: a `t`-design iff every harmonic function of degree
/// `1..=t` sums to zero over the blocks.
pub fn delsarte_t_design_test(d: &SupportDesign, t: usize) -> bool {
    (1..=t).all(|k| annihilated_by(d, &specht_basis(d.n, k)))
}

/// Counts blocks through every `t`-subset; returns the common count, if any.
pub fn brute_force_t_design(d: &SupportDesign, t: usize) -> Result<Option<BigInt>> {
    if t > d.w || d.w > d.n {
        return Err(Error::InvalidParameter(format!(
            "need t <= w <= n, got t = {t}, w = {}, n = {}",
            d.w, d.n
        )));
    }
    let subsets = binom_u64(d.n, t);
    if subsets > BRUTE_FORCE_MAX_SUBSETS {
        return Err(Error::TooManySubsets {
            count: binomial(d.n as u64, t as i64).to_string(),
            max: BRUTE_FORCE_MAX_SUBSETS,
        });
    }
    let mut counts = vec![0u64; subsets as usize];
    for &b in &d.blocks {
        for s in subsets_of(b, t) {
            counts[colex_rank(s) as usize] += 1;
        }
    }
    let first = counts[0];
    Ok(counts
        .iter()
        .all(|&c| c == first)
        .then(|| BigInt::from(first)))
}

/// `λ_i = λ_t C(v-i, t-i) / C(k-i, t-i)`.
pub fn derived_lambda(lambda_t: &BigInt, v: usize, k: usize, t: usize, i: usize) -> BigRat {
    BigRat::new(
        lambda_t * binomial((v - i) as u64, (t - i) as i64),
        binomial((k - i) as u64, (t - i) as i64),
    )
}

/// Brute-force verdict that a self-complementary `t`-design with `t` even
/// is also a `(t+1)`-design. Errors when the preconditions fail.
pub fn alltop_upgrade(d: &SupportDesign, t: usize) -> Result<bool> {
    if t % 2 != 0 {
        return Err(Error::InvalidParameter(format!("t = {t} must be even")));
    }
    if !d.is_self_complementary() {
        return Err(Error::InvalidParameter(
            "design is not self-complementary".into(),
        ));
    }
    if brute_force_t_design(d, t)?.is_none() {
        return Err(Error::InvalidParameter(format!(
            "design is not a {t}-design"
        )));
    }
    Ok(brute_force_t_design(d, t + 1)?.is_some())
}

/// `W_{C,f}` scaled by `scale` so all coefficients are integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicEnumerator {
    pub poly: XYPoly,
    pub scale: BigInt,
}

pub fn harmonic_weight_enumerator_of_code(
    code: &BinaryCode,
    f: &HarmonicFunction,
) -> Result<HarmonicEnumerator> {
    if f.n != code.length() {
        return Err(Error::InvalidParameter(format!(
            "function on {} points, code of length {}",
            f.n,
            code.length()
        )));
    }
    let words = code.codewords()?;
    let mut by_weight: BTreeMap<usize, BigRat> = BTreeMap::new();
    for c in words {
        let v = tilde_extend(f, c);
        if !v.is_zero() {
            *by_weight
                .entry(c.count_ones() as usize)
                .or_insert_with(BigRat::zero) += v;
        }
    }
    let scale = by_weight
        .values()
        .fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let poly = XYPoly::from_terms(
        code.length(),
        by_weight
            .into_iter()
            .map(|(w, v)| (w, (v * BigRat::from_integer(scale.clone())).to_integer())),
    );
    Ok(HarmonicEnumerator { poly, scale })
}

/// Solves `target = Σ c_i basis_i` exactly, if possible.
pub fn span_membership(target: &XYPoly, basis: &[XYPoly]) -> Option<Vec<BigRat>> {
    let degree = target.degree();
    if target.is_zero() {
        return Some(vec![BigRat::zero(); basis.len()]);
    }
    if basis.iter().any(|b| b.degree() != degree) {
        return None;
    }
    // Augmented system with one row per coefficient position.
    let cols = basis.len() + 1;
    let mut matrix: Vec<Vec<BigRat>> = (0..=degree)
        .map(|j| {
            let mut row: Vec<BigRat> = basis
                .iter()
                .map(|b| BigRat::from_integer(b.coeff(j as i64)))
                .collect();
            row.push(BigRat::from_integer(target.coeff(j as i64)));
            row
        })
        .filter(|row| row.iter().any(|v| !v.is_zero()))
        .collect();
    let pivots = rref(&mut matrix, cols);
    if pivots.iter().any(|&(_, c)| c == basis.len()) {
        return None;
    }
    let mut solution = vec![BigRat::zero(); basis.len()];
    for &(row, col) in &pivots {
        solution[col] = matrix[row][basis.len()].clone();
    }
    Some(solution)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub divisible: bool,
    pub quotient_degree: Option<usize>,
    pub in_invariant_span: bool,
}

impl StructureCheck {
    pub fn conforms(&self) -> bool {
        self.divisible && self.in_invariant_span
    }
}

/// `W = (xy)^k Z` with `Z` of degree `n - 2k` in the relative invariants
/// for `χ_k`.
pub fn check_invariant_structure(w: &XYPoly, k: usize, gens: &GleasonGenerators) -> StructureCheck {
    let Some(z) = w.div_xy_power(k) else {
        return StructureCheck {
            divisible: false,
            quotient_degree: None,
            in_invariant_span: false,
        };
    };
    let degree = w.degree().saturating_sub(2 * k);
    let basis = invariant_class(k as u32).basis(gens, degree);
    let z = if z.is_zero() { XYPoly::zero(degree) } else { z };
    StructureCheck {
        divisible: true,
        quotient_degree: Some(degree),
        in_invariant_span: span_membership(&z, &basis).is_some(),
    }
}
