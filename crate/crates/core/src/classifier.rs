//! Design strengths of support designs of extremal Type II codes.
//!
//! Everything here is table driven: baselines from the strengthened
//! Assmus–Mattson bound, upgrades at the middle and exceptional weights,
//! propagation of a hypothetical extra design through the simultaneity
//! statements, and the λ-integrality filter on `m`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, is_integer, BigRat};
use crate::gleason::{min_weight_block_count, ExtremalClass};

pub use crate::gleason::existence_bound;

/// A set `T` of design levels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DesignStrengthSet {
    pub levels: BTreeSet<u32>,
}

impl DesignStrengthSet {
    pub fn contains(&self, t: u32) -> bool {
        self.levels.contains(&t)
    }

    /// Largest `t` with `{1, …, t}` contained in the set.
    pub fn strength(&self) -> u32 {
        (1..)
            .take_while(|t| self.levels.contains(t))
            .last()
            .unwrap_or(0)
    }
}

impl<I: IntoIterator<Item = u32>> From<I> for DesignStrengthSet {
    fn from(levels: I) -> Self {
        DesignStrengthSet {
            levels: levels.into_iter().collect(),
        }
    }
}

/// Hypothesis that the support design at weight `w` is a `t`-design.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AssumedDesign {
    pub w: u32,
    pub t: u32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationAssumptions {
    pub assume_extra_design: Option<AssumedDesign>,
}

impl ClassificationAssumptions {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn assume(w: u32, t: u32) -> Self {
        ClassificationAssumptions {
            assume_extra_design: Some(AssumedDesign { w, t }),
        }
    }
}

/// Why a level is present, in order of precedence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Baseline,
    MiddleWeight,
    Exceptional,
    Assumed,
    Simultaneity,
    Pairing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub m: u32,
    pub r: u32,
    pub w: u32,
    pub design_set: DesignStrengthSet,
    pub provenance: BTreeMap<u32, Provenance>,
}

pub fn baseline_design_set(r: u32) -> Result<DesignStrengthSet> {
    match r {
        0 => Ok([1, 2, 3, 4, 5, 7].into()),
        1 => Ok([1, 2, 3, 5].into()),
        2 => Ok([1, 3].into()),
        _ => Err(Error::InvalidClass {
            m: 0,
            r,
            reason: "r must be 0, 1 or 2".into(),
        }),
    }
}

/// Unconditional upgrades at the middle weight `n/2` (r = 1, 2).
fn middle_upgrade(r: u32) -> &'static [u32] {
    match r {
        1 => &[7],
        2 => &[5],
        _ => &[],
    }
}

/// Exceptional `(m, r, weights, level)` upgrades; both mirrors listed.
const EXCEPTIONAL: [(u32, u32, [u32; 2], u32); 2] = [(4, 1, [24, 80], 6), (8, 1, [40, 160], 8)];

fn exceptional_upgrade(m: u32, r: u32, w: u32) -> Option<u32> {
    EXCEPTIONAL
        .iter()
        .find(|(em, er, ws, _)| *em == m && *er == r && ws.contains(&w))
        .map(|&(_, _, _, t)| t)
}

/// Levels that hold at every weight at once, with whether the middle weight
/// is excluded from the statement.
fn simultaneity_levels(m: u32, r: u32) -> Vec<(u32, bool)> {
    match r {
        0 => vec![(6, false)],
        1 => {
            let mut v = vec![(4, false), (7, true)];
            if m != 4 {
                v.push((6, false));
            }
            v
        }
        _ => vec![(2, false), (4, false), (5, true)],
    }
}

/// `6 ⇒ 7`, `4 ⇒ 5`, `2 ⇒ 3` respectively.
fn pairing(r: u32) -> (u32, u32) {
    match r {
        0 => (6, 7),
        1 => (4, 5),
        _ => (2, 3),
    }
}

/// Largest level an assumption may assert; beyond it the class is known
/// never to reach.
fn max_assumable(r: u32) -> u32 {
    if r == 2 {
        5
    } else {
        7
    }
}

fn check_weight(cls: &ExtremalClass, w: u32) -> Result<()> {
    let (d, n) = (cls.min_weight(), cls.length());
    if w % 4 != 0 || w < d || w > n - d {
        return Err(Error::InvalidWeight {
            w,
            n,
            lo: d,
            hi: n - d,
        });
    }
    Ok(())
}

/// Unconditional levels at weight `w`.
fn unconditional(cls: &ExtremalClass, w: u32) -> BTreeMap<u32, Provenance> {
    let (m, r) = (cls.m(), cls.r());
    let mut out = BTreeMap::new();
    for &t in &baseline_design_set(r).expect("validated class").levels {
        out.insert(t, Provenance::Baseline);
    }
    if w == cls.middle_weight() {
        for &t in middle_upgrade(r) {
            out.entry(t).or_insert(Provenance::MiddleWeight);
        }
    }
    if let Some(t) = exceptional_upgrade(m, r, w) {
        out.entry(t).or_insert(Provenance::Exceptional);
    }
    out
}

pub fn classify(
    m: u32,
    r: u32,
    w: u32,
    assumptions: &ClassificationAssumptions,
) -> Result<Classification> {
    let cls = ExtremalClass::new(m, r)?;
    check_weight(&cls, w)?;
    let n = cls.length();
    let mut levels = unconditional(&cls, w);

    if let Some(AssumedDesign { w: aw, t: at }) = assumptions.assume_extra_design {
        check_weight(&cls, aw)?;
        let known = unconditional(&cls, aw);
        if at == 0 || (at > max_assumable(r) && !known.contains_key(&at)) {
            return Err(Error::InvalidAssumption(format!(
                "a {at}-design at weight {aw} is outside the levels 1..={} reachable for n = {n}",
                max_assumable(r)
            )));
        }
        let asserted: BTreeSet<u32> = (1..=at).chain(known.keys().copied()).collect();
        if w == aw || w == n - aw {
            for &t in &asserted {
                levels.entry(t).or_insert(Provenance::Assumed);
            }
        }
        let middle = cls.middle_weight();
        for (t, skips_middle) in simultaneity_levels(m, r) {
            let source_ok = !(skips_middle && aw == middle);
            let target_ok = !(skips_middle && w == middle);
            if asserted.contains(&t) && source_ok && target_ok {
                levels.entry(t).or_insert(Provenance::Simultaneity);
            }
        }
    }

    // An assumed or propagated t-design is an i-design for every i <= t.
    let implied: Vec<(u32, Provenance)> = levels
        .iter()
        .filter(|(_, p)| matches!(p, Provenance::Assumed | Provenance::Simultaneity))
        .map(|(&t, &p)| (t, p))
        .collect();
    for (t, p) in implied {
        for i in 1..t {
            levels.entry(i).or_insert(p);
        }
    }
    let (from, to) = pairing(r);
    if levels.contains_key(&from) {
        levels.entry(to).or_insert(Provenance::Pairing);
    }

    Ok(Classification {
        m,
        r,
        w,
        design_set: levels.keys().copied().into(),
        provenance: levels,
    })
}

/// Attainable `(δ, s)` pairs, where `δ` is the least and `s` the largest
/// strength over nontrivial weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SDeltaBounds {
    pub r: u32,
    pub description: String,
    pub pairs: Vec<(u32, u32)>,
    /// Either `δ >= janusz_threshold`, or `δ = janusz_threshold - 2` and no
    /// nontrivial weight holds a `(janusz_threshold - 1)`-design. Which
    /// branch a code falls into is not decided here.
    pub janusz_threshold: u32,
}

impl SDeltaBounds {
    pub fn allows(&self, delta: u32, s: u32) -> bool {
        self.pairs.contains(&(delta, s))
    }
}

pub fn s_delta_bounds(r: u32) -> Result<SDeltaBounds> {
    let (description, pairs): (&str, Vec<(u32, u32)>) = match r {
        0 => ("delta = s = 5 or delta = s = 7", vec![(5, 5), (7, 7)]),
        1 => (
            "delta = s = 3 or 5 <= delta <= s <= 7",
            std::iter::once((3, 3)).chain(ordered_pairs(5, 7)).collect(),
        ),
        2 => (
            "delta = s = 1 or 3 <= delta <= s <= 5",
            std::iter::once((1, 1)).chain(ordered_pairs(3, 5)).collect(),
        ),
        _ => return Err(baseline_design_set(r).unwrap_err()),
    };
    Ok(SDeltaBounds {
        r,
        description: description.into(),
        pairs,
        janusz_threshold: 7 - 2 * r,
    })
}

fn ordered_pairs(lo: u32, hi: u32) -> impl Iterator<Item = (u32, u32)> {
    (lo..=hi).flat_map(move |d| (d..=hi).map(move |s| (d, s)))
}

/// `λ_i` of the minimum-weight support design `D_{4m+4}`.
pub fn min_weight_lambda(m: u32, r: u32, i: u32) -> Result<BigRat> {
    Ok(min_weight_lambdas(m, r, i)?.pop().expect("i >= 1"))
}

/// `λ_1, …, λ_through` of `D_{4m+4}`.
pub fn min_weight_lambdas(m: u32, r: u32, through: u32) -> Result<Vec<BigRat>> {
    let cls = ExtremalClass::new(m, r)?;
    if through == 0 {
        return Err(Error::InvalidParameter("levels start at 1".into()));
    }
    let (n, k) = (cls.length() as u64, cls.min_weight() as u64);
    if r == 0 {
        let lambda5 = binomial(5 * m as u64 - 2, m as i64 - 1);
        return Ok((1..=through as u64)
            .map(|i| {
                if i >= 5 {
                    let j = i as i64 - 5;
                    BigRat::new(
                        &lambda5 * binomial(4 * m as u64 - 1, j),
                        binomial(24 * m as u64 - 5, j),
                    )
                } else {
                    let j = 5 - i as i64;
                    BigRat::new(&lambda5 * binomial(n - i, j), binomial(k - i, j))
                }
            })
            .collect());
    }
    let b = min_weight_block_count(cls)?;
    Ok((1..=through as i64)
        .map(|i| BigRat::new(&b * binomial(k, i), binomial(n, i)))
        .collect())
}

fn filter_range(r: u32) -> Result<(u32, u32)> {
    match r {
        0 => Ok((6, 8)),
        1 => Ok((4, 8)),
        2 => Ok((2, 6)),
        _ => Err(baseline_design_set(r).unwrap_err()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaRow {
    pub m: u32,
    /// `(i, λ_i)` for `1 <= i <= through`, as decimal strings.
    pub lambdas: Vec<(u32, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaFilterReport {
    pub r: u32,
    pub t: u32,
    pub through: u32,
    pub m_max: u32,
    pub m_list: Vec<u32>,
    pub rows: Vec<LambdaRow>,
}

/// All `m` up to the existence bound for which `λ_1, …, λ_through` of the
/// minimum-weight design are integers.
pub fn lambda_integrality_filter(r: u32, t: u32, through: u32) -> Result<LambdaFilterReport> {
    let (lo, hi) = filter_range(r)?;
    if t < lo || t > hi || through < t || through > hi {
        return Err(Error::InvalidParameter(format!(
            "need {lo} <= t <= through <= {hi} for r = {r}, got t = {t}, through = {through}"
        )));
    }
    let m_max = existence_bound(r);
    let rows: Vec<Option<LambdaRow>> = (1..=m_max)
        .into_par_iter()
        .map(|m| -> Result<Option<LambdaRow>> {
            let values = min_weight_lambdas(m, r, through)?;
            if !values.iter().all(is_integer) {
                return Ok(None);
            }
            let lambdas = (1..)
                .zip(values.iter().map(|l| l.to_integer().to_string()))
                .collect();
            Ok(Some(LambdaRow { m, lambdas }))
        })
        .collect::<Result<_>>()?;
    let rows: Vec<LambdaRow> = rows.into_iter().flatten().collect();
    Ok(LambdaFilterReport {
        r,
        t,
        through,
        m_max,
        m_list: rows.iter().map(|row| row.m).collect(),
        rows,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenMSet {
    pub r: u32,
    pub t: u32,
    pub through: u32,
    pub ms: &'static [u32],
}

/// Published necessary sets of `m` for the minimum-weight design to be a
/// `t`-design.
pub const GOLDEN_M_SETS: [GoldenMSet; 7] = [
    GoldenMSet {
        r: 0,
        t: 6,
        through: 7,
        ms: &[
            15, 52, 55, 57, 59, 60, 63, 90, 93, 104, 105, 107, 118, 125, 127, 135, 143, 151,
        ],
    },
    GoldenMSet {
        r: 1,
        t: 4,
        through: 5,
        ms: &[15, 35, 45, 58, 75, 85, 90, 95, 113, 115, 120, 125],
    },
    GoldenMSet {
        r: 1,
        t: 6,
        through: 6,
        ms: &[58],
    },
    GoldenMSet {
        r: 1,
        t: 7,
        through: 7,
        ms: &[58],
    },
    GoldenMSet {
        r: 2,
        t: 2,
        through: 3,
        ms: &[
            5, 10, 20, 23, 25, 35, 44, 45, 50, 55, 60, 70, 72, 75, 79, 80, 85, 93, 95, 110, 118,
            120, 121, 123, 125, 130, 142, 144, 145, 149, 150, 155, 156, 157, 160, 163,
        ],
    },
    GoldenMSet {
        r: 2,
        t: 4,
        through: 4,
        ms: &[10, 23, 79, 93, 118, 120, 123, 125, 142],
    },
    GoldenMSet {
        r: 2,
        t: 5,
        through: 5,
        ms: &[23, 79, 93, 118, 120, 123, 125, 142],
    },
];

pub fn golden_m_set(r: u32, t: u32, through: u32) -> Option<&'static GoldenMSet> {
    GOLDEN_M_SETS
        .iter()
        .find(|g| g.r == r && g.t == t && g.through == through)
}

/// Structured comparison of a filter result against published data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MSetComparison {
    pub r: u32,
    pub t: u32,
    pub through: u32,
    pub golden: Vec<u32>,
    pub computed: Vec<u32>,
    /// In the published set but rejected by the filter.
    pub missing: Vec<u32>,
    /// Accepted by the filter but absent from the published set.
    pub extra: Vec<u32>,
    pub agrees: bool,
}

pub fn compare_with_golden(report: &LambdaFilterReport) -> Option<MSetComparison> {
    let golden = golden_m_set(report.r, report.t, report.through)?;
    let g: BTreeSet<u32> = golden.ms.iter().copied().collect();
    let c: BTreeSet<u32> = report.m_list.iter().copied().collect();
    let missing: Vec<u32> = g.difference(&c).copied().collect();
    let extra: Vec<u32> = c.difference(&g).copied().collect();
    Some(MSetComparison {
        r: report.r,
        t: report.t,
        through: report.through,
        golden: g.into_iter().collect(),
        computed: c.into_iter().collect(),
        agrees: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
    })
}

/// Runs the filter for every published set and compares.
pub fn reproduce_m_sets() -> Result<Vec<MSetComparison>> {
    GOLDEN_M_SETS
        .iter()
        .map(|g| {
            let report = lambda_integrality_filter(g.r, g.t, g.through)?;
            Ok(compare_with_golden(&report).expect("golden entry exists"))
        })
        .collect()
}

/// Whether `λ_i` is a nonnegative integer for every `i` in `levels`.
pub fn lambdas_integral(m: u32, r: u32, levels: impl IntoIterator<Item = u32>) -> Result<bool> {
    let levels: Vec<u32> = levels.into_iter().collect();
    let Some(&top) = levels.iter().max() else {
        return Ok(true);
    };
    let all = min_weight_lambdas(m, r, top)?;
    Ok(levels.iter().all(|&i| {
        i >= 1 && is_integer(&all[i as usize - 1]) && all[i as usize - 1] >= BigRat::zero()
    }))
}
