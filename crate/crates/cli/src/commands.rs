use std::fs;

use serde_json::{json, Value};
use typeii_core::classifier::{self, ClassificationAssumptions};
use typeii_core::codes::{self, BinaryCode};
use typeii_core::gleason::{extremal_weight_enumerator, min_weight_block_count, ExtremalClass};
use typeii_core::harmonic_design::{brute_force_t_design, delsarte_t_design_test};
use typeii_core::harmonic_enum::{vanishing_weights, HarmonicEnumeratorCase};
use typeii_core::vanishing::{
    pell_solutions, search_zero_coeffs_expanded, search_zero_coeffs_q, search_zero_coeffs_r,
    Family, QFamily, ZeroHit,
};
use typeii_core::xypoly::XYPoly;

use crate::{CliError, CodeSource, DesignMethod, FamilyArg, Outcome, SearchMethod};

pub fn poly_json(p: &XYPoly) -> Value {
    json!({
        "degree": p.degree(),
        "coefficients": p
            .to_pairs()
            .into_iter()
            .map(|(j, c)| json!({ "y_exp": j, "coeff": c }))
            .collect::<Vec<_>>(),
    })
}

pub struct SearchResult {
    pub hits: Vec<ZeroHit>,
    pub closed: Option<Vec<ZeroHit>>,
    pub expanded: Option<Vec<ZeroHit>>,
}

impl SearchResult {
    pub fn agrees(&self) -> bool {
        match (&self.closed, &self.expanded) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }
}

pub fn run_search(
    family: Family,
    beta: u32,
    alpha_max: u32,
    method: SearchMethod,
) -> Result<SearchResult, CliError> {
    if family == Family::Q {
        QFamily::new(0, beta)?;
    }
    let closed = (method != SearchMethod::Expanded)
        .then(|| match family {
            Family::Q => search_zero_coeffs_q(beta, alpha_max),
            Family::R => Ok(search_zero_coeffs_r(alpha_max)),
        })
        .transpose()?;
    let alpha_min = if family == Family::R { 1 } else { 0 };
    let expanded = (method != SearchMethod::Closed)
        .then(|| search_zero_coeffs_expanded(family, beta, alpha_min, alpha_max))
        .transpose()?;
    let hits = closed
        .clone()
        .or_else(|| expanded.clone())
        .unwrap_or_default();
    Ok(SearchResult {
        hits,
        closed,
        expanded,
    })
}

pub fn search_zeros(
    family: FamilyArg,
    beta: u32,
    alpha_max: u32,
    method: SearchMethod,
) -> Result<Outcome, CliError> {
    let family = match family {
        FamilyArg::Q => Family::Q,
        FamilyArg::R => Family::R,
    };
    let res = run_search(family, beta, alpha_max, method)?;
    let agrees = res.agrees();
    let method_name = format!("{method:?}").to_lowercase();
    Ok(Outcome {
        params: json!({
            "family": family,
            "beta": (family == Family::Q).then_some(beta),
            "alpha_max": alpha_max,
            "method": method_name,
        }),
        results: json!({
            "family": family,
            "hits": res.hits,
            "method_agreement": (method == SearchMethod::Both).then_some(agrees),
        }),
        passed: agrees,
        summary: format!(
            "{} zero coefficients up to alpha = {alpha_max}",
            res.hits.len()
        ),
    })
}

pub fn pell(count: usize) -> Outcome {
    let sols = pell_solutions(count);
    Outcome {
        params: json!({ "count": count }),
        results: json!({
            "solutions": sols
                .iter()
                .map(|s| json!({
                    "x": s.x.to_string(),
                    "y": s.y.to_string(),
                    "alpha": s.alpha().to_string(),
                    "satisfies": s.satisfies(),
                }))
                .collect::<Vec<_>>(),
        }),
        passed: sols.iter().all(|s| s.satisfies()),
        summary: format!("{count} Pell solutions"),
    }
}

pub fn henum(m: u32, r: u32, t: u32, weights_only: bool) -> Result<Outcome, CliError> {
    let case = HarmonicEnumeratorCase::new(m, r, t)?;
    let weights = vanishing_weights(m, r, t)?;
    let mut results = json!({
        "degree": case.length(),
        "case": case,
        "is_edge": case.is_edge(),
        "vanishing_weights": weights,
    });
    if !weights_only {
        results["polynomial"] = poly_json(&case.poly());
    }
    Ok(Outcome {
        params: json!({ "m": m, "r": r, "t": t, "weights_only": weights_only }),
        results,
        passed: true,
        summary: format!("vanishing weights: {weights:?}"),
    })
}

fn parse_assume(text: &str) -> Result<ClassificationAssumptions, CliError> {
    let (t, w) = text
        .split_once('@')
        .ok_or_else(|| CliError(format!("--assume expects t@w, got '{text}'")))?;
    let t: u32 = t
        .trim()
        .parse()
        .map_err(|_| CliError(format!("bad level in '{text}'")))?;
    let w: u32 = w
        .trim()
        .parse()
        .map_err(|_| CliError(format!("bad weight in '{text}'")))?;
    Ok(ClassificationAssumptions::assume(w, t))
}

pub fn classify(m: u32, r: u32, w: u32, assume: Option<&str>) -> Result<Outcome, CliError> {
    let assumptions = assume.map(parse_assume).transpose()?.unwrap_or_default();
    let c = classifier::classify(m, r, w, &assumptions)?;
    Ok(Outcome {
        params: json!({ "m": m, "r": r, "w": w, "assume": assumptions.assume_extra_design }),
        summary: format!("D_{w} is a {:?}-design", c.design_set.levels),
        results: json!({
            "design_set": c.design_set.levels,
            "provenance": c.provenance,
            "s_delta_bounds": classifier::s_delta_bounds(r)?,
        }),
        passed: true,
    })
}

pub fn lambda_filter(r: u32, t: u32, through: u32) -> Result<Outcome, CliError> {
    let report = classifier::lambda_integrality_filter(r, t, through)?;
    let comparison = classifier::compare_with_golden(&report);
    Ok(Outcome {
        params: json!({ "r": r, "t": t, "through": through }),
        summary: format!("{} values of m pass", report.m_list.len()),
        results: json!({
            "m_max": report.m_max,
            "m_list": report.m_list,
            "lambdas": report.rows,
            "published_comparison": comparison,
        }),
        passed: true,
    })
}

pub fn load_code(source: &CodeSource) -> Result<(String, BinaryCode), CliError> {
    match (&source.gen, &source.builtin) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
            Ok((path.display().to_string(), BinaryCode::from_ascii(&text)?))
        }
        (None, Some(name)) => Ok((name.clone(), codes::builtin(name)?)),
        (None, None) => Err(CliError("either --gen or --builtin is required".into())),
    }
}

pub struct DesignVerdict {
    pub delsarte: Option<bool>,
    pub brute_lambda: Option<Option<String>>,
    pub blocks: usize,
}

impl DesignVerdict {
    pub fn is_t_design(&self) -> bool {
        self.delsarte
            .unwrap_or_else(|| matches!(self.brute_lambda, Some(Some(_))))
    }

    pub fn agreement(&self) -> bool {
        match (self.delsarte, &self.brute_lambda) {
            (Some(d), Some(b)) => d == b.is_some(),
            _ => true,
        }
    }
}

pub fn design_verdict(
    code: &BinaryCode,
    w: usize,
    t: usize,
    method: DesignMethod,
) -> Result<DesignVerdict, CliError> {
    let design = code.support_design(w)?;
    let delsarte = (method != DesignMethod::Brute).then(|| delsarte_t_design_test(&design, t));
    let brute_lambda = (method != DesignMethod::Delsarte)
        .then(|| brute_force_t_design(&design, t).map(|l| l.map(|l| l.to_string())))
        .transpose()?;
    Ok(DesignVerdict {
        delsarte,
        brute_lambda,
        blocks: design.num_blocks(),
    })
}

pub fn verify_code(
    source: &CodeSource,
    w: usize,
    t: usize,
    method: DesignMethod,
) -> Result<Outcome, CliError> {
    let (name, code) = load_code(source)?;
    let v = design_verdict(&code, w, t, method)?;
    let agreement = v.agreement();
    Ok(Outcome {
        params: json!({ "code": name, "w": w, "t": t, "method": format!("{method:?}").to_lowercase() }),
        summary: format!(
            "weight {w} supports ({} blocks): {}a {t}-design",
            v.blocks,
            if v.is_t_design() { "" } else { "not " }
        ),
        results: json!({
            "length": code.length(),
            "blocks": v.blocks,
            "is_t_design": v.is_t_design(),
            "delsarte": v.delsarte,
            "lambda": v.brute_lambda.clone().flatten(),
            "method_agreement": (method == DesignMethod::Both).then_some(agreement),
        }),
        passed: agreement,
    })
}

pub fn profile_json(code: &BinaryCode) -> Result<Value, CliError> {
    let p = code.profile()?;
    Ok(json!({
        "length": p.length,
        "dimension": p.dimension,
        "is_self_dual": p.is_self_dual,
        "is_doubly_even": p.is_doubly_even,
        "min_weight": p.min_weight,
        "weight_distribution": p
            .weight_distribution
            .iter()
            .map(|(w, a)| json!({ "weight": w, "count": a }))
            .collect::<Vec<_>>(),
        "weight_enumerator": poly_json(&p.weight_enumerator),
    }))
}

pub fn code_profile(source: &CodeSource) -> Result<Outcome, CliError> {
    let (name, code) = load_code(source)?;
    let results = profile_json(&code)?;
    Ok(Outcome {
        params: json!({ "code": name }),
        summary: format!("[{}, {}] code", code.length(), code.dimension()),
        results,
        passed: true,
    })
}

pub fn gleason_enum(m: u32, r: u32) -> Result<Outcome, CliError> {
    let cls = ExtremalClass::new(m, r)?;
    let w = extremal_weight_enumerator(cls)?;
    Ok(Outcome {
        params: json!({ "m": m, "r": r }),
        summary: format!("extremal enumerator of length {}", cls.length()),
        results: json!({
            "length": cls.length(),
            "min_weight": cls.min_weight(),
            "min_weight_count": min_weight_block_count(cls)?.to_string(),
            "enumerator": poly_json(&w),
        }),
        passed: true,
    })
}
