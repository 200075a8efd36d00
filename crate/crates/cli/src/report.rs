//! The `analyze` report and its JSON form (schema `weyl-report/1`, documented
//! in `docs/report-schema.md`).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use weyl_core::{
    analyze_with, edges, grade_components, grade_span, power_index, to_h_form, AnalyzeOptions,
    BiPoly, GradeSpan, JoiningVertex, Monomial, Result, UniPoly, Verdict, Weight, WeylElement,
};

pub const SCHEMA_VERSION: &str = "weyl-report/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub input: String,
    pub normal_form: ElementText,
    /// Absent for the zero element.
    pub grade_span: Option<GradeSpan>,
    pub grade_components: Vec<GradeComponent>,
    /// Absent for the zero element.
    pub polygon: Option<PolygonReport>,
    pub verdict: Verdict,
    pub witness: Option<ElementText>,
    /// Side of the witness-search box, if the search ran.
    pub oracle_bound: Option<u32>,
}

/// An element with both its canonical text and its exact terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementText {
    pub text: String,
    pub terms: WeylElement,
}

impl From<&WeylElement> for ElementText {
    fn from(x: &WeylElement) -> Self {
        ElementText {
            text: x.to_string(),
            terms: x.clone(),
        }
    }
}

/// Grade `s` part of `x`, also written as `f(h) q^s` (`s >= 0`) or
/// `f(h) p^-s` (`s < 0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeComponent {
    pub grade: i64,
    pub element: ElementText,
    pub h_polynomial: UniPoly,
    pub h_text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonReport {
    pub edges: Vec<EdgeReport>,
    pub vertices: Vec<JoiningVertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub weight: Weight,
    pub degree: i64,
    pub support: BTreeSet<Monomial>,
    pub polynomial: BiPoly,
    pub polynomial_text: String,
    /// Only defined at axis weights `(n,1)` and `(1,n)`.
    pub power_index: Option<u32>,
}

pub fn h_text(f: &UniPoly) -> String {
    f.to_string().replace('X', "h")
}

pub fn grade_report(x: &WeylElement) -> Vec<GradeComponent> {
    let hf = to_h_form(x);
    grade_components(x)
        .into_iter()
        .map(|(grade, part)| {
            let f = hf.get(grade).cloned().unwrap_or_default();
            GradeComponent {
                grade,
                element: (&part).into(),
                h_text: h_text(&f),
                h_polynomial: f,
            }
        })
        .collect()
}

pub fn polygon_report(x: &WeylElement) -> Result<Option<PolygonReport>> {
    if x.is_zero() {
        return Ok(None);
    }
    let profile = edges(x)?;
    let edges = profile
        .edges
        .into_iter()
        .map(|e| {
            let power_index = if e.weight.is_axis() {
                Some(power_index(&e.polynomial, e.weight)?)
            } else {
                None
            };
            Ok(EdgeReport {
                weight: e.weight,
                degree: e.degree,
                support: e.support,
                polynomial_text: e.polynomial.to_string(),
                polynomial: e.polynomial,
                power_index,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Some(PolygonReport {
        edges,
        vertices: profile.vertices,
    }))
}

pub fn build_report(input: &str, x: &WeylElement, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let verdict = analyze_with(x, opts)?;
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION.to_string(),
        input: input.to_string(),
        normal_form: x.into(),
        grade_span: grade_span(x).ok(),
        grade_components: grade_report(x),
        polygon: polygon_report(x)?,
        witness: verdict.witness.as_ref().map(ElementText::from),
        oracle_bound: verdict.box_bound,
        verdict,
    })
}
