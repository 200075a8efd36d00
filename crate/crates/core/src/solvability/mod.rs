//! Solvability of `[x, y] = 1`.
//!
//! [`analyze`] runs a fixed ladder of structural criteria. Every unsolvability
//! rule is a theorem, so an `Unsolvable` verdict is sound; a `Solvable`
//! verdict always carries a witness that has been checked exactly. Anything
//! else is reported as `Unknown`, together with the rules that were tried.

mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Result, WeylError};
use crate::grading::{grade_span, h_poly_of_grade_zero, is_homogeneous};
use crate::polygon::{edges, weight_degree, weight_polynomial, Degree, Weight};
use crate::power::power_index;
use crate::scalar::Scalar;
use crate::weyl::WeylElement;

pub use oracle::{find_witness_box, find_witness_box_capped, DEFAULT_BOX_BOUND, DEFAULT_BOX_CAP};

/// The fixed registry of rules the ladder may cite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    ConstantElement,
    LowGradeBand,
    HomogeneousHighDegree,
    PolynomialInGenerator,
    NonAxisEdge,
    AxisPowerIndexOne,
    EdgeGcdOne,
    AffineFamily,
    LinearInGenerator,
    OracleWitness,
}

impl RuleId {
    /// Statement of the criterion the rule encodes.
    pub fn citation(self) -> &'static str {
        match self {
            RuleId::ConstantElement => "scalars commute with everything, so [x,y] = 0 for all y",
            RuleId::LowGradeBand => {
                "x = x_k + ... + x_n with x_i in A_i and k > 1 is unsolvable; \
                 by the automorphism omega so is any x whose components all lie in grades < -1"
            }
            RuleId::HomogeneousHighDegree => {
                "x in A_i with i > 0 (or i < 0, via omega) and v(x) >= rho+sigma for some weight is unsolvable"
            }
            RuleId::PolynomialInGenerator => {
                "a solvable polynomial c_0 + c_1 z + ... + c_n z^n in a non-scalar z has n = 1; \
                 applied with z = q, p or h"
            }
            RuleId::NonAxisEdge => {
                "an edge at a weight with rho, sigma not dividing each other and v(x) > rho+sigma \
                 puts x outside the nilpotent classes, and solvable elements are nilpotent"
            }
            RuleId::AxisPowerIndexOne => {
                "at an axis weight (n,1) or (1,n) with v(x) >= n+1, a leading polynomial that is not a \
                 proper power forces x to be unsolvable"
            }
            RuleId::EdgeGcdOne => {
                "if v(x) >= rho+sigma for every weight and x has k >= 2 edges at axis weights, \
                 the power indices r_1..r_k of a solvable x have gcd > 1"
            }
            RuleId::AffineFamily => {
                "x = a*p + g(q) (a != 0) has witness a^-1 q; x = a*q + g(p) has witness -a^-1 p"
            }
            RuleId::LinearInGenerator => "x = c_0 + c_1 q or c_0 + c_1 p with c_1 != 0 is solvable",
            RuleId::OracleWitness => "a witness was found by the bounded linear-system search",
        }
    }

    /// Rules tried in ladder order.
    pub const LADDER: [RuleId; 9] = [
        RuleId::ConstantElement,
        RuleId::LowGradeBand,
        RuleId::HomogeneousHighDegree,
        RuleId::PolynomialInGenerator,
        RuleId::AffineFamily,
        RuleId::NonAxisEdge,
        RuleId::AxisPowerIndexOne,
        RuleId::EdgeGcdOne,
        RuleId::OracleWitness,
    ];
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Solvable,
    Unsolvable,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub rule: RuleId,
    pub parameters: BTreeMap<String, String>,
    pub citation: String,
}

impl Reason {
    fn new<const N: usize>(rule: RuleId, params: [(&str, String); N]) -> Self {
        Reason {
            rule,
            parameters: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            citation: rule.citation().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Option<WeylElement>,
    pub reasons: Vec<Reason>,
    /// Every rule evaluated, in order, including the one that decided.
    pub attempted: Vec<RuleId>,
    /// Box bound used by the witness search, if it ran.
    pub box_bound: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Side of the witness-search box; `None` disables the search.
    pub box_bound: Option<u32>,
    pub box_cap: u32,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            box_bound: Some(DEFAULT_BOX_BOUND),
            box_cap: DEFAULT_BOX_CAP,
        }
    }
}

pub fn verify_witness(x: &WeylElement, y: &WeylElement) -> bool {
    x.commutator(y).is_one()
}

/// Witness for `a*p + g(q)` or `a*q + g(p)` with `a != 0`.
pub fn witness_for_affine(x: &WeylElement) -> Option<WeylElement> {
    affine_witness(x).map(|(_, y)| y)
}

fn affine_witness(x: &WeylElement) -> Option<(RuleId, WeylElement)> {
    let only_q_besides = |i_axis: bool| {
        x.terms().all(|(&(i, j), _)| {
            if i_axis {
                i == 0 || (i, j) == (1, 0)
            } else {
                j == 0 || (i, j) == (0, 1)
            }
        })
    };
    let a = x.coeff(1, 0);
    if !a.is_zero() && only_q_besides(true) {
        let rule = if x.max_q_degree() <= Some(0) {
            RuleId::LinearInGenerator
        } else {
            RuleId::AffineFamily
        };
        return Some((rule, WeylElement::q().scale(&a.recip())));
    }
    let a = x.coeff(0, 1);
    if !a.is_zero() && only_q_besides(false) {
        let rule = if x.max_p_degree() <= Some(0) {
            RuleId::LinearInGenerator
        } else {
            RuleId::AffineFamily
        };
        return Some((rule, WeylElement::p().scale(&-a.recip())));
    }
    None
}

/// Whether `v_{rho,sigma}(x) >= rho + sigma` for every weight. Equivalent to
/// the convex hull of the support meeting `{z : z_1 >= 1, z_2 >= 1}`, which
/// is decided on single support points and on segments between pairs.
pub fn dominates_unit(x: &WeylElement) -> Result<bool> {
    if x.is_zero() {
        return Err(WeylError::ZeroElement("weighted degree bound"));
    }
    let pts: Vec<(i64, i64)> = x.terms().map(|(&(i, j), _)| (i as i64, j as i64)).collect();
    if pts.iter().any(|&(i, j)| i >= 1 && j >= 1) {
        return Ok(true);
    }
    for (k, &a) in pts.iter().enumerate() {
        for &b in &pts[k + 1..] {
            if segment_meets_quadrant(a, b) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Is there `t` in `[0, 1]` with `t*a + (1-t)*b >= (1, 1)` componentwise?
fn segment_meets_quadrant(a: (i64, i64), b: (i64, i64)) -> bool {
    // Each coordinate gives t*(a_k - b_k) >= 1 - b_k; intersect the t-intervals.
    let mut lo = Scalar::zero();
    let mut hi = Scalar::from_integer(1.into());
    for (ak, bk) in [(a.0, b.0), (a.1, b.1)] {
        let slope = ak - bk;
        let rhs = 1 - bk;
        match slope.cmp(&0) {
            std::cmp::Ordering::Equal => {
                if rhs > 0 {
                    return false;
                }
            }
            std::cmp::Ordering::Greater => {
                lo = lo.max(Scalar::new(rhs.into(), slope.into()));
            }
            std::cmp::Ordering::Less => {
                hi = hi.min(Scalar::new(rhs.into(), slope.into()));
            }
        }
    }
    lo <= hi
}

pub fn analyze(x: &WeylElement) -> Result<Verdict> {
    analyze_with(x, &AnalyzeOptions::default())
}

pub fn analyze_with(x: &WeylElement, opts: &AnalyzeOptions) -> Result<Verdict> {
    let mut ladder = Ladder::default();

    ladder.attempt(RuleId::ConstantElement);
    if x.is_constant() {
        return Ok(ladder.unsolvable(Reason::new(
            RuleId::ConstantElement,
            [("value", x.to_string())],
        )));
    }

    ladder.attempt(RuleId::LowGradeBand);
    let span = grade_span(x)?;
    if span.min_grade > 1 {
        return Ok(ladder.unsolvable(Reason::new(
            RuleId::LowGradeBand,
            [
                ("min_grade", span.min_grade.to_string()),
                ("side", "positive".into()),
            ],
        )));
    }
    if span.max_grade < -1 {
        return Ok(ladder.unsolvable(Reason::new(
            RuleId::LowGradeBand,
            [
                ("max_grade", span.max_grade.to_string()),
                ("side", "negative (omega mirror)".into()),
            ],
        )));
    }

    ladder.attempt(RuleId::HomogeneousHighDegree);
    if let Some(grade) = is_homogeneous(x).filter(|&g| g != 0) {
        // v_{1,1}(x) >= 2 is the witness weight whenever one exists.
        let w = Weight::new(1, 1)?;
        if weight_degree(x, w) >= Degree::Finite(w.unit_degree()) {
            return Ok(ladder.unsolvable(Reason::new(
                RuleId::HomogeneousHighDegree,
                [
                    ("grade", grade.to_string()),
                    ("weight", w.to_string()),
                    ("degree", weight_degree(x, w).to_string()),
                ],
            )));
        }
    }

    ladder.attempt(RuleId::PolynomialInGenerator);
    if let Some(reason) = polynomial_in_generator(x) {
        return Ok(ladder.unsolvable(reason));
    }

    ladder.attempt(RuleId::AffineFamily);
    if let Some((rule, y)) = affine_witness(x) {
        return ladder.solvable(x, y, Reason::new(rule, []));
    }

    let profile = edges(x)?;

    ladder.attempt(RuleId::NonAxisEdge);
    for edge in &profile.edges {
        if !edge.weight.is_axis() && edge.degree > edge.weight.unit_degree() {
            return Ok(ladder.unsolvable(Reason::new(
                RuleId::NonAxisEdge,
                [
                    ("weight", edge.weight.to_string()),
                    ("degree", edge.degree.to_string()),
                    ("polynomial", edge.polynomial.to_string()),
                ],
            )));
        }
    }

    ladder.attempt(RuleId::AxisPowerIndexOne);
    if let Some(reason) = axis_power_index_one(x)? {
        return Ok(ladder.unsolvable(reason));
    }

    ladder.attempt(RuleId::EdgeGcdOne);
    if profile.edges.len() >= 2
        && profile.edges.iter().all(|e| e.weight.is_axis())
        && dominates_unit(x)?
    {
        let indices = profile
            .edges
            .iter()
            .map(|e| power_index(&e.polynomial, e.weight))
            .collect::<Result<Vec<u32>>>()?;
        let g = indices.iter().fold(0u32, |acc, r| acc.gcd(r));
        if g == 1 {
            let weights: Vec<String> = profile.edges.iter().map(|e| e.weight.to_string()).collect();
            let idx: Vec<String> = indices.iter().map(|r| r.to_string()).collect();
            return Ok(ladder.unsolvable(Reason::new(
                RuleId::EdgeGcdOne,
                [
                    ("edge_weights", weights.join(" ")),
                    ("power_indices", idx.join(" ")),
                    ("requirement", "all edge weights are axis weights".into()),
                ],
            )));
        }
    }

    if let Some(bound) = opts.box_bound {
        ladder.attempt(RuleId::OracleWitness);
        ladder.box_bound = Some(bound);
        if let Some(y) = find_witness_box_capped(x, bound, opts.box_cap)? {
            return ladder.solvable(
                x,
                y,
                Reason::new(RuleId::OracleWitness, [("box", bound.to_string())]),
            );
        }
    }

    Ok(ladder.finish(Outcome::Unknown, None, Vec::new()))
}

fn polynomial_in_generator(x: &WeylElement) -> Option<Reason> {
    let generator = if x.max_p_degree() == Some(0) {
        Some(("q", x.max_q_degree()?))
    } else if x.max_q_degree() == Some(0) {
        Some(("p", x.max_p_degree()?))
    } else {
        h_poly_of_grade_zero(x)
            .and_then(|f| f.degree())
            .map(|d| ("h", d as u32))
    };
    let (name, degree) = generator?;
    (degree >= 2).then(|| {
        Reason::new(
            RuleId::PolynomialInGenerator,
            [("generator", name.into()), ("degree", degree.to_string())],
        )
    })
}

/// Scans every axis weight. Beyond `n = max_j + 1` (resp. `max_i + 1`) the
/// weighted support is constant and `v - (n + 1)` is monotone in `n`, so the
/// finite range is exhaustive.
fn axis_power_index_one(x: &WeylElement) -> Result<Option<Reason>> {
    let max_i = x.max_p_degree().unwrap_or(0) as u64;
    let max_j = x.max_q_degree().unwrap_or(0) as u64;
    let candidates = (1..=max_j + 1)
        .map(|n| Weight::new(n, 1))
        .chain((2..=max_i + 1).map(|n| Weight::new(1, n)));
    for w in candidates {
        let w = w?;
        let Degree::Finite(v) = weight_degree(x, w) else {
            continue;
        };
        if v < w.unit_degree() {
            continue;
        }
        let f = weight_polynomial(x, w)?;
        if power_index(&f, w)? == 1 {
            let kind = if f.is_monomial() { "vertex" } else { "edge" };
            return Ok(Some(Reason::new(
                RuleId::AxisPowerIndexOne,
                [
                    ("weight", w.to_string()),
                    ("degree", v.to_string()),
                    ("polynomial", f.to_string()),
                    ("power_index", "1".into()),
                    ("support", kind.into()),
                    (
                        "note",
                        "power index computed over the algebraic closure".into(),
                    ),
                ],
            )));
        }
    }
    Ok(None)
}

#[derive(Default)]
struct Ladder {
    attempted: Vec<RuleId>,
    box_bound: Option<u32>,
}

impl Ladder {
    fn attempt(&mut self, rule: RuleId) {
        self.attempted.push(rule);
    }

    fn finish(self, outcome: Outcome, witness: Option<WeylElement>, reasons: Vec<Reason>) -> Verdict {
        Verdict {
            outcome,
            witness,
            reasons,
            attempted: self.attempted,
            box_bound: self.box_bound,
        }
    }

    fn unsolvable(self, reason: Reason) -> Verdict {
        self.finish(Outcome::Unsolvable, None, vec![reason])
    }

    fn solvable(self, x: &WeylElement, y: WeylElement, reason: Reason) -> Result<Verdict> {
        if !verify_witness(x, &y) {
            return Err(WeylError::Internal(format!(
                "witness {y} for {x} fails verification"
            )));
        }
        Ok(self.finish(Outcome::Solvable, Some(y), vec![reason]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn el(terms: &[((u32, u32), i64)]) -> WeylElement {
        WeylElement::from_terms(terms.iter().map(|&(m, c)| (m, int(c))))
    }

    #[test]
    fn witness_checks() {
        let (p, q) = (WeylElement::p(), WeylElement::q());
        assert!(verify_witness(&q, &-&p));
        assert!(verify_witness(&p, &q));
        assert!(!verify_witness(&WeylElement::h(), &q));
    }

    #[test]
    fn affine_witnesses() {
        let q = WeylElement::q();
        assert_eq!(witness_for_affine(&el(&[((1, 0), 1), ((0, 2), 1)])), Some(q));
        assert_eq!(
            witness_for_affine(&el(&[((0, 1), 3), ((0, 0), 5)])),
            Some(WeylElement::p().scale(&ratio(-1, 3)))
        );
        assert_eq!(witness_for_affine(&el(&[((0, 2), 1)])), None);
    }

    #[test]
    fn unit_domination() {
        assert!(dominates_unit(&WeylElement::h()).unwrap());
        assert!(!dominates_unit(&WeylElement::q()).unwrap());
        assert!(dominates_unit(&el(&[((2, 3), 1)])).unwrap());
        // (2,0) and (0,2) average to (1,1)
        assert!(dominates_unit(&el(&[((2, 0), 1), ((0, 2), 1)])).unwrap());
        assert!(!dominates_unit(&el(&[((1, 0), 1), ((0, 3), 1)])).unwrap());
        assert!(dominates_unit(&WeylElement::zero()).is_err());
    }

    #[test]
    fn ladder_examples() {
        let v = analyze(&WeylElement::h()).unwrap();
        assert_eq!(v.outcome, Outcome::Unsolvable);
        assert_eq!(v.reasons[0].rule, RuleId::AxisPowerIndexOne);
        assert_eq!(v.reasons[0].parameters["weight"], "(1,1)");

        let v = analyze(&el(&[((1, 0), 1), ((0, 2), 1)])).unwrap();
        assert_eq!(v.outcome, Outcome::Solvable);
        assert_eq!(v.witness, Some(WeylElement::q()));

        let v = analyze(&el(&[((0, 3), 1)])).unwrap();
        assert_eq!(v.reasons[0].rule, RuleId::LowGradeBand);

        let v = analyze(&WeylElement::zero()).unwrap();
        assert_eq!(v.reasons[0].rule, RuleId::ConstantElement);
    }

    #[test]
    fn unknown_lists_attempts() {
        // (p + q)^2: every axis leading form is a square and there is one edge
        let x = (&WeylElement::p() + &WeylElement::q()).pow(2);
        let v = analyze_with(
            &x,
            &AnalyzeOptions {
                box_bound: None,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::Unknown);
        assert!(v.reasons.is_empty());
        assert_eq!(v.attempted.last(), Some(&RuleId::EdgeGcdOne));
        assert_eq!(v.box_bound, None);

        let v = analyze(&x).unwrap();
        assert_eq!(v.outcome, Outcome::Unknown);
        assert_eq!(v.attempted.last(), Some(&RuleId::OracleWitness));
        assert_eq!(v.box_bound, Some(DEFAULT_BOX_BOUND));
    }
}
