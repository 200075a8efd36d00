//! Exact arithmetic in the first Weyl algebra `A = Q<p, q>/(pq - qp - 1)`,
//! with gradings, weighted Newton-polygon geometry, leading-form power
//! analysis and a solvability ladder for the equation `[x, y] = 1`.
//!
//! ```
//! use weyl_core::{analyze, Outcome, WeylElement};
//!
//! let x = &WeylElement::p() + &WeylElement::q().pow(2);
//! let verdict = analyze(&x).unwrap();
//! assert_eq!(verdict.outcome, Outcome::Solvable);
//! assert!(x.commutator(verdict.witness.as_ref().unwrap()).is_one());
//! ```

mod error;

pub mod bipoly;
pub mod grading;
pub mod polygon;
pub mod power;
pub mod scalar;
pub mod solvability;
pub mod unipoly;
pub mod weyl;

pub use bipoly::BiPoly;
pub use error::{Result, WeylError};
pub use grading::{
    exp_ad, from_h_form, grade_components, grade_of, grade_span, is_homogeneous,
    is_single_generator, omega, to_h_form, GradeSpan, HForm,
};
pub use polygon::{
    edges, leading_split, separating_weight, support, weight_degree, weight_degree_raw,
    weight_polynomial, weight_support, weight_support_raw, weight_term, Degree, Edge,
    JoiningVertex, LeadingSplit, PolygonProfile, Weight,
};
pub use power::{
    dehomogenize, is_weighted_homogeneous, power_index, squarefree_decompose,
    weighted_homogeneous_degree, HomogShape, SquarefreeDecomp,
};
pub use scalar::{JsonScalar, JsonTerm, Scalar};
pub use solvability::{
    analyze, analyze_with, dominates_unit, find_witness_box, find_witness_box_capped,
    verify_witness, witness_for_affine, AnalyzeOptions, Outcome, Reason, RuleId, Verdict,
    DEFAULT_BOX_BOUND, DEFAULT_BOX_CAP,
};
pub use unipoly::UniPoly;
pub use weyl::{
    ad_power, commutator, linear_combine, normalize_qp, substitute_poly, Monomial, WeylElement,
};
