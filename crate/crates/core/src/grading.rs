//! The Z-grading `A = (+) A_s`, with `A_s` spanned by `p^i q^j` for `j - i = s`,
//! the h-form of an element, the automorphism `omega` and the exp-ad
//! automorphisms of single-generator polynomials.

use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Result, WeylError};
use crate::scalar::{factorial, int, Scalar};
use crate::unipoly::UniPoly;
use crate::weyl::{normalize_qp, substitute_poly, WeylElement};

/// Grade of the basis monomial `p^i q^j`.
pub fn grade_of(i: u32, j: u32) -> i64 {
    j as i64 - i as i64
}

pub fn grade_components(x: &WeylElement) -> BTreeMap<i64, WeylElement> {
    let mut out: BTreeMap<i64, WeylElement> = BTreeMap::new();
    for (&(i, j), c) in x.terms() {
        out.entry(grade_of(i, j))
            .or_default()
            .add_term((i, j), c.clone());
    }
    out
}

/// Smallest and largest grade carried by a nonzero element. The maximum is
/// the height of the element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeSpan {
    pub min_grade: i64,
    pub max_grade: i64,
}

pub fn grade_span(x: &WeylElement) -> Result<GradeSpan> {
    let mut grades = x.terms().map(|(&(i, j), _)| grade_of(i, j));
    let first = grades.next().ok_or(WeylError::ZeroElement("grade span"))?;
    let (min_grade, max_grade) = grades.fold((first, first), |(lo, hi), g| (lo.min(g), hi.max(g)));
    Ok(GradeSpan {
        min_grade,
        max_grade,
    })
}

/// `x = sum_s f_s(h) * g_s` where `g_s = q^s` for `s >= 0` and `p^(-s)` for
/// `s < 0`. Only nonzero `f_s` are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HForm {
    components: BTreeMap<i64, UniPoly>,
}

impl HForm {
    pub fn new(components: BTreeMap<i64, UniPoly>) -> Self {
        HForm {
            components: components.into_iter().filter(|(_, f)| !f.is_zero()).collect(),
        }
    }

    pub fn components(&self) -> &BTreeMap<i64, UniPoly> {
        &self.components
    }

    pub fn get(&self, grade: i64) -> Option<&UniPoly> {
        self.components.get(&grade)
    }
}

/// `p^k q^k` as a polynomial in `h`: the rising factorial `h(h+1)...(h+k-1)`.
fn diagonal_as_h_poly(k: u32) -> UniPoly {
    (0..k).fold(UniPoly::one(), |acc, t| {
        &acc * &UniPoly::new(vec![int(t as i64), Scalar::one()])
    })
}

pub fn to_h_form(x: &WeylElement) -> HForm {
    let mut components: BTreeMap<i64, UniPoly> = BTreeMap::new();
    for (&(i, j), c) in x.terms() {
        let s = grade_of(i, j);
        let poly = if s >= 0 {
            // p^i q^(i+s) = (p^i q^i) q^s
            diagonal_as_h_poly(i)
        } else {
            // p^(j+m) q^j = p^m (p^j q^j) = R_j(h + m) p^m, using p f(h) = f(h+1) p
            diagonal_as_h_poly(j).shift(&int(-s))
        };
        let entry = components.entry(s).or_default();
        *entry = &*entry + &poly.scale(c);
    }
    HForm::new(components)
}

pub fn from_h_form(hf: &HForm) -> WeylElement {
    let h = WeylElement::h();
    let mut out = WeylElement::zero();
    for (&s, f) in hf.components() {
        let fh = substitute_poly(f, &h);
        let tail = if s >= 0 {
            WeylElement::monomial(0, s as u32, Scalar::one())
        } else {
            WeylElement::monomial((-s) as u32, 0, Scalar::one())
        };
        out = &out + &(&fh * &tail);
    }
    out
}

/// The automorphism `p -> -q`, `q -> p`. It maps `A_s` onto `A_{-s}`.
pub fn omega(x: &WeylElement) -> WeylElement {
    let mut out = WeylElement::zero();
    for (&(i, j), c) in x.terms() {
        // p^i q^j -> (-q)^i p^j
        let sign = if i % 2 == 1 { -c } else { c.clone() };
        out = &out + &normalize_qp(i, j).scale(&sign);
    }
    out
}

/// True when every monomial of `g` lies on one axis, i.e. `g` is a
/// polynomial in `q` alone or in `p` alone.
pub fn is_single_generator(g: &WeylElement) -> bool {
    g.terms().all(|(&(i, _), _)| i == 0) || g.terms().all(|(&(_, j), _)| j == 0)
}

/// `exp(ad g)(x) = sum_k (ad g)^k x / k!` for `g` in `F[q]` or `F[p]`.
///
/// `ad g` is locally nilpotent for such `g`, so the series is finite.
pub fn exp_ad(g: &WeylElement, x: &WeylElement) -> Result<WeylElement> {
    if !is_single_generator(g) {
        return Err(WeylError::MixedGenerator);
    }
    let cap = x.total_degree().unwrap_or(0) + g.total_degree().unwrap_or(0) + 2;
    let mut out = WeylElement::zero();
    let mut term = x.clone();
    let mut k = 0u32;
    while !term.is_zero() {
        if k > cap {
            return Err(WeylError::Internal(format!(
                "exp-ad series did not terminate within {cap} steps"
            )));
        }
        let inv = Scalar::new(One::one(), factorial(k));
        out = &out + &term.scale(&inv);
        term = g.commutator(&term);
        k += 1;
    }
    Ok(out)
}

/// Whether `x` lies in a single graded component.
pub fn is_homogeneous(x: &WeylElement) -> Option<i64> {
    let span = grade_span(x).ok()?;
    (span.min_grade == span.max_grade).then_some(span.min_grade)
}

pub(crate) fn h_poly_of_grade_zero(x: &WeylElement) -> Option<UniPoly> {
    let hf = to_h_form(x);
    match hf.components().len() {
        0 => Some(UniPoly::zero()),
        1 => hf.get(0).cloned(),
        _ => None,
    }
}
