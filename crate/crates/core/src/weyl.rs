//! Sparse exact arithmetic in the first Weyl algebra.
//!
//! Elements are stored in the normal-ordered basis `p^i q^j` (all `p` to the
//! left of all `q`) with the defining relation `pq - qp = 1`. Rewriting a
//! product `q^m p^n` into this basis uses the closed form
//!
//! ```text
//! q^m p^n = sum_k (-1)^k k! C(m,k) C(n,k) p^(n-k) q^(m-k)
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::{
    binomial, factorial, format_scalar, is_negative, terms_from_json, terms_to_json, JsonTerm,
    Scalar,
};
use crate::unipoly::UniPoly;

/// Exponent pair `(i, j)` of the basis monomial `p^i q^j`.
pub type Monomial = (u32, u32);

/// An element `sum a_ij p^i q^j` in canonical sparse form: no stored
/// coefficient is zero, so structural equality is algebraic equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<JsonTerm>", try_from = "Vec<JsonTerm>")]
pub struct WeylElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl WeylElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn p() -> Self {
        Self::monomial(1, 0, Scalar::one())
    }

    pub fn q() -> Self {
        Self::monomial(0, 1, Scalar::one())
    }

    /// The element `h = pq`.
    pub fn h() -> Self {
        Self::monomial(1, 1, Scalar::one())
    }

    pub fn monomial(i: u32, j: u32, c: Scalar) -> Self {
        let mut x = Self::zero();
        x.add_term((i, j), c);
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(terms: I) -> Self {
        let mut x = Self::zero();
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for elements of the base field (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&m| m == (0, 0))
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Maximum of `i + j` over the support; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn max_p_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn max_q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        WeylElement {
            terms: self.terms.iter().map(|(&m, a)| (m, a * c)).collect(),
        }
    }

    /// Noncommutative product `self * rhs`, normal ordered.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c1) in &self.terms {
            for (&(c, d), c2) in &rhs.terms {
                let coeff = c1 * c2;
                // p^a (q^b p^c) q^d
                for k in 0..=b.min(c) {
                    let w = reorder_weight(b, c, k);
                    out.add_term((a + c - k, b + d - k), &coeff * Scalar::from_integer(w));
                }
            }
        }
        out
    }

    /// `[self, rhs] = self*rhs - rhs*self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        // The k = 0 terms of both products cancel, so only k >= 1 is expanded.
        let mut out = Self::zero();
        for (&(a, b), c1) in &self.terms {
            for (&(c, d), c2) in &rhs.terms {
                let coeff = c1 * c2;
                for k in 1..=b.min(c) {
                    let w = reorder_weight(b, c, k);
                    out.add_term((a + c - k, b + d - k), &coeff * Scalar::from_integer(w));
                }
                for k in 1..=d.min(a) {
                    let w = reorder_weight(d, a, k);
                    out.add_term((a + c - k, b + d - k), -(&coeff * Scalar::from_integer(w)));
                }
            }
        }
        out
    }

    /// `(ad self)^n y`; `n = 0` returns `y`.
    pub fn ad_power(&self, y: &Self, n: u32) -> Self {
        let mut acc = y.clone();
        for _ in 0..n {
            if acc.is_zero() {
                break;
            }
            acc = self.commutator(&acc);
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// Coefficient `(-1)^k k! C(m,k) C(n,k)` of `p^(n-k) q^(m-k)` in `q^m p^n`.
fn reorder_weight(m: u32, n: u32, k: u32) -> BigInt {
    let w = factorial(k) * binomial(m, k) * binomial(n, k);
    if k % 2 == 1 {
        -w
    } else {
        w
    }
}

/// Normal form of `q^m p^n`. The top term is `p^n q^m`; every other term has
/// strictly smaller total degree.
pub fn normalize_qp(m: u32, n: u32) -> WeylElement {
    WeylElement::from_terms(
        (0..=m.min(n)).map(|k| ((n - k, m - k), Scalar::from_integer(reorder_weight(m, n, k)))),
    )
}

pub fn linear_combine(terms: &[(Scalar, WeylElement)]) -> WeylElement {
    let mut out = WeylElement::zero();
    for (c, x) in terms {
        for (&m, a) in &x.terms {
            out.add_term(m, c * a);
        }
    }
    out
}

pub fn commutator(x: &WeylElement, y: &WeylElement) -> WeylElement {
    x.commutator(y)
}

pub fn ad_power(x: &WeylElement, y: &WeylElement, n: u32) -> WeylElement {
    x.ad_power(y, n)
}

/// `f(x) = sum c_k x^k`, by Horner's scheme.
pub fn substitute_poly(f: &UniPoly, x: &WeylElement) -> WeylElement {
    f.coeffs().iter().rev().fold(WeylElement::zero(), |acc, c| {
        let mut next = &acc * x;
        next.add_term((0, 0), c.clone());
        next
    })
}

impl From<WeylElement> for Vec<JsonTerm> {
    fn from(x: WeylElement) -> Self {
        terms_to_json(x.terms.iter())
    }
}

impl TryFrom<Vec<JsonTerm>> for WeylElement {
    type Error = String;
    fn try_from(v: Vec<JsonTerm>) -> Result<Self, String> {
        Ok(WeylElement::from_terms(terms_from_json(v)?))
    }
}

impl Add for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Sub for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, -c);
        }
        out
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        WeylElement::mul(self, rhs)
    }
}

impl Add for WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: WeylElement) -> WeylElement {
        &self + &rhs
    }
}

impl Sub for WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: WeylElement) -> WeylElement {
        &self - &rhs
    }
}

impl Neg for WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        -&self
    }
}

impl Mul for WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: WeylElement) -> WeylElement {
        WeylElement::mul(&self, &rhs)
    }
}

/// Terms in canonical print order: `(i + j, i)` descending.
pub fn canonical_order(x: &WeylElement) -> Vec<(Monomial, Scalar)> {
    let mut terms: Vec<_> = x.terms().map(|(&m, c)| (m, c.clone())).collect();
    terms.sort_by_key(|&((i, j), _)| std::cmp::Reverse((i + j, i)));
    terms
}

fn format_monomial(i: u32, j: u32) -> String {
    let pow = |v: &str, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    [pow("p", i), pow("q", j)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, ((i, j), c)) in canonical_order(self).into_iter().enumerate() {
            let neg = is_negative(&c);
            let abs = if neg { -c } else { c };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = format_monomial(i, j);
            if mono.is_empty() {
                write!(f, "{}", format_scalar(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_scalar(&abs))?;
            }
        }
        Ok(())
    }
}
