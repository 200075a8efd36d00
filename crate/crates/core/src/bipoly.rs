//! Commutative polynomials in `X, Y`, used for the leading forms of Weyl
//! algebra elements.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::{format_scalar, is_negative, terms_from_json, terms_to_json, JsonTerm, Scalar};
use crate::weyl::{Monomial, WeylElement};

/// `sum a_ij X^i Y^j` with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<JsonTerm>", try_from = "Vec<JsonTerm>")]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([((0, 0), Scalar::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// The commutative shadow of a normal-ordered element: `p -> X`, `q -> Y`.
    pub fn from_element(x: &WeylElement) -> Self {
        Self::from_terms(x.terms().map(|(&m, c)| (m, c.clone())))
    }

    /// Reads the polynomial back as a normal-ordered element.
    pub fn to_element(&self) -> WeylElement {
        WeylElement::from_terms(self.terms.iter().map(|(&m, c)| (m, c.clone())))
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&m, a)| (m, a * c)).collect(),
        }
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

    /// Exchanges the roles of `X` and `Y`.
    pub fn swap_xy(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Leading coefficient in lexicographic order on `(i, j)`.
    pub fn lex_leading(&self) -> Option<(Monomial, &Scalar)> {
        self.terms.iter().next_back().map(|(&m, c)| (m, c))
    }

    /// `Some(c)` if `self = c * other` for a nonzero scalar `c`.
    pub fn proportional_to(&self, other: &Self) -> Option<Scalar> {
        let (m, a) = self.lex_leading()?;
        let (n, b) = other.lex_leading()?;
        if m != n || self.len() != other.len() {
            return None;
        }
        let c = a / b;
        (other.scale(&c) == *self).then_some(c)
    }
}

impl From<BiPoly> for Vec<JsonTerm> {
    fn from(f: BiPoly) -> Self {
        terms_to_json(f.terms.iter())
    }
}

impl TryFrom<Vec<JsonTerm>> for BiPoly {
    type Error = String;
    fn try_from(v: Vec<JsonTerm>) -> Result<Self, String> {
        Ok(BiPoly::from_terms(terms_from_json(v)?))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &-rhs
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a, b), c1) in &self.terms {
            for (&(c, d), c2) in &rhs.terms {
                out.add_term((a + c, b + d), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Same ordering convention as Weyl elements: (i + j, i) descending.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|&(&(i, j), _)| std::cmp::Reverse((i + j, i)));
        for (n, (&(i, j), c)) in terms.into_iter().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let pow = |v: &str, e: u32| match e {
                0 => None,
                1 => Some(v.to_string()),
                _ => Some(format!("{v}^{e}")),
            };
            let mono = [pow("X", i), pow("Y", j)]
                .into_iter()
                .flatten()
                .collect::<Vec<_>>()
                .join("*");
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn bp(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(m, c)| (m, int(c))))
    }

    #[test]
    fn products_are_commutative() {
        let a = bp(&[((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(a.pow(2), bp(&[((2, 0), 1), ((1, 1), 2), ((0, 2), 1)]));
        assert_eq!(a.pow(2).to_string(), "X^2 + 2*X*Y + Y^2");
        assert!(bp(&[((1, 0), 1), ((0, 1), -1)]).pow(0) == BiPoly::one());
    }

    #[test]
    fn proportionality() {
        let a = bp(&[((2, 0), 1), ((0, 1), 3)]);
        assert_eq!(a.scale(&int(-2)).proportional_to(&a), Some(int(-2)));
        assert_eq!(bp(&[((2, 0), 1), ((0, 1), 2)]).proportional_to(&a), None);
    }
}
