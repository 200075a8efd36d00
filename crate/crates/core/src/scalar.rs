//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational number; always stored in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Renders a scalar as `n` or `n/d`.
pub fn format_scalar(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// JSON form of a scalar: numerator and denominator as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonScalar {
    pub num: String,
    pub den: String,
}

impl From<&Scalar> for JsonScalar {
    fn from(c: &Scalar) -> Self {
        JsonScalar {
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        }
    }
}

impl TryFrom<JsonScalar> for Scalar {
    type Error = String;
    fn try_from(j: JsonScalar) -> Result<Self, String> {
        let num: BigInt = j.num.parse().map_err(|_| format!("bad numerator {:?}", j.num))?;
        let den: BigInt = j.den.parse().map_err(|_| format!("bad denominator {:?}", j.den))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Scalar::new(num, den))
    }
}

/// JSON form of one term `c * p^i q^j` (or `c * X^i Y^j`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub i: u32,
    pub j: u32,
    pub coeff: JsonScalar,
}

pub(crate) fn terms_to_json<'a, I>(terms: I) -> Vec<JsonTerm>
where
    I: Iterator<Item = (&'a (u32, u32), &'a Scalar)>,
{
    terms
        .map(|(&(i, j), c)| JsonTerm {
            i,
            j,
            coeff: c.into(),
        })
        .collect()
}

pub(crate) type Terms = Vec<((u32, u32), Scalar)>;

pub(crate) fn terms_from_json(terms: Vec<JsonTerm>) -> Result<Terms, String> {
    terms
        .into_iter()
        .map(|t| Ok(((t.i, t.j), Scalar::try_from(t.coeff)?)))
        .collect()
}

pub(crate) fn is_negative(c: &Scalar) -> bool {
    c.is_negative()
}
