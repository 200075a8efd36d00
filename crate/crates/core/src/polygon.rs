//! Weighted degrees and Newton-polygon geometry of supports.
//!
//! For a weight `(rho, sigma)` the weighted degree of `x` is the maximum of
//! `i*rho + j*sigma` over its support, and the argmax set is an *edge* when it
//! has two or more points and a *vertex* otherwise. Only finitely many weights
//! give edges: they are the primitive outward normals, with both components
//! positive, of the convex hull of the support.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bipoly::BiPoly;
use crate::error::{Result, WeylError};
use crate::weyl::{Monomial, WeylElement};

/// A pair `(rho, sigma)` of coprime positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(u64, u64)", into = "(u64, u64)")]
pub struct Weight {
    rho: u64,
    sigma: u64,
}

impl Weight {
    pub fn new(rho: u64, sigma: u64) -> Result<Self> {
        if rho == 0 || sigma == 0 || rho.gcd(&sigma) != 1 {
            return Err(WeylError::InvalidWeight { rho, sigma });
        }
        Ok(Weight { rho, sigma })
    }

    /// Reduces any pair of positive integers to its primitive weight.
    pub fn primitive(rho: u64, sigma: u64) -> Result<Self> {
        if rho == 0 || sigma == 0 {
            return Err(WeylError::InvalidWeight { rho, sigma });
        }
        let g = rho.gcd(&sigma);
        Ok(Weight {
            rho: rho / g,
            sigma: sigma / g,
        })
    }

    pub fn rho(self) -> u64 {
        self.rho
    }

    pub fn sigma(self) -> u64 {
        self.sigma
    }

    /// `rho + sigma`, the weighted degree of `pq`.
    pub fn unit_degree(self) -> i64 {
        (self.rho + self.sigma) as i64
    }

    /// Weights `(n, 1)` or `(1, n)`.
    pub fn is_axis(self) -> bool {
        self.rho == 1 || self.sigma == 1
    }

    /// Compares the ratios `rho/sigma`.
    pub fn cmp_ratio(self, other: Weight) -> Ordering {
        (self.rho as u128 * other.sigma as u128).cmp(&(other.rho as u128 * self.sigma as u128))
    }

    pub fn degree_of(self, (i, j): Monomial) -> i64 {
        i as i64 * self.rho as i64 + j as i64 * self.sigma as i64
    }
}

impl TryFrom<(u64, u64)> for Weight {
    type Error = WeylError;
    fn try_from((rho, sigma): (u64, u64)) -> Result<Self> {
        Weight::new(rho, sigma)
    }
}

impl From<Weight> for (u64, u64) {
    fn from(w: Weight) -> Self {
        (w.rho, w.sigma)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rho, self.sigma)
    }
}

/// A weighted degree; the zero element has degree `NegInfinity`, which sorts
/// below every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

pub fn support(x: &WeylElement) -> BTreeSet<Monomial> {
    x.terms().map(|(&m, _)| m).collect()
}

fn raw_degree((i, j): Monomial, rho: u64, sigma: u64) -> i64 {
    i as i64 * rho as i64 + j as i64 * sigma as i64
}

/// Weighted degree for an arbitrary (not necessarily coprime) positive pair.
pub fn weight_degree_raw(x: &WeylElement, rho: u64, sigma: u64) -> Degree {
    x.terms()
        .map(|(&m, _)| raw_degree(m, rho, sigma))
        .max()
        .map_or(Degree::NegInfinity, Degree::Finite)
}

pub fn weight_degree(x: &WeylElement, w: Weight) -> Degree {
    weight_degree_raw(x, w.rho, w.sigma)
}

/// Argmax set for an arbitrary positive pair.
pub fn weight_support_raw(x: &WeylElement, rho: u64, sigma: u64) -> Result<BTreeSet<Monomial>> {
    let d = weight_degree_raw(x, rho, sigma)
        .finite()
        .ok_or(WeylError::ZeroElement("weighted support"))?;
    Ok(x.terms()
        .map(|(&m, _)| m)
        .filter(|&m| raw_degree(m, rho, sigma) == d)
        .collect())
}

pub fn weight_support(x: &WeylElement, w: Weight) -> Result<BTreeSet<Monomial>> {
    weight_support_raw(x, w.rho, w.sigma)
}

/// The weighted leading form of `x` as an element (`p`, `q` kept in normal order).
pub fn weight_term(x: &WeylElement, w: Weight) -> Result<WeylElement> {
    let top = weight_support(x, w)?;
    Ok(WeylElement::from_terms(
        x.terms()
            .filter(|(m, _)| top.contains(m))
            .map(|(&m, c)| (m, c.clone())),
    ))
}

/// The weighted leading form of `x` as a commutative polynomial in `X, Y`.
pub fn weight_polynomial(x: &WeylElement, w: Weight) -> Result<BiPoly> {
    Ok(BiPoly::from_element(&weight_term(x, w)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub weight: Weight,
    pub support: BTreeSet<Monomial>,
    pub polynomial: BiPoly,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoiningVertex {
    pub point: Monomial,
    pub separating_weight: Weight,
}

/// Edges ordered by increasing `rho/sigma`, with the vertex joining each
/// consecutive pair.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PolygonProfile {
    pub edges: Vec<Edge>,
    pub vertices: Vec<JoiningVertex>,
}

pub fn edges(x: &WeylElement) -> Result<PolygonProfile> {
    let pts = support(x);
    // Argmax for ratios tending to zero: largest j, then largest i.
    let mut current = *pts
        .iter()
        .max_by_key(|&&(i, j)| (j, i))
        .ok_or(WeylError::ZeroElement("Newton polygon"))?;

    let mut weights = Vec::new();
    loop {
        // Points further along have larger i and (necessarily) smaller j.
        // The next edge is at the smallest ratio (dj / di) over them.
        let next = pts
            .iter()
            .filter(|&&(i, _)| i > current.0)
            .map(|&(i, j)| {
                debug_assert!(j < current.1);
                ((current.1 - j) as u64, (i - current.0) as u64)
            })
            .min_by(|&(a, b), &(c, d)| (a as u128 * d as u128).cmp(&(c as u128 * b as u128)));
        let Some((drop, run)) = next else { break };
        let w = Weight::primitive(drop, run)?;
        let top = weight_support(x, w)?;
        current = *top.iter().max().expect("argmax set is nonempty");
        weights.push((w, top));
    }

    let edges: Vec<Edge> = weights
        .into_iter()
        .map(|(weight, support)| {
            let polynomial = BiPoly::from_terms(
                x.terms()
                    .filter(|(m, _)| support.contains(m))
                    .map(|(&m, c)| (m, c.clone())),
            );
            let degree = weight.degree_of(*support.iter().next().expect("nonempty"));
            Edge {
                weight,
                support,
                polynomial,
                degree,
            }
        })
        .collect();

    let mut vertices = Vec::new();
    for pair in edges.windows(2) {
        let shared: Vec<_> = pair[0].support.intersection(&pair[1].support).copied().collect();
        if shared.len() != 1 {
            return Err(WeylError::Internal(format!(
                "adjacent edges {} and {} share {} points",
                pair[0].weight,
                pair[1].weight,
                shared.len()
            )));
        }
        vertices.push(JoiningVertex {
            point: shared[0],
            separating_weight: separating_weight(pair[0].weight, pair[1].weight)?,
        });
    }
    Ok(PolygonProfile { edges, vertices })
}

/// A weight whose ratio lies strictly between the two given ratios: the
/// reduced mediant. Argument order does not matter.
pub fn separating_weight(w1: Weight, w2: Weight) -> Result<Weight> {
    if w1.cmp_ratio(w2) == Ordering::Equal {
        return Err(WeylError::EqualRatios(w1.rho, w1.sigma, w2.rho, w2.sigma));
    }
    Weight::primitive(w1.rho + w2.rho, w1.sigma + w2.sigma)
}

/// `[x, y] = t + u` where `t` collects the terms of weighted degree exactly
/// `v(x) + v(y) - (rho + sigma)` and `u` the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingSplit {
    pub t: WeylElement,
    pub u: WeylElement,
    pub threshold: Degree,
}

pub fn leading_split(x: &WeylElement, y: &WeylElement, w: Weight) -> LeadingSplit {
    let bracket = x.commutator(y);
    let threshold = match (weight_degree(x, w), weight_degree(y, w)) {
        (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b - w.unit_degree()),
        _ => Degree::NegInfinity,
    };
    let Degree::Finite(d) = threshold else {
        return LeadingSplit {
            t: WeylElement::zero(),
            u: bracket,
            threshold,
        };
    };
    let (top, rest): (Vec<_>, Vec<_>) = bracket
        .terms()
        .map(|(&m, c)| (m, c.clone()))
        .partition(|&(m, _)| w.degree_of(m) == d);
    LeadingSplit {
        t: WeylElement::from_terms(top),
        u: WeylElement::from_terms(rest),
        threshold,
    }
}
