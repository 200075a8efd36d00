//! Power analysis of weighted-homogeneous polynomials in `X, Y`.
//!
//! For an axis weight `(n, 1)` a homogeneous polynomial factors over the
//! algebraic closure as
//!
//! ```text
//! f = c * X^a * Y^b * prod_i (X - mu_i Y^n)^(e_i)
//! ```
//!
//! and `f` is an `m`-th power over the closure exactly when `m` divides `a`,
//! `b` and every `e_i`. The multiplicities `e_i` are read off a squarefree
//! decomposition over Q, which is preserved under field extension in
//! characteristic zero. The weight `(1, n)` is handled by swapping `X` and `Y`.

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bipoly::BiPoly;
use crate::error::{Result, WeylError};
use crate::polygon::Weight;
use crate::scalar::Scalar;
use crate::unipoly::UniPoly;

/// Returns `Ok(Some(degree))` when every support point of `f` has the same
/// weighted degree and `Ok(None)` otherwise.
pub fn weighted_homogeneous_degree(f: &BiPoly, w: Weight) -> Result<Option<i64>> {
    let mut degrees = f.terms().map(|(&m, _)| w.degree_of(m));
    let first = degrees
        .next()
        .ok_or(WeylError::ZeroPolynomial("weighted degree"))?;
    Ok(degrees.all(|d| d == first).then_some(first))
}

pub fn is_weighted_homogeneous(f: &BiPoly, w: Weight) -> Result<bool> {
    Ok(weighted_homogeneous_degree(f, w)?.is_some())
}

/// `f = X^x_mult * Y^y_mult * H(core)`, where `H` homogenizes the core in
/// `Z = major / minor^n` (`major = X` for weight `(n,1)`, `Y` for `(1,n)`).
/// The core carries the scalar factor `c` and has a nonzero constant term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogShape {
    pub x_mult: u32,
    pub y_mult: u32,
    pub core: UniPoly,
    pub weight: Weight,
}

/// Orientation of an axis weight: `n` and whether `X` is the heavy variable.
fn axis(w: Weight) -> Result<(u32, bool)> {
    if w.sigma() == 1 {
        Ok((w.rho() as u32, true))
    } else if w.rho() == 1 {
        Ok((w.sigma() as u32, false))
    } else {
        Err(WeylError::RequiresAxisWeight {
            rho: w.rho(),
            sigma: w.sigma(),
        })
    }
}

pub fn dehomogenize(f: &BiPoly, w: Weight) -> Result<HomogShape> {
    let (_, x_heavy) = axis(w)?;
    if !is_weighted_homogeneous(f, w)? {
        return Err(WeylError::NotHomogeneous {
            rho: w.rho(),
            sigma: w.sigma(),
        });
    }
    // Oriented coordinates (u, v): u is the exponent of the heavy variable.
    let oriented = if x_heavy { f.clone() } else { f.swap_xy() };
    let u_min = oriented.terms().map(|(&(u, _), _)| u).min().expect("nonzero");
    let u_max = oriented.terms().map(|(&(u, _), _)| u).max().expect("nonzero");
    let v_min = oriented.terms().map(|(&(_, v), _)| v).min().expect("nonzero");
    let core = UniPoly::new(
        (u_min..=u_max)
            .map(|u| {
                // On the line n*u + v = d only one v matches each u.
                oriented
                    .terms()
                    .find(|(&(uu, _), _)| uu == u)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(Scalar::zero)
            })
            .collect(),
    );
    debug_assert!(!core.coeff(0).is_zero());
    let (x_mult, y_mult) = if x_heavy { (u_min, v_min) } else { (v_min, u_min) };
    Ok(HomogShape {
        x_mult,
        y_mult,
        core,
        weight: w,
    })
}

impl HomogShape {
    /// Expands the shape back into the homogeneous polynomial it describes.
    pub fn rehomogenize(&self) -> BiPoly {
        let (n, x_heavy) = axis(self.weight).expect("shape weights are axis weights");
        let k_max = self.core.degree().unwrap_or(0) as u32;
        let terms = self.core.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            let (u, v) = (k, n * (k_max - k));
            let (i, j) = if x_heavy { (u, v) } else { (v, u) };
            ((i + self.x_mult, j + self.y_mult), c.clone())
        });
        BiPoly::from_terms(terms)
    }
}

/// `g = unit * prod f_i^(m_i)` with monic, squarefree, pairwise coprime `f_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomp {
    pub unit: Scalar,
    pub factors: Vec<(UniPoly, u32)>,
}

impl SquarefreeDecomp {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

/// Yun's algorithm over Q.
pub fn squarefree_decompose(g: &UniPoly) -> Result<SquarefreeDecomp> {
    let unit = g
        .leading_coeff()
        .cloned()
        .ok_or(WeylError::ZeroPolynomial("squarefree decomposition"))?;
    let f = g.monic();
    let mut factors = Vec::new();
    if f.is_constant() {
        return Ok(SquarefreeDecomp { unit, factors });
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0);
    let mut c = df.exact_div(&a0);
    let mut d = &c - &b.derivative();
    let mut mult = 1u32;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.exact_div(&a);
        c = d.exact_div(&a);
        d = &c - &b.derivative();
        if !a.is_constant() {
            factors.push((a, mult));
        }
        mult += 1;
    }
    Ok(SquarefreeDecomp { unit, factors })
}

/// Largest `m` such that `f` is an `m`-th power over the algebraic closure of
/// Q. A result of 1 certifies that `f` is not a proper power over Q either.
pub fn power_index(f: &BiPoly, w: Weight) -> Result<u32> {
    let shape = dehomogenize(f, w)?;
    let sqf = squarefree_decompose(&shape.core)?;
    let r = sqf
        .factors
        .iter()
        .map(|&(_, m)| m)
        .fold(shape.x_mult.gcd(&shape.y_mult), |acc, m| acc.gcd(&m));
    if r == 0 {
        return Err(WeylError::ConstantPolynomial);
    }
    Ok(r)
}
