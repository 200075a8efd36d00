//! Bounded witness search: solve `[x, y] = 1` for `y` supported in the box
//! `{(i, j) : i <= N, j <= N}`. The bracket is linear in `y`, so this is an
//! exact linear system over Q, solved by fraction-free (Bareiss) elimination
//! with a fixed pivoting order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Result, WeylError};
use crate::scalar::Scalar;
use crate::weyl::{Monomial, WeylElement};

pub const DEFAULT_BOX_BOUND: u32 = 4;
pub const DEFAULT_BOX_CAP: u32 = 8;

/// Searches for `y` in the box of side `bound` with `[x, y] = 1`, refusing
/// bounds above [`DEFAULT_BOX_CAP`].
pub fn find_witness_box(x: &WeylElement, bound: u32) -> Result<Option<WeylElement>> {
    find_witness_box_capped(x, bound, DEFAULT_BOX_CAP)
}

/// As [`find_witness_box`] with an explicit cap. Unknowns are ordered by
/// `(i + j, i)` ascending and free unknowns are set to zero, so the returned
/// witness is deterministic.
pub fn find_witness_box_capped(
    x: &WeylElement,
    bound: u32,
    cap: u32,
) -> Result<Option<WeylElement>> {
    if bound > cap {
        return Err(WeylError::BoxBoundExceedsCap { bound, cap });
    }
    if x.is_zero() {
        return Ok(None);
    }

    let mut unknowns: Vec<Monomial> = (0..=bound)
        .flat_map(|i| (0..=bound).map(move |j| (i, j)))
        .collect();
    unknowns.sort_by_key(|&(i, j)| (i + j, i));

    let columns: Vec<WeylElement> = unknowns
        .iter()
        .map(|&(i, j)| x.commutator(&WeylElement::monomial(i, j, Scalar::one())))
        .collect();

    // One equation per monomial that can appear, plus the constant term.
    let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
    rows.insert((0, 0), 0);
    for col in &columns {
        for (&m, _) in col.terms() {
            let next = rows.len();
            rows.entry(m).or_insert(next);
        }
    }
    let n_cols = unknowns.len();
    let mut system = vec![vec![Scalar::zero(); n_cols + 1]; rows.len()];
    for (k, col) in columns.iter().enumerate() {
        for (m, c) in col.terms() {
            system[rows[m]][k] = c.clone();
        }
    }
    system[rows[&(0, 0)]][n_cols] = Scalar::one();

    let Some(solution) = solve(system, n_cols)? else {
        return Ok(None);
    };
    let y = WeylElement::from_terms(unknowns.into_iter().zip(solution));
    if !x.commutator(&y).is_one() {
        return Err(WeylError::Internal(
            "box oracle produced a solution that fails verification".into(),
        ));
    }
    Ok(Some(y))
}

/// Solves the augmented system (last column is the right-hand side). Returns
/// `None` when inconsistent; free unknowns are zero.
fn solve(system: Vec<Vec<Scalar>>, n_cols: usize) -> Result<Option<Vec<Scalar>>> {
    // Clear denominators row by row.
    let mut m: Vec<Vec<BigInt>> = system
        .into_iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.into_iter()
                .map(|c| (c * Scalar::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();

    let n_rows = m.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(pr) = (r..n_rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            for j in (c + 1)..=n_cols {
                let num = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                if !rem.is_zero() {
                    return Err(WeylError::Internal("inexact Bareiss division".into()));
                }
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }

    if m[r..].iter().any(|row| !row[n_cols].is_zero()) {
        return Ok(None);
    }

    let mut sol = vec![Scalar::zero(); n_cols];
    for &(row, col) in pivots.iter().rev() {
        let mut acc = Scalar::from_integer(m[row][n_cols].clone());
        for j in (col + 1)..n_cols {
            if !m[row][j].is_zero() && !sol[j].is_zero() {
                acc -= Scalar::from_integer(m[row][j].clone()) * &sol[j];
            }
        }
        sol[col] = acc / Scalar::from_integer(m[row][col].clone());
    }
    Ok(Some(sol))
}
