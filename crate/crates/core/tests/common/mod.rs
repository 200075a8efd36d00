#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weyl_core::{
    grading, weight_support_raw, BiPoly, Scalar, UniPoly, Weight, WeylElement,
};

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

pub fn el(terms: &[((u32, u32), i64)]) -> WeylElement {
    WeylElement::from_terms(terms.iter().map(|&(m, c)| (m, int(c))))
}

pub fn bp(terms: &[((u32, u32), i64)]) -> BiPoly {
    BiPoly::from_terms(terms.iter().map(|&(m, c)| (m, int(c))))
}

pub fn w(rho: u64, sigma: u64) -> Weight {
    Weight::new(rho, sigma).unwrap()
}

pub const WEIGHTS: [(u64, u64); 5] = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 2)];

// ---------------------------------------------------------------------------
// proptest strategies

pub fn coeff() -> impl Strategy<Value = Scalar> {
    (-9i64..=9).prop_filter("nonzero", |c| *c != 0).prop_map(int)
}

/// Elements with exponents `i, j <= max_exp` and at most `max_terms` terms.
pub fn element(max_exp: u32, max_terms: usize) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec(((0..=max_exp, 0..=max_exp), coeff()), 0..=max_terms)
        .prop_map(WeylElement::from_terms)
}

pub fn nonzero_element(max_exp: u32, max_terms: usize) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec(((0..=max_exp, 0..=max_exp), coeff()), 1..=max_terms)
        .prop_map(WeylElement::from_terms)
        .prop_filter("nonzero", |x| !x.is_zero())
}

/// Elements whose support lies in `i + j <= deg`.
pub fn element_of_degree(deg: u32, max_terms: usize) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec(((0..=deg, 0..=deg), coeff()), 0..=max_terms).prop_map(move |terms| {
        WeylElement::from_terms(terms.into_iter().filter(|((i, j), _)| i + j <= deg))
    })
}

pub fn weight() -> impl Strategy<Value = Weight> {
    prop::sample::select(WEIGHTS.to_vec()).prop_map(|(r, s)| w(r, s))
}

pub fn axis_weight() -> impl Strategy<Value = Weight> {
    (1u64..=4, any::<bool>()).prop_map(|(n, x_heavy)| if x_heavy { w(n, 1) } else { w(1, n) })
}

pub fn unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-9i64..=9, 0..=max_deg + 1).prop_map(|c| UniPoly::from_i64s(&c))
}

/// A nonzero polynomial in `q` alone or in `p` alone.
pub fn single_generator(max_deg: u32) -> impl Strategy<Value = WeylElement> {
    (prop::collection::vec(coeff(), 1..=max_deg as usize + 1), any::<bool>()).prop_map(
        |(cs, in_q)| {
            WeylElement::from_terms(cs.into_iter().enumerate().map(|(k, c)| {
                let k = k as u32;
                (if in_q { (0, k) } else { (k, 0) }, c)
            }))
        },
    )
}

/// A nonconstant homogeneous polynomial at an axis weight: a monomial times
/// a product of `(major - lambda * minor^n)` factors with small integer
/// `lambda`, times a scalar.
pub fn axis_homogeneous() -> impl Strategy<Value = (BiPoly, Weight)> {
    (
        axis_weight(),
        0u32..=3,
        0u32..=3,
        prop::collection::vec((-3i64..=3).prop_filter("nonzero", |l| *l != 0), 0..=3),
        coeff(),
    )
        .prop_filter("nonconstant", |(_, a, b, ls, _)| a + b + ls.len() as u32 > 0)
        .prop_map(|(wt, a, b, lambdas, c)| {
            let n = if wt.sigma() == 1 { wt.rho() as u32 } else { wt.sigma() as u32 };
            let x_heavy = wt.sigma() == 1;
            let mut f = BiPoly::from_terms([((a, b), c)]);
            for l in lambdas {
                // heavy variable minus lambda * light^n
                let (heavy, light) = if x_heavy { ((1, 0), (0, n)) } else { ((0, 1), (n, 0)) };
                let factor = BiPoly::from_terms([(heavy, int(1)), (light, int(-l))]);
                f = &f * &factor;
            }
            (f, wt)
        })
}

// ---------------------------------------------------------------------------
// seeded corpora

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_element(rng: &mut ChaCha8Rng, max_exp: u32, max_terms: usize) -> WeylElement {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let x = WeylElement::from_terms((0..n).map(|_| {
            let m = (rng.gen_range(0..=max_exp), rng.gen_range(0..=max_exp));
            let mut c = rng.gen_range(-9i64..=9);
            if c == 0 {
                c = 1;
            }
            (m, int(c))
        }));
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_unipoly(rng: &mut ChaCha8Rng, deg: usize) -> UniPoly {
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9i64..=9)).collect();
    if c[deg] == 0 {
        c[deg] = 1;
    }
    UniPoly::from_i64s(&c)
}

pub fn random_single_generator(rng: &mut ChaCha8Rng, max_deg: u32) -> WeylElement {
    let deg = rng.gen_range(1..=max_deg);
    let f = random_unipoly(rng, deg as usize);
    let gen = if rng.gen_bool(0.5) { WeylElement::q() } else { WeylElement::p() };
    weyl_core::substitute_poly(&f, &gen)
}

pub fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let mut n = rng.gen_range(-9i64..=9);
    if n == 0 {
        n = 1;
    }
    Scalar::new(n.into(), rng.gen_range(1i64..=5).into())
}

/// A solvable pair `(x, y)` with `[x, y] = 1`, obtained from `(p, q)` by a
/// chain of `exp(ad g)` automorphisms with `g` alternately in `F[q]` and
/// `F[p]`.
pub fn random_solvable_pair(rng: &mut ChaCha8Rng, steps: usize) -> (WeylElement, WeylElement) {
    let (mut x, mut y) = (WeylElement::p(), WeylElement::q());
    let mut in_q = rng.gen_bool(0.5);
    for _ in 0..steps {
        let deg = rng.gen_range(2..=3);
        let f = random_unipoly(rng, deg);
        let gen = if in_q { WeylElement::q() } else { WeylElement::p() };
        let g = weyl_core::substitute_poly(&f, &gen);
        x = grading::exp_ad(&g, &x).unwrap();
        y = grading::exp_ad(&g, &y).unwrap();
        in_q = !in_q;
    }
    (x, y)
}

// ---------------------------------------------------------------------------
// independent oracles

/// Normal form of `q^m p^n` by repeatedly rewriting the leftmost adjacent
/// `qp` into `pq - 1` on words.
pub fn rewrite_oracle(m: u32, n: u32) -> WeylElement {
    let mut word = vec![b'q'; m as usize];
    word.extend(std::iter::repeat_n(b'p', n as usize));
    let mut pending: BTreeMap<Vec<u8>, BigInt> = BTreeMap::from([(word, BigInt::one())]);
    let mut done: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    while let Some((w, c)) = pending.pop_first() {
        match w.windows(2).position(|pair| pair == b"qp") {
            None => {
                let i = w.iter().filter(|&&b| b == b'p').count() as u32;
                *done.entry((i, w.len() as u32 - i)).or_default() += c;
            }
            Some(k) => {
                let mut swapped = w.clone();
                swapped.swap(k, k + 1);
                *pending.entry(swapped).or_default() += &c;
                let mut removed = w;
                removed.drain(k..k + 2);
                *pending.entry(removed).or_default() -= c;
            }
        }
    }
    WeylElement::from_terms(done.into_iter().map(|(m, c)| (m, Scalar::from_integer(c))))
}

/// Edge weights found by trying every coprime weight with entries up to
/// `bound` and keeping those whose weighted support has two or more points.
pub fn scan_edge_weights(x: &WeylElement, bound: u64) -> BTreeSet<(u64, u64)> {
    let mut out = BTreeSet::new();
    for rho in 1..=bound {
        for sigma in 1..=bound {
            if num_integer::gcd(rho, sigma) != 1 {
                continue;
            }
            if weight_support_raw(x, rho, sigma).unwrap().len() >= 2 {
                out.insert((rho, sigma));
            }
        }
    }
    out
}

fn rational_root(c: &Scalar, m: u32) -> Option<Scalar> {
    let root = |n: &BigInt| -> Option<BigInt> {
        if n.is_negative() {
            if m.is_multiple_of(2) {
                return None;
            }
            let r = -(-n).nth_root(m);
            (num_traits::pow(r.clone(), m as usize) == *n).then_some(r)
        } else {
            let r = n.nth_root(m);
            (num_traits::pow(r.clone(), m as usize) == *n).then_some(r)
        }
    };
    Some(Scalar::new(root(c.numer())?, root(c.denom())?))
}

/// `Some(g)` with `g^m = f` and `g` over Q, found term by term in
/// lexicographic order; `None` if no such `g` exists.
pub fn mth_root_oracle(f: &BiPoly, m: u32) -> Option<BiPoly> {
    let ((a, b), lc) = f.lex_leading()?;
    if a % m != 0 || b % m != 0 {
        return None;
    }
    let lead = BiPoly::from_terms([((a / m, b / m), rational_root(lc, m)?)]);
    let max_i = f.terms().map(|(&(i, _), _)| i).max().unwrap();
    let max_j = f.terms().map(|(&(_, j), _)| j).max().unwrap();
    // Each new term t of g first shows up in g^m as m * lead^(m-1) * t.
    let lead_pow = lead.pow(m - 1).scale(&int(m as i64));
    let ((la, lb), lcoef) = lead_pow.lex_leading().map(|(mm, c)| (mm, c.clone())).unwrap();
    let mut g = lead;
    loop {
        let rest = f - &g.pow(m);
        let Some(((ra, rb), rc)) = rest.lex_leading() else {
            return Some(g);
        };
        if ra < la || rb < lb || (ra - la, rb - lb) >= (a / m, b / m) {
            return None;
        }
        let t = (ra - la, rb - lb);
        if t.0 > max_i || t.1 > max_j {
            return None;
        }
        g = &g + &BiPoly::from_terms([(t, rc / &lcoef)]);
    }
}
