//! Benchmark fixtures for `weyl-core`. The benches themselves live in
//! `benches/weyl.rs`.

use weyl_core::{Scalar, WeylElement};

/// The element `p^4 + p^3 q + p^2 q^2 + q^3 + q`.
pub fn polygon_example() -> WeylElement {
    WeylElement::from_terms(
        [(4, 0), (3, 1), (2, 2), (0, 3), (0, 1)]
            .into_iter()
            .map(|m| (m, Scalar::from_integer(1.into()))),
    )
}

/// A dense element with every `p^i q^j`, `i, j <= n`, coefficient `i - j + 1`.
pub fn dense(n: u32) -> WeylElement {
    WeylElement::from_terms((0..=n).flat_map(|i| {
        (0..=n).map(move |j| ((i, j), Scalar::from_integer((i as i64 - j as i64 + 1).into())))
    }))
}
