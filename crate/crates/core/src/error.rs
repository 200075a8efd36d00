use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("zero element has no {0}")]
    ZeroElement(&'static str),
    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),
    #[error("exp-ad requires single-generator polynomial")]
    MixedGenerator,
    #[error("weight ({rho},{sigma}) is not a pair of coprime positive integers")]
    InvalidWeight { rho: u64, sigma: u64 },
    #[error("weights ({0},{1}) and ({2},{3}) have equal ratios")]
    EqualRatios(u64, u64, u64, u64),
    #[error("polynomial is not ({rho},{sigma})-homogeneous")]
    NotHomogeneous { rho: u64, sigma: u64 },
    #[error("requires axis weight (n,1) or (1,n), got ({rho},{sigma})")]
    RequiresAxisWeight { rho: u64, sigma: u64 },
    #[error("constant polynomial has no power index")]
    ConstantPolynomial,
    #[error("box bound {bound} exceeds the oracle cap {cap}")]
    BoxBoundExceedsCap { bound: u32, cap: u32 },
    #[error("internal invariant breached: {0}")]
    Internal(String),
}

pub type Result<T, E = WeylError> = std::result::Result<T, E>;
