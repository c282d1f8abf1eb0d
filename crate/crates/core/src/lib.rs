//! Exact invariants of linear codes over finite fields in the b-symbol metric.
//!
//! The crate computes, by exact enumeration at desk scale, the quantities a
//! coding theorist wants from a concrete `[n, k]_q` code read `b` symbols at a
//! time: minimum b-symbol distance, b-symbol covering radius, ball volumes,
//! weight profiles, perfectness verdicts and list-decoding sizes, together
//! with evaluations of the classical bounds (sandwich, redundancy, Singleton,
//! Delsarte- and Norse-style) in that metric.
//!
//! Everything is integer-exact; there are no tolerances anywhere. All
//! exhaustive paths are guarded by an explicit enumeration [`Budget`].

pub mod bounds;
pub mod families;
pub mod gf;
pub mod linalg;
pub mod listdecode;
pub mod metric;

pub use gf::{Elem, Field};
pub use linalg::{LinearCode, Matrix};
pub use metric::BProfile;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {q} exceeds the supported cap of 2^16")]
    FieldTooLarge { q: u128 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus has degree {found}, expected monic of degree {expected}")]
    ModulusDegree { expected: u32, found: usize },
    #[error("modulus polynomial is reducible")]
    ReducibleModulus,
    #[error("no built-in modulus for GF({p}^{e}); supply one explicitly")]
    NoDefaultModulus { p: u64, e: u32 },
    #[error("inverse of zero in GF({q})")]
    DivisionByZero { q: u32 },
    #[error("element {value} out of range for GF({q})")]
    ElementOutOfRange { value: u64, q: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("enumeration of {count} items exceeds the budget of 2^{cap}")]
    BudgetExceeded { count: u128, cap: u32 },
    #[error("b = {b} out of range for length {n} (need 1 <= b <= n-1)")]
    BOutOfRange { b: usize, n: usize },
    #[error("evaluation points must be distinct")]
    RepeatedPoints,
    #[error("code length {n} exceeds field size {q}")]
    LengthExceedsField { n: usize, q: u32 },
    #[error("generator polynomial does not divide x^{n} - lambda")]
    NotADivisor { n: usize },
    #[error("expected a proper subcode of the supplied supercode")]
    NotProperSubcode,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Cap on every exhaustive enumeration, expressed as a power of two.
///
/// One knob governs all brute-force paths: an operation that would touch more
/// than `2^cap_log2` vectors refuses to run instead of silently blowing up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    cap_log2: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::DEFAULT_CAP_LOG2)
    }
}

impl Budget {
    pub const DEFAULT_CAP_LOG2: u32 = 24;

    pub fn new(cap_log2: u32) -> Budget {
        Budget { cap_log2 }
    }

    pub fn cap_log2(&self) -> u32 {
        self.cap_log2
    }

    /// Checks that `count` items may be enumerated; returns the count as u64.
    pub fn check_count(&self, count: u128) -> Result<u64> {
        if self.cap_log2 < 128 && count <= (1u128 << self.cap_log2) {
            Ok(count as u64)
        } else {
            Err(Error::BudgetExceeded { count, cap: self.cap_log2 })
        }
    }

    /// Checks that `base^exp` items may be enumerated.
    pub fn check_pow(&self, base: u64, exp: u32) -> Result<u64> {
        let count = (base as u128)
            .checked_pow(exp)
            .ok_or(Error::BudgetExceeded { count: u128::MAX, cap: self.cap_log2 })?;
        self.check_count(count)
    }
}
