use serde::{Deserialize, Serialize};

/// Coarse classification of failures, used by front ends to pick an exit
/// status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorClass {
    /// Malformed input: wrong shape, out-of-range value, broken invariant.
    Schema,
    /// Well-formed input that violates an operation's precondition.
    Precondition,
    /// An exhaustive operation would exceed its configured limit.
    CapExceeded,
    /// A result that contradicts a proven statement. Always a bug.
    Internal,
}

pub trait Classify {
    fn class(&self) -> ErrorClass;
}

pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;
pub const DEFAULT_VERIFICATION_CAP: u64 = 1 << 24;

/// Limits for exhaustive work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest finite group that may be enumerated element by element.
    pub enumeration: u64,
    /// Largest number of slalom or cube points a verifier may visit.
    pub verification: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            verification: DEFAULT_VERIFICATION_CAP,
        }
    }
}

impl Caps {
    pub fn new(enumeration: u64, verification: u64) -> Self {
        Caps {
            enumeration: enumeration.max(1),
            verification: verification.max(1),
        }
    }
}
