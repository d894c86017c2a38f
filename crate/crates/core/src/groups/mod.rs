//! Exact arithmetic for finite abelian groups, truncated p-adic integers and
//! the truncated-carry block groups cut out of a p-adic digit string.

mod finite;
mod padic;
mod subset;

pub use finite::{Elements, FiniteAbelianGroup, GroupElement};
pub use padic::{is_prime, BlockGroup, PadicContext, PadicNumber};
pub use subset::IndexSet;

use thiserror::Error;

use crate::error::{Classify, ErrorClass};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cyclic factor order must be at least 2, got {0}")]
    InvalidOrder(u64),
    #[error("group order does not fit in 64 bits")]
    OrderOverflow,
    #[error("element has {found} coordinates, group has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("residue {residue} at coordinate {coordinate} is not below {modulus}")]
    ResidueOutOfRange {
        coordinate: usize,
        residue: u64,
        modulus: u64,
    },
    #[error("index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: u64, order: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large; digits are limited to 32 bits")]
    PrimeTooLarge(u64),
    #[error("truncation length must be at least 1")]
    ZeroLength,
    #[error("{p}^{len} does not fit in 64 bits")]
    BlockTooLarge { p: u64, len: usize },
    #[error("digit {digit} at position {position} is not below p = {p}")]
    DigitOutOfRange { position: usize, digit: u32, p: u64 },
    #[error("enumerating {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: u64, cap: u64 },
}

impl Classify for GroupError {
    fn class(&self) -> ErrorClass {
        match self {
            GroupError::CapExceeded { .. } => ErrorClass::CapExceeded,
            GroupError::DimensionMismatch { .. } => ErrorClass::Precondition,
            _ => ErrorClass::Schema,
        }
    }
}

/// A finite group whose elements are addressed by their position in a fixed
/// canonical enumeration `0..order()`.
///
/// Covering algorithms work entirely in index space so that the same code
/// drives direct products of cyclic groups and p-adic block groups.
pub trait FiniteGroup {
    fn order(&self) -> u64;

    fn add_index(&self, a: u64, b: u64) -> u64;

    fn neg_index(&self, a: u64) -> u64;

    fn sub_index(&self, a: u64, b: u64) -> u64 {
        self.add_index(a, self.neg_index(b))
    }
}

/// Cayley table of a small group, for hot loops that call the group
/// operation millions of times.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    order: u64,
    sum: Vec<u32>,
    neg: Vec<u32>,
}

impl CayleyTable {
    /// Largest order for which a table is built (16 MiB of sums).
    pub const MAX_ORDER: u64 = 1 << 11;

    pub fn new<G: FiniteGroup>(group: &G) -> Result<Self, GroupError> {
        let order = group.order();
        if order > Self::MAX_ORDER {
            return Err(GroupError::CapExceeded {
                size: order,
                cap: Self::MAX_ORDER,
            });
        }
        let mut sum = Vec::with_capacity((order * order) as usize);
        for a in 0..order {
            for b in 0..order {
                sum.push(group.add_index(a, b) as u32);
            }
        }
        let neg = (0..order).map(|a| group.neg_index(a) as u32).collect();
        Ok(CayleyTable { order, sum, neg })
    }
}

impl FiniteGroup for CayleyTable {
    fn order(&self) -> u64 {
        self.order
    }

    #[inline]
    fn add_index(&self, a: u64, b: u64) -> u64 {
        self.sum[(a * self.order + b) as usize] as u64
    }

    #[inline]
    fn neg_index(&self, a: u64) -> u64 {
        self.neg[a as usize] as u64
    }
}
