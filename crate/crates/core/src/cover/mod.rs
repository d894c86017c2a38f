//! Block planning, nullset construction and slalom covers.
//!
//! A compact nullset `C = ×_n A_n` lives in a product of finite block groups
//! `G_n`. Each `A_n` misses between `1/(2(n+3))` and `1/(n+3)` of its block,
//! which is enough to make `C` null while still letting every slalom of
//! width `n+2` be moved inside `C` by a single translate. Everything here is
//! the finite truncation to the first `D` blocks, verified exhaustively.

mod cube;
mod nullset_spec;
mod padic;
mod plan;
mod product;
mod slalom;
mod translator;
mod verify;

pub use cube::{cube_cover_check, CubeReport};
pub use nullset_spec::{
    build_nullset, first_depth_below, measure_bound, measure_upper, size_window, MeasureReport,
    NullsetSpec,
};
pub use padic::{cover_padic_slalom, padic_cover_with_blocks, PadicBlockTranslate};
pub use plan::{plan_blocks_padic, plan_blocks_product, BlockDomain, BlockPlan, PlanMode};
pub use product::cover_product_slalom;
pub use slalom::{random_slalom, Slalom, WidthFn};
pub use translator::{find_translator, Translation};
pub use verify::{verify_cover, CarryStats, VerifyReport};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Classify, ErrorClass};
use crate::groups::GroupError;
use crate::json;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no translator: the forbidden set covers all {order} elements")]
    NoTranslator { order: u64 },
    #[error("forbidden set has {forbidden} elements, above the counting bound {bound}")]
    CountingBound { forbidden: u64, bound: u64 },
    #[error("invalid block plan: {0}")]
    InvalidPlan(String),
    #[error("coordinates exhausted after {formed} of {requested} blocks")]
    CoordinatesExhausted { formed: usize, requested: usize },
    #[error("block {block}: size window [{lower}, {upper}] is empty")]
    EmptyWindow { block: usize, lower: u64, upper: u64 },
    #[error("invalid nullset: {0}")]
    InvalidNullset(String),
    #[error("invalid slalom: {0}")]
    InvalidSlalom(String),
    #[error("{what} needs {size} points, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u64,
    },
    #[error("verification failed at slalom element {witness:?}")]
    VerificationFailed { witness: Vec<u64> },
    #[error("block {block} of {element:?} + translate is neither the carry-free nor the carried block sum")]
    CarryDichotomy { block: usize, element: Vec<u64> },
}

impl Classify for CoverError {
    fn class(&self) -> ErrorClass {
        use CoverError::*;
        match self {
            Group(e) => e.class(),
            PreconditionViolated(_) | NoTranslator { .. } | CoordinatesExhausted { .. } => {
                ErrorClass::Precondition
            }
            InvalidPlan(_) | InvalidNullset(_) | InvalidSlalom(_) => ErrorClass::Schema,
            CapExceeded { .. } => ErrorClass::CapExceeded,
            CountingBound { .. }
            | EmptyWindow { .. }
            | VerificationFailed { .. }
            | CarryDichotomy { .. } => ErrorClass::Internal,
        }
    }
}

/// The element by which a slalom is translated into the nullset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Translate {
    /// Residues over every coordinate of the truncated product; the slalom
    /// satisfies `S ⊆ g + C`.
    Product {
        #[serde(with = "json::exact_vec")]
        residues: Vec<u64>,
    },
    /// Digits, least significant first, of `x` with `S + x ⊆ C`.
    Padic { digits: Vec<u32> },
}

/// A translate together with the outcome of its exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub translate: Translate,
    pub verified: bool,
    #[serde(with = "json::exact")]
    pub checked_count: u64,
}

/// `2(n+3)`, the lower bound every block order must exceed.
pub(crate) fn block_threshold(n: usize) -> u64 {
    2 * (n as u64 + 3)
}

/// Number of points of a product of finite sets, saturating at `u128::MAX`.
pub(crate) fn product_size<I: IntoIterator<Item = u64>>(sizes: I) -> u128 {
    sizes
        .into_iter()
        .fold(1u128, |acc, s| acc.saturating_mul(s as u128))
}

/// Odometer over `×_n 0..sizes[n]`, last coordinate fastest.
pub(crate) struct Odometer {
    sizes: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl Odometer {
    pub(crate) fn new(sizes: Vec<usize>) -> Self {
        let current = if sizes.contains(&0) {
            None
        } else {
            Some(vec![0; sizes.len()])
        };
        Odometer { sizes, current }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut succ = out.clone();
        for (c, &s) in succ.iter_mut().zip(&self.sizes).rev() {
            *c += 1;
            if *c < s {
                self.current = Some(succ);
                return Some(out);
            }
            *c = 0;
        }
        Some(out)
    }
}
