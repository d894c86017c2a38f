//! Symbolic LCA groups.
//!
//! A small descriptor grammar covers the groups the reduction needs: the
//! integers, reals, circle, finite cyclic groups, quasicyclic and p-adic
//! groups, finite direct sums, and countable sums and products of a
//! cyclically repeated list of finite groups. On top of it sit the
//! Pontryagin dual, primary decomposition, the subgroup trichotomy for
//! infinite discrete groups, divisible-chain search, and the pipeline that
//! reduces a nondiscrete group to the circle, a product of finite groups or
//! the p-adic integers.

mod chain;
mod classify;
mod decompose;
mod descriptor;
mod dual;
mod pipeline;

pub use chain::{divisible_chain, max_chain_depth, ChainDepth};
pub use classify::{classify_subgroup, TrichotomyCase, TrichotomyVerdict};
pub use decompose::{prime_factors, primary_decomposition};
pub use descriptor::GroupDescriptor;
pub use dual::dual;
pub use pipeline::{
    niceness_pipeline, rule_registry, NicenessVerdict, PipelineOutcome, ReductionTrace, Rule,
    RuleInfo, TraceStep, INDEX_SIDE_CONDITION,
};

use thiserror::Error;

use crate::error::{Classify, ErrorClass};
use crate::groups::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("{0} is not a finite torsion group")]
    NotFiniteTorsion(String),
    #[error("{0} is finite")]
    NotInfinite(String),
    #[error("{0} is not discrete")]
    NotDiscrete(String),
    #[error("no trichotomy case applies to {0}")]
    Unclassifiable(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl Classify for StructureError {
    fn class(&self) -> ErrorClass {
        match self {
            StructureError::InvalidDescriptor(_) => ErrorClass::Schema,
            StructureError::Group(e) => e.class(),
            _ => ErrorClass::Precondition,
        }
    }
}
