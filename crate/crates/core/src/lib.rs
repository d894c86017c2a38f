//! Exact finite-depth constructions of compact Haar-nullsets in locally
//! compact abelian groups, together with the translates that cover slaloms.
//!
//! The crate is organized in four layers:
//!
//! * [`groups`]: finite abelian groups in invariant-factor form, truncated
//!   p-adic integers with carry-propagating addition, and the block groups
//!   obtained by cutting a p-adic digit string into intervals.
//! * [`cover`]: block planning, nullset construction, the coordinate
//!   translator, slalom covers for products and p-adic integers, and the
//!   exhaustive verifier behind every certificate.
//! * [`nullset`]: the Erdős–Kakutani set in the factorial number system.
//! * [`structure`]: a symbolic grammar for LCA groups with Pontryagin duals,
//!   the subgroup trichotomy and the reduction pipeline down to the three
//!   base cases.
//!
//! All arithmetic is exact. Every operation that enumerates a finite set
//! is guarded by a [`Caps`] limit and aborts instead of sampling.

pub mod cover;
pub mod error;
pub mod groups;
pub mod json;
pub mod nullset;
pub mod structure;

pub use cover::{
    BlockPlan, CoverCertificate, CoverError, NullsetSpec, PlanMode, Slalom, Translate,
    VerifyReport, WidthFn,
};
pub use error::{Caps, Classify, ErrorClass};
pub use groups::{
    BlockGroup, FiniteAbelianGroup, FiniteGroup, GroupElement, GroupError, IndexSet,
    PadicContext, PadicNumber,
};
pub use nullset::{ExactRational, FactorialDigits, Membership, NullsetError};
pub use structure::{GroupDescriptor, ReductionTrace, StructureError, TrichotomyVerdict};
