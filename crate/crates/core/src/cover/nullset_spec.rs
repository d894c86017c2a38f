use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{BlockPlan, CoverError};
use crate::groups::IndexSet;
use crate::json;
use crate::nullset::ExactRational;

/// The finite description of `C = ×_n A_n`: a block plan and one subset of
/// each block, given as canonical indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawNullset", into = "RawNullset")]
pub struct NullsetSpec {
    plan: BlockPlan,
    sets: Vec<IndexSet>,
}

#[derive(Serialize, Deserialize)]
struct RawNullset {
    plan: BlockPlan,
    #[serde(rename = "A", with = "json::exact_vec_vec")]
    sets: Vec<Vec<u64>>,
}

impl TryFrom<RawNullset> for NullsetSpec {
    type Error = CoverError;

    fn try_from(raw: RawNullset) -> Result<Self, CoverError> {
        NullsetSpec::new(raw.plan, raw.sets)
    }
}

impl From<NullsetSpec> for RawNullset {
    fn from(spec: NullsetSpec) -> Self {
        RawNullset {
            sets: spec.sets.iter().map(IndexSet::to_vec).collect(),
            plan: spec.plan,
        }
    }
}

/// `(⌈(1 − 1/(n+3))·order⌉, ⌊(1 − 1/(2(n+3)))·order⌋)`, the admissible
/// sizes of `A_n`.
pub fn size_window(n: usize, order: u64) -> (u64, u64) {
    let n3 = n as u128 + 3;
    let order = order as u128;
    let lower = ((n3 - 1) * order).div_ceil(n3);
    let upper = ((2 * n3 - 1) * order) / (2 * n3);
    (lower as u64, upper as u64)
}

impl NullsetSpec {
    /// Validates one strictly increasing index list per block of `plan`,
    /// each with a size inside [`size_window`].
    pub fn new(plan: BlockPlan, sets: Vec<Vec<u64>>) -> Result<Self, CoverError> {
        if sets.len() != plan.depth() {
            return Err(CoverError::InvalidNullset(format!(
                "{} sets for a plan of depth {}",
                sets.len(),
                plan.depth()
            )));
        }
        let mut out = Vec::with_capacity(sets.len());
        for (n, (set, &order)) in sets.iter().zip(plan.block_orders()).enumerate() {
            if set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CoverError::InvalidNullset(format!(
                    "A_{n} is not strictly increasing"
                )));
            }
            let (lower, upper) = size_window(n, order);
            let len = set.len() as u64;
            if len < lower || len > upper {
                return Err(CoverError::InvalidNullset(format!(
                    "|A_{n}| = {len} outside [{lower}, {upper}] for a block of order {order}"
                )));
            }
            let indexed = IndexSet::from_indices(order, set.iter().copied()).map_err(|i| {
                CoverError::InvalidNullset(format!("A_{n} contains {i}, block order is {order}"))
            })?;
            out.push(indexed);
        }
        Ok(NullsetSpec { plan, sets: out })
    }

    pub fn plan(&self) -> &BlockPlan {
        &self.plan
    }

    pub fn depth(&self) -> usize {
        self.sets.len()
    }

    /// `A_n`.
    pub fn set(&self, n: usize) -> &IndexSet {
        &self.sets[n]
    }

    pub fn sets(&self) -> &[IndexSet] {
        &self.sets
    }

    /// Whether a point, given by one block index per block, lies in `C`.
    pub fn contains(&self, point: &[u64]) -> bool {
        point.len() == self.sets.len() && point.iter().zip(&self.sets).all(|(&i, a)| a.contains(i))
    }
}

/// `A_n` = the first `⌊(1 − 1/(2(n+3)))·|G_n|⌋` elements of each block in
/// canonical order: the largest set the window allows.
pub fn build_nullset(plan: &BlockPlan) -> Result<NullsetSpec, CoverError> {
    let mut sets = Vec::with_capacity(plan.depth());
    for (n, &order) in plan.block_orders().iter().enumerate() {
        let (lower, upper) = size_window(n, order);
        if lower > upper {
            return Err(CoverError::EmptyWindow {
                block: n,
                lower,
                upper,
            });
        }
        sets.push(IndexSet::prefix(order, upper));
    }
    Ok(NullsetSpec {
        plan: plan.clone(),
        sets,
    })
}

/// `∏_{n<blocks} (1 − 1/(2(n+3)))`, the ceiling on the measure of the first
/// `blocks` cylinders.
pub fn measure_bound(blocks: usize) -> ExactRational {
    (0..blocks as u64).fold(ExactRational::one(), |acc, n| {
        acc * ExactRational::new(BigInt::from(2 * n + 5), BigInt::from(2 * n + 6))
    })
}

/// Least `N` (searched up to `limit`) with `measure_bound(N) < threshold`.
pub fn first_depth_below(threshold: &ExactRational, limit: usize) -> Option<usize> {
    let mut bound = ExactRational::one();
    for n in 0..=limit {
        if &bound < threshold {
            return Some(n);
        }
        bound *= ExactRational::new(BigInt::from(2 * n + 5), BigInt::from(2 * n + 6));
    }
    None
}

/// Exact Haar measure of the level-`blocks` cylinder cover of `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub blocks: usize,
    /// `∏_{n<blocks} |A_n| / |G_n|`.
    #[serde(with = "json::rational")]
    pub measure: ExactRational,
    /// `∏_{n<blocks} (1 − 1/(2(n+3)))`.
    #[serde(with = "json::rational")]
    pub bound: ExactRational,
}

pub fn measure_upper(spec: &NullsetSpec, blocks: usize) -> Result<MeasureReport, CoverError> {
    if blocks > spec.depth() {
        return Err(CoverError::PreconditionViolated(format!(
            "{blocks} blocks requested from a nullset of depth {}",
            spec.depth()
        )));
    }
    let mut measure = ExactRational::one();
    let mut bound = ExactRational::one();
    for n in 0..blocks {
        let order = spec.plan.block_orders()[n];
        measure *= ExactRational::new(
            BigInt::from(spec.sets[n].len()),
            BigInt::from(order),
        );
        bound *= ExactRational::new(BigInt::from(2 * n as u64 + 5), BigInt::from(2 * n as u64 + 6));
        if measure > bound {
            return Err(CoverError::InvalidNullset(format!(
                "measure of the first {} blocks exceeds its bound",
                n + 1
            )));
        }
    }
    Ok(MeasureReport {
        blocks,
        measure,
        bound,
    })
}
