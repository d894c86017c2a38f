use serde::{Deserialize, Serialize};

use super::{CoverError, NullsetSpec, Odometer, PlanMode, Slalom, Translate};
use crate::error::Caps;
use crate::groups::{BlockGroup, FiniteAbelianGroup, GroupElement};
use crate::json;

/// How often a carry entered a block during p-adic verification.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarryStats {
    /// (element, block) pairs whose block of `s + x` was checked against
    /// the two candidate block sums.
    #[serde(with = "json::exact")]
    pub block_checks: u64,
    /// Pairs where the block equals `s_n + x_n` (no incoming carry).
    #[serde(with = "json::exact")]
    pub carry_free: u64,
    /// Pairs where the block equals `s_n + x_n + 1_n`.
    #[serde(with = "json::exact")]
    pub carried: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub covered: bool,
    /// Slalom elements visited, including a failing one.
    #[serde(with = "json::exact")]
    pub checked_count: u64,
    /// Lexicographically least slalom element (block indices) that misses.
    #[serde(with = "json::exact_option_vec")]
    pub counterexample: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carry: Option<CarryStats>,
}

/// Checks every element of `slalom` against the translated nullset.
///
/// Product mode checks `s − g ∈ C` in the full truncated product; p-adic
/// mode checks `s + x ∈ C` with full carry propagation modulo `p^{k_D}`,
/// and asserts on each block that the carried-in digit is 0 or 1.
/// Elements are visited in lexicographic order, so the first failure is the
/// least one.
pub fn verify_cover(
    spec: &NullsetSpec,
    translate: &Translate,
    slalom: &Slalom,
    caps: &Caps,
) -> Result<VerifyReport, CoverError> {
    let plan = spec.plan();
    slalom.check_domains(plan)?;
    let points = slalom.point_count();
    if points > caps.verification as u128 {
        return Err(CoverError::CapExceeded {
            what: "slalom verification",
            size: points,
            cap: caps.verification,
        });
    }
    match (plan.mode(), translate) {
        (PlanMode::Product, Translate::Product { residues }) => {
            verify_product(spec, residues, slalom)
        }
        (PlanMode::Padic, Translate::Padic { digits }) => verify_padic(spec, digits, slalom),
        (mode, _) => Err(CoverError::PreconditionViolated(format!(
            "translate kind does not match a {mode:?} plan"
        ))),
    }
}

fn odometer(slalom: &Slalom) -> Odometer {
    Odometer::new(slalom.sets().iter().map(Vec::len).collect())
}

fn verify_product(
    spec: &NullsetSpec,
    residues: &[u64],
    slalom: &Slalom,
) -> Result<VerifyReport, CoverError> {
    let plan = spec.plan();
    let full = plan.full_group()?;
    let g = full.element(residues.to_vec())?;
    let minus_g = full.neg(&g)?;
    let blocks: Vec<FiniteAbelianGroup> = (0..plan.depth())
        .map(|n| {
            let w = &plan.boundaries()[n..n + 2];
            FiniteAbelianGroup::new(plan.orders()[w[0]..w[1]].to_vec())
        })
        .collect::<Result<_, _>>()?;

    let mut checked = 0u64;
    for choice in odometer(slalom) {
        checked += 1;
        let point: Vec<u64> = choice
            .iter()
            .zip(slalom.sets())
            .map(|(&c, set)| set[c])
            .collect();
        let mut s = Vec::with_capacity(full.rank());
        for (block, &i) in blocks.iter().zip(&point) {
            s.extend_from_slice(block.element_at(i)?.residues());
        }
        let t = full.add(&full.element(s)?, &minus_g)?;
        if !in_product_nullset(spec, &blocks, &t)? {
            return Ok(VerifyReport {
                covered: false,
                checked_count: checked,
                counterexample: Some(point),
                carry: None,
            });
        }
    }
    Ok(VerifyReport {
        covered: true,
        checked_count: checked,
        counterexample: None,
        carry: None,
    })
}

fn in_product_nullset(
    spec: &NullsetSpec,
    blocks: &[FiniteAbelianGroup],
    t: &GroupElement,
) -> Result<bool, CoverError> {
    let bounds = spec.plan().boundaries();
    for (n, block) in blocks.iter().enumerate() {
        let part = block.element(t.residues()[bounds[n]..bounds[n + 1]].to_vec())?;
        if !spec.set(n).contains(block.index_of(&part)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn verify_padic(
    spec: &NullsetSpec,
    digits: &[u32],
    slalom: &Slalom,
) -> Result<VerifyReport, CoverError> {
    let plan = spec.plan();
    let ctx = plan.padic_context()?;
    let x = ctx.number(digits.to_vec())?;
    let blocks: Vec<BlockGroup> = (0..plan.depth())
        .map(|n| BlockGroup::new(ctx.p(), plan.boundaries()[n], plan.block_len(n)))
        .collect::<Result<_, _>>()?;
    let x_blocks: Vec<Vec<u32>> = blocks
        .iter()
        .map(|b| b.restrict(&x))
        .collect::<Result<_, _>>()?;

    let mut stats = CarryStats::default();
    let mut checked = 0u64;
    for choice in odometer(slalom) {
        checked += 1;
        let point: Vec<u64> = choice
            .iter()
            .zip(slalom.sets())
            .map(|(&c, set)| set[c])
            .collect();
        let s_blocks: Vec<Vec<u32>> = blocks
            .iter()
            .zip(&point)
            .map(|(b, &v)| b.digits(v))
            .collect::<Result<_, _>>()?;
        let s = ctx.number(s_blocks.concat())?;
        let sum = ctx.add(&s, &x)?;

        let mut inside = true;
        for (n, block) in blocks.iter().enumerate() {
            let got = block.restrict(&sum)?;
            let plain = block.add(&s_blocks[n], &x_blocks[n])?;
            stats.block_checks += 1;
            if got == plain {
                stats.carry_free += 1;
            } else if got == block.add(&plain, &block.one())? {
                stats.carried += 1;
            } else {
                return Err(CoverError::CarryDichotomy {
                    block: n,
                    element: point,
                });
            }
            inside &= spec.set(n).contains(block.value(&got)?);
        }
        if !inside {
            return Ok(VerifyReport {
                covered: false,
                checked_count: checked,
                counterexample: Some(point),
                carry: Some(stats),
            });
        }
    }
    Ok(VerifyReport {
        covered: true,
        checked_count: checked,
        counterexample: None,
        carry: Some(stats),
    })
}
