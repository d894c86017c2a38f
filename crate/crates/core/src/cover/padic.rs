use serde::{Deserialize, Serialize};

use super::{
    find_translator, verify_cover, CoverCertificate, CoverError, NullsetSpec, PlanMode, Slalom,
    Translate, VerifyReport,
};
use crate::error::Caps;
use crate::groups::{BlockGroup, PadicContext};
use crate::json;

/// Per-block data of a p-adic cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PadicBlockTranslate {
    /// `S̃_n = S_n ∪ (S_n + 1_n)`, as block values.
    #[serde(with = "json::exact_vec")]
    pub enlarged: Vec<u64>,
    /// Least `g_n` with `S̃_n ⊆ A_n + g_n`.
    #[serde(with = "json::exact")]
    pub translator: u64,
    /// `x_n = −g_n`, so `S̃_n + x_n ⊆ A_n`.
    #[serde(with = "json::exact")]
    pub inverse: u64,
}

/// Covers a `⌊(n+2)/2⌋`-slalom over the blocks of a p-adic nullset by one
/// translate: `S + x ⊆ C` in `Z_p / p^{k_D}`.
///
/// A carry entering block `n` from below shifts the block sum by `1_n`, so
/// each block translator is chosen for the carry-closed set `S̃_n`, which
/// has at most `n+2` elements.
pub fn cover_padic_slalom(
    ctx: &PadicContext,
    spec: &NullsetSpec,
    slalom: &Slalom,
    caps: &Caps,
) -> Result<CoverCertificate, CoverError> {
    padic_cover_with_blocks(ctx, spec, slalom, caps).map(|(cert, _, _)| cert)
}

/// [`cover_padic_slalom`] that also returns the per-block translators and
/// the verification report (with carry statistics).
pub fn padic_cover_with_blocks(
    ctx: &PadicContext,
    spec: &NullsetSpec,
    slalom: &Slalom,
    caps: &Caps,
) -> Result<(CoverCertificate, Vec<PadicBlockTranslate>, VerifyReport), CoverError> {
    let plan = spec.plan();
    if plan.mode() != PlanMode::Padic {
        return Err(CoverError::PreconditionViolated(
            "p-adic cover needs a p-adic nullset".into(),
        ));
    }
    if plan.p() != Some(ctx.p()) || ctx.len() != plan.coordinate_count() {
        return Err(CoverError::PreconditionViolated(format!(
            "context (p = {}, L = {}) does not match the plan (p = {:?}, k_D = {})",
            ctx.p(),
            ctx.len(),
            plan.p(),
            plan.coordinate_count()
        )));
    }
    slalom.check_domains(plan)?;

    let mut digits = Vec::with_capacity(ctx.len());
    let mut details = Vec::with_capacity(plan.depth());
    for (n, set) in slalom.sets().iter().enumerate() {
        let half = (n + 2) / 2;
        if set.len() > half {
            return Err(CoverError::PreconditionViolated(format!(
                "|S_{n}| = {} exceeds ⌊(n+2)/2⌋ = {half}",
                set.len()
            )));
        }
        let block = BlockGroup::new(ctx.p(), plan.boundaries()[n], plan.block_len(n))?;
        let one = block.one();
        let mut enlarged = Vec::with_capacity(2 * set.len());
        for &s in set {
            let shifted = block.add(&block.digits(s)?, &one)?;
            enlarged.push(s);
            enlarged.push(block.value(&shifted)?);
        }
        enlarged.sort_unstable();
        enlarged.dedup();
        if enlarged.len() > n + 2 {
            return Err(CoverError::CountingBound {
                forbidden: enlarged.len() as u64,
                bound: n as u64 + 2,
            });
        }

        let g = find_translator(&block, spec.set(n), &enlarged, n, caps)?;
        let x = block.neg(&block.digits(g.translator)?)?;
        details.push(PadicBlockTranslate {
            enlarged,
            translator: g.translator,
            inverse: block.value(&x)?,
        });
        digits.extend_from_slice(&x);
    }

    let translate = Translate::Padic { digits };
    let report = verify_cover(spec, &translate, slalom, caps)?;
    if !report.covered {
        return Err(CoverError::VerificationFailed {
            witness: report.counterexample.unwrap_or_default(),
        });
    }
    let cert = CoverCertificate {
        translate,
        verified: true,
        checked_count: report.checked_count,
    };
    Ok((cert, details, report))
}
