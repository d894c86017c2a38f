use super::{
    find_translator, verify_cover, BlockDomain, CoverCertificate, CoverError, NullsetSpec,
    PlanMode, Slalom, Translate,
};
use crate::error::Caps;

/// Covers an `(n+2)`-slalom over the blocks of a product-mode nullset by one
/// translate: `S ⊆ g + C` with `g_n` the least translator of `S_n` into
/// `A_n` on every block.
///
/// The certificate is only returned after [`verify_cover`] has checked all
/// `∏ |S_n|` slalom elements.
pub fn cover_product_slalom(
    spec: &NullsetSpec,
    slalom: &Slalom,
    caps: &Caps,
) -> Result<CoverCertificate, CoverError> {
    let plan = spec.plan();
    if plan.mode() != PlanMode::Product {
        return Err(CoverError::PreconditionViolated(
            "product cover needs a product-mode nullset".into(),
        ));
    }
    slalom.check_domains(plan)?;

    let mut residues = Vec::with_capacity(plan.coordinate_count());
    for (n, set) in slalom.sets().iter().enumerate() {
        let BlockDomain::Product(block) = plan.block(n) else {
            unreachable!("product plans have product blocks")
        };
        let g = find_translator(&block, spec.set(n), set, n, caps)?;
        debug_assert!(g.translator < block.order());
        residues.extend_from_slice(block.element_at(g.translator)?.residues());
    }

    let translate = Translate::Product { residues };
    let report = verify_cover(spec, &translate, slalom, caps)?;
    if !report.covered {
        return Err(CoverError::VerificationFailed {
            witness: report.counterexample.unwrap_or_default(),
        });
    }
    Ok(CoverCertificate {
        translate,
        verified: true,
        checked_count: report.checked_count,
    })
}
