use std::collections::BTreeMap;

use super::{GroupDescriptor, StructureError};

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order.
pub fn prime_factors(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            let mut k = 0;
            while m.is_multiple_of(d) {
                m /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Splits a finite group into its p-primary parts.
///
/// Every `Cyclic(m)` summand is split into `Cyclic(p^k)` factors. Parts
/// are listed by increasing prime; within a part the factors keep the
/// order in which their source summands appear.
pub fn primary_decomposition(
    d: &GroupDescriptor,
) -> Result<Vec<(u64, GroupDescriptor)>, StructureError> {
    if !d.is_finite() {
        return Err(StructureError::NotFiniteTorsion(d.to_string()));
    }
    let mut parts: BTreeMap<u64, Vec<GroupDescriptor>> = BTreeMap::new();
    for s in d.summands() {
        let GroupDescriptor::Cyclic { m } = s else {
            unreachable!("finite summands are cyclic")
        };
        for (p, k) in prime_factors(*m) {
            parts
                .entry(p)
                .or_default()
                .push(GroupDescriptor::Cyclic { m: p.pow(k) });
        }
    }
    Ok(parts
        .into_iter()
        .map(|(p, v)| (p, GroupDescriptor::sum_of(v)))
        .collect())
}
