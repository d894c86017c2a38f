use super::CoverError;
use crate::error::Caps;
use crate::groups::{FiniteGroup, IndexSet};

/// Result of [`find_translator`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Translation {
    /// Index of the least `g` with `S ⊆ g + A`.
    pub translator: u64,
    /// Size of the forbidden set `S − (G∖A)`.
    pub forbidden: u64,
}

/// Finds the least `g` (in canonical order) with `S ⊆ g + A`.
///
/// `S ⊄ g + A` exactly when `s − g ∉ A` for some `s ∈ S`, i.e. when
/// `g ∈ S − (G∖A)`. That forbidden set has at most `|S|·|G∖A|` elements,
/// which is below `|G|` as soon as `|A| ≥ (1 − 1/(n+3))|G|` and
/// `|S| ≤ n+2`, so a translator exists.
///
/// Elements are group indices; `a` must be a subset of `0..group.order()`.
pub fn find_translator<G: FiniteGroup>(
    group: &G,
    a: &IndexSet,
    s: &[u64],
    n: usize,
    caps: &Caps,
) -> Result<Translation, CoverError> {
    let order = group.order();
    if order > caps.enumeration {
        return Err(CoverError::CapExceeded {
            what: "translator search",
            size: order as u128,
            cap: caps.enumeration,
        });
    }
    if a.universe() != order {
        return Err(CoverError::PreconditionViolated(format!(
            "A is a subset of {} elements, the group has {order}",
            a.universe()
        )));
    }
    if let Some(&bad) = s.iter().find(|&&x| x >= order) {
        return Err(CoverError::PreconditionViolated(format!(
            "S contains {bad}, outside a group of order {order}"
        )));
    }
    let n3 = n as u128 + 3;
    if n3 * (a.len() as u128) < (n3 - 1) * order as u128 {
        return Err(CoverError::PreconditionViolated(format!(
            "|A| = {} is below (1 - 1/{n3})·{order}",
            a.len()
        )));
    }
    if s.len() as u128 > n3 - 1 {
        return Err(CoverError::PreconditionViolated(format!(
            "|S| = {} exceeds n + 2 = {}",
            s.len(),
            n3 - 1
        )));
    }

    let missing = order - a.len();
    let bound = s.len() as u64 * missing;
    if bound >= order {
        // |S|·|G∖A| ≤ (n+2)|G|/(n+3) < |G| follows from the checks above.
        return Err(CoverError::CountingBound {
            forbidden: bound,
            bound: order - 1,
        });
    }

    let (translator, size) = match a.as_mask() {
        Some(mask) => forbidden_in_word(group, mask, order, s),
        None => {
            let mut forbidden = IndexSet::new(order);
            for c in a.iter_absent() {
                let minus_c = group.neg_index(c);
                for &x in s {
                    forbidden.insert(group.add_index(x, minus_c));
                }
            }
            (forbidden.first_absent(), forbidden.len())
        }
    };
    if size > bound {
        return Err(CoverError::CountingBound {
            forbidden: size,
            bound,
        });
    }
    let translator = translator.ok_or(CoverError::NoTranslator { order })?;
    Ok(Translation {
        translator,
        forbidden: size,
    })
}

/// The forbidden set as a single word, for groups of order at most 64.
fn forbidden_in_word<G: FiniteGroup>(
    group: &G,
    a_mask: u64,
    order: u64,
    s: &[u64],
) -> (Option<u64>, u64) {
    let mut absent = !a_mask;
    if order < 64 {
        absent &= (1u64 << order) - 1;
    }
    let mut forbidden = 0u64;
    while absent != 0 {
        let c = absent.trailing_zeros() as u64;
        absent &= absent - 1;
        let minus_c = group.neg_index(c);
        for &x in s {
            forbidden |= 1 << group.add_index(x, minus_c);
        }
    }
    let first = (!forbidden).trailing_zeros() as u64;
    ((first < order).then_some(first), forbidden.count_ones() as u64)
}
