use serde::{Deserialize, Serialize};

use super::StructureError;
use crate::error::Caps;
use crate::groups::{is_prime, FiniteAbelianGroup, GroupElement, GroupError, IndexSet};

/// Longest p-divisibility chain in a finite group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "depth", rename_all = "lowercase")]
pub enum ChainDepth {
    /// The group has no nonzero element.
    None,
    /// Chains `(g_0, …, g_k)` exist for this `k` and no larger one.
    Finite(u64),
    /// Chains of every length exist.
    Unbounded,
}

/// Levels `T_0 = G`, `T_{j+1} = p·T_j`, computed until they stop
/// shrinking. `T_j` is the set of elements that start a predecessor path
/// of length `j`. The last level is the stable one.
struct Levels {
    times_p: Vec<u64>,
    levels: Vec<IndexSet>,
}

impl Levels {
    fn new(group: &FiniteAbelianGroup, p: u64, caps: &Caps) -> Result<Self, StructureError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p).into());
        }
        let order = group.order();
        if order > caps.enumeration {
            return Err(GroupError::CapExceeded {
                size: order,
                cap: caps.enumeration,
            }
            .into());
        }
        let times_p = group
            .elements(caps.enumeration)?
            .map(|g| group.index_of(&group.scalar_mul(p, &g)?))
            .collect::<Result<Vec<_>, _>>()?;
        let mut levels = vec![IndexSet::prefix(order, order)];
        loop {
            let last = levels.last().unwrap();
            let mut next = IndexSet::new(order);
            for i in last.iter() {
                next.insert(times_p[i as usize]);
            }
            if next.len() == last.len() {
                break;
            }
            levels.push(next);
        }
        Ok(Levels { times_p, levels })
    }

    fn level(&self, j: u64) -> &IndexSet {
        let last = self.levels.len() - 1;
        &self.levels[(j as usize).min(last)]
    }
}

/// The lexicographically least chain `(g_0, …, g_d)` with `g_0 ≠ 0` and
/// `p·g_{i+1} = g_i`, or `None` when the predecessor tree of the nonzero
/// elements is too shallow.
///
/// Elements are compared by canonical index, coordinate by coordinate.
pub fn divisible_chain(
    group: &FiniteAbelianGroup,
    p: u64,
    depth: u64,
    caps: &Caps,
) -> Result<Option<Vec<GroupElement>>, StructureError> {
    let length = depth.saturating_add(1);
    if length > caps.enumeration {
        return Err(GroupError::CapExceeded {
            size: length,
            cap: caps.enumeration,
        }
        .into());
    }
    let levels = Levels::new(group, p, caps)?;
    let Some(mut current) = levels.level(depth).iter().find(|&i| i != 0) else {
        return Ok(None);
    };
    let mut chain = vec![current];
    for i in 1..=depth {
        let below = levels.level(depth - i);
        current = below
            .iter()
            .find(|&h| levels.times_p[h as usize] == current)
            .expect("every element of a level has a predecessor one level down");
        chain.push(current);
    }
    chain
        .into_iter()
        .map(|i| group.element_at(i).map_err(Into::into))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

/// Largest `d` for which [`divisible_chain`] succeeds.
pub fn max_chain_depth(
    group: &FiniteAbelianGroup,
    p: u64,
    caps: &Caps,
) -> Result<ChainDepth, StructureError> {
    let levels = Levels::new(group, p, caps)?;
    let nonzero = |s: &IndexSet| s.iter().any(|i| i != 0);
    if nonzero(levels.levels.last().unwrap()) {
        return Ok(ChainDepth::Unbounded);
    }
    Ok(match levels.levels.iter().rposition(nonzero) {
        Some(k) => ChainDepth::Finite(k as u64),
        None => ChainDepth::None,
    })
}
