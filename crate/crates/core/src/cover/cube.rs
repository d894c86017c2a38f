use serde::{Deserialize, Serialize};

use super::{product_size, BlockPlan, CoverError, Odometer, Slalom};
use crate::error::Caps;
use crate::json;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeReport {
    pub covered: bool,
    /// Least point of the truncated cube outside every slalom.
    #[serde(with = "json::exact_option_vec")]
    pub witness: Option<Vec<u64>>,
    /// Points of the cube visited.
    #[serde(with = "json::exact")]
    pub checked_count: u64,
}

/// Decides whether `family` covers the truncated cube `×_{n<D} G_n` of
/// `plan`, scanning points in lexicographic order.
pub fn cube_cover_check(
    family: &[Slalom],
    plan: &BlockPlan,
    caps: &Caps,
) -> Result<CubeReport, CoverError> {
    let size = product_size(plan.block_orders().iter().copied());
    if size > caps.verification as u128 {
        return Err(CoverError::CapExceeded {
            what: "cube scan",
            size,
            cap: caps.verification,
        });
    }
    for slalom in family {
        slalom.check_domains(plan)?;
    }
    let sizes = plan.block_orders().iter().map(|&m| m as usize).collect();
    let mut checked = 0u64;
    for point in Odometer::new(sizes) {
        checked += 1;
        let point: Vec<u64> = point.into_iter().map(|c| c as u64).collect();
        if !family.iter().any(|s| s.contains(&point)) {
            return Ok(CubeReport {
                covered: false,
                witness: Some(point),
                checked_count: checked,
            });
        }
    }
    Ok(CubeReport {
        covered: true,
        witness: None,
        checked_count: checked,
    })
}
