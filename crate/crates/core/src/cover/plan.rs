use serde::{Deserialize, Serialize};

use super::{block_threshold, CoverError};
use crate::groups::{
    BlockGroup, FiniteAbelianGroup, FiniteGroup, GroupError, PadicContext,
};
use crate::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlanMode {
    Product,
    Padic,
}

/// A partition of the first `k_D` coordinates into `D` consecutive blocks,
/// `[k_n, k_{n+1})`, each with more than `2(n+3)` elements.
///
/// In product mode the coordinates are cyclic groups with the given orders;
/// in p-adic mode they are base-`p` digits and block `n` is a
/// [`BlockGroup`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPlan", into = "RawPlan")]
pub struct BlockPlan {
    mode: PlanMode,
    p: Option<u64>,
    orders: Vec<u64>,
    boundaries: Vec<usize>,
    block_orders: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawPlan {
    mode: PlanMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "json::exact_option_vec"
    )]
    orders: Option<Vec<u64>>,
    boundaries: Vec<usize>,
}

impl TryFrom<RawPlan> for BlockPlan {
    type Error = CoverError;

    fn try_from(raw: RawPlan) -> Result<Self, CoverError> {
        match raw.mode {
            PlanMode::Product => {
                if raw.p.is_some() {
                    return Err(CoverError::InvalidPlan("product plans take no p".into()));
                }
                let orders = raw
                    .orders
                    .ok_or_else(|| CoverError::InvalidPlan("product plan needs orders".into()))?;
                BlockPlan::product(orders, raw.boundaries)
            }
            PlanMode::Padic => {
                if raw.orders.is_some() {
                    return Err(CoverError::InvalidPlan("p-adic plans take no orders".into()));
                }
                let p = raw
                    .p
                    .ok_or_else(|| CoverError::InvalidPlan("p-adic plan needs p".into()))?;
                BlockPlan::padic(p, raw.boundaries)
            }
        }
    }
}

impl From<BlockPlan> for RawPlan {
    fn from(plan: BlockPlan) -> Self {
        let orders = (plan.mode == PlanMode::Product).then_some(plan.orders);
        RawPlan {
            mode: plan.mode,
            p: plan.p,
            orders,
            boundaries: plan.boundaries,
        }
    }
}

fn check_boundaries(boundaries: &[usize]) -> Result<(), CoverError> {
    if boundaries.len() < 2 {
        return Err(CoverError::InvalidPlan(
            "at least one block (two boundaries) is required".into(),
        ));
    }
    if boundaries[0] != 0 {
        return Err(CoverError::InvalidPlan("boundaries must start at 0".into()));
    }
    if boundaries.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CoverError::InvalidPlan(
            "boundaries must be strictly increasing".into(),
        ));
    }
    Ok(())
}

impl BlockPlan {
    /// Validates a product-mode plan. `orders` must cover exactly
    /// `0..boundaries.last()`.
    pub fn product(orders: Vec<u64>, boundaries: Vec<usize>) -> Result<Self, CoverError> {
        check_boundaries(&boundaries)?;
        let total = *boundaries.last().unwrap();
        if orders.len() != total {
            return Err(CoverError::InvalidPlan(format!(
                "{} coordinate orders given for {total} planned coordinates",
                orders.len()
            )));
        }
        let mut block_orders = Vec::with_capacity(boundaries.len() - 1);
        for (n, w) in boundaries.windows(2).enumerate() {
            let group = FiniteAbelianGroup::new(orders[w[0]..w[1]].to_vec())?;
            if group.order() <= block_threshold(n) {
                return Err(CoverError::InvalidPlan(format!(
                    "block {n} has {} elements, needs more than {}",
                    group.order(),
                    block_threshold(n)
                )));
            }
            block_orders.push(group.order());
        }
        Ok(BlockPlan {
            mode: PlanMode::Product,
            p: None,
            orders,
            boundaries,
            block_orders,
        })
    }

    /// Validates a p-adic plan with cut sequence `k_0 = 0 < k_1 < …`.
    pub fn padic(p: u64, boundaries: Vec<usize>) -> Result<Self, CoverError> {
        check_boundaries(&boundaries)?;
        let mut block_orders = Vec::with_capacity(boundaries.len() - 1);
        for (n, w) in boundaries.windows(2).enumerate() {
            let block = BlockGroup::new(p, w[0], w[1] - w[0])?;
            if block.order() <= block_threshold(n) {
                return Err(CoverError::InvalidPlan(format!(
                    "block {n} has {} elements, needs more than {}",
                    block.order(),
                    block_threshold(n)
                )));
            }
            block_orders.push(block.order());
        }
        Ok(BlockPlan {
            mode: PlanMode::Padic,
            p: Some(p),
            orders: Vec::new(),
            boundaries,
            block_orders,
        })
    }

    pub fn mode(&self) -> PlanMode {
        self.mode
    }

    pub fn p(&self) -> Option<u64> {
        self.p
    }

    /// Coordinate orders (product mode only; empty for p-adic plans).
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    /// Number of blocks `D`.
    pub fn depth(&self) -> usize {
        self.block_orders.len()
    }

    /// `k_D`, the number of coordinates (or digits) the plan covers.
    pub fn coordinate_count(&self) -> usize {
        *self.boundaries.last().unwrap()
    }

    pub fn block_orders(&self) -> &[u64] {
        &self.block_orders
    }

    pub fn block_len(&self, n: usize) -> usize {
        self.boundaries[n + 1] - self.boundaries[n]
    }

    pub fn block(&self, n: usize) -> BlockDomain {
        let (start, end) = (self.boundaries[n], self.boundaries[n + 1]);
        match self.mode {
            PlanMode::Product => BlockDomain::Product(
                FiniteAbelianGroup::new(self.orders[start..end].to_vec())
                    .expect("validated at construction"),
            ),
            PlanMode::Padic => BlockDomain::Padic(
                BlockGroup::new(self.p.unwrap(), start, end - start)
                    .expect("validated at construction"),
            ),
        }
    }

    pub fn blocks(&self) -> Vec<BlockDomain> {
        (0..self.depth()).map(|n| self.block(n)).collect()
    }

    /// The whole truncated product `⊗_{k < k_D} G_k` (product mode).
    pub fn full_group(&self) -> Result<FiniteAbelianGroup, CoverError> {
        match self.mode {
            PlanMode::Product => Ok(FiniteAbelianGroup::new(self.orders.clone())?),
            PlanMode::Padic => Err(CoverError::PreconditionViolated(
                "p-adic plans have no product group".into(),
            )),
        }
    }

    /// `Z_p` truncated to `k_D` digits (p-adic mode).
    pub fn padic_context(&self) -> Result<PadicContext, CoverError> {
        match self.p {
            Some(p) => Ok(PadicContext::new(p, self.coordinate_count())?),
            None => Err(CoverError::PreconditionViolated(
                "product plans have no p-adic context".into(),
            )),
        }
    }

    /// A plan that keeps only the first `depth` blocks.
    pub fn truncated(&self, depth: usize) -> Result<Self, CoverError> {
        if depth == 0 || depth > self.depth() {
            return Err(CoverError::PreconditionViolated(format!(
                "cannot truncate a depth-{} plan to {depth} blocks",
                self.depth()
            )));
        }
        let boundaries = self.boundaries[..=depth].to_vec();
        match self.mode {
            PlanMode::Product => {
                let end = boundaries[depth];
                Self::product(self.orders[..end].to_vec(), boundaries)
            }
            PlanMode::Padic => Self::padic(self.p.unwrap(), boundaries),
        }
    }
}

/// The finite group a block of a plan carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockDomain {
    Product(FiniteAbelianGroup),
    Padic(BlockGroup),
}

impl FiniteGroup for BlockDomain {
    fn order(&self) -> u64 {
        match self {
            BlockDomain::Product(g) => g.order(),
            BlockDomain::Padic(b) => b.order(),
        }
    }

    fn add_index(&self, a: u64, b: u64) -> u64 {
        match self {
            BlockDomain::Product(g) => g.add_index(a, b),
            BlockDomain::Padic(bl) => bl.add_index(a, b),
        }
    }

    fn neg_index(&self, a: u64) -> u64 {
        match self {
            BlockDomain::Product(g) => g.neg_index(a),
            BlockDomain::Padic(b) => b.neg_index(a),
        }
    }
}

/// Greedy minimal consecutive blocks: block `n` is the shortest run of the
/// remaining coordinates whose orders multiply to more than `2(n+3)`.
///
/// `orders` may be infinite (e.g. a cycled pattern); only the coordinates
/// needed for `depth` blocks are consumed.
pub fn plan_blocks_product<I>(orders: I, depth: usize) -> Result<BlockPlan, CoverError>
where
    I: IntoIterator<Item = u64>,
{
    if depth == 0 {
        return Err(CoverError::PreconditionViolated(
            "depth must be at least 1".into(),
        ));
    }
    let mut orders = orders.into_iter();
    let mut used = Vec::new();
    let mut boundaries = vec![0];
    for n in 0..depth {
        let mut size: u64 = 1;
        while size <= block_threshold(n) {
            let m = orders.next().ok_or(CoverError::CoordinatesExhausted {
                formed: n,
                requested: depth,
            })?;
            if m < 2 {
                return Err(GroupError::InvalidOrder(m).into());
            }
            size = size.saturating_mul(m);
            used.push(m);
        }
        boundaries.push(used.len());
    }
    BlockPlan::product(used, boundaries)
}

/// Cut sequence with `k_0 = 0` and each `k_{n+1} - k_n` the least `m` with
/// `p^m > 2(n+3)`.
pub fn plan_blocks_padic(p: u64, depth: usize) -> Result<BlockPlan, CoverError> {
    if depth == 0 {
        return Err(CoverError::PreconditionViolated(
            "depth must be at least 1".into(),
        ));
    }
    // validates p before the loop below relies on p >= 2
    BlockGroup::new(p, 0, 1)?;
    let mut boundaries = vec![0];
    for n in 0..depth {
        let mut len = 0;
        let mut size: u64 = 1;
        while size <= block_threshold(n) {
            size = size.saturating_mul(p);
            len += 1;
        }
        boundaries.push(boundaries[n] + len);
    }
    BlockPlan::padic(p, boundaries)
}
