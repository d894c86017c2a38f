use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{product_size, BlockPlan, CoverError};
use crate::json;

/// Width function of a slalom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum WidthFn {
    /// `f(n) = n + 2`, used for products of finite groups.
    #[serde(rename = "n+2")]
    Linear,
    /// `f(n) = ⌊(n + 2)/2⌋`, used for p-adic integers.
    #[serde(rename = "(n+2)/2")]
    Half,
    /// Explicit values `f(0), f(1), …`, each at least 1.
    #[serde(rename = "table")]
    Table(#[serde(with = "json::exact_vec")] Vec<u64>),
}

impl WidthFn {
    pub fn at(&self, n: usize) -> Option<u64> {
        match self {
            WidthFn::Linear => Some(n as u64 + 2),
            WidthFn::Half => Some((n as u64 + 2) / 2),
            WidthFn::Table(values) => values.get(n).copied(),
        }
    }
}

/// `S = ×_n S_n` with `1 ≤ |S_n| ≤ f(n)`; the sets hold block indices and
/// are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSlalom", into = "RawSlalom")]
pub struct Slalom {
    width: WidthFn,
    sets: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct RawSlalom {
    width: WidthFn,
    #[serde(with = "json::exact_vec_vec")]
    sets: Vec<Vec<u64>>,
}

impl TryFrom<RawSlalom> for Slalom {
    type Error = CoverError;

    fn try_from(raw: RawSlalom) -> Result<Self, CoverError> {
        Slalom::new(raw.width, raw.sets)
    }
}

impl From<Slalom> for RawSlalom {
    fn from(s: Slalom) -> Self {
        RawSlalom {
            width: s.width,
            sets: s.sets,
        }
    }
}

impl Slalom {
    /// Sorts and deduplicates each set, then checks it is nonempty and no
    /// wider than `f(n)`.
    pub fn new(width: WidthFn, mut sets: Vec<Vec<u64>>) -> Result<Self, CoverError> {
        if let WidthFn::Table(values) = &width {
            if values.contains(&0) {
                return Err(CoverError::InvalidSlalom(
                    "width table entries must be at least 1".into(),
                ));
            }
        }
        for (n, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(CoverError::InvalidSlalom(format!("S_{n} is empty")));
            }
            let f = width.at(n).ok_or_else(|| {
                CoverError::InvalidSlalom(format!("width table has no entry for n = {n}"))
            })?;
            if set.len() as u64 > f {
                return Err(CoverError::InvalidSlalom(format!(
                    "|S_{n}| = {} exceeds f({n}) = {f}",
                    set.len()
                )));
            }
        }
        Ok(Slalom { width, sets })
    }

    pub fn width(&self) -> &WidthFn {
        &self.width
    }

    pub fn sets(&self) -> &[Vec<u64>] {
        &self.sets
    }

    pub fn depth(&self) -> usize {
        self.sets.len()
    }

    /// `∏ |S_n|`, saturating.
    pub fn point_count(&self) -> u128 {
        product_size(self.sets.iter().map(|s| s.len() as u64))
    }

    pub fn contains(&self, point: &[u64]) -> bool {
        point.len() == self.sets.len()
            && point
                .iter()
                .zip(&self.sets)
                .all(|(x, set)| set.binary_search(x).is_ok())
    }

    /// Checks that the slalom has one set per block of `plan`, each inside
    /// its block.
    pub fn check_domains(&self, plan: &BlockPlan) -> Result<(), CoverError> {
        if self.sets.len() != plan.depth() {
            return Err(CoverError::InvalidSlalom(format!(
                "{} sets for a plan of depth {}",
                self.sets.len(),
                plan.depth()
            )));
        }
        for (n, (set, &order)) in self.sets.iter().zip(plan.block_orders()).enumerate() {
            if let Some(&bad) = set.last().filter(|&&x| x >= order) {
                return Err(CoverError::InvalidSlalom(format!(
                    "S_{n} contains {bad}, block order is {order}"
                )));
            }
        }
        Ok(())
    }
}

/// A seeded random slalom over the blocks of `plan` with
/// `|S_n| = min(f(n), |G_n|)`, each set sampled without replacement.
pub fn random_slalom(plan: &BlockPlan, width: WidthFn, seed: u64) -> Result<Slalom, CoverError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = Vec::with_capacity(plan.depth());
    for (n, &order) in plan.block_orders().iter().enumerate() {
        let f = width.at(n).ok_or_else(|| {
            CoverError::InvalidSlalom(format!("width table has no entry for n = {n}"))
        })?;
        let size = f.min(order);
        let order = usize::try_from(order).map_err(|_| {
            CoverError::PreconditionViolated(format!("block {n} is too large to sample"))
        })?;
        let mut set: Vec<u64> = rand::seq::index::sample(&mut rng, order, size as usize)
            .into_iter()
            .map(|i| i as u64)
            .collect();
        set.sort_unstable();
        sets.push(set);
    }
    Slalom::new(width, sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{plan_blocks_padic, plan_blocks_product};

    #[test]
    fn widths() {
        assert_eq!(WidthFn::Linear.at(0), Some(2));
        assert_eq!(WidthFn::Half.at(0), Some(1));
        assert_eq!(WidthFn::Half.at(3), Some(2));
        assert_eq!(WidthFn::Table(vec![1, 4]).at(2), None);
    }

    #[test]
    fn deterministic_given_seed() {
        let plan = plan_blocks_padic(3, 5).unwrap();
        let a = random_slalom(&plan, WidthFn::Half, 99).unwrap();
        let b = random_slalom(&plan, WidthFn::Half, 99).unwrap();
        assert_eq!(a, b);
        let c = random_slalom(&plan, WidthFn::Half, 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn sizes_and_domains() {
        let plan = plan_blocks_product(std::iter::repeat(2), 6).unwrap();
        for seed in 0..20 {
            let s = random_slalom(&plan, WidthFn::Linear, seed).unwrap();
            assert_eq!(s.sets()[0].len(), 2);
            for (n, set) in s.sets().iter().enumerate() {
                assert_eq!(set.len() as u64, (n as u64 + 2).min(plan.block_orders()[n]));
                assert!(set.iter().all(|&x| x < plan.block_orders()[n]));
            }
            s.check_domains(&plan).unwrap();
        }
        // width larger than the block: the whole block
        let plan = plan_blocks_padic(7, 1).unwrap();
        let s = random_slalom(&plan, WidthFn::Table(vec![100]), 0).unwrap();
        assert_eq!(s.sets()[0], (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn invalid_slaloms() {
        assert!(Slalom::new(WidthFn::Linear, vec![vec![]]).is_err());
        assert!(Slalom::new(WidthFn::Half, vec![vec![0, 1]]).is_err());
        assert!(Slalom::new(WidthFn::Table(vec![0]), vec![vec![0]]).is_err());
        let s = Slalom::new(WidthFn::Linear, vec![vec![3, 1, 3]]).unwrap();
        assert_eq!(s.sets(), &[vec![1, 3]]);
        let plan = plan_blocks_padic(2, 1).unwrap();
        assert!(Slalom::new(WidthFn::Linear, vec![vec![8]])
            .unwrap()
            .check_domains(&plan)
            .is_err());
    }

    #[test]
    fn json_shape() {
        let s = Slalom::new(WidthFn::Half, vec![vec![3], vec![0]]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"width":"(n+2)/2","sets":[[3],[0]]}"#);
        let t = Slalom::new(WidthFn::Table(vec![1]), vec![vec![2]]).unwrap();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"width":{"table":[1]},"sets":[[2]]}"#
        );
        assert!(serde_json::from_str::<Slalom>(r#"{"width":"n+2","sets":[[]]}"#).is_err());
    }
}
