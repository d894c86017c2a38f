use serde::{Deserialize, Serialize};

use super::{GroupDescriptor, StructureError};

/// Which of the three subgroup shapes an infinite discrete group contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum TrichotomyCase {
    /// A copy of the integers.
    InfiniteOrder,
    /// A countable direct sum of nontrivial finite groups.
    DirectSum,
    /// A quasicyclic group.
    Quasicyclic,
}

impl TrichotomyCase {
    pub fn number(self) -> u8 {
        match self {
            TrichotomyCase::InfiniteOrder => 1,
            TrichotomyCase::DirectSum => 2,
            TrichotomyCase::Quasicyclic => 3,
        }
    }
}

impl From<TrichotomyCase> for u8 {
    fn from(c: TrichotomyCase) -> u8 {
        c.number()
    }
}

impl TryFrom<u8> for TrichotomyCase {
    type Error = String;

    fn try_from(v: u8) -> Result<Self, String> {
        match v {
            1 => Ok(TrichotomyCase::InfiniteOrder),
            2 => Ok(TrichotomyCase::DirectSum),
            3 => Ok(TrichotomyCase::Quasicyclic),
            _ => Err(format!("trichotomy case must be 1, 2 or 3, got {v}")),
        }
    }
}

/// The case together with the subgroup that witnesses it: `Int`, a
/// `SumOmega`, or `Quasicyclic(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrichotomyVerdict {
    pub case: TrichotomyCase,
    pub witness: GroupDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
}

impl TrichotomyVerdict {
    /// Whether the witness has the shape its case demands.
    pub fn is_consistent(&self) -> bool {
        match (self.case, &self.witness) {
            (TrichotomyCase::InfiniteOrder, GroupDescriptor::Int) => self.prime.is_none(),
            (TrichotomyCase::DirectSum, GroupDescriptor::SumOmega { .. }) => self.prime.is_none(),
            (TrichotomyCase::Quasicyclic, GroupDescriptor::Quasicyclic { p }) => {
                self.prime == Some(*p)
            }
            _ => false,
        }
    }
}

/// Finds a subgroup of an infinite discrete group isomorphic to the
/// integers, a countable sum of finite groups, or a quasicyclic group,
/// trying the cases in that order. Among quasicyclic summands the least
/// prime is reported.
pub fn classify_subgroup(d: &GroupDescriptor) -> Result<TrichotomyVerdict, StructureError> {
    if d.is_finite() {
        return Err(StructureError::NotInfinite(d.to_string()));
    }
    if !d.is_discrete() {
        return Err(StructureError::NotDiscrete(d.to_string()));
    }
    let summands = d.summands();
    if summands.iter().any(|s| matches!(s, GroupDescriptor::Int)) {
        return Ok(TrichotomyVerdict {
            case: TrichotomyCase::InfiniteOrder,
            witness: GroupDescriptor::Int,
            prime: None,
        });
    }
    if let Some(s) = summands
        .iter()
        .find(|s| matches!(s, GroupDescriptor::SumOmega { .. }))
    {
        return Ok(TrichotomyVerdict {
            case: TrichotomyCase::DirectSum,
            witness: (*s).clone(),
            prime: None,
        });
    }
    let least_prime = summands
        .iter()
        .filter_map(|s| match s {
            GroupDescriptor::Quasicyclic { p } => Some(*p),
            _ => None,
        })
        .min();
    match least_prime {
        Some(p) => Ok(TrichotomyVerdict {
            case: TrichotomyCase::Quasicyclic,
            witness: GroupDescriptor::Quasicyclic { p },
            prime: Some(p),
        }),
        None => Err(StructureError::Unclassifiable(d.to_string())),
    }
}
