use std::fmt;

use serde::{Deserialize, Serialize};

use super::StructureError;
use crate::groups::is_prime;

/// A locally compact abelian group in the descriptor grammar.
///
/// JSON form: `{"type": "Cyclic", "m": 12}`, `{"type": "FiniteSum",
/// "parts": [...]}` and so on. `SumOmega` and `ProdOmega` denote the
/// countable direct sum (discrete) and product (compact) of the listed
/// finite groups repeated cyclically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", try_from = "RawDescriptor")]
pub enum GroupDescriptor {
    Int,
    Reals,
    Torus,
    Cyclic { m: u64 },
    Quasicyclic { p: u64 },
    Padic { p: u64 },
    FiniteSum { parts: Vec<GroupDescriptor> },
    SumOmega { parts: Vec<GroupDescriptor> },
    ProdOmega { parts: Vec<GroupDescriptor> },
    RPower { n: u32 },
}

#[derive(Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
enum RawDescriptor {
    Int,
    Reals,
    Torus,
    Cyclic { m: u64 },
    Quasicyclic { p: u64 },
    Padic { p: u64 },
    FiniteSum { parts: Vec<GroupDescriptor> },
    SumOmega { parts: Vec<GroupDescriptor> },
    ProdOmega { parts: Vec<GroupDescriptor> },
    RPower { n: u32 },
}

impl TryFrom<RawDescriptor> for GroupDescriptor {
    type Error = StructureError;

    fn try_from(raw: RawDescriptor) -> Result<Self, StructureError> {
        use GroupDescriptor as D;
        let d = match raw {
            RawDescriptor::Int => D::Int,
            RawDescriptor::Reals => D::Reals,
            RawDescriptor::Torus => D::Torus,
            RawDescriptor::Cyclic { m } => D::Cyclic { m },
            RawDescriptor::Quasicyclic { p } => D::Quasicyclic { p },
            RawDescriptor::Padic { p } => D::Padic { p },
            RawDescriptor::FiniteSum { parts } => D::FiniteSum { parts },
            RawDescriptor::SumOmega { parts } => D::SumOmega { parts },
            RawDescriptor::ProdOmega { parts } => D::ProdOmega { parts },
            RawDescriptor::RPower { n } => D::RPower { n },
        };
        d.validate_node()?;
        Ok(d)
    }
}

impl GroupDescriptor {
    /// Checks the invariants of this node and all of its children.
    pub fn validate(&self) -> Result<(), StructureError> {
        self.validate_node()?;
        self.children().iter().try_for_each(GroupDescriptor::validate)
    }

    fn validate_node(&self) -> Result<(), StructureError> {
        use GroupDescriptor::*;
        let bad = |msg: String| Err(StructureError::InvalidDescriptor(msg));
        match self {
            Cyclic { m } if *m < 2 => bad(format!("cyclic order {m} is below 2")),
            Quasicyclic { p } | Padic { p } if !is_prime(*p) => bad(format!("{p} is not prime")),
            RPower { n } if *n == 0 => bad("RPower needs n ≥ 1".into()),
            FiniteSum { parts } if parts.is_empty() => bad("empty FiniteSum".into()),
            SumOmega { parts } | ProdOmega { parts } => {
                if parts.is_empty() {
                    bad("empty countable sum or product".into())
                } else if let Some(p) = parts.iter().find(|p| !p.is_finite()) {
                    bad(format!("countable sums and products take finite groups, got {p}"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    pub fn children(&self) -> &[GroupDescriptor] {
        use GroupDescriptor::*;
        match self {
            FiniteSum { parts } | SumOmega { parts } | ProdOmega { parts } => parts,
            _ => &[],
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(GroupDescriptor::size).sum::<usize>()
    }

    pub fn is_finite(&self) -> bool {
        match self {
            GroupDescriptor::Cyclic { .. } => true,
            GroupDescriptor::FiniteSum { parts } => parts.iter().all(GroupDescriptor::is_finite),
            _ => false,
        }
    }

    pub fn is_discrete(&self) -> bool {
        use GroupDescriptor::*;
        match self {
            Int | Cyclic { .. } | Quasicyclic { .. } | SumOmega { .. } => true,
            Reals | Torus | Padic { .. } | ProdOmega { .. } | RPower { .. } => false,
            FiniteSum { parts } => parts.iter().all(GroupDescriptor::is_discrete),
        }
    }

    pub fn is_compact(&self) -> bool {
        use GroupDescriptor::*;
        match self {
            Torus | Cyclic { .. } | Padic { .. } | ProdOmega { .. } => true,
            Int | Reals | Quasicyclic { .. } | SumOmega { .. } | RPower { .. } => false,
            FiniteSum { parts } => parts.iter().all(GroupDescriptor::is_compact),
        }
    }

    /// Order of a finite group, `None` if infinite or past `u64`.
    pub fn finite_order(&self) -> Option<u64> {
        match self {
            GroupDescriptor::Cyclic { m } => Some(*m),
            GroupDescriptor::FiniteSum { parts } => parts
                .iter()
                .try_fold(1u64, |acc, p| acc.checked_mul(p.finite_order()?)),
            _ => None,
        }
    }

    /// Direct summands with nested finite sums flattened, in order.
    pub fn summands(&self) -> Vec<&GroupDescriptor> {
        match self {
            GroupDescriptor::FiniteSum { parts } => {
                parts.iter().flat_map(GroupDescriptor::summands).collect()
            }
            other => vec![other],
        }
    }

    /// One summand as itself, several as a `FiniteSum`.
    pub fn sum_of(mut parts: Vec<GroupDescriptor>) -> GroupDescriptor {
        if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            GroupDescriptor::FiniteSum { parts }
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupDescriptor::*;
        let list = |f: &mut fmt::Formatter<'_>, parts: &[GroupDescriptor], sep: &str| {
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{p}")?;
            }
            Ok(())
        };
        match self {
            Int => f.write_str("Z"),
            Reals => f.write_str("R"),
            Torus => f.write_str("T"),
            Cyclic { m } => write!(f, "Z/{m}"),
            Quasicyclic { p } => write!(f, "C({p}^inf)"),
            Padic { p } => write!(f, "Z_{p}"),
            RPower { n } => write!(f, "R^{n}"),
            FiniteSum { parts } => {
                f.write_str("(")?;
                list(f, parts, " + ")?;
                f.write_str(")")
            }
            SumOmega { parts } => {
                f.write_str("sum_omega(")?;
                list(f, parts, ", ")?;
                f.write_str(")")
            }
            ProdOmega { parts } => {
                f.write_str("prod_omega(")?;
                list(f, parts, ", ")?;
                f.write_str(")")
            }
        }
    }
}
