use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError};
use crate::json;

/// A finite abelian group `Z_{m_0} ⊕ … ⊕ Z_{m_{k-1}}`.
///
/// Elements are enumerated lexicographically with the last coordinate
/// running fastest, so the position of an element is its mixed-radix value.
/// The empty presentation is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup", into = "RawGroup")]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
    order: u64,
}

#[derive(Serialize, Deserialize)]
struct RawGroup {
    #[serde(with = "json::exact_vec")]
    orders: Vec<u64>,
}

impl TryFrom<RawGroup> for FiniteAbelianGroup {
    type Error = GroupError;

    fn try_from(raw: RawGroup) -> Result<Self, GroupError> {
        FiniteAbelianGroup::new(raw.orders)
    }
}

impl From<FiniteAbelianGroup> for RawGroup {
    fn from(g: FiniteAbelianGroup) -> Self {
        RawGroup { orders: g.orders }
    }
}

/// Residue vector of a [`FiniteAbelianGroup`] element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement {
    #[serde(with = "json::exact_vec")]
    residues: Vec<u64>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn into_residues(self) -> Vec<u64> {
        self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self, GroupError> {
        let mut order: u64 = 1;
        for &m in &orders {
            if m < 2 {
                return Err(GroupError::InvalidOrder(m));
            }
            order = order.checked_mul(m).ok_or(GroupError::OrderOverflow)?;
        }
        Ok(FiniteAbelianGroup { orders, order })
    }

    pub fn cyclic(m: u64) -> Result<Self, GroupError> {
        Self::new(vec![m])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.orders.len()],
        }
    }

    pub fn element(&self, residues: Vec<u64>) -> Result<GroupElement, GroupError> {
        self.check_len(residues.len())?;
        for (coordinate, (&residue, &modulus)) in residues.iter().zip(&self.orders).enumerate() {
            if residue >= modulus {
                return Err(GroupError::ResidueOutOfRange {
                    coordinate,
                    residue,
                    modulus,
                });
            }
        }
        Ok(GroupElement { residues })
    }

    /// Reduces arbitrary integers coordinatewise into an element.
    pub fn element_reduced(&self, values: &[u64]) -> Result<GroupElement, GroupError> {
        self.check_len(values.len())?;
        Ok(GroupElement {
            residues: values.iter().zip(&self.orders).map(|(v, m)| v % m).collect(),
        })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        self.check(b)?;
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.orders)
            .map(|((&x, &y), &m)| add_mod(x, y, m))
            .collect();
        Ok(GroupElement { residues })
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        let residues = a
            .residues
            .iter()
            .zip(&self.orders)
            .map(|(&x, &m)| if x == 0 { 0 } else { m - x })
            .collect();
        Ok(GroupElement { residues })
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.add(a, &self.neg(b)?)
    }

    /// `k · a`, by coordinatewise modular multiplication.
    pub fn scalar_mul(&self, k: u64, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        let residues = a
            .residues
            .iter()
            .zip(&self.orders)
            .map(|(&x, &m)| ((x as u128 * (k % m) as u128) % m as u128) as u64)
            .collect();
        Ok(GroupElement { residues })
    }

    /// Position of `a` in the canonical enumeration.
    pub fn index_of(&self, a: &GroupElement) -> Result<u64, GroupError> {
        self.check(a)?;
        Ok(a
            .residues
            .iter()
            .zip(&self.orders)
            .fold(0u64, |acc, (&r, &m)| acc * m + r))
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn element_at(&self, index: u64) -> Result<GroupElement, GroupError> {
        if index >= self.order {
            return Err(GroupError::IndexOutOfRange {
                index,
                order: self.order,
            });
        }
        let mut residues = vec![0; self.orders.len()];
        let mut rest = index;
        for (slot, &m) in residues.iter_mut().zip(&self.orders).rev() {
            *slot = rest % m;
            rest /= m;
        }
        Ok(GroupElement { residues })
    }

    /// All elements in canonical order, refusing groups larger than `cap`.
    pub fn elements(&self, cap: u64) -> Result<Elements<'_>, GroupError> {
        if self.order > cap {
            return Err(GroupError::CapExceeded {
                size: self.order,
                cap,
            });
        }
        Ok(Elements {
            group: self,
            next: Some(vec![0; self.orders.len()]),
            remaining: self.order,
        })
    }

    fn check_len(&self, len: usize) -> Result<(), GroupError> {
        if len != self.orders.len() {
            return Err(GroupError::DimensionMismatch {
                expected: self.orders.len(),
                found: len,
            });
        }
        Ok(())
    }

    fn check(&self, a: &GroupElement) -> Result<(), GroupError> {
        self.check_len(a.residues.len())?;
        for (coordinate, (&residue, &modulus)) in a.residues.iter().zip(&self.orders).enumerate() {
            if residue >= modulus {
                return Err(GroupError::ResidueOutOfRange {
                    coordinate,
                    residue,
                    modulus,
                });
            }
        }
        Ok(())
    }
}

#[inline]
fn add_mod(x: u64, y: u64, m: u64) -> u64 {
    let (s, overflow) = x.overflowing_add(y);
    if overflow || s >= m {
        s.wrapping_sub(m)
    } else {
        s
    }
}

impl FiniteGroup for FiniteAbelianGroup {
    fn order(&self) -> u64 {
        self.order
    }

    fn add_index(&self, a: u64, b: u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let mut place = 1u64;
        let mut out = 0u64;
        for &m in self.orders.iter().rev() {
            out += add_mod(a % m, b % m, m) * place;
            a /= m;
            b /= m;
            place = place.wrapping_mul(m);
        }
        out
    }

    fn neg_index(&self, a: u64) -> u64 {
        let mut a = a;
        let mut place = 1u64;
        let mut out = 0u64;
        for &m in self.orders.iter().rev() {
            let r = a % m;
            out += if r == 0 { 0 } else { m - r } * place;
            a /= m;
            place = place.wrapping_mul(m);
        }
        out
    }
}

/// Iterator over a group's elements in canonical order.
pub struct Elements<'a> {
    group: &'a FiniteAbelianGroup,
    next: Option<Vec<u64>>,
    remaining: u64,
}

impl Iterator for Elements<'_> {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for (r, &m) in succ.iter_mut().zip(&self.group.orders).rev() {
            *r += 1;
            if *r < m {
                carried = false;
                break;
            }
            *r = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        self.remaining -= 1;
        Some(GroupElement { residues: current })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

impl ExactSizeIterator for Elements<'_> {}
