use std::ops::Range;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError};

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

fn check_prime(p: u64) -> Result<(), GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if p > u32::MAX as u64 {
        return Err(GroupError::PrimeTooLarge(p));
    }
    Ok(())
}

/// Adds two little-endian base-`p` digit strings of equal length with an
/// incoming carry. Returns the digits and the carry out of the top position.
fn add_with_carry(p: u64, x: &[u32], y: &[u32], carry_in: u32) -> (Vec<u32>, u32) {
    debug_assert_eq!(x.len(), y.len());
    let mut carry = carry_in as u64;
    let digits = x
        .iter()
        .zip(y)
        .map(|(&a, &b)| {
            let s = a as u64 + b as u64 + carry;
            if s >= p {
                carry = 1;
                (s - p) as u32
            } else {
                carry = 0;
                s as u32
            }
        })
        .collect();
    (digits, carry as u32)
}

/// `-x` on a truncated digit string: complement every digit, then add one.
fn negate_digits(p: u64, x: &[u32]) -> Vec<u32> {
    let complement: Vec<u32> = x.iter().map(|&d| (p - 1) as u32 - d).collect();
    let mut one = vec![0; x.len()];
    if let Some(first) = one.first_mut() {
        *first = 1;
    }
    add_with_carry(p, &complement, &one, 0).0
}

fn check_digits(p: u64, len: usize, digits: &[u32]) -> Result<(), GroupError> {
    if digits.len() != len {
        return Err(GroupError::DimensionMismatch {
            expected: len,
            found: digits.len(),
        });
    }
    if let Some((position, &digit)) = digits.iter().enumerate().find(|(_, &d)| d as u64 >= p) {
        return Err(GroupError::DigitOutOfRange { position, digit, p });
    }
    Ok(())
}

/// The p-adic integers truncated to `len` digits, i.e. the integers modulo
/// `p^len` written least significant digit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawContext", into = "RawContext")]
pub struct PadicContext {
    p: u64,
    len: usize,
}

#[derive(Serialize, Deserialize)]
struct RawContext {
    p: u64,
    len: usize,
}

impl TryFrom<RawContext> for PadicContext {
    type Error = GroupError;

    fn try_from(raw: RawContext) -> Result<Self, GroupError> {
        PadicContext::new(raw.p, raw.len)
    }
}

impl From<PadicContext> for RawContext {
    fn from(c: PadicContext) -> Self {
        RawContext { p: c.p, len: c.len }
    }
}

/// Digits of a truncated p-adic integer, least significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PadicNumber {
    digits: Vec<u32>,
}

impl PadicNumber {
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<u32> {
        self.digits
    }
}

impl PadicContext {
    pub fn new(p: u64, len: usize) -> Result<Self, GroupError> {
        check_prime(p)?;
        if len == 0 {
            return Err(GroupError::ZeroLength);
        }
        Ok(PadicContext { p, len })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn zero(&self) -> PadicNumber {
        PadicNumber {
            digits: vec![0; self.len],
        }
    }

    pub fn number(&self, digits: Vec<u32>) -> Result<PadicNumber, GroupError> {
        check_digits(self.p, self.len, &digits)?;
        Ok(PadicNumber { digits })
    }

    /// `p^len` as an exact integer.
    pub fn modulus(&self) -> BigUint {
        BigUint::from(self.p).pow(self.len as u32)
    }

    /// `Σ digits_k · p^k`.
    pub fn value(&self, x: &PadicNumber) -> BigUint {
        let p = BigUint::from(self.p);
        x.digits
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, &d| acc * &p + BigUint::from(d))
    }

    /// The truncation of a natural number, i.e. its residue mod `p^len`.
    pub fn from_value(&self, value: &BigUint) -> PadicNumber {
        let p = BigUint::from(self.p);
        let mut rest = value.clone();
        let digits = (0..self.len)
            .map(|_| {
                let d = (&rest % &p).to_u32().expect("digit below p");
                rest /= &p;
                d
            })
            .collect();
        PadicNumber { digits }
    }

    pub fn from_u64(&self, value: u64) -> PadicNumber {
        self.from_value(&BigUint::from(value))
    }

    /// Carry-propagating addition; the carry out of the top digit is dropped.
    pub fn add(&self, x: &PadicNumber, y: &PadicNumber) -> Result<PadicNumber, GroupError> {
        check_digits(self.p, self.len, &x.digits)?;
        check_digits(self.p, self.len, &y.digits)?;
        Ok(PadicNumber {
            digits: add_with_carry(self.p, &x.digits, &y.digits, 0).0,
        })
    }

    pub fn neg(&self, x: &PadicNumber) -> Result<PadicNumber, GroupError> {
        check_digits(self.p, self.len, &x.digits)?;
        Ok(PadicNumber {
            digits: negate_digits(self.p, &x.digits),
        })
    }
}

/// The digits on positions `[start, start + len)` of a p-adic integer, with
/// the addition that forgets the carry out of the top position of the block.
///
/// Block elements are enumerated by their value `Σ d_j p^j`, where `d_0` is
/// the digit at position `start`. Under that map the block group is the
/// integers modulo `p^len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockGroup {
    p: u64,
    start: usize,
    len: usize,
    order: u64,
}

impl BlockGroup {
    pub fn new(p: u64, start: usize, len: usize) -> Result<Self, GroupError> {
        check_prime(p)?;
        if len == 0 {
            return Err(GroupError::ZeroLength);
        }
        let order = u32::try_from(len)
            .ok()
            .and_then(|e| p.checked_pow(e))
            .ok_or(GroupError::BlockTooLarge { p, len })?;
        Ok(BlockGroup {
            p,
            start,
            len,
            order,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// The digit positions this block occupies.
    pub fn interval(&self) -> Range<usize> {
        self.start..self.start + self.len
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.len]
    }

    /// The element with a single 1 at the lowest position of the block.
    pub fn one(&self) -> Vec<u32> {
        let mut digits = self.zero();
        digits[0] = 1;
        digits
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Result<Vec<u32>, GroupError> {
        check_digits(self.p, self.len, x)?;
        check_digits(self.p, self.len, y)?;
        Ok(add_with_carry(self.p, x, y, 0).0)
    }

    pub fn neg(&self, x: &[u32]) -> Result<Vec<u32>, GroupError> {
        check_digits(self.p, self.len, x)?;
        Ok(negate_digits(self.p, x))
    }

    pub fn value(&self, digits: &[u32]) -> Result<u64, GroupError> {
        check_digits(self.p, self.len, digits)?;
        Ok(digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.p + d as u64))
    }

    pub fn digits(&self, value: u64) -> Result<Vec<u32>, GroupError> {
        if value >= self.order {
            return Err(GroupError::IndexOutOfRange {
                index: value,
                order: self.order,
            });
        }
        let mut rest = value;
        Ok((0..self.len)
            .map(|_| {
                let d = (rest % self.p) as u32;
                rest /= self.p;
                d
            })
            .collect())
    }

    /// Copies this block's digits out of a full digit string.
    pub fn restrict(&self, x: &PadicNumber) -> Result<Vec<u32>, GroupError> {
        let digits = x.digits();
        if self.start + self.len > digits.len() {
            return Err(GroupError::DimensionMismatch {
                expected: self.start + self.len,
                found: digits.len(),
            });
        }
        Ok(digits[self.interval()].to_vec())
    }
}

impl FiniteGroup for BlockGroup {
    fn order(&self) -> u64 {
        self.order
    }

    /// Digit-by-digit truncated-carry addition on values.
    fn add_index(&self, a: u64, b: u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let mut carry = 0;
        let mut place = 1u64;
        let mut out = 0u64;
        for _ in 0..self.len {
            let mut s = a % self.p + b % self.p + carry;
            carry = 0;
            if s >= self.p {
                s -= self.p;
                carry = 1;
            }
            out += s * place;
            a /= self.p;
            b /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    fn neg_index(&self, a: u64) -> u64 {
        // complement of every digit, plus one
        let mut a = a;
        let mut carry = 1;
        let mut place = 1u64;
        let mut out = 0u64;
        for _ in 0..self.len {
            let mut s = self.p - 1 - a % self.p + carry;
            carry = 0;
            if s >= self.p {
                s -= self.p;
                carry = 1;
            }
            out += s * place;
            a /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }
}
