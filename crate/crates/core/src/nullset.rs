//! The Erdős–Kakutani set
//! `C_EK = { Σ_{n≥2} d_n/n! : d_n ∈ {0, …, n−2} }` at finite depth.
//!
//! Digits are indexed from `n = 2` throughout. A rational with a
//! terminating factorial expansion has a second one (decrement the last
//! nonzero digit, then `d_n = n − 1` forever), so membership checks both.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Classify, ErrorClass};
use crate::json;

pub type ExactRational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NullsetError {
    #[error("{0} is outside [0, 1)")]
    OutOfRange(ExactRational),
    #[error("depth must be at least 1, got {0}")]
    DepthTooSmall(usize),
}

impl Classify for NullsetError {
    fn class(&self) -> ErrorClass {
        ErrorClass::Precondition
    }
}

/// Factorial-base digits `d_2, …, d_N` with `0 ≤ d_n ≤ n − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FactorialDigits {
    digits: Vec<u32>,
}

impl FactorialDigits {
    /// `digits[0]` is `d_2`.
    pub fn new(digits: Vec<u32>) -> Option<Self> {
        digits
            .iter()
            .enumerate()
            .all(|(i, &d)| (d as usize) < i + 2)
            .then_some(FactorialDigits { digits })
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// `N`, the largest digit index.
    pub fn depth(&self) -> usize {
        self.digits.len() + 1
    }

    /// `d_n`, for `2 ≤ n ≤ N`.
    pub fn digit(&self, n: usize) -> Option<u32> {
        n.checked_sub(2).and_then(|i| self.digits.get(i)).copied()
    }

    /// `Σ_{n=2}^{N} d_n / n!`.
    pub fn value(&self) -> ExactRational {
        let mut factorial = BigInt::one();
        let mut sum = ExactRational::zero();
        for (i, &d) in self.digits.iter().enumerate() {
            factorial *= i + 2;
            sum += ExactRational::new(BigInt::from(d), factorial.clone());
        }
        sum
    }

    /// Least `n` with `d_n = n − 1`, i.e. outside `{0, …, n − 2}`.
    pub fn first_violation(&self) -> Option<usize> {
        self.digits
            .iter()
            .enumerate()
            .find(|(i, &d)| d as usize == i + 1)
            .map(|(i, _)| i + 2)
    }
}

/// Result of [`factorial_expand`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorialExpansion {
    pub greedy: FactorialDigits,
    /// True when the greedy remainder is zero after `d_N`.
    pub exact: bool,
    /// Index of the last nonzero greedy digit, if any.
    pub last_nonzero: Option<usize>,
    /// The second expansion truncated at `N`, when the greedy one
    /// terminates and `q ≠ 0`. Every digit after `N` is `n − 1`.
    pub alternate: Option<FactorialDigits>,
}

fn check_range(q: &ExactRational) -> Result<(), NullsetError> {
    if q < &ExactRational::zero() || q >= &ExactRational::one() {
        return Err(NullsetError::OutOfRange(q.clone()));
    }
    Ok(())
}

fn check_depth(depth: usize) -> Result<(), NullsetError> {
    if depth == 0 {
        return Err(NullsetError::DepthTooSmall(depth));
    }
    Ok(())
}

/// Greedy factorial-base expansion of `q ∈ [0, 1)` to depth `N`:
/// `d_n = ⌊n · r_{n−1}⌋`, `r_n = n · r_{n−1} − d_n`, `r_1 = q`.
pub fn factorial_expand(q: &ExactRational, depth: usize) -> Result<FactorialExpansion, NullsetError> {
    check_range(q)?;
    check_depth(depth)?;
    let mut rest = q.clone();
    let mut digits = Vec::with_capacity(depth - 1);
    for n in 2..=depth {
        rest *= ExactRational::from_integer(BigInt::from(n));
        let d = rest.to_integer();
        rest -= ExactRational::from_integer(d.clone());
        digits.push(d.to_u32().expect("digit below n"));
    }
    let exact = rest.is_zero();
    let last_nonzero = digits.iter().rposition(|&d| d != 0).map(|i| i + 2);
    let alternate = match (exact, last_nonzero) {
        (true, Some(t)) => {
            let mut alt = digits.clone();
            alt[t - 2] -= 1;
            for (i, d) in alt.iter_mut().enumerate().skip(t - 1) {
                *d = (i + 1) as u32;
            }
            Some(FactorialDigits { digits: alt })
        }
        _ => None,
    };
    Ok(FactorialExpansion {
        greedy: FactorialDigits { digits },
        exact,
        last_nonzero,
        alternate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    In,
    Out,
    /// Digits up to `N` are admissible but the tail is not yet known.
    Undetermined,
}

/// Tri-state membership of `q` in `C_EK`, looking at digits up to `N`.
///
/// `In` needs an expansion that is admissible and terminates by `N`; `Out`
/// needs every expansion to break the digit bound at some `n ≤ N`. Larger
/// `N` only ever turns `Undetermined` into a definite verdict.
pub fn ek_membership(q: &ExactRational, depth: usize) -> Result<Membership, NullsetError> {
    let expansion = factorial_expand(q, depth)?;
    let greedy_bad = expansion.greedy.first_violation();
    if !expansion.exact {
        // The second expansion, if any, only departs from the greedy one
        // after the greedy one terminates, which is beyond N.
        return Ok(match greedy_bad {
            Some(_) => Membership::Out,
            None => Membership::Undetermined,
        });
    }
    if greedy_bad.is_none() {
        return Ok(Membership::In);
    }
    // Its tail is n − 1 forever, so it can only certify exclusion.
    let alternate_bad = expansion
        .alternate
        .as_ref()
        .and_then(FactorialDigits::first_violation);
    Ok(match alternate_bad {
        Some(_) => Membership::Out,
        None => Membership::Undetermined,
    })
}

/// Running products `∏_{n=2}^{N} (n−1)/n` for `N = 1, 2, …`: the total
/// length of the level-`N` cylinders of `C_EK`.
pub fn ek_outer_measures() -> impl Iterator<Item = ExactRational> {
    (1u64..).scan(ExactRational::one(), |acc, n| {
        if n > 1 {
            *acc *= ExactRational::new(BigInt::from(n - 1), BigInt::from(n));
        }
        Some(acc.clone())
    })
}

pub fn ek_outer_measure(depth: usize) -> Result<ExactRational, NullsetError> {
    check_depth(depth)?;
    Ok(ek_outer_measures().nth(depth - 1).unwrap())
}

/// `Σ_{n=2}^{N} (n−2)/n!`, the largest value with admissible digits up to
/// `N`. Increases to `3 − e`.
pub fn ek_sup(depth: usize) -> Result<ExactRational, NullsetError> {
    check_depth(depth)?;
    let mut factorial = BigInt::one();
    let mut sum = ExactRational::zero();
    for n in 2..=depth {
        factorial *= n;
        sum += ExactRational::new(BigInt::from(n - 2), factorial.clone());
    }
    Ok(sum)
}

/// JSON carrier for a single rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalValue(#[serde(with = "json::rational")] pub ExactRational);
