use num_bigint::BigInt;
use num_traits::{One, Zero};
use nullcover::nullset::{
    ek_membership, ek_outer_measure, ek_outer_measures, ek_sup, factorial_expand,
};
use nullcover::{ExactRational, FactorialDigits, Membership};
use proptest::prelude::*;

fn q(a: i64, b: i64) -> ExactRational {
    ExactRational::new(BigInt::from(a), BigInt::from(b))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// A lower bound for `3 − e`: `3 − Σ_{k≤K} 1/k! − 2/(K+1)!`.
fn three_minus_e_lower(k: usize) -> ExactRational {
    let partial = (0..=k).fold(ExactRational::zero(), |acc, j| {
        acc + ExactRational::new(BigInt::one(), factorial(j))
    });
    ExactRational::from_integer(BigInt::from(3))
        - partial
        - ExactRational::new(BigInt::from(2), factorial(k + 1))
}

proptest! {
    #[test]
    fn expansion_brackets_the_value(a in 0i64..1_000_000, b in 1i64..1_000_000, depth in 1usize..30) {
        let b = b.max(a + 1);
        let x = q(a, b);
        let e = factorial_expand(&x, depth).unwrap();
        let v = e.greedy.value();
        let step = ExactRational::new(BigInt::one(), factorial(depth));
        prop_assert!(v <= x && x < &v + &step);
        prop_assert_eq!(e.exact, v == x);
        if let Some(alt) = &e.alternate {
            // The alternate truncation plus its infinite tail of n − 1
            // digits, which sums to 1/N!, recovers the value.
            prop_assert_eq!(alt.value() + &step, x.clone());
        }
    }

    #[test]
    fn admissible_digit_strings_are_members(digits in prop::collection::vec(any::<u32>(), 1..16)) {
        let digits: Vec<u32> = digits
            .iter()
            .enumerate()
            .map(|(i, &d)| if i == 0 { 0 } else { d % (i as u32 + 1) })
            .collect();
        let x = FactorialDigits::new(digits.clone()).unwrap().value();
        let depth = digits.len() + 1;
        prop_assert_eq!(ek_membership(&x, depth).unwrap(), Membership::In);
        prop_assert_eq!(ek_membership(&x, depth + 5).unwrap(), Membership::In);
    }

    #[test]
    fn membership_only_refines_with_depth(a in 0i64..5000, b in 1i64..5000, n in 2usize..12, extra in 1usize..12) {
        let b = b.max(a + 1);
        let x = q(a, b);
        let shallow = ek_membership(&x, n).unwrap();
        let deep = ek_membership(&x, n + extra).unwrap();
        if shallow != Membership::Undetermined {
            prop_assert_eq!(shallow, deep);
        }
    }
}

#[test]
fn outer_measure_telescopes() {
    for (i, m) in ek_outer_measures().take(2000).enumerate() {
        let n = i + 1;
        assert_eq!(m * ExactRational::from_integer(BigInt::from(n)), ExactRational::one());
    }
    assert_eq!(ek_outer_measure(7).unwrap(), q(1, 7));
    assert_eq!(ek_outer_measure(1).unwrap(), ExactRational::one());
    assert!(ek_outer_measure(0).is_err());
}

#[test]
fn supremum_increases_below_three_minus_e() {
    let lower = three_minus_e_lower(40);
    let mut previous = ExactRational::zero();
    for n in 1..=30 {
        let s = ek_sup(n).unwrap();
        assert!(s >= previous);
        assert!(s < lower);
        previous = s;
    }
}

#[test]
fn membership_examples() {
    assert_eq!(ek_membership(&q(0, 1), 5).unwrap(), Membership::In);
    assert_eq!(ek_membership(&q(1, 2), 20).unwrap(), Membership::Out);
    assert_eq!(ek_membership(&q(1, 6), 20).unwrap(), Membership::In);
    assert!(ek_membership(&q(1, 1), 5).is_err());
}
