//! Scalar helpers: trial-division factorization, squarefreeness, integer
//! square roots and a couple of conversions used throughout the crate.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default bound for trial division.
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

/// Outcome of a bounded trial-division factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialFactorization {
    /// Prime factors with multiplicities, in increasing order.
    pub factors: Vec<(BigInt, u32)>,
    /// Part of |n| that could not be split within the bound. `1` when the
    /// factorization is complete.
    pub unfactored: BigInt,
}

impl TrialFactorization {
    pub fn is_complete(&self) -> bool {
        self.unfactored.is_one()
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }
}

/// Factors |n| by trial division with divisors up to `bound`.
///
/// A leftover cofactor `c > 1` with no divisor up to `bound` is accepted as
/// prime when `c <= bound²`; otherwise it is returned in `unfactored`.
pub fn trial_factor(n: &BigInt, bound: u64) -> TrialFactorization {
    let n = n.abs();
    assert!(!n.is_zero(), "cannot factor zero");
    if let Some(small) = n.to_u64() {
        return trial_factor_u64(small, bound);
    }

    let mut rest = n;
    let mut factors = Vec::new();
    let mut d: u64 = 2;
    while d <= bound {
        let dd = BigInt::from(d);
        if &dd * &dd > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (quo, rem) = rest.div_rem(&dd);
            if !rem.is_zero() {
                break;
            }
            rest = quo;
            e += 1;
        }
        if e > 0 {
            factors.push((dd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    finish(factors, rest, bound)
}

fn trial_factor_u64(mut n: u64, bound: u64) -> TrialFactorization {
    let mut factors = Vec::new();
    let mut d: u64 = 2;
    while d <= bound && (d as u128) * (d as u128) <= n as u128 {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((BigInt::from(d), e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    finish(factors, BigInt::from(n), bound)
}

fn finish(mut factors: Vec<(BigInt, u32)>, rest: BigInt, bound: u64) -> TrialFactorization {
    if rest.is_one() {
        return TrialFactorization { factors, unfactored: rest };
    }
    let b = BigInt::from(bound);
    if rest <= &b * &b {
        factors.push((rest, 1));
        TrialFactorization { factors, unfactored: BigInt::one() }
    } else {
        TrialFactorization { factors, unfactored: rest }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Squarefreeness {
    Squarefree,
    NotSquarefree,
    Undecided,
}

/// Squarefreeness of `n` by complete trial division.
///
/// A repeated prime found below the bound settles the question even when the
/// factorization is incomplete.
pub fn squarefreeness(n: &BigInt, bound: u64) -> Squarefreeness {
    if n.is_zero() {
        return Squarefreeness::NotSquarefree;
    }
    let fac = trial_factor(n, bound);
    if fac.factors.iter().any(|(_, e)| *e > 1) {
        Squarefreeness::NotSquarefree
    } else if fac.is_complete() {
        Squarefreeness::Squarefree
    } else {
        Squarefreeness::Undecided
    }
}

/// Convenience wrapper with the default bound. `None` means undecided.
pub fn is_squarefree(n: &BigInt) -> Option<bool> {
    match squarefreeness(n, DEFAULT_TRIAL_BOUND) {
        Squarefreeness::Squarefree => Some(true),
        Squarefreeness::NotSquarefree => Some(false),
        Squarefreeness::Undecided => None,
    }
}

/// Exact square root of a nonnegative perfect square, `None` otherwise.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_int(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Returns the integer value of `x`, or `None` if it has a denominator.
pub fn as_integer(x: &BigRational) -> Option<BigInt> {
    if x.denom().is_one() {
        Some(x.numer().clone())
    } else {
        None
    }
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(n).extended_gcd(n);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(n))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factors_small_numbers() {
        let f = trial_factor(&big(63), 1000);
        assert_eq!(f.factors, vec![(big(3), 2), (big(7), 1)]);
        assert!(f.is_complete());
        let f = trial_factor(&big(-1_075_648), 1000);
        assert_eq!(f.factors, vec![(big(2), 6), (big(7), 5)]);
    }

    #[test]
    fn cofactor_above_bound_squared_is_undecided() {
        // 1009 * 1013, both primes above the bound 100
        let n = big(1009 * 1013);
        let f = trial_factor(&n, 100);
        assert!(!f.is_complete());
        assert_eq!(squarefreeness(&n, 100), Squarefreeness::Undecided);
        // 1009 alone is below 100² and must be accepted as prime
        assert!(trial_factor(&big(1009), 100).is_complete());
    }

    #[test]
    fn repeated_small_prime_decides_even_when_incomplete() {
        let n = big(4 * 1009 * 1013);
        assert_eq!(squarefreeness(&n, 100), Squarefreeness::NotSquarefree);
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(is_squarefree(&big(13)), Some(true));
        assert_eq!(is_squarefree(&big(63)), Some(false));
        assert_eq!(is_squarefree(&big(1)), Some(true));
    }

    #[test]
    fn large_input_uses_bigint_path() {
        // (10^6 + 3)^2 * 5 exceeds u64 only after scaling; force the BigInt path
        let p = big(1_000_003);
        let n = &p * &p * big(5) * BigInt::from(u64::MAX);
        assert_eq!(squarefreeness(&n, 2_000_000), Squarefreeness::NotSquarefree);
    }

    #[test]
    fn sqrt_and_inverse() {
        assert_eq!(exact_sqrt(&big(46656)), Some(big(216)));
        assert_eq!(exact_sqrt(&big(46657)), None);
        assert_eq!(exact_sqrt(&big(-4)), None);
        assert_eq!(mod_inverse(&big(3), &big(13)), Some(big(9)));
        assert_eq!(mod_inverse(&big(3), &big(63)), None);
    }
}
