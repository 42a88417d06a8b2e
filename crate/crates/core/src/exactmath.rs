//! Arbitrary-precision combinatorial primitives.
//!
//! Every count produced anywhere in the crate is a [`Natural`]; fixed-width
//! integers only ever appear as indices and lengths.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A nonnegative integer of unbounded magnitude.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn pow(base: u64, exp: u64) -> Self {
        let mut acc = BigUint::one();
        let b = BigUint::from(base);
        for _ in 0..exp {
            acc *= &b;
        }
        Natural(acc)
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// Divides by `d`, which must divide `self` exactly.
    pub(crate) fn div_exact(&self, d: u64) -> Self {
        let d = BigUint::from(d);
        let q = &self.0 / &d;
        debug_assert!(
            (&q * &d) == self.0,
            "inexact division of {} by {}",
            self.0,
            d
        );
        Natural(q)
    }
}

impl From<BigUint> for Natural {
    fn from(v: BigUint) -> Self {
        Natural(v)
    }
}

impl From<u64> for Natural {
    fn from(v: u64) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<u32> for Natural {
    fn from(v: u32) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<usize> for Natural {
    fn from(v: usize) -> Self {
        Natural(BigUint::from(v))
    }
}

impl PartialEq<u64> for Natural {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl PartialOrd<u64> for Natural {
    fn partial_cmp(&self, other: &u64) -> Option<std::cmp::Ordering> {
        self.0.partial_cmp(&BigUint::from(*other))
    }
}

impl FromStr for Natural {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        BigUint::from_str(s).map(Natural)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Add for Natural {
    type Output = Natural;
    fn add(self, rhs: Natural) -> Natural {
        Natural(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Natural> for &'a Natural {
    type Output = Natural;
    fn add(self, rhs: &'a Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Natural> for Natural {
    fn add_assign(&mut self, rhs: &Natural) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Natural {
    fn add_assign(&mut self, rhs: Natural) {
        self.0 += rhs.0;
    }
}

impl Mul for Natural {
    type Output = Natural;
    fn mul(self, rhs: Natural) -> Natural {
        Natural(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Natural> for &'a Natural {
    type Output = Natural;
    fn mul(self, rhs: &'a Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl MulAssign<&Natural> for Natural {
    fn mul_assign(&mut self, rhs: &Natural) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign<u64> for Natural {
    fn mul_assign(&mut self, rhs: u64) {
        self.0 *= rhs;
    }
}

impl Sum for Natural {
    fn sum<I: Iterator<Item = Natural>>(iter: I) -> Natural {
        iter.fold(Natural::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Natural> for Natural {
    fn sum<I: Iterator<Item = &'a Natural>>(iter: I) -> Natural {
        iter.fold(Natural::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

/// `n` choose `k`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> Natural {
    if k < 0 || k as u64 > n {
        return Natural::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for t in 1..=k {
        // acc == binom(n - k + t - 1, t - 1) here, so the division is exact
        acc *= n - k + t;
        acc /= t;
    }
    Natural(acc)
}

/// `n! / (parts[0]! * parts[1]! * ...)`; the parts must sum to `n`.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<Natural> {
    let sum: u64 = parts.iter().sum();
    if sum != n {
        return Err(Error::PartsMismatch { n, sum });
    }
    let mut acc = Natural::one();
    let mut running = 0u64;
    for &p in parts {
        running += p;
        acc *= &binomial(running, p as i64);
    }
    Ok(acc)
}

/// The `i`th Catalan number, `binom(2i, i) / (i + 1)`.
pub fn catalan(i: u64) -> Natural {
    binomial(2 * i, i as i64).div_exact(i + 1)
}

/// `binom(2i, i)`: balanced two-direction words of length `2i`.
pub fn central_binomial_even(i: u64) -> Natural {
    binomial(2 * i, i as i64)
}

/// `binom(j, floor(j/2))`: nonnegative prefixes of length `j`.
pub fn central_binomial_any(j: u64) -> Natural {
    binomial(j, (j / 2) as i64)
}

/// Motzkin number, `sum_i C_i * binom(n, 2i)`.
pub fn motzkin(n: u64) -> Natural {
    (0..=n / 2)
        .map(|i| catalan(i) * binomial(n, 2 * i as i64))
        .sum()
}
