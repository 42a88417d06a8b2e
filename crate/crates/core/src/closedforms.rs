//! Closed forms and summation formulas for walk counts, evaluated exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, catalan, central_binomial_any, central_binomial_even, motzkin, multinomial, Natural,
};
use crate::walks::{DimKind, WalkType};

fn require_even(what: &'static str, n: u64) -> Result<u64> {
    if n.is_multiple_of(2) {
        Ok(n / 2)
    } else {
        Err(Error::OddLength { what, n })
    }
}

/// Addends `C_i * 2^(n-2i) * binom(n, 2i)` of Touchard's identity, one per
/// number `i` of north/south pairs. They sum to `C_(n+1)`.
pub fn touchard_terms(n: u64) -> Vec<(u64, Natural)> {
    (0..=n / 2)
        .map(|i| {
            let term = catalan(i) * Natural::pow(2, n - 2 * i) * binomial(n, 2 * i as i64);
            (i, term)
        })
        .collect()
}

/// Sum over all ways of splitting `n` steps among the dimensions of
/// `walk_type`: a Catalan factor per excursion, a central binomial per bridge
/// or meander, `r^u` for the `u` steps left to the `r` free directions, and a
/// multinomial for the interleaving.
pub fn general_count(walk_type: &WalkType, n: u64) -> Natural {
    let constrained: Vec<DimKind> = walk_type
        .dims()
        .iter()
        .copied()
        .filter(|k| k.is_constrained())
        .collect();
    let r = walk_type.free_direction_count();
    let mut parts = Vec::with_capacity(constrained.len() + 1);
    let mut total = Natural::zero();
    accumulate(
        &constrained,
        n,
        n,
        r,
        &mut parts,
        &Natural::one(),
        &mut total,
    );
    total
}

fn accumulate(
    dims: &[DimKind],
    n: u64,
    budget: u64,
    r: u64,
    parts: &mut Vec<u64>,
    factor: &Natural,
    total: &mut Natural,
) {
    let Some((&kind, rest)) = dims.split_first() else {
        if r == 0 && budget > 0 {
            return;
        }
        parts.push(budget);
        let term = factor * &Natural::pow(r, budget);
        let interleavings = multinomial(n, parts).expect("parts sum to n by construction");
        *total += &term * &interleavings;
        parts.pop();
        return;
    };
    match kind {
        DimKind::Excursion | DimKind::Bridge => {
            for i in 0..=budget / 2 {
                let f = if kind == DimKind::Excursion {
                    catalan(i)
                } else {
                    central_binomial_even(i)
                };
                parts.push(2 * i);
                accumulate(rest, n, budget - 2 * i, r, parts, &(factor * &f), total);
                parts.pop();
            }
        }
        DimKind::Meander => {
            for j in 0..=budget {
                parts.push(j);
                let f = central_binomial_any(j);
                accumulate(rest, n, budget - j, r, parts, &(factor * &f), total);
                parts.pop();
            }
        }
        DimKind::OneWay | DimKind::Free => unreachable!("free dimensions are folded into r"),
    }
}

/// Left-hand sum for type `ab`: `sum_i C_(n/2-i) binom(n,2i) binom(2i,i)`.
pub fn ab_sum(n: u64) -> Result<Natural> {
    let h = require_even("ab_sum", n)?;
    Ok((0..=h)
        .map(|i| catalan(h - i) * binomial(n, 2 * i as i64) * central_binomial_even(i))
        .sum())
}

/// Walks of type `ab` (back to the origin, one dimension floored):
/// `C_(n/2) * binom(n+1, n/2)`.
pub fn ab_closed(n: u64) -> Result<Natural> {
    let h = require_even("ab_closed", n)?;
    Ok(catalan(h) * binomial(n + 1, h as i64))
}

/// Left-hand sum for type `aa`: `sum_i C_i C_(n/2-i) binom(n, 2i)`.
pub fn aa_sum(n: u64) -> Result<Natural> {
    let h = require_even("aa_sum", n)?;
    Ok((0..=h)
        .map(|i| catalan(i) * catalan(h - i) * binomial(n, 2 * i as i64))
        .sum())
}

/// Quadrant walks returning to the origin: `C_(n/2) * C_(n/2+1)`.
pub fn aa_closed(n: u64) -> Result<Natural> {
    let h = require_even("aa_closed", n)?;
    Ok(catalan(h) * catalan(h + 1))
}

/// `sum_i C_i * binom(n-2i, floor((n-2i)/2)) * binom(n, 2i)`, which counts
/// type `ac`. It is not `binom(2n+1, n)`; that value counts type `ce`.
pub fn quadrant_axis_sum(n: u64) -> Natural {
    (0..=n / 2)
        .map(|i| catalan(i) * central_binomial_any(n - 2 * i) * binomial(n, 2 * i as i64))
        .sum()
}

/// Half-plane walks (type `ce`): `binom(2n+1, n)`.
pub fn halfplane_closed(n: u64) -> Natural {
    binomial(2 * n + 1, n as i64)
}

/// Three-dimensional type `ace` as a double sum over `i` excursion pairs and
/// `j` meander steps.
pub fn ace3d_count(n: u64) -> Natural {
    let mut total = Natural::zero();
    for i in 0..=n / 2 {
        for j in 0..=n - 2 * i {
            let u = n - 2 * i - j;
            let numerator = Natural::pow(2, u)
                * central_binomial_even(i)
                * central_binomial_any(j)
                * multinomial(n, &[2 * i, j, u]).expect("parts sum to n");
            total += numerator.div_exact(i + 1);
        }
    }
    total
}

/// The same double sum with the binomials folded into a five-part
/// multinomial `(i, i, floor(j/2), ceil(j/2), n-2i-j)`.
pub fn ace3d_count_split(n: u64) -> Natural {
    let mut total = Natural::zero();
    for i in 0..=n / 2 {
        for j in 0..=n - 2 * i {
            let u = n - 2 * i - j;
            let numerator = Natural::pow(2, u)
                * multinomial(n, &[i, i, j / 2, j - j / 2, u]).expect("parts sum to n");
            total += numerator.div_exact(i + 1);
        }
    }
    total
}

fn rat(v: Natural) -> BigRational {
    BigRational::from_integer(BigInt::from(v.into_biguint()))
}

fn b(n: u64, k: u64) -> BigRational {
    rat(binomial(n, k as i64))
}

fn frac(den: u64) -> BigRational {
    BigRational::new(BigInt::from(1u8), BigInt::from(den))
}

fn to_natural(v: BigRational) -> Natural {
    assert!(v.is_integer(), "chain expression is not integral: {v}");
    let (sign, mag) = v.to_integer().into_parts();
    assert!(
        sign != num_bigint::Sign::Minus,
        "chain expression is negative"
    );
    Natural::from(mag)
}

/// The six successive expressions that reduce the `ab` sum to its product
/// form through binomial cancellation and Vandermonde's convolution, each
/// evaluated over the rationals. All six are equal.
pub fn vandermonde_chain(n: u64) -> Result<[Natural; 6]> {
    let h = require_even("vandermonde_chain", n)?;
    let sum = |f: &dyn Fn(u64) -> BigRational| -> BigRational {
        (0..=h).fold(BigRational::zero(), |acc, i| acc + f(i))
    };

    let e1 = sum(&|i| frac(h - i + 1) * b(n - 2 * i, h - i) * b(n, 2 * i) * b(2 * i, i));
    let e2 = sum(&|i| frac(h - i + 1) * b(n - 2 * i, h - i) * b(n, i) * b(n - i, i));
    let e3 = sum(&|i| frac(h - i + 1) * b(n, i) * b(n - i, h - i) * b(h, i));
    let e4 = sum(&|i| frac(h - i + 1) * b(n, h) * b(h, i) * b(h, i));
    let e5 = frac(h + 1) * b(n, h) * sum(&|i| b(h, i) * b(h + 1, h - i));
    let e6 = frac(h + 1) * b(n, h) * b(n + 1, h);

    Ok([e1, e2, e3, e4, e5, e6].map(to_natural))
}

/// The named closed form that applies to `walk_type`, if there is one.
pub fn named_closed_form(walk_type: &WalkType, n: u64) -> Option<(&'static str, Natural)> {
    let even = n.is_multiple_of(2);
    let zero_if_odd = |v: Result<Natural>| v.unwrap_or_else(|_| Natural::zero());
    let value = match walk_type.letters().as_str() {
        "a" => (
            "C(n/2)",
            if even {
                catalan(n / 2)
            } else {
                Natural::zero()
            },
        ),
        "b" => (
            "binom(n,n/2)",
            if even {
                central_binomial_even(n / 2)
            } else {
                Natural::zero()
            },
        ),
        "c" => ("binom(n,floor(n/2))", central_binomial_any(n)),
        "aa" => ("C(n/2)*C(n/2+1)", zero_if_odd(aa_closed(n))),
        "ab" => ("C(n/2)*binom(n+1,n/2)", zero_if_odd(ab_closed(n))),
        "ac" => ("quadrant_axis_sum", quadrant_axis_sum(n)),
        "ad" => ("motzkin(n)", motzkin(n)),
        "ae" | "add" => ("C(n+1)", catalan(n + 1)),
        "ce" => ("binom(2n+1,n)", halfplane_closed(n)),
        "ace" => ("ace3d", ace3d_count(n)),
        _ if walk_type.dims().iter().all(|k| !k.is_constrained()) => {
            ("r^n", Natural::pow(walk_type.free_direction_count(), n))
        }
        _ => return None,
    };
    Some(value)
}
