//! Exact integer helpers shared by the counting modules.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{BigCount, Error, Result};

pub fn factorial(n: u64) -> BigCount {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `m!! = m·(m-2)·…`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(m: i64) -> BigCount {
    let mut acc = BigUint::one();
    let mut k = m;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    acc
}

/// Number of perfect matchings on `2n` points, `(2n-1)!!`.
pub fn matchings(n: u64) -> BigCount {
    double_factorial(2 * n as i64 - 1)
}

pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

pub fn pow(base: u64, exp: u64) -> BigCount {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// `num / den`, failing with a consistency error unless the division is exact.
pub fn exact_div(num: &BigCount, den: &BigCount, what: &str) -> Result<BigCount> {
    if den.is_zero() {
        return Err(Error::consistency(format!("{what}: division by zero")));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::consistency(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}
