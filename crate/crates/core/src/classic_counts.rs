//! Classical counts under the identity group: noncrossing diagrams, the
//! distribution of diagrams by number of crossings, and strict diagrams.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

use crate::numbers::{binomial, exact_div, factorial};
use crate::{BigCount, Error, Result};

/// Number of diagrams of order `n` with no crossing chords, `(2n)! / (n! (n+1)!)`.
pub fn catalan_noncrossing(n: u64) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::domain("catalan_noncrossing requires n >= 1"));
    }
    exact_div(
        &factorial(2 * n),
        &(factorial(n) * factorial(n + 1)),
        "Catalan number",
    )
}

/// Diagrams of order `n` counted by number of crossings: `coefficients[j]` is
/// the number of diagrams with exactly `j` crossings, for `j ≤ C(n, 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingPolynomial {
    pub n: usize,
    pub coefficients: Vec<BigCount>,
}

impl CrossingPolynomial {
    /// Histogram with `C(n,2) + 1` slots, all zero.
    pub fn zero(n: usize) -> Self {
        CrossingPolynomial {
            n,
            coefficients: vec![BigUint::zero(); max_crossings(n) + 1],
        }
    }

    /// Value at `x = 1`: the total number of diagrams.
    pub fn total(&self) -> BigCount {
        self.coefficients.iter().sum()
    }

    /// Value at `x = 0`: the number of noncrossing diagrams.
    pub fn constant_term(&self) -> BigCount {
        self.coefficients.first().cloned().unwrap_or_default()
    }

    pub fn evaluate(&self, x: &BigCount) -> BigCount {
        self.coefficients
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * x + c)
    }
}

fn max_crossings(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `t_{nj} = (2j + 1) / (2n + 1) · C(2n + 1, n − j)`.
pub fn touchard_coefficient(n: u64, j: u64) -> Result<BigCount> {
    if j > n {
        return Err(Error::domain(format!("touchard coefficient needs j <= n, got j={j}, n={n}")));
    }
    exact_div(
        &(binomial(2 * n + 1, n - j) * (2 * j + 1)),
        &BigUint::from(2 * n + 1),
        "Touchard coefficient",
    )
}

/// Crossing distribution from the Touchard–Riordan identity
/// `(1 − x)^n T_n(x) = Σ_j (−1)^j t_{nj} x^{j(j+1)/2}`.
pub fn touchard_polynomial(n: u64) -> Result<CrossingPolynomial> {
    if n == 0 {
        return Err(Error::domain("touchard_polynomial requires n >= 1"));
    }
    let top = (n * (n + 1) / 2) as usize;
    let mut poly = vec![BigInt::zero(); top + 1];
    for j in 0..=n {
        let t = BigInt::from_biguint(Sign::Plus, touchard_coefficient(n, j)?);
        let exponent = (j * (j + 1) / 2) as usize;
        poly[exponent] += if j % 2 == 0 { t } else { -t };
    }

    // n rounds of exact division by (1 − x), ascending powers
    for round in 0..n {
        let mut quotient = Vec::with_capacity(poly.len().saturating_sub(1));
        let mut running = BigInt::zero();
        for coeff in &poly[..poly.len() - 1] {
            running += coeff;
            quotient.push(running.clone());
        }
        running += &poly[poly.len() - 1];
        if !running.is_zero() {
            return Err(Error::consistency(format!(
                "division by (1 - x) left remainder {running} in round {round} for n = {n}"
            )));
        }
        poly = quotient;
    }

    let degree = max_crossings(n as usize);
    if poly.len() != degree + 1 {
        return Err(Error::consistency(format!(
            "quotient has degree {} but n = {n} allows at most {degree} crossings",
            poly.len() as isize - 1
        )));
    }
    let coefficients = poly
        .into_iter()
        .map(|c| {
            if c.is_negative() {
                Err(Error::consistency(format!("negative crossing count {c} for n = {n}")))
            } else {
                Ok(c.magnitude().clone())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossingPolynomial {
        n: n as usize,
        coefficients,
    })
}

/// Cumulative (`a`) and per-order (`b`) strict diagram counts; index `k`
/// holds the value for order `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictSequences {
    pub a: Vec<BigCount>,
    pub b: Vec<BigCount>,
}

impl StrictSequences {
    /// `a_{2n}`, for `1 ≤ n ≤ n_max`.
    pub fn cumulative(&self, n: usize) -> Option<&BigCount> {
        n.checked_sub(1).and_then(|k| self.a.get(k))
    }

    /// `b_{2n}`: strict diagrams of order `n`.
    pub fn strict(&self, n: usize) -> Option<&BigCount> {
        n.checked_sub(1).and_then(|k| self.b.get(k))
    }
}

/// Strict-diagram counts via `a_{2n} = (2n − 1) a_{2n−2} + a_{2n−4}`, seeded
/// with `a_2 = 0`, `a_4 = 1`.
pub fn hk_sequences(n_max: usize) -> Result<StrictSequences> {
    if n_max == 0 {
        return Err(Error::domain("hk_sequences requires n_max >= 1"));
    }
    let mut a: Vec<BigCount> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let next = match n {
            1 => BigUint::zero(),
            2 => BigUint::from(1u32),
            _ => &a[n - 2] * (2 * n - 1) + &a[n - 3],
        };
        a.push(next);
    }
    let mut b = Vec::with_capacity(n_max);
    b.push(a[0].clone());
    for k in 1..n_max {
        if a[k] < a[k - 1] {
            return Err(Error::consistency("cumulative strict counts decreased"));
        }
        b.push(&a[k] - &a[k - 1]);
    }
    Ok(StrictSequences { a, b })
}
