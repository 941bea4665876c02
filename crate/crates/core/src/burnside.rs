//! Orbit counting for an arbitrary permutation group on the circle points.
//!
//! A perfect matching on `2n` points is a bijection `[n] × [2] → [2n]` taken
//! modulo the wreath product `S_n ≀ S_2` acting on the domain. Counting the
//! orbits of a group `G` acting on the codomain then reduces to a double sum
//! over cycle types of both sides,
//!
//! ```text
//!   1 / (2^n n! |G|) · Σ_π Σ_η  Π_{i: π_i > 0}  i^{π_i} · η_i (η_i − 1) … (η_i − π_i + 1)
//! ```
//!
//! where `π_i`, `η_i` are the numbers of `i`-cycles of `π ∈ S_n ≀ S_2` and
//! `η ∈ G`. Both sums run over cycle-type classes with multiplicities rather
//! than over elements.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::group_algebra::{partitions, CycleType, PermGroup};
use crate::numbers::{binomial, exact_div, factorial, pow};
use crate::{BigCount, Error, Result};

/// Number of elements of `S_n ≀ S_2` of each cycle type on `[n] × [2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathTypeDistribution {
    n: usize,
    entries: BTreeMap<CycleType, BigCount>,
}

impl WreathTypeDistribution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &BTreeMap<CycleType, BigCount> {
        &self.entries
    }

    /// Count for one cycle type (zero if the type does not occur).
    pub fn count(&self, ct: &CycleType) -> BigCount {
        self.entries.get(ct).cloned().unwrap_or_default()
    }

    /// Sum of all counts; equals `2^n · n!`.
    pub fn total(&self) -> BigCount {
        self.entries.values().sum()
    }
}

/// Cycle-type distribution of the wreath product `S_n ≀ S_2`.
///
/// An element `(τ, σ)` is a permutation `τ ∈ S_n` of the rows together with a
/// swap flag per row. A cycle of `τ` of length `l` lifts to two `l`-cycles
/// when it carries an even number of swaps and to one `2l`-cycle otherwise;
/// each case is realized by `2^{l-1}` flag patterns.
pub fn wreath_cycle_type_distribution(n: usize) -> WreathTypeDistribution {
    let n_fact = factorial(n as u64);
    let mut entries: BTreeMap<CycleType, BigCount> = BTreeMap::new();

    for tau in partitions(n) {
        let mut denom = BigUint::one();
        for (len, mult) in tau.iter() {
            denom *= pow(len as u64, mult as u64) * factorial(mult as u64);
        }
        let class_size = &n_fact / denom;
        // 2^{l-1} flag patterns per cycle of length l, whichever way it lifts
        let flags = pow(2, (n - tau.cycles()) as u64);
        let base = class_size * flags;

        let lengths: Vec<(usize, usize)> = tau.iter().collect();
        let mut acc = Vec::new();
        split_cycles(&lengths, CycleType::new(), BigUint::one(), &mut acc);
        for (ct, weight) in acc {
            *entries.entry(ct).or_default() += &base * weight;
        }
    }
    WreathTypeDistribution { n, entries }
}

/// For each length class `(l, m)`, chooses how many of the `m` cycles split
/// into two `l`-cycles (the rest double into `2l`-cycles), weighted by the
/// number of ways to pick them.
fn split_cycles(
    rest: &[(usize, usize)],
    partial: CycleType,
    weight: BigCount,
    out: &mut Vec<(CycleType, BigCount)>,
) {
    let Some((&(len, mult), tail)) = rest.split_first() else {
        out.push((partial, weight));
        return;
    };
    for split in 0..=mult {
        let mut ct = partial.clone();
        ct.add(len, 2 * split);
        ct.add(2 * len, mult - split);
        let w = &weight * binomial(mult as u64, split as u64);
        split_cycles(tail, ct, w, out);
    }
}

/// `a (a − 1) … (a − k + 1)`; 1 for `k = 0`, 0 for `k > a`.
pub fn falling_factorial(a: &BigCount, k: u64) -> BigCount {
    let mut acc = BigUint::one();
    let mut term = a.clone();
    for _ in 0..k {
        if term.is_zero() {
            return BigUint::zero();
        }
        acc *= &term;
        term -= 1u32;
    }
    acc
}

/// Number of matchings fixed by one `η` and weighted by one wreath class:
/// `Π_{i: π_i > 0} i^{π_i} · (η_i)_{π_i}`.
fn class_product(pi: &CycleType, eta: &CycleType) -> BigCount {
    let mut acc = BigUint::one();
    for (len, pi_i) in pi.iter() {
        let eta_i = eta.count(len);
        if pi_i > eta_i {
            return BigUint::zero();
        }
        acc *= pow(len as u64, pi_i as u64) * falling_factorial(&BigUint::from(eta_i), pi_i as u64);
    }
    acc
}

/// Number of `group`-orbits of chord diagrams of order `n`.
pub fn burnside_count(n: usize, group: &PermGroup) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::domain("burnside_count requires n >= 1"));
    }
    if group.points() != 2 * n {
        return Err(Error::domain(format!(
            "group acts on {} points, expected {}",
            group.points(),
            2 * n
        )));
    }
    let wreath = wreath_cycle_type_distribution(n);
    let group_types = group.cycle_type_histogram();

    let mut sum = BigUint::zero();
    for (pi, pi_count) in wreath.entries() {
        for (eta, &eta_count) in &group_types {
            let term = class_product(pi, eta);
            if !term.is_zero() {
                sum += term * pi_count * eta_count;
            }
        }
    }
    let denom = pow(2, n as u64) * factorial(n as u64) * group.order();
    exact_div(&sum, &denom, "Burnside average")
}
