//! Brute-force ground truth over all `(2n−1)!!` matchings.
//!
//! Every operation walks the full matching stream, split into `2n − 1`
//! branches by the partner of point 0. Branches are independent and their
//! results are merged in branch order, so output does not depend on the
//! thread count.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::classic_counts::CrossingPolynomial;
use crate::diagram::{crossings_of, is_strict_partner, ChordDiagram, MatchingWalker, OrbitTester};
use crate::group_algebra::{GroupElement, PermGroup};
use crate::{BigCount, Error, Result};

pub const DEFAULT_ORACLE_CAP: usize = 8;
pub const HARD_ORACLE_CAP: usize = 9;
pub const ORACLE_CAP_ENV: &str = "CHORDDIA_ORACLE_CAP";

/// Size cap and parallelism for the exhaustive paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    cap: usize,
    threads: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_ORACLE_CAP,
            threads: 1,
        }
    }
}

impl OracleConfig {
    pub fn new(cap: usize, threads: usize) -> Result<Self> {
        if cap > HARD_ORACLE_CAP {
            return Err(Error::resource(format!(
                "oracle cap {cap} exceeds the hard maximum {HARD_ORACLE_CAP}"
            )));
        }
        Ok(OracleConfig {
            cap,
            threads: threads.max(1),
        })
    }

    /// Default configuration with the cap taken from `CHORDDIA_ORACLE_CAP`
    /// when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ORACLE_CAP_ENV) {
            Ok(raw) => {
                let cap = raw.trim().parse::<usize>().map_err(|_| {
                    Error::domain(format!("{ORACLE_CAP_ENV}={raw:?} is not a nonnegative integer"))
                })?;
                Self::new(cap, 1)
            }
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn with_threads(self, threads: usize) -> Self {
        OracleConfig {
            threads: threads.max(1),
            ..self
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::domain("the oracle requires n >= 1"));
        }
        if n > self.cap {
            return Err(Error::resource(format!(
                "exhaustive enumeration at n = {n} exceeds the oracle cap {}",
                self.cap
            )));
        }
        Ok(())
    }

    /// Runs `per_branch` on every branch and returns the results in branch
    /// order.
    fn map_branches<T, F>(&self, n: usize, per_branch: F) -> Vec<T>
    where
        T: Send,
        F: Fn(MatchingWalker) -> T + Sync,
    {
        let walker = |first: usize| {
            MatchingWalker::with_first_partner(n, first).expect("branch index is in range")
        };
        if self.threads <= 1 || n == 1 {
            return (1..2 * n).map(|first| per_branch(walker(first))).collect();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.threads).build() {
            Ok(pool) => pool.install(|| {
                (1..2 * n)
                    .into_par_iter()
                    .map(|first| per_branch(walker(first)))
                    .collect()
            }),
            Err(_) => (1..2 * n).map(|first| per_branch(walker(first))).collect(),
        }
    }
}

fn check_points(n: usize, points: usize) -> Result<()> {
    if points != 2 * n {
        return Err(Error::domain(format!(
            "group acts on {points} points, expected {}",
            2 * n
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSummary {
    pub n: usize,
    pub group: String,
    pub group_order: usize,
    pub orbit_count: BigCount,
    /// Orbit size → number of orbits of that size.
    pub orbit_size_histogram: BTreeMap<usize, BigCount>,
}

impl OrbitSummary {
    /// Σ size × count; equals `(2n−1)!!`.
    pub fn total_mass(&self) -> BigCount {
        self.orbit_size_histogram
            .iter()
            .map(|(&size, count)| count * size)
            .sum()
    }
}

/// Counts orbits by counting diagrams that are their own canonical form.
pub fn orbit_count(n: usize, group: &PermGroup, config: &OracleConfig) -> Result<OrbitSummary> {
    config.check(n)?;
    check_points(n, group.points())?;
    let tester = OrbitTester::new(group);
    let order = tester.group_order();
    let branches = config.map_branches(n, |mut walker| {
        let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
        while let Some(partner) = walker.advance() {
            if let Some(stab) = tester.canonical_stabilizer(partner) {
                *hist.entry(order / stab).or_insert(0) += 1;
            }
        }
        hist
    });
    let mut histogram: BTreeMap<usize, BigCount> = BTreeMap::new();
    for hist in branches {
        for (size, count) in hist {
            *histogram.entry(size).or_default() += count;
        }
    }
    Ok(OrbitSummary {
        n,
        group: group.label().to_string(),
        group_order: order,
        orbit_count: histogram.values().sum(),
        orbit_size_histogram: histogram,
    })
}

/// Number of diagrams of order `n` mapped to themselves by `g`.
pub fn fixed_diagram_count(n: usize, g: &GroupElement, config: &OracleConfig) -> Result<BigCount> {
    config.check(n)?;
    check_points(n, g.points())?;
    let tester = OrbitTester::from_elements(std::slice::from_ref(g));
    let counts = config.map_branches(n, |mut walker| {
        let mut fixed = 0u64;
        while let Some(partner) = walker.advance() {
            fixed += tester.stabilizer_order(partner) as u64;
        }
        fixed
    });
    Ok(BigUint::from(counts.into_iter().sum::<u64>()))
}

/// One canonical representative per orbit, sorted by partner array.
pub fn representatives(
    n: usize,
    group: &PermGroup,
    config: &OracleConfig,
) -> Result<Vec<ChordDiagram>> {
    config.check(n)?;
    check_points(n, group.points())?;
    let tester = OrbitTester::new(group);
    let branches = config.map_branches(n, |mut walker| {
        let mut found = Vec::new();
        while let Some(partner) = walker.advance() {
            if tester.is_canonical(partner) {
                found.push(partner.to_vec());
            }
        }
        found
    });
    let mut reps = branches
        .into_iter()
        .flatten()
        .map(ChordDiagram::from_partner)
        .collect::<Result<Vec<_>>>()?;
    reps.sort();
    Ok(reps)
}

/// Histogram of crossing numbers over all diagrams of order `n`.
pub fn crossing_distribution(n: usize, config: &OracleConfig) -> Result<CrossingPolynomial> {
    config.check(n)?;
    let branches = config.map_branches(n, |mut walker| {
        let mut hist = vec![0u64; n * (n - 1) / 2 + 1];
        while let Some(partner) = walker.advance() {
            hist[crossings_of(partner) as usize] += 1;
        }
        hist
    });
    let mut poly = CrossingPolynomial::zero(n);
    for hist in branches {
        for (slot, count) in poly.coefficients.iter_mut().zip(hist) {
            *slot += count;
        }
    }
    Ok(poly)
}

/// Number of diagrams of order `n` with no chord between neighbouring points.
pub fn strict_count(n: usize, config: &OracleConfig) -> Result<BigCount> {
    config.check(n)?;
    let counts = config.map_branches(n, |mut walker| {
        let mut strict = 0u64;
        while let Some(partner) = walker.advance() {
            if is_strict_partner(partner) {
                strict += 1;
            }
        }
        strict
    });
    Ok(BigUint::from(counts.into_iter().sum::<u64>()))
}
