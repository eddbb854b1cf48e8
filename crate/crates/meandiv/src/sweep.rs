//! Randomized verification sweeps over seeded distribution pairs.
//!
//! Sweeps run in parallel when the `parallel` feature is on and
//! sequentially otherwise. Per-seed work is pure and the reductions are
//! associative and commutative with deterministic tie-breaking, so the two
//! modes produce identical reports.

use crate::distributions::random_pair;
use crate::error::Result;
use crate::inequalities::ChainSpec;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Parameters of a chain sweep. Seeds `0..seeds` map round-robin onto bin
/// counts `n_min..=n_max`.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub seeds: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub min_mass: f64,
    /// Per-link slack tolerance.
    pub tol: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seeds: 100_000,
            n_min: 2,
            n_max: 32,
            min_mass: 1e-3,
            tol: 1e-12,
        }
    }
}

impl SweepConfig {
    pub fn bins_for_seed(&self, seed: u64) -> usize {
        let span = (self.n_max - self.n_min + 1) as u64;
        self.n_min + (seed % span) as usize
    }
}

/// Worst case observed for one chain across a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSweepOutcome {
    pub chain: String,
    /// Number of links in the chain.
    pub links: usize,
    pub seeds: u64,
    /// Pairs on which at least one link was violated.
    pub violations: u64,
    pub worst_slack: f64,
    pub worst_link: usize,
    pub worst_seed: u64,
    pub worst_n: usize,
    pub holds: bool,
}

#[derive(Clone, Copy)]
struct Slot {
    slack: f64,
    link: usize,
    seed: u64,
    violations: u64,
}

impl Slot {
    const EMPTY: Slot = Slot {
        slack: f64::INFINITY,
        link: 0,
        seed: u64::MAX,
        violations: 0,
    };

    // Associative and commutative; ties broken by seed so reduction order
    // cannot change the report.
    fn merge(self, other: Slot) -> Slot {
        let violations = self.violations + other.violations;
        let mut best =
            if other.slack < self.slack || (other.slack == self.slack && other.seed < self.seed) {
                other
            } else {
                self
            };
        best.violations = violations;
        best
    }
}

fn seed_slots(chains: &[ChainSpec], cfg: &SweepConfig, seed: u64) -> Result<Vec<Slot>> {
    let n = cfg.bins_for_seed(seed);
    let (p, q) = random_pair(n, seed, cfg.min_mass)?;
    chains
        .iter()
        .map(|chain| {
            let report = chain.evaluate(&p, &q, cfg.tol)?;
            Ok(Slot {
                slack: report.worst_slack,
                link: report.worst_link,
                seed,
                violations: u64::from(!report.holds),
            })
        })
        .collect()
}

fn merge_slots(mut a: Vec<Slot>, b: Vec<Slot>) -> Vec<Slot> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.merge(y);
    }
    a
}

fn finalize(chains: &[ChainSpec], cfg: &SweepConfig, slots: Vec<Slot>) -> Vec<ChainSweepOutcome> {
    chains
        .iter()
        .zip(slots)
        .map(|(chain, slot)| ChainSweepOutcome {
            chain: chain.name().to_string(),
            links: chain.terms().len() - 1,
            seeds: cfg.seeds,
            violations: slot.violations,
            worst_slack: slot.slack,
            worst_link: slot.link,
            worst_seed: slot.seed,
            worst_n: cfg.bins_for_seed(slot.seed),
            holds: slot.violations == 0,
        })
        .collect()
}

/// Evaluates every chain on every seeded pair and reports the worst slack
/// per chain. Parallel when the `parallel` feature is enabled.
pub fn sweep_chains(chains: &[ChainSpec], cfg: &SweepConfig) -> Result<Vec<ChainSweepOutcome>> {
    #[cfg(feature = "parallel")]
    {
        let slots = (0..cfg.seeds)
            .into_par_iter()
            .map(|seed| seed_slots(chains, cfg, seed))
            .try_reduce(Vec::new, |a, b| Ok(merge_slots(a, b)))?;
        Ok(finalize(chains, cfg, slots))
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_chains_sequential(chains, cfg)
    }
}

/// Single-threaded variant of [`sweep_chains`]; always available for
/// comparison benchmarks and produces the identical report.
pub fn sweep_chains_sequential(
    chains: &[ChainSpec],
    cfg: &SweepConfig,
) -> Result<Vec<ChainSweepOutcome>> {
    let mut slots = vec![Slot::EMPTY; chains.len()];
    for seed in 0..cfg.seeds {
        slots = merge_slots(slots, seed_slots(chains, cfg, seed)?);
    }
    Ok(finalize(chains, cfg, slots))
}

/// Generic deterministic map-reduce over seeds `0..seeds`. `reduce` must be
/// associative and commutative. Returns `None` when `seeds == 0`.
pub fn map_reduce_seeds<T, M, R>(seeds: u64, map: M, reduce: R) -> Option<T>
where
    T: Send,
    M: Fn(u64) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..seeds).into_par_iter().map(map).reduce_with(reduce)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..seeds).map(map).reduce(reduce)
    }
}
