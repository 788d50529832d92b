//! Monte Carlo estimates of the licci probability of `I_c(G(n, p))`.
//!
//! Each trial decides licci-ness from the graph alone (forest, or `K_3`), so
//! no ideal is ever built. Trial `t` draws from a ChaCha8 stream selected by
//! `t` under the master seed, which makes results independent of how trials
//! are scheduled.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::ExperimentError;
use crate::graph::SimpleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeProbability {
    /// `p` itself.
    Absolute(f64),
    /// `p = c / n`.
    Scaled(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub p_spec: EdgeProbability,
    pub trials: u64,
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn new(n: usize, p_spec: EdgeProbability, trials: u64, seed: u64) -> Result<Self, ExperimentError> {
        if n < 3 {
            return Err(ExperimentError::TooFewVertices { n });
        }
        let raw = match p_spec {
            EdgeProbability::Absolute(p) | EdgeProbability::Scaled(p) => p,
        };
        if !raw.is_finite() || raw < 0.0 {
            return Err(ExperimentError::InvalidProbability(raw));
        }
        if trials == 0 {
            return Err(ExperimentError::NoTrials);
        }
        Ok(ExperimentConfig { n, p_spec, trials, seed })
    }

    /// Edge probability, clamped to at most 1.
    pub fn p(&self) -> f64 {
        match self.p_spec {
            EdgeProbability::Absolute(p) => p.min(1.0),
            EdgeProbability::Scaled(c) => (c / self.n as f64).min(1.0),
        }
    }

    /// `c = n p` (before clamping for the scaled form).
    pub fn c(&self) -> f64 {
        match self.p_spec {
            EdgeProbability::Absolute(p) => p * self.n as f64,
            EdgeProbability::Scaled(c) => c,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentSummary {
    pub config: ExperimentConfig,
    pub licci_count: u64,
    pub forest_count: u64,
    pub cycle_count: u64,
    /// Excluded from equality-sensitive outputs such as CSV.
    pub wall_time: f64,
}

impl ExperimentSummary {
    pub fn fraction_licci(&self) -> f64 {
        self.licci_count as f64 / self.config.trials as f64
    }

    /// `licci_count/trials`, unreduced.
    pub fn exact_fraction(&self) -> String {
        format!("{}/{}", self.licci_count, self.config.trials)
    }
}

/// One draw of `G(n, p)`: each of the `C(n, 2)` pairs independently with
/// probability `p` (clamped to `[0, 1]`).
pub fn sample_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("sampled pairs are distinct and in range")
}

/// The generator for trial `trial` under `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Seed for row `row` of a sweep (SplitMix64 finalizer over `seed + row`).
pub fn derive_seed(seed: u64, row: u64) -> u64 {
    let mut z = seed.wrapping_add(row.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Wall clock; reads zero where the platform has no clock
/// (`wasm32-unknown-unknown`).
struct Stopwatch(#[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))] std::time::Instant);

impl Stopwatch {
    #[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
    fn start() -> Self {
        Stopwatch(std::time::Instant::now())
    }

    #[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
    fn start() -> Self {
        Stopwatch()
    }

    #[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
    fn seconds(&self) -> f64 {
        self.0.elapsed().as_secs_f64()
    }

    #[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
    fn seconds(&self) -> f64 {
        0.0
    }
}

/// Licci iff forest, or `K_3` when `n = 3`.
fn trial_outcome(n: usize, p: f64, seed: u64, trial: u64) -> (bool, bool) {
    let g = sample_gnp(n, p, &mut trial_rng(seed, trial));
    let forest = g.is_forest();
    let licci = forest || (n == 3 && g.is_complete());
    (licci, forest)
}

pub fn estimate_licci_probability(config: &ExperimentConfig) -> ExperimentSummary {
    let start = Stopwatch::start();
    let (n, p, seed) = (config.n, config.p(), config.seed);
    let count = |acc: (u64, u64), (licci, forest): (bool, bool)| {
        (acc.0 + licci as u64, acc.1 + forest as u64)
    };
    #[cfg(feature = "parallel")]
    let (licci_count, forest_count) = {
        use rayon::prelude::*;
        (0..config.trials)
            .into_par_iter()
            .map(|t| trial_outcome(n, p, seed, t))
            .fold(|| (0, 0), count)
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
    };
    #[cfg(not(feature = "parallel"))]
    let (licci_count, forest_count) = (0..config.trials)
        .map(|t| trial_outcome(n, p, seed, t))
        .fold((0, 0), count);
    ExperimentSummary {
        config: *config,
        licci_count,
        forest_count,
        cycle_count: config.trials - forest_count,
        wall_time: start.seconds(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sweep {
    pub rows: Vec<ExperimentSummary>,
    /// Row indices `k` where `fraction[k]` exceeds `fraction[k - 1]` by more
    /// than three combined standard errors although `c` increased.
    pub trend_violations: Vec<usize>,
}

pub fn threshold_sweep(
    n: usize,
    c_values: &[f64],
    trials: u64,
    seed: u64,
) -> Result<Sweep, ExperimentError> {
    if c_values.is_empty() {
        return Err(ExperimentError::EmptySweep);
    }
    let configs = c_values
        .iter()
        .enumerate()
        .map(|(k, &c)| ExperimentConfig::new(n, EdgeProbability::Scaled(c), trials, derive_seed(seed, k as u64)))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<_> = configs.iter().map(estimate_licci_probability).collect();
    let trend_violations = (1..rows.len())
        .filter(|&k| {
            let (a, b) = (&rows[k - 1], &rows[k]);
            if b.config.c() <= a.config.c() {
                return false;
            }
            let (fa, fb) = (a.fraction_licci(), b.fraction_licci());
            let se = (fa * (1.0 - fa) / a.config.trials as f64 + fb * (1.0 - fb) / b.config.trials as f64).sqrt();
            fb - fa > 3.0 * se + 1.0 / trials as f64
        })
        .collect();
    Ok(Sweep { rows, trend_violations })
}

pub const CSV_HEADER: &str = "n,c,p,trials,seed,licci_count,fraction_licci";

/// CSV with [`CSV_HEADER`], one line per summary. `seed` is the seed the row
/// was actually run with.
pub fn to_csv(rows: &[ExperimentSummary]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let c = r.config;
        writeln!(
            out,
            "{},{},{},{},{},{},{:.6}",
            c.n,
            c.c(),
            c.p(),
            c.trials,
            c.seed,
            r.licci_count,
            r.fraction_licci()
        )
        .expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_probabilities() {
        let mut rng = trial_rng(1, 0);
        assert_eq!(sample_gnp(7, 0.0, &mut rng), SimpleGraph::empty(7));
        assert_eq!(sample_gnp(7, 1.0, &mut rng), SimpleGraph::complete(7));
        assert_eq!(sample_gnp(7, 3.5, &mut rng), SimpleGraph::complete(7));
    }

    #[test]
    fn same_seed_same_graph() {
        let a = sample_gnp(30, 0.3, &mut trial_rng(9, 4));
        let b = sample_gnp(30, 0.3, &mut trial_rng(9, 4));
        let c = sample_gnp(30, 0.3, &mut trial_rng(9, 5));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn config_validation() {
        assert!(ExperimentConfig::new(2, EdgeProbability::Absolute(0.1), 1, 0).is_err());
        assert!(ExperimentConfig::new(5, EdgeProbability::Absolute(-0.1), 1, 0).is_err());
        assert!(ExperimentConfig::new(5, EdgeProbability::Scaled(f64::NAN), 1, 0).is_err());
        assert!(ExperimentConfig::new(5, EdgeProbability::Absolute(0.1), 0, 0).is_err());
        let c = ExperimentConfig::new(10, EdgeProbability::Scaled(40.0), 1, 0).unwrap();
        assert_eq!(c.p(), 1.0);
    }

    #[test]
    fn endpoint_fractions() {
        let zero = ExperimentConfig::new(50, EdgeProbability::Absolute(0.0), 20, 3).unwrap();
        assert_eq!(estimate_licci_probability(&zero).licci_count, 20);
        let one = ExperimentConfig::new(50, EdgeProbability::Absolute(1.0), 20, 3).unwrap();
        let s = estimate_licci_probability(&one);
        assert_eq!((s.licci_count, s.cycle_count), (0, 20));
        // n = 3 at p = 1 is always K_3, which is licci but not a forest.
        let k3 = ExperimentConfig::new(3, EdgeProbability::Absolute(1.0), 10, 3).unwrap();
        let s = estimate_licci_probability(&k3);
        assert_eq!((s.licci_count, s.forest_count), (10, 0));
    }

    #[test]
    fn sweep_single_zero_row() {
        let s = threshold_sweep(20, &[0.0], 10, 5).unwrap();
        assert_eq!(s.rows.len(), 1);
        assert_eq!(s.rows[0].fraction_licci(), 1.0);
        assert!(threshold_sweep(20, &[], 10, 5).is_err());
    }

    #[test]
    fn csv_layout() {
        let cfg = ExperimentConfig::new(10, EdgeProbability::Scaled(0.5), 4, 7).unwrap();
        let s = ExperimentSummary { config: cfg, licci_count: 3, forest_count: 3, cycle_count: 1, wall_time: 0.0 };
        assert_eq!(to_csv(&[s.clone()]), "n,c,p,trials,seed,licci_count,fraction_licci\n10,0.5,0.05,4,7,3,0.750000\n");
        assert_eq!(s.exact_fraction(), "3/4");
    }
}
