use compedge::experiments::{
    estimate_licci_probability, sample_gnp, threshold_sweep, to_csv, trial_rng, EdgeProbability,
    ExperimentConfig,
};
use compedge::invariants::is_licci;
use compedge::{enumerate_graphs, SimpleGraph};
use proptest::prelude::*;

#[test]
fn edge_count_mean_is_binomial() {
    let (n, p, trials) = (100usize, 0.5, 10_000u64);
    let pairs = (n * (n - 1) / 2) as f64;
    let total: usize = (0..trials).map(|t| sample_gnp(n, p, &mut trial_rng(11, t)).edge_count()).sum();
    let mean = total as f64 / trials as f64;
    let se = (pairs * p * (1.0 - p) / trials as f64).sqrt();
    assert!((mean - p * pairs).abs() <= 3.0 * se, "mean {mean}, se {se}");
}

#[test]
fn trial_decision_matches_is_licci() {
    for n in [3usize, 4, 8] {
        let cfg = ExperimentConfig::new(n, EdgeProbability::Absolute(0.4), 100, 5).unwrap();
        let mut expected = 0;
        for t in 0..cfg.trials {
            let g = sample_gnp(n, cfg.p(), &mut trial_rng(cfg.seed, t));
            expected += match is_licci(&g) {
                Ok(v) => v.licci as u64,
                Err(_) => 1, // edgeless, hence a forest
            };
        }
        assert_eq!(estimate_licci_probability(&cfg).licci_count, expected, "n={n}");
    }
}

#[test]
fn endpoints_are_exact_for_n_at_least_four() {
    for n in 4..=12 {
        let zero = ExperimentConfig::new(n, EdgeProbability::Absolute(0.0), 30, 1).unwrap();
        let one = ExperimentConfig::new(n, EdgeProbability::Absolute(1.0), 30, 1).unwrap();
        assert_eq!(estimate_licci_probability(&zero).fraction_licci(), 1.0);
        assert_eq!(estimate_licci_probability(&one).fraction_licci(), 0.0);
    }
}

#[test]
fn sweep_is_reproducible_and_monotone() {
    let cs = [0.1, 1.0, 5.0, 20.0];
    let a = threshold_sweep(120, &cs, 300, 9).unwrap();
    let b = threshold_sweep(120, &cs, 300, 9).unwrap();
    assert_eq!(to_csv(&a.rows), to_csv(&b.rows));
    assert!(a.trend_violations.is_empty());
    assert_ne!(a.rows[0].config.seed, a.rows[1].config.seed);
}

#[test]
fn enumeration_is_a_bijection() {
    for n in 1..=5 {
        let all: Vec<SimpleGraph> = enumerate_graphs(n).unwrap().collect();
        assert_eq!(all.len() as u64, 1 << (n * n.saturating_sub(1) / 2));
        let mut sorted: Vec<_> = all.iter().map(|g| g.edges().to_vec()).collect();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }
}

proptest! {
    #[test]
    fn summaries_are_consistent(n in 3usize..40, p in 0.0f64..1.0, trials in 1u64..60, seed: u64) {
        let cfg = ExperimentConfig::new(n, EdgeProbability::Absolute(p), trials, seed).unwrap();
        let s = estimate_licci_probability(&cfg);
        prop_assert_eq!(&s, &ExperimentSummary { wall_time: s.wall_time, ..estimate_licci_probability(&cfg) });
        prop_assert!(s.licci_count <= trials && s.forest_count <= trials);
        prop_assert_eq!(s.forest_count + s.cycle_count, trials);
        if n >= 4 {
            prop_assert_eq!(s.licci_count, s.forest_count);
        }
    }
}

use compedge::experiments::ExperimentSummary;
