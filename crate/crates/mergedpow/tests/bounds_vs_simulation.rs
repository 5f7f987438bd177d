//! Statistical agreement between the closed-form bounds and the Monte Carlo
//! growth-rate estimator on randomly drawn configurations.

mod common;

use common::TestRng;
use mergedpow::bounds::bound_pair;
use mergedpow::chainsim::estimate_growth_rate;
use mergedpow::BlockrateConfiguration;

#[test]
fn simulated_rate_lands_between_the_bounds() {
    let mut rng = TestRng::new(512);
    for trial in 0..6u64 {
        let n = 2 + (trial as usize % 2); // two- and three-type configs
        let h: Vec<f64> = (0..n).map(|_| rng.range(0.2, 2.5)).collect();
        let c: Vec<f64> = (0..n).map(|_| rng.range(0.5, 3.0)).collect();
        let b = vec![0.0; n];
        let delta = rng.range(0.1, 1.5);
        let config = BlockrateConfiguration::from_rates(&h, &b, &c, delta).unwrap();

        let pair = bound_pair(&config);
        let est = estimate_growth_rate(&config, 2000.0, 10, 90 + trial).unwrap();
        let slack = 3.0 * est.std_error;
        assert!(
            est.mean_rate >= pair.lower - slack,
            "trial {trial}: mean {} below lower {} (se {})",
            est.mean_rate,
            pair.lower,
            est.std_error
        );
        assert!(
            est.mean_rate <= pair.upper + slack,
            "trial {trial}: mean {} above upper {} (se {})",
            est.mean_rate,
            pair.upper,
            est.std_error
        );
    }
}

#[test]
fn zero_delay_estimate_matches_the_collapsed_bounds() {
    let config = BlockrateConfiguration::from_rates(&[2.0, 1.0], &[0.0; 2], &[1.0, 2.0], 0.0).unwrap();
    let pair = bound_pair(&config);
    assert_eq!(pair.lower, 4.0);
    assert_eq!(pair.upper, 4.0);
    let est = estimate_growth_rate(&config, 1000.0, 20, 33).unwrap();
    assert!((est.mean_rate - 4.0).abs() <= 3.0 * est.std_error.max(0.03));
}
