//! Security classification, private-mining attack races, and the
//! hardware-backdoor tail probability.
//!
//! A configuration is secure when the adversary score growth rate is below
//! the honest fully-delayed rate. The honest rate is only known up to the
//! closed-form bounds, so the classifier reports by bound: secure when
//! `lambda_a < lower`, insecure when `lambda_a > upper`, indeterminate
//! between them (strict comparisons on both sides; equality stays
//! indeterminate).

use crate::bounds::{adversary_rate, bound_pair, BoundPair};
use crate::chainsim::{build_fully_delayed_tree, estimate_growth_rate, GrowthEstimate};
use crate::error::{Error, Result};
use crate::model::BlockrateConfiguration;
use crate::rng;
use crate::arrivals::generate_trace;

/// Classification outcome. The `*ByBound` variants come from the closed
/// forms alone; the `*BySimulation` variants only appear when a
/// simulation-refined classification was requested and the bounds were
/// inconclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    SecureByBound,
    InsecureByBound,
    Indeterminate,
    SecureBySimulation,
    InsecureBySimulation,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::SecureByBound => "SecureByBound",
            Verdict::InsecureByBound => "InsecureByBound",
            Verdict::Indeterminate => "Indeterminate",
            Verdict::SecureBySimulation => "SecureBySimulation",
            Verdict::InsecureBySimulation => "InsecureBySimulation",
        };
        f.write_str(s)
    }
}

/// Full classification report.
#[derive(Debug, Clone, PartialEq)]
pub struct SecurityVerdict {
    pub verdict: Verdict,
    pub lambda_a: f64,
    pub bounds: BoundPair,
    /// Present when a simulation-refined classification ran.
    pub simulated: Option<GrowthEstimate>,
}

/// Classifies against the closed-form bounds only.
pub fn classify(config: &BlockrateConfiguration) -> SecurityVerdict {
    let bounds = bound_pair(config);
    let lambda_a = adversary_rate(config);
    let verdict = if lambda_a < bounds.lower {
        Verdict::SecureByBound
    } else if lambda_a > bounds.upper {
        Verdict::InsecureByBound
    } else {
        Verdict::Indeterminate
    };
    SecurityVerdict {
        verdict,
        lambda_a,
        bounds,
        simulated: None,
    }
}

/// Parameters for the optional simulation refinement of an indeterminate
/// bound verdict.
#[derive(Debug, Clone, Copy)]
pub struct SimulationRefinement {
    pub horizon: f64,
    pub trials: usize,
    pub seed: u64,
    /// Confidence width in standard errors (e.g. 3.0).
    pub confidence_sigmas: f64,
}

/// Classifies by bounds first; when indeterminate, estimates the honest
/// growth rate and decides at the requested confidence. Stays indeterminate
/// when `lambda_a` falls inside the confidence band.
pub fn classify_with_simulation(
    config: &BlockrateConfiguration,
    refinement: SimulationRefinement,
) -> Result<SecurityVerdict> {
    let mut result = classify(config);
    if result.verdict != Verdict::Indeterminate {
        return Ok(result);
    }
    let est = estimate_growth_rate(config, refinement.horizon, refinement.trials, refinement.seed)?;
    let band = refinement.confidence_sigmas * est.std_error;
    result.verdict = if result.lambda_a < est.mean_rate - band {
        Verdict::SecureBySimulation
    } else if result.lambda_a > est.mean_rate + band {
        Verdict::InsecureBySimulation
    } else {
        Verdict::Indeterminate
    };
    result.simulated = Some(est);
    Ok(result)
}

/// Outcome of a private-mining race over repeated trials.
#[derive(Debug, Clone, PartialEq)]
pub struct AttackRaceResult {
    pub trials: usize,
    pub adversary_wins: usize,
    pub win_fraction: f64,
    pub horizon: f64,
    pub reveal_time: f64,
}

/// Races a fully-delayed honest chain against a privately mined adversary
/// chain. The adversary mines with its own rates and no delay, so its chain
/// is a single line whose score is the sum of its arrivals' scores. It wins
/// a trial when its private chain score at `reveal_time` strictly exceeds
/// the honest best-chain score at that instant.
pub fn simulate_private_attack(
    config: &BlockrateConfiguration,
    horizon: f64,
    reveal_time: f64,
    trials: usize,
    seed: u64,
) -> Result<AttackRaceResult> {
    if !horizon.is_finite() || horizon <= 0.0 {
        return Err(Error::invalid("horizon", format!("must be positive, got {horizon}")));
    }
    if !reveal_time.is_finite() || reveal_time <= 0.0 || reveal_time > horizon {
        return Err(Error::invalid(
            "reveal_time",
            format!("must be in (0, horizon], got {reveal_time} with horizon {horizon}"),
        ));
    }
    if trials == 0 {
        return Err(Error::invalid("trials", "must be at least 1"));
    }

    let honest_rates = config.honest_rates();
    let adversary_rates = config.adversary_rates();
    let scores = config.scores();
    let mut wins = 0usize;
    for k in 0..trials as u64 {
        let honest_trace = generate_trace(&honest_rates, horizon, seed.wrapping_add(2 * k))?;
        let adversary_trace = generate_trace(&adversary_rates, horizon, seed.wrapping_add(2 * k + 1))?;

        let tree = build_fully_delayed_tree(&honest_trace, config.delta(), &scores)?;
        let honest_tip = tree.best_chain_tip(reveal_time);
        let honest_score = tree.chain_score(honest_tip)?;

        let adversary_score: f64 = adversary_trace
            .events()
            .iter()
            .take_while(|e| e.time <= reveal_time)
            .map(|e| scores[e.type_index])
            .sum();

        if adversary_score > honest_score {
            wins += 1;
        }
    }
    Ok(AttackRaceResult {
        trials,
        adversary_wins: wins,
        win_fraction: wins as f64 / trials as f64,
        horizon,
        reveal_time,
    })
}

/// Exact probability that at least ⌈n/2⌉ of `n` independent Bernoulli(p)
/// hack events occur, by direct summation of the binomial tail.
pub fn backdoor_insecurity_probability(n: u32, p: f64) -> f64 {
    debug_assert!(n >= 1 && (0.0..=1.0).contains(&p));
    if p <= 0.0 {
        return 0.0;
    }
    if p >= 1.0 {
        return 1.0;
    }
    let threshold = n.div_ceil(2);
    let q = 1.0 - p;
    if p <= 0.5 {
        // walk the pmf multiplicatively from k = 0
        let mut term = q.powi(n as i32); // P(X = 0)
        let mut tail = 0.0;
        for k in 0..=n {
            if k >= threshold {
                tail += term;
            }
            if k < n {
                term *= (n - k) as f64 / (k + 1) as f64 * (p / q);
            }
        }
        tail.min(1.0)
    } else {
        // for p > 1/2 the start term q^n underflows long before the tail
        // becomes negligible; count the complement's misses instead:
        // X >= t  <=>  Y = n - X <= n - t  with  Y ~ Binomial(n, q)
        let limit = n - threshold;
        let mut term = p.powi(n as i32); // P(Y = 0)
        let mut tail = 0.0;
        for k in 0..=limit {
            tail += term;
            term *= (n - k) as f64 / (k + 1) as f64 * (q / p);
        }
        tail.min(1.0)
    }
}

/// Monte Carlo estimate of the backdoor tail with its binomial standard
/// error.
#[derive(Debug, Clone, PartialEq)]
pub struct BackdoorEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub trials: usize,
}

/// Samples `n` independent hack events per trial and counts majority
/// compromises.
pub fn backdoor_monte_carlo(n: u32, p: f64, trials: usize, seed: u64) -> BackdoorEstimate {
    debug_assert!(n >= 1 && (0.0..=1.0).contains(&p) && trials >= 1);
    let threshold = n.div_ceil(2);
    let mut rng = rng::rng_for(seed, 0);
    let mut successes = 0usize;
    for _ in 0..trials {
        let mut hacked = 0u32;
        for _ in 0..n {
            if rng::unit_open(&mut rng) < p {
                hacked += 1;
            }
        }
        if hacked >= threshold {
            successes += 1;
        }
    }
    let estimate = successes as f64 / trials as f64;
    let std_error = (estimate * (1.0 - estimate) / trials as f64).sqrt();
    BackdoorEstimate {
        estimate,
        std_error,
        trials,
    }
}
