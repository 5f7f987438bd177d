//! Fully-delayed honest chain construction and Monte Carlo growth-rate
//! estimation.
//!
//! "Fully delayed" is the worst-case delay schedule: every block is mined by
//! a distinct miner and withheld exactly Δ from everyone else, so the block
//! arriving at time `t` extends the best chain among blocks that arrived at
//! or before `t - Δ` (genesis is always visible). The growth rate is the
//! best final chain score divided by the horizon.

use crate::arrivals::{generate_trace, ArrivalTrace};
use crate::error::{Error, Result};
use crate::model::{BlockId, BlockTree, BlockrateConfiguration, GENESIS};

/// Monte Carlo estimate of the honest score growth rate.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthEstimate {
    /// Mean growth rate across trials, points/second.
    pub mean_rate: f64,
    /// Standard error of the mean, points/second. Zero for a single trial.
    pub std_error: f64,
    pub trials: usize,
    pub horizon: f64,
    pub delta: f64,
    pub seed: u64,
}

fn check_build_inputs(trace: &ArrivalTrace, delta: f64, scores: &[f64]) -> Result<()> {
    if !delta.is_finite() || delta < 0.0 {
        return Err(Error::invalid("delta", format!("must be nonnegative, got {delta}")));
    }
    if scores.len() != trace.num_types() {
        return Err(Error::ScoreCountMismatch {
            expected: trace.num_types(),
            got: scores.len(),
        });
    }
    for (i, &c) in scores.iter().enumerate() {
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::invalid("scores", format!("score[{i}] must be positive, got {c}")));
        }
    }
    Ok(())
}

/// Builds the fully-delayed tree for one trace.
///
/// Events are processed in time order and the visibility cutoff `t - Δ`
/// only moves forward, so the best visible tip is maintained incrementally:
/// each block enters the fork-choice comparison exactly once, giving a
/// linear-time construction.
pub fn build_fully_delayed_tree(trace: &ArrivalTrace, delta: f64, scores: &[f64]) -> Result<BlockTree> {
    check_build_inputs(trace, delta, scores)?;
    let events = trace.events();
    let mut tree = BlockTree::new();
    let mut ids: Vec<BlockId> = Vec::with_capacity(events.len());
    let mut best_visible: BlockId = GENESIS;
    let mut next_visible = 0usize;
    for (i, e) in events.iter().enumerate() {
        let cutoff = e.time - delta;
        while next_visible < i {
            let candidate = ids[next_visible];
            if tree.block(candidate).unwrap().arrival_time > cutoff {
                break;
            }
            if tree.prefer(candidate, best_visible) {
                best_visible = candidate;
            }
            next_visible += 1;
        }
        let id = tree.insert(e.type_index, e.time, best_visible, scores[e.type_index])?;
        ids.push(id);
    }
    Ok(tree)
}

/// Best final chain score of the fully-delayed tree divided by the trace
/// horizon (all mined blocks count at the horizon).
pub fn fully_delayed_chain_rate(trace: &ArrivalTrace, delta: f64, scores: &[f64]) -> Result<f64> {
    let tree = build_fully_delayed_tree(trace, delta, scores)?;
    let tip = tree.best_chain_tip(f64::INFINITY);
    Ok(tree.chain_score(tip)? / trace.horizon())
}

/// Runs `trials` independent trials from the configuration's honest rates.
/// Trial `k` uses seed `seed + k`; the reduction is ordered by trial index,
/// so the result is reproducible regardless of scheduling.
pub fn estimate_growth_rate(
    config: &BlockrateConfiguration,
    horizon: f64,
    trials: usize,
    seed: u64,
) -> Result<GrowthEstimate> {
    if !horizon.is_finite() || horizon <= 0.0 {
        return Err(Error::invalid("horizon", format!("must be positive, got {horizon}")));
    }
    if trials == 0 {
        return Err(Error::invalid("trials", "must be at least 1"));
    }
    let rates = config.honest_rates();
    let scores = config.scores();
    let mut samples = Vec::with_capacity(trials);
    for k in 0..trials as u64 {
        let trace = generate_trace(&rates, horizon, seed.wrapping_add(k))?;
        samples.push(fully_delayed_chain_rate(&trace, config.delta(), &scores)?);
    }
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let std_error = if samples.len() > 1 {
        let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
        (var / n).sqrt()
    } else {
        0.0
    };
    Ok(GrowthEstimate {
        mean_rate: mean,
        std_error,
        trials,
        horizon,
        delta: config.delta(),
        seed,
    })
}
