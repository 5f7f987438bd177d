//! Constructive per-trace processes that bracket the fully-delayed chain
//! growth rate.
//!
//! Both processes pick the same *guaranteed* blocks: scan forward from time
//! zero, the next surviving arrival is guaranteed, and everything landing in
//! the `(g, g + delta]` window after it is dropped. Guaranteed blocks always
//! chain, because each arrives more than delta after the previous one.
//!
//! * Interval deletion keeps each guaranteed block's own score. Deleting
//!   arrivals can only lower the canonical chain score, so the resulting
//!   rate is a lower bound.
//! * Small-block increase raises each guaranteed block's score to the
//!   largest score arriving in the closed window `[g, g + delta]` (deleted
//!   arrivals included). Raising scores can only increase the canonical
//!   chain score, so the resulting rate is an upper bound.

use crate::arrivals::ArrivalTrace;
use crate::error::{Error, Result};

/// One guaranteed block. `sequence_id` references the originating event in
/// the source trace.
#[derive(Debug, Clone, PartialEq)]
pub struct GuaranteedBlock {
    pub time: f64,
    pub type_index: usize,
    pub effective_score: f64,
    pub sequence_id: u64,
}

/// Output of either process: the guaranteed blocks with their effective
/// scores, plus per-type counts.
#[derive(Debug, Clone, PartialEq)]
pub struct GuaranteedTrace {
    guaranteed: Vec<GuaranteedBlock>,
    per_type_counts: Vec<usize>,
    delta: f64,
    horizon: f64,
}

impl GuaranteedTrace {
    pub fn guaranteed(&self) -> &[GuaranteedBlock] {
        &self.guaranteed
    }

    /// Guaranteed-block counts by (original) type.
    pub fn per_type_counts(&self) -> &[usize] {
        &self.per_type_counts
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn len(&self) -> usize {
        self.guaranteed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.guaranteed.is_empty()
    }

    pub fn total_effective_score(&self) -> f64 {
        self.guaranteed.iter().map(|g| g.effective_score).sum()
    }
}

fn check_scores(trace: &ArrivalTrace, delta: f64, scores: &[f64]) -> Result<()> {
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

/// Indices of the guaranteed events. Deletion windows are half-open
/// `(g, g + delta]` by time, so an arrival exactly `delta` after a
/// guaranteed block is dropped.
fn guaranteed_indices(trace: &ArrivalTrace, delta: f64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut window_end = f64::NEG_INFINITY;
    for (i, e) in trace.events().iter().enumerate() {
        if e.time > window_end {
            out.push(i);
            window_end = e.time + delta;
        }
    }
    out
}

fn build(
    trace: &ArrivalTrace,
    delta: f64,
    scores: &[f64],
    increase: bool,
) -> Result<GuaranteedTrace> {
    check_scores(trace, delta, scores)?;
    let events = trace.events();
    let indices = guaranteed_indices(trace, delta);
    let mut per_type_counts = vec![0usize; trace.num_types()];
    let mut guaranteed = Vec::with_capacity(indices.len());
    for &i in &indices {
        let g = &events[i];
        let mut effective = scores[g.type_index];
        if increase {
            // closed window [g, g + delta]; includes the dropped arrivals
            let mut j = i + 1;
            while j < events.len() && events[j].time <= g.time + delta {
                effective = effective.max(scores[events[j].type_index]);
                j += 1;
            }
        }
        per_type_counts[g.type_index] += 1;
        guaranteed.push(GuaranteedBlock {
            time: g.time,
            type_index: g.type_index,
            effective_score: effective,
            sequence_id: g.sequence_id,
        });
    }
    Ok(GuaranteedTrace {
        guaranteed,
        per_type_counts,
        delta,
        horizon: trace.horizon(),
    })
}

/// Delta interval deletion: guaranteed blocks keep their own type scores.
pub fn delta_interval_deletion(trace: &ArrivalTrace, delta: f64, scores: &[f64]) -> Result<GuaranteedTrace> {
    build(trace, delta, scores, false)
}

/// Small-block increase: same guaranteed blocks, scores raised to the window
/// maximum. Original type indices are preserved.
pub fn small_block_increase(trace: &ArrivalTrace, delta: f64, scores: &[f64]) -> Result<GuaranteedTrace> {
    build(trace, delta, scores, true)
}

/// Total effective score per second. `horizon` must be positive.
pub fn guaranteed_score_rate(gt: &GuaranteedTrace, horizon: f64) -> f64 {
    debug_assert!(horizon > 0.0);
    gt.total_effective_score() / horizon
}
