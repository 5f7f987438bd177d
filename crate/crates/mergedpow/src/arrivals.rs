//! Seeded multi-type Poisson arrival traces.
//!
//! Each block type is an independent Poisson process; a trace is the sorted
//! merge of all per-type arrivals on `(0, horizon]`. Identical inputs give
//! byte-identical traces on the same build, and per-type streams stay
//! independent across nearby seeds, which matters because per-trial seeds
//! are derived as `seed + trial`.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::rng;

/// One arrival. `sequence_id` is the event's position in the merged trace
/// and makes `(time, sequence_id)` a strict total order even if two
/// floating-point times coincide.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrivalEvent {
    pub time: f64,
    /// Zero-based block-type index.
    pub type_index: usize,
    pub sequence_id: u64,
}

/// A time-ordered multi-type arrival trace.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrivalTrace {
    events: Vec<ArrivalEvent>,
    horizon: f64,
    rates: Vec<f64>,
    seed: u64,
}

impl ArrivalTrace {
    pub fn events(&self) -> &[ArrivalEvent] {
        &self.events
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// Per-type rates used to generate the trace. For imported traces these
    /// are the empirical rates (count / horizon).
    pub fn rates(&self) -> &[f64] {
        &self.rates
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn num_types(&self) -> usize {
        self.rates.len()
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Events of one type, in time order.
    pub fn count_of_type(&self, type_index: usize) -> usize {
        self.events.iter().filter(|e| e.type_index == type_index).count()
    }
}

/// Generates a trace by sampling exponential inter-arrival gaps per type and
/// merging. Each type draws from its own derived ChaCha8 stream.
pub fn generate_trace(rates: &[f64], horizon: f64, seed: u64) -> Result<ArrivalTrace> {
    if !horizon.is_finite() || horizon <= 0.0 {
        return Err(Error::invalid("horizon", format!("must be positive, got {horizon}")));
    }
    for (i, &r) in rates.iter().enumerate() {
        if !r.is_finite() || r < 0.0 {
            return Err(Error::invalid("rates", format!("rate[{i}] must be nonnegative, got {r}")));
        }
    }

    let mut merged: Vec<(f64, usize)> = Vec::new();
    for (type_index, &rate) in rates.iter().enumerate() {
        if rate == 0.0 {
            continue;
        }
        let mut stream = rng::rng_for(seed, type_index as u64);
        let mut t = 0.0;
        loop {
            t += rng::exp_gap(&mut stream, rate);
            if t > horizon {
                break;
            }
            merged.push((t, type_index));
        }
    }
    // stable sort: simultaneous floating-point times keep type order,
    // which fixes the sequence_id assignment deterministically
    merged.sort_by(|a, b| a.0.total_cmp(&b.0));
    let events = merged
        .into_iter()
        .enumerate()
        .map(|(i, (time, type_index))| ArrivalEvent {
            time,
            type_index,
            sequence_id: i as u64,
        })
        .collect();
    Ok(ArrivalTrace {
        events,
        horizon,
        rates: rates.to_vec(),
        seed,
    })
}

/// Builds a trace from raw `(time, type_index)` pairs, e.g. a hand fixture.
/// Events must be ascending in time, with times in `(0, horizon]`.
pub fn trace_from_events(events: &[(f64, usize)], horizon: f64, num_types: usize) -> Result<ArrivalTrace> {
    if !horizon.is_finite() || horizon <= 0.0 {
        return Err(Error::invalid("horizon", format!("must be positive, got {horizon}")));
    }
    let mut out = Vec::with_capacity(events.len());
    let mut prev = 0.0;
    let mut counts = vec![0usize; num_types];
    for (i, &(time, type_index)) in events.iter().enumerate() {
        if !time.is_finite() || time <= 0.0 || time > horizon {
            return Err(Error::invalid(
                "events",
                format!("event {i} time {time} outside (0, {horizon}]"),
            ));
        }
        if time < prev {
            return Err(Error::invalid("events", format!("event {i} out of order")));
        }
        if type_index >= num_types {
            return Err(Error::invalid(
                "events",
                format!("event {i} type {type_index} out of range (num_types {num_types})"),
            ));
        }
        counts[type_index] += 1;
        prev = time;
        out.push(ArrivalEvent {
            time,
            type_index,
            sequence_id: i as u64,
        });
    }
    let rates = counts.iter().map(|&c| c as f64 / horizon).collect();
    Ok(ArrivalTrace {
        events: out,
        horizon,
        rates,
        seed: 0,
    })
}

/// Writes the line-oriented `time,type_index` format, ascending, one event
/// per line. Times round-trip exactly through their shortest decimal form.
pub fn write_trace_text<W: Write>(trace: &ArrivalTrace, mut w: W) -> Result<()> {
    for e in &trace.events {
        writeln!(w, "{},{}", e.time, e.type_index)?;
    }
    Ok(())
}

/// Reads the `time,type_index` format. When `horizon` is `None`, the last
/// event time is used. Type count is inferred from the largest index seen.
pub fn read_trace_text<R: BufRead>(r: R, horizon: Option<f64>) -> Result<ArrivalTrace> {
    let mut events: Vec<(f64, usize)> = Vec::new();
    let mut max_type = 0usize;
    for (lineno, line) in r.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (time_s, type_s) = line.split_once(',').ok_or_else(|| Error::TraceFormat {
            line: lineno + 1,
            reason: "expected `time,type_index`".to_string(),
        })?;
        let time: f64 = time_s.trim().parse().map_err(|e| Error::TraceFormat {
            line: lineno + 1,
            reason: format!("bad time `{}`: {e}", time_s.trim()),
        })?;
        let type_index: usize = type_s.trim().parse().map_err(|e| Error::TraceFormat {
            line: lineno + 1,
            reason: format!("bad type index `{}`: {e}", type_s.trim()),
        })?;
        max_type = max_type.max(type_index);
        events.push((time, type_index));
    }
    let horizon = horizon.unwrap_or_else(|| events.last().map(|e| e.0).unwrap_or(1.0));
    let num_types = if events.is_empty() { 0 } else { max_type + 1 };
    trace_from_events(&events, horizon, num_types)
}
