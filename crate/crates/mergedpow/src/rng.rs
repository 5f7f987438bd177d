//! Seeded randomness helpers shared by the simulation modules.
//!
//! Every random quantity in this crate is drawn from a ChaCha8 stream whose
//! seed is derived from a user-supplied `u64` via [`stream_seed`]. Results
//! are reproducible across runs of the same build for identical seeds.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// splitmix64 finalizer. Bijective on u64, good avalanche.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives an independent stream seed from a base seed and a stream index,
/// so that nearby base seeds (`seed`, `seed + 1`, ...) never share streams.
pub(crate) fn stream_seed(seed: u64, stream: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ splitmix64(stream.wrapping_mul(0xa076_1d64_78bd_642f)))
}

pub(crate) fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stream_seed(seed, stream))
}

/// Uniform draw in the open interval (0, 1).
pub(crate) fn unit_open(rng: &mut ChaCha8Rng) -> f64 {
    ((rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

/// Exponential inter-arrival gap with the given rate (events/second).
/// Strictly positive and finite for rate > 0.
pub(crate) fn exp_gap(rng: &mut ChaCha8Rng, rate: f64) -> f64 {
    -unit_open(rng).ln() / rate
}

/// Number of Poisson arrivals of the given rate within `duration` seconds,
/// counted by accumulating exponential gaps.
pub(crate) fn poisson_count(rng: &mut ChaCha8Rng, rate: f64, duration: f64) -> u64 {
    if rate <= 0.0 || duration <= 0.0 {
        return 0;
    }
    let mut t = 0.0;
    let mut count = 0u64;
    loop {
        t += exp_gap(rng, rate);
        if t > duration {
            return count;
        }
        count += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_open_stays_in_open_interval() {
        let mut rng = rng_for(7, 0);
        for _ in 0..10_000 {
            let u = unit_open(&mut rng);
            assert!(u > 0.0 && u < 1.0);
        }
    }

    #[test]
    fn stream_seeds_do_not_collide_for_adjacent_bases() {
        // seed+1/stream pairs must not alias each other's streams
        let mut seen = std::collections::HashSet::new();
        for seed in 0..64u64 {
            for stream in 0..64u64 {
                assert!(seen.insert(stream_seed(seed, stream)));
            }
        }
    }

    #[test]
    fn poisson_count_mean_close_to_rate_times_duration() {
        let mut rng = rng_for(11, 3);
        let mut total = 0u64;
        let trials = 200;
        for _ in 0..trials {
            total += poisson_count(&mut rng, 2.0, 100.0);
        }
        let mean = total as f64 / trials as f64;
        // mean 200, sd per draw ~14.1, sd of mean ~1.0
        assert!((mean - 200.0).abs() < 4.0, "mean = {mean}");
    }
}
