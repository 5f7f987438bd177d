//! Attack-cost optimization in the linear cost-per-hash model, score and
//! difficulty setting rules, and the minimum-fraction difficulty-adjustment
//! simulation.
//!
//! In the zero-delay regime the cheapest attack concentrates the entire
//! adversary blockrate on the type minimizing price per score point, so the
//! optimization is solved at a vertex in closed form. Choosing score
//! constants proportional to prices equalizes `p_i / c_i` and pushes the
//! attack cost to `Σ p_i h_i`.

use crate::error::{Error, Result};
use crate::rng;

/// Per-type prices of blockrate, dollars/block, all strictly positive.
#[derive(Debug, Clone, PartialEq)]
pub struct PriceVector(Vec<f64>);

impl PriceVector {
    pub fn new(prices: Vec<f64>) -> Result<Self> {
        if prices.is_empty() {
            return Err(Error::invalid("prices", "at least one price is required"));
        }
        for (i, &p) in prices.iter().enumerate() {
            if !p.is_finite() || p <= 0.0 {
                return Err(Error::invalid("prices", format!("price[{i}] must be positive, got {p}")));
            }
        }
        Ok(PriceVector(prices))
    }

    pub fn prices(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // validated non-empty
    }
}

/// Minimum attack cost and the adversary blockrate allocation achieving it.
#[derive(Debug, Clone, PartialEq)]
pub struct AttackCost {
    /// Dollars per second.
    pub cost: f64,
    /// Adversary blockrates b_i; all mass sits on one argmin type.
    pub allocation: Vec<f64>,
}

/// Minimum cost (dollars/second) of outpacing the honest zero-delay score
/// rate: `min_i (p_i / c_i) * Σ_j c_j h_j`, placing the whole adversary
/// blockrate on the argmin type (ties resolved to the smallest index).
pub fn min_attack_cost(honest_rates: &[f64], scores: &[f64], prices: &PriceVector) -> Result<AttackCost> {
    let n = scores.len();
    if honest_rates.len() != n || prices.len() != n {
        return Err(Error::invalid(
            "prices",
            format!(
                "h/c/p lists must have equal length (h: {}, c: {n}, p: {})",
                honest_rates.len(),
                prices.len()
            ),
        ));
    }
    for (i, &c) in scores.iter().enumerate() {
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::invalid("scores", format!("score[{i}] must be positive, got {c}")));
        }
    }
    for (i, &h) in honest_rates.iter().enumerate() {
        if !h.is_finite() || h < 0.0 {
            return Err(Error::invalid(
                "honest_rates",
                format!("rate[{i}] must be nonnegative, got {h}"),
            ));
        }
    }
    let target: f64 = scores.iter().zip(honest_rates).map(|(c, h)| c * h).sum();
    let mut argmin = 0usize;
    let mut best = prices.prices()[0] / scores[0];
    for (i, (p, c)) in prices.prices().iter().zip(scores).enumerate().skip(1) {
        let ratio = p / c;
        if ratio < best {
            best = ratio;
            argmin = i;
        }
    }
    let mut allocation = vec![0.0; n];
    allocation[argmin] = target / scores[argmin];
    Ok(AttackCost {
        cost: best * target,
        allocation,
    })
}

/// Score constants proportional to prices: `c_i = c1 * p_i / p_1`, which
/// equalizes `p_i / c_i` across types and maximizes the minimum attack cost.
pub fn optimal_score_constants(prices: &PriceVector, c1: f64) -> Result<Vec<f64>> {
    if !c1.is_finite() || c1 <= 0.0 {
        return Err(Error::invalid("c1", format!("must be positive, got {c1}")));
    }
    let p1 = prices.prices()[0];
    Ok(prices.prices().iter().map(|p| c1 * p / p1).collect())
}

/// Difficulties equalizing the cost per block: `d_i = d1 * kappa_1 / kappa_i`,
/// so `d_i * kappa_i` is constant across types.
pub fn relative_difficulty(d1: f64, kappas: &[f64]) -> Result<Vec<f64>> {
    if !d1.is_finite() || d1 <= 0.0 {
        return Err(Error::invalid("d1", format!("must be positive, got {d1}")));
    }
    if kappas.is_empty() {
        return Err(Error::invalid("kappa", "at least one cost per hash is required"));
    }
    for (i, &k) in kappas.iter().enumerate() {
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::invalid("kappa", format!("kappa[{i}] must be positive, got {k}")));
        }
    }
    Ok(kappas.iter().map(|k| d1 * kappas[0] / k).collect())
}

/// Parameters of the minimum-fraction difficulty-adjustment simulation.
///
/// Miners respond to profitability linearly: each epoch a type gains
/// `elasticity` hashes/second per dollar/second of profit margin (and loses
/// hashrate at the same rate when unprofitable, floored at zero). Margin is
/// `blockrate * reward - hashrate * cost_per_hash`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjustmentParams {
    /// Epoch duration, seconds.
    pub epoch_length: f64,
    /// Block-fraction threshold below which a type's difficulty steps down.
    /// Must satisfy 0 < min_fraction < 1/n.
    pub min_fraction: f64,
    /// Multiplicative step: d <- d * (1 - step_down). In (0, 1).
    pub step_down: f64,
    /// Reward per block, dollars, equal across types.
    pub block_reward: f64,
    /// Initial difficulties d_i, hashes/block.
    pub initial_difficulties: Vec<f64>,
    /// Costs per hash kappa_i, dollars/hash.
    pub cost_per_hash: Vec<f64>,
    /// Initial honest hashrates q_i, hashes/second.
    pub initial_hashrates: Vec<f64>,
    /// Hashes/second gained per dollar/second of margin.
    pub elasticity: f64,
    /// Number of epochs to simulate.
    pub epochs: usize,
}

/// Defaults chosen for demonstrable convergence.
pub const DEFAULT_MIN_FRACTION: f64 = 0.1;
pub const DEFAULT_STEP_DOWN: f64 = 0.05;
pub const DEFAULT_EPOCH_LENGTH: f64 = 1e4;

impl AdjustmentParams {
    fn validate(&self) -> Result<()> {
        let n = self.initial_difficulties.len();
        if n == 0 {
            return Err(Error::invalid("d", "at least one type is required"));
        }
        if self.cost_per_hash.len() != n || self.initial_hashrates.len() != n {
            return Err(Error::invalid(
                "kappa",
                format!(
                    "per-type lists must have equal length (d: {n}, kappa: {}, q: {})",
                    self.cost_per_hash.len(),
                    self.initial_hashrates.len()
                ),
            ));
        }
        if !self.min_fraction.is_finite() || self.min_fraction <= 0.0 || self.min_fraction >= 1.0 / n as f64 {
            return Err(Error::invalid(
                "min_fraction",
                format!("must be in (0, 1/{n}), got {}", self.min_fraction),
            ));
        }
        if !self.step_down.is_finite() || self.step_down <= 0.0 || self.step_down >= 1.0 {
            return Err(Error::invalid(
                "step_down",
                format!("must be in (0, 1), got {}", self.step_down),
            ));
        }
        if !self.epoch_length.is_finite() || self.epoch_length <= 0.0 {
            return Err(Error::invalid(
                "epoch_length",
                format!("must be positive, got {}", self.epoch_length),
            ));
        }
        if !self.block_reward.is_finite() || self.block_reward < 0.0 {
            return Err(Error::invalid(
                "reward",
                format!("must be nonnegative, got {}", self.block_reward),
            ));
        }
        if !self.elasticity.is_finite() || self.elasticity < 0.0 {
            return Err(Error::invalid(
                "elasticity",
                format!("must be nonnegative, got {}", self.elasticity),
            ));
        }
        if self.epochs == 0 {
            return Err(Error::invalid("epochs", "must be at least 1"));
        }
        for (i, &d) in self.initial_difficulties.iter().enumerate() {
            if !d.is_finite() || d <= 0.0 {
                return Err(Error::invalid("d", format!("d[{i}] must be positive, got {d}")));
            }
        }
        for (i, &k) in self.cost_per_hash.iter().enumerate() {
            if !k.is_finite() || k < 0.0 {
                return Err(Error::invalid("kappa", format!("kappa[{i}] must be nonnegative, got {k}")));
            }
        }
        for (i, &q) in self.initial_hashrates.iter().enumerate() {
            if !q.is_finite() || q < 0.0 {
                return Err(Error::invalid("q", format!("q[{i}] must be nonnegative, got {q}")));
            }
        }
        Ok(())
    }
}

/// A mid-run change to one type's cost per hash, applied at the start of
/// the given 1-based epoch.
#[derive(Debug, Clone, PartialEq)]
pub struct CostShock {
    pub epoch: usize,
    pub type_index: usize,
    pub factor: f64,
}

/// One epoch of the adjustment series. Difficulties and hashrates are the
/// values at the end of the epoch (after the adjustment rule and the miner
/// response); fractions are the realized block fractions during the epoch.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjustmentRecord {
    pub epoch: usize,
    pub difficulties: Vec<f64>,
    pub fractions: Vec<f64>,
    pub hashrates: Vec<f64>,
}

/// Runs the minimum-fraction adjustment simulation.
pub fn simulate_difficulty_adjustment(
    params: &AdjustmentParams,
    seed: u64,
) -> Result<Vec<AdjustmentRecord>> {
    simulate_difficulty_adjustment_with_shocks(params, &[], seed)
}

/// Same simulation with cost-per-hash shocks injected at given epochs.
pub fn simulate_difficulty_adjustment_with_shocks(
    params: &AdjustmentParams,
    shocks: &[CostShock],
    seed: u64,
) -> Result<Vec<AdjustmentRecord>> {
    params.validate()?;
    let n = params.initial_difficulties.len();
    for (i, s) in shocks.iter().enumerate() {
        if s.type_index >= n {
            return Err(Error::invalid(
                "shocks",
                format!("shock {i} type {} out of range", s.type_index),
            ));
        }
        if !s.factor.is_finite() || s.factor <= 0.0 {
            return Err(Error::invalid("shocks", format!("shock {i} factor must be positive")));
        }
    }

    let mut d = params.initial_difficulties.clone();
    let mut q = params.initial_hashrates.clone();
    let mut kappa = params.cost_per_hash.clone();
    let mut rng = rng::rng_for(seed, 0);
    let mut series = Vec::with_capacity(params.epochs);

    for epoch in 1..=params.epochs {
        for s in shocks.iter().filter(|s| s.epoch == epoch) {
            kappa[s.type_index] *= s.factor;
        }

        // realized block production this epoch
        let counts: Vec<u64> = (0..n)
            .map(|i| rng::poisson_count(&mut rng, q[i] / d[i], params.epoch_length))
            .collect();
        let total: u64 = counts.iter().sum();
        let fractions: Vec<f64> = counts
            .iter()
            .map(|&c| if total > 0 { c as f64 / total as f64 } else { 0.0 })
            .collect();

        // minimum-fraction rule: starved types get cheaper to mine
        for i in 0..n {
            if fractions[i] < params.min_fraction {
                d[i] *= 1.0 - params.step_down;
            }
        }

        // linear-elasticity miner entry/exit on the post-adjustment margin
        for i in 0..n {
            let margin = (q[i] / d[i]) * params.block_reward - q[i] * kappa[i];
            q[i] = (q[i] + params.elasticity * margin).max(0.0);
        }

        series.push(AdjustmentRecord {
            epoch,
            difficulties: d.clone(),
            fractions,
            hashrates: q.clone(),
        });
    }
    Ok(series)
}

/// CSV rendering of an adjustment series:
/// `epoch,d_1..d_n,fraction_1..fraction_n,hashrate_1..hashrate_n`.
pub fn adjustment_series_csv(series: &[AdjustmentRecord]) -> String {
    let mut out = String::new();
    let n = series.first().map(|r| r.difficulties.len()).unwrap_or(0);
    out.push_str("epoch");
    for i in 1..=n {
        out.push_str(&format!(",d_{i}"));
    }
    for i in 1..=n {
        out.push_str(&format!(",fraction_{i}"));
    }
    for i in 1..=n {
        out.push_str(&format!(",hashrate_{i}"));
    }
    out.push('\n');
    for rec in series {
        out.push_str(&rec.epoch.to_string());
        for v in rec.difficulties.iter().chain(&rec.fractions).chain(&rec.hashrates) {
            out.push(',');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn min_attack_cost_hand_examples() {
        // p = (1, 4), c = (1, 2), h = (1, 1): p1/c1 = 1 < p2/c2 = 2
        let prices = PriceVector::new(vec![1.0, 4.0]).unwrap();
        let res = min_attack_cost(&[1.0, 1.0], &[1.0, 2.0], &prices).unwrap();
        assert_eq!(res.cost, 3.0);
        assert_eq!(res.allocation, vec![3.0, 0.0]);

        // equalized p/c: cost equals sum p_i h_i
        let prices = PriceVector::new(vec![3.0, 6.0]).unwrap();
        let res = min_attack_cost(&[2.0, 1.0], &[1.0, 2.0], &prices).unwrap();
        assert!((res.cost - 12.0).abs() < 1e-12);

        // single type: the plain 51% attack cost p * h
        let prices = PriceVector::new(vec![2.5]).unwrap();
        let res = min_attack_cost(&[4.0], &[1.0], &prices).unwrap();
        assert_eq!(res.cost, 10.0);
        assert_eq!(res.allocation, vec![4.0]);
    }

    #[test]
    fn argmin_ties_resolve_to_smallest_index() {
        let prices = PriceVector::new(vec![2.0, 4.0]).unwrap();
        let res = min_attack_cost(&[1.0, 1.0], &[1.0, 2.0], &prices).unwrap();
        assert!(res.allocation[0] > 0.0);
        assert_eq!(res.allocation[1], 0.0);
    }

    #[test]
    fn brute_force_grid_agrees_with_vertex_solution() {
        // enumerate adversary allocations along the binding constraint
        // c . b = c . h + eps; linear costs attain their minimum at a
        // vertex, which the endpoint grid hits exactly
        let mut rng = crate::rng::rng_for(99, 0);
        for _ in 0..20 {
            let h = [
                0.1 + 2.9 * crate::rng::unit_open(&mut rng),
                0.1 + 2.9 * crate::rng::unit_open(&mut rng),
            ];
            let c = [
                0.1 + 2.9 * crate::rng::unit_open(&mut rng),
                0.1 + 2.9 * crate::rng::unit_open(&mut rng),
            ];
            let p = [
                0.1 + 2.9 * crate::rng::unit_open(&mut rng),
                0.1 + 2.9 * crate::rng::unit_open(&mut rng),
            ];
            let prices = PriceVector::new(p.to_vec()).unwrap();
            let closed = min_attack_cost(&h, &c, &prices).unwrap();

            let target = c[0] * h[0] + c[1] * h[1];
            let eps = 1e-9 * target;
            let budget = target + eps;
            let mut best = f64::INFINITY;
            for k in 0..=1000 {
                let b1 = k as f64 / 1000.0 * budget / c[0];
                let b2 = (budget - c[0] * b1) / c[1];
                best = best.min(p[0] * b1 + p[1] * b2.max(0.0));
            }
            assert!(
                (best - closed.cost).abs() / closed.cost < 1e-6,
                "grid {best} vs closed {}",
                closed.cost
            );
        }
    }

    #[test]
    fn optimal_scores_hand_examples() {
        let p = PriceVector::new(vec![3.0, 6.0]).unwrap();
        assert_eq!(optimal_score_constants(&p, 1.0).unwrap(), vec![1.0, 2.0]);

        let equal = PriceVector::new(vec![2.0, 2.0, 2.0]).unwrap();
        assert_eq!(optimal_score_constants(&equal, 1.5).unwrap(), vec![1.5, 1.5, 1.5]);

        let p3 = PriceVector::new(vec![1.0, 2.0, 4.0]).unwrap();
        assert_eq!(optimal_score_constants(&p3, 2.0).unwrap(), vec![2.0, 4.0, 8.0]);
    }

    #[test]
    fn relative_difficulty_hand_examples() {
        assert_eq!(relative_difficulty(100.0, &[2.0, 4.0]).unwrap(), vec![100.0, 50.0]);
        assert_eq!(relative_difficulty(7.0, &[3.0, 3.0, 3.0]).unwrap(), vec![7.0, 7.0, 7.0]);
        // the defining identity d_i kappa_i = d_1 kappa_1 holds exactly
        let kappas = [0.3, 1.7, 0.05];
        let d = relative_difficulty(42.0, &kappas).unwrap();
        for i in 0..3 {
            assert_eq!(d[i] * kappas[i], d[0] * kappas[0]);
        }
    }

    fn symmetric_params(epochs: usize) -> AdjustmentParams {
        AdjustmentParams {
            epoch_length: DEFAULT_EPOCH_LENGTH,
            min_fraction: DEFAULT_MIN_FRACTION,
            step_down: DEFAULT_STEP_DOWN,
            block_reward: 50.0,
            initial_difficulties: vec![1000.0, 1000.0],
            cost_per_hash: vec![0.04, 0.04],
            initial_hashrates: vec![50.0, 50.0],
            elasticity: 0.0,
            epochs,
        }
    }

    #[test]
    fn symmetric_setup_never_triggers_adjustment() {
        let params = symmetric_params(100);
        let series = simulate_difficulty_adjustment(&params, 4).unwrap();
        assert_eq!(series.len(), 100);
        for rec in &series {
            assert_eq!(rec.difficulties, params.initial_difficulties);
            for &f in &rec.fractions {
                assert!((f - 0.5).abs() < 0.2, "fraction {f} far from 1/n");
            }
        }
    }

    #[test]
    fn starved_type_decays_geometrically_until_recovery() {
        // type 2 produces ~1% of blocks initially; with elasticity 0 its
        // difficulty falls by exactly (1 - step_down) per starved epoch
        let params = AdjustmentParams {
            epoch_length: 1e4,
            min_fraction: 0.1,
            step_down: 0.05,
            block_reward: 10.0,
            initial_difficulties: vec![100.0, 10_000.0],
            cost_per_hash: vec![0.01, 0.01],
            initial_hashrates: vec![100.0, 100.0],
            elasticity: 0.0,
            epochs: 120,
        };
        let series = simulate_difficulty_adjustment(&params, 8).unwrap();
        let mut prev_d2 = params.initial_difficulties[1];
        for rec in &series {
            assert_eq!(rec.hashrates, params.initial_hashrates); // elasticity 0
            assert!(rec.difficulties[1] > 0.0);
            if rec.fractions[1] < params.min_fraction {
                assert!(
                    (rec.difficulties[1] - prev_d2 * 0.95).abs() < 1e-9 * prev_d2,
                    "epoch {}: expected geometric step",
                    rec.epoch
                );
            } else {
                assert_eq!(rec.difficulties[1], prev_d2, "no adjustment without starvation");
            }
            prev_d2 = rec.difficulties[1];
        }
        // long-run recovery: the final fifth of the epochs honors the floor
        let tail = &series[series.len() * 4 / 5..];
        let mean_frac: f64 = tail.iter().map(|r| r.fractions[1]).sum::<f64>() / tail.len() as f64;
        assert!(mean_frac >= params.min_fraction, "mean tail fraction {mean_frac}");
    }

    #[test]
    fn cost_shock_shifts_composition_then_rule_restores_floor() {
        // both types start at break-even (reward = d * kappa). Halving
        // type-1's cost per hash at epoch 50 makes it profitable, its
        // hashrate compounds, and type 2's fraction sinks below the floor
        // until the minimum-fraction rule steps type-2's difficulty down
        // far enough for it to compete again.
        let params = AdjustmentParams {
            epoch_length: 1000.0,
            min_fraction: 0.1,
            step_down: 0.05,
            block_reward: 20.0,
            initial_difficulties: vec![100.0, 100.0],
            cost_per_hash: vec![0.2, 0.2],
            initial_hashrates: vec![10.0, 10.0],
            elasticity: 0.35,
            epochs: 200,
        };
        let shocks = [CostShock {
            epoch: 50,
            type_index: 0,
            factor: 0.5,
        }];
        let series = simulate_difficulty_adjustment_with_shocks(&params, &shocks, 21).unwrap();

        // the shocked type's hashrate compounds and its fraction rises
        let last = series.last().unwrap();
        assert!(last.hashrates[0] > 100.0, "q1 = {}", last.hashrates[0]);
        assert!(series.iter().any(|r| r.fractions[0] > 0.8));
        // type 2 was starved and its difficulty stepped down
        assert!(series.iter().any(|r| r.fractions[1] < params.min_fraction));
        assert!(last.difficulties[1] < 100.0);
        // the rule restores the floor: over the final fifth of the run the
        // starved type's mean fraction is back at or above min_fraction
        let tail = &series[series.len() * 4 / 5..];
        let mean_frac: f64 = tail.iter().map(|r| r.fractions[1]).sum::<f64>() / tail.len() as f64;
        assert!(mean_frac >= params.min_fraction, "mean tail fraction {mean_frac}");
        for rec in &series {
            for &d in &rec.difficulties {
                assert!(d > 0.0);
            }
        }
    }

    #[test]
    fn difficulty_changes_only_when_starved() {
        let params = AdjustmentParams {
            epoch_length: 5e3,
            min_fraction: 0.2,
            step_down: 0.1,
            block_reward: 5.0,
            initial_difficulties: vec![100.0, 400.0],
            cost_per_hash: vec![0.05, 0.05],
            initial_hashrates: vec![30.0, 30.0],
            elasticity: 0.5,
            epochs: 60,
        };
        let series = simulate_difficulty_adjustment(&params, 17).unwrap();
        let mut prev = params.initial_difficulties.clone();
        for rec in &series {
            for ((d_now, d_prev), fraction) in rec.difficulties.iter().zip(&prev).zip(&rec.fractions) {
                if d_now != d_prev {
                    assert!(*fraction < params.min_fraction);
                }
            }
            prev = rec.difficulties.clone();
        }
    }

    #[test]
    fn params_are_validated() {
        let mut p = symmetric_params(10);
        p.min_fraction = 0.6; // >= 1/n
        assert!(simulate_difficulty_adjustment(&p, 0).is_err());
        let mut p = symmetric_params(10);
        p.step_down = 1.0;
        assert!(simulate_difficulty_adjustment(&p, 0).is_err());
        let mut p = symmetric_params(10);
        p.initial_difficulties = vec![100.0];
        assert!(simulate_difficulty_adjustment(&p, 0).is_err());
        let p = symmetric_params(10);
        let bad_shock = [CostShock { epoch: 1, type_index: 9, factor: 0.5 }];
        assert!(simulate_difficulty_adjustment_with_shocks(&p, &bad_shock, 0).is_err());
    }

    #[test]
    fn csv_has_expected_header_and_rows() {
        let params = symmetric_params(3);
        let series = simulate_difficulty_adjustment(&params, 1).unwrap();
        let csv = adjustment_series_csv(&series);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "epoch,d_1,d_2,fraction_1,fraction_2,hashrate_1,hashrate_2"
        );
        assert_eq!(lines.count(), 3);
    }

    proptest! {
        // with equalized p/c the cost is sum p_i h_i up to round-off
        #[test]
        fn optimal_scores_maximize_cost(
            p in proptest::collection::vec(0.1f64..5.0, 1..5),
            h in proptest::collection::vec(0.0f64..5.0, 1..5),
            c1 in 0.1f64..3.0,
        ) {
            let n = p.len().min(h.len());
            let prices = PriceVector::new(p[..n].to_vec()).unwrap();
            let scores = optimal_score_constants(&prices, c1).unwrap();
            // spread of p_i / c_i is zero up to round-off
            let ratios: Vec<f64> = prices.prices().iter().zip(&scores).map(|(p, c)| p / c).collect();
            let (lo, hi) = ratios.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &r| (lo.min(r), hi.max(r)));
            prop_assert!((hi - lo).abs() <= 1e-12 * hi.max(1.0));

            let cost = min_attack_cost(&h[..n], &scores, &prices).unwrap().cost;
            let direct: f64 = prices.prices().iter().zip(&h[..n]).map(|(p, h)| p * h).sum();
            prop_assert!((cost - direct).abs() <= 1e-9 * direct.max(1.0));
        }
    }
}
