//! Closed-form bounds on the fully-delayed honest score growth rate, for
//! any number of block types, plus the adversary growth rate.
//!
//! With types sorted ascending by score and Δ the delay bound:
//!
//! * guaranteed-block rates: `rho_i = h_i / (1 + Δ Σ_k h_k)`
//! * lower bound (interval deletion): `Σ_i c_i rho_i`
//! * upper bound (small-block increase): `Σ_k c_k r_k`, where
//!   `r_k = p_stay[k] rho_k + Σ_{x<k} p_up[x][k] rho_x`,
//!   `p_up[x][y] = (1 - e^{-h_y Δ}) Π_{j>y} e^{-h_j Δ}` and
//!   `p_stay[x] = Π_{j>x} e^{-h_j Δ}`.
//! * adversary rate: `Σ_i c_i b_i` (the adversary suffers no delay).
//!
//! At Δ = 0 both bounds collapse to `Σ c_i h_i`.

use crate::model::BlockrateConfiguration;

/// Lower/upper bound pair with the per-type intermediates, all expressed in
/// ascending-score type order (ties keep the configuration order).
#[derive(Debug, Clone, PartialEq)]
pub struct BoundPair {
    pub lower: f64,
    pub upper: f64,
    pub zero_delay: f64,
    /// Guaranteed-block rates rho_i, blocks/second, ascending-score order.
    pub rho: Vec<f64>,
    /// p_up[x][y]: probability a guaranteed type-x block is raised to type
    /// y (a type-y arrival lands in its Δ window and nothing bigger does).
    /// Only entries with x < y are populated.
    pub p_up: Vec<Vec<f64>>,
    /// p_stay[x]: probability a guaranteed type-x block keeps its score.
    pub p_stay: Vec<f64>,
    /// Effective per-type rates r_k of the increase process.
    pub r: Vec<f64>,
}

/// Zero-delay growth rate Σ c_i h_i.
pub fn zero_delay_rate(config: &BlockrateConfiguration) -> f64 {
    config.types().iter().map(|t| t.score * t.honest_rate).sum()
}

/// Adversary score growth rate Σ c_i b_i.
pub fn adversary_rate(config: &BlockrateConfiguration) -> f64 {
    config.types().iter().map(|t| t.score * t.adversary_rate).sum()
}

/// Lower bound Σ c_i h_i / (1 + Δ Σ_k h_k).
pub fn lower_bound(config: &BlockrateConfiguration) -> f64 {
    bound_pair(config).lower
}

/// Upper bound from the small-block increase process (see module docs).
pub fn upper_bound(config: &BlockrateConfiguration) -> f64 {
    bound_pair(config).upper
}

/// Computes both bounds and the per-type intermediates in one pass.
pub fn bound_pair(config: &BlockrateConfiguration) -> BoundPair {
    let delta = config.delta();
    let n = config.num_types();

    // ascending score; equal scores keep configuration order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        config.types()[a]
            .score
            .total_cmp(&config.types()[b].score)
            .then(a.cmp(&b))
    });
    let h: Vec<f64> = order.iter().map(|&i| config.types()[i].honest_rate).collect();
    let c: Vec<f64> = order.iter().map(|&i| config.types()[i].score).collect();

    let h_sum: f64 = h.iter().sum();
    let denom = 1.0 + delta * h_sum;
    let rho: Vec<f64> = h.iter().map(|hi| hi / denom).collect();

    // suffix products of e^{-h_j delta} for j > x
    let mut p_stay = vec![1.0; n];
    for x in (0..n.saturating_sub(1)).rev() {
        p_stay[x] = p_stay[x + 1] * (-h[x + 1] * delta).exp();
    }

    let mut p_up = vec![vec![0.0; n]; n];
    for y in 1..n {
        let up_y = (1.0 - (-h[y] * delta).exp()) * p_stay[y];
        for row in p_up.iter_mut().take(y) {
            row[y] = up_y;
        }
    }

    let mut r = vec![0.0; n];
    for k in 0..n {
        r[k] = p_stay[k] * rho[k];
        for x in 0..k {
            r[k] += p_up[x][k] * rho[x];
        }
    }

    let zero_delay = zero_delay_rate(config);
    // summed over the same sorted order as `upper` so that the n = 1 case
    // collapses bit-for-bit (r_1 = rho_1 exactly)
    let mut lower: f64 = c.iter().zip(&rho).map(|(ci, ri)| ci * ri).sum();
    let mut upper: f64 = c.iter().zip(&r).map(|(ci, ri)| ci * ri).sum();
    if delta == 0.0 {
        // rho_i = h_i and r_i = rho_i exactly; only the summation order
        // could differ from zero_delay_rate, so pin the collapse exactly
        lower = zero_delay;
        upper = zero_delay;
    }

    BoundPair {
        lower,
        upper,
        zero_delay,
        rho,
        p_up,
        p_stay,
        r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::BlockrateConfiguration;
    use proptest::prelude::*;

    fn cfg(h: &[f64], c: &[f64], delta: f64) -> BlockrateConfiguration {
        let b = vec![0.0; h.len()];
        BlockrateConfiguration::from_rates(h, &b, c, delta).unwrap()
    }

    /// Two-type closed forms (ascending scores c2 > c1), kept as an
    /// independent route against the generic computation.
    fn two_type_closed_forms(h1: f64, h2: f64, c1: f64, c2: f64, delta: f64) -> (f64, f64) {
        let denom = 1.0 + h1 * delta + h2 * delta;
        let lower = (c1 * h1 + c2 * h2) / denom;
        let e = (-h2 * delta).exp();
        let upper = (c1 * h1 * e + c2 * (h2 + (1.0 - e) * h1)) / denom;
        (lower, upper)
    }

    #[test]
    fn zero_delay_rate_examples() {
        assert_eq!(zero_delay_rate(&cfg(&[2.0, 1.0], &[1.0, 2.0], 0.0)), 4.0);
        assert_eq!(zero_delay_rate(&cfg(&[0.0, 0.0], &[1.0, 2.0], 0.0)), 0.0);
        assert_eq!(zero_delay_rate(&cfg(&[3.0], &[1.5], 0.0)), 4.5);
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(&cfg(&[2.0, 1.0], &[1.0, 2.0], 1.0)), 1.0);
        let c = cfg(&[2.0, 1.0], &[1.0, 2.0], 0.0);
        assert_eq!(lower_bound(&c), zero_delay_rate(&c));
        assert_eq!(lower_bound(&cfg(&[1.0], &[1.0], 1.0)), 0.5);
    }

    #[test]
    fn upper_bound_examples() {
        let u = upper_bound(&cfg(&[2.0, 1.0], &[1.0, 2.0], 1.0));
        assert!((u - 1.3160602794142788).abs() < 1e-12, "u = {u}");
        let c0 = cfg(&[2.0, 1.0], &[1.0, 2.0], 0.0);
        assert_eq!(upper_bound(&c0), 4.0);
        // three equal-rate types, pinned via the generic formula and
        // cross-checked against a long increase-process simulation below
        let u3 = upper_bound(&cfg(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0], 0.5));
        assert!((u3 - 2.9676236957613162).abs() < 1e-12, "u3 = {u3}");
    }

    #[test]
    fn three_type_upper_bound_matches_increase_simulation() {
        let scores = [1.0, 2.0, 3.0];
        let trace = crate::arrivals::generate_trace(&[1.0, 1.0, 1.0], 100_000.0, 31).unwrap();
        let gt = crate::oracles::small_block_increase(&trace, 0.5, &scores).unwrap();
        let sim = crate::oracles::guaranteed_score_rate(&gt, 100_000.0);
        let formula = 2.9676236957613162;
        assert!((sim - formula).abs() / formula < 0.02, "sim = {sim}");
    }

    #[test]
    fn adversary_rate_examples() {
        let c = BlockrateConfiguration::from_rates(&[0.0, 0.0], &[1.0, 1.0], &[1.0, 2.0], 0.0).unwrap();
        assert_eq!(adversary_rate(&c), 3.0);
        let z = BlockrateConfiguration::from_rates(&[1.0], &[0.0], &[2.0], 0.0).unwrap();
        assert_eq!(adversary_rate(&z), 0.0);
        let s = BlockrateConfiguration::from_rates(&[0.0], &[0.4], &[2.5], 0.0).unwrap();
        assert_eq!(adversary_rate(&s), 1.0);
    }

    #[test]
    fn upper_bound_accepts_unsorted_scores() {
        // same types in both orders must give the same bounds
        let a = bound_pair(&cfg(&[2.0, 1.0], &[1.0, 2.0], 1.0));
        let b = bound_pair(&cfg(&[1.0, 2.0], &[2.0, 1.0], 1.0));
        assert!((a.upper - b.upper).abs() < 1e-15);
        assert!((a.lower - b.lower).abs() < 1e-15);
    }

    #[test]
    fn equal_score_types_can_be_permuted() {
        let a = upper_bound(&cfg(&[2.0, 0.7, 1.3], &[1.0, 2.0, 2.0], 0.8));
        let b = upper_bound(&cfg(&[2.0, 1.3, 0.7], &[1.0, 2.0, 2.0], 0.8));
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        // all scores equal: both bounds coincide with the deletion rate
        let p = bound_pair(&cfg(&[2.0, 1.0, 0.5], &[1.5, 1.5, 1.5], 0.6));
        assert!((p.upper - p.lower).abs() < 1e-12);
    }

    #[test]
    fn intermediates_are_probabilities_and_rates() {
        let p = bound_pair(&cfg(&[2.0, 1.0, 0.5], &[1.0, 2.0, 3.0], 0.7));
        for x in 0..3 {
            assert!((0.0..=1.0).contains(&p.p_stay[x]));
            for y in 0..3 {
                assert!((0.0..=1.0).contains(&p.p_up[x][y]));
                if x >= y {
                    assert_eq!(p.p_up[x][y], 0.0);
                }
            }
        }
        assert_eq!(p.p_stay[2], 1.0);
        // r_k sum to the total guaranteed rate: the increase process only
        // relabels guaranteed blocks
        let r_sum: f64 = p.r.iter().sum();
        let rho_sum: f64 = p.rho.iter().sum();
        assert!((r_sum - rho_sum).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn generic_matches_two_type_closed_form(
            h1 in 0.01f64..5.0, h2 in 0.01f64..5.0,
            c1 in 0.1f64..3.0, extra in 0.001f64..3.0,
            delta in 0.0f64..4.0,
        ) {
            let c2 = c1 + extra;
            let config = cfg(&[h1, h2], &[c1, c2], delta);
            let (lo, up) = two_type_closed_forms(h1, h2, c1, c2, delta);
            let pair = bound_pair(&config);
            prop_assert!((pair.lower - lo).abs() <= 1e-12 * lo.max(1.0));
            prop_assert!((pair.upper - up).abs() <= 1e-12 * up.max(1.0));
        }

        #[test]
        fn single_type_bounds_coincide(
            h in 0.0f64..5.0, c in 0.1f64..5.0, delta in 0.0f64..4.0,
        ) {
            let config = cfg(&[h], &[c], delta);
            let pair = bound_pair(&config);
            prop_assert_eq!(pair.lower, pair.upper);
            let expected = c * h / (1.0 + h * delta);
            prop_assert!((pair.lower - expected).abs() <= 1e-15 * expected.max(1.0));
        }

        #[test]
        fn zero_delay_collapses_bounds(
            rates in proptest::collection::vec(0.0f64..5.0, 1..5),
            scores in proptest::collection::vec(0.1f64..5.0, 1..5),
        ) {
            let n = rates.len().min(scores.len());
            let config = cfg(&rates[..n], &scores[..n], 0.0);
            let pair = bound_pair(&config);
            prop_assert_eq!(pair.lower, pair.zero_delay);
            prop_assert_eq!(pair.upper, pair.zero_delay);
        }

        #[test]
        fn lower_never_exceeds_upper(
            rates in proptest::collection::vec(0.0f64..5.0, 1..6),
            scores in proptest::collection::vec(0.1f64..5.0, 1..6),
            delta in 0.0f64..4.0,
        ) {
            let n = rates.len().min(scores.len());
            let config = cfg(&rates[..n], &scores[..n], delta);
            let pair = bound_pair(&config);
            prop_assert!(pair.lower <= pair.upper + 1e-12 * pair.upper.max(1.0));
            prop_assert!(pair.upper <= pair.zero_delay + 1e-12 * pair.zero_delay.max(1.0));
        }
    }
}
