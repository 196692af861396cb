//! Superposition-coding layer plans and successive-interference-cancellation
//! decodability.
//!
//! A [`LayerPlan`] splits unit transmit power across L layered codewords and
//! assigns each a rate. The receiver decodes layer 1 first, treating layers
//! 2..L as interference, subtracts it, then moves on. Decoding stops at the
//! first layer whose SINR cannot carry its rate, so a receiver always ends up
//! with a *prefix* of the layer sequence — more of it as its channel improves.

use alloc::vec;
use alloc::vec::Vec;

use crate::channel::ChannelModel;
use crate::error::Error;
use crate::math;
use crate::rng::{stream, TrialRng};
use crate::Result;

/// Power fractions must sum to one within this absolute slack.
pub const POWER_SUM_TOLERANCE: f64 = 1e-12;

/// Superposition-coding configuration: per-layer power fractions and rates.
///
/// Layer indices are 1-based throughout, matching the decoding order: layer 1
/// is decoded first (and should carry the most protected content).
#[derive(Debug, Clone, PartialEq)]
pub struct LayerPlan {
    power_fractions: Vec<f64>,
    rates: Vec<f64>,
}

impl LayerPlan {
    /// Build a plan from explicit power fractions and rates.
    ///
    /// Every fraction must be positive, the fractions must sum to 1 within
    /// [`POWER_SUM_TOLERANCE`], every rate must be positive and finite, and
    /// the two lists must have equal, nonzero length.
    pub fn new(power_fractions: Vec<f64>, rates: Vec<f64>) -> Result<Self> {
        if power_fractions.is_empty() {
            return Err(Error::EmptyLayers);
        }
        if power_fractions.len() != rates.len() {
            return Err(Error::PlanLengthMismatch {
                fractions: power_fractions.len(),
                rates: rates.len(),
            });
        }
        for (i, &a) in power_fractions.iter().enumerate() {
            if !a.is_finite() || a <= 0.0 {
                return Err(Error::InvalidPowerFraction { layer: i + 1, value: a });
            }
        }
        let sum: f64 = power_fractions.iter().sum();
        if (sum - 1.0).abs() > POWER_SUM_TOLERANCE {
            return Err(Error::PowerFractionSum { sum });
        }
        for (i, &r) in rates.iter().enumerate() {
            if !r.is_finite() || r <= 0.0 {
                return Err(Error::InvalidLayerRate { layer: i + 1, value: r });
            }
        }
        Ok(LayerPlan { power_fractions, rates })
    }

    /// Geometric power split with a uniform rate on every layer.
    pub fn geometric(num_layers: usize, ratio: f64, rate: f64) -> Result<Self> {
        let fractions = geometric_power_allocation(num_layers, ratio)?;
        LayerPlan::new(fractions, vec![rate; num_layers])
    }

    pub fn num_layers(&self) -> usize {
        self.power_fractions.len()
    }

    pub fn power_fractions(&self) -> &[f64] {
        &self.power_fractions
    }

    pub fn rates(&self) -> &[f64] {
        &self.rates
    }

    /// SINR seen by `layer` (1-based) at instantaneous SNR `snr`, assuming
    /// layers below it have already been cancelled:
    ///
    /// ```text
    /// sinr_l = a_l * snr / (1 + snr * sum_{m > l} a_m)
    /// ```
    pub fn layer_sinr(&self, snr: f64, layer: usize) -> Result<f64> {
        if layer < 1 || layer > self.num_layers() {
            return Err(Error::LayerOutOfRange { layer, num_layers: self.num_layers() });
        }
        if !(snr >= 0.0) || (snr.is_infinite() && snr < 0.0) {
            return Err(Error::InvalidSnr { snr });
        }
        Ok(self.sinr_unchecked(snr, layer))
    }

    fn sinr_unchecked(&self, snr: f64, layer: usize) -> f64 {
        let own = self.power_fractions[layer - 1];
        let interference: f64 = self.power_fractions[layer..].iter().sum();
        if snr.is_infinite() {
            // Interference-limited regime: sinr -> a_l / tail.
            return if interference > 0.0 { own / interference } else { f64::INFINITY };
        }
        own * snr / (1.0 + snr * interference)
    }

    /// Number of layers decodable at instantaneous SNR `snr`.
    ///
    /// Returns the largest `l` such that `log2(1 + sinr_j) >= rate_j` for
    /// every `j <= l`. Cancellation proceeds in layer order, so a failure at
    /// layer `j` discards all layers above `j` even if their isolated SINR
    /// would have sufficed. Nonpositive or NaN `snr` decodes nothing.
    ///
    /// # Example
    ///
    /// ```
    /// use layercast_core::LayerPlan;
    ///
    /// let plan = LayerPlan::new(vec![0.8, 0.2], vec![1.0, 1.0]).unwrap();
    /// assert_eq!(plan.decodable_prefix(1.0), 0); // below 5/3
    /// assert_eq!(plan.decodable_prefix(3.0), 1); // layer 2 needs snr >= 5
    /// assert_eq!(plan.decodable_prefix(6.0), 2);
    /// ```
    pub fn decodable_prefix(&self, snr: f64) -> usize {
        if snr.is_nan() || snr <= 0.0 {
            return 0;
        }
        let mut prefix = 0;
        for layer in 1..=self.num_layers() {
            if math::capacity(self.sinr_unchecked(snr, layer)) >= self.rates[layer - 1] {
                prefix = layer;
            } else {
                break;
            }
        }
        prefix
    }
}

/// Power fractions proportional to `ratio^(l-1)`, normalized to sum to 1.
///
/// `ratio` in (0, 1] puts more power on earlier layers; `ratio = 1` is a
/// uniform split.
pub fn geometric_power_allocation(num_layers: usize, ratio: f64) -> Result<Vec<f64>> {
    if num_layers == 0 {
        return Err(Error::EmptyLayers);
    }
    if !ratio.is_finite() || ratio <= 0.0 || ratio > 1.0 {
        return Err(Error::InvalidRatio { ratio });
    }
    let mut fractions = Vec::with_capacity(num_layers);
    let mut weight = 1.0;
    for _ in 0..num_layers {
        fractions.push(weight);
        weight *= ratio;
    }
    let total: f64 = fractions.iter().sum();
    for a in &mut fractions {
        *a /= total;
    }
    Ok(fractions)
}

/// Decoded prefix length for one Monte-Carlo trial.
///
/// The fading draw comes from the `(seed, PREFIX_DISTRIBUTION, trial)`
/// sub-stream, so the result depends only on its arguments.
pub fn prefix_trial(plan: &LayerPlan, model: &ChannelModel, seed: u64, trial: u64) -> usize {
    let u = TrialRng::new(seed, stream::PREFIX_DISTRIBUTION, trial).next_uniform();
    plan.decodable_prefix(model.draw(u).snr)
}

/// Per-trial decoded-prefix counts over `{0..L}`.
pub fn prefix_counts(
    plan: &LayerPlan,
    model: &ChannelModel,
    n_trials: u64,
    seed: u64,
) -> Result<Vec<u64>> {
    if n_trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let mut counts = vec![0u64; plan.num_layers() + 1];
    for trial in 0..n_trials {
        counts[prefix_trial(plan, model, seed, trial)] += 1;
    }
    Ok(counts)
}

/// Empirical probability mass of the decoded prefix length over `{0..L}`.
///
/// Entry `k` is the fraction of trials that decoded exactly `k` layers.
/// Deterministic given the seed.
pub fn prefix_distribution(
    plan: &LayerPlan,
    model: &ChannelModel,
    n_trials: u64,
    seed: u64,
) -> Result<Vec<f64>> {
    let counts = prefix_counts(plan, model, n_trials, seed)?;
    Ok(pmf_from_counts(&counts, n_trials))
}

/// Normalize integer counts into a probability mass function.
pub fn pmf_from_counts(counts: &[u64], n_trials: u64) -> Vec<f64> {
    counts.iter().map(|&c| c as f64 / n_trials as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::ChannelKind;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn default_plan() -> LayerPlan {
        LayerPlan::new(vec![0.8, 0.2], vec![1.0, 1.0]).unwrap()
    }

    #[test]
    fn geometric_singleton_normalizes() {
        assert_eq!(geometric_power_allocation(1, 0.5).unwrap(), vec![1.0]);
    }

    #[test]
    fn geometric_quarter_ratio_two_layers() {
        // 1/1.25 and 0.25/1.25
        let a = geometric_power_allocation(2, 0.25).unwrap();
        assert!(close(a[0], 0.8, 1e-15));
        assert!(close(a[1], 0.2, 1e-15));
    }

    #[test]
    fn geometric_unit_ratio_is_uniform() {
        let a = geometric_power_allocation(3, 1.0).unwrap();
        for &x in &a {
            assert!(close(x, 1.0 / 3.0, 1e-15));
        }
    }

    #[test]
    fn geometric_is_nonincreasing_and_sums_to_one() {
        let a = geometric_power_allocation(7, 0.6).unwrap();
        for w in a.windows(2) {
            assert!(w[0] >= w[1]);
        }
        assert!(close(a.iter().sum::<f64>(), 1.0, 1e-12));
    }

    #[test]
    fn geometric_rejects_bad_ratio() {
        for bad in [0.0, -0.25, 1.5, f64::NAN] {
            assert!(matches!(
                geometric_power_allocation(3, bad),
                Err(Error::InvalidRatio { .. })
            ));
        }
        assert!(matches!(geometric_power_allocation(0, 0.5), Err(Error::EmptyLayers)));
    }

    #[test]
    fn plan_invariants_are_enforced() {
        assert!(matches!(
            LayerPlan::new(vec![0.8, 0.3], vec![1.0, 1.0]),
            Err(Error::PowerFractionSum { .. })
        ));
        assert!(matches!(
            LayerPlan::new(vec![1.2, -0.2], vec![1.0, 1.0]),
            Err(Error::InvalidPowerFraction { .. })
        ));
        assert!(matches!(
            LayerPlan::new(vec![0.5, 0.5], vec![1.0]),
            Err(Error::PlanLengthMismatch { .. })
        ));
        assert!(matches!(
            LayerPlan::new(vec![0.5, 0.5], vec![1.0, 0.0]),
            Err(Error::InvalidLayerRate { .. })
        ));
        assert!(matches!(LayerPlan::new(vec![], vec![]), Err(Error::EmptyLayers)));
    }

    #[test]
    fn single_layer_sinr_has_no_interference() {
        let plan = LayerPlan::new(vec![1.0], vec![1.0]).unwrap();
        assert!(close(plan.layer_sinr(3.0, 1).unwrap(), 3.0, 1e-15));
    }

    #[test]
    fn two_layer_sinr_hand_value() {
        // 0.8 * 10 / (1 + 10 * 0.2) = 8/3
        let plan = default_plan();
        assert!(close(plan.layer_sinr(10.0, 1).unwrap(), 8.0 / 3.0, 1e-15));
        assert!(close(plan.layer_sinr(10.0, 2).unwrap(), 2.0, 1e-15));
    }

    #[test]
    fn zero_snr_gives_zero_sinr() {
        let plan = default_plan();
        assert_eq!(plan.layer_sinr(0.0, 1).unwrap(), 0.0);
        assert_eq!(plan.layer_sinr(0.0, 2).unwrap(), 0.0);
    }

    #[test]
    fn layer_index_is_validated() {
        let plan = default_plan();
        assert!(matches!(plan.layer_sinr(1.0, 0), Err(Error::LayerOutOfRange { .. })));
        assert!(matches!(plan.layer_sinr(1.0, 3), Err(Error::LayerOutOfRange { .. })));
        assert!(matches!(plan.layer_sinr(-1.0, 1), Err(Error::InvalidSnr { .. })));
    }

    #[test]
    fn prefix_thresholds_match_hand_derivation() {
        // Layer 1 decodes iff snr >= 5/3, layer 2 iff snr >= 5.
        let plan = default_plan();
        assert_eq!(plan.decodable_prefix(0.0), 0);
        assert_eq!(plan.decodable_prefix(1.0), 0);
        assert_eq!(plan.decodable_prefix(3.0), 1);
        assert_eq!(plan.decodable_prefix(6.0), 2);
        assert_eq!(plan.decodable_prefix(1e6), 2);
        assert_eq!(plan.decodable_prefix(f64::NAN), 0);
    }

    #[test]
    fn prefix_is_monotone_in_snr() {
        let plan = LayerPlan::geometric(5, 0.25, 1.0).unwrap();
        let mut prev = 0;
        for i in 0..400 {
            let snr = 0.1 * i as f64;
            let p = plan.decodable_prefix(snr);
            assert!(p >= prev);
            prev = p;
        }
    }

    #[test]
    fn sic_failure_discards_later_layers() {
        // Middle layer too demanding: even though layer 3 alone would fit,
        // decoding stops at layer 2.
        let plan = LayerPlan::new(vec![0.6, 0.2, 0.2], vec![0.5, 50.0, 0.1]).unwrap();
        assert_eq!(plan.decodable_prefix(100.0), 1);
    }

    #[test]
    fn awgn_distribution_is_a_point_mass_at_full_prefix() {
        let plan = default_plan();
        let model = ChannelModel::from_linear(ChannelKind::Awgn, 100.0).unwrap();
        let pmf = prefix_distribution(&plan, &model, 500, 3).unwrap();
        assert_eq!(pmf, vec![0.0, 0.0, 1.0]);
    }

    #[test]
    fn single_trial_is_a_point_mass() {
        let plan = default_plan();
        let model = ChannelModel::rayleigh(10.0).unwrap();
        let pmf = prefix_distribution(&plan, &model, 1, 9).unwrap();
        assert_eq!(pmf.iter().filter(|&&p| p == 1.0).count(), 1);
        assert_eq!(pmf.iter().filter(|&&p| p == 0.0).count(), 2);
    }

    #[test]
    fn zero_trials_is_rejected() {
        let plan = default_plan();
        let model = ChannelModel::rayleigh(10.0).unwrap();
        assert!(matches!(
            prefix_distribution(&plan, &model, 0, 9),
            Err(Error::ZeroTrials)
        ));
    }

    #[test]
    fn counts_account_for_every_trial() {
        let plan = LayerPlan::geometric(4, 0.25, 1.0).unwrap();
        let model = ChannelModel::rayleigh(8.0).unwrap();
        let n = 10_000;
        let counts = prefix_counts(&plan, &model, n, 17).unwrap();
        assert_eq!(counts.iter().sum::<u64>(), n);
        let pmf = pmf_from_counts(&counts, n);
        assert!(close(pmf.iter().sum::<f64>(), 1.0, 1e-12));
    }

    #[test]
    fn empirical_first_layer_probability_matches_exponential_threshold() {
        // P[prefix >= 1] = P[10 * gain >= 5/3] = exp(-1/6) for the default
        // plan on Rayleigh at linear average SNR 10.
        let plan = default_plan();
        let model = ChannelModel::from_linear(ChannelKind::RayleighBlock, 10.0).unwrap();
        let n = 100_000u64;
        let pmf = prefix_distribution(&plan, &model, n, 2024).unwrap();
        let p_ge1 = pmf[1] + pmf[2];
        let expected = libm::exp(-1.0 / 6.0);
        let sigma = libm::sqrt(expected * (1.0 - expected) / n as f64);
        assert!(
            (p_ge1 - expected).abs() <= 4.0 * sigma,
            "p>=1 {p_ge1} vs {expected}"
        );
    }

    #[test]
    fn distribution_is_deterministic_given_seed() {
        let plan = default_plan();
        let model = ChannelModel::rayleigh(10.0).unwrap();
        let a = prefix_distribution(&plan, &model, 5000, 7).unwrap();
        let b = prefix_distribution(&plan, &model, 5000, 7).unwrap();
        assert_eq!(a, b);
        let c = prefix_distribution(&plan, &model, 5000, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn coupled_prefixes_are_ordered_by_average_snr() {
        let plan = LayerPlan::geometric(3, 0.25, 1.0).unwrap();
        let lo = ChannelModel::rayleigh(2.0).unwrap();
        let hi = ChannelModel::rayleigh(12.0).unwrap();
        for trial in 0..2000 {
            let u = TrialRng::new(1, stream::PREFIX_DISTRIBUTION, trial).next_uniform();
            let p_lo = plan.decodable_prefix(lo.draw(u).snr);
            let p_hi = plan.decodable_prefix(hi.draw(u).snr);
            assert!(p_hi >= p_lo);
        }
    }
}
