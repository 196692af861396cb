//! Progressive layer codec: decompose a signal into L ordered coefficient
//! layers, reconstruct from any prefix, and measure the distortion profile.
//!
//! The transform is the orthonormal Haar wavelet to depth L-1. Layer 1 holds
//! the approximation coefficients at the coarsest depth; layers 2..L hold the
//! detail bands ordered coarse to fine. Orthonormality buys two provable
//! properties that the rest of the crate leans on:
//!
//! * zeroing coefficients (missing layers) never increases MSE, so the
//!   distortion profile D_0 >= D_1 >= ... >= D_L is guaranteed, not merely
//!   expected;
//! * D_l equals the tail energy sum `(1/N) * sum_{m > l} ||z_m||^2`
//!   (Parseval), which the tests use as an independent route to the same
//!   numbers.
//!
//! Missing layers are replaced by zeros, the MSE-optimal fill for zero-mean
//! coefficients.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::rng::{stream, TrialRng};
use crate::Result;

use core::f64::consts::FRAC_1_SQRT_2;

/// A real-valued source vector whose length is a power of two.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<f64>,
}

impl Signal {
    /// Wrap samples after checking the length is a power of two (>= 1) and
    /// every sample is finite.
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() || !samples.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo { length: samples.len() });
        }
        if let Some(index) = samples.iter().position(|s| !s.is_finite()) {
            return Err(Error::NonFiniteSample { index });
        }
        Ok(Signal { samples })
    }

    /// Constant signal of the given length.
    pub fn constant(length: usize, value: f64) -> Result<Self> {
        Signal::new(vec![value; length])
    }

    /// Affine ramp `start + i * step`.
    pub fn ramp(length: usize, start: f64, step: f64) -> Result<Self> {
        Signal::new((0..length).map(|i| start + i as f64 * step).collect())
    }

    /// `amplitude * sin(2 pi * periods * i / length)`.
    pub fn sine(length: usize, amplitude: f64, periods: f64) -> Result<Self> {
        Signal::new(
            (0..length)
                .map(|i| {
                    let phase = 2.0 * core::f64::consts::PI * periods * i as f64 / length as f64;
                    amplitude * libm::sin(phase)
                })
                .collect(),
        )
    }

    /// Standard normal samples from the seeded generator (Box-Muller over the
    /// `GAUSSIAN_SIGNAL` stream).
    pub fn gaussian(length: usize, seed: u64) -> Result<Self> {
        if length == 0 || !length.is_power_of_two() {
            return Err(Error::NotPowerOfTwo { length });
        }
        let mut rng = TrialRng::new(seed, stream::GAUSSIAN_SIGNAL, 0);
        let mut samples = Vec::with_capacity(length);
        while samples.len() < length {
            let u1 = rng.next_uniform();
            let u2 = rng.next_uniform();
            let radius = libm::sqrt(-2.0 * libm::log(u1));
            let angle = 2.0 * core::f64::consts::PI * u2;
            samples.push(radius * libm::cos(angle));
            if samples.len() < length {
                samples.push(radius * libm::sin(angle));
            }
        }
        Signal::new(samples)
    }

    /// Built by operations whose output is finite by construction.
    fn from_transform(samples: Vec<f64>) -> Self {
        debug_assert!(samples.len().is_power_of_two());
        Signal { samples }
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    /// Largest admissible layer count, `log2(N) + 1`.
    pub fn max_layers(&self) -> usize {
        self.samples.len().trailing_zeros() as usize + 1
    }

    /// Mean squared sample value, i.e. the distortion of the all-zero
    /// reconstruction.
    pub fn mean_power(&self) -> f64 {
        self.samples.iter().map(|s| s * s).sum::<f64>() / self.len() as f64
    }
}

/// Ordered coefficient layers of a decomposed signal.
///
/// Layer 1 (index 0 here) is the coarse approximation of length
/// `N / 2^(L-1)`; layer l >= 2 is the detail band of length `N / 2^(L-l+1)`,
/// so the lengths sum to N.
#[derive(Debug, Clone, PartialEq)]
pub struct PromptSet {
    layers: Vec<Vec<f64>>,
    source_length: usize,
}

impl PromptSet {
    /// Validate externally assembled layers against the shape invariants.
    pub fn new(layers: Vec<Vec<f64>>, source_length: usize) -> Result<Self> {
        if source_length == 0 || !source_length.is_power_of_two() {
            return Err(Error::NotPowerOfTwo { length: source_length });
        }
        let num_layers = layers.len();
        let max = source_length.trailing_zeros() as usize + 1;
        if num_layers == 0 || num_layers > max {
            return Err(Error::LayerCountOutOfRange { requested: num_layers, max });
        }
        let coarse_len = source_length >> (num_layers - 1);
        for (i, layer) in layers.iter().enumerate() {
            let expected = if i == 0 { coarse_len } else { coarse_len << (i - 1) };
            if layer.len() != expected {
                return Err(Error::LengthMismatch { left: layer.len(), right: expected });
            }
            if let Some(index) = layer.iter().position(|c| !c.is_finite()) {
                return Err(Error::NonFiniteSample { index });
            }
        }
        Ok(PromptSet { layers, source_length })
    }

    pub fn num_layers(&self) -> usize {
        self.layers.len()
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    /// Coefficients of `layer` (1-based).
    pub fn layer(&self, layer: usize) -> Result<&[f64]> {
        if layer < 1 || layer > self.layers.len() {
            return Err(Error::LayerOutOfRange { layer, num_layers: self.layers.len() });
        }
        Ok(&self.layers[layer - 1])
    }

    pub fn layers(&self) -> &[Vec<f64>] {
        &self.layers
    }

    /// `(1/N) * sum_{m > prefix} ||z_m||^2`, the Parseval form of the
    /// distortion left after decoding `prefix` layers.
    pub fn tail_energy(&self, prefix: usize) -> f64 {
        let tail: f64 = self.layers[prefix..]
            .iter()
            .map(|layer| layer.iter().map(|c| c * c).sum::<f64>())
            .sum();
        tail / self.source_length as f64
    }
}

/// Reconstruction MSE after decoding each prefix: `values[l]` is the
/// distortion with layers 1..=l available, so `values[0]` is the mean power
/// of the source and `values[L]` is the full-reconstruction residual.
#[derive(Debug, Clone, PartialEq)]
pub struct DistortionProfile {
    values: Vec<f64>,
}

impl DistortionProfile {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn num_layers(&self) -> usize {
        self.values.len() - 1
    }

    /// Distortion after decoding `prefix` layers.
    pub fn at(&self, prefix: usize) -> f64 {
        self.values[prefix]
    }
}

/// Decompose a signal into `num_layers` ordered layers with the orthonormal
/// Haar transform at depth `num_layers - 1`.
///
/// `num_layers = 1` is the identity: the single layer is the signal itself.
/// Requires `1 <= num_layers <= log2(N) + 1`.
pub fn decompose(signal: &Signal, num_layers: usize) -> Result<PromptSet> {
    let max = signal.max_layers();
    if num_layers == 0 || num_layers > max {
        return Err(Error::LayerCountOutOfRange { requested: num_layers, max });
    }
    let mut approx = signal.samples().to_vec();
    let mut details: Vec<Vec<f64>> = Vec::with_capacity(num_layers - 1);
    for _ in 0..num_layers - 1 {
        let half = approx.len() / 2;
        let mut lo = Vec::with_capacity(half);
        let mut hi = Vec::with_capacity(half);
        for i in 0..half {
            let a = approx[2 * i];
            let b = approx[2 * i + 1];
            lo.push((a + b) * FRAC_1_SQRT_2);
            hi.push((a - b) * FRAC_1_SQRT_2);
        }
        details.push(hi);
        approx = lo;
    }
    let mut layers = Vec::with_capacity(num_layers);
    layers.push(approx);
    layers.extend(details.into_iter().rev()); // coarsest detail first
    Ok(PromptSet { layers, source_length: signal.len() })
}

/// Inverse transform using only the first `prefix_len` layers; the rest are
/// zeroed. `prefix_len = 0` yields the all-zero signal.
pub fn reconstruct(prompts: &PromptSet, prefix_len: usize) -> Result<Signal> {
    let num_layers = prompts.num_layers();
    if prefix_len > num_layers {
        return Err(Error::PrefixOutOfRange { prefix: prefix_len, num_layers });
    }
    let coarse = &prompts.layers[0];
    let mut approx = if prefix_len >= 1 {
        coarse.clone()
    } else {
        vec![0.0; coarse.len()]
    };
    for l in 2..=num_layers {
        let detail = &prompts.layers[l - 1];
        let keep = l <= prefix_len;
        let mut next = Vec::with_capacity(approx.len() * 2);
        for (i, &a) in approx.iter().enumerate() {
            let d = if keep { detail[i] } else { 0.0 };
            next.push((a + d) * FRAC_1_SQRT_2);
            next.push((a - d) * FRAC_1_SQRT_2);
        }
        approx = next;
    }
    debug_assert_eq!(approx.len(), prompts.source_length);
    Ok(Signal::from_transform(approx))
}

/// Mean squared error between two equal-length signals.
pub fn mse(x: &Signal, y: &Signal) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    let sum: f64 = x
        .samples()
        .iter()
        .zip(y.samples())
        .map(|(a, b)| {
            let d = a - b;
            d * d
        })
        .sum();
    Ok(sum / x.len() as f64)
}

/// Distortion after decoding each prefix: `D_l = mse(x, reconstruct(Z, l))`
/// for `l = 0..=num_layers`.
pub fn distortion_profile(signal: &Signal, num_layers: usize) -> Result<DistortionProfile> {
    let prompts = decompose(signal, num_layers)?;
    distortion_profile_from_prompts(signal, &prompts)
}

/// Same as [`distortion_profile`] when the decomposition is already at hand.
pub fn distortion_profile_from_prompts(
    signal: &Signal,
    prompts: &PromptSet,
) -> Result<DistortionProfile> {
    if prompts.source_length() != signal.len() {
        return Err(Error::LengthMismatch { left: prompts.source_length(), right: signal.len() });
    }
    let mut values = Vec::with_capacity(prompts.num_layers() + 1);
    for prefix in 0..=prompts.num_layers() {
        values.push(mse(signal, &reconstruct(prompts, prefix)?)?);
    }
    Ok(DistortionProfile { values })
}
