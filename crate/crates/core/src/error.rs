//! Domain errors shared by every module in the crate.

use alloc::string::String;
use core::fmt;

/// Domain error raised when an operation's preconditions are violated.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Average SNR is not finite or maps to a non-positive linear ratio.
    InvalidAvgSnr { avg_snr_db: f64 },
    /// Uniform variate outside the open interval (0, 1).
    UniformOutOfRange { u: f64 },
    /// Rate must be nonnegative (bits per channel use).
    NegativeRate { rate: f64 },
    /// Instantaneous SNR must be finite and nonnegative.
    InvalidSnr { snr: f64 },
    /// A layer plan needs at least one layer.
    EmptyLayers,
    /// Geometric allocation ratio must lie in (0, 1].
    InvalidRatio { ratio: f64 },
    /// A power fraction is non-positive or not finite.
    InvalidPowerFraction { layer: usize, value: f64 },
    /// Power fractions must sum to 1 within 1e-12.
    PowerFractionSum { sum: f64 },
    /// A per-layer rate is non-positive or not finite.
    InvalidLayerRate { layer: usize, value: f64 },
    /// power_fractions and rates must have equal length.
    PlanLengthMismatch { fractions: usize, rates: usize },
    /// Layer index outside 1..=num_layers.
    LayerOutOfRange { layer: usize, num_layers: usize },
    /// Signal length must be a power of two (and at least 1).
    NotPowerOfTwo { length: usize },
    /// A sample is NaN or infinite.
    NonFiniteSample { index: usize },
    /// Requested layer count outside 1..=(log2(N) + 1).
    LayerCountOutOfRange { requested: usize, max: usize },
    /// Prefix length exceeds the number of layers.
    PrefixOutOfRange { prefix: usize, num_layers: usize },
    /// Operands must have equal length.
    LengthMismatch { left: usize, right: usize },
    /// Layer plan and codec decomposition disagree on the layer count.
    PlanCodecMismatch { plan_layers: usize, codec_layers: usize },
    /// A probability must lie in [0, 1].
    InvalidProbability { value: f64 },
    /// K-of-M recovery needs K <= M.
    RequiredExceedsModalities { required: usize, modalities: usize },
    /// At least one modality is required.
    ZeroModalities,
    /// Monte-Carlo operations need at least one trial.
    ZeroTrials,
    /// A grid or list argument must be nonempty.
    EmptyGrid,
    /// Success fraction must lie strictly between 0 and 1.
    InvalidFraction { value: f64 },
    /// Modality counts must be strictly increasing.
    NotStrictlyIncreasing { index: usize },
    /// User names must be unique within one experiment.
    DuplicateUserName { name: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidAvgSnr { avg_snr_db } => {
                write!(f, "average SNR must be finite with 10^(dB/10) > 0, got {avg_snr_db} dB")
            }
            Error::UniformOutOfRange { u } => {
                write!(f, "uniform variate must lie in (0, 1), got {u}")
            }
            Error::NegativeRate { rate } => {
                write!(f, "rate must be nonnegative, got {rate}")
            }
            Error::InvalidSnr { snr } => {
                write!(f, "instantaneous SNR must be finite and nonnegative, got {snr}")
            }
            Error::EmptyLayers => write!(f, "layer plan must contain at least one layer"),
            Error::InvalidRatio { ratio } => {
                write!(f, "geometric ratio must lie in (0, 1], got {ratio}")
            }
            Error::InvalidPowerFraction { layer, value } => {
                write!(f, "power fraction for layer {layer} must be positive and finite, got {value}")
            }
            Error::PowerFractionSum { sum } => {
                write!(f, "power fractions must sum to 1, got {sum}")
            }
            Error::InvalidLayerRate { layer, value } => {
                write!(f, "rate for layer {layer} must be positive and finite, got {value}")
            }
            Error::PlanLengthMismatch { fractions, rates } => {
                write!(f, "power fractions ({fractions}) and rates ({rates}) must have equal length")
            }
            Error::LayerOutOfRange { layer, num_layers } => {
                write!(f, "layer {layer} outside 1..={num_layers}")
            }
            Error::NotPowerOfTwo { length } => {
                write!(f, "signal length must be a power of two, got {length}")
            }
            Error::NonFiniteSample { index } => {
                write!(f, "sample {index} is not finite")
            }
            Error::LayerCountOutOfRange { requested, max } => {
                write!(f, "layer count {requested} outside 1..={max} for this signal length")
            }
            Error::PrefixOutOfRange { prefix, num_layers } => {
                write!(f, "prefix length {prefix} exceeds layer count {num_layers}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::PlanCodecMismatch { plan_layers, codec_layers } => {
                write!(f, "layer plan has {plan_layers} layers but the codec produced {codec_layers}")
            }
            Error::InvalidProbability { value } => {
                write!(f, "probability must lie in [0, 1], got {value}")
            }
            Error::RequiredExceedsModalities { required, modalities } => {
                write!(f, "required count must satisfy K <= M, got K={required}, M={modalities}")
            }
            Error::ZeroModalities => write!(f, "at least one modality is required"),
            Error::ZeroTrials => write!(f, "at least one trial is required"),
            Error::EmptyGrid => write!(f, "grid must be nonempty"),
            Error::InvalidFraction { value } => {
                write!(f, "success fraction must lie strictly between 0 and 1, got {value}")
            }
            Error::NotStrictlyIncreasing { index } => {
                write!(f, "values must be strictly increasing, violated at index {index}")
            }
            Error::DuplicateUserName { name } => {
                write!(f, "user names must be unique, '{name}' appears more than once")
            }
        }
    }
}

impl core::error::Error for Error {}
