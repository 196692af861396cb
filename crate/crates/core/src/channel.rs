//! Fading-channel models: per-trial power gains, instantaneous SNRs, and
//! closed-form outage probabilities.
//!
//! Two models are supported. AWGN has unit power gain on every draw.
//! Rayleigh block fading draws an Exp(1) power gain per transmission frame
//! (constant across the layers of one frame, independent across frames), via
//! the inverse CDF `gain = -ln(u)` of an explicit uniform variate. Working
//! from explicit uniforms makes common-random-numbers coupling across users
//! or SNR grid points possible: for a fixed `u`, the instantaneous SNR is a
//! monotone function of the average SNR.
//!
//! Decoding failure is idealized as capacity outage,
//! `P[log2(1 + snr) < rate]`, with no finite-blocklength correction.

use crate::error::Error;
use crate::math;
use crate::Result;

/// Which fading law the channel follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelKind {
    /// No fading: power gain is exactly 1 on every draw.
    Awgn,
    /// Rayleigh block fading: power gain is Exp(1), unit mean, one draw per
    /// transmission frame.
    RayleighBlock,
}

/// A fading channel with an average SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelModel {
    kind: ChannelKind,
    avg_snr_db: f64,
    avg_snr: f64,
}

/// One fading realization: a power gain and the resulting SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadingDraw {
    /// Power gain |h|^2, dimensionless, >= 0.
    pub gain: f64,
    /// Instantaneous SNR, exactly `gain * avg_snr`.
    pub snr: f64,
}

impl ChannelModel {
    /// Build a channel from an average SNR in decibels.
    ///
    /// `avg_snr_db` must be finite and small enough in magnitude that the
    /// linear ratio `10^(dB/10)` stays positive and finite.
    pub fn new(kind: ChannelKind, avg_snr_db: f64) -> Result<Self> {
        if !avg_snr_db.is_finite() {
            return Err(Error::InvalidAvgSnr { avg_snr_db });
        }
        let avg_snr = math::db_to_linear(avg_snr_db);
        if !avg_snr.is_finite() || avg_snr <= 0.0 {
            return Err(Error::InvalidAvgSnr { avg_snr_db });
        }
        Ok(ChannelModel { kind, avg_snr_db, avg_snr })
    }

    /// Build a channel from a linear average SNR (dimensionless ratio).
    pub fn from_linear(kind: ChannelKind, avg_snr: f64) -> Result<Self> {
        if !avg_snr.is_finite() || avg_snr <= 0.0 {
            return Err(Error::InvalidAvgSnr { avg_snr_db: f64::NAN });
        }
        Ok(ChannelModel { kind, avg_snr_db: math::linear_to_db(avg_snr), avg_snr })
    }

    /// AWGN channel at the given average SNR in dB.
    pub fn awgn(avg_snr_db: f64) -> Result<Self> {
        Self::new(ChannelKind::Awgn, avg_snr_db)
    }

    /// Rayleigh block-fading channel at the given average SNR in dB.
    pub fn rayleigh(avg_snr_db: f64) -> Result<Self> {
        Self::new(ChannelKind::RayleighBlock, avg_snr_db)
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn avg_snr_db(&self) -> f64 {
        self.avg_snr_db
    }

    /// Linear average SNR, `10^(avg_snr_db / 10)`.
    pub fn avg_snr(&self) -> f64 {
        self.avg_snr
    }

    /// Draw a fading realization from an explicit uniform variate.
    ///
    /// AWGN ignores `u` and returns gain 1. Rayleigh maps `u` through the
    /// inverse CDF of Exp(1), `gain = -ln(u)`. Requires `0 < u < 1`.
    pub fn sample_gain(&self, u: f64) -> Result<FadingDraw> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::UniformOutOfRange { u });
        }
        Ok(self.draw(u))
    }

    /// `sample_gain` without the range check, for internal callers whose
    /// uniforms come from [`crate::rng::TrialRng`] (always in (0, 1)).
    pub(crate) fn draw(&self, u: f64) -> FadingDraw {
        let gain = match self.kind {
            ChannelKind::Awgn => 1.0,
            ChannelKind::RayleighBlock => -libm::log(u),
        };
        FadingDraw { gain, snr: gain * self.avg_snr }
    }

    /// Probability that instantaneous capacity falls below `rate`.
    ///
    /// AWGN is deterministic, so the result is 0 or 1. Rayleigh gives the
    /// closed form `1 - exp(-(2^rate - 1) / avg_snr)`.
    pub fn outage_probability(&self, rate: f64) -> Result<f64> {
        if !(rate >= 0.0) {
            return Err(Error::NegativeRate { rate });
        }
        Ok(match self.kind {
            ChannelKind::Awgn => {
                if math::capacity(self.avg_snr) >= rate {
                    0.0
                } else {
                    1.0
                }
            }
            ChannelKind::RayleighBlock => {
                let threshold_gain = (libm::exp2(rate) - 1.0) / self.avg_snr;
                -libm::expm1(-threshold_gain)
            }
        })
    }
}
