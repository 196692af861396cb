//! Core algorithms for layered semantic transmission over fading channels.
//!
//! A source signal is decomposed into ordered coefficient layers by an
//! orthonormal multiresolution codec. The layers are sent simultaneously with
//! superposition coding; a receiver peels them off in order with successive
//! interference cancellation, decoding as many as its instantaneous channel
//! allows, and reconstructs from whatever prefix it got. Reconstruction error
//! is therefore a nonincreasing function of the decoded prefix length, and a
//! user with a better channel never does worse than one with a poorer channel
//! on the same fading draw.
//!
//! The crate also models K-of-M modality diversity: M encodings cross
//! independent fading channels and recovery succeeds when any K arrive.
//!
//! Modules:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`channel`] | AWGN / Rayleigh block-fading gains and outage probability |
//! | [`superposition`] | Layer plans, per-layer SINR, decodable-prefix logic |
//! | [`codec`] | Signals, Haar layer decomposition, distortion profiles |
//! | [`broadcast`] | End-to-end trials, distortion curves, multi-user reports |
//! | [`diversity`] | K-of-M recovery probability, closed form and simulated |
//! | [`rng`] | Counter-based generator behind every Monte-Carlo trial |
//!
//! The crate is `no_std` (with `alloc`); all floating-point transcendentals
//! come from `libm`. Everything is deterministic: Monte-Carlo operations take
//! an explicit seed and derive per-trial sub-streams from it, so results are
//! bit-identical no matter how trials are partitioned across workers.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod broadcast;
pub mod channel;
pub mod codec;
pub mod diversity;
pub mod error;
pub mod rng;
pub mod superposition;

pub use broadcast::{TrialOutcome, UserProfile, UserReport};
pub use channel::{ChannelKind, ChannelModel, FadingDraw};
pub use codec::{DistortionProfile, PromptSet, Signal};
pub use diversity::DiversityConfig;
pub use error::Error;
pub use superposition::LayerPlan;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

pub(crate) mod math {
    /// 10^(db/10), the linear power ratio for a decibel value.
    pub fn db_to_linear(db: f64) -> f64 {
        libm::pow(10.0, db / 10.0)
    }

    /// 10·log10(x), the decibel value of a linear power ratio.
    pub fn linear_to_db(x: f64) -> f64 {
        10.0 * libm::log10(x)
    }

    /// Shannon capacity log2(1 + sinr) in bits per channel use.
    ///
    /// Uses log1p so tiny SINRs keep full precision.
    pub fn capacity(sinr: f64) -> f64 {
        if sinr.is_infinite() {
            return f64::INFINITY;
        }
        libm::log1p(sinr) / core::f64::consts::LN_2
    }
}
