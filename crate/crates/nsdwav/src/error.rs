use thiserror::Error;

use crate::wavelet::WaveletFamily;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("no tabulated filter for {family:?} of order {order}")]
    UnsupportedOrder { family: WaveletFamily, order: u32 },

    #[error("signal length {n} is not a power of two")]
    NotPowerOfTwo { n: usize },

    #[error("level {level} outside valid range 0..={max}")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("signal of length {n} too short: filter of length {filter_len} would wrap more than once")]
    SignalTooShort { n: usize, filter_len: usize },

    #[error("block {block} out of range at level {level}")]
    BlockOutOfRange { level: usize, block: usize },

    #[error("pair-mixture noise requires an even length, got {n}")]
    OddLengthForPairModel { n: usize },

    #[error("rho0 = {rho0} outside the open interval (-1, 0)")]
    InvalidRho { rho0: f64 },

    #[error("need n >= {needed}, got {n}")]
    InsufficientLength { n: usize, needed: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("signal is constant; cannot calibrate a signal-to-noise ratio")]
    ConstantSignal,
}

pub type Result<T> = std::result::Result<T, Error>;
