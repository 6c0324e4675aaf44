//! Orthonormal periodized discrete wavelet transform.
//!
//! Filters are fixed tabulated constants (see [`taps`]); the forward and
//! inverse transforms run the Mallat pyramid with circular (periodic)
//! boundary handling, which keeps the transform exactly orthonormal at
//! every level.

mod taps;
mod transform;

pub use transform::{dwt, idwt};

use crate::error::{Error, Result};

/// Supported wavelet families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WaveletFamily {
    Haar,
    Daubechies,
    Coiflet,
}

/// An orthonormal two-channel filter bank realizing a scaling/wavelet pair.
///
/// `lowpass` holds the scaling filter taps h_0..h_{L-1}; `highpass` is
/// derived by the quadrature-mirror rule g_k = (-1)^k h_{L-1-k}.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveletBasis {
    family: WaveletFamily,
    order: u32,
    lowpass: Vec<f64>,
    highpass: Vec<f64>,
}

impl WaveletBasis {
    pub fn family(&self) -> WaveletFamily {
        self.family
    }

    /// Number of vanishing moments of the wavelet.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn lowpass(&self) -> &[f64] {
        &self.lowpass
    }

    pub fn highpass(&self) -> &[f64] {
        &self.highpass
    }

    pub fn filter_len(&self) -> usize {
        self.lowpass.len()
    }

    /// Shortest coarse level this basis can cascade down to for a signal of
    /// length `n`: every pyramid stage must see an input at least as long as
    /// the filter so that taps wrap around the period at most once.
    pub fn min_coarse_level(&self, n: usize) -> usize {
        let mut level = 0;
        while (1usize << (level + 1)) < self.filter_len().max(2) {
            level += 1;
        }
        level.min(n.trailing_zeros() as usize)
    }

    /// Short name in CLI notation: `haar`, `db4`, `coif3`, ...
    pub fn name(&self) -> String {
        match self.family {
            WaveletFamily::Haar => "haar".to_string(),
            WaveletFamily::Daubechies => format!("db{}", self.order),
            WaveletFamily::Coiflet => format!("coif{}", self.order),
        }
    }
}

/// Look up the tabulated filter for `(family, order)`.
///
/// Supported orders: Haar 1, Daubechies 1-10, Coiflet 1-5.
pub fn make_basis(family: WaveletFamily, order: u32) -> Result<WaveletBasis> {
    let lowpass: &[f64] = match (family, order) {
        (WaveletFamily::Haar, 1) => &taps::DB1,
        (WaveletFamily::Daubechies, 1) => &taps::DB1,
        (WaveletFamily::Daubechies, 2) => &taps::DB2,
        (WaveletFamily::Daubechies, 3) => &taps::DB3,
        (WaveletFamily::Daubechies, 4) => &taps::DB4,
        (WaveletFamily::Daubechies, 5) => &taps::DB5,
        (WaveletFamily::Daubechies, 6) => &taps::DB6,
        (WaveletFamily::Daubechies, 7) => &taps::DB7,
        (WaveletFamily::Daubechies, 8) => &taps::DB8,
        (WaveletFamily::Daubechies, 9) => &taps::DB9,
        (WaveletFamily::Daubechies, 10) => &taps::DB10,
        (WaveletFamily::Coiflet, 1) => &taps::COIF1,
        (WaveletFamily::Coiflet, 2) => &taps::COIF2,
        (WaveletFamily::Coiflet, 3) => &taps::COIF3,
        (WaveletFamily::Coiflet, 4) => &taps::COIF4,
        (WaveletFamily::Coiflet, 5) => &taps::COIF5,
        _ => return Err(Error::UnsupportedOrder { family, order }),
    };
    let len = lowpass.len();
    let highpass: Vec<f64> = (0..len)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * lowpass[len - 1 - k]
        })
        .collect();
    Ok(WaveletBasis {
        family,
        order,
        lowpass: lowpass.to_vec(),
        highpass,
    })
}

/// Parse a basis from CLI notation: `haar`, `dbK`, `coifK`.
pub fn parse_basis(name: &str) -> Result<WaveletBasis> {
    let lower = name.to_ascii_lowercase();
    if lower == "haar" {
        return make_basis(WaveletFamily::Haar, 1);
    }
    if let Some(order) = lower.strip_prefix("db") {
        let order = order.parse().unwrap_or(0);
        return make_basis(WaveletFamily::Daubechies, order);
    }
    if let Some(order) = lower.strip_prefix("coif") {
        let order = order.parse().unwrap_or(0);
        return make_basis(WaveletFamily::Coiflet, order);
    }
    Err(Error::UnsupportedOrder {
        family: WaveletFamily::Haar,
        order: 0,
    })
}

/// All `(family, order)` pairs with a tabulated filter.
pub fn supported_bases() -> Vec<WaveletBasis> {
    let mut out = vec![make_basis(WaveletFamily::Haar, 1).unwrap()];
    for order in 1..=10 {
        out.push(make_basis(WaveletFamily::Daubechies, order).unwrap());
    }
    for order in 1..=5 {
        out.push(make_basis(WaveletFamily::Coiflet, order).unwrap());
    }
    out
}

/// What a [`Signal`]'s samples represent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignalKind {
    Observed,
    Truth,
    Fitted,
}

/// `n` equispaced samples on (0, 1]; sample `m` (1-based) sits at
/// x_m = m/n. `n` must be a power of two.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<f64>,
    kind: SignalKind,
}

impl Signal {
    pub fn new(samples: Vec<f64>, kind: SignalKind) -> Result<Self> {
        let n = samples.len();
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo { n });
        }
        Ok(Signal { samples, kind })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn kind(&self) -> SignalKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// log2 of the sample count.
    pub fn finest_level(&self) -> usize {
        self.samples.len().trailing_zeros() as usize
    }

    /// Design point of the 1-based sample index.
    pub fn design_point(&self, m: usize) -> f64 {
        m as f64 / self.samples.len() as f64
    }
}

/// Pyramid output: approximation coefficients at `coarse_level` plus detail
/// coefficients for each level in `coarse_level..finest_level`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTree {
    coarse_level: usize,
    finest_level: usize,
    approx: Vec<f64>,
    /// `details[i]` holds level `coarse_level + i`, of length 2^level.
    details: Vec<Vec<f64>>,
}

impl CoefficientTree {
    pub fn new(coarse_level: usize, finest_level: usize, approx: Vec<f64>, details: Vec<Vec<f64>>) -> Result<Self> {
        if coarse_level > finest_level {
            return Err(Error::LevelOutOfRange {
                level: coarse_level,
                max: finest_level,
            });
        }
        if approx.len() != 1usize << coarse_level {
            return Err(Error::LengthMismatch {
                left: approx.len(),
                right: 1usize << coarse_level,
            });
        }
        if details.len() != finest_level - coarse_level {
            return Err(Error::LengthMismatch {
                left: details.len(),
                right: finest_level - coarse_level,
            });
        }
        for (i, d) in details.iter().enumerate() {
            let expect = 1usize << (coarse_level + i);
            if d.len() != expect {
                return Err(Error::LengthMismatch {
                    left: d.len(),
                    right: expect,
                });
            }
        }
        Ok(CoefficientTree {
            coarse_level,
            finest_level,
            approx,
            details,
        })
    }

    pub fn coarse_level(&self) -> usize {
        self.coarse_level
    }

    pub fn finest_level(&self) -> usize {
        self.finest_level
    }

    pub fn approx(&self) -> &[f64] {
        &self.approx
    }

    /// Detail coefficients at resolution `level`.
    pub fn details(&self, level: usize) -> &[f64] {
        &self.details[level - self.coarse_level]
    }

    pub fn details_mut(&mut self, level: usize) -> &mut [f64] {
        let idx = level - self.coarse_level;
        &mut self.details[idx]
    }

    /// Levels carrying detail coefficients, coarsest first.
    pub fn detail_levels(&self) -> std::ops::Range<usize> {
        self.coarse_level..self.finest_level
    }

    /// Sum of squares over approx and all detail levels.
    pub fn energy(&self) -> f64 {
        let approx: f64 = self.approx.iter().map(|c| c * c).sum();
        let detail: f64 = self.details.iter().flatten().map(|c| c * c).sum();
        approx + detail
    }

    /// Multiply every coefficient by `factor`.
    pub fn scale(&mut self, factor: f64) {
        for c in &mut self.approx {
            *c *= factor;
        }
        for d in &mut self.details {
            for c in d {
                *c *= factor;
            }
        }
    }
}
