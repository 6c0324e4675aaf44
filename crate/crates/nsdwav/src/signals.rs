//! Deterministic test functions on the unit interval plus SNR calibration.
//!
//! Spikes and Corner follow the shapes used in the block-thresholding
//! literature (Cai 1999): Spikes is a sum of five Gaussian peaks of sharply
//! decreasing width; Corner is smooth except for a kink where the first
//! derivative jumps. The exact constants here are committed as this
//! toolkit's fixed parameterization.

use crate::error::{Error, Result};
use crate::wavelet::{Signal, SignalKind};

/// Built-in test functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestFunction {
    /// Five Gaussian peaks of decreasing width; tests adaptation to
    /// localized features.
    Spikes,
    /// Piecewise parabola with a derivative kink at x = 1/2.
    Corner,
    /// sin(2 pi x): the smooth control for rate experiments.
    SmoothSine,
    /// 64 x^3 (1-x)^3: an infinitely smooth polynomial control.
    Polynomial,
}

/// (location, height, width) of each Spikes peak; width is the Gaussian
/// decay rate in exp(-width (x - location)^2).
pub const SPIKES_PEAKS: [(f64, f64, f64); 5] = [
    (0.23, 0.75, 500.0),
    (0.33, 1.5, 2000.0),
    (0.47, 3.0, 8000.0),
    (0.69, 2.25, 16000.0),
    (0.83, 0.5, 32000.0),
];

impl TestFunction {
    pub fn name(&self) -> &'static str {
        match self {
            TestFunction::Spikes => "spikes",
            TestFunction::Corner => "corner",
            TestFunction::SmoothSine => "smoothsine",
            TestFunction::Polynomial => "polynomial",
        }
    }

    pub fn parse(name: &str) -> Option<TestFunction> {
        match name.to_ascii_lowercase().as_str() {
            "spikes" => Some(TestFunction::Spikes),
            "corner" => Some(TestFunction::Corner),
            "smoothsine" | "sine" => Some(TestFunction::SmoothSine),
            "polynomial" | "poly" => Some(TestFunction::Polynomial),
            _ => None,
        }
    }

    /// Pointwise evaluation on [0, 1].
    pub fn evaluate(&self, x: f64) -> f64 {
        match self {
            TestFunction::Spikes => SPIKES_PEAKS
                .iter()
                .map(|&(loc, height, width)| height * (-width * (x - loc).powi(2)).exp())
                .sum(),
            TestFunction::Corner => {
                if x <= 0.5 {
                    8.0 * x * x
                } else {
                    8.0 * (1.0 - x) * (1.0 - x)
                }
            }
            TestFunction::SmoothSine => (2.0 * std::f64::consts::PI * x).sin(),
            TestFunction::Polynomial => 64.0 * x.powi(3) * (1.0 - x).powi(3),
        }
    }
}

/// Evaluate on the design grid x_m = m/n, m = 1..=n.
pub fn sample(function: TestFunction, n: usize) -> Result<Signal> {
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { n });
    }
    let samples = (1..=n)
        .map(|m| function.evaluate(m as f64 / n as f64))
        .collect();
    Signal::new(samples, SignalKind::Truth)
}

/// Noise scale sigma = sd(truth) / target_snr, with the population-style
/// standard deviation over the grid.
pub fn calibrate_snr(truth: &Signal, target_snr: f64) -> Result<f64> {
    let y = truth.samples();
    let n = y.len() as f64;
    let mean = y.iter().sum::<f64>() / n;
    let var = y.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    if var == 0.0 {
        return Err(Error::ConstantSignal);
    }
    Ok(var.sqrt() / target_snr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_sine_exact() {
        let s = sample(TestFunction::SmoothSine, 64).unwrap();
        for (m, &v) in s.samples().iter().enumerate() {
            let x = (m + 1) as f64 / 64.0;
            assert_eq!(v, (2.0 * std::f64::consts::PI * x).sin());
        }
        assert_eq!(s.kind(), SignalKind::Truth);
    }

    fn strict_local_maxima(y: &[f64]) -> usize {
        (1..y.len() - 1)
            .filter(|&i| y[i] > y[i - 1] && y[i] > y[i + 1])
            .count()
    }

    #[test]
    fn spikes_has_five_peaks() {
        for n in [512usize, 1024, 2048, 4096] {
            let s = sample(TestFunction::Spikes, n).unwrap();
            assert_eq!(strict_local_maxima(s.samples()), 5, "n = {n}");
        }
    }

    #[test]
    fn corner_continuous_with_derivative_kink() {
        for n in [512usize, 1024, 2048, 4096] {
            let s = sample(TestFunction::Corner, n).unwrap();
            let y = s.samples();
            let max_jump = y
                .windows(2)
                .map(|w| (w[1] - w[0]).abs())
                .fold(0.0f64, f64::max);
            // |g'| <= 8 everywhere
            assert!(max_jump <= 9.0 / n as f64, "n = {n}: jump {max_jump}");
            // discrete derivative drops by about 16 across x = 1/2
            let mid = n / 2; // 0-based index of x = 1/2
            let left_slope = (y[mid - 1] - y[mid - 2]) * n as f64;
            let right_slope = (y[mid + 1] - y[mid]) * n as f64;
            assert!(
                (left_slope - right_slope - 16.0).abs() < 0.1,
                "n = {n}: slopes {left_slope} {right_slope}"
            );
        }
    }

    #[test]
    fn grid_consistency_under_refinement() {
        for function in [
            TestFunction::Spikes,
            TestFunction::Corner,
            TestFunction::SmoothSine,
            TestFunction::Polynomial,
        ] {
            let coarse = sample(function, 512).unwrap();
            let fine = sample(function, 1024).unwrap();
            for j in 0..512 {
                let a = coarse.samples()[j];
                let b = fine.samples()[2 * j + 1];
                assert!((a - b).abs() < 1e-12, "{}: index {j}", function.name());
            }
        }
    }

    #[test]
    fn sample_rejects_bad_lengths() {
        assert!(sample(TestFunction::Spikes, 12).is_err());
        assert!(sample(TestFunction::Spikes, 4).is_err());
        assert!(sample(TestFunction::Spikes, 8).is_ok());
    }

    #[test]
    fn calibrate_basic_values() {
        let s = sample(TestFunction::SmoothSine, 1024).unwrap();
        let sigma = calibrate_snr(&s, 4.0).unwrap();
        assert!((sigma - 0.5f64.sqrt() / 4.0).abs() < 1e-10, "{sigma}");
    }

    #[test]
    fn calibrate_homogeneity() {
        let s = sample(TestFunction::Corner, 256).unwrap();
        let doubled: Vec<f64> = s.samples().iter().map(|v| 2.0 * v).collect();
        let d = Signal::new(doubled, SignalKind::Truth).unwrap();
        let a = calibrate_snr(&s, 4.0).unwrap();
        let b = calibrate_snr(&d, 4.0).unwrap();
        assert!((b - 2.0 * a).abs() < 1e-12);
    }

    #[test]
    fn calibrate_rejects_constant() {
        let s = Signal::new(vec![1.0; 16], SignalKind::Truth).unwrap();
        assert!(matches!(calibrate_snr(&s, 4.0), Err(Error::ConstantSignal)));
    }

    #[test]
    fn parse_round_trip() {
        for f in [
            TestFunction::Spikes,
            TestFunction::Corner,
            TestFunction::SmoothSine,
            TestFunction::Polynomial,
        ] {
            assert_eq!(TestFunction::parse(f.name()), Some(f));
        }
        assert_eq!(TestFunction::parse("doppler"), None);
    }
}
