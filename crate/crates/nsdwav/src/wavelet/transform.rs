//! Forward and inverse Mallat pyramid with periodic boundary handling.

use crate::error::{Error, Result};
use crate::wavelet::{CoefficientTree, Signal, SignalKind, WaveletBasis};

/// One analysis stage: circular convolution followed by dyadic downsampling.
/// Output index i reads input samples (2i + k) mod n, k over the filter.
fn analyze(input: &[f64], basis: &WaveletBasis) -> (Vec<f64>, Vec<f64>) {
    let n = input.len();
    let h = basis.lowpass();
    let g = basis.highpass();
    let half = n / 2;
    let mut approx = vec![0.0; half];
    let mut detail = vec![0.0; half];
    for i in 0..half {
        let mut a = 0.0;
        let mut d = 0.0;
        for (k, (&hk, &gk)) in h.iter().zip(g).enumerate() {
            let x = input[(2 * i + k) % n];
            a += hk * x;
            d += gk * x;
        }
        approx[i] = a;
        detail[i] = d;
    }
    (approx, detail)
}

/// One synthesis stage, the exact transpose of [`analyze`].
fn synthesize(approx: &[f64], detail: &[f64], basis: &WaveletBasis) -> Vec<f64> {
    let n = 2 * approx.len();
    let h = basis.lowpass();
    let g = basis.highpass();
    let mut out = vec![0.0; n];
    for i in 0..approx.len() {
        for (k, (&hk, &gk)) in h.iter().zip(g).enumerate() {
            out[(2 * i + k) % n] += hk * approx[i] + gk * detail[i];
        }
    }
    out
}

/// Forward periodized DWT down to `coarse_level`.
///
/// The samples are treated as finest-level scaling coefficients and cascaded
/// down stage by stage. Fails with `SignalTooShort` if at any stage the
/// filter is longer than the current period, and `LevelOutOfRange` if
/// `coarse_level` exceeds log2(n).
pub fn dwt(signal: &Signal, basis: &WaveletBasis, coarse_level: usize) -> Result<CoefficientTree> {
    let finest = signal.finest_level();
    if coarse_level > finest {
        return Err(Error::LevelOutOfRange {
            level: coarse_level,
            max: finest,
        });
    }
    let mut details_rev: Vec<Vec<f64>> = Vec::with_capacity(finest - coarse_level);
    let mut approx = signal.samples().to_vec();
    for _ in (coarse_level..finest).rev() {
        if basis.filter_len() > approx.len() {
            return Err(Error::SignalTooShort {
                n: approx.len(),
                filter_len: basis.filter_len(),
            });
        }
        let (a, d) = analyze(&approx, basis);
        details_rev.push(d);
        approx = a;
    }
    details_rev.reverse();
    CoefficientTree::new(coarse_level, finest, approx, details_rev)
}

/// Inverse periodized DWT; exact inverse of [`dwt`] for the same basis.
pub fn idwt(tree: &CoefficientTree, basis: &WaveletBasis) -> Result<Signal> {
    let mut approx = tree.approx().to_vec();
    for level in tree.detail_levels() {
        approx = synthesize(&approx, tree.details(level), basis);
    }
    Signal::new(approx, SignalKind::Fitted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavelet::{make_basis, supported_bases, WaveletFamily};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sig(v: &[f64]) -> Signal {
        Signal::new(v.to_vec(), SignalKind::Observed).unwrap()
    }

    #[test]
    fn haar_constant_two_stage() {
        let basis = make_basis(WaveletFamily::Haar, 1).unwrap();
        let tree = dwt(&sig(&[1.0, 1.0, 1.0, 1.0]), &basis, 0).unwrap();
        assert!((tree.approx()[0] - 2.0).abs() < 1e-12);
        for level in tree.detail_levels() {
            for &d in tree.details(level) {
                assert!(d.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn haar_alternating_single_stage() {
        let basis = make_basis(WaveletFamily::Haar, 1).unwrap();
        let tree = dwt(&sig(&[1.0, -1.0, 1.0, -1.0]), &basis, 1).unwrap();
        assert_eq!(tree.approx(), &[0.0, 0.0]);
        let d = tree.details(1);
        let sqrt2 = std::f64::consts::SQRT_2;
        assert!((d[0] - sqrt2).abs() < 1e-12 && (d[1] - sqrt2).abs() < 1e-12);
    }

    #[test]
    fn zero_stage_pyramid_is_identity() {
        let basis = make_basis(WaveletFamily::Daubechies, 4).unwrap();
        let s = sig(&[3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0]);
        let tree = dwt(&s, &basis, 3).unwrap();
        assert_eq!(tree.approx(), s.samples());
        assert_eq!(tree.detail_levels().len(), 0);
    }

    #[test]
    fn inverse_of_constant_tree() {
        let basis = make_basis(WaveletFamily::Haar, 1).unwrap();
        let tree = CoefficientTree::new(0, 2, vec![2.0], vec![vec![0.0], vec![0.0, 0.0]]).unwrap();
        let s = idwt(&tree, &basis).unwrap();
        for &v in s.samples() {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn all_zero_tree_reconstructs_to_zero() {
        let basis = make_basis(WaveletFamily::Coiflet, 2).unwrap();
        let tree = CoefficientTree::new(4, 6, vec![0.0; 16], vec![vec![0.0; 16], vec![0.0; 32]]).unwrap();
        let s = idwt(&tree, &basis).unwrap();
        assert!(s.samples().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn too_short_for_filter() {
        let basis = make_basis(WaveletFamily::Coiflet, 5).unwrap(); // 30 taps
        let s = sig(&[0.0; 16]);
        assert!(matches!(
            dwt(&s, &basis, 0),
            Err(Error::SignalTooShort { .. })
        ));
    }

    #[test]
    fn level_out_of_range() {
        let basis = make_basis(WaveletFamily::Haar, 1).unwrap();
        assert!(matches!(
            dwt(&sig(&[0.0; 8]), &basis, 4),
            Err(Error::LevelOutOfRange { .. })
        ));
    }

    #[test]
    fn round_trip_and_parseval_all_bases() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for basis in supported_bases() {
            for log_n in 3..=10usize {
                let n = 1 << log_n;
                let samples: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let s = sig(&samples);
                let i0 = basis.min_coarse_level(n);
                if i0 >= log_n {
                    continue;
                }
                let tree = dwt(&s, &basis, i0).unwrap();
                let energy_in: f64 = samples.iter().map(|v| v * v).sum();
                assert!(
                    (tree.energy() - energy_in).abs() <= 1e-10 * energy_in.max(1.0),
                    "{} n={n}: parseval",
                    basis.name()
                );
                let back = idwt(&tree, &basis).unwrap();
                let max_err = back
                    .samples()
                    .iter()
                    .zip(&samples)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max);
                assert!(max_err <= 1e-10, "{} n={n}: max err {max_err}", basis.name());
            }
        }
    }

    #[test]
    fn constant_signal_has_zero_details() {
        for basis in supported_bases() {
            let n = 256;
            let s = sig(&vec![0.7; n]);
            let i0 = basis.min_coarse_level(n);
            let tree = dwt(&s, &basis, i0).unwrap();
            for level in tree.detail_levels() {
                for &d in tree.details(level) {
                    assert!(d.abs() < 1e-10, "{} level {level}: {d}", basis.name());
                }
            }
        }
    }

    #[test]
    fn linearity() {
        let basis = make_basis(WaveletFamily::Daubechies, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 64;
        let a: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let combo: Vec<f64> = a.iter().zip(&b).map(|(x, y)| 2.5 * x - 0.5 * y).collect();
        let ta = dwt(&sig(&a), &basis, 2).unwrap();
        let tb = dwt(&sig(&b), &basis, 2).unwrap();
        let tc = dwt(&sig(&combo), &basis, 2).unwrap();
        for (i, &c) in tc.approx().iter().enumerate() {
            assert!((c - (2.5 * ta.approx()[i] - 0.5 * tb.approx()[i])).abs() < 1e-10);
        }
        for level in tc.detail_levels() {
            for (i, &c) in tc.details(level).iter().enumerate() {
                let expect = 2.5 * ta.details(level)[i] - 0.5 * tb.details(level)[i];
                assert!((c - expect).abs() < 1e-10);
            }
        }
    }
}
