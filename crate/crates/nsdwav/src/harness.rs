//! Monte Carlo risk experiments and empirical convergence-rate estimation.
//!
//! Each replicate adds freshly seeded noise to a fixed truth signal, runs
//! every configured denoiser on the same observation, and records the mean
//! squared error. Replicates run in parallel (capped by the
//! `NSDWAV_THREADS` environment variable, 0 or unset = automatic), with
//! per-replicate seeds derived from the master seed and a fixed-order
//! reduction, so reports are byte-identical across thread counts.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::estimators::{denoise, DenoiseConfig, DenoiseMethod};
use crate::noise::{generate, NoiseModel};
use crate::signals::{calibrate_snr, sample, TestFunction};
use crate::wavelet::{Signal, SignalKind, WaveletBasis};

/// Full description of one Monte Carlo risk experiment.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub signal: TestFunction,
    pub basis: WaveletBasis,
    pub n_values: Vec<usize>,
    /// Signal-to-noise ratio sd(truth)/sd(noise); infinite means noiseless.
    pub snr: f64,
    /// Dependence structure of the noise; its marginal scale is overridden
    /// by the SNR calibration.
    pub noise: NoiseModel,
    pub methods: Vec<DenoiseMethod>,
    pub denoise: DenoiseConfig,
    pub replicates: usize,
    pub master_seed: u64,
}

/// Aggregated risk for one (method, n) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct RiskEntry {
    pub method: DenoiseMethod,
    pub n: usize,
    pub mean_mse: f64,
    pub sd_mse: f64,
    pub replicates: usize,
    pub mean_threshold: f64,
    pub mean_sigma_hat_sq: f64,
    /// Noise scale used for this n (from the SNR calibration).
    pub sigma: f64,
}

/// Monte Carlo summary over all (method, n) cells.
#[derive(Debug, Clone, PartialEq)]
pub struct RiskReport {
    pub entries: Vec<RiskEntry>,
    pub master_seed: u64,
}

impl RiskReport {
    pub fn entry(&self, method: DenoiseMethod, n: usize) -> Option<&RiskEntry> {
        self.entries.iter().find(|e| e.method == method && e.n == n)
    }
}

/// Grid-average squared error n^{-1} sum (fitted_m - truth_m)^2.
pub fn mse(fitted: &Signal, truth: &Signal) -> Result<f64> {
    if fitted.len() != truth.len() {
        return Err(Error::LengthMismatch {
            left: fitted.len(),
            right: truth.len(),
        });
    }
    Ok(fitted
        .samples()
        .iter()
        .zip(truth.samples())
        .map(|(a, b)| (a - b).powi(2))
        .sum::<f64>()
        / fitted.len() as f64)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for one replicate at one sample size.
pub fn replicate_seed(master_seed: u64, n: usize, replicate: usize) -> u64 {
    splitmix64(master_seed ^ splitmix64(n as u64) ^ splitmix64(0x5EED ^ replicate as u64))
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let threads = std::env::var("NSDWAV_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|_| Error::InsufficientLength { n: 0, needed: 1 })
}

/// Run the configured experiment. Deterministic given the config,
/// independent of thread count.
pub fn run_risk_experiment(config: &ExperimentConfig) -> Result<RiskReport> {
    if config.n_values.is_empty() || config.methods.is_empty() || config.replicates == 0 {
        return Err(Error::InsufficientLength { n: 0, needed: 1 });
    }
    let pool = thread_pool()?;
    let mut entries = Vec::new();
    for &n in &config.n_values {
        let truth = sample(config.signal, n)?;
        let sigma = if config.snr.is_finite() {
            calibrate_snr(&truth, config.snr)?
        } else {
            0.0
        };
        // the generator's own marginal scale is normalized away so sigma
        // alone sets the noise level
        let marginal_sd = config.noise.population_sigma_sq().sqrt();
        // per replicate, per method: (mse, threshold, sigma_hat_sq)
        let per_rep: Result<Vec<Vec<(f64, f64, f64)>>> = pool.install(|| {
            (0..config.replicates)
                .into_par_iter()
                .map(|rep| {
                    let seed = replicate_seed(config.master_seed, n, rep);
                    let eps = generate(&config.noise, n, seed)?;
                    let observed: Vec<f64> = truth
                        .samples()
                        .iter()
                        .zip(&eps)
                        .map(|(g, e)| g + sigma * e / marginal_sd)
                        .collect();
                    let observed = Signal::new(observed, SignalKind::Observed)?;
                    config
                        .methods
                        .iter()
                        .map(|&method| {
                            let mut dc = config.denoise.clone();
                            dc.method = method;
                            let result = denoise(&observed, &config.basis, &dc)?;
                            Ok((
                                mse(&result.fitted, &truth)?,
                                result.threshold_used,
                                result.sigma_hat_sq,
                            ))
                        })
                        .collect()
                })
                .collect()
        });
        let per_rep = per_rep?;
        for (mi, &method) in config.methods.iter().enumerate() {
            let r = config.replicates as f64;
            let mean_mse = per_rep.iter().map(|row| row[mi].0).sum::<f64>() / r;
            let var = per_rep
                .iter()
                .map(|row| (row[mi].0 - mean_mse).powi(2))
                .sum::<f64>()
                / (r - 1.0).max(1.0);
            entries.push(RiskEntry {
                method,
                n,
                mean_mse,
                sd_mse: var.sqrt(),
                replicates: config.replicates,
                mean_threshold: per_rep.iter().map(|row| row[mi].1).sum::<f64>() / r,
                mean_sigma_hat_sq: per_rep.iter().map(|row| row[mi].2).sum::<f64>() / r,
                sigma,
            });
        }
    }
    Ok(RiskReport {
        entries,
        master_seed: config.master_seed,
    })
}

/// Least-squares line fit; returns (slope, intercept, slope standard error).
pub fn fit_line(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    let k = xs.len();
    if k < 2 {
        return Err(Error::InsufficientLength { n: k, needed: 2 });
    }
    let kf = k as f64;
    let mx = xs.iter().sum::<f64>() / kf;
    let my = ys.iter().sum::<f64>() / kf;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum();
    let se = if k > 2 {
        (rss / (kf - 2.0) / sxx).sqrt()
    } else {
        f64::NAN
    };
    Ok((slope, intercept, se))
}

/// Fitted convergence rate of one method.
#[derive(Debug, Clone, PartialEq)]
pub struct RateFit {
    pub method: DenoiseMethod,
    pub slope: f64,
    pub intercept: f64,
    pub std_err: f64,
    /// The minimax exponent -2s/(2s+1) implied by the configured s.
    pub theory_slope: f64,
}

/// Rate-regression covariate: ln(n / ln n) for the term-by-term method
/// (whose risk carries the log factor), ln n for block.
pub fn rate_covariate(method: DenoiseMethod, n: usize) -> f64 {
    let nf = n as f64;
    match method {
        DenoiseMethod::TermByTerm => (nf / nf.ln()).ln(),
        DenoiseMethod::Block => nf.ln(),
    }
}

/// Fit log(mean MSE) against the per-method rate covariate from an already
/// computed report.
pub fn rate_from_report(
    report: &RiskReport,
    methods: &[DenoiseMethod],
    smoothness_s: f64,
) -> Result<Vec<RateFit>> {
    let mut fits = Vec::new();
    for &method in methods {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for entry in report.entries.iter().filter(|e| e.method == method) {
            xs.push(rate_covariate(method, entry.n));
            ys.push(entry.mean_mse.ln());
        }
        let (slope, intercept, std_err) = fit_line(&xs, &ys)?;
        fits.push(RateFit {
            method,
            slope,
            intercept,
            std_err,
            theory_slope: -2.0 * smoothness_s / (2.0 * smoothness_s + 1.0),
        });
    }
    Ok(fits)
}

/// Run the experiment across its n grid and fit per-method rate slopes.
pub fn empirical_rate(config: &ExperimentConfig) -> Result<Vec<RateFit>> {
    if config.n_values.len() < 2 {
        return Err(Error::InsufficientLength {
            n: config.n_values.len(),
            needed: 2,
        });
    }
    let report = run_risk_experiment(config)?;
    rate_from_report(&report, &config.methods, config.denoise.smoothness_s)
}
