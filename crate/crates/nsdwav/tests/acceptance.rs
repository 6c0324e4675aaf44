//! End-to-end acceptance suite. Each test prints exactly one
//! `ACCEPTANCE k <name>: PASS|FAIL` line summarizing its criterion.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nsdwav::estimators::{
    block_coarse_level, block_length, denoise, empirical_tree, sigma_hat_first_difference,
    sigma_hat_local, term_level_cutoff, universal_threshold, DenoiseConfig, DenoiseMethod,
};
use nsdwav::harness::{rate_from_report, run_risk_experiment, ExperimentConfig};
use nsdwav::noise::{
    cov_decay_profile, generate, supermodular_check, weighted_variance_check, NoiseModel,
};
use nsdwav::signals::TestFunction;
use nsdwav::wavelet::{
    dwt, idwt, make_basis, supported_bases, Signal, SignalKind, WaveletFamily,
};

fn report(criterion: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {criterion} {name}: {} [{detail}]",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} ({name}) failed: {detail}");
}

fn random_signal(rng: &mut ChaCha8Rng, n: usize) -> Signal {
    Signal::new(
        (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect(),
        SignalKind::Observed,
    )
    .unwrap()
}

#[test]
fn criterion_1_transform_exactness() {
    let start = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst_recon = 0.0f64;
    let mut worst_parseval = 0.0f64;
    for basis in supported_bases() {
        for log_n in 3..=12usize {
            let n = 1usize << log_n;
            let coarse = basis.min_coarse_level(n);
            if coarse >= log_n || basis.filter_len() > n {
                continue;
            }
            for _ in 0..100 {
                let s = random_signal(&mut rng, n);
                let tree = dwt(&s, &basis, coarse).unwrap();
                let energy: f64 = s.samples().iter().map(|v| v * v).sum();
                worst_parseval =
                    worst_parseval.max((tree.energy() - energy).abs() / energy.max(1.0));
                let back = idwt(&tree, &basis).unwrap();
                let err = back
                    .samples()
                    .iter()
                    .zip(s.samples())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max);
                worst_recon = worst_recon.max(err);
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        1,
        "transform exactness",
        worst_recon <= 1e-10 && worst_parseval <= 1e-10 && elapsed < 10.0,
        &format!(
            "max reconstruction err {worst_recon:.2e}, max Parseval err {worst_parseval:.2e}, {elapsed:.1}s"
        ),
    );
}

// Explicit Haar basis vectors over n samples: scaling function over the
// level-i block j, and the wavelet (+ on the first half-block, - on the
// second), both unit-norm.
fn haar_phi(n: usize, level: usize, j: usize) -> Vec<f64> {
    let block = n >> level;
    let mut v = vec![0.0; n];
    v[j * block..(j + 1) * block].fill((block as f64).sqrt().recip());
    v
}

fn haar_psi(n: usize, level: usize, j: usize) -> Vec<f64> {
    let block = n >> level;
    let norm = (block as f64).sqrt().recip();
    let mut v = vec![0.0; n];
    let slot = &mut v[j * block..(j + 1) * block];
    slot[..block / 2].fill(norm);
    slot[block / 2..].fill(-norm);
    v
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

// Brute-force denoiser for Haar from explicit basis vectors, mirroring the
// published threshold schedules but sharing no transform code.
fn brute_force_fit(observed: &Signal, method: DenoiseMethod) -> Vec<f64> {
    let n = observed.len();
    let finest = observed.finest_level();
    let scale = (n as f64).sqrt();
    let y: Vec<f64> = observed.samples().iter().map(|v| v / scale).collect();
    let coarse = block_coarse_level(n, 2.0);
    let sigma_sq = sigma_hat_first_difference(observed).unwrap();
    let mut fit = vec![0.0; n];
    for j in 0..1usize << coarse {
        let phi = haar_phi(n, coarse, j);
        let alpha = dot(&y, &phi);
        for m in 0..n {
            fit[m] += alpha * phi[m];
        }
    }
    match method {
        DenoiseMethod::TermByTerm => {
            let lambda0 = universal_threshold(sigma_sq, n);
            let cutoff = term_level_cutoff(n).min(finest);
            for level in coarse..finest {
                for j in 0..1usize << level {
                    let psi = haar_psi(n, level, j);
                    let beta = dot(&y, &psi);
                    if level <= cutoff && beta.abs() > lambda0 {
                        for m in 0..n {
                            fit[m] += beta * psi[m];
                        }
                    }
                }
            }
        }
        DenoiseMethod::Block => {
            let l = block_length(n);
            let mult = nsdwav::estimators::BLOCK_THRESHOLD_MULTIPLIER;
            for level in coarse..finest {
                let per_level = 1usize << level;
                let betas: Vec<f64> = (0..per_level)
                    .map(|j| dot(&y, &haar_psi(n, level, j)))
                    .collect();
                let mut k = 0;
                while k * l < per_level {
                    let lo = k * l;
                    let hi = ((k + 1) * l).min(per_level);
                    let energy: f64 = betas[lo..hi].iter().map(|b| b * b).sum::<f64>() / l as f64;
                    let lambda_sq =
                        mult * sigma_hat_local(observed, level, k, l).unwrap() / n as f64;
                    if energy > lambda_sq {
                        for (j, &beta) in betas.iter().enumerate().take(hi).skip(lo) {
                            let psi = haar_psi(n, level, j);
                            for (f, p) in fit.iter_mut().zip(&psi) {
                                *f += beta * p;
                            }
                        }
                    }
                    k += 1;
                }
            }
        }
    }
    fit.iter().map(|v| v * scale).collect()
}

#[test]
fn criterion_2_hand_oracles() {
    let basis = make_basis(WaveletFamily::Haar, 1).unwrap();
    let mut worst = 0.0f64;

    // pyramid hand oracles
    let tree = dwt(
        &Signal::new(vec![1.0, 1.0, 1.0, 1.0], SignalKind::Observed).unwrap(),
        &basis,
        0,
    )
    .unwrap();
    worst = worst.max((tree.approx()[0] - 2.0).abs());
    for level in tree.detail_levels() {
        for &d in tree.details(level) {
            worst = worst.max(d.abs());
        }
    }
    let tree = dwt(
        &Signal::new(vec![1.0, -1.0, 1.0, -1.0], SignalKind::Observed).unwrap(),
        &basis,
        1,
    )
    .unwrap();
    let sqrt2 = std::f64::consts::SQRT_2;
    worst = worst.max(tree.approx()[0].abs()).max(tree.approx()[1].abs());
    worst = worst.max((tree.details(1)[0] - sqrt2).abs());
    worst = worst.max((tree.details(1)[1] - sqrt2).abs());

    // estimators vs the explicit-basis brute-force oracle
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in [8usize, 16] {
        for _ in 0..25 {
            let observed = random_signal(&mut rng, n);
            // also check the empirical tree against direct inner products
            let coarse = block_coarse_level(n, 2.0);
            let tree = empirical_tree(&observed, &basis, coarse).unwrap();
            let scaled: Vec<f64> = observed
                .samples()
                .iter()
                .map(|v| v / (n as f64).sqrt())
                .collect();
            for level in tree.detail_levels() {
                for (j, &beta) in tree.details(level).iter().enumerate() {
                    worst = worst.max((beta - dot(&scaled, &haar_psi(n, level, j))).abs());
                }
            }
            for method in [DenoiseMethod::TermByTerm, DenoiseMethod::Block] {
                let result = denoise(&observed, &basis, &DenoiseConfig::new(method)).unwrap();
                let oracle = brute_force_fit(&observed, method);
                for (a, b) in result.fitted.samples().iter().zip(&oracle) {
                    worst = worst.max((a - b).abs());
                }
            }
        }
    }
    report(2, "hand oracles", worst <= 1e-10, &format!("max deviation {worst:.2e}"));
}

#[test]
fn criterion_3_schedule_formulas() {
    let mut pass = true;
    let mut detail = String::new();
    let t = universal_threshold(1.0, 1024);
    pass &= (t - 0.116353).abs() <= 1e-6;
    detail.push_str(&format!("lambda0(1,1024)={t:.6}"));
    pass &= term_level_cutoff(1024) == 8;
    pass &= block_coarse_level(1024, 2.0) == 2;
    detail.push_str(&format!(
        ", i1(1024)={}, i0(1024,2)={}",
        term_level_cutoff(1024),
        block_coarse_level(1024, 2.0)
    ));
    let mut bracket_ok = true;
    for log_n in 2..=20u32 {
        let n = 1usize << log_n;
        let i1 = term_level_cutoff(n);
        let x = n as f64 / (n as f64).ln();
        bracket_ok &= 2f64.powi(i1 as i32) >= x * (1.0 - 1e-9);
        bracket_ok &= i1 == 0 || 2f64.powi(i1 as i32 - 1) <= x * (1.0 + 1e-9);
        for s in [0.25, 0.5, 1.0, 2.0, 3.0, 5.0] {
            let i0 = block_coarse_level(n, s);
            let x = (n as f64).powf(1.0 / (2.0 * s + 1.0));
            bracket_ok &= 2f64.powi(i0 as i32) >= x * (1.0 - 1e-9);
            bracket_ok &= i0 == 0 || 2f64.powi(i0 as i32 - 1) <= x * (1.0 + 1e-9);
        }
    }
    pass &= bracket_ok;
    detail.push_str(&format!(", bracketing to 2^20 {}", if bracket_ok { "ok" } else { "violated" }));
    report(3, "schedule formulas", pass, &detail);
}

#[test]
fn criterion_4_sigma_hat_consistency() {
    let start = std::time::Instant::now();
    let n = 4096;
    let model = NoiseModel::IidGaussian { sigma: 1.0 };
    let mut mean = 0.0;
    for rep in 0..100u64 {
        let y = generate(&model, n, 4000 + rep).unwrap();
        mean += sigma_hat_first_difference(&Signal::new(y, SignalKind::Observed).unwrap()).unwrap();
    }
    mean /= 100.0;
    let elapsed = start.elapsed().as_secs_f64();
    report(
        4,
        "sigma-hat consistency",
        (mean - 1.0).abs() <= 0.05 && elapsed < 5.0,
        &format!("mean sigma_hat_sq {mean:.4}, {elapsed:.1}s"),
    );
}

#[test]
fn criterion_5_nsd_noise_validity() {
    let start = std::time::Instant::now();
    let model = NoiseModel::standard_nsd(-0.5);
    let mut pass = true;
    let mut detail = String::new();

    let n = 100_000;
    let x = generate(&model, n, 55).unwrap();
    let within: f64 =
        x.chunks_exact(2).map(|p| p[0] * p[1]).sum::<f64>() / (n / 2) as f64;
    pass &= (within + 0.5).abs() <= 0.02;
    detail.push_str(&format!("within-pair cov {within:.4}"));

    let sup = supermodular_check(&model, 512, 10_000, 56).unwrap();
    pass &= sup.pass();
    detail.push_str(&format!(", supermodular {}", if sup.pass() { "ok" } else { "violated" }));

    let v = cov_decay_profile(&model, 6, 4096, 50, 57).unwrap();
    let tail_max = v[1..].iter().cloned().fold(0.0f64, f64::max);
    pass &= tail_max <= 0.02;
    detail.push_str(&format!(", max v(u>=2) {tail_max:.4}"));

    let weights = vec![(1024f64).sqrt().recip(); 1024];
    let var = weighted_variance_check(&model, &weights, 20_000, 58).unwrap();
    pass &= var.pass && (var.variance_estimate - 0.5).abs() <= 0.02;
    detail.push_str(&format!(", Var(n^-1/2 sum) {:.4}", var.variance_estimate));

    let elapsed = start.elapsed().as_secs_f64();
    pass &= elapsed < 30.0;
    detail.push_str(&format!(", {elapsed:.1}s"));
    report(5, "noise model validity", pass, &detail);
}

fn benchmark_config() -> ExperimentConfig {
    ExperimentConfig {
        signal: TestFunction::Spikes,
        basis: make_basis(WaveletFamily::Haar, 1).unwrap(),
        n_values: vec![1024],
        snr: 4.0,
        noise: NoiseModel::standard_nsd(-0.5),
        methods: vec![DenoiseMethod::TermByTerm, DenoiseMethod::Block],
        denoise: DenoiseConfig::new(DenoiseMethod::Block),
        replicates: 100,
        master_seed: 20_260_824,
    }
}

#[test]
fn criterion_6_benchmark_ordering() {
    let start = std::time::Instant::now();
    let mut pass = true;
    let mut detail = String::new();
    for signal in [TestFunction::Spikes, TestFunction::Corner] {
        let mut config = benchmark_config();
        config.signal = signal;
        let rep = run_risk_experiment(&config).unwrap();
        let term = rep.entry(DenoiseMethod::TermByTerm, 1024).unwrap();
        let block = rep.entry(DenoiseMethod::Block, 1024).unwrap();
        let r = config.replicates as f64;
        // conservative (unpaired) z-score for mean(term) > mean(block)
        let z = (term.mean_mse - block.mean_mse)
            / ((term.sd_mse.powi(2) + block.sd_mse.powi(2)) / r).sqrt();
        let ratio = term.mean_mse / block.mean_mse;
        pass &= z > 1.645 && (1.2..=2.5).contains(&ratio);
        detail.push_str(&format!(
            "{}: term {:.4} block {:.4} ratio {:.2} z {:.1}; ",
            signal.name(),
            term.mean_mse,
            block.mean_mse,
            ratio,
            z
        ));
    }
    let elapsed = start.elapsed().as_secs_f64();
    pass &= elapsed < 120.0;
    detail.push_str(&format!("{elapsed:.1}s"));
    report(6, "benchmark ordering", pass, &detail);
}

#[test]
fn criterion_7_rate_slopes() {
    let start = std::time::Instant::now();
    let mut config = benchmark_config();
    config.signal = TestFunction::SmoothSine;
    config.n_values = vec![256, 512, 1024, 2048, 4096, 8192, 16384];
    config.replicates = 200;
    let report_data = run_risk_experiment(&config).unwrap();
    let fits = rate_from_report(&report_data, &config.methods, 2.0).unwrap();
    let mut pass = true;
    let mut detail = String::new();
    for f in &fits {
        pass &= (f.slope + 0.8).abs() <= 0.15;
        detail.push_str(&format!(
            "{}: slope {:.3} (se {:.3}); ",
            match f.method {
                DenoiseMethod::TermByTerm => "term",
                DenoiseMethod::Block => "block",
            },
            f.slope,
            f.std_err
        ));
    }
    let elapsed = start.elapsed().as_secs_f64();
    pass &= elapsed < 600.0;
    detail.push_str(&format!("target -0.8+/-0.15, {elapsed:.1}s"));
    report(7, "convergence-rate slopes", pass, &detail);
}

#[test]
fn criterion_8_cli_reproducibility() {
    let bin = env!("CARGO_BIN_EXE_nsdwav");
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path();

    // synthetic noisy input for denoise
    let n = 256usize;
    let truth: Vec<f64> = (1..=n)
        .map(|m| TestFunction::Spikes.evaluate(m as f64 / n as f64))
        .collect();
    let eps = generate(&NoiseModel::standard_nsd(-0.5), n, 9).unwrap();
    let mut csv = String::from("x,y\n");
    for m in 0..n {
        csv.push_str(&format!("{},{}\n", (m + 1) as f64 / n as f64, truth[m] + 0.25 * eps[m]));
    }
    std::fs::write(root.join("in.csv"), &csv).unwrap();
    std::fs::write(
        root.join("bench.cfg"),
        "signals = spikes\nwavelet = haar\nn = 256, 512\nsnr = 4\nnoise = nsd\nrho0 = -0.5\nmethods = term, block\ns = 2\nreplicates = 20\nseed = 11\n",
    )
    .unwrap();

    type CliOutputs = (Vec<u8>, Vec<u8>, Vec<u8>, Vec<u8>, Vec<u8>);
    let run = |threads: &str, tag: &str| -> CliOutputs {
        let out_csv = root.join(format!("fit-{tag}.csv"));
        let bench_dir = root.join(format!("bench-{tag}"));
        let common_env = [
            ("NSDWAV_THREADS", threads),
            ("SOURCE_DATE_EPOCH", "1700000000"),
        ];
        let st = Command::new(bin)
            .args(["denoise", "--in"])
            .arg(root.join("in.csv"))
            .arg("--out")
            .arg(&out_csv)
            .args(["--method", "block", "--wavelet", "haar"])
            .envs(common_env)
            .output()
            .unwrap();
        assert!(st.status.success(), "denoise failed: {st:?}");
        let st = Command::new(bin)
            .arg("bench")
            .arg("--config")
            .arg(root.join("bench.cfg"))
            .arg("--out")
            .arg(&bench_dir)
            .envs(common_env)
            .output()
            .unwrap();
        assert!(st.status.success(), "bench failed: {st:?}");
        let nc = Command::new(bin)
            .args(["noisecheck", "--rho0", "-0.5", "--replicates", "2000", "--seed", "5"])
            .envs(common_env)
            .output()
            .unwrap();
        assert!(nc.status.success(), "noisecheck failed: {nc:?}");
        (
            std::fs::read(&out_csv).unwrap(),
            std::fs::read(format!("{}.manifest", out_csv.display())).unwrap(),
            std::fs::read(bench_dir.join("risk.csv")).unwrap(),
            std::fs::read(bench_dir.join("rates.csv")).unwrap(),
            nc.stdout,
        )
    };

    let a = run("1", "a");
    let b = run("4", "b");
    let c = run("0", "c");
    // manifests embed the output path, which differs per tag by design;
    // compare everything else byte for byte and manifests modulo that line
    let strip_out = |m: &[u8]| -> Vec<u8> {
        String::from_utf8_lossy(m)
            .lines()
            .filter(|l| !l.starts_with("output ="))
            .collect::<Vec<_>>()
            .join("\n")
            .into_bytes()
    };
    let pass = a.0 == b.0
        && b.0 == c.0
        && strip_out(&a.1) == strip_out(&b.1)
        && strip_out(&b.1) == strip_out(&c.1)
        && a.2 == b.2
        && b.2 == c.2
        && a.3 == b.3
        && b.3 == c.3
        && a.4 == b.4
        && b.4 == c.4;
    report(
        8,
        "CLI reproducibility",
        pass,
        "denoise/bench/noisecheck outputs byte-identical across runs and thread counts",
    );
}
