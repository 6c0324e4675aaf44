//! Command-line front end: denoise CSV signals, run Monte Carlo benchmarks
//! from config files, and check the dependence structure of the noise
//! models.
//!
//! Exit codes: 0 success (and all checks passed), 1 usage/config error,
//! 2 data error or failed checks, 3 internal invariant violation.

mod csvio;
mod kv;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nsdwav::estimators::{
    DenoiseConfig, DenoiseMethod, SigmaEstimator, BLOCK_THRESHOLD_MULTIPLIER,
};
use nsdwav::harness::{
    mse, rate_from_report, replicate_seed, run_risk_experiment, ExperimentConfig, RiskReport,
};
use nsdwav::noise::{
    cov_decay_profile, generate, supermodular_check, weighted_variance_check, NoiseModel,
};
use nsdwav::signals::{calibrate_snr, sample, TestFunction};
use nsdwav::wavelet::{parse_basis, Signal, SignalKind, WaveletBasis};

#[derive(Parser)]
#[command(name = "nsdwav", version, about = "Wavelet denoising with dependent-noise diagnostics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Denoise a two-column CSV signal.
    Denoise(DenoiseArgs),
    /// Run a Monte Carlo risk benchmark from a config file.
    Bench(BenchArgs),
    /// Check the noise model's dependence structure.
    Noisecheck(NoisecheckArgs),
}

#[derive(Args)]
struct DenoiseArgs {
    /// Input CSV with header and columns x,y.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output CSV path; a manifest is written beside it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Estimator: term | block.
    #[arg(long)]
    method: Option<String>,
    /// Wavelet: haar | dbK (K=1..10) | coifK (K=1..5).
    #[arg(long, default_value = "haar")]
    wavelet: String,
    /// Assumed regularity s (sets the coarse level).
    #[arg(long, default_value_t = 2.0)]
    s: f64,
    /// Optional truth CSV; prints the mean squared error against it.
    #[arg(long)]
    truth: Option<PathBuf>,
    /// Fixed threshold override (lambda0 for term, lambda^2 for block).
    #[arg(long)]
    threshold: Option<f64>,
    /// Multiplier on the data-driven block threshold.
    #[arg(long, default_value_t = BLOCK_THRESHOLD_MULTIPLIER)]
    block_multiplier: f64,
    /// Block noise estimate: local | global.
    #[arg(long, default_value = "local")]
    sigma_estimator: String,
    /// Coarse level override.
    #[arg(long)]
    coarse_level: Option<usize>,
    /// Re-run a previously written manifest (all other flags ignored).
    #[arg(long)]
    manifest: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Experiment config file (flat `key = value` format).
    #[arg(long)]
    config: PathBuf,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
    /// Also emit one SVG figure per signal.
    #[arg(long)]
    plot: bool,
    /// Override the config's replicate count.
    #[arg(long)]
    replicates: Option<usize>,
    /// Override the config's master seed.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct NoisecheckArgs {
    /// Within-pair correlation, must lie in (-1, 0).
    #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
    rho0: f64,
    #[arg(long, default_value_t = 1.0)]
    sigma1sq: f64,
    #[arg(long, default_value_t = 9.0)]
    sigma2sq: f64,
    /// Sequence length for the Monte Carlo checks.
    #[arg(long, default_value_t = 1024)]
    n: usize,
    /// Largest covariance-tail index reported.
    #[arg(long, default_value_t = 8)]
    umax: usize,
    #[arg(long, default_value_t = 10_000)]
    replicates: usize,
    #[arg(long, default_value_t = 20_260_824)]
    seed: u64,
}

struct CliError {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> CliError {
    CliError { code: 1, message: message.to_string() }
}

fn data(message: impl ToString) -> CliError {
    CliError { code: 2, message: message.to_string() }
}

fn internal(message: impl ToString) -> CliError {
    CliError { code: 3, message: message.to_string() }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help/--version land here with a zero-exit display request
            let benign = err.use_stderr();
            let _ = err.print();
            return if benign { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Denoise(args) => cmd_denoise(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Noisecheck(args) => cmd_noisecheck(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn timestamp() -> u64 {
    // SOURCE_DATE_EPOCH (the reproducible-builds convention) pins the
    // manifest timestamp for byte-identical reruns.
    std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or_else(|| {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        })
}

fn parse_method(name: &str) -> Result<DenoiseMethod, CliError> {
    match name.to_ascii_lowercase().as_str() {
        "term" | "termbyterm" | "term-by-term" => Ok(DenoiseMethod::TermByTerm),
        "block" => Ok(DenoiseMethod::Block),
        other => Err(usage(format!("unknown method `{other}` (expected term|block)"))),
    }
}

fn method_name(method: DenoiseMethod) -> &'static str {
    match method {
        DenoiseMethod::TermByTerm => "term",
        DenoiseMethod::Block => "block",
    }
}

fn parse_sigma_estimator(name: &str) -> Result<SigmaEstimator, CliError> {
    match name.to_ascii_lowercase().as_str() {
        "local" => Ok(SigmaEstimator::LocalBlock),
        "global" | "firstdifference" | "first-difference" => Ok(SigmaEstimator::FirstDifference),
        other => Err(usage(format!(
            "unknown sigma estimator `{other}` (expected local|global)"
        ))),
    }
}

fn wavelet(name: &str) -> Result<WaveletBasis, CliError> {
    parse_basis(name).map_err(|_| {
        usage(format!(
            "unsupported wavelet `{name}` (expected haar, db1..db10, or coif1..coif5)"
        ))
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| data(format!("cannot write {}: {e}", path.display())))
}

// ---------------------------------------------------------------- denoise

struct DenoiseSettings {
    input: PathBuf,
    output: PathBuf,
    truth: Option<PathBuf>,
    method: DenoiseMethod,
    wavelet: String,
    s: f64,
    sigma_estimator: SigmaEstimator,
    block_multiplier: f64,
    threshold: Option<f64>,
    coarse_level: Option<usize>,
}

fn settings_from_args(args: &DenoiseArgs) -> Result<DenoiseSettings, CliError> {
    Ok(DenoiseSettings {
        input: args.input.clone().ok_or_else(|| usage("--in is required"))?,
        output: args.out.clone().ok_or_else(|| usage("--out is required"))?,
        truth: args.truth.clone(),
        method: parse_method(args.method.as_deref().ok_or_else(|| usage("--method is required"))?)?,
        wavelet: args.wavelet.clone(),
        s: args.s,
        sigma_estimator: parse_sigma_estimator(&args.sigma_estimator)?,
        block_multiplier: args.block_multiplier,
        threshold: args.threshold,
        coarse_level: args.coarse_level,
    })
}

fn settings_from_manifest(path: &Path) -> Result<DenoiseSettings, CliError> {
    let kvs = kv::KvFile::load(path).map_err(usage)?;
    let origin = path.display().to_string();
    let need = |key: &str| -> Result<String, CliError> {
        kvs.get(key)
            .map(str::to_string)
            .ok_or_else(|| usage(format!("{origin}: manifest is missing field `{key}`")))
    };
    if kvs.get("command").unwrap_or("") != "denoise" {
        return Err(usage(format!("{origin}: not a denoise manifest")));
    }
    Ok(DenoiseSettings {
        input: PathBuf::from(need("input")?),
        output: PathBuf::from(need("output")?),
        truth: kvs.get("truth").map(PathBuf::from),
        method: parse_method(&need("method")?)?,
        wavelet: need("wavelet")?,
        s: kvs.parsed("s", &origin).map_err(usage)?.unwrap_or(2.0),
        sigma_estimator: parse_sigma_estimator(
            kvs.get("sigma_estimator").unwrap_or("local"),
        )?,
        block_multiplier: kvs
            .parsed("block_multiplier", &origin)
            .map_err(usage)?
            .unwrap_or(BLOCK_THRESHOLD_MULTIPLIER),
        threshold: kvs.parsed("threshold", &origin).map_err(usage)?,
        coarse_level: kvs.parsed("coarse_level", &origin).map_err(usage)?,
    })
}

fn cmd_denoise(args: DenoiseArgs) -> Result<u8, CliError> {
    let settings = match &args.manifest {
        Some(path) => settings_from_manifest(path)?,
        None => settings_from_args(&args)?,
    };
    let basis = wavelet(&settings.wavelet)?;
    let rows = csvio::read_xy(&settings.input).map_err(data)?;
    let ys: Vec<f64> = rows.iter().map(|&(_, y)| y).collect();
    let observed = Signal::new(ys, SignalKind::Observed)
        .map_err(|e| data(format!("{}: {e}", settings.input.display())))?;
    let mut config = DenoiseConfig::new(settings.method);
    config.smoothness_s = settings.s;
    config.sigma_estimator = settings.sigma_estimator;
    config.block_threshold_multiplier = settings.block_multiplier;
    config.threshold_override = settings.threshold;
    config.coarse_level_override = settings.coarse_level;
    let result = nsdwav::estimators::denoise(&observed, &basis, &config)
        .map_err(|e| data(e.to_string()))?;

    let fitted_rows: Vec<(f64, f64)> = rows
        .iter()
        .zip(result.fitted.samples())
        .map(|(&(x, _), &f)| (x, f))
        .collect();
    write_file(&settings.output, &csvio::format_xy(("x", "fitted"), &fitted_rows))?;

    let mut manifest = kv::KvFile::default();
    manifest.set("command", "denoise");
    manifest.set("version", env!("CARGO_PKG_VERSION"));
    manifest.set("timestamp", timestamp());
    manifest.set("input", settings.input.display());
    manifest.set("output", settings.output.display());
    if let Some(truth) = &settings.truth {
        manifest.set("truth", truth.display());
    }
    manifest.set("method", method_name(settings.method));
    manifest.set("wavelet", basis.name());
    manifest.set("s", settings.s);
    manifest.set(
        "sigma_estimator",
        match settings.sigma_estimator {
            SigmaEstimator::LocalBlock => "local",
            SigmaEstimator::FirstDifference => "global",
        },
    );
    manifest.set("block_multiplier", settings.block_multiplier);
    if let Some(t) = settings.threshold {
        manifest.set("threshold", t);
    }
    if let Some(l) = settings.coarse_level {
        manifest.set("coarse_level", l);
    }
    let manifest_path = PathBuf::from(format!("{}.manifest", settings.output.display()));
    write_file(&manifest_path, &manifest.render())?;

    println!(
        "n={} method={} wavelet={} levels={}..{} threshold={} sigma_hat_sq={} kept={}",
        observed.len(),
        method_name(settings.method),
        basis.name(),
        result.levels.0,
        result.levels.1,
        csvio::fmt_num(result.threshold_used),
        csvio::fmt_num(result.sigma_hat_sq),
        result.kept_detail_count
    );
    if let Some(truth_path) = &settings.truth {
        let truth_rows = csvio::read_xy(truth_path).map_err(data)?;
        let truth = Signal::new(
            truth_rows.iter().map(|&(_, y)| y).collect(),
            SignalKind::Truth,
        )
        .map_err(|e| data(format!("{}: {e}", truth_path.display())))?;
        let err = mse(&result.fitted, &truth).map_err(|e| data(e.to_string()))?;
        println!("mse={}", csvio::fmt_num(err));
    }
    Ok(0)
}

// ------------------------------------------------------------------ bench

struct BenchPlan {
    signals: Vec<TestFunction>,
    config: ExperimentConfig,
}

fn parse_bool(value: &str, origin: &str, key: &str) -> Result<bool, CliError> {
    match value.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => Err(usage(format!("{origin}: field `{key}` expects a boolean, got `{other}`"))),
    }
}

fn bench_plan(path: &Path, args: &BenchArgs) -> Result<BenchPlan, CliError> {
    let kvs = kv::KvFile::load(path).map_err(usage)?;
    let origin = path.display().to_string();
    let signals_raw = kvs
        .get("signals")
        .or_else(|| kvs.get("signal"))
        .ok_or_else(|| usage(format!("{origin}: missing field `signals`")))?;
    let mut signals = Vec::new();
    for name in signals_raw.split(',') {
        let name = name.trim();
        signals.push(TestFunction::parse(name).ok_or_else(|| {
            usage(format!("{origin}: unknown signal `{name}` (spikes|corner|smoothsine|polynomial)"))
        })?);
    }
    let n_raw = kvs
        .get("n")
        .or_else(|| kvs.get("n_values"))
        .ok_or_else(|| usage(format!("{origin}: missing field `n`")))?;
    let mut n_values = Vec::new();
    for tok in n_raw.split(',') {
        let n: usize = tok
            .trim()
            .parse()
            .map_err(|_| usage(format!("{origin}: field `n` has malformed value `{tok}`")))?;
        n_values.push(n);
    }
    let methods_raw = kvs.get("methods").unwrap_or("term,block");
    let mut methods = Vec::new();
    for tok in methods_raw.split(',') {
        methods.push(parse_method(tok.trim())?);
    }
    let noise = match kvs.get("noise").unwrap_or("nsd").to_ascii_lowercase().as_str() {
        "iid" => NoiseModel::IidGaussian { sigma: 1.0 },
        "nsd" => NoiseModel::NsdPairMixture {
            rho0: kvs.parsed("rho0", &origin).map_err(usage)?.unwrap_or(-0.5),
            sigma1_sq: kvs.parsed("sigma1sq", &origin).map_err(usage)?.unwrap_or(1.0),
            sigma2_sq: kvs.parsed("sigma2sq", &origin).map_err(usage)?.unwrap_or(9.0),
            standardize: match kvs.get("standardize") {
                Some(v) => parse_bool(v, &origin, "standardize")?,
                None => true,
            },
        },
        other => return Err(usage(format!("{origin}: unknown noise model `{other}` (iid|nsd)"))),
    };
    let mut denoise = DenoiseConfig::new(DenoiseMethod::Block);
    denoise.smoothness_s = kvs.parsed("s", &origin).map_err(usage)?.unwrap_or(2.0);
    denoise.sigma_estimator =
        parse_sigma_estimator(kvs.get("sigma_estimator").unwrap_or("local"))?;
    denoise.block_threshold_multiplier = kvs
        .parsed("block_multiplier", &origin)
        .map_err(usage)?
        .unwrap_or(BLOCK_THRESHOLD_MULTIPLIER);
    denoise.threshold_override = kvs.parsed("threshold", &origin).map_err(usage)?;
    denoise.coarse_level_override = kvs.parsed("coarse_level", &origin).map_err(usage)?;
    let config = ExperimentConfig {
        signal: signals[0],
        basis: wavelet(kvs.get("wavelet").unwrap_or("haar"))?,
        n_values,
        snr: kvs.parsed("snr", &origin).map_err(usage)?.unwrap_or(4.0),
        noise,
        methods,
        denoise,
        replicates: args
            .replicates
            .or(kvs.parsed("replicates", &origin).map_err(usage)?)
            .unwrap_or(100),
        master_seed: args
            .seed
            .or(kvs.parsed("seed", &origin).map_err(usage)?)
            .unwrap_or(20_260_824),
    };
    Ok(BenchPlan { signals, config })
}

fn render_bench_manifest(plan: &BenchPlan, args: &BenchArgs) -> String {
    let mut m = kv::KvFile::default();
    let c = &plan.config;
    m.set("command", "bench");
    m.set("version", env!("CARGO_PKG_VERSION"));
    m.set("timestamp", timestamp());
    m.set("config", args.config.display());
    m.set("out", args.out.display());
    m.set(
        "signals",
        plan.signals.iter().map(|s| s.name()).collect::<Vec<_>>().join(","),
    );
    m.set("wavelet", c.basis.name());
    m.set(
        "n",
        c.n_values.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","),
    );
    m.set("snr", c.snr);
    match c.noise {
        NoiseModel::IidGaussian { .. } => m.set("noise", "iid"),
        NoiseModel::NsdPairMixture { rho0, sigma1_sq, sigma2_sq, standardize } => {
            m.set("noise", "nsd");
            m.set("rho0", rho0);
            m.set("sigma1sq", sigma1_sq);
            m.set("sigma2sq", sigma2_sq);
            m.set("standardize", standardize);
        }
    }
    m.set(
        "methods",
        c.methods.iter().map(|&m| method_name(m)).collect::<Vec<_>>().join(","),
    );
    m.set("s", c.denoise.smoothness_s);
    m.set(
        "sigma_estimator",
        match c.denoise.sigma_estimator {
            SigmaEstimator::LocalBlock => "local",
            SigmaEstimator::FirstDifference => "global",
        },
    );
    m.set("block_multiplier", c.denoise.block_threshold_multiplier);
    m.set("replicates", c.replicates);
    m.set("seed", c.master_seed);
    m.set("plot", args.plot);
    m.render()
}

fn bench_plot(
    signal: TestFunction,
    config: &ExperimentConfig,
    report: &RiskReport,
) -> Result<String, CliError> {
    let n = *config.n_values.iter().max().unwrap();
    let truth = sample(signal, n).map_err(|e| internal(e.to_string()))?;
    let sigma = if config.snr.is_finite() {
        calibrate_snr(&truth, config.snr).map_err(|e| internal(e.to_string()))?
    } else {
        0.0
    };
    let marginal_sd = config.noise.population_sigma_sq().sqrt();
    let eps = generate(&config.noise, n, replicate_seed(config.master_seed, n, 0))
        .map_err(|e| internal(e.to_string()))?;
    let observed_samples: Vec<f64> = truth
        .samples()
        .iter()
        .zip(&eps)
        .map(|(g, e)| g + sigma * e / marginal_sd)
        .collect();
    let observed = Signal::new(observed_samples.clone(), SignalKind::Observed)
        .map_err(|e| internal(e.to_string()))?;

    let mut recon_series = vec![svg::LineSeries {
        label: "truth".to_string(),
        color: "#222222",
        ys: truth.samples().to_vec(),
    }];
    let colors = ["#c44e52", "#4878a8"];
    for (i, &method) in config.methods.iter().enumerate() {
        let mut dc = config.denoise.clone();
        dc.method = method;
        let result = nsdwav::estimators::denoise(&observed, &config.basis, &dc)
            .map_err(|e| internal(e.to_string()))?;
        recon_series.push(svg::LineSeries {
            label: method_name(method).to_string(),
            color: colors[i % colors.len()],
            ys: result.fitted.samples().to_vec(),
        });
    }
    let mut bar_labels = Vec::new();
    let mut bar_values = Vec::new();
    for entry in report.entries.iter().filter(|e| e.n == n) {
        bar_labels.push(format!("{} (n={})", method_name(entry.method), entry.n));
        bar_values.push(entry.mean_mse);
    }
    Ok(svg::figure(
        &format!("{} benchmark (n = {n}, replicate 0 shown)", signal.name()),
        &[
            svg::Panel::Lines {
                title: "observed".to_string(),
                series: vec![svg::LineSeries {
                    label: "observed".to_string(),
                    color: "#888888",
                    ys: observed_samples,
                }],
            },
            svg::Panel::Lines {
                title: "reconstructions".to_string(),
                series: recon_series,
            },
            svg::Panel::Bars {
                title: "mean MSE".to_string(),
                labels: bar_labels,
                values: bar_values,
            },
        ],
    ))
}

fn cmd_bench(args: BenchArgs) -> Result<u8, CliError> {
    let plan = bench_plan(&args.config, &args)?;
    std::fs::create_dir_all(&args.out)
        .map_err(|e| data(format!("cannot create {}: {e}", args.out.display())))?;

    let mut risk_csv = String::from(
        "signal,method,n,mean_mse,sd_mse,replicates,mean_threshold,mean_sigma_hat_sq,sigma,seed\n",
    );
    let mut report_txt = String::new();
    let mut rates_csv =
        String::from("signal,method,slope,std_err,intercept,theory_slope\n");
    let mut any_rates = false;

    for &signal in &plan.signals {
        let mut config = plan.config.clone();
        config.signal = signal;
        let report = run_risk_experiment(&config).map_err(|e| data(e.to_string()))?;
        for e in &report.entries {
            risk_csv.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                signal.name(),
                method_name(e.method),
                e.n,
                csvio::fmt_num(e.mean_mse),
                csvio::fmt_num(e.sd_mse),
                e.replicates,
                csvio::fmt_num(e.mean_threshold),
                csvio::fmt_num(e.mean_sigma_hat_sq),
                csvio::fmt_num(e.sigma),
                report.master_seed
            ));
            report_txt.push_str(&format!(
                "signal={} method={} n={} mean_mse={} sd_mse={} replicates={} mean_threshold={} mean_sigma_hat_sq={} sigma={} seed={}\n",
                signal.name(),
                method_name(e.method),
                e.n,
                csvio::fmt_num(e.mean_mse),
                csvio::fmt_num(e.sd_mse),
                e.replicates,
                csvio::fmt_num(e.mean_threshold),
                csvio::fmt_num(e.mean_sigma_hat_sq),
                csvio::fmt_num(e.sigma),
                report.master_seed
            ));
            println!(
                "{:<12} {:<6} n={:<6} mean_mse={:.6} sd={:.6}",
                signal.name(),
                method_name(e.method),
                e.n,
                e.mean_mse,
                e.sd_mse
            );
        }
        if config.n_values.len() >= 2 {
            any_rates = true;
            let fits = rate_from_report(&report, &config.methods, config.denoise.smoothness_s)
                .map_err(|e| internal(e.to_string()))?;
            for f in &fits {
                rates_csv.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    signal.name(),
                    method_name(f.method),
                    csvio::fmt_num(f.slope),
                    csvio::fmt_num(f.std_err),
                    csvio::fmt_num(f.intercept),
                    csvio::fmt_num(f.theory_slope)
                ));
                println!(
                    "{:<12} {:<6} slope={:.4} (se {:.4}, theory target {:.4})",
                    signal.name(),
                    method_name(f.method),
                    f.slope,
                    f.std_err,
                    f.theory_slope
                );
            }
        }
        if args.plot {
            let svg_doc = bench_plot(signal, &config, &report)?;
            write_file(&args.out.join(format!("fig-{}.svg", signal.name())), &svg_doc)?;
        }
    }

    write_file(&args.out.join("risk.csv"), &risk_csv)?;
    write_file(&args.out.join("report.txt"), &report_txt)?;
    if any_rates {
        write_file(&args.out.join("rates.csv"), &rates_csv)?;
    }
    write_file(
        &args.out.join("bench.manifest"),
        &render_bench_manifest(&plan, &args),
    )?;
    Ok(0)
}

// -------------------------------------------------------------- noisecheck

fn cmd_noisecheck(args: NoisecheckArgs) -> Result<u8, CliError> {
    if !(-1.0 < args.rho0 && args.rho0 < 0.0) {
        return Err(usage(format!(
            "rho0 = {} is invalid: the pair-mixture model requires rho0 strictly inside (-1, 0)",
            args.rho0
        )));
    }
    if args.sigma1sq <= 0.0 || args.sigma2sq <= 0.0 {
        return Err(usage("sigma1sq and sigma2sq must be positive"));
    }
    let model = NoiseModel::NsdPairMixture {
        rho0: args.rho0,
        sigma1_sq: args.sigma1sq,
        sigma2_sq: args.sigma2sq,
        standardize: true,
    };
    let n = args.n.max(2 * args.umax).max(64);
    let n = if n.is_multiple_of(2) { n } else { n + 1 };
    let mut all_pass = true;

    println!("noise checks: rho0={} n={n} replicates={}", args.rho0, args.replicates);

    // dependence inequality over the super-additive battery
    let sup = supermodular_check(&model, n.min(1024), args.replicates, args.seed)
        .map_err(|e| internal(e.to_string()))?;
    for c in &sup.checks {
        all_pass &= c.pass;
        println!(
            "{} supermodular {:<20} dependent={:+.5} independent={:+.5} diff={:+.5} (3se={:.5})",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.dependent_mean,
            c.independent_mean,
            c.difference,
            3.0 * c.std_err
        );
    }

    // covariance tail
    let profile = cov_decay_profile(&model, args.umax, n.max(4096), 50, args.seed ^ 0xC0C0)
        .map_err(|e| internal(e.to_string()))?;
    for (i, v) in profile.iter().enumerate() {
        let u = i + 1;
        if u == 1 {
            // v(1) equals |rho0| in population; informational
            let ok = (v - args.rho0.abs()).abs() < 0.1;
            all_pass &= ok;
            println!(
                "{} cov_tail v({u})={:.5} (population {:.5})",
                if ok { "PASS" } else { "FAIL" },
                v,
                args.rho0.abs()
            );
        } else {
            let ok = v.abs() < 0.05;
            all_pass &= ok;
            println!(
                "{} cov_tail v({u})={:.5} (population 0)",
                if ok { "PASS" } else { "FAIL" },
                v
            );
        }
    }

    // weighted-sum variance bound with uniform weights
    let weights = vec![(n as f64).sqrt().recip(); n];
    let var = weighted_variance_check(&model, &weights, args.replicates, args.seed ^ 0xA11)
        .map_err(|e| internal(e.to_string()))?;
    all_pass &= var.pass;
    println!(
        "{} weighted_variance estimate={:.5} bound={:.5} (3se={:.5})",
        if var.pass { "PASS" } else { "FAIL" },
        var.variance_estimate,
        var.bound,
        3.0 * var.std_err
    );

    if all_pass {
        println!("all checks passed");
        Ok(0)
    } else {
        println!("some checks FAILED");
        Ok(2)
    }
}
