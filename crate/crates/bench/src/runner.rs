//! Experiment execution and result persistence.
//!
//! Every trial's seed derives from `(base_seed, dim, T, trial_index, method)`
//! alone, so any row of any result store reproduces in isolation. Trials run
//! on a worker pool; rows are collected in grid order before a single writer
//! persists them, so scheduling never affects the output bytes. A run
//! directory holds the config snapshot, `trials.csv`, `aggregate.csv`, the
//! SVG views, and a manifest with artifact and generator versions.

use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context};
use corr_core::envelope::FitSession;
use corr_core::{
    corr_optimize, draw_samples, estimate_r, make_function, nelder_mead, nelder_mead_start,
    random_search, simulated_annealing, FunctionName, Objective, SaConfig, TestFunction,
    GENERATOR_VERSION,
};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::config::{Experiment, ExperimentConfig, MethodToken};
use crate::records::{
    aggregate, aggregate_to_csv, trials_to_csv, AggregateRow, TrialRecord,
};
use crate::svg;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-trial seed: `base_seed XOR hash(dim, T, trial_index, method)`.
pub fn derive_seed(base_seed: u64, dim: usize, t: usize, trial_index: usize, method: &str) -> u64 {
    let mut h = splitmix64(dim as u64);
    h = splitmix64(h ^ (t as u64));
    h = splitmix64(h ^ (trial_index as u64));
    for b in method.bytes() {
        h = splitmix64(h ^ u64::from(b));
    }
    base_seed ^ h
}

/// Hash of the canonical config serialization, used in run directory names.
pub fn config_hash(cfg: &ExperimentConfig) -> String {
    let canonical = serde_json::to_string(cfg).expect("config serializes");
    let digest = Sha256::digest(canonical.as_bytes());
    let mut out = String::new();
    for byte in digest.iter().take(6) {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

/// Results of one experiment run, already persisted under `dir`.
#[derive(Debug)]
pub struct RunArtifacts {
    pub dir: PathBuf,
    pub trials: Vec<TrialRecord>,
    pub aggregate: Vec<AggregateRow>,
}

fn prepare_run_dir(cfg: &ExperimentConfig) -> anyhow::Result<PathBuf> {
    let stamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .expect("clock after epoch")
        .as_secs();
    let hash = config_hash(cfg);
    let dir = cfg.output_dir.join(format!("run_{stamp}_{hash}"));
    std::fs::create_dir_all(&dir)
        .with_context(|| format!("creating run dir {}", dir.display()))?;
    std::fs::write(
        dir.join("config.json"),
        serde_json::to_string_pretty(cfg).expect("config serializes"),
    )?;
    let manifest = serde_json::json!({
        "artifact_version": env!("CARGO_PKG_VERSION"),
        "generator_version": GENERATOR_VERSION,
        "config_hash": hash,
        "created_unix_s": stamp,
    });
    std::fs::write(
        dir.join("manifest.json"),
        serde_json::to_string_pretty(&manifest).expect("manifest serializes"),
    )?;
    Ok(dir)
}

/// One cell of the trial grid.
#[derive(Debug, Clone, Copy)]
struct TrialSpec {
    function: FunctionName,
    dim: usize,
    t: usize,
    trial_index: usize,
    method: MethodToken,
}

fn run_one(spec: &TrialSpec, cfg: &ExperimentConfig) -> anyhow::Result<TrialRecord> {
    let f = make_function(spec.function, spec.dim)?;
    let (f_star, _) = f.global_min();
    let seed = derive_seed(
        cfg.base_seed,
        spec.dim,
        spec.t,
        spec.trial_index,
        spec.method.token(),
    );
    let budget = cfg.matched_budget(spec.t);
    let (mu_hat, f_hat, eval_count, wall_ms) = match spec.method {
        MethodToken::Corr | MethodToken::CorrHybrid => {
            let polish = spec.method == MethodToken::CorrHybrid;
            let corr_cfg = cfg.corr_config(spec.t, seed, polish);
            let r = corr_optimize(&f, &corr_cfg)?;
            (Some(r.mu_hat), r.f_hat, r.eval_count, r.wall_ms)
        }
        MethodToken::RandomSearch => {
            let start = Instant::now();
            let r = random_search(&f, budget, seed)?;
            (None, r.f_best, r.eval_count, ms_since(start))
        }
        MethodToken::SimulatedAnnealing => {
            let start = Instant::now();
            let r = simulated_annealing(&f, budget, seed, &SaConfig::default())?;
            (None, r.f_best, r.eval_count, ms_since(start))
        }
        MethodToken::NelderMead => {
            let start = Instant::now();
            let x0 = nelder_mead_start(&f, seed);
            let r = nelder_mead(&f, &x0, budget)?;
            (None, r.f_best, r.eval_count, ms_since(start))
        }
    };
    Ok(TrialRecord {
        function: spec.function.token().to_string(),
        dim: spec.dim,
        t: spec.t,
        trial_index: spec.trial_index,
        seed,
        method: spec.method.token().to_string(),
        mu_hat,
        f_hat,
        error: f_hat - f_star,
        eval_count,
        wall_ms,
        generator_version: GENERATOR_VERSION.to_string(),
    })
}

fn ms_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn run_grid(specs: &[TrialSpec], cfg: &ExperimentConfig) -> anyhow::Result<Vec<TrialRecord>> {
    specs
        .par_iter()
        .map(|spec| run_one(spec, cfg))
        .collect::<anyhow::Result<Vec<_>>>()
}

fn persist(
    dir: &Path,
    trials: Vec<TrialRecord>,
    chart: Option<(&str, String)>,
) -> anyhow::Result<RunArtifacts> {
    let agg = aggregate(&trials);
    std::fs::write(dir.join("trials.csv"), trials_to_csv(&trials))?;
    std::fs::write(dir.join("aggregate.csv"), aggregate_to_csv(&agg))?;
    if let Some((name, svg)) = chart {
        std::fs::write(dir.join(name), svg)?;
    }
    Ok(RunArtifacts {
        dir: dir.to_path_buf(),
        trials,
        aggregate: agg,
    })
}

/// Dispatches on the experiment named by the config.
pub fn run(cfg: &ExperimentConfig) -> anyhow::Result<RunArtifacts> {
    cfg.validate()?;
    match cfg.experiment {
        Experiment::Optimize => run_optimize(cfg),
        Experiment::Sweep => run_sweep(cfg),
        Experiment::Scale => run_scale(cfg),
        Experiment::Compare => run_compare(cfg),
        Experiment::MuTrace => run_mu_trace(cfg),
    }
}

/// Single-cell runs of the main optimizer.
pub fn run_optimize(cfg: &ExperimentConfig) -> anyhow::Result<RunArtifacts> {
    let dir = prepare_run_dir(cfg)?;
    let method = if cfg.polish {
        MethodToken::CorrHybrid
    } else {
        MethodToken::Corr
    };
    let function = cfg.function_names()?[0];
    let specs: Vec<TrialSpec> = (0..cfg.trials)
        .map(|trial_index| TrialSpec {
            function,
            dim: cfg.dims[0],
            t: cfg.t_values[0],
            trial_index,
            method,
        })
        .collect();
    let trials = run_grid(&specs, cfg)?;
    persist(&dir, trials, None)
}

/// Error versus sample count, one curve per (function, dim).
pub fn run_sweep(cfg: &ExperimentConfig) -> anyhow::Result<RunArtifacts> {
    let dir = prepare_run_dir(cfg)?;
    let method = if cfg.polish {
        MethodToken::CorrHybrid
    } else {
        MethodToken::Corr
    };
    let mut specs = Vec::new();
    for &function in &cfg.function_names()? {
        for &dim in &cfg.dims {
            for &t in &cfg.t_values {
                for trial_index in 0..cfg.trials {
                    specs.push(TrialSpec {
                        function,
                        dim,
                        t,
                        trial_index,
                        method,
                    });
                }
            }
        }
    }
    let trials = run_grid(&specs, cfg)?;
    let agg = aggregate(&trials);
    let mut series = Vec::new();
    for &function in &cfg.function_names()? {
        for &dim in &cfg.dims {
            let points: Vec<(f64, f64)> = agg
                .iter()
                .filter(|a| a.function == function.token() && a.dim == dim)
                .map(|a| (a.t as f64, a.mean_error))
                .collect();
            let label = if cfg.dims.len() > 1 {
                format!("{function} d{dim}")
            } else {
                function.to_string()
            };
            series.push(svg::Series { label, points });
        }
    }
    let chart = svg::line_chart(
        "mean error vs function evaluations",
        "T (per sample set)",
        "mean error",
        &series,
        true,
        true,
    );
    persist(&dir, trials, Some(("sweep.svg", chart)))
}

/// Dimension x sample-count grid for one function, with a heatmap view and
/// a mean-error matrix CSV.
pub fn run_scale(cfg: &ExperimentConfig) -> anyhow::Result<RunArtifacts> {
    let dir = prepare_run_dir(cfg)?;
    let method = if cfg.polish {
        MethodToken::CorrHybrid
    } else {
        MethodToken::Corr
    };
    let function = cfg.function_names()?[0];
    let mut specs = Vec::new();
    for &dim in &cfg.dims {
        for &t in &cfg.t_values {
            for trial_index in 0..cfg.trials {
                specs.push(TrialSpec {
                    function,
                    dim,
                    t,
                    trial_index,
                    method,
                });
            }
        }
    }
    let trials = run_grid(&specs, cfg)?;
    let agg = aggregate(&trials);

    let mean_of = |dim: usize, t: usize| -> f64 {
        agg.iter()
            .find(|a| a.dim == dim && a.t == t)
            .map(|a| a.mean_error)
            .expect("cell present")
    };
    let matrix: Vec<Vec<f64>> = cfg
        .dims
        .iter()
        .map(|&dim| cfg.t_values.iter().map(|&t| mean_of(dim, t)).collect())
        .collect();

    let mut matrix_csv = String::from("dim");
    for &t in &cfg.t_values {
        matrix_csv.push_str(&format!(",T_{t}"));
    }
    matrix_csv.push('\n');
    for (row, &dim) in matrix.iter().zip(&cfg.dims) {
        matrix_csv.push_str(&dim.to_string());
        for v in row {
            matrix_csv.push_str(&format!(",{v}"));
        }
        matrix_csv.push('\n');
    }
    std::fs::write(dir.join("scale_matrix.csv"), matrix_csv)?;

    let chart = svg::heatmap(
        &format!("{function}: mean error by dimension and sample count"),
        &cfg.t_values.iter().map(|t| format!("T={t}")).collect::<Vec<_>>(),
        &cfg.dims.iter().map(|d| format!("dim {d}")).collect::<Vec<_>>(),
        &matrix,
    );
    persist(&dir, trials, Some(("scale.svg", chart)))
}

/// Budget-matched error-versus-dimension comparison across methods.
pub fn run_compare(cfg: &ExperimentConfig) -> anyhow::Result<RunArtifacts> {
    let dir = prepare_run_dir(cfg)?;
    let function = cfg.function_names()?[0];
    let t = cfg.t_values[0];
    let mut specs = Vec::new();
    for &dim in &cfg.dims {
        for &method in &cfg.methods {
            for trial_index in 0..cfg.trials {
                specs.push(TrialSpec {
                    function,
                    dim,
                    t,
                    trial_index,
                    method,
                });
            }
        }
    }
    let trials = run_grid(&specs, cfg)?;
    let agg = aggregate(&trials);
    let series: Vec<svg::Series> = cfg
        .methods
        .iter()
        .map(|m| svg::Series {
            label: m.token().to_string(),
            points: agg
                .iter()
                .filter(|a| a.method == m.token())
                .map(|a| (a.dim as f64, a.median_error))
                .collect(),
        })
        .collect();
    let chart = svg::line_chart(
        &format!("{function}: median error by dimension, budget {}", cfg.matched_budget(t)),
        "dimension",
        "median error",
        &series,
        false,
        true,
    );
    persist(&dir, trials, Some(("compare.svg", chart)))
}

/// Probe profile of the constraint value plus dense surrogate traces for a
/// single run. The traces are emitted for 1D runs only.
pub fn run_mu_trace(cfg: &ExperimentConfig) -> anyhow::Result<RunArtifacts> {
    let dir = prepare_run_dir(cfg)?;
    let function = cfg.function_names()?[0];
    let dim = cfg.dims[0];
    let t = cfg.t_values[0];
    let method = if cfg.polish {
        MethodToken::CorrHybrid
    } else {
        MethodToken::Corr
    };
    let seed = derive_seed(cfg.base_seed, dim, t, 0, method.token());
    let f = make_function(function, dim)?;
    let corr_cfg = cfg.corr_config(t, seed, cfg.polish);
    let result = corr_optimize(&f, &corr_cfg)?;

    let mut profile_csv = String::from("probe_index,mu,f_value\n");
    for (i, &(mu, g)) in result.profile.iter().enumerate() {
        profile_csv.push_str(&format!("{i},{mu},{g}\n"));
    }
    std::fs::write(dir.join("mu_profile.csv"), profile_csv)?;

    if dim == 1 {
        write_surrogate_trace(&dir, &f, &corr_cfg, result.mu_hat)?;
    }

    let mut sorted: Vec<(f64, f64)> = result.profile.clone();
    sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let chart = svg::line_chart(
        &format!("{function} d{dim}: true value at the surrogate minimizer vs mu"),
        "mu",
        "f(x_mu)",
        &[svg::Series {
            label: "f(x_mu)".into(),
            points: sorted,
        }],
        false,
        false,
    );
    std::fs::write(dir.join("mu_trace.svg"), chart)?;

    let (f_star, _) = f.global_min();
    let record = TrialRecord {
        function: function.token().to_string(),
        dim,
        t,
        trial_index: 0,
        seed,
        method: method.token().to_string(),
        mu_hat: Some(result.mu_hat),
        f_hat: result.f_hat,
        error: result.f_hat - f_star,
        eval_count: result.eval_count,
        wall_ms: result.wall_ms,
        generator_version: GENERATOR_VERSION.to_string(),
    };
    persist(&dir, vec![record], None)
}

/// Dense 1D traces of the fitted surrogate at four representative constraint
/// values: the two extremes, the empirical value mean, and the selected one.
fn write_surrogate_trace(
    dir: &Path,
    f: &TestFunction,
    corr_cfg: &corr_core::CorrConfig,
    mu_hat: f64,
) -> anyhow::Result<()> {
    let (s1, s2) = draw_samples(f, corr_cfg)?;
    let r_hat = match corr_cfg.r_override {
        Some(r) => r,
        None => estimate_r((&s1, &s2))?,
    };
    let session = FitSession::new(&s1, &s2, corr_cfg.box_bound, corr_cfg.lp_tol)?;
    let value_mean = s2.values().iter().sum::<f64>() / s2.len() as f64;
    let mus = [(-r_hat, "low"), (value_mean, "value_mean"), (mu_hat, "selected"), (r_hat, "high")];

    let mut thetas = Vec::new();
    for &(mu, _) in &mus {
        thetas.push(session.fit(mu)?.theta);
    }

    let radius = f.domain_radius();
    let grid_points = 401usize;
    let mut csv = String::from("x,f");
    for &(mu, tag) in &mus {
        csv.push_str(&format!(",h_{tag}_mu_{mu:.6}"));
    }
    csv.push('\n');
    for k in 0..grid_points {
        let x = -radius + 2.0 * radius * k as f64 / (grid_points - 1) as f64;
        csv.push_str(&format!("{x},{}", f.evaluate(&[x])?));
        for theta in &thetas {
            csv.push_str(&format!(",{}", theta.h_eval(&[x]).expect("dim 1")));
        }
        csv.push('\n');
    }
    std::fs::write(dir.join("surrogate_trace.csv"), csv)?;
    Ok(())
}

/// Re-derives the aggregate from a run's `trials.csv` and compares it to the
/// persisted `aggregate.csv`.
pub fn verify_aggregate(dir: &Path) -> anyhow::Result<()> {
    let trials = crate::records::trials_from_csv(&std::fs::read_to_string(dir.join("trials.csv"))?)?;
    let expect = aggregate_to_csv(&aggregate(&trials));
    let got = std::fs::read_to_string(dir.join("aggregate.csv"))?;
    if expect != got {
        bail!("aggregate.csv does not match recomputation from trials.csv");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_deterministic_and_spread() {
        let a = derive_seed(42, 1, 100, 0, "corr");
        assert_eq!(a, derive_seed(42, 1, 100, 0, "corr"));
        let others = [
            derive_seed(42, 2, 100, 0, "corr"),
            derive_seed(42, 1, 200, 0, "corr"),
            derive_seed(42, 1, 100, 1, "corr"),
            derive_seed(42, 1, 100, 0, "nelder_mead"),
            derive_seed(43, 1, 100, 0, "corr"),
        ];
        for o in others {
            assert_ne!(a, o);
        }
    }

    #[test]
    fn config_hash_tracks_content() {
        let a = ExperimentConfig::default();
        let mut b = a.clone();
        assert_eq!(config_hash(&a), config_hash(&b));
        b.trials = 2;
        assert_ne!(config_hash(&a), config_hash(&b));
        assert_eq!(config_hash(&a).len(), 12);
    }
}
