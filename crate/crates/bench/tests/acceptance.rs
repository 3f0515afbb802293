//! Acceptance suite: one test per criterion, each printing a `PASS` line
//! with the measured quantities once its assertions hold.
//!
//! Run with `cargo test -p corr-bench --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use corr_bench::config::{Experiment, ExperimentConfig};
use corr_bench::runner;
use corr_core::envelope::{fit_envelope, FitProblem};
use corr_core::{
    corr_optimize, draw_ball_uniform_stream, evaluate_set, features, make_function, nelder_mead,
    nelder_mead_start, CorrConfig, CorrError, Float, FunctionName, Objective, QuadSurrogate,
    SampleSet, SetId,
};
use corr_testkit::median;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Objective that replays a fixed table of (point, value) pairs.
struct Table {
    points: Vec<Vec<Float>>,
    values: Vec<Float>,
}

impl Objective for Table {
    fn dim(&self) -> usize {
        self.points[0].len()
    }
    fn domain_radius(&self) -> Float {
        2.0
    }
    fn evaluate(&self, x: &[Float]) -> Result<Float, CorrError> {
        let i = self
            .points
            .iter()
            .position(|p| p == x)
            .expect("known point");
        Ok(self.values[i])
    }
}

fn table_set(points: Vec<Vec<Float>>, values: Vec<Float>, id: SetId) -> SampleSet {
    let table = Table {
        points: points.clone(),
        values,
    };
    evaluate_set(&table, points, 0, id).unwrap()
}

struct PlantedQuad {
    quad: Vec<Float>,
    lin: Vec<Float>,
    offset: Float,
}

impl PlantedQuad {
    fn min_value(&self) -> Float {
        let x: Vec<Float> = self
            .quad
            .iter()
            .zip(&self.lin)
            .map(|(a, b)| -b / (2.0 * a))
            .collect();
        self.evaluate(&x).unwrap()
    }
}

impl Objective for PlantedQuad {
    fn dim(&self) -> usize {
        self.quad.len()
    }
    fn domain_radius(&self) -> Float {
        2.0
    }
    fn evaluate(&self, x: &[Float]) -> Result<Float, CorrError> {
        let mut v = self.offset;
        for i in 0..x.len() {
            v += self.quad[i] * x[i] * x[i] + self.lin[i] * x[i];
        }
        Ok(v)
    }
}

#[test]
fn criterion_01_analytic_optima() {
    let mut worst: Float = 0.0;
    for name in FunctionName::ALL {
        for dim in [1, 2, 3, 5, 10] {
            let f = make_function(name, dim).unwrap();
            let (f_star, x_star) = f.global_min();
            let gap = (f.evaluate(x_star).unwrap() - f_star).abs();
            assert!(gap <= 1e-12, "{name} dim {dim}: |f(x*) - f*| = {gap}");
            worst = worst.max(gap);
        }
    }
    println!("ACCEPTANCE 01 analytic-optima: PASS (max |f(x*) - f*| = {worst:.2e})");
}

#[test]
fn criterion_02_lp_oracle_equivalence() {
    let mut rng = ChaCha12Rng::seed_from_u64(20_240_201);
    let mut worst_obj: Float = 0.0;
    let mut worst_resid: Float = 0.0;
    for case in 0..200usize {
        let dim = 1 + case % 2;
        let t = 1 + case % 6;
        let draw = |rng: &mut ChaCha12Rng, count: usize| -> (Vec<Vec<Float>>, Vec<Float>) {
            let pts: Vec<Vec<Float>> = (0..count)
                .map(|_| (0..dim).map(|_| rng.random_range(-1.4..1.4)).collect())
                .collect();
            let vals: Vec<Float> = (0..count).map(|_| rng.random_range(-3.0..3.0)).collect();
            (pts, vals)
        };
        let (p1, v1) = draw(&mut rng, t);
        let (p2, v2) = draw(&mut rng, t);
        let s1 = table_set(p1, v1, SetId::One);
        let s2 = table_set(p2, v2, SetId::Two);
        let mu = rng.random_range(-2.0..2.0);

        let fit = fit_envelope(&FitProblem::new(&s1, &s2, mu)).unwrap();

        let rows: Vec<Vec<Float>> = s1.points().iter().map(|x| features(x)).collect();
        let p = 2 * dim + 1;
        let mut mean_row = vec![0.0; p];
        for x in s2.points() {
            for (m, phi) in mean_row.iter_mut().zip(features(x)) {
                *m += phi;
            }
        }
        for m in mean_row.iter_mut() {
            *m /= s2.len() as Float;
        }
        mean_row[p - 1] = 1.0;
        let (oracle, _) =
            corr_testkit::lad::lad_vertex_oracle(&rows, s1.values(), &mean_row, mu, 1e6, dim)
                .unwrap();
        let gap = (fit.objective - oracle).abs();
        assert!(gap <= 1e-6, "case {case}: fit {} oracle {oracle}", fit.objective);
        worst_obj = worst_obj.max(gap);

        let mean_h: Float = s2
            .points()
            .iter()
            .map(|x| fit.theta.h_eval(x).unwrap())
            .sum::<Float>()
            / s2.len() as Float;
        let resid = (mean_h - mu).abs();
        assert!(resid <= 1e-8, "case {case}: residual {resid}");
        worst_resid = worst_resid.max(resid);
    }
    println!(
        "ACCEPTANCE 02 lp-oracle-equivalence: PASS (200 instances, max objective gap {worst_obj:.2e}, max residual {worst_resid:.2e})"
    );
}

#[test]
fn criterion_03_ball_minimizer_oracle() {
    let mut rng = ChaCha12Rng::seed_from_u64(33_003);
    let mut worst_above: Float = 0.0;
    for case in 0..200usize {
        let dim = 1 + case % 3;
        let theta1: Vec<Float> = (0..dim)
            .map(|_| {
                if rng.random::<Float>() < 0.15 {
                    0.0
                } else {
                    rng.random_range(0.0..3.0)
                }
            })
            .collect();
        let theta2: Vec<Float> = (0..dim).map(|_| rng.random_range(-4.0..4.0)).collect();
        let theta3: Float = rng.random_range(-2.0..2.0);
        let s = QuadSurrogate::new(theta1, theta2, theta3).unwrap();
        let x = s.minimize_on_ball(2.0, 1e-10).unwrap();
        let got = s.h_eval(&x).unwrap();
        let steps = [2001, 101, 41][dim - 1];
        let (oracle, _) =
            corr_testkit::quadmin::quad_min_on_ball(s.theta1(), s.theta2(), s.theta3(), 2.0, steps);
        assert!(
            got <= oracle + 1e-4,
            "case {case} dim {dim}: got {got} vs oracle {oracle}"
        );
        assert!(
            got >= oracle - 1e-8,
            "case {case} dim {dim}: got {got} below oracle {oracle}"
        );
        worst_above = worst_above.max(got - oracle);
    }
    println!(
        "ACCEPTANCE 03 ball-minimizer-oracle: PASS (200 instances, max excess over oracle {worst_above:.2e})"
    );
}

#[test]
fn criterion_04_planted_model_recovery() {
    let mut rng = ChaCha12Rng::seed_from_u64(4_444);
    let mut worst: Float = 0.0;
    let mut trials = 0;
    for &dim in &[1usize, 3] {
        for seed in 0..10u64 {
            let quad: Vec<Float> = (0..dim).map(|_| rng.random_range(0.5..2.0)).collect();
            let x_star: Vec<Float> = (0..dim).map(|_| rng.random_range(-0.5..0.5)).collect();
            let lin: Vec<Float> = quad
                .iter()
                .zip(&x_star)
                .map(|(a, x)| -2.0 * a * x)
                .collect();
            let f = PlantedQuad {
                quad,
                lin,
                offset: rng.random_range(-1.0..1.0),
            };
            let cfg = CorrConfig {
                t: 500,
                seed: 1000 * (dim as u64) + seed,
                ..CorrConfig::default()
            };
            let result = corr_optimize(&f, &cfg).unwrap();
            let err = result.f_hat - f.min_value();
            assert!(err < 1e-6, "dim {dim} seed {seed}: error {err}");
            worst = worst.max(err);
            trials += 1;
        }
    }
    println!(
        "ACCEPTANCE 04 planted-model-recovery: PASS ({trials} trials, worst error {worst:.2e})"
    );
}

#[test]
fn criterion_05_langerman_1d_convergence() {
    let f = make_function(FunctionName::Langerman, 1).unwrap();
    let mut errors = Vec::new();
    for seed in 0..20u64 {
        let cfg = CorrConfig {
            t: 200,
            seed,
            ..CorrConfig::default()
        };
        let result = corr_optimize(&f, &cfg).unwrap();
        errors.push(result.f_hat); // f* = 0
    }
    let med = median(&errors);
    assert!(med < 1e-2, "median error {med}, errors {errors:?}");
    println!(
        "ACCEPTANCE 05 langerman-1d-convergence: PASS (T=200, 20 seeds, median error {med:.2e})"
    );
}

#[test]
fn criterion_06_salomon_scaling() {
    let out = tempfile::tempdir().unwrap();
    let cfg = ExperimentConfig {
        experiment: Experiment::Scale,
        functions: vec!["salomon".into()],
        dims: vec![1, 2, 5],
        t_values: vec![1_000, 10_000, 100_000],
        trials: 3,
        base_seed: 60_606,
        output_dir: out.path().to_path_buf(),
        ..ExperimentConfig::default()
    };
    let artifacts = runner::run(&cfg).unwrap();

    let mean_of = |dim: usize, t: usize| -> Float {
        artifacts
            .aggregate
            .iter()
            .find(|a| a.dim == dim && a.t == t)
            .map(|a| a.mean_error)
            .expect("cell present")
    };
    for &dim in &cfg.dims {
        let means: Vec<Float> = cfg.t_values.iter().map(|&t| mean_of(dim, t)).collect();
        for w in means.windows(2) {
            assert!(
                w[1] <= w[0],
                "dim {dim}: mean errors not monotone over T: {means:?}"
            );
        }
    }
    let headline = mean_of(2, 100_000);
    assert!(headline < 0.05, "mean error at (dim 2, T=1e5) = {headline}");
    println!(
        "ACCEPTANCE 06 salomon-scaling: PASS (means monotone over T for dims 1/2/5; mean(dim 2, T=1e5) = {headline:.2e})"
    );
}

#[test]
fn criterion_07_high_dimension_comparison() {
    let f = make_function(FunctionName::Salomon, 10).unwrap();
    let mut corr_errors = Vec::new();
    let mut nm_errors = Vec::new();
    for seed in 0..20u64 {
        let cfg = CorrConfig {
            t: 2_000,
            seed,
            ..CorrConfig::default()
        };
        let corr = corr_optimize(&f, &cfg).unwrap();
        corr_errors.push(corr.f_hat);
        // budget-matched: the simplex baseline gets exactly the evaluations
        // the surrogate run consumed
        let x0 = nelder_mead_start(&f, seed);
        let nm = nelder_mead(&f, &x0, corr.eval_count).unwrap();
        assert!(nm.eval_count <= corr.eval_count);
        nm_errors.push(nm.f_best);
    }
    let corr_med = median(&corr_errors);
    let nm_med = median(&nm_errors);
    assert!(
        nm_med > corr_med,
        "nelder-mead median {nm_med} vs corr median {corr_med}"
    );
    println!(
        "ACCEPTANCE 07 high-dimension-comparison: PASS (salomon dim 10, median corr {corr_med:.2e} < median nelder_mead {nm_med:.2e})"
    );
}

#[test]
fn criterion_08_hybrid_polish() {
    for &dim in &[1usize, 3, 5] {
        let f = make_function(FunctionName::Salomon, dim).unwrap();
        let mut hits = 0;
        let mut errors = Vec::new();
        for seed in 0..20u64 {
            let cfg = CorrConfig {
                t: 2_000,
                seed,
                polish: true,
                polish_budget: 4_000,
                ..CorrConfig::default()
            };
            let result = corr_optimize(&f, &cfg).unwrap();
            errors.push(result.f_hat);
            if result.f_hat < 1e-8 {
                hits += 1;
            }
        }
        assert!(
            hits >= 18,
            "dim {dim}: only {hits}/20 seeds reached 1e-8; errors {errors:?}"
        );
        println!(
            "ACCEPTANCE 08 hybrid-polish (dim {dim}): PASS ({hits}/20 seeds below 1e-8)"
        );
    }
}

#[test]
fn criterion_09_mu_profile_robustness() {
    let f = make_function(FunctionName::SalomonSq, 1).unwrap();
    let cfg = CorrConfig {
        t: 2_000,
        seed: 909,
        ..CorrConfig::default()
    };
    let (s1, s2) = corr_core::draw_samples(&f, &cfg).unwrap();
    let search = corr_core::search_mu(&f, (&s1, &s2), &cfg).unwrap();

    let grid = &search.profile[..cfg.mu_grid_points];
    let good = grid.iter().filter(|&&(_, g)| g < 0.1).count();
    let frac = good as Float / grid.len() as Float;
    assert!(
        frac >= 0.25,
        "only {good}/{} grid probes below 0.1",
        grid.len()
    );

    assert!(
        search.best_grid_index != 0 && search.best_grid_index != cfg.mu_grid_points - 1,
        "profile minimum sits on the grid boundary (index {})",
        search.best_grid_index
    );
    assert!(search.mu_hat.abs() < search.r_hat);
    println!(
        "ACCEPTANCE 09 mu-profile-robustness: PASS ({:.0}% of grid probes below 0.1, minimum interior at mu = {:.3})",
        frac * 100.0,
        search.mu_hat
    );
}

#[test]
fn criterion_10_determinism() {
    let make = |out: &std::path::Path| ExperimentConfig {
        experiment: Experiment::Sweep,
        functions: vec!["griewank".into(), "langerman".into()],
        dims: vec![1],
        t_values: vec![40, 80],
        trials: 3,
        base_seed: 101_010,
        output_dir: out.to_path_buf(),
        ..ExperimentConfig::default()
    };
    let out1 = tempfile::tempdir().unwrap();
    let out2 = tempfile::tempdir().unwrap();
    let a = runner::run(&make(out1.path())).unwrap();
    let b = runner::run(&make(out2.path())).unwrap();

    let strip = |dir: &std::path::Path| -> String {
        let text = std::fs::read_to_string(dir.join("trials.csv")).unwrap();
        text.lines()
            .map(|line| {
                let cols: Vec<&str> = line.split(',').collect();
                let mut kept: Vec<&str> = cols[..10].to_vec();
                kept.extend(&cols[11..]);
                kept.join(",")
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a.dir), strip(&b.dir), "trials.csv differs beyond wall_ms");
    runner::verify_aggregate(&a.dir).unwrap();
    runner::verify_aggregate(&b.dir).unwrap();
    assert_eq!(
        std::fs::read_to_string(a.dir.join("aggregate.csv")).unwrap(),
        std::fs::read_to_string(b.dir.join("aggregate.csv")).unwrap()
    );
    println!(
        "ACCEPTANCE 10 determinism: PASS (rerun byte-identical excluding wall_ms; aggregates reproducible from trials)"
    );
}
