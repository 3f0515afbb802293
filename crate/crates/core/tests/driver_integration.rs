//! Driver-level behavior: recovery of in-class objectives, the shape of the
//! constraint-value search, and the sample-based estimate of the value bound.

use corr_core::{
    corr_optimize, draw_samples, estimate_r, make_function, opt_procedure, search_mu, CorrConfig,
    CorrError, Float, FunctionName, Objective,
};

struct PlantedQuad {
    quad: Vec<Float>,
    lin: Vec<Float>,
    offset: Float,
}

impl PlantedQuad {
    fn minimizer(&self) -> Vec<Float> {
        self.quad
            .iter()
            .zip(&self.lin)
            .map(|(a, b)| -b / (2.0 * a))
            .collect()
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
fn opt_procedure_recovers_planted_quadratic_at_value_mean() {
    let f = PlantedQuad {
        quad: vec![1.5, 0.7],
        lin: vec![-0.9, 0.28],
        offset: 0.4,
    };
    let cfg = CorrConfig {
        t: 400,
        seed: 13,
        ..CorrConfig::default()
    };
    let (s1, s2) = draw_samples(&f, &cfg).unwrap();
    let mu = s2.values().iter().sum::<Float>() / s2.len() as Float;
    let (x_mu, theta) = opt_procedure(mu, (&s1, &s2), &cfg, 2.0).unwrap();
    let want = f.minimizer();
    for (got, want) in x_mu.iter().zip(&want) {
        assert!((got - want).abs() < 1e-6, "{x_mu:?} vs {want}");
    }
    assert!(theta.theta1().iter().all(|&a| a > 0.0));
}

#[test]
fn searched_mu_beats_the_value_mean_on_salomon_sq() {
    let f = make_function(FunctionName::SalomonSq, 1).unwrap();
    let cfg = CorrConfig {
        t: 500,
        seed: 2024,
        ..CorrConfig::default()
    };
    let (s1, s2) = draw_samples(&f, &cfg).unwrap();
    let search = search_mu(&f, (&s1, &s2), &cfg).unwrap();

    let mu_mean = s2.values().iter().sum::<Float>() / s2.len() as Float;
    let (x_at_mean, _) = opt_procedure(mu_mean, (&s1, &s2), &cfg, 2.0).unwrap();
    let g_at_mean = f.evaluate(&x_at_mean).unwrap();
    assert!(
        g_at_mean > search.f_hat,
        "value-mean probe {g_at_mean} should be worse than searched {}",
        search.f_hat
    );
}

#[test]
fn refined_mu_stays_in_the_winning_grid_bracket() {
    let f = make_function(FunctionName::Langerman, 1).unwrap();
    let cfg = CorrConfig {
        t: 150,
        seed: 5,
        mu_grid_points: 11,
        refine_iters: 12,
        ..CorrConfig::default()
    };
    let (s1, s2) = draw_samples(&f, &cfg).unwrap();
    let search = search_mu(&f, (&s1, &s2), &cfg).unwrap();
    let m = cfg.mu_grid_points;
    let r = search.r_hat;
    let grid: Vec<Float> = (0..m)
        .map(|k| -r + 2.0 * r * k as Float / (m - 1) as Float)
        .collect();
    let k = search.best_grid_index;
    let lo = grid[k.saturating_sub(1)];
    let hi = grid[(k + 1).min(m - 1)];
    assert!(
        search.mu_hat >= lo - 1e-12 && search.mu_hat <= hi + 1e-12,
        "mu_hat {} outside bracket [{lo}, {hi}]",
        search.mu_hat
    );
}

#[test]
fn refinement_incumbent_never_worsens() {
    let f = make_function(FunctionName::SalomonSq, 1).unwrap();
    let cfg = CorrConfig {
        t: 200,
        seed: 8,
        mu_grid_points: 9,
        refine_iters: 10,
        ..CorrConfig::default()
    };
    let result = corr_optimize(&f, &cfg).unwrap();
    let grid_len = cfg.mu_grid_points;
    let mut incumbent = Float::INFINITY;
    let mut history = Vec::new();
    for &(_, g) in &result.profile {
        incumbent = incumbent.min(g);
        history.push(incumbent);
    }
    for w in history[grid_len..].windows(2) {
        assert!(w[1] <= w[0]);
    }
}

#[test]
fn estimate_r_is_bounded_by_the_true_sup() {
    let f = make_function(FunctionName::Salomon, 1).unwrap();
    let cfg = CorrConfig {
        t: 10_000,
        seed: 55,
        ..CorrConfig::default()
    };
    let (s1, s2) = draw_samples(&f, &cfg).unwrap();
    let r_hat = estimate_r((&s1, &s2)).unwrap();
    // independent fine-grid sup of |f| over the 1D domain
    let mut sup = 0.0f64;
    for k in 0..=400_000 {
        let x = -2.0 + 4.0 * k as Float / 400_000.0;
        sup = sup.max(f.evaluate(&[x]).unwrap().abs());
    }
    assert!(r_hat >= 1.9, "r_hat = {r_hat}");
    assert!(r_hat <= sup + 1e-12, "r_hat = {r_hat} above sup {sup}");
}

#[test]
fn salomon_1d_median_error_is_small() {
    let f = make_function(FunctionName::Salomon, 1).unwrap();
    let mut errors = Vec::new();
    for seed in 0..5 {
        let cfg = CorrConfig {
            t: 500,
            seed,
            ..CorrConfig::default()
        };
        let r = corr_optimize(&f, &cfg).unwrap();
        errors.push(r.f_hat);
    }
    let median = corr_testkit::median(&errors);
    assert!(median < 0.1, "median = {median}, errors = {errors:?}");
}
