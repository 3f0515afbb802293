//! Scratch timing probe (removed before release if unused).
use corr_core::{corr_optimize, make_function, CorrConfig, FunctionName};
use std::time::Instant;

fn main() {
    for (dim, t) in [(1usize, 1_000usize), (2, 10_000), (2, 100_000), (5, 100_000)] {
        let f = make_function(FunctionName::Salomon, dim).unwrap();
        let cfg = CorrConfig { t, seed: 42, ..CorrConfig::default() };
        let start = Instant::now();
        let r = corr_optimize(&f, &cfg).unwrap();
        println!(
            "dim={dim} T={t}: err={:.3e} mu_hat={:.4} evals={} wall={:.1}ms",
            r.f_hat, r.mu_hat, r.eval_count, start.elapsed().as_secs_f64() * 1e3
        );
    }
}
