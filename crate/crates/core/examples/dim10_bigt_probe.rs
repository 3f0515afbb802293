//! Scratch: 10D salomon at large T with a lean probe schedule.
use corr_core::{corr_optimize, make_function, CorrConfig, FunctionName};
use std::time::Instant;

fn main() {
    let f = make_function(FunctionName::Salomon, 10).unwrap();
    for t in [50_000usize, 100_000] {
        for seed in [0u64, 1] {
            let cfg = CorrConfig {
                t,
                seed,
                mu_grid_points: 9,
                refine_iters: 10,
                ..CorrConfig::default()
            };
            let start = Instant::now();
            let r = corr_optimize(&f, &cfg).unwrap();
            let norm = r.x_hat.iter().map(|v| v * v).sum::<f64>().sqrt();
            println!(
                "T={t} seed={seed}: err={:.4e} |x|={:.3} mu_hat={:.3} ({:.1}s)",
                r.f_hat, norm, r.mu_hat, start.elapsed().as_secs_f64()
            );
        }
    }
}
