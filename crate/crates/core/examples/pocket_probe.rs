//! Scratch: mu-pocket robustness across seeds and sample counts, 10D.
use corr_core::envelope::FitSession;
use corr_core::{draw_samples, make_function, CorrConfig, FunctionName, Objective};
use std::time::Instant;

fn main() {
    let f = make_function(FunctionName::Salomon, 10).unwrap();
    for t in [50_000usize, 100_000] {
        for seed in [0u64, 1, 2] {
            let cfg = CorrConfig { t, seed, ..CorrConfig::default() };
            let (s1, s2) = draw_samples(&f, &cfg).unwrap();
            let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
            let start = Instant::now();
            let mut best = (f64::INFINITY, 0.0);
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for k in 0..48 {
                let mu = 0.2 + 1.4 * k as f64 / 47.0;
                let fit = session.fit(mu).unwrap();
                let x = fit.theta.minimize_on_ball(2.0, 1e-10).unwrap();
                let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
                let g = f.evaluate(&x).unwrap();
                if g < best.0 { best = (g, mu); }
                if norm < 1.99 { lo = lo.min(mu); hi = hi.max(mu); }
            }
            println!(
                "T={t} seed={seed}: best f={:.3e} at mu={:.3}; interior-mu range [{:.3},{:.3}] ({:.0}s)",
                best.0, best.1, lo, hi, start.elapsed().as_secs_f64()
            );
        }
    }
}
