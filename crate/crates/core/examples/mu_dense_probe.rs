//! Scratch: dense mu sweep vs the driver's search (not a deliverable).
use corr_core::envelope::FitSession;
use corr_core::{corr_optimize, draw_samples, estimate_r, make_function, CorrConfig, FunctionName, Objective};

fn main() {
    let f = make_function(FunctionName::Langerman, 1).unwrap();
    for seed in [0u64, 7, 9, 15] {
        let cfg = CorrConfig { t: 200, seed, ..CorrConfig::default() };
        let r = corr_optimize(&f, &cfg).unwrap();
        let (s1, s2) = draw_samples(&f, &cfg).unwrap();
        let r_hat = estimate_r((&s1, &s2)).unwrap();
        let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
        let mut best = f64::INFINITY;
        let mut best_mu = 0.0;
        for k in 0..1200 {
            let mu = -r_hat + 2.0 * r_hat * k as f64 / 1199.0;
            let fit = session.fit(mu).unwrap();
            let x = fit.theta.minimize_on_ball(2.0, 1e-10).unwrap();
            let g = f.evaluate(&x).unwrap();
            if g < best { best = g; best_mu = mu; }
        }
        println!("seed {seed}: driver err={:.4e} (mu_hat={:.4}) | dense err={:.4e} (mu={:.4}) r_hat={:.3}",
            r.f_hat, r.mu_hat, best, best_mu, r_hat);
    }
}
