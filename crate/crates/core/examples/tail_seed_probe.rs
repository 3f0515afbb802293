//! Scratch: inspect fits behind the mid-tail errors.
use corr_core::envelope::FitSession;
use corr_core::{corr_optimize, draw_samples, estimate_r, make_function, CorrConfig, FunctionName, Objective};

fn main() {
    let f = make_function(FunctionName::Langerman, 1).unwrap();
    for seed in [4u64, 10, 16] {
        let cfg = CorrConfig { t: 200, seed, ..CorrConfig::default() };
        let r = corr_optimize(&f, &cfg).unwrap();
        let (s1, s2) = draw_samples(&f, &cfg).unwrap();
        let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
        let fit = session.fit(r.mu_hat).unwrap();
        let x = fit.theta.minimize_on_ball(2.0, 1e-10).unwrap();
        // where is the best achievable x for THIS sample set, over all mu?
        let r_hat = estimate_r((&s1, &s2)).unwrap();
        let mut best = (f64::INFINITY, 0.0f64);
        for k in 0..20_000 {
            let mu = -r_hat + 2.0 * r_hat * k as f64 / 19_999.0;
            let fit = session.fit(mu).unwrap();
            let xm = fit.theta.minimize_on_ball(2.0, 1e-10).unwrap();
            let g = f.evaluate(&xm).unwrap();
            if g < best.0 { best = (g, mu); }
        }
        println!("seed {seed}: err={:.4e} x_hat={:.4} mu_hat={:.4} theta=({:.4},{:.4},{:.4}) | dense20k: err={:.4e} at mu={:.4}",
            r.f_hat, x[0], r.mu_hat, fit.theta.theta1()[0], fit.theta.theta2()[0], fit.theta.theta3(), best.0, best.1);
    }
}
