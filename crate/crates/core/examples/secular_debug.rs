//! Scratch: find the surrogate that breaks the secular solve.
use corr_core::envelope::FitSession;
use corr_core::{draw_samples, estimate_r, make_function, CorrConfig, FunctionName};

fn main() {
    let f = make_function(FunctionName::Langerman, 1).unwrap();
    'outer: for seed in 0..200u64 {
        let cfg = CorrConfig { t: 200, seed, ..CorrConfig::default() };
        let (s1, s2) = draw_samples(&f, &cfg).unwrap();
        let r_hat = estimate_r((&s1, &s2)).unwrap();
        let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
        for k in 0..33 {
            let mu = -r_hat + 2.0 * r_hat * k as f64 / 32.0;
            let fit = session.fit(mu).unwrap();
            if fit.theta.minimize_on_ball(2.0, 1e-10).is_err() {
                println!("seed {seed} mu {mu}: theta1={:?} theta2={:?} theta3={}",
                    fit.theta.theta1(), fit.theta.theta2(), fit.theta.theta3());
                break 'outer;
            }
        }
    }
}
