//! Scratch: does any mu give an interior minimizer in 10D?
use corr_core::envelope::FitSession;
use corr_core::{draw_samples, estimate_r, make_function, CorrConfig, FunctionName, Objective};

fn main() {
    let f = make_function(FunctionName::Salomon, 10).unwrap();
    let cfg = CorrConfig { t: 16000, seed: 0, ..CorrConfig::default() };
    let (s1, s2) = draw_samples(&f, &cfg).unwrap();
    let r_hat = estimate_r((&s1, &s2)).unwrap();
    let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for k in 0..300 {
        let mu = -r_hat + 2.0 * r_hat * k as f64 / 299.0;
        let fit = session.fit(mu).unwrap();
        let x = fit.theta.minimize_on_ball(2.0, 1e-10).unwrap();
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let g = f.evaluate(&x).unwrap();
        if g < best.0 { best = (g, mu, norm); }
    }
    println!("best over 300 mu: f={:.4e} at mu={:.4}, |x|={:.4}", best.0, best.1, best.2);
}
