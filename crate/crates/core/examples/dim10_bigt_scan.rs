//! Scratch: minimizer norm vs mu at T=1e5, 10D.
use corr_core::envelope::FitSession;
use corr_core::{draw_samples, estimate_r, make_function, CorrConfig, FunctionName, Objective};

fn main() {
    let f = make_function(FunctionName::Salomon, 10).unwrap();
    let cfg = CorrConfig { t: 100_000, seed: 0, ..CorrConfig::default() };
    let (s1, s2) = draw_samples(&f, &cfg).unwrap();
    let r_hat = estimate_r((&s1, &s2)).unwrap();
    let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for k in 0..48 {
        let mu = 0.2 + (1.6 - 0.2) * k as f64 / 47.0; // the plausible window
        let fit = session.fit(mu).unwrap();
        let x = fit.theta.minimize_on_ball(2.0, 1e-10).unwrap();
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let g = f.evaluate(&x).unwrap();
        if g < best.0 { best = (g, mu, norm); }
        if k % 6 == 0 {
            println!("mu={mu:.3}: |x|={norm:.3} f={g:.4}");
        }
    }
    println!("best: f={:.4e} at mu={:.3} |x|={:.3} (r_hat={r_hat:.3})", best.0, best.1, best.2);
}
