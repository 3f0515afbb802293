//! Scratch: inspect 10D salomon fits.
use corr_core::envelope::FitSession;
use corr_core::{draw_samples, estimate_r, make_function, CorrConfig, FunctionName, Objective};

fn main() {
    let f = make_function(FunctionName::Salomon, 10).unwrap();
    let cfg = CorrConfig { t: 2000, seed: 0, ..CorrConfig::default() };
    let (s1, s2) = draw_samples(&f, &cfg).unwrap();
    let r_hat = estimate_r((&s1, &s2)).unwrap();
    println!("r_hat = {r_hat:.4}");
    let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
    for mu in [0.3, 0.6, 0.909, 1.2, 1.5] {
        let fit = session.fit(mu).unwrap();
        let t1 = fit.theta.theta1();
        let t2 = fit.theta.theta2();
        let x = fit.theta.minimize_on_ball(2.0, 1e-10).unwrap();
        let norm_x = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        println!(
            "mu={mu:.3} status={:?} obj={:.4} t1:[{:.2e},{:.2e}] t2max={:.2e} t3={:.3} |x|={:.4} f(x)={:.4e}",
            fit.status, fit.objective,
            t1.iter().cloned().fold(f64::INFINITY, f64::min),
            t1.iter().cloned().fold(0.0f64, f64::max),
            t2.iter().map(|v| v.abs()).fold(0.0f64, f64::max),
            fit.theta.theta3(), norm_x,
            f.evaluate(&x).unwrap()
        );
    }
}
