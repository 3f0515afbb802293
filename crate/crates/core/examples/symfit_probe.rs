//! Scratch: compare LP fit against the best symmetric quadratic, 10D salomon.
use corr_core::envelope::FitSession;
use corr_core::{draw_samples, make_function, CorrConfig, FunctionName, Objective};

fn main() {
    let f = make_function(FunctionName::Salomon, 10).unwrap();
    let cfg = CorrConfig { t: 16000, seed: 0, ..CorrConfig::default() };
    let (s1, s2) = draw_samples(&f, &cfg).unwrap();
    let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
    let mu = 0.909;
    let fit = session.fit(mu).unwrap();
    println!("LP fit objective = {:.6}", fit.objective);
    println!("theta1 = {:?}", fit.theta.theta1().iter().map(|v| (v * 1e4).round() / 1e4).collect::<Vec<_>>());

    // best symmetric quadratic a*||x||^2 + c with mean pinned to mu
    let r2_mean: f64 = s2.points().iter().map(|x| x.iter().map(|v| v * v).sum::<f64>()).sum::<f64>() / s2.len() as f64;
    let mut best = (f64::INFINITY, 0.0);
    for k in 0..=600 {
        let a = 0.3 * k as f64 / 600.0;
        let c = mu - a * r2_mean;
        let obj: f64 = s1.points().iter().zip(s1.values()).map(|(x, &v)| {
            let r2: f64 = x.iter().map(|u| u * u).sum();
            (a * r2 + c - v).abs()
        }).sum::<f64>() / s1.len() as f64;
        if obj < best.0 { best = (obj, a); }
    }
    println!("best symmetric: a={:.4} objective={:.6}", best.1, best.0);
}
