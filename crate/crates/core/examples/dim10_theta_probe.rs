//! Scratch: full theta at large T, 10D, plus objective of symmetric competitor.
use corr_core::envelope::FitSession;
use corr_core::{draw_samples, make_function, CorrConfig, FunctionName, Objective};

fn main() {
    let f = make_function(FunctionName::Salomon, 10).unwrap();
    for t in [16_000usize, 100_000] {
        let cfg = CorrConfig { t, seed: 0, ..CorrConfig::default() };
        let (s1, s2) = draw_samples(&f, &cfg).unwrap();
        let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
        let fit = session.fit(0.909).unwrap();
        let t1 = fit.theta.theta1();
        let dead = t1.iter().filter(|&&a| a < 1e-6).count();
        let r2_mean: f64 = s2.points().iter().map(|x| x.iter().map(|v| v * v).sum::<f64>()).sum::<f64>() / s2.len() as f64;
        let mut best = (f64::INFINITY, 0.0);
        for k in 0..=900 {
            let a = 0.3 * k as f64 / 900.0;
            let c = 0.909 - a * r2_mean;
            let obj: f64 = s1.points().iter().zip(s1.values()).map(|(x, &v)| {
                let r2: f64 = x.iter().map(|u| u * u).sum();
                (a * r2 + c - v).abs()
            }).sum::<f64>() / s1.len() as f64;
            if obj < best.0 { best = (obj, a); }
        }
        println!(
            "T={t}: lp_obj={:.6} dead_coords={dead} t1_min={:.2e} t1_max={:.2e} | best_sym a={:.4} obj={:.6} gap={:.2e}",
            fit.objective, 
            t1.iter().cloned().fold(f64::INFINITY, f64::min),
            t1.iter().cloned().fold(0.0f64, f64::max),
            best.1, best.0, best.0 - fit.objective
        );
    }
}
