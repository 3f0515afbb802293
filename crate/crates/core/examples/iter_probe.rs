//! Scratch probe of solver iteration counts (not part of the deliverable).
use corr_core::envelope::FitSession;
use corr_core::{draw_samples, estimate_r, make_function, CorrConfig, FunctionName};
use std::time::Instant;

fn main() {
    let f = make_function(FunctionName::Salomon, 5).unwrap();
    let cfg = CorrConfig { t: 100_000, seed: 42, ..CorrConfig::default() };
    let (s1, s2) = draw_samples(&f, &cfg).unwrap();
    let r = estimate_r((&s1, &s2)).unwrap();
    let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
    let start = Instant::now();
    for k in 0..8 {
        let mu = -r + 2.0 * r * k as f64 / 7.0;
        let t0 = Instant::now();
        let fit = session.fit(mu).unwrap();
        println!("mu={mu:.3} obj={:.5} status={:?} {:.0}ms", fit.objective, fit.status, t0.elapsed().as_secs_f64()*1e3);
    }
    println!("total {:.1}s", start.elapsed().as_secs_f64());
}
