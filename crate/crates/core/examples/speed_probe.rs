//! Scratch: per-solve speed across scales.
use corr_core::envelope::FitSession;
use corr_core::{draw_samples, make_function, CorrConfig, FunctionName};
use std::time::Instant;

fn main() {
    for (dim, t) in [(10usize, 50_000usize), (10, 100_000), (5, 100_000), (2, 100_000)] {
        let f = make_function(FunctionName::Salomon, dim).unwrap();
        let cfg = CorrConfig { t, seed: 0, ..CorrConfig::default() };
        let (s1, s2) = draw_samples(&f, &cfg).unwrap();
        let session = FitSession::new(&s1, &s2, cfg.box_bound, cfg.lp_tol).unwrap();
        let start = Instant::now();
        let mut count = 0;
        for k in 0..12 {
            let mu = -1.0 + 2.5 * k as f64 / 11.0;
            let _ = session.fit(mu).unwrap();
            count += 1;
        }
        println!("dim={dim} T={t}: {:.0} ms/solve", start.elapsed().as_secs_f64() * 1e3 / count as f64);
    }
}
