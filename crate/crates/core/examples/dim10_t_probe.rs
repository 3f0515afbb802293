//! Scratch: 10D salomon error vs sample count.
use corr_core::{corr_optimize, make_function, CorrConfig, FunctionName};
use std::time::Instant;

fn main() {
    let f = make_function(FunctionName::Salomon, 10).unwrap();
    for t in [4000usize, 8000, 16000] {
        for seed in [0u64, 1, 2] {
            let cfg = CorrConfig { t, seed, ..CorrConfig::default() };
            let start = Instant::now();
            let r = corr_optimize(&f, &cfg).unwrap();
            println!("T={t} seed={seed}: err={:.4e} ({:.1}s)", r.f_hat, start.elapsed().as_secs_f64());
        }
    }
}
