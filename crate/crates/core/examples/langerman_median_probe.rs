//! Scratch: distribution of errors at T=200 on the 1D langerman benchmark.
use corr_core::{corr_optimize, make_function, CorrConfig, FunctionName};

fn main() {
    let f = make_function(FunctionName::Langerman, 1).unwrap();
    let mut errors: Vec<f64> = Vec::new();
    for seed in 0..200u64 {
        let cfg = CorrConfig { t: 200, seed, ..CorrConfig::default() };
        errors.push(corr_optimize(&f, &cfg).unwrap().f_hat);
    }
    errors.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = errors.len();
    println!("min={:.3e} q1={:.3e} median={:.3e} q3={:.3e} max={:.3e}",
        errors[0], errors[n/4], 0.5*(errors[n/2-1]+errors[n/2]), errors[3*n/4], errors[n-1]);
    let below = errors.iter().filter(|&&e| e < 1e-2).count();
    println!("fraction below 1e-2: {}/{}", below, n);
}
