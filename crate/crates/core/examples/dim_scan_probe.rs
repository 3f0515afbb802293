//! Scratch: corr vs simplex baseline across dimensions.
use corr_core::{corr_optimize, make_function, nelder_mead, nelder_mead_start, CorrConfig, FunctionName};

fn median(xs: &mut Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len();
    0.5 * (xs[n / 2 - 1 + n % 2] + xs[n / 2])
}

fn main() {
    for dim in [10usize, 12, 16, 20] {
        let f = make_function(FunctionName::Salomon, dim).unwrap();
        let mut corr_err = Vec::new();
        let mut nm_err = Vec::new();
        for seed in 0..10u64 {
            let cfg = CorrConfig { t: 2000, seed, ..CorrConfig::default() };
            let r = corr_optimize(&f, &cfg).unwrap();
            corr_err.push(r.f_hat);
            let x0 = nelder_mead_start(&f, seed);
            let nm = nelder_mead(&f, &x0, r.eval_count).unwrap();
            nm_err.push(nm.f_best);
        }
        println!(
            "dim {dim}: corr median {:.4} | nm median {:.4}",
            median(&mut corr_err),
            median(&mut nm_err)
        );
    }
}
