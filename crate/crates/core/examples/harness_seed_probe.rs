//! Scratch: langerman T=200 across harness-style derived seeds.
use corr_core::{corr_optimize, make_function, CorrConfig, FunctionName};

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
fn derive_seed(base: u64, dim: usize, t: usize, trial: usize, method: &str) -> u64 {
    let mut h = splitmix64(dim as u64);
    h = splitmix64(h ^ (t as u64));
    h = splitmix64(h ^ (trial as u64));
    for b in method.bytes() { h = splitmix64(h ^ u64::from(b)); }
    base ^ h
}

fn main() {
    let f = make_function(FunctionName::Langerman, 1).unwrap();
    for base in [42u64, 60_606, 101_010] {
        let mut errors: Vec<f64> = (0..20)
            .map(|trial| {
                let seed = derive_seed(base, 1, 200, trial, "corr");
                let cfg = CorrConfig { t: 200, seed, ..CorrConfig::default() };
                corr_optimize(&f, &cfg).unwrap().f_hat
            })
            .collect();
        errors.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = 0.5 * (errors[9] + errors[10]);
        println!("base {base}: median={median:.4e} (q1={:.3e} q3={:.3e})", errors[4], errors[14]);
    }
}
