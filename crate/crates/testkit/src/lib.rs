//! Brute-force reference implementations used as independent oracles in tests.
//!
//! Nothing in here is shared with the production crates: every routine is a
//! from-scratch implementation of the mathematical definition, so that a test
//! comparing production output against this crate exercises two independent
//! computation paths.

pub mod lad;
pub mod quadmin;
pub mod reference;

/// Arithmetic mean of a slice. Panics on empty input.
pub fn mean(xs: &[f64]) -> f64 {
    assert!(!xs.is_empty());
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Median via full sort. Panics on empty input.
pub fn median(xs: &[f64]) -> f64 {
    assert!(!xs.is_empty());
    let mut v = xs.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

pub fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}
