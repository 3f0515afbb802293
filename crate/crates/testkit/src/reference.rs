//! Native-coordinate benchmark formulas, written out directly from their
//! definitions. Used to cross-check the rescaled production implementations.

use crate::norm;

pub fn salomon(z: &[f64]) -> f64 {
    let r = norm(z);
    1.0 - (2.0 * std::f64::consts::PI * r).cos() + 0.5 * r
}

pub fn salomon_sq(z: &[f64]) -> f64 {
    let s = salomon(z);
    0.1 * s * s
}

/// Center fixed at 0.5 in every coordinate.
pub fn langerman(z: &[f64]) -> f64 {
    let d2: f64 = z.iter().map(|zi| (zi - 0.5) * (zi - 0.5)).sum();
    -(-d2 / std::f64::consts::PI).exp() * (std::f64::consts::PI * d2).cos() + 1.0
}

/// Zero plateau on the closed ball of radius 0.2, Salomon + Langerman outside.
pub fn salomon_langerman(z: &[f64]) -> f64 {
    if norm(z) <= 0.2 {
        0.0
    } else {
        salomon(z) + langerman(z)
    }
}

pub fn griewank(z: &[f64]) -> f64 {
    let sum: f64 = z.iter().map(|zi| zi * zi).sum::<f64>() / 4000.0;
    let prod: f64 = z
        .iter()
        .enumerate()
        .map(|(i, zi)| (zi / ((i + 1) as f64).sqrt()).cos())
        .product();
    0.1 * (1.0 + sum - prod)
}
