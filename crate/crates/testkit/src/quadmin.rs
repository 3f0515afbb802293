//! Reference minimizer for a diagonal quadratic over a Euclidean ball:
//! coarse grid scan followed by projected gradient descent. Deliberately
//! avoids any closed-form boundary reasoning so it stays independent of the
//! production solver.

use crate::norm;

fn eval(theta1: &[f64], theta2: &[f64], theta3: f64, x: &[f64]) -> f64 {
    let mut v = theta3;
    for i in 0..x.len() {
        v += theta1[i] * x[i] * x[i] + theta2[i] * x[i];
    }
    v
}

fn project(x: &mut [f64], radius: f64) {
    let n = norm(x);
    if n > radius {
        let s = radius / n;
        for xi in x.iter_mut() {
            *xi *= s;
        }
    }
}

/// Returns `(value, point)` for min of `<theta1, x^2> + <theta2, x> + theta3`
/// over the ball of the given radius. `steps` is the per-axis grid resolution.
pub fn quad_min_on_ball(
    theta1: &[f64],
    theta2: &[f64],
    theta3: f64,
    radius: f64,
    steps: usize,
) -> (f64, Vec<f64>) {
    let dim = theta1.len();
    assert_eq!(dim, theta2.len());
    assert!(steps >= 2);

    // Grid scan over the cube, projecting outside points onto the ball so the
    // boundary region is covered too.
    let mut best_x = vec![0.0; dim];
    let mut best_v = eval(theta1, theta2, theta3, &best_x);
    let mut idx = vec![0usize; dim];
    loop {
        let mut x: Vec<f64> = idx
            .iter()
            .map(|&k| -radius + 2.0 * radius * k as f64 / (steps - 1) as f64)
            .collect();
        project(&mut x, radius);
        let v = eval(theta1, theta2, theta3, &x);
        if v < best_v {
            best_v = v;
            best_x = x;
        }
        // odometer increment
        let mut d = 0;
        loop {
            idx[d] += 1;
            if idx[d] < steps {
                break;
            }
            idx[d] = 0;
            d += 1;
            if d == dim {
                return polish(theta1, theta2, theta3, radius, best_x);
            }
        }
    }
}

/// Projected gradient descent with Armijo backtracking from the grid winner.
fn polish(
    theta1: &[f64],
    theta2: &[f64],
    theta3: f64,
    radius: f64,
    mut x: Vec<f64>,
) -> (f64, Vec<f64>) {
    let dim = x.len();
    let lip = theta1.iter().fold(0.0f64, |m, &a| m.max(2.0 * a)) + 1e-12;
    let mut fx = eval(theta1, theta2, theta3, &x);
    let mut step = 1.0 / lip;
    for _ in 0..2000 {
        let grad: Vec<f64> = (0..dim)
            .map(|i| 2.0 * theta1[i] * x[i] + theta2[i])
            .collect();
        let mut moved = false;
        let mut t = step;
        for _ in 0..60 {
            let mut cand: Vec<f64> = (0..dim).map(|i| x[i] - t * grad[i]).collect();
            project(&mut cand, radius);
            let fc = eval(theta1, theta2, theta3, &cand);
            if fc < fx - 1e-18 {
                let delta: f64 = (0..dim).map(|i| (cand[i] - x[i]).powi(2)).sum();
                x = cand;
                fx = fc;
                moved = true;
                step = (t * 2.0).min(1e6 / lip);
                if delta < 1e-30 {
                    return (fx, x);
                }
                break;
            }
            t *= 0.5;
        }
        if !moved {
            break;
        }
    }
    (fx, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interior_minimum() {
        // min of x^2 - 2x + 1 on [-2, 2] is 0 at x = 1
        let (v, x) = quad_min_on_ball(&[1.0], &[-2.0], 1.0, 2.0, 101);
        assert!(v.abs() < 1e-10, "v = {v}");
        assert!((x[0] - 1.0).abs() < 1e-5);
    }

    #[test]
    fn boundary_minimum() {
        // min of x^2 - 8x on [-2, 2] is at x = 2, value -12
        let (v, x) = quad_min_on_ball(&[1.0], &[-8.0], 0.0, 2.0, 101);
        assert!((v + 12.0).abs() < 1e-9, "v = {v}");
        assert!((x[0] - 2.0).abs() < 1e-6);
    }

    #[test]
    fn linear_on_interval() {
        let (v, x) = quad_min_on_ball(&[0.0], &[3.0], 0.0, 2.0, 101);
        assert!((v + 6.0).abs() < 1e-9);
        assert!((x[0] + 2.0).abs() < 1e-6);
    }
}
