//! The convex diagonal quadratic surrogate and its exact minimization over a
//! ball.
//!
//! The surrogate is `h(x) = <theta1, x^2> + <theta2, x> + theta3` with
//! `theta1 >= 0` elementwise, so it is separable and convex. Minimizing it
//! over `||x|| <= r` either takes the unconstrained minimizer (when it lies
//! inside the ball) or solves the scalar boundary condition
//! `||x(lambda)|| = r` with `x_i(lambda) = -theta2_i / (2 theta1_i + 2 lambda)`,
//! which is strictly decreasing in `lambda > 0`.

use crate::error::{CorrError, Result};
use crate::{norm, Float};

/// Iteration cap for the boundary bisection.
const SECULAR_MAX_ITERS: usize = 200;

/// Parameters of the convex quadratic surrogate.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadSurrogate {
    theta1: Vec<Float>,
    theta2: Vec<Float>,
    theta3: Float,
}

/// Feature map `(x^2, x, 1)`, so `h(x) = <theta_flat, features(x)>`.
pub fn features(x: &[Float]) -> Vec<Float> {
    let mut phi = Vec::with_capacity(2 * x.len() + 1);
    phi.extend(x.iter().map(|v| v * v));
    phi.extend_from_slice(x);
    phi.push(1.0);
    phi
}

impl QuadSurrogate {
    pub fn new(theta1: Vec<Float>, theta2: Vec<Float>, theta3: Float) -> Result<Self> {
        if theta1.len() != theta2.len() {
            return Err(CorrError::DimensionMismatch {
                expected: theta1.len(),
                got: theta2.len(),
            });
        }
        Ok(Self {
            theta1,
            theta2,
            theta3,
        })
    }

    /// Rebuilds a surrogate from the flat layout `[theta1 | theta2 | theta3]`.
    pub fn from_flat(flat: &[Float], dim: usize) -> Result<Self> {
        if flat.len() != 2 * dim + 1 {
            return Err(CorrError::DimensionMismatch {
                expected: 2 * dim + 1,
                got: flat.len(),
            });
        }
        Ok(Self {
            theta1: flat[..dim].to_vec(),
            theta2: flat[dim..2 * dim].to_vec(),
            theta3: flat[2 * dim],
        })
    }

    pub fn dim(&self) -> usize {
        self.theta1.len()
    }

    /// Number of free parameters, `2 * dim + 1`.
    pub fn param_count(&self) -> usize {
        2 * self.dim() + 1
    }

    pub fn theta1(&self) -> &[Float] {
        &self.theta1
    }

    pub fn theta2(&self) -> &[Float] {
        &self.theta2
    }

    pub fn theta3(&self) -> Float {
        self.theta3
    }

    /// Flat parameter layout matching [`features`].
    pub fn flat(&self) -> Vec<Float> {
        let mut out = Vec::with_capacity(self.param_count());
        out.extend_from_slice(&self.theta1);
        out.extend_from_slice(&self.theta2);
        out.push(self.theta3);
        out
    }

    pub fn h_eval(&self, x: &[Float]) -> Result<Float> {
        if x.len() != self.dim() {
            return Err(CorrError::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        let mut v = self.theta3;
        for i in 0..x.len() {
            v += self.theta1[i] * x[i] * x[i] + self.theta2[i] * x[i];
        }
        Ok(v)
    }

    /// Exact minimizer of the surrogate over the ball of the given radius.
    ///
    /// Requires `theta1 >= 0` elementwise. `tol` bounds the residual
    /// `| ||x|| - radius |` of a boundary solution.
    pub fn minimize_on_ball(&self, radius: Float, tol: Float) -> Result<Vec<Float>> {
        if radius <= 0.0 {
            return Err(CorrError::NonPositive {
                what: "radius",
                got: radius,
            });
        }
        if tol <= 0.0 {
            return Err(CorrError::NonPositive {
                what: "tol",
                got: tol,
            });
        }
        if let Some((index, &value)) = self
            .theta1
            .iter()
            .enumerate()
            .find(|(_, &a)| a < 0.0)
        {
            return Err(CorrError::NonConvex { index, value });
        }
        if self
            .theta1
            .iter()
            .chain(self.theta2.iter())
            .any(|v| !v.is_finite())
        {
            return Err(CorrError::NonFinite("surrogate parameters"));
        }

        // Unconstrained minimizer, coordinate by coordinate. A coordinate with
        // zero curvature and nonzero slope has no finite minimizer, which
        // forces the solution onto the boundary.
        let n = self.dim();
        let mut interior = true;
        let mut x_u = vec![0.0; n];
        for i in 0..n {
            if self.theta1[i] > 0.0 {
                x_u[i] = -self.theta2[i] / (2.0 * self.theta1[i]);
            } else if self.theta2[i] != 0.0 {
                interior = false;
                break;
            }
        }
        if interior && norm(&x_u) <= radius {
            return Ok(x_u);
        }

        // Boundary: bisect the secular equation on lambda.
        let x_at = |lambda: Float| -> Vec<Float> {
            (0..n)
                .map(|i| {
                    let denom = 2.0 * self.theta1[i] + 2.0 * lambda;
                    if denom > 0.0 {
                        -self.theta2[i] / denom
                    } else {
                        0.0
                    }
                })
                .collect()
        };
        let mut lo = 0.0;
        let mut hi = norm(&self.theta2) / (2.0 * radius);
        // ||x(hi)|| <= radius by construction; nudge up if rounding disagrees
        for _ in 0..8 {
            if norm(&x_at(hi)) <= radius {
                break;
            }
            hi *= 2.0;
        }
        for _ in 0..SECULAR_MAX_ITERS {
            let mid = 0.5 * (lo + hi);
            let x = x_at(mid);
            let r = norm(&x);
            if (r - radius).abs() <= tol {
                return Ok(x);
            }
            if r > radius {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Err(CorrError::NoConvergence {
            what: "secular bisection",
            iterations: SECULAR_MAX_ITERS,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surrogate(t1: &[Float], t2: &[Float], t3: Float) -> QuadSurrogate {
        QuadSurrogate::new(t1.to_vec(), t2.to_vec(), t3).unwrap()
    }

    #[test]
    fn h_eval_known_values() {
        assert_eq!(surrogate(&[1.0], &[0.0], 0.0).h_eval(&[2.0]).unwrap(), 4.0);
        assert_eq!(
            surrogate(&[1.0, 1.0], &[0.0, 0.0], 0.0)
                .h_eval(&[1.0, 1.0])
                .unwrap(),
            2.0
        );
        // 2 * 2.25 - 3 * 1.5 + 5 = 5
        assert_eq!(
            surrogate(&[2.0], &[-3.0], 5.0).h_eval(&[1.5]).unwrap(),
            5.0
        );
        assert!(surrogate(&[1.0], &[0.0], 0.0).h_eval(&[1.0, 2.0]).is_err());
    }

    #[test]
    fn features_layout() {
        assert_eq!(features(&[0.0, 0.0]), vec![0.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(features(&[2.0]), vec![4.0, 2.0, 1.0]);
    }

    #[test]
    fn flat_round_trip() {
        let s = surrogate(&[1.0, 2.0], &[-3.0, 0.5], 7.0);
        let back = QuadSurrogate::from_flat(&s.flat(), 2).unwrap();
        assert_eq!(s, back);
        assert_eq!(s.param_count(), 5);
    }

    #[test]
    fn minimizer_clips_to_boundary() {
        // x^2 - 8x has unconstrained minimizer at 4, clipped to 2
        let x = surrogate(&[1.0], &[-8.0], 0.0)
            .minimize_on_ball(2.0, 1e-10)
            .unwrap();
        assert!((x[0] - 2.0).abs() < 1e-9, "x = {:?}", x);
    }

    #[test]
    fn symmetric_bowl_takes_origin() {
        let x = surrogate(&[1.0], &[0.0], 5.0)
            .minimize_on_ball(2.0, 1e-10)
            .unwrap();
        assert_eq!(x, vec![0.0]);
    }

    #[test]
    fn linear_objective_takes_endpoint() {
        let x = surrogate(&[0.0], &[3.0], 0.0)
            .minimize_on_ball(2.0, 1e-10)
            .unwrap();
        assert!((x[0] + 2.0).abs() < 1e-9, "x = {:?}", x);
    }

    #[test]
    fn all_zero_surrogate_takes_origin() {
        let x = surrogate(&[0.0, 0.0], &[0.0, 0.0], 3.0)
            .minimize_on_ball(2.0, 1e-10)
            .unwrap();
        assert_eq!(x, vec![0.0, 0.0]);
    }

    #[test]
    fn two_dim_boundary_solution() {
        // theta = ((1, 4), (-6, 0), 0): unconstrained minimizer (3, 0) is
        // outside, secular solve lands near (2, 0)
        let s = surrogate(&[1.0, 4.0], &[-6.0, 0.0], 0.0);
        let x = s.minimize_on_ball(2.0, 1e-10).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-8, "x = {:?}", x);
        assert!(x[1].abs() < 1e-12);
    }

    #[test]
    fn rejects_nonconvex() {
        let s = surrogate(&[-0.5], &[0.0], 0.0);
        assert!(matches!(
            s.minimize_on_ball(2.0, 1e-10),
            Err(CorrError::NonConvex { index: 0, .. })
        ));
    }

    #[test]
    fn secular_norm_is_decreasing_in_lambda() {
        let s = surrogate(&[0.5, 0.0, 2.0], &[3.0, -1.0, 0.25], 0.0);
        let x_at = |lambda: Float| -> Float {
            let x: Vec<Float> = (0..3)
                .map(|i| -s.theta2()[i] / (2.0 * s.theta1()[i] + 2.0 * lambda))
                .collect();
            norm(&x)
        };
        let mut prev = x_at(0.01);
        for k in 1..50 {
            let cur = x_at(0.01 + k as Float * 0.25);
            assert!(cur < prev);
            prev = cur;
        }
    }
}
