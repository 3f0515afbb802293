//! Mean-constrained L1 fit of the convex quadratic surrogate.
//!
//! Given one sample set to fit against and a second set that anchors the
//! surrogate's empirical mean, [`fit_envelope`] solves
//!
//! ```text
//!   minimize   (1/T) sum_{x in fit set} |h(x; theta) - f(x)|
//!   subject to mean over mean set of h(x; theta) = mu
//!              theta1 >= 0,  |theta_flat| <= box_bound
//! ```
//!
//! The box keeps the program bounded; the sign constraint keeps the fit
//! convex. A [`FitSession`] amortizes the feature matrix across repeated
//! fits at different `mu` over the same samples.

use std::io::Write;

use crate::error::{CorrError, Result};
use crate::lp::{solve_lad, LadProblem, LadStatus};
use crate::sampler::SampleSet;
use crate::surrogate::{features, QuadSurrogate};
use crate::Float;

/// theta1 entries in `[-CLAMP_TOL, 0)` after the solve are snapped to zero;
/// anything more negative is reported as a numeric failure.
const CLAMP_TOL: Float = 1e-8;

/// One constrained L1 regression instance.
#[derive(Debug, Clone)]
pub struct FitProblem<'a> {
    pub fit_set: &'a SampleSet,
    pub mean_set: &'a SampleSet,
    pub mu: Float,
    pub box_bound: Float,
    pub lp_tol: Float,
}

impl<'a> FitProblem<'a> {
    pub fn new(fit_set: &'a SampleSet, mean_set: &'a SampleSet, mu: Float) -> Self {
        FitProblem {
            fit_set,
            mean_set,
            mu,
            box_bound: 1e6,
            lp_tol: 1e-8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitStatus {
    Optimal,
    IterationCap,
    InfeasibleNumeric,
}

/// Solution of a fit: parameters, empirical mean absolute error, status.
#[derive(Debug, Clone)]
pub struct FitResult {
    pub theta: QuadSurrogate,
    pub objective: Float,
    pub status: FitStatus,
}

/// Reusable fit state over a fixed pair of sample sets.
pub struct FitSession {
    rows: Vec<Float>,
    values: Vec<Float>,
    mean_row: Vec<Float>,
    dim: usize,
    t: usize,
    box_bound: Float,
    lp_tol: Float,
}

impl FitSession {
    pub fn new(
        fit_set: &SampleSet,
        mean_set: &SampleSet,
        box_bound: Float,
        lp_tol: Float,
    ) -> Result<Self> {
        if fit_set.is_empty() || mean_set.is_empty() {
            return Err(CorrError::EmptySamples);
        }
        let dim = fit_set.dim();
        if mean_set.dim() != dim {
            return Err(CorrError::DimensionMismatch {
                expected: dim,
                got: mean_set.dim(),
            });
        }
        if box_bound <= 0.0 {
            return Err(CorrError::NonPositive {
                what: "box_bound",
                got: box_bound,
            });
        }
        if lp_tol <= 0.0 {
            return Err(CorrError::NonPositive {
                what: "lp_tol",
                got: lp_tol,
            });
        }
        let p = 2 * dim + 1;
        let t = fit_set.len();
        let mut rows = Vec::with_capacity(t * p);
        for x in fit_set.points() {
            rows.extend(features(x));
        }
        let mut mean_row = vec![0.0; p];
        for x in mean_set.points() {
            for (m, phi) in mean_row.iter_mut().zip(features(x)) {
                *m += phi;
            }
        }
        let inv = 1.0 / mean_set.len() as Float;
        for m in mean_row.iter_mut() {
            *m *= inv;
        }
        // the offset coordinate averages the constant feature exactly
        mean_row[p - 1] = 1.0;
        Ok(FitSession {
            rows,
            values: fit_set.values().to_vec(),
            mean_row,
            dim,
            t,
            box_bound,
            lp_tol,
        })
    }

    /// Empirical mean of the raw function values over the fit set.
    pub fn value_mean(&self) -> Float {
        self.values.iter().sum::<Float>() / self.t as Float
    }

    pub fn fit(&self, mu: Float) -> Result<FitResult> {
        if !mu.is_finite() {
            return Err(CorrError::NonFinite("mu"));
        }
        let p = 2 * self.dim + 1;
        if mu.abs() > self.box_bound {
            // the equality cannot meet the box; report rather than solve
            let mut flat = vec![0.0; p];
            flat[p - 1] = mu.clamp(-self.box_bound, self.box_bound);
            let theta = QuadSurrogate::from_flat(&flat, self.dim)?;
            let objective = self.objective_of(&flat);
            return Ok(FitResult {
                theta,
                objective,
                status: FitStatus::InfeasibleNumeric,
            });
        }

        let lower: Vec<Float> = (0..p)
            .map(|j| if j < self.dim { 0.0 } else { -self.box_bound })
            .collect();
        let upper = vec![self.box_bound; p];
        let lp = LadProblem {
            rows: &self.rows,
            t: self.t,
            p,
            values: &self.values,
            mean_row: &self.mean_row,
            mu,
            lower: &lower,
            upper: &upper,
        };
        let tol = (self.lp_tol * 0.1).clamp(1e-12, 1e-6);
        let sol = solve_lad(&lp, tol)?;

        let mut status = match sol.status {
            LadStatus::Optimal => FitStatus::Optimal,
            LadStatus::IterationCap => FitStatus::IterationCap,
        };
        let mut flat = sol.theta;
        if flat.iter().any(|v| !v.is_finite()) {
            // unusable solve: fall back to the always-feasible witness
            flat = vec![0.0; p];
            flat[p - 1] = mu;
            status = FitStatus::InfeasibleNumeric;
        }
        // exact projection onto the equality constraint along the offset axis
        let resid = mu - dot(&self.mean_row, &flat);
        flat[p - 1] += resid;
        for coef in flat.iter_mut().take(self.dim) {
            if *coef < 0.0 {
                if *coef < -CLAMP_TOL {
                    status = FitStatus::InfeasibleNumeric;
                }
                *coef = 0.0;
            }
        }
        let objective = self.objective_of(&flat);
        Ok(FitResult {
            theta: QuadSurrogate::from_flat(&flat, self.dim)?,
            objective,
            status,
        })
    }

    fn objective_of(&self, flat: &[Float]) -> Float {
        let p = flat.len();
        let mut total = 0.0;
        for (row, &v) in self.rows.chunks_exact(p).zip(&self.values) {
            total += (dot(row, flat) - v).abs();
        }
        total / self.t as Float
    }
}

fn dot(a: &[Float], b: &[Float]) -> Float {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves one fit instance from scratch.
pub fn fit_envelope(problem: &FitProblem) -> Result<FitResult> {
    let session = FitSession::new(
        problem.fit_set,
        problem.mean_set,
        problem.box_bound,
        problem.lp_tol,
    )?;
    session.fit(problem.mu)
}

/// Writes the fit instance in a plain text form for external verification.
pub fn dump_lp<W: Write>(problem: &FitProblem, mut w: W) -> Result<()> {
    let session = FitSession::new(
        problem.fit_set,
        problem.mean_set,
        problem.box_bound,
        problem.lp_tol,
    )?;
    let p = 2 * session.dim + 1;
    writeln!(
        w,
        "lad-fit T={} p={} mu={} box={}",
        session.t, p, problem.mu, problem.box_bound
    )?;
    writeln!(w, "minimize (1/{}) * sum_i |<a_i, theta> - f_i|", session.t)?;
    for (i, (row, v)) in session
        .rows
        .chunks_exact(p)
        .zip(&session.values)
        .enumerate()
    {
        writeln!(w, "row {i}: a={row:?} f={v}")?;
    }
    writeln!(w, "mean: c={:?} = {}", session.mean_row, problem.mu)?;
    for j in 0..p {
        let lo = if j < session.dim { 0.0 } else { -problem.box_bound };
        writeln!(w, "bound {j}: {lo} <= theta[{j}] <= {}", problem.box_bound)?;
    }
    Ok(())
}
