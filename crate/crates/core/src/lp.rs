//! Interior-point solver for box- and mean-constrained least-absolute-
//! deviation regression:
//!
//! ```text
//!   minimize   sum_i |a_i . theta - f_i|
//!   subject to c . theta = mu,   l <= theta <= u
//! ```
//!
//! This is the linear program behind the envelope fit. The solver is a
//! primal-dual path-following method with a Mehrotra predictor-corrector
//! step. The objective carries weights `w = 1/T` so the dual variables stay
//! O(1) regardless of the sample count. Writing the residuals as
//! `r+ - r- = A theta - f` with `r+, r- >= 0` and the dual as `v` in
//! `[-w, w]^T` (plus bound multipliers `pi, rho` and the equality multiplier
//! `lambda`), every Newton step reduces to a single positive-definite solve
//! of size `p = dim(theta)`:
//!
//! ```text
//!   (A' D^-1 A + E) dtheta - c dlambda = h,     c . dtheta = e2
//! ```
//!
//! so the per-iteration cost is `O(T p^2)` regardless of how large the
//! sample count `T` grows. All pivoting and parameters are fixed, which makes
//! the solve deterministic for identical inputs.

use crate::{Float, Result};

const FRACTION_TO_BOUNDARY: Float = 0.99995;
const MAX_ITERS: usize = 150;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum LadStatus {
    Optimal,
    IterationCap,
}

#[derive(Debug, Clone)]
pub(crate) struct LadSolution {
    pub theta: Vec<Float>,
    pub status: LadStatus,
    pub iterations: usize,
}

pub(crate) struct LadProblem<'a> {
    /// Row-major T x p design matrix.
    pub rows: &'a [Float],
    pub t: usize,
    pub p: usize,
    pub values: &'a [Float],
    /// Coefficients of the equality constraint `c . theta = mu`.
    pub mean_row: &'a [Float],
    pub mu: Float,
    pub lower: &'a [Float],
    pub upper: &'a [Float],
}

impl LadProblem<'_> {
    fn row(&self, i: usize) -> &[Float] {
        &self.rows[i * self.p..(i + 1) * self.p]
    }

    /// `A theta` into `out`.
    fn apply(&self, theta: &[Float], out: &mut [Float]) {
        for i in 0..self.t {
            out[i] = dot(self.row(i), theta);
        }
    }

    /// `A' w` into `out`.
    fn apply_transpose(&self, w: &[Float], out: &mut [Float]) {
        out.fill(0.0);
        for i in 0..self.t {
            let wi = w[i];
            if wi != 0.0 {
                for (o, &aij) in out.iter_mut().zip(self.row(i)) {
                    *o += wi * aij;
                }
            }
        }
    }
}

fn dot(a: &[Float], b: &[Float]) -> Float {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dense lower-Cholesky factorization; `None` when a pivot degenerates.
fn cholesky(m: &[Float], p: usize) -> Option<Vec<Float>> {
    let mut l = vec![0.0; p * p];
    for i in 0..p {
        for j in 0..=i {
            let mut sum = m[i * p + j];
            for k in 0..j {
                sum -= l[i * p + k] * l[j * p + k];
            }
            if i == j {
                if sum <= 0.0 || !sum.is_finite() {
                    return None;
                }
                l[i * p + i] = sum.sqrt();
            } else {
                l[i * p + j] = sum / l[j * p + j];
            }
        }
    }
    Some(l)
}

fn chol_solve(l: &[Float], p: usize, b: &[Float]) -> Vec<Float> {
    let mut y = vec![0.0; p];
    for i in 0..p {
        let mut sum = b[i];
        for k in 0..i {
            sum -= l[i * p + k] * y[k];
        }
        y[i] = sum / l[i * p + i];
    }
    let mut x = vec![0.0; p];
    for i in (0..p).rev() {
        let mut sum = y[i];
        for k in i + 1..p {
            sum -= l[k * p + i] * x[k];
        }
        x[i] = sum / l[i * p + i];
    }
    x
}

struct Iterate {
    theta: Vec<Float>,
    lambda: Float,
    v: Vec<Float>,
    r_pos: Vec<Float>,
    r_neg: Vec<Float>,
    pi: Vec<Float>,
    rho: Vec<Float>,
}

impl Iterate {
    fn start(lp: &LadProblem) -> Self {
        let (t, p) = (lp.t, lp.p);
        let mut theta = vec![0.0; p];
        for j in 0..p {
            // strictly interior start: one unit above a zero lower bound
            if lp.lower[j] == 0.0 {
                theta[j] = 1.0_f64.min(0.5 * lp.upper[j]);
            }
        }
        // satisfy the equality constraint from the start; Newton steps keep
        // it satisfied, so the multiplier never has to absorb a transient.
        // The last coordinate is the surrogate offset with coefficient 1.
        let back = p - 1;
        let shift = (lp.mu - dot(lp.mean_row, &theta)) / lp.mean_row[back];
        let adjusted = theta[back] + shift;
        if lp.mean_row[back] != 0.0
            && adjusted > lp.lower[back] + 1.0
            && adjusted < lp.upper[back] - 1.0
        {
            theta[back] = adjusted;
        }
        let mut resid = vec![0.0; t];
        lp.apply(&theta, &mut resid);
        for (ri, &fi) in resid.iter_mut().zip(lp.values) {
            *ri -= fi;
        }
        let pad = 1.0 + resid.iter().map(|r| r.abs()).sum::<Float>() / t as Float;
        let r_pos: Vec<Float> = resid.iter().map(|&r| r.max(0.0) + pad).collect();
        let r_neg: Vec<Float> = resid.iter().map(|&r| (-r).max(0.0) + pad).collect();
        let w = 1.0 / t as Float;
        // duals start sign-aligned with the residuals but strictly interior
        let v: Vec<Float> = resid
            .iter()
            .map(|&r| 0.7 * w * r / (r.abs() + pad))
            .collect();
        let pi: Vec<Float> = (0..p).map(|j| w / (theta[j] - lp.lower[j])).collect();
        let rho: Vec<Float> = (0..p).map(|j| w / (lp.upper[j] - theta[j])).collect();
        Iterate {
            theta,
            lambda: 0.0,
            v,
            r_pos,
            r_neg,
            pi,
            rho,
        }
    }

    fn complementarity_gap(&self, lp: &LadProblem, w: Float) -> Float {
        let mut gap = 0.0;
        for i in 0..lp.t {
            gap += self.r_pos[i] * (w + self.v[i]) + self.r_neg[i] * (w - self.v[i]);
        }
        for j in 0..lp.p {
            gap += self.pi[j] * (self.theta[j] - lp.lower[j])
                + self.rho[j] * (lp.upper[j] - self.theta[j]);
        }
        gap
    }
}

struct Step {
    dtheta: Vec<Float>,
    dlambda: Float,
    dv: Vec<Float>,
    dr_pos: Vec<Float>,
    dr_neg: Vec<Float>,
    dpi: Vec<Float>,
    drho: Vec<Float>,
}

/// Solves the problem to the given relative tolerance.
pub(crate) fn solve_lad(lp: &LadProblem, tol: Float) -> Result<LadSolution> {
    debug_assert_eq!(lp.rows.len(), lp.t * lp.p);
    debug_assert_eq!(lp.values.len(), lp.t);
    let (t, p) = (lp.t, lp.p);
    let w = 1.0 / t as Float;
    let mut it = Iterate::start(lp);
    let value_scale = 1.0 + lp.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    // best finite iterate, kept as the fallback when the path degenerates
    let mut best_theta = it.theta.clone();
    let mut best_score = Float::INFINITY;

    let mut ax = vec![0.0; t];
    for iter in 0..MAX_ITERS {
        // residuals
        lp.apply(&it.theta, &mut ax);
        let e1: Vec<Float> = (0..t)
            .map(|i| lp.values[i] - ax[i] + it.r_pos[i] - it.r_neg[i])
            .collect();
        let e2 = lp.mu - dot(lp.mean_row, &it.theta);
        let mut atv = vec![0.0; p];
        lp.apply_transpose(&it.v, &mut atv);
        let e3: Vec<Float> = (0..p)
            .map(|j| -(atv[j] + it.lambda * lp.mean_row[j] + it.pi[j] - it.rho[j]))
            .collect();

        let gap = it.complementarity_gap(lp, w);
        let pobj: Float = it.r_pos.iter().chain(it.r_neg.iter()).sum::<Float>() * w;
        let rp = e1.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let rd = e3.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        // the dual residual floor scales with the bound multipliers
        let dual_scale = it
            .pi
            .iter()
            .chain(it.rho.iter())
            .fold(1.0 + it.lambda.abs(), |m, v| m.max(v.abs()));
        if std::env::var("CORR_LP_TRACE").is_ok() {
            eprintln!(
                "iter {iter}: gap={:.3e} pobj={:.6e} rp={:.3e} rd={:.3e} e2={:.3e} lam={:.3e} pi={:.2e} rho={:.2e}",
                gap, pobj, rp, rd, e2, it.lambda,
                it.pi.iter().fold(0.0f64, |m, v| m.max(*v)),
                it.rho.iter().fold(0.0f64, |m, v| m.max(*v)),
            );
        }
        let score = gap.abs() / (1.0 + pobj.abs()) + rp / value_scale + e2.abs();
        if !score.is_finite() || it.theta.iter().any(|v| !v.is_finite()) {
            // numerical breakdown at denormal slacks: keep the best iterate
            return Ok(LadSolution {
                theta: best_theta,
                status: LadStatus::IterationCap,
                iterations: iter,
            });
        }
        if score < best_score {
            best_score = score;
            best_theta.copy_from_slice(&it.theta);
        }

        if gap / (1.0 + pobj.abs()) < tol
            && rp < tol * value_scale
            && e2.abs() < tol * (1.0 + lp.mu.abs())
            && rd < tol * 10.0 * dual_scale
        {
            return Ok(LadSolution {
                theta: it.theta,
                status: LadStatus::Optimal,
                iterations: iter,
            });
        }

        // diagonal scalings
        let alpha_pos: Vec<Float> = it.v.iter().map(|&vi| w + vi).collect();
        let alpha_neg: Vec<Float> = it.v.iter().map(|&vi| w - vi).collect();
        let d: Vec<Float> = (0..t)
            .map(|i| it.r_pos[i] / alpha_pos[i] + it.r_neg[i] / alpha_neg[i])
            .collect();
        let g: Vec<Float> = (0..p).map(|j| it.theta[j] - lp.lower[j]).collect();
        let s: Vec<Float> = (0..p).map(|j| lp.upper[j] - it.theta[j]).collect();

        // Schur matrix M = A' D^-1 A + E, factored once per iteration.
        // Lower triangle only; the zips keep the hot loop free of bounds checks.
        let mut m = vec![0.0; p * p];
        for i in 0..t {
            let row = lp.row(i);
            let w = 1.0 / d[i];
            for (a, &ra) in row.iter().enumerate() {
                let wa = w * ra;
                let dst = &mut m[a * p..a * p + a + 1];
                for (mb, &rb) in dst.iter_mut().zip(row) {
                    *mb += wa * rb;
                }
            }
        }
        for j in 0..p {
            m[j * p + j] += it.pi[j] / g[j] + it.rho[j] / s[j];
        }
        for a in 0..p {
            for b in a + 1..p {
                m[a * p + b] = m[b * p + a];
            }
        }
        let mut chol = cholesky(&m, p);
        let diag_scale = 1.0 + m.iter().step_by(p + 1).fold(0.0f64, |x, &y| x.max(y));
        let mut ridge = 1e-12 * diag_scale;
        while chol.is_none() && ridge <= 1e-2 * diag_scale {
            let mut m2 = m.clone();
            for j in 0..p {
                m2[j * p + j] += ridge;
            }
            chol = cholesky(&m2, p);
            ridge *= 1e3;
        }
        let Some(chol) = chol else {
            return Ok(LadSolution {
                theta: best_theta,
                status: LadStatus::IterationCap,
                iterations: iter,
            });
        };
        let m_inv_c = chol_solve(&chol, p, lp.mean_row);
        let c_m_inv_c = dot(lp.mean_row, &m_inv_c);

        // `feas = true` targets the feasibility residuals as well; corrections
        // pass `feas = false` so they only recenter complementarity.
        let solve_step = |e4: &[Float], e5: &[Float], e6: &[Float], e7: &[Float],
                          feas: bool|
         -> Step {
            // fold the complementarity targets into the residual rows
            let e1_tilde: Vec<Float> = (0..t)
                .map(|i| {
                    let base = if feas { e1[i] } else { 0.0 };
                    base + e4[i] / alpha_pos[i] - e5[i] / alpha_neg[i]
                })
                .collect();
            let scaled: Vec<Float> = (0..t).map(|i| e1_tilde[i] / d[i]).collect();
            let mut h = vec![0.0; p];
            lp.apply_transpose(&scaled, &mut h);
            for j in 0..p {
                h[j] += e6[j] / g[j] - e7[j] / s[j];
                if feas {
                    h[j] -= e3[j];
                }
            }
            let m_inv_h = chol_solve(&chol, p, &h);
            let rhs2 = if feas { e2 } else { 0.0 };
            let dlambda = (rhs2 - dot(lp.mean_row, &m_inv_h)) / c_m_inv_c;
            let dtheta: Vec<Float> = (0..p).map(|j| m_inv_h[j] + dlambda * m_inv_c[j]).collect();
            let mut a_dtheta = vec![0.0; t];
            lp.apply(&dtheta, &mut a_dtheta);
            let dv: Vec<Float> = (0..t).map(|i| (e1_tilde[i] - a_dtheta[i]) / d[i]).collect();
            let dr_pos: Vec<Float> = (0..t)
                .map(|i| (e4[i] - it.r_pos[i] * dv[i]) / alpha_pos[i])
                .collect();
            let dr_neg: Vec<Float> = (0..t)
                .map(|i| (e5[i] + it.r_neg[i] * dv[i]) / alpha_neg[i])
                .collect();
            let dpi: Vec<Float> = (0..p)
                .map(|j| (e6[j] - it.pi[j] * dtheta[j]) / g[j])
                .collect();
            let drho: Vec<Float> = (0..p)
                .map(|j| (e7[j] + it.rho[j] * dtheta[j]) / s[j])
                .collect();
            Step {
                dtheta,
                dlambda,
                dv,
                dr_pos,
                dr_neg,
                dpi,
                drho,
            }
        };

        let step_lengths = |st: &Step| -> (Float, Float) {
            let mut tp: Float = 1.0;
            let mut td: Float = 1.0;
            for i in 0..t {
                ratio(&mut tp, it.r_pos[i], st.dr_pos[i]);
                ratio(&mut tp, it.r_neg[i], st.dr_neg[i]);
                ratio(&mut td, alpha_pos[i], st.dv[i]);
                ratio(&mut td, alpha_neg[i], -st.dv[i]);
            }
            for j in 0..p {
                ratio(&mut tp, g[j], st.dtheta[j]);
                ratio(&mut tp, s[j], -st.dtheta[j]);
                ratio(&mut td, it.pi[j], st.dpi[j]);
                ratio(&mut td, it.rho[j], st.drho[j]);
            }
            (tp, td)
        };

        // predictor: pure Newton toward complementarity zero
        let e4_aff: Vec<Float> = (0..t).map(|i| -it.r_pos[i] * alpha_pos[i]).collect();
        let e5_aff: Vec<Float> = (0..t).map(|i| -it.r_neg[i] * alpha_neg[i]).collect();
        let e6_aff: Vec<Float> = (0..p).map(|j| -it.pi[j] * g[j]).collect();
        let e7_aff: Vec<Float> = (0..p).map(|j| -it.rho[j] * s[j]).collect();
        let aff = solve_step(&e4_aff, &e5_aff, &e6_aff, &e7_aff, true);
        let (tp_aff, td_aff) = step_lengths(&aff);

        let mut gap_aff = 0.0;
        for i in 0..t {
            gap_aff += (it.r_pos[i] + tp_aff * aff.dr_pos[i])
                * (alpha_pos[i] + td_aff * aff.dv[i])
                + (it.r_neg[i] + tp_aff * aff.dr_neg[i]) * (alpha_neg[i] - td_aff * aff.dv[i]);
        }
        for j in 0..p {
            gap_aff += (it.pi[j] + td_aff * aff.dpi[j]) * (g[j] + tp_aff * aff.dtheta[j])
                + (it.rho[j] + td_aff * aff.drho[j]) * (s[j] - tp_aff * aff.dtheta[j]);
        }
        let m_total = (2 * t + 2 * p) as Float;
        // cap sigma so a blocked affine step cannot trigger pure centering
        let sigma = ((gap_aff / gap).max(0.0).powi(3)).clamp(1e-8, 0.9);
        let gamma = sigma * gap / m_total;

        // corrector: recentred step with second-order terms, same factorization
        let e4: Vec<Float> = (0..t)
            .map(|i| gamma - it.r_pos[i] * alpha_pos[i] - aff.dr_pos[i] * aff.dv[i])
            .collect();
        let e5: Vec<Float> = (0..t)
            .map(|i| gamma - it.r_neg[i] * alpha_neg[i] - aff.dr_neg[i] * (-aff.dv[i]))
            .collect();
        let e6: Vec<Float> = (0..p)
            .map(|j| gamma - it.pi[j] * g[j] - aff.dpi[j] * aff.dtheta[j])
            .collect();
        let e7: Vec<Float> = (0..p)
            .map(|j| gamma - it.rho[j] * s[j] - aff.drho[j] * (-aff.dtheta[j]))
            .collect();
        let mut step = solve_step(&e4, &e5, &e6, &e7, true);
        let (mut tp, mut td) = step_lengths(&step);

        // extra centrality corrections on the same factorization: expand the
        // tentative step, pull outlier complementarity products back toward
        // gamma, and keep the combined step if it travels further
        for _ in 0..3 {
            if tp.min(td) >= 0.7 {
                break;
            }
            let tpe = (tp + 0.3).min(1.0);
            let tde = (td + 0.3).min(1.0);
            let clip = |prod: Float| -> Float {
                if prod < 0.1 * gamma {
                    0.1 * gamma - prod
                } else if prod > 10.0 * gamma {
                    10.0 * gamma - prod
                } else {
                    0.0
                }
            };
            let x4: Vec<Float> = (0..t)
                .map(|i| {
                    clip(
                        (it.r_pos[i] + tpe * step.dr_pos[i])
                            * (alpha_pos[i] + tde * step.dv[i]),
                    )
                })
                .collect();
            let x5: Vec<Float> = (0..t)
                .map(|i| {
                    clip(
                        (it.r_neg[i] + tpe * step.dr_neg[i])
                            * (alpha_neg[i] - tde * step.dv[i]),
                    )
                })
                .collect();
            let x6: Vec<Float> = (0..p)
                .map(|j| {
                    clip((it.pi[j] + tde * step.dpi[j]) * (g[j] + tpe * step.dtheta[j]))
                })
                .collect();
            let x7: Vec<Float> = (0..p)
                .map(|j| {
                    clip((it.rho[j] + tde * step.drho[j]) * (s[j] - tpe * step.dtheta[j]))
                })
                .collect();
            let extra = solve_step(&x4, &x5, &x6, &x7, false);
            let cand = Step {
                dtheta: add(&step.dtheta, &extra.dtheta),
                dlambda: step.dlambda + extra.dlambda,
                dv: add(&step.dv, &extra.dv),
                dr_pos: add(&step.dr_pos, &extra.dr_pos),
                dr_neg: add(&step.dr_neg, &extra.dr_neg),
                dpi: add(&step.dpi, &extra.dpi),
                drho: add(&step.drho, &extra.drho),
            };
            let (tp2, td2) = step_lengths(&cand);
            if tp2.min(td2) > tp.min(td) * 1.01 {
                step = cand;
                tp = tp2;
                td = td2;
            } else {
                break;
            }
        }

        let tp = FRACTION_TO_BOUNDARY * tp;
        let td = FRACTION_TO_BOUNDARY * td;
        if std::env::var("CORR_LP_TRACE").is_ok() {
            eprintln!("      sigma={sigma:.3e} tp={tp:.3e} td={td:.3e} tp_aff={tp_aff:.3e} td_aff={td_aff:.3e}");
        }

        for j in 0..p {
            it.theta[j] += tp * step.dtheta[j];
        }
        for i in 0..t {
            it.r_pos[i] += tp * step.dr_pos[i];
            it.r_neg[i] += tp * step.dr_neg[i];
            it.v[i] += td * step.dv[i];
        }
        it.lambda += td * step.dlambda;
        for j in 0..p {
            it.pi[j] += td * step.dpi[j];
            it.rho[j] += td * step.drho[j];
        }
    }

    let theta = if it.theta.iter().all(|v| v.is_finite()) {
        it.theta
    } else {
        best_theta
    };
    Ok(LadSolution {
        theta,
        status: LadStatus::IterationCap,
        iterations: MAX_ITERS,
    })
}

fn add(a: &[Float], b: &[Float]) -> Vec<Float> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Shrinks `t` so that `value + t * delta >= 0` stays satisfiable.
fn ratio(t: &mut Float, value: Float, delta: Float) {
    if delta < 0.0 {
        let bound = -value / delta;
        if bound < *t {
            *t = bound;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve_simple(
        rows: Vec<Vec<Float>>,
        values: Vec<Float>,
        mean_row: Vec<Float>,
        mu: Float,
        quad: usize,
    ) -> LadSolution {
        let p = mean_row.len();
        let flat: Vec<Float> = rows.iter().flatten().copied().collect();
        let lower: Vec<Float> = (0..p).map(|j| if j < quad { 0.0 } else { -1e6 }).collect();
        let upper = vec![1e6; p];
        let lp = LadProblem {
            rows: &flat,
            t: values.len(),
            p,
            values: &values,
            mean_row: &mean_row,
            mu,
            lower: &lower,
            upper: &upper,
        };
        solve_lad(&lp, 1e-9).unwrap()
    }

    fn objective(rows: &[Vec<Float>], values: &[Float], theta: &[Float]) -> Float {
        rows.iter()
            .zip(values)
            .map(|(r, &v)| (dot(r, theta) - v).abs())
            .sum::<Float>()
            / values.len() as Float
    }

    #[test]
    fn constant_fit_is_exact() {
        let sol = solve_simple(
            vec![vec![0.0, 0.0, 1.0]],
            vec![1.0],
            vec![0.0, 0.0, 1.0],
            1.0,
            1,
        );
        assert_eq!(sol.status, LadStatus::Optimal);
        assert!((sol.theta[2] - 1.0).abs() < 1e-7, "theta = {:?}", sol.theta);
    }

    #[test]
    fn pinned_mean_forces_unit_error() {
        let rows = vec![vec![0.0, 0.0, 1.0]];
        let sol = solve_simple(rows.clone(), vec![1.0], vec![0.0, 0.0, 1.0], 0.0, 1);
        assert_eq!(sol.status, LadStatus::Optimal);
        let obj = objective(&rows, &[1.0], &sol.theta);
        assert!((obj - 1.0).abs() < 1e-7, "obj = {obj}");
    }

    #[test]
    fn interpolating_fit_recovers_quadratic() {
        // f(x) = 2 x^2 - x + 0.5 sampled at 5 points, mu consistent with f
        let xs = [-1.5, -0.4, 0.2, 0.9, 1.7];
        let f = |x: Float| 2.0 * x * x - x + 0.5;
        let rows: Vec<Vec<Float>> = xs.iter().map(|&x| vec![x * x, x, 1.0]).collect();
        let values: Vec<Float> = xs.iter().map(|&x| f(x)).collect();
        let mean_x = [-1.0, 0.0, 1.0];
        let mean_row: Vec<Float> = vec![
            mean_x.iter().map(|x| x * x).sum::<Float>() / 3.0,
            mean_x.iter().sum::<Float>() / 3.0,
            1.0,
        ];
        let mu = mean_x.iter().map(|&x| f(x)).sum::<Float>() / 3.0;
        let sol = solve_simple(rows.clone(), values.clone(), mean_row, mu, 1);
        assert_eq!(sol.status, LadStatus::Optimal);
        let obj = objective(&rows, &values, &sol.theta);
        assert!(obj < 1e-7, "obj = {obj}, theta = {:?}", sol.theta);
        assert!((sol.theta[0] - 2.0).abs() < 1e-5);
        assert!((sol.theta[1] + 1.0).abs() < 1e-5);
        assert!((sol.theta[2] - 0.5).abs() < 1e-5);
    }

    #[test]
    fn matches_vertex_oracle_on_random_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(99);
        for case in 0..60 {
            let n = 1 + (case % 2);
            let p = 2 * n + 1;
            let t = 1 + (case % 6);
            let mut rows = Vec::new();
            let mut values = Vec::new();
            for _ in 0..t {
                let x: Vec<Float> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
                let mut row: Vec<Float> = x.iter().map(|v| v * v).collect();
                row.extend(x.iter());
                row.push(1.0);
                rows.push(row);
                values.push(rng.random_range(-3.0..3.0));
            }
            let mx: Vec<Float> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
            let mut mean_row: Vec<Float> = mx.iter().map(|v| v * v).collect();
            mean_row.extend(mx.iter());
            mean_row.push(1.0);
            let mu = rng.random_range(-2.0..2.0);

            let sol = solve_simple(rows.clone(), values.clone(), mean_row.clone(), mu, n);
            let got = objective(&rows, &values, &sol.theta);
            let (want, _) =
                corr_testkit::lad::lad_vertex_oracle(&rows, &values, &mean_row, mu, 1e6, n)
                    .unwrap();
            assert!(
                (got - want).abs() < 1e-6,
                "case {case}: got {got}, oracle {want}"
            );
            assert_eq!(sol.status, LadStatus::Optimal, "case {case}");
            assert!(sol.iterations < MAX_ITERS);
            let resid = dot(&mean_row, &sol.theta) - mu;
            assert!(resid.abs() < 1e-7, "case {case}: residual {resid}");
            for j in 0..n {
                assert!(sol.theta[j] >= -1e-8, "case {case}: theta1 = {:?}", sol.theta);
            }
        }
    }
}
