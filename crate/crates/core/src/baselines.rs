//! Budget-matched comparison optimizers: random search, simulated annealing,
//! and Nelder-Mead simplex descent. Every run counts true function
//! evaluations exactly and never exceeds its budget.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::error::{CorrError, Result};
use crate::sampler::one_ball_point;
use crate::{project_to_ball, Float, Objective};

/// Generator streams, disjoint from the sampler's streams 0-2.
const RANDOM_SEARCH_STREAM: u64 = 3;
const ANNEALING_STREAM: u64 = 4;
const NM_START_STREAM: u64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    RandomSearch,
    SimulatedAnnealing,
    NelderMead,
    CorrHybrid,
}

impl Method {
    pub fn token(&self) -> &'static str {
        match self {
            Method::RandomSearch => "random_search",
            Method::SimulatedAnnealing => "simulated_annealing",
            Method::NelderMead => "nelder_mead",
            Method::CorrHybrid => "corr_hybrid",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BaselineResult {
    pub method: Method,
    pub x_best: Vec<Float>,
    pub f_best: Float,
    pub eval_count: usize,
}

/// Annealing schedule and proposal parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SaConfig {
    pub t0: Float,
    pub cooling: Float,
    pub step_scale: Float,
}

impl Default for SaConfig {
    fn default() -> Self {
        SaConfig {
            t0: 1.0,
            cooling: 0.995,
            step_scale: 0.3,
        }
    }
}

/// Best of `budget` independent ball-uniform draws.
pub fn random_search<F: Objective + ?Sized>(
    f: &F,
    budget: usize,
    seed: u64,
) -> Result<BaselineResult> {
    if budget == 0 {
        return Err(CorrError::NonPositive {
            what: "budget",
            got: 0.0,
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(RANDOM_SEARCH_STREAM);
    let mut best_x = Vec::new();
    let mut best_f = Float::INFINITY;
    for _ in 0..budget {
        let x = one_ball_point(&mut rng, f.dim(), f.domain_radius());
        let v = f.evaluate(&x)?;
        if v < best_f {
            best_f = v;
            best_x = x;
        }
    }
    Ok(BaselineResult {
        method: Method::RandomSearch,
        x_best: best_x,
        f_best: best_f,
        eval_count: budget,
    })
}

/// Metropolis walk with geometric cooling `t_k = t0 * cooling^k` and Gaussian
/// proposals projected onto the domain ball. `t0 = 0` accepts improvements
/// only. Returns the best point ever visited; spends exactly `budget`
/// evaluations.
pub fn simulated_annealing<F: Objective + ?Sized>(
    f: &F,
    budget: usize,
    seed: u64,
    sa: &SaConfig,
) -> Result<BaselineResult> {
    if budget == 0 {
        return Err(CorrError::NonPositive {
            what: "budget",
            got: 0.0,
        });
    }
    if !(0.0..1.0).contains(&sa.cooling) {
        return Err(CorrError::InvalidConfig(
            "cooling must lie in (0, 1)".into(),
        ));
    }
    let dim = f.dim();
    let radius = f.domain_radius();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(ANNEALING_STREAM);

    let mut x = one_ball_point(&mut rng, dim, radius);
    let mut fx = f.evaluate(&x)?;
    let mut best_x = x.clone();
    let mut best_f = fx;
    let mut evals = 1usize;
    let mut temperature = sa.t0;
    while evals < budget {
        let mut cand: Vec<Float> = x
            .iter()
            .map(|&xi| xi + sa.step_scale * rng.sample::<Float, _>(StandardNormal))
            .collect();
        project_to_ball(&mut cand, radius);
        let fc = f.evaluate(&cand)?;
        evals += 1;
        let delta = fc - fx;
        let accept = if delta <= 0.0 {
            true
        } else if temperature > 0.0 {
            rng.random::<Float>() < (-delta / temperature).exp()
        } else {
            false
        };
        if accept {
            x = cand;
            fx = fc;
            if fx < best_f {
                best_f = fx;
                best_x = x.clone();
            }
        }
        temperature *= sa.cooling;
    }
    Ok(BaselineResult {
        method: Method::SimulatedAnnealing,
        x_best: best_x,
        f_best: best_f,
        eval_count: budget,
    })
}

/// Nelder-Mead from `x0` with at most `budget` evaluations. With a zero
/// budget the start point is returned untouched and `f_best` is a
/// bookkeeping re-evaluation outside the budget.
pub fn nelder_mead<F: Objective + ?Sized>(
    f: &F,
    x0: &[Float],
    budget: usize,
) -> Result<BaselineResult> {
    let (x_best, f_best, evals) = nelder_mead_core(f, x0, budget, 0.5, false)?;
    let f_best = match f_best {
        Some(v) => v,
        None => f.evaluate(&x_best)?,
    };
    Ok(BaselineResult {
        method: Method::NelderMead,
        x_best,
        f_best,
        eval_count: evals,
    })
}

/// Ball-uniform starting point for a Nelder-Mead baseline run.
pub fn nelder_mead_start<F: Objective + ?Sized>(f: &F, seed: u64) -> Vec<Float> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(NM_START_STREAM);
    one_ball_point(&mut rng, f.dim(), f.domain_radius())
}

/// Shared simplex descent. Returns `(best_x, best_f, evals)`; `best_f` is
/// `None` only when the budget allowed no evaluation at all. When `restarts`
/// is set, a collapsed simplex is rebuilt around the incumbent at a tenth of
/// the scale until the budget runs out.
pub(crate) fn nelder_mead_core<F: Objective + ?Sized>(
    f: &F,
    x0: &[Float],
    budget: usize,
    init_step: Float,
    restarts: bool,
) -> Result<(Vec<Float>, Option<Float>, usize)> {
    const ALPHA: Float = 1.0; // reflection
    const GAMMA: Float = 2.0; // expansion
    const RHO: Float = 0.5; // contraction
    const SIGMA: Float = 0.5; // shrink

    let dim = f.dim();
    if x0.len() != dim {
        return Err(CorrError::DimensionMismatch {
            expected: dim,
            got: x0.len(),
        });
    }
    let radius = f.domain_radius();
    let mut best_x = x0.to_vec();
    let mut best_f: Option<Float> = None;
    let mut evals = 0usize;

    macro_rules! eval {
        ($x:expr) => {{
            if evals >= budget {
                return Ok((best_x, best_f, evals));
            }
            let v = f.evaluate(&$x)?;
            evals += 1;
            if best_f.map_or(true, |b| v < b) {
                best_f = Some(v);
                best_x = $x.clone();
            }
            v
        }};
    }

    let mut scale = init_step;
    loop {
        // simplex around the incumbent
        let base = best_x.clone();
        let mut simplex: Vec<(Vec<Float>, Float)> = Vec::with_capacity(dim + 1);
        let fv = eval!(base);
        simplex.push((base.clone(), fv));
        for i in 0..dim {
            let mut p = base.clone();
            p[i] += scale;
            project_to_ball(&mut p, radius);
            let fv = eval!(p);
            simplex.push((p, fv));
        }

        loop {
            simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
            let spread = simplex[dim].1 - simplex[0].1;
            let diam = simplex
                .iter()
                .skip(1)
                .map(|(p, _)| {
                    p.iter()
                        .zip(&simplex[0].0)
                        .map(|(a, b)| (a - b) * (a - b))
                        .sum::<Float>()
                        .sqrt()
                })
                .fold(0.0f64, Float::max);
            if spread <= 1e-15 * (1.0 + simplex[0].1.abs()) && diam <= 1e-12 {
                break; // collapsed
            }

            let centroid: Vec<Float> = (0..dim)
                .map(|j| simplex[..dim].iter().map(|(p, _)| p[j]).sum::<Float>() / dim as Float)
                .collect();
            let worst = simplex[dim].clone();
            let mut reflected: Vec<Float> = (0..dim)
                .map(|j| centroid[j] + ALPHA * (centroid[j] - worst.0[j]))
                .collect();
            project_to_ball(&mut reflected, radius);
            let fr = eval!(reflected);

            if fr < simplex[0].1 {
                let mut expanded: Vec<Float> = (0..dim)
                    .map(|j| centroid[j] + GAMMA * (reflected[j] - centroid[j]))
                    .collect();
                project_to_ball(&mut expanded, radius);
                let fe = eval!(expanded);
                simplex[dim] = if fe < fr {
                    (expanded, fe)
                } else {
                    (reflected, fr)
                };
            } else if fr < simplex[dim - 1].1 {
                simplex[dim] = (reflected, fr);
            } else {
                let (mut contracted, toward): (Vec<Float>, Float) = if fr < worst.1 {
                    (
                        (0..dim)
                            .map(|j| centroid[j] + RHO * (reflected[j] - centroid[j]))
                            .collect(),
                        fr,
                    )
                } else {
                    (
                        (0..dim)
                            .map(|j| centroid[j] + RHO * (worst.0[j] - centroid[j]))
                            .collect(),
                        worst.1,
                    )
                };
                project_to_ball(&mut contracted, radius);
                let fc = eval!(contracted);
                if fc < toward {
                    simplex[dim] = (contracted, fc);
                } else {
                    // shrink toward the best vertex
                    for k in 1..=dim {
                        let mut p: Vec<Float> = (0..dim)
                            .map(|j| simplex[0].0[j] + SIGMA * (simplex[k].0[j] - simplex[0].0[j]))
                            .collect();
                        project_to_ball(&mut p, radius);
                        let fv = eval!(p);
                        simplex[k] = (p, fv);
                    }
                }
            }
        }

        if !restarts {
            break;
        }
        scale = (scale * 0.1).max(1e-10);
    }
    Ok((best_x, best_f, evals))
}
