//! Global minimization of black-box functions by fitting a convex surrogate
//! to random function evaluations and minimizing the surrogate instead.
//!
//! The pipeline: draw two sample sets uniformly from the domain ball, fit a
//! convex diagonal quadratic to the (point, value) pairs by mean-constrained
//! least-absolute-deviation regression, minimize the fitted surrogate exactly
//! over the ball, and search the scalar mean constraint for the value whose
//! surrogate minimizer scores best on the true function. [`corr_optimize`]
//! runs the whole loop; the individual stages are exposed per module.
//!
//! All numerics are `f64`; [`Float`] is the single place that pins that.

pub mod baselines;
pub mod driver;
pub mod envelope;
pub mod error;
mod lp;
pub mod sampler;
pub mod surrogate;
pub mod testbed;

/// Scalar type used throughout the crate.
pub type Float = f64;

pub use baselines::{
    nelder_mead, nelder_mead_start, random_search, simulated_annealing, BaselineResult, Method,
    SaConfig,
};
pub use driver::{
    corr_optimize, draw_samples, estimate_r, opt_procedure, polish, search_mu, CorrConfig,
    CorrResult,
};
pub use envelope::{fit_envelope, FitProblem, FitResult, FitStatus};
pub use error::{CorrError, Result};
pub use sampler::{
    draw_ball_uniform, draw_ball_uniform_stream, evaluate_set, SampleSet, SetId, GENERATOR_VERSION,
};
pub use surrogate::{features, QuadSurrogate};
pub use testbed::{make_function, FunctionName, TestFunction};

/// A black-box objective supported on a Euclidean ball centered at the origin.
///
/// Evaluation is the only channel of information: no gradients, no structure.
/// Implementations must be pure (same input, bit-identical output).
pub trait Objective {
    fn dim(&self) -> usize;
    fn domain_radius(&self) -> Float;
    fn evaluate(&self, x: &[Float]) -> Result<Float>;
}

pub(crate) fn norm(x: &[Float]) -> Float {
    x.iter().map(|v| v * v).sum::<Float>().sqrt()
}

/// Scales `x` back onto the ball when it lies outside (no-op otherwise).
pub(crate) fn project_to_ball(x: &mut [Float], radius: Float) {
    let n = norm(x);
    if n > radius {
        let s = radius / n;
        for xi in x.iter_mut() {
            *xi *= s;
        }
    }
}
