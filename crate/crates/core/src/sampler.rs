//! Uniform sampling from the domain ball and batch evaluation.
//!
//! Points are drawn with the exact construction: an isotropic Gaussian
//! direction normalized to unit length, scaled by `radius * u^(1/dim)` with
//! `u` uniform on [0, 1). The generator is a ChaCha12 stream cipher seeded
//! from a 64-bit seed; the two sample sets of a run use distinct ChaCha
//! streams of the same seed so they are independent draws. The construction
//! is identified by [`GENERATOR_VERSION`] in persisted results.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::error::{CorrError, Result};
use crate::{norm, Float, Objective};

/// Identifies the sampling algorithm and generator for reproducibility records.
pub const GENERATOR_VERSION: &str = "ball-uniform/chacha12-stream/v1";

/// Which of the two per-run sample sets this is. The variants map to
/// distinct generator streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetId {
    One,
    Two,
}

impl SetId {
    pub fn stream(&self) -> u64 {
        match self {
            SetId::One => 1,
            SetId::Two => 2,
        }
    }
}

/// Paired point/value evaluations with seed provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    points: Vec<Vec<Float>>,
    values: Vec<Float>,
    seed: u64,
    set_id: SetId,
}

impl SampleSet {
    pub fn points(&self) -> &[Vec<Float>] {
        &self.points
    }

    pub fn values(&self) -> &[Float] {
        &self.values
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn set_id(&self) -> SetId {
        self.set_id
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points.first().map_or(0, Vec::len)
    }

    /// Debug dump with columns `index, x_1..x_n, f`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let dim = self.dim();
        write!(w, "index")?;
        for j in 1..=dim {
            write!(w, ",x_{j}")?;
        }
        writeln!(w, ",f")?;
        for (i, (p, v)) in self.points.iter().zip(&self.values).enumerate() {
            write!(w, "{i}")?;
            for c in p {
                write!(w, ",{c}")?;
            }
            writeln!(w, ",{v}")?;
        }
        Ok(())
    }
}

/// Draws `count` points uniformly from the ball of the given radius, using
/// generator stream 0.
pub fn draw_ball_uniform(
    dim: usize,
    radius: Float,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<Float>>> {
    draw_ball_uniform_stream(dim, radius, count, seed, 0)
}

/// Same as [`draw_ball_uniform`] on an explicit generator stream, so several
/// independent batches can share one seed.
pub fn draw_ball_uniform_stream(
    dim: usize,
    radius: Float,
    count: usize,
    seed: u64,
    stream: u64,
) -> Result<Vec<Vec<Float>>> {
    if dim == 0 {
        return Err(CorrError::ZeroDim);
    }
    if radius <= 0.0 {
        return Err(CorrError::NonPositive {
            what: "radius",
            got: radius,
        });
    }
    if count == 0 {
        return Err(CorrError::NonPositive {
            what: "count",
            got: 0.0,
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut points = Vec::with_capacity(count);
    for _ in 0..count {
        points.push(one_ball_point(&mut rng, dim, radius));
    }
    Ok(points)
}

/// Draws a single ball-uniform point from an already-positioned generator.
pub(crate) fn one_ball_point(rng: &mut ChaCha12Rng, dim: usize, radius: Float) -> Vec<Float> {
    let mut dir: Vec<Float>;
    let mut len: Float;
    loop {
        dir = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        len = norm(&dir);
        if len > 1e-12 {
            break;
        }
    }
    let u: Float = rng.random();
    let scale = radius * u.powf(1.0 / dim as Float) / len;
    let mut x: Vec<Float> = dir.into_iter().map(|d| d * scale).collect();
    // rounding can land a hair outside; pull it back so the norm bound is exact
    crate::project_to_ball(&mut x, radius);
    x
}

/// Evaluates the objective over `points`, pairing them into a [`SampleSet`].
pub fn evaluate_set<F: Objective + ?Sized>(
    f: &F,
    points: Vec<Vec<Float>>,
    seed: u64,
    set_id: SetId,
) -> Result<SampleSet> {
    let mut values = Vec::with_capacity(points.len());
    for p in &points {
        values.push(f.evaluate(p)?);
    }
    Ok(SampleSet {
        points,
        values,
        seed,
        set_id,
    })
}
