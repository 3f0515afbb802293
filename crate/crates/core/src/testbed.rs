//! Benchmark objectives on the common domain ball of radius 2.
//!
//! Each function is defined by a native-coordinate formula on its own ball
//! `B(0, r)` and exposed rescaled so the native ball maps onto `B(0, 2)`:
//! `f(x) = f_native(x * r / 2)`. Known optima are carried as metadata so
//! harness code can report the error `f(x_hat) - f_star`.

use std::fmt;
use std::str::FromStr;

use crate::error::{CorrError, Result};
use crate::{norm, Float, Objective};

/// Common domain radius shared by every benchmark function.
pub const DOMAIN_RADIUS: Float = 2.0;

/// Allowance for points placed on the boundary by floating-point projection.
const EDGE_TOL: Float = 1e-9;

/// Langerman center in native coordinates, every component.
const LANGERMAN_CENTER: Float = 0.5;

/// Radius of the zero plateau of the Salomon-Langerman combination, in
/// native coordinates.
const SL_PLATEAU_RADIUS: Float = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionName {
    Salomon,
    SalomonSq,
    SalomonLangerman,
    Langerman,
    Griewank,
}

impl FunctionName {
    pub const ALL: [FunctionName; 5] = [
        FunctionName::Salomon,
        FunctionName::SalomonSq,
        FunctionName::SalomonLangerman,
        FunctionName::Langerman,
        FunctionName::Griewank,
    ];

    /// Lowercase token used in the CLI and config files.
    pub fn token(&self) -> &'static str {
        match self {
            FunctionName::Salomon => "salomon",
            FunctionName::SalomonSq => "salomon_sq",
            FunctionName::SalomonLangerman => "salomon_langerman",
            FunctionName::Langerman => "langerman",
            FunctionName::Griewank => "griewank",
        }
    }

    /// Radius of the ball the native formula is defined on.
    fn native_radius(&self) -> Float {
        match self {
            FunctionName::Salomon | FunctionName::SalomonSq => 2.0,
            FunctionName::SalomonLangerman => 10.0,
            FunctionName::Langerman => 5.0,
            FunctionName::Griewank => 200.0,
        }
    }
}

impl fmt::Display for FunctionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for FunctionName {
    type Err = CorrError;

    fn from_str(s: &str) -> Result<Self> {
        FunctionName::ALL
            .iter()
            .copied()
            .find(|n| n.token() == s)
            .ok_or_else(|| CorrError::UnknownFunction(s.to_string()))
    }
}

/// A benchmark objective with known-optimum metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    name: FunctionName,
    dim: usize,
    rescale_factor: Float,
    f_star: Float,
    x_star: Vec<Float>,
    /// Langerman center mapped into domain coordinates, when applicable.
    center: Option<Vec<Float>>,
}

/// Builds the named function in the given dimension.
///
/// The minimum sits at the origin for all functions except Langerman, whose
/// minimizer is the rescaled center. Errors if `dim` is zero or puts the
/// known minimizer outside the domain ball.
pub fn make_function(name: FunctionName, dim: usize) -> Result<TestFunction> {
    if dim == 0 {
        return Err(CorrError::ZeroDim);
    }
    let rescale_factor = name.native_radius() / DOMAIN_RADIUS;
    let (x_star, center) = match name {
        FunctionName::Langerman => {
            let c = vec![LANGERMAN_CENTER / rescale_factor; dim];
            (c.clone(), Some(c))
        }
        FunctionName::SalomonLangerman => (
            vec![0.0; dim],
            Some(vec![LANGERMAN_CENTER / rescale_factor; dim]),
        ),
        _ => (vec![0.0; dim], None),
    };
    if norm(&x_star) > DOMAIN_RADIUS {
        return Err(CorrError::InvalidConfig(format!(
            "known minimizer of {name} lies outside the domain ball in dimension {dim}"
        )));
    }
    Ok(TestFunction {
        name,
        dim,
        rescale_factor,
        f_star: 0.0,
        x_star,
        center,
    })
}

impl TestFunction {
    pub fn name(&self) -> FunctionName {
        self.name
    }

    pub fn rescale_factor(&self) -> Float {
        self.rescale_factor
    }

    /// Known global minimum value and one known minimizer, in domain coordinates.
    pub fn global_min(&self) -> (Float, &[Float]) {
        (self.f_star, &self.x_star)
    }

    /// Langerman center in domain coordinates, when the function has one.
    pub fn center(&self) -> Option<&[Float]> {
        self.center.as_deref()
    }

    fn native(&self, z: &[Float]) -> Float {
        match self.name {
            FunctionName::Salomon => salomon(z),
            FunctionName::SalomonSq => {
                let s = salomon(z);
                0.1 * s * s
            }
            FunctionName::Langerman => langerman(z),
            FunctionName::SalomonLangerman => {
                if norm(z) <= SL_PLATEAU_RADIUS {
                    0.0
                } else {
                    salomon(z) + langerman(z)
                }
            }
            FunctionName::Griewank => griewank(z),
        }
    }
}

impl Objective for TestFunction {
    fn dim(&self) -> usize {
        self.dim
    }

    fn domain_radius(&self) -> Float {
        DOMAIN_RADIUS
    }

    fn evaluate(&self, x: &[Float]) -> Result<Float> {
        if x.len() != self.dim {
            return Err(CorrError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(CorrError::NonFinite("evaluation point"));
        }
        let r = norm(x);
        if r > DOMAIN_RADIUS + EDGE_TOL {
            return Err(CorrError::OutOfDomain {
                norm: r,
                radius: DOMAIN_RADIUS,
            });
        }
        let z: Vec<Float> = x.iter().map(|v| v * self.rescale_factor).collect();
        let value = self.native(&z);
        if !value.is_finite() {
            return Err(CorrError::NonFinite("function value"));
        }
        Ok(value)
    }
}

fn salomon(z: &[Float]) -> Float {
    let r = norm(z);
    1.0 - (2.0 * std::f64::consts::PI * r).cos() + 0.5 * r
}

/// Decaying-exponential form, which attains its minimum of 0 at the center.
fn langerman(z: &[Float]) -> Float {
    let d2: Float = z
        .iter()
        .map(|zi| (zi - LANGERMAN_CENTER) * (zi - LANGERMAN_CENTER))
        .sum();
    -(-d2 / std::f64::consts::PI).exp() * (std::f64::consts::PI * d2).cos() + 1.0
}

fn griewank(z: &[Float]) -> Float {
    let sum: Float = z.iter().map(|zi| zi * zi).sum::<Float>() / 4000.0;
    let prod: Float = z
        .iter()
        .enumerate()
        .map(|(i, zi)| (zi / ((i + 1) as Float).sqrt()).cos())
        .product();
    0.1 * (1.0 + sum - prod)
}
