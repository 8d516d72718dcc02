//! Distance landscapes and radial profiles.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::spec::{Composition, DistanceKind};

/// Global minimizer of each robust term.
pub const ROBUST_OPTIMUM: f64 = 0.600066066066066;

/// Robust-term values at or above this floor are accepted as distances.
pub const DISTANCE_FLOOR: f64 = -1e-3;

/// Euclidean angle between two vectors, in radians.
pub fn angle_between(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Dimension {
            expected: a.len(),
            got: b.len(),
        });
    }
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok((dot / (na * nb)).clamp(-1.0, 1.0).acos())
}

/// Largest angle between `reference` and any first-orthant direction: the
/// angle to the canonical axis of the smallest reference component.
pub fn max_angle(reference: &[f64]) -> Result<f64> {
    let (axis, _) = reference
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |(bi, bv), (i, v)| if *v < bv { (i, *v) } else { (bi, bv) });
    let mut e = vec![0.0; reference.len()];
    e[axis] = 1.0;
    angle_between(reference, &e)
}

/// Angle to `reference` divided by [`max_angle`], clamped to `[0, 1]`.
pub fn normalized_angle(point: &[f64], reference: &[f64]) -> Result<f64> {
    let raw = angle_between(reference, point)?;
    let max = max_angle(reference)?;
    if max == 0.0 {
        return Err(Error::InvalidArgument(
            "reference leaves no angular room in the first orthant".into(),
        ));
    }
    Ok((raw / max).clamp(0.0, 1.0))
}

/// Valley centre for the distance variable with 1-based `index`.
pub fn valley_center(phi: f64, index: usize) -> f64 {
    let exponent = 1.05 * index as f64;
    (1.2 + (2.0 * PI * (1.0 - phi).powf(exponent)).sin()) / 2.4
}

/// Valley half-width; `k` narrow and `k + 1` wide stretches over `φ ∈ [0, 1]`.
pub fn valley_radius(phi: f64, k: u32) -> f64 {
    0.015 * (2.0 * k as f64 * PI * phi).cos() + 0.025
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Valley {
    pub center: f64,
    pub radius: f64,
}

impl Valley {
    pub fn at(phi: f64, index: usize, k: u32) -> Self {
        Self {
            center: valley_center(phi, index),
            radius: valley_radius(phi, k),
        }
    }

    pub fn term(&self, x: f64) -> f64 {
        deceptive_term(x, self.center, self.radius)
    }
}

/// One deceptive term: linear ramps from 5 at the box ends up to 10 at the
/// valley rim, and a full cosine cycle down to 0 at `v` inside the valley.
pub fn deceptive_term(x: f64, v: f64, r: f64) -> f64 {
    if x < v - r {
        5.0 * (x + r - v) / (v - r) + 10.0
    } else if x <= v + r {
        5.0 * (((x + r - v) / r * PI).cos() + 1.0)
    } else {
        5.0 * (x - v - r) / (v + r - 1.0) + 10.0
    }
}

pub fn deceptive_g(x_d: &[f64], phi: f64, k: u32) -> f64 {
    let radius = valley_radius(phi, k);
    x_d.iter()
        .enumerate()
        .map(|(i, x)| deceptive_term(*x, valley_center(phi, i + 1), radius))
        .sum()
}

fn logistic(x: f64, center: f64) -> f64 {
    1.0 / (1.0 + (-20.0 * (x - center)).exp())
}

/// One robust term. Brittle global minimum near [`ROBUST_OPTIMUM`], flat
/// stable region around `(0.1, 0.3)`.
pub fn robust_term(x: f64) -> f64 {
    let y = logistic(x, 0.6);
    let z = logistic(x, 0.7);
    let w = (40.0 * PI * x).cos();
    -w * (y - z) + (y - 1.0) / 2.0 + (-60.0 * x).exp() + 0.631
}

pub fn robust_g(x_d: &[f64]) -> f64 {
    x_d.iter().map(|x| robust_term(*x)).sum()
}

/// Scalar radial factor `F_d` for a given landscape value `g`.
pub fn radial_profile(g: f64, phi: f64, kind: DistanceKind, composition: Composition) -> Result<f64> {
    if g.is_nan() || g < DISTANCE_FLOOR {
        return Err(Error::InvalidArgument(format!("distance value {g} below floor")));
    }
    let g = g.max(0.0);
    Ok(match kind {
        DistanceKind::Deceptive | DistanceKind::Robust => match composition {
            Composition::Additive => g,
            Composition::Multiplicative => 1.0 + g,
        },
        DistanceKind::ConvexConcave => phi.powi(5) / 2.0 + g + 0.5,
        DistanceKind::Disconnected => (3.0 * PI * phi).cos().powi(2) / 10.0 + g + 1.0,
    })
}

pub fn compose(position: &[f64], radial: f64, composition: Composition) -> Vec<f64> {
    match composition {
        Composition::Additive => position.iter().map(|f| f + radial).collect(),
        Composition::Multiplicative => position.iter().map(|f| f * radial).collect(),
    }
}
