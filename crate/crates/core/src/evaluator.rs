//! End-to-end evaluation of `F(x)`.
//!
//! Order: meta-variables, spherical map, p-normalization, angle against the
//! distance reference, landscape `g`, radial profile, composition, optional
//! dissimilarity transform, constraint report on the pre-transform point.

use rayon::prelude::*;

use crate::constraints::{evaluate_constraints, ConstraintReport};
use crate::distance::{compose, deceptive_g, normalized_angle, radial_profile, robust_g};
use crate::error::{Error, Result};
use crate::position::{check_box, dissimilarize, position_objectives};
use crate::spec::{BaseDistance, DistanceKind, ProblemSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub objectives: Vec<f64>,
    /// `F_p(x)`: unit p-norm, componentwise nonnegative.
    pub position_point: Vec<f64>,
    /// Normalized angle against the distance reference.
    pub distance_phi: f64,
    /// Landscape value `g(x)`.
    pub g: f64,
    /// Radial factor `F_d(x)`.
    pub distance_value: f64,
    pub report: ConstraintReport,
}

impl Evaluation {
    pub fn feasible(&self) -> bool {
        self.report.feasible
    }
}

/// Splits `x` into its position and distance parts after checking dimension
/// and box bounds.
pub fn split_decision<'a>(x: &'a [f64], spec: &ProblemSpec) -> Result<(&'a [f64], &'a [f64])> {
    if x.len() != spec.dimension() {
        return Err(Error::Dimension {
            expected: spec.dimension(),
            got: x.len(),
        });
    }
    let (x_p, x_d) = x.split_at(spec.position_dim());
    check_box(x_p, -1.0, 1.0, 0)?;
    check_box(x_d, 0.0, 1.0, x_p.len())?;
    Ok((x_p, x_d))
}

/// Landscape value for the spec's distance kind.
pub fn landscape(x_d: &[f64], phi: f64, spec: &ProblemSpec) -> f64 {
    let base = match spec.distance() {
        DistanceKind::Deceptive => BaseDistance::Deceptive,
        DistanceKind::Robust => BaseDistance::Robust,
        DistanceKind::ConvexConcave | DistanceKind::Disconnected => spec.base_distance(),
    };
    match base {
        BaseDistance::Deceptive => deceptive_g(x_d, phi, spec.valleys_k()),
        BaseDistance::Robust => robust_g(x_d),
    }
}

pub fn evaluate(x: &[f64], spec: &ProblemSpec) -> Result<Evaluation> {
    let (x_p, x_d) = split_decision(x, spec)?;
    let position_point = position_objectives(x_p, spec)?;
    let distance_phi = normalized_angle(&position_point, spec.distance_reference())?;
    let g = landscape(x_d, distance_phi, spec);
    let distance_value = radial_profile(g, distance_phi, spec.distance(), spec.composition())?;

    let composed = compose(&position_point, distance_value, spec.composition());
    let objectives = if spec.dissimilar() {
        dissimilarize(&composed)
    } else {
        composed
    };
    let report = evaluate_constraints(&position_point, spec.constraints())?;

    Ok(Evaluation {
        objectives,
        position_point,
        distance_phi,
        g,
        distance_value,
        report,
    })
}

/// Evaluates every row, in parallel, keeping input order. Failed rows do not
/// stop the others.
pub fn evaluate_batch(rows: &[Vec<f64>], spec: &ProblemSpec) -> Vec<Result<Evaluation>> {
    rows.par_iter().map(|x| evaluate(x, spec)).collect()
}

/// Index and error of the first failed row, if any.
pub fn first_failure(results: &[Result<Evaluation>]) -> Option<(usize, &Error)> {
    results
        .iter()
        .enumerate()
        .find_map(|(i, r)| r.as_ref().err().map(|e| (i, e)))
}
