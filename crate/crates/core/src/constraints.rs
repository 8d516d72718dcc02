//! Angular constraints on the position point.
//!
//! Violations are continuous magnitudes (0 = satisfied) so harnesses can use
//! either feasibility rules or penalties.

use std::f64::consts::FRAC_PI_2;

use crate::distance::normalized_angle;
use crate::error::{Error, Result};
use crate::spec::{Constraint, ConstraintKind};

#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintReport {
    /// Normalized angle against each constraint's reference.
    pub phi: Vec<f64>,
    pub violations: Vec<f64>,
    pub feasible: bool,
    /// 1-based index of the canonical axis closest in angle to the point.
    pub nearest_axis: usize,
}

/// Angles between `point` and each canonical axis.
pub fn axis_angles(point: &[f64]) -> Result<Vec<f64>> {
    let norm = point.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(point.iter().map(|x| (x / norm).clamp(-1.0, 1.0).acos()).collect())
}

/// Axis with the smallest angle to `point`; ties go to the lowest index.
pub fn nearest_axis(point: &[f64]) -> Result<usize> {
    let angles = axis_angles(point)?;
    Ok(argmin(&angles) + 1)
}

fn argmin(v: &[f64]) -> usize {
    let mut best = 0;
    for (i, x) in v.iter().enumerate().skip(1) {
        if *x < v[best] {
            best = i;
        }
    }
    best
}

/// Evaluates every constraint against a pre-dissimilarity position point.
pub fn evaluate_constraints(point: &[f64], constraints: &[Constraint]) -> Result<ConstraintReport> {
    let angles = axis_angles(point)?;
    let nearest = argmin(&angles);
    let mut phi = Vec::with_capacity(constraints.len());
    let mut violations = Vec::with_capacity(constraints.len());

    for c in constraints {
        let (p, v) = match c.kind() {
            ConstraintKind::MinAngle { a } => {
                let p = normalized_angle(point, c.reference())?;
                (p, (a - p).max(0.0))
            }
            ConstraintKind::MaxAngle { a } => {
                let p = normalized_angle(point, c.reference())?;
                (p, (p - a).max(0.0))
            }
            ConstraintKind::Band { a, b } => {
                let p = normalized_angle(point, c.reference())?;
                (p, (a - p).max(0.0) + (p - b).max(0.0))
            }
            ConstraintKind::NearestAxis { j } => {
                let gap = angles[j - 1] - angles[nearest];
                // an exact tie is still lost by the higher index
                let v = if nearest == j - 1 { 0.0 } else { gap.max(f64::EPSILON) };
                (angles[j - 1] / FRAC_PI_2, v)
            }
        };
        phi.push(p);
        violations.push(v);
    }

    let feasible = violations.iter().all(|v| *v == 0.0);
    Ok(ConstraintReport {
        phi,
        violations,
        feasible,
        nearest_axis: nearest + 1,
    })
}
