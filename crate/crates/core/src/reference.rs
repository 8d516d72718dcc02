//! Analytic Pareto fronts and Pareto sets.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::constraints::evaluate_constraints;
use crate::distance::{compose, normalized_angle, radial_profile, valley_center, ROBUST_OPTIMUM};
use crate::error::{Error, Result};
use crate::evaluator::evaluate;
use crate::pareto::nondominated_indices;
use crate::position::{dissimilarize, meta_variables, position_from_meta, position_objectives};
use crate::sampling::{front_design, set_design};
use crate::spec::{BaseDistance, DistanceKind, ProblemSpec};

/// Largest accepted meta-variable mismatch for a realized position vector.
pub const REALIZE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct FrontSample {
    /// Objective vectors, after the dissimilarity transform when enabled.
    pub points: Vec<Vec<f64>>,
    /// Unit p-norm position part of each point.
    pub position_points: Vec<Vec<f64>>,
    /// Normalized angle against the distance reference, per point.
    pub phi: Vec<f64>,
    pub resolution: usize,
    /// Set when the spec has constraints and infeasible points were dropped.
    pub feasible_only: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SetSample {
    pub vectors: Vec<Vec<f64>>,
    /// Largest meta-variable mismatch per vector.
    pub residuals: Vec<f64>,
    pub targets: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    pub x_p: Vec<f64>,
    pub residual: f64,
}

/// Reference front: the position surface scaled by the radial profile at
/// `g = 0`, restricted to feasible points and filtered for dominance.
pub fn front_sample(spec: &ProblemSpec, resolution: usize) -> Result<FrontSample> {
    if resolution < 2 {
        return Err(Error::InvalidArgument(format!(
            "resolution must be at least 2 (got {resolution})"
        )));
    }
    let design = front_design(spec.objectives(), resolution);
    let candidates = design
        .par_iter()
        .map(|y| {
            let position = position_from_meta(y, spec.norm_p());
            let phi = normalized_angle(&position, spec.distance_reference())?;
            let radial = radial_profile(0.0, phi, spec.distance(), spec.composition())?;
            let point = compose(&position, radial, spec.composition());
            let feasible = evaluate_constraints(&position, spec.constraints())?.feasible;
            Ok(feasible.then_some((point, position, phi)))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut seen = HashSet::new();
    let candidates: Vec<_> = candidates
        .into_iter()
        .flatten()
        .filter(|(p, _, _)| seen.insert(p.iter().map(|v| v.to_bits()).collect::<Vec<_>>()))
        .collect();

    let composed: Vec<Vec<f64>> = candidates.iter().map(|c| c.0.clone()).collect();
    let keep = nondominated_indices(&composed)?;

    let mut sample = FrontSample {
        points: Vec::with_capacity(keep.len()),
        position_points: Vec::with_capacity(keep.len()),
        phi: Vec::with_capacity(keep.len()),
        resolution,
        feasible_only: !spec.constraints().is_empty(),
    };
    for i in keep {
        let (point, position, phi) = &candidates[i];
        sample.points.push(if spec.dissimilar() {
            dissimilarize(point)
        } else {
            point.clone()
        });
        sample.position_points.push(position.clone());
        sample.phi.push(*phi);
    }
    Ok(sample)
}

/// Position coordinates whose meta-variables equal `y` for the `(q, t)` layout.
///
/// Each shared overlap block is set to all `+1` or all `−1`. A middle group
/// whose target exceeds its exclusive capacity `q − t` gets two same-signed
/// neighbours, otherwise two opposite-signed ones; the exclusive coordinates
/// then absorb the remainder. With `q ≥ 2t` every target in `[0, q + t]` is
/// reachable this way.
pub fn realize_meta(y: &[f64], q: usize, t: usize) -> Result<Realization> {
    if let Some(bad) = y.iter().find(|v| !(0.0..=1.0).contains(*v)) {
        return Err(Error::InvalidArgument(format!("meta-variable target {bad} outside [0, 1]")));
    }
    if t > 0 && q < 2 * t {
        return Err(Error::InvalidArgument(format!("overlap layout q = {q}, t = {t} needs q ≥ 2t")));
    }
    let groups = y.len();
    if groups == 0 {
        return Err(Error::Empty("meta-variable target"));
    }
    let blocks = if t > 0 { groups - 1 } else { 0 };
    let width = (q + t) as f64;

    let mut sign = vec![1.0f64; blocks];
    for b in 1..blocks {
        let exclusive = (q - t) as f64;
        let same = width * y[b] > exclusive;
        sign[b] = if same { sign[b - 1] } else { -sign[b - 1] };
    }

    let mut x = vec![0.0; groups * q + t];
    for (b, s) in sign.iter().enumerate() {
        let start = (b + 1) * q;
        x[start..start + t].fill(*s);
    }

    for (i, yi) in y.iter().enumerate() {
        let shared_prev = (i > 0 && blocks > 0).then(|| i - 1);
        let shared_next = (i < blocks).then_some(i);
        let contribution: f64 = shared_prev
            .into_iter()
            .chain(shared_next)
            .map(|b| t as f64 * sign[b])
            .sum();
        let target = width * yi;
        let signed = if contribution >= 0.0 { target } else { -target };

        let lo = i * q + if shared_prev.is_some() { t } else { 0 };
        let hi = if shared_next.is_some() { (i + 1) * q } else { i * q + q + t };
        let exclusive = (hi - lo) as f64;
        let value = ((signed - contribution) / exclusive).clamp(-1.0, 1.0);
        x[lo..hi].fill(value);
    }

    let objectives = groups + 1;
    let achieved = meta_variables(&x, q, t, objectives)?;
    let residual = achieved
        .iter()
        .zip(y)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if residual.is_nan() || residual > REALIZE_TOLERANCE {
        return Err(Error::NonConvergence { residual });
    }
    Ok(Realization { x_p: x, residual })
}

pub fn realize_position(y: &[f64], spec: &ProblemSpec) -> Result<Realization> {
    if y.len() != spec.objectives() - 1 {
        return Err(Error::Dimension {
            expected: spec.objectives() - 1,
            got: y.len(),
        });
    }
    realize_meta(y, spec.meta_q(), spec.meta_t())
}

/// Distance coordinates that minimize `g` at the given angle.
pub fn optimal_distance(phi: f64, spec: &ProblemSpec) -> Vec<f64> {
    let base = match spec.distance() {
        DistanceKind::Deceptive => BaseDistance::Deceptive,
        DistanceKind::Robust => BaseDistance::Robust,
        _ => spec.base_distance(),
    };
    (1..=spec.distance_vars())
        .map(|i| match base {
            BaseDistance::Deceptive => valley_center(phi, i),
            BaseDistance::Robust => ROBUST_OPTIMUM,
        })
        .collect()
}

/// Decision vectors on the Pareto set for `n` position targets. Targets that
/// are infeasible or dominated are dropped, so fewer than `n` vectors may
/// come back for constrained or shaped-front specs.
pub fn pareto_set_sample(spec: &ProblemSpec, n: usize) -> Result<SetSample> {
    if n == 0 {
        return Err(Error::InvalidArgument("sample size must be at least 1".into()));
    }
    let targets = set_design(spec.objectives(), n);
    let built = targets
        .par_iter()
        .map(|y| {
            let real = realize_position(y, spec)?;
            let position = position_objectives(&real.x_p, spec)?;
            let phi = normalized_angle(&position, spec.distance_reference())?;
            let mut x = real.x_p;
            x.extend(optimal_distance(phi, spec));
            let eval = evaluate(&x, spec)?;
            Ok((x, real.residual, eval))
        })
        .collect::<Result<Vec<_>>>()?;

    let feasible: Vec<usize> = (0..built.len()).filter(|i| built[*i].2.feasible()).collect();
    let objectives: Vec<Vec<f64>> = feasible.iter().map(|i| built[*i].2.objectives.clone()).collect();
    let keep = nondominated_indices(&objectives)?;

    let mut sample = SetSample {
        vectors: Vec::with_capacity(keep.len()),
        residuals: Vec::with_capacity(keep.len()),
        targets: Vec::with_capacity(keep.len()),
    };
    for k in keep {
        let i = feasible[k];
        sample.vectors.push(built[i].0.clone());
        sample.residuals.push(built[i].1);
        sample.targets.push(targets[i].clone());
    }
    Ok(sample)
}
