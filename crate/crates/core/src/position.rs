//! Position function: decision coordinates in `[-1, 1]^R` to a point on the
//! unit p-norm surface of the first orthant.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::spec::ProblemSpec;

/// Meta-variables `y_i = |Σ x_j| / (q + t)` over overlapping groups.
///
/// Group `i` (0-based) covers coordinates `i·q .. i·q + q + t`, so groups
/// `i` and `i + 1` share the `t` coordinates starting at `(i + 1)·q`.
pub fn meta_variables(x_p: &[f64], q: usize, t: usize, objectives: usize) -> Result<Vec<f64>> {
    let expected = (objectives - 1) * q + t;
    if x_p.len() != expected {
        return Err(Error::Dimension {
            expected,
            got: x_p.len(),
        });
    }
    check_box(x_p, -1.0, 1.0, 0)?;
    let width = (q + t) as f64;
    Ok((0..objectives - 1)
        .map(|i| {
            let start = i * q;
            let sum: f64 = x_p[start..start + q + t].iter().sum();
            (sum.abs() / width).min(1.0)
        })
        .collect())
}

pub(crate) fn check_box(x: &[f64], lower: f64, upper: f64, offset: usize) -> Result<()> {
    match x.iter().position(|v| !(*v >= lower && *v <= upper)) {
        Some(i) => Err(Error::OutOfBox {
            index: offset + i,
            value: x[i],
            lower,
            upper,
        }),
        None => Ok(()),
    }
}

/// Spherical coordinates on the unit sphere, first orthant. `y` has `M − 1`
/// entries in `[0, 1]`; the result has `M`.
pub fn spherical_map(y: &[f64]) -> Vec<f64> {
    let m = y.len() + 1;
    // prefix[k] = Π_{i<k} cos(y_i π/2)
    let mut prefix = Vec::with_capacity(m);
    prefix.push(1.0);
    for yi in y {
        let last = *prefix.last().unwrap();
        prefix.push(last * (yi * FRAC_PI_2).cos());
    }
    let mut out = Vec::with_capacity(m);
    out.push(prefix[m - 1]);
    for k in 2..=m {
        out.push(prefix[m - k] * (y[m - k] * FRAC_PI_2).sin());
    }
    out
}

/// `(Σ |v_i|^p)^{1/p}`, evaluated after scaling by `max |v_i|` so that large
/// `p` cannot overflow.
pub fn p_norm(v: &[f64], p: f64) -> Result<f64> {
    if v.is_empty() {
        return Err(Error::Empty("vector"));
    }
    if p.is_nan() || p <= 0.0 {
        return Err(Error::InvalidArgument(format!("p must be positive (got {p})")));
    }
    let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return Ok(scale);
    }
    let sum: f64 = v.iter().map(|x| (x.abs() / scale).powf(p)).sum();
    Ok(scale * sum.powf(1.0 / p))
}

/// Rescales a nonzero vector onto the unit p-norm surface.
pub fn normalize(v: &[f64], p: f64) -> Result<Vec<f64>> {
    let h = p_norm(v, p)?;
    if h == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / h).collect())
}

/// Position point from meta-variables: spherical map then p-normalization.
pub fn position_from_meta(y: &[f64], p: f64) -> Vec<f64> {
    // spherical_map has unit Euclidean norm, so the p-norm is never zero
    normalize(&spherical_map(y), p).expect("spherical map is never zero")
}

/// `F_p(x) = T(x) / ‖T(x)‖_p`.
pub fn position_objectives(x_p: &[f64], spec: &ProblemSpec) -> Result<Vec<f64>> {
    let y = meta_variables(x_p, spec.meta_q(), spec.meta_t(), spec.objectives())?;
    Ok(position_from_meta(&y, spec.norm_p()))
}

/// `d_i = 2i(2f_i − 1)` with 1-based `i`.
pub fn dissimilarize(f: &[f64]) -> Vec<f64> {
    f.iter()
        .enumerate()
        .map(|(i, fi)| 2.0 * (i + 1) as f64 * (2.0 * fi - 1.0))
        .collect()
}
