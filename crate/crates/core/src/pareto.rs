//! Pareto dominance (minimization) and the IGD indicator.

use crate::error::{Error, Result};

/// `a` dominates `b`: no worse anywhere, strictly better somewhere.
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    let mut strictly = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly = true;
        }
    }
    strictly
}

fn check_dims(points: &[Vec<f64>]) -> Result<()> {
    if let Some(first) = points.first() {
        if let Some(bad) = points.iter().find(|p| p.len() != first.len()) {
            return Err(Error::Dimension {
                expected: first.len(),
                got: bad.len(),
            });
        }
    }
    Ok(())
}

/// Indices of the points not dominated by any other point, in input order.
/// Identical points do not eliminate each other.
pub fn nondominated_indices(points: &[Vec<f64>]) -> Result<Vec<usize>> {
    check_dims(points)?;
    let mut keep = vec![true; points.len()];
    for i in 0..points.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..points.len() {
            if i != j && dominates(&points[i], &points[j]) {
                keep[j] = false;
            }
        }
    }
    Ok((0..points.len()).filter(|i| keep[*i]).collect())
}

/// Nondominated subset, in input order.
pub fn dominance_filter(points: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    Ok(nondominated_indices(points)?
        .into_iter()
        .map(|i| points[i].clone())
        .collect())
}

/// Mean distance from each reference point to its nearest approximation point.
pub fn igd(approximation: &[Vec<f64>], reference: &[Vec<f64>]) -> Result<f64> {
    if approximation.is_empty() {
        return Err(Error::Empty("approximation set"));
    }
    if reference.is_empty() {
        return Err(Error::Empty("reference set"));
    }
    let m = reference[0].len();
    for p in approximation.iter().chain(reference) {
        if p.len() != m {
            return Err(Error::Dimension { expected: m, got: p.len() });
        }
    }
    let total: f64 = reference
        .iter()
        .map(|r| {
            approximation
                .iter()
                .map(|a| a.iter().zip(r).map(|(x, y)| (x - y) * (x - y)).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .sum();
    Ok(total / reference.len() as f64)
}
