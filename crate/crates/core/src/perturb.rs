//! Robustness experiment: bounded noise on the distance variables.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::evaluator::{evaluate, split_decision};
use crate::spec::ProblemSpec;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbationReport {
    /// Largest Euclidean objective displacement over all samples.
    pub worst: f64,
    pub mean: f64,
}

/// Adds uniform noise in `[−radius, radius]` to each distance variable of
/// `x`, clamps to the box, and measures how far the objective vector moves.
pub fn perturb_experiment(
    x: &[f64],
    radius: f64,
    samples: usize,
    spec: &ProblemSpec,
    seed: u64,
) -> Result<PerturbationReport> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::InvalidArgument(format!("radius must be positive (got {radius})")));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    split_decision(x, spec)?;
    let base = evaluate(x, spec)?.objectives;
    let r = spec.position_dim();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut total = 0.0;
    let mut moved = x.to_vec();
    for _ in 0..samples {
        for (m, v) in moved[r..].iter_mut().zip(&x[r..]) {
            *m = (v + rng.gen_range(-radius..=radius)).clamp(0.0, 1.0);
        }
        let f = evaluate(&moved, spec)?.objectives;
        let d = f
            .iter()
            .zip(&base)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        worst = worst.max(d);
        total += d;
    }
    Ok(PerturbationReport {
        worst,
        mean: total / samples as f64,
    })
}
