//! Uniform random search, a smoke baseline for instance difficulty.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::evaluator::evaluate_batch;
use crate::pareto::{igd, nondominated_indices};
use crate::reference::front_sample;
use crate::sampling::matching_resolution;
use crate::spec::ProblemSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    /// Feasible nondominated decision vectors, in draw order.
    pub decisions: Vec<Vec<f64>>,
    pub objectives: Vec<Vec<f64>>,
    /// IGD of the archive against the reference front; `None` when either
    /// set is empty.
    pub igd: Option<f64>,
}

/// Front resolution giving roughly a thousand reference points.
pub fn default_resolution(objectives: usize) -> usize {
    matching_resolution(objectives, 1000).max(2)
}

/// `budget` decision vectors drawn uniformly from the box.
pub fn uniform_decisions(spec: &ProblemSpec, budget: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..budget)
        .map(|_| {
            let mut x: Vec<f64> = (0..spec.position_dim()).map(|_| rng.gen_range(-1.0..=1.0)).collect();
            x.extend((0..spec.distance_vars()).map(|_| rng.gen_range(0.0..=1.0)));
            x
        })
        .collect()
}

/// Feasible nondominated archive of `budget` uniform samples, scored against
/// the front at `resolution`.
pub fn random_search(spec: &ProblemSpec, budget: usize, seed: u64, resolution: usize) -> Result<SearchResult> {
    let front = front_sample(spec, resolution)?;
    let decisions = uniform_decisions(spec, budget, seed);
    let mut kept_x = Vec::new();
    let mut kept_f = Vec::new();
    let evaluations = evaluate_batch(&decisions, spec).into_iter().collect::<Result<Vec<_>>>()?;
    for (x, e) in decisions.into_iter().zip(evaluations) {
        if e.feasible() {
            kept_x.push(x);
            kept_f.push(e.objectives);
        }
    }
    let keep = nondominated_indices(&kept_f)?;
    let decisions: Vec<_> = keep.iter().map(|i| kept_x[*i].clone()).collect();
    let objectives: Vec<_> = keep.iter().map(|i| kept_f[*i].clone()).collect();
    let igd = if objectives.is_empty() || front.points.is_empty() {
        None
    } else {
        Some(igd(&objectives, &front.points)?)
    };
    Ok(SearchResult {
        decisions,
        objectives,
        igd,
    })
}
