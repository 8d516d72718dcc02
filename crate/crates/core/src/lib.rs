//! Generalized Position-Distance benchmark problems for many-objective
//! optimization: instance specs, evaluation, reference fronts and sets,
//! constraints, perturbation experiments and seeded instance suites.

pub mod cli;
pub mod constraints;
pub mod distance;
pub mod error;
pub mod evaluator;
pub mod pareto;
pub mod perturb;
pub mod position;
pub mod reference;
pub mod sampling;
pub mod search;
pub mod spec;
pub mod suite;
pub mod table;

pub use constraints::{evaluate_constraints, nearest_axis, ConstraintReport};
pub use error::{Error, Result};
pub use evaluator::{evaluate, evaluate_batch, Evaluation};
pub use pareto::{dominance_filter, dominates, igd};
pub use perturb::{perturb_experiment, PerturbationReport};
pub use reference::{front_sample, pareto_set_sample, realize_position, FrontSample, SetSample};
pub use search::{random_search, SearchResult};
pub use spec::{parse_spec, ProblemSpec, SpecDraft};
pub use suite::{generate_suite, SuiteRanges};
