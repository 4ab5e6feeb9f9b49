//! Classic differential evolution and the adaptive variant with
//! neighbor-difference trials, scheduled rates and local refinement.

mod adeds;
mod de;
mod local;
mod operators;
mod params;
mod result;

pub use adeds::run_adeds;
pub use de::run_de;
pub use local::{local_refine, refine_from, Refinement, DEFAULT_LOCAL_BUDGET};
pub use operators::{
    adaptive_crossover_rate, adaptive_mutation_rate, adeds_trial, binomial_crossover, de_mutation,
};
pub use params::{AdedsParams, DeParams, LocalSearchScope};
pub use result::{Algorithm, RunResult, Termination};
