//! Differential evolution (DE/rand/1/bin) and an adaptive variant with
//! scheduled mutation and crossover rates, neighbor-difference trials, local
//! quasi-Newton refinement and stagnation stopping. Also ships the benchmark
//! catalog, Welch's t-test, and an experiment harness that runs seeded
//! DE-versus-adaptive campaigns and exports comparison tables and histories.
//!
//! ```
//! use adeds::{registry, run_adeds, AdedsParams, RngStream};
//!
//! let booth = registry().lookup("booth").unwrap();
//! let result = run_adeds(booth, &AdedsParams::default(), &mut RngStream::new(42, 0)).unwrap();
//! assert!(result.best_fitness < 1e-3);
//! ```

pub mod algorithms;
pub mod benchmarks;
pub mod error;
pub mod harness;
pub mod metrics;
pub mod population;
pub mod rng;
pub mod space;
pub mod stats;

pub use algorithms::{
    run_adeds, run_de, AdedsParams, Algorithm, DeParams, LocalSearchScope, RunResult, Termination,
};
pub use benchmarks::{registry, BenchmarkFunction, Category, Registry};
pub use error::{Error, Result};
pub use metrics::{convergence_rate, has_converged, FitnessHistory};
pub use population::{diversity, Individual, Population};
pub use rng::RngStream;
pub use space::{clamp_to_bounds, Bounds, RealVector};
