use crate::benchmarks::BenchmarkFunction;
use crate::error::Result;
use crate::metrics::FitnessHistory;
use crate::population::{diversity, Population};
use crate::rng::RngStream;

use super::operators::{binomial_crossover, de_mutation};
use super::params::DeParams;
use super::result::{Algorithm, RunResult, Termination};

/// DE/rand/1/bin with fixed F and CR, run for exactly `max_generations`.
pub fn run_de(objective: &BenchmarkFunction, params: &DeParams, rng: &mut RngStream) -> Result<RunResult> {
    params.validate()?;
    let bounds = &objective.default_bounds;
    let f = |x: &[f64]| objective.value(x);

    let mut pop = Population::initialize(params.population_size, bounds, f, rng)?;
    let mut evaluations = pop.len();
    let mut history = FitnessHistory::new();
    let mut diversity_history = Vec::with_capacity(params.max_generations + 1);
    history.record(pop.best().fitness);
    diversity_history.push(diversity(pop.members())?);

    for _ in 0..params.max_generations {
        for i in 0..pop.len() {
            let donor = de_mutation(pop.members(), i, params.mutation_factor, bounds, rng)?;
            let trial = binomial_crossover(&pop.members()[i].position, &donor, params.crossover_rate, rng)?;
            let ft = f(&trial);
            evaluations += 1;
            let member = &mut pop.members_mut()[i];
            if ft < member.fitness {
                member.position = trial;
                member.fitness = ft;
            }
        }
        pop.advance_generation();
        history.record(pop.best().fitness);
        diversity_history.push(diversity(pop.members())?);
    }

    let best = pop.best().clone();
    Ok(RunResult {
        algorithm: Algorithm::De,
        best_position: best.position,
        best_fitness: best.fitness,
        history,
        diversity_history,
        generations_executed: pop.generation(),
        evaluations_used: evaluations,
        terminated_by: Termination::MaxGenerations,
        final_population: pop.members().iter().map(|m| m.position.clone()).collect(),
    })
}
