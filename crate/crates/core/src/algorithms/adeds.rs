use crate::benchmarks::BenchmarkFunction;
use crate::error::Result;
use crate::metrics::{has_converged_within, FitnessHistory};
use crate::population::{diversity, Population};
use crate::rng::RngStream;

use super::local::refine_from;
use super::operators::{adaptive_crossover_rate, adaptive_mutation_rate, adeds_trial, binomial_crossover};
use super::params::{AdedsParams, LocalSearchScope};
use super::result::{Algorithm, RunResult, Termination};

/// Adaptive DE with neighbor-attraction trials and local refinement.
///
/// Per generation `g`: F and CR come from the linear schedules, each member
/// produces a neighbor trial, optionally crossed with the parent, and
/// replaces the parent only if strictly better. Local descent then runs on
/// the generation's best member (or on every trial, depending on
/// `local_search`). The run stops after `max_generations`, or once the best
/// fitness of the last `stagnation_limit` executed generations is unchanged.
pub fn run_adeds(
    objective: &BenchmarkFunction,
    params: &AdedsParams,
    rng: &mut RngStream,
) -> Result<RunResult> {
    params.validate()?;
    let bounds = &objective.default_bounds;
    let f = |x: &[f64]| objective.value(x);

    let mut pop = Population::initialize(params.population_size, bounds, f, rng)?;
    let mut evaluations = pop.len();
    let mut history = FitnessHistory::new();
    let mut diversity_history = Vec::with_capacity(params.max_generations + 1);
    history.record(pop.best().fitness);
    diversity_history.push(diversity(pop.members())?);
    let mut terminated_by = Termination::MaxGenerations;

    for g in 0..params.max_generations {
        let factor = adaptive_mutation_rate(g, params.max_generations, params.initial_mutation_rate)?;
        let rate = adaptive_crossover_rate(g, params.max_generations, params.initial_crossover_rate)?;

        for i in 0..pop.len() {
            let mut trial = adeds_trial(pop.members(), i, factor, bounds, rng)?;
            if params.crossover {
                trial = binomial_crossover(&pop.members()[i].position, &trial, rate, rng)?;
            }
            let mut ft = f(&trial);
            evaluations += 1;
            if params.local_search == LocalSearchScope::EveryTrial {
                let r = refine_from(&trial, ft, f, bounds, params.local_search_budget);
                evaluations += r.evaluations;
                trial = r.position;
                ft = r.fitness;
            }
            let member = &mut pop.members_mut()[i];
            if ft < member.fitness {
                member.position = trial;
                member.fitness = ft;
            }
        }

        if params.local_search == LocalSearchScope::GenerationBest {
            let b = pop.best_index();
            let best = &pop.members()[b];
            let r = refine_from(&best.position, best.fitness, f, bounds, params.local_search_budget);
            evaluations += r.evaluations;
            let member = &mut pop.members_mut()[b];
            if r.fitness < member.fitness {
                member.position = r.position;
                member.fitness = r.fitness;
            }
        }

        pop.advance_generation();
        history.record(pop.best().fitness);
        diversity_history.push(diversity(pop.members())?);

        // Only executed generations count towards stagnation, not the initial population.
        if has_converged_within(&history.values()[1..], params.stagnation_limit, params.stagnation_tolerance) {
            terminated_by = Termination::Stagnation;
            break;
        }
    }

    let best = pop.best().clone();
    Ok(RunResult {
        algorithm: Algorithm::Adeds,
        best_position: best.position,
        best_fitness: best.fitness,
        history,
        diversity_history,
        generations_executed: pop.generation(),
        evaluations_used: evaluations,
        terminated_by,
        final_population: pop.members().iter().map(|m| m.position.clone()).collect(),
    })
}
