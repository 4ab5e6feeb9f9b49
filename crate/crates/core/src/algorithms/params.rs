use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::population::MIN_POPULATION;

use super::local::DEFAULT_LOCAL_BUDGET;

/// Settings for the classic DE/rand/1/bin baseline. F and CR stay fixed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeParams {
    pub population_size: usize,
    pub max_generations: usize,
    pub mutation_factor: f64,
    pub crossover_rate: f64,
}

impl Default for DeParams {
    fn default() -> Self {
        DeParams {
            population_size: 50,
            max_generations: 50,
            mutation_factor: 0.5,
            crossover_rate: 0.9,
        }
    }
}

impl DeParams {
    pub fn validate(&self) -> Result<()> {
        check_population(self.population_size)?;
        check_generations(self.max_generations)?;
        check_mutation(self.mutation_factor, "mutation_factor")?;
        check_crossover(self.crossover_rate, "crossover_rate")
    }
}

/// Where the adaptive variant applies its local descent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalSearchScope {
    Off,
    /// Once per generation, on the generation's best member.
    GenerationBest,
    /// On every trial before selection. Costs up to `local_search_budget`
    /// extra evaluations per trial.
    EveryTrial,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdedsParams {
    pub population_size: usize,
    pub max_generations: usize,
    pub initial_mutation_rate: f64,
    pub initial_crossover_rate: f64,
    pub stagnation_limit: usize,
    /// Best-fitness values within this distance count as unchanged. 0 means exact.
    pub stagnation_tolerance: f64,
    pub local_search: LocalSearchScope,
    pub local_search_budget: usize,
    /// Apply binomial crossover between trial generation and selection.
    pub crossover: bool,
}

impl Default for AdedsParams {
    fn default() -> Self {
        AdedsParams {
            population_size: 50,
            max_generations: 50,
            initial_mutation_rate: 0.8,
            initial_crossover_rate: 0.9,
            stagnation_limit: 10,
            stagnation_tolerance: 0.0,
            local_search: LocalSearchScope::EveryTrial,
            local_search_budget: DEFAULT_LOCAL_BUDGET,
            crossover: true,
        }
    }
}

impl AdedsParams {
    pub fn local_search_enabled(&self) -> bool {
        self.local_search != LocalSearchScope::Off
    }

    pub fn validate(&self) -> Result<()> {
        check_population(self.population_size)?;
        check_generations(self.max_generations)?;
        check_mutation(self.initial_mutation_rate, "initial_mutation_rate")?;
        check_crossover(self.initial_crossover_rate, "initial_crossover_rate")?;
        if self.stagnation_limit == 0 || self.stagnation_limit > self.max_generations {
            return Err(Error::InvalidConfiguration(format!(
                "stagnation_limit must be in 1..={}, got {}",
                self.max_generations, self.stagnation_limit
            )));
        }
        if !(self.stagnation_tolerance >= 0.0 && self.stagnation_tolerance.is_finite()) {
            return Err(Error::InvalidConfiguration(format!(
                "stagnation_tolerance must be a finite nonnegative number, got {}",
                self.stagnation_tolerance
            )));
        }
        if self.local_search_enabled() && self.local_search_budget == 0 {
            return Err(Error::InvalidConfiguration(
                "local_search_budget must be positive".into(),
            ));
        }
        Ok(())
    }
}

fn check_population(n: usize) -> Result<()> {
    if n < MIN_POPULATION {
        return Err(Error::InvalidConfiguration(format!(
            "population_size must be at least {MIN_POPULATION}, got {n}"
        )));
    }
    Ok(())
}

fn check_generations(g: usize) -> Result<()> {
    if g == 0 {
        return Err(Error::InvalidConfiguration(
            "max_generations must be positive".into(),
        ));
    }
    Ok(())
}

fn check_mutation(f: f64, name: &str) -> Result<()> {
    if !(f > 0.0 && f <= 2.0) {
        return Err(Error::InvalidConfiguration(format!(
            "{name} must lie in (0, 2], got {f}"
        )));
    }
    Ok(())
}

fn check_crossover(cr: f64, name: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&cr) {
        return Err(Error::InvalidConfiguration(format!(
            "{name} must lie in [0, 1], got {cr}"
        )));
    }
    Ok(())
}
