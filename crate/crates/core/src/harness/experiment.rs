use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algorithms::{run_adeds, run_de, AdedsParams, Algorithm, DeParams, LocalSearchScope, RunResult};
use crate::benchmarks::{registry, BenchmarkFunction, Category};
use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Optional replacements for the DE baseline constants.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DeOverrides {
    pub mutation_factor: Option<f64>,
    pub crossover_rate: Option<f64>,
}

/// Optional replacements for the adaptive variant's settings.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AdedsOverrides {
    pub initial_mutation_rate: Option<f64>,
    pub initial_crossover_rate: Option<f64>,
    pub stagnation_limit: Option<usize>,
    pub local_search: Option<LocalSearchScope>,
    pub local_search_budget: Option<usize>,
    pub crossover: Option<bool>,
}

/// Everything that determines a campaign's results.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    /// Function names, category names, or `all`.
    pub functions: Vec<String>,
    pub algorithms: Vec<Algorithm>,
    pub num_runs: usize,
    pub population_size: usize,
    pub max_generations: usize,
    pub root_seed: u64,
    /// Pose extensible objectives in this dimension instead of their default.
    #[serde(default)]
    pub dimension: Option<usize>,
    #[serde(default)]
    pub de: DeOverrides,
    #[serde(default)]
    pub adeds: AdedsOverrides,
    pub success_tolerance: f64,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        ExperimentSpec {
            functions: vec!["all".into()],
            algorithms: vec![Algorithm::De, Algorithm::Adeds],
            num_runs: 10,
            population_size: 50,
            max_generations: 50,
            root_seed: 42,
            dimension: None,
            de: DeOverrides::default(),
            adeds: AdedsOverrides::default(),
            success_tolerance: super::DEFAULT_SUCCESS_TOLERANCE,
        }
    }
}

impl ExperimentSpec {
    pub fn de_params(&self) -> DeParams {
        let d = DeParams::default();
        DeParams {
            population_size: self.population_size,
            max_generations: self.max_generations,
            mutation_factor: self.de.mutation_factor.unwrap_or(d.mutation_factor),
            crossover_rate: self.de.crossover_rate.unwrap_or(d.crossover_rate),
        }
    }

    pub fn adeds_params(&self) -> AdedsParams {
        let d = AdedsParams::default();
        let o = &self.adeds;
        AdedsParams {
            population_size: self.population_size,
            max_generations: self.max_generations,
            initial_mutation_rate: o.initial_mutation_rate.unwrap_or(d.initial_mutation_rate),
            initial_crossover_rate: o.initial_crossover_rate.unwrap_or(d.initial_crossover_rate),
            // Short campaigns cap the default limit at the generation count.
            stagnation_limit: o
                .stagnation_limit
                .unwrap_or_else(|| d.stagnation_limit.min(self.max_generations)),
            local_search: o.local_search.unwrap_or(d.local_search),
            local_search_budget: o.local_search_budget.unwrap_or(d.local_search_budget),
            crossover: o.crossover.unwrap_or(d.crossover),
            ..d
        }
    }

    /// Checks every setting and resolves the function list without running anything.
    pub fn validate(&self) -> Result<Vec<BenchmarkFunction>> {
        if self.num_runs == 0 {
            return Err(Error::InvalidConfiguration("num_runs must be positive".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidConfiguration("no algorithm selected".into()));
        }
        if !(self.success_tolerance > 0.0) {
            return Err(Error::InvalidConfiguration(format!(
                "success tolerance must be positive, got {}",
                self.success_tolerance
            )));
        }
        let functions = resolve_functions(&self.functions)?;
        if self.algorithms.contains(&Algorithm::De) {
            self.de_params().validate()?;
        }
        if self.algorithms.contains(&Algorithm::Adeds) {
            self.adeds_params().validate()?;
        }
        match self.dimension {
            Some(d) => functions.iter().map(|f| f.with_dimension(d)).collect(),
            None => Ok(functions),
        }
    }
}

/// Expands selectors (`all`, category names, function names) into catalog
/// entries, in first-seen order without duplicates.
pub fn resolve_functions(selectors: &[String]) -> Result<Vec<BenchmarkFunction>> {
    if selectors.is_empty() {
        return Err(Error::InvalidConfiguration("no function selected".into()));
    }
    let reg = registry();
    let mut names: Vec<&'static str> = Vec::new();
    for sel in selectors.iter().flat_map(|s| s.split(',')).map(str::trim).filter(|s| !s.is_empty()) {
        let batch = if sel == "all" {
            reg.list_functions(None)
        } else if let Ok(c) = sel.parse::<Category>() {
            reg.list_functions(Some(c))
        } else {
            vec![reg.lookup(sel)?.name]
        };
        for n in batch {
            if !names.contains(&n) {
                names.push(n);
            }
        }
    }
    if names.is_empty() {
        return Err(Error::InvalidConfiguration("no function selected".into()));
    }
    names.into_iter().map(|n| reg.lookup(n).cloned()).collect()
}

/// All runs of one algorithm on one function, ordered by run index.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionResults {
    pub function: BenchmarkFunction,
    pub algorithm: Algorithm,
    pub runs: Vec<RunResult>,
}

impl FunctionResults {
    pub fn best_fitnesses(&self) -> Vec<f64> {
        self.runs.iter().map(|r| r.best_fitness).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Campaign {
    pub spec: ExperimentSpec,
    /// Ordered by function (as resolved), then algorithm (as listed).
    pub results: Vec<FunctionResults>,
}

/// Runs `num_runs` independent runs per (function, algorithm). Run `r` uses
/// `RngStream::new(root_seed, r)`, so the outcome is independent of `workers`.
pub fn run_experiment(spec: &ExperimentSpec, workers: usize) -> Result<Campaign> {
    let functions = spec.validate()?;
    let de = spec.de_params();
    let adeds = spec.adeds_params();

    let jobs: Vec<(usize, Algorithm, usize)> = functions
        .iter()
        .enumerate()
        .flat_map(|(fi, _)| {
            spec.algorithms
                .iter()
                .flat_map(move |&a| (0..spec.num_runs).map(move |r| (fi, a, r)))
        })
        .collect();

    let execute = |&(fi, algo, run): &(usize, Algorithm, usize)| -> Result<RunResult> {
        let mut rng = RngStream::new(spec.root_seed, run as u64);
        match algo {
            Algorithm::De => run_de(&functions[fi], &de, &mut rng),
            Algorithm::Adeds => run_adeds(&functions[fi], &adeds, &mut rng),
        }
    };

    let outcomes: Vec<RunResult> = if workers <= 1 {
        jobs.iter().map(execute).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidConfiguration(format!("cannot start worker pool: {e}")))?;
        pool.install(|| jobs.par_iter().map(execute).collect::<Result<_>>())?
    };

    let mut outcomes = outcomes.into_iter();
    let mut results = Vec::new();
    for f in &functions {
        for &algorithm in &spec.algorithms {
            results.push(FunctionResults {
                function: f.clone(),
                algorithm,
                runs: outcomes.by_ref().take(spec.num_runs).collect(),
            });
        }
    }
    Ok(Campaign {
        spec: spec.clone(),
        results,
    })
}
