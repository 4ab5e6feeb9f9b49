use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{convergence_rate, FitnessHistory};
use crate::space::RealVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    De,
    Adeds,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::De => "de",
            Algorithm::Adeds => "adeds",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "de" => Ok(Algorithm::De),
            "adeds" => Ok(Algorithm::Adeds),
            other => Err(Error::InvalidConfiguration(format!(
                "unknown algorithm `{other}` (expected `de` or `adeds`)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    MaxGenerations,
    Stagnation,
}

/// Outcome of one optimizer run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub algorithm: Algorithm,
    pub best_position: RealVector,
    pub best_fitness: f64,
    /// Entry `k` is the best fitness after `k` generations.
    pub history: FitnessHistory,
    /// Mean pairwise distance after each generation, aligned with `history`.
    pub diversity_history: Vec<f64>,
    pub generations_executed: usize,
    pub evaluations_used: usize,
    pub terminated_by: Termination,
    pub final_population: Vec<RealVector>,
}

impl RunResult {
    /// Per-generation change in best fitness; entry 0 is 0.
    pub fn convergence_rates(&self) -> Vec<f64> {
        std::iter::once(0.0)
            .chain((1..self.history.len()).map(|g| {
                convergence_rate(&self.history, g).expect("index is within the history")
            }))
            .collect()
    }

    pub fn final_convergence_rate(&self) -> f64 {
        *self.convergence_rates().last().unwrap_or(&0.0)
    }
}
