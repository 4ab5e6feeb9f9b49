//! Per-run instrumentation: best-fitness history, convergence rate and
//! the stagnation test used as an early-stopping criterion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Best fitness after each generation; entry 0 is the initial population.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FitnessHistory {
    best_per_generation: Vec<f64>,
}

impl FitnessHistory {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a history from raw values, rejecting any increase.
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        if let Some(w) = values.windows(2).position(|w| w[1] > w[0]) {
            return Err(Error::InvalidInput(format!(
                "history increases at index {}: {} -> {}",
                w + 1,
                values[w],
                values[w + 1]
            )));
        }
        Ok(FitnessHistory {
            best_per_generation: values,
        })
    }

    /// Appends the incumbent best. The value is capped at the previous entry
    /// so the history can never increase.
    pub fn record(&mut self, best: f64) {
        let v = match self.best_per_generation.last() {
            Some(&prev) if best > prev => prev,
            _ => best,
        };
        self.best_per_generation.push(v);
    }

    pub fn values(&self) -> &[f64] {
        &self.best_per_generation
    }

    pub fn len(&self) -> usize {
        self.best_per_generation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.best_per_generation.is_empty()
    }

    pub fn last(&self) -> Option<f64> {
        self.best_per_generation.last().copied()
    }
}

/// Change in best fitness between `generation - 1` and `generation`.
pub fn convergence_rate(history: &FitnessHistory, generation: usize) -> Result<f64> {
    let v = history.values();
    if generation == 0 || generation >= v.len() {
        return Err(Error::InvalidInput(format!(
            "generation {generation} out of range for a history of length {}",
            v.len()
        )));
    }
    Ok(v[generation] - v[generation - 1])
}

/// True iff the last `stagnation_limit` entries all equal the final entry.
pub fn has_converged(values: &[f64], stagnation_limit: usize) -> bool {
    has_converged_within(values, stagnation_limit, 0.0)
}

/// Like [`has_converged`] but entries within `tolerance` of the final one
/// count as equal. A tolerance of 0 is exact equality.
pub fn has_converged_within(values: &[f64], stagnation_limit: usize, tolerance: f64) -> bool {
    if stagnation_limit == 0 || values.len() < stagnation_limit {
        return false;
    }
    let last = values[values.len() - 1];
    values[values.len() - stagnation_limit..]
        .iter()
        .all(|&v| (v - last).abs() <= tolerance)
}
