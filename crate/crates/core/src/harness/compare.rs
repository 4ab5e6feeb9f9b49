use serde::{Deserialize, Serialize};

use crate::algorithms::Algorithm;
use crate::error::{Error, Result};
use crate::stats::{fraction_within, significance_marker, summarize, welch_t_test, SampleSummary, TTestResult};

use super::experiment::{Campaign, FunctionResults};

pub const DEFAULT_SUCCESS_TOLERANCE: f64 = 1e-3;

/// One function's DE-versus-adaptive summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub function: String,
    pub known_optimum_value: f64,
    pub de: SampleSummary,
    pub adeds: SampleSummary,
    /// Welch's test of the adaptive sample against the DE sample, so a
    /// negative t means the adaptive variant found lower values. Absent when
    /// either side has fewer than two runs.
    pub t_test: Option<TTestResult>,
    pub de_success_rate: f64,
    pub adeds_success_rate: f64,
    pub significance: String,
}

impl ComparisonRow {
    pub fn summary(&self, algorithm: Algorithm) -> &SampleSummary {
        match algorithm {
            Algorithm::De => &self.de,
            Algorithm::Adeds => &self.adeds,
        }
    }

    pub fn success_rate(&self, algorithm: Algorithm) -> f64 {
        match algorithm {
            Algorithm::De => self.de_success_rate,
            Algorithm::Adeds => self.adeds_success_rate,
        }
    }
}

/// Builds one row per function that has results for both algorithms.
pub fn compare_algorithms(campaign: &Campaign) -> Result<Vec<ComparisonRow>> {
    compare_results(&campaign.results, campaign.spec.success_tolerance)
}

pub(crate) fn compare_results(results: &[FunctionResults], tolerance: f64) -> Result<Vec<ComparisonRow>> {
    let mut names: Vec<&str> = Vec::new();
    for r in results {
        if !names.contains(&r.function.name) {
            names.push(r.function.name);
        }
    }
    names
        .into_iter()
        .map(|name| {
            let find = |a: Algorithm| {
                results
                    .iter()
                    .find(|r| r.function.name == name && r.algorithm == a)
                    .ok_or_else(|| Error::InvalidInput(format!("no `{a}` results for `{name}`")))
            };
            row(find(Algorithm::De)?, find(Algorithm::Adeds)?, tolerance)
        })
        .collect()
}

fn row(de: &FunctionResults, adeds: &FunctionResults, tolerance: f64) -> Result<ComparisonRow> {
    let (de_best, adeds_best) = (de.best_fitnesses(), adeds.best_fitnesses());
    let target = de.function.known_optimum_value;
    let t_test = if de_best.len() >= 2 && adeds_best.len() >= 2 {
        Some(welch_t_test(&adeds_best, &de_best)?)
    } else {
        None
    };
    Ok(ComparisonRow {
        function: de.function.name.to_string(),
        known_optimum_value: target,
        de: summarize(&de_best)?,
        adeds: summarize(&adeds_best)?,
        significance: t_test
            .map(|t| significance_marker(t.p_value).to_string())
            .unwrap_or_default(),
        t_test,
        de_success_rate: fraction_within(&de_best, target, tolerance)?,
        adeds_success_rate: fraction_within(&adeds_best, target, tolerance)?,
    })
}
