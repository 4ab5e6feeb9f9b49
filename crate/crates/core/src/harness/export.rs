use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algorithms::{Algorithm, RunResult, Termination};
use crate::error::{Error, Result};

use super::compare::ComparisonRow;
use super::experiment::{Campaign, ExperimentSpec};

pub const COMPARISON_COLUMNS: [&str; 8] = [
    "function",
    "algo",
    "mean_fitness",
    "std_dev",
    "t_stat",
    "p_value",
    "success_rate",
    "significance",
];

pub const HISTORY_COLUMNS: [&str; 4] = ["generation", "best_fitness", "diversity", "convergence_rate"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExportFormat {
    Csv,
    Json,
    Both,
}

impl ExportFormat {
    fn csv(self) -> bool {
        matches!(self, ExportFormat::Csv | ExportFormat::Both)
    }

    fn json(self) -> bool {
        matches!(self, ExportFormat::Json | ExportFormat::Both)
    }
}

/// 17 significant digits in scientific notation, which round-trips any `f64`.
/// Non-finite values are written as `inf`, `-inf` and `NaN`.
pub fn format_float(v: f64) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:.16e}")
    }
}

pub fn history_file_name(function: &str, algorithm: Algorithm, run: usize) -> String {
    format!("history_{function}_{algorithm}_{run}.csv")
}

fn create_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

fn csv_writer(path: &Path) -> Result<csv::Writer<fs::File>> {
    csv::Writer::from_path(path).map_err(|e| csv_error(path, e))
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::Serialization {
            path: path.to_path_buf(),
            message: format!("{other:?}"),
        },
    }
}

/// Two records per row, DE first. The t-test columns repeat on both records.
pub fn write_comparison_csv(rows: &[ComparisonRow], path: &Path) -> Result<()> {
    let mut w = csv_writer(path)?;
    w.write_record(COMPARISON_COLUMNS).map_err(|e| csv_error(path, e))?;
    for row in rows {
        let (t, p) = row
            .t_test
            .map(|t| (format_float(t.t_statistic), format_float(t.p_value)))
            .unwrap_or_default();
        for algo in [Algorithm::De, Algorithm::Adeds] {
            let s = row.summary(algo);
            w.write_record([
                row.function.as_str(),
                algo.as_str(),
                &format_float(s.mean),
                &format_float(s.std_dev),
                &t,
                &p,
                &format_float(row.success_rate(algo)),
                &row.significance,
            ])
            .map_err(|e| csv_error(path, e))?;
        }
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn write_comparison_json(rows: &[ComparisonRow], path: &Path) -> Result<()> {
    write_json(rows, path)
}

fn write_json<T: Serialize + ?Sized>(value: &T, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Error::Serialization {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// One record per generation, starting at generation 0.
pub fn write_history(run: &RunResult, path: &Path) -> Result<()> {
    let mut w = csv_writer(path)?;
    w.write_record(HISTORY_COLUMNS).map_err(|e| csv_error(path, e))?;
    let rates = run.convergence_rates();
    for (g, ((best, div), rate)) in run
        .history
        .values()
        .iter()
        .zip(&run.diversity_history)
        .zip(&rates)
        .enumerate()
    {
        w.write_record([g.to_string(), format_float(*best), format_float(*div), format_float(*rate)])
            .map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// Final state of every run in the campaign.
pub fn write_runs_csv(campaign: &Campaign, path: &Path) -> Result<()> {
    let mut w = csv_writer(path)?;
    w.write_record([
        "function",
        "algo",
        "run",
        "best_fitness",
        "generations_executed",
        "evaluations_used",
        "terminated_by",
        "best_position",
    ])
    .map_err(|e| csv_error(path, e))?;
    for fr in &campaign.results {
        for (i, run) in fr.runs.iter().enumerate() {
            let position = run
                .best_position
                .iter()
                .map(|v| format_float(*v))
                .collect::<Vec<_>>()
                .join(";");
            let termination = match run.terminated_by {
                Termination::MaxGenerations => "max_generations",
                Termination::Stagnation => "stagnation",
            };
            w.write_record([
                fr.function.name.to_string(),
                fr.algorithm.to_string(),
                i.to_string(),
                format_float(run.best_fitness),
                run.generations_executed.to_string(),
                run.evaluations_used.to_string(),
                termination.to_string(),
                position,
            ])
            .map_err(|e| csv_error(path, e))?;
        }
    }
    w.flush().map_err(|e| Error::io(path, e))
}

#[derive(Serialize)]
struct SpecSnapshot<'a> {
    #[serde(flatten)]
    spec: &'a ExperimentSpec,
    resolved_functions: Vec<&'a str>,
    de_params: crate::algorithms::DeParams,
    adeds_params: crate::algorithms::AdedsParams,
}

/// Resolved configuration written beside the results.
pub fn write_spec_snapshot(campaign: &Campaign, path: &Path) -> Result<()> {
    let mut names: Vec<&str> = Vec::new();
    for fr in &campaign.results {
        if !names.contains(&fr.function.name) {
            names.push(fr.function.name);
        }
    }
    write_json(
        &SpecSnapshot {
            spec: &campaign.spec,
            resolved_functions: names,
            de_params: campaign.spec.de_params(),
            adeds_params: campaign.spec.adeds_params(),
        },
        path,
    )
}

/// Writes `comparison.{csv,json}` (when `rows` is nonempty), `runs.csv`, one
/// history file per run, and `spec.json` into `out_dir`. Returns the paths written.
pub fn export_results(
    campaign: &Campaign,
    rows: &[ComparisonRow],
    out_dir: &Path,
    format: ExportFormat,
) -> Result<Vec<PathBuf>> {
    create_dir(out_dir)?;
    let mut written = Vec::new();
    if !rows.is_empty() {
        if format.csv() {
            let p = out_dir.join("comparison.csv");
            write_comparison_csv(rows, &p)?;
            written.push(p);
        }
        if format.json() {
            let p = out_dir.join("comparison.json");
            write_comparison_json(rows, &p)?;
            written.push(p);
        }
    }
    let p = out_dir.join("runs.csv");
    write_runs_csv(campaign, &p)?;
    written.push(p);
    for fr in &campaign.results {
        for (i, run) in fr.runs.iter().enumerate() {
            let p = out_dir.join(history_file_name(fr.function.name, fr.algorithm, i));
            write_history(run, &p)?;
            written.push(p);
        }
    }
    let p = out_dir.join("spec.json");
    write_spec_snapshot(campaign, &p)?;
    written.push(p);
    Ok(written)
}
