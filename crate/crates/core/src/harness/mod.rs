//! Seeded multi-run campaigns, DE-versus-adaptive comparison tables and
//! CSV/JSON export.

mod compare;
mod experiment;
mod export;
pub mod float_repr;

pub use compare::{compare_algorithms, ComparisonRow, DEFAULT_SUCCESS_TOLERANCE};
pub use experiment::{
    resolve_functions, run_experiment, AdedsOverrides, Campaign, DeOverrides, ExperimentSpec,
    FunctionResults,
};
pub use export::{
    export_results, format_float, history_file_name, write_comparison_csv, write_comparison_json,
    write_history, write_runs_csv, write_spec_snapshot, ExportFormat, COMPARISON_COLUMNS,
    HISTORY_COLUMNS,
};
