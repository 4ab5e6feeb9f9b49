//! Command-line front end: catalog listing, single-function campaigns and
//! DE-versus-adaptive comparison tables.

use std::path::PathBuf;
use std::process::ExitCode;

use adeds::harness::{
    compare_algorithms, export_results, run_experiment, AdedsOverrides, ComparisonRow, DeOverrides,
    ExportFormat, ExperimentSpec, DEFAULT_SUCCESS_TOLERANCE,
};
use adeds::{registry, Algorithm, Category, Error, LocalSearchScope};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "adeds", version, about = "Differential evolution experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the benchmark catalog.
    List {
        #[arg(long)]
        category: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run one algorithm on one function for several seeded runs.
    Run {
        #[arg(long)]
        function: String,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        #[command(flatten)]
        common: CommonArgs,
        /// Pose the objective in this dimension (sinusoidal objectives only).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Run DE and the adaptive variant side by side and build comparison tables.
    Compare {
        /// Comma-separated function names, category names, or `all`.
        #[arg(long, default_value = "all")]
        functions: String,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = DEFAULT_SUCCESS_TOLERANCE)]
        tolerance: f64,
    },
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, default_value_t = 10)]
    runs: usize,
    #[arg(long, default_value_t = 50)]
    pop: usize,
    #[arg(long, default_value_t = 50)]
    gens: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Mutation factor (DE) or initial mutation rate (adaptive).
    #[arg(long = "f")]
    f0: Option<f64>,
    /// Crossover rate (DE) or final crossover rate (adaptive).
    #[arg(long = "cr")]
    cr0: Option<f64>,
    #[arg(long)]
    stagnation: Option<usize>,
    #[arg(long)]
    no_local_search: bool,
    #[arg(long, value_enum)]
    local_search: Option<ScopeArg>,
    /// Skip binomial crossover in the adaptive variant.
    #[arg(long)]
    no_crossover: bool,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Both)]
    format: FormatArg,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    De,
    Adeds,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Off,
    Best,
    Trial,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Both,
}

impl CommonArgs {
    fn spec(&self, functions: Vec<String>, algorithms: Vec<Algorithm>) -> ExperimentSpec {
        let local_search = if self.no_local_search {
            Some(LocalSearchScope::Off)
        } else {
            self.local_search.map(|s| match s {
                ScopeArg::Off => LocalSearchScope::Off,
                ScopeArg::Best => LocalSearchScope::GenerationBest,
                ScopeArg::Trial => LocalSearchScope::EveryTrial,
            })
        };
        ExperimentSpec {
            functions,
            algorithms,
            num_runs: self.runs,
            population_size: self.pop,
            max_generations: self.gens,
            root_seed: self.seed,
            dimension: None,
            de: DeOverrides {
                mutation_factor: self.f0,
                crossover_rate: self.cr0,
            },
            adeds: AdedsOverrides {
                initial_mutation_rate: self.f0,
                initial_crossover_rate: self.cr0,
                stagnation_limit: self.stagnation,
                local_search,
                local_search_budget: None,
                crossover: self.no_crossover.then_some(false),
            },
            success_tolerance: DEFAULT_SUCCESS_TOLERANCE,
        }
    }

    fn format(&self) -> ExportFormat {
        match self.format {
            FormatArg::Csv => ExportFormat::Csv,
            FormatArg::Json => ExportFormat::Json,
            FormatArg::Both => ExportFormat::Both,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidConfiguration(_) | Error::InvalidBounds(_) | Error::InvalidInput(_) => 2,
        Error::UnknownFunction(_) => 3,
        Error::Io { .. } | Error::Serialization { .. } => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn execute(command: Command) -> adeds::Result<()> {
    match command {
        Command::List { category, json } => list(category.as_deref(), json),
        Command::Run { function, algo, common, dim } => {
            let algorithm = match algo {
                AlgoArg::De => Algorithm::De,
                AlgoArg::Adeds => Algorithm::Adeds,
            };
            let mut spec = common.spec(vec![function], vec![algorithm]);
            spec.dimension = dim;
            let campaign = run_experiment(&spec, common.workers)?;
            export_results(&campaign, &[], &common.out, common.format())?;
            let fr = &campaign.results[0];
            println!("{} / {} ({} runs)", fr.function.name, algorithm, fr.runs.len());
            for (i, r) in fr.runs.iter().enumerate() {
                println!(
                    "  run {i:>3}  best {:>14.6}  generations {:>4}  evaluations {:>7}",
                    r.best_fitness, r.generations_executed, r.evaluations_used
                );
            }
            println!("results written to {}", common.out.display());
            Ok(())
        }
        Command::Compare { functions, common, tolerance } => {
            let mut spec = common.spec(vec![functions], vec![Algorithm::De, Algorithm::Adeds]);
            spec.success_tolerance = tolerance;
            let campaign = run_experiment(&spec, common.workers)?;
            let rows = compare_algorithms(&campaign)?;
            export_results(&campaign, &rows, &common.out, common.format())?;
            print_table(&rows);
            println!("results written to {}", common.out.display());
            Ok(())
        }
    }
}

fn list(category: Option<&str>, json: bool) -> adeds::Result<()> {
    let reg = registry();
    let filter = category.map(str::parse::<Category>).transpose()?;
    let entries: Vec<_> = reg
        .list_functions(filter)
        .into_iter()
        .map(|n| reg.lookup(n).map(|b| b.catalog_entry()))
        .collect::<adeds::Result<_>>()?;
    if json {
        let text = serde_json::to_string_pretty(&entries).map_err(|e| Error::Serialization {
            path: PathBuf::from("<stdout>"),
            message: e.to_string(),
        })?;
        println!("{text}");
        return Ok(());
    }
    println!("{:<24} {:<18} {:>3}  {:<30} {:>12}", "name", "category", "dim", "bounds", "optimum");
    for e in entries {
        let bounds = if e.bounds.windows(2).all(|w| w[0] == w[1]) {
            format!("[{}, {}]^{}", e.bounds[0].0, e.bounds[0].1, e.dimension)
        } else {
            e.bounds
                .iter()
                .map(|(l, h)| format!("[{l}, {h}]"))
                .collect::<Vec<_>>()
                .join(" x ")
        };
        println!(
            "{:<24} {:<18} {:>3}  {:<30} {:>12}",
            e.name,
            e.category.as_str(),
            e.dimension, bounds, e.known_optimum_value
        );
    }
    Ok(())
}

fn print_table(rows: &[ComparisonRow]) {
    println!(
        "{:<24} {:<6} {:>14} {:>12} {:>10} {:>10} {:>8}",
        "function", "algo", "mean", "std", "t", "p", "success"
    );
    for r in rows {
        let (t, p) = r
            .t_test
            .map(|t| (format!("{:.3}", t.t_statistic), format!("{:.3}{}", t.p_value, r.significance)))
            .unwrap_or_default();
        for (algo, s, sr) in [
            ("de", &r.de, r.de_success_rate),
            ("adeds", &r.adeds, r.adeds_success_rate),
        ] {
            let (tt, pp) = if algo == "de" { (t.as_str(), p.as_str()) } else { ("", "") };
            let name = if algo == "de" { r.function.as_str() } else { "" };
            println!(
                "{:<24} {:<6} {:>14.6e} {:>12.4e} {:>10} {:>10} {:>8.2}",
                name, algo, s.mean, s.std_dev, tt, pp, sr
            );
        }
    }
}
