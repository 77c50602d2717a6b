use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mdgraph::io::{to_json, BenchDocument, FactorDocument, ProductDocument, VerifyDocument};
use mdgraph::product::{
    factored_sets_with_budget, n_ary_product_with_budget, DEFAULT_VERTEX_BUDGET,
};
use mdgraph::verify::{
    benchmark_step_counts, measure_wall_times, random_strong_digraph, run_property_suite,
    search_caceres_counterexample, CaceresPart, SearchConfig, SuiteConfig,
};
use mdgraph::{
    emit_digraph, factor_analysis, full_report, parse_digraph, Digraph, GeneratorConfig,
    ReportDocument,
};

mod error;

use error::CliError;

#[derive(Parser)]
#[command(
    name = "mdgraph",
    version,
    about = "Maximum-distance analysis of strong digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Four boundary-type sets of one strong digraph
    Analyze { file: PathBuf },
    /// Build the Cartesian product of the given factors
    Product {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Write the explicit product here
        #[arg(long)]
        explicit_out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
    },
    /// Product sets computed from the factors, with provenance and cost
    FactorAnalyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
    },
    /// Randomized property suite; exits 5 if any property fails
    Verify {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Look for digraphs violating an interval-closure or cardinality-two property
    SearchCounterexample {
        #[arg(long, value_parser = parse_part)]
        which: CaceresPart,
        #[arg(long, default_value_t = 2000)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        symmetric_only: bool,
        /// Write each witness as a digraph file in this directory
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Step counts and wall times, direct versus factored, on directed-cycle factors
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
    },
    /// Random strong digraph: a Hamiltonian cycle plus arcs with probability p
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
}

fn parse_part(s: &str) -> Result<CaceresPart, String> {
    CaceresPart::parse(s)
        .ok_or_else(|| format!("expected interval-closure or cardinality-two, got `{s}`"))
}

fn read_digraph(path: &Path) -> Result<Digraph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Read(path.to_owned(), e))?;
    parse_digraph(&text).map_err(|e| CliError::File(path.to_owned(), e))
}

fn read_all(paths: &[PathBuf]) -> Result<Vec<Digraph>, CliError> {
    paths.iter().map(|p| read_digraph(p)).collect()
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Write(path.to_owned(), e))
}

/// Cycle of length `n`; a single vertex for `n = 1`.
fn cycle_factor(n: usize) -> Result<Digraph, CliError> {
    if n == 1 {
        return Ok(Digraph::trivial());
    }
    Ok(Digraph::directed_cycle(n)?)
}

fn run(cmd: Command) -> Result<String, CliError> {
    match cmd {
        Command::Analyze { file } => {
            let g = read_digraph(&file)?;
            let report = full_report(&g)?;
            Ok(to_json(&ReportDocument::direct(&report)))
        }
        Command::Product {
            files,
            explicit_out,
            budget,
        } => {
            let factors = read_all(&files)?;
            let product = n_ary_product_with_budget(&factors, budget)?;
            if let Some(out) = &explicit_out {
                write_file(out, &emit_digraph(&product))?;
            }
            Ok(to_json(&ProductDocument {
                factor_sizes: factors.iter().map(Digraph::vertex_count).collect(),
                vertices: product.vertex_count(),
                arcs: product.arc_count(),
                written_to: explicit_out.map(|p| p.display().to_string()),
            }))
        }
        Command::FactorAnalyze { files, budget } => {
            let factors = read_all(&files)?;
            let analysis = factor_analysis(&factors)?;
            let factored = factored_sets_with_budget(&factors, &analysis, budget)?;
            Ok(to_json(&FactorDocument {
                analysis,
                product: ReportDocument::factored(&factored),
            }))
        }
        Command::Verify {
            trials,
            max_n,
            seed,
        } => {
            if max_n == 0 {
                return Err(CliError::Usage("--max-n must be at least 1".into()));
            }
            let cfg = SuiteConfig {
                trials,
                max_n,
                seed,
            };
            let doc = VerifyDocument::new(cfg, run_property_suite(trials, max_n, seed));
            let out = to_json(&doc);
            if doc.passed {
                Ok(out)
            } else {
                let failed = doc.properties.iter().filter(|p| !p.passed()).count();
                Err(CliError::Violation {
                    output: out,
                    failed,
                })
            }
        }
        Command::SearchCounterexample {
            which,
            trials,
            max_n,
            seed,
            symmetric_only,
            out_dir,
        } => {
            if max_n == 0 {
                return Err(CliError::Usage("--max-n must be at least 1".into()));
            }
            let outcome = search_caceres_counterexample(SearchConfig {
                which,
                trials,
                max_n,
                seed,
                symmetric_only,
            });
            if let Some(dir) = &out_dir {
                fs::create_dir_all(dir).map_err(|e| CliError::Write(dir.clone(), e))?;
                for (k, w) in outcome.witnesses.iter().enumerate() {
                    let text = format!(
                        "# {}: {}\n{}",
                        which.name(),
                        w.description,
                        emit_digraph(&w.digraph)
                    );
                    write_file(&dir.join(format!("{}-{k}.dg", which.name())), &text)?;
                }
            }
            Ok(to_json(&outcome))
        }
        Command::Bench {
            sizes,
            reps,
            budget,
        } => {
            let ledger = benchmark_step_counts(&sizes)?;
            let factors = sizes
                .iter()
                .map(|&n| cycle_factor(n))
                .collect::<Result<Vec<_>, _>>()?;
            let wall = match measure_wall_times(&factors, reps.max(1), budget) {
                Ok(w) => Some(w),
                Err(mdgraph::Error::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            Ok(to_json(&BenchDocument { ledger, wall }))
        }
        Command::Gen { n, p, seed } => {
            let g = random_strong_digraph(&GeneratorConfig {
                n,
                extra_arc_probability: p,
                seed,
            })?;
            Ok(emit_digraph(&g))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Violation { output, .. } = &e {
                print!("{output}");
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
