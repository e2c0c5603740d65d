//! Command-line front end. Exit status: 0 success, 1 domain or I/O error,
//! 2 usage error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use entgeom::experiment::{csv_string, monogamy_scenario, plot_data_string, run_fig2, ExperimentConfig};
use entgeom::format::round_sig;
use entgeom::geometry::DEFAULT_ISLAND_EPSILON;
use entgeom::states::{random_density_ginibre, random_pure};
use entgeom::{build_state, categorize, filter_islands, geometry_report, IslandQuery, MultipartiteState, PartySubset, StateSpec};

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(name = "entgeom", version, about = "Entropic-geometric entanglement monotones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All pair metrics, triple areas, volumes and the content E of a state.
    Analyze {
        #[arg(long)]
        spec: PathBuf,
        /// Largest subset size for which volumes are listed.
        #[arg(long)]
        max_volume_size: Option<usize>,
    },
    /// Random-state comparison of concurrence and E; writes CSV.
    Fig2 {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Ginibre rank of each 2-qubit factor.
        #[arg(long, default_value_t = 4)]
        rank: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also write two-series plot data here.
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Append a Bell ⊗ Bell reference row.
        #[arg(long)]
        inject_bell: bool,
        /// Append a product-state reference row.
        #[arg(long)]
        inject_product: bool,
    },
    /// Test whether a group of parties is an island, or find all islands.
    #[command(group(ArgGroup::new("mode").required(true).args(["subset", "exhaustive"])))]
    Filter {
        #[arg(long)]
        spec: PathBuf,
        /// Comma-separated party indices, e.g. 0,1.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = DEFAULT_ISLAND_EPSILON)]
        epsilon: f64,
    },
    /// Vanishing pattern of pair and triple monotones (four or more parties).
    Categorize {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ISLAND_EPSILON)]
        epsilon: f64,
    },
    /// Ono-inequality check on a weakly coupled Bell pair.
    Monogamy {
        /// Weight of the coupling to the third party, in [0, 1].
        #[arg(long, default_value_t = 0.05)]
        coupling: f64,
    },
    /// Emit a seeded random state as a literal spec.
    #[command(group(ArgGroup::new("kind").args(["rank", "pure"])))]
    Random {
        /// Comma-separated local dimensions, e.g. 2,2,2.
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long)]
        seed: u64,
        /// Ginibre rank (full rank by default).
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        pure: bool,
    },
}

fn load(path: &Path) -> CliResult<MultipartiteState> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let spec = StateSpec::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(build_state(&spec)?)
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()).into())
}

/// Runs one subcommand and returns its standard output.
fn run(command: Command) -> CliResult<String> {
    let stdout_text;
    match command {
        Command::Analyze { spec, max_volume_size } => {
            stdout_text = geometry_report(&load(&spec)?, max_volume_size)?.to_string();
        }
        Command::Fig2 {
            samples,
            seed,
            rank,
            out,
            plot,
            inject_bell,
            inject_product,
        } => {
            let config = ExperimentConfig {
                samples,
                seed,
                rank,
                inject_bell,
                inject_product,
            };
            let output = run_fig2(&config)?;
            write(&out, &csv_string(&output.rows))?;
            if let Some(plot) = plot {
                write(&plot, &plot_data_string(&output))?;
            }
            stdout_text = output.summary.to_string();
        }
        Command::Filter {
            spec,
            subset,
            exhaustive: _,
            epsilon,
        } => {
            let query = match subset {
                Some(ix) => IslandQuery::Subset(PartySubset::new(&ix)?),
                None => IslandQuery::Exhaustive,
            };
            stdout_text = filter_islands(&load(&spec)?, query, epsilon)?.to_string();
        }
        Command::Categorize { spec, epsilon } => {
            stdout_text = categorize(&load(&spec)?, epsilon)?.to_string();
        }
        Command::Monogamy { coupling } => {
            stdout_text = monogamy_scenario(coupling)?.to_string();
        }
        Command::Random { dims, seed, rank, pure } => {
            let state = if pure {
                random_pure(&dims, seed)?
            } else {
                let side = dims.iter().try_fold(1usize, |acc, d| acc.checked_mul(*d));
                let side = side.ok_or("dimension product overflows")?;
                random_density_ginibre(&dims, rank.unwrap_or(side), seed)?
            };
            let mut spec = StateSpec::literal(&state);
            if let StateSpec::Literal { matrix, .. } = &mut spec {
                for z in matrix.iter_mut().flatten().flatten() {
                    *z = round_sig(*z);
                }
            }
            stdout_text = spec.to_json() + "\n";
        }
    }
    Ok(stdout_text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
                Ok(()) => ExitCode::SUCCESS,
                // A closed pipe (e.g. `| head`) is not an error for a filter-style tool.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
