//! `setgame`: command-line front end for `setgame-core`.

mod commands;
mod play;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "setgame",
    version,
    about = "Membership game on hereditarily finite sets and pointed graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Plain-file cache for classified levels.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Worker threads for internal parallelism.
    #[arg(long, env = "SETGAME_THREADS", global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every set of rank below M with its classification.
    Enumerate {
        #[arg(long, value_name = "M")]
        rank: usize,
    },
    /// Winner and winning index of one set.
    Classify(SetInput),
    /// Level counts |S_{m,ν}|.
    Census {
        #[arg(long, value_name = "M")]
        rank: usize,
        #[arg(long, value_enum, default_value_t = CensusMethod::Formula)]
        method: CensusMethod,
    },
    /// Exact ratios |S_{m,ν}| / |V_m| for m = 1..=M.
    Prob {
        #[arg(long, value_name = "M")]
        max_rank: usize,
    },
    /// Pointed-graph tools.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Staged model construction over a seed.
    Model {
        #[command(subcommand)]
        action: ModelAction,
    },
    /// Run checks by id.
    Verify {
        /// Comma-separated check ids, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        /// List the available check ids.
        #[arg(long)]
        list: bool,
    },
    /// Play as I against the engine.
    Play {
        #[arg(long, value_name = "BRACES", conflicts_with_all = ["graph", "node"])]
        set: Option<String>,
        #[arg(long, value_name = "FILE", requires = "node")]
        graph: Option<PathBuf>,
        #[arg(long, value_name = "ID", requires = "graph")]
        node: Option<String>,
        /// Stop a drawn game after this many plies.
        #[arg(long, default_value_t = 100)]
        max_plies: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct SetInput {
    #[arg(long, value_name = "BRACES")]
    set: Option<String>,
    #[arg(long, value_name = "N")]
    code: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CensusMethod {
    Brute,
    Formula,
    Both,
}

#[derive(Subcommand, Debug)]
enum GraphAction {
    /// Outcome and index of every node.
    Solve(GraphFile),
    /// Bisimulation quotient.
    Quotient(GraphFile),
    /// Nodes without ∈-minimal elements and the indices they realize.
    Sigma(GraphFile),
    /// Class inclusions, relativized Regularity and σ-spectrum.
    Pattern(GraphFile),
    /// Smallest graph whose point has index NU and no ∈-minimal element.
    Witness {
        #[arg(long, value_name = "NU")]
        nu: usize,
    },
}

#[derive(Args, Debug)]
pub struct GraphFile {
    /// Graph in line or JSON format; `-` reads stdin.
    #[arg(long, value_name = "FILE")]
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum ModelAction {
    /// Build the stages and print the model.
    Build(ModelArgs),
    /// Build, then run the structural and reflection checks.
    Check(ModelArgs),
}

#[derive(Args, Debug)]
pub struct ModelArgs {
    /// Named preset: wf, quine or unfounded-pair.
    #[arg(
        long,
        value_name = "NAME",
        conflicts_with = "file",
        required_unless_present = "file",
        value_parser = clap::builder::PossibleValuesParser::new(setgame_core::model::PRESETS)
    )]
    seed: Option<String>,
    /// Seed graph file.
    #[arg(long, value_name = "FILE")]
    file: Option<PathBuf>,
    #[arg(long, default_value_t = setgame_core::model::DEFAULT_STAGES)]
    stages: usize,
    #[arg(long, default_value_t = setgame_core::model::DEFAULT_CAP)]
    cap: usize,
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Failure::Usage(
                "SETGAME_THREADS/--threads must be at least 1".into(),
            ));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Domain(e.into()))?;
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let ctx = commands::Context {
        format: cli.format,
        cache: cli.cache,
    };
    match cli.command {
        Command::Enumerate { rank } => commands::enumerate(&ctx, rank, &mut out),
        Command::Classify(input) => commands::classify(&ctx, &input, &mut out),
        Command::Census { rank, method } => commands::census(&ctx, rank, method, &mut out),
        Command::Prob { max_rank } => commands::prob(&ctx, max_rank, &mut out),
        Command::Graph { action } => match action {
            GraphAction::Solve(f) => commands::graph_solve(&ctx, &f, &mut out),
            GraphAction::Quotient(f) => commands::graph_quotient(&ctx, &f, &mut out),
            GraphAction::Sigma(f) => commands::graph_sigma(&ctx, &f, &mut out),
            GraphAction::Pattern(f) => commands::graph_pattern(&ctx, &f, &mut out),
            GraphAction::Witness { nu } => commands::graph_witness(&ctx, nu, &mut out),
        },
        Command::Model { action } => match action {
            ModelAction::Build(a) => commands::model_build(&ctx, &a, &mut out),
            ModelAction::Check(a) => commands::model_check(&ctx, &a, &mut out),
        },
        Command::Verify { suite, list } => commands::verify(&ctx, &suite, list, &mut out),
        Command::Play {
            set,
            graph,
            node,
            max_plies,
        } => {
            let stdin = io::stdin();
            let mut input = stdin.lock();
            match (set, graph, node) {
                (Some(s), _, _) => play::play_set(&s, &mut input, &mut out),
                (None, Some(g), Some(n)) => {
                    play::play_graph(&g, &n, max_plies, &mut input, &mut out)
                }
                _ => Err(Failure::Usage(
                    "play needs --set BRACES or --graph FILE --node ID".into(),
                )),
            }
        }
    }?;
    out.flush().map_err(|e| Failure::Domain(e.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}", commands::one_line(&e));
            ExitCode::from(1)
        }
        Err(Failure::Checks(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
