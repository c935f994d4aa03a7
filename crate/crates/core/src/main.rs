use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use domsets::ego::{self, Direction, SelectionCriterion};
use domsets::graph::{Graph, GraphError};
use domsets::mds::{domination_partition, EnumOptions, MdsCollection, MdsError};
use domsets::report::{self, AnalysisReport};
use domsets::set::VertexSet;
use domsets::solver::{self, SolverBudget, SolverError};
use domsets::{DatasetId, ALL_DATASETS};

const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_BAD_MDS: u8 = 4;

#[derive(Parser)]
#[command(
    name = "domsets",
    about = "Exact graph domination analysis and ego-centered decompositions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cap on branch-and-bound search nodes (0 = unlimited)
    #[arg(long, global = true, default_value_t = 0)]
    budget_nodes: u64,

    /// Cap on enumeration candidate subsets
    #[arg(long, global = true, default_value_t = 100_000_000)]
    candidate_cap: u64,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output format where applicable
    #[arg(long, global = true, default_value = "text")]
    format: Format,

    /// Suppress headers and progress lines
    #[arg(long, global = true)]
    quiet: bool,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Domination number, partition and multiplicity index
    Analyze { input: String },
    /// List all minimum dominating sets with independence flags
    Enumerate { input: String },
    /// Seven-column decomposition metrics table
    Decompose {
        input: String,
        #[command(flatten)]
        which: WhichMds,
    },
    /// Minimum dominating sets optimizing one structural criterion
    Select {
        input: String,
        /// 1..5 or a column name (1=ego_degree_sum, 2=e_ego, 3=e_private,
        /// 4=e_public, 5=e_private_public)
        #[arg(long)]
        criterion: SelectionCriterion,
        #[arg(long)]
        direction: Direction,
    },
    /// Role-annotated DOT export (partition mode, or decomposition mode
    /// with --mds)
    Export {
        input: String,
        /// Comma-separated members, or an index into the enumerated list
        #[arg(long)]
        mds: Option<String>,
    },
    /// List the bundled datasets
    Datasets,
}

#[derive(Args)]
#[group(multiple = false)]
struct WhichMds {
    /// All minimum dominating sets (default)
    #[arg(long)]
    all: bool,
    /// Comma-separated members, or an index into the enumerated list
    #[arg(long)]
    mds: Option<String>,
}

enum CliError {
    Input(String),
    Budget(String),
    BadMds(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::BadMds(_) => EXIT_BAD_MDS,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Budget(m) | CliError::BadMds(m) => m,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<MdsError> for CliError {
    fn from(e: MdsError) -> Self {
        match e {
            MdsError::CandidateCapExceeded { .. } => CliError::Budget(e.to_string()),
            MdsError::Solver(s) => s.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<ego::EgoError> for CliError {
    fn from(e: ego::EgoError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    match run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_INPUT);
                }
            } else {
                print!("{output}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn load_graph(input: &str) -> Result<Graph, CliError> {
    if let Ok(id) = input.parse::<DatasetId>() {
        return Ok(domsets::builtin_dataset(id));
    }
    let path = PathBuf::from(input);
    if !path.exists() {
        return Err(CliError::Input(format!(
            "'{input}' is neither a bundled dataset nor an existing file"
        )));
    }
    let text = fs::read_to_string(&path)
        .map_err(|e| CliError::Input(format!("cannot read {input}: {e}")))?;
    Ok(Graph::parse_edge_list(&text)?)
}

fn enum_options(cli: &Cli) -> EnumOptions {
    EnumOptions {
        budget: SolverBudget {
            max_nodes: cli.budget_nodes,
            ..Default::default()
        },
        candidate_cap: cli.candidate_cap,
        prune: true,
    }
}

/// Resolves an --mds argument against the enumerated collection.
/// Distinguishes "not dominating" from "dominating but not minimum".
fn resolve_mds(
    g: &Graph,
    collection: &MdsCollection,
    arg: &str,
) -> Result<VertexSet, CliError> {
    if let Ok(index) = arg.trim().parse::<usize>() {
        if !arg.contains(',') {
            return collection
                .sets
                .get(index)
                .map(|e| e.members.clone())
                .ok_or_else(|| {
                    CliError::BadMds(format!(
                        "index {index} out of range (the graph has {} minimum dominating sets)",
                        collection.len()
                    ))
                });
        }
    }
    let set = VertexSet::new(arg.split(',').map(str::trim).filter(|s| !s.is_empty()));
    for label in set.iter() {
        if !g.contains(label) {
            return Err(CliError::BadMds(format!("unknown vertex '{label}'")));
        }
    }
    if !solver::is_dominating(g, &set).map_err(CliError::from)? {
        return Err(CliError::BadMds(format!(
            "{} is not a dominating set",
            set.bracketed()
        )));
    }
    if set.len() != collection.gamma || collection.position_of(&set).is_none() {
        return Err(CliError::BadMds(format!(
            "{} is dominating but not minimum (gamma = {})",
            set.bracketed(),
            collection.gamma
        )));
    }
    Ok(set)
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Analyze { input } => {
            let g = load_graph(input)?;
            let (part, coll) = domination_partition(&g, &enum_options(cli))?;
            if cli.format == Format::Json {
                let report = AnalysisReport::build(&g, &part, &coll, false)?;
                return Ok(report.to_json() + "\n");
            }
            let mut out = String::new();
            out.push_str(&format!("n={} edges={}\n", g.order(), g.size()));
            out.push_str(&format!("gamma={}\n", part.gamma));
            out.push_str(&format!("always={}\n", part.always.bracketed()));
            out.push_str(&format!("possibly={}\n", part.possibly.bracketed()));
            out.push_str(&format!("never_count={}\n", part.never.len()));
            out.push_str(&format!(
                "m={} ({})\n",
                part.multiplicity,
                part.multiplicity.rounded()
            ));
            Ok(out)
        }
        Command::Enumerate { input } => {
            let g = load_graph(input)?;
            let (_, coll) = domination_partition(&g, &enum_options(cli))?;
            let mut out = String::new();
            if !cli.quiet {
                out.push_str(&format!("{} minimum dominating set(s)\n", coll.len()));
            }
            for entry in coll.iter() {
                out.push_str(&entry.members.bracketed());
                if entry.independent {
                    out.push_str("  independent");
                }
                out.push('\n');
            }
            Ok(out)
        }
        Command::Decompose { input, which } => {
            let g = load_graph(input)?;
            let (_, coll) = domination_partition(&g, &enum_options(cli))?;
            let chosen: Vec<VertexSet> = match &which.mds {
                Some(arg) => vec![resolve_mds(&g, &coll, arg)?],
                None => coll.iter().map(|e| e.members.clone()).collect(),
            };
            let mut rows = Vec::new();
            for set in chosen {
                let m = ego::metrics(&g, &set)?;
                rows.push((set, m));
            }
            Ok(match cli.format {
                Format::Text => report::metrics_table_text(&rows),
                Format::Csv => report::metrics_table_csv(&rows),
                Format::Json => {
                    let entries: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(s, m)| {
                            serde_json::json!({
                                "members": s,
                                "metrics": m,
                            })
                        })
                        .collect();
                    serde_json::to_string_pretty(&entries).expect("serializes") + "\n"
                }
            })
        }
        Command::Select {
            input,
            criterion,
            direction,
        } => {
            let g = load_graph(input)?;
            let (_, coll) = domination_partition(&g, &enum_options(cli))?;
            let (value, winners) = ego::select_decomposition(&g, &coll, *criterion, *direction)?;
            let mut out = String::new();
            if !cli.quiet {
                let dir = match direction {
                    Direction::Max => "max",
                    Direction::Min => "min",
                };
                out.push_str(&format!(
                    "{dir} {} = {value}: {} set(s)\n",
                    criterion.name(),
                    winners.len()
                ));
            }
            for w in winners {
                out.push_str(&w.bracketed());
                out.push('\n');
            }
            Ok(out)
        }
        Command::Export { input, mds } => {
            let g = load_graph(input)?;
            match mds {
                None => {
                    let (part, _) = domination_partition(&g, &enum_options(cli))?;
                    Ok(report::dot_partition(&g, &part))
                }
                Some(arg) => {
                    let (_, coll) = domination_partition(&g, &enum_options(cli))?;
                    let set = resolve_mds(&g, &coll, arg)?;
                    Ok(report::dot_decomposition(&g, &set)?)
                }
            }
        }
        Command::Datasets => {
            let mut out = String::new();
            for id in ALL_DATASETS {
                let g = domsets::builtin_dataset(id);
                out.push_str(&format!("{id}\t{} vertices\t{} edges\n", g.order(), g.size()));
            }
            Ok(out)
        }
    }
}
