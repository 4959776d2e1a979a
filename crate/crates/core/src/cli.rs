//! Command-line interface. Exit codes: 0 success (found or not found), 1
//! internal error, 2 flag or parse error, 3 input validation error.

use crate::detect::{detect, Query, SearchBudget};
use crate::error::{GraphError, HarnessError, MatchingError, PartitionError};
use crate::extremal::{
    generate_points, growth_experiment, records_to_csv, ExperimentRecord, GeneratorKind,
    GeneratorSpec,
};
use crate::geometry::{Point, Segment};
use crate::goodvertex::DisjointMatching;
use crate::graph::{load_input, LoadedInput};
use crate::partition::{decompose, ham_sandwich, rotate_to_balance};
use crate::render::{render_svg, RenderOptions};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Parser)]
#[command(
    name = "geomgraph",
    about = "Exact detection, partition procedures, and extremal search for geometric graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input file (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Output file; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Search a graph (or abstract matrix) for a forbidden substructure.
    Detect {
        #[command(flatten)]
        io: IoArgs,
        /// Pattern grammar: crossing-family:K,L | grid:K,L |
        /// pairwise-crossing:K | disjoint-matching:K |
        /// circle3:{k3|empty|grid21|family21}
        #[arg(long)]
        pattern: String,
        /// Search-tree node budget.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Validate a graph file (general position, ranges, edge sanity).
    Validate {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Recursively decompose a graph with halving and ham-sandwich cuts.
    Decompose {
        #[command(flatten)]
        io: IoArgs,
        /// Stop splitting at this many vertices.
        #[arg(long, default_value_t = 8)]
        leaf_size: usize,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Rotate the halving line and report the full event trace.
    Halving {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Ham-sandwich cut of two point classes ({"v1": [...], "v2": [...]}).
    Hamsandwich {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Good-endpoint analysis of a disjoint matching (graph-format file).
    Good {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Greedy pattern-free edge maximization over generated point sets.
    Extremal {
        /// Pattern grammar (see detect).
        #[arg(long)]
        pattern: String,
        /// Comma-separated point counts, e.g. 20,40,80.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-candidate search-tree node budget.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// random-disk | convex | perturbed-grid
        #[arg(long, default_value = "random-disk")]
        generator: String,
        /// Coordinate scale for the generators.
        #[arg(long, default_value_t = 1_000_000)]
        scale: i64,
        /// Output CSV file; standard output when omitted.
        #[arg(long, visible_alias = "out")]
        output: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Render a graph (optionally with a detected witness) as SVG.
    Render {
        #[command(flatten)]
        io: IoArgs,
        /// Optional pattern to detect and highlight.
        #[arg(long)]
        pattern: Option<String>,
        /// Mark good endpoints (input must be a disjoint matching).
        #[arg(long, default_value_t = false)]
        good: bool,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value = "svg")]
        format: String,
    },
}

/// One failure with its exit code and message.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }

    fn validation(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

fn graph_failure(e: GraphError) -> Failure {
    match e {
        GraphError::Parse(_) => Failure::usage(e.to_string()),
        _ => Failure::validation(e.to_string()),
    }
}

fn partition_failure(e: PartitionError) -> Failure {
    match e {
        PartitionError::Graph(g) => graph_failure(g),
        PartitionError::InvariantFailure(_) => Failure::internal(e.to_string()),
        _ => Failure::validation(e.to_string()),
    }
}

fn matching_failure(e: MatchingError) -> Failure {
    match e {
        MatchingError::Graph(g) => graph_failure(g),
        _ => Failure::validation(e.to_string()),
    }
}

fn harness_failure(e: HarnessError) -> Failure {
    match e {
        HarnessError::Graph(g) => graph_failure(g),
        HarnessError::Detect(d) => Failure::usage(d.to_string()),
        HarnessError::InvariantFailure(_) => Failure::internal(e.to_string()),
        _ => Failure::validation(e.to_string()),
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::internal(format!("cannot read {}: {e}", path.display())))
}

fn parse_query(pattern: &str) -> Result<Query, Failure> {
    pattern.parse::<Query>().map_err(Failure::usage)
}

fn expect_format(got: &str, want: &str) -> Result<(), Failure> {
    if got == want {
        Ok(())
    } else {
        Err(Failure::usage(format!(
            "this command emits {want}, not {got}"
        )))
    }
}

fn emit(payload: &str, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| Failure::internal(format!("cannot write {}: {e}", path.display()))),
        None => out
            .write_all(payload.as_bytes())
            .and_then(|_| {
                if payload.ends_with('\n') {
                    Ok(())
                } else {
                    out.write_all(b"\n")
                }
            })
            .map_err(|e| Failure::internal(format!("cannot write output: {e}"))),
    }
}

#[derive(Deserialize)]
struct TwoClassFile {
    v1: Vec<[i64; 2]>,
    v2: Vec<[i64; 2]>,
}

/// Runs the CLI against explicit streams; returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Detect {
            io,
            pattern,
            budget,
            format,
        } => {
            expect_format(&format, "json")?;
            let query = parse_query(&pattern)?;
            let input = load_input(&read_file(&io.input)?).map_err(graph_failure)?;
            let matrix = input.matrix().map_err(graph_failure)?;
            let detection = detect(&matrix, &query, SearchBudget::nodes(budget.max(1)))
                .map_err(|e| Failure::usage(e.to_string()))?;
            emit(&detection.to_json(), &io.output, out)
        }
        Command::Validate { io, format } => {
            expect_format(&format, "json")?;
            match load_input(&read_file(&io.input)?) {
                Ok(input) => {
                    let kind = match input {
                        LoadedInput::Geometric(_) => "geometric",
                        LoadedInput::Topological(_) => "topological",
                    };
                    let payload = serde_json::json!({ "valid": true, "kind": kind });
                    emit(
                        &serde_json::to_string_pretty(&payload).unwrap(),
                        &io.output,
                        out,
                    )
                }
                Err(e) => {
                    let payload = serde_json::json!({ "valid": false, "violation": e.to_string() });
                    emit(
                        &serde_json::to_string_pretty(&payload).unwrap(),
                        &io.output,
                        out,
                    )?;
                    Err(graph_failure(e))
                }
            }
        }
        Command::Decompose {
            io,
            leaf_size,
            format,
        } => {
            expect_format(&format, "json")?;
            let input = load_input(&read_file(&io.input)?).map_err(graph_failure)?;
            let g = input.geometric().map_err(graph_failure)?;
            let tree = decompose(g, leaf_size).map_err(partition_failure)?;
            emit(&tree.to_json(), &io.output, out)
        }
        Command::Halving { io, format } => {
            expect_format(&format, "json")?;
            let input = load_input(&read_file(&io.input)?).map_err(graph_failure)?;
            let g = input.geometric().map_err(graph_failure)?;
            let trace = rotate_to_balance(g).map_err(partition_failure)?;
            let payload = serde_json::to_string_pretty(&trace)
                .map_err(|e| Failure::internal(e.to_string()))?;
            emit(&payload, &io.output, out)
        }
        Command::Hamsandwich { io, format } => {
            expect_format(&format, "json")?;
            let file: TwoClassFile = serde_json::from_str(&read_file(&io.input)?)
                .map_err(|e| Failure::usage(format!("input does not parse: {e}")))?;
            let v1: Vec<Point> = file.v1.iter().map(|&[x, y]| Point::new(x, y)).collect();
            let v2: Vec<Point> = file.v2.iter().map(|&[x, y]| Point::new(x, y)).collect();
            let cut = ham_sandwich(&v1, &v2).map_err(partition_failure)?;
            let payload =
                serde_json::to_string_pretty(&cut).map_err(|e| Failure::internal(e.to_string()))?;
            emit(&payload, &io.output, out)
        }
        Command::Good { io, format } => {
            expect_format(&format, "json")?;
            let input = load_input(&read_file(&io.input)?).map_err(graph_failure)?;
            let g = input.geometric().map_err(graph_failure)?;
            let segments: Vec<Segment> = (0..g.edge_count()).map(|i| g.segment(i)).collect();
            let matching = DisjointMatching::new(segments).map_err(matching_failure)?;
            let good = matching.good_endpoints().map_err(matching_failure)?;
            let bound = if matching.len() >= 4 {
                Some(
                    matching
                        .check_good_endpoint_bound()
                        .map_err(matching_failure)?,
                )
            } else {
                None
            };
            #[derive(Serialize)]
            struct GoodJson {
                size: usize,
                good: Vec<(usize, usize)>,
                good_count: usize,
                bound_holds: Option<bool>,
            }
            let payload = serde_json::to_string_pretty(&GoodJson {
                size: matching.len(),
                good_count: good.len(),
                good,
                bound_holds: bound,
            })
            .unwrap();
            emit(&payload, &io.output, out)
        }
        Command::Extremal {
            pattern,
            n,
            trials,
            seed,
            budget,
            generator,
            scale,
            output,
            format,
        } => {
            expect_format(&format, "csv")?;
            if n.is_empty() {
                return Err(Failure::usage("--n needs at least one point count"));
            }
            if trials == 0 {
                return Err(Failure::usage("--trials must be at least 1"));
            }
            let query = parse_query(&pattern)?;
            let kind: GeneratorKind = generator.parse().map_err(Failure::usage)?;
            let results = growth_experiment(
                kind,
                scale,
                &query,
                &n,
                trials,
                seed,
                SearchBudget::nodes(budget.max(1)),
            );
            let mut records: Vec<ExperimentRecord> = Vec::new();
            let mut first_error: Option<Failure> = None;
            for r in results {
                match r {
                    Ok((record, _)) => records.push(record),
                    Err(e) => {
                        if first_error.is_none() {
                            first_error = Some(harness_failure(e));
                        }
                    }
                }
            }
            emit(&records_to_csv(&records), &output, out)?;
            match first_error {
                Some(f) => Err(f),
                None => Ok(()),
            }
        }
        Command::Render {
            io,
            pattern,
            good,
            budget,
            format,
        } => {
            expect_format(&format, "svg")?;
            let input = load_input(&read_file(&io.input)?).map_err(graph_failure)?;
            let g = input.geometric().map_err(graph_failure)?;
            let mut opts = RenderOptions::default();
            if let Some(pattern) = pattern {
                let query = parse_query(&pattern)?;
                let matrix = input.matrix().map_err(graph_failure)?;
                let d = detect(&matrix, &query, SearchBudget::nodes(budget.max(1)))
                    .map_err(|e| Failure::usage(e.to_string()))?;
                opts.witness_e1 = d.e1;
                opts.witness_e2 = d.e2;
            }
            if good {
                let segments: Vec<Segment> = (0..g.edge_count()).map(|i| g.segment(i)).collect();
                let matching = DisjointMatching::new(segments).map_err(matching_failure)?;
                for (edge, end) in matching.good_endpoints().map_err(matching_failure)? {
                    let (u, v) = g.edges()[edge];
                    opts.good_vertices.push(if end == 0 { u } else { v });
                }
            }
            emit(&render_svg(g, &opts), &io.output, out)
        }
    }
}

/// Convenience for the binary: run with std streams and process args.
pub fn main_entry() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run(&args, &mut out, &mut err)
}

/// Points generated for ad-hoc experimentation (used by tests).
pub fn generate_for_tests(kind: GeneratorKind, n: usize, seed: u64) -> Vec<Point> {
    generate_points(&GeneratorSpec {
        kind,
        n,
        seed,
        coordinate_scale: 1_000_000,
    })
    .expect("generation succeeds")
}
