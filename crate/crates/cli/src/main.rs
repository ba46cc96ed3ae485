//! Command-line interface: analyze, construct, verify, search, export.
//!
//! Exit codes: 0 success; 1 verification counterexamples, failed
//! certification under --strict, or an exhausted search; 2 usage errors;
//! 3 file errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use okings::dot::export_dot;
use okings::format::{parse_graph, serialize_graph};
use okings::parallel::verify_claim_parallel;
use okings::report::{render_analysis, render_certified, render_graph_file, render_verification};
use okings_core::construct::{
    self, CertifiedGraph, ConstructError, NksbMode, NksbSpec, TwoKingsReading,
};
use okings_core::dominance::DominanceReport;
use okings_core::enumerate::{Claim, ScanOptions};
use okings_core::graph::OrientedGraph;

#[derive(Parser)]
#[command(name = "okings", version, about = "Kings and serfs in oriented graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print vertex reports, the score sequence, dominance sets, and the
    /// triple census of a graph file.
    Analyze {
        file: PathBuf,
    },
    /// Run a generator and certify its output against the dominance checker.
    Construct {
        #[command(subcommand)]
        generator: Generator,
    },
    /// Exhaustively verify a claim (T5, T6, T8, L1, MOON, K4, T1EX, DUAL)
    /// over all graphs with up to --nmax vertices.
    Verify {
        claim: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 100)]
        max_counterexamples: usize,
    },
    /// Search for witnesses instead of building them.
    Search {
        #[command(subcommand)]
        target: SearchTarget,
    },
    /// Export a graph file to Graphviz DOT.
    Export {
        file: PathBuf,
        /// Emit DOT (the only supported export format).
        #[arg(long)]
        dot: bool,
        /// Color weak kings/serfs and label scores.
        #[arg(long)]
        annotate: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OutputOpts {
    /// Write the constructed graph document to a file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Exit nonzero if certification fails.
    #[arg(long)]
    strict: bool,
}

#[derive(Copy, Clone, Debug, Default, ValueEnum)]
enum ReadingArg {
    /// v1 beats every v_i except v3.
    #[default]
    SkipThree,
    /// v1 beats the even-indexed v_i only.
    EvenOnly,
}

#[derive(Subcommand)]
enum Generator {
    /// An n-vertex oriented graph with exactly k weak kings.
    WeakKingsExact {
        n: usize,
        k: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// The verbatim "exactly two kings" construction (certification records
    /// the checker's actual king set).
    TwoKings {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        reading: ReadingArg,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// The fixed (n, k, s, b) three-block construction, built verbatim.
    Nksb {
        n: usize,
        k: usize,
        s: usize,
        b: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Embed a transmitter-free graph file into one whose weak kings are
    /// exactly its vertices.
    EmbedAllWeakKings {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Subcommand)]
enum SearchTarget {
    /// Exhaustive search for any n-vertex graph with exactly k weak kings,
    /// s weak serfs, and b of both.
    Nksb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    Usage(String),
    File(String),
    /// A negative result: counterexamples found, certification failed under
    /// --strict, or a search came back empty.
    Negative,
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::File(_) => ExitCode::from(3),
            CliError::Negative => ExitCode::from(1),
        }
    }
}

fn usage(err: impl std::fmt::Display) -> CliError {
    CliError::Usage(err.to_string())
}

fn read_graph(path: &Path) -> Result<OrientedGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::File(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::File(format!("{}: {e}", path.display())))
}

fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::File(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            match &err {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::File(msg) => eprintln!("error: {msg}"),
                CliError::Negative => {}
            }
            err.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { file } => {
            let g = read_graph(&file)?;
            print!("{}", render_analysis(&g, &DominanceReport::compute(&g)));
            Ok(())
        }
        Command::Construct { generator } => run_construct(generator),
        Command::Verify {
            claim,
            nmax,
            workers,
            max_counterexamples,
        } => {
            let claim = Claim::parse(&claim).map_err(usage)?;
            let options = ScanOptions { max_counterexamples };
            let report = verify_claim_parallel(claim, nmax, workers, options).map_err(usage)?;
            print!("{}", render_verification(&report));
            if report.certified() {
                Ok(())
            } else {
                Err(CliError::Negative)
            }
        }
        Command::Search { target } => run_search(target),
        Command::Export {
            file,
            dot,
            annotate,
            out,
        } => {
            if !dot {
                return Err(CliError::Usage(String::from(
                    "export requires --dot (the only supported format)",
                )));
            }
            let g = read_graph(&file)?;
            let report;
            let annotations = if annotate {
                report = DominanceReport::compute(&g);
                Some(&report)
            } else {
                None
            };
            let rendered = export_dot(&g, annotations);
            match out {
                Some(path) => write_output(&path, &rendered)?,
                None => print!("{rendered}"),
            }
            Ok(())
        }
    }
}

fn finish_construct(
    generator: &str,
    cert: &CertifiedGraph,
    output: &OutputOpts,
) -> Result<(), CliError> {
    print!("{}", render_certified(generator, cert));
    if let Some(path) = &output.out {
        write_output(path, &render_graph_file(generator, cert))?;
    }
    if output.strict && !cert.verified {
        Err(CliError::Negative)
    } else {
        Ok(())
    }
}

fn construct_error(e: ConstructError) -> CliError {
    match e {
        ConstructError::NotFound => CliError::Negative,
        other => usage(other),
    }
}

fn run_construct(generator: Generator) -> Result<(), CliError> {
    match generator {
        Generator::WeakKingsExact { n, k, output } => {
            let cert = construct::weak_kings_exact(n, k).map_err(construct_error)?;
            finish_construct(&format!("weak-kings-exact n={n} k={k}"), &cert, &output)
        }
        Generator::TwoKings { n, reading, output } => {
            let (r, name) = match reading {
                ReadingArg::SkipThree => (TwoKingsReading::SkipThree, "skip-three"),
                ReadingArg::EvenOnly => (TwoKingsReading::EvenOnly, "even-only"),
            };
            let cert = construct::two_kings_oriented(n, r).map_err(construct_error)?;
            finish_construct(&format!("two-kings n={n} reading={name}"), &cert, &output)
        }
        Generator::Nksb { n, k, s, b, output } => {
            let cert = construct::nksb_oriented(NksbSpec { n, k, s, b }, NksbMode::Verbatim)
                .map_err(construct_error)?;
            finish_construct(&format!("nksb n={n} k={k} s={s} b={b} mode=verbatim"), &cert, &output)
        }
        Generator::EmbedAllWeakKings { file, output } => {
            let d = read_graph(&file)?;
            let cert = construct::all_weak_kings_embedding(&d).map_err(construct_error)?;
            finish_construct(
                &format!("embed-all-weak-kings file={}", file.display()),
                &cert,
                &output,
            )
        }
    }
}

fn run_search(target: SearchTarget) -> Result<(), CliError> {
    match target {
        SearchTarget::Nksb { n, k, s, b, out } => {
            match construct::nksb_oriented(NksbSpec { n, k, s, b }, NksbMode::CertifiedSearch) {
                Ok(cert) => {
                    print!(
                        "{}",
                        render_certified(&format!("nksb n={n} k={k} s={s} b={b} mode=search"), &cert)
                    );
                    if let Some(path) = out {
                        write_output(&path, &serialize_graph(&cert.graph))?;
                    }
                    Ok(())
                }
                Err(ConstructError::NotFound) => {
                    println!("no ({n}, {k}, {s}, {b})-oriented graph exists (search exhausted)");
                    Err(CliError::Negative)
                }
                Err(e) => Err(usage(e)),
            }
        }
    }
}
