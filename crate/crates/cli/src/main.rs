use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use msr_core::canonical::CanonicalPaths;
use msr_core::flow::max_disjoint_paths;
use msr_core::generators::{cross_composition, random_layered, vc_gadget, PlainGraph};
use msr_core::solvers::{
    oracle_bfs, solve_tj_feasible, solve_tj_shortest, solve_ts_shortest, SearchOptions,
    DEFAULT_MAX_STATES,
};
use msr_core::{
    kernelize, preprocess_tj, verify_sequence, Error, Instance, KernelOutcome, Model, Solution,
    Verdict, VertexSequence,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "msr",
    version,
    about = "Reconfigure minimum s-t vertex separators"
)]
struct Cli {
    /// Suppress notes on the error stream.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Slide,
    Jump,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Slide => Model::Slide,
            ModelArg::Jump => Model::Jump,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Find a reconfiguration sequence from A to B.
    Solve {
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Guarantee a shortest sequence (sliding is always shortest).
        #[arg(long)]
        shortest: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
        max_states: u64,
        instance: PathBuf,
    },
    /// Exhaustive search over all minimum separators.
    Oracle {
        #[arg(long, value_enum)]
        model: ModelArg,
        instance: PathBuf,
    },
    /// Write the reduced instance and a `<reduced> <original>` id map next to it.
    Preprocess {
        instance: PathBuf,
        /// Reduced instance path; the map goes to the same path with `.map` appended.
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Decide the jump budget outright or print a kernel instance.
    Kernelize {
        #[arg(long)]
        budget: usize,
        instance: PathBuf,
    },
    /// Build instances.
    Generate {
        #[command(subcommand)]
        kind: Generate,
        /// Write the instance here instead of the standard output.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Replay a sequence file on an instance.
    Verify {
        instance: PathBuf,
        sequence: PathBuf,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// Vertex cover gadget of one graph.
    VcGadget {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        kappa: usize,
    },
    /// Composition of several graphs with equal vertex counts.
    Cross {
        #[arg(long, num_args = 1.., required = true)]
        graphs: Vec<PathBuf>,
        #[arg(long)]
        kappa: usize,
    },
    /// Parallel paths with random crossing edges between adjacent columns.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        len: u64,
        #[arg(long, value_parser = probability)]
        p: f64,
    },
}

fn probability(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(p) if (0.0..=1.0).contains(&p) => Ok(p),
        _ => Err(format!("`{s}` is not a probability in [0, 1]")),
    }
}

#[derive(Serialize)]
struct MoveDoc {
    path: usize,
    from_vertex: usize,
    to_vertex: usize,
}

#[derive(Serialize)]
struct Stats {
    states_explored: u64,
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct ResultDoc {
    model: &'static str,
    feasible: bool,
    shortest: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    length: Option<usize>,
    moves: Vec<MoveDoc>,
    stats: Stats,
}

impl ResultDoc {
    fn new(sol: &Solution, started: Instant) -> Self {
        ResultDoc {
            model: sol.model.as_str(),
            feasible: sol.feasible(),
            shortest: sol.shortest,
            length: sol.length(),
            moves: sol
                .moves
                .iter()
                .flatten()
                .map(|m| MoveDoc {
                    path: m.path + 1,
                    from_vertex: m.from,
                    to_vertex: m.to,
                })
                .collect(),
            stats: Stats {
                states_explored: sol.states_explored,
                elapsed_ms: started.elapsed().as_millis() as u64,
            },
        }
    }
}

enum Failure {
    Input(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_guard() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance, Failure> {
    Instance::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<PlainGraph, Failure> {
    PlainGraph::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_doc(doc: &ResultDoc) {
    println!(
        "{}",
        serde_json::to_string(doc).expect("plain data serializes")
    );
}

/// Emits a generated instance and its budget. On the standard output the budget
/// follows as a comment so the stream still parses as an instance file.
fn emit(inst: &Instance, budget: usize, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            write(path, &inst.to_text())?;
            println!("budget {budget}");
        }
        None => println!("{}# budget {budget}", inst.to_text()),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let note = |msg: String| {
        if !cli.quiet {
            eprintln!("{msg}");
        }
    };
    match cli.command {
        Command::Solve {
            model,
            shortest,
            max_states,
            instance,
        } => {
            let inst = load(&instance)?;
            let started = Instant::now();
            let sol = match (Model::from(model), shortest) {
                (Model::Slide, _) => solve_ts_shortest(&inst)?,
                (Model::Jump, true) => {
                    let opts = SearchOptions {
                        max_states,
                        ..SearchOptions::default()
                    };
                    solve_tj_shortest(&inst, &opts)?
                }
                (Model::Jump, false) => solve_tj_feasible(&inst)?,
            };
            print_doc(&ResultDoc::new(&sol, started));
        }
        Command::Oracle { model, instance } => {
            let inst = load(&instance)?;
            let started = Instant::now();
            let sol = oracle_bfs(&inst, model.into())?;
            print_doc(&ResultDoc::new(&sol, started));
        }
        Command::Preprocess { instance, out } => {
            let inst = load(&instance)?;
            let ri = preprocess_tj(&inst)?;
            write(&out, &ri.instance.to_text())?;
            let map: String = ri
                .vertex_map
                .pairs()
                .map(|(r, o)| format!("{r} {o}\n"))
                .collect();
            let mut map_path = out.into_os_string();
            map_path.push(".map");
            write(Path::new(&map_path), &map)?;
            note(format!(
                "{} -> {} vertices, {} -> {} tokens",
                inst.vertex_count(),
                ri.instance.vertex_count(),
                inst.k(),
                ri.k_reduced()
            ));
        }
        Command::Kernelize { budget, instance } => {
            let inst = load(&instance)?;
            match kernelize(&inst, budget)? {
                KernelOutcome::DecidedYes => println!("DECIDED YES"),
                KernelOutcome::DecidedNo(rule) => {
                    println!("DECIDED NO");
                    note(rule.to_string());
                }
                KernelOutcome::Kernel(ri, b) => {
                    println!("{}# budget {b}", ri.instance.to_text());
                }
            }
        }
        Command::Generate { kind, out } => {
            let (inst, budget) = match kind {
                Generate::VcGadget { graph, kappa } => vc_gadget(&load_graph(&graph)?, kappa),
                Generate::Cross { graphs, kappa } => {
                    let inputs = graphs
                        .iter()
                        .map(|g| Ok((load_graph(g)?, kappa)))
                        .collect::<Result<Vec<_>, Failure>>()?;
                    cross_composition(&inputs)?
                }
                Generate::Random { seed, k, len, p } => {
                    let inst = random_layered(seed, k as usize, len as usize, p)?;
                    let cp = CanonicalPaths::new(&inst, &max_disjoint_paths(&inst))?;
                    let span = (0..cp.len()).map(|i| cp.a()[i].abs_diff(cp.b()[i])).sum();
                    (inst, span)
                }
            };
            emit(&inst, budget, out.as_deref())?;
        }
        Command::Verify { instance, sequence } => {
            let inst = load(&instance)?;
            let seq = VertexSequence::parse(&read(&sequence)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", sequence.display())))?;
            match verify_sequence(&inst, &seq) {
                Verdict::Accept => println!("ACCEPT"),
                Verdict::Reject { step, reason } => {
                    println!("REJECT step={step} reason={reason}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}
