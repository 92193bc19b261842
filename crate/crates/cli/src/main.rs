use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod input;
mod report;
mod verify;

/// Exit status paired with a message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn schema(e: impl std::fmt::Display) -> Self {
        Failure::new(1, e.to_string())
    }
}

impl From<medianlab::Error> for Failure {
    fn from(e: medianlab::Error) -> Self {
        match e {
            medianlab::Error::ResourceLimit(_) | medianlab::Error::DomainTooLarge(_) => Failure::new(2, e.to_string()),
            _ => Failure::new(1, e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

#[derive(Parser)]
#[command(name = "medianlab", version, about = "Box families, lifted median graphs and contact-graph colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Contact,
    PointedContact,
    Crossing,
    Intersection,
}

#[derive(Subcommand)]
enum Command {
    /// Build the triangle-free box family B(n) and write it as JSON.
    Burling {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        /// Re-embed on the smallest integer grid and drop the probes.
        #[arg(long)]
        compact: bool,
    },
    /// Lift a box family to a median graph and write it as JSON.
    Lift {
        #[arg(long)]
        boxes: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run verification checks on a graph or lifted graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated checks, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Chromatic number of a contact-type graph of the input.
    Chromatic {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
        /// Search node budget for the exact solver.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Run the full pipeline for n = 1..=n-max and write a JSON report.
    Report {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Burling { n, out, compact } => cmd_burling(n, &out, compact),
        Command::Lift { boxes, out, dot } => cmd_lift(&boxes, &out, dot.as_deref()),
        Command::Verify {
            graph,
            checks,
            mode,
            samples,
            seed,
            dot,
        } => verify::cmd_verify(&graph, &checks, mode, samples, seed, dot.as_deref()),
        Command::Chromatic { graph, target, budget } => cmd_chromatic(&graph, target, budget),
        Command::Report { n_max, out } => report::cmd_report(n_max, &out),
    }
}

fn cmd_burling(n: usize, out: &std::path::Path, compact: bool) -> CliResult<()> {
    if n == 0 {
        return Err(Failure::new(1, "n must be at least 1"));
    }
    let bh = medianlab::burling_family(n)?;
    let bh = if compact { medianlab::compact(&bh) } else { bh };
    input::write_json(out, &bh.to_json())?;
    let ig = medianlab::intersection_graph(&bh);
    println!("B({n}): {} boxes, {} intersecting pairs, triangle-free", bh.len(), ig.edge_count());
    Ok(())
}

fn cmd_lift(boxes: &std::path::Path, out: &std::path::Path, dot: Option<&std::path::Path>) -> CliResult<()> {
    let bh = input::read_boxes(boxes)?;
    let lg = medianlab::lift_family(&bh)?;
    medianlab::orient_at_alpha(&lg)?;
    input::write_json(out, &lg.to_json(&bh))?;
    if let Some(path) = dot {
        input::write_dot(path, &lg)?;
    }
    let d = lg.grid.dims();
    println!(
        "lift: grid {}x{}x{}, {} vertices, {} edges, {} classes",
        d[0],
        d[1],
        d[2],
        lg.graph.vertex_count(),
        lg.graph.edge_count(),
        lg.labels().len()
    );
    Ok(())
}

fn cmd_chromatic(path: &std::path::Path, target: Target, budget: u64) -> CliResult<()> {
    let loaded = input::load(path)?;
    let g = match target {
        Target::Intersection => {
            let bh = loaded
                .boxes()
                .ok_or_else(|| Failure::new(1, "intersection target needs a box family or lifted graph"))?;
            medianlab::intersection_graph(bh)
        }
        _ => {
            let g = loaded.graph()?;
            let bp = loaded.basepoint();
            let t = medianlab::theta_classes(&g, bp)?;
            match target {
                Target::Contact => medianlab::contact_graph(&t),
                Target::Crossing => medianlab::crossing_graph(&t),
                _ => {
                    let og = medianlab::OrientedGraph::new(g, bp)?;
                    medianlab::pointed_contact_graph(&og, &t)
                }
            }
        }
    };
    let r = medianlab::chromatic_number(&g, medianlab::Budget::nodes(budget));
    let name = target.to_possible_value().expect("named").get_name().to_string();
    if r.optimal {
        println!("{name}: {} vertices, {} edges, chi = {} (exact)", g.vertex_count(), g.edge_count(), r.count);
        Ok(())
    } else {
        println!(
            "{name}: {} vertices, {} edges, chi in [{}, {}]",
            g.vertex_count(),
            g.edge_count(),
            r.lower_bound,
            r.count
        );
        Err(Failure::new(
            2,
            format!("RESOURCE_LIMIT: budget of {budget} nodes exhausted; chi in [{}, {}]", r.lower_bound, r.count),
        ))
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
