use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use srinv_core::io::{parse_complex, parse_graph};
use srinv_core::theorems::{self, SweepOptions};
use srinv_core::{
    betti_table, independence_complex, invariant_report, reduced_homology_ranks, FieldSpec, Graph,
    SimplicialComplex,
};

#[derive(Parser)]
#[command(name = "srinv", version, about = "Stanley-Reisner invariants of simplicial complexes and graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, CM status, regularity, pd, type and a-invariant
    Invariants(InputArgs),
    /// Graded Betti table via Hochster's formula
    Betti(InputArgs),
    /// Reduced homology ranks from degree -1 upward
    Homology(InputArgs),
    /// Build a graph with prescribed (d, reg, type) and print its certificate
    Construct {
        d: usize,
        r: usize,
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u32,
    },
    #[command(subcommand)]
    Verify(Verify),
    /// Check the inequality over a corpus of small labeled graphs
    Sweep {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random graphs per vertex count above --exhaustive-up-to
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        exhaustive_up_to: usize,
        /// Also compute over this characteristic and count disagreements
        #[arg(long)]
        compare_char: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Closed forms for the whiskered complete multipartite graph
    Prop41 {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u32,
        #[arg(long)]
        json: bool,
    },
    /// Betti type against the vertex cover count of the O-transform
    Prop44 {
        #[arg(long)]
        graph: PathBuf,
        /// Vertices of X (default: the first half)
        #[arg(long, value_delimiter = ',')]
        x: Option<Vec<usize>>,
        /// Vertices of Y (default: the second half)
        #[arg(long, value_delimiter = ',')]
        y: Option<Vec<usize>>,
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u32,
        #[arg(long)]
        json: bool,
    },
    /// d <= reg * type for a single CM complex
    Inequality(InputArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// Graph file; its independence complex is used
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Complex file given by facets
    #[arg(long)]
    complex: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long = "char", default_value_t = 2)]
    characteristic: u32,
    #[arg(long)]
    json: bool,
}

impl InputArgs {
    fn load(&self) -> Result<(SimplicialComplex, FieldSpec)> {
        let field = FieldSpec::new(self.characteristic)?;
        let cx = match (&self.source.graph, &self.source.complex) {
            (Some(path), _) => independence_complex(&read_graph(path)?),
            (_, Some(path)) => parse_complex(&read(path)?)
                .with_context(|| format!("parsing {}", path.display()))?,
            _ => unreachable!("clap enforces one source"),
        };
        Ok((cx, field))
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn invariants(args: InputArgs) -> Result<bool> {
    let (cx, field) = args.load()?;
    let r = invariant_report(&cx, field)?;
    if args.json {
        print_json(&r)?;
    } else {
        println!("field         {}", r.field);
        println!("vertices      {}", r.n);
        println!("dim           {}", r.dim_complex);
        println!("krull dim     {}", r.krull_dim);
        println!("CM (Reisner)  {}", r.is_cm_reisner);
        println!("CM (Betti)    {}", r.is_cm_betti);
        println!("reg           {}", r.reg);
        println!("pd            {}", r.pd);
        println!("type          {}", opt(r.cm_type));
        println!("a-invariant   {}", opt(r.a_invariant));
        println!("core          {}", r.is_core);
        println!();
        print!("{}", r.betti);
    }
    if r.is_cm_reisner != r.is_cm_betti {
        eprintln!("error: Reisner and Betti CM tests disagree");
        return Ok(false);
    }
    Ok(true)
}

fn betti(args: InputArgs) -> Result<bool> {
    let (cx, field) = args.load()?;
    let table = betti_table(&cx, field)?;
    if args.json {
        print_json(&table)?;
    } else {
        print!("{table}");
    }
    Ok(true)
}

fn homology(args: InputArgs) -> Result<bool> {
    let (cx, field) = args.load()?;
    println!("{}", serde_json::to_string(reduced_homology_ranks(&cx, field).as_slice())?);
    Ok(true)
}

fn construct(d: usize, r: usize, t: usize, out: Option<PathBuf>, characteristic: u32) -> Result<bool> {
    let cert = theorems::construct_over(d, r, t, FieldSpec::new(characteristic)?)?;
    let json = cert.to_json();
    match out {
        Some(path) => {
            fs::write(&path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
            eprintln!(
                "wrote {} ({} vertices, {} suspensions, claims met: {})",
                path.display(),
                cert.graph.n,
                cert.suspensions.len(),
                cert.claims_met
            );
        }
        None => println!("{json}"),
    }
    Ok(cert.claims_met)
}

fn verify(cmd: Verify) -> Result<bool> {
    match cmd {
        Verify::Prop41 { parts, characteristic, json } => {
            let r = theorems::verify_prop41(&parts, FieldSpec::new(characteristic)?)?;
            if json {
                print_json(&r)?;
            } else {
                let (dim, reg, ty) = r.expected;
                println!("parts       {:?}", r.parts);
                println!("expected    dim {dim}, reg {reg}, type {ty}");
                println!(
                    "computed    dim {}, reg {}, type {}",
                    r.computed.0,
                    r.computed.1,
                    opt(r.computed.2)
                );
                println!("CM          {}", r.cm);
                println!("indmatch    {}", r.induced_matching);
                println!("holds       {}", r.holds);
            }
            Ok(r.holds)
        }
        Verify::Prop44 { graph, x, y, characteristic, json } => {
            let g = read_graph(&graph)?;
            if g.n() % 2 != 0 {
                bail!("the graph needs an even number of vertices, got {}", g.n());
            }
            let half = g.n() / 2;
            let xs = x.unwrap_or_else(|| (0..half).collect());
            let ys = y.unwrap_or_else(|| (half..g.n()).collect());
            let r = theorems::verify_prop44(&g, &xs, &ys, FieldSpec::new(characteristic)?)?;
            if json {
                print_json(&r)?;
            } else {
                println!("betti type  {}", r.betti_type);
                println!("cover type  {}", r.cover_type);
                println!("agree       {}", r.agree);
            }
            Ok(r.agree)
        }
        Verify::Inequality(args) => {
            let (cx, field) = args.load()?;
            let r = theorems::verify_inequality(&cx, field)?;
            if args.json {
                print_json(&r)?;
            } else {
                println!("d = {}, reg = {}, type = {}", r.d, r.reg, r.cm_type);
                println!("d <= reg * type: {} <= {} ({})", r.d, r.product, r.holds);
                if r.tight {
                    println!("equality holds");
                }
                if let Some(refinement) = &r.refinement {
                    println!(
                        "d <= reg + type - 1: {} <= {} ({}) from {:?}",
                        r.d, refinement.bound, refinement.holds, refinement.reasons
                    );
                }
            }
            Ok(r.holds && r.refinement.as_ref().is_none_or(|x| x.holds))
        }
    }
}

fn sweep(options: SweepOptions, out: Option<PathBuf>) -> Result<bool> {
    let report = theorems::sweep(&options)?;
    let json = serde_json::to_string_pretty(&report)?;
    let c = &report.counts;
    match out {
        Some(path) => {
            fs::write(&path, json + "\n").with_context(|| format!("writing {}", path.display()))?
        }
        None => println!("{json}"),
    }
    eprintln!(
        "{}: {} graphs, {} CM, {} counterexamples, {} equality cases",
        report.corpus,
        c.graphs_tested,
        c.cm,
        report.counterexamples.len(),
        report.equality_cases.len()
    );
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Invariants(args) => invariants(args),
        Command::Betti(args) => betti(args),
        Command::Homology(args) => homology(args),
        Command::Construct { d, r, t, out, characteristic } => construct(d, r, t, out, characteristic),
        Command::Verify(cmd) => verify(cmd),
        Command::Sweep {
            max_n,
            characteristic,
            seed,
            samples,
            exhaustive_up_to,
            compare_char,
            out,
        } => {
            let options = SweepOptions {
                max_n,
                field: FieldSpec::new(characteristic)?,
                exhaustive_up_to,
                samples,
                seed,
                compare_field: compare_char.map(FieldSpec::new).transpose()?,
            };
            sweep(options, out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
