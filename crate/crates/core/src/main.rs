use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cocomp_lexdfs::bench::{append_csv, measure, BenchRecord};
use cocomp_lexdfs::generate::{gen_fixture, gen_layered, gen_random_cocomp, Instance, LayeredSpec, PosetSpec};
use cocomp_lexdfs::layers::{build_partition_classes, render_trace, ClassOrder};
use cocomp_lexdfs::reference::lexdfs_plus_oracle;
use cocomp_lexdfs::refine::{render_refine_trace, run, Options};
use cocomp_lexdfs::verify::{check_4pc, check_flipping, check_partition, check_umbrella_free, Violation};
use cocomp_lexdfs::{Error, Graph, Mode, Ordering};

/// LexDFS orderings of cocomparability graphs in linear time.
#[derive(Parser, Debug)]
#[command(name = "cocomp", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a cocomparability graph and an umbrella-free ordering.
    Gen(GenArgs),
    /// Compute a LexDFS ordering from a graph and its cocomparability ordering.
    Run(RunArgs),
    /// Check an ordering against vertex-ordering characterizations.
    Verify(VerifyArgs),
    /// Append counter measurements to a CSV file.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, required_unless_present = "fixture")]
    n: Option<usize>,
    /// Arc probability of the random poset.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use the layered sparse generator with layers up to this width.
    #[arg(long)]
    width: Option<usize>,
    #[arg(long, value_parser = ["fig1", "fig2"], conflicts_with_all = ["n", "width"])]
    fixture: Option<String>,
    #[arg(long)]
    out_graph: PathBuf,
    #[arg(long)]
    out_sigma: PathBuf,
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    sigma: PathBuf,
    /// Compute LexDFS⁺(σ) instead of the default ordering.
    #[arg(long)]
    plus: bool,
    /// Write τ here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the class-creation and refinement traces.
    #[arg(long, env = "COCOMP_TRACE", value_parser = clap::builder::FalseyValueParser::new())]
    trace: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Umbrella,
    #[value(name = "4pc")]
    FourPoint,
    Flip,
    Partition,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    ordering: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "umbrella,4pc")]
    checks: Vec<Check>,
    /// Reference ordering for `flip` and `partition`.
    #[arg(long)]
    sigma: Option<PathBuf>,
    #[arg(long, hide = true, requires = "sigma")]
    against_oracle: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BenchMode {
    Default,
    Plus,
    Both,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Number of seeds per size; seeds are 1..=k.
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long, value_enum, default_value_t = BenchMode::Both)]
    mode: BenchMode,
    /// Use the layered sparse generator with layers up to this width.
    #[arg(long)]
    width: Option<usize>,
    #[arg(long)]
    csv: PathBuf,
}

enum Failure {
    Verify(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn with_path<T>(path: &Path, r: Result<T, Error>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let f = File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    with_path(path, Graph::load(f))
}

fn read_ordering(path: &Path, n: usize) -> Result<Ordering, Failure> {
    let f = File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let ord = with_path(path, Ordering::load(f))?;
    if ord.len() != n {
        return Err(Failure::Usage(format!(
            "{}: ordering has {} vertices, graph has {n}",
            path.display(),
            ord.len()
        )));
    }
    Ok(ord)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn instance(n: usize, p: f64, seed: u64, width: Option<usize>) -> Result<Instance, Error> {
    Ok(match width {
        Some(w) => gen_layered(&LayeredSpec::new(n, w, p, seed)?),
        None => gen_random_cocomp(&PosetSpec::new(n, p, seed)?),
    })
}

fn cmd_gen(a: GenArgs) -> Result<(), Failure> {
    let inst = match (&a.fixture, a.n) {
        (Some(name), _) => gen_fixture(name)?,
        (None, Some(n)) => instance(n, a.p, a.seed, a.width)?,
        (None, None) => unreachable!("clap requires --n or --fixture"),
    };
    write_file(&a.out_graph, &inst.graph.to_text())?;
    write_file(&a.out_sigma, &inst.sigma.to_text())?;
    println!("{} {}", inst.graph.n(), inst.graph.m());
    Ok(())
}

fn cmd_run(a: RunArgs) -> Result<(), Failure> {
    let g = read_graph(&a.graph)?;
    let sigma = read_ordering(&a.sigma, g.n())?;
    let mode = if a.plus { Mode::Plus } else { Mode::Default };
    let r = run(
        &g,
        &sigma,
        Options {
            class_order: mode.class_order(),
            trace: a.trace,
        },
    );
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if a.trace {
        writeln!(out, "# classes: index label members")?;
        out.write_all(render_trace(&r.layering).as_bytes())?;
        writeln!(out, "# refinement: index pivot segments")?;
        out.write_all(render_refine_trace(&r.refine_trace).as_bytes())?;
    }
    match &a.out {
        Some(path) => write_file(path, &r.tau.to_text())?,
        None => out.write_all(r.tau.to_text().as_bytes())?,
    }
    out.flush()?;
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let g = read_graph(&a.graph)?;
    let ord = read_ordering(&a.ordering, g.n())?;
    let sigma = a.sigma.as_deref().map(|p| read_ordering(p, g.n())).transpose()?;
    let need_sigma = || {
        sigma
            .as_ref()
            .ok_or_else(|| Failure::Usage("--sigma is required for flip and partition".into()))
    };
    let fail = |v: Violation| Failure::Verify(v.to_string());
    for check in &a.checks {
        match check {
            Check::Umbrella => check_umbrella_free(&g, &ord).map_err(fail)?,
            Check::FourPoint => check_4pc(&g, &ord).map_err(fail)?,
            Check::Flip => check_flipping(&g, need_sigma()?, &ord).map_err(fail)?,
            Check::Partition => {
                let s = need_sigma()?;
                check_partition(&g, s, &build_partition_classes(&g, s, ClassOrder::default())).map_err(fail)?
            }
        }
    }
    if a.against_oracle {
        let oracle = lexdfs_plus_oracle(&g, need_sigma()?);
        if let Some(i) = (0..g.n()).find(|&i| ord.at(i) != oracle.at(i)) {
            return Err(Failure::Verify(format!(
                "oracle-mismatch {i} {} {}",
                ord.at(i),
                oracle.at(i)
            )));
        }
    }
    println!("ok");
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> Result<(), Failure> {
    let modes: &[Mode] = match a.mode {
        BenchMode::Default => &[Mode::Default],
        BenchMode::Plus => &[Mode::Plus],
        BenchMode::Both => &[Mode::Default, Mode::Plus],
    };
    let mut rows: Vec<BenchRecord> = Vec::new();
    for &n in &a.sizes {
        for seed in 1..=a.seeds {
            let inst = instance(n, a.p, seed, a.width)?;
            for &mode in modes {
                let rec = measure(&inst, mode, seed);
                println!(
                    "n={} m={} mode={} counters={} ratio={:.3} ns={}",
                    rec.n,
                    rec.m,
                    mode.as_str(),
                    rec.counter_total(),
                    rec.ratio(),
                    rec.ns
                );
                rows.push(rec);
            }
        }
    }
    append_csv(&a.csv, &rows).map_err(|e| Failure::Usage(format!("{}: {e}", a.csv.display())))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Run(a) => cmd_run(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(line)) => {
            println!("{line}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
