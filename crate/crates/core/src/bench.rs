//! Counter-based linearity benchmark.

use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::Path;
use std::time::Instant;

use crate::generate::Instance;
use crate::refine::{run, Mode};

pub const CSV_HEADER: &str = "n,m,mode,ns,label_touches,bin_moves,pivot_pushes,refine_moves,seed";

/// One benchmark row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRecord {
    pub n: usize,
    pub m: usize,
    pub mode: Mode,
    pub ns: u128,
    pub label_touches: usize,
    pub bin_moves: usize,
    pub pivot_pushes: usize,
    pub refine_moves: usize,
    pub seed: u64,
}

impl BenchRecord {
    pub fn counter_total(&self) -> usize {
        self.label_touches + self.bin_moves + self.pivot_pushes + self.refine_moves
    }

    /// Summed counters per unit of input size `n + m`.
    pub fn ratio(&self) -> f64 {
        self.counter_total() as f64 / (self.n + self.m).max(1) as f64
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.mode.as_str(),
            self.ns,
            self.label_touches,
            self.bin_moves,
            self.pivot_pushes,
            self.refine_moves,
            self.seed
        )
    }
}

/// Runs the pipeline once on `inst` and records counters and wall time.
pub fn measure(inst: &Instance, mode: Mode, seed: u64) -> BenchRecord {
    let start = Instant::now();
    let r = run(&inst.graph, &inst.sigma, mode.into());
    let ns = start.elapsed().as_nanos();
    BenchRecord {
        n: inst.graph.n(),
        m: inst.graph.m(),
        mode,
        ns,
        label_touches: r.counters.label_touches,
        bin_moves: r.counters.bin_moves,
        pivot_pushes: r.counters.pivot_pushes,
        refine_moves: r.counters.refine_moves,
        seed,
    }
}

/// Appends rows to `path`, writing the header only when the file is new or
/// empty.
pub fn append_csv(path: &Path, rows: &[BenchRecord]) -> io::Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut out = String::new();
    if file.metadata()?.len() == 0 {
        out.push_str(CSV_HEADER);
        out.push('\n');
    }
    for r in rows {
        out.push_str(&r.to_csv_row());
        out.push('\n');
    }
    file.write_all(out.as_bytes())
}
