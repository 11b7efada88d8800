use std::ops::AddAssign;

/// Elementary operation counts of one pipeline run.
///
/// Each counter has a linear bound in `n + m`:
/// `label_touches ≤ n + 2m`, `bin_moves ≤ m`, `reorder_touches ≤ 2n + 2m`,
/// `pivot_pushes ≤ m`, `refine_moves ≤ m`, `segment_splits ≤ refine_moves`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorkCounters {
    /// Vertex visits and adjacency entries read by the initial labelling.
    pub label_touches: usize,
    /// Bin relocations caused by label increments.
    pub bin_moves: usize,
    /// Element touches while reordering adjacency sequences.
    pub reorder_touches: usize,
    /// Pivot-stack pushes.
    pub pivot_pushes: usize,
    /// Neighbor placements performed by refinement.
    pub refine_moves: usize,
    /// Segment splits performed by refinement.
    pub segment_splits: usize,
}

impl WorkCounters {
    /// The four counters reported by the benchmark harness, summed.
    pub fn core_total(&self) -> usize {
        self.label_touches + self.bin_moves + self.pivot_pushes + self.refine_moves
    }
}

impl AddAssign for WorkCounters {
    fn add_assign(&mut self, rhs: Self) {
        self.label_touches += rhs.label_touches;
        self.bin_moves += rhs.bin_moves;
        self.reorder_touches += rhs.reorder_touches;
        self.pivot_pushes += rhs.pivot_pushes;
        self.refine_moves += rhs.refine_moves;
        self.segment_splits += rhs.segment_splits;
    }
}
