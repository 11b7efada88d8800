//! Backwards in-situ partition refinement and the full LexDFS pipeline.
//!
//! Classes are refined in order `P₁, P₂, …`. Each class `Pᵢ` owns a pivot
//! stack `Sᵢ`; after a class is refined its vertices are scanned left to
//! right and pushed onto the stacks of the later classes they have neighbors
//! in. Popping therefore applies the most recently placed pivot first.
//!
//! A class is a doubly linked sequence tiled by segments. Each segment has
//! first/last cursors and a current cursor that is null between pivots. For
//! a pivot, every neighbor `w` in the class moves to the front of its segment
//! (if the segment's current cursor is null) or to just after the current
//! cursor, which then advances to `w`. Afterwards each touched segment is
//! split after its current cursor. Work per pivot is proportional to its
//! number of neighbors in the class.

use std::fmt::Write as _;

use crate::counters::WorkCounters;
use crate::graph::{Graph, Ordering, Vertex};
use crate::layers::{peel_layers, ClassOrder, Layering, Partition};

const NIL: usize = usize::MAX;

/// Pipeline variant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Classes keep their bucket order before refinement.
    #[default]
    Default,
    /// Classes are ordered by `σ⁻` before refinement; the output is LexDFS⁺(σ).
    Plus,
}

impl Mode {
    pub fn class_order(self) -> ClassOrder {
        match self {
            Mode::Default => ClassOrder::Bins,
            Mode::Plus => ClassOrder::ReverseSigma,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Default => "default",
            Mode::Plus => "plus",
        }
    }
}

/// A pivot entry: the vertex and the offset in its (π-sorted) adjacency
/// sequence where its neighbors in the target class begin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pivot {
    pub vertex: Vertex,
    pub offset: usize,
}

/// Last-in-first-out pivots for one class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PivotStack {
    entries: Vec<Pivot>,
}

impl PivotStack {
    pub fn push(&mut self, pivot: Pivot) {
        self.entries.push(pivot);
    }

    pub fn pop(&mut self) -> Option<Pivot> {
        self.entries.pop()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stacked vertices, bottom first.
    pub fn vertices(&self) -> Vec<Vertex> {
        self.entries.iter().map(|p| p.vertex).collect()
    }
}

#[derive(Clone, Copy, Debug)]
struct Segment {
    first: Vertex,
    last: Vertex,
    current: Vertex,
}

/// One segment as seen from outside: members in order and the current cursor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentView {
    pub members: Vec<Vertex>,
    pub current: Option<Vertex>,
}

/// A class under refinement.
///
/// Node arrays are sized for the whole vertex set and reused across classes;
/// slot `n` is the list sentinel.
#[derive(Clone, Debug)]
pub struct RefinableClass {
    next: Vec<usize>,
    prev: Vec<usize>,
    seg_of: Vec<usize>,
    segs: Vec<Segment>,
    touched: Vec<usize>,
    moves: usize,
    splits: usize,
}

impl RefinableClass {
    pub fn new(n: usize) -> Self {
        RefinableClass {
            next: vec![NIL; n + 1],
            prev: vec![NIL; n + 1],
            seg_of: vec![NIL; n],
            segs: Vec::new(),
            touched: Vec::new(),
            moves: 0,
            splits: 0,
        }
    }

    fn sentinel(&self) -> usize {
        self.next.len() - 1
    }

    /// Resets to a single segment holding `members` in the given order.
    pub fn load(&mut self, members: &[Vertex]) {
        assert!(!members.is_empty(), "cannot refine an empty class");
        let s = self.sentinel();
        self.segs.clear();
        self.segs.push(Segment {
            first: members[0],
            last: members[members.len() - 1],
            current: NIL,
        });
        let mut prev = s;
        for &v in members {
            self.next[prev] = v;
            self.prev[v] = prev;
            self.seg_of[v] = 0;
            prev = v;
        }
        self.next[prev] = s;
        self.prev[s] = prev;
        if members.len() == 1 {
            // A lone vertex can never be split.
            self.segs[0].current = members[0];
        }
    }

    fn unlink(&mut self, v: usize) {
        let (p, nx) = (self.prev[v], self.next[v]);
        self.next[p] = nx;
        self.prev[nx] = p;
    }

    fn insert_after(&mut self, at: usize, v: usize) {
        let nx = self.next[at];
        self.next[at] = v;
        self.prev[v] = at;
        self.next[v] = nx;
        self.prev[nx] = v;
    }

    /// Applies one pivot given its neighbors inside the class, in π order.
    pub fn apply_pivot<I: IntoIterator<Item = Vertex>>(&mut self, neighbors: I) {
        for w in neighbors {
            self.moves += 1;
            let s = self.seg_of[w];
            let seg = self.segs[s];
            if seg.current == NIL {
                if w != seg.first {
                    if w == seg.last {
                        self.segs[s].last = self.prev[w];
                    }
                    self.unlink(w);
                    let before = self.prev[seg.first];
                    self.insert_after(before, w);
                    self.segs[s].first = w;
                }
                self.segs[s].current = w;
                self.touched.push(s);
            } else if seg.current != w {
                let c = seg.current;
                if self.next[c] != w {
                    if w == seg.last {
                        self.segs[s].last = self.prev[w];
                    }
                    self.unlink(w);
                    self.insert_after(c, w);
                }
                self.segs[s].current = w;
            }
        }

        let touched = std::mem::take(&mut self.touched);
        for &s in &touched {
            let seg = self.segs[s];
            let c = seg.current;
            if c == seg.last {
                if seg.first != seg.last {
                    self.segs[s].current = NIL;
                }
                continue;
            }
            // [first..c] becomes a new segment in front of [c+1..last].
            let t = self.segs.len();
            self.segs.push(Segment {
                first: seg.first,
                last: c,
                current: if seg.first == c { c } else { NIL },
            });
            let mut v = seg.first;
            loop {
                self.seg_of[v] = t;
                if v == c {
                    break;
                }
                v = self.next[v];
            }
            self.segs[s].first = self.next[c];
            self.segs[s].current = NIL;
            self.splits += 1;
        }
        self.touched = touched;
        self.touched.clear();
    }

    /// Current vertex sequence.
    pub fn to_vec(&self) -> Vec<Vertex> {
        let s = self.sentinel();
        let mut out = Vec::new();
        let mut v = self.next[s];
        while v != s {
            out.push(v);
            v = self.next[v];
        }
        out
    }

    /// Segments left to right with their cursors.
    pub fn layout(&self) -> Vec<SegmentView> {
        let mut out: Vec<SegmentView> = Vec::new();
        let mut last_seg = NIL;
        for v in self.to_vec() {
            let s = self.seg_of[v];
            if s != last_seg {
                let cur = self.segs[s].current;
                out.push(SegmentView {
                    members: Vec::new(),
                    current: (cur != NIL).then_some(cur),
                });
                last_seg = s;
            }
            out.last_mut().unwrap().members.push(v);
        }
        out
    }

    /// Neighbor placements performed since construction.
    pub fn moves(&self) -> usize {
        self.moves
    }

    /// Segment splits performed since construction.
    pub fn splits(&self) -> usize {
        self.splits
    }
}

/// Refines class `index` of `part` (members in π order) by popping `pivots`.
///
/// `g` must have adjacency sequences sorted by `π`. Returns the refined
/// sequence `τᵢ`.
pub fn refine(
    class: &mut RefinableClass,
    pivots: &mut PivotStack,
    g: &Graph,
    part: &Partition,
    index: usize,
    mut observe: impl FnMut(Vertex, &RefinableClass),
) -> Vec<Vertex> {
    class.load(part.class(index));
    while let Some(p) = pivots.pop() {
        let nbrs = g.neighbors(p.vertex)[p.offset..]
            .iter()
            .copied()
            .take_while(|&u| part.class_of(u) == index);
        debug_assert!(
            g.neighbors(p.vertex)
                .get(p.offset)
                .is_some_and(|&u| part.class_of(u) == index),
            "pivot {} has no neighbor in class {index}",
            p.vertex
        );
        class.apply_pivot(nbrs);
        observe(p.vertex, class);
    }
    class.to_vec()
}

/// Pushes every vertex of the refined class `index` (scanned left to right)
/// onto the stack of each later class it has a neighbor in, once per class.
///
/// `g` must have adjacency sequences sorted by `π`, so neighbors in one class
/// are contiguous. Returns the number of pushes.
pub fn update_pivots(
    refined: &[Vertex],
    index: usize,
    part: &Partition,
    g: &Graph,
    stacks: &mut [PivotStack],
) -> usize {
    let mut pushes = 0;
    for &v in refined {
        let mut last = NIL;
        for (k, &u) in g.neighbors(v).iter().enumerate() {
            let c = part.class_of(u);
            if c > index && c != last {
                stacks[c].push(Pivot { vertex: v, offset: k });
                last = c;
                pushes += 1;
            }
        }
    }
    pushes
}

/// Refinement record of one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefineTrace {
    /// 0-based class index.
    pub index: usize,
    /// Class members in π order.
    pub members: Vec<Vertex>,
    /// Stack contents before refinement, bottom first (pop order reversed).
    pub stack: Vec<Vertex>,
    /// Each popped pivot with the segment layout it produced.
    pub steps: Vec<(Vertex, Vec<SegmentView>)>,
    /// Refined sequence `τᵢ`.
    pub refined: Vec<Vertex>,
}

/// Knobs for [`run`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub class_order: ClassOrder,
    pub trace: bool,
}

impl From<Mode> for Options {
    fn from(mode: Mode) -> Self {
        Options {
            class_order: mode.class_order(),
            trace: false,
        }
    }
}

/// Everything a pipeline run produces.
#[derive(Clone, Debug)]
pub struct Run {
    pub tau: Ordering,
    pub layering: Layering,
    pub counters: WorkCounters,
    /// Empty unless tracing was requested.
    pub refine_trace: Vec<RefineTrace>,
}

/// LexDFS cocomparability ordering of `g` from the umbrella-free `sigma`.
///
/// With [`Mode::Plus`] the result is LexDFS⁺(σ). If `sigma` is not
/// umbrella-free the output carries no guarantee.
pub fn cclexdfs(g: &Graph, sigma: &Ordering, mode: Mode) -> Ordering {
    run(g, sigma, mode.into()).tau
}

/// Layer peeling followed by refinement.
pub fn run(g: &Graph, sigma: &Ordering, opts: Options) -> Run {
    let mut counters = WorkCounters::default();
    let layering = peel_layers(g, sigma, opts.class_order, &mut counters, |_| {});
    let (tau, refine_trace) = refine_partition(g, &layering.partition, &mut counters, opts.trace);
    Run {
        tau,
        layering,
        counters,
        refine_trace,
    }
}

/// The refinement stage alone, for an arbitrary ordered partition.
pub fn refine_partition(
    g: &Graph,
    part: &Partition,
    counters: &mut WorkCounters,
    trace: bool,
) -> (Ordering, Vec<RefineTrace>) {
    let n = g.n();
    let (sorted, touches) = g.reorder_adjacency(&part.pi());
    counters.reorder_touches += touches;

    let mut stacks = vec![PivotStack::default(); part.len()];
    let mut class = RefinableClass::new(n);
    let mut tau = Vec::with_capacity(n);
    let mut traces = Vec::new();

    for i in 0..part.len() {
        let mut stack = std::mem::take(&mut stacks[i]);
        let stacked = if trace { stack.vertices() } else { Vec::new() };
        let mut steps = Vec::new();
        let refined = refine(&mut class, &mut stack, &sorted, part, i, |pivot, c| {
            if trace {
                steps.push((pivot, c.layout()));
            }
        });
        counters.pivot_pushes += update_pivots(&refined, i, part, &sorted, &mut stacks);
        if trace {
            traces.push(RefineTrace {
                index: i,
                members: part.class(i).to_vec(),
                stack: stacked,
                steps,
                refined: refined.clone(),
            });
        }
        tau.extend_from_slice(&refined);
    }
    counters.refine_moves += class.moves();
    counters.segment_splits += class.splits();
    let tau = Ordering::new(tau).expect("refinement permutes each class");
    (tau, traces)
}

/// Renders a segment layout like `(3 5)(4)`.
pub fn render_layout(layout: &[SegmentView]) -> String {
    let mut out = String::new();
    for seg in layout {
        out.push('(');
        for (k, v) in seg.members.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{v}");
        }
        out.push(')');
    }
    out
}

/// Renders refinement traces, one line per popped pivot:
/// `i pivot layout` (1-based `i`); classes without pivots print `i - (members)`.
pub fn render_refine_trace(traces: &[RefineTrace]) -> String {
    let mut out = String::new();
    for t in traces {
        if t.steps.is_empty() {
            let whole = [SegmentView {
                members: t.refined.clone(),
                current: None,
            }];
            let _ = writeln!(out, "{} - {}", t.index + 1, render_layout(&whole));
        }
        for (pivot, layout) in &t.steps {
            let _ = writeln!(out, "{} {} {}", t.index + 1, pivot, render_layout(layout));
        }
    }
    out
}
