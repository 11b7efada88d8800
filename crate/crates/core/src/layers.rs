//! Poset layers of an umbrella-free ordering.
//!
//! Every vertex starts with the number of its non-neighbors to the right in
//! `σ`. Repeatedly, all unvisited vertices of minimum label form the next
//! class `Pᵢ`; each unvisited neighbor of a class member then has its label
//! incremented. When `σ` is umbrella-free, `Pᵢ` is exactly the set of maximal
//! elements of the poset left after removing `P₁..Pᵢ₋₁`, and each class is a
//! clique of `G`.
//!
//! Labels live in a bucket array indexed `0..n`; the minimum bucket index
//! only grows, so one left-to-right sweep emits all classes and the whole
//! computation is `O(n + m)`.

use std::fmt::Write as _;

use crate::counters::WorkCounters;
use crate::error::{Error, Result};
use crate::graph::{Graph, Ordering, Vertex};

const NIL: usize = usize::MAX;

/// Per-vertex integer labels plus visited flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelState {
    pub label: Vec<usize>,
    pub visited: Vec<bool>,
}

/// Initial labels: for `σ(i)`, the number of non-neighbors after position
/// `i`. One right-to-left sweep; each vertex's label is its suffix length
/// minus its count of later neighbors. Adds `n + 2m` to `label_touches`.
pub fn compute_initial_labels(g: &Graph, sigma: &Ordering, counters: &mut WorkCounters) -> LabelState {
    let n = g.n();
    assert_eq!(sigma.len(), n, "ordering does not cover the graph");
    let mut label = vec![0; n];
    for pos in (0..n).rev() {
        let v = sigma.at(pos);
        counters.label_touches += 1 + g.degree(v);
        let later = g.neighbors(v).iter().filter(|&&u| sigma.position(u) > pos).count();
        label[v] = (n - 1 - pos) - later;
    }
    LabelState {
        label,
        visited: vec![false; n],
    }
}

/// Buckets `B₀..B_{n−1}` of vertices keyed by label, each a doubly linked
/// list with a length counter. Insertion is at the head.
#[derive(Clone, Debug)]
pub struct BinArray {
    head: Vec<usize>,
    count: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    bin: Vec<usize>,
}

impl BinArray {
    pub fn new(n: usize) -> Self {
        BinArray {
            head: vec![NIL; n],
            count: vec![0; n],
            next: vec![NIL; n],
            prev: vec![NIL; n],
            bin: vec![NIL; n],
        }
    }

    pub fn insert(&mut self, v: Vertex, b: usize) {
        let h = self.head[b];
        self.next[v] = h;
        self.prev[v] = NIL;
        if h != NIL {
            self.prev[h] = v;
        }
        self.head[b] = v;
        self.bin[v] = b;
        self.count[b] += 1;
    }

    pub fn remove(&mut self, v: Vertex) {
        let b = self.bin[v];
        debug_assert_ne!(b, NIL, "vertex {v} is not in a bin");
        let (p, nx) = (self.prev[v], self.next[v]);
        if p != NIL {
            self.next[p] = nx;
        } else {
            self.head[b] = nx;
        }
        if nx != NIL {
            self.prev[nx] = p;
        }
        self.count[b] -= 1;
        self.bin[v] = NIL;
    }

    /// Moves `v` from its bin `k` to the head of bin `k + 1`.
    pub fn promote(&mut self, v: Vertex) {
        let b = self.bin[v];
        self.remove(v);
        self.insert(v, b + 1);
    }

    pub fn len(&self, b: usize) -> usize {
        self.count[b]
    }

    pub fn bin_of(&self, v: Vertex) -> Option<usize> {
        (self.bin[v] != NIL).then_some(self.bin[v])
    }

    pub fn num_bins(&self) -> usize {
        self.head.len()
    }

    /// Members of bin `b`, head first.
    pub fn members(&self, b: usize) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.count[b]);
        let mut v = self.head[b];
        while v != NIL {
            out.push(v);
            v = self.next[v];
        }
        out
    }

    /// Empties bin `b`, returning its members head first.
    pub fn drain(&mut self, b: usize) -> Vec<Vertex> {
        let out = self.members(b);
        for &v in &out {
            self.bin[v] = NIL;
        }
        self.head[b] = NIL;
        self.count[b] = 0;
        out
    }
}

/// Order of vertices inside each class before refinement.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClassOrder {
    /// The order in which the bucket list yields them (head first).
    #[default]
    Bins,
    /// Increasing position in `σ`.
    Sigma,
    /// Decreasing position in `σ`; yields LexDFS⁺(σ) after refinement.
    ReverseSigma,
}

/// Ordered partition `P₁..P_p` of the vertex set.
///
/// Class indices are 0-based (`class 0` is `P₁`). Concatenating the classes
/// gives the ordering `π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    order: Vec<Vertex>,
    bounds: Vec<usize>,
    class_of: Vec<usize>,
}

impl Partition {
    /// Builds a partition from explicit classes, checking that they cover
    /// `0..n` exactly once and are nonempty.
    pub fn from_classes(n: usize, classes: &[Vec<Vertex>]) -> Result<Self> {
        let mut class_of = vec![NIL; n];
        let mut order = Vec::with_capacity(n);
        let mut bounds = vec![0];
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidPartition(format!("class {} is empty", i + 1)));
            }
            for &v in class {
                if v >= n || class_of[v] != NIL {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range or repeated")));
                }
                class_of[v] = i;
                order.push(v);
            }
            bounds.push(order.len());
        }
        if order.len() != n {
            return Err(Error::InvalidPartition(format!(
                "classes cover {} of {n} vertices",
                order.len()
            )));
        }
        Ok(Partition {
            order,
            bounds,
            class_of,
        })
    }

    /// Number of classes `p`.
    pub fn len(&self) -> usize {
        self.bounds.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn class(&self, i: usize) -> &[Vertex] {
        &self.order[self.bounds[i]..self.bounds[i + 1]]
    }

    pub fn classes(&self) -> impl Iterator<Item = &[Vertex]> + '_ {
        (0..self.len()).map(move |i| self.class(i))
    }

    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v]
    }

    pub fn class_index(&self) -> &[usize] {
        &self.class_of
    }

    /// `π = P₁ · P₂ · … · P_p`.
    pub fn pi(&self) -> Ordering {
        Ordering::new(self.order.clone()).expect("classes cover every vertex once")
    }

    /// Rearranges vertices inside each class by a sweep over `sigma`
    /// (forward for [`ClassOrder::Sigma`], backward for
    /// [`ClassOrder::ReverseSigma`]). `O(n)`.
    pub fn reordered(&self, sigma: &Ordering, order: ClassOrder) -> Partition {
        let sweep: Box<dyn Iterator<Item = &Vertex>> = match order {
            ClassOrder::Bins => return self.clone(),
            ClassOrder::Sigma => Box::new(sigma.as_slice().iter()),
            ClassOrder::ReverseSigma => Box::new(sigma.as_slice().iter().rev()),
        };
        let mut fill = self.bounds[..self.len()].to_vec();
        let mut out = vec![0; self.order.len()];
        for &v in sweep {
            let c = self.class_of[v];
            out[fill[c]] = v;
            fill[c] += 1;
        }
        Partition {
            order: out,
            bounds: self.bounds.clone(),
            class_of: self.class_of.clone(),
        }
    }
}

/// Label state just before class `index` is emitted.
#[derive(Debug)]
pub struct LayerSnapshot<'a> {
    /// 0-based class index about to be emitted.
    pub index: usize,
    /// Minimum label among unvisited vertices (the bin being emitted).
    pub min_label: usize,
    pub labels: &'a [usize],
    pub visited: &'a [bool],
}

/// One row of the class-creation trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTrace {
    /// 0-based class index.
    pub index: usize,
    /// Label value shared by the class members.
    pub label: usize,
    /// Members in bin order.
    pub members: Vec<Vertex>,
    /// `(vertex, new label)` for every increment caused by this class.
    pub increments: Vec<(Vertex, usize)>,
}

/// Result of peeling: the partition, the final label state, and the trace.
#[derive(Clone, Debug)]
pub struct Layering {
    pub partition: Partition,
    pub labels: LabelState,
    pub trace: Vec<ClassTrace>,
}

/// Peels the layers of `(g, σ)` with classes ordered by `order`.
///
/// `σ` is assumed umbrella-free and is not checked.
pub fn build_partition_classes(g: &Graph, sigma: &Ordering, order: ClassOrder) -> Partition {
    peel_layers(g, sigma, order, &mut WorkCounters::default(), |_| {}).partition
}

/// Full peeling with counters and a hook called before each class emission.
pub fn peel_layers(
    g: &Graph,
    sigma: &Ordering,
    order: ClassOrder,
    counters: &mut WorkCounters,
    mut hook: impl FnMut(&LayerSnapshot<'_>),
) -> Layering {
    let n = g.n();
    let mut state = compute_initial_labels(g, sigma, counters);
    let mut bins = BinArray::new(n);
    for pos in (0..n).rev() {
        let v = sigma.at(pos);
        bins.insert(v, state.label[v]);
    }

    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    let mut trace = Vec::new();
    let mut remaining = n;
    let mut cursor = 0;
    while remaining > 0 {
        while bins.len(cursor) == 0 {
            cursor += 1;
        }
        debug_assert!(
            trace.last().is_none_or(|t: &ClassTrace| t.label < cursor),
            "bin sweep went backwards"
        );
        hook(&LayerSnapshot {
            index: classes.len(),
            min_label: cursor,
            labels: &state.label,
            visited: &state.visited,
        });

        let members = bins.drain(cursor);
        remaining -= members.len();
        for &v in &members {
            state.visited[v] = true;
        }
        let mut increments = Vec::new();
        for &v in &members {
            for &u in g.neighbors(v) {
                if !state.visited[u] {
                    bins.promote(u);
                    state.label[u] += 1;
                    counters.bin_moves += 1;
                    debug_assert!(state.label[u] < n.max(1));
                    increments.push((u, state.label[u]));
                }
            }
        }
        trace.push(ClassTrace {
            index: classes.len(),
            label: cursor,
            members: members.clone(),
            increments,
        });
        classes.push(members);
    }

    let partition = Partition::from_classes(n, &classes)
        .expect("peeling visits every vertex once")
        .reordered(sigma, order);
    Layering {
        partition,
        labels: state,
        trace,
    }
}

/// Renders the partition as trace lines `i label v1 v2 ...` (1-based `i`),
/// members in final class order.
pub fn render_trace(layering: &Layering) -> String {
    let mut out = String::new();
    for t in &layering.trace {
        let _ = write!(out, "{} {}", t.index + 1, t.label);
        for &v in layering.partition.class(t.index) {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig2() -> Graph {
        Graph::from_edges(
            11,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 4),
                (2, 3),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 5),
                (5, 6),
                (5, 7),
                (6, 8),
                (7, 8),
                (7, 9),
                (7, 10),
            ],
        )
        .unwrap()
    }

    #[test]
    fn fig2_initial_labels() {
        let g = fig2();
        let mut c = WorkCounters::default();
        let s = compute_initial_labels(&g, &Ordering::identity(11), &mut c);
        assert_eq!(s.label, vec![7, 7, 7, 4, 5, 3, 3, 0, 2, 1, 0]);
        assert_eq!(c.label_touches, 11 + 32);
    }

    #[test]
    fn complete_graph_labels_zero() {
        let edges: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let g = Graph::from_edges(5, &edges).unwrap();
        let sigma = Ordering::new(vec![3, 1, 4, 0, 2]).unwrap();
        let s = compute_initial_labels(&g, &sigma, &mut WorkCounters::default());
        assert!(s.label.iter().all(|&l| l == 0));
        let p = build_partition_classes(&g, &sigma, ClassOrder::Sigma);
        assert_eq!(p.len(), 1);
        assert_eq!(p.class(0), sigma.as_slice());
    }

    #[test]
    fn edgeless_labels_and_classes() {
        let g = Graph::from_edges(4, &[]).unwrap();
        let sigma = Ordering::identity(4);
        let s = compute_initial_labels(&g, &sigma, &mut WorkCounters::default());
        assert_eq!(s.label, vec![3, 2, 1, 0]);
        let p = build_partition_classes(&g, &sigma, ClassOrder::Bins);
        let classes: Vec<_> = p.classes().map(|c| c.to_vec()).collect();
        assert_eq!(classes, vec![vec![3], vec![2], vec![1], vec![0]]);
    }

    #[test]
    fn fig2_classes_and_increments() {
        let g = fig2();
        let mut c = WorkCounters::default();
        let layering = peel_layers(&g, &Ordering::identity(11), ClassOrder::Sigma, &mut c, |_| {});
        let classes: Vec<_> = layering.partition.classes().map(|c| c.to_vec()).collect();
        // {h,k}, {j}, {g,i}, {d,e,f}, {a,b,c}
        assert_eq!(
            classes,
            vec![vec![7, 10], vec![9], vec![6, 8], vec![3, 4, 5], vec![0, 1, 2]]
        );
        let labels: Vec<_> = layering.trace.iter().map(|t| t.label).collect();
        assert_eq!(labels, vec![0, 2, 3, 5, 8]);
        let mut inc0 = layering.trace[0].increments.clone();
        inc0.sort();
        assert_eq!(inc0, vec![(5, 4), (8, 3), (9, 2)]);
        assert!(layering.trace[1].increments.is_empty());
        assert_eq!(c.bin_moves, 8);
        assert_eq!(
            render_trace(&layering),
            "1 0 7 10\n2 2 9\n3 3 6 8\n4 5 3 4 5\n5 8 0 1 2\n"
        );
    }

    #[test]
    fn bins_order_on_fig2() {
        let p = build_partition_classes(&fig2(), &Ordering::identity(11), ClassOrder::Bins);
        // h,k | j | i,g | f,d,e | b,c,a
        assert_eq!(p.pi().as_slice(), &[7, 10, 9, 8, 6, 5, 3, 4, 1, 2, 0]);
        let plus = build_partition_classes(&fig2(), &Ordering::identity(11), ClassOrder::ReverseSigma);
        assert_eq!(plus.pi().as_slice(), &[10, 7, 9, 8, 6, 5, 4, 3, 2, 1, 0]);
    }

    #[test]
    fn bin_array_bookkeeping() {
        let mut b = BinArray::new(4);
        b.insert(0, 1);
        b.insert(1, 1);
        b.insert(2, 1);
        assert_eq!(b.members(1), vec![2, 1, 0]);
        b.promote(1);
        assert_eq!((b.len(1), b.len(2)), (2, 1));
        assert_eq!(b.members(1), vec![2, 0]);
        assert_eq!(b.bin_of(1), Some(2));
        b.remove(2);
        assert_eq!(b.members(1), vec![0]);
        assert_eq!(b.drain(1), vec![0]);
        assert_eq!(b.bin_of(0), None);
        assert_eq!(b.num_bins(), 4);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::from_classes(3, &[vec![0, 1], vec![2]]).is_ok());
        assert!(Partition::from_classes(3, &[vec![0, 1]]).is_err());
        assert!(Partition::from_classes(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_classes(3, &[vec![0, 1, 2], vec![]]).is_err());
    }
}
