//! Executable ordering properties.
//!
//! These are oracles: clear and quadratic-to-quartic, meant for small and
//! medium graphs. Each check returns `Ok(())` or a [`Violation`] whose witness
//! can be re-checked with [`Violation::holds`].

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Ordering, Vertex};
use crate::layers::Partition;

/// Dense adjacency for O(1) edge queries.
#[derive(Clone, Debug)]
pub struct AdjMatrix {
    n: usize,
    bits: FixedBitSet,
}

impl AdjMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut bits = FixedBitSet::with_capacity(n * n);
        for &(u, v) in g.edges() {
            bits.insert(u * n + v);
            bits.insert(v * n + u);
        }
        AdjMatrix { n, bits }
    }

    pub fn has(&self, u: Vertex, v: Vertex) -> bool {
        self.bits.contains(u * self.n + v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `a ≺ b ≺ c`, `ac ∈ E`, `ab, bc ∉ E`.
    Umbrella,
    /// `a ≺ b ≺ c`, `ac ∈ E`, `ab ∉ E`, and no `d` with `a ≺ d ≺ b`,
    /// `db ∈ E`, `dc ∉ E`.
    FourPoint,
    /// Non-edge `uv` ordered the same way in both orderings.
    Flip,
    /// Two non-adjacent vertices in one class.
    NonClique,
    /// `v` in class `i`, `v ≺σ u`, `uv ∉ E`, `u` in class `≥ i`.
    NonMaximal,
    /// Non-edge `u ≺σ v` whose labels do not satisfy `#(u) > #(v)`.
    LabelGap,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::Umbrella => "umbrella",
            ViolationKind::FourPoint => "four-point",
            ViolationKind::Flip => "flip",
            ViolationKind::NonClique => "non-clique",
            ViolationKind::NonMaximal => "non-maximal",
            ViolationKind::LabelGap => "label-gap",
        }
    }
}

/// A failed property with its witness vertices and their positions in the
/// ordering under test (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<Vertex>,
    pub positions: Vec<usize>,
}

impl Violation {
    fn new(kind: ViolationKind, witness: Vec<Vertex>, ord: &Ordering) -> Self {
        let positions = witness.iter().map(|&v| ord.position(v)).collect();
        Violation {
            kind,
            witness,
            positions,
        }
    }

    /// Re-evaluates the violated predicate on the witness. `sigma` is the
    /// reference ordering for flip/partition/label checks and `ord` the
    /// ordering under test; `extra` supplies class indices or labels for the
    /// kinds that need them.
    pub fn holds(&self, g: &Graph, ord: &Ordering, sigma: Option<&Ordering>, extra: Option<&[usize]>) -> bool {
        let adj = AdjMatrix::new(g);
        let w = &self.witness;
        match self.kind {
            ViolationKind::Umbrella => {
                let (a, b, c) = (w[0], w[1], w[2]);
                ord.precedes(a, b) && ord.precedes(b, c) && adj.has(a, c) && !adj.has(a, b) && !adj.has(b, c)
            }
            ViolationKind::FourPoint => {
                let (a, b, c) = (w[0], w[1], w[2]);
                let (pa, pb) = (ord.position(a), ord.position(b));
                ord.precedes(a, b)
                    && ord.precedes(b, c)
                    && adj.has(a, c)
                    && !adj.has(a, b)
                    && !(pa + 1..pb).map(|i| ord.at(i)).any(|d| adj.has(d, b) && !adj.has(d, c))
            }
            ViolationKind::Flip => {
                let sigma = sigma.expect("flip needs the reference ordering");
                let (u, v) = (w[0], w[1]);
                !adj.has(u, v) && sigma.precedes(u, v) == ord.precedes(u, v)
            }
            ViolationKind::NonClique => {
                let class = extra.expect("class indices");
                class[w[0]] == class[w[1]] && !adj.has(w[0], w[1])
            }
            ViolationKind::NonMaximal => {
                let sigma = sigma.expect("non-maximal needs σ");
                let class = extra.expect("class indices");
                let (v, u) = (w[0], w[1]);
                sigma.precedes(v, u) && !adj.has(u, v) && class[u] >= class[v]
            }
            ViolationKind::LabelGap => {
                let sigma = sigma.expect("label-gap needs σ");
                let labels = extra.expect("labels");
                let (u, v) = (w[0], w[1]);
                sigma.precedes(u, v) && !adj.has(u, v) && labels[u] <= labels[v]
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.as_str())?;
        for v in &self.witness {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// No edge `ac` flies over a vertex `b` adjacent to neither endpoint.
/// For each edge, scans the positions strictly between its endpoints.
pub fn check_umbrella_free(g: &Graph, ord: &Ordering) -> Result<(), Violation> {
    let adj = AdjMatrix::new(g);
    for &(u, v) in g.edges() {
        let (a, c) = if ord.precedes(u, v) { (u, v) } else { (v, u) };
        for i in ord.position(a) + 1..ord.position(c) {
            let b = ord.at(i);
            if !adj.has(a, b) && !adj.has(b, c) {
                return Err(Violation::new(ViolationKind::Umbrella, vec![a, b, c], ord));
            }
        }
    }
    Ok(())
}

/// The 4-point condition characterising LexDFS orderings.
///
/// For each pair `b ≺ c`, positions left of `b` are scanned right to left:
/// hitting a `d` with `db ∈ E, dc ∉ E` first clears every `a` further left,
/// while hitting an `a` with `ac ∈ E, ab ∉ E` first is a violation. The scan
/// is `O(n)` per pair, `O(n³)` overall.
pub fn check_4pc(g: &Graph, ord: &Ordering) -> Result<(), Violation> {
    let adj = AdjMatrix::new(g);
    let n = g.n();
    for pc in 0..n {
        let c = ord.at(pc);
        for pb in 0..pc {
            let b = ord.at(pb);
            for pa in (0..pb).rev() {
                let x = ord.at(pa);
                let xb = adj.has(x, b);
                let xc = adj.has(x, c);
                if xb && !xc {
                    break;
                }
                if xc && !xb {
                    return Err(Violation::new(ViolationKind::FourPoint, vec![x, b, c], ord));
                }
            }
        }
    }
    Ok(())
}

/// Every non-edge has its endpoints in opposite orders in `sigma` and `tau`.
/// Witness `[u, v]` has `u ≺σ v`.
pub fn check_flipping(g: &Graph, sigma: &Ordering, tau: &Ordering) -> Result<(), Violation> {
    let adj = AdjMatrix::new(g);
    let n = g.n();
    for i in 0..n {
        let u = sigma.at(i);
        for j in i + 1..n {
            let v = sigma.at(j);
            if !adj.has(u, v) && tau.precedes(u, v) {
                return Err(Violation::new(ViolationKind::Flip, vec![u, v], tau));
            }
        }
    }
    Ok(())
}

/// Every class is a clique and consists of maximal elements: no `v` in class
/// `i` has a non-neighbor `u` to its right in `sigma` with class `≥ i`.
/// Positions in the witness refer to `sigma`.
pub fn check_partition(g: &Graph, sigma: &Ordering, part: &Partition) -> Result<(), Violation> {
    let adj = AdjMatrix::new(g);
    for class in part.classes() {
        for (k, &u) in class.iter().enumerate() {
            for &v in &class[k + 1..] {
                if !adj.has(u, v) {
                    return Err(Violation::new(ViolationKind::NonClique, vec![u, v], sigma));
                }
            }
        }
    }
    let n = g.n();
    for i in 0..n {
        let v = sigma.at(i);
        for j in i + 1..n {
            let u = sigma.at(j);
            if !adj.has(u, v) && part.class_of(u) >= part.class_of(v) {
                return Err(Violation::new(ViolationKind::NonMaximal, vec![v, u], sigma));
            }
        }
    }
    Ok(())
}

/// For every non-edge `u ≺σ v`, `labels[u] > labels[v]`.
pub fn check_label_order(g: &Graph, sigma: &Ordering, labels: &[usize]) -> Result<(), Violation> {
    let adj = AdjMatrix::new(g);
    check_label_order_with(&adj, sigma, labels)
}

/// [`check_label_order`] with a prebuilt matrix, for repeated calls.
pub fn check_label_order_with(adj: &AdjMatrix, sigma: &Ordering, labels: &[usize]) -> Result<(), Violation> {
    let n = sigma.len();
    for i in 0..n {
        let u = sigma.at(i);
        for j in i + 1..n {
            let v = sigma.at(j);
            if !adj.has(u, v) && labels[u] <= labels[v] {
                return Err(Violation::new(ViolationKind::LabelGap, vec![u, v], sigma));
            }
        }
    }
    Ok(())
}

/// Largest graph [`brute_force_cocomp_order`] accepts.
pub const BRUTE_FORCE_MAX: usize = 10;

/// Lexicographically first umbrella-free ordering, or `None` when `g` is not
/// a cocomparability graph. Depth-first over prefixes; placing `b` is
/// rejected as soon as some earlier non-neighbor `a` of `b` has an unplaced
/// neighbor outside `N(b)`, since that neighbor would close an umbrella.
pub fn brute_force_cocomp_order(g: &Graph) -> Result<Option<Ordering>> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::TooLarge {
            n,
            max: BRUTE_FORCE_MAX,
        });
    }
    let mut nbr = vec![0u32; n];
    for &(u, v) in g.edges() {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    let mut prefix = Vec::with_capacity(n);
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    if extend(&nbr, all, &mut prefix) {
        Ok(Some(Ordering::new(prefix).expect("full permutation")))
    } else {
        Ok(None)
    }
}

fn extend(nbr: &[u32], unplaced: u32, prefix: &mut Vec<Vertex>) -> bool {
    if unplaced == 0 {
        return true;
    }
    let mut rest = unplaced;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let after = unplaced & !(1 << b);
        let doomed = prefix
            .iter()
            .any(|&a| nbr[a] >> b & 1 == 0 && nbr[a] & after & !nbr[b] != 0);
        if doomed {
            continue;
        }
        prefix.push(b);
        if extend(nbr, after, prefix) {
            return true;
        }
        prefix.pop();
    }
    false
}
