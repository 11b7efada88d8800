//! Cocomparability instances with a known umbrella-free ordering.
//!
//! Every generator builds a poset whose natural vertex order is a linear
//! extension and returns the complement of its comparability graph together
//! with the identity ordering, which is then umbrella-free by construction.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`),
//! drawing one `gen_bool(p)` per candidate arc in the documented order, so a
//! seed fixes the output on every platform.

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Ordering, Vertex};

/// A generated graph and its umbrella-free ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub sigma: Ordering,
}

/// Random DAG on `0..n` with each arc `i → j` (`i < j`) present with
/// probability `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PosetSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl PosetSpec {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        Ok(PosetSpec { n, p, seed })
    }
}

/// Strict upper sets of the transitive closure of a DAG on `0..n` whose arcs
/// all go from lower to higher ids.
pub fn transitive_closure(n: usize, arcs: &[Vec<Vertex>]) -> Vec<FixedBitSet> {
    let mut reach = vec![FixedBitSet::with_capacity(n); n];
    for i in (0..n).rev() {
        let mut row = FixedBitSet::with_capacity(n);
        for &j in &arcs[i] {
            debug_assert!(j > i);
            row.insert(j);
            row.union_with(&reach[j]);
        }
        reach[i] = row;
    }
    reach
}

/// Draws the DAG, closes it, and emits the incomparability graph. Arcs are
/// drawn for pairs `(i, j)`, `i < j`, in lexicographic order; edges are
/// emitted in the same order. `O(n³ / 64)` for the closure.
pub fn gen_random_cocomp(spec: &PosetSpec) -> Instance {
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut arcs = vec![Vec::new(); n];
    for (i, out) in arcs.iter_mut().enumerate() {
        for j in i + 1..n {
            if rng.gen_bool(spec.p) {
                out.push(j);
            }
        }
    }
    let reach = transitive_closure(n, &arcs);
    let mut edges = Vec::new();
    for (i, row) in reach.iter().enumerate() {
        for j in i + 1..n {
            if !row.contains(j) {
                edges.push((i, j));
            }
        }
    }
    Instance {
        graph: Graph::from_edges(n, &edges).expect("generated edges are simple"),
        sigma: Ordering::identity(n),
    }
}

/// Layered poset for large sparse instances.
///
/// Vertices `0..n` are cut into consecutive layers of random width in
/// `1..=max_width`. Within a layer vertices are incomparable; between
/// adjacent layers each pair is comparable with probability `p`; layers two
/// or more apart are fully comparable. The resulting graph has
/// `O(n · max_width)` edges: a clique per layer plus the non-arcs between
/// neighboring layers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LayeredSpec {
    pub n: usize,
    pub max_width: usize,
    pub p: f64,
    pub seed: u64,
}

impl LayeredSpec {
    pub fn new(n: usize, max_width: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        Ok(LayeredSpec {
            n,
            max_width: max_width.max(1),
            p,
            seed,
        })
    }
}

/// Draws layer widths first, then for each vertex `u` in order and each
/// vertex `v` of the next layer in order, one `gen_bool(p)` for the arc
/// `u → v`. Edges are emitted per vertex `u` in increasing `v`. Linear in the
/// output size.
pub fn gen_layered(spec: &LayeredSpec) -> Instance {
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut starts = vec![0];
    while *starts.last().unwrap() < n {
        let w = rng.gen_range(1..=spec.max_width);
        starts.push((starts.last().unwrap() + w).min(n));
    }
    let mut edges = Vec::new();
    for layer in 0..starts.len() - 1 {
        let (lo, hi) = (starts[layer], starts[layer + 1]);
        let next_hi = starts.get(layer + 2).copied().unwrap_or(hi);
        for u in lo..hi {
            for v in u + 1..hi {
                edges.push((u, v));
            }
            for v in hi..next_hi {
                if !rng.gen_bool(spec.p) {
                    edges.push((u, v));
                }
            }
        }
    }
    Instance {
        graph: Graph::from_edges(n, &edges).expect("generated edges are simple"),
        sigma: Ordering::identity(n),
    }
}

/// The two worked examples: `fig1` (5 vertices a..e) and `fig2`
/// (11 vertices a..k), vertex `a` = 0 and so on.
pub fn gen_fixture(name: &str) -> Result<Instance> {
    let (n, edges): (usize, &[(Vertex, Vertex)]) = match name {
        // ad, ac, ab, dc, ce, cb
        "fig1" => (5, &[(0, 3), (0, 2), (0, 1), (3, 2), (2, 4), (2, 1)]),
        // ab ac ad bc be cd de df dg ef fg fh gi hi hj hk
        "fig2" => (
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
        ),
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    Ok(Instance {
        graph: Graph::from_edges(n, edges)?,
        sigma: Ordering::identity(n),
    })
}

/// Vertex name `a`, `b`, ... for fixture output.
pub fn letter(v: Vertex) -> char {
    (b'a' + v as u8) as char
}
