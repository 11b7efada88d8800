//! Simple undirected graphs, vertex orderings, and their text formats.
//!
//! Graph files start with a `n m` header followed by `m` lines `u v`; lines
//! starting with `#` are comments. Ordering files hold one line of `n`
//! whitespace-separated vertex ids. Vertex ids are `0..n`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::{self, Read, Write};

use crate::error::{Error, Result};

/// Vertex id, `0..n`.
pub type Vertex = usize;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Each vertex has an ordered neighbor sequence. Graphs loaded from text list
/// neighbors in edge input order; [`Graph::reorder_adjacency`] produces a copy
/// whose neighbor sequences follow a given ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges, and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for (k, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge {
                    index: k,
                    reason: format!("vertex id out of range 0..{n} in edge ({u}, {v})"),
                });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    index: k,
                    reason: format!("self-loop on vertex {u}"),
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidEdge {
                    index: k,
                    reason: format!("duplicate edge ({u}, {v})"),
                });
            }
        }
        Ok(Self::build(n, edges.to_vec()))
    }

    /// Builds the adjacency arrays; neighbor order is edge order.
    fn build(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; 2 * edges.len()];
        for &(u, v) in &edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        Graph {
            offsets,
            targets,
            edges,
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Neighbors of `v` in adjacency order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edges in the order they were supplied.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Linear scan of the shorter adjacency sequence.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).contains(&b)
    }

    /// Returns a graph with the same edge set whose adjacency sequences list
    /// neighbors in increasing position of `order`, together with the number
    /// of element touches spent (one per vertex visit plus one per adjacency
    /// entry, so at most `2n + 2m`).
    ///
    /// Vertices are visited in `order`; each visited `v` is appended to the
    /// new sequence of every neighbor, which leaves every sequence sorted.
    pub fn reorder_adjacency(&self, order: &Ordering) -> (Graph, usize) {
        assert_eq!(order.len(), self.n(), "ordering does not cover the graph");
        let mut fill = self.offsets[..self.n()].to_vec();
        let mut targets = vec![0; self.targets.len()];
        let mut touches = 0;
        for &v in order.as_slice() {
            touches += 1;
            for &u in self.neighbors(v) {
                touches += 1;
                targets[fill[u]] = v;
                fill[u] += 1;
            }
        }
        let graph = Graph {
            offsets: self.offsets.clone(),
            targets,
            edges: self.edges.clone(),
        };
        (graph, touches)
    }

    /// Parses the edge-list format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            reason: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(header).ok_or_else(|| Error::Parse {
            line: header_line,
            reason: format!("malformed header {header:?}, expected \"n m\""),
        })?;

        let mut edges = Vec::with_capacity(m);
        let mut seen = HashSet::with_capacity(m);
        for (line, body) in lines {
            let (u, v) = parse_pair(body).ok_or_else(|| Error::Parse {
                line,
                reason: format!("malformed edge {body:?}, expected \"u v\""),
            })?;
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    reason: format!("more than {m} edges"),
                });
            }
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    reason: format!("vertex id out of range 0..{n}"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    reason: format!("self-loop on vertex {u}"),
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Parse {
                    line,
                    reason: format!("duplicate edge {u} {v}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                reason: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Ok(Self::build(n, edges))
    }

    pub fn load<R: Read>(mut reader: R) -> Result<Self> {
        let mut text = String::new();
        reader.read_to_string(&mut text)?;
        Self::parse(&text)
    }

    /// Renders the edge-list format: header, then edges in stored order.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(12 * (self.m() + 1));
        let _ = writeln!(out, "{} {}", self.n(), self.m());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn save<W: Write>(&self, mut writer: W) -> io::Result<()> {
        writer.write_all(self.to_text().as_bytes())
    }
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// A bijection between positions and vertices.
///
/// Positions are 0-based here; position `i` corresponds to `σ(i + 1)` in
/// 1-based notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering {
    seq: Vec<Vertex>,
    inv: Vec<usize>,
}

impl Ordering {
    /// Validates that `seq` is a permutation of `0..seq.len()`.
    pub fn new(seq: Vec<Vertex>) -> Result<Self> {
        let n = seq.len();
        let mut inv = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range 0..{n}")));
            }
            if inv[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
            inv[v] = i;
        }
        Ok(Ordering { seq, inv })
    }

    /// The ordering `0, 1, ..., n-1`.
    pub fn identity(n: usize) -> Self {
        Ordering {
            seq: (0..n).collect(),
            inv: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Vertex at 0-based position `i`.
    pub fn at(&self, i: usize) -> Vertex {
        self.seq[i]
    }

    /// 0-based position of `v`.
    pub fn position(&self, v: Vertex) -> usize {
        self.inv[v]
    }

    /// `u` strictly precedes `v`.
    pub fn precedes(&self, u: Vertex, v: Vertex) -> bool {
        self.inv[u] < self.inv[v]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn positions(&self) -> &[usize] {
        &self.inv
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.seq
    }

    /// The reverse ordering `σ⁻`.
    pub fn reverse(&self) -> Ordering {
        let n = self.len();
        let seq: Vec<_> = self.seq.iter().rev().copied().collect();
        let inv = self.inv.iter().map(|&i| n - 1 - i).collect();
        Ordering { seq, inv }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut seq = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.starts_with('#') {
                continue;
            }
            for tok in line.split_whitespace() {
                let v = tok.parse().map_err(|_| Error::Parse {
                    line: i + 1,
                    reason: format!("bad vertex id {tok:?}"),
                })?;
                seq.push(v);
            }
        }
        Self::new(seq)
    }

    pub fn load<R: Read>(mut reader: R) -> Result<Self> {
        let mut text = String::new();
        reader.read_to_string(&mut text)?;
        Self::parse(&text)
    }

    /// One line of space-separated ids, newline-terminated.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(8 * self.len() + 1);
        for (i, v) in self.seq.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{v}");
        }
        out.push('\n');
        out
    }

    pub fn save<W: Write>(&self, mut writer: W) -> io::Result<()> {
        writer.write_all(self.to_text().as_bytes())
    }
}
