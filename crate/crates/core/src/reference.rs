//! Label-based LexDFS, transcribed directly from the generic search.
//!
//! Every unnumbered vertex carries the sequence of visit numbers of its
//! numbered neighbors, most recent first. At each step the vertex with the
//! lexicographically largest sequence is numbered next; ties go to a
//! [`TieRule`]. Cost is `O(n·m)` in the worst case; this module is the oracle
//! the linear-time pipeline is checked against, not a production path.

use std::cmp::Ordering as Cmp;
use std::fmt;

use crate::graph::{Graph, Ordering, Vertex};

/// Visit numbers of already-numbered neighbors, most recent first.
///
/// Stored oldest-first so that prepending is a push.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LexLabel {
    oldest_first: Vec<usize>,
}

impl LexLabel {
    /// A label from entries given most recent first.
    pub fn from_entries(entries: &[usize]) -> Self {
        LexLabel {
            oldest_first: entries.iter().rev().copied().collect(),
        }
    }

    pub fn prepend(&mut self, visit: usize) {
        self.oldest_first.push(visit);
    }

    /// Entries most recent first.
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.oldest_first.iter().rev().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.oldest_first.is_empty()
    }
}

impl Ord for LexLabel {
    /// Lexicographic on entries (most recent first); a proper prefix is smaller.
    fn cmp(&self, other: &Self) -> Cmp {
        self.entries().cmp(other.entries())
    }
}

impl PartialOrd for LexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Cmp> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LexLabel {
    /// Entries concatenated, e.g. `31`; `ε` when empty. Entries of two or more
    /// digits are separated by dots to stay unambiguous.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        let wide = self.oldest_first.iter().any(|&e| e >= 10);
        for (i, e) in self.entries().enumerate() {
            if wide && i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// How ties between equally labelled vertices are resolved.
#[derive(Clone, Debug)]
pub enum TieRule {
    /// Earliest vertex in the reference ordering wins.
    Leftmost(Ordering),
    /// Latest vertex in the reference ordering wins (the LexDFS⁺ rule).
    Rightmost(Ordering),
}

impl TieRule {
    fn reference(&self) -> &Ordering {
        match self {
            TieRule::Leftmost(o) | TieRule::Rightmost(o) => o,
        }
    }

    /// True when `a` beats `b` on a label tie.
    fn prefers(&self, a: Vertex, b: Vertex) -> bool {
        match self {
            TieRule::Leftmost(o) => o.precedes(a, b),
            TieRule::Rightmost(o) => o.precedes(b, a),
        }
    }
}

/// One numbering step: the chosen vertex and the labels it changed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchStep {
    pub vertex: Vertex,
    pub updated: Vec<(Vertex, LexLabel)>,
}

/// LexDFS where the first vertex is also chosen by `tie` (all labels empty).
pub fn lexdfs_generic(g: &Graph, tie: &TieRule) -> Ordering {
    search(g, None, tie, |_| {})
}

/// LexDFS from an explicit start vertex, which receives the label `0`.
pub fn lexdfs_from(g: &Graph, start: Vertex, tie: &TieRule) -> Ordering {
    search(g, Some(start), tie, |_| {})
}

/// [`lexdfs_from`] / [`lexdfs_generic`] recording every step.
pub fn lexdfs_traced(g: &Graph, start: Option<Vertex>, tie: &TieRule) -> (Ordering, Vec<SearchStep>) {
    let mut steps = Vec::with_capacity(g.n());
    let order = search(g, start, tie, |s| steps.push(s));
    (order, steps)
}

/// LexDFS⁺(σ): ties go to the rightmost vertex of `sigma`.
pub fn lexdfs_plus_oracle(g: &Graph, sigma: &Ordering) -> Ordering {
    lexdfs_generic(g, &TieRule::Rightmost(sigma.clone()))
}

fn search(g: &Graph, start: Option<Vertex>, tie: &TieRule, mut on_step: impl FnMut(SearchStep)) -> Ordering {
    let n = g.n();
    assert_eq!(tie.reference().len(), n, "tie-rule ordering does not cover the graph");
    let mut labels = vec![LexLabel::default(); n];
    if let Some(s) = start {
        labels[s].prepend(0);
    }
    let mut numbered = vec![false; n];
    let mut seq = Vec::with_capacity(n);

    for i in 1..=n {
        let mut best: Option<Vertex> = None;
        for v in (0..n).filter(|&v| !numbered[v]) {
            best = match best {
                None => Some(v),
                Some(b) => match labels[v].cmp(&labels[b]) {
                    Cmp::Greater => Some(v),
                    Cmp::Equal if tie.prefers(v, b) => Some(v),
                    _ => Some(b),
                },
            };
        }
        let v = best.expect("an unnumbered vertex remains");
        numbered[v] = true;
        seq.push(v);

        let mut updated = Vec::new();
        for &w in g.neighbors(v) {
            if !numbered[w] {
                labels[w].prepend(i);
                updated.push((w, labels[w].clone()));
            }
        }
        on_step(SearchStep { vertex: v, updated });
    }
    Ordering::new(seq).expect("search numbers every vertex once")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> Graph {
        // a..e = 0..4; edges ad, ac, ab, dc, ce, cb
        Graph::from_edges(5, &[(0, 3), (0, 2), (0, 1), (3, 2), (2, 4), (2, 1)]).unwrap()
    }

    #[test]
    fn longer_extension_is_larger() {
        let l31 = LexLabel::from_entries(&[3, 1]);
        let l3 = LexLabel::from_entries(&[3]);
        let l21 = LexLabel::from_entries(&[2, 1]);
        assert!(l31 > l3);
        assert!(l3 > l21);
        assert!(LexLabel::from_entries(&[1]) > LexLabel::default());
        assert_eq!(l31.to_string(), "31");
        assert_eq!(LexLabel::from_entries(&[12, 3]).to_string(), "12.3");
    }

    #[test]
    fn fig1_leftmost() {
        let tau = lexdfs_generic(&fig1(), &TieRule::Leftmost(Ordering::identity(5)));
        assert_eq!(tau.as_slice(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn fig1_rightmost_is_plus() {
        let sigma = Ordering::identity(5);
        let expected = [4, 2, 3, 0, 1]; // e, c, d, a, b
        assert_eq!(
            lexdfs_generic(&fig1(), &TieRule::Rightmost(sigma.clone())).as_slice(),
            &expected
        );
        assert_eq!(lexdfs_plus_oracle(&fig1(), &sigma).as_slice(), &expected);
    }

    #[test]
    fn edgeless_follows_reference() {
        let g = Graph::from_edges(4, &[]).unwrap();
        let r = Ordering::new(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(lexdfs_generic(&g, &TieRule::Leftmost(r.clone())), r);
        assert_eq!(lexdfs_generic(&g, &TieRule::Rightmost(r.clone())), r.reverse());
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(lexdfs_plus_oracle(&g, &Ordering::identity(1)).as_slice(), &[0]);
    }

    #[test]
    fn explicit_start_overrides_tie_rule() {
        let tie = TieRule::Rightmost(Ordering::identity(5));
        let (tau, steps) = lexdfs_traced(&fig1(), Some(0), &tie);
        assert_eq!(tau.at(0), 0);
        assert_eq!(steps.len(), 5);
        assert_eq!(lexdfs_from(&fig1(), 0, &tie), tau);
    }
}
