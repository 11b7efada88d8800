//! Test-only oracles, written independently of the library's fast paths.
#![allow(dead_code)]

use cocomp_lexdfs::{Graph, Ordering, Vertex};

/// Names a..k to ids.
pub fn ids(s: &str) -> Vec<Vertex> {
    s.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| (t.as_bytes()[0] - b'a') as usize)
        .collect()
}

pub fn names(vs: &[Vertex]) -> String {
    vs.iter()
        .map(|&v| ((b'a' + v as u8) as char).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Class peeling by repeated minimum search over all unvisited vertices,
/// with class members listed in increasing (or decreasing) σ position.
pub fn naive_classes(g: &Graph, sigma: &Ordering, reverse_inside: bool) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let adj = adjacency(g);
    let mut label: Vec<usize> = (0..n)
        .map(|v| (0..n).filter(|&u| sigma.precedes(v, u) && !adj[u][v]).count())
        .collect();
    let mut visited = vec![false; n];
    let mut classes = Vec::new();
    while visited.iter().any(|&x| !x) {
        let min = (0..n).filter(|&v| !visited[v]).map(|v| label[v]).min().unwrap();
        let mut class: Vec<Vertex> = (0..n).filter(|&v| !visited[v] && label[v] == min).collect();
        class.sort_by_key(|&v| sigma.position(v));
        if reverse_inside {
            class.reverse();
        }
        for &v in &class {
            visited[v] = true;
        }
        for &v in &class {
            for u in 0..n {
                if adj[u][v] && !visited[u] {
                    label[u] += 1;
                }
            }
        }
        classes.push(class);
    }
    classes
}

/// Segment-by-segment refinement: for each pivot, every segment is replaced
/// by (segment ∩ N(v), segment \ N(v)) when both parts are nonempty.
pub fn refine_by_segments(class: &[Vertex], pivots_in_pop_order: &[Vertex], adj: &[Vec<bool>]) -> Vec<Vec<Vertex>> {
    let mut segs = vec![class.to_vec()];
    for &v in pivots_in_pop_order {
        let mut next = Vec::new();
        for q in segs {
            let (a, b): (Vec<_>, Vec<_>) = q.iter().partition(|&&w| adj[v][w]);
            if a.is_empty() || b.is_empty() {
                next.push(q);
            } else {
                next.push(a);
                next.push(b);
            }
        }
        segs = next;
    }
    segs
}

/// Whole pipeline over explicit classes with the segment-scan refinement and
/// stacks rebuilt from scratch: pivots of class `i` are all vertices of
/// earlier refined classes adjacent to something in `i`, popped in reverse
/// order of τ so far.
pub fn naive_pipeline(g: &Graph, classes: &[Vec<Vertex>]) -> Vec<Vertex> {
    let adj = adjacency(g);
    let mut tau: Vec<Vertex> = Vec::new();
    for class in classes {
        let pivots: Vec<Vertex> = tau
            .iter()
            .rev()
            .copied()
            .filter(|&v| class.iter().any(|&w| adj[v][w]))
            .collect();
        let segs = refine_by_segments(class, &pivots, &adj);
        tau.extend(segs.into_iter().flatten());
    }
    tau
}
