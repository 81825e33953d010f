//! Ground-truth distance computations.
//!
//! Everything here is breadth-first search: the Wiener polarity index from a
//! radius-3 truncated traversal per source, the Wiener index from full
//! traversals, and single-pair distances. These are the oracles the closed
//! formulas are validated against, so they stay deliberately simple. All
//! distances are exact integers; the only floating point is the linear
//! boiling-point model.
//!
//! Per-source traversals are independent, so callers may shard sources
//! across threads and add the partial counts.

use crate::error::{Error, Result};
use crate::graph::Graph;

const UNREACHED: usize = usize::MAX;

/// Distances from one source vertex, truncated at a fixed radius.
///
/// Vertices farther than the radius (or unreachable) report `None`.
#[derive(Debug, Clone)]
pub struct DistanceProfile {
    source: usize,
    radius: usize,
    dist: Vec<usize>,
}

impl DistanceProfile {
    /// Runs a breadth-first search from `source`, truncated at `radius`.
    pub fn from_source(g: &Graph, source: usize, radius: usize) -> Result<Self> {
        let n = g.vertex_count();
        if source >= n {
            return Err(Error::VertexOutOfRange { id: source, n });
        }
        let mut dist = vec![UNREACHED; n];
        let mut queue = Vec::new();
        dist[source] = 0;
        queue.push(source);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let d = dist[u];
            if d == radius {
                continue;
            }
            for &v in g.neighbors(u) {
                if dist[v] == UNREACHED {
                    dist[v] = d + 1;
                    queue.push(v);
                }
            }
        }
        Ok(DistanceProfile { source, radius, dist })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Distance from the source to `v`, or `None` beyond the radius.
    pub fn distance(&self, v: usize) -> Option<usize> {
        match self.dist.get(v) {
            Some(&d) if d != UNREACHED => Some(d),
            _ => None,
        }
    }
}

/// Counts unordered vertex pairs at distance exactly 3 — the Wiener polarity
/// index — by a radius-3 traversal from every vertex.
///
/// The ordered count is halved; it is asserted even, which cheaply catches
/// asymmetric traversal bugs.
pub fn count_distance3_pairs(g: &Graph) -> Result<u64> {
    if !g.is_connected()? {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    let mut dist: Vec<u8> = vec![u8::MAX; n];
    let mut queue: Vec<usize> = Vec::new();
    let mut ordered: u64 = 0;
    for source in 0..n {
        dist[source] = 0;
        queue.push(source);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let d = dist[u];
            if d == 3 {
                ordered += 1;
                continue;
            }
            for &v in g.neighbors(u) {
                if dist[v] == u8::MAX {
                    dist[v] = d + 1;
                    queue.push(v);
                }
            }
        }
        for &v in &queue {
            dist[v] = u8::MAX;
        }
        queue.clear();
    }
    assert!(ordered.is_multiple_of(2), "ordered distance-3 count must be even");
    Ok(ordered / 2)
}

/// Sum of shortest-path distances over all unordered vertex pairs, via a
/// full breadth-first traversal from every vertex.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    if !g.is_connected()? {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    let mut dist: Vec<usize> = vec![UNREACHED; n];
    let mut queue: Vec<usize> = Vec::new();
    let mut ordered: u64 = 0;
    for source in 0..n {
        dist[source] = 0;
        queue.push(source);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &v in g.neighbors(u) {
                if dist[v] == UNREACHED {
                    dist[v] = dist[u] + 1;
                    queue.push(v);
                }
            }
        }
        ordered += queue.iter().map(|&v| dist[v] as u64).sum::<u64>();
        for &v in &queue {
            dist[v] = UNREACHED;
        }
        queue.clear();
    }
    assert!(ordered.is_multiple_of(2), "ordered distance sum must be even");
    Ok(ordered / 2)
}

/// Shortest-path distance between `u` and `v` in edges.
pub fn distance(g: &Graph, u: usize, v: usize) -> Result<usize> {
    let n = g.vertex_count();
    if u >= n {
        return Err(Error::VertexOutOfRange { id: u, n });
    }
    if v >= n {
        return Err(Error::VertexOutOfRange { id: v, n });
    }
    if u == v {
        return Ok(0);
    }
    let mut dist = vec![UNREACHED; n];
    let mut queue = Vec::new();
    dist[u] = 0;
    queue.push(u);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &y in g.neighbors(x) {
            if dist[y] == UNREACHED {
                dist[y] = dist[x] + 1;
                if y == v {
                    return Ok(dist[y]);
                }
                queue.push(y);
            }
        }
    }
    // v was never reached, so u and v sit in different components.
    Err(Error::NotConnected)
}

/// The linear boiling-point model `a·w + b·wp + c` over the Wiener index `w`
/// and Wiener polarity index `wp`.
pub fn boiling_point(w: u64, wp: u64, a: f64, b: f64, c: f64) -> f64 {
    a * (w as f64) + b * (wp as f64) + c
}
