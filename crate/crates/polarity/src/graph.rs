//! Immutable simple undirected graphs.
//!
//! Vertices are dense 0-based ids. The adjacency is stored in compressed
//! sparse row form with each neighbor range sorted, so serialization is
//! deterministic and equality is structural on `(n, edge set)`. Graphs are
//! immutable after construction; every analysis in this crate is a pure
//! function of a `&Graph` and may run concurrently.
//!
//! # Edge-list text format
//!
//! Line 1 is the vertex count `n`. Each following non-empty line is an edge
//! `u v` with both endpoints in `[0, n)`, separated by spaces or tabs. Lines
//! starting with `#` are comments. On output edges are written with `u < v`
//! in lexicographic order; input may list them in any order.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// An immutable simple undirected graph in adjacency-list form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// `offsets[v]..offsets[v + 1]` indexes `neighbors` for vertex `v`.
    offsets: Vec<usize>,
    /// Concatenated neighbor lists, sorted within each vertex's range.
    neighbors: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge iterator, validating simplicity.
    ///
    /// Edges may be given in either endpoint order. Rejects self-loops,
    /// duplicate edges, and endpoints at or above `vertex_count`.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut degree = vec![0usize; vertex_count];
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= vertex_count {
                return Err(Error::VertexOutOfRange { id: a, n: vertex_count });
            }
            if b >= vertex_count {
                return Err(Error::VertexOutOfRange { id: b, n: vertex_count });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            degree[a] += 1;
            degree[b] += 1;
            list.push(if a < b { (a, b) } else { (b, a) });
        }

        let mut offsets = Vec::with_capacity(vertex_count + 1);
        offsets.push(0usize);
        for v in 0..vertex_count {
            offsets.push(offsets[v] + degree[v]);
        }
        let mut neighbors = vec![0usize; list.len() * 2];
        let mut cursor: Vec<usize> = offsets[..vertex_count].to_vec();
        for &(u, v) in &list {
            neighbors[cursor[u]] = v;
            cursor[u] += 1;
            neighbors[cursor[v]] = u;
            cursor[v] += 1;
        }
        for v in 0..vertex_count {
            let range = &mut neighbors[offsets[v]..offsets[v + 1]];
            range.sort_unstable();
            if let Some(w) = range.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = if v < w[0] { (v, w[0]) } else { (w[0], v) };
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { offsets, neighbors })
    }

    /// Parses the edge-list text format described in the module docs.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut vertex_count: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match vertex_count {
                None => {
                    if tokens.len() != 1 {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected vertex count, got {:?}", content),
                        });
                    }
                    let n = tokens[0].parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        msg: format!("invalid vertex count {:?}", tokens[0]),
                    })?;
                    vertex_count = Some(n);
                }
                Some(_) => {
                    if tokens.len() != 2 {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected edge \"u v\", got {:?}", content),
                        });
                    }
                    let mut ends = [0usize; 2];
                    for (slot, token) in ends.iter_mut().zip(&tokens) {
                        *slot = token.parse::<usize>().map_err(|_| Error::Parse {
                            line,
                            msg: format!("invalid vertex id {:?}", token),
                        })?;
                    }
                    edges.push((ends[0], ends[1]));
                }
            }
        }
        let n = vertex_count.ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing vertex count header".to_string(),
        })?;
        Self::from_edges(n, edges)
    }

    /// Serializes to the canonical edge-list text: header line, then edges
    /// with `u < v` in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.vertex_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{} {}", u, v).unwrap();
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Number of edges incident to `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.vertex_count() {
            return Err(Error::VertexOutOfRange { id: v, n: self.vertex_count() });
        }
        Ok(self.neighbors(v).len())
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Iterates edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> Result<bool> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        Ok(reached == n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn parses_simple_edge_list() {
        let g = Graph::from_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(Graph::from_edge_list("3\n0 0\n"), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn rejects_duplicate_edge() {
        assert_eq!(
            Graph::from_edge_list("2\n0 1\n0 1\n"),
            Err(Error::DuplicateEdge(0, 1))
        );
        // Same edge in the opposite endpoint order is still a duplicate.
        assert_eq!(
            Graph::from_edge_list("2\n0 1\n1 0\n"),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn rejects_out_of_range_vertex() {
        assert_eq!(
            Graph::from_edge_list("2\n0 2\n"),
            Err(Error::VertexOutOfRange { id: 2, n: 2 })
        );
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            Graph::from_edge_list("two\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("3\n0 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("3\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list(""),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let g = Graph::from_edge_list("# generated\n3\n\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn accepts_tabs_and_extra_spaces() {
        let g = Graph::from_edge_list("3\n0\t1\n1   2").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn serializes_canonically() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(g.to_edge_list(), "2\n0 1\n");

        let lone = Graph::from_edges(1, []).unwrap();
        assert_eq!(lone.to_edge_list(), "1\n");

        // Triangle built in scrambled order still serializes sorted.
        let c3 = Graph::from_edges(3, [(2, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(c3.to_edge_list(), "3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn round_trips() {
        let g = cycle(7);
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn degrees() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degree(0), Ok(3));
        assert_eq!(star.degree(1), Ok(1));
        assert_eq!(cycle(5).degree(3), Ok(2));

        let with_isolated = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(with_isolated.degree(2), Ok(0));
        assert_eq!(
            with_isolated.degree(3),
            Err(Error::VertexOutOfRange { id: 3, n: 3 })
        );
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = cycle(9);
        let total: usize = (0..9).map(|v| g.degree(v).unwrap()).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn connectivity() {
        assert_eq!(path(4).is_connected(), Ok(true));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.is_connected(), Ok(false));
        let single = Graph::from_edges(1, []).unwrap();
        assert_eq!(single.is_connected(), Ok(true));
        let empty = Graph::from_edges(0, []).unwrap();
        assert_eq!(empty.is_connected(), Err(Error::EmptyGraph));
    }

    #[test]
    fn contains_edge_checks_both_orders() {
        let g = path(3);
        assert!(g.contains_edge(0, 1));
        assert!(g.contains_edge(1, 0));
        assert!(!g.contains_edge(0, 2));
        assert!(!g.contains_edge(7, 0));
    }
}
