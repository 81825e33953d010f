//! Block decomposition, the cactus predicate, and the cycle/pattern census.
//!
//! A block is a maximal 2-connected subgraph or a bridge. In a cactus every
//! non-bridge block is a simple cycle, so the whole census the polarity
//! formula needs — cycle counts by length, pendant-pattern counts, and the
//! edge degree term — reads off the decomposition in linear time.
//!
//! The decomposition is an iterative lowpoint traversal with an explicit
//! stack; million-vertex graphs must not overflow the call stack.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex-count guard for the exhaustive induced-subgraph counters.
pub const BRUTE_FORCE_LIMIT: usize = 40;

/// One block: either a bridge (single edge) or a maximal 2-connected
/// subgraph. In a cactus the latter is always a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex ids of the block.
    pub vertices: Vec<usize>,
    /// Sorted edges of the block, each as `(u, v)` with `u < v`.
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A 2-connected block is a simple cycle exactly when it has as many
    /// edges as vertices.
    pub fn is_cycle(&self) -> bool {
        !self.is_bridge() && self.edges.len() == self.vertices.len()
    }

    /// Cycle length, for cycle blocks.
    pub fn cycle_length(&self) -> Option<usize> {
        self.is_cycle().then_some(self.vertices.len())
    }
}

/// Partition of a connected graph's edges into blocks, plus the cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Sorted ids of vertices that belong to two or more blocks.
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    /// True iff every block is a bridge or a cycle.
    pub fn is_cactus(&self) -> bool {
        self.blocks.iter().all(|b| b.is_bridge() || b.is_cycle())
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Everything the polarity formula consumes, gathered in one pass over a
/// cactus decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusCensus {
    /// Number of cycles of length 3, 4, 5, 6.
    pub c3: u64,
    pub c4: u64,
    pub c5: u64,
    pub c6: u64,
    /// Cycle count per length, for every length present.
    pub cycles_by_length: BTreeMap<usize, u64>,
    /// Number of induced triangle-with-pendant-edge subgraphs.
    pub b1: u64,
    /// Number of induced quadrangle-with-pendant-edge subgraphs.
    pub b2: u64,
    /// `Σ over edges uv of (deg(u) − 1)(deg(v) − 1)`.
    pub degree_term: u64,
}

/// Decomposes a connected graph into blocks via an iterative lowpoint
/// depth-first traversal.
pub fn biconnected_blocks(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSET; n];
    let mut cursor = vec![0usize; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();

    let mut timer = 0usize;
    disc[0] = timer;
    timer += 1;
    let mut visited = 1usize;
    let mut u = 0usize;
    loop {
        if cursor[u] < g.neighbors(u).len() {
            let v = g.neighbors(u)[cursor[u]];
            cursor[u] += 1;
            if disc[v] == UNSET {
                parent[v] = u;
                edge_stack.push((u, v));
                disc[v] = timer;
                low[v] = timer;
                timer += 1;
                visited += 1;
                u = v;
            } else if v != parent[u] && disc[v] < disc[u] {
                // Back edge; the mirrored visit from the descendant side is
                // skipped by the disc comparison.
                edge_stack.push((u, v));
                low[u] = low[u].min(disc[v]);
            }
        } else {
            let p = parent[u];
            if p == UNSET {
                break;
            }
            low[p] = low[p].min(low[u]);
            if low[u] >= disc[p] {
                // u's subtree cannot reach above p: close off one block.
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edges.push(e);
                    if e == (p, u) {
                        break;
                    }
                }
                raw_blocks.push(edges);
            }
            u = p;
        }
    }
    if visited < n {
        return Err(Error::NotConnected);
    }
    debug_assert!(edge_stack.is_empty());

    let mut blocks = Vec::with_capacity(raw_blocks.len());
    let mut membership = vec![0u32; n];
    for mut edges in raw_blocks {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            membership[v] += 1;
        }
        blocks.push(Block { vertices, edges });
    }
    let cut_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();
    Ok(BlockDecomposition { blocks, cut_vertices })
}

/// True iff `g` is a cactus: connected with no edge on two cycles,
/// equivalently every block is a bridge or a cycle.
pub fn is_cactus(g: &Graph) -> Result<bool> {
    Ok(biconnected_blocks(g)?.is_cactus())
}

/// Gathers the census of a cactus from its decomposition.
///
/// The pendant-pattern counts use the degree-sum identity: on a cactus, an
/// external neighbor of a cycle vertex is adjacent to exactly one vertex of
/// that cycle (two attachments would put an edge on two cycles), so each
/// induced triangle-with-pendant corresponds to one unit of `deg(v) − 2`
/// over a 3-cycle block, and likewise for quadrangles. The exhaustive
/// counters below stay available as an independent check.
pub fn census(g: &Graph, bd: &BlockDecomposition) -> Result<CactusCensus> {
    if !bd.is_cactus() {
        return Err(Error::NotCactus);
    }
    let block_edge_total: usize = bd.blocks.iter().map(|b| b.edges.len()).sum();
    assert_eq!(block_edge_total, g.edge_count(), "decomposition does not match graph");

    let mut cycles_by_length: BTreeMap<usize, u64> = BTreeMap::new();
    let mut b1 = 0u64;
    let mut b2 = 0u64;
    for block in &bd.blocks {
        let Some(len) = block.cycle_length() else {
            continue;
        };
        *cycles_by_length.entry(len).or_insert(0) += 1;
        if len == 3 || len == 4 {
            let external: u64 = block
                .vertices
                .iter()
                .map(|&v| (g.neighbors(v).len() - 2) as u64)
                .sum();
            if len == 3 {
                b1 += external;
            } else {
                b2 += external;
            }
        }
    }

    let mut degree_term = 0u64;
    for (u, v) in g.edges() {
        let du = g.neighbors(u).len() as u64;
        let dv = g.neighbors(v).len() as u64;
        degree_term += (du - 1) * (dv - 1);
    }

    let count = |len: usize| cycles_by_length.get(&len).copied().unwrap_or(0);
    Ok(CactusCensus {
        c3: count(3),
        c4: count(4),
        c5: count(5),
        c6: count(6),
        cycles_by_length,
        b1,
        b2,
        degree_term,
    })
}

/// Exhaustively counts induced triangle-with-pendant-edge subgraphs by
/// checking every 4-vertex subset. Test oracle; refuses large graphs.
pub fn count_induced_pendant_triangles(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    let mut count = 0u64;
    for subset in (0..n).combinations(4) {
        // Among 4-vertex graphs with 4 edges only the triangle-with-pendant
        // has degree sequence (1, 2, 2, 3).
        let (edges, degrees) = induced_shape(g, &subset);
        if edges == 4 && degrees[..4] == [1, 2, 2, 3] {
            count += 1;
        }
    }
    Ok(count)
}

/// Exhaustively counts induced quadrangle-with-pendant-edge subgraphs by
/// checking every 5-vertex subset. Test oracle; refuses large graphs.
pub fn count_induced_pendant_quadrangles(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    let mut count = 0u64;
    for subset in (0..n).combinations(5) {
        // Degree sequence (1, 2, 2, 2, 3) with 5 edges admits two shapes:
        // quadrangle-with-pendant and triangle-with-2-path. They differ in
        // where the pendant attaches: only the former hangs it off the
        // degree-3 vertex, leaving a 4-cycle behind.
        let (edges, degrees) = induced_shape(g, &subset);
        if edges != 5 || degrees[..5] != [1, 2, 2, 2, 3] {
            continue;
        }
        let pendant = *subset
            .iter()
            .find(|&&v| {
                subset.iter().filter(|&&w| w != v && g.contains_edge(v, w)).count() == 1
            })
            .expect("degree sequence guarantees a pendant vertex");
        let anchor = *subset
            .iter()
            .find(|&&w| w != pendant && g.contains_edge(pendant, w))
            .expect("pendant vertex has a neighbor");
        let anchor_degree = subset
            .iter()
            .filter(|&&w| w != anchor && g.contains_edge(anchor, w))
            .count();
        if anchor_degree == 3 {
            count += 1;
        }
    }
    Ok(count)
}

/// Induced edge count and sorted degree sequence of a vertex subset.
fn induced_shape(g: &Graph, subset: &[usize]) -> (usize, [usize; 5]) {
    let mut degrees = [0usize; 5];
    let mut edges = 0;
    for (i, &u) in subset.iter().enumerate() {
        for (j, &v) in subset.iter().enumerate().skip(i + 1) {
            if g.contains_edge(u, v) {
                edges += 1;
                degrees[i] += 1;
                degrees[j] += 1;
            }
        }
    }
    degrees[..subset.len()].sort_unstable();
    (edges, degrees)
}
