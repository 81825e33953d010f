//! Deterministic generators for the four chain k-gon cactus families.
//!
//! A chain k-gon cactus strings `h` cycles of length `k` in a row. In the
//! type-1 and type-2 chains consecutive gons share a cut vertex; in the
//! ortho and meta chains the shared vertices are expanded into bridge
//! edges, so the gons are disjoint and linked by `h − 1` bridges. "Type 1"
//! and "ortho" place the two attachment points of each interior gon on
//! adjacent vertices; "type 2" and "meta" separate them by an offset of at
//! least 2 along the gon.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The four chain k-gon cactus families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Gons share cut vertices; attachments adjacent.
    ChainType1,
    /// Gons share cut vertices; attachments at distance ≥ 2.
    ChainType2,
    /// Gons linked by bridges; attachments adjacent.
    OrthoChain,
    /// Gons linked by bridges; attachments at distance ≥ 2.
    MetaChain,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::ChainType1,
        Family::ChainType2,
        Family::OrthoChain,
        Family::MetaChain,
    ];

    /// Name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Family::ChainType1 => "chain1",
            Family::ChainType2 => "chain2",
            Family::OrthoChain => "ortho",
            Family::MetaChain => "meta",
        }
    }

    /// Whether the family separates attachments by a configurable offset.
    pub fn uses_offset(self) -> bool {
        matches!(self, Family::ChainType2 | Family::MetaChain)
    }

    /// Smallest legal gon size: offset families need room for separation 2.
    pub fn min_gon_size(self) -> usize {
        if self.uses_offset() {
            4
        } else {
            3
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family {s:?}")))
    }
}

/// A validated description of one chain k-gon cactus: family, gon size `k`,
/// gon count `h`, and for offset families the attachment separation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    k: usize,
    h: usize,
    offset: Option<usize>,
}

impl FamilySpec {
    /// Validates a spec. `offset` is only accepted for type-2 and meta
    /// chains, must lie in `[2, k − 2]`, and defaults to `⌊k/2⌋`.
    pub fn new(family: Family, k: usize, h: usize, offset: Option<usize>) -> Result<Self> {
        if k < family.min_gon_size() {
            return Err(Error::InvalidSpec(format!(
                "family {family} requires k >= {}, got k = {k}",
                family.min_gon_size()
            )));
        }
        if h < 1 {
            return Err(Error::InvalidSpec("gon count h must be at least 1".into()));
        }
        if let Some(off) = offset {
            if !family.uses_offset() {
                return Err(Error::InvalidSpec(format!(
                    "family {family} does not take an offset"
                )));
            }
            if off < 2 || off > k - 2 {
                return Err(Error::InvalidSpec(format!(
                    "offset must lie in [2, {}], got {off}",
                    k - 2
                )));
            }
        }
        Ok(FamilySpec { family, k, h, offset })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Gon size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Gon count.
    pub fn h(&self) -> usize {
        self.h
    }

    pub fn offset(&self) -> Option<usize> {
        self.offset
    }

    /// Position of the forward attachment within each gon's cyclic labeling:
    /// 1 for adjacent-attachment families, the offset (default `⌊k/2⌋`) for
    /// the others.
    pub fn attachment_position(&self) -> usize {
        if self.family.uses_offset() {
            self.offset.unwrap_or(self.k / 2)
        } else {
            1
        }
    }

    /// Vertex count of the generated graph.
    pub fn vertex_count(&self) -> usize {
        match self.family {
            Family::ChainType1 | Family::ChainType2 => self.h * (self.k - 1) + 1,
            Family::OrthoChain | Family::MetaChain => self.h * self.k,
        }
    }

    /// Edge count of the generated graph.
    pub fn edge_count(&self) -> usize {
        match self.family {
            Family::ChainType1 | Family::ChainType2 => self.h * self.k,
            Family::OrthoChain | Family::MetaChain => self.h * self.k + self.h - 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={} h={}", self.family, self.k, self.h)?;
        if let Some(off) = self.offset {
            write!(f, " offset={off}")?;
        }
        Ok(())
    }
}

/// Builds the chain k-gon cactus described by `spec`.
///
/// `h = 1` yields a bare k-cycle. The result is always connected, simple,
/// and a cactus.
pub fn generate(spec: &FamilySpec) -> Graph {
    let (k, h) = (spec.k(), spec.h());
    let exit = spec.attachment_position();
    match spec.family() {
        Family::ChainType1 | Family::ChainType2 => shared_vertex_chain(k, h, exit),
        Family::OrthoChain | Family::MetaChain => bridged_chain(k, h, exit),
    }
    .expect("family construction yields a valid simple graph")
}

/// Each gon reuses the previous gon's exit vertex as its own position 0.
fn shared_vertex_chain(k: usize, h: usize, exit: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(h * k);
    let mut next = 1usize;
    let mut entry = 0usize;
    for _ in 0..h {
        let mut ring = Vec::with_capacity(k);
        ring.push(entry);
        for _ in 1..k {
            ring.push(next);
            next += 1;
        }
        for i in 0..k {
            edges.push((ring[i], ring[(i + 1) % k]));
        }
        entry = ring[exit];
    }
    Graph::from_edges(next, edges)
}

/// Disjoint gons on consecutive vertex ranges, linked by bridges from each
/// gon's exit position to the next gon's position 0.
fn bridged_chain(k: usize, h: usize, exit: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(h * k + h - 1);
    for gon in 0..h {
        let base = gon * k;
        for i in 0..k {
            edges.push((base + i, base + (i + 1) % k));
        }
        if gon + 1 < h {
            edges.push((base + exit, (gon + 1) * k));
        }
    }
    Graph::from_edges(h * k, edges)
}
