//! Runtime-selectable strategies for computing the Wiener polarity index.
//!
//! Each algorithm sits behind [`WpMethod`] and is registered by name in
//! [`METHODS`], so callers (the CLI's `--method` flag, the verification
//! harness) can pick one at runtime and cross-check implementations against
//! each other.

use crate::distance;
use crate::error::Result;
use crate::formula;
use crate::graph::Graph;

/// A named algorithm computing the Wiener polarity index of a graph.
pub trait WpMethod: Sync {
    /// Registry name used for runtime selection.
    fn name(&self) -> &'static str;

    /// One-line summary for help text.
    fn description(&self) -> &'static str;

    /// Computes the number of unordered vertex pairs at distance exactly 3.
    fn wiener_polarity(&self, g: &Graph) -> Result<u64>;
}

/// Near-linear closed formula over the block decomposition. Cactus only.
pub struct FormulaMethod;

impl WpMethod for FormulaMethod {
    fn name(&self) -> &'static str {
        "formula"
    }

    fn description(&self) -> &'static str {
        "closed formula over the block decomposition (cactus graphs only)"
    }

    fn wiener_polarity(&self, g: &Graph) -> Result<u64> {
        formula::wp_cactus(g)
    }
}

/// Brute-force radius-3 breadth-first search from every vertex. Works on any
/// connected graph; the ground truth the formula is checked against.
pub struct BfsMethod;

impl WpMethod for BfsMethod {
    fn name(&self) -> &'static str {
        "bfs"
    }

    fn description(&self) -> &'static str {
        "truncated breadth-first counting of distance-3 pairs (any connected graph)"
    }

    fn wiener_polarity(&self, g: &Graph) -> Result<u64> {
        distance::count_distance3_pairs(g)
    }
}

/// All registered methods.
pub static METHODS: &[&dyn WpMethod] = &[&FormulaMethod, &BfsMethod];

/// Looks up a registered method by name.
pub fn by_name(name: &str) -> Option<&'static dyn WpMethod> {
    METHODS.iter().copied().find(|m| m.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn registry_lookup() {
        assert_eq!(by_name("formula").unwrap().name(), "formula");
        assert_eq!(by_name("bfs").unwrap().name(), "bfs");
        assert!(by_name("magic").is_none());
        assert_eq!(METHODS.len(), 2);
    }

    #[test]
    fn methods_agree_on_a_cactus() {
        let g = Graph::from_edge_list("6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n").unwrap();
        let values: Vec<u64> = METHODS
            .iter()
            .map(|m| m.wiener_polarity(&g).unwrap())
            .collect();
        assert_eq!(values, vec![3, 3]);
    }

    #[test]
    fn only_bfs_accepts_non_cactus_input() {
        let k4 =
            Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            by_name("formula").unwrap().wiener_polarity(&k4),
            Err(Error::NotCactus)
        );
        assert_eq!(by_name("bfs").unwrap().wiener_polarity(&k4), Ok(0));
    }
}
