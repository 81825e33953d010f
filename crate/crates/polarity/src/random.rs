//! Seeded random cactus generation for verification harnesses.
//!
//! The generator grows a cactus one block at a time: starting from a single
//! vertex, it repeatedly picks a uniform attachment vertex and glues on
//! either a fresh cycle or a pendant bridge edge. Every output is a
//! connected cactus by construction, and a fixed seed reproduces the exact
//! edge set. The sampling distribution over cactuses is convenient, not
//! uniform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters for [`generate_random_cactus`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomCactusParams {
    /// Number of blocks (cycles or bridges) to attach.
    pub block_count: usize,
    /// Probability that an attached block is a cycle rather than a bridge.
    pub cycle_probability: f64,
    /// Largest cycle length the generator may draw (uniform in `[3, max]`).
    pub max_cycle_length: usize,
    pub seed: u64,
}

impl RandomCactusParams {
    pub fn validate(&self) -> Result<()> {
        if self.block_count < 1 {
            return Err(Error::InvalidParams("block count must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.cycle_probability) {
            return Err(Error::InvalidParams(format!(
                "cycle probability must lie in [0, 1], got {}",
                self.cycle_probability
            )));
        }
        if self.max_cycle_length < 3 {
            return Err(Error::InvalidParams(format!(
                "max cycle length must be at least 3, got {}",
                self.max_cycle_length
            )));
        }
        Ok(())
    }
}

/// Grows a random connected cactus from a single vertex.
pub fn generate_random_cactus(params: &RandomCactusParams) -> Result<Graph> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut vertex_count = 1usize;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(params.block_count * 2);
    for _ in 0..params.block_count {
        let attach = rng.gen_range(0..vertex_count);
        if rng.gen_bool(params.cycle_probability) {
            let len = rng.gen_range(3..=params.max_cycle_length);
            let first = vertex_count;
            edges.push((attach, first));
            for v in first..first + len - 2 {
                edges.push((v, v + 1));
            }
            edges.push((first + len - 2, attach));
            vertex_count += len - 1;
        } else {
            edges.push((attach, vertex_count));
            vertex_count += 1;
        }
    }
    Ok(Graph::from_edges(vertex_count, edges).expect("grown cactus is a valid simple graph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{biconnected_blocks, is_cactus};

    fn params(block_count: usize, p: f64, max_len: usize, seed: u64) -> RandomCactusParams {
        RandomCactusParams {
            block_count,
            cycle_probability: p,
            max_cycle_length: max_len,
            seed,
        }
    }

    #[test]
    fn single_bridge_is_a_path() {
        let g = generate_random_cactus(&params(1, 0.0, 3, 7)).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn single_forced_triangle() {
        let g = generate_random_cactus(&params(1, 1.0, 3, 7)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            generate_random_cactus(&params(0, 0.5, 5, 1)),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            generate_random_cactus(&params(3, 1.5, 5, 1)),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            generate_random_cactus(&params(3, 0.5, 2, 1)),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn same_seed_reproduces_the_edge_set() {
        let p = params(25, 0.6, 8, 0xfeed);
        let a = generate_random_cactus(&p).unwrap();
        let b = generate_random_cactus(&p).unwrap();
        assert_eq!(a, b);
        let c = generate_random_cactus(&params(25, 0.6, 8, 0xfeee)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn always_a_connected_cactus() {
        for seed in 0..1000 {
            let g = generate_random_cactus(&params(1 + (seed as usize % 30), 0.7, 9, seed))
                .unwrap();
            assert_eq!(g.is_connected(), Ok(true), "seed {seed}");
            assert_eq!(is_cactus(&g), Ok(true), "seed {seed}");
        }
    }

    #[test]
    fn cyclomatic_number_counts_cycle_blocks() {
        for seed in [3u64, 17, 99] {
            let g = generate_random_cactus(&params(40, 0.5, 7, seed)).unwrap();
            let bd = biconnected_blocks(&g).unwrap();
            let cycle_blocks = bd.blocks.iter().filter(|b| b.is_cycle()).count();
            assert_eq!(
                cycle_blocks,
                g.edge_count() + 1 - g.vertex_count(),
                "seed {seed}"
            );
        }
    }
}
