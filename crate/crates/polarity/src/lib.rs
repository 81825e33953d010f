//! Wiener polarity index of cactus graphs.
//!
//! The Wiener polarity index `W_p(G)` of a connected graph is the number of
//! unordered vertex pairs at distance exactly 3. This crate computes it two
//! ways:
//!
//! * [`distance::count_distance3_pairs`] — a brute-force oracle that runs a
//!   radius-3 breadth-first search from every vertex. Works on any connected
//!   graph and serves as ground truth.
//! * [`formula::wp_cactus`] — a near-linear closed formula for cactus graphs
//!   (connected graphs in which no edge lies in more than one cycle),
//!   evaluated from the block decomposition: a degree term over the edges
//!   minus corrections for short cycles and for triangles/quadrangles with
//!   pendant neighbors.
//!
//! Both routes are registered as named strategies in [`method`] and can be
//! selected at runtime; on cactus input they must agree exactly, which is the
//! correctness claim the test suite hammers on.
//!
//! The crate also ships deterministic generators for the four chain k-gon
//! cactus families ([`family`]), closed-form evaluators for their polarity
//! indices ([`formula::closed_form`]), a seeded random-cactus generator for
//! verification harnesses ([`random`]), and the classic linear boiling-point
//! model `a·W + b·W_p + c` built on the Wiener index
//! ([`distance::wiener_index`]).
//!
//! # Example
//!
//! ```
//! use polarity::graph::Graph;
//! use polarity::{distance, formula};
//!
//! // A hexagon: three antipodal pairs at distance 3.
//! let g = Graph::from_edge_list("6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n").unwrap();
//! assert_eq!(distance::count_distance3_pairs(&g).unwrap(), 3);
//! assert_eq!(formula::wp_cactus(&g).unwrap(), 3);
//! ```

pub mod blocks;
pub mod distance;
pub mod error;
pub mod family;
pub mod formula;
pub mod graph;
pub mod method;
pub mod random;

pub use blocks::{Block, BlockDecomposition, CactusCensus};
pub use error::{Error, Result};
pub use family::{Family, FamilySpec};
pub use graph::Graph;
pub use random::RandomCactusParams;
