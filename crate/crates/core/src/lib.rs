//! Hamiltonian colorings of block graphs.
//!
//! A hamiltonian coloring assigns non-negative integers to the vertices of a
//! connected graph of order `n` so that `D(u, v) + |c(u) - c(v)| >= n - 1`
//! for every pair of distinct vertices, where `D` is the detour (longest
//! path) distance. The hamiltonian chromatic number `hc(G)` is the smallest
//! possible maximum color; colors start at 0, so `hc` is a span.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`graph`] and [`blocks`]: simple connected graphs, the edge-list text
//!   format, and the block / cut-vertex decomposition.
//! * [`detour`]: detour distances on block graphs, the detour center, the
//!   level function and the branch structure hanging off the center.
//! * [`coloring`]: coloring verification, the level-based lower bound,
//!   ordering checks, the ordering-to-coloring recurrence and the
//!   branch-alternating construction for star-shaped graphs.
//! * [`families`]: generators, closed forms and explicit orderings for
//!   level-wise regular block graphs, extended stars of blocks, center
//!   gluing and seeded random block graphs.
//! * [`oracle`]: exhaustive detour distances and exact `hc` by permutation
//!   search, used as ground truth at small sizes.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod blocks;
pub mod coloring;
pub mod detour;
pub mod families;
pub mod graph;
pub mod oracle;

pub use blocks::BlockDecomposition;
pub use coloring::{ColoringCertificate, Ordering};
pub use detour::{DetourProfile, DetourTable};
pub use graph::{Graph, GraphError};
