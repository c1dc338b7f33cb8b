//! Detour metrics on block graphs.
//!
//! In a block graph a simple path cannot re-enter a block once it leaves
//! through a cut vertex, and inside a clique it can visit every vertex. The
//! longest `u`–`v` path therefore walks the unique chain of blocks between
//! `u` and `v` and picks up `|B| - 1` edges in each block `B`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::blocks::{is_block_graph, BlockDecomposition};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DetourError {
    /// Some block is not a clique; use the exhaustive oracle instead.
    NotBlockGraph,
    /// The minimum-eccentricity set is neither a vertex nor a whole block.
    CenterShape { center: Vec<usize> },
}

impl fmt::Display for DetourError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetourError::NotBlockGraph => write!(f, "graph is not a block graph"),
            DetourError::CenterShape { center } => {
                write!(
                    f,
                    "detour center {center:?} is neither a vertex nor a block"
                )
            }
        }
    }
}

impl core::error::Error for DetourError {}

/// All-pairs detour distances, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetourTable {
    n: usize,
    dist: Vec<usize>,
}

impl DetourTable {
    /// Detour distances of a block graph from block-chain sums.
    pub fn for_block_graph(
        graph: &Graph,
        decomposition: &BlockDecomposition,
    ) -> Result<Self, DetourError> {
        if !is_block_graph(graph, decomposition) {
            return Err(DetourError::NotBlockGraph);
        }
        let n = graph.order();
        let mut dist = Vec::with_capacity(n * n);
        for source in 0..n {
            dist.extend(block_chain_row(decomposition, n, source));
        }
        Ok(DetourTable { n, dist })
    }

    /// Builds a table from a distance function; `f(u, v)` is queried for
    /// every ordered pair.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut dist = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                dist.push(f(u, v));
            }
        }
        DetourTable { n, dist }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, u: usize) -> usize {
        self.row(u).iter().copied().max().unwrap_or(0)
    }

    /// Largest detour distance over all pairs.
    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

fn block_chain_row(decomposition: &BlockDecomposition, n: usize, source: usize) -> Vec<usize> {
    let mut row = vec![0; n];
    // (vertex, distance so far, block we arrived through)
    let mut stack = vec![(source, 0usize, usize::MAX)];
    while let Some((x, dx, from)) = stack.pop() {
        for &b in decomposition.blocks_of(x) {
            if b == from {
                continue;
            }
            let block = decomposition.block(b);
            let reach = dx + block.len() - 1;
            for &y in block {
                if y == x {
                    continue;
                }
                row[y] = reach;
                if decomposition.is_cut_vertex(y) {
                    stack.push((y, reach, b));
                }
            }
        }
    }
    row
}

/// Detour distance between two vertices of a block graph.
pub fn detour_distance(
    graph: &Graph,
    decomposition: &BlockDecomposition,
    u: usize,
    v: usize,
) -> Result<usize, DetourError> {
    if !is_block_graph(graph, decomposition) {
        return Err(DetourError::NotBlockGraph);
    }
    Ok(block_chain_row(decomposition, graph.order(), u)[v])
}

/// How two vertices sit relative to the detour center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BranchRelation {
    /// Both in one branch.
    Same,
    /// Branches attached at the same central vertex.
    Different,
    /// Branches attached at distinct central vertices.
    Opposite,
    /// At least one of the vertices is central.
    InvolvesCenter,
}

/// A block attached to a central vertex together with everything hanging
/// below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Branch {
    pub anchor: usize,
    pub root_block: usize,
    /// Number of (non-central) vertices in the branch.
    pub size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiDelta {
    pub phi: usize,
    pub delta: usize,
}

/// Center, levels and branch structure of a block graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetourProfile {
    center: Vec<usize>,
    center_block: Option<usize>,
    is_central: Vec<bool>,
    eccentricity: Vec<usize>,
    diameter: usize,
    levels: Vec<usize>,
    total_level: usize,
    xi: usize,
    branches: Vec<Branch>,
    branch_of: Vec<Option<usize>>,
    // next vertex on the block chain toward the center
    attachment: Vec<Option<usize>>,
}

impl DetourProfile {
    pub fn new(
        decomposition: &BlockDecomposition,
        table: &DetourTable,
    ) -> Result<Self, DetourError> {
        let n = table.order();
        let eccentricity: Vec<usize> = (0..n).map(|v| table.eccentricity(v)).collect();
        let radius = eccentricity.iter().copied().min().unwrap_or(0);
        let diameter = eccentricity.iter().copied().max().unwrap_or(0);
        let center: Vec<usize> = (0..n).filter(|&v| eccentricity[v] == radius).collect();

        let center_block = if center.len() >= 2 {
            let found = decomposition.blocks().iter().position(|b| *b == center);
            match found {
                Some(b) => Some(b),
                None => return Err(DetourError::CenterShape { center }),
            }
        } else {
            None
        };

        let mut is_central = vec![false; n];
        for &w in &center {
            is_central[w] = true;
        }
        let levels: Vec<usize> = (0..n)
            .map(|u| center.iter().map(|&w| table.get(w, u)).min().unwrap_or(0))
            .collect();
        let total_level = levels.iter().sum();
        let xi = if center.len() == 1 {
            decomposition
                .blocks_of(center[0])
                .iter()
                .map(|&b| decomposition.block(b).len() - 1)
                .filter(|&s| s > 0)
                .min()
                .unwrap_or(0)
        } else {
            0
        };

        let mut profile = DetourProfile {
            center,
            center_block,
            is_central,
            eccentricity,
            diameter,
            levels,
            total_level,
            xi,
            branches: Vec::new(),
            branch_of: vec![None; n],
            attachment: vec![None; n],
        };
        profile.assign_branches(decomposition);
        Ok(profile)
    }

    fn assign_branches(&mut self, decomposition: &BlockDecomposition) {
        let center = self.center.clone();
        for &anchor in &center {
            for &root_block in decomposition.blocks_of(anchor) {
                if Some(root_block) == self.center_block
                    || decomposition.block(root_block).len() < 2
                {
                    continue;
                }
                let id = self.branches.len();
                let mut size = 0;
                let mut stack = vec![(root_block, anchor)];
                while let Some((b, entry)) = stack.pop() {
                    for &v in decomposition.block(b) {
                        if v == entry {
                            continue;
                        }
                        self.branch_of[v] = Some(id);
                        self.attachment[v] = Some(entry);
                        size += 1;
                        stack.extend(
                            decomposition
                                .blocks_of(v)
                                .iter()
                                .filter(|&&c| c != b)
                                .map(|&c| (c, v)),
                        );
                    }
                }
                self.branches.push(Branch {
                    anchor,
                    root_block,
                    size,
                });
            }
        }
    }

    pub fn order(&self) -> usize {
        self.levels.len()
    }

    /// Central vertices, ascending.
    pub fn center(&self) -> &[usize] {
        &self.center
    }

    /// Number of central vertices.
    pub fn omega(&self) -> usize {
        self.center.len()
    }

    /// The block equal to the center when there are two or more central
    /// vertices.
    pub fn center_block(&self) -> Option<usize> {
        self.center_block
    }

    pub fn is_central(&self, v: usize) -> bool {
        self.is_central[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.levels[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// Sum of all levels.
    pub fn total_level(&self) -> usize {
        self.total_level
    }

    /// Smallest `|B| - 1` over blocks at the central vertex when the center
    /// is a single vertex, 0 otherwise.
    pub fn xi(&self) -> usize {
        self.xi
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.eccentricity[v]
    }

    pub fn detour_diameter(&self) -> usize {
        self.diameter
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    /// Branch id of a non-central vertex.
    pub fn branch_of(&self, v: usize) -> Option<usize> {
        self.branch_of[v]
    }

    /// Central vertex anchoring the branch of `v`; `v` itself if central.
    pub fn anchor(&self, v: usize) -> usize {
        match self.branch_of[v] {
            Some(b) => self.branches[b].anchor,
            None => v,
        }
    }

    /// Alternation class of a non-central vertex: its branch when the
    /// center is a single vertex, its anchor's position in [`Self::center`]
    /// otherwise. Consecutive non-central vertices of an optimal ordering
    /// must lie in distinct classes.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        let b = self.branch_of[v]?;
        if self.omega() == 1 {
            Some(b)
        } else {
            self.center.binary_search(&self.branches[b].anchor).ok()
        }
    }

    pub fn class_count(&self) -> usize {
        if self.omega() == 1 {
            self.branches.len()
        } else {
            self.omega()
        }
    }

    pub fn relation(&self, u: usize, v: usize) -> BranchRelation {
        match (self.branch_of[u], self.branch_of[v]) {
            (Some(a), Some(b)) if a == b => BranchRelation::Same,
            (Some(a), Some(b)) if self.branches[a].anchor == self.branches[b].anchor => {
                BranchRelation::Different
            }
            (Some(_), Some(_)) => BranchRelation::Opposite,
            _ => BranchRelation::InvolvesCenter,
        }
    }

    /// `v` followed by the cut vertices on its block chain toward the
    /// center, ending at its anchoring central vertex.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut chain = vec![v];
        let mut x = v;
        while let Some(up) = self.attachment[x] {
            chain.push(up);
            x = up;
        }
        chain
    }

    /// `phi` is the largest level of a common ancestor (0 when there is
    /// none); `delta` is `omega - 1` for vertices in opposite branches and 0
    /// otherwise.
    pub fn phi_delta(&self, u: usize, v: usize) -> PhiDelta {
        let up = self.ancestors(u);
        let vp = self.ancestors(v);
        let phi = up
            .iter()
            .filter(|t| vp.contains(t))
            .map(|&t| self.levels[t])
            .max()
            .unwrap_or(0);
        let delta = if self.omega() >= 2 && self.relation(u, v) == BranchRelation::Opposite {
            self.omega() - 1
        } else {
            0
        };
        PhiDelta { phi, delta }
    }
}

/// Decomposition, detour table and profile of a block graph.
#[derive(Debug, Clone)]
pub struct BlockGraphAnalysis {
    pub decomposition: BlockDecomposition,
    pub table: DetourTable,
    pub profile: DetourProfile,
}

impl BlockGraphAnalysis {
    pub fn new(graph: &Graph) -> Result<Self, DetourError> {
        let decomposition = BlockDecomposition::new(graph);
        let table = DetourTable::for_block_graph(graph, &decomposition)?;
        let profile = DetourProfile::new(&decomposition, &table)?;
        Ok(BlockGraphAnalysis {
            decomposition,
            table,
            profile,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn analyze(text: &str) -> BlockGraphAnalysis {
        BlockGraphAnalysis::new(&parse_edge_list(text).unwrap()).unwrap()
    }

    const P4: &str = "0 1\n1 2\n2 3";
    const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3";
    const STAR3: &str = "0 1\n0 2\n0 3";
    // triangles {0,1,2}, {0,3,4}, {0,5,6}
    const TRIANGLES: &str = "0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n0 5\n0 6\n5 6";

    #[test]
    fn path_and_clique_distances() {
        let p4 = analyze(P4);
        assert_eq!(p4.table.get(0, 3), 3);
        let k4 = analyze(K4);
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(k4.table.get(u, v), if u == v { 0 } else { 3 });
            }
        }
    }

    #[test]
    fn cross_triangle_distance() {
        let a = analyze(TRIANGLES);
        assert_eq!(a.table.get(1, 3), 4);
        assert_eq!(a.table.get(1, 2), 2);
        assert_eq!(a.table.get(0, 6), 2);
    }

    #[test]
    fn detour_distance_refuses_non_block_graphs() {
        let g = parse_edge_list("0 1\n1 2\n2 3\n3 0").unwrap();
        let d = BlockDecomposition::new(&g);
        assert_eq!(
            detour_distance(&g, &d, 0, 1),
            Err(DetourError::NotBlockGraph)
        );
        let p = parse_edge_list(P4).unwrap();
        assert_eq!(
            detour_distance(&p, &BlockDecomposition::new(&p), 3, 0),
            Ok(3)
        );
    }

    #[test]
    fn star_profile() {
        let a = analyze(STAR3);
        let p = &a.profile;
        assert_eq!(p.center(), [0]);
        assert_eq!(p.omega(), 1);
        assert_eq!(p.xi(), 1);
        assert_eq!(p.levels(), [0, 1, 1, 1]);
        assert_eq!(p.total_level(), 3);
        assert_eq!(p.branch_count(), 3);
        assert_eq!(p.relation(1, 2), BranchRelation::Different);
        assert_eq!(p.relation(0, 2), BranchRelation::InvolvesCenter);
    }

    #[test]
    fn triangles_profile() {
        let a = analyze(TRIANGLES);
        let p = &a.profile;
        assert_eq!(p.center(), [0]);
        assert_eq!(p.xi(), 2);
        assert!((1..7).all(|v| p.level(v) == 2));
        assert_eq!(p.total_level(), 12);
        assert_eq!(p.relation(1, 2), BranchRelation::Same);
        assert_eq!(p.relation(1, 5), BranchRelation::Different);
    }

    #[test]
    fn path_profile_has_block_center() {
        let a = analyze(P4);
        let p = &a.profile;
        assert_eq!(
            (0..4).map(|v| p.eccentricity(v)).collect::<Vec<_>>(),
            [3, 2, 2, 3]
        );
        assert_eq!(p.center(), [1, 2]);
        assert_eq!(p.omega(), 2);
        assert_eq!(p.xi(), 0);
        assert_eq!(p.total_level(), 2);
        assert_eq!(p.relation(0, 3), BranchRelation::Opposite);
        assert_eq!(p.phi_delta(0, 3), PhiDelta { phi: 0, delta: 1 });
    }

    #[test]
    fn phi_of_descendants_of_a_cut_vertex() {
        // center 0 with three branches; branch via 1 has triangle {1,2,7}
        // hanging off level-2 vertex... build: 0-1 bridge, 1-4 bridge, 4 has
        // two pendant leaves 5,6; plus leaves 2,3 at 0 and a second path
        let g = parse_edge_list("0 1\n1 4\n4 5\n4 6\n0 2\n2 7\n7 8\n0 3\n3 9\n9 10").unwrap();
        let a = BlockGraphAnalysis::new(&g).unwrap();
        let p = &a.profile;
        assert_eq!(p.center(), [0]);
        assert_eq!(p.level(4), 2);
        assert_eq!(p.phi_delta(5, 6), PhiDelta { phi: 2, delta: 0 });
        assert_eq!(p.phi_delta(4, 5).phi, 2);
        assert_eq!(p.phi_delta(5, 8), PhiDelta { phi: 0, delta: 0 });
        assert_eq!(p.ancestors(5), [5, 4, 1, 0]);
    }

    #[test]
    fn complete_graph_center_is_everything() {
        let a = analyze(K4);
        assert_eq!(a.profile.center(), [0, 1, 2, 3]);
        assert_eq!(a.profile.total_level(), 0);
        assert_eq!(a.profile.branch_count(), 0);
    }
}
