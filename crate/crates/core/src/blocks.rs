//! Blocks (maximal 2-connected subgraphs and bridges), cut vertices and the
//! block–cut tree, via the lowpoint DFS.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

const UNSEEN: usize = usize::MAX;

/// Block decomposition of a connected graph.
///
/// Blocks are sorted vertex lists, and the list of blocks is sorted
/// lexicographically. Bridges are blocks of two vertices. The block–cut tree
/// is the bipartite graph joining each block to the cut vertices it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    vertex_blocks: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn new(graph: &Graph) -> Self {
        let n = graph.order();
        let mut blocks = if n == 1 {
            vec![vec![0]]
        } else {
            biconnected_components(graph)
        };
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort();

        let mut vertex_blocks = vec![Vec::new(); n];
        for (b, block) in blocks.iter().enumerate() {
            for &v in block {
                vertex_blocks[v].push(b);
            }
        }
        let cut_vertices = (0..n).filter(|&v| vertex_blocks[v].len() >= 2).collect();
        BlockDecomposition {
            blocks,
            cut_vertices,
            vertex_blocks,
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.vertex_blocks[v].len() >= 2
    }

    /// Ids of the blocks containing `v`, ascending.
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.vertex_blocks[v]
    }

    /// Edges of the block–cut tree as `(block id, cut vertex)` pairs.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (b, block) in self.blocks.iter().enumerate() {
            edges.extend(
                block
                    .iter()
                    .filter(|&&v| self.is_cut_vertex(v))
                    .map(|&v| (b, v)),
            );
        }
        edges
    }

    pub fn tree_node_count(&self) -> usize {
        self.blocks.len() + self.cut_vertices.len()
    }

    /// Sorted multiset of block orders, used as an isomorphism invariant.
    pub fn block_size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }
}

/// True iff every block induces a complete subgraph.
pub fn is_block_graph(graph: &Graph, decomposition: &BlockDecomposition) -> bool {
    decomposition.blocks().iter().all(|block| {
        block
            .iter()
            .enumerate()
            .all(|(i, &u)| block[i + 1..].iter().all(|&v| graph.has_edge(u, v)))
    })
}

// Iterative Hopcroft–Tarjan with an edge stack.
fn biconnected_components(graph: &Graph) -> Vec<Vec<usize>> {
    let n = graph.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, next) = *frame;
            if next < graph.degree(v) {
                frame.2 += 1;
                let w = graph.neighbors(v)[next];
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if let Some(&(u, _, _)) = stack.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    blocks.push(block);
                }
            }
        }
    }
    blocks
}
