//! Simple undirected connected graphs and the edge-list text format.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

/// Errors raised while building or parsing a [`Graph`].
///
/// `line` is the 1-based line of the edge-list document, or the 1-based edge
/// index when the graph is built from an edge iterator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    Empty,
    InvalidToken {
        line: usize,
        token: String,
    },
    WrongArity {
        line: usize,
        found: usize,
    },
    Loop {
        line: usize,
        vertex: usize,
    },
    DuplicateEdge {
        line: usize,
        u: usize,
        v: usize,
    },
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    /// `component` holds the vertices of the first component not containing
    /// vertex 0.
    Disconnected {
        component: Vec<usize>,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Empty => write!(f, "graph has no vertices"),
            GraphError::InvalidToken { line, token } => {
                write!(f, "line {line}: `{token}` is not a vertex id")
            }
            GraphError::WrongArity { line, found } => {
                write!(
                    f,
                    "line {line}: expected two vertex ids, found {found} tokens"
                )
            }
            GraphError::Loop { line, vertex } => write!(f, "line {line}: loop at vertex {vertex}"),
            GraphError::DuplicateEdge { line, u, v } => {
                write!(f, "line {line}: duplicate edge {u}-{v}")
            }
            GraphError::VertexOutOfRange { line, vertex, n } => {
                write!(f, "line {line}: vertex {vertex} out of range for order {n}")
            }
            GraphError::Disconnected { component } => {
                write!(
                    f,
                    "graph is disconnected; component without vertex 0: {component:?}"
                )
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple, undirected, connected graph on the vertices `0..n`.
///
/// Neighbor lists are sorted, so every traversal is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph of order `n` from an edge list, rejecting loops,
    /// duplicate edges, out-of-range ids and disconnected results.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let numbered = edges.into_iter().enumerate().map(|(i, e)| (i + 1, e));
        Self::build(n, numbered)
    }

    fn build<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, (usize, usize))>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut keyed = Vec::new();
        for (line, (u, v)) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { line, vertex: u });
            }
            keyed.push(((u.min(v), u.max(v)), line));
        }
        // report a duplicate at its second occurrence
        keyed.sort_unstable();
        if let Some(w) = keyed.windows(2).find(|w| w[0].0 == w[1].0) {
            let ((u, v), line) = w[1];
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        let mut adjacency = vec![Vec::new(); n];
        for &((u, v), _) in &keyed {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let graph = Graph {
            adjacency,
            edge_count: keyed.len(),
        };
        graph.check_connected()?;
        Ok(graph)
    }

    fn check_connected(&self) -> Result<(), GraphError> {
        let labels = self.component_labels();
        if labels.iter().all(|&c| c == 0) {
            return Ok(());
        }
        let component = (0..self.order()).filter(|&v| labels[v] == 1).collect();
        Err(GraphError::Disconnected { component })
    }

    fn component_labels(&self) -> Vec<usize> {
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for root in 0..n {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = next;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Sorted degree sequence, a cheap isomorphism invariant.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }
}

/// Parses the edge-list format: one edge per line as two base-10 vertex ids
/// separated by whitespace; blank lines and lines starting with `#` are
/// ignored. The order is one more than the largest id that appears.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut max_id = None::<usize>;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(GraphError::WrongArity {
                line,
                found: tokens.len(),
            });
        }
        let mut ids = [0usize; 2];
        for (slot, token) in ids.iter_mut().zip(&tokens) {
            *slot = token.parse().map_err(|_| GraphError::InvalidToken {
                line,
                token: String::from(*token),
            })?;
        }
        let [u, v] = ids;
        if u == v {
            return Err(GraphError::Loop { line, vertex: u });
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((line, (u, v)));
    }
    let n = max_id.map_or(0, |m| m + 1);
    Graph::build(n, edges)
}

/// Writes the edge-list format with edges sorted lexicographically.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
