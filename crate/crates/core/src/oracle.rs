//! Exhaustive ground truth for small graphs: detour distances by simple-path
//! search, and exact `hc` by searching vertex orderings.
//!
//! Every hamiltonian coloring, read in nondecreasing color order, induces an
//! ordering of the vertices, and along a fixed ordering the greedy coloring
//! `c(u_j) = max(c(u_{j-1}), max_{i<j} c(u_i) + n - 1 - D(u_i, u_j))` is
//! pointwise minimal. The minimum greedy span over all `n!` orderings is
//! therefore `hc`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::coloring::Ordering;
use crate::detour::{DetourProfile, DetourTable};
use crate::graph::Graph;

/// Default order limit for exhaustive detour search.
pub const DETOUR_LIMIT: usize = 15;
/// Default order limit for [`exact_hc`].
pub const EXACT_DEFAULT_LIMIT: usize = 9;
/// Largest order [`exact_hc`] accepts, whatever the override.
pub const EXACT_HARD_LIMIT: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<W> {
    pub value: u64,
    pub witness: W,
    /// Search states visited.
    pub explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    SizeGuard {
        n: usize,
        limit: usize,
        estimated_states: u128,
    },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::SizeGuard {
                n,
                limit,
                estimated_states,
            } => write!(
                f,
                "order {n} exceeds the search limit {limit} (about {estimated_states} states)"
            ),
        }
    }
}

impl core::error::Error for OracleError {}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

fn guard(n: usize, limit: usize) -> Result<(), OracleError> {
    if n > limit {
        return Err(OracleError::SizeGuard {
            n,
            limit,
            estimated_states: factorial(n),
        });
    }
    Ok(())
}

/// Rejects orders above `min(max_n, EXACT_HARD_LIMIT)`.
pub fn exact_guard(n: usize, max_n: usize) -> Result<(), OracleError> {
    guard(n, max_n.min(EXACT_HARD_LIMIT))
}

struct PathSearch<'a> {
    graph: &'a Graph,
    on_path: Vec<bool>,
    path: Vec<usize>,
    explored: u64,
}

impl PathSearch<'_> {
    fn new(graph: &Graph, source: usize) -> PathSearch<'_> {
        let mut on_path = vec![false; graph.order()];
        on_path[source] = true;
        PathSearch {
            graph,
            on_path,
            path: vec![source],
            explored: 0,
        }
    }

    /// Visits every simple path from the source, reporting its end vertex
    /// and length.
    fn walk(&mut self, visit: &mut impl FnMut(usize, usize, &[usize])) {
        self.explored += 1;
        let end = self.path[self.path.len() - 1];
        visit(end, self.path.len() - 1, &self.path);
        for &next in self.graph.neighbors(end) {
            if !self.on_path[next] {
                self.on_path[next] = true;
                self.path.push(next);
                self.walk(visit);
                self.path.pop();
                self.on_path[next] = false;
            }
        }
    }
}

/// Longest simple `u`–`v` path by exhaustive search; the witness is the
/// lexicographically first longest path found by the DFS.
pub fn brute_detour_distance(
    graph: &Graph,
    u: usize,
    v: usize,
    max_n: usize,
) -> Result<OracleResult<Vec<usize>>, OracleError> {
    guard(graph.order(), max_n)?;
    let mut search = PathSearch::new(graph, u);
    let mut best: Option<Vec<usize>> = None;
    search.walk(&mut |end, len, path| {
        if end == v && best.as_ref().is_none_or(|b| len + 1 > b.len()) {
            best = Some(path.to_vec());
        }
    });
    // the graph is connected, so some path reaches v
    let witness = best.unwrap_or_else(|| vec![u]);
    Ok(OracleResult {
        value: (witness.len() - 1) as u64,
        witness,
        explored: search.explored,
    })
}

/// All-pairs detour distances by one exhaustive search per source vertex.
/// Works on any connected graph.
pub fn brute_detour_table(graph: &Graph, max_n: usize) -> Result<DetourTable, OracleError> {
    let n = graph.order();
    guard(n, max_n)?;
    let mut dist = vec![0usize; n * n];
    for source in 0..n {
        let row = &mut dist[source * n..(source + 1) * n];
        PathSearch::new(graph, source).walk(&mut |end, len, _| row[end] = row[end].max(len));
    }
    Ok(DetourTable::from_fn(n, |u, v| dist[u * n + v]))
}

fn required(table: &DetourTable, u: usize, v: usize) -> u64 {
    (table.order() - 1).saturating_sub(table.get(u, v)) as u64
}

/// Greedy colors along `ordering`, indexed by vertex.
pub fn greedy_coloring(table: &DetourTable, ordering: &Ordering) -> Vec<u64> {
    let seq = ordering.as_slice();
    let mut colors = vec![0u64; table.order()];
    for j in 1..seq.len() {
        let v = seq[j];
        colors[v] = seq[..j]
            .iter()
            .map(|&u| colors[u] + required(table, u, v))
            .fold(colors[seq[j - 1]], u64::max);
    }
    colors
}

/// Smallest span of a coloring whose colors are nondecreasing along
/// `ordering`.
pub fn min_span_for_ordering(table: &DetourTable, ordering: &Ordering) -> u64 {
    ordering
        .as_slice()
        .last()
        .map_or(0, |&v| greedy_coloring(table, ordering)[v])
}

/// Best ordering found by [`search_from`]: its greedy span and sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub best: Option<(u64, Vec<usize>)>,
    pub explored: u64,
}

struct SpanSearch<'a> {
    table: &'a DetourTable,
    shared: &'a AtomicU64,
    seq: Vec<usize>,
    colors: Vec<u64>,
    used: Vec<bool>,
    best: Option<(u64, Vec<usize>)>,
    explored: u64,
}

impl SpanSearch<'_> {
    fn local_best(&self) -> u64 {
        self.best.as_ref().map_or(u64::MAX, |b| b.0)
    }

    fn dfs(&mut self) {
        self.explored += 1;
        let n = self.table.order();
        let depth = self.seq.len();
        if depth == n {
            let span = self.colors[depth - 1];
            if span < self.local_best() {
                self.best = Some((span, self.seq.clone()));
                self.shared.fetch_min(span, AtomicOrdering::Relaxed);
            }
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            let mut c = self.colors[depth - 1];
            for (i, &u) in self.seq.iter().enumerate() {
                c = c.max(self.colors[i] + required(self.table, u, v));
            }
            // ties with the shared bound are kept so the lexicographically
            // first minimum survives in every worker
            if c >= self.local_best() || c > self.shared.load(AtomicOrdering::Relaxed) {
                continue;
            }
            self.used[v] = true;
            self.seq.push(v);
            self.colors.push(c);
            self.dfs();
            self.colors.pop();
            self.seq.pop();
            self.used[v] = false;
        }
    }
}

/// Searches every ordering starting at `first` in lexicographic order,
/// pruning prefixes whose partial span reaches the local best or exceeds
/// `shared`, and lowering `shared` on improvement. Several calls with
/// different `first` may run concurrently on one `shared` bound.
pub fn search_from(table: &DetourTable, first: usize, shared: &AtomicU64) -> SearchOutcome {
    let n = table.order();
    let mut used = vec![false; n];
    used[first] = true;
    let mut search = SpanSearch {
        table,
        shared,
        seq: vec![first],
        colors: vec![0],
        used,
        best: None,
        explored: 0,
    };
    search.dfs();
    SearchOutcome {
        best: search.best,
        explored: search.explored,
    }
}

/// Combines per-first-vertex outcomes, listed by first vertex: the minimum
/// span, ties to the earliest first vertex, which is the lexicographically
/// first optimal ordering.
pub fn combine_outcomes(table: &DetourTable, outcomes: &[SearchOutcome]) -> OracleResult<Vec<u64>> {
    let explored = outcomes.iter().map(|o| o.explored).sum();
    let best = outcomes
        .iter()
        .filter_map(|o| o.best.as_ref())
        .min_by_key(|(span, seq)| (*span, seq[0]));
    match best {
        Some((span, seq)) => {
            let ordering = Ordering::new(seq.clone()).expect("search visits permutations");
            OracleResult {
                value: *span,
                witness: greedy_coloring(table, &ordering),
                explored,
            }
        }
        None => OracleResult {
            value: 0,
            witness: vec![0; table.order()],
            explored,
        },
    }
}

/// Exact `hc` of an arbitrary connected graph, detour distances included.
pub fn exact_hc(graph: &Graph, max_n: usize) -> Result<OracleResult<Vec<u64>>, OracleError> {
    exact_guard(graph.order(), max_n)?;
    let table = brute_detour_table(graph, max_n)?;
    exact_hc_with_table(&table, max_n)
}

/// Exact `hc` from a detour table. The witness is the greedy coloring of
/// the lexicographically first optimal ordering.
pub fn exact_hc_with_table(
    table: &DetourTable,
    max_n: usize,
) -> Result<OracleResult<Vec<u64>>, OracleError> {
    let n = table.order();
    exact_guard(n, max_n)?;
    let shared = AtomicU64::new(u64::MAX);
    let outcomes: Vec<SearchOutcome> = (0..n)
        .map(|first| search_from(table, first, &shared))
        .collect();
    Ok(combine_outcomes(table, &outcomes))
}

/// Visits, in lexicographic order, every ordering passing the exact
/// pairwise condition (endpoints included) by extending prefixes and
/// pruning at the first violated pair. The visitor returns `false` to stop.
/// Returns the number of prefixes explored.
pub fn scan_thm2_orderings(
    profile: &DetourProfile,
    table: &DetourTable,
    max_n: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<u64, OracleError> {
    let n = table.order();
    guard(n, max_n)?;
    let mut scan = Thm2Scan {
        profile,
        table,
        seq: Vec::with_capacity(n),
        prefix: Vec::with_capacity(n),
        used: vec![false; n],
        explored: 0,
        stopped: false,
    };
    for first in 0..n {
        if scan.stopped {
            break;
        }
        if !scan.end_allowed(first) {
            continue;
        }
        scan.push(first, 0);
        scan.dfs(&mut visit);
        scan.pop();
    }
    Ok(scan.explored)
}

/// First ordering passing the exact pairwise condition, if any.
pub fn find_thm2_ordering(
    profile: &DetourProfile,
    table: &DetourTable,
    max_n: usize,
) -> Result<OracleResult<Option<Ordering>>, OracleError> {
    let mut found = None;
    let explored = scan_thm2_orderings(profile, table, max_n, |seq| {
        found = Some(seq.to_vec());
        false
    })?;
    let witness = found.map(|seq| Ordering::new(seq).expect("scan visits permutations"));
    Ok(OracleResult {
        value: u64::from(witness.is_some()),
        witness,
        explored,
    })
}

struct Thm2Scan<'a> {
    profile: &'a DetourProfile,
    table: &'a DetourTable,
    seq: Vec<usize>,
    // prefix[j] = sum_{t<j} (L(u_t) + L(u_{t+1}))
    prefix: Vec<i64>,
    used: Vec<bool>,
    explored: u64,
    stopped: bool,
}

impl Thm2Scan<'_> {
    fn end_allowed(&self, v: usize) -> bool {
        let level = self.profile.level(v);
        level == 0 || (self.profile.omega() == 1 && level == self.profile.xi())
    }

    fn ends_match(&self) -> bool {
        let first = self.profile.level(self.seq[0]);
        let last = self.profile.level(self.seq[self.seq.len() - 1]);
        if self.profile.omega() == 1 {
            let xi = self.profile.xi();
            (first == 0 && last == xi) || (first == xi && last == 0)
        } else {
            first == 0 && last == 0
        }
    }

    fn push(&mut self, v: usize, prefix: i64) {
        self.used[v] = true;
        self.seq.push(v);
        self.prefix.push(prefix);
    }

    fn pop(&mut self) {
        if let Some(v) = self.seq.pop() {
            self.used[v] = false;
        }
        self.prefix.pop();
    }

    fn dfs(&mut self, visit: &mut impl FnMut(&[usize]) -> bool) {
        self.explored += 1;
        let n = self.table.order();
        let j = self.seq.len();
        if j == n {
            if self.ends_match() && !visit(&self.seq) {
                self.stopped = true;
            }
            return;
        }
        let (n_i, omega) = (n as i64, self.profile.omega() as i64);
        for v in 0..n {
            if self.stopped {
                return;
            }
            if self.used[v] || (j == n - 1 && !self.end_allowed(v)) {
                continue;
            }
            let prev = self.seq[j - 1];
            let pj = self.prefix[j - 1] + (self.profile.level(prev) + self.profile.level(v)) as i64;
            let ok = (0..j).all(|i| {
                let need = pj - self.prefix[i] - (j - i) as i64 * (n_i - omega) + (n_i - 1);
                self.table.get(self.seq[i], v) as i64 >= need
            });
            if ok {
                self.push(v, pj);
                self.dfs(visit);
                self.pop();
            }
        }
    }
}
