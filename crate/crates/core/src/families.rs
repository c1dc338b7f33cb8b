//! Block graph families with closed-form `hc` values and explicit orderings:
//! level-wise regular graphs `G^1` and `G^{m+1}`, symmetric block graphs,
//! extended stars of blocks, one-point unions, stars and paths. Also center
//! gluing and seeded random block graphs.
//!
//! Generated graphs are numbered breadth-first from the center, children of
//! a vertex consecutively, so the orderings below are plain index formulas.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{color_from_ordering, lower_bound, ColoringCertificate, Ordering};
use crate::detour::BlockGraphAnalysis;
use crate::graph::Graph;

/// Largest order a family spec may generate.
pub const MAX_ORDER: usize = 100_000;

/// One level of a level-wise regular block graph: every vertex of the
/// previous level gets `blocks_per_vertex` (`k_i`) new blocks, each adding
/// `vertices_per_block` (`m_i`) vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LevelSpec {
    pub blocks_per_vertex: usize,
    pub vertices_per_block: usize,
}

impl LevelSpec {
    pub const fn new(blocks_per_vertex: usize, vertices_per_block: usize) -> Self {
        LevelSpec {
            blocks_per_vertex,
            vertices_per_block,
        }
    }

    fn children(&self) -> usize {
        self.blocks_per_vertex * self.vertices_per_block
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(tag = "family", rename_all = "snake_case")
)]
pub enum FamilySpec {
    /// Levels rooted at a single central vertex.
    LevelWiseG1 {
        levels: Vec<LevelSpec>,
    },
    /// Levels rooted at each vertex of a central clique of `m + 1` vertices.
    LevelWiseGm1 {
        m: usize,
        levels: Vec<LevelSpec>,
    },
    /// `B_{p+1,k+1}(d)`: blocks `K_{p+1}`, every cut vertex in `k + 1`
    /// blocks, diameter `d`.
    Symmetric {
        p: usize,
        k: usize,
        d: usize,
    },
    /// `S^k_{m,p}`: `k` arms of `m` cliques `K_p` at a common vertex.
    ExtendedStarOfBlocks {
        m: usize,
        p: usize,
        k: usize,
    },
    /// `K_p^k`: `k` copies of `K_p` sharing one vertex.
    OnePointUnion {
        p: usize,
        k: usize,
    },
    Star {
        k: usize,
    },
    Path {
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    InvalidParameter {
        family: &'static str,
        reason: &'static str,
    },
    TooLarge {
        limit: usize,
    },
    /// Input `index` of a gluing is not a block graph.
    NotBlockGraph {
        index: usize,
    },
    /// Input `index` of a gluing has a central block rather than a vertex.
    CenterBlock {
        index: usize,
        omega: usize,
    },
    NoInputs,
    /// Orderings handed to [`glued_ordering`] do not match the inputs.
    MismatchedOrderings,
    /// The index formulas of an ordering do not produce a permutation.
    OrderingCollision,
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::InvalidParameter { family, reason } => write!(f, "{family}: {reason}"),
            FamilyError::TooLarge { limit } => write!(f, "family order exceeds {limit} vertices"),
            FamilyError::NotBlockGraph { index } => write!(f, "input {index} is not a block graph"),
            FamilyError::CenterBlock { index, omega } => {
                write!(
                    f,
                    "input {index} has {omega} central vertices, gluing needs exactly one"
                )
            }
            FamilyError::NoInputs => write!(f, "nothing to glue"),
            FamilyError::MismatchedOrderings => {
                write!(f, "orderings do not match the glued inputs")
            }
            FamilyError::OrderingCollision => write!(f, "ordering formulas are not a permutation"),
        }
    }
}

impl core::error::Error for FamilyError {}

fn invalid(family: &'static str, reason: &'static str) -> FamilyError {
    FamilyError::InvalidParameter { family, reason }
}

fn check_levels(family: &'static str, levels: &[LevelSpec]) -> Result<(), FamilyError> {
    if levels.is_empty() {
        return Err(invalid(family, "at least one level is required"));
    }
    if levels.iter().any(|l| l.blocks_per_vertex == 0) {
        return Err(invalid(family, "k_i must be at least 1"));
    }
    if levels.iter().any(|l| l.vertices_per_block < 2) {
        return Err(invalid(family, "m_i must be at least 2"));
    }
    Ok(())
}

/// `P_i = prod_{j <= i} k_j m_j` for `i = 1..=r`, checked against
/// [`MAX_ORDER`].
fn level_products(levels: &[LevelSpec]) -> Result<Vec<usize>, FamilyError> {
    let mut products = Vec::with_capacity(levels.len());
    let mut acc = 1usize;
    for level in levels {
        acc = acc
            .checked_mul(level.children())
            .filter(|&p| p <= MAX_ORDER)
            .ok_or(FamilyError::TooLarge { limit: MAX_ORDER })?;
        products.push(acc);
    }
    Ok(products)
}

fn within_limit(n: Option<usize>) -> Result<usize, FamilyError> {
    n.filter(|&n| n <= MAX_ORDER)
        .ok_or(FamilyError::TooLarge { limit: MAX_ORDER })
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::LevelWiseG1 { .. } => "level_wise_g1",
            FamilySpec::LevelWiseGm1 { .. } => "level_wise_gm1",
            FamilySpec::Symmetric { .. } => "symmetric",
            FamilySpec::ExtendedStarOfBlocks { .. } => "extended_star_of_blocks",
            FamilySpec::OnePointUnion { .. } => "one_point_union",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Path { .. } => "path",
        }
    }

    /// Checks the parameter constraints and returns the order of the graph.
    pub fn validate(&self) -> Result<usize, FamilyError> {
        let name = self.name();
        match self {
            FamilySpec::LevelWiseG1 { levels } => {
                check_levels(name, levels)?;
                if levels[0].blocks_per_vertex < 2 {
                    return Err(invalid(name, "k_1 must be at least 2"));
                }
                let total: usize = level_products(levels)?.iter().sum();
                within_limit(total.checked_add(1))
            }
            FamilySpec::LevelWiseGm1 { m, levels } => {
                if *m == 0 {
                    return Err(invalid(name, "m must be at least 1"));
                }
                check_levels(name, levels)?;
                let total: usize = level_products(levels)?.iter().sum();
                within_limit(
                    (m + 1)
                        .checked_mul(total)
                        .and_then(|t| t.checked_add(m + 1)),
                )
            }
            FamilySpec::Symmetric { p, k, d } => {
                if *p < 2 || *k < 1 || *d < 2 {
                    return Err(invalid(name, "requires p >= 2, k >= 1, d >= 2"));
                }
                self.as_level_wise().validate()
            }
            FamilySpec::ExtendedStarOfBlocks { m, p, k } => {
                if *m < 2 || *p < 3 || *k < 3 {
                    return Err(invalid(name, "requires m >= 2, p >= 3, k >= 3"));
                }
                within_limit(
                    k.checked_mul(*m)
                        .and_then(|x| x.checked_mul(p - 1))
                        .and_then(|x| x.checked_add(1)),
                )
            }
            FamilySpec::OnePointUnion { p, k } => {
                if *p < 2 || *k < 2 {
                    return Err(invalid(name, "requires p >= 2, k >= 2"));
                }
                within_limit(k.checked_mul(p - 1).and_then(|x| x.checked_add(1)))
            }
            FamilySpec::Star { k } => {
                if *k < 1 {
                    return Err(invalid(name, "requires k >= 1"));
                }
                within_limit(k.checked_add(1))
            }
            FamilySpec::Path { n } => {
                if *n < 2 {
                    return Err(invalid(name, "requires n >= 2"));
                }
                within_limit(Some(*n))
            }
        }
    }

    /// The level-wise spec a symmetric block graph corresponds to:
    /// `G^1` with levels `(k+1, p), (k, p), ...` when `d` is even and
    /// `G^{p+1}` with `(d-1)/2` levels `(k, p)` when `d` is odd. Other specs
    /// are returned unchanged.
    pub fn as_level_wise(&self) -> FamilySpec {
        match *self {
            FamilySpec::Symmetric { p, k, d } if d % 2 == 0 => {
                let mut levels = vec![LevelSpec::new(k, p); d / 2];
                levels[0].blocks_per_vertex = k + 1;
                FamilySpec::LevelWiseG1 { levels }
            }
            FamilySpec::Symmetric { p, k, d } => FamilySpec::LevelWiseGm1 {
                m: p,
                levels: vec![LevelSpec::new(k, p); (d - 1) / 2],
            },
            _ => self.clone(),
        }
    }
}

/// Why a formula value might not be `hc`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(tag = "kind", rename_all = "snake_case")
)]
pub enum Caveat {
    /// Fewer than three branches at the center.
    FewBranches { count: usize },
    /// Parameters outside the range the closed form is stated for.
    OutsideStatedRange,
    /// The value is the level lower bound, not a closed form for `hc`.
    BoundOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaValue {
    pub value: i64,
    pub caveats: Vec<Caveat>,
}

fn few_branches(count: usize) -> Vec<Caveat> {
    if count < 3 {
        vec![Caveat::FewBranches { count }]
    } else {
        Vec::new()
    }
}

/// `(sum P_i, sum P_i S_i)` with `S_i = m_1 + ... + m_i`.
fn level_sums(levels: &[LevelSpec]) -> (i64, i64) {
    let mut product = 1i64;
    let mut depth = 0i64;
    let (mut total, mut weighted) = (0i64, 0i64);
    for level in levels {
        product *= level.children() as i64;
        depth += level.vertices_per_block as i64;
        total += product;
        weighted += product * depth;
    }
    (total, weighted)
}

/// `Phi_r(x) = 1 + x + ... + x^{r-1}`.
fn phi(r: usize, x: i64) -> i64 {
    (0..r)
        .fold((0i64, 1i64), |(sum, power), _| (sum + power, power * x))
        .0
}

/// Closed-form `hc` of the family. The value is computed, not trusted:
/// [`FamilyReport::agreement`] tells whether it is realized.
pub fn family_hc_formula(spec: &FamilySpec) -> Result<FormulaValue, FamilyError> {
    spec.validate()?;
    let formula = match spec {
        FamilySpec::LevelWiseG1 { levels } => {
            let (total, weighted) = level_sums(levels);
            let m1 = levels[0].vertices_per_block as i64;
            FormulaValue {
                value: total * total - 2 * weighted + m1,
                caveats: few_branches(levels[0].blocks_per_vertex),
            }
        }
        FamilySpec::LevelWiseGm1 { m, levels } => {
            let (total, weighted) = level_sums(levels);
            let (m, w) = (*m as i64, *m as i64 + 1);
            FormulaValue {
                value: (m + w * total) * (w * total) - 2 * w * weighted,
                caveats: few_branches((m as usize + 1) * levels[0].blocks_per_vertex),
            }
        }
        &FamilySpec::Symmetric { p, k, d } => {
            let r = d / 2;
            let (p, k) = (p as i64, k as i64);
            let x = k * p;
            let f = phi(r, x);
            let r = r as i64;
            let tail = 2 * (f - r) / (x - 1);
            let value = if d % 2 == 0 {
                p * p * (k + 1) * (f * ((k + 1) * f - 2 * r) + tail) + p
            } else {
                k * p * p * (p + 1) * (f * (k * (p + 1) * f - 2 * r + 1) + tail)
            };
            let mut caveats = Vec::new();
            if d < 3 {
                caveats.push(Caveat::OutsideStatedRange);
            }
            let branches = if d % 2 == 0 { k + 1 } else { k * (p + 1) };
            caveats.extend(few_branches(branches as usize));
            FormulaValue { value, caveats }
        }
        &FamilySpec::ExtendedStarOfBlocks { m, p, k } => {
            let (m, p, k) = (m as i64, p as i64, k as i64);
            FormulaValue {
                value: k * m * (p - 1) * (p - 1) * (k * m - m - 1) + p - 1,
                caveats: Vec::new(),
            }
        }
        &FamilySpec::OnePointUnion { p, k } => {
            let (p, k) = (p as i64, k as i64);
            let total = k * (p - 1);
            FormulaValue {
                value: total * total - 2 * total * (p - 1) + (p - 1),
                caveats: few_branches(k as usize),
            }
        }
        &FamilySpec::Star { k } => {
            let k = k as i64;
            FormulaValue {
                value: (k - 1) * (k - 1),
                caveats: few_branches(k as usize),
            }
        }
        &FamilySpec::Path { n } => {
            let n = n as i64;
            let value = if n % 2 == 1 {
                let h = (n - 1) / 2;
                (n - 1) * (n - 1) - 2 * h * (h + 1) + 1
            } else {
                let h = n / 2 - 1;
                (n - 1) * (n - 2) - 2 * h * (h + 1)
            };
            let mut caveats = vec![Caveat::BoundOnly];
            if n > 2 {
                caveats.push(Caveat::FewBranches { count: 2 });
            }
            FormulaValue { value, caveats }
        }
    };
    Ok(formula)
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            n,
            edges: Vec::new(),
        }
    }

    fn fresh(&mut self, count: usize) -> usize {
        let first = self.n;
        self.n += count;
        first
    }

    fn clique(&mut self, members: &[usize]) {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                self.edges.push((u, v));
            }
        }
    }

    fn finish(self) -> Graph {
        Graph::from_edges(self.n, self.edges)
            .expect("generated family graphs are simple and connected")
    }
}

/// A level-wise graph with `roots` central vertices `0..roots` and, per
/// root, its non-central vertices at the proof positions
/// `s - 1 = idx + sum_{t > l} P_t` (`idx` the mixed-radix child index with
/// the first level varying fastest).
struct LevelWise {
    graph: Graph,
    positions: Vec<Vec<usize>>,
}

fn level_wise(roots: usize, levels: &[LevelSpec]) -> LevelWise {
    let mut builder = Builder::new(roots);
    if roots >= 2 {
        builder.clique(&(0..roots).collect::<Vec<_>>());
    }
    let mut products = vec![1usize];
    for level in levels {
        products.push(products[products.len() - 1] * level.children());
    }
    let per_root: usize = products[1..].iter().sum();
    let mut positions = vec![vec![usize::MAX; per_root]; roots];
    // tail[l] = sum_{t > l} P_t
    let mut tail = vec![0usize; levels.len() + 1];
    for l in (0..levels.len()).rev() {
        tail[l] = tail[l + 1] + products[l + 1];
    }

    // (vertex, root, idx)
    let mut frontier: Vec<(usize, usize, usize)> = (0..roots).map(|t| (t, t, 0)).collect();
    for (depth, level) in levels.iter().enumerate() {
        let k = level.blocks_per_vertex;
        let stride = products[depth];
        let mut next = Vec::with_capacity(frontier.len() * level.children());
        for &(parent, root, idx) in &frontier {
            let base = builder.fresh(level.children());
            for b in 0..k {
                let mut members = vec![parent];
                members.extend((b..level.children()).step_by(k).map(|a| base + a));
                builder.clique(&members);
            }
            for a in 0..level.children() {
                let child_idx = idx + a * stride;
                positions[root][child_idx + tail[depth + 1]] = base + a;
                next.push((base + a, root, child_idx));
            }
        }
        frontier = next;
    }
    LevelWise {
        graph: builder.finish(),
        positions,
    }
}

fn level_wise_g1(levels: &[LevelSpec]) -> (Graph, Vec<usize>) {
    let built = level_wise(1, levels);
    let mut seq = vec![0];
    seq.extend(&built.positions[0]);
    (built.graph, seq)
}

/// `u_0 = w^m`, then `u_j = u^t_s` with `s = ceil(j / (m+1))`, then
/// `w^0, ..., w^{m-1}`.
///
/// As printed, `t = j mod (m+1)`: that puts `u_1` under `w^m = u_0` and
/// `u_{n-m-1}` under `w^0 = u_{n-m}`, so both boundary steps stay inside one
/// branch. The default takes `t = (j-1) mod (m+1)`, which keeps every
/// consecutive pair in opposite branches.
fn level_wise_gm1(m: usize, levels: &[LevelSpec], as_printed: bool) -> (Graph, Vec<usize>) {
    let built = level_wise(m + 1, levels);
    let per_root = built.positions[0].len();
    let mut seq = vec![m];
    for j in 1..=(m + 1) * per_root {
        let t = if as_printed {
            j % (m + 1)
        } else {
            (j - 1) % (m + 1)
        };
        let s = j.div_ceil(m + 1);
        seq.push(built.positions[t][s - 1]);
    }
    seq.extend(0..m);
    (built.graph, seq)
}

/// Id of `v^l_{i,j}` (1-based `l, i, j`) in the breadth-first numbering.
fn star_vertex(k: usize, p: usize, l: usize, i: usize, j: usize) -> usize {
    1 + (i - 1) * k * (p - 1) + (l - 1) * (p - 1) + (j - 1)
}

/// Position of `v^l_{i,j}` in the extended-star ordering.
fn star_position(m: usize, p: usize, k: usize, l: usize, i: usize, j: usize) -> usize {
    let row = 2 * k * (p - 1);
    let odd_l = l % 2 == 1;
    if k.is_multiple_of(2) {
        let ii = if odd_l { m - i } else { i - 1 };
        return ii * k * (p - 1) + (j - 1) * k + (l - 1);
    }
    // near half, middle row (odd m only), far half
    let (near, middle) = if m % 2 == 1 {
        (i < m.div_ceil(2), i == m.div_ceil(2))
    } else {
        (i <= m / 2, false)
    };
    if middle {
        (i - 1) * row + (j - 1) * k + (l - 1)
    } else if near {
        (i - 1) * row + (j - 1) * 2 * k + (l - 1) + if odd_l { 0 } else { k }
    } else {
        (m - i) * row + (j - 1) * 2 * k + (l - 1) + if odd_l { k } else { 0 }
    }
}

fn extended_star(m: usize, p: usize, k: usize) -> (Graph, Vec<usize>) {
    let n = k * m * (p - 1) + 1;
    let mut builder = Builder::new(n);
    for i in 1..=m {
        for l in 1..=k {
            let parent = if i == 1 {
                0
            } else {
                star_vertex(k, p, l, i - 1, p - 1)
            };
            let mut members = vec![parent];
            members.extend((1..p).map(|j| star_vertex(k, p, l, i, j)));
            builder.clique(&members);
        }
    }
    let mut seq = vec![usize::MAX; n];
    for i in 1..=m {
        for l in 1..=k {
            for j in 1..p {
                let t = star_position(m, p, k, l, i, j);
                if t < n - 1 && seq[t] == usize::MAX {
                    seq[t] = star_vertex(k, p, l, i, j);
                }
            }
        }
    }
    seq[n - 1] = 0;
    (builder.finish(), seq)
}

/// Path `0 - 1 - ... - n-1`, ordered from a central vertex outwards by
/// alternating sides, deepest first.
fn path(n: usize) -> (Graph, Vec<usize>) {
    let mut builder = Builder::new(n);
    for v in 1..n {
        builder.edges.push((v - 1, v));
    }
    let mut seq = Vec::with_capacity(n);
    if n % 2 == 1 {
        let c = n / 2;
        seq.push(c);
        for d in (1..=c).rev() {
            seq.extend([c - d, c + d]);
        }
    } else {
        let (left, right) = (n / 2 - 1, n / 2);
        seq.push(right);
        for d in (1..=left).rev() {
            seq.extend([left - d, right + d]);
        }
        seq.push(left);
    }
    (builder.finish(), seq)
}

fn build(spec: &FamilySpec, as_printed: bool) -> Result<(Graph, Vec<usize>), FamilyError> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::LevelWiseG1 { levels } => level_wise_g1(levels),
        FamilySpec::LevelWiseGm1 { m, levels } => level_wise_gm1(*m, levels, as_printed),
        FamilySpec::Symmetric { .. } => return build(&spec.as_level_wise(), as_printed),
        &FamilySpec::ExtendedStarOfBlocks { m, p, k } => extended_star(m, p, k),
        &FamilySpec::OnePointUnion { p, k } => level_wise_g1(&[LevelSpec::new(k, p - 1)]),
        &FamilySpec::Star { k } => level_wise_g1(&[LevelSpec::new(k, 1)]),
        &FamilySpec::Path { n } => path(n),
    })
}

/// Generates the family graph in the breadth-first numbering.
pub fn gen_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    build(spec, false).map(|(graph, _)| graph)
}

/// The explicit ordering for the family from its index formulas.
/// Extended stars follow the parity case formulas as stated, whether or
/// not the result satisfies the ordering condition. Central-block graphs
/// use the corrected anchor rotation described on [`family_ordering_as_printed`].
pub fn family_ordering(spec: &FamilySpec) -> Result<Ordering, FamilyError> {
    let (_, seq) = build(spec, false)?;
    Ordering::new(seq).map_err(|_| FamilyError::OrderingCollision)
}

/// Like [`family_ordering`], but central-block graphs take the anchor of
/// `u_j` as `j mod (m+1)` exactly as printed. That places `u_1` in a branch
/// of `u_0` and the last non-central vertex in a branch of the central
/// vertex after it, so the ordering fails the exact condition for every
/// parameter choice.
pub fn family_ordering_as_printed(spec: &FamilySpec) -> Result<Ordering, FamilyError> {
    let (_, seq) = build(spec, true)?;
    Ordering::new(seq).map_err(|_| FamilyError::OrderingCollision)
}

/// Generated graph, closed form, bound, ordering and the certificate of the
/// coloring the ordering induces.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub formula: FormulaValue,
    pub bound: i64,
    pub ordering: Ordering,
    pub certificate: ColoringCertificate,
    /// The coloring is valid and its span, the formula and the bound agree.
    pub agreement: bool,
}

pub fn family_report(spec: &FamilySpec) -> Result<FamilyReport, FamilyError> {
    let (graph, seq) = build(spec, false)?;
    let ordering = Ordering::new(seq).map_err(|_| FamilyError::OrderingCollision)?;
    let formula = family_hc_formula(spec)?;
    let analysis = BlockGraphAnalysis::new(&graph).expect("family graphs are block graphs");
    let bound = lower_bound(&analysis.profile);
    let certificate = color_from_ordering(&analysis.profile, &analysis.table, &ordering)
        .expect("family orderings cover every vertex");
    let agreement =
        certificate.valid && certificate.span as i64 == formula.value && formula.value == bound;
    Ok(FamilyReport {
        spec: spec.clone(),
        graph,
        formula,
        bound,
        ordering,
        certificate,
        agreement,
    })
}

/// `B_{p+1,k+1}(d)` built directly from its definition: grow blocks
/// `K_{p+1}` outwards from a central vertex (even `d`) or a central block
/// (odd `d`) until every leaf block is `floor(d/2)` levels out, giving the
/// center `k + 1` blocks and every other cut vertex `k` new ones.
pub fn symmetric_block_graph(p: usize, k: usize, d: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Symmetric { p, k, d }.validate()?;
    let radius = d / 2;
    let mut builder;
    let mut queue = VecDeque::new();
    if d.is_multiple_of(2) {
        builder = Builder::new(1);
        queue.push_back((0usize, 0usize, k + 1));
    } else {
        builder = Builder::new(p + 1);
        builder.clique(&(0..=p).collect::<Vec<_>>());
        queue.extend((0..=p).map(|v| (v, 0, k)));
    }
    while let Some((v, depth, blocks)) = queue.pop_front() {
        if depth == radius {
            continue;
        }
        for _ in 0..blocks {
            let first = builder.fresh(p);
            let mut members = vec![v];
            members.extend(first..first + p);
            builder.clique(&members);
            queue.extend((first..first + p).map(|u| (u, depth + 1, k)));
        }
    }
    Ok(builder.finish())
}

/// Several block graphs with their central vertices identified. The shared
/// center is vertex 0, followed by the non-central vertices of each input
/// in input order and id order.
#[derive(Debug, Clone)]
pub struct GluedGraph {
    pub graph: Graph,
    /// `vertex_maps[i][v]` is the glued id of vertex `v` of input `i`.
    pub vertex_maps: Vec<Vec<usize>>,
    pub xis: Vec<usize>,
    pub orders: Vec<usize>,
}

pub fn glue_at_centers(graphs: &[Graph]) -> Result<GluedGraph, FamilyError> {
    if graphs.is_empty() {
        return Err(FamilyError::NoInputs);
    }
    let mut builder = Builder::new(1);
    let mut vertex_maps = Vec::with_capacity(graphs.len());
    let mut xis = Vec::with_capacity(graphs.len());
    for (index, graph) in graphs.iter().enumerate() {
        let analysis =
            BlockGraphAnalysis::new(graph).map_err(|_| FamilyError::NotBlockGraph { index })?;
        let profile = &analysis.profile;
        if profile.omega() != 1 {
            return Err(FamilyError::CenterBlock {
                index,
                omega: profile.omega(),
            });
        }
        let center = profile.center()[0];
        let mut map = vec![0; graph.order()];
        for v in (0..graph.order()).filter(|&v| v != center) {
            map[v] = builder.fresh(1);
        }
        builder
            .edges
            .extend(graph.edges().map(|(u, v)| (map[u], map[v])));
        vertex_maps.push(map);
        xis.push(profile.xi());
    }
    let orders = graphs.iter().map(Graph::order).collect();
    Ok(GluedGraph {
        graph: builder.finish(),
        vertex_maps,
        xis,
        orders,
    })
}

/// Concatenates per-input orderings into one for the glued graph: the
/// center first, then each input's non-central vertices in its own order,
/// with an input of smallest `xi` moved to the end so the ordering finishes
/// next to the center at level `xi`.
///
/// Inputs ordered from their end vertex back to the center are reversed
/// first.
pub fn glued_ordering(glued: &GluedGraph, orderings: &[Ordering]) -> Result<Ordering, FamilyError> {
    if orderings.len() != glued.orders.len()
        || orderings
            .iter()
            .zip(&glued.orders)
            .any(|(o, &n)| o.len() != n)
    {
        return Err(FamilyError::MismatchedOrderings);
    }
    let last = (0..glued.xis.len())
        .rev()
        .min_by_key(|&i| glued.xis[i])
        .unwrap_or(0);
    let sequence = (0..orderings.len()).filter(|&i| i != last).chain([last]);
    let mut seq = vec![0];
    for i in sequence {
        let map = &glued.vertex_maps[i];
        let own = orderings[i].as_slice();
        let reversed =
            own.last().is_some_and(|&v| map[v] == 0) && own.first().is_some_and(|&v| map[v] != 0);
        let mapped = own.iter().map(|&v| map[v]).filter(|&v| v != 0);
        if reversed {
            seq.extend(mapped.rev());
        } else {
            seq.extend(mapped);
        }
    }
    Ordering::new(seq).map_err(|_| FamilyError::MismatchedOrderings)
}

/// The glued value `sum (hc_i - xi_i) + 2 sum_{i<j} (n_i - 1)(n_j - 1) + xi`
/// with `xi = min xi_i`.
pub fn glued_hc_formula(hcs: &[i64], orders: &[usize], xis: &[usize]) -> i64 {
    let own: i64 = hcs.iter().zip(xis).map(|(&hc, &xi)| hc - xi as i64).sum();
    let mut cross = 0i64;
    for i in 0..orders.len() {
        for j in i + 1..orders.len() {
            cross += (orders[i] as i64 - 1) * (orders[j] as i64 - 1);
        }
    }
    own + 2 * cross + xis.iter().copied().min().unwrap_or(0) as i64
}

/// Seeded random block graph: starting from one vertex, attach a clique of
/// random order `2..=max_clique` at a uniformly chosen vertex until the
/// graph has `n_target` vertices. The last clique is trimmed so the order
/// is exactly `n_target`.
pub fn random_block_graph(seed: u64, n_target: usize, max_clique: usize) -> Graph {
    let n_target = n_target.max(2);
    let max_clique = max_clique.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut builder = Builder::new(1);
    while builder.n < n_target {
        let at = rng.gen_range(0..builder.n);
        let size = rng.gen_range(2..=max_clique).min(n_target - builder.n + 1);
        let first = builder.fresh(size - 1);
        let mut members = vec![at];
        members.extend(first..first + size - 1);
        builder.clique(&members);
    }
    builder.finish()
}
