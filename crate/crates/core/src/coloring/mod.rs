//! Hamiltonian colorings: verification, the level-based lower bound, the
//! ordering recurrence and the certificates tying them together.
//!
//! Colors are normalized so the smallest one is 0; the span of a coloring is
//! then its largest color. All `n/2` comparisons are done exactly as
//! `2 * x <= n`.

mod conditions;
mod sdb;

use alloc::vec::Vec;
use core::fmt;

use crate::detour::{DetourProfile, DetourTable};

pub use conditions::{
    check_ordering_thm2, check_sufficient, sufficient_failures, thm2_violations, SufficientFailure,
    SufficientReport, Thm2Failure,
};
pub use sdb::{
    alternating_ordering, arrange, arrangeable, classify_sdb, sdb_color, SdbClass, SdbError,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    LengthMismatch { expected: usize, found: usize },
    NotAPermutation { n: usize },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            ColoringError::NotAPermutation { n } => {
                write!(f, "ordering is not a permutation of 0..{n}")
            }
        }
    }
}

impl core::error::Error for ColoringError {}

/// A permutation `u_0, ..., u_{n-1}` of the vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering(Vec<usize>);

impl Ordering {
    pub fn new(seq: Vec<usize>) -> Result<Self, ColoringError> {
        let n = seq.len();
        let mut seen = alloc::vec![false; n];
        for &v in &seq {
            if v >= n || seen[v] {
                return Err(ColoringError::NotAPermutation { n });
            }
            seen[v] = true;
        }
        Ok(Ordering(seq))
    }

    /// The ordering a coloring induces: vertices by increasing color, ties
    /// by id.
    pub fn induced_by(colors: &[u64]) -> Self {
        let mut seq: Vec<usize> = (0..colors.len()).collect();
        seq.sort_by_key(|&v| (colors[v], v));
        Ordering(seq)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn reversed(&self) -> Self {
        Ordering(self.0.iter().rev().copied().collect())
    }
}

impl core::ops::Index<usize> for Ordering {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

/// A pair violating `D(u, v) + |c(u) - c(v)| >= n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub detour: usize,
    /// `n - 1 - D(u, v)`.
    pub required: u64,
    pub actual: u64,
}

/// Outcome of checking every pair of a coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    /// Colors shifted so the minimum is 0.
    pub colors: Vec<u64>,
    /// Amount subtracted from the input colors.
    pub shift: i64,
    pub span: u64,
    pub violations: Vec<Violation>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks all `n(n-1)/2` pairs of a coloring against the detour table.
pub fn verify_coloring(table: &DetourTable, colors: &[i64]) -> Result<Verification, ColoringError> {
    let n = table.order();
    if colors.len() != n {
        return Err(ColoringError::LengthMismatch {
            expected: n,
            found: colors.len(),
        });
    }
    let shift = colors.iter().copied().min().unwrap_or(0);
    let colors: Vec<u64> = colors.iter().map(|&c| (c - shift) as u64).collect();
    let span = colors.iter().copied().max().unwrap_or(0);
    let mut violations = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let detour = table.get(u, v);
            let required = (n - 1).saturating_sub(detour) as u64;
            let actual = colors[u].abs_diff(colors[v]);
            if actual < required {
                violations.push(Violation {
                    u,
                    v,
                    detour,
                    required,
                    actual,
                });
            }
        }
    }
    Ok(Verification {
        colors,
        shift,
        span,
        violations,
    })
}

/// Lower bound `(n - 1)(n - omega) - 2 L(G) + xi` on `hc(G)` of a block
/// graph, returned unclamped.
pub fn lower_bound(profile: &DetourProfile) -> i64 {
    let n = profile.order() as i64;
    let omega = profile.omega() as i64;
    (n - 1) * (n - omega) - 2 * profile.total_level() as i64 + profile.xi() as i64
}

/// Colors from the recurrence `c(u_0) = 0`,
/// `c(u_{i+1}) = c(u_i) + n - omega - L(u_i) - L(u_{i+1})`, unnormalized.
pub fn recurrence_colors(profile: &DetourProfile, ordering: &Ordering) -> Vec<i64> {
    let n = profile.order();
    let step = (n - profile.omega()) as i64;
    let mut colors = alloc::vec![0i64; n];
    let seq = ordering.as_slice();
    for i in 1..seq.len() {
        let gap = step - (profile.level(seq[i - 1]) + profile.level(seq[i])) as i64;
        colors[seq[i]] = colors[seq[i - 1]] + gap;
    }
    colors
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conditions {
    pub thm2: bool,
    pub thm3: bool,
    pub thm4: bool,
    pub star_shaped: bool,
    pub db_half: bool,
    pub branch_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Warning {
    /// Fewer than three branches: colorings need not be injective and the
    /// lower bound may be strict.
    FewBranches { count: usize },
    /// The recurrence step into position `position` is negative.
    NegativeGap { position: usize, gap: i64 },
    /// Input colors were shifted down by `shift` so the minimum is 0.
    Normalized { shift: i64 },
}

/// A coloring together with its verdict and the structural conditions of
/// the ordering behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringCertificate {
    pub n: usize,
    pub omega: usize,
    pub xi: usize,
    pub total_level: usize,
    pub lower_bound: i64,
    pub ordering: Vec<usize>,
    pub colors: Vec<u64>,
    pub span: u64,
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub conditions: Conditions,
    pub warnings: Vec<Warning>,
}

impl ColoringCertificate {
    /// Valid and meeting the lower bound, hence optimal.
    pub fn is_optimal(&self) -> bool {
        self.valid && self.span as i64 == self.lower_bound
    }
}

/// Certificate for an explicit coloring; conditions are evaluated on the
/// ordering the coloring induces.
pub fn certify_coloring(
    profile: &DetourProfile,
    table: &DetourTable,
    colors: &[i64],
) -> Result<ColoringCertificate, ColoringError> {
    let verification = verify_coloring(table, colors)?;
    let ordering = Ordering::induced_by(&verification.colors);
    let mut warnings = Vec::new();
    if verification.shift != 0 {
        warnings.push(Warning::Normalized {
            shift: verification.shift,
        });
    }
    Ok(assemble(profile, table, ordering, verification, warnings))
}

/// Colors an ordering with the recurrence and certifies the result.
///
/// When the ordering passes [`check_ordering_thm2`] the coloring is valid and
/// its span equals [`lower_bound`].
pub fn color_from_ordering(
    profile: &DetourProfile,
    table: &DetourTable,
    ordering: &Ordering,
) -> Result<ColoringCertificate, ColoringError> {
    if ordering.len() != profile.order() {
        return Err(ColoringError::LengthMismatch {
            expected: profile.order(),
            found: ordering.len(),
        });
    }
    let colors = recurrence_colors(profile, ordering);
    let seq = ordering.as_slice();
    let mut warnings = Vec::new();
    for i in 1..seq.len() {
        let gap = colors[seq[i]] - colors[seq[i - 1]];
        if gap < 0 {
            warnings.push(Warning::NegativeGap { position: i, gap });
        }
    }
    let verification = verify_coloring(table, &colors)?;
    if verification.shift != 0 {
        warnings.push(Warning::Normalized {
            shift: verification.shift,
        });
    }
    Ok(assemble(
        profile,
        table,
        ordering.clone(),
        verification,
        warnings,
    ))
}

fn assemble(
    profile: &DetourProfile,
    table: &DetourTable,
    ordering: Ordering,
    verification: Verification,
    mut warnings: Vec<Warning>,
) -> ColoringCertificate {
    let sufficient = check_sufficient(profile, table, &ordering);
    let class = classify_sdb(profile);
    let conditions = Conditions {
        thm2: check_ordering_thm2(profile, table, &ordering).is_ok(),
        thm3: sufficient.thm3.is_ok(),
        thm4: sufficient.thm4.is_ok(),
        star_shaped: class.star_shaped,
        db_half: class.db_half,
        branch_count: profile.branch_count(),
    };
    if profile.branch_count() < 3 {
        warnings.insert(
            0,
            Warning::FewBranches {
                count: profile.branch_count(),
            },
        );
    }
    let valid = verification.is_valid();
    ColoringCertificate {
        n: profile.order(),
        omega: profile.omega(),
        xi: profile.xi(),
        total_level: profile.total_level(),
        lower_bound: lower_bound(profile),
        ordering: ordering.into_vec(),
        colors: verification.colors,
        span: verification.span,
        valid,
        violations: verification.violations,
        conditions,
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detour::BlockGraphAnalysis;
    use crate::graph::parse_edge_list;

    pub(crate) fn analyze(text: &str) -> BlockGraphAnalysis {
        BlockGraphAnalysis::new(&parse_edge_list(text).unwrap()).unwrap()
    }

    pub(crate) const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3";
    pub(crate) const STAR3: &str = "0 1\n0 2\n0 3";
    pub(crate) const TRIANGLES: &str = "0 1\n0 4\n1 4\n0 2\n0 5\n2 5\n0 3\n0 6\n3 6";

    #[test]
    fn all_zero_on_k4_is_valid() {
        let a = analyze(K4);
        let v = verify_coloring(&a.table, &[0, 0, 0, 0]).unwrap();
        assert!(v.is_valid());
        assert_eq!(v.span, 0);
    }

    #[test]
    fn star_colorings() {
        let a = analyze(STAR3);
        let good = verify_coloring(&a.table, &[4, 0, 1, 2]).unwrap();
        assert!(good.is_valid());
        assert_eq!(good.span, 4);
        let bad = verify_coloring(&a.table, &[2, 0, 1, 3]).unwrap();
        assert!(!bad.is_valid());
        assert!(bad.violations.contains(&Violation {
            u: 0,
            v: 3,
            detour: 1,
            required: 2,
            actual: 1
        }));
        // the leaf colored 1 is also too close to the center
        assert_eq!(bad.violations.len(), 2);
    }

    #[test]
    fn missing_color_is_an_error() {
        let a = analyze(STAR3);
        assert_eq!(
            verify_coloring(&a.table, &[0, 1, 2]),
            Err(ColoringError::LengthMismatch {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn normalizes_shifted_colors() {
        let a = analyze(STAR3);
        let cert = certify_coloring(&a.profile, &a.table, &[9, 5, 6, 7]).unwrap();
        assert_eq!(cert.colors, [4, 0, 1, 2]);
        assert!(cert.valid);
        assert!(cert.warnings.contains(&Warning::Normalized { shift: 5 }));
        assert_eq!(cert.ordering, [1, 2, 3, 0]);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(&analyze(K4).profile), 0);
        assert_eq!(lower_bound(&analyze(STAR3).profile), 4);
        assert_eq!(lower_bound(&analyze(TRIANGLES).profile), 14);
    }

    #[test]
    fn recurrence_on_triangles() {
        let a = analyze(TRIANGLES);
        let ord = Ordering::new((0..7).collect()).unwrap();
        let cert = color_from_ordering(&a.profile, &a.table, &ord).unwrap();
        assert_eq!(cert.colors, [0, 4, 6, 8, 10, 12, 14]);
        assert_eq!(cert.span, 14);
        assert!(cert.valid);
        assert!(cert.is_optimal());
        assert!(cert.conditions.thm2);
    }

    #[test]
    fn recurrence_on_star() {
        let a = analyze(STAR3);
        let ord = Ordering::new(vec![0, 1, 2, 3]).unwrap();
        let cert = color_from_ordering(&a.profile, &a.table, &ord).unwrap();
        assert_eq!(cert.colors, [0, 2, 3, 4]);
        assert_eq!(cert.span, 4);
        assert!(cert.valid);
    }

    #[test]
    fn degenerate_two_center_graph() {
        // center K2 {0,1}; triangle {0,2,3} and triangle {1,4,5}
        let a = analyze("0 1\n0 2\n0 3\n2 3\n1 4\n1 5\n4 5");
        assert_eq!(a.profile.center(), [0, 1]);
        // w1, c, a, d, b, w0 with c, d hanging off w1
        let ord = Ordering::new(vec![1, 4, 2, 5, 3, 0]).unwrap();
        let cert = color_from_ordering(&a.profile, &a.table, &ord).unwrap();
        assert_eq!(cert.span, 4);
        assert!(!cert.valid);
        let pairs: Vec<(usize, usize)> = cert.violations.iter().map(|v| (v.u, v.v)).collect();
        assert!(pairs.contains(&(2, 3)));
        assert!(pairs.contains(&(4, 5)));
        assert!(!cert.conditions.thm2);
        assert!(cert.warnings.contains(&Warning::FewBranches { count: 2 }));
    }

    #[test]
    fn ordering_rejects_non_permutations() {
        assert!(Ordering::new(vec![0, 0, 1]).is_err());
        assert!(Ordering::new(vec![0, 3, 1]).is_err());
        assert_eq!(Ordering::induced_by(&[3, 0, 3, 1]).as_slice(), [1, 3, 0, 2]);
    }
}
