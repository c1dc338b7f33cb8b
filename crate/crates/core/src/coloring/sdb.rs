//! Star-shaped block graphs with detour diameter at most `n/2`, and the
//! branch-alternating ordering that colors them optimally.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{color_from_ordering, ColoringCertificate, Ordering};
use crate::detour::{DetourProfile, DetourTable};

/// Classification of a block graph for the alternating construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SdbClass {
    /// The non-central vertices can be lined up so that no two consecutive
    /// ones share an alternation class.
    pub star_shaped: bool,
    /// `2 * detour diameter <= n`.
    pub db_half: bool,
    pub sdb: bool,
    /// Size of the largest alternation class.
    pub largest_class: usize,
    /// Number of non-central vertices.
    pub non_central: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SdbError {
    NotSdb(SdbClass),
    /// No alternating line-up has admissible end vertices.
    EndpointInfeasible,
}

impl fmt::Display for SdbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SdbError::NotSdb(c) => write!(
                f,
                "not SDB: star_shaped={}, db_half={} (largest class {} of {} non-central vertices)",
                c.star_shaped, c.db_half, c.largest_class, c.non_central
            ),
            SdbError::EndpointInfeasible => {
                write!(
                    f,
                    "no branch-alternating ordering with admissible end vertices exists"
                )
            }
        }
    }
}

impl core::error::Error for SdbError {}

fn class_counts(profile: &DetourProfile) -> Vec<usize> {
    let mut counts = vec![0; profile.class_count()];
    for v in 0..profile.order() {
        if let Some(c) = profile.class_of(v) {
            counts[c] += 1;
        }
    }
    counts
}

pub fn classify_sdb(profile: &DetourProfile) -> SdbClass {
    let counts = class_counts(profile);
    let non_central: usize = counts.iter().sum();
    let largest_class = counts.iter().copied().max().unwrap_or(0);
    let star_shaped = largest_class <= non_central.div_ceil(2);
    let db_half = 2 * profile.detour_diameter() <= profile.order();
    SdbClass {
        star_shaped,
        db_half,
        sdb: star_shaped && db_half,
        largest_class,
        non_central,
    }
}

/// Whether items with the given class counts can be lined up with no two
/// consecutive items of the same class, when the item before the first has
/// class `left` and the item after the last has class `right`.
///
/// A class can use at most every other slot of the positions not adjacent
/// to an equal neighbor outside the line-up, and that per-class cap is also
/// sufficient.
pub fn arrangeable(counts: &[usize], left: Option<usize>, right: Option<usize>) -> bool {
    let total: usize = counts.iter().sum();
    if total == 0 {
        return true;
    }
    counts.iter().enumerate().all(|(class, &count)| {
        let blocked = usize::from(left == Some(class)) + usize::from(right == Some(class));
        count <= total.saturating_sub(blocked).div_ceil(2)
    })
}

/// Greedy line-up of the queued items of each class: repeatedly take the
/// class with the most remaining items (ties to the smaller class id) that
/// differs from the previous one and keeps the rest arrangeable.
pub fn arrange(
    mut queues: Vec<Vec<usize>>,
    left: Option<usize>,
    right: Option<usize>,
) -> Option<Vec<usize>> {
    let mut counts: Vec<usize> = queues.iter().map(Vec::len).collect();
    if !arrangeable(&counts, left, right) {
        return None;
    }
    for queue in &mut queues {
        queue.reverse();
    }
    let total: usize = counts.iter().sum();
    let mut out = Vec::with_capacity(total);
    let mut prev = left;
    for _ in 0..total {
        let mut candidates: Vec<usize> = (0..counts.len())
            .filter(|&c| counts[c] > 0 && Some(c) != prev)
            .collect();
        candidates.sort_by_key(|&c| (core::cmp::Reverse(counts[c]), c));
        let chosen = candidates.into_iter().find(|&c| {
            counts[c] -= 1;
            let ok = arrangeable(&counts, Some(c), right);
            counts[c] += 1;
            ok
        })?;
        counts[chosen] -= 1;
        out.push(queues[chosen].pop()?);
        prev = Some(chosen);
    }
    Some(out)
}

/// Builds an ordering that starts at a central vertex, ends at a level-`xi`
/// neighbor of the center in a smallest block (single central vertex) or at
/// a central vertex (central block), and alternates classes in between.
/// Within a class, vertices are emitted by level, then id.
pub fn alternating_ordering(profile: &DetourProfile) -> Option<Ordering> {
    let n = profile.order();
    if n == 1 {
        return Ordering::new(vec![0]).ok();
    }
    let mut by_level: Vec<usize> = (0..n).filter(|&v| !profile.is_central(v)).collect();
    by_level.sort_by_key(|&v| (profile.level(v), v));
    let mut queues = vec![Vec::new(); profile.class_count()];
    for &v in &by_level {
        queues[profile.class_of(v)?].push(v);
    }
    let center = profile.center();

    if profile.omega() == 1 {
        let w = center[0];
        let mut ends: Vec<usize> = by_level
            .iter()
            .copied()
            .filter(|&v| {
                profile.level(v) == profile.xi() && profile.ancestors(v).get(1) == Some(&w)
            })
            .collect();
        ends.sort_by_key(|&v| (profile.class_of(v), v));
        for z in ends {
            let class = profile.class_of(z)?;
            let mut rest = queues.clone();
            rest[class].retain(|&v| v != z);
            if let Some(middle) = arrange(rest, None, Some(class)) {
                let mut seq = Vec::with_capacity(n);
                seq.push(w);
                seq.extend(middle);
                seq.push(z);
                return Ordering::new(seq).ok();
            }
        }
        return None;
    }

    for (ia, &a) in center.iter().enumerate() {
        for (ib, &b) in center.iter().enumerate() {
            if ia == ib {
                continue;
            }
            if let Some(middle) = arrange(queues.clone(), Some(ia), Some(ib)) {
                let mut seq = Vec::with_capacity(n);
                seq.push(a);
                seq.extend(middle);
                seq.push(b);
                seq.extend(center.iter().copied().filter(|&c| c != a && c != b));
                return Ordering::new(seq).ok();
            }
        }
    }
    None
}

/// Optimal coloring of an SDB(n/2) block graph through the alternating
/// ordering and the recurrence.
pub fn sdb_color(
    profile: &DetourProfile,
    table: &DetourTable,
) -> Result<ColoringCertificate, SdbError> {
    let class = classify_sdb(profile);
    if !class.sdb {
        return Err(SdbError::NotSdb(class));
    }
    let ordering = alternating_ordering(profile).ok_or(SdbError::EndpointInfeasible)?;
    // the ordering is a permutation of the right length by construction
    color_from_ordering(profile, table, &ordering).map_err(|_| SdbError::EndpointInfeasible)
}
