//! Ordering conditions under which the recurrence coloring meets the lower
//! bound: the exact pairwise condition and the two sufficient ones.

use alloc::vec::Vec;

use super::Ordering;
use crate::detour::{BranchRelation, DetourProfile, DetourTable};

/// Why an ordering fails the exact pairwise condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm2Failure {
    /// The end levels are not `{0, xi}` (single central vertex) or `{0, 0}`.
    Endpoints {
        first_level: usize,
        last_level: usize,
    },
    /// `D(u_i, u_j)` is below the required value.
    Pair {
        i: usize,
        j: usize,
        detour: usize,
        required: i64,
    },
}

/// The end levels must be `0` and `xi` (single central vertex) or both `0`.
/// Reversing an ordering leaves every pairwise inequality unchanged, so the
/// reversed orientation `xi ... 0` is accepted as well.
fn endpoints_ok(profile: &DetourProfile, seq: &[usize]) -> bool {
    let (Some(&first), Some(&last)) = (seq.first(), seq.last()) else {
        return true;
    };
    let (a, b) = (profile.level(first), profile.level(last));
    if profile.omega() == 1 {
        let xi = profile.xi();
        (a == 0 && b == xi) || (a == xi && b == 0)
    } else {
        a == 0 && b == 0
    }
}

fn endpoint_failure(profile: &DetourProfile, seq: &[usize]) -> Thm2Failure {
    Thm2Failure::Endpoints {
        first_level: profile.level(seq[0]),
        last_level: profile.level(seq[seq.len() - 1]),
    }
}

// prefix[k] = sum_{t<k} (L(u_t) + L(u_{t+1}))
fn level_prefix(profile: &DetourProfile, seq: &[usize]) -> Vec<i64> {
    let mut prefix = Vec::with_capacity(seq.len());
    prefix.push(0i64);
    for t in 1..seq.len() {
        let pair = (profile.level(seq[t - 1]) + profile.level(seq[t])) as i64;
        prefix.push(prefix[t - 1] + pair);
    }
    prefix
}

/// Right-hand side `sum_{t=i}^{j-1}(L(u_t) + L(u_{t+1})) - (j-i)(n-omega) + (n-1)`.
fn required(prefix: &[i64], i: usize, j: usize, n: i64, omega: i64) -> i64 {
    prefix[j] - prefix[i] - (j - i) as i64 * (n - omega) + (n - 1)
}

/// Checks the endpoint levels and, for all `i < j`,
/// `D(u_i, u_j) >= sum_{t=i}^{j-1}(L(u_t) + L(u_{t+1})) - (j-i)(n-omega) + (n-1)`.
///
/// Reports the first failing pair in lexicographic `(i, j)` order.
pub fn check_ordering_thm2(
    profile: &DetourProfile,
    table: &DetourTable,
    ordering: &Ordering,
) -> Result<(), Thm2Failure> {
    let seq = ordering.as_slice();
    if !endpoints_ok(profile, seq) {
        return Err(endpoint_failure(profile, seq));
    }
    match pair_violations(profile, table, seq).next() {
        Some(failure) => Err(failure),
        None => Ok(()),
    }
}

/// Every pair `(i, j)` violating the pairwise inequality, in lexicographic
/// order. Endpoint levels are not considered.
pub fn thm2_violations(
    profile: &DetourProfile,
    table: &DetourTable,
    ordering: &Ordering,
) -> Vec<Thm2Failure> {
    pair_violations(profile, table, ordering.as_slice()).collect()
}

fn pair_violations<'a>(
    profile: &'a DetourProfile,
    table: &'a DetourTable,
    seq: &'a [usize],
) -> impl Iterator<Item = Thm2Failure> + 'a {
    let n = seq.len() as i64;
    let omega = profile.omega() as i64;
    let prefix = level_prefix(profile, seq);
    (0..seq.len()).flat_map(move |i| {
        let prefix = prefix.clone();
        (i + 1..seq.len()).filter_map(move |j| {
            let need = required(&prefix, i, j, n, omega);
            let detour = table.get(seq[i], seq[j]);
            (need > detour as i64).then_some(Thm2Failure::Pair {
                i,
                j,
                detour,
                required: need,
            })
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SufficientFailure {
    Endpoints {
        first_level: usize,
        last_level: usize,
    },
    /// `u_{position-1}` and `u_position` are not in different (single
    /// central vertex) or opposite (central block) branches.
    SameSide { position: usize },
    /// `2 D(u_{position-1}, u_position) > n`.
    LongStep { position: usize, detour: usize },
    /// `2 * detour diameter > n`.
    Diameter { diameter: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SufficientReport {
    /// Endpoints, alternating branches and every consecutive detour at most
    /// `n/2`.
    pub thm3: Result<(), SufficientFailure>,
    /// Endpoints, alternating branches and detour diameter at most `n/2`.
    pub thm4: Result<(), SufficientFailure>,
}

/// Consecutive vertices must sit in different branches (single central
/// vertex) or opposite branches (central block). A central vertex may sit
/// next to anything when it is the only one; with a central block, a central
/// vertex may not sit next to a vertex of its own branches.
fn alternates(profile: &DetourProfile, x: usize, y: usize) -> bool {
    let single = profile.omega() == 1;
    match (profile.is_central(x), profile.is_central(y)) {
        (true, true) => true,
        (true, false) => single || profile.anchor(y) != x,
        (false, true) => single || profile.anchor(x) != y,
        (false, false) => {
            let want = if single {
                BranchRelation::Different
            } else {
                BranchRelation::Opposite
            };
            profile.relation(x, y) == want
        }
    }
}

pub fn check_sufficient(
    profile: &DetourProfile,
    table: &DetourTable,
    ordering: &Ordering,
) -> SufficientReport {
    let seq = ordering.as_slice();
    let n = seq.len();
    let shared = if !endpoints_ok(profile, seq) {
        let Thm2Failure::Endpoints {
            first_level,
            last_level,
        } = endpoint_failure(profile, seq)
        else {
            unreachable!()
        };
        Err(SufficientFailure::Endpoints {
            first_level,
            last_level,
        })
    } else {
        match (1..n).find(|&p| !alternates(profile, seq[p - 1], seq[p])) {
            Some(position) => Err(SufficientFailure::SameSide { position }),
            None => Ok(()),
        }
    };
    let thm3 =
        shared.and_then(
            |()| match (1..n).find(|&p| 2 * table.get(seq[p - 1], seq[p]) > n) {
                Some(position) => Err(SufficientFailure::LongStep {
                    position,
                    detour: table.get(seq[position - 1], seq[position]),
                }),
                None => Ok(()),
            },
        );
    let diameter = profile.detour_diameter();
    let thm4 = shared.and_then(|()| {
        if 2 * diameter > n {
            Err(SufficientFailure::Diameter { diameter })
        } else {
            Ok(())
        }
    });
    SufficientReport { thm3, thm4 }
}

/// Every failed sufficient condition, not just the first: the endpoint rule,
/// each non-alternating step, each step with `2 D > n`, then the diameter.
pub fn sufficient_failures(
    profile: &DetourProfile,
    table: &DetourTable,
    ordering: &Ordering,
) -> Vec<SufficientFailure> {
    let seq = ordering.as_slice();
    let n = seq.len();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    if !endpoints_ok(profile, seq) {
        out.push(SufficientFailure::Endpoints {
            first_level: profile.level(seq[0]),
            last_level: profile.level(seq[n - 1]),
        });
    }
    out.extend(
        (1..n)
            .filter(|&p| !alternates(profile, seq[p - 1], seq[p]))
            .map(|position| SufficientFailure::SameSide { position }),
    );
    for position in 1..n {
        let detour = table.get(seq[position - 1], seq[position]);
        if 2 * detour > n {
            out.push(SufficientFailure::LongStep { position, detour });
        }
    }
    let diameter = profile.detour_diameter();
    if 2 * diameter > n {
        out.push(SufficientFailure::Diameter { diameter });
    }
    out
}
