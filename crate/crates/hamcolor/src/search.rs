//! Coloring strategies behind `color --method auto`.

use hamcolor_core::coloring::{check_ordering_thm2, color_from_ordering, Ordering};
use hamcolor_core::detour::{DetourProfile, DetourTable};

/// Upper limit on round-robin candidates tried.
pub const ROUND_ROBIN_BUDGET: usize = 256;

/// Non-central vertices split by alternation class, each class listed by
/// level (ascending or descending), then id.
fn class_queues(profile: &DetourProfile, descending: bool) -> Vec<Vec<usize>> {
    let mut queues = vec![Vec::new(); profile.class_count()];
    for v in 0..profile.order() {
        if let Some(c) = profile.class_of(v) {
            queues[c].push(v);
        }
    }
    for q in &mut queues {
        q.sort_by_key(|&v| (profile.level(v), v));
        if descending {
            q.reverse();
        }
    }
    queues
}

/// Takes one vertex from each non-empty class in turn, starting at class
/// `start`.
fn interleave(mut queues: Vec<Vec<usize>>, start: usize) -> Vec<usize> {
    for q in &mut queues {
        q.reverse();
    }
    let k = queues.len();
    let mut out = Vec::new();
    while queues.iter().any(|q| !q.is_empty()) {
        for i in 0..k {
            if let Some(v) = queues[(start + i) % k].pop() {
                out.push(v);
            }
        }
    }
    out
}

/// Round-robin orderings: the non-central vertices cycle through the
/// classes, the central vertices go first, last or split between the ends,
/// and one level-`xi` vertex may be held back for the far end.
pub fn round_robin_orderings(profile: &DetourProfile) -> Vec<Ordering> {
    let n = profile.order();
    let center = profile.center().to_vec();
    let k = profile.class_count().max(1);
    let xi_vertex = (0..n).find(|&v| !profile.is_central(v) && profile.level(v) == profile.xi());
    let mut out = Vec::new();
    'outer: for descending in [false, true] {
        for start in 0..k {
            for hold in [None, xi_vertex] {
                let mut queues = class_queues(profile, descending);
                if let Some(h) = hold {
                    for q in &mut queues {
                        q.retain(|&v| v != h);
                    }
                }
                let body = interleave(queues, start);
                let tail: Vec<usize> = hold.into_iter().collect();
                let mut candidates = vec![
                    [center.as_slice(), &body, &tail].concat(),
                    [&tail, body.as_slice(), &center].concat(),
                ];
                if center.len() >= 2 {
                    candidates.push([&center[..1], body.as_slice(), &center[1..]].concat());
                }
                for seq in candidates {
                    out.push(Ordering::new(seq).expect("round robin visits every vertex once"));
                    if out.len() >= ROUND_ROBIN_BUDGET {
                        break 'outer;
                    }
                }
            }
        }
    }
    out.dedup();
    out
}

/// First round-robin ordering passing the exact pairwise condition.
pub fn round_robin_search(profile: &DetourProfile, table: &DetourTable) -> Option<Ordering> {
    round_robin_orderings(profile)
        .into_iter()
        .find(|ord| check_ordering_thm2(profile, table, ord).is_ok())
        .filter(|ord| color_from_ordering(profile, table, ord).is_ok_and(|c| c.is_optimal()))
}
