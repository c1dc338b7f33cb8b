use hamcolor_core::coloring::{
    arrange, arrangeable, check_ordering_thm2, check_sufficient, classify_sdb, color_from_ordering,
    lower_bound, recurrence_colors, sdb_color, Ordering, SdbError,
};
use hamcolor_core::detour::BlockGraphAnalysis;
use hamcolor_core::families::random_block_graph;
use hamcolor_core::graph::Graph;
use hamcolor_core::oracle::{exact_hc_with_table, min_span_for_ordering, scan_thm2_orderings};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 2usize..=max_n, 2usize..=4)
        .prop_map(|(seed, n, q)| random_block_graph(seed, n, q))
}

fn graph_and_ordering(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Brute-force line-up check for small class counts.
fn can_line_up(counts: &mut [usize], prev: Option<usize>, right: Option<usize>) -> bool {
    if counts.iter().all(|&c| c == 0) {
        return prev.is_none() || prev != right;
    }
    for c in 0..counts.len() {
        if counts[c] > 0 && Some(c) != prev {
            counts[c] -= 1;
            let ok = can_line_up(counts, Some(c), right);
            counts[c] += 1;
            if ok {
                return true;
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn recurrence_telescopes((g, seq) in graph_and_ordering(30)) {
        let a = BlockGraphAnalysis::new(&g).unwrap();
        let p = &a.profile;
        let ord = Ordering::new(seq.clone()).unwrap();
        let colors = recurrence_colors(p, &ord);
        let n = g.order() as i64;
        let expected = (n - 1) * (n - p.omega() as i64) - 2 * p.total_level() as i64
            + (p.level(seq[0]) + p.level(seq[seq.len() - 1])) as i64;
        prop_assert_eq!(colors[seq[seq.len() - 1]] - colors[seq[0]], expected);
    }

    #[test]
    fn passing_orderings_are_optimal_colorings((g, seq) in graph_and_ordering(30)) {
        let a = BlockGraphAnalysis::new(&g).unwrap();
        let ord = Ordering::new(seq).unwrap();
        let cert = color_from_ordering(&a.profile, &a.table, &ord).unwrap();
        let sufficient = check_sufficient(&a.profile, &a.table, &ord);
        if sufficient.thm4.is_ok() || sufficient.thm3.is_ok() {
            prop_assert!(check_ordering_thm2(&a.profile, &a.table, &ord).is_ok());
        }
        if check_ordering_thm2(&a.profile, &a.table, &ord).is_ok() {
            prop_assert!(cert.valid);
            prop_assert_eq!(cert.span as i64, lower_bound(&a.profile));
        }
        // greedy along the ordering the colors induce is never worse
        if cert.valid {
            let induced = Ordering::induced_by(&cert.colors);
            prop_assert!(min_span_for_ordering(&a.table, &induced) <= cert.span);
        }
    }

    #[test]
    fn scanned_orderings_are_sound(g in graph(8)) {
        let a = BlockGraphAnalysis::new(&g).unwrap();
        let bound = lower_bound(&a.profile);
        let mut seen = 0;
        scan_thm2_orderings(&a.profile, &a.table, 8, |seq| {
            let ord = Ordering::new(seq.to_vec()).unwrap();
            let cert = color_from_ordering(&a.profile, &a.table, &ord).unwrap();
            assert!(cert.valid && cert.span as i64 == bound, "{seq:?}");
            seen += 1;
            seen < 200
        })
        .unwrap();
    }

    #[test]
    fn bound_never_exceeds_exact_value(g in graph(7)) {
        let a = BlockGraphAnalysis::new(&g).unwrap();
        let exact = exact_hc_with_table(&a.table, 9).unwrap();
        prop_assert!(lower_bound(&a.profile) <= exact.value as i64);
        let colors: Vec<i64> = exact.witness.iter().map(|&c| c as i64).collect();
        let cert = hamcolor_core::coloring::verify_coloring(&a.table, &colors).unwrap();
        prop_assert!(cert.is_valid());
        prop_assert_eq!(cert.span, exact.value);
    }

    #[test]
    fn sdb_graphs_color_optimally(g in graph(40)) {
        let a = BlockGraphAnalysis::new(&g).unwrap();
        let class = classify_sdb(&a.profile);
        match sdb_color(&a.profile, &a.table) {
            Ok(cert) => {
                prop_assert!(class.sdb);
                prop_assert!(cert.valid);
                prop_assert!(cert.conditions.thm4);
                prop_assert!(cert.conditions.thm2);
                prop_assert_eq!(cert.span as i64, cert.lower_bound);
            }
            Err(SdbError::NotSdb(c)) => prop_assert!(!c.sdb),
            Err(SdbError::EndpointInfeasible) => prop_assert!(class.sdb),
        }
    }

    #[test]
    fn arrangeable_matches_brute_force(
        counts in proptest::collection::vec(0usize..4, 1..5),
        left in proptest::option::of(0usize..5),
        right in proptest::option::of(0usize..5),
    ) {
        let left = left.filter(|&c| c < counts.len());
        let right = right.filter(|&c| c < counts.len());
        let mut scratch = counts.clone();
        let total: usize = counts.iter().sum();
        let brute = if total == 0 { true } else { can_line_up(&mut scratch, left, right) };
        prop_assert_eq!(arrangeable(&counts, left, right), brute);
        let queues: Vec<Vec<usize>> = counts
            .iter()
            .enumerate()
            .map(|(c, &k)| (0..k).map(|i| c * 10 + i).collect())
            .collect();
        match arrange(queues, left, right) {
            Some(seq) => {
                prop_assert!(brute);
                let class: Vec<usize> = seq.iter().map(|v| v / 10).collect();
                prop_assert!(class.windows(2).all(|w| w[0] != w[1]));
                if let (Some(l), Some(&f)) = (left, class.first()) {
                    prop_assert_ne!(l, f);
                }
                if let (Some(r), Some(&z)) = (right, class.last()) {
                    prop_assert_ne!(r, z);
                }
            }
            None => prop_assert!(!brute),
        }
    }
}

#[test]
fn stars_color_with_square_spans() {
    for k in 3..=8usize {
        let g = Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).unwrap();
        let a = BlockGraphAnalysis::new(&g).unwrap();
        let cert = sdb_color(&a.profile, &a.table).unwrap();
        assert_eq!(cert.span, ((k - 1) * (k - 1)) as u64);
    }
}
