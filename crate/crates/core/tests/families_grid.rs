use hamcolor_core::blocks::BlockDecomposition;
use hamcolor_core::coloring::{check_ordering_thm2, lower_bound};
use hamcolor_core::detour::BlockGraphAnalysis;
use hamcolor_core::families::{
    family_hc_formula, family_ordering, family_report, gen_family, glue_at_centers,
    glued_hc_formula, glued_ordering, random_block_graph, symmetric_block_graph, FamilySpec,
    LevelSpec,
};
use hamcolor_core::graph::Graph;
use proptest::prelude::*;

fn level_grid() -> Vec<Vec<LevelSpec>> {
    let mut grid = Vec::new();
    for k1 in 1..=3 {
        for m1 in 2..=3 {
            grid.push(vec![LevelSpec::new(k1, m1)]);
            for k2 in 1..=3 {
                for m2 in 2..=3 {
                    grid.push(vec![LevelSpec::new(k1, m1), LevelSpec::new(k2, m2)]);
                }
            }
        }
    }
    grid
}

fn grid_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for levels in level_grid() {
        specs.push(FamilySpec::LevelWiseG1 {
            levels: levels.clone(),
        });
        for m in 1..=2 {
            specs.push(FamilySpec::LevelWiseGm1 {
                m,
                levels: levels.clone(),
            });
        }
    }
    specs.retain(|s| s.validate().is_ok_and(|n| n <= 200));
    specs
}

/// (sum P_i, sum P_i S_i) computed level by level.
fn sums(levels: &[LevelSpec]) -> (usize, usize) {
    let (mut p, mut s, mut total, mut weighted) = (1, 0, 0, 0);
    for l in levels {
        p *= l.blocks_per_vertex * l.vertices_per_block;
        s += l.vertices_per_block;
        total += p;
        weighted += p * s;
    }
    (total, weighted)
}

#[test]
fn order_and_level_formulas_on_the_grid() {
    let specs = grid_specs();
    assert!(specs.len() > 50);
    for spec in specs {
        let g = gen_family(&spec).unwrap();
        let a = BlockGraphAnalysis::new(&g).unwrap();
        let (n, total_level, omega) = match &spec {
            FamilySpec::LevelWiseG1 { levels } => {
                let (t, w) = sums(levels);
                (1 + t, w, 1)
            }
            FamilySpec::LevelWiseGm1 { m, levels } => {
                let (t, w) = sums(levels);
                (1 + m + (m + 1) * t, (m + 1) * w, m + 1)
            }
            _ => unreachable!(),
        };
        assert_eq!(g.order(), n, "{spec:?}");
        assert_eq!(a.profile.total_level(), total_level, "{spec:?}");
        assert_eq!(a.profile.omega(), omega, "{spec:?}");
        assert_eq!(
            family_hc_formula(&spec).unwrap().value,
            lower_bound(&a.profile),
            "{spec:?}"
        );
    }
}

#[test]
fn consistency_triangle_on_the_grid() {
    let mut passing = 0;
    for spec in grid_specs() {
        let report = family_report(&spec).unwrap();
        let a = BlockGraphAnalysis::new(&report.graph).unwrap();
        if check_ordering_thm2(&a.profile, &a.table, &report.ordering).is_ok() {
            passing += 1;
            assert!(report.certificate.valid, "{spec:?}");
            assert_eq!(
                report.certificate.span as i64, report.formula.value,
                "{spec:?}"
            );
            assert_eq!(report.formula.value, report.bound, "{spec:?}");
            assert!(report.agreement);
        } else {
            // only the two-branch corners fall outside
            assert!(!report.formula.caveats.is_empty(), "{spec:?}");
        }
    }
    assert!(passing > 100);
}

#[test]
fn extended_star_grid() {
    for m in 2..=4 {
        for p in 3..=4 {
            for k in 3..=6 {
                let spec = FamilySpec::ExtendedStarOfBlocks { m, p, k };
                let report = family_report(&spec).unwrap();
                let a = BlockGraphAnalysis::new(&report.graph).unwrap();
                assert_eq!(report.graph.order(), k * m * (p - 1) + 1);
                assert_eq!(
                    2 * a.profile.total_level(),
                    k * m * (m + 1) * (p - 1) * (p - 1)
                );
                assert_eq!(report.formula.value, report.bound);
                // the coloring is always valid; only odd k meets the bound
                assert!(report.certificate.valid, "{spec:?}");
                assert_eq!(report.agreement, k % 2 == 1, "{spec:?}");
                if k % 2 == 0 {
                    let excess = (m - 1) * (p - 1);
                    assert_eq!(report.certificate.span as i64, report.bound + excess as i64);
                }
            }
        }
    }
}

fn level_multiset(g: &Graph) -> Vec<usize> {
    let a = BlockGraphAnalysis::new(g).unwrap();
    let mut levels = a.profile.levels().to_vec();
    levels.sort_unstable();
    levels
}

#[test]
fn symmetric_graphs_match_level_wise_specs() {
    for p in 2..=3 {
        for k in 1..=3 {
            for d in 2..=6 {
                let spec = FamilySpec::Symmetric { p, k, d };
                if spec.validate().map_or(true, |n| n > 400) {
                    continue;
                }
                let direct = symmetric_block_graph(p, k, d).unwrap();
                let level_wise = gen_family(&spec.as_level_wise()).unwrap();
                assert_eq!(direct.order(), level_wise.order(), "{spec:?}");
                assert_eq!(
                    direct.degree_multiset(),
                    level_wise.degree_multiset(),
                    "{spec:?}"
                );
                assert_eq!(
                    BlockDecomposition::new(&direct).block_size_multiset(),
                    BlockDecomposition::new(&level_wise).block_size_multiset()
                );
                assert_eq!(
                    level_multiset(&direct),
                    level_multiset(&level_wise),
                    "{spec:?}"
                );
                // every block is K_{p+1}, every cut vertex in k+1 blocks
                let decomposition = BlockDecomposition::new(&direct);
                assert!(decomposition.blocks().iter().all(|b| b.len() == p + 1));
                assert!(decomposition
                    .cut_vertices()
                    .iter()
                    .all(|&v| decomposition.blocks_of(v).len() == k + 1));
                assert_eq!(
                    family_hc_formula(&spec).unwrap().value,
                    family_hc_formula(&spec.as_level_wise()).unwrap().value
                );
                let a = BlockGraphAnalysis::new(&direct).unwrap();
                assert_eq!(
                    family_hc_formula(&spec).unwrap().value,
                    lower_bound(&a.profile)
                );
            }
        }
    }
}

#[test]
fn symmetric_orderings_realize_the_formula() {
    for (p, k, d) in [(2, 2, 3), (2, 2, 4), (3, 2, 3), (2, 3, 4), (2, 1, 5)] {
        let report = family_report(&FamilySpec::Symmetric { p, k, d }).unwrap();
        assert!(report.agreement, "p={p} k={k} d={d}");
    }
}

fn single_center_graph() -> impl Strategy<Value = Graph> {
    (any::<u64>(), 3usize..=14, 2usize..=4)
        .prop_map(|(seed, n, q)| random_block_graph(seed, n, q))
        .prop_filter("single central vertex", |g| {
            BlockGraphAnalysis::new(g).unwrap().profile.omega() == 1
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gluing_bound_identity(graphs in proptest::collection::vec(single_center_graph(), 1..4)) {
        let glued = glue_at_centers(&graphs).unwrap();
        let n: usize = graphs.iter().map(Graph::order).sum::<usize>() - graphs.len() + 1;
        prop_assert_eq!(glued.graph.order(), n);
        let bounds: Vec<i64> = graphs
            .iter()
            .map(|g| lower_bound(&BlockGraphAnalysis::new(g).unwrap().profile))
            .collect();
        let a = BlockGraphAnalysis::new(&glued.graph).unwrap();
        prop_assert_eq!(a.profile.center(), &[0]);
        prop_assert_eq!(a.profile.xi(), *glued.xis.iter().min().unwrap());
        prop_assert_eq!(lower_bound(&a.profile), glued_hc_formula(&bounds, &glued.orders, &glued.xis));
    }

    #[test]
    fn glued_family_orderings_pass(picks in proptest::collection::vec(0usize..6, 1..4)) {
        let menu = [
            FamilySpec::Star { k: 3 },
            FamilySpec::Star { k: 5 },
            FamilySpec::OnePointUnion { p: 3, k: 3 },
            FamilySpec::OnePointUnion { p: 4, k: 4 },
            FamilySpec::LevelWiseG1 { levels: vec![LevelSpec::new(3, 2), LevelSpec::new(1, 2)] },
            FamilySpec::ExtendedStarOfBlocks { m: 2, p: 3, k: 3 },
        ];
        let specs: Vec<&FamilySpec> = picks.iter().map(|&i| &menu[i]).collect();
        let graphs: Vec<Graph> = specs.iter().map(|s| gen_family(s).unwrap()).collect();
        let orderings: Vec<_> = specs.iter().map(|s| family_ordering(s).unwrap()).collect();
        let glued = glue_at_centers(&graphs).unwrap();
        let ord = glued_ordering(&glued, &orderings).unwrap();
        let a = BlockGraphAnalysis::new(&glued.graph).unwrap();
        prop_assert_eq!(check_ordering_thm2(&a.profile, &a.table, &ord), Ok(()));
        let hcs: Vec<i64> = specs.iter().map(|s| family_hc_formula(s).unwrap().value).collect();
        prop_assert_eq!(lower_bound(&a.profile), glued_hc_formula(&hcs, &glued.orders, &glued.xis));
    }
}

#[test]
fn glued_ordering_of_one_input_is_relabeled_identity() {
    let star = gen_family(&FamilySpec::Star { k: 4 }).unwrap();
    let glued = glue_at_centers(&[star]).unwrap();
    let own = family_ordering(&FamilySpec::Star { k: 4 }).unwrap();
    let ord = glued_ordering(&glued, std::slice::from_ref(&own)).unwrap();
    assert_eq!(ord.as_slice(), own.as_slice());
    // boundary between two inputs crosses branches
    let two = glue_at_centers(&[
        gen_family(&FamilySpec::Star { k: 3 }).unwrap(),
        gen_family(&FamilySpec::OnePointUnion { p: 3, k: 3 }).unwrap(),
    ])
    .unwrap();
    let ord = glued_ordering(
        &two,
        &[
            family_ordering(&FamilySpec::Star { k: 3 }).unwrap(),
            family_ordering(&FamilySpec::OnePointUnion { p: 3, k: 3 }).unwrap(),
        ],
    )
    .unwrap();
    let a = BlockGraphAnalysis::new(&two.graph).unwrap();
    // the star has the smaller xi, so it goes last
    assert_eq!(*ord.as_slice().last().unwrap(), two.vertex_maps[0][3]);
    assert_eq!(check_ordering_thm2(&a.profile, &a.table, &ord), Ok(()));
}
