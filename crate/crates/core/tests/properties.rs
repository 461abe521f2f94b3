use proptest::prelude::*;

use ringgenus_core::cgraph::{parse_adjacency_list, to_adjacency_list, DEFAULT_ORACLE_BUDGET};
use ringgenus_core::theorems::solve_positive;
use ringgenus_core::{
    centralizer, clique_decomposition, commuting_graph, components, euler_lower_bound,
    genus_clique_union, genus_complete, genus_oracle, matrix_ring, upper_triangular_ring,
    CliqueDecomposition, Element, Graph, Limits,
};

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn oracle_ignores_vertex_labels(perm in permutation(5)) {
        let g = Graph::complete(5).relabel(&perm);
        prop_assert_eq!(genus_oracle(&g, DEFAULT_ORACLE_BUDGET).unwrap().value, 1);
    }

    #[test]
    fn oracle_on_relabelled_union(perm in permutation(9)) {
        let g = Graph::complete(5).disjoint_union(&Graph::cycle(4)).relabel(&perm);
        let r = genus_oracle(&g, DEFAULT_ORACLE_BUDGET).unwrap();
        prop_assert_eq!(r.value, 1);
        prop_assert!(r.value >= euler_lower_bound(&g));
    }

    #[test]
    fn clique_union_genus_is_additive(sizes in prop::collection::vec(1usize..40, 1..6)) {
        let d = CliqueDecomposition::cliques(sizes.iter().map(|&s| (s, 1)));
        let sum: u64 = sizes.iter().map(|&s| genus_complete(s as u64)).sum();
        prop_assert_eq!(genus_clique_union(&d).unwrap().value, sum);
    }

    #[test]
    fn positive_solutions_are_complete(a in 1u64..6, b in 1u64..6, c in 1u64..6, total in 0u64..60) {
        let got = solve_positive(&[a, b, c], total);
        let mut brute = Vec::new();
        for x in 1..=total {
            for y in 1..=total {
                for z in 1..=total {
                    if a * x + b * y + c * z == total {
                        brute.push(vec![x, y, z]);
                    }
                }
            }
        }
        prop_assert_eq!(got, brute);
    }

    #[test]
    fn adjacency_list_round_trip(n in 1usize..12, raw in prop::collection::btree_set((0usize..12, 0usize..12), 0..30)) {
        let edges: Vec<_> = raw.into_iter().filter(|&(u, v)| u < v && v < n).collect();
        let g = Graph::from_edges(n, edges).unwrap();
        prop_assert_eq!(parse_adjacency_list(&to_adjacency_list(&g)).unwrap(), g);
    }
}

#[test]
fn complete_genus_is_monotone_and_above_euler_bound() {
    for n in 1..=100u64 {
        assert!(genus_complete(n) <= genus_complete(n + 1));
        let m = (n * n.saturating_sub(1) / 2) as i64;
        let euler = if n >= 3 {
            ((m - 3 * n as i64 + 6).max(0) as u64).div_ceil(6)
        } else {
            0
        };
        assert!(genus_complete(n) >= euler, "K{n}");
    }
    for n in 1..=9 {
        assert!(euler_lower_bound(&Graph::complete(n)) <= genus_complete(n as u64));
    }
}

#[test]
fn centralizers_are_subrings_containing_the_center() {
    let limits = Limits::default();
    for ring in [
        matrix_ring(2, &limits).unwrap(),
        upper_triangular_ring(3, &limits).unwrap(),
    ] {
        for x in ring.elements() {
            let c = centralizer(&ring, x).unwrap();
            assert!(c.contains(&x));
            assert!(ring.center().iter().all(|z| c.contains(z)));
            for &a in &c {
                for &b in &c {
                    assert!(c.contains(&ring.add(a, b)));
                    assert!(c.contains(&ring.mul(a, b)));
                }
            }
        }
    }
}

#[test]
fn components_of_commuting_graphs_are_centralizers_minus_center() {
    let ring = matrix_ring(3, &Limits::default()).unwrap();
    let g = commuting_graph(&ring).unwrap();
    for comp in components(&g) {
        let x = g.vertices()[comp[0]];
        let mut expect: Vec<Element> = centralizer(&ring, x)
            .unwrap()
            .into_iter()
            .filter(|&y| !ring.is_central(y))
            .collect();
        expect.sort();
        let mut got: Vec<Element> = comp.iter().map(|&v| g.vertices()[v]).collect();
        got.sort();
        assert_eq!(got, expect);
    }
    assert!(clique_decomposition(&g).all_cliques());
}

#[test]
fn stated_lower_bounds_hold_up_to_thirteen() {
    use ringgenus_core::theorems::stated_lower_bound;
    use ringgenus_core::{predict, CaseId, TheoremCase};
    let primes = [2u64, 3, 5, 7, 11, 13];
    let mut checked = 0;
    for id in [
        CaseId::T21a,
        CaseId::T21b,
        CaseId::T22a,
        CaseId::T22b,
        CaseId::T24,
        CaseId::T25c,
    ] {
        for p in primes {
            let qs: Vec<Option<u64>> = if id.uses_q() {
                primes.iter().map(|&q| Some(q)).collect()
            } else {
                vec![None]
            };
            for q in qs {
                let case = TheoremCase::new(id, p, q, None, None).unwrap();
                for o in predict(&case).unwrap().outcomes {
                    if let Some(b) = stated_lower_bound(&case, &o) {
                        assert!(o.genus >= b, "{case} {}: {} < {b}", o.label(), o.genus);
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 30, "{checked}");
}
