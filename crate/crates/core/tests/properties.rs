//! Randomized structural properties over small complexes.

use std::collections::BTreeSet;

use proptest::prelude::*;
use startop::characteristics::{wu, wu_fast};
use startop::energy::{connection_matrix, energy_sum, green_matrix, supertrace, Region};
use startop::graph::{barycentric_refine, complex_to_graph, whitney_complex, Graph};
use startop::hodge::{betti, euler_poincare_check, exterior_derivative};
use startop::homeo::{homeomorphic, invariant_screen, one_dim_homeomorphic, Outcome};
use startop::iso::complexes_isomorphic;
use startop::linalg::IntMatrix;
use startop::recognition::{is_contractible, is_sphere};
use startop::topology::enumerate_topology;
use startop::wubetti::wu_betti;
use startop::{SimplexSet, SimplicialComplex};

fn complex(max_vertex: u32, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(1..=max_vertex, 1..=4), 1..=max_facets)
        .prop_map(|fs: Vec<BTreeSet<u32>>| SimplicialComplex::from_facets(fs).unwrap())
}

fn graph(n: u32) -> impl Strategy<Value = Graph> {
    prop::collection::vec((1..=n, 1..=n), 0..=(2 * n as usize)).prop_map(move |es| {
        let mut g = Graph::edgeless(n);
        for (a, b) in es {
            if a != b {
                g.add_edge(a, b).unwrap();
            }
        }
        g
    })
}

/// Oracle: subsets of a facet, enumerated by bitmask.
fn brute_closure(g: &SimplicialComplex) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for f in g.facets() {
        let v = f.vertices();
        for mask in 1u32..(1 << v.len()) {
            out.insert((0..v.len()).filter(|&i| mask >> i & 1 == 1).map(|i| v[i]).collect());
        }
    }
    out
}

fn as_sets(g: &SimplicialComplex) -> BTreeSet<Vec<u32>> {
    g.simplices().iter().map(|s| s.vertices().to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructors_are_closed(g in complex(7, 5), h in complex(5, 3)) {
        prop_assert_eq!(as_sets(&g), brute_closure(&g));
        for c in [g.join(&h), g.suspension(), barycentric_refine(&g), g.skeleton(1)] {
            prop_assert!(c.is_downward_closed());
        }
        for &v in g.vertices() {
            prop_assert!(g.link(v).unwrap().is_downward_closed());
        }
    }

    #[test]
    fn closure_is_idempotent_and_monotone(g in complex(7, 6), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let idx: Vec<usize> = picks.iter().map(|p| p.index(g.len())).collect();
        let a = SimplexSet::from_indices(&g, idx.iter().copied());
        let b = SimplexSet::from_indices(&g, idx.iter().copied().take(idx.len() / 2));
        prop_assert_eq!(a.closure().closure(), a.closure());
        prop_assert!(b.closure().indices().all(|i| a.closure().contains_index(i)));
        prop_assert!(a.closure().is_closed());
        prop_assert!(a.open_hull().is_open());
    }

    #[test]
    fn join_f_vector_is_a_convolution(g in complex(6, 4), h in complex(6, 4)) {
        let (fg, fh) = (g.f_vector(), h.f_vector());
        let fj = g.join(&h).f_vector();
        let at = |f: &Vec<usize>, k: isize| if k >= 0 { f.get(k as usize).copied().unwrap_or(0) } else { 0 };
        for k in 0..fj.len() as isize {
            let conv: usize = (0..=k - 1).map(|i| at(&fg, i) * at(&fh, k - 1 - i)).sum();
            prop_assert_eq!(at(&fj, k), conv + at(&fg, k) + at(&fh, k));
        }
    }

    #[test]
    fn join_is_associative(a in complex(3, 2), b in complex(3, 2), c in complex(2, 2)) {
        prop_assert!(complexes_isomorphic(&a.join(&b).join(&c), &a.join(&b.join(&c))));
    }

    #[test]
    fn stars_meet_in_stars(g in complex(7, 5)) {
        for i in 0..g.len() {
            for j in 0..g.len() {
                let meet = SimplexSet::star(&g, i).intersection(&SimplexSet::star(&g, j));
                match g.index_of(&g.simplex(i).union(g.simplex(j))) {
                    Some(k) => prop_assert_eq!(meet, SimplexSet::star(&g, k)),
                    None => prop_assert!(meet.is_empty()),
                }
            }
            prop_assert!(SimplexSet::sphere(&g, i).is_closed());
            let ball = SimplexSet::ball(&g, i);
            prop_assert!(ball.is_closed());
            prop_assert!(is_contractible(&ball.to_complex().unwrap()));
        }
    }

    #[test]
    fn opens_are_up_sets(g in complex(5, 3)) {
        prop_assume!(g.len() <= 12);
        let t = enumerate_topology(&g, 1 << 12).unwrap();
        for mask in 0u32..(1 << g.len()) {
            let a = SimplexSet::from_indices(&g, (0..g.len()).filter(|&i| mask >> i & 1 == 1));
            prop_assert_eq!(t.contains(&a), a.complement().is_closed());
        }
    }

    #[test]
    fn refinement_is_whitney_of_comparability(gr in graph(8)) {
        let g = whitney_complex(&gr);
        let g1 = barycentric_refine(&g);
        prop_assert_eq!(&whitney_complex(&complex_to_graph(&g)), &g1);
        prop_assert_eq!(g.euler(), g1.euler());
        prop_assert_eq!(wu(&SimplexSet::full(&g), 2).unwrap(), wu(&SimplexSet::full(&g1), 2).unwrap());
        prop_assert_eq!(betti(&g), betti(&g1));
    }

    #[test]
    fn fast_wu_matches_tuple_sum(g in complex(7, 5)) {
        for m in 1..=3 {
            prop_assert_eq!(wu_fast(&g, m).unwrap(), wu(&SimplexSet::full(&g), m).unwrap());
        }
    }

    #[test]
    fn wu_is_a_valuation_on_open_sets(g in complex(6, 4), a in any::<u64>(), b in any::<u64>()) {
        let pick = |bits: u64| SimplexSet::from_indices(&g, (0..g.len()).filter(|&i| bits >> (i % 64) & 1 == 1)).open_hull();
        let (u, v) = (pick(a), pick(b));
        for m in 1..=3 {
            let lhs = wu(&u.union(&v), m).unwrap();
            let rhs = wu(&u, m).unwrap() + wu(&v, m).unwrap() - wu(&u.intersection(&v), m).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn energy_identities(gr in graph(6)) {
        let g = whitney_complex(&gr);
        prop_assume!(!g.is_empty());
        let l = connection_matrix(&g).unwrap();
        let g1 = green_matrix(&g, 1, Region::Star).unwrap();
        prop_assert_eq!(l.mul(&g1), IntMatrix::identity(g.len()));
        prop_assert_eq!(g1.sum(), g.euler());
        prop_assert_eq!(green_matrix(&g, 2, Region::Star).unwrap().sum(), wu(&SimplexSet::full(&g), 2).unwrap());
        prop_assert_eq!(energy_sum(&g, 3).unwrap(), wu(&SimplexSet::full(&g), 3).unwrap());
        prop_assert_eq!(supertrace(&g).unwrap(), g.euler());
        let fermi: i64 = (0..g.len()).map(|i| g.omega(i)).product();
        prop_assert_eq!(l.determinant(), fermi.into());
    }

    #[test]
    fn cohomology_identities(g in complex(7, 5)) {
        let d = exterior_derivative(&g);
        prop_assert!(d.mul(&d).is_zero());
        prop_assert!(euler_poincare_check(&g));
        let alt: i64 = wu_betti(&g).iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(alt, wu(&SimplexSet::full(&g), 2).unwrap());
    }

    #[test]
    fn spheres_satisfy_the_euler_gem(g in complex(6, 6)) {
        if let Some(d) = is_sphere(&g) {
            prop_assert_eq!(g.euler(), if d % 2 == 0 { 2 } else { 0 });
        }
    }

    #[test]
    fn homeomorphism_is_reflexive_and_symmetric(a in complex(6, 4), b in complex(6, 4)) {
        prop_assert_eq!(homeomorphic(&a, &a, 1, 10_000).outcome, Outcome::Homeomorphic);
        let ab = homeomorphic(&a, &b, 1, 10_000);
        let ba = homeomorphic(&b, &a, 1, 10_000);
        if ab.outcome != Outcome::Inconclusive && ba.outcome != Outcome::Inconclusive {
            prop_assert_eq!(ab.outcome, ba.outcome);
        }
        if let Some(v) = invariant_screen(&a, &b) {
            prop_assert!(v.certificate.recheck(&a, &b));
        }
    }

    #[test]
    fn one_dim_verdicts_are_certified(a in graph(6), b in graph(6)) {
        let (a, b) = (whitney_complex(&a).skeleton(1), whitney_complex(&b).skeleton(1));
        let v = one_dim_homeomorphic(&a, &b).unwrap();
        if v.outcome == Outcome::NotHomeomorphic {
            prop_assert!(v.certificate.recheck(&a, &b));
        }
    }
}

#[test]
fn cycles_are_mutually_homeomorphic() {
    let cycles: Vec<SimplicialComplex> = (4..=8).map(|n| whitney_complex(&Graph::cycle(n))).collect();
    for a in &cycles {
        for b in &cycles {
            assert_eq!(homeomorphic(a, b, 1, 1000).outcome, Outcome::Homeomorphic);
        }
    }
}
