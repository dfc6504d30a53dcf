//! Exhaustive and sampled checks of the structural statements the library
//! relies on, over small graph catalogs.

use std::collections::HashSet;
use std::sync::Arc;

use cyclemap::graph::{
    bonds, catalog, enumerate_circuits, generate_named, is_almost_hamiltonian, is_circuit, is_hamiltonian,
    is_k_connected, Graph,
};
use cyclemap::maps::{classify_map, decompose, enumerate_circuit_surjections, fibers, EdgeMap, MapClass};
use cyclemap::matroid::span;
use cyclemap::witness::{binary_extension, decide_no_nontrivial_map, Validity, Verdict};
use cyclemap::{EdgeSet, Limits};
use proptest::prelude::*;

fn limits() -> Limits {
    Limits::default()
}

fn vertex_masks(g: &Graph) -> Vec<u64> {
    enumerate_circuits(g, &limits())
        .unwrap()
        .iter()
        .map(|c| g.vertices_of(c).iter().fold(0u64, |m, &v| m | 1 << v))
        .collect()
}

fn odd_mask(g: &Graph, set: &EdgeSet) -> u64 {
    g.odd_vertices(set).iter().fold(0u64, |m, &v| m | 1 << v)
}

/// 2-connected sources small enough for the surjection search, together
/// with every surjection onto a non-circuit target.
fn two_connected_surjections() -> Vec<EdgeMap> {
    let mut sources: Vec<Graph> = catalog::connected_graphs(6)
        .into_iter()
        .filter(|g| g.size() <= 8 && is_k_connected(g, 2))
        .collect();
    sources.push(generate_named("k4-subdivided", &[]).unwrap());
    let mut out = Vec::new();
    for s in &sources {
        for m in 1..=s.size() {
            for t in catalog::graphs_without_isolated(m) {
                if is_circuit(&t, &t.ground().full_set()) {
                    continue;
                }
                out.extend(enumerate_circuit_surjections(s, &t, &limits()).unwrap());
            }
        }
    }
    out
}

#[test]
fn fibers_of_surjections_are_series_classes_and_decompose() {
    let maps = two_connected_surjections();
    let non_injective = maps.iter().filter(|f| !f.is_bijective()).count();
    assert!(non_injective > 0, "sweep should include maps that merge edges");
    for f in &maps {
        let parts = fibers(f, &limits()).unwrap();
        for a in &parts.fibers {
            let members = a.to_vec();
            for (i, &x) in members.iter().enumerate() {
                for &y in &members[i + 1..] {
                    assert!(f.source().is_bond(&f.source().edge_set([x, y])));
                }
            }
        }
        let d = decompose(f, &limits()).unwrap();
        assert_eq!(classify_map(&d.q, &limits()).unwrap().class, MapClass::CircuitInjection);
        for e in 0..f.source().size() {
            assert_eq!(d.q.apply(d.h.apply(d.k.apply(e))), f.apply(e));
        }
    }
}

#[test]
fn three_connected_bound_and_degrees() {
    for g in catalog::connected_graphs(7).iter().filter(|g| is_k_connected(g, 3)) {
        assert!(2 * g.size() >= 3 * g.order());
        assert!((0..g.order()).all(|v| g.degree(v) >= 3));
    }
}

#[test]
fn hamiltonian_implies_almost_hamiltonian() {
    for g in catalog::connected_graphs(7).iter().filter(|g| g.order() >= 3) {
        if is_hamiltonian(g, &limits()).unwrap() {
            assert!(is_almost_hamiltonian(g, &limits()).unwrap());
        }
    }
}

#[test]
fn bonds_are_orthogonal_to_circuits() {
    for g in catalog::connected_graphs(6).iter().filter(|g| g.order() >= 2) {
        let cs = enumerate_circuits(g, &limits()).unwrap();
        for b in bonds(g).unwrap() {
            for c in &cs {
                assert_eq!(b.intersection(c).unwrap().count() % 2, 0);
            }
        }
    }
}

#[test]
fn no_map_implies_two_connected() {
    for g in catalog::connected_graphs(6).iter().filter(|g| g.order() >= 2) {
        if decide_no_nontrivial_map(g, &limits()).unwrap().verdict == Verdict::NoNontrivialMap {
            assert!(is_k_connected(g, 2), "{:?}", g.edges());
        }
    }
}

/// Every edge set's odd-degree vertices lie on one circuit when no
/// nontrivial map exists; checked over all edge subsets, not a sample.
#[test]
fn odd_vertices_lie_on_a_common_circuit() {
    for g in catalog::connected_graphs(6).iter().filter(|g| g.order() >= 4) {
        if decide_no_nontrivial_map(g, &limits()).unwrap().verdict != Verdict::NoNontrivialMap {
            continue;
        }
        let spans = vertex_masks(g);
        for mask in 1u64..1 << g.size() {
            let s = EdgeSet::from_mask(g.ground().tag(), g.size(), mask);
            let odd = odd_mask(g, &s);
            if odd != 0 {
                assert!(spans.iter().any(|&c| c & odd == odd), "{:?} {mask:b}", g.edges());
            }
        }
    }
}

/// On Hamiltonian graphs every single-set extension breaks some circuit.
#[test]
fn hamiltonian_graphs_have_no_valid_extension() {
    for g in catalog::connected_graphs(5).iter().filter(|g| g.order() >= 3) {
        if !is_hamiltonian(g, &limits()).unwrap() {
            continue;
        }
        let z = span(g.ground(), &enumerate_circuits(g, &limits()).unwrap()).unwrap();
        for mask in 1u64..1 << g.size() {
            let s = EdgeSet::from_mask(g.ground().tag(), g.size(), mask);
            if z.contains(&s).unwrap() {
                continue;
            }
            let ext = binary_extension(g, &s, &limits()).unwrap();
            assert!(matches!(ext.validity, Validity::InvalidEq21 { .. }));
        }
    }
}

fn oracle_graphs() -> Vec<Graph> {
    catalog::connected_graphs(6).into_iter().filter(|g| g.order() >= 4).collect()
}

/// Whether all circuits stay minimal in `span(𝒞 ∪ extra)`, by brute force.
fn keeps_circuits(g: &Graph, extra: &[u64]) -> bool {
    let cs = enumerate_circuits(g, &limits()).unwrap();
    let mut family = cs.clone();
    family.extend(extra.iter().map(|&w| EdgeSet::from_mask(g.ground().tag(), g.size(), w)));
    let space = span(g.ground(), &family).unwrap();
    cs.iter().all(|c| {
        let full = c.mask();
        let mut sub = (full - 1) & full;
        while sub != 0 {
            if space.contains(&EdgeSet::from_mask(g.ground().tag(), g.size(), sub)).unwrap() {
                return false;
            }
            sub = (sub - 1) & full;
        }
        true
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// A valid multi-generator extension always contains a valid single
    /// generator, so the single-generator scan is complete.
    #[test]
    fn multi_generator_extensions_reduce_to_one(idx in 0usize..139, raw in proptest::collection::vec(any::<u64>(), 1..=3)) {
        let graphs = oracle_graphs();
        let g = &graphs[idx];
        let full = (1u64 << g.size()) - 1;
        let gens: Vec<u64> = raw.iter().map(|w| w & full).collect();
        let z = span(g.ground(), &enumerate_circuits(g, &limits()).unwrap()).unwrap();
        let outside: Vec<u64> = {
            let mut space = z.clone();
            let mut fam: Vec<EdgeSet> = Vec::new();
            for &w in &gens {
                let s = EdgeSet::from_mask(g.ground().tag(), g.size(), w);
                if space.insert(&s).unwrap() {
                    fam.push(s);
                }
            }
            // Every element of the extension outside the cycle space.
            let mut seen = HashSet::new();
            for pick in 1u64..1 << fam.len() {
                let mut acc = g.ground().empty_set();
                for (i, s) in fam.iter().enumerate() {
                    if pick >> i & 1 == 1 {
                        acc = acc.sym_diff(s).unwrap();
                    }
                }
                seen.insert(acc.mask());
            }
            seen.into_iter().collect()
        };
        prop_assume!(!outside.is_empty());
        if keeps_circuits(g, &gens) {
            prop_assert!(outside.iter().all(|&w| keeps_circuits(g, &[w])));
            let verdict = decide_no_nontrivial_map(g, &limits()).unwrap().verdict;
            prop_assert_eq!(verdict, Verdict::NontrivialMapExists);
        }
    }
}

#[test]
fn surjection_enumeration_is_stable_across_thread_counts() {
    let w5 = generate_named("wheel", &[5]).unwrap();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| enumerate_circuit_surjections(&w5, &w5, &limits()).unwrap())
    };
    let one: Vec<Vec<usize>> = run(1).iter().map(|f| f.assignment().to_vec()).collect();
    let four: Vec<Vec<usize>> = run(4).iter().map(|f| f.assignment().to_vec()).collect();
    assert_eq!(one.len(), 10);
    assert_eq!(one, four);
}

#[test]
fn subdivision_map_round_trips_through_json() {
    let sub = Arc::new(generate_named("k4-subdivided", &[]).unwrap());
    let k4 = Arc::new(generate_named("complete", &[4]).unwrap());
    let f = EdgeMap::new(sub, k4, vec![0, 0, 1, 2, 3, 4, 5]).unwrap();
    let back = EdgeMap::from_json_str(&f.to_json().to_string()).unwrap();
    assert_eq!(back, f);
}
