//! Deciding whether a graph has a nontrivial circuit injection into some
//! binary matroid, and building one when it does.
//!
//! A graph `G` without isolated vertices has no such map exactly when it
//! is Hamiltonian (even order) or almost Hamiltonian (odd order). When it
//! does, a set `S` whose odd-degree vertices lie on no common circuit
//! yields the extension `⟨𝒞(G) ∪ {S}⟩_min`, in which every circuit of `G`
//! stays a circuit and new circuits appear.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{bonds, enumerate_circuits, generate_named, is_almost_hamiltonian, is_hamiltonian, Graph};
use crate::limits::Limits;
use crate::maps::{is_circuit_injection_into, is_trivial_into};
use crate::matroid::{minimal_elements, span, span_min, Gf2Space, Matroid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    NoNontrivialMap,
    NontrivialMapExists,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    Hamiltonian,
    AlmostHamiltonian,
    WitnessFound,
}

#[derive(Debug, Clone)]
pub struct WitnessReport {
    pub verdict: Verdict,
    pub reason: Reason,
    pub witness_s: Option<EdgeSet>,
    pub witness_matroid: Option<Matroid>,
    pub odd_vertices: Option<Vec<usize>>,
}

impl WitnessReport {
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        serde_json::json!({
            "odd_vertices": self.odd_vertices.as_ref().map(|vs| vs.iter().map(|&v| g.vertex_id(v).clone()).collect::<Vec<_>>()),
            "reason": self.reason,
            "verdict": self.verdict,
            "witness_matroid": self.witness_matroid.as_ref().map(Matroid::to_json),
            "witness_s": self.witness_s.as_ref().map(|s| s.iter().map(|e| g.edge_name(e).to_owned()).collect::<Vec<_>>()),
        })
    }
}

/// `Some(reason)` when the graph meets the Hamiltonian condition for its
/// parity, `None` otherwise.
fn no_map_reason(g: &Graph, limits: &Limits) -> Result<Option<Reason>> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(g.vertex_id(v).clone()));
    }
    if is_hamiltonian(g, limits)? {
        return Ok(Some(Reason::Hamiltonian));
    }
    if g.order() % 2 == 1 && is_almost_hamiltonian(g, limits)? {
        return Ok(Some(Reason::AlmostHamiltonian));
    }
    Ok(None)
}

pub fn decide_no_nontrivial_map(g: &Graph, limits: &Limits) -> Result<WitnessReport> {
    if let Some(reason) = no_map_reason(g, limits)? {
        return Ok(WitnessReport {
            verdict: Verdict::NoNontrivialMap,
            reason,
            witness_s: None,
            witness_matroid: None,
            odd_vertices: None,
        });
    }
    let (s, odd) = search_witness(g, limits)?;
    let ext = binary_extension(g, &s, limits)?;
    if let Validity::InvalidEq21 { element, circuit } = &ext.validity {
        return Err(Error::InternalContradiction(format!(
            "witness {:?} gives {element:?} strictly inside circuit {circuit:?}",
            s.to_vec()
        )));
    }
    revalidate(g, &ext.matroid, limits)?;
    Ok(WitnessReport {
        verdict: Verdict::NontrivialMapExists,
        reason: Reason::WitnessFound,
        witness_s: Some(s),
        witness_matroid: Some(ext.matroid),
        odd_vertices: Some(odd),
    })
}

/// The emitted matroid must be binary, satisfy the axioms, keep every
/// circuit of `G`, add new ones, and receive `G` nontrivially.
fn revalidate(g: &Graph, m: &Matroid, limits: &Limits) -> Result<()> {
    let own = enumerate_circuits(g, limits)?;
    let id: Vec<usize> = (0..g.size()).collect();
    let problem = if !m.is_binary() {
        Some("witness matroid is not binary")
    } else if !m.verify_circuit_axioms().is_ok() {
        Some("witness matroid violates the circuit axioms")
    } else if m.circuits().len() <= own.len() || !own.iter().all(|c| m.is_circuit(c)) {
        Some("witness matroid does not strictly extend the circuits of the graph")
    } else if !is_circuit_injection_into(g, m, &id, limits)? || is_trivial_into(g, m, &id, limits)? {
        Some("identity is not a nontrivial circuit injection")
    } else {
        None
    };
    match problem {
        Some(msg) => Err(Error::InternalContradiction(msg.into())),
        None => Ok(()),
    }
}

/// A set `S` of edges whose odd-degree vertices lie on no common circuit,
/// with those vertices. Candidates are tried as single edges, then pairs,
/// then matchings of growing size, then arbitrary sets of growing size.
///
/// Only meaningful when the graph fails the Hamiltonian condition for its
/// parity; a graph meeting it is rejected up front, and a graph failing it
/// without any witness is an alarm.
pub fn find_witness_set(g: &Graph, limits: &Limits) -> Result<(EdgeSet, Vec<usize>)> {
    if let Some(reason) = no_map_reason(g, limits)? {
        return Err(Error::PreconditionUnmet(format!(
            "graph is {} so no witness set exists",
            if reason == Reason::Hamiltonian { "Hamiltonian" } else { "almost Hamiltonian" }
        )));
    }
    search_witness(g, limits)
}

fn search_witness(g: &Graph, limits: &Limits) -> Result<(EdgeSet, Vec<usize>)> {
    if g.order() > 64 {
        return Err(Error::CapExceeded { what: "vertex count for witness search", size: g.order(), cap: 64 });
    }
    let mut spans: Vec<u64> = enumerate_circuits(g, limits)?
        .iter()
        .map(|c| g.vertices_of(c).iter().fold(0u64, |m, &v| m | 1 << v))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    spans.sort_unstable();
    let ends: Vec<u64> = g.edges().iter().map(|&(u, v)| 1u64 << u | 1 << v).collect();
    let good = |set: &[usize]| {
        let odd = set.iter().fold(0u64, |m, &e| m ^ ends[e]);
        odd != 0 && !spans.iter().any(|&s| s & odd == odd)
    };
    let found = |set: &[usize]| {
        let s = g.edge_set(set.iter().copied());
        let odd = g.odd_vertices(&s);
        Ok((s, odd))
    };
    let m = g.size();
    for k in 1..=2.min(m) {
        if let Some(set) = combinations(m, k, &mut 0, u64::MAX, &|set| good(set))? {
            return found(&set);
        }
    }
    let mut nodes = 0u64;
    for k in 3..=g.order() / 2 {
        if let Some(set) = matchings(g, k, &mut nodes, limits.search_nodes, &good)? {
            return found(&set);
        }
    }
    for k in 3..=m {
        if let Some(set) = combinations(m, k, &mut nodes, limits.search_nodes, &|set| good(set))? {
            return found(&set);
        }
    }
    Err(Error::NoWitnessFound(format!("graph of order {} fails the Hamiltonian condition", g.order())))
}

/// First `k`-subset of `0..m` in lexicographic order accepted by `accept`.
fn combinations(m: usize, k: usize, nodes: &mut u64, budget: u64, accept: &dyn Fn(&[usize]) -> bool) -> Result<Option<Vec<usize>>> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::SearchBudgetExceeded(budget));
        }
        if accept(&idx) {
            return Ok(Some(idx));
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
            return Ok(None);
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// First `k`-matching (edge ids increasing) accepted by `accept`.
fn matchings(g: &Graph, k: usize, nodes: &mut u64, budget: u64, accept: &dyn Fn(&[usize]) -> bool) -> Result<Option<Vec<usize>>> {
    fn go(g: &Graph, k: usize, from: usize, used: u64, set: &mut Vec<usize>, nodes: &mut u64, budget: u64, accept: &dyn Fn(&[usize]) -> bool) -> Result<bool> {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::SearchBudgetExceeded(budget));
        }
        if set.len() == k {
            return Ok(accept(set));
        }
        for e in from..g.size() {
            let (u, v) = g.endpoints(e);
            let ends = 1u64 << u | 1 << v;
            if used & ends == 0 {
                set.push(e);
                if go(g, k, e + 1, used | ends, set, nodes, budget, accept)? {
                    return Ok(true);
                }
                set.pop();
            }
        }
        Ok(false)
    }
    let mut set = Vec::new();
    Ok(go(g, k, 0, 0, &mut set, nodes, budget, accept)?.then_some(set))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Validity {
    ValidNontrivial,
    /// `element` is in the extended span and lies strictly inside the graph
    /// circuit `circuit`, so that circuit is no longer minimal.
    InvalidEq21 { element: Vec<usize>, circuit: Vec<usize> },
}

#[derive(Debug, Clone)]
pub struct Extension {
    pub matroid: Matroid,
    pub validity: Validity,
}

/// `⟨𝒞(G) ∪ {S}⟩_min`, and whether every circuit of `G` survives in it.
pub fn binary_extension(g: &Graph, s: &EdgeSet, limits: &Limits) -> Result<Extension> {
    let circuits = enumerate_circuits(g, limits)?;
    let mut space = span(g.ground(), &circuits)?;
    if !space.insert(s)? {
        return Err(Error::SInSpan);
    }
    let minimal = minimal_elements(&space, limits)?;
    let mut validity = Validity::ValidNontrivial;
    let kept: HashSet<&EdgeSet> = minimal.iter().collect();
    if let Some(c) = circuits.iter().find(|c| !kept.contains(c)) {
        let inner = minimal.iter().find(|x| x.count() < c.count() && x.is_subset(c).unwrap_or(false));
        let inner = inner.expect("a non-minimal span element contains a minimal one");
        validity = Validity::InvalidEq21 { element: inner.to_vec(), circuit: c.to_vec() };
    }
    let matroid = span_min(g.ground(), &circuits.iter().cloned().chain([s.clone()]).collect::<Vec<_>>(), limits)?;
    debug_assert_eq!(matroid.circuits(), &minimal[..]);
    Ok(Extension { matroid, validity })
}

/// Mask-level view of a GF(2) space for fast coset reduction.
struct MaskSpace {
    rows: Vec<(u64, u64)>,
}

impl MaskSpace {
    fn new(space: &Gf2Space) -> MaskSpace {
        MaskSpace { rows: space.basis().iter().map(|r| (r.mask(), 1u64 << r.first().expect("nonzero row"))).collect() }
    }

    fn reduce(&self, mut x: u64) -> u64 {
        for &(row, pivot) in &self.rows {
            if x & pivot != 0 {
                x ^= row;
            }
        }
        x
    }
}

/// The first edge set `w` (by bitmask value) outside the cycle space such
/// that every circuit of `G` stays minimal in `span(𝒞 ∪ {w})`, or `None`.
///
/// This decides the existence of a nontrivial circuit injection into any
/// binary matroid: if `W` is the circuit space of a valid binary target
/// and `w ∈ W` lies outside the cycle space, then `span(𝒞 ∪ {w}) ⊆ W`
/// has no element strictly inside a circuit either.
///
/// `w` fails exactly when `w + z` is a nonempty proper subset of some
/// circuit for a cycle-space element `z`, i.e. when `w` shares a coset
/// with such a subset; those cosets are collected first.
pub fn enumerate_single_generator_extensions(g: &Graph, limits: &Limits) -> Result<Option<EdgeSet>> {
    let m = g.size();
    if m > limits.extension_edges {
        return Err(Error::CapExceeded { what: "edge count for extension scan", size: m, cap: limits.extension_edges });
    }
    let circuits = enumerate_circuits(g, limits)?;
    let space = MaskSpace::new(&span(g.ground(), &circuits)?);
    let mut bad: HashSet<u64> = HashSet::new();
    for c in &circuits {
        let full = c.mask();
        let mut sub = (full - 1) & full;
        while sub != 0 {
            bad.insert(space.reduce(sub));
            sub = (sub - 1) & full;
        }
    }
    let hit = (1u64..1 << m).into_par_iter().find_first(|&w| {
        let r = space.reduce(w);
        r != 0 && !bad.contains(&r)
    });
    Ok(hit.map(|w| EdgeSet::from_mask(g.ground().tag(), m, w)))
}

#[derive(Debug, Clone)]
pub struct DualCompleteReport {
    pub n: usize,
    pub bond_matroid: Matroid,
    pub extension: Matroid,
    pub extension_dimension: usize,
    /// Every bond of `Kₙ` is still a circuit of the extension.
    pub bonds_stay_circuits: bool,
    /// Circuits of the extension that are not bonds.
    pub new_circuits: usize,
}

impl DualCompleteReport {
    pub fn nontrivial_injection(&self) -> bool {
        self.bonds_stay_circuits && self.new_circuits > 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "bond_count": self.bond_matroid.circuits().len(),
            "bonds_stay_circuits": self.bonds_stay_circuits,
            "extension_circuits": self.extension.circuits().len(),
            "extension_dimension": self.extension_dimension,
            "n": self.n,
            "new_circuits": self.new_circuits,
            "nontrivial_injection": self.nontrivial_injection(),
        })
    }
}

/// The bond matroid of `Kₙ` against `⟨bonds(Kₙ) ∪ {E(Kₙ)}⟩_min`.
pub fn dual_complete_witness(n: usize, limits: &Limits) -> Result<DualCompleteReport> {
    if n > limits.dual_complete_order {
        return Err(Error::CapExceeded { what: "order of the complete graph", size: n, cap: limits.dual_complete_order });
    }
    if n < 3 {
        return Err(Error::BadParams(format!("complete graph needs n >= 3, got {n}")));
    }
    let kn = generate_named("complete", &[n])?;
    let bond_matroid = Matroid::new(kn.ground().clone(), bonds(&kn)?)?;
    let mut family = bond_matroid.circuits().to_vec();
    family.push(kn.ground().full_set());
    let extension = span_min(kn.ground(), &family, limits)?;
    let extension_dimension = span(kn.ground(), &family)?.dim();
    let bonds_stay_circuits = bond_matroid.circuits().iter().all(|b| extension.is_circuit(b));
    let new_circuits = extension.circuits().iter().filter(|c| !bond_matroid.is_circuit(c)).count();
    Ok(DualCompleteReport { n, bond_matroid, extension, extension_dimension, bonds_stay_circuits, new_circuits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    fn named(name: &str, params: &[usize]) -> Graph {
        generate_named(name, params).unwrap()
    }

    /// Oracle: scan every vector and test minimality of every circuit in
    /// the enlarged span by brute-force membership.
    fn brute_single_generator(g: &Graph) -> Option<u64> {
        let l = Limits::default();
        let circuits = enumerate_circuits(g, &l).unwrap();
        let z = span(g.ground(), &circuits).unwrap();
        (1u64..1 << g.size()).find(|&w| {
            let w_set = EdgeSet::from_mask(g.ground().tag(), g.size(), w);
            if z.contains(&w_set).unwrap() {
                return false;
            }
            let mut bigger = z.clone();
            bigger.insert(&w_set).unwrap();
            circuits.iter().all(|c| {
                let full = c.mask();
                let mut sub = (full - 1) & full;
                while sub != 0 {
                    if bigger.contains(&EdgeSet::from_mask(g.ground().tag(), g.size(), sub)).unwrap() {
                        return false;
                    }
                    sub = (sub - 1) & full;
                }
                true
            })
        })
    }

    #[test]
    fn decide_examples() {
        let l = Limits::default();
        let k4 = decide_no_nontrivial_map(&named("complete", &[4]), &l).unwrap();
        assert_eq!((k4.verdict, k4.reason), (Verdict::NoNontrivialMap, Reason::Hamiltonian));
        assert!(k4.witness_matroid.is_none());
        let c5 = decide_no_nontrivial_map(&named("cycle", &[5]), &l).unwrap();
        assert_eq!(c5.verdict, Verdict::NoNontrivialMap);
        let p = named("petersen", &[]);
        let rep = decide_no_nontrivial_map(&p, &l).unwrap();
        assert_eq!((rep.verdict, rep.reason), (Verdict::NontrivialMapExists, Reason::WitnessFound));
        let m = rep.witness_matroid.as_ref().unwrap();
        assert!(m.is_binary());
        assert!(m.circuits().len() > 57);
        let json = rep.to_json(&p);
        assert_eq!(json["verdict"], "nontrivial_map_exists");
        assert!(json["witness_s"].is_array());
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = Graph::from_pairs(4, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(matches!(decide_no_nontrivial_map(&g, &Limits::default()), Err(Error::IsolatedVertex(_))));
    }

    #[test]
    fn witness_sets() {
        let l = Limits::default();
        let bowtie = named("bowtie", &[]);
        let (s, odd) = find_witness_set(&bowtie, &l).unwrap();
        assert_eq!(odd.len(), 4);
        assert_eq!(binary_extension(&bowtie, &s, &l).unwrap().validity, Validity::ValidNontrivial);
        // The two outer edges, one per triangle, away from the cut vertex.
        let outer = bowtie.edge_set([0, 4]);
        assert_eq!(bowtie.odd_vertices(&outer), vec![0, 1, 3, 4]);
        assert_eq!(binary_extension(&bowtie, &outer, &l).unwrap().validity, Validity::ValidNontrivial);

        let p = named("petersen", &[]);
        let (s, odd) = find_witness_set(&p, &l).unwrap();
        assert_eq!(odd, p.odd_vertices(&s));
        assert!(matches!(find_witness_set(&named("complete", &[4]), &l), Err(Error::PreconditionUnmet(_))));
    }

    #[test]
    fn petersen_perfect_matching_extension() {
        let l = Limits::default();
        let p = named("petersen", &[]);
        let spokes = p.edge_set(10..15);
        assert_eq!(p.odd_vertices(&spokes).len(), 10);
        let ext = binary_extension(&p, &spokes, &l).unwrap();
        assert_eq!(ext.validity, Validity::ValidNontrivial);
        let circuits = enumerate_circuits(&p, &l).unwrap();
        let mut family = circuits.clone();
        family.push(spokes);
        assert_eq!(span(p.ground(), &family).unwrap().dim(), 7);
        assert!(ext.matroid.is_binary());
        assert!(circuits.iter().all(|c| ext.matroid.is_circuit(c)));
        assert!(ext.matroid.circuits().len() > circuits.len());
    }

    #[test]
    fn k4_single_edge_extension_is_invalid() {
        let l = Limits::default();
        let k4 = named("complete", &[4]);
        let ext = binary_extension(&k4, &k4.edge_set([0]), &l).unwrap();
        match ext.validity {
            Validity::InvalidEq21 { element, circuit } => {
                assert!(element.len() < circuit.len());
                assert!(element.iter().all(|e| circuit.contains(e)));
            }
            Validity::ValidNontrivial => panic!("K4 admits no valid extension"),
        }
        let tri = enumerate_circuits(&k4, &l).unwrap()[0].clone();
        assert!(matches!(binary_extension(&k4, &tri, &l), Err(Error::SInSpan)));
    }

    #[test]
    fn single_generator_examples() {
        let l = Limits::default();
        assert_eq!(enumerate_single_generator_extensions(&named("complete", &[4]), &l).unwrap(), None);
        assert!(enumerate_single_generator_extensions(&named("petersen", &[]), &l).unwrap().is_some());
        assert!(enumerate_single_generator_extensions(&named("bowtie", &[]), &l).unwrap().is_some());
        let tight = Limits { extension_edges: 5, ..l };
        assert!(matches!(
            enumerate_single_generator_extensions(&named("complete", &[4]), &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn single_generator_scan_matches_brute_force() {
        for g in catalog::connected_graphs(5).into_iter().filter(|g| g.order() >= 2) {
            let fast = enumerate_single_generator_extensions(&g, &Limits::default()).unwrap();
            assert_eq!(fast.map(|w| w.mask()), brute_single_generator(&g));
        }
    }

    #[test]
    fn dual_complete() {
        let l = Limits::default();
        let k5 = dual_complete_witness(5, &l).unwrap();
        assert!(k5.nontrivial_injection());
        assert_eq!(k5.extension_dimension, 5);
        assert_eq!(k5.bond_matroid.circuits().len(), 15);
        // In K4 the complement of the cut {13, 14, 23, 24} is the pair {12, 34},
        // which lies strictly inside the bond {12, 14, 23, 34}.
        let k4 = dual_complete_witness(4, &l).unwrap();
        assert!(!k4.bonds_stay_circuits);
        assert!(matches!(dual_complete_witness(7, &l), Err(Error::CapExceeded { .. })));
    }
}
