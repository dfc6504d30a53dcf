//! Edge maps between graphs and the circuit-preservation properties they
//! may have.

mod decompose;
mod enumerate;
mod fibers;
mod isomorphism;

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{enumerate_circuits, is_circuit, Graph};
use crate::limits::Limits;
use crate::matroid::Matroid;

pub use decompose::{decompose, Decomposition};
pub use enumerate::enumerate_circuit_surjections;
pub use fibers::{audit_fibers, fiber_partition, fibers, FiberPartition};
pub use isomorphism::induced_vertex_isomorphism;

/// A total map `E(source) → E(target)`.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeMap {
    source: Arc<Graph>,
    target: Arc<Graph>,
    assignment: Vec<usize>,
}

impl std::fmt::Debug for EdgeMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EdgeMap").field("assignment", &self.assignment).finish_non_exhaustive()
    }
}

impl EdgeMap {
    /// `assignment[e]` is the target edge of source edge `e`. The target
    /// may not have isolated vertices.
    pub fn new(source: Arc<Graph>, target: Arc<Graph>, assignment: Vec<usize>) -> Result<EdgeMap> {
        if assignment.len() != source.size() {
            return Err(Error::Parse(format!(
                "assignment has {} entries for {} source edges",
                assignment.len(),
                source.size()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&e| e >= target.size()) {
            return Err(Error::Parse(format!("target edge {bad} out of range")));
        }
        if let Some(v) = target.isolated_vertex() {
            return Err(Error::IsolatedVertex(target.vertex_id(v).clone()));
        }
        Ok(EdgeMap { source, target, assignment })
    }

    pub fn identity(g: Arc<Graph>) -> Result<EdgeMap> {
        let assignment = (0..g.size()).collect();
        EdgeMap::new(g.clone(), g, assignment)
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, e: usize) -> usize {
        self.assignment[e]
    }

    /// Image of a source edge set.
    pub fn image(&self, set: &EdgeSet) -> EdgeSet {
        self.target.edge_set(set.iter().map(|e| self.assignment[e]))
    }

    /// Preimage of a target edge set.
    pub fn preimage(&self, set: &EdgeSet) -> EdgeSet {
        self.source.edge_set((0..self.source.size()).filter(|&e| set.contains(self.assignment[e])))
    }

    pub fn is_onto(&self) -> bool {
        self.missing_target_edge().is_none()
    }

    fn missing_target_edge(&self) -> Option<usize> {
        let hit: HashSet<usize> = self.assignment.iter().copied().collect();
        (0..self.target.size()).find(|e| !hit.contains(e))
    }

    pub fn is_bijective(&self) -> bool {
        self.source.size() == self.target.size() && self.is_onto()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "assignment": self.assignment,
            "source": self.source.to_json(),
            "target": self.target.to_json(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<EdgeMap> {
        let doc: MapJson = serde_json::from_value(value.clone())?;
        let source = Graph::from_json(&doc.source)?;
        let target = Graph::from_json(&doc.target)?;
        EdgeMap::new(Arc::new(source), Arc::new(target), doc.assignment)
    }

    pub fn from_json_str(text: &str) -> Result<EdgeMap> {
        EdgeMap::from_json(&serde_json::from_str(text)?)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapJson {
    source: serde_json::Value,
    target: serde_json::Value,
    assignment: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapClass {
    NotCircuitSurjection,
    CircuitSurjection,
    CircuitInjection,
}

/// Why a map fails to be a circuit surjection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotOnto { missing: usize },
    CircuitImage { circuit: Vec<usize>, image: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub class: MapClass,
    pub violation: Option<Violation>,
}

/// A circuit surjection is onto and sends every source circuit onto a
/// target circuit; a circuit injection is additionally bijective.
pub fn classify_map(f: &EdgeMap, limits: &Limits) -> Result<Classification> {
    if let Some(missing) = f.missing_target_edge() {
        return Ok(Classification {
            class: MapClass::NotCircuitSurjection,
            violation: Some(Violation::NotOnto { missing }),
        });
    }
    for c in enumerate_circuits(&f.source, limits)? {
        let image = f.image(&c);
        if !is_circuit(&f.target, &image) {
            return Ok(Classification {
                class: MapClass::NotCircuitSurjection,
                violation: Some(Violation::CircuitImage { circuit: c.to_vec(), image: image.to_vec() }),
            });
        }
    }
    let class = if f.is_bijective() { MapClass::CircuitInjection } else { MapClass::CircuitSurjection };
    Ok(Classification { class, violation: None })
}

/// For a circuit injection between graphs: every target circuit is the
/// image of a source circuit.
pub fn is_trivial(f: &EdgeMap, limits: &Limits) -> Result<bool> {
    if classify_map(f, limits)?.class != MapClass::CircuitInjection {
        return Err(Error::NotInjection);
    }
    for d in enumerate_circuits(&f.target, limits)? {
        if !is_circuit(&f.source, &f.preimage(&d)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_matroid_map(g: &Graph, m: &Matroid, assignment: &[usize]) -> Result<()> {
    if assignment.len() != g.size() || m.ground().len() != g.size() {
        return Err(Error::NotBijective);
    }
    let mut seen = vec![false; m.ground().len()];
    for &x in assignment {
        if x >= seen.len() || std::mem::replace(&mut seen[x], true) {
            return Err(Error::NotBijective);
        }
    }
    Ok(())
}

fn image_in(m: &Matroid, assignment: &[usize], set: &EdgeSet) -> EdgeSet {
    let mut out = m.ground().empty_set();
    for e in set.iter() {
        out.insert(assignment[e]);
    }
    out
}

/// Whether a bijection `E(G) → S(M)` sends every circuit of `G` to a
/// circuit of `M`.
pub fn is_circuit_injection_into(g: &Graph, m: &Matroid, assignment: &[usize], limits: &Limits) -> Result<bool> {
    check_matroid_map(g, m, assignment)?;
    Ok(enumerate_circuits(g, limits)?.iter().all(|c| m.is_circuit(&image_in(m, assignment, c))))
}

/// Matroid form of triviality: every circuit of `M` is the image of a
/// circuit of `G`.
pub fn is_trivial_into(g: &Graph, m: &Matroid, assignment: &[usize], limits: &Limits) -> Result<bool> {
    if !is_circuit_injection_into(g, m, assignment, limits)? {
        return Err(Error::NotInjection);
    }
    let images: HashSet<EdgeSet> =
        enumerate_circuits(g, limits)?.iter().map(|c| image_in(m, assignment, c)).collect();
    Ok(m.circuits().iter().all(|c| images.contains(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_named;
    use crate::matroid::{cycle_matroid, truncation};

    pub(crate) fn subdivision_map() -> EdgeMap {
        let sub = generate_named("k4-subdivided", &[]).unwrap();
        let k4 = generate_named("complete", &[4]).unwrap();
        // k4-subdivided edges: 1-5, 5-2, 1-3, 1-4, 2-3, 2-4, 3-4; K4 edges: 12 13 14 23 24 34.
        EdgeMap::new(Arc::new(sub), Arc::new(k4), vec![0, 0, 1, 2, 3, 4, 5]).unwrap()
    }

    #[test]
    fn identity_on_k4_is_a_trivial_injection() {
        let f = EdgeMap::identity(Arc::new(generate_named("complete", &[4]).unwrap())).unwrap();
        let l = Limits::default();
        assert_eq!(classify_map(&f, &l).unwrap().class, MapClass::CircuitInjection);
        assert!(is_trivial(&f, &l).unwrap());
    }

    #[test]
    fn subdivision_contraction_is_a_surjection() {
        let c = classify_map(&subdivision_map(), &Limits::default()).unwrap();
        assert_eq!(c, Classification { class: MapClass::CircuitSurjection, violation: None });
        assert!(matches!(is_trivial(&subdivision_map(), &Limits::default()), Err(Error::NotInjection)));
    }

    #[test]
    fn constant_map_fails_on_the_circuit_image() {
        let c4 = generate_named("cycle", &[4]).unwrap();
        let k2 = generate_named("path", &[2]).unwrap();
        let f = EdgeMap::new(Arc::new(c4), Arc::new(k2), vec![0; 4]).unwrap();
        let c = classify_map(&f, &Limits::default()).unwrap();
        assert_eq!(c.class, MapClass::NotCircuitSurjection);
        assert_eq!(c.violation, Some(Violation::CircuitImage { circuit: vec![0, 1, 2, 3], image: vec![0] }));
    }

    #[test]
    fn not_onto_is_reported() {
        let k4 = Arc::new(generate_named("complete", &[4]).unwrap());
        let f = EdgeMap::new(k4.clone(), k4, vec![0, 0, 1, 2, 3, 4]).unwrap();
        let c = classify_map(&f, &Limits::default()).unwrap();
        assert_eq!(c.violation, Some(Violation::NotOnto { missing: 5 }));
    }

    #[test]
    fn malformed_maps() {
        let k4 = Arc::new(generate_named("complete", &[4]).unwrap());
        assert!(matches!(EdgeMap::new(k4.clone(), k4.clone(), vec![0; 5]), Err(Error::Parse(_))));
        assert!(matches!(EdgeMap::new(k4.clone(), k4.clone(), vec![9; 6]), Err(Error::Parse(_))));
        let lonely = Arc::new(Graph::from_pairs(3, &[(1, 2)]).unwrap());
        assert!(matches!(EdgeMap::new(k4, lonely, vec![0; 6]), Err(Error::IsolatedVertex(_))));
    }

    #[test]
    fn identity_into_truncation_is_nontrivial() {
        let l = Limits::default();
        let bowtie = generate_named("bowtie", &[]).unwrap();
        let t = truncation(&bowtie, &l).unwrap();
        let id: Vec<usize> = (0..bowtie.size()).collect();
        assert!(is_circuit_injection_into(&bowtie, &t, &id, &l).unwrap());
        assert!(!is_trivial_into(&bowtie, &t, &id, &l).unwrap());
        let own = cycle_matroid(&bowtie, &l).unwrap();
        assert!(is_trivial_into(&bowtie, &own, &id, &l).unwrap());
        assert!(matches!(is_trivial_into(&bowtie, &own, &[0; 6], &l), Err(Error::NotBijective)));
    }

    #[test]
    fn json_round_trip() {
        let f = subdivision_map();
        let v = f.to_json();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["assignment", "source", "target"]);
        assert_eq!(EdgeMap::from_json(&v).unwrap(), f);
        assert!(EdgeMap::from_json_str("{\"source\": 1}").is_err());
    }
}
