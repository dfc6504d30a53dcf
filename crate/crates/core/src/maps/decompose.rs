use std::collections::HashSet;
use std::sync::Arc;

use super::fibers::check_preconditions;
use super::{classify_map, fibers, EdgeMap, MapClass};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{enumerate_circuits, Graph, UnionFind, VertexId};
use crate::limits::Limits;

/// `f = q ∘ h ∘ k` for a circuit surjection `f` whose fibers are series
/// classes.
///
/// * `k: source → chain_graph` is the identity on edge ids and preserves
///   circuits in both directions (certified by comparing cycle matroids);
/// * `h: chain_graph → quotient` collapses each fiber, now a suspended
///   chain, to one edge;
/// * `q: quotient → target` is a circuit injection.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub chain_graph: Arc<Graph>,
    pub k: EdgeMap,
    pub h: EdgeMap,
    pub q: EdgeMap,
    /// The source already has every fiber as a chain, so `chain_graph` is
    /// the source itself.
    pub k_is_identity: bool,
}

impl Decomposition {
    pub fn summary_json(&self) -> serde_json::Value {
        serde_json::json!({
            "chain_graph": self.chain_graph.to_json(),
            "h": self.h.assignment(),
            "k_is_identity": self.k_is_identity,
            "q": self.q.assignment(),
            "quotient": self.q.source().to_json(),
        })
    }
}

/// Edges of `set` form a path whose interior vertices have degree 2 in `g`.
fn is_chain(g: &Graph, set: &EdgeSet) -> bool {
    if set.count() <= 1 {
        return true;
    }
    let degrees = g.degrees_in(set);
    let verts = g.vertices_of(set);
    let ends = verts.iter().filter(|&&v| degrees[v] == 1).count();
    let connected = g.components_with(|v| degrees[v] > 0, |e| set.contains(e)) == 1;
    connected
        && ends == 2
        && verts.len() == set.count() + 1
        && verts.iter().all(|&v| degrees[v] == 1 || (degrees[v] == 2 && g.degree(v) == 2))
}

fn certificate(msg: impl Into<String>) -> Error {
    Error::CertificateFailure(msg.into())
}

pub fn decompose(f: &EdgeMap, limits: &Limits) -> Result<Decomposition> {
    check_preconditions(f, limits)?;
    let parts = fibers(f, limits)?;
    let source = f.source();
    let target = f.target();

    // Quotient: contract every fiber down to its lowest edge.
    let mut uf = UnionFind::new(source.order());
    let reps: Vec<usize> = parts.fibers.iter().map(|a| a.first().expect("onto map")).collect();
    for (a, &rep) in parts.fibers.iter().zip(&reps) {
        for e in a.iter().filter(|&e| e != rep) {
            let (u, v) = source.endpoints(e);
            uf.union(u, v);
        }
    }
    let class_of: Vec<usize> = (0..source.order()).map(|v| uf.find(v)).collect();
    let q_vertices: Vec<usize> = (0..source.order()).filter(|&v| class_of[v] == v).collect();
    let q_pairs: Vec<(VertexId, VertexId)> = reps
        .iter()
        .map(|&rep| {
            let (u, v) = source.endpoints(rep);
            (source.vertex_id(class_of[u]).clone(), source.vertex_id(class_of[v]).clone())
        })
        .collect();
    let quotient = Graph::build(q_vertices.iter().map(|&v| source.vertex_id(v).clone()), q_pairs)
        .map_err(|e| certificate(format!("contracted fibers do not give a simple graph: {e}")))?;
    let quotient = Arc::new(quotient);

    let k_is_identity = parts.fibers.iter().all(|a| is_chain(source, a));
    let chain_graph = if k_is_identity {
        source.clone()
    } else {
        Arc::new(subdivide(source, &quotient, &parts.fibers)?)
    };

    // Certificate for k: same cycle matroid on the shared edge ids, and
    // any two edges of a fiber form a bond of the source.
    let lhs = enumerate_circuits(source, limits)?;
    let rhs = enumerate_circuits(&chain_graph, limits)?;
    let rhs: HashSet<Vec<usize>> = rhs.iter().map(EdgeSet::to_vec).collect();
    if lhs.len() != rhs.len() || !lhs.iter().all(|c| rhs.contains(&c.to_vec())) {
        return Err(certificate("chain graph has a different cycle matroid"));
    }
    for a in &parts.fibers {
        let members = a.to_vec();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if !source.is_bond(&source.edge_set([x, y])) {
                    return Err(certificate(format!("fiber edges {x} and {y} do not form a bond")));
                }
            }
        }
    }

    let identity: Vec<usize> = (0..source.size()).collect();
    let k = EdgeMap::new(source.clone(), chain_graph.clone(), identity)?;
    let h = EdgeMap::new(chain_graph.clone(), quotient.clone(), f.assignment().to_vec())?;
    let q = EdgeMap::new(quotient, target.clone(), (0..target.size()).collect())?;
    if classify_map(&q, limits)?.class != MapClass::CircuitInjection {
        return Err(certificate("quotient map is not a circuit injection"));
    }
    for e in 0..source.size() {
        if q.apply(h.apply(k.apply(e))) != f.apply(e) {
            return Err(certificate(format!("composite disagrees with the map on edge {e}")));
        }
    }
    Ok(Decomposition { chain_graph, k, h, q, k_is_identity })
}

/// The quotient with each fiber's representative edge subdivided back into
/// a chain; chain edges keep the source edge ids, in id order along the
/// chain.
fn subdivide(source: &Graph, quotient: &Graph, fibers: &[EdgeSet]) -> Result<Graph> {
    let taken: HashSet<&VertexId> = source.vertex_ids().iter().collect();
    let fresh = |e: usize, j: usize| {
        let mut name = format!("s{e}.{j}");
        while taken.contains(&VertexId::Str(name.clone())) {
            name.push('\'');
        }
        VertexId::Str(name)
    };
    let mut ids: Vec<VertexId> = quotient.vertex_ids().to_vec();
    let mut pairs: Vec<Option<(VertexId, VertexId)>> = vec![None; source.size()];
    for (e, a) in fibers.iter().enumerate() {
        let (u, v) = quotient.endpoints(e);
        let members = a.to_vec();
        let mut stops = vec![quotient.vertex_id(u).clone()];
        for j in 1..members.len() {
            let s = fresh(e, j);
            ids.push(s.clone());
            stops.push(s);
        }
        stops.push(quotient.vertex_id(v).clone());
        for (j, &x) in members.iter().enumerate() {
            pairs[x] = Some((stops[j].clone(), stops[j + 1].clone()));
        }
    }
    Graph::build(ids, pairs.into_iter().map(|p| p.expect("fibers cover the source")))
        .map_err(|e| certificate(format!("chain graph is malformed: {e}")))
}
