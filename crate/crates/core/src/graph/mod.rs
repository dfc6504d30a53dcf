//! Simple undirected finite graphs and their circuit structure.

mod bonds;
pub mod catalog;
mod circuits;
mod connectivity;
mod generators;
mod hamilton;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::edgeset::{EdgeSet, Ground};
use crate::error::{Error, Result};

pub use bonds::{bonds, suspended_chains, SuspendedChain};
pub use circuits::{enumerate_circuits, is_circuit};
pub use connectivity::{is_k_connected, vertex_connectivity};
pub use generators::{generate_construction_window, generate_named, ConstructionWindow};
pub use hamilton::{hamiltonian_circuit, is_almost_hamiltonian, is_hamiltonian};

/// Opaque vertex identifier; integers and strings are both accepted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexId {
    Int(i64),
    Str(String),
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Int(i) => write!(f, "{i}"),
            VertexId::Str(s) => f.write_str(s),
        }
    }
}

impl From<i64> for VertexId {
    fn from(v: i64) -> Self {
        VertexId::Int(v)
    }
}

impl From<&str> for VertexId {
    fn from(v: &str) -> Self {
        VertexId::Str(v.to_owned())
    }
}

/// A simple undirected graph with stable vertex and edge indices.
///
/// Vertices are indexed `0..order()` in declaration order and edges
/// `0..size()` in input order. The edge indices double as the cells of the
/// graph's [`Ground`].
#[derive(Clone)]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
    index: HashMap<VertexId, usize>,
    ground: Arc<Ground>,
}

impl Graph {
    /// Builds a graph from declared vertices and edge pairs.
    pub fn build<V, E>(vertex_ids: V, edge_pairs: E) -> Result<Graph>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let vertices: Vec<VertexId> = vertex_ids.into_iter().collect();
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut edges = Vec::new();
        let mut seen = HashMap::new();
        for (u, v) in edge_pairs {
            let iu = *index.get(&u).ok_or_else(|| Error::UnknownVertex(u.clone()))?;
            let iv = *index.get(&v).ok_or_else(|| Error::UnknownVertex(v.clone()))?;
            if iu == iv {
                return Err(Error::LoopEdge(u));
            }
            if seen.insert((iu.min(iv), iu.max(iv)), edges.len()).is_some() {
                return Err(Error::DuplicateEdge(u, v));
            }
            edges.push((iu, iv));
        }
        Ok(Graph::assemble(vertices, edges, index))
    }

    /// Builds a graph on vertices `1..=n` from 1-based integer pairs.
    pub fn from_pairs(n: usize, pairs: &[(i64, i64)]) -> Result<Graph> {
        Graph::build(
            (1..=n as i64).map(VertexId::Int),
            pairs.iter().map(|&(u, v)| (VertexId::Int(u), VertexId::Int(v))),
        )
    }

    /// Builds a graph from vertex indices, naming vertex `i` as `i + 1`.
    pub(crate) fn from_index_pairs(n: usize, pairs: &[(usize, usize)]) -> Graph {
        let vertices: Vec<VertexId> = (1..=n as i64).map(VertexId::Int).collect();
        let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Graph::assemble(vertices, pairs.to_vec(), index)
    }

    fn assemble(vertices: Vec<VertexId>, edges: Vec<(usize, usize)>, index: HashMap<VertexId, usize>) -> Graph {
        let mut incidence = vec![Vec::new(); vertices.len()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            incidence[u].push(e);
            incidence[v].push(e);
        }
        let cells = edges.iter().map(|&(u, v)| format!("{}-{}", vertices[u], vertices[v])).collect();
        Graph { ground: Ground::new(cells), vertices, edges, incidence, index }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_id(&self, v: usize) -> &VertexId {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, id: &VertexId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The edges incident to `v`, in edge-id order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.incidence[u].iter().copied().find(|&e| self.other_end(e, u) == v)
    }

    pub fn ground(&self) -> &Arc<Ground> {
        &self.ground
    }

    pub fn edge_set<I: IntoIterator<Item = usize>>(&self, edges: I) -> EdgeSet {
        let mut s = self.ground.empty_set();
        for e in edges {
            s.insert(e);
        }
        s
    }

    /// Human-readable `u-v` name of an edge.
    pub fn edge_name(&self, e: usize) -> &str {
        &self.ground.cells()[e]
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.order()).find(|&v| self.degree(v) == 0)
    }

    /// Neighbour bitmasks; only for graphs with at most 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.order() <= 64);
        let mut adj = vec![0u64; self.order()];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    /// Vertices touched by the edges of `set`.
    pub fn vertices_of(&self, set: &EdgeSet) -> Vec<usize> {
        let mut touched = vec![false; self.order()];
        for e in set.iter() {
            let (u, v) = self.edges[e];
            touched[u] = true;
            touched[v] = true;
        }
        (0..self.order()).filter(|&v| touched[v]).collect()
    }

    /// Degree of every vertex within the subgraph formed by `set`.
    pub fn degrees_in(&self, set: &EdgeSet) -> Vec<usize> {
        let mut deg = vec![0; self.order()];
        for e in set.iter() {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Vertices of odd degree in the subgraph formed by `set`.
    pub fn odd_vertices(&self, set: &EdgeSet) -> Vec<usize> {
        self.degrees_in(set).iter().enumerate().filter(|(_, d)| *d % 2 == 1).map(|(v, _)| v).collect()
    }

    /// Number of connected components of the spanning subgraph on `edges`,
    /// counted over the vertex indices for which `keep` is true.
    pub(crate) fn components_with(&self, keep: impl Fn(usize) -> bool, edges: impl Fn(usize) -> bool) -> usize {
        let mut uf = UnionFind::new(self.order());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if keep(u) && keep(v) && edges(e) {
                uf.union(u, v);
            }
        }
        (0..self.order()).filter(|&v| keep(v) && uf.find(v) == v).count()
    }

    pub fn is_connected(&self) -> bool {
        self.components_with(|_| true, |_| true) <= 1
    }

    /// Whether removing the edges of `removed` disconnects the graph.
    pub fn is_cut(&self, removed: &EdgeSet) -> bool {
        self.components_with(|_| true, |e| !removed.contains(e)) > self.components_with(|_| true, |_| true)
    }

    /// Whether `set` is a bond: a cut whose proper subsets are not cuts.
    pub fn is_bond(&self, set: &EdgeSet) -> bool {
        if set.is_empty() || !self.is_cut(set) {
            return false;
        }
        set.iter().all(|e| {
            let mut smaller = set.clone();
            smaller.remove(e);
            !self.is_cut(&smaller)
        })
    }

    /// The graph as a JSON value with sorted keys.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = GraphJson {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(u, v)| [self.vertices[u].clone(), self.vertices[v].clone()]).collect(),
        };
        serde_json::to_value(doc).expect("graph serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Graph> {
        let doc: GraphJson = serde_json::from_value(value.clone())?;
        Graph::build(doc.vertices, doc.edges.into_iter().map(|[u, v]| (u, v)))
    }

    pub fn from_json_str(text: &str) -> Result<Graph> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        Graph::from_json(&value)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, e) in self.ground.cells().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(e)?;
        }
        f.write_str("])")
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: Vec<VertexId>,
    edges: Vec<[VertexId; 2]>,
}

#[derive(Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_builds() {
        let g = Graph::from_pairs(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!((g.order(), g.size()), (3, 3));
        assert_eq!(g.edge_name(2), "3-1");
        for v in 0..3 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn malformed_edges_are_rejected() {
        assert!(matches!(Graph::from_pairs(2, &[(1, 1)]), Err(Error::LoopEdge(_))));
        assert!(matches!(Graph::from_pairs(2, &[(1, 2), (2, 1)]), Err(Error::DuplicateEdge(..))));
        assert!(matches!(Graph::from_pairs(2, &[(1, 3)]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn k4_has_six_edges() {
        let pairs: Vec<_> = (1..=4).flat_map(|u| (u + 1..=4).map(move |v| (u, v))).collect();
        let g = Graph::from_pairs(4, &pairs).unwrap();
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn adjacency_matches_edge_list() {
        let g = generate_named("petersen", &[]).unwrap();
        for v in 0..g.order() {
            for &e in g.incident(v) {
                let (a, b) = g.endpoints(e);
                assert!(a == v || b == v);
            }
        }
        let total: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.size());
    }

    #[test]
    fn json_round_trip_and_sorted_keys() {
        let text = r#"{"vertices":["a","b",3],"edges":[["a","b"],["b",3]]}"#;
        let g = Graph::from_json_str(text).unwrap();
        assert_eq!(g.vertex_id(2), &VertexId::Int(3));
        let out = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(out, r#"{"edges":[["a","b"],["b",3]],"vertices":["a","b",3]}"#);
        assert_eq!(Graph::from_json_str(&out).unwrap(), g);
        assert!(matches!(Graph::from_json_str("{\"vertices\":[1]"), Err(Error::Parse(_))));
    }

    #[test]
    fn bonds_and_cuts() {
        let path = Graph::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(path.is_bond(&path.edge_set([0])));
        assert!(!path.is_bond(&path.edge_set([0, 1])));
    }
}
