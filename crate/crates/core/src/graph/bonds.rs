use serde::Serialize;

use super::Graph;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

const BOND_ORDER_CAP: usize = 26;

/// All bonds (minimal edge cuts) of a connected graph, in canonical order.
///
/// A cut between `X` and `V − X` is a bond exactly when both sides induce
/// connected subgraphs, so the enumeration walks bipartitions with vertex 0
/// fixed in `X`.
pub fn bonds(g: &Graph) -> Result<Vec<EdgeSet>> {
    let n = g.order();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n > BOND_ORDER_CAP {
        return Err(Error::CapExceeded { what: "vertex count for bond enumeration", size: n, cap: BOND_ORDER_CAP });
    }
    let mut out = Vec::new();
    if n < 2 {
        return Ok(out);
    }
    for rest in 0u64..(1 << (n - 1)) {
        let side = (rest << 1) | 1;
        if side.count_ones() as usize == n {
            continue;
        }
        let in_x = |v: usize| side >> v & 1 == 1;
        if g.components_with(in_x, |_| true) != 1 || g.components_with(|v| !in_x(v), |_| true) != 1 {
            continue;
        }
        out.push(g.edge_set((0..g.size()).filter(|&e| {
            let (u, v) = g.endpoints(e);
            in_x(u) != in_x(v)
        })));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A path whose interior vertices have degree 2 in the whole graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuspendedChain {
    /// Edge ids in walking order from `ends.0` to `ends.1`.
    pub edges: Vec<usize>,
    /// Vertex indices of the two (distinct) endpoints.
    pub ends: (usize, usize),
}

/// All maximal suspended chains of `g`.
///
/// A maximal run of degree-2 vertices is extended in both directions until
/// it meets a vertex of degree other than 2. Runs that close up on
/// themselves (a cycle component, or a cycle hanging from one vertex)
/// have no two distinct endpoints and yield no chain.
pub fn suspended_chains(g: &Graph) -> Vec<SuspendedChain> {
    let mut seen = vec![false; g.order()];
    let mut chains = Vec::new();
    for v in 0..g.order() {
        if g.degree(v) != 2 || seen[v] {
            continue;
        }
        seen[v] = true;
        let [e0, e1] = [g.incident(v)[0], g.incident(v)[1]];
        let (left_edges, left_end) = walk(g, v, e0, &mut seen);
        if left_end == v {
            continue;
        }
        let (right_edges, right_end) = walk(g, v, e1, &mut seen);
        if left_end == right_end {
            continue;
        }
        let mut edges: Vec<usize> = left_edges.into_iter().rev().collect();
        edges.extend(right_edges);
        chains.push(SuspendedChain { edges, ends: (left_end, right_end) });
    }
    chains.sort_by(|a, b| a.edges.iter().min().cmp(&b.edges.iter().min()));
    chains
}

/// Walks from `v` along `first` through degree-2 vertices; returns the edges
/// and the vertex where the walk stopped.
fn walk(g: &Graph, v: usize, first: usize, seen: &mut [bool]) -> (Vec<usize>, usize) {
    let mut edges = vec![first];
    let mut prev_edge = first;
    let mut at = g.other_end(first, v);
    while g.degree(at) == 2 && at != v {
        seen[at] = true;
        let next = g.incident(at).iter().copied().find(|&e| e != prev_edge).unwrap();
        edges.push(next);
        prev_edge = next;
        at = g.other_end(next, at);
    }
    (edges, at)
}
