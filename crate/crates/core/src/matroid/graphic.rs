//! Matroids read off a graph: cycle, bond and truncated cycle matroids.

use super::Matroid;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{bonds, enumerate_circuits, is_hamiltonian, Graph, UnionFind};
use crate::limits::Limits;

/// The cycle matroid: ground `E(G)`, circuits the cycles of `G`.
pub fn cycle_matroid(g: &Graph, limits: &Limits) -> Result<Matroid> {
    Ok(Matroid::binary_from_parts(g.ground().clone(), enumerate_circuits(g, limits)?))
}

/// The bond matroid (dual of the cycle matroid): circuits are the bonds.
pub fn bond_matroid(g: &Graph) -> Result<Matroid> {
    Ok(Matroid::binary_from_parts(g.ground().clone(), bonds(g)?))
}

/// A basis of the cycle space: one fundamental cycle per non-tree edge of
/// a spanning forest grown in edge order.
pub fn fundamental_cycles(g: &Graph) -> Vec<EdgeSet> {
    let mut uf = UnionFind::new(g.order());
    let mut tree = vec![Vec::new(); g.order()];
    let mut chords = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if uf.union(u, v) {
            tree[u].push((v, e));
            tree[v].push((u, e));
        } else {
            chords.push(e);
        }
    }
    chords
        .into_iter()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            let mut set = g.edge_set(tree_path(&tree, u, v));
            set.insert(e);
            set
        })
        .collect()
}

fn tree_path(tree: &[Vec<(usize, usize)>], from: usize, to: usize) -> Vec<usize> {
    let mut via = vec![None; tree.len()];
    let mut seen = vec![false; tree.len()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(x) = stack.pop() {
        for &(y, e) in &tree[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = Some((x, e));
                stack.push(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut at = to;
    while let Some((prev, e)) = via[at] {
        path.push(e);
        at = prev;
    }
    path
}

/// All spanning trees of a connected graph, by deletion/contraction over
/// the edges in order, in canonical order.
pub fn spanning_trees(g: &Graph, cap: usize) -> Result<Vec<EdgeSet>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    struct Walk<'a> {
        g: &'a Graph,
        cap: usize,
        out: Vec<EdgeSet>,
    }
    impl Walk<'_> {
        // Whether the chosen edges plus every undecided edge still connect G.
        fn can_span(&self, chosen: &EdgeSet, from: usize) -> bool {
            self.g.components_with(|_| true, |e| e >= from || chosen.contains(e)) == 1
        }

        fn go(&mut self, e: usize, uf: &UnionFind, chosen: &mut EdgeSet, need: usize) -> Result<()> {
            if need == 0 {
                if self.out.len() == self.cap {
                    return Err(Error::CapExceeded { what: "spanning tree count", size: self.cap + 1, cap: self.cap });
                }
                self.out.push(chosen.clone());
                return Ok(());
            }
            if e == self.g.size() {
                return Ok(());
            }
            let (u, v) = self.g.endpoints(e);
            let mut merged = uf.clone();
            if merged.union(u, v) {
                chosen.insert(e);
                self.go(e + 1, &merged, chosen, need - 1)?;
                chosen.remove(e);
            }
            if self.can_span(chosen, e + 1) {
                self.go(e + 1, uf, chosen, need)?;
            }
            Ok(())
        }
    }
    let mut walk = Walk { g, cap, out: Vec::new() };
    let mut chosen = g.ground().empty_set();
    walk.go(0, &UnionFind::new(g.order()), &mut chosen, g.order().saturating_sub(1))?;
    walk.out.sort();
    Ok(walk.out)
}

/// The truncation of the cycle matroid: circuits are the cycles of `G`
/// together with all spanning trees, so every basis of `G` becomes a
/// circuit and the rank drops by one.
///
/// Requires a connected non-Hamiltonian graph; on a Hamiltonian graph the
/// identity into the truncation is not a circuit injection.
pub fn truncation(g: &Graph, limits: &Limits) -> Result<Matroid> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.order() >= 3 && is_hamiltonian(g, limits)? {
        return Err(Error::HamiltonianInput);
    }
    let mut circuits = enumerate_circuits(g, limits)?;
    circuits.extend(spanning_trees(g, limits.spanning_trees)?);
    Matroid::new(g.ground().clone(), circuits)
}
