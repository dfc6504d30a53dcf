use super::Graph;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// All circuits (edge sets of simple cycles) of `g`, in canonical order.
///
/// Each cycle is rooted at its smallest vertex and walked in the direction
/// whose first edge id is smaller than its closing edge id, so every
/// circuit is produced exactly once.
pub fn enumerate_circuits(g: &Graph, limits: &Limits) -> Result<Vec<EdgeSet>> {
    let mut out = Vec::new();
    let mut on_path = vec![false; g.order()];
    let mut path_edges = Vec::new();
    for root in 0..g.order() {
        on_path[root] = true;
        extend(g, root, root, &mut on_path, &mut path_edges, &mut out, limits.circuits)?;
        on_path[root] = false;
    }
    out.sort();
    Ok(out)
}

fn extend(
    g: &Graph,
    root: usize,
    at: usize,
    on_path: &mut [bool],
    path_edges: &mut Vec<usize>,
    out: &mut Vec<EdgeSet>,
    budget: usize,
) -> Result<()> {
    for &e in g.incident(at) {
        let next = g.other_end(e, at);
        if next == root {
            // Close the cycle only once per direction pair.
            if path_edges.len() >= 2 && path_edges[0] < e {
                if out.len() >= budget {
                    return Err(Error::CircuitBudgetExceeded(budget));
                }
                let mut c = g.edge_set(path_edges.iter().copied());
                c.insert(e);
                out.push(c);
            }
            continue;
        }
        if next < root || on_path[next] {
            continue;
        }
        on_path[next] = true;
        path_edges.push(e);
        extend(g, root, next, on_path, path_edges, out, budget)?;
        path_edges.pop();
        on_path[next] = false;
    }
    Ok(())
}

/// Whether `set` is the edge set of a simple cycle of `g`.
pub fn is_circuit(g: &Graph, set: &EdgeSet) -> bool {
    if set.tag() != g.ground().tag() || set.count() < 3 {
        return false;
    }
    let deg = g.degrees_in(set);
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    let touched: Vec<bool> = deg.iter().map(|&d| d > 0).collect();
    g.components_with(|v| touched[v], |e| set.contains(e)) == 1
}
