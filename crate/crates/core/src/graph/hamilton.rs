use super::Graph;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::limits::Limits;

struct Search<'a> {
    adj: &'a [u64],
    allowed: u64,
    start: usize,
    nodes: u64,
    budget: u64,
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

fn connected_within(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let mut reached = set & set.wrapping_neg();
    loop {
        let grown = bits(reached).fold(reached, |acc, v| acc | (adj[v] & set));
        if grown == reached {
            return reached == set;
        }
        reached = grown;
    }
}

impl Search<'_> {
    fn dfs(&mut self, end: usize, visited: u64, path: &mut Vec<usize>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        let remaining = self.allowed & !visited;
        if remaining == 0 {
            return Ok(self.adj[end] >> self.start & 1 == 1);
        }
        let ends = (1u64 << end) | (1u64 << self.start);
        let mut forced = None;
        for w in bits(remaining) {
            let avail = self.adj[w] & (remaining | ends);
            match avail.count_ones() {
                0 | 1 => return Ok(false),
                // Only two exits and one is the path end: it must come next.
                2 if self.adj[end] >> w & 1 == 1 && end != self.start => {
                    if forced.is_some() {
                        return Ok(false);
                    }
                    forced = Some(w);
                }
                _ => {}
            }
        }
        if !connected_within(self.adj, remaining | (1 << end)) {
            return Ok(false);
        }
        let candidates = match forced {
            Some(w) => 1u64 << w,
            None => self.adj[end] & remaining,
        };
        let mut order: Vec<usize> = bits(candidates).collect();
        order.sort_by_key(|&w| (self.adj[w] & remaining).count_ones());
        for w in order {
            path.push(w);
            if self.dfs(w, visited | (1 << w), path)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
}

/// Vertex order of a Hamiltonian cycle of the subgraph induced by `allowed`.
pub(crate) fn hamiltonian_cycle_within(adj: &[u64], allowed: u64, budget: u64) -> Result<Option<Vec<usize>>> {
    if allowed.count_ones() < 3 {
        return Ok(None);
    }
    if bits(allowed).any(|v| (adj[v] & allowed).count_ones() < 2) || !connected_within(adj, allowed) {
        return Ok(None);
    }
    let start = bits(allowed).min_by_key(|&v| (adj[v] & allowed).count_ones()).unwrap();
    let mut search = Search { adj, allowed, start, nodes: 0, budget };
    let mut path = vec![start];
    Ok(search.dfs(start, 1 << start, &mut path)?.then_some(path))
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > 64 {
        return Err(Error::CapExceeded { what: "vertex count for Hamiltonicity search", size: g.order(), cap: 64 });
    }
    Ok(())
}

/// A circuit through every vertex, if one exists.
pub fn hamiltonian_circuit(g: &Graph, limits: &Limits) -> Result<Option<EdgeSet>> {
    check_order(g)?;
    let adj = g.adjacency_masks();
    let all = if g.order() == 64 { u64::MAX } else { (1u64 << g.order()) - 1 };
    Ok(hamiltonian_cycle_within(&adj, all, limits.search_nodes)?.map(|order| {
        let mut set = g.ground().empty_set();
        for (i, &v) in order.iter().enumerate() {
            let w = order[(i + 1) % order.len()];
            set.insert(g.edge_between(v, w).expect("consecutive cycle vertices are adjacent"));
        }
        set
    }))
}

pub fn is_hamiltonian(g: &Graph, limits: &Limits) -> Result<bool> {
    Ok(hamiltonian_circuit(g, limits)?.is_some())
}

/// Every set of `n − 1` vertices lies on a common circuit.
pub fn is_almost_hamiltonian(g: &Graph, limits: &Limits) -> Result<bool> {
    if is_hamiltonian(g, limits)? {
        return Ok(true);
    }
    let adj = g.adjacency_masks();
    let all = if g.order() == 64 { u64::MAX } else { (1u64 << g.order()) - 1 };
    for v in 0..g.order() {
        if hamiltonian_cycle_within(&adj, all & !(1 << v), limits.search_nodes)?.is_none() {
            return Ok(false);
        }
    }
    Ok(g.order() >= 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog, enumerate_circuits, generate_named};

    fn named(name: &str, p: &[usize]) -> Graph {
        generate_named(name, p).unwrap()
    }

    /// Oracle from the circuit list: some circuit covers the required vertices.
    fn covered(g: &Graph, skip: Option<usize>) -> bool {
        enumerate_circuits(g, &Limits::default()).unwrap().iter().any(|c| {
            let vs = g.vertices_of(c);
            (0..g.order()).filter(|&v| Some(v) != skip).all(|v| vs.contains(&v))
        })
    }

    #[test]
    fn named_examples() {
        let l = Limits::default();
        assert!(is_hamiltonian(&named("complete", &[4]), &l).unwrap());
        assert!(!is_hamiltonian(&named("petersen", &[]), &l).unwrap());
        assert!(!is_hamiltonian(&named("bowtie", &[]), &l).unwrap());
        assert!(is_almost_hamiltonian(&named("cycle", &[5]), &l).unwrap());
        assert!(!is_almost_hamiltonian(&named("bowtie", &[]), &l).unwrap());
        assert!(is_almost_hamiltonian(&named("petersen", &[]), &l).unwrap());
    }

    #[test]
    fn witness_is_a_spanning_circuit() {
        let g = named("prism", &[]);
        let c = hamiltonian_circuit(&g, &Limits::default()).unwrap().unwrap();
        assert!(crate::graph::is_circuit(&g, &c));
        assert_eq!(g.vertices_of(&c).len(), g.order());
    }

    #[test]
    fn agrees_with_circuit_oracle_on_small_graphs() {
        let l = Limits::default();
        for g in catalog::connected_graphs(6) {
            if g.order() < 3 {
                continue;
            }
            let ham = covered(&g, None);
            assert_eq!(is_hamiltonian(&g, &l).unwrap(), ham, "{g:?}");
            let almost = ham || (0..g.order()).all(|v| covered(&g, Some(v)));
            assert_eq!(is_almost_hamiltonian(&g, &l).unwrap(), almost, "{g:?}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Limits { search_nodes: 3, ..Limits::default() };
        assert!(matches!(
            is_hamiltonian(&named("petersen", &[]), &tight),
            Err(Error::SearchBudgetExceeded(3))
        ));
    }
}
