use super::EdgeMap;
use crate::error::{Error, Result};

/// A vertex bijection `φ` with `f({u, v}) = {φ(u), φ(v)}` for every source
/// edge, if one exists. Returned as `φ[source vertex] = target vertex`.
///
/// `φ(v)` must be a vertex `w` of equal degree whose star is exactly the
/// image of the star of `v`. Stars of degree at least 2 pin `w` down; the
/// backtracking only branches on leaves and isolated vertices.
pub fn induced_vertex_isomorphism(f: &EdgeMap) -> Result<Option<Vec<usize>>> {
    if !f.is_bijective() {
        return Err(Error::NotBijective);
    }
    let (g, h) = (f.source(), f.target());
    if g.order() != h.order() {
        return Ok(None);
    }
    let image_star = |v: usize| {
        let mut s: Vec<usize> = g.incident(v).iter().map(|&e| f.apply(e)).collect();
        s.sort_unstable();
        s
    };
    let stars: Vec<Vec<usize>> = (0..h.order())
        .map(|w| {
            let mut s = h.incident(w).to_vec();
            s.sort_unstable();
            s
        })
        .collect();
    let candidates: Vec<Vec<usize>> =
        (0..g.order()).map(|v| (0..h.order()).filter(|&w| stars[w] == image_star(v)).collect()).collect();
    // Most constrained vertices first.
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| candidates[v].len());

    fn go(k: usize, order: &[usize], candidates: &[Vec<usize>], phi: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&v) = order.get(k) else {
            return true;
        };
        for &w in &candidates[v] {
            if !used[w] {
                used[w] = true;
                phi[v] = w;
                if go(k + 1, order, candidates, phi, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    let mut phi = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    if !go(0, &order, &candidates, &mut phi, &mut used) {
        return Ok(None);
    }
    // Equal stars for every vertex force each edge onto the right pair.
    debug_assert!((0..g.size()).all(|e| {
        let (u, v) = g.endpoints(e);
        h.edge_between(phi[u], phi[v]) == Some(f.apply(e))
    }));
    Ok(Some(phi))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graph::{generate_named, Graph};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Oracle: try every vertex bijection.
    fn brute_induced(f: &EdgeMap) -> bool {
        let (g, h) = (f.source(), f.target());
        g.order() == h.order()
            && permutations(g.order()).iter().any(|p| {
                (0..g.size()).all(|e| {
                    let (u, v) = g.endpoints(e);
                    h.edge_between(p[u], p[v]) == Some(f.apply(e))
                })
            })
    }

    fn edge_maps(g: &Arc<Graph>) -> Vec<EdgeMap> {
        permutations(g.size()).into_iter().map(|p| EdgeMap::new(g.clone(), g.clone(), p).unwrap()).collect()
    }

    #[test]
    fn identity_on_k4() {
        let f = EdgeMap::identity(Arc::new(generate_named("complete", &[4]).unwrap())).unwrap();
        assert_eq!(induced_vertex_isomorphism(&f).unwrap(), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn vertex_swap_on_k4_is_recovered() {
        let k4 = Arc::new(generate_named("complete", &[4]).unwrap());
        let swap = [1, 0, 2, 3];
        let assignment: Vec<usize> = k4
            .edges()
            .iter()
            .map(|&(u, v)| k4.edge_between(swap[u], swap[v]).unwrap())
            .collect();
        let f = EdgeMap::new(k4.clone(), k4, assignment).unwrap();
        assert_eq!(induced_vertex_isomorphism(&f).unwrap(), Some(swap.to_vec()));
    }

    #[test]
    fn c4_edge_bijections() {
        // C4 edges: 0 = 12, 1 = 23, 2 = 34, 3 = 41.
        let c4 = Arc::new(generate_named("cycle", &[4]).unwrap());
        // Fix two adjacent edges, swap the other two: no vertex map does this.
        let f = EdgeMap::new(c4.clone(), c4.clone(), vec![0, 1, 3, 2]).unwrap();
        assert_eq!(induced_vertex_isomorphism(&f).unwrap(), None);
        // Fix two opposite edges, swap the other two: the reflection (12)(34).
        let g = EdgeMap::new(c4.clone(), c4.clone(), vec![0, 3, 2, 1]).unwrap();
        assert!(induced_vertex_isomorphism(&g).unwrap().is_some());
        let induced = edge_maps(&c4).iter().filter(|f| induced_vertex_isomorphism(f).unwrap().is_some()).count();
        assert_eq!(induced, 8);
    }

    #[test]
    fn agrees_with_brute_force() {
        for name in ["cycle", "complete", "star", "path"] {
            let g = Arc::new(generate_named(name, &[4]).unwrap());
            for f in edge_maps(&g) {
                let phi = induced_vertex_isomorphism(&f).unwrap();
                assert_eq!(phi.is_some(), brute_induced(&f), "{name} {:?}", f.assignment());
                if let Some(phi) = phi {
                    for e in 0..g.size() {
                        let (u, v) = g.endpoints(e);
                        assert_eq!(g.edge_between(phi[u], phi[v]), Some(f.apply(e)));
                    }
                }
            }
        }
    }

    #[test]
    fn non_bijections_are_rejected() {
        let k4 = Arc::new(generate_named("complete", &[4]).unwrap());
        let f = EdgeMap::new(k4.clone(), k4, vec![0; 6]).unwrap();
        assert!(matches!(induced_vertex_isomorphism(&f), Err(Error::NotBijective)));
    }
}
