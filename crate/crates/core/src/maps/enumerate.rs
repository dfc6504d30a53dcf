use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use super::EdgeMap;
use crate::error::{Error, Result};
use crate::graph::{enumerate_circuits, Graph};
use crate::limits::Limits;

/// Search state shared by all branches.
struct Plan {
    /// Source edges in assignment order.
    order: Vec<usize>,
    /// Source circuits as masks over positions in `order`, grouped by the
    /// position of their last edge.
    completing: Vec<Vec<u64>>,
    /// Circuits touching each position (as position masks).
    touching: Vec<Vec<u64>>,
    target_circuits: HashSet<u64>,
    /// `inside[x]`: the target-edge mask `x` lies inside some target circuit.
    inside: Vec<bool>,
    target_edges: usize,
}

impl Plan {
    fn image(&self, positions: u64, values: &[usize]) -> u64 {
        let mut bits = positions;
        let mut img = 0u64;
        while bits != 0 {
            let p = bits.trailing_zeros() as usize;
            img |= 1 << values[p];
            bits &= bits - 1;
        }
        img
    }

    fn search(&self, pos: usize, values: &mut Vec<usize>, hit: u64, out: &mut Vec<Vec<usize>>) {
        if pos == self.order.len() {
            if hit.count_ones() as usize == self.target_edges {
                let mut assignment = vec![0; values.len()];
                for (p, &e) in self.order.iter().enumerate() {
                    assignment[e] = values[p];
                }
                out.push(assignment);
            }
            return;
        }
        let missing = self.target_edges - hit.count_ones() as usize;
        if missing > self.order.len() - pos {
            return;
        }
        for t in 0..self.target_edges {
            self.try_value(pos, t, values, hit, out);
        }
    }

    fn try_value(&self, pos: usize, t: usize, values: &mut Vec<usize>, hit: u64, out: &mut Vec<Vec<usize>>) {
        let done = (1u64 << (pos + 1)) - 1;
        values.push(t);
        let ok = self.completing[pos].iter().all(|&c| self.target_circuits.contains(&self.image(c, values)))
            && self.touching[pos].iter().all(|&c| self.inside[self.image(c & done, values) as usize]);
        if ok {
            self.search(pos + 1, values, hit | 1 << t, out);
        }
        values.pop();
    }
}

/// Every circuit surjection `source → target`, as assignments in
/// lexicographic order.
///
/// Source edges are placed so that short circuits complete early. A branch
/// dies as soon as a completed circuit's image is not a target circuit, a
/// partial circuit's image lies inside no target circuit, or too few edges
/// remain to cover the target.
pub fn enumerate_circuit_surjections(source: &Graph, target: &Graph, limits: &Limits) -> Result<Vec<EdgeMap>> {
    let cap = limits.surjection_edges;
    if source.size() > cap {
        return Err(Error::CapExceeded { what: "source edge count for surjection search", size: source.size(), cap });
    }
    if let Some(v) = target.isolated_vertex() {
        return Err(Error::IsolatedVertex(target.vertex_id(v).clone()));
    }
    if target.size() > source.size() || target.size() == 0 {
        return Ok(Vec::new());
    }
    let mut circuits = enumerate_circuits(source, limits)?;
    circuits.sort_by_key(|c| c.count());
    let mut order: Vec<usize> = Vec::new();
    for c in &circuits {
        order.extend(c.iter().filter(|e| !order.contains(e)).collect::<Vec<_>>());
    }
    order.extend((0..source.size()).filter(|e| !order.contains(e)).collect::<Vec<_>>());
    let mut position = vec![0; source.size()];
    for (p, &e) in order.iter().enumerate() {
        position[e] = p;
    }
    let m = source.size();
    let mut completing = vec![Vec::new(); m];
    let mut touching = vec![Vec::new(); m];
    for c in &circuits {
        let mask = c.iter().fold(0u64, |acc, e| acc | 1 << position[e]);
        let last = 63 - mask.leading_zeros() as usize;
        completing[last].push(mask);
        for p in c.iter().map(|e| position[e]).filter(|&p| p != last) {
            touching[p].push(mask);
        }
    }
    let target_circuits: HashSet<u64> = enumerate_circuits(target, limits)?.iter().map(|c| c.mask()).collect();
    let mut inside = vec![false; 1 << target.size()];
    for &c in &target_circuits {
        let mut sub = c;
        loop {
            inside[sub as usize] = true;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & c;
        }
    }
    let plan = Plan { order, completing, touching, target_circuits, inside, target_edges: target.size() };

    let branches: Vec<Vec<Vec<usize>>> = (0..target.size())
        .into_par_iter()
        .map(|t| {
            let mut out = Vec::new();
            plan.try_value(0, t, &mut Vec::new(), 0, &mut out);
            out
        })
        .collect();
    let mut all: Vec<Vec<usize>> = branches.into_iter().flatten().collect();
    all.sort();
    let (source, target) = (Arc::new(source.clone()), Arc::new(target.clone()));
    all.into_iter().map(|a| EdgeMap::new(source.clone(), target.clone(), a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_named;
    use crate::maps::{classify_map, induced_vertex_isomorphism, MapClass};

    /// Oracle: classify every assignment.
    fn brute(source: &Graph, target: &Graph) -> Vec<Vec<usize>> {
        let (s, t) = (Arc::new(source.clone()), Arc::new(target.clone()));
        let m = source.size();
        let total = target.size().pow(m as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut a = vec![0; m];
            let mut x = code;
            for slot in a.iter_mut().rev() {
                *slot = x % target.size();
                x /= target.size();
            }
            let f = EdgeMap::new(s.clone(), t.clone(), a.clone()).unwrap();
            if classify_map(&f, &Limits::default()).unwrap().class != MapClass::NotCircuitSurjection {
                out.push(a);
            }
        }
        out
    }

    fn assignments(maps: &[EdgeMap]) -> Vec<Vec<usize>> {
        maps.iter().map(|f| f.assignment().to_vec()).collect()
    }

    #[test]
    fn k4_onto_k4_gives_the_automorphisms() {
        let k4 = generate_named("complete", &[4]).unwrap();
        let maps = enumerate_circuit_surjections(&k4, &k4, &Limits::default()).unwrap();
        assert_eq!(maps.len(), 24);
        for f in &maps {
            assert_eq!(classify_map(f, &Limits::default()).unwrap().class, MapClass::CircuitInjection);
            assert!(induced_vertex_isomorphism(f).unwrap().is_some());
        }
    }

    #[test]
    fn k4_has_no_triangle_image() {
        let k4 = generate_named("complete", &[4]).unwrap();
        let c3 = generate_named("cycle", &[3]).unwrap();
        assert!(enumerate_circuit_surjections(&k4, &c3, &Limits::default()).unwrap().is_empty());
    }

    #[test]
    fn c4_onto_triangle_exists() {
        let c4 = generate_named("cycle", &[4]).unwrap();
        let c3 = generate_named("cycle", &[3]).unwrap();
        let maps = enumerate_circuit_surjections(&c4, &c3, &Limits::default()).unwrap();
        assert!(!maps.is_empty());
        assert_eq!(assignments(&maps), brute(&c4, &c3));
        // The only circuit is all of C4, so every onto assignment works: 3! · S(4, 3) = 36.
        assert_eq!(maps.len(), 36);
    }

    #[test]
    fn matches_brute_force_on_small_pairs() {
        let pairs = [
            (generate_named("complete", &[4]).unwrap(), generate_named("cycle", &[4]).unwrap()),
            (generate_named("k4-subdivided", &[]).unwrap(), generate_named("complete", &[4]).unwrap()),
            (generate_named("cycle", &[5]).unwrap(), generate_named("cycle", &[4]).unwrap()),
            (generate_named("bowtie", &[]).unwrap(), generate_named("cycle", &[3]).unwrap()),
            (generate_named("bowtie", &[]).unwrap(), generate_named("bowtie", &[]).unwrap()),
            (generate_named("prism", &[]).unwrap(), generate_named("path", &[2]).unwrap()),
        ];
        for (s, t) in &pairs {
            let got = enumerate_circuit_surjections(s, t, &Limits::default()).unwrap();
            assert_eq!(assignments(&got), brute(s, t));
        }
    }

    #[test]
    fn caps_and_degenerate_targets() {
        let k5 = generate_named("complete", &[5]).unwrap();
        let tight = Limits { surjection_edges: 9, ..Limits::default() };
        assert!(matches!(enumerate_circuit_surjections(&k5, &k5, &tight), Err(Error::CapExceeded { .. })));
        let c3 = generate_named("cycle", &[3]).unwrap();
        assert!(enumerate_circuit_surjections(&c3, &k5, &Limits::default()).unwrap().is_empty());
    }
}
