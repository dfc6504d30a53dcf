//! Exhaustive catalogs of small graphs up to isomorphism.
//!
//! Graphs are grown one vertex (or one edge) at a time and deduplicated by
//! an isomorphism test behind a colour-refinement invariant.

use std::collections::HashMap;

use super::Graph;

#[derive(Clone, Debug)]
struct Small {
    adj: Vec<u64>,
}

impl Small {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    fn has(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|u| (u + 1..self.n()).filter(move |&v| self.has(u, v)).map(move |v| (u, v))).collect()
    }

    fn to_graph(&self) -> Graph {
        Graph::from_index_pairs(self.n(), &self.pairs())
    }

    /// Stable colour-refinement colours; depend only on the isomorphism class.
    fn colours(&self) -> Vec<u64> {
        let n = self.n();
        let mut col: Vec<u64> = self.adj.iter().map(|a| a.count_ones() as u64).collect();
        for _ in 0..n {
            let next: Vec<u64> = (0..n)
                .map(|v| {
                    let mut nb: Vec<u64> = (0..n).filter(|&w| self.has(v, w)).map(|w| col[w]).collect();
                    nb.sort_unstable();
                    mix(col[v], &nb)
                })
                .collect();
            let classes = |c: &[u64]| {
                let mut s = c.to_vec();
                s.sort_unstable();
                s.dedup();
                s.len()
            };
            let done = classes(&next) == classes(&col);
            col = next;
            if done {
                break;
            }
        }
        col
    }
}

fn mix(seed: u64, items: &[u64]) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for &x in items {
        h ^= x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
        h = h.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    }
    h
}

fn isomorphic(a: &Small, ca: &[u64], b: &Small, cb: &[u64]) -> bool {
    let n = a.n();
    if n != b.n() {
        return false;
    }
    // Map rare colour classes first, preferring vertices adjacent to mapped ones.
    let mut freq: HashMap<u64, usize> = HashMap::new();
    for &c in ca {
        *freq.entry(c).or_default() += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (!order.iter().any(|&u| a.has(u, v)), freq[&ca[v]], v))
            .unwrap();
        placed[v] = true;
        order.push(v);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(k: usize, order: &[usize], a: &Small, ca: &[u64], b: &Small, cb: &[u64], map: &mut [usize], used: &mut [bool]) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in 0..b.n() {
            if used[w] || cb[w] != ca[v] {
                continue;
            }
            if order[..k].iter().any(|&u| a.has(u, v) != b.has(map[u], w)) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if go(k + 1, order, a, ca, b, cb, map, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    go(0, &order, a, ca, b, cb, &mut map, &mut used)
}

/// Isomorphism-class store keyed by a refinement invariant.
#[derive(Default)]
struct Store {
    graphs: Vec<(Small, Vec<u64>)>,
    buckets: HashMap<(usize, usize, Vec<u64>), Vec<usize>>,
}

impl Store {
    fn insert(&mut self, g: Small) -> bool {
        let col = g.colours();
        let mut key_cols = col.clone();
        key_cols.sort_unstable();
        let key = (g.n(), g.edge_count(), key_cols);
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| isomorphic(&self.graphs[i].0, &self.graphs[i].1, &g, &col)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push((g, col));
        true
    }

    fn into_graphs(self) -> Vec<Small> {
        self.graphs.into_iter().map(|(g, _)| g).collect()
    }
}

fn to_small(g: &Graph) -> Small {
    assert!(g.order() <= 64);
    Small { adj: g.adjacency_masks() }
}

/// Whether two graphs are isomorphic (at most 64 vertices).
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (a, b) = (to_small(g), to_small(h));
    let (ca, cb) = (a.colours(), b.colours());
    let (mut sa, mut sb) = (ca.clone(), cb.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    sa == sb && isomorphic(&a, &ca, &b, &cb)
}

fn connected_by_order(max_order: usize) -> Vec<Vec<Small>> {
    let mut levels: Vec<Vec<Small>> = vec![Vec::new(), vec![Small { adj: vec![0] }]];
    for n in 2..=max_order {
        let mut store = Store::default();
        for g in &levels[n - 1] {
            for nbrs in 1u64..1 << (n - 1) {
                let mut adj = g.adj.clone();
                adj.push(0);
                let mut h = Small { adj };
                for u in 0..n - 1 {
                    if nbrs >> u & 1 == 1 {
                        h.add_edge(u, n - 1);
                    }
                }
                store.insert(h);
            }
        }
        levels.push(store.into_graphs());
    }
    levels
}

/// All connected graphs with 1 to `max_order` vertices, one per
/// isomorphism class, ordered by vertex count then discovery order.
pub fn connected_graphs(max_order: usize) -> Vec<Graph> {
    connected_by_order(max_order).iter().flatten().map(Small::to_graph).collect()
}

/// Connected graphs on exactly `order` vertices.
pub fn connected_graphs_of_order(order: usize) -> Vec<Graph> {
    connected_by_order(order).pop().unwrap_or_default().iter().map(Small::to_graph).collect()
}

fn connected_by_size(max_edges: usize) -> Vec<Vec<Small>> {
    let mut levels: Vec<Vec<Small>> = vec![Vec::new()];
    if max_edges == 0 {
        return levels;
    }
    levels.push(vec![Small { adj: vec![0b10, 0b01] }]);
    for _m in 2..=max_edges {
        let mut store = Store::default();
        for g in levels.last().unwrap() {
            let n = g.n();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v);
                        store.insert(h);
                    }
                }
                let mut adj = g.adj.clone();
                adj.push(0);
                let mut h = Small { adj };
                h.add_edge(u, n);
                store.insert(h);
            }
        }
        levels.push(store.into_graphs());
    }
    levels
}

/// All graphs with exactly `m` edges and no isolated vertices (at most
/// `2m` vertices), one per isomorphism class.
///
/// Each is a multiset of connected components; components are listed in
/// non-decreasing (edge count, catalog index) order.
pub fn graphs_without_isolated(m: usize) -> Vec<Graph> {
    let levels = connected_by_size(m);
    let mut out = Vec::new();
    fn compose(levels: &[Vec<Small>], left: usize, min: (usize, usize), parts: &mut Vec<(usize, usize)>, out: &mut Vec<Graph>) {
        if left == 0 {
            let mut pairs = Vec::new();
            let mut offset = 0;
            for &(size, idx) in parts.iter() {
                let c = &levels[size][idx];
                pairs.extend(c.pairs().into_iter().map(|(u, v)| (u + offset, v + offset)));
                offset += c.n();
            }
            out.push(Graph::from_index_pairs(offset, &pairs));
            return;
        }
        for size in min.0..=left {
            let start = if size == min.0 { min.1 } else { 0 };
            for idx in start..levels[size].len() {
                parts.push((size, idx));
                compose(levels, left - size, (size, idx), parts, out);
                parts.pop();
            }
        }
    }
    if m == 0 {
        return vec![Graph::from_index_pairs(0, &[])];
    }
    compose(&levels, m, (1, 0), &mut Vec::new(), &mut out);
    out
}
