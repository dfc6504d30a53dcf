use super::Graph;

/// Unit-capacity flow network on split vertices (`2v` in, `2v + 1` out).
struct Network {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    fn add(&mut self, from: usize, to: usize, cap: i32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn augment(&mut self, at: usize, sink: usize, seen: &mut [bool]) -> bool {
        if at == sink {
            return true;
        }
        seen[at] = true;
        for i in 0..self.adj[at].len() {
            let arc = self.adj[at][i];
            let to = self.head[arc];
            if self.cap[arc] > 0 && !seen[to] && self.augment(to, sink, seen) {
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                return true;
            }
        }
        false
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths, stopping early at `cap`.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.order();
    let big = n as i32 + 1;
    let mut net = Network::new(2 * n);
    for v in 0..n {
        net.add(2 * v, 2 * v + 1, if v == s || v == t { big } else { 1 });
    }
    for &(u, v) in g.edges() {
        net.add(2 * u + 1, 2 * v, big);
        net.add(2 * v + 1, 2 * u, big);
    }
    let mut flow = 0;
    let mut seen = vec![false; 2 * n];
    while flow < cap {
        seen.fill(false);
        if !net.augment(2 * s + 1, 2 * t, &mut seen) {
            break;
        }
        flow += 1;
    }
    flow
}

/// Vertex connectivity: the least number of vertices whose removal
/// disconnects the graph, or `n − 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if g.edge_between(s, t).is_none() {
                best = best.min(local_connectivity(g, s, t, best));
            }
        }
    }
    best
}

/// `true` iff the graph has more than `k` vertices and no set of fewer
/// than `k` vertices disconnects it.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    g.order() > k && vertex_connectivity(g) >= k
}
