/// Budgets and size caps for the exponential routines in this crate.
///
/// Every enumeration that can blow up takes a `&Limits` and fails with a
/// budget error instead of running away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of circuits a single enumeration may produce.
    pub circuits: usize,
    /// Node budget for backtracking searches (Hamiltonicity, witness search).
    pub search_nodes: u64,
    /// Maximum span dimension for full span enumeration.
    pub span_dim: usize,
    /// Maximum ground-set size for rank by exhaustive independent-set search.
    pub rank_ground: usize,
    /// Maximum number of spanning trees enumerated for a truncation.
    pub spanning_trees: usize,
    /// Maximum source edge count for circuit-surjection enumeration.
    pub surjection_edges: usize,
    /// Maximum edge count for the single-generator extension scan.
    pub extension_edges: usize,
    /// Maximum order of the complete graph in the dual witness construction.
    pub dual_complete_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            circuits: 1_000_000,
            search_nodes: 10_000_000,
            span_dim: 20,
            rank_ground: 24,
            spanning_trees: 1_000_000,
            surjection_edges: 10,
            extension_edges: 16,
            dual_complete_order: 6,
        }
    }
}
