//! Matroids given by an explicit circuit family.

mod gf2;
mod graphic;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::edgeset::{EdgeSet, Ground};
use crate::error::{Error, Result};
use crate::limits::Limits;

pub use gf2::{span, span_min, Gf2Space};
pub(crate) use gf2::minimal_elements;
pub use graphic::{bond_matroid, cycle_matroid, fundamental_cycles, spanning_trees, truncation};

/// Largest ground for which the subset-cover table is materialised.
const COVER_TABLE_BITS: usize = 20;

/// A matroid `{S, 𝒞}` stored as its ground set and sorted circuit list.
#[derive(Debug, Clone)]
pub struct Matroid {
    ground: Arc<Ground>,
    circuits: Vec<EdgeSet>,
    binary: bool,
}

/// Outcome of checking the two circuit axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum AxiomReport {
    Ok,
    /// `smaller` is a proper subset of `larger` (or a circuit is empty).
    AxiomI { smaller: Vec<usize>, larger: Vec<usize> },
    /// No circuit inside `a ∪ b` avoids `common` while containing `target`.
    AxiomII { a: Vec<usize>, b: Vec<usize>, common: usize, target: usize },
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, AxiomReport::Ok)
    }
}

impl Matroid {
    /// Builds a matroid from a circuit family, rejecting empty circuits and
    /// families where one circuit properly contains another. The strong
    /// elimination axiom is only checked by [`Matroid::verify_circuit_axioms`].
    pub fn new(ground: Arc<Ground>, mut circuits: Vec<EdgeSet>) -> Result<Matroid> {
        for c in &circuits {
            if c.tag() != ground.tag() || c.width() != ground.len() {
                return Err(Error::GroundMismatch);
            }
        }
        circuits.sort();
        circuits.dedup();
        if let AxiomReport::AxiomI { smaller, larger } = check_axiom_one(&circuits) {
            return Err(Error::InvalidMatroid(format!("circuit {smaller:?} lies inside {larger:?}")));
        }
        Ok(Matroid { ground, circuits, binary: false })
    }

    /// Circuits already known to be the minimal members of a GF(2) space.
    pub(crate) fn binary_from_parts(ground: Arc<Ground>, mut circuits: Vec<EdgeSet>) -> Matroid {
        circuits.sort();
        circuits.dedup();
        Matroid { ground, circuits, binary: true }
    }

    pub fn ground(&self) -> &Arc<Ground> {
        &self.ground
    }

    pub fn circuits(&self) -> &[EdgeSet] {
        &self.circuits
    }

    pub fn is_circuit(&self, set: &EdgeSet) -> bool {
        self.circuits.binary_search(set).is_ok()
    }

    /// Whether the circuits are known, by construction, to be the minimal
    /// members of their span.
    pub fn known_binary(&self) -> bool {
        self.binary
    }

    pub fn verify_circuit_axioms(&self) -> AxiomReport {
        verify_circuit_axioms(self.ground.len(), &self.circuits)
    }

    /// `true` iff the mod-2 sum of every two circuits is a disjoint union
    /// of circuits.
    pub fn is_binary(&self) -> bool {
        let by_cell = self.circuits_by_cell();
        for (i, a) in self.circuits.iter().enumerate() {
            for b in &self.circuits[i + 1..] {
                if !self.peels(a.xor_unchecked(b), &by_cell) {
                    return false;
                }
            }
        }
        true
    }

    fn circuits_by_cell(&self) -> Vec<Vec<usize>> {
        let mut by_cell = vec![Vec::new(); self.ground.len()];
        for (i, c) in self.circuits.iter().enumerate() {
            for x in c.iter() {
                by_cell[x].push(i);
            }
        }
        by_cell
    }

    /// Whether `rest` splits into pairwise disjoint circuits. The smallest
    /// remaining cell must be covered by one of the circuits containing it,
    /// so branching on that choice is exhaustive.
    fn peels(&self, rest: EdgeSet, by_cell: &[Vec<usize>]) -> bool {
        let Some(x) = rest.first() else {
            return true;
        };
        by_cell[x].iter().any(|&i| {
            let c = &self.circuits[i];
            c.subset_unchecked(&rest) && self.peels(rest.xor_unchecked(c), by_cell)
        })
    }

    /// Rank: `|S| − dim span(𝒞)` when the matroid is known binary,
    /// otherwise the largest circuit-free subset by exhaustive search.
    pub fn rank(&self, limits: &Limits) -> Result<usize> {
        if self.binary {
            self.rank_by_span()
        } else {
            self.rank_by_search(limits)
        }
    }

    pub fn rank_by_span(&self) -> Result<usize> {
        Ok(self.ground.len() - span(&self.ground, &self.circuits)?.dim())
    }

    /// Size of a maximum circuit-free subset, by branch and bound.
    pub fn rank_by_search(&self, limits: &Limits) -> Result<usize> {
        let n = self.ground.len();
        if n > limits.rank_ground {
            return Err(Error::CapExceeded { what: "ground size for rank search", size: n, cap: limits.rank_ground });
        }
        let by_cell = self.circuits_by_cell();
        let closes_circuit = |set: &EdgeSet, x: usize| {
            by_cell[x].iter().any(|&i| self.circuits[i].subset_unchecked(set))
        };
        // Greedy start gives the bound to beat.
        let mut chosen = self.ground.empty_set();
        for x in 0..n {
            chosen.insert(x);
            if closes_circuit(&chosen, x) {
                chosen.remove(x);
            }
        }
        let mut best = chosen.count();
        fn dfs(x: usize, n: usize, set: &mut EdgeSet, best: &mut usize, closes: &dyn Fn(&EdgeSet, usize) -> bool) {
            let size = set.count();
            if size + (n - x) <= *best {
                return;
            }
            if x == n {
                *best = size;
                return;
            }
            set.insert(x);
            if !closes(set, x) {
                dfs(x + 1, n, set, best, closes);
            }
            set.remove(x);
            dfs(x + 1, n, set, best, closes);
        }
        let mut set = self.ground.empty_set();
        dfs(0, n, &mut set, &mut best, &closes_circuit);
        Ok(best)
    }

    /// Some circuit has exactly `rank + 1` cells.
    pub fn is_hamiltonian(&self, limits: &Limits) -> Result<bool> {
        let r = self.rank(limits)?;
        Ok(self.circuits.iter().any(|c| c.count() == r + 1))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = MatroidJson {
            cells: self.ground.cells().to_vec(),
            circuits: self.circuits.iter().map(EdgeSet::to_vec).collect(),
        };
        serde_json::to_value(doc).expect("matroid serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Matroid> {
        let doc: MatroidJson = serde_json::from_value(value.clone())?;
        let ground = Ground::new(doc.cells);
        let circuits = doc.circuits.into_iter().map(|c| ground.set_of(c)).collect::<Result<Vec<_>>>()?;
        if circuits.iter().any(EdgeSet::is_empty) {
            return Err(Error::InvalidMatroid("empty circuit".into()));
        }
        Matroid::new(ground, circuits)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatroidJson {
    cells: Vec<String>,
    circuits: Vec<Vec<usize>>,
}

fn check_axiom_one(circuits: &[EdgeSet]) -> AxiomReport {
    for (i, a) in circuits.iter().enumerate() {
        if a.is_empty() {
            return AxiomReport::AxiomI { smaller: vec![], larger: vec![] };
        }
        for (j, b) in circuits.iter().enumerate() {
            if i != j && a != b && a.subset_unchecked(b) {
                return AxiomReport::AxiomI { smaller: a.to_vec(), larger: b.to_vec() };
            }
        }
    }
    AxiomReport::Ok
}

/// Checks Axiom I (no circuit properly inside another) and the strong
/// elimination Axiom II: for circuits `A ≠ B`, `a ∈ A ∩ B` and
/// `b ∈ A ⊕ B` there is a circuit `D ⊆ A ∪ B` with `a ∉ D` and `b ∈ D`.
///
/// The weaker textbook form only asks for some circuit inside
/// `(A ∪ B) − a`; the strong form implies it.
pub fn verify_circuit_axioms(width: usize, circuits: &[EdgeSet]) -> AxiomReport {
    let one = check_axiom_one(circuits);
    if !one.is_ok() {
        return one;
    }
    // cover(X) = union of all circuits contained in X.
    let cover: Box<dyn Fn(&EdgeSet) -> EdgeSet> = if width <= COVER_TABLE_BITS {
        let mut table = vec![0u32; 1 << width];
        let masks: std::collections::HashSet<u32> = circuits.iter().map(|c| c.mask() as u32).collect();
        for x in 1u32..1 << width {
            let mut acc = if masks.contains(&x) { x } else { 0 };
            let mut bits = x;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                acc |= table[(x ^ low) as usize];
                bits ^= low;
            }
            table[x as usize] = acc;
        }
        Box::new(move |x: &EdgeSet| EdgeSet::from_mask(x.tag(), x.width(), table[x.mask() as usize] as u64))
    } else {
        Box::new(move |x: &EdgeSet| {
            let mut acc = x.difference(x).expect("same ground");
            for c in circuits.iter().filter(|c| c.subset_unchecked(x)) {
                acc = acc.union(c).expect("same ground");
            }
            acc
        })
    };
    for (i, a) in circuits.iter().enumerate() {
        for b in &circuits[i + 1..] {
            if !a.intersects_unchecked(b) {
                continue;
            }
            let both = a.union(b).expect("same ground");
            let common = a.intersection(b).expect("same ground");
            let differ = a.xor_unchecked(b);
            for x in common.iter() {
                let mut without = both.clone();
                without.remove(x);
                let reach = cover(&without);
                if let Some(target) = differ.iter().find(|&y| !reach.contains(y)) {
                    return AxiomReport::AxiomII { a: a.to_vec(), b: b.to_vec(), common: x, target };
                }
            }
        }
    }
    AxiomReport::Ok
}
