use serde::Serialize;

use super::{classify_map, EdgeMap, MapClass};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{enumerate_circuits, is_circuit, is_k_connected};
use crate::limits::Limits;

/// Fibers `f⁻¹(e)` indexed by target edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberPartition {
    pub fibers: Vec<EdgeSet>,
}

impl FiberPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.fibers.iter().map(EdgeSet::count).collect()
    }
}

/// The fibers of `f`, without any precondition.
pub fn fiber_partition(f: &EdgeMap) -> FiberPartition {
    let mut fibers = vec![f.source().ground().empty_set(); f.target().size()];
    for (e, &t) in f.assignment().iter().enumerate() {
        fibers[t].insert(e);
    }
    FiberPartition { fibers }
}

/// First `(circuit, target edge)` where a circuit meets a fiber without
/// containing it.
pub fn audit_fibers(parts: &FiberPartition, circuits: &[EdgeSet]) -> Option<(EdgeSet, usize)> {
    circuits.iter().find_map(|c| {
        parts
            .fibers
            .iter()
            .position(|a| c.intersects_unchecked(a) && !a.subset_unchecked(c))
            .map(|e| (c.clone(), e))
    })
}

/// Checks the hypotheses under which every fiber is a series class.
pub(crate) fn check_preconditions(f: &EdgeMap, limits: &Limits) -> Result<()> {
    if classify_map(f, limits)?.class == MapClass::NotCircuitSurjection {
        return Err(Error::PreconditionUnmet("map is not a circuit surjection".into()));
    }
    if !is_k_connected(f.source(), 2) {
        return Err(Error::PreconditionUnmet("source is not 2-connected".into()));
    }
    let target = f.target();
    if is_circuit(target, &target.ground().full_set()) {
        return Err(Error::PreconditionUnmet("target is a circuit".into()));
    }
    Ok(())
}

/// Fibers of a circuit surjection from a 2-connected graph onto a graph
/// that is not itself a circuit. Any source circuit meeting a fiber then
/// contains the whole fiber; this is re-checked over every source circuit
/// and a failure is reported as an internal contradiction.
pub fn fibers(f: &EdgeMap, limits: &Limits) -> Result<FiberPartition> {
    check_preconditions(f, limits)?;
    let parts = fiber_partition(f);
    let circuits = enumerate_circuits(f.source(), limits)?;
    if let Some((c, e)) = audit_fibers(&parts, &circuits) {
        return Err(Error::InternalContradiction(format!(
            "circuit {:?} meets the fiber of target edge {e} without containing it",
            c.to_vec()
        )));
    }
    Ok(parts)
}
