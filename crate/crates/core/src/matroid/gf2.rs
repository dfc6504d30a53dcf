//! Subspaces of GF(2)^S kept as a reduced row-echelon basis.

use std::sync::Arc;

use super::Matroid;
use crate::edgeset::{EdgeSet, Ground, GroundTag};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A linear subspace of the edge-indexed GF(2) vector space.
///
/// Basis rows are kept fully reduced: each row's pivot (lowest member)
/// appears in no other row. Reduction against the basis therefore yields
/// a canonical representative of every coset.
#[derive(Debug, Clone)]
pub struct Gf2Space {
    tag: GroundTag,
    width: usize,
    rows: Vec<EdgeSet>,
    pivots: Vec<usize>,
}

impl Gf2Space {
    pub fn new(ground: &Ground) -> Gf2Space {
        Gf2Space { tag: ground.tag(), width: ground.len(), rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[EdgeSet] {
        &self.rows
    }

    fn check(&self, v: &EdgeSet) -> Result<()> {
        if v.tag() != self.tag || v.width() != self.width {
            return Err(Error::GroundMismatch);
        }
        Ok(())
    }

    /// Canonical coset representative of `v`: zero on every pivot.
    pub fn reduce(&self, v: &EdgeSet) -> Result<EdgeSet> {
        self.check(v)?;
        Ok(self.reduce_unchecked(v))
    }

    pub(crate) fn reduce_unchecked(&self, v: &EdgeSet) -> EdgeSet {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.contains(p) {
                r.xor_assign_unchecked(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &EdgeSet) -> Result<bool> {
        Ok(self.reduce(v)?.is_empty())
    }

    /// Adds `v` to the space; returns whether the dimension grew.
    pub fn insert(&mut self, v: &EdgeSet) -> Result<bool> {
        let r = self.reduce(v)?;
        let Some(p) = r.first() else {
            return Ok(false);
        };
        for row in &mut self.rows {
            if row.contains(p) {
                row.xor_assign_unchecked(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        Ok(true)
    }

    /// Every element of the space (2^dim of them, zero included), in
    /// Gray-code order.
    pub fn elements(&self) -> impl Iterator<Item = EdgeSet> + '_ {
        let mut cur = EdgeSet::empty(self.tag, self.width);
        let total: u64 = 1 << self.dim();
        (0..total).map(move |i| {
            if i > 0 {
                cur.xor_assign_unchecked(&self.rows[i.trailing_zeros() as usize]);
            }
            cur.clone()
        })
    }
}

/// The GF(2) span of a family of sets over `ground`.
pub fn span(ground: &Ground, family: &[EdgeSet]) -> Result<Gf2Space> {
    let mut space = Gf2Space::new(ground);
    for v in family {
        space.insert(v)?;
    }
    Ok(space)
}

/// Minimal nonempty members of a space, in canonical order.
pub(crate) fn minimal_elements(space: &Gf2Space, limits: &Limits) -> Result<Vec<EdgeSet>> {
    if space.dim() > limits.span_dim {
        return Err(Error::DimensionCapExceeded { dim: space.dim(), cap: limits.span_dim });
    }
    let mut all: Vec<EdgeSet> = space.elements().filter(|x| !x.is_empty()).collect();
    all.sort_by_cached_key(|x| x.count());
    let mut minimal: Vec<EdgeSet> = Vec::new();
    for x in all {
        // Anything strictly inside x that is in the space contains a minimal element.
        if !minimal.iter().any(|m| m.count() < x.count() && m.subset_unchecked(&x)) {
            minimal.push(x);
        }
    }
    minimal.sort();
    Ok(minimal)
}

/// The binary matroid whose circuits are the minimal nonempty members of
/// the span of `family`.
pub fn span_min(ground: &Arc<Ground>, family: &[EdgeSet], limits: &Limits) -> Result<Matroid> {
    let space = span(ground, family)?;
    let circuits = minimal_elements(&space, limits)?;
    Ok(Matroid::binary_from_parts(ground.clone(), circuits))
}
