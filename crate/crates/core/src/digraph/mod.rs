//! Labelled digraphs on at most 16 vertices.
//!
//! The arc relation is the single source of truth: a digon is exactly the two
//! opposite ordered pairs, loops and parallel arcs cannot be represented.
//! Adjacency rows fit in one `u16`, so arc tests and neighbourhood
//! intersections are single word operations.

mod canon;
mod io;
mod pattern;

pub use canon::{canonical_code, canonical_form, CanonicalCode};
pub use io::{from_dmat, from_pajek, to_dmat, ParseError, ParseErrorKind};
pub use pattern::{contains_pattern, PatternQuery};

use thiserror::Error;

/// Hard cap on the vertex count. Every digraph in the search pipelines has at
/// most 11 vertices; 16 gives slack while keeping a row in one machine word.
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DigraphError {
    #[error("order {0} out of range (must be 1..={MAX_ORDER})")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop arc at vertex {0} is not allowed")]
    LoopArc(usize),
    #[error("arc ({0}, {1}) not present")]
    MissingArc(usize, usize),
    #[error("induced subdigraph needs a non-empty vertex set")]
    EmptyVertexSet,
    #[error("digraph is not semi-complete")]
    NotSemicomplete,
}

/// Iterate the set bits of a 16-bit vertex mask, ascending.
pub(crate) fn bits(mut mask: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A loopless digraph on `1..=16` labelled vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: u8,
    out: [u16; MAX_ORDER],
    inn: [u16; MAX_ORDER],
}

impl Digraph {
    /// An arcless digraph on `order` vertices.
    pub fn new(order: usize) -> Result<Self, DigraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(DigraphError::OrderOutOfRange(order));
        }
        Ok(Digraph {
            order: order as u8,
            out: [0; MAX_ORDER],
            inn: [0; MAX_ORDER],
        })
    }

    /// Builds a digraph from an arc list.
    pub fn with_arcs(order: usize, arcs: &[(usize, usize)]) -> Result<Self, DigraphError> {
        let mut d = Digraph::new(order)?;
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// m(D): digons contribute both of their arcs.
    pub fn arc_count(&self) -> usize {
        self.out[..self.order()]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.order()
    }

    pub(crate) fn full_mask(&self) -> u16 {
        if self.order() == MAX_ORDER {
            u16::MAX
        } else {
            (1u16 << self.order()) - 1
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), DigraphError> {
        if v >= self.order() {
            return Err(DigraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    /// Inserts the arc `u -> v`. Re-adding an existing arc is a no-op; the
    /// arc set has set semantics.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<(), DigraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(DigraphError::LoopArc(u));
        }
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
        Ok(())
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order() && v < self.order());
        self.out[u] >> v & 1 == 1
    }

    pub fn has_digon(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// Arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| bits(self.out[u]).map(move |v| (u, v)))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        debug_assert!(v < self.order());
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        debug_assert!(v < self.order());
        self.inn[v].count_ones() as usize
    }

    /// Total degree, counting each digon twice.
    pub fn degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// Number of digons at `v`.
    pub fn digon_degree(&self, v: usize) -> usize {
        debug_assert!(v < self.order());
        (self.out[v] & self.inn[v]).count_ones() as usize
    }

    pub(crate) fn out_mask(&self, v: usize) -> u16 {
        self.out[v]
    }

    pub(crate) fn in_mask(&self, v: usize) -> u16 {
        self.inn[v]
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        let mut d = *self;
        for v in 0..self.order() {
            d.out[v] = self.inn[v];
            d.inn[v] = self.out[v];
        }
        d
    }

    /// The same digraph minus the arc `u -> v`.
    pub fn delete_arc(&self, u: usize, v: usize) -> Result<Digraph, DigraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_arc(u, v) {
            return Err(DigraphError::MissingArc(u, v));
        }
        let mut d = *self;
        d.out[u] &= !(1 << v);
        d.inn[v] &= !(1 << u);
        Ok(d)
    }

    /// Deletes `v` and relabels the remaining vertices order-preservingly.
    pub fn delete_vertex(&self, v: usize) -> Result<Digraph, DigraphError> {
        self.check_vertex(v)?;
        if self.order() == 1 {
            return Err(DigraphError::OrderOutOfRange(0));
        }
        let keep: Vec<usize> = self.vertices().filter(|&w| w != v).collect();
        self.induced_subdigraph(&keep)
    }

    /// The subdigraph induced by a vertex set, relabelled order-preservingly
    /// (the i-th smallest vertex of `verts` becomes vertex i).
    pub fn induced_subdigraph(&self, verts: &[usize]) -> Result<Digraph, DigraphError> {
        let mut sorted = verts.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(DigraphError::EmptyVertexSet);
        }
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        let mut d = Digraph::new(sorted.len())?;
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate() {
                if i != j && self.has_arc(u, v) {
                    d.add_arc(i, j)?;
                }
            }
        }
        Ok(d)
    }

    /// True iff every unordered vertex pair carries at least one arc.
    pub fn is_semicomplete(&self) -> bool {
        for u in self.vertices() {
            for v in u + 1..self.order() {
                if !self.has_arc(u, v) && !self.has_arc(v, u) {
                    return false;
                }
            }
        }
        true
    }

    /// Semi-complete and digon-free.
    pub fn is_tournament(&self) -> bool {
        self.is_semicomplete() && self.vertices().all(|v| self.digon_degree(v) == 0)
    }

    /// True iff the digraph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_within(self.full_mask())
    }

    /// Acyclicity of the subdigraph induced by a vertex mask, by repeatedly
    /// peeling vertices with no in-neighbour among the remainder.
    pub(crate) fn is_acyclic_within(&self, mask: u16) -> bool {
        let mut rem = mask;
        'peel: while rem != 0 {
            let mut m = rem;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                if self.inn[v] & rem == 0 {
                    rem &= !(1 << v);
                    continue 'peel;
                }
                m &= m - 1;
            }
            // every remaining vertex has an in-neighbour among the remainder
            return false;
        }
        true
    }

    /// True iff a directed walk from `u` to `v` exists (`u == v` counts).
    ///
    /// Both endpoints must be vertices of the digraph.
    pub fn contains_directed_path(&self, u: usize, v: usize) -> bool {
        assert!(u < self.order() && v < self.order());
        self.reaches_within(self.full_mask(), u, v)
    }

    /// Reachability restricted to the subdigraph induced by `mask`.
    pub(crate) fn reaches_within(&self, mask: u16, from: usize, to: usize) -> bool {
        debug_assert!(mask >> from & 1 == 1);
        if from == to {
            return true;
        }
        let target = 1u16 << to;
        let mut reach = 1u16 << from;
        let mut frontier = reach;
        while frontier != 0 {
            let mut grown = 0u16;
            for v in bits(frontier) {
                grown |= self.out[v];
            }
            grown &= mask & !reach;
            if grown & target != 0 {
                return true;
            }
            reach |= grown;
            frontier = grown;
        }
        false
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.order(), self.arcs().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn order_bounds() {
        assert!(Digraph::new(0).is_err());
        assert!(Digraph::new(17).is_err());
        assert!(Digraph::new(1).is_ok());
        assert!(Digraph::new(16).is_ok());
    }

    #[test]
    fn loops_and_duplicates_rejected() {
        let mut d = Digraph::new(3).unwrap();
        assert_eq!(d.add_arc(1, 1), Err(DigraphError::LoopArc(1)));
        d.add_arc(0, 1).unwrap();
        d.add_arc(0, 1).unwrap(); // set semantics
        assert_eq!(d.arc_count(), 1);
        assert_eq!(
            d.add_arc(0, 3),
            Err(DigraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn semicomplete_examples() {
        assert!(Digraph::new(1).unwrap().is_semicomplete());
        assert!(catalog::c3().is_semicomplete());
        // F has 15 non-adjacent pairs
        let f = catalog::f();
        assert!(!f.is_semicomplete());
        let mut non_adjacent = 0;
        for u in f.vertices() {
            for v in u + 1..f.order() {
                if !f.has_arc(u, v) && !f.has_arc(v, u) {
                    non_adjacent += 1;
                }
            }
        }
        assert_eq!(non_adjacent, 15);
    }

    #[test]
    fn acyclic_examples() {
        assert!(catalog::tt(8).unwrap().is_acyclic());
        let digon = Digraph::with_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(!digon.is_acyclic());
        assert!(!catalog::p7().is_acyclic());
    }

    #[test]
    fn directed_path_examples() {
        let tt8 = catalog::tt(8).unwrap();
        assert!(tt8.contains_directed_path(0, 7));
        assert!(!tt8.contains_directed_path(7, 0));
        // O5 with the catalog labelling (0 dominates, 1 on the triangle):
        // nothing reaches back to 0.
        let o5 = catalog::o5();
        assert!(!o5.contains_directed_path(1, 0));
        assert!(o5.contains_directed_path(0, 0));
    }

    #[test]
    fn subdigraph_constructions() {
        let digon = Digraph::with_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let single = digon.delete_arc(0, 1).unwrap();
        assert_eq!(single.arc_count(), 1);
        assert!(single.has_arc(1, 0));
        assert_eq!(digon.delete_arc(0, 1).unwrap().delete_arc(0, 1), Err(DigraphError::MissingArc(0, 1)));

        // O4 restricted to {u, x, y} = dominating vertex plus digon
        let o4 = catalog::o4();
        let sub = o4.induced_subdigraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub.arc_count(), 4);
        assert!(sub.has_arc(0, 1) && sub.has_arc(0, 2));
        assert!(sub.has_digon(1, 2));

        let c3 = catalog::c3();
        let arc = c3.delete_vertex(1).unwrap();
        assert_eq!(arc.order(), 2);
        assert_eq!(arc.arc_count(), 1);
        // relabelling is order-preserving: former vertex 2 is now vertex 1
        assert!(arc.has_arc(1, 0));
    }

    #[test]
    fn delete_vertex_bounds() {
        let single = Digraph::new(1).unwrap();
        assert!(single.delete_vertex(0).is_err());
        let d = Digraph::new(2).unwrap();
        assert!(d.delete_vertex(2).is_err());
    }

    #[test]
    fn reverse_involution() {
        let o5 = catalog::o5();
        assert_eq!(o5.reverse().reverse(), o5);
        assert_eq!(o5.reverse().arc_count(), o5.arc_count());
        assert!(o5.reverse().has_arc(4, 0));
    }
}
