//! Dicolouring solvers: 2-dicolourability, uv-colourings, 3-dicriticality
//! and maximum acyclic sets.
//!
//! Everything here is a pure function of immutable digraph values.

use crate::digraph::{bits, Digraph, DigraphError};

/// A total assignment of colours 1 and 2 to the vertices of a digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColouring {
    order: usize,
    class2: u16,
}

impl TwoColouring {
    pub fn colour_of(&self, v: usize) -> u8 {
        assert!(v < self.order);
        if self.class2 >> v & 1 == 1 {
            2
        } else {
            1
        }
    }

    /// The vertices of colour `colour` (1 or 2).
    pub fn class(&self, colour: u8) -> Vec<usize> {
        assert!(colour == 1 || colour == 2);
        let full = if self.order == 16 { u16::MAX } else { (1 << self.order) - 1 };
        let mask = if colour == 2 { self.class2 } else { !self.class2 & full };
        bits(mask).collect()
    }

    fn class_masks(&self, d: &Digraph) -> (u16, u16) {
        let full = d.full_mask();
        (!self.class2 & full, self.class2 & full)
    }
}

/// True iff both colour classes induce acyclic subdigraphs of `d`.
pub fn is_valid_two_dicolouring(d: &Digraph, c: &TwoColouring) -> bool {
    if c.order != d.order() {
        return false;
    }
    let (c1, c2) = c.class_masks(d);
    d.is_acyclic_within(c1) && d.is_acyclic_within(c2)
}

/// True iff some 2-colouring has both classes acyclic.
///
/// Small orders enumerate all vertex bipartitions; larger ones fall back to
/// the backtracking solver. Both routes agree, which is covered by tests.
pub fn is_two_dicolourable(d: &Digraph) -> bool {
    if d.order() <= 8 {
        let full = d.full_mask();
        for class2 in 0..=full {
            if d.is_acyclic_within(class2) && d.is_acyclic_within(!class2 & full) {
                return true;
            }
        }
        false
    } else {
        find_two_dicolouring_backtracking(d).is_some()
    }
}

/// The lexicographically first valid 2-dicolouring in (vertex, colour)
/// assignment order, or `None`. Witnesses are reproducible.
pub fn find_two_dicolouring(d: &Digraph) -> Option<TwoColouring> {
    find_two_dicolouring_backtracking(d)
}

fn find_two_dicolouring_backtracking(d: &Digraph) -> Option<TwoColouring> {
    fn go(d: &Digraph, v: usize, c1: u16, c2: u16) -> Option<u16> {
        if v == d.order() {
            return Some(c2);
        }
        let b = 1u16 << v;
        if d.is_acyclic_within(c1 | b) {
            if let Some(res) = go(d, v + 1, c1 | b, c2) {
                return Some(res);
            }
        }
        if d.is_acyclic_within(c2 | b) {
            if let Some(res) = go(d, v + 1, c1, c2 | b) {
                return Some(res);
            }
        }
        None
    }
    go(d, 0, 0, 0).map(|class2| TwoColouring { order: d.order(), class2 })
}

/// A digraph together with one of its arcs, the input of the uv-colouring
/// test. Construction checks that the arc is present.
#[derive(Clone, Debug)]
pub struct UvColouringProblem {
    digraph: Digraph,
    arc: (usize, usize),
}

impl UvColouringProblem {
    pub fn new(digraph: Digraph, arc: (usize, usize)) -> Result<Self, DigraphError> {
        if arc.0 >= digraph.order() || arc.1 >= digraph.order() || !digraph.has_arc(arc.0, arc.1)
        {
            return Err(DigraphError::MissingArc(arc.0, arc.1));
        }
        Ok(UvColouringProblem { digraph, arc })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn arc(&self) -> (usize, usize) {
        self.arc
    }
}

/// True iff there is a 2-colouring with u and v in colour 1 that 2-dicolours
/// D minus the arc uv and leaves no colour-1 directed path from u to v.
pub fn has_uv_colouring(p: &UvColouringProblem) -> bool {
    let (u, v) = p.arc;
    let d = p.digraph.delete_arc(u, v).expect("arc checked at construction");
    has_uv_colouring_of_deleted(&d, u, v)
}

/// The same search on a digraph from which the arc has already been removed.
/// Shared with the candidate filter, which strips each arc exactly once.
pub(crate) fn has_uv_colouring_of_deleted(d: &Digraph, u: usize, v: usize) -> bool {
    let c1 = 1u16 << u | 1u16 << v;
    if !d.is_acyclic_within(c1) || d.reaches_within(c1, u, v) {
        return false;
    }
    // colour the remaining vertices in descending total degree; any order is
    // sound, high degrees prune earlier
    let mut rest: Vec<u8> = d
        .vertices()
        .filter(|&x| x != u && x != v)
        .map(|x| x as u8)
        .collect();
    rest.sort_by_key(|&x| (std::cmp::Reverse(d.degree(x as usize)), x));
    uv_extend(d, u, v, &rest, 0, c1, 0)
}

fn uv_extend(d: &Digraph, u: usize, v: usize, rest: &[u8], k: usize, c1: u16, c2: u16) -> bool {
    if k == rest.len() {
        return true;
    }
    let b = 1u16 << rest[k];
    let grown1 = c1 | b;
    if d.is_acyclic_within(grown1)
        && !d.reaches_within(grown1, u, v)
        && uv_extend(d, u, v, rest, k + 1, grown1, c2)
    {
        return true;
    }
    let grown2 = c2 | b;
    if d.is_acyclic_within(grown2) && uv_extend(d, u, v, rest, k + 1, c1, grown2) {
        return true;
    }
    false
}

/// True iff `d` is not 2-dicolourable while every one-arc-deleted and every
/// one-vertex-deleted subdigraph is.
///
/// Vertex deletions are checked explicitly: an isolated vertex has no arc
/// whose deletion would cover it.
pub fn is_three_dicritical(d: &Digraph) -> bool {
    if is_two_dicolourable(d) {
        return false;
    }
    for (u, v) in d.arcs() {
        if !is_two_dicolourable(&d.delete_arc(u, v).expect("arc from iterator")) {
            return false;
        }
    }
    // a non-2-dicolourable digraph has at least 3 vertices
    for v in d.vertices() {
        if !is_two_dicolourable(&d.delete_vertex(v).expect("order stays positive")) {
            return false;
        }
    }
    true
}

/// Size of the largest vertex set inducing an acyclic subdigraph.
pub fn max_acyclic_subset_size(d: &Digraph) -> usize {
    let full = d.full_mask();
    let mut best = 0usize;
    for mask in 0..=full {
        let size = mask.count_ones() as usize;
        if size > best && d.is_acyclic_within(mask) {
            best = size;
        }
    }
    best
}

/// True iff each arc of a semi-complete digraph lies in a digon or in an
/// induced directed triangle. Errors on non-semi-complete input.
pub fn every_arc_in_digon_or_induced_triangle(d: &Digraph) -> Result<bool, DigraphError> {
    if !d.is_semicomplete() {
        return Err(DigraphError::NotSemicomplete);
    }
    for (u, v) in d.arcs() {
        if d.has_arc(v, u) {
            continue;
        }
        // need w with v -> w -> u and no other arcs inside {u, v, w}
        let candidates = d.out_mask(v) & d.in_mask(u) & !d.in_mask(v) & !d.out_mask(u);
        if candidates == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn two_dicolourable_examples() {
        assert!(is_two_dicolourable(&catalog::tt(8).unwrap()));
        assert!(!is_two_dicolourable(&catalog::bidirected_k(3).unwrap()));
        let p7 = catalog::p7();
        assert!(!is_two_dicolourable(&p7));
        for (u, v) in p7.arcs() {
            assert!(is_two_dicolourable(&p7.delete_arc(u, v).unwrap()));
        }
    }

    #[test]
    fn witness_is_valid_and_lexicographically_first() {
        let single = Digraph::new(1).unwrap();
        let w = find_two_dicolouring(&single).unwrap();
        assert_eq!(w.colour_of(0), 1);

        assert!(find_two_dicolouring(&catalog::h5()).is_none());

        let c3 = catalog::c3();
        let w = find_two_dicolouring(&c3).unwrap();
        assert!(is_valid_two_dicolouring(&c3, &w));
        // lexicographic first: 0 and 1 take colour 1, the triangle forces 2 out
        assert_eq!(w.class(1), vec![0, 1]);
        assert_eq!(w.class(2), vec![2]);
        assert_eq!(w.colour_of(2), 2);
    }

    #[test]
    fn uv_colouring_examples() {
        let k3 = catalog::bidirected_k(3).unwrap();
        for (u, v) in k3.arcs() {
            let p = UvColouringProblem::new(k3, (u, v)).unwrap();
            assert!(has_uv_colouring(&p));
        }

        // O4 and its long arc u -> v
        let o4 = catalog::o4();
        let p = UvColouringProblem::new(o4, (0, 3)).unwrap();
        assert!(!has_uv_colouring(&p));

        let arc = Digraph::with_arcs(2, &[(0, 1)]).unwrap();
        let p = UvColouringProblem::new(arc, (0, 1)).unwrap();
        assert!(has_uv_colouring(&p));

        assert!(UvColouringProblem::new(arc, (1, 0)).is_err());
    }

    #[test]
    fn three_dicritical_examples() {
        assert!(!is_three_dicritical(&catalog::tt(8).unwrap()));
        assert!(is_three_dicritical(&catalog::bidirected_k(3).unwrap()));
        assert!(is_three_dicritical(&catalog::h5()));
        // K4 bidirected is not 2-dicolourable, but it is not dicritical either
        let k4 = catalog::bidirected_k(4).unwrap();
        assert!(!is_two_dicolourable(&k4));
        assert!(!is_three_dicritical(&k4));
    }

    #[test]
    fn max_acyclic_examples() {
        assert_eq!(max_acyclic_subset_size(&catalog::tt(8).unwrap()), 8);
        assert_eq!(max_acyclic_subset_size(&catalog::bidirected_k(3).unwrap()), 1);
        assert_eq!(max_acyclic_subset_size(&catalog::p7()), 3);
    }

    #[test]
    fn arc_in_digon_or_triangle_examples() {
        assert_eq!(every_arc_in_digon_or_induced_triangle(&catalog::p7()), Ok(true));
        assert_eq!(
            every_arc_in_digon_or_induced_triangle(&catalog::tt(3).unwrap()),
            Ok(false)
        );
        assert_eq!(
            every_arc_in_digon_or_induced_triangle(&catalog::bidirected_k(3).unwrap()),
            Ok(true)
        );
        assert_eq!(
            every_arc_in_digon_or_induced_triangle(&catalog::f()),
            Err(DigraphError::NotSemicomplete)
        );
    }
}
