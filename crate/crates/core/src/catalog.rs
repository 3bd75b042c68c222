//! Constructors for every fixed digraph the search pipelines rely on.
//!
//! Vertex labellings follow the reference construction code, so the `.dmat`
//! serialisations diff cleanly against the shipped golden files.

use crate::digraph::{canonical_code, from_dmat, Digraph, DigraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown digraph name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error("obstruction list contains isomorphic duplicates")]
    DuplicateObstruction,
}

/// The directed triangle.
pub fn c3() -> Digraph {
    Digraph::with_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
}

/// The transitive tournament on `n` vertices; ascending labels form the
/// acyclic ordering.
pub fn tt(n: usize) -> Result<Digraph, DigraphError> {
    let mut d = Digraph::new(n)?;
    for i in 0..n {
        for j in 0..i {
            d.add_arc(j, i)?;
        }
    }
    Ok(d)
}

/// The bidirected complete digraph on `n` vertices.
pub fn bidirected_k(n: usize) -> Result<Digraph, DigraphError> {
    let mut d = Digraph::new(n)?;
    for i in 0..n {
        for j in 0..i {
            d.add_arc(j, i)?;
            d.add_arc(i, j)?;
        }
    }
    Ok(d)
}

/// O4: a digon {1, 2}, vertex 0 dominating everything, vertex 3 dominated by
/// everything, plus the arc 0 -> 3.
pub fn o4() -> Digraph {
    Digraph::with_arcs(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 2), (2, 1)]).unwrap()
}

/// O5: a directed triangle 1 -> 2 -> 3 -> 1, vertex 0 dominating everything,
/// vertex 4 dominated by everything, plus the arc 0 -> 4.
pub fn o5() -> Digraph {
    Digraph::with_arcs(
        5,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 4),
            (1, 2),
            (2, 3),
            (3, 1),
        ],
    )
    .unwrap()
}

/// The bidirected star on 4 vertices, centre 0.
pub fn s4_bidirected() -> Digraph {
    let mut d = Digraph::new(4).unwrap();
    for i in 1..4 {
        d.add_arc(0, i).unwrap();
        d.add_arc(i, 0).unwrap();
    }
    d
}

/// A digon {0, 1} dominating a digon {2, 3}.
pub fn k2_join_k2() -> Digraph {
    let mut d = Digraph::new(4).unwrap();
    d.add_arc(0, 1).unwrap();
    d.add_arc(1, 0).unwrap();
    d.add_arc(2, 3).unwrap();
    d.add_arc(3, 2).unwrap();
    for i in 0..2 {
        for j in 2..4 {
            d.add_arc(i, j).unwrap();
        }
    }
    d
}

/// A digon {3, 4} dominating the directed triangle 0 -> 1 -> 2 -> 0.
pub fn k2_join_c3() -> Digraph {
    let mut d = Digraph::new(5).unwrap();
    for i in 0..3 {
        d.add_arc(i, (i + 1) % 3).unwrap();
        for j in 3..5 {
            d.add_arc(j, i).unwrap();
        }
    }
    d.add_arc(3, 4).unwrap();
    d.add_arc(4, 3).unwrap();
    d
}

/// The directed triangle 0 -> 1 -> 2 -> 0 dominating a digon {3, 4}.
pub fn c3_join_k2() -> Digraph {
    let mut d = Digraph::new(5).unwrap();
    for i in 0..3 {
        d.add_arc(i, (i + 1) % 3).unwrap();
        for j in 3..5 {
            d.add_arc(i, j).unwrap();
        }
    }
    d.add_arc(3, 4).unwrap();
    d.add_arc(4, 3).unwrap();
    d
}

/// The directed triangle 0 -> 1 -> 2 -> 0 dominating the directed triangle
/// 3 -> 4 -> 5 -> 3.
pub fn c3_join_c3() -> Digraph {
    let mut d = Digraph::new(6).unwrap();
    for i in 0..3 {
        d.add_arc(i, (i + 1) % 3).unwrap();
        d.add_arc(i + 3, (i + 1) % 3 + 3).unwrap();
        for j in 3..6 {
            d.add_arc(i, j).unwrap();
        }
    }
    d
}

/// F: a TT6 on vertices 0..=5 plus the directed triangles 0,1,6 / 2,3,7 /
/// 4,5,8 attached through vertices 6, 7, 8.
pub fn f() -> Digraph {
    let mut d = Digraph::new(9).unwrap();
    for i in 0..6 {
        for j in 0..i {
            d.add_arc(j, i).unwrap();
        }
    }
    for i in 0..3 {
        d.add_arc(6 + i, 2 * i).unwrap();
        d.add_arc(2 * i + 1, 6 + i).unwrap();
    }
    d
}

/// F plus a tenth vertex dominating the TT6 part.
pub fn f_plus() -> Digraph {
    let mut d = embed(&f(), 10);
    for v in 0..6 {
        d.add_arc(9, v).unwrap();
    }
    d
}

/// F plus a tenth vertex dominated by the TT6 part.
pub fn f_minus() -> Digraph {
    let mut d = embed(&f(), 10);
    for v in 0..6 {
        d.add_arc(v, 9).unwrap();
    }
    d
}

/// The directed wheel: triangle 0 -> 1 -> 2 -> 0 with hub 3 joined to every
/// rim vertex by a digon.
pub fn w3() -> Digraph {
    let mut d = Digraph::new(4).unwrap();
    for i in 0..3 {
        d.add_arc(i, (i + 1) % 3).unwrap();
        d.add_arc(3, i).unwrap();
        d.add_arc(i, 3).unwrap();
    }
    d
}

/// H5 with the arc set of the recorded enumeration output (the authoritative
/// labelling; the hand-drawn variant is isomorphic to it).
pub fn h5() -> Digraph {
    from_dmat("5\n01100\n00101\n00011\n11001\n10110\n").unwrap()
}

/// The Paley tournament on 7 vertices: i -> i+1, i+2, i+4 (mod 7).
pub fn p7() -> Digraph {
    let mut d = Digraph::new(7).unwrap();
    for i in 0..7 {
        for k in [1, 2, 4] {
            d.add_arc(i, (i + k) % 7).unwrap();
        }
    }
    d
}

/// The two strongly connected parts a rotative digraph is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RotPart {
    BidirectedK2,
    C3,
}

impl RotPart {
    fn order(self) -> usize {
        match self {
            RotPart::BidirectedK2 => 2,
            RotPart::C3 => 3,
        }
    }

    fn add_arcs(self, d: &mut Digraph, base: usize) {
        match self {
            RotPart::BidirectedK2 => {
                d.add_arc(base, base + 1).unwrap();
                d.add_arc(base + 1, base).unwrap();
            }
            RotPart::C3 => {
                for i in 0..3 {
                    d.add_arc(base + i, base + (i + 1) % 3).unwrap();
                }
            }
        }
    }
}

/// The rotative digraph R(H1, H2): hub vertex 0, H1 on the next vertices,
/// H2 after it, with the single-arc dominations hub => H1 => H2 => hub.
pub fn rotative(h1: RotPart, h2: RotPart) -> Digraph {
    let a = h1.order();
    let b = h2.order();
    let mut d = Digraph::new(1 + a + b).unwrap();
    h1.add_arcs(&mut d, 1);
    h2.add_arcs(&mut d, 1 + a);
    for i in 1..=a {
        d.add_arc(0, i).unwrap();
        for j in 1 + a..1 + a + b {
            d.add_arc(i, j).unwrap();
        }
    }
    for j in 1 + a..1 + a + b {
        d.add_arc(j, 0).unwrap();
    }
    d
}

/// Looks a named digraph up; names are the lowercase forms documented in the
/// README (`o4`, `c3_join_k2`, `tt8`, `bidirected_k3`, `r_c3_c3`, ...).
pub fn build(name: &str) -> Result<Digraph, CatalogError> {
    let d = match name {
        "o4" => o4(),
        "o5" => o5(),
        "s4_bidirected" => s4_bidirected(),
        "k2_join_k2" => k2_join_k2(),
        "k2_join_c3" => k2_join_c3(),
        "c3_join_k2" => c3_join_k2(),
        "c3_join_c3" => c3_join_c3(),
        "c3" => c3(),
        "f" => f(),
        "f_plus" => f_plus(),
        "f_minus" => f_minus(),
        "w3" => w3(),
        "h5" => h5(),
        "p7" => p7(),
        "r_k2_k2" => rotative(RotPart::BidirectedK2, RotPart::BidirectedK2),
        "r_k2_c3" => rotative(RotPart::BidirectedK2, RotPart::C3),
        "r_c3_k2" => rotative(RotPart::C3, RotPart::BidirectedK2),
        "r_c3_c3" => rotative(RotPart::C3, RotPart::C3),
        _ => {
            if let Some(n) = name.strip_prefix("tt") {
                let n: usize = n
                    .parse()
                    .map_err(|_| CatalogError::UnknownName(name.to_string()))?;
                return Ok(tt(n)?);
            }
            if let Some(n) = name.strip_prefix("bidirected_k") {
                let n: usize = n
                    .parse()
                    .map_err(|_| CatalogError::UnknownName(name.to_string()))?;
                return Ok(bidirected_k(n)?);
            }
            return Err(CatalogError::UnknownName(name.to_string()));
        }
    };
    Ok(d)
}

/// The eight 3-dicritical semi-complete digraphs, smallest first. These are
/// the expected final output of the classification pipelines and the source
/// of the golden files.
pub fn classified_digraphs() -> Vec<Digraph> {
    vec![
        bidirected_k(3).expect("small order"),
        w3(),
        rotative(RotPart::BidirectedK2, RotPart::BidirectedK2),
        h5(),
        rotative(RotPart::BidirectedK2, RotPart::C3),
        rotative(RotPart::C3, RotPart::BidirectedK2),
        rotative(RotPart::C3, RotPart::C3),
        p7(),
    ]
}

const T1_DMAT: &str = "9\n011111011\n001111111\n000111000\n000011010\n000001010\n000000111\n101110001\n001000101\n001110000\n";
const T2_DMAT: &str = "9\n011111011\n001111111\n000111100\n000011010\n000001010\n000000011\n100111010\n001000001\n001110100\n";
const T3_DMAT: &str = "9\n011111000\n001111101\n000111101\n000011111\n000001000\n000000001\n100011011\n111011000\n100010010\n";
const T4_DMAT: &str = "9\n011111001\n001111101\n000111101\n000011110\n000001000\n000000001\n100011010\n111011001\n000110100\n";

/// The four tournaments on F's vertex set singled out by the orientation
/// sweep, with the recorded adjacency matrices.
pub fn t_family() -> [Digraph; 4] {
    [
        from_dmat(T1_DMAT).unwrap(),
        from_dmat(T2_DMAT).unwrap(),
        from_dmat(T3_DMAT).unwrap(),
        from_dmat(T4_DMAT).unwrap(),
    ]
}

/// All isomorphism classes of tournaments obtained from TT8 by reversing
/// exactly one arc. Reversing a consecutive arc reproduces TT8, so TT8's
/// class always belongs to the family.
pub fn reversed_tt8_family() -> Vec<Digraph> {
    let tt8 = tt(8).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    let mut family = Vec::new();
    for (u, v) in tt8.arcs() {
        let mut rev = tt8.delete_arc(u, v).unwrap();
        rev.add_arc(v, u).unwrap();
        if seen.insert(canonical_code(&rev)) {
            family.push(rev);
        }
    }
    family
}

/// Forbidden patterns driving a candidate filter. Both lists must be
/// duplicate-free up to isomorphism.
#[derive(Clone, Debug)]
pub struct ObstructionSet {
    pub forbidden_subdigraphs: Vec<Digraph>,
    pub forbidden_induced_subdigraphs: Vec<Digraph>,
}

impl ObstructionSet {
    pub fn new(
        forbidden_subdigraphs: Vec<Digraph>,
        forbidden_induced_subdigraphs: Vec<Digraph>,
    ) -> Result<Self, CatalogError> {
        for list in [&forbidden_subdigraphs, &forbidden_induced_subdigraphs] {
            let codes: std::collections::BTreeSet<_> =
                list.iter().map(canonical_code).collect();
            if codes.len() != list.len() {
                return Err(CatalogError::DuplicateObstruction);
            }
        }
        Ok(ObstructionSet { forbidden_subdigraphs, forbidden_induced_subdigraphs })
    }
}

/// The eight forbidden subdigraphs of the final enumeration, together with a
/// caller-supplied induced list (the next transitive tournament or the
/// reversed-TT8 family, depending on the pipeline stage).
pub fn standard_obstructions(induced: Vec<Digraph>) -> ObstructionSet {
    ObstructionSet::new(
        vec![
            s4_bidirected(),
            k2_join_k2(),
            o4(),
            o5(),
            k2_join_c3(),
            c3_join_k2(),
            c3_join_c3(),
            f(),
        ],
        induced,
    )
    .expect("the eight standard obstructions are pairwise non-isomorphic")
}

fn embed(d: &Digraph, order: usize) -> Digraph {
    let mut out = Digraph::new(order).unwrap();
    for (u, v) in d.arcs() {
        out.add_arc(u, v).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{contains_pattern, to_dmat, PatternQuery};

    #[test]
    fn o5_shape() {
        let o5 = o5();
        assert_eq!(o5.order(), 5);
        assert_eq!(o5.arc_count(), 10);
        assert_eq!(o5.out_degree(0), 4);
        let mut outs: Vec<usize> = o5.vertices().map(|v| o5.out_degree(v)).collect();
        outs.sort_unstable();
        assert_eq!(outs, vec![0, 2, 2, 2, 4]);
    }

    #[test]
    fn o4_shape() {
        let o4 = o4();
        assert_eq!(o4.arc_count(), 7);
        assert!(o4.has_digon(1, 2));
        assert_eq!(o4.out_degree(0), 3);
        assert_eq!(o4.in_degree(3), 3);
    }

    #[test]
    fn f_counts() {
        let f = f();
        assert_eq!(f.order(), 9);
        // TT6 contributes 15 arcs, each triangle gadget 2 more
        assert_eq!(f.arc_count(), 21);
        assert!(!f.is_acyclic());
    }

    #[test]
    fn tt_family_edges() {
        assert_eq!(tt(1).unwrap().arc_count(), 0);
        assert_eq!(tt(8).unwrap().arc_count(), 28);
        assert!(tt(8).unwrap().is_tournament());
        assert!(bidirected_k(3).unwrap().arc_count() == 6);
    }

    #[test]
    fn t_family_is_as_recorded() {
        let ts = t_family();
        assert_eq!(to_dmat(&ts[0]).lines().nth(1).unwrap(), "011111011");
        let f = f();
        for t in &ts {
            assert!(t.is_tournament());
            // A(F) is a labelled subset of every member
            for (u, v) in f.arcs() {
                assert!(t.has_arc(u, v));
            }
        }
    }

    #[test]
    fn reversed_tt8_family_basics() {
        let family = reversed_tt8_family();
        assert!(family.iter().all(|t| t.arc_count() == 28));
        // reversing a consecutive arc gives TT8 back
        let tt8_code = crate::digraph::canonical_code(&tt(8).unwrap());
        assert!(family.iter().any(|t| crate::digraph::canonical_code(t) == tt8_code));
    }

    #[test]
    fn rotative_shapes() {
        let r = rotative(RotPart::C3, RotPart::C3);
        assert_eq!(r.order(), 7);
        assert_eq!(r.arc_count(), 21);
        assert!(r.is_tournament());
        let r = rotative(RotPart::BidirectedK2, RotPart::BidirectedK2);
        assert_eq!(r.order(), 5);
        assert_eq!(r.arc_count(), 12);
        // caption pattern: one arc from every vertex of a set to the next
        assert!(r.has_arc(0, 1) && r.has_arc(0, 2));
        assert!(r.has_arc(1, 3) && r.has_arc(2, 4));
        assert!(r.has_arc(3, 0) && r.has_arc(4, 0));
    }

    #[test]
    fn w3_has_three_digons_at_the_hub() {
        let w3 = w3();
        assert_eq!(w3.digon_degree(3), 3);
        assert_eq!(w3.arc_count(), 9);
        assert!(contains_pattern(&w3, &PatternQuery::subdigraph(s4_bidirected())));
    }

    #[test]
    fn f_plus_reversed_is_f_minus() {
        use crate::digraph::canonical_code;
        assert_eq!(canonical_code(&f_plus().reverse()), canonical_code(&f_minus()));
    }

    #[test]
    fn build_by_name() {
        assert_eq!(build("tt8").unwrap(), tt(8).unwrap());
        assert_eq!(build("bidirected_k3").unwrap(), bidirected_k(3).unwrap());
        assert_eq!(build("r_c3_c3").unwrap(), rotative(RotPart::C3, RotPart::C3));
        assert!(matches!(build("nope"), Err(CatalogError::UnknownName(_))));
        assert!(build("tt0").is_err());
    }

    #[test]
    fn standard_obstruction_list_has_eight_members() {
        use crate::digraph::canonical_code;
        let obs = standard_obstructions(vec![]);
        assert_eq!(obs.forbidden_subdigraphs.len(), 8);
        for required in [o4(), o5(), f()] {
            let code = canonical_code(&required);
            assert!(obs
                .forbidden_subdigraphs
                .iter()
                .any(|d| canonical_code(d) == code));
        }
        assert!(ObstructionSet::new(vec![o4(), o4()], vec![]).is_err());
    }

    #[test]
    fn h5_matches_its_alternative_labelling() {
        // pentagon labelling: digons {0,4}, {0,1} plus eight simple arcs
        let pentagon = Digraph::with_arcs(
            5,
            &[
                (0, 4),
                (4, 0),
                (0, 1),
                (1, 0),
                (4, 1),
                (1, 3),
                (1, 2),
                (3, 4),
                (2, 4),
                (3, 0),
                (0, 2),
                (2, 3),
            ],
        )
        .unwrap();
        use crate::digraph::canonical_code;
        assert_eq!(canonical_code(&pentagon), canonical_code(&h5()));
    }
}
