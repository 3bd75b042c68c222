//! Density machinery: bidirected parts, tree dearth, odd pairs and the
//! arc-count bound. All arithmetic here is exact; there are no tolerances.

mod trees;

pub use trees::free_trees;

use crate::digraph::Digraph;
use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DensityError {
    #[error("graph order {0} out of range (must be 1..=32)")]
    OrderOutOfRange(usize),
    #[error("edge endpoint {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("edge set does not form a tree (need connectivity and order-1 edges)")]
    NotATree,
    #[error("free-tree enumeration is capped at order {max}, got {got}")]
    EnumerationTooLarge { max: usize, got: usize },
}

/// Iterate the set bits of a 32-bit vertex mask, ascending.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
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

/// A simple undirected graph on at most 32 vertices, used for bidirected
/// parts and trees.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Graph {
    order: u8,
    adj: [u32; 32],
}

impl Graph {
    pub fn new(order: usize) -> Result<Self, DensityError> {
        if order == 0 || order > 32 {
            return Err(DensityError::OrderOutOfRange(order));
        }
        Ok(Graph { order: order as u8, adj: [0; 32] })
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), DensityError> {
        if u >= self.order() {
            return Err(DensityError::VertexOutOfRange(u));
        }
        if v >= self.order() {
            return Err(DensityError::VertexOutOfRange(v));
        }
        if u == v {
            return Err(DensityError::LoopEdge(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            for v in bits(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn component_mask(&self, start: usize) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut grown = 0u32;
            for v in bits(frontier) {
                grown |= self.adj[v];
            }
            grown &= !seen;
            seen |= grown;
            frontier = grown;
        }
        seen
    }

    /// Vertex sets of the connected components, ascending by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for v in 0..self.order() {
            if seen >> v & 1 == 0 {
                let mask = self.component_mask(v);
                seen |= mask;
                out.push(bits(mask).collect());
            }
        }
        out
    }

    /// Acyclic as an undirected graph: every component has one edge fewer
    /// than vertices.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.order()
    }
}

/// The undirected graph whose edges are exactly the digons of `d`.
pub fn bidirected_part(d: &Digraph) -> Graph {
    let mut g = Graph::new(d.order()).expect("orders coincide");
    for u in d.vertices() {
        for v in u + 1..d.order() {
            if d.has_digon(u, v) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// True iff the bidirected part of `d` is a forest.
pub fn check_digon_forest(d: &Digraph) -> bool {
    bidirected_part(d).is_forest()
}

/// True iff m(D) <= n(n-1)/2 + 2n/3, evaluated in exact integer arithmetic.
pub fn check_arc_bound(d: &Digraph) -> bool {
    let n = d.order();
    let m = d.arc_count();
    6 * m <= 3 * n * (n - 1) + 4 * n
}

/// An undirected tree, validated at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self, DensityError> {
        let mut graph = Graph::new(order)?;
        for &(u, v) in edges {
            graph.add_edge(u, v)?;
        }
        if graph.edge_count() != order - 1 || graph.components().len() != 1 {
            return Err(DensityError::NotATree);
        }
        Ok(Tree { graph })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Result<Self, DensityError> {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Tree::new(n, &edges)
    }

    /// The star on `n` vertices, centre 0.
    pub fn star(n: usize) -> Result<Self, DensityError> {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
        Tree::new(n, &edges)
    }

    /// BFS distances from `v`.
    fn distances_from(&self, v: usize) -> [u8; 32] {
        let mut dist = [u8::MAX; 32];
        dist[v] = 0;
        let mut frontier = 1u32 << v;
        let mut seen = frontier;
        let mut level = 0u8;
        while frontier != 0 {
            level += 1;
            let mut next = 0u32;
            for x in bits(frontier) {
                next |= self.graph.adj[x];
            }
            next &= !seen;
            for x in bits(next) {
                dist[x] = level;
            }
            seen |= next;
            frontier = next;
        }
        dist
    }
}

/// The dearth of a tree split into its two summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DearthReport {
    /// Sum of d(v)(d(v)-1)/6 over the vertices of degree at least 3.
    pub v3_term: Ratio<i64>,
    /// Number of odd pairs.
    pub odd_pairs: u64,
    /// v3_term + odd_pairs.
    pub dearth: Ratio<i64>,
}

/// Number of non-adjacent vertex pairs at odd tree distance.
pub fn odd_pairs(t: &Tree) -> u64 {
    let mut count = 0;
    for u in 0..t.order() {
        let dist = t.distances_from(u);
        count += dist[u + 1..t.order()]
            .iter()
            .filter(|&&d| d >= 3 && d % 2 == 1)
            .count() as u64;
    }
    count
}

/// The dearth of a tree, in exact rational arithmetic.
pub fn dearth(t: &Tree) -> DearthReport {
    let mut v3_numerator: i64 = 0;
    for v in 0..t.order() {
        let d = t.degree(v) as i64;
        if d >= 3 {
            v3_numerator += d * (d - 1);
        }
    }
    let v3_term = Ratio::new(v3_numerator, 6);
    let pairs = odd_pairs(t);
    DearthReport {
        v3_term,
        odd_pairs: pairs,
        dearth: v3_term + Ratio::from_integer(pairs as i64),
    }
}

/// Checks dearth(T) >= n/3 - 1 on every free tree of order at most `max_n`
/// (capped at 12). Returns true iff no counterexample exists.
pub fn verify_dearth_lower_bound(max_n: usize) -> Result<bool, DensityError> {
    if max_n > 12 {
        return Err(DensityError::EnumerationTooLarge { max: 12, got: max_n });
    }
    for n in 1..=max_n {
        let bound = Ratio::new(n as i64, 3) - Ratio::from_integer(1);
        for tree in free_trees(n)? {
            if dearth(&tree).dearth < bound {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks, for every component T of the bidirected part of `d` on at least
/// two vertices, that the number of non-adjacent vertex pairs inside V(T)
/// is at least dearth(T). Components that are not trees fail the check.
pub fn verify_dearth_vs_nonadjacent(d: &Digraph) -> bool {
    let part = bidirected_part(d);
    for component in part.components() {
        if component.len() < 2 {
            continue;
        }
        let rank = |v: usize| component.iter().position(|&x| x == v).expect("member");
        let edges: Vec<(usize, usize)> = part
            .edges()
            .into_iter()
            .filter(|&(u, v)| component.contains(&u) && component.contains(&v))
            .map(|(u, v)| (rank(u), rank(v)))
            .collect();
        let tree = match Tree::new(component.len(), &edges) {
            Ok(t) => t,
            Err(_) => return false,
        };
        let mut non_adjacent: i64 = 0;
        for (i, &u) in component.iter().enumerate() {
            for &v in &component[i + 1..] {
                if !d.has_arc(u, v) && !d.has_arc(v, u) {
                    non_adjacent += 1;
                }
            }
        }
        if Ratio::from_integer(non_adjacent) < dearth(&tree).dearth {
            return false;
        }
    }
    true
}

/// Checks the path-plus-matching observation: however a matching is added to
/// the path w1..w7, some stable set of size 3 avoids w1 or w7. Brute force
/// over all matchings on the seven vertices.
pub fn verify_matchpath_lemma() -> bool {
    let path: [u8; 7] = [0b0000010, 0b0000101, 0b0001010, 0b0010100, 0b0101000, 0b1010000, 0b0100000];
    let mut matchings: Vec<Vec<(usize, usize)>> = Vec::new();
    collect_matchings(0, 0u8, &mut Vec::new(), &mut matchings);
    for matching in &matchings {
        let mut adj = path;
        for &(u, v) in matching {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        if !has_good_stable_set(&adj) {
            return false;
        }
    }
    true
}

fn collect_matchings(
    from: usize,
    used: u8,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    match (from..7).find(|&v| used >> v & 1 == 0) {
        None => out.push(current.clone()),
        Some(u) => {
            // leave u unmatched
            collect_matchings(u + 1, used | 1 << u, current, out);
            for v in u + 1..7 {
                if used >> v & 1 == 0 {
                    current.push((u, v));
                    collect_matchings(u + 1, used | 1 << u | 1 << v, current, out);
                    current.pop();
                }
            }
        }
    }
}

fn has_good_stable_set(adj: &[u8; 7]) -> bool {
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                let set = 1u8 << a | 1 << b | 1 << c;
                // must avoid at least one endpoint of the path
                if set & 0b1000001 == 0b1000001 {
                    continue;
                }
                if adj[a] & set == 0 && adj[b] & set == 0 && adj[c] & set == 0 {
                    return true;
                }
            }
        }
    }
    false
}
