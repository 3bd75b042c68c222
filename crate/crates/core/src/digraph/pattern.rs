//! Subdigraph containment search.

use super::Digraph;

/// A containment query: a small pattern digraph plus the matching mode.
///
/// In non-induced mode a match is an injective vertex map sending every
/// pattern arc to a host arc. In induced mode the map must also reflect
/// non-arcs: the image's induced arc set equals the mapped pattern arcs.
#[derive(Clone, Debug)]
pub struct PatternQuery {
    pub pattern: Digraph,
    pub induced: bool,
}

impl PatternQuery {
    pub fn subdigraph(pattern: Digraph) -> Self {
        PatternQuery { pattern, induced: false }
    }

    pub fn induced(pattern: Digraph) -> Self {
        PatternQuery { pattern, induced: true }
    }
}

/// True iff `host` contains the queried pattern. A pattern larger than the
/// host cannot be embedded and yields `false`.
pub fn contains_pattern(host: &Digraph, query: &PatternQuery) -> bool {
    let p = &query.pattern;
    if p.order() > host.order() {
        return false;
    }
    // match high-degree pattern vertices first; they are the hardest to place
    let mut order: Vec<u8> = (0..p.order() as u8).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(p.degree(v as usize)), v));
    let mut map = [0u8; super::MAX_ORDER];
    extend(host, p, query.induced, &order, 0, 0, &mut map)
}

fn extend(
    host: &Digraph,
    p: &Digraph,
    induced: bool,
    order: &[u8],
    depth: usize,
    used: u16,
    map: &mut [u8; super::MAX_ORDER],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth] as usize;
    // candidates = host vertices consistent with every mapped vertex,
    // narrowed by neighbourhood mask intersections
    let mut cand = host.full_mask() & !used;
    for &pq in &order[..depth] {
        let hq = map[pq as usize] as usize;
        if p.has_arc(pq as usize, pv) {
            cand &= host.out_mask(hq);
        } else if induced {
            cand &= !host.out_mask(hq);
        }
        if p.has_arc(pv, pq as usize) {
            cand &= host.in_mask(hq);
        } else if induced {
            cand &= !host.in_mask(hq);
        }
        if cand == 0 {
            return false;
        }
    }
    for hv in super::bits(cand) {
        // a match gives hv at least the pattern vertex's neighbours, in both
        // modes
        if p.out_degree(pv) > host.out_degree(hv) || p.in_degree(pv) > host.in_degree(hv) {
            continue;
        }
        map[pv] = hv as u8;
        if extend(host, p, induced, order, depth + 1, used | 1 << hv, map) {
            return true;
        }
    }
    false
}
