//! Canonical forms for small digraphs.
//!
//! Two digraphs get the same [`CanonicalCode`] exactly when they are
//! isomorphic, which turns deduplication up to isomorphism into set
//! membership. The code is the lexicographically smallest adjacency encoding
//! over all vertex orderings compatible with an iterated degree refinement:
//! cells are split by out-, in- and digon-degrees towards every cell until
//! stable, then a backtracking search individualizes one vertex of the first
//! non-singleton cell at a time. Refinement keys are label-independent, so
//! the set of leaf encodings, and hence its minimum, is an isomorphism
//! invariant.

use super::Digraph;

/// Total-order-comparable encoding of a digraph's isomorphism class.
///
/// Layout: first byte is the order `n`, followed by the n*n adjacency bits of
/// the canonical relabelling in row-major order, packed MSB-first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Rebuilds the canonical representative digraph from the code.
    pub fn decode(&self) -> Digraph {
        let n = self.0[0] as usize;
        let mut d = Digraph::new(n).expect("code holds a valid order");
        for i in 0..n {
            for j in 0..n {
                let k = i * n + j;
                if self.0[1 + k / 8] >> (7 - k % 8) & 1 == 1 {
                    d.add_arc(i, j).expect("code has no diagonal bits");
                }
            }
        }
        d
    }
}

impl std::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// The canonical code of `d`'s isomorphism class.
pub fn canonical_code(d: &Digraph) -> CanonicalCode {
    CanonicalCode(search_canonical(d).1)
}

/// The canonical representative: `d` relabelled so that its adjacency
/// encoding equals `canonical_code(d)`.
pub fn canonical_form(d: &Digraph) -> Digraph {
    let (perm, _) = search_canonical(d);
    let n = d.order();
    let mut out = Digraph::new(n).expect("order preserved");
    for i in 0..n {
        for j in 0..n {
            if i != j && d.has_arc(perm[i] as usize, perm[j] as usize) {
                out.add_arc(i, j).expect("valid arc");
            }
        }
    }
    out
}

/// Ordered partition of the vertex set; cell order is part of the state.
type Partition = Vec<Vec<u8>>;

fn initial_partition(d: &Digraph) -> Partition {
    let mut keyed: Vec<(u32, u8)> = d
        .vertices()
        .map(|v| {
            let key = (d.out_degree(v) as u32) << 16
                | (d.in_degree(v) as u32) << 8
                | d.digon_degree(v) as u32;
            (key, v as u8)
        })
        .collect();
    keyed.sort_unstable();
    let mut part: Partition = Vec::new();
    let mut last = None;
    for (key, v) in keyed {
        if last != Some(key) {
            part.push(Vec::new());
            last = Some(key);
        }
        part.last_mut().unwrap().push(v);
    }
    part
}

/// Splits cells by per-cell (out, in, digon) arc counts until stable.
fn refine(d: &Digraph, part: &mut Partition) {
    loop {
        let masks: Vec<u16> = part
            .iter()
            .map(|cell| cell.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let signature = |v: u8| -> Vec<u32> {
            masks
                .iter()
                .map(|&m| {
                    ((d.out_mask(v as usize) & m).count_ones()) << 16
                        | ((d.in_mask(v as usize) & m).count_ones()) << 8
                        | (d.out_mask(v as usize) & d.in_mask(v as usize) & m).count_ones()
                })
                .collect()
        };
        let mut next: Partition = Vec::new();
        let mut changed = false;
        for cell in part.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, u8)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut sub: Partition = Vec::new();
            let mut last: Option<&Vec<u32>> = None;
            for (sig, v) in &keyed {
                if last != Some(sig) {
                    sub.push(Vec::new());
                    last = Some(sig);
                }
                sub.last_mut().unwrap().push(*v);
            }
            if sub.len() > 1 {
                changed = true;
            }
            next.extend(sub);
        }
        *part = next;
        if !changed {
            return;
        }
    }
}

fn encode(d: &Digraph, perm: &[u8]) -> Vec<u8> {
    let n = perm.len();
    let mut bytes = Vec::with_capacity(1 + (n * n).div_ceil(8));
    bytes.push(n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in 0..n {
            let bit = i != j && d.has_arc(perm[i] as usize, perm[j] as usize);
            acc = acc << 1 | bit as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    bytes
}

fn search_canonical(d: &Digraph) -> (Vec<u8>, Vec<u8>) {
    let mut part = initial_partition(d);
    refine(d, &mut part);
    let mut best: Option<(Vec<u8>, Vec<u8>)> = None;
    descend(d, part, &mut best);
    let (perm, code) = best.expect("at least one ordering is explored");
    (perm, code)
}

fn descend(d: &Digraph, part: Partition, best: &mut Option<(Vec<u8>, Vec<u8>)>) {
    if part.iter().all(|c| c.len() == 1) {
        let perm: Vec<u8> = part.iter().map(|c| c[0]).collect();
        let code = encode(d, &perm);
        match best {
            Some((_, b)) if *b <= code => {}
            _ => *best = Some((perm, code)),
        }
        return;
    }
    let idx = part.iter().position(|c| c.len() > 1).unwrap();
    for pick in 0..part[idx].len() {
        let mut child: Partition = Vec::with_capacity(part.len() + 1);
        child.extend_from_slice(&part[..idx]);
        let v = part[idx][pick];
        child.push(vec![v]);
        child.push(part[idx].iter().copied().filter(|&w| w != v).collect());
        child.extend_from_slice(&part[idx + 1..]);
        refine(d, &mut child);
        descend(d, child, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn relabel(d: &Digraph, perm: &[usize]) -> Digraph {
        let mut out = Digraph::new(d.order()).unwrap();
        for (u, v) in d.arcs() {
            out.add_arc(perm[u], perm[v]).unwrap();
        }
        out
    }

    #[test]
    fn c3_relabellings_share_code() {
        let c3 = catalog::c3();
        let base = canonical_code(&c3);
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for p in perms {
            assert_eq!(canonical_code(&relabel(&c3, &p)), base);
        }
    }

    #[test]
    fn t1_and_t2_differ() {
        let ts = catalog::t_family();
        assert_ne!(canonical_code(&ts[0]), canonical_code(&ts[1]));
    }

    #[test]
    fn digon_vs_single_arc() {
        let digon = Digraph::with_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let single = Digraph::with_arcs(2, &[(0, 1)]).unwrap();
        assert_ne!(canonical_code(&digon), canonical_code(&single));
    }

    #[test]
    fn canonical_form_is_a_fixed_point() {
        for d in [catalog::o4(), catalog::o5(), catalog::h5(), catalog::p7()] {
            let cf = canonical_form(&d);
            assert_eq!(canonical_code(&cf), canonical_code(&d));
            assert_eq!(canonical_form(&cf), cf);
            assert_eq!(canonical_code(&d).decode(), cf);
        }
    }

    #[test]
    fn relabelled_p7_shares_its_code() {
        let p7 = catalog::p7();
        let shifted = relabel(&p7, &[3, 4, 5, 6, 0, 1, 2]);
        assert_eq!(canonical_code(&p7), canonical_code(&shifted));
    }
}
