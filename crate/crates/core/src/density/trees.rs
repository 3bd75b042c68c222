//! Free tree enumeration up to isomorphism.
//!
//! Trees on k+1 vertices are grown by attaching a leaf to every vertex of
//! every tree on k vertices; deduplication uses the AHU code rooted at the
//! tree centre(s). Every tree arises from some leaf deletion, so the growth
//! is exhaustive.

use super::{bits, DensityError, Tree};
use std::collections::HashSet;

/// All free trees on exactly `n` vertices, one representative per
/// isomorphism class. Capped at order 12.
pub fn free_trees(n: usize) -> Result<Vec<Tree>, DensityError> {
    if n == 0 || n > 12 {
        return Err(DensityError::EnumerationTooLarge { max: 12, got: n });
    }
    let mut current = vec![Tree::new(1, &[]).expect("single vertex")];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for tree in &current {
            for attach in 0..tree.order() {
                let mut edges = tree.graph().edges();
                edges.push((attach, size - 1));
                let grown = Tree::new(size, &edges).expect("leaf attachment keeps a tree");
                if seen.insert(ahu_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// Canonical code of a free tree: the rooted AHU code at the centre, or the
/// smaller of the two codes when the tree is bicentral.
pub(crate) fn ahu_code(t: &Tree) -> Vec<u8> {
    let centres = centres(t);
    let mut best: Option<Vec<u8>> = None;
    for c in centres {
        let code = rooted_code(t, c, usize::MAX);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.expect("a tree has one or two centres")
}

fn centres(t: &Tree) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut alive: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut remaining = n;
    while remaining > 2 {
        let leaves: Vec<usize> = bits(alive).filter(|&v| degree[v] <= 1).collect();
        for v in leaves {
            alive &= !(1 << v);
            remaining -= 1;
            for w in bits(t.graph().adj[v] & alive) {
                degree[w] -= 1;
            }
        }
    }
    bits(alive).collect()
}

fn rooted_code(t: &Tree, v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = bits(t.graph().adj[v])
        .filter(|&w| w != parent)
        .map(|w| rooted_code(t, w, v))
        .collect();
    children.sort();
    let mut code = vec![b'('];
    for child in children {
        code.extend(child);
    }
    code.push(b')');
    code
}
