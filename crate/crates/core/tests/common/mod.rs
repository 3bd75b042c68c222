//! Brute-force oracles and random digraph generators shared by the
//! integration tests. Every oracle decides its question from first
//! principles, independently of the library's search code.
#![allow(dead_code)] // each test target uses a different subset

use dicrit_core::digraph::Digraph;
use rand::Rng;

/// Plain DFS cycle detection (white/grey/black), restricted to `verts`.
pub fn oracle_is_acyclic_on(d: &Digraph, verts: &[usize]) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum State {
        White,
        Grey,
        Black,
    }
    fn dfs(d: &Digraph, v: usize, inside: &[bool], state: &mut [State; 16]) -> bool {
        state[v] = State::Grey;
        for w in d.vertices() {
            if inside[w] && d.has_arc(v, w) {
                match state[w] {
                    State::Grey => return false,
                    State::White => {
                        if !dfs(d, w, inside, state) {
                            return false;
                        }
                    }
                    State::Black => {}
                }
            }
        }
        state[v] = State::Black;
        true
    }
    let mut inside = [false; 16];
    for &v in verts {
        inside[v] = true;
    }
    let mut state = [State::White; 16];
    for &v in verts {
        if state[v] == State::White && !dfs(d, v, &inside[..d.order()], &mut state) {
            return false;
        }
    }
    true
}

pub fn oracle_is_acyclic(d: &Digraph) -> bool {
    let verts: Vec<usize> = d.vertices().collect();
    oracle_is_acyclic_on(d, &verts)
}

/// Exhaustive 2^n sweep over vertex bipartitions.
pub fn oracle_two_dicolourable(d: &Digraph) -> bool {
    let n = d.order();
    for mask in 0u32..1 << n {
        let ones: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let zeros: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        if oracle_is_acyclic_on(d, &ones) && oracle_is_acyclic_on(d, &zeros) {
            return true;
        }
    }
    false
}

fn oracle_path_through(d: &Digraph, allowed: &[usize], from: usize, to: usize) -> bool {
    if from == to {
        return true;
    }
    let mut stack = vec![from];
    let mut seen = vec![from];
    while let Some(x) = stack.pop() {
        for &y in allowed {
            if d.has_arc(x, y) && !seen.contains(&y) {
                if y == to {
                    return true;
                }
                seen.push(y);
                stack.push(y);
            }
        }
    }
    false
}

/// Exhaustive sweep over all 2-colourings with u, v fixed to colour 1 of the
/// digraph minus the arc uv.
pub fn oracle_has_uv_colouring(d: &Digraph, u: usize, v: usize) -> bool {
    let stripped = d.delete_arc(u, v).expect("oracle callers pass an existing arc");
    let n = stripped.order();
    'colourings: for mask in 0u32..1 << n {
        // colour 1 = bit unset; u, v must be colour 1
        if mask >> u & 1 == 1 || mask >> v & 1 == 1 {
            continue;
        }
        let ones: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 0).collect();
        let twos: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        if !oracle_is_acyclic_on(&stripped, &ones) || !oracle_is_acyclic_on(&stripped, &twos) {
            continue 'colourings;
        }
        if oracle_path_through(&stripped, &ones, u, v) {
            continue 'colourings;
        }
        return true;
    }
    false
}

/// Backtracking over all vertex bijections, consistency checked as the map
/// grows; equivalent to trying all n! maps.
pub fn oracle_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    if a.order() != b.order() || a.arc_count() != b.arc_count() {
        return false;
    }
    fn place(a: &Digraph, b: &Digraph, v: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if v == a.order() {
            return true;
        }
        'targets: for t in b.vertices() {
            if used[t] {
                continue;
            }
            for (prev, &mapped) in map.iter().enumerate() {
                if a.has_arc(v, prev) != b.has_arc(t, mapped)
                    || a.has_arc(prev, v) != b.has_arc(mapped, t)
                {
                    continue 'targets;
                }
            }
            map.push(t);
            used[t] = true;
            if place(a, b, v + 1, map, used) {
                return true;
            }
            map.pop();
            used[t] = false;
        }
        false
    }
    place(a, b, 0, &mut Vec::new(), &mut vec![false; b.order()])
}

/// Tries every injective map from pattern vertices to host vertices.
pub fn oracle_contains_pattern(host: &Digraph, pattern: &Digraph, induced: bool) -> bool {
    fn place(
        host: &Digraph,
        p: &Digraph,
        induced: bool,
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == p.order() {
            return true;
        }
        'targets: for t in host.vertices() {
            if used[t] {
                continue;
            }
            for (prev, &mapped) in map.iter().enumerate() {
                let fwd_ok = if induced {
                    p.has_arc(v, prev) == host.has_arc(t, mapped)
                } else {
                    !p.has_arc(v, prev) || host.has_arc(t, mapped)
                };
                let bwd_ok = if induced {
                    p.has_arc(prev, v) == host.has_arc(mapped, t)
                } else {
                    !p.has_arc(prev, v) || host.has_arc(mapped, t)
                };
                if !fwd_ok || !bwd_ok {
                    continue 'targets;
                }
            }
            map.push(t);
            used[t] = true;
            if place(host, p, induced, v + 1, map, used) {
                return true;
            }
            map.pop();
            used[t] = false;
        }
        false
    }
    if pattern.order() > host.order() {
        return false;
    }
    place(host, pattern, induced, 0, &mut Vec::new(), &mut vec![false; host.order()])
}

/// A digraph where each ordered pair carries an arc with probability `p`.
pub fn random_digraph<R: Rng>(rng: &mut R, order: usize, p: f64) -> Digraph {
    let mut d = Digraph::new(order).unwrap();
    for u in 0..order {
        for v in 0..order {
            if u != v && rng.gen_bool(p) {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    d
}

/// A random semi-complete digraph: every unordered pair gets one of the two
/// single arcs or a digon, digons with probability `digon_p`.
pub fn random_semicomplete<R: Rng>(rng: &mut R, order: usize, digon_p: f64) -> Digraph {
    let mut d = Digraph::new(order).unwrap();
    for u in 0..order {
        for v in u + 1..order {
            if rng.gen_bool(digon_p) {
                d.add_arc(u, v).unwrap();
                d.add_arc(v, u).unwrap();
            } else if rng.gen_bool(0.5) {
                d.add_arc(u, v).unwrap();
            } else {
                d.add_arc(v, u).unwrap();
            }
        }
    }
    d
}

/// Applies a random vertex permutation.
pub fn random_relabel<R: Rng>(rng: &mut R, d: &Digraph) -> Digraph {
    let n = d.order();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let mut out = Digraph::new(n).unwrap();
    for (u, v) in d.arcs() {
        out.add_arc(perm[u], perm[v]).unwrap();
    }
    out
}
