//! Exact treewidth by dynamic programming over eliminated vertex sets.
//!
//! Eliminating the vertices of a set `S` first and then `v` gives `v` the
//! neighbourhood `Q(S, v)`: the vertices outside `S ∪ {v}` reachable from `v`
//! through `S`. A graph has treewidth at most `t` iff the full vertex set can
//! be reached from the empty set by steps with `|Q(S, v)| ≤ t`.

use std::collections::BTreeSet;

use super::chordal::{fill_in, is_chordal};
use super::{EliminationOrder, Graph};
use crate::error::{Error, Result};

/// Largest graph accepted by [`treewidth_exact`].
pub const TREEWIDTH_EXACT_LIMIT: usize = 18;

/// Largest irreducible kernel accepted by [`treewidth_at_most`].
const DECISION_KERNEL_LIMIT: usize = 24;

fn masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn q_size(adj: &[u32], eliminated: u32, v: usize) -> u32 {
    let mut comp = 1u32 << v;
    let mut frontier = comp;
    let mut reach = 0u32;
    loop {
        let mut nb = 0u32;
        let mut f = frontier;
        while f != 0 {
            nb |= adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        reach |= nb;
        let fresh = nb & eliminated & !comp;
        if fresh == 0 {
            break;
        }
        comp |= fresh;
        frontier = fresh;
    }
    (reach & !eliminated & !(1u32 << v)).count_ones()
}

/// Searches for an elimination ordering of width `≤ t`. Returns it when one
/// exists. `adj` has at most 32 vertices.
fn decide(adj: &[u32], t: u32) -> Option<Vec<usize>> {
    let n = adj.len();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    // Last vertex eliminated to reach each set, plus one; zero = unseen.
    let mut via = vec![0u8; 1usize << n];
    let mut stack = vec![0u32];
    via[0] = u8::MAX;
    while let Some(s) = stack.pop() {
        if s == full {
            let mut order = Vec::with_capacity(n);
            let mut cur = full;
            while cur != 0 {
                let v = (via[cur as usize] - 1) as usize;
                order.push(v);
                cur &= !(1u32 << v);
            }
            order.reverse();
            return Some(order);
        }
        let mut rest = full & !s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = s | 1u32 << v;
            if via[next as usize] == 0 && q_size(adj, s, v) <= t {
                via[next as usize] = v as u8 + 1;
                stack.push(next);
            }
        }
    }
    None
}

/// Greedy min-fill elimination, lowest id on ties.
pub(crate) fn min_fill_order(g: &Graph) -> Vec<usize> {
    let mut adj: Vec<BTreeSet<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: BTreeSet<usize> = g.vertices().collect();
    let mut order = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let fill = |v: usize| {
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            nb.iter()
                .enumerate()
                .map(|(i, &a)| nb[i + 1..].iter().filter(|&&b| !adj[a].contains(&b)).count())
                .sum::<usize>()
        };
        let v = *alive
            .iter()
            .min_by_key(|&&v| (fill(v), adj[v].len(), v))
            .expect("non-empty");
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj[v].clear();
        alive.remove(&v);
        order.push(v);
    }
    order
}

fn degeneracy(g: &Graph) -> usize {
    let mut deg = g.degrees();
    let mut gone = vec![false; g.n()];
    let mut best = 0;
    for _ in 0..g.n() {
        let v = (0..g.n())
            .filter(|&v| !gone[v])
            .min_by_key(|&v| deg[v])
            .expect("vertex left");
        best = best.max(deg[v]);
        gone[v] = true;
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}

/// Exact treewidth with a witnessing elimination ordering, for `n ≤ 18`.
pub fn treewidth_exact(g: &Graph) -> Result<(usize, EliminationOrder)> {
    if g.n() > TREEWIDTH_EXACT_LIMIT {
        return Err(Error::TooLarge {
            what: "exact treewidth",
            n: g.n(),
            limit: TREEWIDTH_EXACT_LIMIT,
        });
    }
    if let Some(peo) = is_chordal(g) {
        return Ok((peo.width, peo));
    }
    let heuristic = min_fill_order(g);
    let (_, upper) = fill_in(g, &heuristic);
    // Non-chordal graphs contain a chordless cycle, so width at least 2.
    let lower = degeneracy(g).max(2);
    let adj = masks(g);
    for t in lower..upper {
        if let Some(order) = decide(&adj, t as u32) {
            let eo = EliminationOrder::new(g, order)?;
            debug_assert_eq!(eo.width, t);
            return Ok((t, eo));
        }
    }
    Ok((
        upper,
        EliminationOrder {
            order: heuristic,
            width: upper,
        },
    ))
}

/// Decides `tw(G) ≤ t` for graphs of any size whose irreducible kernel is
/// small. Almost simplicial vertices are peeled first, so chordal graphs and
/// series-parallel pieces never reach the exponential search.
pub fn treewidth_at_most(g: &Graph, t: usize) -> Result<bool> {
    if g.n() <= t + 1 {
        return Ok(true);
    }
    if g.edge_count() == 0 {
        return Ok(true);
    }
    if t == 0 {
        return Ok(false);
    }
    if t == 1 {
        return Ok(g.edge_count() + g.components().len() == g.n());
    }
    let mut adj: Vec<BTreeSet<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = vec![true; g.n()];
    let is_clique = |adj: &[BTreeSet<usize>], vs: &[usize]| {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|b| adj[a].contains(b)))
    };
    // Peel almost simplicial vertices of degree at most t: eliminating one
    // yields a minor, and its own bag has at most t + 1 vertices.
    let mut changed = true;
    while changed {
        changed = false;
        for v in g.vertices() {
            if !alive[v] {
                continue;
            }
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            if nb.len() > t {
                if is_clique(&adj, &nb) {
                    // N[v] is a clique on more than t + 1 vertices.
                    return Ok(false);
                }
                continue;
            }
            let almost = is_clique(&adj, &nb)
                || (0..nb.len()).any(|skip| {
                    let rest: Vec<usize> = nb
                        .iter()
                        .enumerate()
                        .filter_map(|(i, &w)| (i != skip).then_some(w))
                        .collect();
                    is_clique(&adj, &rest)
                });
            if !almost {
                continue;
            }
            for (i, &a) in nb.iter().enumerate() {
                adj[a].remove(&v);
                for &b in &nb[i + 1..] {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
            adj[v].clear();
            alive[v] = false;
            changed = true;
        }
    }
    let kernel: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
    if kernel.is_empty() {
        return Ok(true);
    }
    let kernel_graph = Graph::from_lists(
        kernel
            .iter()
            .map(|&v| {
                adj[v]
                    .iter()
                    .map(|w| kernel.binary_search(w).expect("alive neighbour"))
                    .collect()
            })
            .collect(),
    );
    for comp in kernel_graph.components() {
        if comp.len() <= t + 1 {
            continue;
        }
        if comp.len() > DECISION_KERNEL_LIMIT {
            return Err(Error::TooLarge {
                what: "treewidth decision kernel",
                n: comp.len(),
                limit: DECISION_KERNEL_LIMIT,
            });
        }
        let sub = kernel_graph.induced(&comp);
        if decide(&masks(&sub), t as u32).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn grid(r: usize, c: usize) -> Graph {
        let id = |i: usize, j: usize| i * c + j;
        let mut e = Vec::new();
        for i in 0..r {
            for j in 0..c {
                if i + 1 < r {
                    e.push((id(i, j), id(i + 1, j)));
                }
                if j + 1 < c {
                    e.push((id(i, j), id(i, j + 1)));
                }
            }
        }
        Graph::new(r * c, e).unwrap()
    }

    #[test]
    fn small_families() {
        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(treewidth_exact(&path).unwrap().0, 1);
        assert_eq!(treewidth_exact(&Graph::complete(5)).unwrap().0, 4);
        assert_eq!(treewidth_exact(&cycle(7)).unwrap().0, 2);
        assert_eq!(treewidth_exact(&Graph::empty(3)).unwrap().0, 0);
        assert_eq!(treewidth_exact(&Graph::empty(0)).unwrap().0, 0);
    }

    #[test]
    fn grids_have_width_of_short_side() {
        for (r, c, tw) in [(2, 5, 2), (3, 3, 3), (3, 5, 3), (4, 4, 4)] {
            let g = grid(r, c);
            let (w, eo) = treewidth_exact(&g).unwrap();
            assert_eq!(w, tw, "{r}x{c} grid");
            assert_eq!(EliminationOrder::new(&g, eo.order).unwrap().width, tw);
        }
    }

    #[test]
    fn petersen_graph_has_treewidth_four() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(treewidth_exact(&g).unwrap().0, 4);
        assert!(treewidth_at_most(&g, 4).unwrap());
        assert!(!treewidth_at_most(&g, 3).unwrap());
    }

    #[test]
    fn decision_matches_exact() {
        for g in [cycle(6), grid(3, 4), Graph::complete(4)] {
            let w = treewidth_exact(&g).unwrap().0;
            for t in 0..6 {
                assert_eq!(treewidth_at_most(&g, t).unwrap(), w <= t);
            }
        }
    }

    #[test]
    fn too_large() {
        assert!(matches!(
            treewidth_exact(&cycle(19)),
            Err(Error::TooLarge { .. })
        ));
        assert!(!treewidth_at_most(&cycle(40), 1).unwrap());
        assert!(treewidth_at_most(&cycle(40), 2).unwrap());
        assert!(!treewidth_at_most(&grid(5, 6), 4).unwrap());
        assert!(treewidth_at_most(&grid(5, 6), 5).unwrap());
        assert!(matches!(
            treewidth_at_most(&grid(7, 7), 6),
            Err(Error::TooLarge { .. })
        ));
    }
}
