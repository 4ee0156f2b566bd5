use std::collections::BTreeSet;

use serde::Serialize;

use super::Graph;
use crate::error::{invalid, Error, Result};

/// A vertex elimination ordering together with its fill-in width.
///
/// `order[0]` is eliminated first. The width is the largest number of
/// not-yet-eliminated neighbours a vertex has at the moment it is eliminated,
/// once the fill edges of earlier eliminations are taken into account.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
    pub width: usize,
}

impl EliminationOrder {
    /// Validates that `order` is a permutation of the vertices and replays
    /// the elimination to compute the width.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self> {
        if order.len() != g.n() {
            return Err(invalid(format!(
                "elimination order has {} entries for {} vertices",
                order.len(),
                g.n()
            )));
        }
        let mut seen = vec![false; g.n()];
        for &v in &order {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(invalid(format!("vertex {v} repeated in elimination order")));
            }
        }
        let width = elimination_width(g, &order);
        Ok(EliminationOrder { order, width })
    }

    /// Construction order: the reverse of the elimination order.
    pub fn construction_order(&self) -> Vec<usize> {
        self.order.iter().rev().copied().collect()
    }
}

/// Fill-in graph of eliminating `order` (a permutation of the vertices) and
/// the resulting width.
pub(crate) fn fill_in(g: &Graph, order: &[usize]) -> (Graph, usize) {
    let mut adj: Vec<BTreeSet<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut filled: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut gone = vec![false; g.n()];
    let mut width = 0;
    for &v in order {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&w| !gone[w]).collect();
        width = width.max(later.len());
        for (i, &a) in later.iter().enumerate() {
            filled[v].push(a);
            filled[a].push(v);
            for &b in &later[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        gone[v] = true;
    }
    (Graph::from_lists(filled), width)
}

/// Width of the elimination ordering `order` (which must be a permutation).
pub fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    fill_in(g, order).1
}

/// Lexicographic breadth-first search by partition refinement. Ties go to
/// the lowest vertex id. Returns vertices in visiting order.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut classes: Vec<Vec<usize>> = if n == 0 { vec![] } else { vec![g.vertices().collect()] };
    let mut visited = vec![false; n];
    let mut out = Vec::with_capacity(n);
    let mut mark = vec![false; n];
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        visited[v] = true;
        out.push(v);
        for &w in g.neighbors(v) {
            mark[w] = !visited[w];
        }
        let mut refined = Vec::with_capacity(classes.len() + 4);
        for class in classes.drain(..) {
            let (hit, miss): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&w| mark[w]);
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        classes = refined;
        for &w in g.neighbors(v) {
            mark[w] = false;
        }
    }
    out
}

/// True iff the later neighbours of every vertex in `order` form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        if v >= g.n() || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        // The earliest later neighbour must see all the others.
        match later.iter().min_by_key(|&&w| pos[w]) {
            None => true,
            Some(&p) => later.iter().all(|&w| w == p || g.has_edge(p, w)),
        }
    })
}

/// Chordality test. On success returns a perfect elimination ordering
/// (reverse LexBFS order, verified) of width `ω(G) − 1`.
pub fn is_chordal(g: &Graph) -> Option<EliminationOrder> {
    let mut order = lex_bfs(g);
    order.reverse();
    if !is_perfect_elimination_order(g, &order) {
        return None;
    }
    let width = later_neighbour_counts(g, &order).into_iter().max().unwrap_or(0);
    Some(EliminationOrder { order, width })
}

fn later_neighbour_counts(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count())
        .collect()
}

/// Largest clique size for non-chordal graphs handled by branch and bound.
pub const MAX_CLIQUE_SEARCH_LIMIT: usize = 25;

/// `ω(G)`. Chordal graphs of any size are handled through a perfect
/// elimination ordering; other graphs need `n ≤ 25`.
pub fn max_clique_size(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    if let Some(peo) = is_chordal(g) {
        return Ok(peo.width + 1);
    }
    if g.n() > MAX_CLIQUE_SEARCH_LIMIT {
        return Err(Error::TooLarge {
            what: "maximum clique search",
            n: g.n(),
            limit: MAX_CLIQUE_SEARCH_LIMIT,
        });
    }
    let masks: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut best = 0;
    grow_clique(&masks, 0, (1u32 << g.n()) - 1, &mut best);
    Ok(best as usize)
}

fn grow_clique(masks: &[u32], size: u32, mut cand: u32, best: &mut u32) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    while cand != 0 {
        if size + cand.count_ones() <= *best {
            return;
        }
        let v = cand.trailing_zeros();
        cand &= cand - 1;
        grow_clique(masks, size + 1, cand & masks[v as usize], best);
    }
}

/// Maximal cliques of a chordal graph (each sorted), or `None` when the
/// graph is not chordal.
pub fn maximal_cliques(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let peo = is_chordal(g)?;
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = peo
        .order
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for c in candidates {
        let covered = kept
            .iter()
            .any(|k| c.iter().all(|v| k.binary_search(v).is_ok()));
        if !covered {
            kept.push(c);
        }
    }
    kept.sort();
    Some(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path_power(n: usize, k: usize) -> Graph {
        Graph::new(
            n,
            (0..n).flat_map(|i| (i + 1..n).filter(move |j| j - i <= k).map(move |j| (i, j))),
        )
        .unwrap()
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        assert!(is_chordal(&cycle(4)).is_none());
        assert_eq!(max_clique_size(&cycle(4)).unwrap(), 2);
    }

    #[test]
    fn trees_and_path_powers_are_chordal() {
        let star = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
        assert!(is_chordal(&star).is_some());
        let p = path_power(9, 2);
        let peo = is_chordal(&p).unwrap();
        assert!(is_perfect_elimination_order(&p, &peo.order));
        assert_eq!(peo.width, 2);
        assert_eq!(max_clique_size(&p).unwrap(), 3);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(max_clique_size(&Graph::complete(4)).unwrap(), 4);
        assert_eq!(max_clique_size(&Graph::empty(3)).unwrap(), 1);
        assert_eq!(max_clique_size(&Graph::empty(0)).unwrap(), 0);
        // Wheel on a 5-cycle: not chordal, ω = 3.
        let wheel = Graph::new(6, (0..5).map(|i| (i, (i + 1) % 5)).chain((0..5).map(|i| (i, 5)))).unwrap();
        assert!(is_chordal(&wheel).is_none());
        assert_eq!(max_clique_size(&wheel).unwrap(), 3);
    }

    #[test]
    fn too_large_for_clique_search() {
        assert!(matches!(
            max_clique_size(&cycle(30)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn elimination_order_replay() {
        let c = cycle(5);
        let eo = EliminationOrder::new(&c, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(eo.width, 2);
        assert!(EliminationOrder::new(&c, vec![0, 0, 1, 2, 3]).is_err());
        assert!(EliminationOrder::new(&c, vec![0, 1]).is_err());
        assert_eq!(eo.construction_order(), vec![4, 3, 2, 1, 0]);
    }

    #[test]
    fn maximal_cliques_of_path_square() {
        let cliques = maximal_cliques(&path_power(5, 2)).unwrap();
        assert_eq!(cliques, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]);
        assert!(maximal_cliques(&cycle(4)).is_none());
    }

    #[test]
    fn lex_bfs_visits_everything_once() {
        let g = Graph::new(6, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let mut order = lex_bfs(&g);
        assert_eq!(order[0], 0);
        order.sort_unstable();
        assert_eq!(order, (0..6).collect::<Vec<_>>());
    }
}
