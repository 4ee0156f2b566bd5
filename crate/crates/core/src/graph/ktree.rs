use std::collections::BTreeSet;

use serde::Serialize;

use super::chordal::{fill_in, is_chordal, maximal_cliques};
use super::treewidth::{min_fill_order, treewidth_exact, TREEWIDTH_EXACT_LIMIT};
use super::{EliminationOrder, Graph};
use crate::error::{invalid, Error, Result};

/// Recognises k-trees by peeling simplicial vertices of degree exactly `k`,
/// lowest id first, until a `(k+1)`-clique remains.
///
/// On success the returned order eliminates the peeled vertices first and
/// the final clique last (in decreasing id order), so its reverse is a
/// construction order: the first `k + 1` vertices form a clique and each
/// later vertex is added onto a `k`-clique. Returns `None` when `g` is not a
/// k-tree, including when `n < k + 1`.
pub fn ktree_elimination_order(g: &Graph, k: usize) -> Option<EliminationOrder> {
    let n = g.n();
    if n < k + 1 || 2 * g.edge_count() + k * (k + 1) != 2 * k * n {
        return None;
    }
    let mut alive = vec![true; n];
    let mut deg = g.degrees();
    let simplicial = |v: usize, alive: &[bool]| {
        let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        g.is_clique(&nb)
    };
    let mut ready: BTreeSet<usize> = g
        .vertices()
        .filter(|&v| deg[v] == k && simplicial(v, &alive))
        .collect();
    let mut order = Vec::with_capacity(n);
    let mut left = n;
    while left > k + 1 {
        let v = ready.pop_first()?;
        alive[v] = false;
        left -= 1;
        order.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                // A degree-k vertex keeps its neighbourhood until its degree
                // changes again, so its status is settled here.
                if deg[w] == k && simplicial(w, &alive) {
                    ready.insert(w);
                }
            }
        }
    }
    let mut rest: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
    if !g.is_clique(&rest) {
        return None;
    }
    rest.reverse();
    order.extend(rest);
    Some(EliminationOrder { order, width: k })
}

pub fn is_ktree(g: &Graph, k: usize) -> bool {
    ktree_elimination_order(g, k).is_some()
}

/// An elimination ordering of width at most `k`, or the reason none was
/// found.
fn order_of_width_at_most(g: &Graph, k: usize) -> Result<Vec<usize>> {
    if let Some(peo) = is_chordal(g) {
        return if peo.width <= k {
            Ok(peo.order)
        } else {
            Err(Error::TreewidthExceeds { k })
        };
    }
    let heuristic = min_fill_order(g);
    if fill_in(g, &heuristic).1 <= k {
        return Ok(heuristic);
    }
    if g.n() > TREEWIDTH_EXACT_LIMIT {
        return Err(Error::TooLarge {
            what: "k-tree completion of a non-chordal graph",
            n: g.n(),
            limit: TREEWIDTH_EXACT_LIMIT,
        });
    }
    let (tw, eo) = treewidth_exact(g)?;
    if tw > k {
        return Err(Error::TreewidthExceeds { k });
    }
    Ok(eo.order)
}

/// Embeds `g` (treewidth at most `k`, at least `k + 1` vertices) as a
/// spanning subgraph of a k-tree on the same vertex set.
///
/// A width-`≤ k` elimination ordering is filled in, then each vertex's set of
/// earlier neighbours in the construction order is padded to
/// `min(k, position)` vertices. Padding draws from the `(k+1)`-clique formed
/// by the latest earlier neighbour and that neighbour's own padded set (or
/// from the initial clique), lowest id first.
pub fn complete_to_ktree(g: &Graph, k: usize) -> Result<Graph> {
    let n = g.n();
    if n < k + 1 {
        return Err(invalid(format!(
            "a {k}-tree needs at least {} vertices, got {n}",
            k + 1
        )));
    }
    if is_ktree(g, k) {
        return Ok(g.clone());
    }
    let order = order_of_width_at_most(g, k)?;
    let (filled, _) = fill_in(g, &order);
    let construction: Vec<usize> = order.iter().rev().copied().collect();
    let mut pos = vec![0; n];
    for (i, &v) in construction.iter().enumerate() {
        pos[v] = i;
    }
    let initial: Vec<usize> = construction[..=k].to_vec();
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (p, &v) in construction.iter().enumerate() {
        if p <= k {
            pred[v] = construction[..p].to_vec();
            continue;
        }
        let mut own: Vec<usize> = filled
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < p)
            .collect();
        let pool = match own.iter().copied().max_by_key(|&w| pos[w]) {
            Some(u) if pos[u] > k => {
                let mut pool = pred[u].clone();
                pool.push(u);
                pool
            }
            _ => initial.clone(),
        };
        let mut extra: Vec<usize> = pool.into_iter().filter(|w| !own.contains(w)).collect();
        extra.sort_unstable();
        let need = k - own.len();
        own.extend(extra.into_iter().take(need));
        debug_assert_eq!(own.len(), k);
        pred[v] = own;
    }
    let edges = g
        .vertices()
        .flat_map(|v| pred[v].iter().map(move |&w| (v, w)));
    let out = Graph::new(n, edges.chain(g.edges()))?;
    debug_assert!(is_ktree(&out, k));
    Ok(out)
}

/// A clique whose degrees fall below the guaranteed sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueDegreeViolation {
    /// The clique ordered by degree (ties by id).
    pub clique: Vec<usize>,
    /// 1-based position in the ordered clique.
    pub position: usize,
    pub degree: usize,
    pub required: usize,
}

/// Outcome of checking the degree sequence of every clique of a k-tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueDegreeReport {
    pub cliques_checked: usize,
    /// Cliques with `n ≤ k + q − 1`, checked against the split form
    /// (`n − 1` for the top positions).
    pub split_form_checks: usize,
    pub violation: Option<CliqueDegreeViolation>,
}

impl CliqueDegreeReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Lower bound on the degree of the `i`-th vertex (1-based) of a `q`-clique
/// ordered by degree in an `n`-vertex k-tree.
pub(crate) fn clique_degree_floor(n: usize, k: usize, q: usize, i: usize) -> usize {
    if n >= k + q || i + k < n {
        k + i - 1
    } else {
        n - 1
    }
}

/// Checks every clique of the k-tree `g` against the degree guarantee: a
/// `q`-clique ordered by degree has `deg(u_i) ≥ k + i − 1` when
/// `n ≥ k + q`, and otherwise `deg(u_i) ≥ k + i − 1` for `i ≤ n − k − 1` and
/// `deg(u_i) ≥ n − 1` for the rest.
///
/// Every clique of a chordal graph lies inside a maximal clique, so subsets
/// of the maximal cliques cover everything. Returns the first violation in
/// lexicographic clique order.
pub fn check_clique_degree_theorem(g: &Graph, k: usize) -> Result<CliqueDegreeReport> {
    if !is_ktree(g, k) {
        return Err(Error::NotKTree { k });
    }
    let n = g.n();
    let maximal = maximal_cliques(g).expect("k-trees are chordal");
    let mut cliques: BTreeSet<Vec<usize>> = BTreeSet::new();
    for c in &maximal {
        for mask in 1u32..(1 << c.len()) {
            cliques.insert(
                c.iter()
                    .enumerate()
                    .filter_map(|(i, &v)| (mask >> i & 1 == 1).then_some(v))
                    .collect(),
            );
        }
    }
    let mut report = CliqueDegreeReport {
        cliques_checked: cliques.len(),
        split_form_checks: 0,
        violation: None,
    };
    for c in cliques {
        let q = c.len();
        if n < k + q {
            report.split_form_checks += 1;
        }
        let mut ordered = c;
        ordered.sort_by_key(|&v| (g.degree(v), v));
        for (idx, &v) in ordered.iter().enumerate() {
            let i = idx + 1;
            let required = clique_degree_floor(n, k, q, i);
            if g.degree(v) < required {
                report.violation = Some(CliqueDegreeViolation {
                    clique: ordered.clone(),
                    position: i,
                    degree: g.degree(v),
                    required,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_power(n: usize, k: usize) -> Graph {
        Graph::new(
            n,
            (0..n).flat_map(|i| (i + 1..n).filter(move |j| j - i <= k).map(move |j| (i, j))),
        )
        .unwrap()
    }

    #[test]
    fn cliques_are_ktrees() {
        for k in 0..5 {
            let eo = ktree_elimination_order(&Graph::complete(k + 1), k).unwrap();
            assert_eq!(eo.order.len(), k + 1);
        }
    }

    #[test]
    fn path_power_recognition() {
        let p = path_power(9, 2);
        let eo = ktree_elimination_order(&p, 2).unwrap();
        assert_eq!(eo.width, 2);
        assert_eq!(EliminationOrder::new(&p, eo.order.clone()).unwrap().width, 2);
        assert!(ktree_elimination_order(&p, 1).is_none());
        assert!(ktree_elimination_order(&p, 3).is_none());
    }

    #[test]
    fn construction_order_adds_onto_cliques() {
        let p = path_power(8, 3);
        let order = ktree_elimination_order(&p, 3).unwrap().construction_order();
        let mut pos = [0; 8];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        assert!(p.is_clique(&order[..4]));
        for (i, &v) in order.iter().enumerate().skip(4) {
            let earlier: Vec<usize> = p.neighbors(v).iter().copied().filter(|&w| pos[w] < i).collect();
            assert_eq!(earlier.len(), 3);
            assert!(p.is_clique(&earlier));
        }
    }

    #[test]
    fn rejects_small_and_non_ktrees() {
        assert!(ktree_elimination_order(&Graph::complete(2), 2).is_none());
        // Edge count of a 2-tree, but contains K4.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert!(ktree_elimination_order(&g, 2).is_none());
        // Edgeless graphs are 0-trees.
        assert!(ktree_elimination_order(&Graph::empty(4), 0).is_some());
    }

    #[test]
    fn completion_fixed_point_and_edge_counts() {
        let p = path_power(7, 2);
        assert_eq!(complete_to_ktree(&p, 2).unwrap(), p);

        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = complete_to_ktree(&path, 2).unwrap();
        assert_eq!(c.edge_count(), 5);
        assert!(is_ktree(&c, 2));
        assert!(path.edges().all(|(u, v)| c.has_edge(u, v)));

        assert_eq!(complete_to_ktree(&Graph::empty(3), 2).unwrap(), Graph::complete(3));
    }

    #[test]
    fn completion_of_disconnected_and_cyclic_graphs() {
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (5, 6)]).unwrap();
        let c = complete_to_ktree(&g, 2).unwrap();
        assert!(is_ktree(&c, 2));
        assert!(g.edges().all(|(u, v)| c.has_edge(u, v)));
    }

    #[test]
    fn completion_errors() {
        assert!(matches!(
            complete_to_ktree(&Graph::complete(4), 2),
            Err(Error::TreewidthExceeds { k: 2 })
        ));
        assert!(complete_to_ktree(&Graph::empty(2), 2).is_err());
    }

    #[test]
    fn clique_degrees_on_small_ktrees() {
        // K4 as a 3-tree: every clique falls in the split form.
        let r = check_clique_degree_theorem(&Graph::complete(4), 3).unwrap();
        assert!(r.holds());
        assert_eq!(r.cliques_checked, 15);
        assert!(r.split_form_checks > 0);

        // The clique {v3, v4, v5} of P_7^2 has degrees (4, 4, 4) >= (2, 3, 4).
        let p = path_power(7, 2);
        assert_eq!([2, 3, 4].map(|v| p.degree(v)), [4, 4, 4]);
        assert!(check_clique_degree_theorem(&p, 2).unwrap().holds());

        assert!(matches!(
            check_clique_degree_theorem(&p, 1),
            Err(Error::NotKTree { k: 1 })
        ));
    }

    #[test]
    fn degree_floor_branches() {
        // n >= k + q
        assert_eq!(clique_degree_floor(10, 2, 3, 3), 4);
        // n = 4, k = 3, q = 4: positions 1..=0 use k+i-1, the rest n-1
        assert_eq!(clique_degree_floor(4, 3, 4, 1), 3);
        assert_eq!(clique_degree_floor(4, 3, 4, 4), 3);
        // n = 5, k = 3, q = 4: i <= 1 uses k+i-1
        assert_eq!(clique_degree_floor(5, 3, 4, 1), 3);
        assert_eq!(clique_degree_floor(5, 3, 4, 2), 4);
    }
}
