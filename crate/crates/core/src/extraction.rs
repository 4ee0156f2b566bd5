//! Constructive t-set extraction.
//!
//! A graph of treewidth at most `k` is embedded in a k-tree and coloured
//! greedily along a construction order, which uses at most `k + 1` colours
//! and makes every clique rainbow. Any `t + 1` colour classes then induce a
//! chordal graph with clique number at most `t + 1`, hence treewidth at most
//! `t`, and the largest `t + 1` classes hold at least `(t+1)n/(k+1)` vertices.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{complete_to_ktree, elimination_width, ktree_elimination_order, vd_set, Graph};

/// A t-set with the data that certifies it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TSetResult {
    /// Sorted vertex ids of the host graph.
    pub vertices: Vec<usize>,
    /// Elimination ordering of the induced subgraph, as host ids.
    pub witness_order: Vec<usize>,
    /// Width of `witness_order` on the induced subgraph; at most `t`.
    pub witness_width: usize,
    /// Colour of each host vertex in the colouring the set was cut from, or
    /// `0` for vertices outside the coloured subgraph.
    pub coloring: Vec<usize>,
    /// False when the size guarantee does not apply (`d < 2k`).
    pub guaranteed: bool,
}

/// Greedy colouring of a k-tree along its construction order: each vertex
/// takes the least positive colour missing from its earlier neighbours.
pub fn greedy_color_ktree(g: &Graph, k: usize) -> Result<Vec<usize>> {
    let eo = ktree_elimination_order(g, k).ok_or(Error::NotKTree { k })?;
    Ok(color_along(g, &eo.construction_order()))
}

fn color_along(g: &Graph, construction: &[usize]) -> Vec<usize> {
    let mut color = vec![0usize; g.n()];
    for &v in construction {
        let mut used: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).filter(|&c| c > 0).collect();
        used.sort_unstable();
        used.dedup();
        color[v] = (1..).find(|c| used.binary_search(c).is_err()).expect("unbounded range");
    }
    color
}

/// The `t + 1` largest colour classes of one treewidth-`≤ k` graph, with a
/// witnessing elimination order. Graphs with at most `k + 1` vertices are
/// treated as cliques.
fn extract_component(g: &Graph, k: usize, t: usize) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let (host, order) = if g.n() <= k + 1 {
        let order: Vec<usize> = g.vertices().rev().collect();
        (Graph::complete(g.n()), order)
    } else {
        let host = complete_to_ktree(g, k)?;
        let order = ktree_elimination_order(&host, k)
            .expect("completion yields a k-tree")
            .order;
        (host, order)
    };
    let construction: Vec<usize> = order.iter().rev().copied().collect();
    let coloring = color_along(&host, &construction);
    let mut sizes = vec![0usize; k + 2];
    for &c in &coloring {
        sizes[c] += 1;
    }
    let mut classes: Vec<usize> = (1..=k + 1).collect();
    classes.sort_by_key(|&c| (std::cmp::Reverse(sizes[c]), c));
    let mut keep = vec![false; k + 2];
    for &c in classes.iter().take(t + 1) {
        keep[c] = true;
    }
    let vertices: Vec<usize> = g.vertices().filter(|&v| keep[coloring[v]]).collect();
    // The host's perfect elimination order stays perfect on any subset.
    let witness: Vec<usize> = order.into_iter().filter(|&v| keep[coloring[v]]).collect();
    Ok((vertices, witness, coloring))
}

fn check_t(k: usize, t: usize) -> Result<()> {
    if t > k {
        return Err(invalid(format!("need 0 <= t <= k, got t = {t}, k = {k}")));
    }
    Ok(())
}

fn certify(g: &Graph, vertices: &[usize], witness: &[usize]) -> usize {
    let local: Vec<usize> = witness
        .iter()
        .map(|v| vertices.binary_search(v).expect("witness inside the set"))
        .collect();
    elimination_width(&g.induced(vertices), &local)
}

/// A t-set of size at least `(t+1)n/(k+1)` in a graph of treewidth at most
/// `k`. Graphs that are not k-trees are first completed to one.
pub fn extract_tset(g: &Graph, k: usize, t: usize) -> Result<TSetResult> {
    check_t(k, t)?;
    let (vertices, witness_order, coloring) = extract_component(g, k, t)?;
    let witness_width = certify(g, &vertices, &witness_order);
    debug_assert!(witness_width <= t);
    Ok(TSetResult {
        vertices,
        witness_order,
        witness_width,
        coloring,
        guaranteed: true,
    })
}

/// The union over the components of `g[set]` of each component's t-set for
/// width `w`, as host ids, with the host colouring (`0` outside `set`).
fn extract_on(g: &Graph, set: &[usize], w: usize, t: usize) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let gs = g.induced(set);
    let mut vertices = Vec::new();
    let mut witness = Vec::new();
    let mut coloring = vec![0usize; g.n()];
    for comp in gs.components() {
        let (vs, order, colors) = extract_component(&gs.induced(&comp), w, t)?;
        let host = |i: usize| set[comp[i]];
        vertices.extend(vs.into_iter().map(host));
        witness.extend(order.into_iter().map(host));
        for (i, c) in colors.into_iter().enumerate() {
            coloring[host(i)] = c;
        }
    }
    vertices.sort_unstable();
    Ok((vertices, witness, coloring))
}

/// A t-set all of whose vertices have degree at most `d` in `g`.
///
/// Candidates are `G[V_d]` at width `k`, and `G[V_ℓ]` at width `ℓ − k` for
/// `k + t ≤ ℓ ≤ min(2k, d)`; each is split into components that contribute
/// their own `t + 1` largest colour classes. When `G[V_ℓ]` exceeds width
/// `ℓ − k` the same level of a k-tree completion is used instead, and the
/// candidate is dropped if that fails too. The largest candidate wins, which
/// is at least `(t+1)|V_d|/(k+1)` and, for `d ≥ 2k`, at least the degree-`d`
/// t-set lower bound. For `d < 2k` the result is computed but `guaranteed` is
/// false.
pub fn extract_degree_d_tset(g: &Graph, k: usize, t: usize, d: usize) -> Result<TSetResult> {
    check_t(k, t)?;
    let mut best = extract_on(g, &vd_set(g, d), k, t)?;
    let mut completion: Option<Option<Graph>> = None;
    for l in k + t..=d.min(2 * k) {
        let w = l - k;
        let candidate = match extract_on(g, &vd_set(g, l), w, t) {
            Err(Error::TreewidthExceeds { .. }) => {
                let host = completion.get_or_insert_with(|| {
                    (g.n() > k + 1).then(|| complete_to_ktree(g, k).ok()).flatten()
                });
                match host {
                    Some(h) => match extract_on(h, &vd_set(h, l), w, t) {
                        Err(Error::TreewidthExceeds { .. }) => None,
                        other => Some(other?),
                    },
                    None => None,
                }
            }
            other => Some(other?),
        };
        if let Some(c) = candidate.filter(|c| c.0.len() > best.0.len()) {
            best = c;
        }
    }
    let (vertices, witness_order, coloring) = best;
    let witness_width = certify(g, &vertices, &witness_order);
    debug_assert!(witness_width <= t);
    Ok(TSetResult {
        vertices,
        witness_order,
        witness_width,
        coloring,
        guaranteed: d >= 2 * k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{kset_extremal, path_power, random_ktree};
    use crate::graph::treewidth_exact;

    #[test]
    fn path_square_classes() {
        let g = path_power(9, 2).unwrap();
        let c = greedy_color_ktree(&g, 2).unwrap();
        let class = |col: usize| (0..9).filter(|&v| c[v] == col).collect::<Vec<_>>();
        let mut classes = vec![class(1), class(2), class(3)];
        classes.sort();
        assert_eq!(classes, vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]);
        assert!(g.edges().all(|(u, v)| c[u] != c[v]));
        assert!(greedy_color_ktree(&Graph::empty(3), 2).is_err());
    }

    #[test]
    fn clique_is_rainbow() {
        let c = greedy_color_ktree(&Graph::complete(4), 3).unwrap();
        let mut sorted = c.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3, 4]);
    }

    #[test]
    fn tset_examples() {
        let g = path_power(9, 2).unwrap();
        let s = extract_tset(&g, 2, 0).unwrap();
        assert_eq!(s.vertices.len(), 3);
        assert!(g.is_independent(&s.vertices));

        assert_eq!(extract_tset(&g, 2, 2).unwrap().vertices, (0..9).collect::<Vec<_>>());

        let g = path_power(10, 2).unwrap();
        let s = extract_tset(&g, 2, 1).unwrap();
        assert!(s.vertices.len() >= 7);
        assert!(treewidth_exact(&g.induced(&s.vertices)).unwrap().0 <= 1);
        assert!(s.witness_width <= 1);
        assert!(extract_tset(&g, 2, 3).is_err());
    }

    #[test]
    fn tset_on_non_ktrees() {
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let s = extract_tset(&c6, 2, 0).unwrap();
        assert!(s.vertices.len() >= 2);
        assert!(c6.is_independent(&s.vertices));
        assert!(matches!(
            extract_tset(&Graph::complete(5), 2, 1),
            Err(Error::TreewidthExceeds { .. })
        ));
        let tiny = extract_tset(&Graph::new(2, [(0, 1)]).unwrap(), 3, 0).unwrap();
        assert_eq!(tiny.vertices.len(), 1);
    }

    #[test]
    fn random_ktree_guarantee() {
        for seed in 0..20 {
            for k in 1..=3 {
                let g = random_ktree(k, 14, seed).unwrap();
                for t in 0..=k {
                    let s = extract_tset(&g, k, t).unwrap();
                    assert!(s.vertices.len() * (k + 1) >= (t + 1) * 14);
                    assert!(s.witness_width <= t);
                }
            }
        }
    }

    #[test]
    fn degree_bounded_pipeline() {
        let fig = kset_extremal(3, 7, 3).unwrap();
        let s = extract_degree_d_tset(&fig, 3, 3, 7).unwrap();
        assert_eq!(s.vertices, vd_set(&fig, 7));
        assert_eq!(s.vertices.len(), 12);

        let g = random_ktree(2, 12, 3).unwrap();
        let d = g.max_degree();
        assert_eq!(
            extract_degree_d_tset(&g, 2, 1, d).unwrap().vertices,
            extract_tset(&g, 2, 1).unwrap().vertices
        );

        let spider = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let s = extract_degree_d_tset(&spider, 1, 0, 2).unwrap();
        assert_eq!(s.vertices.len(), 3);
        assert!(s.guaranteed);

        let p = path_power(12, 2).unwrap();
        let s = extract_degree_d_tset(&p, 2, 0, 3).unwrap();
        assert!(!s.guaranteed);
        assert!(s.vertices.iter().all(|&v| p.degree(v) <= 3));
    }

    #[test]
    fn degree_bounded_meets_lower_bound() {
        use crate::bounds::bound_dtset_lower;
        for seed in 0..200 {
            for k in 1..=3 {
                let n = 2 * k + 1 + (seed as usize % (16 - 2 * k));
                let g = random_ktree(k, n, seed).unwrap();
                for t in 0..=k {
                    for d in 2 * k..=2 * k + 2 {
                        let s = extract_degree_d_tset(&g, k, t, d).unwrap();
                        let b = bound_dtset_lower(n, k, t, d).unwrap();
                        assert!(s.vertices.len() as i64 >= b.ceil(), "k={k} n={n} seed={seed} t={t} d={d}");
                        assert!(s.vertices.iter().all(|&v| g.degree(v) <= d));
                        assert!(s.witness_width <= t);
                    }
                }
            }
        }
    }
}
