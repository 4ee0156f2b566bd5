use std::collections::{BTreeMap, BinaryHeap};
use std::cmp::Reverse;

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_trees`].
pub const MAX_ENUMERATED_TREE_ORDER: usize = 10;

/// Decodes a Prüfer sequence over `0..seq.len() + 2` into a labelled tree.
pub fn prufer_decode(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(invalid(format!("Prüfer entry {bad} out of range for n = {n}")));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Graph::new(n, edges)
}

fn centroids(t: &Graph) -> Vec<usize> {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev().take(n - 1) {
        size[parent[v]] += size[v];
    }
    let heaviest = |v: usize| {
        t.neighbors(v)
            .iter()
            .map(|&w| if parent[w] == v { size[w] } else { n - size[v] })
            .max()
            .unwrap_or(0)
    };
    let best = t.vertices().map(heaviest).min().unwrap_or(0);
    t.vertices().filter(|&v| heaviest(v) == best).collect()
}

fn rooted_code(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(t, w, v))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// Isomorphism-invariant code of a free tree: the smallest rooted code over
/// its (one or two) centroids.
pub fn canonical_tree_code(t: &Graph) -> String {
    if t.n() == 0 {
        return String::new();
    }
    centroids(t)
        .into_iter()
        .map(|c| rooted_code(t, c, usize::MAX))
        .min()
        .expect("a tree has a centroid")
}

/// All free trees on `n` vertices up to isomorphism, ordered by canonical code.
///
/// Trees on `n` vertices are grown from those on `n − 1` by attaching a leaf
/// anywhere and deduplicated by [`canonical_tree_code`]; every tree arises
/// this way since removing a leaf leaves a tree.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(2..=MAX_ENUMERATED_TREE_ORDER).contains(&n) {
        return Err(invalid(format!(
            "tree enumeration supports 2 <= n <= {MAX_ENUMERATED_TREE_ORDER}, got {n}"
        )));
    }
    let mut layer: BTreeMap<String, Graph> = BTreeMap::new();
    let edge = Graph::complete(2);
    layer.insert(canonical_tree_code(&edge), edge);
    for m in 3..=n {
        let mut next = BTreeMap::new();
        for t in layer.values() {
            for v in t.vertices() {
                let bigger = Graph::new(m, t.edges().chain([(v, m - 1)])).expect("valid tree");
                next.entry(canonical_tree_code(&bigger)).or_insert(bigger);
            }
        }
        layer = next;
    }
    Ok(layer.into_values().collect())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn prufer_codes(n: usize) -> BTreeSet<String> {
        let len = n - 2;
        let total = n.pow(len as u32);
        (0..total)
            .map(|mut idx| {
                let seq: Vec<usize> = (0..len)
                    .map(|_| {
                        let x = idx % n;
                        idx /= n;
                        x
                    })
                    .collect();
                canonical_tree_code(&prufer_decode(&seq).unwrap())
            })
            .collect()
    }

    /// Naive isomorphism: try every bijection.
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let v = map.len();
            if v == a.n() {
                return true;
            }
            for w in 0..b.n() {
                if used[w] || a.degree(v) != b.degree(w) {
                    continue;
                }
                if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                    map.push(w);
                    used[w] = true;
                    if extend(a, b, map, used) {
                        return true;
                    }
                    map.pop();
                    used[w] = false;
                }
            }
            false
        }
        a.n() == b.n()
            && a.edge_count() == b.edge_count()
            && extend(a, b, &mut Vec::new(), &mut vec![false; b.n()])
    }

    #[test]
    fn known_counts() {
        let counts = [(2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23), (9, 47), (10, 106)];
        for (n, c) in counts {
            let trees = enumerate_trees(n).unwrap();
            assert_eq!(trees.len(), c, "n = {n}");
            assert!(trees.iter().all(|t| t.n() == n && t.is_tree()));
        }
        assert!(enumerate_trees(1).is_err());
        assert!(enumerate_trees(11).is_err());
    }

    #[test]
    fn matches_prufer_enumeration() {
        for n in 3..=7 {
            let ours: BTreeSet<String> =
                enumerate_trees(n).unwrap().iter().map(canonical_tree_code).collect();
            assert_eq!(ours, prufer_codes(n), "n = {n}");
        }
    }

    #[test]
    fn seven_vertex_trees_pairwise_non_isomorphic() {
        let trees = enumerate_trees(7).unwrap();
        for (i, a) in trees.iter().enumerate() {
            for b in &trees[i + 1..] {
                assert!(!isomorphic(a, b));
            }
        }
    }

    #[test]
    fn prufer_decoding() {
        // [3, 3, 3] is the star centred at 3.
        let star = prufer_decode(&[3, 3, 3]).unwrap();
        assert_eq!(star.degree(3), 4);
        assert_eq!(prufer_decode(&[]).unwrap(), Graph::complete(2));
        assert!(prufer_decode(&[7]).is_err());
    }
}
