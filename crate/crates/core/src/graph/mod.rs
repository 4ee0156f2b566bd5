//! Simple undirected graphs and the structural machinery built on them.

mod chordal;
pub(crate) mod io;
mod ktree;
mod treewidth;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

pub use chordal::{
    elimination_width, is_chordal, is_perfect_elimination_order, lex_bfs, max_clique_size,
    maximal_cliques, EliminationOrder,
};
pub use io::{parse_edge_list, write_edge_list};
pub use ktree::{
    check_clique_degree_theorem, complete_to_ktree, is_ktree, ktree_elimination_order,
    CliqueDegreeReport, CliqueDegreeViolation,
};
pub use treewidth::{treewidth_at_most, treewidth_exact, TREEWIDTH_EXACT_LIMIT};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric. The graph is immutable once
/// built; derived graphs (induced subgraphs, completions) are new values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_lists(adj))
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Graph {
            adj,
            edges: n * n.saturating_sub(1) / 2,
        }
    }

    // Callers guarantee ids are in range and there are no self-loops.
    pub(crate) fn from_lists(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph {
            adj,
            edges: twice / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Graph::from_lists(adj)
    }

    /// Copy of `self` with the extra edges added.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        Graph::new(self.n(), self.edges().chain(extra))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edges + 1 == self.n() && self.is_connected()
    }
}

/// `V_d(G)`: the vertices of degree at most `d`, in increasing order.
pub fn vd_set(g: &Graph, d: usize) -> Vec<usize> {
    g.vertices().filter(|&v| g.degree(v) <= d).collect()
}

/// `n_i`, the number of vertices of each exact degree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub counts: BTreeMap<usize, usize>,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let mut counts = BTreeMap::new();
        for v in g.vertices() {
            *counts.entry(g.degree(v)).or_insert(0) += 1;
        }
        DegreeProfile { counts }
    }

    pub fn count(&self, degree: usize) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.counts.values().sum()
    }

    /// `Σ i·n_i`, twice the edge count of any graph with this profile.
    pub fn degree_sum(&self) -> usize {
        self.counts.iter().map(|(d, c)| d * c).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn square_of_path_on_nine_vertices_has_fifteen_edges() {
        let edges = (0..9).flat_map(|i| (i + 1..9).filter(move |j| j - i <= 2).map(move |j| (i, j)));
        let g = Graph::new(9, edges).unwrap();
        // k n - k(k+1)/2 with k = 2
        assert_eq!(g.edge_count(), 2 * 9 - 3);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.degree(0), 0);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn duplicates_are_merged() {
        let g = Graph::new(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn vd_of_vacuous_bound_is_everything() {
        let g = Graph::complete(5);
        assert_eq!(vd_set(&g, 4), vec![0, 1, 2, 3, 4]);
        assert!(vd_set(&g, 3).is_empty());
    }

    #[test]
    fn profile_sums() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = DegreeProfile::of(&g);
        assert_eq!(p.n(), 4);
        assert_eq!(p.degree_sum(), 2 * g.edge_count());
        assert_eq!(p.count(1), 3);
        assert_eq!(p.count(3), 1);
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced(&[1, 2, 3]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn components_and_trees() {
        let g = Graph::new(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_tree());
        let t = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(t.is_tree());
    }
}
