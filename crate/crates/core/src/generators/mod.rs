//! Deterministic constructors for the graph families used throughout the
//! crate: path powers, the extremal constructions, random k-trees and trees.
//!
//! Path vertices `v_1, …, v_n` of the constructions get ids `0, …, n−1`;
//! vertices added onto cliques are numbered after them in creation order.

mod trees;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::interval::IntervalModel;

pub use trees::{canonical_tree_code, enumerate_trees, prufer_decode, MAX_ENUMERATED_TREE_ORDER};

fn path_power_edges(n: usize, k: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n.min(i + k + 1)).map(move |j| (i, j)))
        .collect()
}

/// `P_n^k`: vertices `v_1..v_n`, edges `v_i v_j` for `|i − j| ≤ k`.
pub fn path_power(n: usize, k: usize) -> Result<Graph> {
    if n < k + 1 {
        return Err(invalid(format!(
            "the {k}-th power of a path needs n >= k + 1 = {}, got {n}",
            k + 1
        )));
    }
    Graph::new(n, path_power_edges(n, k))
}

/// Number of vertices added onto each designated clique of the degree-bounded
/// k-set construction: `r = d − 2k + 1`.
pub fn kset_r(k: usize, d: usize) -> Result<usize> {
    (d + 1)
        .checked_sub(2 * k)
        .ok_or_else(|| invalid(format!("need d >= 2k - 1 (k = {k}, d = {d})")))
}

/// The k-tree minimising the number of degree-`≤ d` vertices: `P^k_{(s+2)k}`
/// with `r = d − 2k + 1` vertices added onto the clique
/// `(v_{ik+1}, …, v_{ik+k})` for each `1 ≤ i ≤ s`.
///
/// It has `n = s(d − k + 1) + 2k` vertices, of which exactly `rs + 2k` have
/// degree at most `d`.
pub fn kset_extremal(k: usize, d: usize, s: usize) -> Result<Graph> {
    let r = kset_r(k, d)?;
    let base = (s + 2) * k;
    let mut edges = path_power_edges(base, k);
    let mut next = base;
    for i in 1..=s {
        for _ in 0..r {
            edges.extend((i * k..i * k + k).map(|v| (v, next)));
            next += 1;
        }
    }
    Graph::new(next, edges)
}

/// Blocks per position in the block construction:
/// `r = 2(d − 2k + 1) / (k(k + 1))`, defined only when the division is exact.
pub fn block_r(k: usize, d: usize) -> Result<usize> {
    if k == 0 {
        return Err(invalid("the block construction needs k >= 1"));
    }
    let surplus = kset_r(k, d)?;
    let modulus = k * (k + 1);
    if 2 * surplus % modulus != 0 {
        return Err(invalid(format!(
            "no block construction for d = {d}: 2(d - 2k + 1) = {} is not divisible by k(k+1) = {modulus}",
            2 * surplus
        )));
    }
    Ok(2 * surplus / modulus)
}

/// Number of vertices of [`block_ktree`] for the given parameters.
pub fn block_ktree_order(k: usize, r: usize, n0: usize) -> usize {
    n0 + r * (k + 1) * (n0 - (k + 3))
}

/// `P^k_{n0}` with `r` blocks at `(v_i, …, v_{i+k−1})` for every
/// `3 ≤ i ≤ n0 − k − 1`.
///
/// A block at the ordered clique `C = (c_1, …, c_k)` is `k + 1` new vertices
/// where `x_j` is added onto `{c_1, …, c_{k−j+1}} ∪ {x_1, …, x_{j−1}}`. Every
/// `v_i` with `k + 2 ≤ i ≤ n0 − k − 1` ends with degree exactly `d + 1`.
pub fn block_ktree(k: usize, d: usize, n0: usize) -> Result<Graph> {
    let r = block_r(k, d)?;
    if n0 < 2 * k + 3 {
        return Err(invalid(format!(
            "the block construction needs n0 >= 2k + 3 = {}, got {n0}",
            2 * k + 3
        )));
    }
    let mut edges = path_power_edges(n0, k);
    let mut next = n0;
    // 1-based positions 3..=n0-k-1 are 0-based starts 2..=n0-k-2.
    for start in 2..=n0 - k - 2 {
        let clique: Vec<usize> = (start..start + k).collect();
        for _ in 0..r {
            let xs: Vec<usize> = (next..next + k + 1).collect();
            for (j, &x) in xs.iter().enumerate() {
                edges.extend(clique[..k - j].iter().map(|&c| (c, x)));
                edges.extend(xs[..j].iter().map(|&y| (y, x)));
            }
            next += k + 1;
        }
    }
    debug_assert_eq!(next, block_ktree_order(k, r, n0));
    Graph::new(next, edges)
}

/// Pendant triangles per middle vertex in the outerplanar construction.
pub fn outerplanar_r(d: usize) -> Result<usize> {
    if d < 6 || d % 2 == 1 {
        return Err(invalid(format!(
            "the outerplanar construction needs an even d >= 6, got {d}"
        )));
    }
    Ok((d - 4) / 2)
}

/// Number of vertices of [`outerplanar_extremal`].
pub fn outerplanar_order(r: usize, n0: usize) -> usize {
    n0 + 3 * r * (n0 - 4) + 2
}

/// The outerplanar graph with few degree-`≤ d` independent vertices.
///
/// Starts from `P^2_{n0}`. Each `v_i` with `3 ≤ i ≤ n0 − 2` gets `r = (d−4)/2`
/// triangles `{a, b, c}` with `v_i` adjacent to `a` and `b`; for
/// `3 ≤ i ≤ n0 − 4` the edge `v_i a_{i+2,1}` is added; finally `x` is joined to
/// `v_{n0−3}, v_{n0−1}` and `y` to `v_{n0−2}, v_{n0}`. Every `v_i` with
/// `3 ≤ i ≤ n0 − 2` has degree `d + 1`.
pub fn outerplanar_extremal(d: usize, n0: usize) -> Result<Graph> {
    let r = outerplanar_r(d)?;
    if n0 < 6 {
        return Err(invalid(format!(
            "the outerplanar construction needs n0 >= 6, got {n0}"
        )));
    }
    let v = |i: usize| i - 1;
    let mut edges = path_power_edges(n0, 2);
    let mut next = n0;
    // a_{i,1} for each middle vertex, by 1-based i.
    let mut first_a = vec![usize::MAX; n0 + 1];
    #[allow(clippy::needless_range_loop)]
    for i in 3..=n0 - 2 {
        for j in 0..r {
            let (a, b, c) = (next, next + 1, next + 2);
            next += 3;
            edges.extend([(a, b), (b, c), (a, c), (v(i), a), (v(i), b)]);
            if j == 0 {
                first_a[i] = a;
            }
        }
    }
    for i in 3..=n0 - 4 {
        edges.push((v(i), first_a[i + 2]));
    }
    let (x, y) = (next, next + 1);
    next += 2;
    edges.extend([(x, v(n0 - 3)), (x, v(n0 - 1)), (y, v(n0 - 2)), (y, v(n0))]);
    debug_assert_eq!(next, outerplanar_order(r, n0));
    Graph::new(next, edges)
}

/// A `(d+1)`-regular tree whose internal vertices form a path of length
/// `internal`, each topped up with leaves to degree `d + 1`.
pub fn regular_caterpillar(d: usize, internal: usize) -> Result<Graph> {
    if d == 0 || internal == 0 {
        return Err(invalid("a (d+1)-regular tree needs d >= 1 and an internal vertex"));
    }
    let mut edges: Vec<(usize, usize)> = (1..internal).map(|i| (i - 1, i)).collect();
    let mut next = internal;
    for i in 0..internal {
        let spine = usize::from(i > 0) + usize::from(i + 1 < internal);
        for _ in spine..d + 1 {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::new(next, edges)
}

/// Subdivides every leaf edge of the `(d+1)`-regular tree `shape` once. New
/// vertices get ids from `shape.n()` on, following the sorted edge order.
pub fn subdivided_regular_tree(d: usize, shape: &Graph) -> Result<Graph> {
    if d < 2 {
        return Err(invalid(format!("need d >= 2, got {d}")));
    }
    if !shape.is_tree() {
        return Err(invalid("shape is not a tree"));
    }
    let mut internal = 0;
    for v in shape.vertices() {
        match shape.degree(v) {
            1 => {}
            x if x == d + 1 => internal += 1,
            x => {
                return Err(invalid(format!(
                    "shape is not ({})-regular: vertex {v} has degree {x}",
                    d + 1
                )))
            }
        }
    }
    if internal == 0 {
        return Err(invalid("shape has no vertex of degree d + 1"));
    }
    let mut next = shape.n();
    let mut edges = Vec::with_capacity(shape.n() * 2);
    for (u, w) in shape.edges() {
        let leaf = if shape.degree(u) == 1 {
            Some(u)
        } else if shape.degree(w) == 1 {
            Some(w)
        } else {
            None
        };
        match leaf {
            Some(_) => {
                edges.push((u, next));
                edges.push((next, w));
                next += 1;
            }
            None => edges.push((u, w)),
        }
    }
    Graph::new(next, edges)
}

/// Random k-tree grown from `K_{k+1}`: each new vertex is added onto an
/// existing k-clique chosen uniformly at random. Deterministic per seed.
pub fn random_ktree(k: usize, n: usize, seed: u64) -> Result<Graph> {
    if n < k + 1 {
        return Err(invalid(format!(
            "a {k}-tree needs n >= k + 1 = {}, got {n}",
            k + 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = path_power_edges(k + 1, k);
    let base: Vec<usize> = (0..=k).collect();
    let mut cliques: Vec<Vec<usize>> = (0..=k)
        .map(|skip| base.iter().copied().filter(|&v| v != skip).collect())
        .collect();
    for v in k + 1..n {
        let onto = cliques[rng.gen_range(0..cliques.len())].clone();
        edges.extend(onto.iter().map(|&c| (c, v)));
        for skip in 0..onto.len() {
            let mut c = onto.clone();
            c[skip] = v;
            cliques.push(c);
        }
    }
    Graph::new(n, edges)
}

/// Kinds of interval model [`interval_model`] can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IntervalKind {
    /// `v_i ↦ [i, i + k + 1/2]`, an interval model of `P_n^k`.
    PathPower,
    /// Random intervals with clique number at most `k + 1`.
    Random,
}

/// Attempts allowed per interval before a random model is abandoned.
pub const INTERVAL_REJECTION_BUDGET: usize = 10_000;

/// Generates an interval model.
///
/// Random models draw integer left endpoints and lengths on a grid, then
/// shift each endpoint by a distinct fraction below one half so all `2n`
/// endpoints differ. A drawn interval that would push the clique number past
/// `k + 1` is rejected and redrawn.
pub fn interval_model(kind: IntervalKind, n: usize, k: usize, seed: u64) -> Result<IntervalModel> {
    match kind {
        IntervalKind::PathPower => {
            if n < k + 1 {
                return Err(invalid(format!("need n >= k + 1 = {}, got {n}", k + 1)));
            }
            let half = 0.5 + k as f64;
            IntervalModel::new((0..n).map(|i| (i as f64, i as f64 + half)).collect())
        }
        IntervalKind::Random => random_interval_model(n, k, seed),
    }
}

fn random_interval_model(n: usize, k: usize, seed: u64) -> Result<IntervalModel> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = (2 * n).max(4) as i64;
    let long = (n as i64 / 2).max(3);
    let mut grid: Vec<(i64, i64)> = Vec::with_capacity(n);
    let offset = |i: usize, side: usize| (2 * i + side + 1) as f64 / (4 * n + 4) as f64;
    for i in 0..n {
        let mut accepted = false;
        for _ in 0..INTERVAL_REJECTION_BUDGET {
            let left = rng.gen_range(0..span);
            let len = if rng.gen_bool(0.25) {
                rng.gen_range(2..=long)
            } else {
                rng.gen_range(1..=2)
            };
            grid.push((left, left + len));
            let model = to_model(&grid, offset);
            if model.clique_number() <= k + 1 {
                accepted = true;
                break;
            }
            grid.pop();
        }
        if !accepted {
            return Err(invalid(format!(
                "rejection budget exhausted placing interval {i} with clique bound {}",
                k + 1
            )));
        }
    }
    Ok(to_model(&grid, offset))
}

fn to_model(grid: &[(i64, i64)], offset: impl Fn(usize, usize) -> f64) -> IntervalModel {
    IntervalModel::new(
        grid.iter()
            .enumerate()
            .map(|(i, &(l, r))| (l as f64 + offset(i, 0), r as f64 + offset(i, 1)))
            .collect(),
    )
    .expect("fractional offsets keep endpoints distinct")
}

/// Generator families exposed to the command line and the demo.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    PathPower,
    Kset,
    Block,
    Outerplanar,
    RandomKtree,
    SubdividedTree,
    RandomInterval,
}

impl std::str::FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path-power" => Family::PathPower,
            "kset" => Family::Kset,
            "block" => Family::Block,
            "outerplanar" => Family::Outerplanar,
            "random-ktree" => Family::RandomKtree,
            "subdivided-tree" => Family::SubdividedTree,
            "random-interval" => Family::RandomInterval,
            other => return Err(invalid(format!("unknown family `{other}`"))),
        })
    }
}

/// Parameters shared by the generator families. Which fields matter depends
/// on the family; missing required fields are reported by [`generate`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GenParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub s: Option<usize>,
    pub n0: Option<usize>,
    pub seed: u64,
}

/// Output of [`generate`].
#[derive(Debug, Clone)]
pub enum Generated {
    Graph {
        graph: Graph,
        /// Construction multiplicity `r`, when the family has one.
        r: Option<usize>,
    },
    Intervals(IntervalModel),
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    v.ok_or_else(|| invalid(format!("family `{family}` requires --{flag}")))
}

/// Builds the requested family. `interval` selects the interval model of a
/// path power instead of its graph.
pub fn generate(family: Family, p: &GenParams, interval: bool) -> Result<Generated> {
    let graph = |graph, r| Ok(Generated::Graph { graph, r });
    match family {
        Family::PathPower => {
            let (n, k) = (need(p.n, "n", "path-power")?, need(p.k, "k", "path-power")?);
            if interval {
                interval_model(IntervalKind::PathPower, n, k, p.seed).map(Generated::Intervals)
            } else {
                graph(path_power(n, k)?, None)
            }
        }
        Family::Kset => {
            let (k, d, s) = (need(p.k, "k", "kset")?, need(p.d, "d", "kset")?, need(p.s, "s", "kset")?);
            graph(kset_extremal(k, d, s)?, Some(kset_r(k, d)?))
        }
        Family::Block => {
            let (k, d) = (need(p.k, "k", "block")?, need(p.d, "d", "block")?);
            let r = block_r(k, d)?;
            let n0 = p.n0.unwrap_or(2 * k + 3);
            graph(block_ktree(k, d, n0)?, Some(r))
        }
        Family::Outerplanar => {
            let d = need(p.d, "d", "outerplanar")?;
            let n0 = p.n0.unwrap_or(6);
            graph(outerplanar_extremal(d, n0)?, Some(outerplanar_r(d)?))
        }
        Family::RandomKtree => {
            let (k, n) = (need(p.k, "k", "random-ktree")?, need(p.n, "n", "random-ktree")?);
            graph(random_ktree(k, n, p.seed)?, None)
        }
        Family::SubdividedTree => {
            let d = need(p.d, "d", "subdivided-tree")?;
            let internal = p.n0.unwrap_or(1);
            graph(subdivided_regular_tree(d, &regular_caterpillar(d, internal)?)?, None)
        }
        Family::RandomInterval => {
            let (k, n) = (need(p.k, "k", "random-interval")?, need(p.n, "n", "random-interval")?);
            interval_model(IntervalKind::Random, n, k, p.seed).map(Generated::Intervals)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_ktree, max_clique_size, vd_set};

    #[test]
    fn path_powers() {
        let g = path_power(9, 2).unwrap();
        assert_eq!(g.edge_count(), 15);
        assert_eq!(max_clique_size(&g).unwrap(), 3);
        assert_eq!(path_power(4, 3).unwrap(), Graph::complete(4));
        let p5 = path_power(5, 1).unwrap();
        assert_eq!(p5.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(path_power(2, 2).is_err());
    }

    #[test]
    fn vd_of_path_square() {
        // v1, v2, v8, v9 are the vertices of degree at most 3.
        assert_eq!(vd_set(&path_power(9, 2).unwrap(), 3), vec![0, 1, 7, 8]);
    }

    #[test]
    fn kset_figure_instance() {
        let g = kset_extremal(3, 7, 3).unwrap();
        assert_eq!(g.n(), 21);
        assert_eq!(kset_r(3, 7).unwrap(), 2);
        assert_eq!(vd_set(&g, 7).len(), 12);
        assert!(is_ktree(&g, 3));
        // v_i for k+1 <= i <= (s+1)k has degree d + 1.
        assert!((3..12).all(|v| g.degree(v) == 8));
    }

    #[test]
    fn kset_edge_cases() {
        let g = kset_extremal(2, 4, 0).unwrap();
        assert_eq!(g, path_power(4, 2).unwrap());
        assert!(g.max_degree() <= 3);

        let t = kset_extremal(1, 2, 2).unwrap();
        assert_eq!(t.n(), 6);
        assert!(t.is_tree());
        assert_eq!(vd_set(&t, 2).len(), 4);

        assert!(kset_extremal(3, 4, 1).is_err());
        // k = 0: isolated vertices only.
        assert_eq!(kset_extremal(0, 2, 2).unwrap(), Graph::empty(6));
    }

    #[test]
    fn block_construction() {
        assert_eq!(block_r(3, 11).unwrap(), 1);
        let g = block_ktree(3, 11, 9).unwrap();
        assert_eq!(g.n(), 21);
        assert_eq!(g.degree(4), 12);
        assert!(is_ktree(&g, 3));

        let t = block_ktree(1, 2, 5).unwrap();
        assert_eq!(t.n(), 7);
        assert!(t.is_tree());

        assert!(block_r(3, 10).is_err());
        assert!(block_r(2, 4).is_err());
        assert!(block_ktree(3, 11, 8).is_err());
    }

    #[test]
    fn outerplanar_construction() {
        assert_eq!(outerplanar_r(8).unwrap(), 2);
        let g = outerplanar_extremal(8, 6).unwrap();
        assert_eq!(g.n(), 20);
        assert_eq!(g.degree(2), 9);
        assert_eq!(g.degree(3), 9);
        assert_eq!(outerplanar_extremal(6, 6).unwrap().n(), 14);
        assert!(outerplanar_r(7).is_err());
        assert!(outerplanar_r(4).is_err());
        assert!(outerplanar_extremal(8, 5).is_err());
    }

    #[test]
    fn subdivided_trees() {
        let star = regular_caterpillar(2, 1).unwrap();
        let spider = subdivided_regular_tree(2, &star).unwrap();
        assert_eq!(spider.n(), 7);
        assert!(spider.is_tree());

        let two = regular_caterpillar(2, 2).unwrap();
        assert_eq!(two.n(), 6);
        let t = subdivided_regular_tree(2, &two).unwrap();
        assert_eq!(t.n(), 10);
        assert!(t.vertices().all(|v| [1, 2, 3].contains(&t.degree(v))));

        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(subdivided_regular_tree(2, &path).is_err());
    }

    #[test]
    fn random_ktrees() {
        let k1 = random_ktree(2, 3, 1).unwrap();
        assert_eq!(k1, Graph::complete(3));
        assert_eq!(random_ktree(2, 3, 99).unwrap(), k1);

        let g = random_ktree(2, 10, 7).unwrap();
        assert_eq!(g.edge_count(), 17);
        assert!(is_ktree(&g, 2));
        assert_eq!(random_ktree(2, 10, 7).unwrap(), g);

        assert_eq!(random_ktree(0, 4, 3).unwrap(), Graph::empty(4));
        assert!(random_ktree(3, 3, 0).is_err());
    }

    #[test]
    fn dispatcher_reports_missing_flags() {
        let p = GenParams {
            k: Some(3),
            ..Default::default()
        };
        assert!(generate(Family::Kset, &p, false).is_err());
        let p = GenParams {
            k: Some(3),
            d: Some(10),
            ..Default::default()
        };
        let err = generate(Family::Block, &p, false).unwrap_err().to_string();
        assert!(err.contains("not divisible"), "{err}");
        assert_eq!("kset".parse::<Family>().unwrap(), Family::Kset);
        assert!("nope".parse::<Family>().is_err());
    }
}
