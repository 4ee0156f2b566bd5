//! Interval models and degree-bounded maximum independent sets in interval
//! graphs.
//!
//! `w` is dominated by `v` when `L(v) < L(w) < R(w) < R(v)`. With clique
//! number at most `k + 1`, the shortest interval dominated by a vertex of
//! degree at least `2k + 1` has degree at most `2k − 1`, and swapping it into
//! an independent set keeps the set independent.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::io::{content_lines, parse_usize};
use crate::graph::Graph;

/// Closed intervals `[L_v, R_v]` with `L_v < R_v` and all `2n` endpoints
/// pairwise distinct.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntervalModel {
    intervals: Vec<(f64, f64)>,
}

#[derive(Clone, Copy)]
struct Endpoint {
    at: f64,
    v: usize,
    left: bool,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(f64, f64)>) -> Result<Self> {
        for (v, &(l, r)) in intervals.iter().enumerate() {
            if !l.is_finite() || !r.is_finite() {
                return Err(invalid(format!("interval {v} has a non-finite endpoint")));
            }
            if l >= r {
                return Err(invalid(format!("interval {v} = [{l}, {r}] needs L < R")));
            }
        }
        let model = IntervalModel { intervals };
        let ends = model.endpoints();
        if let Some(w) = ends.windows(2).find(|w| w[0].at == w[1].at) {
            return Err(invalid(format!(
                "intervals {} and {} share the endpoint {}",
                w[0].v, w[1].v, w[0].at
            )));
        }
        Ok(model)
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn left(&self, v: usize) -> f64 {
        self.intervals[v].0
    }

    pub fn right(&self, v: usize) -> f64 {
        self.intervals[v].1
    }

    pub fn length(&self, v: usize) -> f64 {
        self.right(v) - self.left(v)
    }

    /// `L(v) < L(w) < R(w) < R(v)`.
    pub fn dominates(&self, v: usize, w: usize) -> bool {
        self.left(v) < self.left(w) && self.right(w) < self.right(v)
    }

    /// All endpoints sorted by position.
    fn endpoints(&self) -> Vec<Endpoint> {
        let mut ends: Vec<Endpoint> = self
            .intervals
            .iter()
            .enumerate()
            .flat_map(|(v, &(l, r))| {
                [Endpoint { at: l, v, left: true }, Endpoint { at: r, v, left: false }]
            })
            .collect();
        ends.sort_by(|a, b| a.at.partial_cmp(&b.at).unwrap_or(Ordering::Equal));
        ends
    }

    /// Intersection graph by an endpoint sweep: each interval meets exactly
    /// the intervals open when it starts, plus those starting before it ends.
    pub fn intersection_graph(&self) -> Graph {
        let mut active = BTreeSet::new();
        let mut edges = Vec::new();
        for e in self.endpoints() {
            if e.left {
                edges.extend(active.iter().map(|&u| (u, e.v)));
                active.insert(e.v);
            } else {
                active.remove(&e.v);
            }
        }
        Graph::new(self.n(), edges).expect("sweep edges are in range")
    }

    /// Largest number of intervals sharing a point.
    pub fn clique_number(&self) -> usize {
        let mut open = 0usize;
        let mut best = 0;
        for e in self.endpoints() {
            if e.left {
                open += 1;
                best = best.max(open);
            } else {
                open -= 1;
            }
        }
        best
    }

    /// `A(y) = {x : L(x) < L(y) < R(x)}`.
    pub fn left_cover(&self, y: usize) -> Vec<usize> {
        let ly = self.left(y);
        (0..self.n())
            .filter(|&x| self.left(x) < ly && ly < self.right(x))
            .collect()
    }

    /// `B(y) = {x : L(x) < R(y) < R(x)}`.
    pub fn right_cover(&self, y: usize) -> Vec<usize> {
        let ry = self.right(y);
        (0..self.n())
            .filter(|&x| self.left(x) < ry && ry < self.right(x))
            .collect()
    }
}

/// Parses the interval format: a line `n`, then `n` lines `id L R` covering
/// each id in `0..n` once. Lines starting with `#` are comments.
pub fn parse_interval_model(text: &str) -> Result<IntervalModel> {
    let parse_err = |line, msg: String| Error::Parse { line, msg };
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header".into()))?;
    let n = parse_usize(Some(header), hl, "interval count")?;
    let mut slots: Vec<Option<(f64, f64)>> = vec![None; n];
    let mut last = hl;
    for (ln, line) in lines {
        last = ln;
        let mut tok = line.split_whitespace();
        let id = parse_usize(tok.next(), ln, "interval id")?;
        let mut real = |what: &str| -> Result<f64> {
            let t = tok
                .next()
                .ok_or_else(|| parse_err(ln, format!("missing {what}")))?;
            t.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| parse_err(ln, format!("invalid {what} `{t}`")))
        };
        let l = real("left endpoint")?;
        let r = real("right endpoint")?;
        if tok.next().is_some() {
            return Err(parse_err(ln, "interval line must be `id L R`".into()));
        }
        if id >= n {
            return Err(parse_err(ln, format!("id {id} out of range for n = {n}")));
        }
        if slots[id].replace((l, r)).is_some() {
            return Err(parse_err(ln, format!("id {id} given twice")));
        }
    }
    let intervals = slots
        .into_iter()
        .enumerate()
        .map(|(id, s)| s.ok_or_else(|| parse_err(last, format!("interval {id} missing"))))
        .collect::<Result<Vec<_>>>()?;
    IntervalModel::new(intervals)
}

/// Serialises a model in the interval format.
pub fn write_interval_model(m: &IntervalModel, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{}", m.n());
    for (v, (l, r)) in m.intervals().iter().enumerate() {
        let _ = writeln!(out, "{v} {l} {r}");
    }
    out
}

fn check_clique_bound(m: &IntervalModel, k: usize) -> Result<()> {
    let omega = m.clique_number();
    if omega > k + 1 {
        return Err(Error::Precondition(format!(
            "clique number {omega} exceeds k + 1 = {}",
            k + 1
        )));
    }
    Ok(())
}

fn shortest_dominated(m: &IntervalModel, g: &Graph, v: usize) -> Option<usize> {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&w| m.dominates(v, w))
        .min_by(|&a, &b| {
            m.length(a)
                .partial_cmp(&m.length(b))
                .unwrap_or(Ordering::Equal)
                .then(a.cmp(&b))
        })
}

/// The shortest interval dominated by `v` (lowest id on ties). Requires
/// `ω ≤ k + 1` and `deg(v) ≥ 2k + 1`; the result then has degree at most
/// `2k − 1`.
pub fn find_dominated_low_degree(m: &IntervalModel, v: usize, k: usize) -> Result<usize> {
    if v >= m.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: m.n() });
    }
    check_clique_bound(m, k)?;
    let g = m.intersection_graph();
    if g.degree(v) < 2 * k + 1 {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {} < 2k + 1 = {}",
            g.degree(v),
            2 * k + 1
        )));
    }
    let w = shortest_dominated(m, &g, v).expect("a high-degree vertex dominates a neighbour");
    debug_assert!(g.degree(w) < 2 * k);
    Ok(w)
}

/// Maximum independent set by earliest right endpoint, sorted by id.
pub fn interval_max_independent_set(m: &IntervalModel) -> Vec<usize> {
    let mut by_right: Vec<usize> = (0..m.n()).collect();
    by_right.sort_by(|&a, &b| m.right(a).partial_cmp(&m.right(b)).unwrap_or(Ordering::Equal));
    let mut chosen = Vec::new();
    let mut frontier = f64::NEG_INFINITY;
    for v in by_right {
        if m.left(v) > frontier {
            chosen.push(v);
            frontier = m.right(v);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Output of [`interval_bounded_degree_mis`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundedDegreeMis {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// `(removed, inserted)` pairs in the order they were applied.
    pub swaps: Vec<(usize, usize)>,
}

/// A maximum independent set whose members all have degree at most `2k`,
/// for models with clique number at most `k + 1`: the greedy set passed
/// through [`swap_to_bounded_degree`].
pub fn interval_bounded_degree_mis(m: &IntervalModel, k: usize) -> Result<BoundedDegreeMis> {
    swap_to_bounded_degree(m, k, &interval_max_independent_set(m))
}

/// Replaces each member of `start` of degree at least `2k + 1` by its
/// shortest dominated interval. The size is unchanged and the result stays
/// independent.
///
/// A replacement dominates nothing and has degree at most `2k − 1`, so it is
/// never swapped again and the loop ends after at most one swap per member.
/// Greedy sets never contain a dominating interval, so swaps only fire for
/// other starting sets.
pub fn swap_to_bounded_degree(
    m: &IntervalModel,
    k: usize,
    start: &[usize],
) -> Result<BoundedDegreeMis> {
    check_clique_bound(m, k)?;
    let g = m.intersection_graph();
    if let Some(&v) = start.iter().find(|&&v| v >= m.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: m.n() });
    }
    if !g.is_independent(start) {
        return Err(Error::Precondition("starting set is not independent".into()));
    }
    let mut members: BTreeSet<usize> = start.iter().copied().collect();
    let queue: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&v| g.degree(v) > 2 * k)
        .collect();
    let mut swaps = Vec::with_capacity(queue.len());
    for v in queue {
        let w = shortest_dominated(m, &g, v).expect("a high-degree vertex dominates a neighbour");
        assert!(g.degree(w) < 2 * k, "replacement {w} has degree {}", g.degree(w));
        members.remove(&v);
        assert!(
            g.neighbors(w).iter().all(|u| !members.contains(u)),
            "swapping {v} for {w} broke independence"
        );
        members.insert(w);
        swaps.push((v, w));
    }
    Ok(BoundedDegreeMis {
        vertices: members.into_iter().collect(),
        swaps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> IntervalModel {
        IntervalModel::new(vec![(0.0, 10.5), (1.0, 1.5), (2.0, 2.5), (3.0, 3.5)]).unwrap()
    }

    fn path_power_model(n: usize, k: usize) -> IntervalModel {
        IntervalModel::new((0..n).map(|i| (i as f64, i as f64 + k as f64 + 0.5)).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(IntervalModel::new(vec![(1.0, 1.0)]).is_err());
        assert!(IntervalModel::new(vec![(0.0, 2.0), (2.0, 3.0)]).is_err());
        assert!(IntervalModel::new(vec![(0.0, f64::NAN)]).is_err());
        assert_eq!(IntervalModel::new(vec![]).unwrap().clique_number(), 0);
    }

    #[test]
    fn star_model() {
        let m = star();
        let g = m.intersection_graph();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(m.clique_number(), 2);
        assert_eq!(find_dominated_low_degree(&m, 0, 1).unwrap(), 1);
        assert_eq!(interval_max_independent_set(&m), vec![1, 2, 3]);
        assert!(matches!(
            find_dominated_low_degree(&m, 1, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn single_and_disjoint() {
        let one = IntervalModel::new(vec![(0.0, 1.0)]).unwrap();
        assert_eq!(one.intersection_graph(), Graph::empty(1));
        let disjoint = IntervalModel::new((0..5).map(|i| (2.0 * i as f64, 2.0 * i as f64 + 1.0)).collect())
            .unwrap();
        assert_eq!(disjoint.clique_number(), 1);
        assert_eq!(interval_max_independent_set(&disjoint).len(), 5);
    }

    #[test]
    fn path_power_models() {
        let m = path_power_model(10, 2);
        let g = m.intersection_graph();
        assert_eq!(g.edge_count(), 17);
        assert!(g.edges().all(|(u, v)| v - u <= 2));
        assert_eq!(m.clique_number(), 3);
        assert_eq!(interval_max_independent_set(&m).len(), 4);
        let mis = interval_bounded_degree_mis(&m, 2).unwrap();
        assert_eq!(mis.vertices.len(), 4);
        assert!(mis.vertices.iter().all(|&v| g.degree(v) <= 4));
    }

    #[test]
    fn covers_are_small() {
        let m = path_power_model(12, 3);
        for y in 0..12 {
            assert!(m.left_cover(y).len() <= 3);
            assert!(m.right_cover(y).len() <= 3);
        }
    }

    #[test]
    fn swaps_replace_dominating_members() {
        // Three short intervals nested in a long one, plus a far interval.
        let m = IntervalModel::new(vec![
            (0.0, 10.0),
            (1.0, 2.0),
            (3.0, 4.0),
            (5.0, 6.0),
            (-3.0, -1.0),
            (9.0, 11.0),
        ])
        .unwrap();
        let g = m.intersection_graph();
        assert_eq!(g.degree(0), 4);
        let greedy = interval_bounded_degree_mis(&m, 1).unwrap();
        assert!(greedy.swaps.is_empty());

        let swapped = swap_to_bounded_degree(&m, 1, &[0, 4]).unwrap();
        assert_eq!(swapped.swaps, vec![(0, 1)]);
        assert_eq!(swapped.vertices, vec![1, 4]);
        assert!(swap_to_bounded_degree(&m, 1, &[0, 1]).is_err());
    }

    #[test]
    fn clique_bound_is_checked() {
        let m = path_power_model(6, 2);
        assert!(matches!(
            interval_bounded_degree_mis(&m, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        let m = IntervalModel::new(vec![(0.25, 3.5), (1.0, 2.0), (-4.0, 0.125)]).unwrap();
        let text = write_interval_model(&m, &["demo".into()]);
        assert_eq!(parse_interval_model(&text).unwrap(), m);
        assert!(matches!(
            parse_interval_model("2\n0 0 1\n0 2 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_interval_model("2\n0 0 1\n").is_err());
        assert!(parse_interval_model("2\n0 0 1\n1 1 2\n").is_err());
        assert!(matches!(
            parse_interval_model("1\n0 0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
