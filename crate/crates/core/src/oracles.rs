//! Exhaustive solvers for `α`, `α^t` and `α^t_d`, used as ground truth.
//!
//! All searches run on `u64` vertex masks. Every witness is re-validated
//! against its definition before it is returned.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_chordal, treewidth_at_most, vd_set, Graph};

/// Largest graph accepted by [`oracle_alpha`].
pub const ALPHA_LIMIT: usize = 40;

/// Largest non-chordal connected component searched by [`oracle_alpha_t`].
/// Components that are already t-sets are accepted at any size, and chordal
/// ones up to [`ALPHA_LIMIT`].
pub const ALPHA_T_COMPONENT_LIMIT: usize = 18;

/// Cap on search nodes; `None` means unbounded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget(pub Option<u64>);

impl Budget {
    pub const UNLIMITED: Budget = Budget(None);
}

/// An optimal value, a set achieving it and the number of search nodes
/// visited.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub value: usize,
    /// Sorted vertex ids.
    pub witness: Vec<usize>,
    pub explored: u64,
}

struct Counter {
    explored: u64,
    limit: Option<u64>,
}

impl Counter {
    fn new(budget: Budget) -> Self {
        Counter {
            explored: 0,
            limit: budget.0,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.explored += 1;
        match self.limit {
            Some(l) if self.explored > l => Err(Error::BudgetExceeded(l)),
            _ => Ok(()),
        }
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn to_mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0u64, |m, &v| m | 1 << v)
}

/// Greedy partition of `cand` into cliques; returns `Σ min(|Q|, cap)`, an
/// upper bound on how many vertices of `cand` any set meeting each clique in
/// at most `cap` vertices can contain.
fn clique_cover_bound(adj: &[u64], mut cand: u64, cap: u32) -> u32 {
    let mut bound = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut clique = 1u64 << v;
        let mut common = adj[v] & cand;
        while common != 0 {
            let u = common.trailing_zeros() as usize;
            clique |= 1 << u;
            common &= adj[u];
        }
        bound += clique.count_ones().min(cap);
        cand &= !clique;
    }
    bound
}

struct AlphaSearch<'a> {
    adj: &'a [u64],
    best: u64,
    counter: Counter,
}

impl AlphaSearch<'_> {
    fn run(&mut self, chosen: u64, cand: u64) -> Result<()> {
        self.counter.tick()?;
        if cand == 0 {
            if chosen.count_ones() > self.best.count_ones() {
                self.best = chosen;
            }
            return Ok(());
        }
        if chosen.count_ones() + clique_cover_bound(self.adj, cand, 1) <= self.best.count_ones() {
            return Ok(());
        }
        let deg = |v: usize| (self.adj[v] & cand).count_ones();
        // A vertex of degree at most one in the candidates belongs to some
        // maximum independent set.
        if let Some(v) = bits(cand).find(|&v| deg(v) <= 1) {
            return self.run(chosen | 1 << v, cand & !(1 << v) & !self.adj[v]);
        }
        let v = bits(cand).max_by_key(|&v| (deg(v), std::cmp::Reverse(v))).expect("non-empty");
        self.run(chosen | 1 << v, cand & !(1 << v) & !self.adj[v])?;
        self.run(chosen, cand & !(1 << v))
    }
}

/// `α(G)` by branch and bound, for `n ≤ 40`.
pub fn oracle_alpha(g: &Graph) -> Result<OracleResult> {
    oracle_alpha_budgeted(g, Budget::UNLIMITED)
}

pub fn oracle_alpha_budgeted(g: &Graph, budget: Budget) -> Result<OracleResult> {
    if g.n() > ALPHA_LIMIT {
        return Err(Error::TooLarge {
            what: "maximum independent set oracle",
            n: g.n(),
            limit: ALPHA_LIMIT,
        });
    }
    let adj = masks(g);
    let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut s = AlphaSearch {
        adj: &adj,
        best: 0,
        counter: Counter::new(budget),
    };
    s.run(0, full)?;
    let witness: Vec<usize> = bits(s.best).collect();
    assert!(g.is_independent(&witness), "oracle witness is not independent");
    Ok(OracleResult {
        value: witness.len(),
        witness,
        explored: s.counter.explored,
    })
}

fn max_clique_in(adj: &[u64], cand: u64) -> u32 {
    fn grow(adj: &[u64], size: u32, mut cand: u64, best: &mut u32) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            grow(adj, size + 1, cand & adj[v], best);
        }
    }
    let mut best = 0;
    grow(adj, 0, cand, &mut best);
    best
}

/// Largest t-set of one connected graph with at most 64 vertices.
struct TSetSearch<'a> {
    g: &'a Graph,
    adj: Vec<u64>,
    t: usize,
    chordal: bool,
    best: u64,
    target: u32,
    counter: Counter,
}

impl TSetSearch<'_> {
    /// Whether `set ∪ {v}` is a t-set, given that `set` is.
    fn extends(&self, set: u64, v: usize) -> Result<bool> {
        let inside = self.adj[v] & set;
        if self.t == 0 {
            return Ok(inside == 0);
        }
        // Any new (t+2)-clique contains v.
        if max_clique_in(&self.adj, inside) as usize > self.t {
            return Ok(false);
        }
        if self.chordal {
            return Ok(true);
        }
        let vs: Vec<usize> = bits(set | 1 << v).collect();
        treewidth_at_most(&self.g.induced(&vs), self.t)
    }

    fn run(&mut self, chosen: u64, cand: u64) -> Result<()> {
        self.counter.tick()?;
        if self.best.count_ones() >= self.target {
            return Ok(());
        }
        if chosen.count_ones() > self.best.count_ones() {
            self.best = chosen;
        }
        if cand == 0 {
            return Ok(());
        }
        let cap = self.t as u32 + 1;
        if chosen.count_ones() + clique_cover_bound(&self.adj, cand, cap) <= self.best.count_ones() {
            return Ok(());
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << v);
        if self.extends(chosen, v)? {
            self.run(chosen | 1 << v, rest)?;
        }
        self.run(chosen, rest)
    }
}

fn is_t_set(g: &Graph, set: &[usize], t: usize) -> Result<bool> {
    let sub = g.induced(set);
    if t == 0 {
        return Ok(sub.edge_count() == 0);
    }
    if let Some(peo) = is_chordal(&sub) {
        return Ok(peo.width <= t);
    }
    sub.components()
        .into_iter()
        .try_fold(true, |ok, c| Ok(ok && treewidth_at_most(&sub.induced(&c), t)?))
}

/// `α^t(G)`: the largest vertex set inducing treewidth at most `t`.
///
/// Components are solved independently. Each descends from the bound
/// `min(|C|, (t+1)·α(C))` and stops as soon as it is met.
pub fn oracle_alpha_t(g: &Graph, t: usize) -> Result<OracleResult> {
    oracle_alpha_t_budgeted(g, t, Budget::UNLIMITED)
}

pub fn oracle_alpha_t_budgeted(g: &Graph, t: usize, budget: Budget) -> Result<OracleResult> {
    let mut witness = Vec::new();
    let mut explored = 0;
    let spend = |explored: u64| Budget(budget.0.map(|l| l.saturating_sub(explored)));
    for comp in g.components() {
        let sub = g.induced(&comp);
        if is_t_set(g, &comp, t).unwrap_or(false) {
            explored += 1;
            witness.extend_from_slice(&comp);
            continue;
        }
        let chordal = is_chordal(&sub).is_some();
        let limit = if chordal { ALPHA_LIMIT } else { ALPHA_T_COMPONENT_LIMIT };
        if comp.len() > limit {
            return Err(Error::TooLarge {
                what: "t-set oracle component",
                n: comp.len(),
                limit,
            });
        }
        let alpha = oracle_alpha_budgeted(&sub, spend(explored))?;
        explored += alpha.explored;
        let target = ((t + 1) * alpha.value).min(comp.len()) as u32;
        let mut search = TSetSearch {
            g: &sub,
            adj: masks(&sub),
            t,
            chordal,
            best: to_mask(&alpha.witness),
            target,
            counter: Counter::new(spend(explored)),
        };
        search.run(0, (1u64 << comp.len()) - 1)?;
        explored += search.counter.explored;
        witness.extend(bits(search.best).map(|i| comp[i]));
    }
    witness.sort_unstable();
    assert!(is_t_set(g, &witness, t)?, "oracle witness is not a {t}-set");
    Ok(OracleResult {
        value: witness.len(),
        witness,
        explored,
    })
}

/// `α^t_d(G) = α^t(G[V_d])`.
pub fn oracle_alpha_d_t(g: &Graph, d: usize, t: usize) -> Result<OracleResult> {
    oracle_alpha_d_t_budgeted(g, d, t, Budget::UNLIMITED)
}

pub fn oracle_alpha_d_t_budgeted(g: &Graph, d: usize, t: usize, budget: Budget) -> Result<OracleResult> {
    let vd = vd_set(g, d);
    let inner = oracle_alpha_t_budgeted(&g.induced(&vd), t, budget)?;
    let witness: Vec<usize> = inner.witness.iter().map(|&i| vd[i]).collect();
    assert!(witness.iter().all(|&v| g.degree(v) <= d));
    assert!(is_t_set(g, &witness, t)?);
    Ok(OracleResult {
        value: witness.len(),
        witness,
        explored: inner.explored,
    })
}

/// `α_d(G) = α(G[V_d])`.
pub fn oracle_alpha_d(g: &Graph, d: usize) -> Result<OracleResult> {
    let vd = vd_set(g, d);
    let inner = oracle_alpha(&g.induced(&vd))?;
    let witness: Vec<usize> = inner.witness.iter().map(|&i| vd[i]).collect();
    assert!(witness.iter().all(|&v| g.degree(v) <= d) && g.is_independent(&witness));
    Ok(OracleResult {
        value: witness.len(),
        witness,
        explored: inner.explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{kset_extremal, path_power, random_ktree};

    fn brute_alpha_t(g: &Graph, t: usize) -> usize {
        (0u32..1 << g.n())
            .filter(|&m| {
                let vs: Vec<usize> = (0..g.n()).filter(|&v| m >> v & 1 == 1).collect();
                is_t_set(g, &vs, t).unwrap()
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn alpha_small_families() {
        assert_eq!(oracle_alpha(&path_power(10, 2).unwrap()).unwrap().value, 4);
        assert_eq!(oracle_alpha(&Graph::complete(6)).unwrap().value, 1);
        assert_eq!(oracle_alpha(&Graph::empty(5)).unwrap().value, 5);
        assert_eq!(oracle_alpha(&Graph::empty(0)).unwrap().value, 0);
        let c7 = Graph::new(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        assert_eq!(oracle_alpha(&c7).unwrap().value, 3);
        assert!(oracle_alpha(&Graph::empty(41)).is_err());
    }

    #[test]
    fn spider_alpha_two() {
        let spider = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(oracle_alpha_d(&spider, 2).unwrap().value, 3);
        assert_eq!(oracle_alpha_d_t(&spider, 2, 0).unwrap().value, 3);
    }

    #[test]
    fn alpha_t_matches_brute_force() {
        for seed in 0..12 {
            let g = random_ktree(2, 9, seed).unwrap();
            for t in 0..=2 {
                assert_eq!(oracle_alpha_t(&g, t).unwrap().value, brute_alpha_t(&g, t), "seed {seed} t {t}");
            }
        }
        let petersen = Graph::new(
            10,
            (0..5)
                .map(|i| (i, (i + 1) % 5))
                .chain((0..5).map(|i| (i, i + 5)))
                .chain((0..5).map(|i| (5 + i, 5 + (i + 2) % 5))),
        )
        .unwrap();
        for t in 0..4 {
            assert_eq!(oracle_alpha_t(&petersen, t).unwrap().value, brute_alpha_t(&petersen, t));
        }
    }

    #[test]
    fn alpha_t_examples() {
        assert_eq!(oracle_alpha_t(&path_power(12, 3).unwrap(), 1).unwrap().value, 6);
        let g = random_ktree(3, 30, 5).unwrap();
        assert_eq!(oracle_alpha_t(&g, 3).unwrap().value, 30);
    }

    #[test]
    fn degree_capped_path_powers() {
        for k in 1..=3 {
            let g = path_power(4 * (k + 1), k).unwrap();
            // Only the k vertices at each end have degree below 2k.
            for t in 0..=k {
                assert_eq!(oracle_alpha_d_t(&g, 2 * k - 1, t).unwrap().value, 2 * (t + 1).min(k));
            }
        }
        let fig = kset_extremal(3, 7, 3).unwrap();
        assert_eq!(oracle_alpha_d_t(&fig, 7, 3).unwrap().value, 12);
    }

    #[test]
    fn budget_is_enforced() {
        let g = path_power(14, 2).unwrap();
        assert!(matches!(
            oracle_alpha_t_budgeted(&g, 1, Budget(Some(3))),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(oracle_alpha_budgeted(&g, Budget(Some(0))).is_err());
    }
}
