//! Exact rational evaluators for the closed-form bounds, and the structural
//! test for trees meeting the degree-bounded independence bound with equality.
//!
//! Every value is a [`Rational64`]; the half-integer coefficient
//! `d − 3k/2 + 1` is never rounded.

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{DegreeProfile, Graph};

/// A bound value with its applicability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    #[serde(serialize_with = "ser_ratio")]
    pub value: Rational64,
    pub applicable: bool,
    /// Why the bound does not apply, or a caveat on what it means.
    pub reason: Option<String>,
}

fn ser_ratio<S: serde::Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl BoundValue {
    fn ok(value: Rational64) -> Self {
        BoundValue {
            value,
            applicable: true,
            reason: None,
        }
    }

    fn inapplicable(value: Rational64, reason: impl Into<String>) -> Self {
        BoundValue {
            value,
            applicable: false,
            reason: Some(reason.into()),
        }
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> i64 {
        self.value.ceil().to_integer()
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> i64 {
        self.value.floor().to_integer()
    }
}

fn r(n: usize) -> Rational64 {
    Rational64::from_integer(n as i64)
}

fn ri(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

fn check_t(k: usize, t: usize) -> Result<()> {
    if t > k {
        return Err(invalid(format!("need 0 <= t <= k, got t = {t}, k = {k}")));
    }
    Ok(())
}

/// `((d + 1 − avg) / (d + 1 − δ)) · n`, a lower bound on the number of
/// vertices of degree at most `d` given minimum degree `δ` and average `avg`.
pub fn bound_vd_lower(n: usize, delta: usize, avg_degree: Rational64, d: usize) -> BoundValue {
    if d < delta {
        return BoundValue::inapplicable(
            Rational64::zero(),
            format!("d = {d} is below the minimum degree {delta}"),
        );
    }
    BoundValue::ok((r(d + 1) - avg_degree) / r(d + 1 - delta) * r(n))
}

/// Average degree `2k − k(k+1)/n` of an `n`-vertex k-tree.
pub fn ktree_average_degree(n: usize, k: usize) -> Rational64 {
    r(2 * k) - r(k * (k + 1)) / r(n.max(1))
}

fn kset_parts(n: usize, k: usize, d: usize) -> Result<(Rational64, Rational64)> {
    if d + 1 < 2 * k {
        return Err(invalid(format!("need d >= 2k - 1 (k = {k}, d = {d})")));
    }
    let den = r(d + 1 - k);
    Ok((r(d + 1 - 2 * k) / den * r(n), den))
}

/// `((d−2k+1)/(d−k+1))·n + k(k+1)/(d−k+1)`: every n-vertex k-tree has at least
/// this many vertices of degree at most `d`.
pub fn bound_kset_lower(n: usize, k: usize, d: usize) -> Result<BoundValue> {
    let (lead, den) = kset_parts(n, k, d)?;
    Ok(BoundValue::ok(lead + r(k * (k + 1)) / den))
}

/// `((d−2k+1)/(d−k+1))·n + 2k²/(d−k+1)`, attained when `n ≡ 2k (mod d−k+1)`.
pub fn bound_kset_upper(n: usize, k: usize, d: usize) -> Result<BoundValue> {
    let (lead, den) = kset_parts(n, k, d)?;
    let value = lead + r(2 * k * k) / den;
    let modulus = d + 1 - k;
    if n < 2 * k || !(n - 2 * k).is_multiple_of(modulus) {
        return Ok(BoundValue::inapplicable(
            value,
            format!("n = {n} is not 2k plus a multiple of d - k + 1 = {modulus}"),
        ));
    }
    Ok(BoundValue::ok(value))
}

/// `(t+1)n/(k+1)`: the t-set guarantee for treewidth-k graphs, tight on `P_n^k`.
pub fn bound_tset(n: usize, k: usize, t: usize) -> Result<BoundValue> {
    check_t(k, t)?;
    let value = r((t + 1) * n) / r(k + 1);
    if n < k + 1 {
        return Ok(BoundValue::inapplicable(value, format!("need n >= k + 1 = {}", k + 1)));
    }
    Ok(BoundValue::ok(value))
}

/// `d − 3k/2 + 1 + t(t+1)/(2(k+1))`.
fn dtset_den(k: usize, t: usize, d: usize) -> Rational64 {
    r(d + 1) - ri(3) * half() * r(k) + r(t * (t + 1)) / r(2 * (k + 1))
}

fn dtset_lower_with(n: usize, k: usize, t: usize, d: usize, shift: i64) -> Result<BoundValue> {
    check_t(k, t)?;
    if d < 2 * k {
        return Ok(BoundValue::inapplicable(
            Rational64::zero(),
            format!("d = {d} < 2k = {}: P_n^k has only 2(t+1) such vertices", 2 * k),
        ));
    }
    let den = dtset_den(k, t, d);
    let lead = r(d + 1 - 2 * k) / den * r(t + 1) / r(k + 1) * r(n);
    let value = lead + r(k * (t + 1)) / (den + ri(shift));
    if n < 2 * k + 1 {
        return Ok(BoundValue::inapplicable(value, format!("need n >= 2k + 1 = {}", 2 * k + 1)));
    }
    Ok(BoundValue::ok(value))
}

/// Lower bound on the largest degree-`d` t-set of an n-vertex graph of
/// treewidth `k`:
///
/// `((d−2k+1)/D)·((t+1)/(k+1))·n + k(t+1)/(D+1)` with
/// `D = d − 3k/2 + 1 + t(t+1)/(2(k+1))`.
pub fn bound_dtset_lower(n: usize, k: usize, t: usize, d: usize) -> Result<BoundValue> {
    dtset_lower_with(n, k, t, d, 1)
}

/// The same bound with constant term `k(t+1)/D`, which is what the
/// underlying argument actually yields. It dominates [`bound_dtset_lower`]
/// and coincides with the outerplanar and tree lower bounds.
pub fn bound_dtset_lower_sharp(n: usize, k: usize, t: usize, d: usize) -> Result<BoundValue> {
    dtset_lower_with(n, k, t, d, 0)
}

/// Size bound of a degree-`d` t-set in [`crate::generators::block_ktree`]:
/// `(t+1)(r(n0 − (k+3)) + 2)`.
pub fn block_count(k: usize, t: usize, r: usize, n0: usize) -> usize {
    (t + 1) * (r * (n0 - (k + 3)) + 2)
}

/// `((d−2k+1)/(d−3k/2+1))·((t+1)/(k+1))·n
///  + ((k−1)(t+1)(d−2k+1) + k(t+1)(k+1)) / ((d−3k/2+1)(k+1))`,
/// attained by the block construction when `n` is one of its orders.
pub fn bound_dtset_upper(n: usize, k: usize, t: usize, d: usize) -> Result<BoundValue> {
    let r_blocks = crate::generators::block_r(k, d)?;
    if t >= k {
        return Err(invalid(format!("need 0 <= t < k, got t = {t}, k = {k}")));
    }
    let den = r(d + 1) - ri(3) * half() * r(k);
    let surplus = r(d + 1 - 2 * k);
    let value = surplus / den * r(t + 1) / r(k + 1) * r(n)
        + (r((k - 1) * (t + 1)) * surplus + r(k * (t + 1) * (k + 1))) / (den * r(k + 1));
    match block_n0(n, k, r_blocks) {
        Some(_) => Ok(BoundValue::ok(value)),
        None => Ok(BoundValue::inapplicable(
            value,
            format!("n = {n} is not the order of a block construction for k = {k}, d = {d}"),
        )),
    }
}

/// The `n0` with `block_ktree_order(k, r, n0) = n`, if any.
pub fn block_n0(n: usize, k: usize, r_blocks: usize) -> Option<usize> {
    let per = 1 + r_blocks * (k + 1);
    let num = n + r_blocks * (k + 1) * (k + 3);
    num.is_multiple_of(per)
        .then_some(num / per)
        .filter(|&n0| n0 >= 2 * k + 3)
}

/// `((d−1)n + 2)/(2d−1)`, the minimum of `α_d` over n-vertex trees whenever an
/// extremal tree on `n` vertices exists. For other `n` it is a lower bound
/// only, which `reason` records.
pub fn bound_tree(n: usize, d: usize) -> Result<BoundValue> {
    if d == 0 || n == 0 {
        return Err(invalid("need d >= 1 and n >= 1"));
    }
    let value = r((d - 1) * n + 2) / r(2 * d - 1);
    let realizable = if d == 1 {
        n >= 3
    } else {
        n >= 2 * d + 3 && (n - 4).is_multiple_of(2 * d - 1)
    };
    let mut b = BoundValue::ok(value);
    if !realizable {
        b.reason = Some(format!("lower bound only: no extremal tree has {n} vertices"));
    }
    Ok(b)
}

/// The degree-profile refinement of [`bound_tree`] for a tree with `n ≥ 3`:
/// `((d−1)n + 2 + Σ_{3≤i≤d} (i−2)n_i + Σ_{i≥d+2} (i−d−1)n_i) / (2d−1)`.
pub fn bound_indset_trees(profile: &DegreeProfile, d: usize) -> Result<BoundValue> {
    let n = profile.n();
    if d == 0 {
        return Err(invalid("need d >= 1"));
    }
    if n < 3 {
        return Err(invalid(format!("need a tree with n >= 3, got {n}")));
    }
    if profile.degree_sum() != 2 * (n - 1) {
        return Err(invalid(format!(
            "degree sum {} is not 2(n - 1) = {}",
            profile.degree_sum(),
            2 * (n - 1)
        )));
    }
    let extra: usize = profile
        .counts
        .iter()
        .map(|(&i, &c)| match i {
            i if (3..=d).contains(&i) => (i - 2) * c,
            i if i >= d + 2 => (i - d - 1) * c,
            _ => 0,
        })
        .sum();
    Ok(BoundValue::ok(r((d - 1) * n + 2 + extra) / r(2 * d - 1)))
}

/// Leaves of a `(d+1)`-regular tree on `n` vertices: `((d−1)n + 2)/d`.
/// Flagged inapplicable when no such tree exists.
pub fn regular_tree_leaves(n: usize, d: usize) -> Result<BoundValue> {
    if d < 2 {
        return Err(invalid(format!("need d >= 2, got {d}")));
    }
    let value = r((d - 1) * n + 2) / r(d);
    if !value.is_integer() || n < d + 2 {
        return Ok(BoundValue::inapplicable(
            value,
            format!("no ({})-regular tree has {n} vertices", d + 1),
        ));
    }
    Ok(BoundValue::ok(value))
}

/// Degree classes of a tree: leaves `L`, degree-two vertices `P`, and the
/// members `Q ⊆ P` with no leaf neighbour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeStats {
    pub leaves: Vec<usize>,
    pub degree_two: Vec<usize>,
    pub q: Vec<usize>,
}

pub fn tree_stats(t: &Graph) -> Result<TreeStats> {
    if !t.is_tree() {
        return Err(Error::Precondition("input is not a tree".into()));
    }
    let leaves: Vec<usize> = t.vertices().filter(|&v| t.degree(v) == 1).collect();
    let degree_two: Vec<usize> = t.vertices().filter(|&v| t.degree(v) == 2).collect();
    let q = degree_two
        .iter()
        .copied()
        .filter(|&v| t.neighbors(v).iter().all(|&w| t.degree(w) != 1))
        .collect();
    Ok(TreeStats {
        leaves,
        degree_two,
        q,
    })
}

/// True iff `t` (with `n ≥ 5`) arises from a `(d+1)`-regular tree by
/// subdividing every leaf edge once.
pub fn is_alpha_d_extremal_structure(t: &Graph, d: usize) -> Result<bool> {
    let stats = tree_stats(t)?;
    if t.n() < 5 {
        return Err(Error::Precondition(format!("need n >= 5, got {}", t.n())));
    }
    if d == 0 {
        return Err(invalid("need d >= 1"));
    }
    if d == 1 {
        return Ok(stats.leaves.len() == 2);
    }
    if t.vertices().any(|v| ![1, 2, d + 1].contains(&t.degree(v))) {
        return Ok(false);
    }
    if !stats.q.is_empty() || stats.degree_two.len() != stats.leaves.len() {
        return Ok(false);
    }
    // Each degree-two vertex joins exactly one leaf to a branch vertex, so
    // contracting them leaves a (d+1)-regular tree.
    let shaped = stats.degree_two.iter().all(|&p| {
        let nb = t.neighbors(p);
        let leaf_count = nb.iter().filter(|&&w| t.degree(w) == 1).count();
        let branch_count = nb.iter().filter(|&&w| t.degree(w) == d + 1).count();
        leaf_count == 1 && branch_count == 1
    });
    Ok(shaped)
}

/// The degree `d` at which the leading coefficient of [`bound_dtset_lower`]
/// equals `(1−ε)(t+1)/(k+1)`:
/// `d = ½(1 − 1/ε)(3k − 2 − t(t+1)/(k+1)) + (2k−1)/ε`.
pub fn corollary_epsilon_d(epsilon: Rational64, k: usize, t: usize) -> Result<Rational64> {
    check_t(k, t)?;
    if epsilon <= Rational64::zero() || epsilon >= Rational64::one() {
        return Err(invalid(format!("need 0 < epsilon < 1, got {epsilon}")));
    }
    let inv = epsilon.recip();
    let bracket = r(3 * k) - ri(2) - r(t * (t + 1)) / r(k + 1);
    Ok(half() * (Rational64::one() - inv) * bracket + (r(2 * k) - ri(1)) * inv)
}

/// Leading coefficient `(d−2k+1)(t+1) / (((d−3k/2+1)(k+1)) + t(t+1)/2)` of
/// [`bound_dtset_lower`], with `d` rational.
pub fn dtset_lower_coefficient(d: Rational64, k: usize, t: usize) -> Rational64 {
    let num = (d - r(2 * k) + ri(1)) * r(t + 1);
    let den = (d - ri(3) * half() * r(k) + ri(1)) * r(k + 1) + half() * r(t * (t + 1));
    num / den
}

/// Which side of the outerplanar bounds to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Lower,
    Upper,
}

/// Outerplanar bounds: lower `((d−3)/(3d−6))n + 2/(d−2)` for `d ≥ 4, n ≥ 5`;
/// upper `((d−4)/(3d−10))(n−6) + 3` for even `d ≥ 6` at the orders of
/// [`crate::generators::outerplanar_extremal`].
pub fn bound_outerplanar(n: usize, d: usize, which: Side) -> Result<BoundValue> {
    match which {
        Side::Lower => {
            if d < 4 {
                return Err(invalid(format!("the outerplanar lower bound needs d >= 4, got {d}")));
            }
            let value = r(d - 3) / r(3 * d - 6) * r(n) + r(2) / r(d - 2);
            if n < 5 {
                return Ok(BoundValue::inapplicable(value, "need n >= 5"));
            }
            Ok(BoundValue::ok(value))
        }
        Side::Upper => {
            let rr = crate::generators::outerplanar_r(d)?;
            let value = r(d - 4) / r(3 * d - 10) * (r(n) - ri(6)) + ri(3);
            let per = 3 * rr + 1;
            let num = n + 12 * rr - 2;
            let realizable = num.is_multiple_of(per) && num / per >= 6;
            if !realizable {
                return Ok(BoundValue::inapplicable(
                    value,
                    format!("n = {n} is not the order of an outerplanar construction for d = {d}"),
                ));
            }
            Ok(BoundValue::ok(value))
        }
    }
}
