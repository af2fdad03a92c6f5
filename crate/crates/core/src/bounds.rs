//! Lower bounds on `lind_q`.
//!
//! All of them have the same shape: an invariant `h` that can only grow
//! along the homomorphism order, and an upper bound `r(k)` on `h(H_k^q)`.
//! If `h(G) > r(k)` then `G` cannot map into `H_k^q`, so `lind_q(G) > k`;
//! the bound is the least `k` with `h(G) <= r(k)`. Thresholds are found by
//! exact integer comparison, never through logarithms.
//!
//! * chromatic: `h = chi(complement G)`, `r(k) = (q^k - 1)/(q - 1)`;
//! * clique ratio: `h = |G| / omega(G)`, `r(k) = 4q(q^k - 1)/((q - 1)(q^2 - 1))`
//!   for `k >= 2` and `r(1) = 1`;
//! * `l`-colourable: `h = |G| / N(complement G, K_l)`,
//!   `r(k) = 4q^l(q^k - 1)/((q^2 - 1)(q^l - 1))`, only for `k >= l + 2`.
//!
//! The ratio bounds rest on the independent and `l`-colourable sets of
//! [`crate::hkq`] being at least as large as their closed forms.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::digraph::{chromatic_number, clique_number, independence_number, largest_induced_hom_subgraph, Digraph};
use crate::gf::FiniteField;
use crate::hkq::HkqGraph;
use crate::{Error, Result};

/// Exact rational used for `h` and `r(k)`.
pub type Rational = Ratio<u128>;

/// Default search limit for [`generic_bound`]; `q^k` stays far inside `u128`.
pub const MAX_K: usize = 30;

fn pow(q: usize, k: usize) -> u128 {
    (q as u128).pow(k as u32)
}

/// Smallest `k >= 1` with `h <= r(k)`, searching up to `max_k`.
pub fn generic_bound(h: Rational, r: impl Fn(usize) -> Rational, max_k: usize) -> Option<usize> {
    (1..=max_k).find(|&k| h <= r(k))
}

/// `r(k)` of the chromatic bound.
pub fn chromatic_r(q: usize) -> impl Fn(usize) -> Rational {
    move |k| Rational::from_integer((pow(q, k) - 1) / (q as u128 - 1))
}

/// `r(k)` of the clique-ratio bound.
pub fn clique_ratio_r(q: usize) -> impl Fn(usize) -> Rational {
    let q128 = q as u128;
    move |k| {
        // H_1^q is a single vertex
        if k == 1 {
            Rational::from_integer(1)
        } else {
            Rational::new(4 * q128 * (pow(q, k) - 1), (q128 - 1) * (q128 * q128 - 1))
        }
    }
}

/// `r(k)` of the `l`-colourable bound; meaningful for `k >= l + 2`.
pub fn l_colorable_r(q: usize, l: usize) -> impl Fn(usize) -> Rational {
    let q128 = q as u128;
    move |k| Rational::new(4 * pow(q, l) * (pow(q, k) - 1), (q128 * q128 - 1) * (pow(q, l) - 1))
}

/// Smallest `k` with `q^k >= (q - 1) chi + 1`; zero when `chi = 0`.
pub fn chromatic_threshold(q: usize, chi: usize) -> usize {
    let target = (q as u128 - 1) * chi as u128 + 1;
    (0..).find(|&k| pow(q, k) >= target).unwrap()
}

/// Smallest `k >= 1` with `4q omega (q^k - 1) >= (q^2 - 1)(q - 1) n`,
/// except that `k = 1` needs `omega = n`. Zero for the empty graph.
pub fn clique_ratio_threshold(q: usize, n: usize, omega: usize) -> usize {
    if n == 0 {
        return 0;
    }
    if omega >= n {
        return 1;
    }
    let (q, n, omega) = (q as u128, n as u128, omega as u128);
    let rhs = (q * q - 1) * (q - 1) * n;
    (2..).find(|&k| 4 * q * omega * (q.pow(k as u32) - 1) >= rhs).unwrap()
}

/// The `l`-colourable threshold for `l >= 2`, or `None` when the least `k`
/// with `4 q^l N (q^k - 1) >= (q^2 - 1)(q^l - 1) n` is at most `l + 2`, where
/// the closed form gives no information.
pub fn l_colorable_threshold(q: usize, n: usize, l: usize, n_l: usize) -> Option<usize> {
    if n == 0 || l < 2 {
        return None;
    }
    let (q128, n, n_l) = (q as u128, n as u128, n_l as u128);
    let rhs = (q128 * q128 - 1) * (pow(q, l) - 1) * n;
    let k = (1..).find(|&k| 4 * pow(q, l) * n_l * (pow(q, k) - 1) >= rhs).unwrap();
    (k > l + 2).then_some(k)
}

/// `N(g, K_l)`; for `l = 1` this is `alpha(g)`.
pub fn n_complete(g: &Digraph, l: usize) -> Result<usize> {
    match l {
        0 => Ok(0),
        1 => independence_number(g),
        _ => Ok(largest_induced_hom_subgraph(g, &Digraph::complete(l))?.size),
    }
}

pub fn chromatic_bound(g: &Digraph, field: &FiniteField) -> Result<usize> {
    let (chi, _) = chromatic_number(&g.complement())?;
    Ok(chromatic_threshold(field.order(), chi))
}

pub fn clique_ratio_bound(g: &Digraph, field: &FiniteField) -> Result<usize> {
    Ok(clique_ratio_threshold(field.order(), g.vertex_count(), clique_number(g)?))
}

/// `l = 1` is the clique-ratio bound; `l >= 2` may be inapplicable (`None`).
pub fn l_colorable_bound(g: &Digraph, field: &FiniteField, l: usize) -> Result<Option<usize>> {
    match l {
        0 => Err(Error::InvalidArgument("l must be at least 1".into())),
        1 => clique_ratio_bound(g, field).map(Some),
        _ => {
            let n_l = n_complete(&g.complement(), l)?;
            Ok(l_colorable_threshold(field.order(), g.vertex_count(), l, n_l))
        }
    }
}

/// Both sides of `|G| / N(complement G, K) > |H| / N(complement H, K)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioComparison {
    pub n_g: usize,
    pub n_h: usize,
    pub graph_ratio: Rational,
    pub hkq_ratio: Rational,
    /// The strict inequality holds, so `lind_q(G) >= k + 1`.
    pub premise_holds: bool,
    pub implied_lower_bound: Option<usize>,
}

/// Exact `N` on both sides, so `H` has to be small.
pub fn ratio_inequality_check(g: &Digraph, h: &HkqGraph, k: &Digraph) -> Result<RatioComparison> {
    let n_of = |x: &Digraph| -> Result<usize> {
        if k.vertex_count() > 0 && k.arc_count() == 0 {
            independence_number(x)
        } else {
            Ok(largest_induced_hom_subgraph(x, k)?.size)
        }
    };
    let n_g = n_of(&g.complement())?;
    let n_h = n_of(&h.complement())?;
    if n_g == 0 || n_h == 0 {
        return Err(Error::InvalidArgument("N is zero, so the ratio is undefined".into()));
    }
    let graph_ratio = Rational::new(g.vertex_count() as u128, n_g as u128);
    let hkq_ratio = Rational::new(h.vertex_count() as u128, n_h as u128);
    let premise_holds = graph_ratio > hkq_ratio;
    Ok(RatioComparison {
        n_g,
        n_h,
        graph_ratio,
        hkq_ratio,
        premise_holds,
        implied_lower_bound: premise_holds.then_some(h.k() + 1),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: String,
    /// `None` when the bound does not apply.
    pub value: Option<usize>,
    /// Graph invariants the bound was computed from.
    pub inputs: Vec<(String, usize)>,
    /// What stands in for the unknown invariant of `H_k^q`.
    pub substitution: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub q: usize,
    pub n: usize,
    /// Sorted by name.
    pub entries: Vec<BoundEntry>,
    pub lower_bound: usize,
    pub exact: Option<usize>,
    /// Every bound is at most `exact`; `None` without an exact value.
    pub consistent: Option<bool>,
}

/// Every bound for `g`, with the `l`-colourable one for each `l` in `ls`.
/// `exact` is the true `lind_q`, when the caller has it.
pub fn bound_report(g: &Digraph, field: &FiniteField, ls: &[usize], exact: Option<usize>) -> Result<BoundReport> {
    let q = field.order();
    let n = g.vertex_count();
    let comp = g.complement();
    let mut entries = Vec::new();

    let (chi, _) = chromatic_number(&comp)?;
    entries.push(BoundEntry {
        name: "chromatic".into(),
        value: Some(chromatic_threshold(q, chi)),
        inputs: alloc::vec![("chi_complement".into(), chi)],
        substitution: "first-component colouring of the complement of H_k^q",
    });

    let omega = clique_number(g)?;
    entries.push(BoundEntry {
        name: "clique_ratio".into(),
        value: Some(clique_ratio_threshold(q, n, omega)),
        inputs: alloc::vec![("n".into(), n), ("omega".into(), omega)],
        substitution: "closed-form lower bound on alpha of the complement of H_k^q",
    });

    for &l in ls {
        if l < 2 {
            return Err(Error::InvalidArgument(format!("l = {l}: the l-colourable bound needs l >= 2")));
        }
        let n_l = n_complete(&comp, l)?;
        entries.push(BoundEntry {
            name: format!("l_colorable_{l}"),
            value: l_colorable_threshold(q, n, l, n_l),
            inputs: alloc::vec![("n".into(), n), (format!("N_complement_K{l}"), n_l)],
            substitution: "closed-form lower bound on N(complement of H_k^q, K_l)",
        });
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));

    let lower_bound = entries.iter().filter_map(|e| e.value).max().unwrap_or(0);
    let consistent = exact.map(|x| entries.iter().all(|e| e.value.is_none_or(|v| v <= x)));
    Ok(BoundReport {
        q,
        n,
        entries,
        lower_bound,
        exact,
        consistent,
    })
}
