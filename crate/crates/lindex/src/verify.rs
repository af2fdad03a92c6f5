//! `verify` suites: structural checks on `H_k^q` and the agreement of the
//! two routes to `lind_q`.

use std::str::FromStr;

use lindex_core::digraph::{chromatic_number, independence_number, Digraph};
use lindex_core::gf::normal_vector_count;
use lindex_core::lind::{minrank_with_cap, HomLindSolver, SideInfoProblem};
use lindex_core::{Error, FiniteField};
use serde_json::{json, Value};

use crate::commands::{Outcome, RunConfig};
use crate::error::{CliError, Result};

/// Largest `n` for the exhaustive `icd` suite.
pub const ICD_MAX_N: usize = 4;
/// Largest complement on which `coloring` also computes the exact `chi`.
const EXACT_CHI_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Transitivity,
    Coloring,
    Clique,
    LColor,
    Icd,
    NpWitness,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "transitivity" => Suite::Transitivity,
            "coloring" => Suite::Coloring,
            "clique" => Suite::Clique,
            "lcolor" => Suite::LColor,
            "icd" => Suite::Icd,
            "npwitness" => Suite::NpWitness,
            other => return Err(CliError::Usage(format!("unknown suite `{other}`"))),
        })
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Transitivity => "transitivity",
            Suite::Coloring => "coloring",
            Suite::Clique => "clique",
            Suite::LColor => "lcolor",
            Suite::Icd => "icd",
            Suite::NpWitness => "npwitness",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyArgs {
    pub suite: Suite,
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub l: usize,
}

pub fn verify(args: &VerifyArgs, cfg: &RunConfig) -> Result<Outcome> {
    let f = FiniteField::new(args.q)?;
    let (passed, details) = match args.suite {
        Suite::Transitivity => transitivity(&f, args.k, cfg)?,
        Suite::Coloring => coloring(&f, args.k, cfg)?,
        Suite::Clique => clique(&f, args.k, cfg)?,
        Suite::LColor => lcolor(&f, args.k, args.l, cfg)?,
        Suite::Icd => icd(&f, args.n, cfg)?,
        Suite::NpWitness => npwitness(&f, args.k, cfg)?,
    };
    let name = args.suite.name();
    Ok(Outcome {
        json: json!({
            "suite": name,
            "q": args.q,
            "k": args.k,
            "passed": passed,
            "details": details,
        }),
        summary: format!("{name}: {}", if passed { "pass" } else { "FAIL" }),
        positive: passed,
    })
}

fn transitivity(f: &FiniteField, k: usize, cfg: &RunConfig) -> Result<(bool, Value)> {
    let h = lindex_core::HkqGraph::with_limit(f, k, cfg.max_vertices)?;
    let base = h.base_vertex();
    let mut failures = Vec::new();
    for s in 0..h.vertex_count() {
        let perm = h.transitivity_automorphism(s)?;
        if perm[s] != base || !h.is_automorphism(&perm) {
            failures.push(s);
        }
    }
    Ok((
        failures.is_empty(),
        json!({ "vertices": h.vertex_count(), "failed_sources": failures }),
    ))
}

fn coloring(f: &FiniteField, k: usize, cfg: &RunConfig) -> Result<(bool, Value)> {
    let h = lindex_core::HkqGraph::with_limit(f, k, cfg.max_vertices)?;
    let comp = h.complement();
    let c = h.complement_coloring();
    let limit = normal_vector_count(f.order(), k);
    let proper = c.is_proper(&comp);
    let exact = if comp.vertex_count() <= EXACT_CHI_CAP {
        Some(chromatic_number(&comp)?.0)
    } else {
        None
    };
    let passed = proper && c.num_colors <= limit && exact.is_none_or(|x| x <= limit);
    Ok((
        passed,
        json!({
            "proper": proper,
            "colors": c.num_colors,
            "limit": limit,
            "exact_chi": exact,
        }),
    ))
}

fn clique(f: &FiniteField, k: usize, cfg: &RunConfig) -> Result<(bool, Value)> {
    let h = lindex_core::HkqGraph::with_limit(f, k, cfg.max_vertices)?;
    let q = f.order();
    // (q^2 - 1) q^(k-2) / 4, compared as 4 |S| >= numerator
    let numerator = (q * q - 1) * q.pow(k.saturating_sub(2) as u32);
    match h.complement_independent_set() {
        Ok(set) => Ok((
            4 * set.len() >= numerator,
            json!({ "method": "construction", "size": set.len(), "bound_times_4": numerator, "vertices": set }),
        )),
        Err(Error::ConstructionUnavailable(why)) => {
            let alpha = independence_number(&h.complement())?;
            Ok((
                k < 2 || 4 * alpha >= numerator,
                json!({ "method": "exact", "reason": why, "size": alpha, "bound_times_4": numerator }),
            ))
        }
        Err(e) => Err(e.into()),
    }
}

fn lcolor(f: &FiniteField, k: usize, l: usize, cfg: &RunConfig) -> Result<(bool, Value)> {
    let h = lindex_core::HkqGraph::with_limit(f, k, cfg.max_vertices)?;
    let q = f.order();
    let set = h.complement_l_colorable_set(l)?;
    let induced = h.graph().induced_subgraph(&set.vertices).complement();
    let proper = set.coloring.is_proper(&induced);
    let numerator = (q + 1) * (q.pow(l as u32) - 1) * q.pow((k - l - 1) as u32);
    Ok((
        proper && 4 * set.vertices.len() >= numerator,
        json!({
            "l": l,
            "size": set.vertices.len(),
            "bound_times_4": numerator,
            "proper": proper,
            "class_sizes": set.coloring.classes().iter().map(Vec::len).collect::<Vec<_>>(),
        }),
    ))
}

fn icd(f: &FiniteField, n: usize, cfg: &RunConfig) -> Result<(bool, Value)> {
    if n > ICD_MAX_N {
        return Err(Error::SizeLimitExceeded {
            what: "exhaustive icd suite",
            limit: ICD_MAX_N,
            actual: n,
        }
        .into());
    }
    let cap = cfg.minrank_cap.unwrap_or_else(|| lindex_core::lind::default_minrank_cap(f.order()));
    let mut solver = HomLindSolver::with_limit(f, cfg.max_vertices);
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for g in Digraph::all_labelled(n) {
        let p = SideInfoProblem::new(g);
        let a = minrank_with_cap(&p, f, cap)?.0;
        let b = solver.solve(&p)?.k;
        if a != b {
            mismatches.push(json!({ "arcs": p.graph().arcs(), "minrank": a, "hom": b }));
        }
        checked += 1;
    }
    Ok((
        mismatches.is_empty(),
        json!({ "n": n, "checked": checked, "mismatches": mismatches }),
    ))
}

fn npwitness(f: &FiniteField, k: usize, cfg: &RunConfig) -> Result<(bool, Value)> {
    let h = lindex_core::HkqGraph::with_limit(f, k, cfg.max_vertices)?;
    let r = h.np_witness_check();
    let cycles: Vec<Value> = r
        .cycle_homs
        .iter()
        .map(|(m, w)| json!({ "m": m, "map": w.as_ref().map(|w| w.map().to_vec()) }))
        .collect();
    Ok((
        r.passed(),
        json!({
            "degree_ok": r.degree_ok,
            "min_in_degree": r.min_in_degree,
            "min_out_degree": r.min_out_degree,
            "gadget_ok": r.gadget_ok,
            "gadget_vertices": r.gadget_vertices,
            "induced_arcs": r.induced_arcs,
            "no_cycle_hom": r.no_cycle_hom,
            "cycle_homs": cycles,
        }),
    ))
}
