//! The subcommands. Each returns a JSON value for stdout, a short human
//! summary for stderr, and whether the answer was positive.

use std::path::Path;

use lindex_core::bounds::bound_report;
use lindex_core::digraph::{
    chromatic_number, clique_number, core, independence_number, DEFAULT_CORE_CAP,
};
use lindex_core::hkq::HkqGraph;
use lindex_core::hom::hom_exists;
use lindex_core::lind::{
    code_from_hom_witness, default_minrank_cap, minrank_with_cap, HomLindSolver, SideInfoProblem,
};
use lindex_core::{FiniteField, Matrix};
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::format::{read_graph, write_file, write_graph, write_labels};

/// Size caps shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    /// Vertex budget for `H_k^q`.
    pub max_vertices: usize,
    /// Receiver cap for minrank; the per-field default when `None`.
    pub minrank_cap: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_vertices: lindex_core::hkq::DEFAULT_MAX_VERTICES,
            minrank_cap: None,
        }
    }
}

impl RunConfig {
    pub fn new(max_vertices: usize, minrank_cap: Option<usize>) -> Result<Self> {
        if max_vertices == 0 || minrank_cap == Some(0) {
            return Err(CliError::Usage("caps must be positive".into()));
        }
        Ok(RunConfig {
            max_vertices,
            minrank_cap,
        })
    }

    fn minrank_cap(&self, f: &FiniteField) -> usize {
        self.minrank_cap.unwrap_or_else(|| default_minrank_cap(f.order()))
    }

    fn hkq(&self, f: &FiniteField, k: usize) -> Result<HkqGraph> {
        Ok(HkqGraph::with_limit(f, k, self.max_vertices)?)
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub json: Value,
    pub summary: String,
    pub positive: bool,
}

impl Outcome {
    pub fn json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("JSON values always serialize")
    }

    fn new(json: Value, summary: String, positive: bool) -> Self {
        Outcome {
            json,
            summary,
            positive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Matrix,
    Hom,
    Both,
}

fn matrix_json(m: &Matrix) -> Value {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|c| c.index()).collect::<Vec<_>>())
        .collect()
}

pub fn construct(q: u32, k: usize, out: &Path, labels: Option<&Path>, cfg: &RunConfig) -> Result<Outcome> {
    let f = FiniteField::new(q)?;
    let h = cfg.hkq(&f, k)?;
    let labels_path = labels
        .map(Path::to_path_buf)
        .unwrap_or_else(|| {
            let mut p = out.as_os_str().to_owned();
            p.push(".labels");
            p.into()
        });
    write_file(out, &write_graph(h.graph()))?;
    write_file(&labels_path, &write_labels(&h))?;
    let n = h.vertex_count();
    Ok(Outcome::new(
        json!({
            "q": q,
            "k": k,
            "n": n,
            "arcs": h.graph().arc_count(),
            "graph": out,
            "labels": labels_path,
        }),
        format!("H_{k}^{q}: {n} vertices written to {}", out.display()),
        true,
    ))
}

pub fn lind(q: u32, method: Method, input: &Path, cfg: &RunConfig) -> Result<Outcome> {
    let f = FiniteField::new(q)?;
    let g = read_graph(input)?;
    let n = g.vertex_count();
    let p = SideInfoProblem::new(g);

    let matrix = match method {
        Method::Matrix | Method::Both => Some(minrank_with_cap(&p, &f, cfg.minrank_cap(&f))?),
        Method::Hom => None,
    };
    let hom = match method {
        Method::Hom | Method::Both => {
            let mut solver = HomLindSolver::with_limit(&f, cfg.max_vertices);
            let ans = solver.solve(&p)?;
            let (code, labels) = if ans.k == 0 {
                (Value::Array(Vec::new()), Vec::new())
            } else {
                let h = &solver.level(ans.k)?.0;
                let code = code_from_hom_witness(&p, h, &ans.witness)?;
                let labels: Vec<String> = ans
                    .witness
                    .map()
                    .iter()
                    .map(|&x| {
                        let (v, w) = h.label(x);
                        format!("{v}|{w}")
                    })
                    .collect();
                (matrix_json(&code.encoding), labels)
            };
            Some((ans, code, labels))
        }
        Method::Matrix => None,
    };

    let (lind, witness, agree) = match (&matrix, &hom) {
        (Some((k, a)), None) => (*k, json!({ "fitting_matrix": matrix_json(&a.matrix) }), true),
        (None, Some((ans, code, labels))) => (
            ans.k,
            json!({ "map": ans.witness.map(), "labels": labels, "code": code }),
            true,
        ),
        (Some((k, a)), Some((ans, code, labels))) => (
            *k,
            json!({
                "fitting_matrix": matrix_json(&a.matrix),
                "map": ans.witness.map(),
                "labels": labels,
                "code": code,
                "hom_lind": ans.k,
            }),
            *k == ans.k,
        ),
        (None, None) => unreachable!(),
    };
    let method_name = match method {
        Method::Matrix => "matrix",
        Method::Hom => "hom",
        Method::Both => "both",
    };
    let mut out = json!({ "q": q, "n": n, "lind": lind, "method": method_name, "witness": witness });
    if method == Method::Both {
        out["agree"] = json!(agree);
    }
    let summary = if agree {
        format!("lind_{q} = {lind} ({method_name})")
    } else {
        format!("methods disagree: minrank {lind}, homomorphism route {}", hom.as_ref().unwrap().0.k)
    };
    Ok(Outcome::new(out, summary, agree))
}

pub fn hom(g_path: &Path, h_path: &Path, complement: bool, witness_out: Option<&Path>) -> Result<Outcome> {
    let (mut g, mut h) = (read_graph(g_path)?, read_graph(h_path)?);
    if complement {
        g = g.complement();
        h = h.complement();
    }
    let found = hom_exists(&g, &h)?;
    let map = found.as_ref().map(|w| w.map().to_vec());
    if let (Some(path), Some(map)) = (witness_out, &map) {
        write_file(path, &serde_json::to_string_pretty(&json!({ "map": map }))?)?;
    }
    let exists = found.is_some();
    Ok(Outcome::new(
        json!({ "exists": exists, "complement": complement, "map": map }),
        format!("homomorphism {}", if exists { "exists" } else { "does not exist" }),
        exists,
    ))
}

pub fn bounds(q: u32, ls: &[usize], exact: bool, input: &Path, cfg: &RunConfig) -> Result<Outcome> {
    let f = FiniteField::new(q)?;
    let g = read_graph(input)?;
    let exact_value = if exact {
        Some(minrank_with_cap(&SideInfoProblem::new(g.clone()), &f, cfg.minrank_cap(&f))?.0)
    } else {
        None
    };
    let report = bound_report(&g, &f, ls, exact_value)?;
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            let inputs: serde_json::Map<String, Value> =
                e.inputs.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            json!({
                "name": e.name,
                "value": e.value,
                "applicable": e.value.is_some(),
                "inputs": inputs,
                "substitution": e.substitution,
            })
        })
        .collect();
    let consistent = report.consistent.unwrap_or(true);
    let mut summary = format!("lind_{q} >= {}", report.lower_bound);
    if let Some(x) = report.exact {
        summary.push_str(&format!(", exact {x}"));
    }
    Ok(Outcome::new(
        json!({
            "graph": input,
            "q": report.q,
            "n": report.n,
            "bounds": entries,
            "lower_bound": report.lower_bound,
            "exact": report.exact,
            "consistent": report.consistent,
        }),
        summary,
        consistent,
    ))
}

fn value_or_error(r: lindex_core::Result<usize>) -> Value {
    match r {
        Ok(v) => json!(v),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

pub fn props(input: &Path) -> Result<Outcome> {
    let g = read_graph(input)?;
    let comp = g.complement();
    let core_size = if g.vertex_count() <= DEFAULT_CORE_CAP {
        core(&g).map(|(c, _)| c.vertex_count())
    } else {
        Err(lindex_core::Error::SizeLimitExceeded {
            what: "core search",
            limit: DEFAULT_CORE_CAP,
            actual: g.vertex_count(),
        })
    };
    Ok(Outcome::new(
        json!({
            "n": g.vertex_count(),
            "arcs": g.arc_count(),
            "chi_complement": value_or_error(chromatic_number(&comp).map(|c| c.0)),
            "omega": value_or_error(clique_number(&g)),
            "alpha": value_or_error(independence_number(&g)),
            "core_size": value_or_error(core_size),
        }),
        format!("{} vertices, {} arcs", g.vertex_count(), g.arc_count()),
        true,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    #[test]
    fn config_rejects_zero_caps() {
        assert!(RunConfig::new(0, None).is_err());
        assert!(RunConfig::new(10, Some(0)).is_err());
        assert_eq!(RunConfig::new(10, Some(4)).unwrap().minrank_cap, Some(4));
    }

    #[test]
    fn lind_and_props_on_a_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p2.txt");
        fs::write(&path, "digraph 3\n0 1\n1 0\n").unwrap();
        let cfg = RunConfig::default();
        let out = lind(2, Method::Both, &path, &cfg).unwrap();
        assert!(out.positive);
        assert_eq!(out.json["lind"], 2);
        let p = props(&path).unwrap();
        assert_eq!(p.json["omega"], 2);
        assert_eq!(p.json["core_size"], 2);
    }

    #[test]
    fn errors_are_reported_inline() {
        let e = value_or_error(Err(lindex_core::Error::SizeLimitExceeded {
            what: "x",
            limit: 1,
            actual: 2,
        }));
        assert!(e["error"].is_string());
    }
}
