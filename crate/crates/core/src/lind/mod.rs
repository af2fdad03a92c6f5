//! Scalar linear index codes and `lind_q`.
//!
//! A problem on `m` receivers is a loopless digraph with an arc `i -> j`
//! when receiver `i` already holds `x_j`. A scalar linear code broadcasts
//! `y = M x` for a `k x m` matrix `M`; it is valid when every receiver can
//! recover its own message from `y` and its side information.
//!
//! Two independent routes compute the optimum `k`:
//!
//! * [`minrank`]: the least rank of a fitting matrix (nonzero diagonal,
//!   zero wherever `i != j` and `i -> j` is not an arc);
//! * [`lind_via_hom`]: the least `k` with a homomorphism from the
//!   complement of `G` into the complement of `H_k^q`.

mod minrank;

use alloc::format;
use alloc::vec::Vec;

use crate::digraph::Digraph;
use crate::gf::{Fe, FiniteField, Matrix};
use crate::hkq::{HkqGraph, DEFAULT_MAX_VERTICES};
use crate::hom::{hom_exists_with, HomOptions, HomWitness};
use crate::{Error, Result};

pub use minrank::{default_minrank_cap, minrank, minrank_brute_force, minrank_with_cap, BRUTE_FORCE_CAP};

/// Receivers `0..m` and their side information, stored as a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideInfoProblem {
    graph: Digraph,
}

impl SideInfoProblem {
    pub fn new(graph: Digraph) -> Self {
        SideInfoProblem { graph }
    }

    /// `side_info[i]` lists the messages receiver `i` already has.
    pub fn from_side_info(side_info: &[Vec<usize>]) -> Result<Self> {
        let m = side_info.len();
        let mut g = Digraph::new(m);
        for (i, known) in side_info.iter().enumerate() {
            for &j in known {
                g.add_arc(i, j)?;
            }
        }
        Ok(SideInfoProblem { graph: g })
    }

    pub fn m(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn side_info(&self, i: usize) -> Vec<usize> {
        self.graph.out_neighbors(i).collect()
    }
}

impl From<Digraph> for SideInfoProblem {
    fn from(graph: Digraph) -> Self {
        SideInfoProblem::new(graph)
    }
}

/// A `k x m` encoding matrix over a field; `k` symbols are broadcast.
#[derive(Debug, Clone)]
pub struct LinearIndexCode {
    pub field: FiniteField,
    pub encoding: Matrix,
}

impl LinearIndexCode {
    pub fn new(field: &FiniteField, encoding: Matrix) -> Self {
        LinearIndexCode {
            field: field.clone(),
            encoding,
        }
    }

    pub fn length(&self) -> usize {
        self.encoding.rows()
    }

    /// The code whose rows are a basis of the row space of a fitting
    /// matrix. Receiver `i` decodes with row `i` of the fitting matrix.
    pub fn from_fitting_matrix(field: &FiniteField, a: &FittingMatrix) -> Self {
        let (red, pivots) = a.matrix.rref(field);
        let rows: Vec<Vec<Fe>> = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        let encoding = if rows.is_empty() {
            Matrix::zeros(0, a.matrix.cols())
        } else {
            Matrix::from_rows(&rows).expect("rows share a length")
        };
        LinearIndexCode::new(field, encoding)
    }
}

/// An `m x m` matrix with nonzero diagonal and zeros off the arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingMatrix {
    pub matrix: Matrix,
}

impl FittingMatrix {
    pub fn fits(&self, g: &Digraph) -> bool {
        let m = g.vertex_count();
        if self.matrix.rows() != m || self.matrix.cols() != m {
            return false;
        }
        (0..m).all(|i| {
            (0..m).all(|j| {
                let a = self.matrix.get(i, j);
                if i == j {
                    !a.is_zero()
                } else {
                    a.is_zero() || g.has_arc(i, j)
                }
            })
        })
    }

    pub fn rank(&self, field: &FiniteField) -> usize {
        self.matrix.rank(field)
    }
}

/// Receiver `i` can decode iff `e_i` lies in the row space of the
/// encoding matrix plus the span of the `e_j`, `j` in its side information.
pub fn is_valid_linear_code(p: &SideInfoProblem, code: &LinearIndexCode) -> Result<bool> {
    let m = p.m();
    if code.encoding.cols() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            actual: code.encoding.cols(),
        });
    }
    let f = &code.field;
    for i in 0..m {
        let mut rows: Vec<Vec<Fe>> = code.encoding.row_vectors().map(<[Fe]>::to_vec).collect();
        for j in p.graph().out_neighbors(i) {
            rows.push(unit(m, j));
        }
        let base = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(&rows)?.rank(f)
        };
        rows.push(unit(m, i));
        if Matrix::from_rows(&rows)?.rank(f) != base {
            return Ok(false);
        }
    }
    Ok(true)
}

fn unit(m: usize, i: usize) -> Vec<Fe> {
    let mut v = alloc::vec![Fe::ZERO; m];
    v[i] = Fe::ONE;
    v
}

/// Answer of the homomorphism route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLind {
    pub k: usize,
    /// Complement of `G` into the complement of `H_k^q`.
    pub witness: HomWitness,
}

/// Ascends `k`, keeping every `H_k^q` built so far for later problems over
/// the same field.
#[derive(Debug, Clone)]
pub struct HomLindSolver {
    field: FiniteField,
    max_vertices: usize,
    levels: Vec<(HkqGraph, Digraph)>,
}

impl HomLindSolver {
    pub fn new(field: &FiniteField) -> Self {
        Self::with_limit(field, DEFAULT_MAX_VERTICES)
    }

    pub fn with_limit(field: &FiniteField, max_vertices: usize) -> Self {
        HomLindSolver {
            field: field.clone(),
            max_vertices,
            levels: Vec::new(),
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// `H_k^q` and its complement.
    pub fn level(&mut self, k: usize) -> Result<&(HkqGraph, Digraph)> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        while self.levels.len() < k {
            let h = HkqGraph::with_limit(&self.field, self.levels.len() + 1, self.max_vertices)?;
            let comp = h.complement();
            self.levels.push((h, comp));
        }
        Ok(&self.levels[k - 1])
    }

    pub fn solve(&mut self, p: &SideInfoProblem) -> Result<HomLind> {
        let m = p.m();
        if m == 0 {
            return Ok(HomLind {
                k: 0,
                witness: HomWitness::new(Vec::new()),
            });
        }
        let source = p.graph().complement();
        let opts = HomOptions {
            max_target: self.max_vertices,
            ..HomOptions::default()
        }
        .vertex_transitive();
        // Identity coding always works, so the search stops by k = m.
        for k in 1..=m {
            let (_, target) = self.level(k)?;
            if let Some(witness) = hom_exists_with(&source, target, &opts)? {
                return Ok(HomLind { k, witness });
            }
        }
        Err(Error::VerificationFailed(format!(
            "no homomorphism into the complement of H_k^q for any k <= {m}"
        )))
    }
}

/// Least `k` such that the complement of `G` maps into the complement of
/// `H_k^q`, with the witness.
pub fn lind_via_hom(p: &SideInfoProblem, field: &FiniteField) -> Result<HomLind> {
    HomLindSolver::new(field).solve(p)
}

/// Turns a homomorphism from the complement of `G` into the complement of
/// `H_k^q` into a `k`-symbol code. Receiver `i`, sent to `(v_i, w_i)`,
/// contributes the column `w_i` and decodes with `v_i`: `v_i^T y` is
/// `<v_i, w_i> x_i` plus messages it already knows. The result is checked
/// before it is returned.
pub fn code_from_hom_witness(
    p: &SideInfoProblem,
    h: &HkqGraph,
    witness: &HomWitness,
) -> Result<LinearIndexCode> {
    let m = p.m();
    if witness.map().len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            actual: witness.map().len(),
        });
    }
    if !witness.verify(&p.graph().complement(), &h.complement()) {
        return Err(Error::TranslationFailed("witness is not a homomorphism".into()));
    }
    let k = h.k();
    let mut encoding = Matrix::zeros(k, m);
    for i in 0..m {
        let (_, w) = h.label(witness.image(i));
        for (r, &c) in w.coords().iter().enumerate() {
            encoding.set(r, i, c);
        }
    }
    let code = LinearIndexCode::new(h.field(), encoding);
    if !is_valid_linear_code(p, &code)? {
        return Err(Error::TranslationFailed(format!(
            "the {k}-row code built from the witness does not decode"
        )));
    }
    Ok(code)
}

/// Fitting matrix `A_ij = <v_i, w_j>` read off a homomorphism witness.
pub fn fitting_matrix_from_hom_witness(h: &HkqGraph, witness: &HomWitness) -> FittingMatrix {
    let m = witness.map().len();
    let f = h.field();
    let mut a = Matrix::zeros(m, m);
    for i in 0..m {
        let (v, _) = h.label(witness.image(i));
        for j in 0..m {
            let (_, w) = h.label(witness.image(j));
            a.set(i, j, f.inner(v, w).expect("labels share a length"));
        }
    }
    FittingMatrix { matrix: a }
}
