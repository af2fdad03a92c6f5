//! The digraphs `H_k^q`.
//!
//! Vertices are the pairs `(v, w)` of normal vectors of `F_q^k` with
//! `<v, w> != 0`, listed in lexicographic order of `(v, w)`. There is an arc
//! from `(v, w)` to a different vertex `(v', w')` iff `<v, w'> != 0`, so in
//! the complement the arc is present iff `<v, w'> = 0`.
//!
//! `H_k^q` has `(q^k - 1)/(q - 1) * q^(k-1)` vertices and every in- and
//! out-degree is `q^(2(k-1)) - 1`.

mod sets;
mod witness;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::digraph::{Coloring, Digraph};
use crate::gf::{enumerate_normal_vectors, FVector, FiniteField, Matrix};
use crate::{Error, Result};

pub use sets::LColorableSet;
pub use witness::{gadget, WitnessReport, GADGET_ARCS};

/// Default vertex budget for [`HkqGraph::new`].
pub const DEFAULT_MAX_VERTICES: usize = 10_000;

const NONE: usize = usize::MAX;

/// `|V(H_k^q)|`, or `None` on overflow.
pub fn vertex_count_formula(q: usize, k: usize) -> Option<usize> {
    if k == 0 || q < 2 {
        return None;
    }
    let qk = q.checked_pow(k as u32)?;
    ((qk - 1) / (q - 1)).checked_mul(q.checked_pow(k as u32 - 1)?)
}

/// Common in- and out-degree of `H_k^q`.
pub fn degree_formula(q: usize, k: usize) -> Option<usize> {
    q.checked_pow(2 * (k as u32).checked_sub(1)?).map(|d| d - 1)
}

#[derive(Debug, Clone)]
pub struct HkqGraph {
    field: FiniteField,
    k: usize,
    normals: Vec<FVector>,
    /// `lex_rank -> index into normals`, `NONE` for non-normal vectors.
    normal_index: Vec<usize>,
    /// Vertex labels as indices into `normals`.
    labels: Vec<(usize, usize)>,
    /// `(v index, w index) -> vertex`, `NONE` when `<v, w> = 0`.
    vertex_index: Vec<usize>,
    graph: Digraph,
}

impl HkqGraph {
    pub fn new(field: &FiniteField, k: usize) -> Result<Self> {
        Self::with_limit(field, k, DEFAULT_MAX_VERTICES)
    }

    pub fn with_limit(field: &FiniteField, k: usize, max_vertices: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("H_k^q needs k >= 1".into()));
        }
        let q = field.order();
        let expected = vertex_count_formula(q, k).unwrap_or(usize::MAX);
        Error::check_size("H_k^q vertices", max_vertices, expected)?;

        let normals = enumerate_normal_vectors(field, k);
        let p = normals.len();
        let mut normal_index = vec![NONE; q.pow(k as u32)];
        for (i, v) in normals.iter().enumerate() {
            normal_index[v.lex_rank(q)] = i;
        }

        let nonzero: Vec<bool> = normals
            .iter()
            .flat_map(|v| {
                normals
                    .iter()
                    .map(move |w| !field.inner_unchecked(v.coords(), w.coords()).is_zero())
            })
            .collect();

        let mut labels = Vec::with_capacity(expected);
        let mut vertex_index = vec![NONE; p * p];
        for a in 0..p {
            for b in 0..p {
                if nonzero[a * p + b] {
                    vertex_index[a * p + b] = labels.len();
                    labels.push((a, b));
                }
            }
        }
        let n = labels.len();
        debug_assert_eq!(n, expected);

        // Arcs out of (v, w) depend only on v, arcs into (v', w') only on w'.
        let mut with_v = vec![FixedBitSet::with_capacity(n); p];
        let mut with_w = vec![FixedBitSet::with_capacity(n); p];
        for (i, &(a, b)) in labels.iter().enumerate() {
            with_v[a].insert(i);
            with_w[b].insert(i);
        }
        let mut out_by_v = vec![FixedBitSet::with_capacity(n); p];
        let mut in_by_w = vec![FixedBitSet::with_capacity(n); p];
        for a in 0..p {
            for d in 0..p {
                if nonzero[a * p + d] {
                    out_by_v[a].union_with(&with_w[d]);
                    in_by_w[d].union_with(&with_v[a]);
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        let mut inn = Vec::with_capacity(n);
        for (i, &(a, b)) in labels.iter().enumerate() {
            let mut o = out_by_v[a].clone();
            o.set(i, false);
            out.push(o);
            let mut r = in_by_w[b].clone();
            r.set(i, false);
            inn.push(r);
        }
        let text_labels: Vec<String> = labels
            .iter()
            .map(|&(a, b)| format!("{}|{}", normals[a], normals[b]))
            .collect();
        let graph = Digraph::from_rows(out, inn).with_labels(text_labels)?;

        Ok(HkqGraph {
            field: field.clone(),
            k,
            normals,
            normal_index,
            labels,
            vertex_index,
            graph,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// The normal vectors of `F_q^k` in enumeration order.
    pub fn normals(&self) -> &[FVector] {
        &self.normals
    }

    pub fn label(&self, vertex: usize) -> (&FVector, &FVector) {
        let (a, b) = self.labels[vertex];
        (&self.normals[a], &self.normals[b])
    }

    /// Label of `vertex` as indices into [`HkqGraph::normals`].
    pub fn label_indices(&self, vertex: usize) -> (usize, usize) {
        self.labels[vertex]
    }

    pub fn normal_index(&self, v: &FVector) -> Option<usize> {
        if v.len() != self.k {
            return None;
        }
        match self.normal_index.get(v.lex_rank(self.q())) {
            Some(&i) if i != NONE => Some(i),
            _ => None,
        }
    }

    /// The vertex labelled `(v, w)`, if both are normal and `<v, w> != 0`.
    pub fn vertex_of(&self, v: &FVector, w: &FVector) -> Option<usize> {
        let (a, b) = (self.normal_index(v)?, self.normal_index(w)?);
        match self.vertex_index[a * self.normals.len() + b] {
            NONE => None,
            i => Some(i),
        }
    }

    pub fn complement(&self) -> Digraph {
        self.graph.complement()
    }

    /// Index of the vertex `(e_1, e_1)`.
    pub fn base_vertex(&self) -> usize {
        let e1 = FVector::unit(self.k, 0);
        self.vertex_of(&e1, &e1).expect("<e1, e1> = 1")
    }

    /// The automorphism `(u, v) -> (N(X^T u), N(X^{-1} v))` sending `source`
    /// to `(e_1, e_1)`, where `source = (d, e)` and
    /// `X = [e | xi_1 | ... | xi_{k-1}]` with the `xi_i` the null-space basis
    /// of `d^T` (one vector per free column, in column order).
    ///
    /// The returned permutation is checked to be a bijection before it is
    /// handed out.
    pub fn transitivity_automorphism(&self, source: usize) -> Result<Vec<usize>> {
        if source >= self.vertex_count() {
            return Err(Error::InvalidVertex(source));
        }
        let f = &self.field;
        let (d, e) = self.label(source);
        let d_row = Matrix::from_rows(&[d.coords().to_vec()])?;
        let mut columns = vec![e.clone()];
        columns.extend(d_row.null_space(f));
        let x = Matrix::from_columns(self.k, &columns)?;
        let xt = x.transpose();
        let x_inv = x.inverse(f)?;

        let mut perm = Vec::with_capacity(self.vertex_count());
        for vertex in 0..self.vertex_count() {
            let (u, v) = self.label(vertex);
            let u2 = f.normalize(&xt.mul_vec(f, u)?)?;
            let v2 = f.normalize(&x_inv.mul_vec(f, v)?)?;
            let image = self.vertex_of(&u2, &v2).ok_or_else(|| {
                Error::VerificationFailed(format!("image of vertex {vertex} is not a vertex"))
            })?;
            perm.push(image);
        }
        let mut hit = FixedBitSet::with_capacity(perm.len());
        for &p in &perm {
            if hit.put(p) {
                return Err(Error::VerificationFailed("map is not injective".into()));
            }
        }
        Ok(perm)
    }

    /// `perm` is a bijection preserving both arcs and non-arcs of `H_k^q`
    /// (and so of its complement).
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.vertex_count();
        if perm.len() != n || perm.iter().any(|&p| p >= n) {
            return false;
        }
        let mut hit = FixedBitSet::with_capacity(n);
        if perm.iter().any(|&p| hit.put(p)) {
            return false;
        }
        (0..n).all(|u| (0..n).all(|v| self.graph.has_arc(u, v) == self.graph.has_arc(perm[u], perm[v])))
    }

    /// Colours `(d, e)` by `d`. Proper on the complement with at most
    /// `(q^k - 1)/(q - 1)` colours.
    pub fn complement_coloring(&self) -> Coloring {
        Coloring {
            assignment: self.labels.iter().map(|&(a, _)| a).collect(),
            num_colors: self.normals.len(),
        }
    }
}
