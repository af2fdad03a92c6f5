//! Structural checks on the complement of `H_k^q`: minimum degree, the
//! four-vertex gadget `D`, and the absence of homomorphisms from `D` to
//! short directed cycles.

use alloc::vec::Vec;

use super::HkqGraph;
use crate::digraph::Digraph;
use crate::gf::FVector;
use crate::hom::{hom_exists, HomWitness};

/// Arcs of the gadget `D` on its local vertices
/// `x0 = (e2, e1 - e2)`, `x1 = (e1 + e2, e2)`, `x2 = (e1, e1)`, `x3 = (e2, e2)`:
/// a 3-cycle `x0 -> x2 -> x1 -> x0` and a 2-cycle `x2 <-> x3`.
pub const GADGET_ARCS: [(usize, usize); 5] = [(0, 2), (2, 1), (1, 0), (3, 2), (2, 3)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    /// Every in- and out-degree of the complement is at least 2.
    pub degree_ok: bool,
    pub min_in_degree: usize,
    pub min_out_degree: usize,
    /// The gadget vertices exist, are distinct and carry every gadget arc.
    pub gadget_ok: bool,
    /// Indices of `x0..x3` in `H_k^q`, when all four exist.
    pub gadget_vertices: Option<[usize; 4]>,
    /// Arcs of the complement induced on the gadget vertices, in local indices.
    pub induced_arcs: Vec<(usize, usize)>,
    /// `D` maps to no directed cycle `C_m` with `2 <= m <= 4`.
    pub no_cycle_hom: bool,
    /// `(m, witness)` for each cycle length tried.
    pub cycle_homs: Vec<(usize, Option<HomWitness>)>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.degree_ok && self.gadget_ok && self.no_cycle_hom
    }
}

/// `D` as a standalone digraph.
pub fn gadget() -> Digraph {
    let mut d = Digraph::new(4);
    for (u, v) in GADGET_ARCS {
        d.insert_arc(u, v);
    }
    d
}

impl HkqGraph {
    /// Runs all three checks. Failures are reported, never raised; for
    /// `k = 1` the report fails since the gadget needs `e2`.
    pub fn np_witness_check(&self) -> WitnessReport {
        let comp = self.complement();
        let n = comp.vertex_count();
        let min_in_degree = (0..n).map(|v| comp.in_degree(v)).min().unwrap_or(0);
        let min_out_degree = (0..n).map(|v| comp.out_degree(v)).min().unwrap_or(0);
        let degree_ok = n > 0 && min_in_degree >= 2 && min_out_degree >= 2;

        let gadget_vertices = self.gadget_vertices();
        let induced_arcs = match gadget_vertices {
            Some(vs) => comp.induced_subgraph(&vs).arcs(),
            None => Vec::new(),
        };
        let distinct = gadget_vertices.is_some_and(|vs| {
            (0..4).all(|i| (i + 1..4).all(|j| vs[i] != vs[j]))
        });
        let gadget_ok = distinct && GADGET_ARCS.iter().all(|a| induced_arcs.contains(a));

        let d = gadget();
        let cycle_homs: Vec<(usize, Option<HomWitness>)> = (2..=d.vertex_count())
            .map(|m| {
                let c = Digraph::directed_cycle(m);
                (m, hom_exists(&d, &c).expect("gadget is tiny"))
            })
            .collect();
        let no_cycle_hom = cycle_homs.iter().all(|(_, w)| w.is_none());

        WitnessReport {
            degree_ok,
            min_in_degree,
            min_out_degree,
            gadget_ok,
            gadget_vertices,
            induced_arcs,
            no_cycle_hom,
            cycle_homs,
        }
    }

    fn gadget_vertices(&self) -> Option<[usize; 4]> {
        let k = self.k();
        if k < 2 {
            return None;
        }
        let f = self.field();
        let (e1, e2) = (FVector::unit(k, 0), FVector::unit(k, 1));
        let sum = f.add_vectors(&e1, &e2).ok()?;
        let diff = f.normalize(&f.sub_vectors(&e1, &e2).ok()?).ok()?;
        Some([
            self.vertex_of(&e2, &diff)?,
            self.vertex_of(&sum, &e2)?,
            self.vertex_of(&e1, &e1)?,
            self.vertex_of(&e2, &e2)?,
        ])
    }
}
