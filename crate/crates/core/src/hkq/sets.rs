//! Large independent and `l`-colourable vertex sets in the complement of
//! `H_k^q` for odd `q`.
//!
//! Block `j` (0-based) is `A_j x B_j` with
//!
//! * `A_j = { e_j + g^i e_{j+1} : 0 <= i <= (q-3)/2 } ∪ { e_j }`,
//! * `B_j` the vectors `e_j + a e_{j+1} + (anything after position j+1)`
//!   whose coefficient `a` keeps `<v, w> != 0` for every `v` in `A_j`,
//!
//! where `g` is the field's primitive element. The excluded coefficients
//! are exactly `-g^{-i}` for `0 <= i <= (q-3)/2`; `a = 0` is allowed, so
//! each block has `((q+1)/2)^2 q^(k-j-2)` vertices.
//!
//! Nothing here is trusted: every block is checked against the graph
//! before it is returned.

use alloc::format;
use alloc::vec::Vec;

use super::HkqGraph;
use crate::digraph::Coloring;
use crate::gf::{FVector, Fe};
use crate::{Error, Result};

/// An `l`-colourable induced subgraph of the complement of `H_k^q`.
/// `coloring.assignment[i]` is the colour of `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LColorableSet {
    pub vertices: Vec<usize>,
    pub coloring: Coloring,
}

impl HkqGraph {
    fn require_odd_q(&self) -> Result<()> {
        if self.q().is_multiple_of(2) {
            return Err(Error::ConstructionUnavailable(format!(
                "q = {} is even; the construction needs odd q",
                self.q()
            )));
        }
        Ok(())
    }

    /// `A_j x B_j` as vertex indices.
    fn block(&self, j: usize) -> Result<Vec<usize>> {
        let f = self.field();
        let (q, k) = (self.q(), self.k());
        let g = f.primitive_element();
        let multipliers: Vec<Fe> = (0..=(q - 3) / 2).map(|i| f.pow(g, i as u64)).collect();

        let mut a_set: Vec<FVector> = multipliers
            .iter()
            .map(|&c| {
                let mut v = FVector::unit(k, j);
                v.coords_mut()[j + 1] = c;
                v
            })
            .collect();
        a_set.push(FVector::unit(k, j));

        let allowed: Vec<Fe> = f
            .elements()
            .filter(|&a| multipliers.iter().all(|&c| !f.add(Fe::ONE, f.mul(c, a)).is_zero()))
            .collect();
        let tail = k - j - 2;
        let mut b_set = Vec::with_capacity(allowed.len() * q.pow(tail as u32));
        for &a in &allowed {
            for t in 0..q.pow(tail as u32) {
                let mut w = FVector::unit(k, j);
                w.coords_mut()[j + 1] = a;
                let mut rest = t;
                for slot in w.coords_mut()[j + 2..].iter_mut().rev() {
                    *slot = Fe((rest % q) as u8);
                    rest /= q;
                }
                b_set.push(w);
            }
        }

        let mut block = Vec::with_capacity(a_set.len() * b_set.len());
        for v in &a_set {
            for w in &b_set {
                let x = self.vertex_of(v, w).ok_or_else(|| {
                    Error::VerificationFailed(format!("({v}, {w}) is not a vertex of H_k^q"))
                })?;
                block.push(x);
            }
        }
        block.sort_unstable();
        self.verify_complement_independent(&block)?;
        Ok(block)
    }

    /// No arc of the complement inside `set`; for distinct vertices that
    /// means every ordered pair is an arc of `H_k^q`.
    fn verify_complement_independent(&self, set: &[usize]) -> Result<()> {
        for &x in set {
            for &y in set {
                if x != y && !self.graph().has_arc(x, y) {
                    return Err(Error::VerificationFailed(format!(
                        "vertices {x} and {y} are adjacent in the complement"
                    )));
                }
            }
        }
        Ok(())
    }

    /// An independent set of the complement (a clique of `H_k^q`) of size at
    /// least `(q^2 - 1) q^(k-2) / 4`. Needs odd `q` and `k >= 2`.
    pub fn complement_independent_set(&self) -> Result<Vec<usize>> {
        self.require_odd_q()?;
        if self.k() < 2 {
            return Err(Error::ConstructionUnavailable("needs k >= 2".into()));
        }
        let set = self.block(0)?;
        let q = self.q();
        if 4 * set.len() < (q * q - 1) * q.pow(self.k() as u32 - 2) {
            return Err(Error::VerificationFailed(format!(
                "independent set of size {} is below the bound",
                set.len()
            )));
        }
        Ok(set)
    }

    /// The union of blocks `0..l`, each an independent set of the
    /// complement, coloured by block. Needs odd `q` and either `l = 1`
    /// (the independent set above) or `1 < l < k - 1`. The size is at least
    /// `(q + 1)(q^l - 1) q^(k-l-1) / 4`.
    pub fn complement_l_colorable_set(&self, l: usize) -> Result<LColorableSet> {
        self.require_odd_q()?;
        let k = self.k();
        if l == 0 || (l > 1 && l + 1 >= k) {
            return Err(Error::ConstructionUnavailable(format!(
                "l = {l} is outside 1 < l < k - 1 (k = {k})"
            )));
        }
        if l == 1 {
            let vertices = self.complement_independent_set()?;
            let coloring = Coloring {
                assignment: alloc::vec![0; vertices.len()],
                num_colors: 1,
            };
            return Ok(LColorableSet { vertices, coloring });
        }

        let mut tagged: Vec<(usize, usize)> = Vec::new();
        for j in 0..l {
            tagged.extend(self.block(j)?.into_iter().map(|x| (x, j)));
        }
        tagged.sort_unstable();
        if tagged.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::VerificationFailed("blocks overlap".into()));
        }
        let vertices: Vec<usize> = tagged.iter().map(|t| t.0).collect();
        let coloring = Coloring {
            assignment: tagged.iter().map(|t| t.1).collect(),
            num_colors: l,
        };
        let induced = self.graph().induced_subgraph(&vertices).complement();
        if !coloring.is_proper(&induced) {
            return Err(Error::VerificationFailed("block colouring is not proper".into()));
        }
        let q = self.q();
        if 4 * vertices.len() < (q + 1) * (q.pow(l as u32) - 1) * q.pow((k - l - 1) as u32) {
            return Err(Error::VerificationFailed(format!(
                "l-colourable set of size {} is below the bound",
                vertices.len()
            )));
        }
        Ok(LColorableSet { vertices, coloring })
    }
}
