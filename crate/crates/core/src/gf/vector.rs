use alloc::vec::Vec;
use core::fmt;

use super::{Fe, FiniteField};
use crate::{Error, Result};

/// A vector in `F_q^k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FVector(Vec<Fe>);

impl FVector {
    pub fn new(coords: Vec<Fe>) -> Self {
        FVector(coords)
    }

    pub fn from_indices(coords: &[u8]) -> Self {
        FVector(coords.iter().map(|&c| Fe(c)).collect())
    }

    pub fn zeros(k: usize) -> Self {
        FVector(alloc::vec![Fe::ZERO; k])
    }

    /// The unit vector `e_i` (0-based `i`).
    pub fn unit(k: usize, i: usize) -> Self {
        let mut v = Self::zeros(k);
        v.0[i] = Fe::ONE;
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn coords(&self) -> &[Fe] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [Fe] {
        &mut self.0
    }

    pub fn into_coords(self) -> Vec<Fe> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Position of the first nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// Nonzero with first nonzero coordinate equal to one.
    pub fn is_normal(&self) -> bool {
        self.leading_index().map(|i| self.0[i] == Fe::ONE).unwrap_or(false)
    }

    /// Index of this vector when `F_q^k` is listed lexicographically
    /// (first coordinate most significant).
    pub fn lex_rank(&self, q: usize) -> usize {
        self.0.iter().fold(0, |acc, c| acc * q + c.index())
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FiniteField {
    /// `<v, w> = sum v_i w_i`.
    pub fn inner(&self, v: &FVector, w: &FVector) -> Result<Fe> {
        if v.len() != w.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                actual: w.len(),
            });
        }
        Ok(self.inner_unchecked(v.coords(), w.coords()))
    }

    #[inline]
    pub(crate) fn inner_unchecked(&self, v: &[Fe], w: &[Fe]) -> Fe {
        v.iter()
            .zip(w)
            .fold(Fe::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    pub fn scale(&self, lambda: Fe, v: &FVector) -> FVector {
        FVector(v.coords().iter().map(|&c| self.mul(lambda, c)).collect())
    }

    pub fn add_vectors(&self, v: &FVector, w: &FVector) -> Result<FVector> {
        if v.len() != w.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                actual: w.len(),
            });
        }
        Ok(FVector(
            v.coords()
                .iter()
                .zip(w.coords())
                .map(|(&a, &b)| self.add(a, b))
                .collect(),
        ))
    }

    pub fn sub_vectors(&self, v: &FVector, w: &FVector) -> Result<FVector> {
        let neg_w = self.scale(self.neg(Fe::ONE), w);
        self.add_vectors(v, &neg_w)
    }

    /// Rescales `a` so its first nonzero coordinate is one.
    pub fn normalize(&self, a: &FVector) -> Result<FVector> {
        let lead = a.leading_index().ok_or(Error::ZeroVector)?;
        let lambda = self.inv(a.coords()[lead]).expect("leading coordinate is nonzero");
        Ok(self.scale(lambda, a))
    }
}

/// `(q^k - 1) / (q - 1)`, the number of normal vectors in `F_q^k`.
pub fn normal_vector_count(q: usize, k: usize) -> usize {
    (q.pow(k as u32) - 1) / (q - 1)
}

/// All normal vectors of `F_q^k` in lexicographic order of their
/// coordinates.
pub fn enumerate_normal_vectors(field: &FiniteField, k: usize) -> Vec<FVector> {
    let q = field.order();
    let mut out = Vec::with_capacity(normal_vector_count(q, k));
    // Lexicographic order puts later leading positions first.
    for lead in (0..k).rev() {
        let free = k - lead - 1;
        for t in 0..q.pow(free as u32) {
            let mut coords = alloc::vec![Fe::ZERO; k];
            coords[lead] = Fe::ONE;
            let mut rest = t;
            for slot in coords[lead + 1..].iter_mut().rev() {
                *slot = Fe((rest % q) as u8);
                rest /= q;
            }
            out.push(FVector(coords));
        }
    }
    out
}
