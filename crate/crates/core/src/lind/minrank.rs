//! Minrank by subspace enumeration.
//!
//! A fitting matrix of rank at most `k` exists iff some `k`-dimensional
//! subspace `R` of `F_q^m` contains, for every receiver `i`, a vector `r`
//! with `r_i != 0` supported inside `{i} ∪ A_i`; those vectors are the rows.
//! Each subspace is visited once through its reduced row echelon basis,
//! pivot sets in lexicographic order and free entries as an odometer with
//! the last entry fastest.

use alloc::vec;
use alloc::vec::Vec;

use super::{FittingMatrix, SideInfoProblem};
use crate::gf::{Fe, FiniteField, Matrix};
use crate::{Error, Result};

/// Receiver caps that keep the subspace count at desk scale.
pub fn default_minrank_cap(q: usize) -> usize {
    match q {
        2 => 6,
        3 => 5,
        4 | 5 => 4,
        _ => 3,
    }
}

/// Largest number of matrices [`minrank_brute_force`] will enumerate.
pub const BRUTE_FORCE_CAP: usize = 1 << 20;

pub fn minrank(p: &SideInfoProblem, field: &FiniteField) -> Result<(usize, FittingMatrix)> {
    minrank_with_cap(p, field, default_minrank_cap(field.order()))
}

pub fn minrank_with_cap(
    p: &SideInfoProblem,
    field: &FiniteField,
    max_receivers: usize,
) -> Result<(usize, FittingMatrix)> {
    let m = p.m();
    Error::check_size("minrank receivers", max_receivers.min(63), m)?;
    if m == 0 {
        return Ok((0, FittingMatrix { matrix: Matrix::zeros(0, 0) }));
    }
    // allowed[i]: support mask of the admissible rows for receiver i
    let allowed: Vec<u64> = (0..m)
        .map(|i| p.graph().out_neighbors(i).fold(1u64 << i, |acc, j| acc | 1 << j))
        .collect();
    let mut enumerator = Subspaces::new(field, m);
    for k in 1..=m {
        let mut found = None;
        enumerator.for_each(k, &mut |span| {
            if covers(span, &allowed) {
                found = Some(witness(span, &allowed));
                true
            } else {
                false
            }
        });
        if let Some(a) = found {
            let a = FittingMatrix { matrix: a };
            if !a.fits(p.graph()) || a.rank(field) != k {
                return Err(Error::VerificationFailed("minrank witness is not a fitting matrix of the reported rank".into()));
            }
            return Ok((k, a));
        }
    }
    unreachable!("the identity matrix fits at k = m")
}

/// A nonzero vector of the span with its support mask.
struct SpanVector {
    coords: Vec<Fe>,
    support: u64,
}

fn covers(span: &[SpanVector], allowed: &[u64]) -> bool {
    let full = (1u64 << allowed.len()) - 1;
    let mut satisfied = 0u64;
    for v in span {
        let mut bits = v.support & !satisfied;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if v.support & !allowed[i] == 0 {
                satisfied |= 1 << i;
            }
        }
        if satisfied == full {
            return true;
        }
    }
    false
}

/// Row `i` is the lexicographically smallest admissible vector for `i`.
fn witness(span: &[SpanVector], allowed: &[u64]) -> Matrix {
    let m = allowed.len();
    let mut a = Matrix::zeros(m, m);
    for (i, &ok) in allowed.iter().enumerate() {
        let best = span
            .iter()
            .filter(|v| v.support >> i & 1 == 1 && v.support & !ok == 0)
            .map(|v| &v.coords)
            .min()
            .expect("covered");
        for (j, &c) in best.iter().enumerate() {
            a.set(i, j, c);
        }
    }
    a
}

struct Subspaces<'a> {
    field: &'a FiniteField,
    m: usize,
    span: Vec<SpanVector>,
}

impl<'a> Subspaces<'a> {
    fn new(field: &'a FiniteField, m: usize) -> Self {
        Subspaces {
            field,
            m,
            span: Vec::new(),
        }
    }

    /// Calls `visit` with the nonzero vectors of every `k`-dimensional
    /// subspace until it returns `true`.
    fn for_each(&mut self, k: usize, visit: &mut dyn FnMut(&[SpanVector]) -> bool) {
        let (m, q) = (self.m, self.field.order());
        let mut pivots: Vec<usize> = (0..k).collect();
        loop {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pivots = &pivots;
                    (pivots[r] + 1..m)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let mut digits = vec![0usize; free.len()];
            loop {
                let mut basis = vec![vec![Fe::ZERO; m]; k];
                for (r, &p) in pivots.iter().enumerate() {
                    basis[r][p] = Fe::ONE;
                }
                for (&(r, c), &d) in free.iter().zip(&digits) {
                    basis[r][c] = Fe(d as u8);
                }
                self.fill_span(&basis);
                if visit(&self.span) {
                    return;
                }
                if !odometer(&mut digits, q) {
                    break;
                }
            }
            if !next_combination(&mut pivots, m) {
                return;
            }
        }
    }

    fn fill_span(&mut self, basis: &[Vec<Fe>]) {
        let f = self.field;
        let (m, q) = (self.m, f.order());
        self.span.clear();
        let mut coeffs = vec![0usize; basis.len()];
        while odometer(&mut coeffs, q) {
            let mut coords = vec![Fe::ZERO; m];
            for (row, &c) in basis.iter().zip(&coeffs) {
                if c != 0 {
                    for (x, &b) in coords.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(Fe(c as u8), b));
                    }
                }
            }
            let support = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(0u64, |acc, (j, _)| acc | 1 << j);
            self.span.push(SpanVector { coords, support });
        }
    }
}

/// Advances a base-`q` counter, last digit fastest. `false` on wrap-around.
fn odometer(digits: &mut [usize], q: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minrank by trying all `q^(m^2)` matrices. Reference oracle for tiny
/// problems only.
pub fn minrank_brute_force(p: &SideInfoProblem, field: &FiniteField) -> Result<usize> {
    let m = p.m();
    let q = field.order();
    let total = (m * m) as u32;
    let count = q
        .checked_pow(total)
        .filter(|&c| c <= BRUTE_FORCE_CAP)
        .ok_or_else(|| Error::size("brute-force minrank matrices", BRUTE_FORCE_CAP, usize::MAX))?;
    if m == 0 {
        return Ok(0);
    }
    let mut best = m;
    let mut digits = vec![0usize; m * m];
    for _ in 0..count {
        let a = Matrix::from_rows(
            &digits
                .chunks(m)
                .map(|row| row.iter().map(|&d| Fe(d as u8)).collect())
                .collect::<Vec<Vec<Fe>>>(),
        )?;
        let fitting = FittingMatrix { matrix: a };
        if fitting.fits(p.graph()) {
            best = best.min(fitting.rank(field));
        }
        odometer(&mut digits, q);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;
    use std::collections::BTreeMap;

    fn f(q: u32) -> FiniteField {
        FiniteField::new(q).unwrap()
    }

    fn undirected_cycle(n: usize) -> Digraph {
        let mut g = Digraph::new(n);
        for i in 0..n {
            g.add_arc(i, (i + 1) % n).unwrap();
            g.add_arc((i + 1) % n, i).unwrap();
        }
        g
    }

    #[test]
    fn examples() {
        let f2 = f(2);
        assert_eq!(minrank(&Digraph::edgeless(3).into(), &f2).unwrap().0, 3);
        assert_eq!(minrank(&Digraph::complete(4).into(), &f2).unwrap().0, 1);
        let (k, a) = minrank(&Digraph::directed_cycle(3).into(), &f2).unwrap();
        assert_eq!(k, 2);
        assert!(a.fits(&Digraph::directed_cycle(3)));
        assert_eq!(minrank(&undirected_cycle(5).into(), &f2).unwrap().0, 3);
        assert_eq!(minrank(&Digraph::new(0).into(), &f2).unwrap().0, 0);
        assert_eq!(minrank(&Digraph::new(1).into(), &f2).unwrap().0, 1);
    }

    #[test]
    fn c3_witness_is_deterministic() {
        let (_, a) = minrank(&Digraph::directed_cycle(3).into(), &f(2)).unwrap();
        let expected = Matrix::from_u8_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        assert_eq!(a.matrix, expected);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            minrank(&Digraph::new(7).into(), &f(2)),
            Err(Error::SizeLimitExceeded { .. })
        ));
        assert!(matches!(
            minrank(&Digraph::new(5).into(), &f(4)),
            Err(Error::SizeLimitExceeded { .. })
        ));
        assert_eq!(minrank_with_cap(&Digraph::new(5).into(), &f(4), 5).unwrap().0, 5);
        assert!(minrank_brute_force(&Digraph::new(4).into(), &f(3)).is_err());
    }

    #[test]
    fn subspace_counts_are_gaussian_binomials() {
        // [4 choose k]_2 = 1, 15, 35, 15, 1 and [3 choose k]_3 = 1, 13, 13, 1
        for (q, m, counts) in [(2u32, 4usize, vec![15, 35, 15, 1]), (3, 3, vec![13, 13, 1])] {
            let field = f(q);
            let mut e = Subspaces::new(&field, m);
            for (k, &expected) in (1..=m).zip(&counts) {
                let mut n = 0;
                e.for_each(k, &mut |span| {
                    assert_eq!(span.len(), (q as usize).pow(k as u32) - 1);
                    n += 1;
                    false
                });
                assert_eq!(n, expected);
            }
        }
    }

    fn histogram(n: usize, q: u32) -> BTreeMap<usize, usize> {
        let field = f(q);
        let mut h = BTreeMap::new();
        for g in Digraph::all_labelled(n) {
            *h.entry(minrank(&g.into(), &field).unwrap().0).or_insert(0) += 1;
        }
        h
    }

    #[test]
    fn histograms_match_reference_counts() {
        let small: BTreeMap<usize, usize> = [(1, 1), (2, 38), (3, 25)].into_iter().collect();
        assert_eq!(histogram(3, 2), small);
        assert_eq!(histogram(3, 3), small);
        assert_eq!(histogram(2, 3), [(1, 1), (2, 3)].into_iter().collect());
        assert_eq!(
            histogram(4, 2),
            [(1, 1), (2, 920), (3, 2632), (4, 543)].into_iter().collect()
        );
    }

    #[test]
    fn agrees_with_brute_force_on_two_vertices() {
        for q in [2, 3, 4, 5] {
            let field = f(q);
            for g in Digraph::all_labelled(2) {
                let p: SideInfoProblem = g.into();
                assert_eq!(minrank(&p, &field).unwrap().0, minrank_brute_force(&p, &field).unwrap());
            }
        }
    }

    #[test]
    fn one_iff_complete() {
        for n in 1..=4 {
            for g in Digraph::all_labelled(n) {
                let complete = g.arc_count() == n * (n - 1);
                assert_eq!(minrank(&g.into(), &f(2)).unwrap().0 == 1, complete);
            }
        }
    }
}
