//! Finite fields `F_q` for prime powers `q <= 16`.
//!
//! Elements are integer indices in `0..q` and every operation is a table
//! lookup. For a prime `q` the index is the residue itself. For `q = p^d`
//! the index of `c_0 + c_1 x + ... + c_{d-1} x^{d-1}` is `sum c_i p^i`, and
//! products are reduced modulo the lexicographically smallest monic
//! irreducible polynomial of degree `d` (coefficients compared from
//! `x^{d-1}` down to the constant term).

mod matrix;
mod vector;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use matrix::Matrix;
pub use vector::{enumerate_normal_vectors, normal_vector_count, FVector};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u32 = 16;

/// An element of some [`FiniteField`], stored as its index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u8);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic context for `F_q`. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    q: u8,
    p: u8,
    degree: u8,
    /// Coefficients `c_0..c_{d-1}` of the monic modulus (leading 1 omitted).
    /// Empty for prime fields.
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    primitive: Fe,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive)
            .finish()
    }
}

/// Splits `q` into `(p, d)` with `q = p^d`, `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut degree = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        degree += 1;
    }
    (rest == 1).then_some((p, degree))
}

impl FiniteField {
    /// Builds `F_q`.
    pub fn new(q: u32) -> Result<Self> {
        let (p, degree) = prime_power(q).ok_or(Error::NotAPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::UnsupportedFieldOrder {
                order: q,
                max: MAX_FIELD_ORDER,
            });
        }
        let (p, degree, qs) = (p as usize, degree as usize, q as usize);

        let modulus = if degree == 1 {
            Vec::new()
        } else {
            smallest_irreducible(p, degree)
        };

        let digits = |mut x: usize| -> Vec<usize> {
            let mut out = vec![0; degree];
            for d in out.iter_mut() {
                *d = x % p;
                x /= p;
            }
            out
        };
        let undigits = |ds: &[usize]| -> usize { ds.iter().rev().fold(0, |acc, &d| acc * p + d) };

        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..qs {
            let da = digits(a);
            for b in 0..qs {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = undigits(&sum) as u8;
                mul[a * qs + b] = if degree == 1 {
                    ((a * b) % p) as u8
                } else {
                    undigits(&poly_mulmod(&da, &db, &modulus, p)) as u8
                };
            }
        }

        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..qs {
            neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u8;
            }
        }

        let mut field = FiniteField {
            q: q as u8,
            p: p as u8,
            degree: degree as u8,
            modulus: modulus.iter().map(|&c| c as u8).collect(),
            add,
            mul,
            neg,
            inv,
            primitive: Fe::ONE,
        };
        field.primitive = (1..qs)
            .map(|g| Fe(g as u8))
            .find(|&g| field.multiplicative_order(g) == qs - 1)
            .expect("multiplicative group of a finite field is cyclic");
        Ok(field)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.q as usize
    }

    #[inline]
    pub fn characteristic(&self) -> usize {
        self.p as usize
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    /// Constant-to-`x^{d-1}` coefficients of the reducing polynomial; empty
    /// for prime fields.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// The generator of `F_q^*` with the smallest index.
    #[inline]
    pub fn primitive_element(&self) -> Fe {
        self.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q).map(Fe)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.q).map(Fe)
    }

    /// Maps an integer to the element `n * 1`.
    pub fn from_int(&self, n: i64) -> Fe {
        let p = self.p as i64;
        Fe(n.rem_euclid(p) as u8)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.add[a.index() * self.order() + b.index()])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.neg[a.index()])
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.mul[a.index() * self.order() + b.index()])
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        (!a.is_zero()).then(|| Fe(self.inv[a.index()]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Order of `a` in `F_q^*`; zero for `a = 0`.
    pub fn multiplicative_order(&self, a: Fe) -> usize {
        if a.is_zero() {
            return 0;
        }
        let mut x = a;
        let mut n = 1;
        while x != Fe::ONE {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn sum<I: IntoIterator<Item = Fe>>(&self, it: I) -> Fe {
        it.into_iter().fold(Fe::ZERO, |acc, x| self.add(acc, x))
    }
}

/// Polynomials over `F_p` as little-endian coefficient vectors.
fn poly_trim(mut a: Vec<usize>) -> Vec<usize> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(out)
}

/// Remainder of `a` modulo a monic `m` (given in full, leading 1 included).
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn poly_mulmod(a: &[usize], b: &[usize], modulus_low: &[usize], p: usize) -> Vec<usize> {
    let mut m = modulus_low.to_vec();
    m.push(1);
    let mut r = poly_rem(&poly_mul(a, b, p), &m, p);
    r.resize(modulus_low.len(), 0);
    r
}

/// Monic polynomials of degree `d`, lowest coefficients first, ordered by
/// `(c_{d-1}, ..., c_0)` lexicographically.
fn monic_polys(p: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = p.pow(d as u32);
    (0..count).map(move |mut t| {
        let mut c = vec![0; d + 1];
        for slot in c.iter_mut().take(d) {
            *slot = t % p;
            t /= p;
        }
        c[d] = 1;
        c
    })
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let d = f.len() - 1;
    (1..=d / 2).all(|e| monic_polys(p, e).all(|g| !poly_rem(f, &g, p).is_empty()))
}

fn smallest_irreducible(p: usize, d: usize) -> Vec<usize> {
    let mut f = monic_polys(p, d)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree");
    f.pop();
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    const SUPPORTED: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

    #[test]
    fn rejects_non_prime_powers() {
        for q in [0, 1, 6, 10, 12, 14, 15] {
            assert_eq!(FiniteField::new(q), Err(Error::NotAPrimePower(q)));
        }
        assert!(matches!(
            FiniteField::new(25),
            Err(Error::UnsupportedFieldOrder { order: 25, .. })
        ));
    }

    #[test]
    fn small_fields() {
        let f2 = FiniteField::new(2).unwrap();
        assert_eq!(f2.add(Fe::ONE, Fe::ONE), Fe::ZERO);

        let f3 = FiniteField::new(3).unwrap();
        assert_eq!(f3.primitive_element(), Fe(2));

        let f4 = FiniteField::new(4).unwrap();
        assert_eq!((f4.characteristic(), f4.degree()), (2, 2));
        // x^2 + x + 1
        assert_eq!(f4.modulus(), &[1, 1]);
        for x in f4.nonzero_elements() {
            assert!(!f4.mul(x, x).is_zero());
        }
    }

    #[test]
    fn chosen_moduli() {
        assert_eq!(FiniteField::new(8).unwrap().modulus(), &[1, 1, 0]);
        assert_eq!(FiniteField::new(9).unwrap().modulus(), &[1, 0]);
        assert_eq!(FiniteField::new(16).unwrap().modulus(), &[1, 1, 0, 0]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in SUPPORTED {
            let f = FiniteField::new(q).unwrap();
            let els: Vec<Fe> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, Fe::ZERO), a);
                assert_eq!(f.mul(a, Fe::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                if let Some(ia) = f.inv(a) {
                    assert_eq!(f.mul(a, ia), Fe::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            // no zero divisors
            for a in f.nonzero_elements() {
                for b in f.nonzero_elements() {
                    assert!(!f.mul(a, b).is_zero(), "q={q}");
                }
            }
            let g = f.primitive_element();
            assert_eq!(f.multiplicative_order(g), f.order() - 1);
            assert!(f
                .nonzero_elements()
                .take_while(|&x| x < g)
                .all(|x| f.multiplicative_order(x) != f.order() - 1));
        }
    }
}
