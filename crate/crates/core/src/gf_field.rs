//! Finite fields GF(q) for prime powers q, as dense lookup tables.
//!
//! Elements are indices `0..q`. An index encodes the coefficients of a
//! polynomial over GF(p) in base p, lowest degree first, so in GF(4) the
//! element `x` is index 2 and `x + 1` is index 3. Index 0 is the additive and
//! index 1 the multiplicative identity.
//!
//! The extension modulus is the smallest monic irreducible polynomial of the
//! required degree, ordered by the base-p value of its coefficient vector.
//! For prime q this is the polynomial `x`, which makes the tables plain
//! arithmetic mod q.

use crate::error::{Error, Result};

/// Largest field order built by [`Field::new`].
pub const DEFAULT_FIELD_CAP: u64 = 64;

/// Returns `(p, n)` with `q = p^n` and p prime, or `None` when q is not a
/// prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power(q).is_some()
}

fn smallest_prime_factor(q: u64) -> u64 {
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    q
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Arithmetic tables for GF(q). Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    q: u32,
    p: u32,
    n: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl Field {
    pub fn new(q: u64) -> Result<Field> {
        Field::with_cap(q, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(q: u64, cap: u64) -> Result<Field> {
        let (p, n) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > cap {
            return Err(Error::FieldTooLarge { q, cap });
        }
        let (q, p) = (q as u32, p as u32);
        let modulus = smallest_irreducible(p, n);

        let polys: Vec<Vec<u32>> = (0..q).map(|i| digits(i, p, n as usize)).collect();
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                let sum: Vec<u32> = polys[a]
                    .iter()
                    .zip(&polys[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * qs + b] = undigits(&sum, p);
                let prod = poly_rem(&poly_mul(&polys[a], &polys[b], p), &modulus, p);
                mul[a * qs + b] = undigits(&prod, p);
            }
        }
        let neg = (0..qs)
            .map(|a| (0..q).find(|&b| add[a * qs + b as usize] == 0).unwrap())
            .collect();
        let inv = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q)
                        .find(|&b| mul[a * qs + b as usize] == 1)
                        .expect("nonzero element without inverse: modulus not irreducible")
                }
            })
            .collect();

        Ok(Field {
            q,
            p,
            n,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Coefficients of the modulus, lowest degree first, leading 1 included.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::ElementOutOfRange { index, q: self.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    #[inline]
    fn at(&self, a: FieldElement, b: FieldElement) -> usize {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        (a.0 * self.q + b.0) as usize
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[self.at(a, b)])
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[self.at(a, b)])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement(self.inv[a.0 as usize]))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut x = a;
        let mut order = 1;
        while x != FieldElement::ONE {
            x = self.mul(x, a);
            order += 1;
        }
        Some(order)
    }
}

fn digits(mut i: u32, p: u32, n: usize) -> Vec<u32> {
    let mut d = vec![0; n];
    for c in d.iter_mut() {
        *c = i % p;
        i /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m`, padded to `deg m` coefficients.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let deg = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > deg {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - deg;
            for (i, &c) in m[..deg].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * lead) % p;
            }
        }
    }
    r.resize(deg, 0);
    r
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let n = m.len() - 1;
    for d in 1..=n / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor = digits(code, p, d);
            divisor.push(1);
            if trim(poly_rem(m, &divisor, p)).is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    (0..p.pow(n))
        .map(|code| {
            let mut m = digits(code, p, n as usize);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("an irreducible polynomial exists in every degree")
}
