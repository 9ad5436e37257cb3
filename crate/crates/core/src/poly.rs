//! Dense univariate polynomials over a Galois ring.

use crate::error::{Error, Result};
use crate::ring::{Embedding, RingElem, RingSpec};

/// Polynomial with ascending coefficients; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    coeffs: Vec<RingElem>,
}

fn elem_is_zero(a: &RingElem) -> bool {
    a.coeffs().iter().all(|&c| c == 0)
}

impl Poly {
    pub fn new(mut coeffs: Vec<RingElem>) -> Self {
        while coeffs.last().is_some_and(elem_is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: RingElem) -> Self {
        Poly::new(vec![c])
    }

    pub fn one(ring: &RingSpec) -> Self {
        Poly::constant(ring.one())
    }

    /// `c x^k`
    pub fn monomial(ring: &RingSpec, c: RingElem, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn x(ring: &RingSpec) -> Self {
        Poly::monomial(ring, ring.one(), 1)
    }

    /// From integer coefficients of `Z_{p^r}` (reduced, may be negative).
    pub fn from_ints(ring: &RingSpec, coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| ring.from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<RingElem> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, ring: &RingSpec, i: usize) -> RingElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&RingElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self, ring: &RingSpec) -> bool {
        self.leading().is_some_and(|c| ring.is_one(c))
    }

    pub fn add(&self, other: &Poly, ring: &RingSpec) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| ring.add(&self.coeff(ring, i), &other.coeff(ring, i))).collect())
    }

    pub fn sub(&self, other: &Poly, ring: &RingSpec) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| ring.sub(&self.coeff(ring, i), &other.coeff(ring, i))).collect())
    }

    pub fn neg(&self, ring: &RingSpec) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| ring.neg(c)).collect())
    }

    pub fn scale(&self, c: &RingElem, ring: &RingSpec) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| ring.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, ring: &RingSpec) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if elem_is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Division with remainder by a divisor whose leading coefficient is a unit.
    pub fn div_rem(&self, divisor: &Poly, ring: &RingSpec) -> Result<(Poly, Poly)> {
        let d = divisor.degree().ok_or_else(|| Error::InvalidInput("division by zero polynomial".into()))?;
        let lead_inv = ring.invert(divisor.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![ring.zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let c = ring.mul(&rem[k], &lead_inv);
            if elem_is_zero(&c) {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k - d + j] = ring.sub(&rem[k - d + j], &ring.mul(&c, b));
            }
            quot[k - d] = c;
        }
        rem.truncate(d);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &Poly, ring: &RingSpec) -> Poly {
        let d = modulus.degree().expect("nonzero modulus");
        debug_assert!(modulus.is_monic(ring));
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if !elem_is_zero(&c) {
                for (j, b) in modulus.coeffs.iter().enumerate() {
                    rem[k - d + j] = ring.sub(&rem[k - d + j], &ring.mul(&c, b));
                }
            }
            rem.pop();
        }
        Poly::new(rem)
    }

    pub fn eval(&self, ring: &RingSpec, x: &RingElem) -> RingElem {
        self.coeffs
            .iter()
            .rev()
            .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
    }

    pub fn derivative(&self, ring: &RingSpec) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| ring.scale_int(c, i as u64))
                .collect(),
        )
    }

    /// Scale to a monic polynomial; requires a unit leading coefficient.
    pub fn make_monic(&self, ring: &RingSpec) -> Result<Poly> {
        match self.leading() {
            None => Ok(Poly::zero()),
            Some(lc) => Ok(self.scale(&ring.invert(lc)?, ring)),
        }
    }

    /// `base^exp mod modulus` for a monic modulus.
    pub fn pow_mod(&self, exp: u128, modulus: &Poly, ring: &RingSpec) -> Poly {
        let mut acc = Poly::one(ring).rem_monic(modulus, ring);
        let mut base = self.rem_monic(modulus, ring);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, ring).rem_monic(modulus, ring);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, ring).rem_monic(modulus, ring);
            }
        }
        acc
    }

    /// Coefficientwise reduction into `field` (the residue field of `ring`).
    pub fn residue(&self, ring: &RingSpec, field: &RingSpec) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| field.elem_reduced(ring.residue(c).coeffs()))
                .collect(),
        )
    }

    /// Reinterpret residue-field coefficients as ring coefficients.
    pub fn lift(&self, field: &RingSpec, ring: &RingSpec) -> Poly {
        debug_assert_eq!(field.m(), ring.m());
        Poly::new(self.coeffs.iter().map(|c| ring.elem_reduced(c.coeffs())).collect())
    }

    pub fn map(&self, embedding: &Embedding) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| embedding.apply(c)).collect())
    }

    /// Key ordering polynomials by degree, then by residue keys of the
    /// coefficients from the top down.
    pub fn sort_key(&self, ring: &RingSpec) -> (usize, Vec<u128>) {
        (
            self.coeffs.len(),
            self.coeffs.iter().rev().map(|c| ring.index_of(c)).collect(),
        )
    }
}

/// Monic gcd over a field.
pub fn gcd_field(a: &Poly, b: &Poly, field: &RingSpec) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b, field).expect("field division");
        a = b;
        b = r;
    }
    a.make_monic(field).expect("field leading coefficient")
}

/// Extended Euclid over a field: returns `(g, s, t)` with `s a + t b = g` monic.
pub fn ext_gcd_field(a: &Poly, b: &Poly, field: &RingSpec) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(field), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1, field).expect("field division");
        let s = s0.sub(&q.mul(&s1, field), field);
        let t = t0.sub(&q.mul(&t1, field), field);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.leading() {
        None => (r0, s0, t0),
        Some(lc) => {
            let inv = field.invert(lc).expect("field leading coefficient");
            (r0.scale(&inv, field), s0.scale(&inv, field), t0.scale(&inv, field))
        }
    }
}
