//! The quotient ring `R_f = R[x]/<f>`, its companion matrix and regular
//! representation, and the row algebra `M_{1,n}(R, f)`.

use crate::error::{Error, Result};
use crate::linalg::RingMatrix;
use crate::poly::Poly;
use crate::ring::{RingElem, RingSpec};

/// Element of `R_f` as its coefficient vector `rho_f(g)` of length `deg f`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct QuotElem {
    coeffs: Vec<RingElem>,
}

impl QuotElem {
    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<RingElem> {
        self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }
}

/// The ambient space `R[x]/<f>` for a monic `f` of degree `n >= 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AmbientSpace {
    ring: RingSpec,
    f: Poly,
    companion: RingMatrix,
}

/// Hamming weight of a coefficient vector.
pub fn hamming_weight(ring: &RingSpec, v: &[RingElem]) -> usize {
    v.iter().filter(|e| !ring.is_zero(e)).count()
}

impl AmbientSpace {
    pub fn new(ring: &RingSpec, f: Poly) -> Result<Self> {
        if !f.is_monic(ring) {
            return Err(Error::NotMonic);
        }
        if f.degree() == Some(0) {
            return Err(Error::InvalidInput("f must have degree at least 1".into()));
        }
        let companion = companion(ring, &f)?;
        Ok(AmbientSpace { ring: ring.clone(), f, companion })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.f.degree().unwrap()
    }

    /// Feedback coefficients `(f_0, ..., f_{n-1})` of `f = x^n - sum f_i x^i`.
    pub fn feedback(&self) -> Vec<RingElem> {
        (0..self.n()).map(|i| self.ring.neg(&self.f.coeff(&self.ring, i))).collect()
    }

    pub fn companion(&self) -> &RingMatrix {
        &self.companion
    }

    /// Validating constructor from a coefficient vector of length `n`.
    pub fn element(&self, coeffs: Vec<RingElem>) -> Result<QuotElem> {
        if coeffs.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: coeffs.len() });
        }
        if coeffs.iter().any(|c| !self.ring.contains(c)) {
            return Err(Error::InvalidInput("coefficient outside the base ring".into()));
        }
        Ok(QuotElem { coeffs })
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> QuotElem {
        self.from_poly(&Poly::from_ints(&self.ring, coeffs))
    }

    /// Reduction of an arbitrary polynomial modulo `f`.
    pub fn from_poly(&self, g: &Poly) -> QuotElem {
        let red = g.rem_monic(&self.f, &self.ring);
        QuotElem { coeffs: (0..self.n()).map(|i| red.coeff(&self.ring, i)).collect() }
    }

    pub fn zero(&self) -> QuotElem {
        QuotElem { coeffs: vec![self.ring.zero(); self.n()] }
    }

    pub fn one(&self) -> QuotElem {
        self.from_poly(&Poly::one(&self.ring))
    }

    pub fn x(&self) -> QuotElem {
        self.from_poly(&Poly::x(&self.ring))
    }

    pub fn monomial(&self, c: RingElem, k: usize) -> QuotElem {
        self.from_poly(&Poly::monomial(&self.ring, c, k))
    }

    pub fn is_zero(&self, g: &QuotElem) -> bool {
        g.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    fn check(&self, g: &QuotElem) {
        assert_eq!(g.coeffs.len(), self.n(), "element from a different ambient space");
    }

    pub fn add(&self, a: &QuotElem, b: &QuotElem) -> QuotElem {
        self.check(a);
        self.check(b);
        QuotElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.ring.add(x, y)).collect() }
    }

    pub fn sub(&self, a: &QuotElem, b: &QuotElem) -> QuotElem {
        self.check(a);
        self.check(b);
        QuotElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.ring.sub(x, y)).collect() }
    }

    pub fn scale(&self, a: &QuotElem, c: &RingElem) -> QuotElem {
        QuotElem { coeffs: a.coeffs.iter().map(|x| self.ring.mul(x, c)).collect() }
    }

    /// Product modulo `f`.
    pub fn mul(&self, a: &QuotElem, b: &QuotElem) -> QuotElem {
        self.check(a);
        self.check(b);
        self.from_poly(&a.to_poly().mul(&b.to_poly(), &self.ring))
    }

    /// Checked product for inputs of unknown provenance.
    pub fn try_mul(&self, a: &QuotElem, b: &QuotElem) -> Result<QuotElem> {
        for g in [a, b] {
            if g.coeffs.len() != self.n() {
                return Err(Error::DimensionMismatch { expected: self.n(), found: g.coeffs.len() });
            }
        }
        Ok(self.mul(a, b))
    }

    pub fn pow(&self, a: &QuotElem, mut e: u64) -> QuotElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `h(w)` computed in `R_f`.
    pub fn eval_poly(&self, h: &Poly, w: &QuotElem) -> QuotElem {
        h.coeffs().iter().rev().fold(self.zero(), |acc, c| {
            let mut next = self.mul(&acc, w);
            next.coeffs[0] = self.ring.add(&next.coeffs[0], c);
            next
        })
    }

    /// Matrix with rows `rho_f(g), rho_f(x g), ..., rho_f(x^{n-1} g)`.
    pub fn regular_rep(&self, g: &QuotElem) -> RingMatrix {
        self.check(g);
        let mut rows = Vec::with_capacity(self.n());
        let mut cur = g.coeffs.clone();
        for _ in 0..self.n() {
            rows.push(cur.clone());
            cur = self.companion.left_mul_vec(&cur);
        }
        RingMatrix::from_rows(&self.ring, self.n(), rows).unwrap()
    }

    /// Product in `M_{1,n}(R, f)`: `a * M(b)`.
    pub fn row_product(&self, a: &[RingElem], b: &[RingElem]) -> Result<Vec<RingElem>> {
        for v in [a, b] {
            if v.len() != self.n() {
                return Err(Error::DimensionMismatch { expected: self.n(), found: v.len() });
            }
        }
        let mb = self.regular_rep(&QuotElem { coeffs: b.to_vec() });
        Ok(mb.left_mul_vec(a))
    }

    /// Membership test for `M_n(R, f)`: the centralizer of `E_f`.
    pub fn commutes_with_companion(&self, m: &RingMatrix) -> bool {
        if m.rows() != self.n() || m.cols() != self.n() {
            return false;
        }
        let e = &self.companion;
        m.mul(e).unwrap() == e.mul(m).unwrap()
    }

    /// `tr(g) = sum_i pi_i(x^i g)`.
    pub fn trace_map(&self, g: &QuotElem) -> RingElem {
        self.check(g);
        let mut acc = self.ring.zero();
        let mut cur = g.coeffs.clone();
        for i in 0..self.n() {
            acc = self.ring.add(&acc, &cur[i]);
            cur = self.companion.left_mul_vec(&cur);
        }
        acc
    }

    pub fn weight(&self, g: &QuotElem) -> usize {
        hamming_weight(&self.ring, &g.coeffs)
    }

    /// Number of elements, `|R|^n`.
    pub fn cardinality(&self) -> Option<u128> {
        self.ring.cardinality()?.checked_pow(self.n() as u32)
    }

    /// Every element of `R_f`; intended for small ambients.
    pub fn elements(&self) -> impl Iterator<Item = QuotElem> + '_ {
        let size = self.ring.cardinality().unwrap();
        let total = self.cardinality().expect("ambient too large to enumerate");
        (0..total).map(move |mut idx| {
            let coeffs = (0..self.n())
                .map(|_| {
                    let c = self.ring.from_index(idx % size);
                    idx /= size;
                    c
                })
                .collect();
            QuotElem { coeffs }
        })
    }
}

/// Companion matrix: identity on the superdiagonal, last row `(f_0, ..., f_{n-1})`
/// for `f = x^n - sum f_i x^i`.
pub fn companion(ring: &RingSpec, f: &Poly) -> Result<RingMatrix> {
    if !f.is_monic(ring) {
        return Err(Error::NotMonic);
    }
    let n = f.degree().unwrap();
    let mut m = RingMatrix::zeros(ring, n, n);
    for i in 0..n.saturating_sub(1) {
        m.set(i, i + 1, ring.one());
    }
    for j in 0..n {
        m.set(n - 1, j, ring.neg(&f.coeff(ring, j)));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> RingSpec {
        RingSpec::new(2, 2, 1).unwrap()
    }

    fn cyclic3() -> AmbientSpace {
        let r = z4();
        AmbientSpace::new(&r, Poly::from_ints(&r, &[-1, 0, 0, 1])).unwrap()
    }

    fn poly_example() -> AmbientSpace {
        let r = z4();
        AmbientSpace::new(&r, Poly::from_ints(&r, &[-1, -1, -2, 1])).unwrap()
    }

    #[test]
    fn quot_mul_examples() {
        let a = cyclic3();
        let x = a.x();
        let x2 = a.from_ints(&[0, 0, 1]);
        assert_eq!(a.mul(&x, &x2), a.one());
        let b = poly_example();
        let w = b.from_ints(&[1, 0, 1]);
        assert_eq!(b.mul(&w, &w), b.from_ints(&[3, 3, 3]));
        assert_eq!(b.mul(&w, &b.one()), w);
    }

    #[test]
    fn companion_examples() {
        let r = z4();
        assert_eq!(cyclic3().companion(), &RingMatrix::from_ints(&r, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]));
        assert_eq!(poly_example().companion(), &RingMatrix::from_ints(&r, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 2]]));
        assert_eq!(companion(&r, &Poly::from_ints(&r, &[-3, 1])).unwrap(), RingMatrix::from_ints(&r, &[&[3]]));
        assert_eq!(companion(&r, &Poly::from_ints(&r, &[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn regular_rep_examples() {
        let r = z4();
        let a = cyclic3();
        assert_eq!(&a.regular_rep(&a.x()), a.companion());
        let e1 = a.from_ints(&[3, 3, 3]);
        assert_eq!(a.regular_rep(&e1), RingMatrix::from_ints(&r, &[&[3, 3, 3], &[3, 3, 3], &[3, 3, 3]]));
        assert_eq!(a.regular_rep(&a.one()), RingMatrix::identity(&r, 3));
    }

    #[test]
    fn row_product_examples() {
        let r = z4();
        let a = cyclic3();
        let v = |c: &[i64]| c.iter().map(|&x| r.from_i64(x)).collect::<Vec<_>>();
        assert_eq!(a.row_product(&v(&[0, 1, 0]), &v(&[0, 1, 0])).unwrap(), v(&[0, 0, 1]));
        let b = poly_example();
        assert_eq!(b.row_product(&v(&[1, 0, 1]), &v(&[1, 0, 1])).unwrap(), v(&[3, 3, 3]));
        assert_eq!(b.row_product(&v(&[2, 1, 3]), &v(&[1, 0, 0])).unwrap(), v(&[2, 1, 3]));
        assert!(b.row_product(&v(&[1, 0]), &v(&[1, 0, 0])).is_err());
    }

    #[test]
    fn commutes_examples() {
        let r = z4();
        let a = cyclic3();
        let g = a.from_ints(&[1, 2, 3]);
        assert!(a.commutes_with_companion(&a.regular_rep(&g)));
        let d = RingMatrix::diagonal(&r, &[r.from_u64(1), r.from_u64(2), r.from_u64(3)]);
        assert!(!a.commutes_with_companion(&d));
        assert!(a.commutes_with_companion(&RingMatrix::identity(&r, 3)));
    }

    #[test]
    fn trace_map_examples() {
        let r = z4();
        let a = cyclic3();
        assert_eq!(a.trace_map(&a.one()), r.from_u64(3));
        assert_eq!(a.trace_map(&a.from_ints(&[3, 3, 3])), r.one());
        assert_eq!(a.trace_map(&a.zero()), r.zero());
    }
}
