//! Isomorphisms `theta: R[x]/<h> -> R[x]/<f>`, `x -> omega`, and when they
//! are Hamming isometries.

use crate::error::{Error, Result};
use crate::linalg::{MonomialWitness, RingMatrix};
use crate::poly::Poly;
use crate::quotient::{hamming_weight, AmbientSpace, QuotElem};
use crate::ring::{RingElem, RingSpec};

/// `theta` built from `omega`: `W` has rows `rho_f(omega^k)`, and `h` is the
/// monic polynomial of degree `n` with `h(omega) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaWitness {
    pub ambient: AmbientSpace,
    pub omega: QuotElem,
    pub w: RingMatrix,
    pub det_w: RingElem,
    pub h: Poly,
}

impl OmegaWitness {
    /// `theta(a) = sum a_i omega^i = rho(a) W`, for `a` in `R[x]/<h>`.
    pub fn theta(&self, a: &[RingElem]) -> Result<QuotElem> {
        let n = self.ambient.n();
        if a.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: a.len() });
        }
        self.ambient.element(self.w.left_mul_vec(a))
    }

    /// The source ambient `R[x]/<h>`.
    pub fn source(&self) -> AmbientSpace {
        AmbientSpace::new(self.ambient.ring(), self.h.clone()).expect("h is monic of degree n")
    }
}

pub fn build_theta(ambient: &AmbientSpace, omega: &QuotElem) -> Result<OmegaWitness> {
    let ring = ambient.ring();
    let n = ambient.n();
    if omega.coeffs().len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: omega.coeffs().len() });
    }
    let mut rows = Vec::with_capacity(n);
    let mut pw = ambient.one();
    for _ in 0..n {
        rows.push(pw.coeffs().to_vec());
        pw = ambient.mul(&pw, omega);
    }
    let w = RingMatrix::from_rows(ring, n, rows)?;
    let det_w = w.determinant()?;
    if !ring.is_unit(&det_w) {
        return Err(Error::Singular);
    }
    // [h_0 .. h_{n-1}] = rho(omega^n) W^{-1}, h = x^n - sum h_i x^i
    let c = w.inverse()?.left_mul_vec(pw.coeffs());
    let mut coeffs: Vec<RingElem> = c.iter().map(|v| ring.neg(v)).collect();
    coeffs.push(ring.one());
    let h = Poly::new(coeffs);
    if !ambient.is_zero(&ambient.eval_poly(&h, omega)) {
        return Err(Error::Certificate("h(omega) != 0".into()));
    }
    Ok(OmegaWitness { ambient: ambient.clone(), omega: omega.clone(), w, det_w, h })
}

/// A codeword whose weight changes under `theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub codeword: Vec<RingElem>,
    pub image: Vec<RingElem>,
    pub weight_before: usize,
    pub weight_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsometryKind {
    Isometric { target_h: Poly, monomial: MonomialWitness },
    IsomorphicNotMonomial { counterexample: Counterexample },
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryVerdict {
    pub kind: IsometryKind,
    pub witness: Option<OmegaWitness>,
    /// What the shape criterion on `(f, omega)` predicts.
    pub predicted_isometric: bool,
}

impl IsometryVerdict {
    pub fn is_isometric(&self) -> bool {
        matches!(self.kind, IsometryKind::Isometric { .. })
    }

    /// Whether the shape criterion and the direct test on `W` agree.
    pub fn criterion_agrees(&self) -> bool {
        match self.kind {
            IsometryKind::NotApplicable => !self.predicted_isometric,
            _ => self.predicted_isometric == self.is_isometric(),
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// `Some((k, c))` when `g = c x^k` with `c` a unit.
fn unit_monomial(ring: &RingSpec, g: &[RingElem]) -> Option<(usize, RingElem)> {
    let nz: Vec<usize> = (0..g.len()).filter(|&i| !ring.is_zero(&g[i])).collect();
    match nz.as_slice() {
        [k] if ring.is_unit(&g[*k]) => Some((*k, g[*k].clone())),
        _ => None,
    }
}

/// Shapes of `(f, omega)` with a monomial `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialShape {
    /// `f = x^n - f0`, `f0` a unit, `omega = w x^i`, `gcd(n, i) = 1`
    Constant { f0: RingElem, i: usize, w: RingElem },
    /// `f = x^n - f1 x`, `f1` a unit, `omega = w x^j`, `gcd(n - 1, j) = 1`
    Linear { f1: RingElem, j: usize, w: RingElem },
    /// `omega = w x` for any other `f`: `W` is diagonal, `theta` rescales `x`
    Scaling { w: RingElem },
    /// `n = 1`, where `W = [1]`
    Degree1,
}

pub fn monomial_shape(ambient: &AmbientSpace, omega: &QuotElem) -> Option<MonomialShape> {
    let ring = ambient.ring();
    let n = ambient.n();
    if n == 1 {
        return Some(MonomialShape::Degree1);
    }
    let fb = ambient.feedback();
    let (k, w) = unit_monomial(ring, omega.coeffs())?;
    if k == 0 {
        return None;
    }
    if fb[1..].iter().all(|c| ring.is_zero(c)) && ring.is_unit(&fb[0]) && gcd(n, k) == 1 {
        return Some(MonomialShape::Constant { f0: fb[0].clone(), i: k, w });
    }
    if ring.is_zero(&fb[0])
        && ring.is_unit(&fb[1])
        && fb[2..].iter().all(|c| ring.is_zero(c))
        && gcd(n - 1, k) == 1
    {
        return Some(MonomialShape::Linear { f1: fb[1].clone(), j: k, w });
    }
    if k == 1 {
        return Some(MonomialShape::Scaling { w });
    }
    None
}

fn counterexample(wit: &OmegaWitness) -> Counterexample {
    let ring = wit.ambient.ring();
    let n = wit.ambient.n();
    let make = |codeword: Vec<RingElem>| {
        let image = wit.w.left_mul_vec(&codeword);
        Counterexample {
            weight_before: hamming_weight(ring, &codeword),
            weight_after: hamming_weight(ring, &image),
            codeword,
            image,
        }
    };
    let unit_vec = |k: usize, c: RingElem| {
        let mut v = vec![ring.zero(); n];
        v[k] = c;
        v
    };
    // lowest x^k whose image is not of weight one
    if let Some(k) = (0..n).find(|&k| hamming_weight(ring, wit.w.row(k)) != 1) {
        return make(unit_vec(k, ring.one()));
    }
    // every row has one entry: some entry is a non-unit, or two rows share a column
    for a in 0..n {
        let (col, entry) = (0..n).map(|j| (j, wit.w.get(a, j))).find(|(_, e)| !ring.is_zero(e)).unwrap();
        let v = ring.valuation(entry);
        if v > 0 {
            return make(unit_vec(a, ring.from_u64(ring.p_pow(ring.r() - v))));
        }
        for b in a + 1..n {
            let wb = wit.w.get(b, col);
            if !ring.is_zero(wb) {
                let mut c = unit_vec(a, ring.one());
                let t = ring.mul(entry, &ring.invert(wb).unwrap());
                c[b] = ring.neg(&t);
                return make(c);
            }
        }
    }
    unreachable!("W is not monomial, so some codeword changes weight")
}

pub fn classify_monomial(ambient: &AmbientSpace, omega: &QuotElem) -> Result<IsometryVerdict> {
    let predicted_isometric = monomial_shape(ambient, omega).is_some();
    let wit = match build_theta(ambient, omega) {
        Ok(w) => w,
        Err(Error::Singular) => {
            return Ok(IsometryVerdict { kind: IsometryKind::NotApplicable, witness: None, predicted_isometric })
        }
        Err(e) => return Err(e),
    };
    let kind = match wit.w.monomial_witness() {
        Some(monomial) => IsometryKind::Isometric { target_h: wit.h.clone(), monomial },
        None => IsometryKind::IsomorphicNotMonomial { counterexample: counterexample(&wit) },
    };
    Ok(IsometryVerdict { kind, witness: Some(wit), predicted_isometric })
}

/// Closed form of the target for the monomial shapes: `x^n - w^n f0^i`,
/// `x^n - w^{n-1} f1^j x`, and `w^n f(x / w)` for a scaling. Checked against
/// `build_theta`.
pub fn isometric_target(ambient: &AmbientSpace, omega: &QuotElem) -> Result<Poly> {
    let ring = ambient.ring();
    let n = ambient.n();
    let shape = monomial_shape(ambient, omega)
        .ok_or_else(|| Error::ConditionsUnmet("f and omega are not of a monomial shape".into()))?;
    let target = match shape {
        MonomialShape::Constant { f0, i, w } => {
            let c = ring.mul(&ring.pow(&w, n as u64), &ring.pow(&f0, i as u64));
            Poly::monomial(ring, ring.one(), n).sub(&Poly::constant(c), ring)
        }
        MonomialShape::Linear { f1, j, w } => {
            let c = ring.mul(&ring.pow(&w, n as u64 - 1), &ring.pow(&f1, j as u64));
            Poly::monomial(ring, ring.one(), n).sub(&Poly::monomial(ring, c, 1), ring)
        }
        MonomialShape::Scaling { w } => Poly::new(
            (0..=n)
                .map(|k| ring.mul(&ring.pow(&w, (n - k) as u64), &ambient.f().coeff(ring, k)))
                .collect(),
        ),
        MonomialShape::Degree1 => Poly::new(vec![ring.neg(&omega.coeffs()[0]), ring.one()]),
    };
    let wit = build_theta(ambient, omega)?;
    if wit.h != target {
        return Err(Error::Certificate("closed-form target disagrees with the W construction".into()));
    }
    Ok(target)
}

/// Witness that `x^n - lambda` is isometric to `x^n - 1`: a unit `w` with
/// `w^n = lambda`, giving `theta: x -> w x` on `R[x]/<x^n - 1>`.
pub fn constacyclic_to_cyclic(ring: &RingSpec, lambda: &RingElem, n: usize) -> Result<Option<OmegaWitness>> {
    if !ring.is_unit(lambda) {
        return Err(Error::NonUnit);
    }
    if n == 0 {
        return Err(Error::InvalidInput("length must be positive".into()));
    }
    let Some(w) = ring.units().into_iter().find(|u| ring.pow(u, n as u64) == *lambda) else {
        return Ok(None);
    };
    let f = Poly::monomial(ring, ring.one(), n).sub(&Poly::one(ring), ring);
    let ambient = AmbientSpace::new(ring, f)?;
    let wit = build_theta(&ambient, &ambient.monomial(w, 1))?;
    debug_assert_eq!(wit.h, Poly::monomial(ring, ring.one(), n).sub(&Poly::constant(lambda.clone()), ring));
    Ok(Some(wit))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> RingSpec {
        RingSpec::new(2, 2, 1).unwrap()
    }

    #[test]
    fn first_example() {
        let r = z4();
        let amb = AmbientSpace::new(&r, Poly::from_ints(&r, &[-1, -1, -2, 1])).unwrap();
        let w = build_theta(&amb, &amb.from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(w.h, Poly::from_ints(&r, &[-1, 0, -1, 1]));
        assert_eq!(w.det_w, r.one());
        let img = w.theta(amb.from_ints(&[1, 1, 1]).coeffs()).unwrap();
        assert_eq!(img, amb.from_ints(&[1, 3]));
        let v = classify_monomial(&amb, &amb.from_ints(&[1, 0, 1])).unwrap();
        assert!(!v.is_isometric());
        assert!(v.criterion_agrees());
        let IsometryKind::IsomorphicNotMonomial { counterexample } = v.kind else { panic!() };
        assert_ne!(counterexample.weight_before, counterexample.weight_after);
    }

    #[test]
    fn second_example() {
        let r = z4();
        let amb = AmbientSpace::new(&r, Poly::from_ints(&r, &[-1, -3, 0, 0, 1])).unwrap();
        let w = build_theta(&amb, &amb.from_ints(&[1, 3])).unwrap();
        assert_eq!(w.h, Poly::from_ints(&r, &[-3, -1, -2, 0, 1]));
        assert_eq!(w.theta(amb.from_ints(&[0, 0, 1]).coeffs()).unwrap(), amb.from_ints(&[1, 2, 1]));
    }

    #[test]
    fn identity_omega() {
        let r = z4();
        let f = Poly::from_ints(&r, &[-1, 0, 0, 1]);
        let amb = AmbientSpace::new(&r, f.clone()).unwrap();
        let w = build_theta(&amb, &amb.x()).unwrap();
        assert_eq!(w.h, f);
        assert_eq!(w.w, RingMatrix::identity(&r, 3));
        let v = classify_monomial(&amb, &amb.x()).unwrap();
        assert!(v.is_isometric() && v.criterion_agrees());
        assert_eq!(isometric_target(&amb, &amb.x()).unwrap(), f);
    }

    #[test]
    fn linear_shape_target() {
        let r = z4();
        for f1 in [1u64, 3] {
            for w4 in [1u64, 3] {
                let f = Poly::from_ints(&r, &[0, -(f1 as i64), 0, 0, 0, 0, 1]);
                let amb = AmbientSpace::new(&r, f).unwrap();
                let omega = amb.monomial(r.from_u64(w4), 4);
                let target = isometric_target(&amb, &omega).unwrap();
                let c = r.mul(&r.pow(&r.from_u64(w4), 5), &r.pow(&r.from_u64(f1), 4));
                assert_eq!(target.coeff(&r, 1), r.neg(&c));
                assert!(classify_monomial(&amb, &omega).unwrap().is_isometric());
            }
        }
    }

    #[test]
    fn constant_shape_target() {
        let r = z4();
        let amb = AmbientSpace::new(&r, Poly::from_ints(&r, &[-3, 0, 0, 1])).unwrap();
        let t = isometric_target(&amb, &amb.monomial(r.from_u64(3), 1)).unwrap();
        assert_eq!(t, Poly::from_ints(&r, &[-1, 0, 0, 1]));
        // exponent 2: omega^3 = 27 x^6 = 3 * 3^2 = 3 f0^2
        let t = isometric_target(&amb, &amb.monomial(r.from_u64(3), 2)).unwrap();
        assert_eq!(t, Poly::from_ints(&r, &[-3, 0, 0, 1]));
        assert!(matches!(
            isometric_target(&amb, &amb.from_ints(&[1, 0, 1])),
            Err(Error::ConditionsUnmet(_))
        ));
    }

    #[test]
    fn scaling_shape_for_any_f() {
        let r = z4();
        let f = Poly::from_ints(&r, &[-1, -1, -2, 1]);
        let amb = AmbientSpace::new(&r, f).unwrap();
        let omega = amb.monomial(r.from_u64(3), 1);
        let v = classify_monomial(&amb, &omega).unwrap();
        assert!(v.is_isometric() && v.criterion_agrees());
        // 27 f(x/3) = x^3 - 6x^2 - 9x - 27
        assert_eq!(isometric_target(&amb, &omega).unwrap(), Poly::from_ints(&r, &[-27, -9, -6, 1]));
        // x^3 - 2 is outside class J yet omega = x still gives W = I
        let amb = AmbientSpace::new(&r, Poly::from_ints(&r, &[-2, 0, 0, 1])).unwrap();
        assert!(classify_monomial(&amb, &amb.x()).unwrap().criterion_agrees());
        assert!(!classify_monomial(&amb, &amb.monomial(r.one(), 2)).unwrap().is_isometric());
    }

    #[test]
    fn constacyclic_examples() {
        let r = z4();
        let w = constacyclic_to_cyclic(&r, &r.from_u64(3), 3).unwrap().unwrap();
        assert_eq!(w.omega, w.ambient.monomial(r.from_u64(3), 1));
        assert_eq!(w.h, Poly::from_ints(&r, &[-3, 0, 0, 1]));
        let w = constacyclic_to_cyclic(&r, &r.one(), 3).unwrap().unwrap();
        assert_eq!(w.w, RingMatrix::identity(&r, 3));
        assert!(constacyclic_to_cyclic(&r, &r.from_u64(3), 2).unwrap().is_none());
        assert_eq!(constacyclic_to_cyclic(&r, &r.from_u64(2), 2), Err(Error::NonUnit));
    }

    #[test]
    fn non_unit_det_is_not_applicable() {
        let r = z4();
        let amb = AmbientSpace::new(&r, Poly::from_ints(&r, &[-1, 0, 0, 1])).unwrap();
        let v = classify_monomial(&amb, &amb.from_ints(&[0, 2])).unwrap();
        assert_eq!(v.kind, IsometryKind::NotApplicable);
        assert_eq!(build_theta(&amb, &amb.from_ints(&[0, 2])), Err(Error::Singular));
    }
}
