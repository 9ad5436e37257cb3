//! Bivariate serial ambients `R[x1, x2]/<f1(x1), f2(x2)>` through Kronecker
//! products of the univariate data.
//!
//! Elements are coefficient vectors of length `n1 * n2`; the coefficient of
//! `x1^i x2^j` sits at index `i * n2 + j`.

use crate::codes::{self, Ambient, Code, Decomposition, DualityReport};
use crate::error::{Error, Result};
use crate::factor::splitting_degree;
use crate::isometry::{build_theta, isometric_target, monomial_shape, MonomialShape};
use crate::linalg::RingMatrix;
use crate::poly::Poly;
use crate::quotient::{AmbientSpace, QuotElem};
use crate::ring::{Embedding, RingElem, RingSpec};
use crate::transform::{MsTransform, Spectrum};

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

#[derive(Clone, Debug)]
pub struct BivAmbient {
    t1: MsTransform,
    t2: MsTransform,
    /// Reductions of `x1^k` (`k < 2 n1 - 1`) and likewise for `x2`.
    pow1: Vec<QuotElem>,
    pow2: Vec<QuotElem>,
    e1_pows: Vec<RingMatrix>,
    e2_pows: Vec<RingMatrix>,
    v: RingMatrix,
    vinv: RingMatrix,
}

impl BivAmbient {
    /// Both factors are split over the common extension of degree
    /// `lcm(l1, l2)`.
    pub fn new(ring: &RingSpec, f1: &Poly, f2: &Poly, seed: u64) -> Result<Self> {
        let l = lcm(splitting_degree(ring, f1, seed)?, splitting_degree(ring, f2, seed)?);
        let t1 = MsTransform::with_extension(ring, f1, Some(l), seed)?;
        let t2 = MsTransform::with_extension(ring, f2, Some(l), seed)?;
        debug_assert_eq!(t1.extension(), t2.extension());
        let powers = |s: &AmbientSpace| (0..2 * s.n() - 1).map(|k| s.monomial(ring.one(), k)).collect::<Vec<_>>();
        let mat_pows = |s: &AmbientSpace| {
            let mut out = vec![RingMatrix::identity(ring, s.n())];
            for _ in 1..s.n() {
                out.push(out.last().unwrap().mul(s.companion()).unwrap());
            }
            out
        };
        let v = t1.vandermonde().v.kron(&t2.vandermonde().v);
        let vinv = t1.vandermonde().vinv.kron(&t2.vandermonde().vinv);
        Ok(BivAmbient {
            pow1: powers(t1.ambient()),
            pow2: powers(t2.ambient()),
            e1_pows: mat_pows(t1.ambient()),
            e2_pows: mat_pows(t2.ambient()),
            t1,
            t2,
            v,
            vinv,
        })
    }

    pub fn first(&self) -> &MsTransform {
        &self.t1
    }

    pub fn second(&self) -> &MsTransform {
        &self.t2
    }

    pub fn n1(&self) -> usize {
        self.t1.ambient().n()
    }

    pub fn n2(&self) -> usize {
        self.t2.ambient().n()
    }

    pub fn extension(&self) -> &RingSpec {
        self.t1.extension()
    }

    pub fn vandermonde(&self) -> (&RingMatrix, &RingMatrix) {
        (&self.v, &self.vinv)
    }

    /// Validating constructor.
    pub fn element(&self, coeffs: Vec<RingElem>) -> Result<Vec<RingElem>> {
        let n = self.dim();
        if coeffs.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: coeffs.len() });
        }
        if coeffs.iter().any(|c| !self.ring().contains(c)) {
            return Err(Error::InvalidInput("coefficient outside the base ring".into()));
        }
        Ok(coeffs)
    }

    /// `a(x1) b(x2)` as a bivariate element.
    pub fn tensor(&self, a: &QuotElem, b: &QuotElem) -> Vec<RingElem> {
        let r = self.ring();
        a.coeffs().iter().flat_map(|x| b.coeffs().iter().map(move |y| r.mul(x, y))).collect()
    }

    pub fn x1(&self) -> Vec<RingElem> {
        self.tensor(&self.t1.ambient().x(), &self.t2.ambient().one())
    }

    pub fn x2(&self) -> Vec<RingElem> {
        self.tensor(&self.t1.ambient().one(), &self.t2.ambient().x())
    }

    /// `sum k_ij E1^i (x) E2^j`.
    pub fn regular_rep(&self, k: &[RingElem]) -> RingMatrix {
        let r = self.ring();
        let (n1, n2) = (self.n1(), self.n2());
        let mut acc = RingMatrix::zeros(r, n1 * n2, n1 * n2);
        for i in 0..n1 {
            for j in 0..n2 {
                let c = &k[i * n2 + j];
                if r.is_zero(c) {
                    continue;
                }
                let term = self.e1_pows[i].kron(&self.e2_pows[j]).scale(c);
                acc = acc.add(&term).unwrap();
            }
        }
        acc
    }

    /// Product by expanding and reducing each monomial modulo both moduli.
    pub fn mul(&self, a: &[RingElem], b: &[RingElem]) -> Vec<RingElem> {
        let r = self.ring();
        let (n1, n2) = (self.n1(), self.n2());
        // full product, indexed by (i, j) with i < 2n1-1, j < 2n2-1
        let w2 = 2 * n2 - 1;
        let mut full = vec![r.zero(); (2 * n1 - 1) * w2];
        for (s, x) in a.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            for (t, y) in b.iter().enumerate() {
                let idx = (s / n2 + t / n2) * w2 + s % n2 + t % n2;
                full[idx] = r.add(&full[idx], &r.mul(x, y));
            }
        }
        let mut out = vec![r.zero(); n1 * n2];
        for (idx, c) in full.iter().enumerate() {
            if r.is_zero(c) {
                continue;
            }
            let (p1, p2) = (&self.pow1[idx / w2], &self.pow2[idx % w2]);
            for (i, u) in p1.coeffs().iter().enumerate() {
                if r.is_zero(u) {
                    continue;
                }
                let cu = r.mul(c, u);
                for (j, v) in p2.coeffs().iter().enumerate() {
                    out[i * n2 + j] = r.add(&out[i * n2 + j], &r.mul(&cu, v));
                }
            }
        }
        out
    }

    /// Values `k(alpha_i, beta_j)`, `i` outer and `j` inner.
    pub fn ms(&self, k: &[RingElem]) -> Result<Spectrum> {
        let k = self.element(k.to_vec())?;
        let emb = self.t1.embedding();
        let row: Vec<RingElem> = k.iter().map(|c| emb.apply(c)).collect();
        Ok(Spectrum { values: self.v.left_mul_vec(&row) })
    }

    pub fn ms_inverse(&self, b: &Spectrum) -> Result<Vec<RingElem>> {
        let n = self.dim();
        if b.values.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: b.values.len() });
        }
        if b.values.iter().any(|v| !self.extension().contains(v)) {
            return Err(Error::InvalidInput("spectrum value outside the extension ring".into()));
        }
        let emb = self.t1.embedding();
        self.vinv
            .left_mul_vec(&b.values)
            .iter()
            .map(|c| emb.preimage(c).ok_or(Error::NotInImage))
            .collect()
    }

    /// Tensor grid `e_i (x) e_j`, `i` outer.
    pub fn idempotents(&self) -> Vec<Vec<RingElem>> {
        let mut out = Vec::new();
        for a in self.t1.idempotents() {
            for b in self.t2.idempotents() {
                out.push(self.tensor(a, b));
            }
        }
        out
    }

    /// Grid position `(i, j)` of a flat component index.
    pub fn grid_index(&self, flat: usize) -> (usize, usize) {
        let c2 = self.t2.idempotents().len();
        (flat / c2, flat % c2)
    }

    pub fn component_count(&self) -> (usize, usize) {
        (self.t1.idempotents().len(), self.t2.idempotents().len())
    }

    /// Flat indices of grid components that are not local, hence not
    /// primitive. The component of `(i, j)` is `GR(d_i) (x) GR(d_j)`, which
    /// splits into `gcd(d_i, d_j)` copies of `GR(lcm(d_i, d_j))`.
    pub fn non_local_components(&self) -> Vec<usize> {
        let degs = |t: &MsTransform| -> Vec<usize> {
            t.analysis().factorization.factors.iter().map(|g| g.degree().unwrap_or(0)).collect()
        };
        let (d1, d2) = (degs(&self.t1), degs(&self.t2));
        let mut out = Vec::new();
        for (i, a) in d1.iter().enumerate() {
            for (j, b) in d2.iter().enumerate() {
                if a * b / lcm(*a, *b) > 1 {
                    out.push(i * d2.len() + j);
                }
            }
        }
        out
    }
}

impl Ambient for BivAmbient {
    fn ring(&self) -> &RingSpec {
        self.t1.ambient().ring()
    }
    fn dim(&self) -> usize {
        self.n1() * self.n2()
    }
    fn one_vec(&self) -> Vec<RingElem> {
        self.tensor(&self.t1.ambient().one(), &self.t2.ambient().one())
    }
    fn mul_vec(&self, a: &[RingElem], b: &[RingElem]) -> Vec<RingElem> {
        self.mul(a, b)
    }
    fn rep(&self, a: &[RingElem]) -> RingMatrix {
        self.regular_rep(a)
    }
    fn shift_operators(&self) -> Vec<RingMatrix> {
        let r = self.ring();
        vec![
            self.t1.ambient().companion().kron(&RingMatrix::identity(r, self.n2())),
            RingMatrix::identity(r, self.n1()).kron(self.t2.ambient().companion()),
        ]
    }
    fn idempotent_vecs(&self) -> Result<Vec<Vec<RingElem>>> {
        Ok(self.idempotents())
    }
    fn spectral(&self) -> Option<(&Embedding, &RingMatrix)> {
        Some((self.t1.embedding(), &self.v))
    }
    fn zero_form_nondegenerate(&self) -> Option<bool> {
        None
    }
}

/// Trace, star and MS duals of a serial code next to its annihilator.
pub fn biv_duality(amb: &BivAmbient, code: &Code) -> Result<DualityReport> {
    codes::check_duality(amb, code)
}

/// Conductor exponents over the idempotent grid, flattened `i`-outer.
///
/// Codes that meet a non-local grid component in something other than
/// `p^k` times the whole component have no such description.
pub fn biv_decompose(amb: &BivAmbient, code: &Code) -> Result<Decomposition> {
    match codes::decompose(amb, code) {
        Err(Error::Certificate(_)) if !amb.non_local_components().is_empty() => Err(Error::ConditionsUnmet(format!(
            "code does not split over the tensor grid; components {:?} are not local",
            amb.non_local_components()
        ))),
        other => other,
    }
}

/// Which of the three serial shapes applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SerialCase {
    /// both constant (`x^n - lambda`)
    BothConstant,
    /// first constant, second linear (`x^n - lambda x`), in either order
    Mixed,
    /// both linear
    BothLinear,
    /// a factor outside the two shapes, isometric through a rescaling of its variable
    Scaling,
}

impl SerialCase {
    pub fn number(self) -> u8 {
        match self {
            SerialCase::BothConstant => 1,
            SerialCase::Mixed => 2,
            SerialCase::BothLinear => 3,
            SerialCase::Scaling => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerialIsometry {
    pub case: SerialCase,
    pub h1: Poly,
    pub h2: Poly,
    /// `W1 (x) W2`, monomial by construction and checked.
    pub w: RingMatrix,
}

impl SerialIsometry {
    /// `theta(k) = rho(k) (W1 (x) W2)`.
    pub fn theta(&self, k: &[RingElem]) -> Vec<RingElem> {
        self.w.left_mul_vec(k)
    }
}

/// Coordinatewise univariate isometry for `(f1, omega1)` and `(f2, omega2)`.
pub fn serial_isometry(
    a1: &AmbientSpace,
    omega1: &QuotElem,
    a2: &AmbientSpace,
    omega2: &QuotElem,
) -> Result<SerialIsometry> {
    if a1.ring() != a2.ring() {
        return Err(Error::IncompatibleRings("both factors must share the base ring".into()));
    }
    let s1 = monomial_shape(a1, omega1)
        .ok_or_else(|| Error::ConditionsUnmet("first factor is not of a monomial shape".into()))?;
    let s2 = monomial_shape(a2, omega2)
        .ok_or_else(|| Error::ConditionsUnmet("second factor is not of a monomial shape".into()))?;
    use MonomialShape::{Constant, Linear};
    let case = match (&s1, &s2) {
        (Constant { .. }, Constant { .. }) => SerialCase::BothConstant,
        (Linear { .. }, Linear { .. }) => SerialCase::BothLinear,
        (Constant { .. }, Linear { .. }) | (Linear { .. }, Constant { .. }) => SerialCase::Mixed,
        _ => SerialCase::Scaling,
    };
    let h1 = isometric_target(a1, omega1)?;
    let h2 = isometric_target(a2, omega2)?;
    let w = build_theta(a1, omega1)?.w.kron(&build_theta(a2, omega2)?.w);
    if !w.is_monomial() {
        return Err(Error::Certificate("tensor of monomial matrices is not monomial".into()));
    }
    Ok(SerialIsometry { case, h1, h2, w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{code_from_generators, full_code, zero_code};

    fn z4() -> RingSpec {
        RingSpec::new(2, 2, 1).unwrap()
    }

    fn cyc3(r: &RingSpec) -> Poly {
        Poly::from_ints(r, &[-1, 0, 0, 1])
    }

    #[test]
    fn representation_of_generators() {
        let r = z4();
        let b = BivAmbient::new(&r, &cyc3(&r), &cyc3(&r), 0).unwrap();
        let e = b.first().ambient().companion().clone();
        let id = RingMatrix::identity(&r, 3);
        assert_eq!(b.regular_rep(&b.x1()), e.kron(&id));
        assert_eq!(b.regular_rep(&b.x2()), id.kron(&e));
        assert_eq!(b.regular_rep(&b.one_vec()), RingMatrix::identity(&r, 9));
    }

    #[test]
    fn multiplication() {
        let r = z4();
        let b = BivAmbient::new(&r, &cyc3(&r), &cyc3(&r), 0).unwrap();
        let x1x2 = b.mul(&b.x1(), &b.x2());
        let mut expect = vec![r.zero(); 9];
        expect[4] = r.one();
        assert_eq!(x1x2, expect);
        let x1sq = b.mul(&b.x1(), &b.x1());
        assert_eq!(b.mul(&x1sq, &x1sq), b.x1());
        for e in b.idempotents() {
            assert_eq!(b.mul(&e, &e), e);
        }
    }

    #[test]
    fn spectra() {
        let r = z4();
        let b = BivAmbient::new(&r, &cyc3(&r), &cyc3(&r), 0).unwrap();
        let ext = b.extension().clone();
        assert_eq!(b.ms(&b.one_vec()).unwrap().values, vec![ext.one(); 9]);
        let e11 = &b.idempotents()[0];
        let mut ind = vec![ext.zero(); 9];
        ind[0] = ext.one();
        assert_eq!(b.ms(e11).unwrap().values, ind);
        assert_eq!(&b.ms_inverse(&b.ms(e11).unwrap()).unwrap(), e11);
    }

    #[test]
    fn idempotent_grids() {
        let r = z4();
        let b = BivAmbient::new(&r, &cyc3(&r), &cyc3(&r), 0).unwrap();
        assert_eq!(b.idempotents().len(), 4);
        let irr = Poly::from_ints(&r, &[-1, -1, -2, 1]);
        let b2 = BivAmbient::new(&r, &irr, &Poly::from_ints(&r, &[1, 1, 1]), 0).unwrap();
        assert_eq!(b2.idempotents(), vec![b2.one_vec()]);
        let b3 = BivAmbient::new(&r, &cyc3(&r), &Poly::from_ints(&r, &[-1, 1]), 0).unwrap();
        assert_eq!(b3.idempotents().len(), 2);
    }

    #[test]
    fn duality_and_decomposition() {
        let r = z4();
        let b = BivAmbient::new(&r, &cyc3(&r), &cyc3(&r), 0).unwrap();
        let idems = b.idempotents();
        let c = code_from_generators(&b, &[idems[0].clone()]).unwrap();
        let rep = biv_duality(&b, &c).unwrap();
        assert!(rep.all_equal());
        let one_minus: Vec<RingElem> = b.one_vec().iter().zip(&idems[0]).map(|(x, y)| r.sub(x, y)).collect();
        assert_eq!(rep.annihilator, code_from_generators(&b, &[one_minus]).unwrap());
        assert!(biv_duality(&b, &full_code(&b)).unwrap().duals.iter().all(|(_, d)| *d == zero_code(&b)));

        let c12 = code_from_generators(&b, &[idems[1].clone()]).unwrap();
        let d = biv_decompose(&b, &c12).unwrap();
        assert_eq!(d.full_components(), vec![1]);
        assert_eq!(b.grid_index(1), (0, 1));
        let two: Vec<RingElem> = b.one_vec().iter().map(|x| r.scale_int(x, 2)).collect();
        let d = biv_decompose(&b, &code_from_generators(&b, &[two]).unwrap()).unwrap();
        assert_eq!(d.conductors, vec![1; 4]);
    }

    #[test]
    fn grid_locality() {
        let r = z4();
        let amb = BivAmbient::new(&r, &cyc3(&r), &cyc3(&r), 0).unwrap();
        // (x^2 + x + 1) (x) (x^2 + x + 1) is GR(4, 2) x GR(4, 2)
        assert_eq!(amb.non_local_components(), vec![3]);
        let lin = Poly::from_ints(&r, &[-1, 1]);
        assert!(BivAmbient::new(&r, &cyc3(&r), &lin, 0).unwrap().non_local_components().is_empty());
        // x1 e_2 (x) e_2 generates half of the non-local component
        let e = amb.idempotents();
        let y = amb.mul(&amb.x1(), &amb.mul(&e[3], &r_sub(&r, &amb.x2(), &amb.x1())));
        let code = code_from_generators(&amb, &[y]).unwrap();
        assert!(matches!(biv_decompose(&amb, &code), Err(Error::ConditionsUnmet(_))));
    }

    fn r_sub(r: &RingSpec, a: &[RingElem], b: &[RingElem]) -> Vec<RingElem> {
        a.iter().zip(b).map(|(x, y)| r.sub(x, y)).collect()
    }

    #[test]
    fn serial_isometry_cases() {
        let r = z4();
        let c1 = AmbientSpace::new(&r, Poly::from_ints(&r, &[-3, 0, 0, 1])).unwrap();
        let c2 = AmbientSpace::new(&r, Poly::from_ints(&r, &[-1, 0, 0, 1])).unwrap();
        let s = serial_isometry(&c1, &c1.monomial(r.from_u64(3), 1), &c2, &c2.monomial(r.from_u64(3), 1)).unwrap();
        assert_eq!(s.case, SerialCase::BothConstant);
        assert_eq!(s.h1, Poly::from_ints(&r, &[-1, 0, 0, 1]));
        assert_eq!(s.h2, Poly::from_ints(&r, &[-3, 0, 0, 1]));

        let id = serial_isometry(&c1, &c1.x(), &c2, &c2.x()).unwrap();
        assert_eq!((id.h1, id.h2), (c1.f().clone(), c2.f().clone()));

        let l = AmbientSpace::new(&r, Poly::from_ints(&r, &[0, -3, 0, 1])).unwrap();
        let s = serial_isometry(&l, &l.monomial(r.from_u64(3), 1), &l, &l.x()).unwrap();
        assert_eq!(s.case, SerialCase::BothLinear);
        assert_eq!(s.h1, Poly::from_ints(&r, &[0, -3, 0, 1]));

        let bad = serial_isometry(&c1, &c1.from_ints(&[1, 1]), &c2, &c2.x());
        assert!(matches!(bad, Err(Error::ConditionsUnmet(_))));
    }
}
