//! Ring DFT invertibility, Vandermonde matrices over the splitting extension,
//! and the Mattson-Solomon transform.

use crate::error::{Error, Result};
use crate::factor::{analyze_in, Analysis, SplittingData};
use crate::linalg::{HowellBasis, RingMatrix};
use crate::poly::Poly;
use crate::quotient::{AmbientSpace, QuotElem};
use crate::ring::{Embedding, RingElem, RingSpec};

/// The handful of operations the DFT criterion needs, so it can run over
/// Galois rings and over plain `Z_M` for composite `M`.
pub trait UnitRing {
    type Elem: Clone + PartialEq + std::fmt::Debug;
    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_unit(&self, a: &Self::Elem) -> bool;
}

impl UnitRing for RingSpec {
    type Elem = RingElem;
    fn one(&self) -> RingElem {
        RingSpec::one(self)
    }
    fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingSpec::mul(self, a, b)
    }
    fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingSpec::sub(self, a, b)
    }
    fn is_unit(&self, a: &RingElem) -> bool {
        RingSpec::is_unit(self, a)
    }
}

/// `Z_M` for any modulus `M >= 2`; not necessarily local.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZMod {
    modulus: u64,
}

impl ZMod {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidRing(format!("Z_{modulus} is not a valid modulus")));
        }
        Ok(ZMod { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elem(&self, a: i64) -> u64 {
        a.rem_euclid(self.modulus as i64) as u64
    }
}

impl UnitRing for ZMod {
    type Elem = u64;
    fn one(&self) -> u64 {
        1 % self.modulus
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.modulus - b) % self.modulus
    }
    fn is_unit(&self, a: &u64) -> bool {
        let (mut x, mut y) = (*a, self.modulus);
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x == 1
    }
}

/// Outcome of the DFT criterion. `witness` is the first `k` with `xi^k - 1`
/// not a unit, together with that value.
#[derive(Clone, Debug, PartialEq)]
pub struct DftReport<E> {
    pub invertible: bool,
    pub witness: Option<(u64, E)>,
}

/// Whether `xi` (an `N`-th root of unity, `xi != 1`) defines an invertible
/// DFT of length `N`: every `xi^k - 1`, `1 <= k < N`, must be a unit.
pub fn dft_invertible<R: UnitRing>(ring: &R, xi: &R::Elem, n: u64) -> Result<DftReport<R::Elem>> {
    let one = ring.one();
    if n < 2 || *xi == one {
        return Err(Error::NotRootOfUnity("need N >= 2 and xi != 1".into()));
    }
    let mut pw = one.clone();
    let mut witness = None;
    for k in 1..n {
        pw = ring.mul(&pw, xi);
        let d = ring.sub(&pw, &one);
        if witness.is_none() && !ring.is_unit(&d) {
            witness = Some((k, d));
        }
    }
    if ring.mul(&pw, xi) != one {
        return Err(Error::NotRootOfUnity(format!("xi^{n} != 1")));
    }
    Ok(DftReport { invertible: witness.is_none(), witness })
}

/// `V` with `V[i][j] = alpha_j^i` and its inverse, over the extension ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VandermondePair {
    pub v: RingMatrix,
    pub vinv: RingMatrix,
}

pub fn vandermonde_matrix(ring: &RingSpec, roots: &[RingElem]) -> RingMatrix {
    let n = roots.len();
    let mut v = RingMatrix::zeros(ring, n, n);
    for (j, a) in roots.iter().enumerate() {
        let mut pw = ring.one();
        for i in 0..n {
            v.set(i, j, pw.clone());
            pw = ring.mul(&pw, a);
        }
    }
    v
}

/// Vandermonde pair for the ordered roots; the inverse comes from unit-pivot
/// elimination.
pub fn vandermonde(split: &SplittingData) -> Result<VandermondePair> {
    let ring = &split.extension;
    let v = vandermonde_matrix(ring, &split.roots);
    let vinv = v.inverse().map_err(|e| match e {
        Error::Singular => Error::NotInClassJ,
        other => other,
    })?;
    Ok(VandermondePair { v, vinv })
}

/// Closed-form inverse: row `j` holds the coefficients of the Lagrange basis
/// polynomial `prod_{l != j} (x - a_l) / (a_j - a_l)`, whose coefficients are
/// signed elementary symmetric functions of the other roots.
pub fn vandermonde_inverse_symbolic(ring: &RingSpec, roots: &[RingElem]) -> Result<RingMatrix> {
    let n = roots.len();
    let mut out = RingMatrix::zeros(ring, n, n);
    for j in 0..n {
        let others: Vec<&RingElem> = roots.iter().enumerate().filter(|&(l, _)| l != j).map(|(_, a)| a).collect();
        // s[k] = S_k(others)
        let mut s = vec![ring.one()];
        for a in &others {
            let mut next = s.clone();
            next.push(ring.zero());
            for k in 1..next.len() {
                next[k] = ring.add(&s.get(k).cloned().unwrap_or_else(|| ring.zero()), &ring.mul(&s[k - 1], a));
            }
            s = next;
        }
        let mut denom = ring.one();
        for a in &others {
            denom = ring.mul(&denom, &ring.sub(&roots[j], a));
        }
        let inv = ring.invert(&denom).map_err(|_| Error::NotInClassJ)?;
        for k in 0..n {
            // coefficient of x^k is (-1)^{n-1-k} S_{n-1-k}
            let d = n - 1 - k;
            let mut c = s[d].clone();
            if d % 2 == 1 {
                c = ring.neg(&c);
            }
            out.set(j, k, ring.mul(&c, &inv));
        }
    }
    Ok(out)
}

/// Image of the MS transform: `values[i] = g(alpha_i)` in the root order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum {
    pub values: Vec<RingElem>,
}

/// The MS transform of `R[x]/<f>` for `f` in class J.
#[derive(Clone, Debug)]
pub struct MsTransform {
    analysis: Analysis,
    vandermonde: VandermondePair,
}

impl MsTransform {
    pub fn new(ring: &RingSpec, f: &Poly, seed: u64) -> Result<Self> {
        Self::with_extension(ring, f, None, seed)
    }

    /// Transform over `GR(p^r, m * ext_degree)`, for a degree that is a
    /// multiple of the splitting degree.
    pub fn with_extension(ring: &RingSpec, f: &Poly, ext_degree: Option<usize>, seed: u64) -> Result<Self> {
        let analysis = analyze_in(ring, f, ext_degree, seed)?;
        Self::from_analysis(analysis)
    }

    pub fn from_analysis(analysis: Analysis) -> Result<Self> {
        let vandermonde = vandermonde(&analysis.splitting)?;
        Ok(MsTransform { analysis, vandermonde })
    }

    pub fn analysis(&self) -> &Analysis {
        &self.analysis
    }

    pub fn ambient(&self) -> &AmbientSpace {
        &self.analysis.ambient
    }

    pub fn splitting(&self) -> &SplittingData {
        &self.analysis.splitting
    }

    pub fn extension(&self) -> &RingSpec {
        &self.analysis.splitting.extension
    }

    pub fn embedding(&self) -> &Embedding {
        &self.analysis.splitting.embedding
    }

    pub fn vandermonde(&self) -> &VandermondePair {
        &self.vandermonde
    }

    pub fn idempotents(&self) -> &[QuotElem] {
        &self.analysis.idempotents.idems
    }

    /// `B = gamma(rho(g)) V`.
    pub fn ms(&self, g: &QuotElem) -> Result<Spectrum> {
        let n = self.ambient().n();
        if g.coeffs().len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.coeffs().len() });
        }
        let row: Vec<RingElem> = g.coeffs().iter().map(|c| self.embedding().apply(c)).collect();
        Ok(Spectrum { values: self.vandermonde.v.left_mul_vec(&row) })
    }

    /// `g = B V^{-1}`, rejected unless every coefficient lies in the base ring.
    pub fn ms_inverse(&self, b: &Spectrum) -> Result<QuotElem> {
        let n = self.ambient().n();
        if b.values.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: b.values.len() });
        }
        let ext = self.extension();
        if b.values.iter().any(|v| !ext.contains(v)) {
            return Err(Error::InvalidInput("spectrum value outside the extension ring".into()));
        }
        let coeffs = self.vandermonde.vinv.left_mul_vec(&b.values);
        let base = coeffs
            .iter()
            .map(|c| self.embedding().preimage(c).ok_or(Error::NotInImage))
            .collect::<Result<Vec<_>>>()?;
        self.ambient().element(base)
    }
}

/// Componentwise product of spectra.
pub fn star(ext: &RingSpec, a: &Spectrum, b: &Spectrum) -> Spectrum {
    Spectrum { values: a.values.iter().zip(&b.values).map(|(x, y)| ext.mul(x, y)).collect() }
}

/// `{h in R^n : sum_t h_t c[t] = 0 for every column c}` where the columns
/// live over the target of `embedding` and `h` ranges over its source.
///
/// Unknowns are expanded to `Z_{p^r}` coordinates (`h_t = sum_s h_{t,s} y^s`)
/// so the system becomes a kernel problem over `Z_{p^r}`.
pub fn base_ring_kernel(embedding: &Embedding, n: usize, columns: &[Vec<RingElem>]) -> Result<HowellBasis> {
    let base = embedding.source();
    let ext = embedding.target();
    if columns.is_empty() {
        return Ok(HowellBasis::full(base, n));
    }
    if let Some(c) = columns.iter().find(|c| c.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: c.len() });
    }
    let zq = RingSpec::new(base.p(), base.r(), 1)?;
    let m = base.m();
    let big_m = ext.m();
    let mut rows = Vec::with_capacity(n * m);
    for t in 0..n {
        for img in embedding.basis_images() {
            let mut row = Vec::with_capacity(columns.len() * big_m);
            for c in columns {
                let v = ext.mul(img, &c[t]);
                row.extend(v.coeffs().iter().map(|&x| zq.from_u64(x)));
            }
            rows.push(row);
        }
    }
    let a = RingMatrix::from_rows(&zq, columns.len() * big_m, rows)?;
    let sols: Vec<Vec<RingElem>> = a
        .kernel()
        .rows()
        .map(|v| (0..n).map(|t| base.elem_reduced(&v[t * m..(t + 1) * m].iter().map(|e| e.coeffs()[0]).collect::<Vec<_>>())).collect())
        .collect();
    Ok(HowellBasis::from_rows(base, n, sols))
}
