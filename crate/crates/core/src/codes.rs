//! Polycyclic codes as ideals of a commutative `R`-algebra with a fixed
//! `R`-basis: duals, annihilators, idempotent decomposition and minimum
//! distance.
//!
//! Everything here is written against [`Ambient`], so the same code serves
//! `R[x]/<f>` and the bivariate serial ambients.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{HowellBasis, RingMatrix};
use crate::poly::Poly;
use crate::quotient::{hamming_weight, AmbientSpace, QuotElem};
use crate::ring::{Embedding, RingElem, RingSpec};
use crate::transform::{base_ring_kernel, MsTransform};

/// A free `R`-algebra of finite rank in a fixed basis whose first element is 1.
pub trait Ambient {
    fn ring(&self) -> &RingSpec;
    fn dim(&self) -> usize;
    fn one_vec(&self) -> Vec<RingElem>;
    fn mul_vec(&self, a: &[RingElem], b: &[RingElem]) -> Vec<RingElem>;
    /// Matrix of multiplication by `a`: row `t` is `basis_t * a`.
    fn rep(&self, a: &[RingElem]) -> RingMatrix;
    /// Operators whose right action generates the algebra (companion matrices).
    fn shift_operators(&self) -> Vec<RingMatrix>;
    /// Complete set of primitive orthogonal idempotents, when known.
    fn idempotent_vecs(&self) -> Result<Vec<Vec<RingElem>>>;
    /// Embedding into the splitting extension and `V` with `MS(a) = gamma(a) V`.
    fn spectral(&self) -> Option<(&Embedding, &RingMatrix)>;
    /// Whether `<a, b>_0 = (ab)_0` is non-degenerate; `None` if not offered.
    fn zero_form_nondegenerate(&self) -> Option<bool>;
}

/// The univariate ambient `R[x]/<f>`, with MS data when `f` is in class J.
#[derive(Clone, Debug)]
pub struct PolyAmbient {
    space: AmbientSpace,
    transform: Option<MsTransform>,
}

impl PolyAmbient {
    /// Ambient with transform and idempotents; requires `f` in class J.
    pub fn new(ring: &RingSpec, f: &Poly, seed: u64) -> Result<Self> {
        let transform = MsTransform::new(ring, f, seed)?;
        Ok(PolyAmbient { space: transform.ambient().clone(), transform: Some(transform) })
    }

    /// Ambient without spectral data, for any monic `f`.
    pub fn plain(ring: &RingSpec, f: &Poly) -> Result<Self> {
        Ok(PolyAmbient { space: AmbientSpace::new(ring, f.clone())?, transform: None })
    }

    pub fn space(&self) -> &AmbientSpace {
        &self.space
    }

    pub fn transform(&self) -> Option<&MsTransform> {
        self.transform.as_ref()
    }

    pub fn elem(&self, v: &[RingElem]) -> QuotElem {
        self.space.element(v.to_vec()).expect("vector of the ambient dimension")
    }
}

impl Ambient for PolyAmbient {
    fn ring(&self) -> &RingSpec {
        self.space.ring()
    }
    fn dim(&self) -> usize {
        self.space.n()
    }
    fn one_vec(&self) -> Vec<RingElem> {
        self.space.one().into_coeffs()
    }
    fn mul_vec(&self, a: &[RingElem], b: &[RingElem]) -> Vec<RingElem> {
        self.space.mul(&self.elem(a), &self.elem(b)).into_coeffs()
    }
    fn rep(&self, a: &[RingElem]) -> RingMatrix {
        self.space.regular_rep(&self.elem(a))
    }
    fn shift_operators(&self) -> Vec<RingMatrix> {
        vec![self.space.companion().clone()]
    }
    fn idempotent_vecs(&self) -> Result<Vec<Vec<RingElem>>> {
        let t = self.transform.as_ref().ok_or(Error::NotInClassJ)?;
        Ok(t.idempotents().iter().map(|e| e.coeffs().to_vec()).collect())
    }
    fn spectral(&self) -> Option<(&Embedding, &RingMatrix)> {
        self.transform.as_ref().map(|t| (t.embedding(), &t.vandermonde().v))
    }
    fn zero_form_nondegenerate(&self) -> Option<bool> {
        let ring = self.space.ring();
        Some(!ring.is_zero(&self.space.f().coeff(ring, 0)))
    }
}

/// An ideal, stored as the Howell basis of its coefficient module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    basis: HowellBasis,
}

impl Code {
    pub fn basis(&self) -> &HowellBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.ambient_dim()
    }

    pub fn contains(&self, v: &[RingElem]) -> bool {
        self.basis.contains(v)
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn size(&self) -> Option<u128> {
        self.basis.module_size()
    }

    /// Canonical key: equal codes have equal keys.
    pub fn key(&self) -> Vec<Vec<RingElem>> {
        self.rows()
    }

    /// Basis vectors as ambient elements (the rows of the Howell form).
    pub fn rows(&self) -> Vec<Vec<RingElem>> {
        self.basis.rows().map(|r| r.to_vec()).collect()
    }
}

fn check_dim<A: Ambient + ?Sized>(amb: &A, v: &[RingElem]) -> Result<()> {
    if v.len() != amb.dim() {
        return Err(Error::DimensionMismatch { expected: amb.dim(), found: v.len() });
    }
    if v.iter().any(|c| !amb.ring().contains(c)) {
        return Err(Error::InvalidInput("coefficient outside the base ring".into()));
    }
    Ok(())
}

/// Ideal generated by `gens`: the module spanned by all `basis_t * g`.
pub fn code_from_generators<A: Ambient + ?Sized>(amb: &A, gens: &[Vec<RingElem>]) -> Result<Code> {
    let mut rows = Vec::new();
    for g in gens {
        check_dim(amb, g)?;
        rows.extend(amb.rep(g).row_vecs());
    }
    let code = Code { basis: HowellBasis::from_rows(amb.ring(), amb.dim(), rows) };
    if !is_ideal(amb, &code) {
        return Err(Error::Certificate("generated module is not closed under the shifts".into()));
    }
    Ok(code)
}

pub fn zero_code<A: Ambient + ?Sized>(amb: &A) -> Code {
    Code { basis: HowellBasis::empty(amb.ring(), amb.dim()) }
}

pub fn full_code<A: Ambient + ?Sized>(amb: &A) -> Code {
    Code { basis: HowellBasis::full(amb.ring(), amb.dim()) }
}

/// Closure certificate: every basis row times every shift operator stays in the code.
pub fn is_ideal<A: Ambient + ?Sized>(amb: &A, code: &Code) -> bool {
    let shifts = amb.shift_operators();
    code.basis.rows().all(|row| shifts.iter().all(|s| code.basis.contains(&s.left_mul_vec(row))))
}

fn code_from_basis(basis: HowellBasis) -> Code {
    Code { basis }
}

/// `Ann(C) = {h : h c = 0 for all c in C}`.
pub fn annihilator<A: Ambient + ?Sized>(amb: &A, code: &Code) -> Result<Code> {
    let reps: Vec<RingMatrix> = code.basis.rows().map(|b| amb.rep(b)).collect();
    if reps.is_empty() {
        return Ok(full_code(amb));
    }
    Ok(code_from_basis(RingMatrix::hstack(&reps)?.kernel()))
}

/// The bilinear forms a dual can be taken against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DualForm {
    /// `trace(M(ab))`
    Trace,
    /// `sum_i MS(a)_i MS(b)_i`
    Star,
    /// constant coefficient of `ab`
    Zero,
    /// `MS(a) * MS(b) = 0` componentwise
    Ms,
}

impl DualForm {
    pub const ALL: [DualForm; 4] = [DualForm::Trace, DualForm::Star, DualForm::Zero, DualForm::Ms];

    pub fn name(self) -> &'static str {
        match self {
            DualForm::Trace => "trace",
            DualForm::Star => "star",
            DualForm::Zero => "zero",
            DualForm::Ms => "ms",
        }
    }

    pub fn parse(s: &str) -> Option<DualForm> {
        DualForm::ALL.into_iter().find(|f| f.name() == s || (s == "tr" && *f == DualForm::Trace))
    }
}

/// `tau_t = trace(M(basis_t))`, so that `trace(M(v)) = v . tau`.
pub fn trace_vector<A: Ambient + ?Sized>(amb: &A) -> Vec<RingElem> {
    let ring = amb.ring();
    (0..amb.dim())
        .map(|t| {
            let mut e = vec![ring.zero(); amb.dim()];
            e[t] = ring.one();
            amb.rep(&e).trace().unwrap()
        })
        .collect()
}

fn kernel_of_columns(ring: &RingSpec, n: usize, cols: &[Vec<RingElem>]) -> Result<HowellBasis> {
    if cols.is_empty() {
        return Ok(HowellBasis::full(ring, n));
    }
    let mut m = RingMatrix::zeros(ring, n, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    Ok(m.kernel())
}

/// Dual of `code` under `form`; all four coincide with `Ann(C)` for class-J ambients.
pub fn dual<A: Ambient + ?Sized>(amb: &A, code: &Code, form: DualForm) -> Result<Code> {
    let ring = amb.ring();
    let n = amb.dim();
    let basis: Vec<&[RingElem]> = code.basis.rows().collect();
    match form {
        DualForm::Trace => {
            // <h, b> = rho(h) M(b) tau
            let tau = trace_vector(amb);
            let cols: Vec<Vec<RingElem>> = basis.iter().map(|b| mat_vec(&amb.rep(b), &tau)).collect();
            Ok(code_from_basis(kernel_of_columns(ring, n, &cols)?))
        }
        DualForm::Zero => {
            match amb.zero_form_nondegenerate() {
                Some(true) => {}
                Some(false) => return Err(Error::DegenerateForm),
                None => return Err(Error::InvalidInput("the zero form is not defined on this ambient".into())),
            }
            let cols: Vec<Vec<RingElem>> = basis.iter().map(|b| amb.rep(b).column(0)).collect();
            Ok(code_from_basis(kernel_of_columns(ring, n, &cols)?))
        }
        DualForm::Star | DualForm::Ms => {
            let (emb, v) = amb.spectral().ok_or(Error::NotInClassJ)?;
            let ext = emb.target();
            let mut cols = Vec::new();
            for b in &basis {
                let gb: Vec<RingElem> = b.iter().map(|c| emb.apply(c)).collect();
                let spec = v.left_mul_vec(&gb);
                if form == DualForm::Star {
                    // sum_i (h V)_i B_i = h . (V B)
                    cols.push(mat_vec(v, &spec));
                } else {
                    for (i, bi) in spec.iter().enumerate() {
                        cols.push(v.column(i).iter().map(|x| ext.mul(x, bi)).collect());
                    }
                }
            }
            Ok(code_from_basis(base_ring_kernel(emb, n, &cols)?))
        }
    }
}

fn mat_vec(m: &RingMatrix, v: &[RingElem]) -> Vec<RingElem> {
    let r = m.ring();
    (0..m.rows())
        .map(|i| m.row(i).iter().zip(v).fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b))))
        .collect()
}

/// All available duals next to `Ann(C)`.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub annihilator: Code,
    /// Forms computed, in [`DualForm::ALL`] order; forms that are unavailable
    /// on the ambient are skipped.
    pub duals: Vec<(DualForm, Code)>,
}

impl DualityReport {
    pub fn all_equal(&self) -> bool {
        self.duals.iter().all(|(_, c)| *c == self.annihilator)
    }

    pub fn get(&self, form: DualForm) -> Option<&Code> {
        self.duals.iter().find(|(f, _)| *f == form).map(|(_, c)| c)
    }
}

pub fn check_duality<A: Ambient + ?Sized>(amb: &A, code: &Code) -> Result<DualityReport> {
    let annihilator = annihilator(amb, code)?;
    let mut duals = Vec::new();
    for form in DualForm::ALL {
        match dual(amb, code, form) {
            Ok(c) => duals.push((form, c)),
            Err(Error::DegenerateForm) => {}
            Err(Error::InvalidInput(_)) if form == DualForm::Zero => {}
            Err(e) => return Err(e),
        }
    }
    Ok(DualityReport { annihilator, duals })
}

/// Idempotent decomposition: `e_i C = p^{k_i} (R e_i)`, with `k_i = r` when
/// the component is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub conductors: Vec<u32>,
    pub r: u32,
}

impl Decomposition {
    /// Free codes are direct sums of whole components.
    pub fn is_free(&self) -> bool {
        self.conductors.iter().all(|&k| k == 0 || k == self.r)
    }

    /// Indices of components present in full.
    pub fn full_components(&self) -> Vec<usize> {
        (0..self.conductors.len()).filter(|&i| self.conductors[i] == 0).collect()
    }

    /// Indices of components that are absent.
    pub fn absent_components(&self) -> Vec<usize> {
        (0..self.conductors.len()).filter(|&i| self.conductors[i] == self.r).collect()
    }
}

pub fn decompose<A: Ambient + ?Sized>(amb: &A, code: &Code) -> Result<Decomposition> {
    let ring = amb.ring();
    let idems = amb.idempotent_vecs()?;
    let mut conductors = Vec::with_capacity(idems.len());
    for e in &idems {
        let k = code
            .basis
            .rows()
            .flat_map(|b| amb.mul_vec(e, b))
            .map(|c| ring.valuation(&c))
            .min()
            .unwrap_or(ring.r());
        conductors.push(k.min(ring.r()));
    }
    let d = Decomposition { conductors, r: ring.r() };
    if reassemble(amb, &d)? != *code {
        return Err(Error::Certificate("components do not reassemble the code".into()));
    }
    Ok(d)
}

/// The code generated by `p^{k_i} e_i`.
pub fn reassemble<A: Ambient + ?Sized>(amb: &A, d: &Decomposition) -> Result<Code> {
    let ring = amb.ring();
    let idems = amb.idempotent_vecs()?;
    if idems.len() != d.conductors.len() {
        return Err(Error::DimensionMismatch { expected: idems.len(), found: d.conductors.len() });
    }
    let gens: Vec<Vec<RingElem>> = idems
        .iter()
        .zip(&d.conductors)
        .filter(|(_, &k)| k < ring.r())
        .map(|(e, &k)| {
            let s = ring.from_u64(ring.p_pow(k));
            e.iter().map(|c| ring.mul(c, &s)).collect()
        })
        .collect();
    code_from_generators(amb, &gens)
}

/// Sum of the components `R e_i` for `i` in `indices`.
pub fn component_sum<A: Ambient + ?Sized>(amb: &A, indices: &[usize]) -> Result<Code> {
    let idems = amb.idempotent_vecs()?;
    let gens = indices
        .iter()
        .map(|&i| idems.get(i).cloned().ok_or_else(|| Error::InvalidInput(format!("no component {i}"))))
        .collect::<Result<Vec<_>>>()?;
    code_from_generators(amb, &gens)
}

pub fn generator_matrix(code: &Code) -> RingMatrix {
    code.basis.matrix().clone()
}

/// Minimum distance; `empty` marks the zero code, whose distance is reported as 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinDistance {
    pub distance: usize,
    pub empty: bool,
}

pub const MIN_DISTANCE_BUDGET: u128 = 1 << 24;

pub fn min_distance(code: &Code) -> Result<MinDistance> {
    min_distance_with_budget(code, MIN_DISTANCE_BUDGET)
}

pub fn min_distance_with_budget(code: &Code, budget: u128) -> Result<MinDistance> {
    if code.is_zero() {
        return Ok(MinDistance { distance: 0, empty: true });
    }
    let size = code.size().unwrap_or(u128::MAX);
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    let ring = code.basis.ring().clone();
    let mut best = usize::MAX;
    code.basis.for_each_element(|v| {
        let w = hamming_weight(&ring, v);
        if w > 0 && w < best {
            best = w;
        }
    });
    Ok(MinDistance { distance: best, empty: false })
}

/// Every ideal of a small ambient: principal ideals of all elements, closed
/// under sums. Intended as a brute-force oracle.
pub fn brute_force_ideals<A: Ambient + ?Sized>(amb: &A) -> Result<Vec<Code>> {
    let ring = amb.ring();
    let size = ring.cardinality().unwrap();
    let total = size
        .checked_pow(amb.dim() as u32)
        .filter(|&t| t <= 1 << 16)
        .ok_or(Error::BudgetExceeded { size: u128::MAX, budget: 1 << 16 })?;
    let mut ideals: BTreeMap<Vec<Vec<RingElem>>, Code> = BTreeMap::new();
    for mut idx in 0..total {
        let g: Vec<RingElem> = (0..amb.dim())
            .map(|_| {
                let c = ring.from_index(idx % size);
                idx /= size;
                c
            })
            .collect();
        let c = code_from_generators(amb, &[g])?;
        ideals.insert(c.key(), c);
    }
    loop {
        let list: Vec<Code> = ideals.values().cloned().collect();
        let mut grown = false;
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                let s = Code { basis: a.basis.sum(&b.basis) };
                grown |= ideals.insert(s.key(), s).is_none();
            }
        }
        if !grown {
            break;
        }
    }
    Ok(ideals.into_values().collect())
}

/// Every idempotent of a small ambient, by exhaustive search.
pub fn brute_force_idempotents<A: Ambient + ?Sized>(amb: &A) -> Result<Vec<Vec<RingElem>>> {
    let ring = amb.ring();
    let size = ring.cardinality().unwrap();
    let total = size
        .checked_pow(amb.dim() as u32)
        .filter(|&t| t <= 1 << 16)
        .ok_or(Error::BudgetExceeded { size: u128::MAX, budget: 1 << 16 })?;
    let mut out = Vec::new();
    for mut idx in 0..total {
        let g: Vec<RingElem> = (0..amb.dim())
            .map(|_| {
                let c = ring.from_index(idx % size);
                idx /= size;
                c
            })
            .collect();
        if amb.mul_vec(&g, &g) == g {
            out.push(g);
        }
    }
    Ok(out)
}
