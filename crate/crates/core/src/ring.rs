//! Galois rings `GR(p^r, m) = Z_{p^r}[y] / <h(y)>` and their residue fields.
//!
//! A ring is described by a cheaply clonable [`RingSpec`]; elements are plain
//! coordinate vectors in the power basis `1, y, ..., y^{m-1}` and all arithmetic
//! goes through the spec. For `m = 1` the ring is `Z_{p^r}` and elements have a
//! single coordinate.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::factor;
use crate::poly::Poly;

#[derive(Debug)]
struct RingData {
    p: u64,
    r: u32,
    m: usize,
    q: u64,
    /// Monic modulus, ascending, length `m + 1`. `[0, 1]` when `m = 1`.
    modulus: Vec<u64>,
    /// `y^{m+k}` reduced into the power basis, for `k < m - 1`.
    reduction: Vec<Vec<u64>>,
    residue: OnceLock<RingSpec>,
}

/// A finite chain ring `GR(p^r, m)`.
#[derive(Clone)]
pub struct RingSpec {
    inner: Arc<RingData>,
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.p() == other.p()
                && self.r() == other.r()
                && self.m() == other.m()
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for RingSpec {}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            write!(f, "Z_{}", self.q())
        } else {
            write!(f, "GR({}, {}) mod {:?}", self.q(), self.m(), self.inner.modulus)
        }
    }
}

/// Element of a Galois ring: `m` coordinates in `[0, p^r)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RingElem {
    coeffs: Vec<u64>,
}

impl RingElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

/// Element of the residue field `F_{p^m}`, coordinates in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FieldElem {
    coeffs: Vec<u64>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

impl RingSpec {
    /// `GR(p^r, m)` with the deterministic modulus: the trivial lift of the
    /// smallest monic irreducible of degree `m` over `F_p`, where polynomials are
    /// ordered by the integer `sum c_i p^i` of their lower coefficients.
    pub fn new(p: u64, r: u32, m: usize) -> Result<Self> {
        Self::validate_params(p, r, m)?;
        if m == 1 {
            return Self::build(p, r, vec![0, 1]);
        }
        let fp = Self::build(p, 1, vec![0, 1])?;
        let count = checked_pow(p, m as u32)
            .ok_or_else(|| Error::InvalidRing("residue field too large".into()))?;
        for enc in 0..count {
            let mut coeffs = Vec::with_capacity(m + 1);
            let mut e = enc;
            for _ in 0..m {
                coeffs.push(e % p);
                e /= p;
            }
            if coeffs[0] == 0 {
                continue;
            }
            coeffs.push(1);
            let poly = Poly::new(coeffs.iter().map(|&c| fp.from_u64(c)).collect());
            if factor::is_irreducible_over_field(&fp, &poly) {
                return Self::build(p, r, coeffs);
            }
        }
        Err(Error::InvalidRing(format!("no irreducible of degree {m} over F_{p}")))
    }

    /// `GR(p^r, m)` with an explicit monic modulus (ascending, degree `m`).
    pub fn with_modulus(p: u64, r: u32, modulus: Vec<u64>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidRing("modulus must have degree >= 1".into()));
        }
        let m = modulus.len() - 1;
        Self::validate_params(p, r, m)?;
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidRing("modulus must be monic".into()));
        }
        let q = checked_pow(p, r).unwrap();
        if modulus.iter().any(|&c| c >= q) {
            return Err(Error::InvalidRing("modulus coefficient out of range".into()));
        }
        if m == 1 {
            // Z_{p^r}; any linear modulus describes the same ring.
            return Self::build(p, r, vec![0, 1]);
        }
        let fp = Self::build(p, 1, vec![0, 1])?;
        let residue = Poly::new(modulus.iter().map(|&c| fp.from_u64(c % p)).collect());
        if !factor::is_irreducible_over_field(&fp, &residue) {
            return Err(Error::InvalidRing(
                "modulus is not irreducible modulo p".into(),
            ));
        }
        Self::build(p, r, modulus)
    }

    fn validate_params(p: u64, r: u32, m: usize) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 || m == 0 {
            return Err(Error::InvalidRing("r and m must be positive".into()));
        }
        match checked_pow(p, r) {
            Some(q) if q < (1 << 31) => Ok(()),
            _ => Err(Error::InvalidRing("p^r must be below 2^31".into())),
        }
    }

    fn build(p: u64, r: u32, modulus: Vec<u64>) -> Result<Self> {
        let q = checked_pow(p, r).unwrap();
        let m = modulus.len() - 1;
        let mut reduction = Vec::new();
        if m > 1 {
            // y^m = -sum h_i y^i
            let mut cur: Vec<u64> = modulus[..m].iter().map(|&c| (q - c) % q).collect();
            for _ in 0..m - 1 {
                reduction.push(cur.clone());
                let top = cur[m - 1];
                let mut next = vec![0u64; m];
                for i in (1..m).rev() {
                    next[i] = cur[i - 1];
                }
                for i in 0..m {
                    let t = (top as u128 * reduction[0][i] as u128 % q as u128) as u64;
                    next[i] = (next[i] + t) % q;
                }
                cur = next;
            }
        }
        Ok(RingSpec {
            inner: Arc::new(RingData { p, r, m, q, modulus, reduction, residue: OnceLock::new() }),
        })
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn r(&self) -> u32 {
        self.inner.r
    }

    pub fn m(&self) -> usize {
        self.inner.m
    }

    /// The characteristic `p^r`.
    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Modulus coefficients (ascending); `None` for `Z_{p^r}`.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.m() == 1 {
            None
        } else {
            Some(&self.inner.modulus)
        }
    }

    /// Number of elements, `p^{r m}`. `None` on overflow.
    pub fn cardinality(&self) -> Option<u128> {
        (self.q() as u128).checked_pow(self.m() as u32)
    }

    pub fn residue_field(&self) -> RingSpec {
        if self.r() == 1 {
            return self.clone();
        }
        self.inner
            .residue
            .get_or_init(|| {
                let p = self.p();
                let modulus = self.inner.modulus.iter().map(|&c| c % p).collect();
                Self::build(p, 1, modulus).unwrap()
            })
            .clone()
    }

    /// Same residue data with a different nilpotency exponent.
    pub fn with_exponent(&self, r: u32) -> Result<RingSpec> {
        Self::validate_params(self.p(), r, self.m())?;
        let q = checked_pow(self.p(), r).unwrap();
        let modulus = self.inner.modulus.iter().map(|&c| c % q).collect();
        Self::build(self.p(), r, modulus)
    }

    pub fn zero(&self) -> RingElem {
        RingElem { coeffs: vec![0; self.m()] }
    }

    pub fn one(&self) -> RingElem {
        self.from_u64(1)
    }

    /// The generator `y`; the constant `0` when `m = 1`.
    pub fn generator(&self) -> RingElem {
        let mut coeffs = vec![0; self.m()];
        if self.m() > 1 {
            coeffs[1] = 1;
        }
        RingElem { coeffs }
    }

    pub fn from_u64(&self, c: u64) -> RingElem {
        let mut coeffs = vec![0; self.m()];
        coeffs[0] = c % self.q();
        RingElem { coeffs }
    }

    pub fn from_i64(&self, c: i64) -> RingElem {
        let q = self.q() as i64;
        self.from_u64(c.rem_euclid(q) as u64)
    }

    /// Validating constructor.
    pub fn elem(&self, coeffs: Vec<u64>) -> Result<RingElem> {
        if coeffs.len() != self.m() {
            return Err(Error::DimensionMismatch { expected: self.m(), found: coeffs.len() });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.q()) {
            return Err(Error::InvalidInput(format!(
                "coordinate {c} outside [0, {})",
                self.q()
            )));
        }
        Ok(RingElem { coeffs })
    }

    /// Constructor that reduces every coordinate modulo `p^r`.
    pub fn elem_reduced(&self, coeffs: &[u64]) -> RingElem {
        assert_eq!(coeffs.len(), self.m());
        RingElem { coeffs: coeffs.iter().map(|&c| c % self.q()).collect() }
    }

    pub fn contains(&self, a: &RingElem) -> bool {
        a.coeffs.len() == self.m() && a.coeffs.iter().all(|&c| c < self.q())
    }

    pub fn is_zero(&self, a: &RingElem) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, a: &RingElem) -> bool {
        a.coeffs[0] == 1 && a.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let q = self.q();
        RingElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + y) % q).collect(),
        }
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let q = self.q();
        RingElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + q - y) % q).collect(),
        }
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        let q = self.q();
        RingElem { coeffs: a.coeffs.iter().map(|&x| (q - x) % q).collect() }
    }

    /// Multiplication by an integer scalar.
    pub fn scale_int(&self, a: &RingElem, k: u64) -> RingElem {
        let q = self.q() as u128;
        let k = k as u128 % q;
        RingElem { coeffs: a.coeffs.iter().map(|&x| (x as u128 * k % q) as u64).collect() }
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let q = self.q() as u128;
        let m = self.m();
        if m == 1 {
            return RingElem { coeffs: vec![(a.coeffs[0] as u128 * b.coeffs[0] as u128 % q) as u64] };
        }
        let mut prod = vec![0u128; 2 * m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % q;
            }
        }
        let mut out: Vec<u128> = prod[..m].to_vec();
        for (k, &hi) in prod[m..].iter().enumerate() {
            if hi == 0 {
                continue;
            }
            for (o, &red) in out.iter_mut().zip(&self.inner.reduction[k]) {
                *o = (*o + hi * red as u128) % q;
            }
        }
        RingElem { coeffs: out.into_iter().map(|c| c as u64).collect() }
    }

    pub fn pow(&self, a: &RingElem, mut e: u64) -> RingElem {
        let mut base = a.clone();
        let mut acc = self.one();
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

    pub fn residue(&self, a: &RingElem) -> FieldElem {
        let p = self.p();
        FieldElem { coeffs: a.coeffs.iter().map(|&c| c % p).collect() }
    }

    /// Teichmuller-free lift of a residue: same coordinates read in `Z_{p^r}`.
    pub fn lift_residue(&self, a: &FieldElem) -> RingElem {
        RingElem { coeffs: a.coeffs.clone() }
    }

    /// Integer key of the residue, `sum (c_i mod p) p^i`. Orders roots and factors.
    pub fn residue_key(&self, a: &RingElem) -> u128 {
        let p = self.p() as u128;
        a.coeffs.iter().rev().fold(0u128, |acc, &c| acc * p + (c as u128 % p))
    }

    /// Index of the element in `0..|R|`, `sum c_i q^i`.
    pub fn index_of(&self, a: &RingElem) -> u128 {
        let q = self.q() as u128;
        a.coeffs.iter().rev().fold(0u128, |acc, &c| acc * q + c as u128)
    }

    pub fn from_index(&self, mut idx: u128) -> RingElem {
        let q = self.q() as u128;
        let mut coeffs = Vec::with_capacity(self.m());
        for _ in 0..self.m() {
            coeffs.push((idx % q) as u64);
            idx /= q;
        }
        RingElem { coeffs }
    }

    /// All elements in index order. Intended for small rings.
    pub fn elements(&self) -> impl Iterator<Item = RingElem> + '_ {
        let n = self.cardinality().expect("ring too large to enumerate");
        (0..n).map(move |i| self.from_index(i))
    }

    pub fn units(&self) -> Vec<RingElem> {
        self.elements().filter(|a| self.is_unit(a)).collect()
    }

    pub fn is_unit(&self, a: &RingElem) -> bool {
        let p = self.p();
        a.coeffs.iter().any(|&c| c % p != 0)
    }

    /// `p`-adic valuation: largest `k` with `a in p^k R`; `r` for zero.
    pub fn valuation(&self, a: &RingElem) -> u32 {
        a.coeffs
            .iter()
            .filter(|&&c| c != 0)
            .map(|&c| {
                let mut v = 0;
                let mut c = c;
                while c % self.p() == 0 {
                    c /= self.p();
                    v += 1;
                }
                v
            })
            .min()
            .unwrap_or(self.r())
    }

    pub fn p_pow(&self, k: u32) -> u64 {
        if k >= self.r() {
            0
        } else {
            checked_pow(self.p(), k).unwrap()
        }
    }

    /// Canonical representative of `a` modulo the ideal `p^k R`.
    pub fn reduce_mod_p_pow(&self, a: &RingElem, k: u32) -> RingElem {
        if k >= self.r() {
            return a.clone();
        }
        let pk = self.p_pow(k);
        RingElem { coeffs: a.coeffs.iter().map(|&c| c % pk).collect() }
    }

    /// `a / p^k` for `a in p^k R`, as the representative with coordinates
    /// below `p^{r-k}`.
    pub fn div_p_pow(&self, a: &RingElem, k: u32) -> RingElem {
        debug_assert!(self.valuation(a) >= k);
        if k == 0 {
            return a.clone();
        }
        let pk = checked_pow(self.p(), k).unwrap();
        RingElem { coeffs: a.coeffs.iter().map(|&c| c / pk).collect() }
    }

    /// Some `t` with `t * b = a`, when one exists.
    pub fn div_exact(&self, a: &RingElem, b: &RingElem) -> Option<RingElem> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        let vb = self.valuation(b);
        if vb >= self.r() || self.valuation(a) < vb {
            return None;
        }
        let a1 = self.div_p_pow(a, vb);
        let b1 = self.div_p_pow(b, vb);
        let t = self.mul(&a1, &self.invert(&b1).ok()?);
        debug_assert_eq!(&self.mul(&t, b), a);
        Some(t)
    }

    /// Inverse of a unit: invert the residue, then Newton-lift `v <- v (2 - u v)`.
    pub fn invert(&self, u: &RingElem) -> Result<RingElem> {
        if !self.is_unit(u) {
            return Err(Error::NonUnit);
        }
        let field = self.residue_field();
        let ubar = field.elem_reduced(&self.residue(u).coeffs);
        let order = checked_pow(self.p(), self.m() as u32)
            .ok_or_else(|| Error::InvalidRing("residue field too large".into()))?;
        let vbar = field.pow(&ubar, order - 2);
        let mut v = RingElem { coeffs: vbar.coeffs };
        let two = self.from_u64(2);
        let mut precision = 1;
        while precision < self.r() {
            let uv = self.mul(u, &v);
            v = self.mul(&v, &self.sub(&two, &uv));
            precision *= 2;
        }
        debug_assert!(self.is_one(&self.mul(u, &v)));
        Ok(v)
    }

    /// Whether `a` lies in the subring `Z_{p^r}` (all higher coordinates zero).
    pub fn is_constant(&self, a: &RingElem) -> bool {
        a.coeffs[1..].iter().all(|&c| c == 0)
    }
}

/// Unital ring morphism `GR(p^r, m) -> GR(p^r, m l)` fixed by the image of `y`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: RingSpec,
    target: RingSpec,
    image_of_generator: RingElem,
    /// Images of `1, y, ..., y^{m-1}`.
    basis_images: Vec<RingElem>,
}

impl Embedding {
    /// Embedding sending `y` to the root of the source modulus in `target` whose
    /// residue has the smallest key. The identity when the rings coincide.
    pub fn new(source: &RingSpec, target: &RingSpec) -> Result<Self> {
        if source.p() != target.p() || source.r() != target.r() || !target.m().is_multiple_of(source.m()) {
            return Err(Error::IncompatibleRings(format!("{source:?} does not embed in {target:?}")));
        }
        if source == target || source.m() == 1 {
            let image = if source.m() == 1 { target.zero() } else { target.generator() };
            return Self::with_generator(source, target, image);
        }
        let modulus = Poly::new(
            source.inner.modulus.iter().map(|&c| target.from_u64(c)).collect(),
        );
        let field = target.residue_field();
        let modulus_bar = modulus.residue(target, &field);
        let mut roots = factor::field_roots(&field, &modulus_bar, 0)?;
        roots.sort_by_key(|a| field.residue_key(a));
        let root = roots
            .first()
            .ok_or_else(|| Error::Certificate("modulus has no root in the target".into()))?;
        let lifted = factor::newton_lift_root(target, &modulus, &target.lift_residue(&field.residue(root)))?;
        Self::with_generator(source, target, lifted)
    }

    /// Embedding with an explicit image of `y`, checked to be a root of the
    /// source modulus.
    pub fn with_generator(source: &RingSpec, target: &RingSpec, image: RingElem) -> Result<Self> {
        if source.p() != target.p() || source.r() != target.r() || !target.m().is_multiple_of(source.m()) {
            return Err(Error::IncompatibleRings(format!("{source:?} does not embed in {target:?}")));
        }
        if !target.contains(&image) {
            return Err(Error::InvalidInput("generator image is not a target element".into()));
        }
        let mut basis_images = vec![target.one()];
        for _ in 1..source.m() {
            let last = basis_images.last().unwrap();
            basis_images.push(target.mul(last, &image));
        }
        if source.m() > 1 {
            let modulus = Poly::new(
                source.inner.modulus.iter().map(|&c| target.from_u64(c)).collect(),
            );
            if !target.is_zero(&modulus.eval(target, &image)) {
                return Err(Error::InvalidInput(
                    "generator image is not a root of the source modulus".into(),
                ));
            }
        }
        Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            image_of_generator: image,
            basis_images,
        })
    }

    pub fn identity(ring: &RingSpec) -> Self {
        Self::with_generator(ring, ring, if ring.m() == 1 { ring.zero() } else { ring.generator() })
            .unwrap()
    }

    pub fn source(&self) -> &RingSpec {
        &self.source
    }

    pub fn target(&self) -> &RingSpec {
        &self.target
    }

    pub fn image_of_generator(&self) -> &RingElem {
        &self.image_of_generator
    }

    /// Images of the source power basis `1, y, ..., y^{m-1}`.
    pub fn basis_images(&self) -> &[RingElem] {
        &self.basis_images
    }

    pub fn apply(&self, a: &RingElem) -> RingElem {
        let t = &self.target;
        let mut acc = t.zero();
        for (&c, img) in a.coeffs.iter().zip(&self.basis_images) {
            if c != 0 {
                acc = t.add(&acc, &t.scale_int(img, c));
            }
        }
        acc
    }

    /// The unique source element mapping to `b`, if `b` is in the image.
    pub fn preimage(&self, b: &RingElem) -> Option<RingElem> {
        let s = &self.source;
        if s.m() == 1 {
            return if self.target.is_constant(b) {
                Some(s.from_u64(b.coeffs[0]))
            } else {
                None
            };
        }
        // Solve sum_t c_t img_t = b over Z_{p^r}.
        let zq = RingSpec::build(s.p(), s.r(), vec![0, 1]).unwrap();
        let rows: Vec<Vec<RingElem>> = self
            .basis_images
            .iter()
            .map(|img| img.coeffs.iter().map(|&c| zq.from_u64(c)).collect())
            .collect();
        let rhs: Vec<RingElem> = b.coeffs.iter().map(|&c| zq.from_u64(c)).collect();
        let sol = crate::linalg::solve_left(&zq, &rows, &rhs)?;
        let cand = RingElem { coeffs: sol.iter().map(|e| e.coeffs[0]).collect() };
        (self.apply(&cand) == *b).then_some(cand)
    }
}
