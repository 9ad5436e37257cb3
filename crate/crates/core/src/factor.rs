//! Factorization of polynomials in class J (squarefree residue), Hensel
//! lifting, splitting extensions and primitive idempotents.
//!
//! Residue factorization is distinct-degree splitting followed by
//! Cantor-Zassenhaus equal-degree splitting. The only randomness is in the
//! equal-degree step; it draws from a generator seeded per call and the factor
//! list is canonicalized afterwards, so results never depend on the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{ext_gcd_field, gcd_field, Poly};
use crate::quotient::{AmbientSpace, QuotElem};
use crate::ring::{Embedding, RingElem, RingSpec};

fn field_order(field: &RingSpec) -> u128 {
    field.cardinality().expect("field order fits u128")
}

/// Rabin's test over a finite field (`field.r() == 1`).
pub fn is_irreducible_over_field(field: &RingSpec, g: &Poly) -> bool {
    let Some(d) = g.degree() else { return false };
    if d == 0 {
        return false;
    }
    let Ok(g) = g.make_monic(field) else { return false };
    if d == 1 {
        return true;
    }
    let q = field_order(field);
    let x = Poly::x(field);
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = h.pow_mod(q, &g, field);
        if gcd_field(&h.sub(&x, field), &g, field).degree() != Some(0) {
            return false;
        }
    }
    // Rabin also needs x^{q^d} = x mod g.
    let mut h = x.clone();
    for _ in 0..d {
        h = h.pow_mod(q, &g, field);
    }
    h == x.rem_monic(&g, field)
}

/// Whether a monic `f` has a squarefree residue: `gcd(fbar, fbar') = 1`.
pub fn in_class_j(ring: &RingSpec, f: &Poly) -> Result<bool> {
    if !f.is_monic(ring) {
        return Err(Error::NotMonic);
    }
    let field = ring.residue_field();
    let fbar = f.residue(ring, &field);
    if fbar.degree() == Some(0) {
        return Ok(true);
    }
    Ok(gcd_field(&fbar, &fbar.derivative(&field), &field).degree() == Some(0))
}

fn is_squarefree_field(field: &RingSpec, g: &Poly) -> bool {
    gcd_field(g, &g.derivative(field), field).degree() == Some(0)
}

/// Complete factorization of a squarefree polynomial over a finite field into
/// monic irreducibles, sorted by degree then coefficients from the top down.
pub fn factor_residue(field: &RingSpec, fbar: &Poly, seed: u64) -> Result<Vec<Poly>> {
    if field.r() != 1 {
        return Err(Error::InvalidInput("factor_residue expects a field".into()));
    }
    if fbar.is_zero() {
        return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
    }
    let g = fbar.make_monic(field)?;
    if g.degree() == Some(0) {
        return Ok(Vec::new());
    }
    if !is_squarefree_field(field, &g) {
        return Err(Error::NotSquarefree);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (d, part) in distinct_degree(field, &g) {
        equal_degree(field, &part, d, &mut rng, &mut out);
    }
    out.sort_by_key(|p| p.sort_key(field));
    Ok(out)
}

fn distinct_degree(field: &RingSpec, g: &Poly) -> Vec<(usize, Poly)> {
    let q = field_order(field);
    let x = Poly::x(field);
    let mut rest = g.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if deg < 2 * d {
            out.push((deg, rest.clone()));
            break;
        }
        h = h.pow_mod(q, &rest, field);
        let part = gcd_field(&h.sub(&x, field), &rest, field);
        if part.degree() != Some(0) {
            rest = rest.div_rem(&part, field).unwrap().0;
            h = h.rem_monic(&rest, field);
            out.push((d, part));
        }
    }
    out
}

fn random_poly(field: &RingSpec, deg_bound: usize, rng: &mut ChaCha8Rng) -> Poly {
    let q = field_order(field);
    Poly::new((0..deg_bound).map(|_| field.from_index(rng.gen_range(0..q))).collect())
}

fn equal_degree(field: &RingSpec, g: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = g.degree().unwrap();
    if n == d {
        out.push(g.clone());
        return;
    }
    let q = field_order(field);
    loop {
        let a = random_poly(field, n, rng);
        if a.degree().is_none_or(|k| k == 0) {
            continue;
        }
        let b = if field.p() == 2 {
            // absolute trace to F_2 of a in F_{q^d}[x]/(factor)
            let bits = (q.trailing_zeros() as usize) * d;
            let mut t = a.rem_monic(g, field);
            let mut cur = t.clone();
            for _ in 1..bits {
                cur = cur.mul(&cur, field).rem_monic(g, field);
                t = t.add(&cur, field);
            }
            t
        } else {
            // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
            let mut norm = a.rem_monic(g, field);
            let mut cur = norm.clone();
            for _ in 1..d {
                cur = cur.pow_mod(q, g, field);
                norm = norm.mul(&cur, field).rem_monic(g, field);
            }
            norm.pow_mod((q - 1) / 2, g, field).sub(&Poly::one(field), field)
        };
        let split = gcd_field(&b, g, field);
        if let Some(k) = split.degree() {
            if k > 0 && k < n {
                let other = g.div_rem(&split, field).unwrap().0;
                equal_degree(field, &split, d, rng, out);
                equal_degree(field, &other, d, rng, out);
                return;
            }
        }
    }
}

/// Roots in `field` of a nonzero polynomial over `field`.
pub fn field_roots(field: &RingSpec, g: &Poly, seed: u64) -> Result<Vec<RingElem>> {
    let g = g.make_monic(field)?;
    if g.degree().is_none_or(|d| d == 0) {
        return Ok(Vec::new());
    }
    let q = field_order(field);
    let x = Poly::x(field);
    let xq = x.pow_mod(q, &g, field);
    let linear_part = gcd_field(&xq.sub(&x, field), &g, field);
    if linear_part.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lin = Vec::new();
    equal_degree(field, &linear_part, 1, &mut rng, &mut lin);
    let mut roots: Vec<RingElem> = lin.iter().map(|l| field.neg(&l.coeffs()[0])).collect();
    roots.sort_by_key(|a| field.residue_key(a));
    Ok(roots)
}

/// Newton iteration `a <- a - f(a) / f'(a)` from a simple residue root.
pub fn newton_lift_root(ring: &RingSpec, f: &Poly, approx: &RingElem) -> Result<RingElem> {
    let df = f.derivative(ring);
    let mut a = approx.clone();
    if !ring.is_zero(&ring.residue_field().elem_reduced(ring.residue(&f.eval(ring, &a)).coeffs())) {
        return Err(Error::InvalidInput("starting point is not a residue root".into()));
    }
    let mut precision = 1;
    loop {
        let d = ring.invert(&df.eval(ring, &a)).map_err(|_| Error::NotInClassJ)?;
        a = ring.sub(&a, &ring.mul(&f.eval(ring, &a), &d));
        if precision >= ring.r() {
            break;
        }
        precision *= 2;
    }
    if !ring.is_zero(&f.eval(ring, &a)) {
        return Err(Error::Certificate("Newton lift did not converge".into()));
    }
    Ok(a)
}

/// Factorization `f = prod f_i` into pairwise coprime monic factors whose
/// residues are irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub f: Poly,
    pub factors: Vec<Poly>,
    /// Residues of `factors`, over the residue field.
    pub residue_factors: Vec<Poly>,
}

/// Quadratic Hensel lifting of a pairwise coprime residue factorization of `f`.
/// Lifted factors keep the order of `residue_factors`.
pub fn hensel_lift_factorization(ring: &RingSpec, f: &Poly, residue_factors: &[Poly]) -> Result<Factorization> {
    if !f.is_monic(ring) {
        return Err(Error::NotMonic);
    }
    if !in_class_j(ring, f)? {
        return Err(Error::NotInClassJ);
    }
    let field = ring.residue_field();
    let fbar = f.residue(ring, &field);
    let mut prod = Poly::one(&field);
    for g in residue_factors {
        if !g.is_monic(&field) {
            return Err(Error::NotMonic);
        }
        prod = prod.mul(g, &field);
    }
    if prod != fbar {
        return Err(Error::InvalidInput("residue factors do not multiply to the residue of f".into()));
    }
    let mut factors = Vec::with_capacity(residue_factors.len());
    let mut rest = f.clone();
    for (i, gbar) in residue_factors.iter().enumerate() {
        if i + 1 == residue_factors.len() {
            factors.push(rest.clone());
            break;
        }
        let hbar = residue_factors[i + 1..]
            .iter()
            .fold(Poly::one(&field), |acc, p| acc.mul(p, &field));
        let (g, h) = hensel_pair(ring, &field, &rest, gbar, &hbar)?;
        factors.push(g);
        rest = h;
    }
    let check = factors.iter().fold(Poly::one(ring), |acc, p| acc.mul(p, ring));
    if check != *f {
        return Err(Error::Certificate("lifted factors do not multiply to f".into()));
    }
    Ok(Factorization { f: f.clone(), factors, residue_factors: residue_factors.to_vec() })
}

fn hensel_pair(ring: &RingSpec, field: &RingSpec, f: &Poly, gbar: &Poly, hbar: &Poly) -> Result<(Poly, Poly)> {
    let (gcd, sbar, tbar) = ext_gcd_field(gbar, hbar, field);
    if gcd.degree() != Some(0) {
        return Err(Error::InvalidInput("residue factors are not coprime".into()));
    }
    let mut g = gbar.lift(field, ring);
    let mut h = hbar.lift(field, ring);
    let mut s = sbar.lift(field, ring);
    let mut t = tbar.lift(field, ring);
    let one = Poly::one(ring);
    let mut precision = 1;
    while precision < ring.r() {
        let e = f.sub(&g.mul(&h, ring), ring);
        let (q, r) = s.mul(&e, ring).div_rem(&h, ring)?;
        let g_next = g.add(&t.mul(&e, ring), ring).add(&q.mul(&g, ring), ring);
        let h_next = h.add(&r, ring);
        // g_next agrees with the exact cofactor of the monic h_next to the new precision
        let (g_next, _) = {
            let _ = g_next;
            f.div_rem(&h_next, ring)?
        };
        let b = s.mul(&g_next, ring).add(&t.mul(&h_next, ring), ring).sub(&one, ring);
        let (c, d) = s.mul(&b, ring).div_rem(&h_next, ring)?;
        s = s.sub(&d, ring);
        t = t.sub(&t.mul(&b, ring), ring).sub(&c.mul(&g_next, ring), ring);
        g = g_next;
        h = h_next;
        precision *= 2;
    }
    if g.mul(&h, ring) != *f {
        return Err(Error::Certificate("Hensel step failed".into()));
    }
    Ok((g, h))
}

/// Splitting extension `GR(p^r, m l)` of `f` with its roots in a fixed order.
#[derive(Clone, Debug)]
pub struct SplittingData {
    pub extension: RingSpec,
    pub embedding: Embedding,
    /// Roots sorted by residue key.
    pub roots: Vec<RingElem>,
    /// Index into the factorization of the factor each root belongs to.
    pub root_factor: Vec<usize>,
}

/// Primitive orthogonal idempotents aligned with the factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSet {
    pub idems: Vec<QuotElem>,
}

/// Everything derived from a class-J polynomial: ordered factors, roots and
/// idempotents. Factors are ordered by their smallest root, so the `i`-th
/// idempotent has the `i`-th factor's roots as its spectral support.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub ambient: AmbientSpace,
    pub factorization: Factorization,
    pub splitting: SplittingData,
    pub idempotents: IdempotentSet,
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

/// Smallest extension degree over `R` in which `f` splits.
pub fn splitting_degree(ring: &RingSpec, f: &Poly, seed: u64) -> Result<usize> {
    let field = ring.residue_field();
    let parts = factor_residue(&field, &f.residue(ring, &field), seed)?;
    Ok(parts.iter().fold(1, |acc, g| lcm(acc, g.degree().unwrap())))
}

/// Full analysis of `f`, splitting in `GR(p^r, m * ext_degree)`; `ext_degree`
/// must be a multiple of [`splitting_degree`]. `None` picks the smallest.
pub fn analyze_in(ring: &RingSpec, f: &Poly, ext_degree: Option<usize>, seed: u64) -> Result<Analysis> {
    let ambient = AmbientSpace::new(ring, f.clone())?;
    if !in_class_j(ring, f)? {
        return Err(Error::NotInClassJ);
    }
    let field = ring.residue_field();
    let residue_parts = factor_residue(&field, &f.residue(ring, &field), seed)?;
    let l = residue_parts.iter().fold(1, |acc, g| lcm(acc, g.degree().unwrap()));
    let l = match ext_degree {
        None => l,
        Some(e) if e % l == 0 => e,
        Some(e) => {
            return Err(Error::InvalidInput(format!(
                "f does not split in an extension of degree {e} (needs a multiple of {l})"
            )))
        }
    };
    let (extension, embedding) = if l == 1 {
        (ring.clone(), Embedding::identity(ring))
    } else {
        let ext = RingSpec::new(ring.p(), ring.r(), ring.m() * l)?;
        let emb = Embedding::new(ring, &ext)?;
        (ext, emb)
    };
    let ext_field = extension.residue_field();
    let f_ext = f.map(&embedding);

    // Roots of each residue factor, found in the residue field of the extension.
    let mut tagged: Vec<(RingElem, usize)> = Vec::new();
    for (idx, part) in residue_parts.iter().enumerate() {
        let lifted = part.lift(&field, ring).map(&embedding);
        let part_ext = lifted.residue(&extension, &ext_field);
        let roots = field_roots(&ext_field, &part_ext, seed)?;
        if roots.len() != part.degree().unwrap() {
            return Err(Error::Certificate("residue factor does not split".into()));
        }
        for root in roots {
            let lifted_root = newton_lift_root(&extension, &f_ext, &extension.lift_residue(&ext_field.residue(&root)))?;
            tagged.push((lifted_root, idx));
        }
    }
    tagged.sort_by_key(|(a, _)| extension.residue_key(a));
    for w in tagged.windows(2) {
        if extension.residue_key(&w[0].0) == extension.residue_key(&w[1].0) {
            return Err(Error::NotInClassJ);
        }
    }

    // Order factors by first appearance in the root order.
    let mut order: Vec<usize> = Vec::new();
    for (_, idx) in &tagged {
        if !order.contains(idx) {
            order.push(*idx);
        }
    }
    let ordered_parts: Vec<Poly> = order.iter().map(|&i| residue_parts[i].clone()).collect();
    let rank: Vec<usize> = {
        let mut rank = vec![0; residue_parts.len()];
        for (pos, &i) in order.iter().enumerate() {
            rank[i] = pos;
        }
        rank
    };
    let factorization = hensel_lift_factorization(ring, f, &ordered_parts)?;
    let splitting = SplittingData {
        extension,
        embedding,
        roots: tagged.iter().map(|(a, _)| a.clone()).collect(),
        root_factor: tagged.iter().map(|(_, i)| rank[*i]).collect(),
    };
    let idempotents = compute_idempotents(&ambient, &factorization)?;
    Ok(Analysis { ambient, factorization, splitting, idempotents })
}

pub fn analyze(ring: &RingSpec, f: &Poly, seed: u64) -> Result<Analysis> {
    analyze_in(ring, f, None, seed)
}

/// Ordered factorization of a class-J polynomial.
pub fn factorize(ring: &RingSpec, f: &Poly, seed: u64) -> Result<Factorization> {
    Ok(analyze(ring, f, seed)?.factorization)
}

pub fn splitting_extension(ring: &RingSpec, f: &Poly, seed: u64) -> Result<SplittingData> {
    Ok(analyze(ring, f, seed)?.splitting)
}

pub fn idempotents(ring: &RingSpec, f: &Poly, seed: u64) -> Result<IdempotentSet> {
    Ok(analyze(ring, f, seed)?.idempotents)
}

/// Residue idempotents from extended Euclid, lifted by `e <- 3e^2 - 2e^3`.
pub fn compute_idempotents(ambient: &AmbientSpace, fact: &Factorization) -> Result<IdempotentSet> {
    let ring = ambient.ring();
    let field = ring.residue_field();
    let fbar = fact.f.residue(ring, &field);
    let three = ring.from_u64(3);
    let two = ring.from_u64(2);
    let mut idems = Vec::with_capacity(fact.factors.len());
    for gbar in &fact.residue_factors {
        let cofactor = fbar.div_rem(gbar, &field)?.0;
        let (gcd, _, t) = ext_gcd_field(gbar, &cofactor, &field);
        if gcd.degree() != Some(0) {
            return Err(Error::NotInClassJ);
        }
        let ebar = t.mul(&cofactor, &field).rem_monic(&fbar, &field);
        let mut e = ambient.from_poly(&ebar.lift(&field, ring));
        for _ in 0..=2 * ring.r() {
            let e2 = ambient.mul(&e, &e);
            if e2 == e {
                break;
            }
            let e3 = ambient.mul(&e2, &e);
            e = ambient.sub(&ambient.scale(&e2, &three), &ambient.scale(&e3, &two));
        }
        idems.push(e);
    }
    let set = IdempotentSet { idems };
    verify_idempotents(ambient, &set)?;
    for (e, fi) in set.idems.iter().zip(&fact.factors) {
        if !ambient.is_zero(&ambient.mul(e, &ambient.from_poly(fi))) {
            return Err(Error::Certificate("idempotent does not annihilate its factor".into()));
        }
    }
    Ok(set)
}

/// Completeness, idempotence and orthogonality, all exact.
pub fn verify_idempotents(ambient: &AmbientSpace, set: &IdempotentSet) -> Result<()> {
    let sum = set.idems.iter().fold(ambient.zero(), |acc, e| ambient.add(&acc, e));
    if sum != ambient.one() {
        return Err(Error::Certificate("idempotents do not sum to 1".into()));
    }
    for (i, a) in set.idems.iter().enumerate() {
        for (j, b) in set.idems.iter().enumerate() {
            let prod = ambient.mul(a, b);
            let expected = if i == j { a.clone() } else { ambient.zero() };
            if prod != expected {
                return Err(Error::Certificate(format!("e_{i} e_{j} has the wrong value")));
            }
        }
    }
    Ok(())
}
