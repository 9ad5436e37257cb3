//! Dense matrices over Galois rings: Howell forms, kernels, determinants and
//! inverses.
//!
//! Every nonzero element of a chain ring is `p^v` times a unit, so a column
//! always has an entry of minimal valuation that divides all others. Elimination
//! uses such pivots; `Howell` canonicalization additionally feeds back the
//! annihilated multiple `p^{r-v} * row` of every non-unit pivot row so that the
//! row module is represented without gaps.

use crate::error::{Error, Result};
use crate::ring::{Embedding, RingElem, RingSpec};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    data: Vec<RingElem>,
}

impl RingMatrix {
    pub fn new(ring: &RingSpec, rows: usize, cols: usize, data: Vec<RingElem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        if data.iter().any(|e| !ring.contains(e)) {
            return Err(Error::InvalidInput("matrix entry outside the ring".into()));
        }
        Ok(RingMatrix { ring: ring.clone(), rows, cols, data })
    }

    pub fn zeros(ring: &RingSpec, rows: usize, cols: usize) -> Self {
        RingMatrix { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &RingSpec, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn diagonal(ring: &RingSpec, diag: &[RingElem]) -> Self {
        let mut m = Self::zeros(ring, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Matrix from row vectors of length `cols`.
    pub fn from_rows(ring: &RingSpec, cols: usize, rows: Vec<Vec<RingElem>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Self::new(ring, n, cols, data)
    }

    /// Matrix over `Z_{p^r}`-style rings from integers.
    pub fn from_ints(ring: &RingSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&c| ring.from_i64(c)))
            .collect();
        RingMatrix { ring: ring.clone(), rows: rows.len(), cols, data }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RingElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<RingElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<RingElem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let r = &self.ring;
        let mut out = RingMatrix::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = r.add(&out.data[idx], &r.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.zip_with(other, |a, b| self.ring.add(a, b))
    }

    pub fn sub(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.zip_with(other, |a, b| self.ring.sub(a, b))
    }

    fn zip_with(&self, other: &RingMatrix, f: impl Fn(&RingElem, &RingElem) -> RingElem) -> Result<RingMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(RingMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &RingElem) -> RingMatrix {
        let data = self.data.iter().map(|a| self.ring.mul(a, c)).collect();
        RingMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut out = RingMatrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Result<RingMatrix> {
        if !self.is_square() {
            return Err(Error::InvalidInput("power of a non-square matrix".into()));
        }
        let mut acc = RingMatrix::identity(&self.ring, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Kronecker product `(a_ij B)`.
    pub fn kron(&self, other: &RingMatrix) -> RingMatrix {
        let r = &self.ring;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = RingMatrix::zeros(r, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if r.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, r.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn hstack(parts: &[RingMatrix]) -> Result<RingMatrix> {
        let first = parts.first().ok_or_else(|| Error::InvalidInput("empty hstack".into()))?;
        let rows = first.rows;
        if let Some(bad) = parts.iter().find(|m| m.rows != rows) {
            return Err(Error::DimensionMismatch { expected: rows, found: bad.rows });
        }
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for m in parts {
                data.extend_from_slice(m.row(i));
            }
        }
        Ok(RingMatrix { ring: first.ring.clone(), rows, cols, data })
    }

    pub fn vstack(parts: &[RingMatrix]) -> Result<RingMatrix> {
        let first = parts.first().ok_or_else(|| Error::InvalidInput("empty vstack".into()))?;
        let cols = first.cols;
        if let Some(bad) = parts.iter().find(|m| m.cols != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.cols });
        }
        let data: Vec<RingElem> = parts.iter().flat_map(|m| m.data.iter().cloned()).collect();
        Ok(RingMatrix { ring: first.ring.clone(), rows: data.len() / cols.max(1), cols, data })
    }

    /// Entrywise image under a ring embedding.
    pub fn map(&self, embedding: &Embedding) -> RingMatrix {
        let data = self.data.iter().map(|a| embedding.apply(a)).collect();
        RingMatrix { ring: embedding.target().clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[RingElem]) -> Vec<RingElem> {
        assert_eq!(v.len(), self.rows, "vector length must match row count");
        let r = &self.ring;
        let mut out = vec![r.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = r.add(o, &r.mul(a, self.get(i, j)));
            }
        }
        out
    }

    pub fn trace(&self) -> Result<RingElem> {
        if !self.is_square() {
            return Err(Error::InvalidInput("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).fold(self.ring.zero(), |acc, i| self.ring.add(&acc, self.get(i, i))))
    }

    /// Exact determinant. Row operations only ever subtract multiples of a
    /// minimal-valuation pivot row, which leaves the determinant unchanged.
    pub fn determinant(&self) -> Result<RingElem> {
        if !self.is_square() {
            return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
        }
        let r = &self.ring;
        let n = self.rows;
        let mut rows = self.row_vecs();
        let mut det = r.one();
        for c in 0..n {
            let Some(piv) = (c..n)
                .filter(|&i| !r.is_zero(&rows[i][c]))
                .min_by_key(|&i| r.valuation(&rows[i][c]))
            else {
                return Ok(r.zero());
            };
            if piv != c {
                rows.swap(piv, c);
                det = r.neg(&det);
            }
            let pivot = rows[c][c].clone();
            for i in c + 1..n {
                if r.is_zero(&rows[i][c]) {
                    continue;
                }
                let t = r.div_exact(&rows[i][c], &pivot).expect("minimal valuation pivot divides");
                let (top, rest) = rows.split_at_mut(i);
                axpy(r, &mut rest[0], &t, &top[c]);
            }
            det = r.mul(&det, &pivot);
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> bool {
        self.determinant().is_ok_and(|d| self.ring.is_unit(&d))
    }

    /// Inverse by Gauss-Jordan elimination with unit pivots.
    pub fn inverse(&self) -> Result<RingMatrix> {
        if !self.is_square() {
            return Err(Error::InvalidInput("inverse of a non-square matrix".into()));
        }
        let r = &self.ring;
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut inv = RingMatrix::identity(r, n).row_vecs();
        for c in 0..n {
            let piv = (c..n).find(|&i| r.is_unit(&a[i][c])).ok_or(Error::Singular)?;
            a.swap(piv, c);
            inv.swap(piv, c);
            let s = r.invert(&a[c][c])?;
            scale_row(r, &mut a[c], &s);
            scale_row(r, &mut inv[c], &s);
            for i in 0..n {
                if i == c || r.is_zero(&a[i][c]) {
                    continue;
                }
                let t = a[i][c].clone();
                let (pa, pi) = (a[c].clone(), inv[c].clone());
                axpy(r, &mut a[i], &t, &pa);
                axpy(r, &mut inv[i], &t, &pi);
            }
        }
        RingMatrix::from_rows(r, n, inv)
    }

    /// `Some(witness)` iff every row and column has exactly one nonzero entry
    /// and that entry is a unit.
    pub fn monomial_witness(&self) -> Option<MonomialWitness> {
        if !self.is_square() {
            return None;
        }
        let r = &self.ring;
        let n = self.rows;
        let mut permutation = Vec::with_capacity(n);
        let mut units = Vec::with_capacity(n);
        let mut used = vec![false; n];
        for i in 0..n {
            let nz: Vec<usize> = (0..n).filter(|&j| !r.is_zero(self.get(i, j))).collect();
            if nz.len() != 1 || used[nz[0]] || !r.is_unit(self.get(i, nz[0])) {
                return None;
            }
            used[nz[0]] = true;
            permutation.push(nz[0]);
            units.push(self.get(i, nz[0]).clone());
        }
        Some(MonomialWitness { permutation, units })
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial_witness().is_some()
    }

    pub fn howell_form(&self) -> HowellBasis {
        HowellBasis::from_rows(&self.ring, self.cols, self.row_vecs())
    }

    /// Left kernel `{v : v M = 0}` as a Howell basis.
    pub fn kernel(&self) -> HowellBasis {
        let r = &self.ring;
        let n = self.rows;
        let aug: Vec<Vec<RingElem>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { r.one() } else { r.zero() }));
                row
            })
            .collect();
        let h = HowellBasis::from_rows(r, self.cols + n, aug);
        let kernel_rows = h
            .matrix
            .row_vecs()
            .into_iter()
            .filter(|row| row[..self.cols].iter().all(|e| r.is_zero(e)))
            .map(|row| row[self.cols..].to_vec())
            .collect();
        HowellBasis::from_rows(r, n, kernel_rows)
    }
}

/// Permutation and unit scalars of a monomial matrix: row `i` holds
/// `units[i]` in column `permutation[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialWitness {
    pub permutation: Vec<usize>,
    pub units: Vec<RingElem>,
}

fn axpy(r: &RingSpec, y: &mut [RingElem], t: &RingElem, x: &[RingElem]) {
    // y -= t x
    for (yi, xi) in y.iter_mut().zip(x) {
        if !r.is_zero(xi) {
            *yi = r.sub(yi, &r.mul(t, xi));
        }
    }
}

fn scale_row(r: &RingSpec, y: &mut [RingElem], s: &RingElem) {
    for yi in y.iter_mut() {
        *yi = r.mul(yi, s);
    }
}

/// Canonical generating set of a submodule of `R^n`.
///
/// Rows are in echelon order, each pivot is exactly `p^v`, entries above a
/// pivot are reduced modulo `p^v`, and the row set has the Howell property, so
/// two generating sets span the same module iff their Howell bases are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HowellBasis {
    matrix: RingMatrix,
    pivots: Vec<(usize, u32)>,
}

impl HowellBasis {
    pub fn from_rows(ring: &RingSpec, cols: usize, rows: Vec<Vec<RingElem>>) -> Self {
        let r = ring;
        let mut rows: Vec<Vec<RingElem>> =
            rows.into_iter().filter(|row| row.iter().any(|e| !r.is_zero(e))).collect();
        for row in &rows {
            assert_eq!(row.len(), cols, "row length must match column count");
        }
        let mut top = 0;
        let mut pivots = Vec::new();
        for c in 0..cols {
            let Some(piv) = (top..rows.len())
                .filter(|&i| !r.is_zero(&rows[i][c]))
                .min_by_key(|&i| r.valuation(&rows[i][c]))
            else {
                continue;
            };
            rows.swap(top, piv);
            let v = r.valuation(&rows[top][c]);
            let unit = r.div_p_pow(&rows[top][c], v);
            let s = r.invert(&unit).expect("unit part of a pivot");
            scale_row(r, &mut rows[top], &s);
            debug_assert_eq!(rows[top][c], r.from_u64(r.p_pow(v)));
            let pivot_row = rows[top].clone();
            for row in rows.iter_mut().skip(top + 1) {
                if r.is_zero(&row[c]) {
                    continue;
                }
                let t = r.div_p_pow(&row[c], v);
                axpy(r, row, &t, &pivot_row);
            }
            if v > 0 {
                let extra: Vec<RingElem> =
                    pivot_row.iter().map(|e| r.scale_int(e, r.p_pow(r.r() - v))).collect();
                if extra.iter().any(|e| !r.is_zero(e)) {
                    rows.push(extra);
                }
            }
            rows.retain(|row| row.iter().any(|e| !r.is_zero(e)));
            pivots.push((c, v));
            top += 1;
        }
        rows.truncate(top);
        debug_assert_eq!(rows.len(), pivots.len());
        for (i, &(c, v)) in pivots.iter().enumerate() {
            let pivot_row = rows[i].clone();
            for row in rows.iter_mut().take(i) {
                let rem = r.reduce_mod_p_pow(&row[c], v);
                let diff = r.sub(&row[c], &rem);
                if r.is_zero(&diff) {
                    continue;
                }
                let t = r.div_p_pow(&diff, v);
                axpy(r, row, &t, &pivot_row);
            }
        }
        let matrix = RingMatrix::from_rows(r, cols, rows).expect("consistent rows");
        HowellBasis { matrix, pivots }
    }

    pub fn empty(ring: &RingSpec, cols: usize) -> Self {
        HowellBasis { matrix: RingMatrix::zeros(ring, 0, cols), pivots: Vec::new() }
    }

    pub fn full(ring: &RingSpec, cols: usize) -> Self {
        Self::from_rows(ring, cols, RingMatrix::identity(ring, cols).row_vecs())
    }

    pub fn matrix(&self) -> &RingMatrix {
        &self.matrix
    }

    pub fn ring(&self) -> &RingSpec {
        self.matrix.ring()
    }

    pub fn ambient_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn len(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RingElem]> {
        (0..self.len()).map(move |i| self.matrix.row(i))
    }

    /// `(column, valuation)` of every pivot.
    pub fn pivots(&self) -> &[(usize, u32)] {
        &self.pivots
    }

    /// Remainder of `v` after reduction by the basis; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[RingElem]) -> Vec<RingElem> {
        let r = self.ring();
        let mut v = v.to_vec();
        for (i, &(c, val)) in self.pivots.iter().enumerate() {
            if r.is_zero(&v[c]) || r.valuation(&v[c]) < val {
                continue;
            }
            let t = r.div_p_pow(&v[c], val);
            axpy(r, &mut v, &t, self.matrix.row(i));
        }
        v
    }

    pub fn contains(&self, v: &[RingElem]) -> bool {
        let r = self.ring();
        v.len() == self.ambient_dim() && self.reduce(v).iter().all(|e| r.is_zero(e))
    }

    pub fn contains_basis(&self, other: &HowellBasis) -> bool {
        other.rows().all(|row| self.contains(row))
    }

    /// Sum of two submodules.
    pub fn sum(&self, other: &HowellBasis) -> HowellBasis {
        let mut rows = self.matrix.row_vecs();
        rows.extend(other.matrix.row_vecs());
        HowellBasis::from_rows(self.ring(), self.ambient_dim(), rows)
    }

    /// Number of elements of the module, `prod p^{m (r - v_i)}`.
    pub fn module_size(&self) -> Option<u128> {
        let r = self.ring();
        let mut size: u128 = 1;
        for &(_, v) in &self.pivots {
            let f = (r.p() as u128).checked_pow((r.r() - v) * r.m() as u32)?;
            size = size.checked_mul(f)?;
        }
        Some(size)
    }

    /// Calls `visit` on every element of the module exactly once. Each element
    /// is `sum c_i row_i` with `c_i` ranging over coordinates below `p^{r - v_i}`.
    pub fn for_each_element(&self, mut visit: impl FnMut(&[RingElem])) {
        let r = self.ring();
        let n = self.ambient_dim();
        let k = self.len();
        let bounds: Vec<u64> = self.pivots.iter().map(|&(_, v)| r.p().pow(r.r() - v)).collect();
        let m = r.m();
        // odometer over k * m integer digits
        let mut digits = vec![0u64; k * m];
        let mut acc = vec![r.zero(); n];
        // unit vectors y^t times each row
        let scaled_rows: Vec<Vec<Vec<RingElem>>> = (0..k)
            .map(|i| {
                (0..m)
                    .map(|t| {
                        let mut e = vec![0u64; m];
                        e[t] = 1;
                        let yt = r.elem_reduced(&e);
                        self.matrix.row(i).iter().map(|x| r.mul(x, &yt)).collect()
                    })
                    .collect()
            })
            .collect();
        loop {
            visit(&acc);
            let mut pos = 0;
            loop {
                if pos == k * m {
                    return;
                }
                let (i, t) = (pos / m, pos % m);
                digits[pos] += 1;
                let row = &scaled_rows[i][t];
                if digits[pos] < bounds[i] {
                    for (a, x) in acc.iter_mut().zip(row) {
                        *a = r.add(a, x);
                    }
                    break;
                }
                // wrap: subtract (bound - 1) copies
                let back = bounds[i] - 1;
                for (a, x) in acc.iter_mut().zip(row) {
                    *a = r.sub(a, &r.scale_int(x, back));
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    }

    /// The module element set, for small modules.
    pub fn elements(&self) -> Vec<Vec<RingElem>> {
        let mut out = Vec::new();
        self.for_each_element(|v| out.push(v.to_vec()));
        out
    }
}

/// Coefficients `c` with `sum_t c_t rows_t = rhs`, if any.
pub fn solve_left(ring: &RingSpec, rows: &[Vec<RingElem>], rhs: &[RingElem]) -> Option<Vec<RingElem>> {
    let l = rhs.len();
    let mut stacked = vec![rhs.to_vec()];
    stacked.extend(rows.iter().cloned());
    let m = RingMatrix::from_rows(ring, l, stacked).ok()?;
    let ker = m.kernel();
    let first = ker.rows().next()?;
    if !ring.is_one(&first[0]) {
        return None;
    }
    Some(first[1..].iter().map(|e| ring.neg(e)).collect())
}
