//! Exact rational linear algebra.
//!
//! Everything downstream — structure constants, bilinear forms, adjoint
//! matrices, bivector tensors — is built on arbitrary-precision rationals.
//! No floating point appears anywhere in this crate.
//!
//! Subspaces are kept in a canonical normal form: the reduced row-echelon
//! basis of their row span. Two subspaces are equal iff their canonical
//! bases are identical matrices, which turns every downstream "does this
//! space equal that one" question into `==`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number (always reduced, denominator > 0).
pub type Rat = num_rational::BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0` (test/builder helper only).
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p"` or `"p/q"` with optional leading sign. Rejects `q = 0`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = |m: &str| Error::RatParse { pointer: String::new(), message: format!("{m}: {s:?}") };
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str.parse().map_err(|_| err("invalid numerator"))?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| err("invalid denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rat::new(num, den))
}

/// Canonical rendering: `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// ───────────────────────── vectors ─────────────────────────

pub fn vec_zero(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

/// Standard basis vector `e_i` in dimension `n`.
pub fn unit_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec_zero(n);
    v[i] = Rat::one();
    v
}

/// `x^T B y` for a square matrix `B`.
pub fn form_pair(b: &Mat, x: &[Rat], y: &[Rat]) -> Rat {
    debug_assert_eq!(b.rows, x.len());
    debug_assert_eq!(b.cols, y.len());
    let mut acc = Rat::zero();
    for i in 0..b.rows {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..b.cols {
            let e = b.at(i, j);
            if !e.is_zero() && !y[j].is_zero() {
                acc += &x[i] * e * &y[j];
            }
        }
    }
    acc
}

// ───────────────────────── matrices ─────────────────────────

/// Dense matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format_rat(self.at(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::DimMismatch("ragged rows".into()));
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Test/builder helper: integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .expect("rectangular integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rat> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimMismatch(format!(
                "add {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let cur = out.at(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != v.len() {
            return Err(Error::DimMismatch(format!(
                "mul_vec {}x{} by len {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec_zero(self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] += a * &v[j];
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..=i).all(|j| *self.at(i, j) == -self.at(j, i)))
    }

    /// Vertical concatenation.
    pub fn stack_rows(mats: &[&Mat]) -> Result<Mat> {
        let cols = mats.first().map_or(0, |m| m.cols);
        if mats.iter().any(|m| m.cols != cols) {
            return Err(Error::DimMismatch("stack_rows: column counts differ".into()));
        }
        let rows = mats.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in mats {
            data.extend_from_slice(&m.data);
        }
        Ok(Mat { rows, cols, data })
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|m| m.rows).sum();
        let cols = blocks.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.at(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Row-major flattening (used to express matrices in a linear basis).
    pub fn vectorize(&self) -> Vec<Rat> {
        self.data.clone()
    }

    /// Reduced row-echelon form together with the pivot column indices.
    /// Pivots are 1, pivot columns are cleared above and below, zero rows
    /// are moved to the bottom (and reported in the returned matrix).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // find a pivot in this column at or below `row`
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(row * m.cols + j, p * m.cols + j);
                }
            }
            let inv = {
                let pv = m.at(row, col).clone();
                Rat::one() / pv
            };
            for j in col..m.cols {
                let v = m.at(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for j in col..m.cols {
                        let v = m.at(r, j) - &factor * m.at(row, j);
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : self * v = 0}` as rows (canonical,
    /// one basis vector per free column, RREF-ordered).
    pub fn kernel(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Mat::zeros(0, self.cols);
        }
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec_zero(self.cols);
            v[f] = Rat::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r.at(prow, f).clone();
            }
            rows.push(v);
        }
        Mat::from_rows(rows).expect("kernel rows are rectangular")
    }

    /// Solve `self * x = b`; `None` if inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if b.len() != self.rows {
            return Err(Error::DimMismatch("solve: rhs length".into()));
        }
        let bcol = Mat::from_rows(b.iter().map(|x| vec![x.clone()]).collect())?;
        let aug = {
            let mut rows = Vec::with_capacity(self.rows);
            for i in 0..self.rows {
                let mut row = self.row_vec(i);
                row.push(bcol.at(i, 0).clone());
                rows.push(row);
            }
            Mat::from_rows(rows)?
        };
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the augmented column: inconsistent
        }
        let mut x = vec_zero(self.cols);
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r.at(prow, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::DimMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = {
            let mut rows = Vec::with_capacity(n);
            for i in 0..n {
                let mut row = self.row_vec(i);
                row.extend(Mat::identity(n).row_vec(i));
                rows.push(row);
            }
            Mat::from_rows(rows)?
        };
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return Err(Error::Singular(format!("{n}x{n} matrix has rank {}", pivots.len())));
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.at(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::DimMismatch("det of non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(Rat::zero());
            };
            if p != col {
                for j in 0..n {
                    m.data.swap(col * n + j, p * n + j);
                }
                det = -det;
            }
            let pv = m.at(col, col).clone();
            det *= &pv;
            for r in (col + 1)..n {
                if !m.at(r, col).is_zero() {
                    let factor = m.at(r, col) / &pv;
                    for j in col..n {
                        let v = m.at(r, j) - &factor * m.at(col, j);
                        m.set(r, j, v);
                    }
                }
            }
        }
        Ok(det)
    }

    /// Largest absolute numerator/denominator — used to keep an eye on entry
    /// growth in long exact pipelines.
    pub fn magnitude(&self) -> BigInt {
        let mut m = BigInt::zero();
        for x in &self.data {
            let a = x.numer().abs();
            let b = x.denom().abs();
            if a > m {
                m = a.clone();
            }
            if b > m {
                m = b;
            }
        }
        m
    }
}

// ───────────────────────── subspaces ─────────────────────────

/// Subspace of `Q^n` in canonical form: `basis` is the reduced row-echelon
/// basis of the row span (no zero rows). Equality of subspaces is equality
/// of these matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    /// Canonicalize the row span of `m` (the normal-form constructor).
    pub fn rref_canonical(m: &Mat) -> Subspace {
        let (r, pivots) = m.rref();
        if pivots.is_empty() {
            return Subspace::zero(m.cols());
        }
        let rows: Vec<Vec<Rat>> = (0..pivots.len()).map(|i| r.row_vec(i)).collect();
        Subspace {
            ambient: m.cols(),
            basis: Mat::from_rows(rows).expect("rref rows are rectangular"),
        }
    }

    pub fn from_vectors(ambient: usize, vecs: &[Vec<Rat>]) -> Result<Subspace> {
        if vecs.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimMismatch("from_vectors: wrong vector length".into()));
        }
        if vecs.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        Ok(Subspace::rref_canonical(&Mat::from_rows(vecs.to_vec())?))
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::identity(ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    pub fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimMismatch(format!(
                "ambient dims differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Smallest subspace containing both (row span of the stacked bases).
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked = Mat::stack_rows(&[&self.basis, &other.basis])?;
        Ok(Subspace::rref_canonical(&stacked))
    }

    /// Intersection, computed via the kernel of the stacked-coefficient
    /// system: `(x, y)` with `x^T A = y^T B` parametrizes `A^span ∩ B^span`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (ka, kb) = (self.dim(), other.dim());
        if ka == 0 || kb == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // Columns of M are [A^T | -B^T]; kernel rows are (x, y).
        let m = {
            let at = self.basis.transpose();
            let bt = other.basis.transpose().neg();
            let mut rows = Vec::with_capacity(self.ambient);
            for i in 0..self.ambient {
                let mut row = at.row_vec(i);
                row.extend(bt.row_vec(i));
                rows.push(row);
            }
            Mat::from_rows(rows)?
        };
        let ker = m.kernel();
        let mut vecs = Vec::with_capacity(ker.rows());
        for i in 0..ker.rows() {
            let x = &ker.row(i)[..ka];
            let mut v = vec_zero(self.ambient);
            for (r, coef) in x.iter().enumerate() {
                if !coef.is_zero() {
                    for j in 0..self.ambient {
                        v[j] += coef * self.basis.at(r, j);
                    }
                }
            }
            vecs.push(v);
        }
        Subspace::from_vectors(self.ambient, &vecs)
    }

    /// Orthogonal complement with respect to a (possibly indefinite)
    /// nondegenerate symmetric bilinear form: `{v : a B v = 0 ∀ a ∈ self}`.
    pub fn orth_complement(&self, form: &Mat) -> Result<Subspace> {
        if form.rows() != self.ambient || form.cols() != self.ambient {
            return Err(Error::DimMismatch("orth_complement: form size".into()));
        }
        if self.dim() == 0 {
            return Ok(Subspace::full(self.ambient));
        }
        let constraints = self.basis.mul(form)?;
        Ok(Subspace::rref_canonical(&constraints.kernel()))
    }

    pub fn contains_vec(&self, v: &[Rat]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimMismatch("contains_vec: vector length".into()));
        }
        Ok(vec_is_zero(&self.reduce_mod(v)))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for i in 0..other.dim() {
            if !self.contains_vec(other.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Residual of `v` after eliminating this subspace's pivot coordinates;
    /// zero iff `v` lies in the subspace.
    pub fn reduce_mod(&self, v: &[Rat]) -> Vec<Rat> {
        let mut w = v.to_vec();
        for i in 0..self.dim() {
            // each canonical basis row has a pivot 1 at its leading column
            let pivot_col = (0..self.ambient)
                .find(|&c| !self.basis.at(i, c).is_zero())
                .expect("canonical basis has no zero rows");
            if !w[pivot_col].is_zero() {
                let factor = w[pivot_col].clone();
                for j in 0..self.ambient {
                    let v = &w[j] - &factor * self.basis.at(i, j);
                    w[j] = v;
                }
            }
        }
        w
    }

    /// Pivot columns of the canonical basis.
    pub fn pivot_cols(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                (0..self.ambient)
                    .find(|&c| !self.basis.at(i, c).is_zero())
                    .expect("canonical basis has no zero rows")
            })
            .collect()
    }

    /// Canonical complement: the coordinate subspace on the pivot-free
    /// coordinates of the canonical basis.
    pub fn canonical_complement(&self) -> Subspace {
        let pivots = self.pivot_cols();
        let vecs: Vec<Vec<Rat>> = (0..self.ambient)
            .filter(|c| !pivots.contains(c))
            .map(|c| unit_vec(self.ambient, c))
            .collect();
        Subspace::from_vectors(self.ambient, &vecs).expect("unit vectors are well-formed")
    }

    /// Image under a linear map given by its matrix (vectors as columns:
    /// `v -> m v`).
    pub fn map(&self, m: &Mat) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimMismatch("map: matrix width".into()));
        }
        let mut vecs = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            vecs.push(m.mul_vec(self.basis.row(i))?);
        }
        Subspace::from_vectors(m.rows(), &vecs)
    }
}

/// Component of `v` in `a` along the direct-sum decomposition `a ⊕ b`.
/// Errors when `a ⊕ b` is not the full ambient space.
pub fn project_along(v: &[Rat], a: &Subspace, b: &Subspace) -> Result<Vec<Rat>> {
    a.check_ambient(b)?;
    let n = a.ambient_dim();
    if v.len() != n {
        return Err(Error::DimMismatch("project_along: vector length".into()));
    }
    if a.dim() + b.dim() != n || a.intersect(b)?.dim() != 0 {
        return Err(Error::NotDirectSum(format!(
            "dims {} + {} in ambient {}, intersection dim {}",
            a.dim(),
            b.dim(),
            n,
            a.intersect(b)?.dim()
        )));
    }
    // Solve v = basis(a)^T alpha + basis(b)^T beta.
    let stacked = Mat::stack_rows(&[a.basis(), b.basis()])?.transpose();
    let coeffs = stacked
        .solve(v)?
        .ok_or_else(|| Error::NoSolution("project_along: decomposition failed".into()))?;
    let mut out = vec_zero(n);
    for i in 0..a.dim() {
        if !coeffs[i].is_zero() {
            for j in 0..n {
                out[j] += &coeffs[i] * a.basis().at(i, j);
            }
        }
    }
    Ok(out)
}

/// Matrix of `v -> project_along(v, a, b)` in the standard basis.
pub fn projection_matrix(a: &Subspace, b: &Subspace) -> Result<Mat> {
    let n = a.ambient_dim();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        cols.push(project_along(&unit_vec(n, i), a, b)?);
    }
    let mut m = Mat::zeros(n, n);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            m.set(i, j, col[i].clone());
        }
    }
    Ok(m)
}

/// Coordinates of `v` in the basis rows of `sub` (errors if `v` is outside).
pub fn coords_in(sub: &Subspace, v: &[Rat]) -> Result<Vec<Rat>> {
    let sys = sub.basis().transpose();
    sys.solve(v)?
        .ok_or_else(|| Error::NoSolution("vector is not in the subspace".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_i64(rows)
    }

    fn sp(ambient: usize, vecs: &[&[i64]]) -> Subspace {
        let vv: Vec<Vec<Rat>> = vecs.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Subspace::from_vectors(ambient, &vv).unwrap()
    }

    // ── rational parsing/printing ──

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["0", "5", "-3", "3/4", "-7/2", "10/4"] {
            let r = parse_rat(s).unwrap();
            let back = parse_rat(&format_rat(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(format_rat(&parse_rat("10/4").unwrap()), "5/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1/2/3").is_err());
    }

    // ── frozen RREF example: [[0,4,8],[1,1,1]] -> [[1,0,-1],[0,1,2]] ──
    // Oracle (by hand): swap rows; scale (0,4,8) to (0,1,2); clear col 1:
    // (1,1,1)-(0,1,2) = (1,0,-1).

    #[test]
    fn rref_frozen_example() {
        let s = Subspace::rref_canonical(&m(&[&[0, 4, 8], &[1, 1, 1]]));
        assert_eq!(s.basis(), &m(&[&[1, 0, -1], &[0, 1, 2]]));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn rref_zero_matrix_is_zero_subspace() {
        let s = Subspace::rref_canonical(&Mat::zeros(3, 4));
        assert_eq!(s.dim(), 0);
        assert_eq!(s.ambient_dim(), 4);
    }

    // ── frozen sum example ──

    #[test]
    fn sum_frozen_example() {
        let a = sp(3, &[&[1, 1, 0]]);
        let b = sp(3, &[&[1, -1, 0]]);
        let s = a.sum(&b).unwrap();
        assert_eq!(s, sp(3, &[&[1, 0, 0], &[0, 1, 0]]));
    }

    // ── frozen intersection example ──
    // span{(1,1,0),(0,0,1)} ∩ span{(1,1,1)} = span{(1,1,1)}:
    // (1,1,1) = (1,1,0) + (0,0,1) lies in both; dims force equality.

    #[test]
    fn intersect_frozen_example() {
        let a = sp(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let b = sp(3, &[&[1, 1, 1]]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, sp(3, &[&[1, 1, 1]]));
    }

    #[test]
    fn intersect_disjoint_lines_is_zero() {
        let a = sp(2, &[&[1, 0]]);
        let b = sp(2, &[&[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
    }

    // ── orthogonal complements ──
    // In sl2 ⊕ h with the difference form (see liecore tests), the plus
    // Lagrangian is its own complement. Here a smaller frozen case: in Q^2
    // with hyperbolic form [[0,1],[1,0]], span{(1,0)}^perp = span{(1,0)}.

    #[test]
    fn orth_complement_hyperbolic_plane() {
        let form = m(&[&[0, 1], &[1, 0]]);
        let a = sp(2, &[&[1, 0]]);
        assert_eq!(a.orth_complement(&form).unwrap(), a);
        let b = sp(2, &[&[1, 1]]);
        assert_eq!(b.orth_complement(&form).unwrap(), sp(2, &[&[1, -1]]));
    }

    #[test]
    fn orth_complement_degenerate_form_rejected_by_dim_count() {
        // A degenerate "form" still yields a kernel computation; the caller
        // (QuadLie validation) is responsible for nondegeneracy. Check the
        // dimension law only holds for invertible forms.
        let form = m(&[&[1, 0], &[0, 1]]);
        let a = sp(2, &[&[1, 2]]);
        let c = a.orth_complement(&form).unwrap();
        assert_eq!(a.dim() + c.dim(), 2);
    }

    // ── projections ──

    #[test]
    fn project_along_basic() {
        let a = sp(2, &[&[1, 1]]);
        let b = sp(2, &[&[1, -1]]);
        let v = vec![rat(3), rat(1)];
        let pa = project_along(&v, &a, &b).unwrap();
        assert_eq!(pa, vec![rat(2), rat(2)]);
        let pb = project_along(&v, &b, &a).unwrap();
        assert_eq!(vec_add(&pa, &pb), v);
    }

    #[test]
    fn project_along_rejects_non_direct_sum() {
        let a = sp(2, &[&[1, 0]]);
        let b = sp(2, &[&[2, 0]]);
        assert!(project_along(&[rat(1), rat(1)], &a, &b).is_err());
    }

    // ── solve / inverse / kernel / det ──

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = a.solve(&[rat(3), rat(2)]).unwrap().unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Mat::identity(2));
        assert_eq!(a.det().unwrap(), rat(1));
    }

    #[test]
    fn solve_inconsistent_returns_none() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(a.solve(&[rat(1), rat(3)]).unwrap().is_none());
    }

    #[test]
    fn kernel_matches_rank_nullity() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            assert!(vec_is_zero(&a.mul_vec(k.row(i)).unwrap()));
        }
    }

    #[test]
    fn singular_inverse_rejected() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(a.inverse().is_err());
        assert_eq!(a.det().unwrap(), rat(0));
    }

    // ── canonical complement ──

    #[test]
    fn canonical_complement_is_pivot_free_coords() {
        let s = sp(4, &[&[0, 1, 0, 5], &[0, 0, 1, 7]]);
        let c = s.canonical_complement();
        assert_eq!(c, sp(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]));
        assert_eq!(s.sum(&c).unwrap(), Subspace::full(4));
        assert_eq!(s.intersect(&c).unwrap().dim(), 0);
    }

    // ── property tests ──

    fn arb_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(-4i64..=4, rows * cols).prop_map(move |v| {
            let rows_v: Vec<Vec<Rat>> =
                v.chunks(cols).map(|ch| ch.iter().map(|&x| rat(x)).collect()).collect();
            Mat::from_rows(rows_v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_preserves_row_space(a in arb_mat(3, 4)) {
            let s1 = Subspace::rref_canonical(&a);
            let s2 = Subspace::rref_canonical(s1.basis());
            prop_assert_eq!(&s1, &s2);
            // every original row is in the canonical span
            for i in 0..a.rows() {
                prop_assert!(s1.contains_vec(a.row(i)).unwrap());
            }
            // every canonical row is a combination of original rows
            let orig = Subspace::rref_canonical(&a);
            for i in 0..s1.dim() {
                prop_assert!(orig.contains_vec(s1.basis().row(i)).unwrap());
            }
        }

        #[test]
        fn sum_and_intersection_satisfy_dimension_law(
            a in arb_mat(2, 4),
            b in arb_mat(2, 4),
        ) {
            let sa = Subspace::rref_canonical(&a);
            let sb = Subspace::rref_canonical(&b);
            let sum = sa.sum(&sb).unwrap();
            let inter = sa.intersect(&sb).unwrap();
            prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + inter.dim());
            prop_assert!(sum.contains(&sa).unwrap());
            prop_assert!(sum.contains(&sb).unwrap());
            prop_assert!(sa.contains(&inter).unwrap());
            prop_assert!(sb.contains(&inter).unwrap());
        }

        #[test]
        fn complement_involution_under_hyperbolic_form(a in arb_mat(2, 4)) {
            // nondegenerate split form on Q^4
            let form = Mat::from_i64(&[
                &[0, 1, 0, 0],
                &[1, 0, 0, 0],
                &[0, 0, 0, 1],
                &[0, 0, 1, 0],
            ]);
            let s = Subspace::rref_canonical(&a);
            let c = s.orth_complement(&form).unwrap();
            prop_assert_eq!(s.dim() + c.dim(), 4);
            prop_assert_eq!(c.orth_complement(&form).unwrap(), s);
        }

        #[test]
        fn projections_reconstruct_vector(coords in proptest::collection::vec(-4i64..=4, 4)) {
            let a = sp(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
            let b = sp(4, &[&[1, -1, 0, 0], &[0, 0, 1, -1]]);
            let v: Vec<Rat> = coords.iter().map(|&x| rat(x)).collect();
            let pa = project_along(&v, &a, &b).unwrap();
            let pb = project_along(&v, &b, &a).unwrap();
            prop_assert_eq!(vec_add(&pa, &pb), v);
            prop_assert!(a.contains_vec(&pa).unwrap());
            prop_assert!(b.contains_vec(&pb).unwrap());
        }
    }
}
