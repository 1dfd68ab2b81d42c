//! Deterministic exact linear algebra: reduced row echelon form, kernels,
//! subspace sums/intersections, and quotient spaces with explicit
//! projection/section maps.
//!
//! Pivot selection is fixed (leftmost column, first nonzero row), so every
//! basis this module produces is identical across runs and platforms.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Dense rectangular matrix over one field, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: FieldSpec) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix { rows: nrows, cols, field, data }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, field, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    /// Matrix–vector product (vector of length `cols`).
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    let a = self.at(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc = acc.add(&a.mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_mat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, self.field, |r, c| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                let a = self.at(r, k);
                if !a.is_zero() {
                    acc = acc.add(&a.mul(other.at(k, c)));
                }
            }
            acc
        })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |r, c| self.at(c, r).clone())
    }

    /// The unique reduced row echelon form with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = self.iter_rows().map(strip_content).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = rows[r][c].inv().expect("pivot is nonzero");
            for x in rows[r][c..].iter_mut() {
                *x = x.mul(&inv);
            }
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    for k in c..self.cols {
                        let sub = f.mul(&rows[r][k]);
                        rows[i][k] = rows[i][k].sub(&sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (Matrix::from_rows(rows, self.cols, self.field), pivots)
    }

    /// Right null space as a subspace of `K^cols`.
    pub fn kernel(&self) -> Subspace {
        let (rr, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (ri, &p) in pivots.iter().enumerate() {
                v[p] = rr.at(ri, fc).neg();
            }
            basis.push(v);
        }
        Subspace::from_spanning(basis, self.cols, self.field)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, self.field, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let (rr, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, self.field, |r, c| {
            rr.at(r, n + c).clone()
        }))
    }

    pub fn stack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Matrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Scales a rational row to coprime integers (content stripping); the lone
/// size optimization in the elimination pipeline. Prime-field rows pass
/// through unchanged.
fn strip_content(row: &[Scalar]) -> Vec<Scalar> {
    if row.is_empty() {
        return row.to_vec();
    }
    if !matches!(row[0], Scalar::Rational(_)) {
        return row.to_vec();
    }
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    for s in row {
        let Scalar::Rational(r) = s else { unreachable!() };
        if !r.is_zero() {
            denom_lcm = denom_lcm.lcm(r.denom());
            numer_gcd = numer_gcd.gcd(r.numer());
        }
    }
    if numer_gcd.is_zero() {
        return row.to_vec();
    }
    let factor = BigRational::new(denom_lcm, numer_gcd);
    row.iter()
        .map(|s| {
            let Scalar::Rational(r) = s else { unreachable!() };
            Scalar::Rational(r * &factor)
        })
        .collect()
}

/// A linear subspace of `K^ambient_dim`, stored as an RREF basis (rows are
/// basis vectors, pivot columns strictly increasing). RREF uniqueness makes
/// equality of subspaces structural equality of their bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    field: FieldSpec,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize, field: FieldSpec) -> Self {
        Subspace {
            ambient_dim,
            field,
            basis: Matrix::zeros(0, ambient_dim, field),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize, field: FieldSpec) -> Self {
        Subspace {
            ambient_dim,
            field,
            basis: Matrix::identity(ambient_dim, field),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_spanning(rows: Vec<Vec<Scalar>>, ambient_dim: usize, field: FieldSpec) -> Self {
        let mut acc = SpanAccumulator::new(ambient_dim, field);
        for r in rows {
            acc.insert(r);
        }
        acc.into_subspace()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        self.basis.row_vec(i)
    }

    /// Residual of `v` after eliminating all pivot coordinates; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        let mut out = v.to_vec();
        for (ri, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let f = out[p].clone();
                for c in p..self.ambient_dim {
                    let sub = f.mul(self.basis.at(ri, c));
                    out[c] = out[c].sub(&sub);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter_rows().all(|r| self.contains(r))
    }

    /// Coordinates of `v` with respect to the RREF basis. Panics if `v` is
    /// outside the subspace; call `contains` first when unsure.
    pub fn coordinates(&self, v: &[Scalar]) -> Vec<Scalar> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        debug_assert!(self.contains(v), "vector escapes the subspace");
        coords
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut acc = SpanAccumulator::new(self.ambient_dim, self.field);
        for r in self.basis.iter_rows() {
            acc.insert(r.to_vec());
        }
        for r in other.basis.iter_rows() {
            acc.insert(r.to_vec());
        }
        Ok(acc.into_subspace())
    }

    /// Exact intersection, via the kernel of the stacked-coordinates system:
    /// a vector is in both spans iff some coefficient pair (u, w) satisfies
    /// `u·A = w·B`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (pa, pb) = (self.dim(), other.dim());
        if pa == 0 || pb == 0 {
            return Ok(Subspace::zero(self.ambient_dim, self.field));
        }
        // columns: pa coefficients for A-rows, then pb for B-rows (negated)
        let sys = Matrix::from_fn(self.ambient_dim, pa + pb, self.field, |r, c| {
            if c < pa {
                self.basis.at(c, r).clone()
            } else {
                other.basis.at(c - pa, r).neg()
            }
        });
        let ker = sys.kernel();
        let mut acc = SpanAccumulator::new(self.ambient_dim, self.field);
        for k in ker.basis.iter_rows() {
            let mut v = vec![self.field.zero(); self.ambient_dim];
            for (i, coeff) in k[..pa].iter().enumerate() {
                if !coeff.is_zero() {
                    for c in 0..self.ambient_dim {
                        let add = coeff.mul(self.basis.at(i, c));
                        v[c] = v[c].add(&add);
                    }
                }
            }
            acc.insert(v);
        }
        Ok(acc.into_subspace())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimMismatch(format!(
                "subspaces live in K^{} and K^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }
}

/// Incrementally maintained RREF row space; the workhorse behind relation
/// spans and ideal-closure fixpoints.
#[derive(Debug, Clone)]
pub struct SpanAccumulator {
    ambient_dim: usize,
    field: FieldSpec,
    rows: Vec<Vec<Scalar>>, // kept in RREF, pivots strictly increasing
    pivots: Vec<usize>,
}

impl SpanAccumulator {
    pub fn new(ambient_dim: usize, field: FieldSpec) -> Self {
        SpanAccumulator {
            ambient_dim,
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let f = out[p].clone();
                for c in p..self.ambient_dim {
                    let sub = f.mul(&row[c]);
                    out[c] = out[c].sub(&sub);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Inserts a vector; returns true iff the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(&strip_content(&v));
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("leading entry is nonzero");
        for x in v[p..].iter_mut() {
            *x = x.mul(&inv);
        }
        // back-eliminate the new pivot column from existing rows
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for c in p..self.ambient_dim {
                    let sub = f.mul(&v[c]);
                    row[c] = row[c].sub(&sub);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            ambient_dim: self.ambient_dim,
            field: self.field,
            basis: Matrix::from_rows(self.rows, self.ambient_dim, self.field),
            pivots: self.pivots,
        }
    }
}

/// Quotient of `K^ambient_dim` by a relation subspace, with canonical
/// coordinates indexed by the non-pivot columns of the relation RREF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient_dim: usize,
    relations: Subspace,
    dim: usize,
    nonpivot_cols: Vec<usize>,
    project: Matrix, // dim x ambient
    section: Matrix, // ambient x dim
}

impl QuotientSpace {
    pub fn new(ambient_dim: usize, relations: Subspace) -> Self {
        assert_eq!(relations.ambient_dim(), ambient_dim, "relation ambient mismatch");
        let field = relations.field();
        let nonpivot: Vec<usize> = (0..ambient_dim)
            .filter(|c| !relations.pivots().contains(c))
            .collect();
        let dim = nonpivot.len();
        // project(v)[k] = v[q_k] - sum_t v[p_t] * basis[t][q_k]
        let mut project = Matrix::zeros(dim, ambient_dim, field);
        for (k, &q) in nonpivot.iter().enumerate() {
            project.set(k, q, field.one());
            for (t, &p) in relations.pivots().iter().enumerate() {
                project.set(k, p, relations.basis().at(t, q).neg());
            }
        }
        // section(k) = unit vector on the k-th non-pivot column (already
        // reduced: non-pivot coordinates are untouched by the relations)
        let mut section = Matrix::zeros(ambient_dim, dim, field);
        for (k, &q) in nonpivot.iter().enumerate() {
            section.set(q, k, field.one());
        }
        QuotientSpace {
            ambient_dim,
            relations,
            dim,
            nonpivot_cols: nonpivot,
            project,
            section,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient columns that index the quotient coordinates.
    pub fn class_columns(&self) -> &[usize] {
        &self.nonpivot_cols
    }

    pub fn project_matrix(&self) -> &Matrix {
        &self.project
    }

    pub fn section_matrix(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.project.mul_vec(v)
    }

    /// Ambient representative of the k-th quotient basis class.
    pub fn section_basis(&self, k: usize) -> Vec<Scalar> {
        self.section.row_vec_col(k)
    }

    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        self.section.mul_vec(q)
    }
}

impl Matrix {
    fn row_vec_col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }
}
