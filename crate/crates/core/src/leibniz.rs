//! Structure-constant Leibniz algebras: validation, bracket, center,
//! commutator, abelianization, direct products, liezation, biderivations.
//!
//! A Leibniz algebra is a vector space with a bilinear bracket satisfying
//! `[x,[y,z]] = [[x,y],z] - [[x,z],y]`; the bracket need not be
//! antisymmetric. Every constructor re-checks that identity exactly on all
//! basis triples.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, SpanAccumulator, Subspace};

/// One integer bracket entry `((i, j), [(k, value), ...])` meaning
/// `[x_i, x_j] = sum value·x_k`.
pub type IntBracket = ((usize, usize), Vec<(usize, i64)>);

/// A finite-dimensional Leibniz algebra given by structure constants:
/// `[x_i, x_j] = sum_k c[i][j][k] x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    field: FieldSpec,
    dim: usize,
    basis_names: Vec<String>,
    /// Flattened `c[i][j][k]` at index `(i*dim + j)*dim + k`.
    constants: Vec<Scalar>,
}

impl LeibnizAlgebra {
    /// Validates the Leibniz identity on all `n^3` basis triples and returns
    /// the algebra; reports the first offending triple with its residual.
    pub fn validate(
        constants: Vec<Scalar>,
        field: FieldSpec,
        basis_names: Vec<String>,
    ) -> Result<Self> {
        field.validate()?;
        let dim = basis_names.len();
        if constants.len() != dim * dim * dim {
            return Err(Error::DimMismatch(format!(
                "expected {} structure constants for dimension {dim}, got {}",
                dim * dim * dim,
                constants.len()
            )));
        }
        {
            let mut seen = std::collections::BTreeSet::new();
            for n in &basis_names {
                if !seen.insert(n.as_str()) {
                    return Err(Error::Format(format!("duplicate basis name {n:?}")));
                }
            }
        }
        let alg = LeibnizAlgebra {
            field,
            dim,
            basis_names,
            constants,
        };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let residual = alg.leibniz_residual(i, j, k);
                    if residual.iter().any(|x| !x.is_zero()) {
                        return Err(Error::LeibnizIdentityViolation {
                            i,
                            j,
                            k,
                            residual: residual.iter().map(|s| s.to_string()).collect(),
                        });
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Convenience constructor from integer structure constants, used by the
    /// catalog and tests.
    pub fn from_int_table(
        table: &[IntBracket],
        dim: usize,
        field: FieldSpec,
        names: &[&str],
    ) -> Result<Self> {
        let mut constants = vec![field.zero(); dim * dim * dim];
        for ((i, j), entries) in table {
            for (k, v) in entries {
                constants[(i * dim + j) * dim + k] = field.from_i64(*v);
            }
        }
        LeibnizAlgebra::validate(constants, field, names.iter().map(|s| s.to_string()).collect())
    }

    /// `[x_i,[x_j,x_k]] - [[x_i,x_j],x_k] + [[x_i,x_k],x_j]` in coordinates.
    fn leibniz_residual(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let inner = self.bracket_basis(j, k).to_vec();
        let lhs = self.bracket_left_basis(i, &inner);
        let t1 = self.bracket_right_basis(self.bracket_basis(i, j), k);
        let t2 = self.bracket_right_basis(self.bracket_basis(i, k), j);
        (0..self.dim)
            .map(|t| lhs[t].sub(&t1[t]).add(&t2[t]))
            .collect()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// `[x_i, x_j]` as a coordinate slice.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.dim + j) * self.dim;
        &self.constants[base..base + self.dim]
    }

    fn bracket_left_basis(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        // [x_i, v]
        let mut out = vec![self.field.zero(); self.dim];
        for (j, c) in v.iter().enumerate() {
            if !c.is_zero() {
                for (k, s) in self.bracket_basis(i, j).iter().enumerate() {
                    if !s.is_zero() {
                        out[k] = out[k].add(&c.mul(s));
                    }
                }
            }
        }
        out
    }

    fn bracket_right_basis(&self, v: &[Scalar], j: usize) -> Vec<Scalar> {
        // [v, x_j]
        let mut out = vec![self.field.zero(); self.dim];
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                for (k, s) in self.bracket_basis(i, j).iter().enumerate() {
                    if !s.is_zero() {
                        out[k] = out[k].add(&c.mul(s));
                    }
                }
            }
        }
        out
    }

    /// Bilinear extension `[u, v] = sum u_i v_j c[i][j][.]`.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(u.len(), self.dim, "left argument length mismatch");
        assert_eq!(v.len(), self.dim, "right argument length mismatch");
        let mut out = vec![self.field.zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let f = a.mul(b);
                for (k, s) in self.bracket_basis(i, j).iter().enumerate() {
                    if !s.is_zero() {
                        out[k] = out[k].add(&f.mul(s));
                    }
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// `Z(g) = {c : [x,c] = 0 = [c,x] for all x}`, the kernel of the stacked
    /// left/right multiplication operators.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let rows = Matrix::from_fn(2 * n * n, n, self.field, |r, z| {
            let (side, rest) = (r / (n * n), r % (n * n));
            let (i, k) = (rest / n, rest % n);
            if side == 0 {
                // [x_i, z]_k
                self.bracket_basis(i, z)[k].clone()
            } else {
                // [z, x_i]_k
                self.bracket_basis(z, i)[k].clone()
            }
        });
        rows.kernel()
    }

    /// The commutator ideal `[g,g]`: span of all basis brackets.
    pub fn commutator(&self) -> IdealHandle<'_> {
        let mut acc = SpanAccumulator::new(self.dim, self.field);
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc.insert(self.bracket_basis(i, j).to_vec());
            }
        }
        IdealHandle {
            parent: self,
            space: acc.into_subspace(),
        }
    }

    pub fn center_ideal(&self) -> IdealHandle<'_> {
        IdealHandle {
            parent: self,
            space: self.center(),
        }
    }

    /// Wraps a subspace as an ideal after verifying two-sided closure.
    pub fn ideal(&self, space: Subspace) -> Result<IdealHandle<'_>> {
        if space.ambient_dim() != self.dim {
            return Err(Error::DimMismatch(format!(
                "ideal ambient {} vs algebra dimension {}",
                space.ambient_dim(),
                self.dim
            )));
        }
        for bi in 0..space.dim() {
            let a = space.basis_vec(bi);
            for x in 0..self.dim {
                let left = self.bracket_left_basis(x, &a);
                let right = self.bracket_right_basis(&a, x);
                if !space.contains(&left) || !space.contains(&right) {
                    return Err(Error::NotAnIdeal { index: bi });
                }
            }
        }
        Ok(IdealHandle { parent: self, space })
    }

    pub fn full_ideal(&self) -> IdealHandle<'_> {
        IdealHandle {
            parent: self,
            space: Subspace::full(self.dim, self.field),
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(|c| c.is_zero())
    }

    pub fn is_perfect(&self) -> bool {
        self.commutator().space.dim() == self.dim
    }

    /// Lie test: `[x,x] = 0` on the basis plus pairwise antisymmetry, the
    /// alternating condition that stays sound in characteristic 2.
    pub fn is_lie(&self) -> bool {
        for i in 0..self.dim {
            if self.bracket_basis(i, i).iter().any(|c| !c.is_zero()) {
                return false;
            }
            for j in 0..i {
                let ij = self.bracket_basis(i, j);
                let ji = self.bracket_basis(j, i);
                if (0..self.dim).any(|k| !ij[k].add(&ji[k]).is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// Quotient algebra by an ideal: returns the quotient and the projection
    /// matrix (quotient-dim x dim).
    pub fn quotient_by(&self, ideal: &IdealHandle<'_>) -> (LeibnizAlgebra, Matrix) {
        assert!(
            std::ptr::eq(self, ideal.parent) || self == ideal.parent,
            "ideal belongs to a different algebra"
        );
        let q = crate::linalg::QuotientSpace::new(self.dim, ideal.space.clone());
        let m = q.dim();
        let mut constants = vec![self.field.zero(); m * m * m];
        for i in 0..m {
            let vi = q.section_basis(i);
            for j in 0..m {
                let vj = q.section_basis(j);
                let br = q.project(&self.bracket(&vi, &vj));
                for (k, s) in br.into_iter().enumerate() {
                    constants[(i * m + j) * m + k] = s;
                }
            }
        }
        let names = q
            .class_columns()
            .iter()
            .map(|&c| self.basis_names[c].clone())
            .collect();
        let alg = LeibnizAlgebra::validate(constants, self.field, names)
            .expect("quotient by an ideal inherits the Leibniz identity");
        (alg, q.project_matrix().clone())
    }

    /// `g^ab = g/[g,g]` with the canonical projection; all structure
    /// constants of the result are zero.
    pub fn abelianization(&self) -> (LeibnizAlgebra, Matrix) {
        let comm = self.commutator();
        let (alg, proj) = self.quotient_by(&comm);
        debug_assert!(alg.is_abelian());
        (alg, proj)
    }

    /// Block-diagonal structure constants on the concatenated basis. Basis
    /// names from the right factor are primed on collision.
    pub fn direct_product(&self, other: &LeibnizAlgebra) -> LeibnizAlgebra {
        assert_eq!(self.field, other.field, "direct product across fields");
        let n = self.dim + other.dim;
        let mut constants = vec![self.field.zero(); n * n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    constants[(i * n + j) * n + k] = self.bracket_basis(i, j)[k].clone();
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    constants[((self.dim + i) * n + self.dim + j) * n + self.dim + k] =
                        other.bracket_basis(i, j)[k].clone();
                }
            }
        }
        let mut names = self.basis_names.clone();
        for raw in &other.basis_names {
            let mut candidate = raw.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        LeibnizAlgebra::validate(constants, self.field, names)
            .expect("block-diagonal constants inherit the Leibniz identity")
    }

    /// Universal Lie image: quotient by the ideal closure of all squares
    /// `[v,v]` (basis squares plus their polarizations). The closure is a
    /// fixpoint over bracketing with basis vectors; it terminates because the
    /// dimension strictly increases and is bounded.
    pub fn liezation(&self) -> (LeibnizAlgebra, Matrix) {
        let mut acc = SpanAccumulator::new(self.dim, self.field);
        for i in 0..self.dim {
            acc.insert(self.bracket_basis(i, i).to_vec());
            for j in 0..i {
                let ij = self.bracket_basis(i, j);
                let ji = self.bracket_basis(j, i);
                acc.insert((0..self.dim).map(|k| ij[k].add(&ji[k])).collect());
            }
        }
        loop {
            let snapshot: Vec<Vec<Scalar>> = acc.rows().to_vec();
            let mut grew = false;
            for v in &snapshot {
                for x in 0..self.dim {
                    grew |= acc.insert(self.bracket_left_basis(x, v));
                    grew |= acc.insert(self.bracket_right_basis(v, x));
                }
            }
            if !grew {
                break;
            }
        }
        let ideal = IdealHandle {
            parent: self,
            space: acc.into_subspace(),
        };
        let (alg, proj) = self.quotient_by(&ideal);
        debug_assert!(alg.is_lie());
        (alg, proj)
    }

    /// The biderivation algebra of `self`; see [`Biderivations`].
    pub fn biderivations(&self) -> Biderivations {
        Biderivations::compute(self)
    }

    /// Image of `x -> (d_x, delta_x)` inside the biderivation coordinate
    /// space; its dimension is `dim - dim Z`.
    pub fn inner_biderivations(&self) -> Subspace {
        let n = self.dim;
        let mut acc = SpanAccumulator::new(2 * n * n, self.field);
        for x in 0..n {
            acc.insert(self.inner_pair_vec(x));
        }
        acc.into_subspace()
    }

    /// Flattened `(d_x, delta_x)` with `d_x(y) = [y,x]`, `delta_x(y) = -[x,y]`.
    fn inner_pair_vec(&self, x: usize) -> Vec<Scalar> {
        let n = self.dim;
        let mut v = vec![self.field.zero(); 2 * n * n];
        for c in 0..n {
            let d_col = self.bracket_basis(c, x); // [e_c, e_x]
            let a_col = self.bracket_basis(x, c); // [e_x, e_c]
            for r in 0..n {
                v[r * n + c] = d_col[r].clone();
                v[n * n + r * n + c] = a_col[r].neg();
            }
        }
        v
    }

    fn inner_pair_of(&self, vec: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![self.field.zero(); 2 * n * n];
        for (x, coeff) in vec.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (idx, entry) in self.inner_pair_vec(x).into_iter().enumerate() {
                if !entry.is_zero() {
                    out[idx] = out[idx].add(&coeff.mul(&entry));
                }
            }
        }
        out
    }
}

/// A verified two-sided ideal of its parent algebra.
#[derive(Debug, Clone)]
pub struct IdealHandle<'g> {
    parent: &'g LeibnizAlgebra,
    space: Subspace,
}

impl<'g> IdealHandle<'g> {
    pub fn parent(&self) -> &'g LeibnizAlgebra {
        self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// The Leibniz algebra of biderivations: pairs `(d, delta)` of a derivation
/// and an anti-derivation subject to
/// `[x, d(y)] = [x, delta(y)]` and `delta[x,y] = -delta[y,x]`,
/// realized as the solution subspace of those four linear conditions inside
/// `2n^2` coordinates (`d` first, row-major, then `delta`).
///
/// The bracket is `[(d,delta),(d',delta')] = (d'd - dd', d'delta - delta d')`,
/// the unique choice making `x -> (d_x, delta_x)` a homomorphism.
#[derive(Debug, Clone)]
pub struct Biderivations {
    pub space: Subspace,
    /// `bracket[i][j]` = coordinates (w.r.t. `space`'s basis) of the bracket
    /// of basis pairs i and j.
    pub bracket: Vec<Vec<Vec<Scalar>>>,
}

impl Biderivations {
    fn compute(g: &LeibnizAlgebra) -> Biderivations {
        let n = g.dim;
        let nn = n * n;
        let field = g.field;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let didx = |r: usize, c: usize| r * n + c;
        let xidx = |r: usize, c: usize| nn + r * n + c;
        let c3 = |i: usize, j: usize, k: usize| g.bracket_basis(i, j)[k].clone();
        // derivation law: d[x_i,x_j] = [d x_i, x_j] + [x_i, d x_j]
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut row = vec![field.zero(); 2 * nn];
                    for m in 0..n {
                        row[didx(k, m)] = row[didx(k, m)].add(&c3(i, j, m));
                    }
                    for r in 0..n {
                        row[didx(r, i)] = row[didx(r, i)].sub(&c3(r, j, k));
                        row[didx(r, j)] = row[didx(r, j)].sub(&c3(i, r, k));
                    }
                    rows.push(row);
                }
            }
        }
        // anti-derivation law: delta[x_i,x_j] = [delta x_i, x_j] - [delta x_j, x_i]
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut row = vec![field.zero(); 2 * nn];
                    for m in 0..n {
                        row[xidx(k, m)] = row[xidx(k, m)].add(&c3(i, j, m));
                    }
                    for r in 0..n {
                        row[xidx(r, i)] = row[xidx(r, i)].sub(&c3(r, j, k));
                        row[xidx(r, j)] = row[xidx(r, j)].add(&c3(r, i, k));
                    }
                    rows.push(row);
                }
            }
        }
        // compatibility: [x_i, (d - delta)(x_j)] = 0
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut row = vec![field.zero(); 2 * nn];
                    for r in 0..n {
                        row[didx(r, j)] = row[didx(r, j)].add(&c3(i, r, k));
                        row[xidx(r, j)] = row[xidx(r, j)].sub(&c3(i, r, k));
                    }
                    rows.push(row);
                }
            }
        }
        // antisymmetry of delta on brackets: delta([x_i,x_j] + [x_j,x_i]) = 0
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut row = vec![field.zero(); 2 * nn];
                    for m in 0..n {
                        row[xidx(k, m)] = row[xidx(k, m)].add(&c3(i, j, m).add(&c3(j, i, m)));
                    }
                    rows.push(row);
                }
            }
        }
        let space = Matrix::from_rows(rows, 2 * nn, field).kernel();
        let dim = space.dim();
        let mut bracket = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            let u = space.basis_vec(i);
            for j in 0..dim {
                let v = space.basis_vec(j);
                let w = bider_bracket(n, field, &u, &v);
                assert!(
                    space.contains(&w),
                    "biderivation bracket escapes the solution space"
                );
                bracket[i][j] = space.coordinates(&w);
            }
        }
        Biderivations { space, bracket }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Unpacks the i-th basis element into its derivation and
    /// anti-derivation matrices.
    pub fn pair_matrices(&self, i: usize) -> (Matrix, Matrix) {
        let v = self.space.basis_vec(i);
        let nn = v.len() / 2;
        let n = (nn as f64).sqrt() as usize;
        debug_assert_eq!(n * n, nn);
        let field = self.space.field();
        let d = Matrix::from_fn(n, n, field, |r, c| v[r * n + c].clone());
        let delta = Matrix::from_fn(n, n, field, |r, c| v[nn + r * n + c].clone());
        (d, delta)
    }
}

/// `[(d,delta),(d',delta')] = (d'd - dd', d'delta - delta d')` on flattened pairs.
fn bider_bracket(n: usize, field: FieldSpec, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let nn = n * n;
    let at = |w: &[Scalar], base: usize, r: usize, c: usize| w[base + r * n + c].clone();
    let mut out = vec![field.zero(); 2 * nn];
    for r in 0..n {
        for c in 0..n {
            let mut d_term = field.zero();
            let mut a_term = field.zero();
            for k in 0..n {
                // (d' d)[r][c] - (d d')[r][c]
                d_term = d_term.add(&at(v, 0, r, k).mul(&at(u, 0, k, c)));
                d_term = d_term.sub(&at(u, 0, r, k).mul(&at(v, 0, k, c)));
                // (d' delta)[r][c] - (delta d')[r][c]
                a_term = a_term.add(&at(v, 0, r, k).mul(&at(u, nn, k, c)));
                a_term = a_term.sub(&at(u, nn, r, k).mul(&at(v, 0, k, c)));
            }
            out[r * n + c] = d_term;
            out[nn + r * n + c] = a_term;
        }
    }
    out
}

/// Checks that `x -> (d_x, delta_x)` is bracket-compatible; exposed for the
/// invariant suite.
pub fn inner_map_is_homomorphism(g: &LeibnizAlgebra) -> bool {
    let n = g.dim();
    for x in 0..n {
        for y in 0..n {
            let lhs = g.inner_pair_of(g.bracket_basis(x, y));
            let rhs = bider_bracket(n, g.field(), &g.inner_pair_vec(x), &g.inner_pair_vec(y));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    pub(crate) fn heisenberg3() -> LeibnizAlgebra {
        LeibnizAlgebra::from_int_table(
            &[((0, 1), vec![(2, 1)]), ((1, 0), vec![(2, -1)])],
            3,
            Q,
            &["x", "y", "z"],
        )
        .unwrap()
    }

    pub(crate) fn nullfiliform2() -> LeibnizAlgebra {
        LeibnizAlgebra::from_int_table(&[((0, 0), vec![(1, 1)])], 2, Q, &["x", "y"]).unwrap()
    }

    pub(crate) fn sl2() -> LeibnizAlgebra {
        LeibnizAlgebra::from_int_table(
            &[
                ((0, 1), vec![(2, 1)]),
                ((1, 0), vec![(2, -1)]),
                ((2, 0), vec![(0, 2)]),
                ((0, 2), vec![(0, -2)]),
                ((2, 1), vec![(1, -2)]),
                ((1, 2), vec![(1, 2)]),
            ],
            3,
            Q,
            &["e", "f", "h"],
        )
        .unwrap()
    }

    pub(crate) fn abelian(n: usize) -> LeibnizAlgebra {
        let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        LeibnizAlgebra::from_int_table(&[], n, Q, &refs).unwrap()
    }

    #[test]
    fn validate_accepts_standard_algebras() {
        heisenberg3();
        nullfiliform2();
        sl2();
    }

    #[test]
    fn validate_rejects_x_x_x() {
        let err =
            LeibnizAlgebra::from_int_table(&[((0, 0), vec![(0, 1)])], 1, Q, &["x"]).unwrap_err();
        match err {
            Error::LeibnizIdentityViolation { i, j, k, .. } => assert_eq!((i, j, k), (0, 0, 0)),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn bracket_examples() {
        let n2 = nullfiliform2();
        let x = n2.unit_vector(0);
        assert_eq!(n2.bracket(&x, &x), n2.unit_vector(1));
        let zero = vec![Q.zero(), Q.zero()];
        assert!(n2.bracket(&zero, &x).iter().all(|c| c.is_zero()));

        let h = heisenberg3();
        let got = h.bracket(&h.unit_vector(1), &h.unit_vector(0));
        assert_eq!(got, vec![Q.zero(), Q.zero(), Q.from_i64(-1)]);
    }

    #[test]
    fn center_examples() {
        assert_eq!(abelian(4).center().dim(), 4);
        let h = heisenberg3();
        let z = h.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&h.unit_vector(2)));
        let n2 = nullfiliform2();
        assert!(n2.center().contains(&n2.unit_vector(1)));
        assert_eq!(n2.center().dim(), 1);
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(abelian(3).commutator().dim(), 0);
        assert_eq!(sl2().commutator().dim(), 3);
        let n2 = nullfiliform2();
        let c = n2.commutator();
        assert_eq!(c.dim(), 1);
        assert!(c.space().contains(&n2.unit_vector(1)));
    }

    #[test]
    fn center_and_commutator_are_ideals() {
        for g in [heisenberg3(), nullfiliform2(), sl2()] {
            assert!(g.ideal(g.center()).is_ok());
            assert!(g.ideal(g.commutator().space().clone()).is_ok());
        }
    }

    #[test]
    fn non_ideal_rejected() {
        // span{e} in sl2 is not an ideal: [h,e] = 2e stays, but [e,f] = h escapes
        let g = sl2();
        let s = Subspace::from_spanning(vec![g.unit_vector(0)], 3, Q);
        assert!(matches!(g.ideal(s), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn abelianization_examples() {
        let (ab, _) = nullfiliform2().abelianization();
        assert_eq!(ab.dim(), 1);
        assert!(ab.is_abelian());
        let (ab, _) = sl2().abelianization();
        assert_eq!(ab.dim(), 0);
        let a3 = abelian(3);
        let (ab, _) = a3.abelianization();
        assert_eq!(ab.dim(), 3);
    }

    #[test]
    fn predicates() {
        assert!(sl2().is_perfect());
        assert!(!nullfiliform2().is_perfect());
        assert!(!nullfiliform2().is_lie());
        assert!(abelian(2).is_lie());
        assert!(sl2().is_lie());
        assert!(heisenberg3().is_lie());
        assert!(abelian(2).is_abelian());
    }

    #[test]
    fn direct_product_examples() {
        let p = sl2().direct_product(&abelian(1));
        assert_eq!(p.dim(), 4);
        let z = p.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&p.unit_vector(3)));

        let zero = abelian(0);
        let g = heisenberg3();
        assert_eq!(zero.direct_product(&g).dim(), 3);
        assert_eq!(
            abelian(1).direct_product(&abelian(1)).dim(),
            abelian(2).dim()
        );
    }

    #[test]
    fn direct_product_center_is_blockwise() {
        let g = nullfiliform2();
        let h = heisenberg3();
        let p = g.direct_product(&h);
        assert_eq!(p.center().dim(), g.center().dim() + h.center().dim());
    }

    #[test]
    fn liezation_examples() {
        let (l, _) = heisenberg3().liezation();
        assert_eq!(l.dim(), 3);
        assert!(l.is_lie());

        let (l, _) = nullfiliform2().liezation();
        assert_eq!(l.dim(), 1);
        assert!(l.is_abelian());

        let (l, _) = abelian(3).liezation();
        assert_eq!(l.dim(), 3);
    }

    #[test]
    fn liezation_fixes_lie_algebras() {
        for g in [sl2(), heisenberg3(), abelian(2)] {
            let (l, _) = g.liezation();
            assert_eq!(l, g);
        }
    }

    #[test]
    fn bider_abelian_counts() {
        for n in 1..4 {
            let b = abelian(n).biderivations();
            assert_eq!(b.dim(), 2 * n * n);
            assert_eq!(abelian(n).inner_biderivations().dim(), 0);
        }
    }

    #[test]
    fn bider_inner_rank_is_dim_minus_center() {
        for g in [nullfiliform2(), heisenberg3(), sl2()] {
            assert_eq!(
                g.inner_biderivations().dim(),
                g.dim() - g.center().dim()
            );
        }
    }

    #[test]
    fn inner_map_kernel_is_center() {
        // the kernel of x -> (d_x, delta_x) equals the center: check on
        // heisenberg3, where it is span{z}
        let g = heisenberg3();
        let n = g.dim();
        let rows = Matrix::from_fn(2 * n * n, n, Q, |r, x| g.inner_pair_vec(x)[r].clone());
        assert_eq!(rows.kernel(), g.center());
    }

    #[test]
    fn inner_map_is_hom_on_catalog() {
        for g in [nullfiliform2(), heisenberg3(), sl2(), abelian(3)] {
            assert!(inner_map_is_homomorphism(&g));
        }
    }

    #[test]
    fn bider_golden_dims() {
        assert_eq!(nullfiliform2().biderivations().dim(), 3);
        assert_eq!(heisenberg3().biderivations().dim(), 8);
        assert_eq!(sl2().biderivations().dim(), 3);
    }

    #[test]
    fn bider_pairs_satisfy_both_laws() {
        for g in [nullfiliform2(), heisenberg3(), r2_solvable()] {
            let n = g.dim();
            let b = g.biderivations();
            for idx in 0..b.dim() {
                let (d, delta) = b.pair_matrices(idx);
                for i in 0..n {
                    for j in 0..n {
                        // d[x,y] = [d x, y] + [x, d y]
                        let lhs = d.mul_vec(g.bracket_basis(i, j));
                        let rhs1 = g.bracket(&d.mul_vec(&g.unit_vector(i)), &g.unit_vector(j));
                        let rhs2 = g.bracket(&g.unit_vector(i), &d.mul_vec(&g.unit_vector(j)));
                        assert!((0..n).all(|k| lhs[k] == rhs1[k].add(&rhs2[k])));
                        // delta[x,y] = [delta x, y] - [delta y, x]
                        let lhs = delta.mul_vec(g.bracket_basis(i, j));
                        let r1 = g.bracket(&delta.mul_vec(&g.unit_vector(i)), &g.unit_vector(j));
                        let r2 = g.bracket(&delta.mul_vec(&g.unit_vector(j)), &g.unit_vector(i));
                        assert!((0..n).all(|k| lhs[k] == r1[k].sub(&r2[k])));
                        // [x, d y] = [x, delta y]
                        let dj = d.mul_vec(&g.unit_vector(j));
                        let aj = delta.mul_vec(&g.unit_vector(j));
                        assert_eq!(
                            g.bracket(&g.unit_vector(i), &dj),
                            g.bracket(&g.unit_vector(i), &aj)
                        );
                    }
                }
            }
        }
    }

    fn r2_solvable() -> LeibnizAlgebra {
        LeibnizAlgebra::from_int_table(
            &[((0, 1), vec![(1, 1)]), ((1, 0), vec![(1, -1)])],
            2,
            Q,
            &["x", "y"],
        )
        .unwrap()
    }
}
