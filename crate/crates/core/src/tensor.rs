//! Non-abelian tensor and exterior products of ideals of a Leibniz algebra,
//! and everything they carry: the induced homomorphisms into the factors and
//! the ambient algebra, the kernel of the tensor-to-exterior projection, the
//! tensor/exterior centers, and the capability decision (an algebra is
//! capable exactly when its exterior center vanishes).
//!
//! For ideals `a`, `b` of `g` acting on each other through the bracket of
//! `g`, the tensor product is presented by `2·dim(a)·dim(b)` generator
//! symbols `m *₁ n`, `m *₂ n` subject to the defining relations of the
//! non-abelian tensor product, instantiated on basis tuples (bilinearity of
//! the symbols reduces the general relations to these), ideal-closed, and
//! quotiented. The exterior product additionally kills `c *₁ c' − c' *₂ c`
//! for `c, c'` in `a ∩ b`.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::leibniz::{IdealHandle, LeibnizAlgebra};
use crate::linalg::{Matrix, QuotientSpace, Subspace};
use crate::presented::{present, BilinearBracket, Presented};

/// Which of the two generator families a symbol belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    One,
    Two,
}

/// Index of a generator symbol: basis positions into the two factors plus a
/// slot. Flat layout is slot-major, then row-major over `(left, right)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorIndex {
    pub slot: Slot,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareKind {
    Tensor,
    Exterior,
}

/// A constructed tensor or exterior product of two ideals.
#[derive(Debug, Clone)]
pub struct PresentedSquare {
    kind: SquareKind,
    algebra: LeibnizAlgebra,
    left_basis: Matrix,  // p x n, RREF rows of the left ideal
    right_basis: Matrix, // q x n
    presented: Presented,
    /// n x D: generator -> its bracket value in g-coordinates
    /// (`m *₁ n -> [m,n]`, `m *₂ n -> [n,m]`).
    value_map: Matrix,
    /// p x D / q x D: the same values in left/right ideal coordinates.
    left_map: Matrix,
    right_map: Matrix,
    class_labels: Vec<String>,
}

impl PresentedSquare {
    pub fn kind(&self) -> SquareKind {
        self.kind
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn left_dim(&self) -> usize {
        self.left_basis.rows()
    }

    pub fn right_dim(&self) -> usize {
        self.right_basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.left_dim() * self.right_dim()
    }

    /// Dimension of the constructed algebra.
    pub fn dim(&self) -> usize {
        self.presented.space.dim()
    }

    pub fn relations(&self) -> &Subspace {
        &self.presented.relations
    }

    pub fn space(&self) -> &QuotientSpace {
        &self.presented.space
    }

    pub fn bracket_table(&self) -> &Vec<Vec<Vec<Scalar>>> {
        &self.presented.bracket_table
    }

    pub fn saturation_added_dim(&self) -> usize {
        self.presented.saturation_added_dim
    }

    /// Human-readable labels of the quotient basis classes: the generator
    /// symbols on the non-pivot columns of the relation RREF.
    pub fn class_labels(&self) -> &[String] {
        &self.class_labels
    }

    pub fn flat_index(&self, g: GeneratorIndex) -> usize {
        let (p, q) = (self.left_dim(), self.right_dim());
        debug_assert!(g.left < p && g.right < q);
        let slot = match g.slot {
            Slot::One => 0,
            Slot::Two => 1,
        };
        slot * p * q + g.left * q + g.right
    }

    /// Quotient coordinates of a generator symbol's class.
    pub fn gen_class(&self, g: GeneratorIndex) -> Vec<Scalar> {
        let col = self.flat_index(g);
        let pm = self.presented.space.project_matrix();
        (0..pm.rows()).map(|r| pm.at(r, col).clone()).collect()
    }

    /// Quotient coordinates of an arbitrary generator-space vector.
    pub fn class_of(&self, ambient: &[Scalar]) -> Vec<Scalar> {
        self.presented.space.project(ambient)
    }

    /// Bracket of two quotient-coordinate vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.presented.bracket(u, v)
    }

    /// The homomorphism into the ambient algebra, `m *₁ n -> [m,n]` and
    /// `m *₂ n -> [n,m]`. Well-definedness on the quotient and bracket
    /// compatibility are verified exactly.
    pub fn theta(&self) -> Result<LinearHom> {
        let hom = self.descend(&self.value_map, "theta")?;
        let g = &self.algebra;
        if !hom.is_bracket_compatible(&self.presented, |u, v| g.bracket(u, v)) {
            return Err(Error::WellDefinedness(
                "theta is not bracket-compatible".into(),
            ));
        }
        Ok(hom)
    }

    /// The induced homomorphisms into the left and right ideals
    /// (`m *₁ n -> mⁿ, m *₂ n -> ⁿm` and `m *₁ n -> ᵐn, m *₂ n -> nᵐ`),
    /// with values in ideal coordinates.
    pub fn tau_maps(&self) -> Result<(LinearHom, LinearHom)> {
        let tau_left = self.descend(&self.left_map, "tau (left factor)")?;
        let tau_right = self.descend(&self.right_map, "tau (right factor)")?;
        let g = &self.algebra;
        let ideal_bracket = |basis: &Matrix, u: &[Scalar], v: &[Scalar]| {
            let ug = lift_through(basis, u);
            let vg = lift_through(basis, v);
            coordinates_in(basis, &g.bracket(&ug, &vg))
        };
        let ok_left = tau_left
            .is_bracket_compatible(&self.presented, |u, v| ideal_bracket(&self.left_basis, u, v));
        let ok_right = tau_right
            .is_bracket_compatible(&self.presented, |u, v| ideal_bracket(&self.right_basis, u, v));
        if !ok_left || !ok_right {
            return Err(Error::WellDefinedness(
                "tau is not bracket-compatible".into(),
            ));
        }
        Ok((tau_left, tau_right))
    }

    /// Restricts a generator-space map to the quotient, checking that all
    /// relations map to zero.
    fn descend(&self, gen_map: &Matrix, what: &str) -> Result<LinearHom> {
        let rel = &self.presented.relations;
        for bi in 0..rel.dim() {
            let img = gen_map.mul_vec(&rel.basis_vec(bi));
            if img.iter().any(|x| !x.is_zero()) {
                return Err(Error::WellDefinedness(format!(
                    "{what} does not vanish on the relation space"
                )));
            }
        }
        Ok(LinearHom {
            matrix: gen_map.mul_mat(self.presented.space.section_matrix()),
        })
    }

    /// Exact Leibniz identity check for the induced bracket.
    pub fn leibniz_identity_holds(&self) -> bool {
        self.presented.leibniz_identity_holds()
    }

    /// Center of the constructed algebra, in quotient coordinates.
    pub fn algebra_center(&self) -> Subspace {
        self.presented.algebra_center()
    }
}

/// A linear map between coordinate spaces, stored as a `target x source`
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearHom {
    pub matrix: Matrix,
}

impl LinearHom {
    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    /// Image as a subspace of the target.
    pub fn image(&self) -> Subspace {
        let rows: Vec<Vec<Scalar>> = (0..self.matrix.cols())
            .map(|c| (0..self.matrix.rows()).map(|r| self.matrix.at(r, c).clone()).collect())
            .collect();
        Subspace::from_spanning(rows, self.matrix.rows(), self.matrix.field())
    }

    /// Checks `f([x,y]) = [f(x), f(y)]` on all quotient basis pairs of the
    /// source presentation.
    fn is_bracket_compatible(
        &self,
        source: &Presented,
        target_bracket: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
    ) -> bool {
        let dim = source.space.dim();
        let col = |k: usize| -> Vec<Scalar> {
            (0..self.matrix.rows()).map(|r| self.matrix.at(r, k).clone()).collect()
        };
        for k in 0..dim {
            for l in 0..dim {
                let lhs = self.apply(&source.bracket_table[k][l]);
                let rhs = target_bracket(&col(k), &col(l));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

struct SquareBuilder<'g> {
    g: &'g LeibnizAlgebra,
    a: Matrix, // p x n RREF
    b: Matrix, // q x n RREF
    p: usize,
    q: usize,
    field: FieldSpec,
    // bracket values of basis pairs, in ideal coordinates:
    ab_a: Vec<Vec<Vec<Scalar>>>, // [i][j] = [a_i, b_j] in a-coords
    ab_b: Vec<Vec<Vec<Scalar>>>, // [i][j] = [a_i, b_j] in b-coords
    ba_a: Vec<Vec<Vec<Scalar>>>, // [i][j] = [b_j, a_i] in a-coords
    ba_b: Vec<Vec<Vec<Scalar>>>, // [i][j] = [b_j, a_i] in b-coords
    aa_a: Vec<Vec<Vec<Scalar>>>, // [i][k] = [a_i, a_k] in a-coords
    bb_b: Vec<Vec<Vec<Scalar>>>, // [j][l] = [b_j, b_l] in b-coords
}

fn coordinates_in(basis: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    // `basis` rows are in RREF; coordinates are the entries at pivot columns.
    let mut pivots = Vec::with_capacity(basis.rows());
    for r in 0..basis.rows() {
        let p = (0..basis.cols())
            .find(|&c| !basis.at(r, c).is_zero())
            .expect("RREF basis row is nonzero");
        pivots.push(p);
    }
    let coords: Vec<Scalar> = pivots.iter().map(|&p| v[p].clone()).collect();
    // exact membership check: the residual must vanish
    let mut resid = v.to_vec();
    for (r, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            for t in 0..basis.cols() {
                let sub = c.mul(basis.at(r, t));
                resid[t] = resid[t].sub(&sub);
            }
        }
    }
    assert!(
        resid.iter().all(|x| x.is_zero()),
        "bracket value escapes the ideal; the handle was not a two-sided ideal"
    );
    coords
}

fn lift_through(basis: &Matrix, coords: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![basis.field().zero(); basis.cols()];
    for (r, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            for t in 0..basis.cols() {
                let add = c.mul(basis.at(r, t));
                out[t] = out[t].add(&add);
            }
        }
    }
    out
}

impl<'g> SquareBuilder<'g> {
    fn new(g: &'g LeibnizAlgebra, a: &Subspace, b: &Subspace) -> Self {
        let field = g.field();
        let (p, q) = (a.dim(), b.dim());
        let a_m = a.basis().clone();
        let b_m = b.basis().clone();
        let row = |m: &Matrix, i: usize| m.row_vec(i);
        let mut ab_a = vec![vec![Vec::new(); q]; p];
        let mut ab_b = vec![vec![Vec::new(); q]; p];
        let mut ba_a = vec![vec![Vec::new(); q]; p];
        let mut ba_b = vec![vec![Vec::new(); q]; p];
        for i in 0..p {
            for j in 0..q {
                let ab = g.bracket(&row(&a_m, i), &row(&b_m, j));
                let ba = g.bracket(&row(&b_m, j), &row(&a_m, i));
                ab_a[i][j] = coordinates_in(&a_m, &ab);
                ab_b[i][j] = coordinates_in(&b_m, &ab);
                ba_a[i][j] = coordinates_in(&a_m, &ba);
                ba_b[i][j] = coordinates_in(&b_m, &ba);
            }
        }
        let mut aa_a = vec![vec![Vec::new(); p]; p];
        for i in 0..p {
            for k in 0..p {
                aa_a[i][k] = coordinates_in(&a_m, &g.bracket(&row(&a_m, i), &row(&a_m, k)));
            }
        }
        let mut bb_b = vec![vec![Vec::new(); q]; q];
        for j in 0..q {
            for l in 0..q {
                bb_b[j][l] = coordinates_in(&b_m, &g.bracket(&row(&b_m, j), &row(&b_m, l)));
            }
        }
        SquareBuilder {
            g,
            a: a_m,
            b: b_m,
            p,
            q,
            field,
            ab_a,
            ab_b,
            ba_a,
            ba_b,
            aa_a,
            bb_b,
        }
    }

    fn ambient(&self) -> usize {
        2 * self.p * self.q
    }

    fn flat(&self, slot: usize, i: usize, j: usize) -> usize {
        slot * self.p * self.q + i * self.q + j
    }

    /// `m *₁ n` for `m` in a-coords, `n` in b-coords, expanded bilinearly.
    fn sym(&self, slot: usize, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.ambient()];
        for (i, c) in m.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, d) in n.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let t = self.flat(slot, i, j);
                out[t] = out[t].add(&c.mul(d));
            }
        }
        out
    }

    fn unit(&self, len: usize, at: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); len];
        v[at] = self.field.one();
        v
    }

    /// Instantiates the defining relations on basis tuples. Each relation
    /// family is multilinear in its arguments, so basis instantiation spans
    /// the full relation set.
    fn relation_rows(&self) -> Vec<Vec<Scalar>> {
        let (p, q) = (self.p, self.q);
        let mut rows = Vec::new();
        let sub = |u: Vec<Scalar>, v: Vec<Scalar>| -> Vec<Scalar> {
            u.iter().zip(&v).map(|(a, b)| a.sub(b)).collect()
        };
        let add = |u: Vec<Scalar>, v: Vec<Scalar>| -> Vec<Scalar> {
            u.iter().zip(&v).map(|(a, b)| a.add(b)).collect()
        };
        let ua = |i: usize| self.unit(p, i);
        let ub = |j: usize| self.unit(q, j);

        // m *₁ [n,n'] = mⁿ *₁ n' − m^{n'} *₁ n
        for i in 0..p {
            for j in 0..q {
                for l in 0..q {
                    let r = self.sym(0, &ua(i), &self.bb_b[j][l]);
                    let r = sub(r, self.sym(0, &self.ab_a[i][j], &ub(l)));
                    let r = add(r, self.sym(0, &self.ab_a[i][l], &ub(j)));
                    rows.push(r);
                }
            }
        }
        // [m,m'] *₂ n = m' *₂ nᵐ − m *₂ n^{m'}
        for i in 0..p {
            for k in 0..p {
                for j in 0..q {
                    let r = self.sym(1, &self.aa_a[i][k], &ub(j));
                    let r = sub(r, self.sym(1, &ua(k), &self.ba_b[i][j]));
                    let r = add(r, self.sym(1, &ua(i), &self.ba_b[k][j]));
                    rows.push(r);
                }
            }
        }
        // [m,m'] *₁ n = m' *₂ ᵐn − m *₁ n^{m'}
        for i in 0..p {
            for k in 0..p {
                for j in 0..q {
                    let r = self.sym(0, &self.aa_a[i][k], &ub(j));
                    let r = sub(r, self.sym(1, &ua(k), &self.ab_b[i][j]));
                    let r = add(r, self.sym(0, &ua(i), &self.ba_b[k][j]));
                    rows.push(r);
                }
            }
        }
        // m *₂ [n,n'] = ⁿm *₁ n' − m^{n'} *₂ n
        for i in 0..p {
            for j in 0..q {
                for l in 0..q {
                    let r = self.sym(1, &ua(i), &self.bb_b[j][l]);
                    let r = sub(r, self.sym(0, &self.ba_a[i][j], &ub(l)));
                    let r = add(r, self.sym(1, &self.ab_a[i][l], &ub(j)));
                    rows.push(r);
                }
            }
        }
        // m *₁ ^{m'}n = −m *₁ n^{m'}
        for i in 0..p {
            for k in 0..p {
                for j in 0..q {
                    let r = add(
                        self.sym(0, &ua(i), &self.ab_b[k][j]),
                        self.sym(0, &ua(i), &self.ba_b[k][j]),
                    );
                    rows.push(r);
                }
            }
        }
        // ^{n'}m *₂ n = −m^{n'} *₂ n
        for i in 0..p {
            for l in 0..q {
                for j in 0..q {
                    let r = add(
                        self.sym(1, &self.ba_a[i][l], &ub(j)),
                        self.sym(1, &self.ab_a[i][l], &ub(j)),
                    );
                    rows.push(r);
                }
            }
        }
        // outer equalities of the bracket relations, on quadruples:
        //   mⁿ *₁ ^{m'}n' = m'^{n'} *₂ ᵐn        (slot-1/slot-1 products)
        //   ⁿm *₁ n'^{m'} = ^{n'}m' *₂ nᵐ        (slot-2/slot-2)
        //   mⁿ *₁ n'^{m'} = ^{n'}m' *₂ ᵐn        (slot-1/slot-2)
        //   ⁿm *₁ ^{m'}n' = m'^{n'} *₂ nᵐ        (slot-2/slot-1)
        for i in 0..p {
            for j in 0..q {
                for k in 0..p {
                    for l in 0..q {
                        rows.push(sub(
                            self.sym(0, &self.ab_a[i][j], &self.ab_b[k][l]),
                            self.sym(1, &self.ab_a[k][l], &self.ab_b[i][j]),
                        ));
                        rows.push(sub(
                            self.sym(0, &self.ba_a[i][j], &self.ba_b[k][l]),
                            self.sym(1, &self.ba_a[k][l], &self.ba_b[i][j]),
                        ));
                        rows.push(sub(
                            self.sym(0, &self.ab_a[i][j], &self.ba_b[k][l]),
                            self.sym(1, &self.ba_a[k][l], &self.ab_b[i][j]),
                        ));
                        rows.push(sub(
                            self.sym(0, &self.ba_a[i][j], &self.ab_b[k][l]),
                            self.sym(1, &self.ab_a[k][l], &self.ba_b[i][j]),
                        ));
                    }
                }
            }
        }
        rows
    }

    /// `c *₁ c' − c' *₂ c` over an ordered basis of `a ∩ b`.
    fn exterior_rows(&self, a: &Subspace, b: &Subspace) -> Result<Vec<Vec<Scalar>>> {
        let inter = a.intersect(b)?;
        let mut rows = Vec::new();
        for x in 0..inter.dim() {
            let cx = inter.basis_vec(x);
            let cx_a = coordinates_in(&self.a, &cx);
            let cx_b = coordinates_in(&self.b, &cx);
            for y in 0..inter.dim() {
                let cy = inter.basis_vec(y);
                let cy_a = coordinates_in(&self.a, &cy);
                let cy_b = coordinates_in(&self.b, &cy);
                let r1 = self.sym(0, &cx_a, &cy_b);
                let r2 = self.sym(1, &cy_a, &cx_b);
                rows.push(r1.iter().zip(&r2).map(|(u, v)| u.sub(v)).collect());
            }
        }
        Ok(rows)
    }

    /// Generator value maps: `m *₁ n -> [m,n]`, `m *₂ n -> [n,m]` in
    /// g-coordinates (value_map) and ideal coordinates (left/right maps).
    fn value_maps(&self) -> (Matrix, Matrix, Matrix) {
        let n = self.g.dim();
        let d = self.ambient();
        let mut value = Matrix::zeros(n, d, self.field);
        let mut left = Matrix::zeros(self.p, d, self.field);
        let mut right = Matrix::zeros(self.q, d, self.field);
        for i in 0..self.p {
            for j in 0..self.q {
                let ab = self.g.bracket(&self.a.row_vec(i), &self.b.row_vec(j));
                let ba = self.g.bracket(&self.b.row_vec(j), &self.a.row_vec(i));
                let c1 = self.flat(0, i, j);
                let c2 = self.flat(1, i, j);
                for r in 0..n {
                    value.set(r, c1, ab[r].clone());
                    value.set(r, c2, ba[r].clone());
                }
                for (r, v) in self.ab_a[i][j].iter().enumerate() {
                    left.set(r, c1, v.clone());
                }
                for (r, v) in self.ba_a[i][j].iter().enumerate() {
                    left.set(r, c2, v.clone());
                }
                for (r, v) in self.ab_b[i][j].iter().enumerate() {
                    right.set(r, c1, v.clone());
                }
                for (r, v) in self.ba_b[i][j].iter().enumerate() {
                    right.set(r, c2, v.clone());
                }
            }
        }
        (value, left, right)
    }

    fn factor_label(&self, basis: &Matrix, i: usize) -> String {
        let row = basis.row(i);
        let nz: Vec<usize> = (0..basis.cols()).filter(|&c| !row[c].is_zero()).collect();
        if nz.len() == 1 && row[nz[0]].is_one() {
            return self.g.basis_names()[nz[0]].clone();
        }
        let mut out = String::new();
        for &c in &nz {
            let coeff = &row[c];
            if !out.is_empty() {
                out.push('+');
            }
            if coeff.is_one() {
                out.push_str(&self.g.basis_names()[c]);
            } else {
                out.push_str(&format!("{}·{}", coeff, self.g.basis_names()[c]));
            }
        }
        out
    }

    fn labels(&self, kind: SquareKind, class_columns: &[usize]) -> Vec<String> {
        let mark = match kind {
            SquareKind::Tensor => ["*₁", "*₂"],
            SquareKind::Exterior => ["∧₁", "∧₂"],
        };
        class_columns
            .iter()
            .map(|&col| {
                let pq = self.p * self.q;
                let slot = col / pq;
                let (i, j) = ((col % pq) / self.q, (col % pq) % self.q);
                format!(
                    "{}{}{}",
                    self.factor_label(&self.a, i),
                    mark[slot],
                    self.factor_label(&self.b, j)
                )
            })
            .collect()
    }
}

fn build_square(
    g: &LeibnizAlgebra,
    a: &Subspace,
    b: &Subspace,
    kind: SquareKind,
) -> Result<PresentedSquare> {
    let builder = SquareBuilder::new(g, a, b);
    let mut rows = builder.relation_rows();
    if kind == SquareKind::Exterior {
        rows.extend(builder.exterior_rows(a, b)?);
    }
    let (value_map, left_map, right_map) = builder.value_maps();
    let target: Vec<usize> = (0..builder.p)
        .flat_map(|i| (0..builder.q).map(move |j| (i, j)))
        .map(|(i, j)| builder.flat(0, i, j))
        .collect();
    let bracket = BilinearBracket {
        left: left_map.clone(),
        right: right_map.clone(),
        target,
    };
    let context = match kind {
        SquareKind::Tensor => "tensor product",
        SquareKind::Exterior => "exterior product",
    };
    let presented = present(builder.ambient(), g.field(), rows, &bracket, context)?;
    if !presented.leibniz_identity_holds() {
        return Err(Error::WellDefinedness(format!(
            "{context}: induced bracket fails the Leibniz identity"
        )));
    }
    let class_labels = builder.labels(kind, presented.space.class_columns());
    Ok(PresentedSquare {
        kind,
        algebra: g.clone(),
        left_basis: builder.a,
        right_basis: builder.b,
        presented,
        value_map,
        left_map,
        right_map,
        class_labels,
    })
}

/// Non-abelian tensor product `a ★ b` of two verified ideals of `g`.
pub fn tensor_pair(a: &IdealHandle<'_>, b: &IdealHandle<'_>) -> Result<PresentedSquare> {
    check_same_parent(a, b)?;
    build_square(a.parent(), a.space(), b.space(), SquareKind::Tensor)
}

/// Non-abelian exterior product `a ∧ b`: the tensor product further
/// quotiented by `c *₁ c' − c' *₂ c` for `c, c'` in `a ∩ b`.
pub fn exterior_pair(a: &IdealHandle<'_>, b: &IdealHandle<'_>) -> Result<PresentedSquare> {
    check_same_parent(a, b)?;
    build_square(a.parent(), a.space(), b.space(), SquareKind::Exterior)
}

fn check_same_parent(a: &IdealHandle<'_>, b: &IdealHandle<'_>) -> Result<()> {
    if !std::ptr::eq(a.parent(), b.parent()) && a.parent() != b.parent() {
        return Err(Error::DimMismatch(
            "ideals belong to different algebras".into(),
        ));
    }
    Ok(())
}

pub fn tensor_square(g: &LeibnizAlgebra) -> Result<PresentedSquare> {
    let full = Subspace::full(g.dim(), g.field());
    build_square(g, &full, &full, SquareKind::Tensor)
}

pub fn exterior_square(g: &LeibnizAlgebra) -> Result<PresentedSquare> {
    let full = Subspace::full(g.dim(), g.field());
    build_square(g, &full, &full, SquareKind::Exterior)
}

/// Kernel of the canonical projection `g★g ↠ g∧g`, as a subspace of the
/// tensor-square quotient coordinates. Requires the two squares of the same
/// algebra.
pub fn nabla_from(tensor: &PresentedSquare, exterior: &PresentedSquare) -> Subspace {
    assert_eq!(tensor.kind, SquareKind::Tensor);
    assert_eq!(exterior.kind, SquareKind::Exterior);
    assert_eq!(tensor.ambient_dim(), exterior.ambient_dim());
    let pi = Matrix::from_fn(
        exterior.dim(),
        tensor.dim(),
        tensor.algebra.field(),
        |r, k| {
            exterior
                .class_of(&tensor.presented.space.section_basis(k))[r]
                .clone()
        },
    );
    pi.kernel()
}

/// `∇(g)` and its dimension.
pub fn nabla(g: &LeibnizAlgebra) -> Result<(Subspace, usize)> {
    let t = tensor_square(g)?;
    let e = exterior_square(g)?;
    let s = nabla_from(&t, &e);
    let d = s.dim();
    Ok((s, d))
}

/// Elements whose generator classes with every basis element vanish in the
/// given square: the tensor center for a tensor square, the exterior center
/// for an exterior one.
pub fn center_from(square: &PresentedSquare) -> Subspace {
    let g = &square.algebra;
    let n = g.dim();
    assert_eq!(square.left_dim(), n, "center requires the square of g itself");
    assert_eq!(square.right_dim(), n);
    let dim = square.dim();
    let rows = Matrix::from_fn(2 * n * dim, n, g.field(), |r, i| {
        let (slot, rest) = (r / (n * dim), r % (n * dim));
        let (j, comp) = (rest / dim, rest % dim);
        let col = square.flat_index(GeneratorIndex {
            slot: if slot == 0 { Slot::One } else { Slot::Two },
            left: i,
            right: j,
        });
        square.presented.space.project_matrix().at(comp, col).clone()
    });
    rows.kernel()
}

pub fn tensor_center(g: &LeibnizAlgebra) -> Result<Subspace> {
    Ok(center_from(&tensor_square(g)?))
}

pub fn exterior_center(g: &LeibnizAlgebra) -> Result<Subspace> {
    Ok(center_from(&exterior_square(g)?))
}

/// Capability verdict with witness dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapabilityVerdict {
    pub capable: bool,
    pub dim_exterior_center: usize,
    pub dim_tensor_center: usize,
    pub dim_center: usize,
}

/// Capability criterion: `g` is capable iff its exterior center vanishes.
pub fn is_capable(g: &LeibnizAlgebra) -> Result<CapabilityVerdict> {
    let ze = exterior_center(g)?;
    let zs = tensor_center(g)?;
    Ok(CapabilityVerdict {
        capable: ze.is_zero(),
        dim_exterior_center: ze.dim(),
        dim_tensor_center: zs.dim(),
        dim_center: g.center().dim(),
    })
}

/// The generator-wise coset map `g★g -> g^ab★g^ab`, together with the
/// tensor square of the abelianization it lands in.
pub fn induced_ab_map_from(
    g: &LeibnizAlgebra,
    tensor: &PresentedSquare,
) -> Result<(LinearHom, PresentedSquare)> {
    let (ab, proj) = g.abelianization();
    let t_ab = tensor_square(&ab)?;
    let n = g.dim();
    let m = ab.dim();
    let d_src = 2 * n * n;
    let d_tgt = 2 * m * m;
    // ambient generator map: gen(s,i,j) -> sum_{k,l} proj[k][i] proj[l][j] gen_ab(s,k,l)
    let gmap = Matrix::from_fn(d_tgt, d_src, g.field(), |rt, cs| {
        let (slot_t, rest_t) = (rt / (m * m), rt % (m * m));
        let (k, l) = (rest_t / m, rest_t % m);
        let (slot_s, rest_s) = (cs / (n * n), cs % (n * n));
        let (i, j) = (rest_s / n, rest_s % n);
        if slot_t != slot_s {
            g.field().zero()
        } else {
            proj.at(k, i).mul(proj.at(l, j))
        }
    });
    // well-definedness on the quotient
    let rel = tensor.relations();
    for bi in 0..rel.dim() {
        let img = gmap.mul_vec(&rel.basis_vec(bi));
        if t_ab.class_of(&img).iter().any(|x| !x.is_zero()) {
            return Err(Error::WellDefinedness(
                "coset map to the abelianization square does not vanish on relations".into(),
            ));
        }
    }
    let matrix = Matrix::from_fn(t_ab.dim(), tensor.dim(), g.field(), |r, k| {
        let img = gmap.mul_vec(&tensor.presented.space.section_basis(k));
        t_ab.class_of(&img)[r].clone()
    });
    let hom = LinearHom { matrix };
    if !hom.is_bracket_compatible(&tensor.presented, |u, v| t_ab.bracket(u, v)) {
        return Err(Error::WellDefinedness(
            "coset map to the abelianization square is not bracket-compatible".into(),
        ));
    }
    Ok((hom, t_ab))
}

pub fn induced_ab_map(g: &LeibnizAlgebra) -> Result<(LinearHom, PresentedSquare)> {
    let t = tensor_square(g)?;
    induced_ab_map_from(g, &t)
}

/// `dim ker(θ|_{g∧g})`; for perfect algebras this is the kernel of the
/// universal central extension.
pub fn multiplier(g: &LeibnizAlgebra) -> Result<usize> {
    let e = exterior_square(g)?;
    Ok(e.theta()?.kernel().dim())
}
