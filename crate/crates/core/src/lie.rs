//! Non-abelian tensor and exterior squares in the category of Lie algebras,
//! with the Lie exterior center and Lie capability. Lets a Lie algebra be
//! compared across the two categories: Lie capability implies Leibniz
//! capability, but not conversely (the one-dimensional algebra, or any
//! perfect-times-line product, separates them).
//!
//! Generators are single-slot symbols `x ⊗ y` on basis pairs. The relation
//! set is the Ellis presentation specialized to the self-action by the
//! bracket:
//!
//! ```text
//! [x,x'] ⊗ y  = x ⊗ [x',y] − x' ⊗ [x,y]
//! x ⊗ [y,y']  = [y',x] ⊗ y − [y,x] ⊗ y'
//! [x⊗y, x'⊗y'] = −[y,x] ⊗ [x',y']
//! ```
//!
//! and the exterior square additionally kills `x ⊗ x` (polarized, so
//! characteristic 2 is handled).

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{Matrix, QuotientSpace, Subspace};
use crate::presented::{present, BilinearBracket, Presented};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieSquareKind {
    Tensor,
    Exterior,
}

/// A constructed Lie tensor or exterior square.
#[derive(Debug, Clone)]
pub struct LiePresentedSquare {
    kind: LieSquareKind,
    algebra: LeibnizAlgebra,
    presented: Presented,
    class_labels: Vec<String>,
}

impl LiePresentedSquare {
    pub fn kind(&self) -> LieSquareKind {
        self.kind
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn ambient_dim(&self) -> usize {
        self.algebra.dim() * self.algebra.dim()
    }

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

    pub fn class_labels(&self) -> &[String] {
        &self.class_labels
    }

    pub fn flat_index(&self, i: usize, j: usize) -> usize {
        i * self.algebra.dim() + j
    }

    /// Quotient class of the generator `x_i ⊗ x_j`.
    pub fn gen_class(&self, i: usize, j: usize) -> Vec<Scalar> {
        let col = self.flat_index(i, j);
        let pm = self.presented.space.project_matrix();
        (0..pm.rows()).map(|r| pm.at(r, col).clone()).collect()
    }

    pub fn class_of(&self, ambient: &[Scalar]) -> Vec<Scalar> {
        self.presented.space.project(ambient)
    }

    /// Jacobi identity for the induced bracket, phrased as the Leibniz
    /// identity (equivalent given antisymmetry, and exactly what the shared
    /// checker verifies).
    pub fn jacobi_identity_holds(&self) -> bool {
        self.presented.leibniz_identity_holds()
    }

    /// Antisymmetry of the induced bracket on quotient basis pairs.
    pub fn bracket_is_antisymmetric(&self) -> bool {
        let d = self.dim();
        for k in 0..d {
            for l in 0..d {
                let kl = &self.presented.bracket_table[k][l];
                let lk = &self.presented.bracket_table[l][k];
                if (0..d).any(|t| !kl[t].add(&lk[t]).is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// For exterior squares: every `x ⊗ x` class vanishes.
    pub fn alternating_classes_vanish(&self) -> bool {
        (0..self.algebra.dim()).all(|i| self.gen_class(i, i).iter().all(|x| x.is_zero()))
    }
}

fn build_lie_square(g: &LeibnizAlgebra, kind: LieSquareKind) -> Result<LiePresentedSquare> {
    if !g.is_lie() {
        return Err(Error::NotALieAlgebra);
    }
    let n = g.dim();
    let field = g.field();
    let d = n * n;
    let flat = |i: usize, j: usize| i * n + j;
    let sym = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); d];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if !b.is_zero() {
                    let t = flat(i, j);
                    out[t] = out[t].add(&a.mul(b));
                }
            }
        }
        out
    };
    let unit = |i: usize| {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        v
    };
    let sub = |u: Vec<Scalar>, v: Vec<Scalar>| -> Vec<Scalar> {
        u.iter().zip(&v).map(|(a, b)| a.sub(b)).collect()
    };
    let add = |u: Vec<Scalar>, v: Vec<Scalar>| -> Vec<Scalar> {
        u.iter().zip(&v).map(|(a, b)| a.add(b)).collect()
    };

    let mut rows = Vec::new();
    // [x,x'] ⊗ y = x ⊗ [x',y] − x' ⊗ [x,y]
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = sym(g.bracket_basis(i, j), &unit(k));
                let r = sub(r, sym(&unit(i), g.bracket_basis(j, k)));
                let r = add(r, sym(&unit(j), g.bracket_basis(i, k)));
                rows.push(r);
            }
        }
    }
    // x ⊗ [y,y'] = [y',x] ⊗ y − [y,x] ⊗ y'
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = sym(&unit(i), g.bracket_basis(j, k));
                let r = sub(r, sym(g.bracket_basis(k, i), &unit(j)));
                let r = add(r, sym(g.bracket_basis(j, i), &unit(k)));
                rows.push(r);
            }
        }
    }
    if kind == LieSquareKind::Exterior {
        // x ⊗ x on the basis, plus polarizations x ⊗ y + y ⊗ x
        for i in 0..n {
            rows.push(sym(&unit(i), &unit(i)));
            for j in 0..i {
                rows.push(add(sym(&unit(i), &unit(j)), sym(&unit(j), &unit(i))));
            }
        }
    }

    // bracket [x⊗y, x'⊗y'] = −[y,x] ⊗ [x',y']:
    // left factor of x⊗y is −[y,x]; right factor of x'⊗y' is [x',y'].
    let left = Matrix::from_fn(n, d, field, |r, col| {
        let (i, j) = (col / n, col % n);
        g.bracket_basis(j, i)[r].neg()
    });
    let right = Matrix::from_fn(n, d, field, |r, col| {
        let (i, j) = (col / n, col % n);
        g.bracket_basis(i, j)[r].clone()
    });
    let target: Vec<usize> = (0..n).flat_map(|i| (0..n).map(move |j| flat(i, j))).collect();
    let bracket = BilinearBracket { left, right, target };
    let context = match kind {
        LieSquareKind::Tensor => "Lie tensor square",
        LieSquareKind::Exterior => "Lie exterior square",
    };
    let presented = present(d, field, rows, &bracket, context)?;
    if !presented.leibniz_identity_holds() {
        return Err(Error::WellDefinedness(format!(
            "{context}: induced bracket fails the Jacobi identity"
        )));
    }
    let mark = match kind {
        LieSquareKind::Tensor => "⊗",
        LieSquareKind::Exterior => "∧",
    };
    let class_labels = presented
        .space
        .class_columns()
        .iter()
        .map(|&col| {
            let (i, j) = (col / n, col % n);
            format!("{}{}{}", g.basis_names()[i], mark, g.basis_names()[j])
        })
        .collect();
    let square = LiePresentedSquare {
        kind,
        algebra: g.clone(),
        presented,
        class_labels,
    };
    if !square.bracket_is_antisymmetric() {
        return Err(Error::WellDefinedness(format!(
            "{context}: induced bracket is not antisymmetric"
        )));
    }
    if kind == LieSquareKind::Exterior && !square.alternating_classes_vanish() {
        return Err(Error::WellDefinedness(format!(
            "{context}: an alternating class survived the quotient"
        )));
    }
    Ok(square)
}

pub fn lie_tensor_square(g: &LeibnizAlgebra) -> Result<LiePresentedSquare> {
    build_lie_square(g, LieSquareKind::Tensor)
}

pub fn lie_exterior_square(g: &LeibnizAlgebra) -> Result<LiePresentedSquare> {
    build_lie_square(g, LieSquareKind::Exterior)
}

/// `{z : class(z ⊗ x_j) = 0 for all j}` in the given square.
pub fn center_from(square: &LiePresentedSquare) -> Subspace {
    let g = square.algebra();
    let n = g.dim();
    let dim = square.dim();
    let rows = Matrix::from_fn(n * dim, n, g.field(), |r, i| {
        let (j, comp) = (r / dim, r % dim);
        let col = square.flat_index(i, j);
        square.presented.space.project_matrix().at(comp, col).clone()
    });
    rows.kernel()
}

pub fn lie_tensor_center(g: &LeibnizAlgebra) -> Result<Subspace> {
    Ok(center_from(&lie_tensor_square(g)?))
}

pub fn lie_exterior_center(g: &LeibnizAlgebra) -> Result<Subspace> {
    Ok(center_from(&lie_exterior_square(g)?))
}

/// Lie-category capability: the Lie exterior center vanishes.
pub fn lie_is_capable(g: &LeibnizAlgebra) -> Result<bool> {
    Ok(lie_exterior_center(g)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rational;

    fn abelian(n: usize) -> LeibnizAlgebra {
        let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        LeibnizAlgebra::from_int_table(&[], n, Q, &refs).unwrap()
    }

    fn sl2() -> LeibnizAlgebra {
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

    fn heisenberg3() -> LeibnizAlgebra {
        LeibnizAlgebra::from_int_table(
            &[((0, 1), vec![(2, 1)]), ((1, 0), vec![(2, -1)])],
            3,
            Q,
            &["x", "y", "z"],
        )
        .unwrap()
    }

    #[test]
    fn rejects_non_lie_input() {
        let n2 = LeibnizAlgebra::from_int_table(&[((0, 0), vec![(1, 1)])], 2, Q, &["x", "y"])
            .unwrap();
        assert!(matches!(lie_exterior_square(&n2), Err(Error::NotALieAlgebra)));
        assert!(matches!(lie_exterior_center(&n2), Err(Error::NotALieAlgebra)));
    }

    #[test]
    fn one_dimensional_exterior_square_vanishes() {
        let k = abelian(1);
        assert_eq!(lie_exterior_square(&k).unwrap().dim(), 0);
        // so the exterior center is everything and K is not Lie-capable
        let z = lie_exterior_center(&k).unwrap();
        assert_eq!(z.dim(), 1);
        assert!(!lie_is_capable(&k).unwrap());
    }

    #[test]
    fn abelian_exterior_squares_are_alternating() {
        for n in 1..5 {
            let e = lie_exterior_square(&abelian(n)).unwrap();
            assert_eq!(e.dim(), n * (n - 1) / 2);
            assert!(e.alternating_classes_vanish());
        }
        // abelian algebras of dimension >= 2 are Lie-capable
        assert!(lie_is_capable(&abelian(2)).unwrap());
        assert!(lie_is_capable(&abelian(3)).unwrap());
    }

    #[test]
    fn sl2_exterior_square() {
        let e = lie_exterior_square(&sl2()).unwrap();
        assert_eq!(e.dim(), 3);
        assert!(e.jacobi_identity_holds());
        assert!(lie_is_capable(&sl2()).unwrap());
    }

    #[test]
    fn heisenberg_is_lie_capable() {
        let e = lie_exterior_square(&heisenberg3()).unwrap();
        assert_eq!(e.dim(), 3);
        assert!(lie_is_capable(&heisenberg3()).unwrap());
    }

    #[test]
    fn product_with_line_loses_capability() {
        let g = sl2().direct_product(&abelian(1));
        let z = lie_exterior_center(&g).unwrap();
        assert_eq!(z.dim(), 1);
        assert!(!lie_is_capable(&g).unwrap());
    }

    #[test]
    fn tensor_square_dims() {
        assert_eq!(lie_tensor_square(&abelian(1)).unwrap().dim(), 1);
        assert_eq!(lie_tensor_square(&abelian(2)).unwrap().dim(), 4);
        assert_eq!(lie_tensor_square(&sl2()).unwrap().dim(), 3);
        assert_eq!(lie_tensor_square(&heisenberg3()).unwrap().dim(), 6);
    }
}
