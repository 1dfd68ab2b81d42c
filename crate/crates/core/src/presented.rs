//! Shared machinery for algebras presented by generators and relations.
//!
//! A presentation here is: a finite generator space `K^D`, a list of linear
//! relation vectors, and a bilinear bracket on generators. The relation span
//! must be closed into an ideal before quotienting (the presentation is an
//! algebra presentation, not just a vector-space one), so the span is
//! saturated under bracketing with generators to a fixpoint. The quotient
//! then carries a well-defined induced bracket; well-definedness is verified
//! exactly and surfaced as an error if it ever fails.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, QuotientSpace, SpanAccumulator, Subspace};

/// A bilinear bracket on `K^D` that factors through two linear maps: the
/// bracket of `u` and `v` is the "left factor" of `u` tensored with the
/// "right factor" of `v`, scattered into generator coordinates by `target`.
///
/// Both bracket shapes in this crate have this form: factor maps send a
/// generator to an action value in the left/right coordinate space, and the
/// product of two generators is again a combination of generators.
#[derive(Debug, Clone)]
pub struct BilinearBracket {
    /// `pl x D`: left factor of an ambient vector.
    pub left: Matrix,
    /// `pr x D`: right factor of an ambient vector.
    pub right: Matrix,
    /// `pl * pr` scatter targets: factor pair `(i, j)` lands on generator
    /// `target[i * pr + j]`.
    pub target: Vec<usize>,
}

impl BilinearBracket {
    pub fn ambient_dim(&self) -> usize {
        self.left.cols()
    }

    fn field(&self) -> FieldSpec {
        self.left.field()
    }

    /// Bracket of two ambient vectors.
    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.combine(&self.left.mul_vec(u), &self.right.mul_vec(v))
    }

    /// Scatter of a factor pair into the generator space.
    fn combine(&self, lu: &[Scalar], rv: &[Scalar]) -> Vec<Scalar> {
        let pr = self.right.rows();
        let mut out = vec![self.field().zero(); self.ambient_dim()];
        for (i, a) in lu.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rv.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = self.target[i * pr + j];
                out[t] = out[t].add(&a.mul(b));
            }
        }
        out
    }

    fn left_col(&self, g: usize) -> Vec<Scalar> {
        (0..self.left.rows()).map(|r| self.left.at(r, g).clone()).collect()
    }

    fn right_col(&self, g: usize) -> Vec<Scalar> {
        (0..self.right.rows()).map(|r| self.right.at(r, g).clone()).collect()
    }
}

/// Output of [`present`]: the saturated relation space, the quotient, and
/// the induced bracket on quotient basis pairs.
#[derive(Debug, Clone)]
pub struct Presented {
    pub relations: Subspace,
    pub space: QuotientSpace,
    /// `bracket_table[k][l]` = quotient coordinates of the bracket of the
    /// k-th and l-th quotient basis classes.
    pub bracket_table: Vec<Vec<Vec<Scalar>>>,
    /// Rank added by the ideal-closure fixpoint beyond the instantiated
    /// relation span (recorded as empirical data in reports).
    pub saturation_added_dim: usize,
}

impl Presented {
    /// Bracket of two quotient-coordinate vectors via the table.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let dim = self.space.dim();
        assert_eq!(u.len(), dim);
        assert_eq!(v.len(), dim);
        let field = self.space.relations().field();
        let mut out = vec![field.zero(); dim];
        for (k, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (l, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let f = a.mul(b);
                for (t, s) in self.bracket_table[k][l].iter().enumerate() {
                    if !s.is_zero() {
                        out[t] = out[t].add(&f.mul(s));
                    }
                }
            }
        }
        out
    }

    /// Exact Leibniz identity check on all quotient basis triples.
    pub fn leibniz_identity_holds(&self) -> bool {
        let dim = self.space.dim();
        for x in 0..dim {
            for y in 0..dim {
                for z in 0..dim {
                    let lhs = self.bracket_unit_right(x, &self.bracket_table[y][z]);
                    let t1 = self.bracket_left_unit(&self.bracket_table[x][y], z);
                    let t2 = self.bracket_left_unit(&self.bracket_table[x][z], y);
                    let ok = (0..dim).all(|t| lhs[t].sub(&t1[t]).add(&t2[t]).is_zero());
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Center of the quotient algebra: elements whose table-bracket with
    /// every quotient basis class vanishes on both sides.
    pub fn algebra_center(&self) -> Subspace {
        let dim = self.space.dim();
        let field = self.space.relations().field();
        let rows = Matrix::from_fn(2 * dim * dim, dim, field, |r, i| {
            let (side, rest) = (r / (dim * dim), r % (dim * dim));
            let (j, k) = (rest / dim, rest % dim);
            if side == 0 {
                self.bracket_table[i][j][k].clone() // [z, e_j]_k
            } else {
                self.bracket_table[j][i][k].clone() // [e_j, z]_k
            }
        });
        rows.kernel()
    }

    fn bracket_unit_right(&self, x: usize, v: &[Scalar]) -> Vec<Scalar> {
        // bracket(e_x, v)
        let dim = self.space.dim();
        let field = self.space.relations().field();
        let mut out = vec![field.zero(); dim];
        for (l, b) in v.iter().enumerate() {
            if !b.is_zero() {
                for (t, s) in self.bracket_table[x][l].iter().enumerate() {
                    if !s.is_zero() {
                        out[t] = out[t].add(&b.mul(s));
                    }
                }
            }
        }
        out
    }

    fn bracket_left_unit(&self, u: &[Scalar], y: usize) -> Vec<Scalar> {
        // bracket(u, e_y)
        let dim = self.space.dim();
        let field = self.space.relations().field();
        let mut out = vec![field.zero(); dim];
        for (k, a) in u.iter().enumerate() {
            if !a.is_zero() {
                for (t, s) in self.bracket_table[k][y].iter().enumerate() {
                    if !s.is_zero() {
                        out[t] = out[t].add(&a.mul(s));
                    }
                }
            }
        }
        out
    }
}

/// Builds the quotient of `K^ambient_dim` by the ideal closure of the given
/// relation vectors, with the bracket induced from `bracket`.
///
/// `context` names the construction in error messages.
pub fn present(
    ambient_dim: usize,
    field: FieldSpec,
    relation_rows: Vec<Vec<Scalar>>,
    bracket: &BilinearBracket,
    context: &str,
) -> Result<Presented> {
    assert_eq!(bracket.ambient_dim(), ambient_dim, "bracket ambient mismatch");
    let mut acc = SpanAccumulator::new(ambient_dim, field);
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for row in relation_rows {
        if acc.insert(row.clone()) {
            queue.push(row);
        }
    }
    let instantiated_rank = acc.rank();

    // Ideal closure: bracket every spanning vector with every generator on
    // both sides until nothing new appears. Bilinearity makes processing a
    // spanning set sufficient.
    let mut qi = 0;
    while qi < queue.len() {
        let r = queue[qi].clone();
        qi += 1;
        let lr = bracket.left.mul_vec(&r);
        let rr = bracket.right.mul_vec(&r);
        for g in 0..ambient_dim {
            let w1 = bracket.combine(&lr, &bracket.right_col(g));
            if w1.iter().any(|x| !x.is_zero()) && acc.insert(w1.clone()) {
                queue.push(w1);
            }
            let w2 = bracket.combine(&bracket.left_col(g), &rr);
            if w2.iter().any(|x| !x.is_zero()) && acc.insert(w2.clone()) {
                queue.push(w2);
            }
        }
    }
    let saturation_added_dim = acc.rank() - instantiated_rank;
    let relations = acc.into_subspace();
    let space = QuotientSpace::new(ambient_dim, relations.clone());

    // Well-definedness: bracketing any relation with any generator must stay
    // inside the saturated relation space. The fixpoint guarantees this; a
    // failure indicates an implementation bug and is surfaced, never ignored.
    for bi in 0..relations.dim() {
        let r = relations.basis_vec(bi);
        let lr = bracket.left.mul_vec(&r);
        let rr = bracket.right.mul_vec(&r);
        for g in 0..ambient_dim {
            let w1 = bracket.combine(&lr, &bracket.right_col(g));
            let w2 = bracket.combine(&bracket.left_col(g), &rr);
            if !relations.contains(&w1) || !relations.contains(&w2) {
                return Err(Error::WellDefinedness(context.to_string()));
            }
        }
    }

    let dim = space.dim();
    let mut bracket_table = vec![vec![Vec::new(); dim]; dim];
    for k in 0..dim {
        let sk = space.section_basis(k);
        let lk = bracket.left.mul_vec(&sk);
        for l in 0..dim {
            let sl = space.section_basis(l);
            let w = bracket.combine(&lk, &bracket.right.mul_vec(&sl));
            bracket_table[k][l] = space.project(&w);
        }
    }

    Ok(Presented {
        relations,
        space,
        bracket_table,
        saturation_added_dim,
    })
}
