#![allow(clippy::needless_range_loop)]

//! Property tests: exact field axioms, determinism and algebra of the linear
//! layer, and the spec-level identities on randomly generated valid algebras.

use proptest::prelude::*;

use leibcap_core::field::{parse_scalar, FieldSpec, Scalar};
use leibcap_core::linalg::{Matrix, QuotientSpace, Subspace};
use leibcap_core::random::random_corpus;
use leibcap_core::tensor;

const Q: FieldSpec = FieldSpec::Rational;

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| parse_scalar(&format!("{n}/{d}"), &Q).unwrap())
}

fn prime(p: u64) -> impl Strategy<Value = Scalar> {
    (0..p).prop_map(move |r| FieldSpec::Prime { p }.from_i64(r as i64))
}

fn scalar_triple(field: FieldSpec) -> BoxedStrategy<(Scalar, Scalar, Scalar)> {
    match field {
        FieldSpec::Rational => (rational(), rational(), rational()).boxed(),
        FieldSpec::Prime { p } => (prime(p), prime(p), prime(p)).boxed(),
    }
}

fn field_axioms_hold((a, b, c): &(Scalar, Scalar, Scalar)) {
    // associativity and commutativity
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    // distributivity
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    // additive inverse
    assert!(a.add(&a.neg()).is_zero());
    // multiplicative inverse of nonzero elements
    if !a.is_zero() {
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }
}

proptest! {
    #[test]
    fn rational_field_axioms(t in scalar_triple(Q)) {
        field_axioms_hold(&t);
    }

    #[test]
    fn prime_field_axioms_f5(t in scalar_triple(FieldSpec::Prime { p: 5 })) {
        field_axioms_hold(&t);
    }

    #[test]
    fn prime_field_axioms_f2(t in scalar_triple(FieldSpec::Prime { p: 2 })) {
        field_axioms_hold(&t);
    }

    #[test]
    fn print_then_parse_is_identity(s in rational()) {
        let text = s.to_string();
        prop_assert_eq!(parse_scalar(&text, &Q).unwrap(), s);
    }
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-5i64..=5, r * c).prop_map(move |data| {
            Matrix::from_fn(r, c, Q, |i, j| Q.from_i64(data[i * c + j]))
        })
    })
}

/// Row operations that preserve the row space.
#[derive(Debug, Clone)]
enum RowOp {
    Swap(usize, usize),
    AddMultiple { src: usize, dst: usize, factor: i64 },
    Scale { row: usize, factor: i64 }, // factor != 0
}

fn row_ops(rows: usize) -> impl Strategy<Value = Vec<RowOp>> {
    let op = prop_oneof![
        (0..rows, 0..rows).prop_map(|(a, b)| RowOp::Swap(a, b)),
        (0..rows, 0..rows, -3i64..=3)
            .prop_map(|(src, dst, factor)| RowOp::AddMultiple { src, dst, factor }),
        (0..rows, prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2), Just(3)])
            .prop_map(|(row, factor)| RowOp::Scale { row, factor }),
    ];
    proptest::collection::vec(op, 0..8)
}

fn apply_ops(m: &Matrix, ops: &[RowOp]) -> Matrix {
    let mut rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|r| m.row_vec(r)).collect();
    for op in ops {
        match *op {
            RowOp::Swap(a, b) => rows.swap(a, b),
            RowOp::AddMultiple { src, dst, factor } => {
                if src != dst {
                    let f = Q.from_i64(factor);
                    for c in 0..m.cols() {
                        let add = f.mul(&rows[src][c]);
                        rows[dst][c] = rows[dst][c].add(&add);
                    }
                }
            }
            RowOp::Scale { row, factor } => {
                let f = Q.from_i64(factor);
                for c in 0..m.cols() {
                    rows[row][c] = rows[row][c].mul(&f);
                }
            }
        }
    }
    Matrix::from_rows(rows, m.cols(), Q)
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in small_matrix()) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn rref_is_invariant_under_row_scrambles(
        (m, ops) in small_matrix().prop_flat_map(|m| {
            let rows = m.rows();
            (Just(m), row_ops(rows))
        })
    ) {
        let scrambled = apply_ops(&m, &ops);
        prop_assert_eq!(m.rref(), scrambled.rref());
    }

    #[test]
    fn kernel_dim_plus_rank_is_cols(m in small_matrix()) {
        let (_, pivots) = m.rref();
        prop_assert_eq!(m.kernel().dim() + pivots.len(), m.cols());
    }

    #[test]
    fn grassmann_dimension_identity(a in small_matrix(), b_rows in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 5), 1..4)) {
        // put both in a common ambient of width 5 by padding/truncating a
        let ambient = 5usize;
        let a_rows: Vec<Vec<Scalar>> = (0..a.rows())
            .map(|r| {
                (0..ambient)
                    .map(|c| if c < a.cols() { a.at(r, c).clone() } else { Q.zero() })
                    .collect()
            })
            .collect();
        let sa = Subspace::from_spanning(a_rows, ambient, Q);
        let sb = Subspace::from_spanning(
            b_rows
                .iter()
                .map(|row| row.iter().map(|&x| Q.from_i64(x)).collect())
                .collect(),
            ambient,
            Q,
        );
        let sum = sa.sum(&sb).unwrap();
        let meet = sa.intersect(&sb).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), sa.dim() + sb.dim());
        // the intersection sits inside both
        prop_assert!(sa.contains_subspace(&meet));
        prop_assert!(sb.contains_subspace(&meet));
    }

    #[test]
    fn quotient_laws(rel_rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 0..4)) {
        let rel = Subspace::from_spanning(
            rel_rows
                .iter()
                .map(|row| row.iter().map(|&x| Q.from_i64(x)).collect())
                .collect(),
            4,
            Q,
        );
        let rank = rel.dim();
        let q = QuotientSpace::new(4, rel);
        prop_assert_eq!(q.dim(), 4 - rank);
        // project ∘ section = identity
        for k in 0..q.dim() {
            let v = q.project(&q.section_basis(k));
            for (i, x) in v.iter().enumerate() {
                prop_assert_eq!(x.is_one(), i == k);
                prop_assert!(x.is_one() || x.is_zero());
            }
        }
        // relations project to zero
        for bi in 0..q.relations().dim() {
            prop_assert!(q.project(&q.relations().basis_vec(bi)).iter().all(|x| x.is_zero()));
        }
    }
}

#[test]
fn random_algebras_are_valid_with_ideal_centers() {
    for field in [Q, FieldSpec::Prime { p: 5 }] {
        for (name, g) in random_corpus(99, 20, 3, field) {
            // construction validates; re-check the derived subspaces are ideals
            assert!(g.ideal(g.center()).is_ok(), "{name}: center not an ideal");
            assert!(
                g.ideal(g.commutator().space().clone()).is_ok(),
                "{name}: commutator not an ideal"
            );
        }
    }
}

/// The defining relations are multilinear, so instantiating them on basis
/// tuples spans the same space as instantiating on arbitrary vectors; checked
/// empirically by re-instantiating one relation family on random non-basis
/// vectors and testing membership in the constructed relation span.
#[test]
fn relation_linearization_on_random_vectors() {
    let corpus = random_corpus(7, 6, 3, Q);
    let mut rng_vals = (0..).map(|i| ((i * 31 + 7) % 11) as i64 - 5);
    for (name, g) in corpus {
        let n = g.dim();
        let t = tensor::tensor_square(&g).unwrap();
        let mut vec3 = || -> Vec<Vec<Scalar>> {
            (0..3)
                .map(|_| (0..n).map(|_| Q.from_i64(rng_vals.next().unwrap())).collect())
                .collect()
        };
        for _ in 0..4 {
            let v = vec3();
            let (m, nn, np) = (&v[0], &v[1], &v[2]);
            // m *1 [n,n'] − m^n *1 n' + m^{n'} *1 n as a generator-space vector
            let sym1 = |mv: &[Scalar], nv: &[Scalar]| -> Vec<Scalar> {
                let mut out = vec![Q.zero(); 2 * n * n];
                for i in 0..n {
                    for j in 0..n {
                        if !mv[i].is_zero() && !nv[j].is_zero() {
                            out[i * n + j] = out[i * n + j].add(&mv[i].mul(&nv[j]));
                        }
                    }
                }
                out
            };
            let term1 = sym1(m, &g.bracket(nn, np));
            let term2 = sym1(&g.bracket(m, nn), np);
            let term3 = sym1(&g.bracket(m, np), nn);
            let rel: Vec<Scalar> = (0..2 * n * n)
                .map(|i| term1[i].sub(&term2[i]).add(&term3[i]))
                .collect();
            assert!(
                t.relations().contains(&rel),
                "{name}: linearized relation escapes the instantiated span"
            );
        }
    }
}

/// Tensor center = exterior center (and the commutator-restricted identity)
/// also at dimension 4, beyond the acceptance corpus.
#[test]
fn center_identities_at_dimension_four() {
    for field in [Q, FieldSpec::Prime { p: 5 }] {
        for (name, g) in random_corpus(2026, 8, 4, field) {
            if g.dim() < 4 {
                continue;
            }
            let t = tensor::tensor_square(&g).unwrap();
            let e = tensor::exterior_square(&g).unwrap();
            let zs = tensor::center_from(&t);
            let zw = tensor::center_from(&e);
            assert_eq!(zs, zw, "{name}");
            let meet = zw.intersect(g.commutator().space()).unwrap();
            assert_eq!(zs, meet, "{name}");
            let nab = tensor::nabla_from(&t, &e);
            assert_eq!(t.dim(), e.dim() + nab.dim(), "{name}");
        }
    }
}
