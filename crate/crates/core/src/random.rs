//! Seeded generation of random valid Leibniz algebras for the invariant
//! suites.
//!
//! Two families, both exactly Leibniz by construction, composed with a random
//! change of basis:
//! - two-step nilpotent algebras: split the space as `U ⊕ W`, choose an
//!   arbitrary bilinear map `U × U -> W` for the bracket, and let everything
//!   touching `W` vanish — every identity term then dies in `[W, ·] = [·, W] = 0`;
//! - direct sums of small seed algebras (line, null-filiform, solvable r2,
//!   heisenberg, null-filiform of dimension 3, and sl2 where the
//!   characteristic allows).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldSpec, Scalar};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::Matrix;

fn random_scalar(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Rational => field.from_i64(rng.gen_range(-2..=2)),
        FieldSpec::Prime { p } => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

fn two_step_nilpotent(rng: &mut ChaCha8Rng, dim: usize, field: FieldSpec) -> LeibnizAlgebra {
    let u = rng.gen_range(1..=dim);
    let w = dim - u;
    let mut constants = vec![field.zero(); dim * dim * dim];
    if w > 0 {
        for i in 0..u {
            for j in 0..u {
                for k in 0..w {
                    constants[(i * dim + j) * dim + (u + k)] = random_scalar(rng, field);
                }
            }
        }
    }
    let names = (0..dim).map(|i| format!("e{}", i + 1)).collect();
    LeibnizAlgebra::validate(constants, field, names)
        .expect("two-step nilpotent brackets satisfy the Leibniz identity")
}

fn seed_algebras(field: FieldSpec) -> Vec<LeibnizAlgebra> {
    let mut seeds = vec![
        crate::catalog::get("abelian1", field).unwrap().algebra,
        crate::catalog::get("nullfiliform2", field).unwrap().algebra,
        crate::catalog::get("r2", field).unwrap().algebra,
        crate::catalog::get("heisenberg3", field).unwrap().algebra,
        // null-filiform of dimension 3: [x,x] = y, [y,x] = z
        LeibnizAlgebra::from_int_table(
            &[((0, 0), vec![(1, 1)]), ((1, 0), vec![(2, 1)])],
            3,
            field,
            &["x", "y", "z"],
        )
        .unwrap(),
    ];
    if let Ok(entry) = crate::catalog::get("sl2", field) {
        seeds.push(entry.algebra);
    }
    seeds
}

fn seeded_sum(rng: &mut ChaCha8Rng, dim: usize, field: FieldSpec) -> LeibnizAlgebra {
    let seeds = seed_algebras(field);
    let mut acc: Option<LeibnizAlgebra> = None;
    let mut remaining = dim;
    while remaining > 0 {
        let fits: Vec<&LeibnizAlgebra> =
            seeds.iter().filter(|s| s.dim() <= remaining).collect();
        let pick = fits[rng.gen_range(0..fits.len())];
        remaining -= pick.dim();
        acc = Some(match acc {
            None => pick.clone(),
            Some(a) => a.direct_product(pick),
        });
    }
    acc.expect("dim >= 1")
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec) -> (Matrix, Matrix) {
    loop {
        let t = Matrix::from_fn(n, n, field, |_, _| random_scalar(rng, field));
        if let Some(inv) = t.inverse() {
            return (t, inv);
        }
    }
}

/// Applies a random change of basis; the Leibniz identity is coordinate-free,
/// so validity is preserved exactly.
fn conjugate(rng: &mut ChaCha8Rng, g: &LeibnizAlgebra) -> LeibnizAlgebra {
    let n = g.dim();
    if n == 0 {
        return g.clone();
    }
    let field = g.field();
    let (t, tinv) = random_invertible(rng, n, field);
    let col = |m: &Matrix, c: usize| -> Vec<Scalar> {
        (0..n).map(|r| m.at(r, c).clone()).collect()
    };
    let mut constants = vec![field.zero(); n * n * n];
    for i in 0..n {
        let ti = col(&t, i);
        for j in 0..n {
            let tj = col(&t, j);
            let w = tinv.mul_vec(&g.bracket(&ti, &tj));
            for (k, s) in w.into_iter().enumerate() {
                constants[(i * n + j) * n + k] = s;
            }
        }
    }
    let names = (0..n).map(|i| format!("e{}", i + 1)).collect();
    LeibnizAlgebra::validate(constants, field, names)
        .expect("base change preserves the Leibniz identity")
}

/// One random valid algebra of the given dimension.
pub fn random_algebra(rng: &mut ChaCha8Rng, dim: usize, field: FieldSpec) -> LeibnizAlgebra {
    if dim == 0 {
        return crate::catalog::get("zero", field).unwrap().algebra;
    }
    let raw = if rng.gen_bool(0.5) {
        two_step_nilpotent(rng, dim, field)
    } else {
        seeded_sum(rng, dim, field)
    };
    conjugate(rng, &raw)
}

/// A deterministic corpus of `count` named algebras with dimensions cycling
/// through `1..=dim_max`.
pub fn random_corpus(
    seed: u64,
    count: usize,
    dim_max: usize,
    field: FieldSpec,
) -> Vec<(String, LeibnizAlgebra)> {
    if dim_max == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let dim = 1 + i % dim_max;
            let g = random_algebra(&mut rng, dim, field);
            (format!("random_d{dim}_{i:03}"), g)
        })
        .collect()
}
