//! Built-in named test algebras with oracle-fixed golden values. These power
//! the invariant suites and are exportable to the JSON algebra format.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::leibniz::LeibnizAlgebra;

/// Invariant values fixed by an independent brute-force computation before
/// the construction code was written; recomputed and compared on every suite
/// run over ℚ and 𝔽₅.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Golden {
    pub dim_commutator: usize,
    pub dim_center: usize,
    pub dim_tensor_square: usize,
    pub dim_exterior_square: usize,
    pub dim_nabla: usize,
    pub dim_ker_theta: usize,
    pub dim_tensor_center: usize,
    pub dim_exterior_center: usize,
    pub capable: bool,
    pub dim_bider: usize,
    /// `(dim L∧L, dim Z^∧_Lie, Lie-capable)` for Lie entries.
    pub lie: Option<(usize, usize, bool)>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: LeibnizAlgebra,
    pub is_lie: bool,
    pub is_perfect: bool,
    pub is_abelian: bool,
    pub golden: Golden,
}

const NAMES: &[&str] = &[
    "zero",
    "abelian1",
    "abelian2",
    "abelian3",
    "abelian4",
    "nullfiliform2",
    "r2",
    "heisenberg3",
    "sl2",
    "sl2_x_K",
    "nullfiliform2_x_K",
    "sl2_x_heisenberg3",
];

pub fn names() -> &'static [&'static str] {
    NAMES
}

fn abelian(n: usize, field: FieldSpec) -> LeibnizAlgebra {
    let names: Vec<String> = (0..n).map(|i| format!("a{}", i + 1)).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    LeibnizAlgebra::from_int_table(&[], n, field, &refs).expect("abelian algebra is valid")
}

fn nullfiliform2(field: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_int_table(&[((0, 0), vec![(1, 1)])], 2, field, &["x", "y"])
        .expect("null-filiform algebra is valid")
}

fn r2(field: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_int_table(
        &[((0, 1), vec![(1, 1)]), ((1, 0), vec![(1, -1)])],
        2,
        field,
        &["x", "y"],
    )
    .expect("solvable r2 is valid")
}

fn heisenberg3(field: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_int_table(
        &[((0, 1), vec![(2, 1)]), ((1, 0), vec![(2, -1)])],
        3,
        field,
        &["x", "y", "z"],
    )
    .expect("heisenberg algebra is valid")
}

fn sl2(field: FieldSpec) -> Result<LeibnizAlgebra> {
    // perfectness and centerlessness degrade in characteristics 2 and 3
    let p = field.characteristic();
    if p == 2 || p == 3 {
        return Err(Error::Format(format!(
            "catalog entry sl2 requires characteristic 0 or p >= 5, got {p}"
        )));
    }
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
        field,
        &["e", "f", "h"],
    )
    .map_err(|e| Error::Format(format!("sl2 structure constants rejected: {e}")))
}

fn golden_abelian(n: usize) -> Golden {
    Golden {
        dim_commutator: 0,
        dim_center: n,
        dim_tensor_square: 2 * n * n,
        dim_exterior_square: n * n,
        dim_nabla: n * n,
        dim_ker_theta: n * n,
        dim_tensor_center: 0,
        dim_exterior_center: 0,
        capable: true,
        dim_bider: 2 * n * n,
        lie: Some((n * (n - 1) / 2, if n == 1 { 1 } else { 0 }, n != 1)),
    }
}

/// Fetches one entry over the given field. Golden values were fixed over ℚ
/// and re-verified over 𝔽₅; characteristic guards keep entries out of fields
/// where their defining properties degrade.
pub fn get(name: &str, field: FieldSpec) -> Result<CatalogEntry> {
    field.validate()?;
    let entry = match name {
        "zero" => CatalogEntry {
            name: "zero",
            algebra: abelian(0, field),
            is_lie: true,
            is_perfect: true,
            is_abelian: true,
            golden: Golden {
                dim_commutator: 0,
                dim_center: 0,
                dim_tensor_square: 0,
                dim_exterior_square: 0,
                dim_nabla: 0,
                dim_ker_theta: 0,
                dim_tensor_center: 0,
                dim_exterior_center: 0,
                capable: true,
                dim_bider: 0,
                lie: Some((0, 0, true)),
            },
        },
        "abelian1" | "abelian2" | "abelian3" | "abelian4" => {
            let n = name.as_bytes()[name.len() - 1] as usize - b'0' as usize;
            CatalogEntry {
                name: NAMES.iter().find(|&&s| s == name).unwrap(),
                algebra: abelian(n, field),
                is_lie: true,
                is_perfect: false,
                is_abelian: true,
                golden: golden_abelian(n),
            }
        }
        "nullfiliform2" => CatalogEntry {
            name: "nullfiliform2",
            algebra: nullfiliform2(field),
            is_lie: false,
            is_perfect: false,
            is_abelian: false,
            golden: Golden {
                dim_commutator: 1,
                dim_center: 1,
                dim_tensor_square: 3,
                dim_exterior_square: 2,
                dim_nabla: 1,
                dim_ker_theta: 1,
                dim_tensor_center: 0,
                dim_exterior_center: 0,
                capable: true,
                dim_bider: 3,
                lie: None,
            },
        },
        "r2" => CatalogEntry {
            name: "r2",
            algebra: r2(field),
            is_lie: true,
            is_perfect: false,
            is_abelian: false,
            golden: Golden {
                dim_commutator: 1,
                dim_center: 0,
                dim_tensor_square: 3,
                dim_exterior_square: 2,
                dim_nabla: 1,
                dim_ker_theta: 1,
                dim_tensor_center: 0,
                dim_exterior_center: 0,
                capable: true,
                dim_bider: 2,
                lie: Some((1, 0, true)),
            },
        },
        "heisenberg3" => CatalogEntry {
            name: "heisenberg3",
            algebra: heisenberg3(field),
            is_lie: true,
            is_perfect: false,
            is_abelian: false,
            golden: Golden {
                dim_commutator: 1,
                dim_center: 1,
                dim_tensor_square: 10,
                dim_exterior_square: 6,
                dim_nabla: 4,
                dim_ker_theta: 5,
                dim_tensor_center: 0,
                dim_exterior_center: 0,
                capable: true,
                dim_bider: 8,
                lie: Some((3, 0, true)),
            },
        },
        "sl2" => CatalogEntry {
            name: "sl2",
            algebra: sl2(field)?,
            is_lie: true,
            is_perfect: true,
            is_abelian: false,
            golden: Golden {
                dim_commutator: 3,
                dim_center: 0,
                dim_tensor_square: 3,
                dim_exterior_square: 3,
                dim_nabla: 0,
                dim_ker_theta: 0,
                dim_tensor_center: 0,
                dim_exterior_center: 0,
                capable: true,
                dim_bider: 3,
                lie: Some((3, 0, true)),
            },
        },
        "sl2_x_K" => CatalogEntry {
            name: "sl2_x_K",
            algebra: sl2(field)?.direct_product(&abelian_named(1, field, "t")),
            is_lie: true,
            is_perfect: false,
            is_abelian: false,
            golden: Golden {
                dim_commutator: 3,
                dim_center: 1,
                dim_tensor_square: 5,
                dim_exterior_square: 4,
                dim_nabla: 1,
                dim_ker_theta: 1,
                dim_tensor_center: 0,
                dim_exterior_center: 0,
                capable: true,
                dim_bider: 5,
                lie: Some((3, 1, false)),
            },
        },
        "nullfiliform2_x_K" => CatalogEntry {
            name: "nullfiliform2_x_K",
            algebra: nullfiliform2(field).direct_product(&abelian_named(1, field, "t")),
            is_lie: false,
            is_perfect: false,
            is_abelian: false,
            golden: Golden {
                dim_commutator: 1,
                dim_center: 2,
                dim_tensor_square: 9,
                dim_exterior_square: 5,
                dim_nabla: 4,
                dim_ker_theta: 4,
                dim_tensor_center: 0,
                dim_exterior_center: 0,
                capable: true,
                dim_bider: 9,
                lie: None,
            },
        },
        "sl2_x_heisenberg3" => CatalogEntry {
            name: "sl2_x_heisenberg3",
            algebra: sl2(field)?.direct_product(&heisenberg3(field)),
            is_lie: true,
            is_perfect: false,
            is_abelian: false,
            golden: Golden {
                dim_commutator: 4,
                dim_center: 1,
                dim_tensor_square: 13,
                dim_exterior_square: 9,
                dim_nabla: 4,
                dim_ker_theta: 5,
                dim_tensor_center: 0,
                dim_exterior_center: 0,
                capable: true,
                dim_bider: 11,
                lie: Some((6, 0, true)),
            },
        },
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(entry)
}

fn abelian_named(n: usize, field: FieldSpec, prefix: &str) -> LeibnizAlgebra {
    let names: Vec<String> = (0..n)
        .map(|i| {
            if n == 1 {
                prefix.to_string()
            } else {
                format!("{prefix}{}", i + 1)
            }
        })
        .collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    LeibnizAlgebra::from_int_table(&[], n, field, &refs).expect("abelian algebra is valid")
}

/// All entries constructible over the field (entries whose characteristic
/// guard rejects the field are skipped).
pub fn all(field: FieldSpec) -> Vec<CatalogEntry> {
    NAMES.iter().filter_map(|n| get(n, field).ok()).collect()
}
