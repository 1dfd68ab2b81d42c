//! Per-algebra analysis and the machine-readable report: all invariant
//! dimensions, the capability verdict, and a pass/fail line for every
//! single-algebra identity the library promises. Field order and list order
//! are fixed, so serialized reports are byte-identical across runs.

use serde::{Deserialize, Serialize};

use crate::catalog::Golden;
use crate::error::Result;
use crate::field::FieldSpec;
use crate::leibniz::{inner_map_is_homomorphism, LeibnizAlgebra};
use crate::lie;
use crate::linalg::Subspace;
use crate::tensor::{
    self, center_from, induced_ab_map_from, nabla_from, GeneratorIndex, PresentedSquare, Slot,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub id: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDims {
    pub commutator: usize,
    pub center: usize,
    pub tensor_square: usize,
    pub exterior_square: usize,
    pub nabla: usize,
    pub ker_theta: usize,
    pub tensor_center: usize,
    pub exterior_center: usize,
    pub bider: usize,
    pub inner_bider: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieReport {
    pub tensor_square: usize,
    pub exterior_square: usize,
    pub exterior_center: usize,
    pub capable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationRecord {
    pub tensor: usize,
    pub exterior: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub name: String,
    pub field: FieldSpec,
    pub characteristic: u64,
    pub dim: usize,
    pub perfect: bool,
    pub lie: bool,
    pub abelian: bool,
    pub dims: ReportDims,
    pub capable: bool,
    /// Lie-category verdict; null for non-Lie algebras.
    pub lie_capable: Option<bool>,
    pub lie_squares: Option<LieReport>,
    /// Rank the ideal-closure fixpoint added beyond the instantiated
    /// relations (empirical record; zero on everything observed so far).
    pub saturation_added_dim: SaturationRecord,
    pub exterior_class_labels: Vec<String>,
    pub invariants: Vec<InvariantResult>,
}

impl Report {
    pub fn all_invariants_pass(&self) -> bool {
        self.invariants.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// A report plus the heavyweight intermediates, for callers that keep
/// checking (the suite's product and cross-field comparisons).
pub struct Analysis {
    pub report: Report,
    pub tensor: PresentedSquare,
    pub exterior: PresentedSquare,
    pub tensor_center: Subspace,
    pub exterior_center: Subspace,
    pub nabla: Subspace,
    pub lie_exterior_center: Option<Subspace>,
    pub lie_tensor_center: Option<Subspace>,
}

/// Full analysis of one algebra. `golden` enables the recomputation check
/// for catalog entries (asserted over characteristic 0 and 5, where the
/// values were fixed by the independent oracle).
pub fn analyze(name: &str, g: &LeibnizAlgebra, golden: Option<&Golden>) -> Result<Analysis> {
    let mut invariants: Vec<InvariantResult> = Vec::new();
    let mut push = |id: &str, pass: bool| invariants.push(InvariantResult { id: id.into(), pass });

    let tensor = tensor::tensor_square(g)?;
    let exterior = tensor::exterior_square(g)?;
    push("squares_well_defined", true); // construction verifies this exactly
    push(
        "bracket_tables_satisfy_leibniz",
        tensor.leibniz_identity_holds() && exterior.leibniz_identity_holds(),
    );

    let center = g.center();
    let commutator = g.commutator().space().clone();
    let nabla = nabla_from(&tensor, &exterior);
    let z_star = center_from(&tensor);
    let z_wedge = center_from(&exterior);

    let theta_t = tensor.theta();
    let theta_e = exterior.theta();
    let tau = tensor.tau_maps();
    push(
        "theta_tau_are_homomorphisms",
        theta_t.is_ok() && theta_e.is_ok() && tau.is_ok(),
    );
    let theta_t = theta_t?;
    let theta_e = theta_e?;
    let ker_theta = theta_e.kernel();

    push(
        "centers_nested_in_center",
        z_wedge.contains_subspace(&z_star) && center.contains_subspace(&z_wedge),
    );
    push("tensor_center_equals_exterior_center", z_star == z_wedge);
    push(
        "tensor_center_is_exterior_center_meet_commutator",
        z_star == z_wedge.intersect(&commutator)?,
    );
    push(
        "tensor_dim_is_exterior_plus_nabla",
        tensor.dim() == exterior.dim() + nabla.dim(),
    );

    // coset map to the abelianization square and its interplay with nabla
    let (ab_hom, tensor_ab) = induced_ab_map_from(g, &tensor)?;
    let (ab_alg, _) = g.abelianization();
    let exterior_ab = tensor::exterior_square(&ab_alg)?;
    let nabla_ab = nabla_from(&tensor_ab, &exterior_ab);
    push("nabla_dim_matches_abelianization", nabla.dim() == nabla_ab.dim());
    push(
        "ab_kernel_meets_nabla_trivially",
        ab_hom.kernel().intersect(&nabla)?.is_zero(),
    );

    let perfect = g.is_perfect();
    if perfect {
        push(
            "perfect_exterior_relations_absorbed",
            tensor.relations().contains_subspace(exterior.relations()),
        );
        push(
            "perfect_ker_theta_is_central",
            tensor.algebra_center().contains_subspace(&theta_t.kernel()),
        );
        push(
            "perfect_capable_iff_centerless",
            z_wedge.is_zero() == center.is_zero(),
        );
    }

    // slot symmetry in the exterior square: class(x *₁ y) = class(y *₂ x)
    {
        let n = g.dim();
        let mut ok = true;
        'outer: for i in 0..n {
            for j in 0..n {
                let a = exterior.gen_class(GeneratorIndex { slot: Slot::One, left: i, right: j });
                let b = exterior.gen_class(GeneratorIndex { slot: Slot::Two, left: j, right: i });
                if a != b {
                    ok = false;
                    break 'outer;
                }
            }
        }
        push("exterior_slot_symmetry", ok);
    }

    // theta image is the commutator for the square of g
    push("theta_image_is_commutator", theta_t.image() == commutator);

    let bider = g.biderivations();
    let inner = g.inner_biderivations();
    push(
        "inner_bider_rank_is_dim_minus_center",
        inner.dim() == g.dim() - center.dim(),
    );
    push("inner_bider_map_is_homomorphism", inner_map_is_homomorphism(g));
    push("bider_bracket_satisfies_leibniz", bider_table_leibniz(&bider));
    push("bider_contains_inner", bider.space.contains_subspace(&inner));

    let (liezed, _) = g.liezation();
    push(
        "liezation_is_lie_and_fixes_lie",
        liezed.is_lie() && (!g.is_lie() || liezed == *g),
    );

    let is_lie = g.is_lie();
    let mut lie_squares = None;
    let mut lie_capable = None;
    let mut lie_exterior_center = None;
    let mut lie_tensor_center = None;
    if is_lie {
        let lt = lie::lie_tensor_square(g)?;
        let le = lie::lie_exterior_square(g)?;
        push(
            "lie_squares_structural",
            lt.jacobi_identity_holds()
                && le.jacobi_identity_holds()
                && lt.bracket_is_antisymmetric()
                && le.bracket_is_antisymmetric()
                && le.alternating_classes_vanish(),
        );
        let zt = lie::center_from(&lt);
        let ze = lie::center_from(&le);
        let cap = ze.is_zero();
        push(
            "lie_capable_implies_leibniz_capable",
            !cap || z_wedge.is_zero(),
        );
        if perfect {
            push(
                "perfect_lie_capable_iff_centerless",
                cap == center.is_zero(),
            );
        }
        lie_squares = Some(LieReport {
            tensor_square: lt.dim(),
            exterior_square: le.dim(),
            exterior_center: ze.dim(),
            capable: cap,
        });
        lie_capable = Some(cap);
        lie_exterior_center = Some(ze);
        lie_tensor_center = Some(zt);
    }

    let dims = ReportDims {
        commutator: commutator.dim(),
        center: center.dim(),
        tensor_square: tensor.dim(),
        exterior_square: exterior.dim(),
        nabla: nabla.dim(),
        ker_theta: ker_theta.dim(),
        tensor_center: z_star.dim(),
        exterior_center: z_wedge.dim(),
        bider: bider.dim(),
        inner_bider: inner.dim(),
    };

    if let Some(gold) = golden {
        let char_verified = matches!(g.field().characteristic(), 0 | 5);
        if char_verified {
            let lie_match = match (gold.lie, &lie_squares) {
                (None, None) => true,
                (Some((ext, zext, cap)), Some(ls)) => {
                    ls.exterior_square == ext && ls.exterior_center == zext && ls.capable == cap
                }
                _ => false,
            };
            push(
                "golden_values_match",
                dims.commutator == gold.dim_commutator
                    && dims.center == gold.dim_center
                    && dims.tensor_square == gold.dim_tensor_square
                    && dims.exterior_square == gold.dim_exterior_square
                    && dims.nabla == gold.dim_nabla
                    && dims.ker_theta == gold.dim_ker_theta
                    && dims.tensor_center == gold.dim_tensor_center
                    && dims.exterior_center == gold.dim_exterior_center
                    && dims.bider == gold.dim_bider
                    && z_wedge.is_zero() == gold.capable
                    && lie_match,
            );
        }
    }

    let report = Report {
        version: VERSION.to_string(),
        name: name.to_string(),
        field: g.field(),
        characteristic: g.field().characteristic(),
        dim: g.dim(),
        perfect,
        lie: is_lie,
        abelian: g.is_abelian(),
        capable: z_wedge.is_zero(),
        lie_capable,
        lie_squares,
        saturation_added_dim: SaturationRecord {
            tensor: tensor.saturation_added_dim(),
            exterior: exterior.saturation_added_dim(),
        },
        exterior_class_labels: exterior.class_labels().to_vec(),
        dims,
        invariants,
    };
    Ok(Analysis {
        report,
        tensor,
        exterior,
        tensor_center: z_star,
        exterior_center: z_wedge,
        nabla,
        lie_exterior_center,
        lie_tensor_center,
    })
}

/// Leibniz identity for the biderivation bracket table, on basis triples of
/// the solution space.
fn bider_table_leibniz(b: &crate::leibniz::Biderivations) -> bool {
    let dim = b.dim();
    if dim == 0 {
        return true;
    }
    let field = b.space.field();
    let brk = |u: &[crate::field::Scalar], v: &[crate::field::Scalar]| {
        let mut out = vec![field.zero(); dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let f = a.mul(c);
                for (t, s) in b.bracket[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[t] = out[t].add(&f.mul(s));
                    }
                }
            }
        }
        out
    };
    let unit = |i: usize| {
        let mut v = vec![field.zero(); dim];
        v[i] = field.one();
        v
    };
    for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                let lhs = brk(&unit(x), &brk(&unit(y), &unit(z)));
                let r1 = brk(&brk(&unit(x), &unit(y)), &unit(z));
                let r2 = brk(&brk(&unit(x), &unit(z)), &unit(y));
                if (0..dim).any(|t| !lhs[t].sub(&r1[t]).add(&r2[t]).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}
