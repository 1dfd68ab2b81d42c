// index-driven loops mirror the (i, j, k) structure-constant notation and
// stay this way on purpose
#![allow(clippy::needless_range_loop)]

//! Exact computer algebra for finite-dimensional Leibniz algebras.
//!
//! Given an algebra by structure constants over ℚ or 𝔽_p, this crate builds
//! its non-abelian tensor and exterior squares by generators and relations,
//! computes the center / tensor center / exterior center and related
//! invariants, and decides capability (an algebra is capable exactly when its
//! exterior center is zero). All arithmetic is exact; every reported basis is
//! deterministic.

pub mod catalog;
pub mod error;
pub mod field;
pub mod format;
pub mod leibniz;
pub mod lie;
pub mod linalg;
pub mod presented;
pub mod random;
pub mod report;
pub mod suite;
pub mod tensor;

pub use error::{Error, Result};
pub use field::{parse_scalar, FieldSpec, Scalar};
pub use leibniz::{IdealHandle, LeibnizAlgebra};
pub use linalg::{Matrix, QuotientSpace, Subspace};
pub use tensor::{CapabilityVerdict, PresentedSquare, SquareKind};
