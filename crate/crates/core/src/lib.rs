//! Exact Chevalley-Eilenberg cohomology of finite-dimensional Lie algebras
//! over `ℚ` and `ℚ(a)`, cohomology of quotients `𝔤/𝔥` by ideals, and a
//! floating-point Maurer-Cartan check on `GL_n(ℝ)`.

pub mod catalog;
pub mod complex;
pub mod error;
pub mod field;
pub mod forms;
pub mod io;
pub mod lie;
pub mod numeric;
pub mod pipeline;
pub mod selftest;

pub use complex::{ce_differential, cohomology, cohomology_with_cap, d_apply, CoboundaryMatrix, CohomologyReport};
pub use error::{Error, Result};
pub use field::{Field, Matrix, Scalar, Vector};
pub use forms::{shuffle_eval, ExteriorForm, IndexTuple};
pub use lie::{ideal_check, jacobi_check, quotient_algebra, LieAlgebra, Subspace};
pub use pipeline::{chain_iso_check, dense_quotient_cohomology, DenseQuotientInput, DenseQuotientReport, PipelineOptions};
