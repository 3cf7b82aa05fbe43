//! Exact arithmetic in the parameter ring, its fraction field and their specializations.

pub mod cyclotomic;
pub mod json;
pub mod lattice;
pub mod monomial;
pub mod poly;
pub mod scalar;
pub mod spec;

pub use cyclotomic::{rat, rat_frac, CycNumber, Rat, RootOfUnity};
pub use monomial::{gen, ParamMonomial, GEN_NAMES, NGEN};
pub use poly::{CycPoly, ParamPoly, Poly};
pub use scalar::{named, Cyclo, ParamScalar};
pub use spec::{catalog, spec_branch, spec_factors, specialize, vanishes_at, zeta, zeta_scalar, Family, SpecPoly, SpecValue};
