//! Polynomial representation of the double affine Hecke algebra of type `(C^v_n, C_n)`,
//! non-symmetric Koornwinder polynomials, and their behaviour at special parameters.

pub mod error;
pub mod koornwinder;
pub mod modified;
pub mod params;
pub mod polyrep;
pub mod repstructure;
pub mod verify;
pub mod weights;

pub use error::{DahaError, Result};
