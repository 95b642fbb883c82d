//! Left dihedral codes over F_q: construction, duality, classification,
//! exact enumeration and independent linear-algebra verification.

pub mod code;
pub mod error;
pub mod factor;
pub mod field;
pub mod idempotent;
pub mod json;
pub mod matrix;

pub use error::{Error, Result};
pub use factor::FactorProfile;
pub use field::{Fq, Poly};
