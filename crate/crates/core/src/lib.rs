//! Exact computations around cubic hypersurfaces with vanishing Hessian:
//! apolar algebras and their Lefschetz properties, classification of
//! developable cubic threefolds, and degrees of the associated loci in the
//! space of cubics via Schubert calculus.

pub mod apolar;
pub mod classify;
pub mod cli;
pub mod error;
pub mod kernel;
pub mod polyring;
pub mod random;
pub mod schubert;

pub use error::{Error, Result};
