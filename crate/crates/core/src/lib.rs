//! Exact computations with ribbon tableaux and their generating functions.
//!
//! - [`qcoeff`]: Laurent polynomials in `q` with rational coefficients.
//! - [`partitions`]: cores, quotients, ribbon strips and border ribbon strips.
//! - [`symfunc`]: symmetric functions over `q` in the five classical bases.
//! - [`ribbonfn`]: ribbon tableaux, their spin generating functions and border strip sums.
//! - [`fock`]: the Fock space with its quantum affine and Heisenberg actions.
//! - [`domino`]: domino insertion and the colored biword correspondence.
//! - [`verify`]: grid checks of the identities relating all of the above.

pub mod domino;
pub mod error;
pub mod fock;
pub mod partitions;
pub mod qcoeff;
pub mod ribbonfn;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Partition, SkewShape};
pub use qcoeff::{LaurentPoly, RatFunc};
pub use symfunc::{Basis, SymFunc};
