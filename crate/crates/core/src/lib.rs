//! Exact computational algebra for operadic obstruction theory.
//!
//! The crate computes, over `Z`, `Q` or a prime field:
//!
//! * nerves of partition posets and the boundary homology of the partition
//!   operad spaces, together with the symmetric-group representations carried
//!   by that homology;
//! * cross-effect (Morita) translation between modules over the based-set
//!   category and modules over the surjection category, with builtin modules
//!   (`t`, the weight-one module, induced one-line modules, endomorphism
//!   modules of a commutative ring);
//! * stable homotopy and cohomotopy of such modules through bar-type chain
//!   complexes and their filtered refinements;
//! * spectral-sequence pages, E2 tables and the obstruction-group series for
//!   refining a homotopy-commutative multiplication to a full coherent
//!   structure.
//!
//! All linear algebra is exact (arbitrary-precision integers, Smith normal
//! form); nothing in the crate uses floating point.

pub mod error;
pub mod perm;
pub mod linalg;
pub mod fincat;
pub mod simplicial;
pub mod operad;
pub mod sigma;
pub mod gamma;
pub mod stable;
pub mod spectral;
pub mod corpus;

pub use error::Error;
pub use fincat::{FinMap, GammaFactorization, GammaMap, OmegaMap};
pub use linalg::{AbelianGroupInvariants, ChainComplex, Coeff, IntMatrix};
pub use perm::Permutation;






/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
