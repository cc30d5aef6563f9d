//! Exact symbolic computation around Schubert polynomials and the closed
//! orbits of the parabolically induced orthogonal and symplectic subgroups
//! of `GL_n` acting on the flag variety.
//!
//! The crate builds
//!
//! * Schubert polynomials (divided-difference recursion, with a pipe-dream
//!   oracle for cross-checking) and expansions in the Schubert basis,
//! * the W-sets `𝒲_μ` and `𝒲′_μ` indexing the Schubert expansion of each
//!   closed orbit class,
//! * the factored ordinary and torus-equivariant class representatives,
//!   together with the type-A localization machinery behind them,
//!
//! and checks that the sum of Schubert polynomials over a W-set equals the
//! corresponding product of linear forms as an exact polynomial identity.

pub mod cohomology;
pub mod composition;
pub mod error;
pub mod permutation;
pub mod polynomial;
pub mod schubert;
pub mod verifier;
pub mod wset;

pub use composition::Composition;
pub use error::{Error, Result};
pub use permutation::Permutation;
pub use polynomial::{Monomial, Polynomial, Var, VariableSpace};
pub use schubert::{SchubertCache, SchubertExpansion};
pub use verifier::IdentityReport;
pub use wset::{Family, WSet};
