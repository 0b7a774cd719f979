//! Level-k fusion rings of the rank-2 simple Lie algebras A2, C2 and G2,
//! computed with exact integer arithmetic.
//!
//! The crate is layered bottom-up:
//!
//! * [`cartan`]: root systems and Weyl groups in fundamental-weight coordinates.
//! * [`alcove`]: the level-k alcove and shifted affine Weyl folding.
//! * [`repring`]: weight multiplicities, tensor product decomposition and
//!   character polynomials in `Z[X, Y]`.
//! * [`fusion`]: Kac–Walton fusion coefficients, fusion ring arithmetic, the
//!   fusion pairing and evaluation of polynomials in the fusion ring.
//! * [`poly`]: bivariate integer polynomials and strong Gröbner bases over `Z`.
//! * [`ideal`]: certificates that a generator set presents the fusion ring,
//!   complete-intersection reports and the two-generator search for G2.

pub mod alcove;
pub mod cartan;
pub mod error;
pub mod fusion;
pub mod ideal;
pub mod poly;
pub mod repring;

pub use alcove::{Alcove, FoldResult};
pub use cartan::{AlgebraType, RootSystem, Weight};
pub use error::{Error, Result};
pub use fusion::{FusionElement, FusionTable};
pub use ideal::{CIReport, FusionIdeal, PresentationCertificate, SearchReport, Verdict};
pub use poly::{IntPolynomial, Monomial, StrongGB};
pub use repring::RepRing;
