//! Rational homotopy of unitary groups of unital continuous trace
//! C*-algebras, and its image in ℤ⁺-graded rational K-theory.
//!
//! The pipeline runs bottom-up:
//!
//! - [`qlinalg`]: exact rational matrices with rank and kernel.
//! - [`spaces`]: simplicial complexes, cohomology profiles, builtin spaces.
//! - [`graded`]: graded vector spaces, `⊗` and the truncated `⊗̃`.
//! - [`unitary`]: the bigraded rational homotopy of the unitary group.
//! - [`ktheory`]: K-theory profiles, the stabilization image, and induced
//!   endomorphisms.
//!
//! ```
//! use ctrace::{rational_homotopy, AlgebraSpec, BuiltinSpace};
//!
//! let spec = AlgebraSpec::new(BuiltinSpace::Sphere(3).profile(), 3, true).unwrap();
//! let pi = rational_homotopy(&spec);
//! assert_eq!(pi.dim(0), 1);
//! assert_eq!(pi.len(), 5);
//! ```

pub mod error;
pub mod graded;
pub mod ktheory;
pub mod qlinalg;
pub mod schema;
pub mod spaces;
pub mod unitary;

pub use error::{Error, Result};
pub use graded::{
    negate_grading, poincare_series, tensor, truncated_tensor, BigradedElement, GradedSpace,
    LaurentPoly,
};
pub use ktheory::{
    induced_endomorphism, phi, rational_k_theory, sigma_image, AlgebraMap, InducedEndomorphism,
    KProfile, SigmaHit, SigmaImage,
};
pub use qlinalg::{QMatrix, Rational};
pub use schema::{parse_endomorphism, SpaceDescription};
pub use spaces::{
    builtin_space, kunneth, BuiltinSpace, CohomologyEndomorphism, CohomologyProfile,
    SimplicialComplex,
};
pub use unitary::{
    based_free_split, exterior_homology, hurewicz_image, pi_zero_dimension, rational_homotopy,
    unitary_generators, AlgebraSpec, PiProfile,
};
