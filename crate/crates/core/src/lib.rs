//! Exact computations on flat symplectic Lie algebras.
//!
//! Everything is over the rationals. A [`SymplecticLieAlgebra`] is a Lie
//! algebra with a nondegenerate closed 2-form; its canonical product is the
//! unique torsion-free product whose left multiplications are skew for the
//! form, and the algebra is flat when that product is left-symmetric. Flat
//! algebras are exactly the towers of double extensions starting from `{0}`.

pub mod catalog;
pub mod cli;
pub mod document;
pub mod extension;
pub mod lie;
pub mod linalg;
pub mod symplectic;

pub use catalog::{classify_upto6, fingerprint, CatalogEntry, Fingerprint, FlatClass};
pub use extension::{check_admissible, double_extend, inverse_double_extend, AdmissiblePair};
pub use lie::LieAlgebra;
pub use linalg::{Matrix, Scalar, Subspace, Vector};
pub use symplectic::{validate_symplectic, ProductTensor, SkewForm, SymplecticLieAlgebra};
