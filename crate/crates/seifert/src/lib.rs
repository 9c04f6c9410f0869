//! Exact integer algebra of Seifert matrices for genus-one knots.
//!
//! The crate decides, for knots given by Seifert data, whether classical
//! obstructions rule out cosmetic crossing changes, and constructs and
//! verifies S-equivalence certificates between Seifert matrices. All
//! arithmetic is arbitrary-precision and exact; there is no floating
//! point anywhere.
//!
//! Modules:
//! - [`matrix`]: dense integer matrices, determinants, unimodular
//!   congruence, and the [`matrix::SeifertMatrix`] type.
//! - [`snf`]: Smith normal form with transforming matrices.
//! - [`forms`]: perfect squares, isotropic vectors of 2x2 forms, exact
//!   signatures of small symmetric matrices.
//! - [`laurent`]: integer Laurent polynomials, the Alexander polynomial
//!   `det(V - t V^T)`, unit normalization, knot determinants, and the
//!   symmetric linear factorization test.
//! - [`abelian`]: finitely generated abelian groups from presentation
//!   matrices; homology of the double branched cover.
//! - [`sequiv`]: S-moves, checked certificates, the congruence
//!   classifier for metabolizer forms with its brute-force oracle, and
//!   constructive S-equivalent non-congruent pairs.
//! - [`families`]: pretzel and Whitehead-double Seifert matrices, the
//!   metabolizer normal form, and the knot-specification grammar.
//! - [`pipeline`]: the obstruction decision procedure, the embedded
//!   genus-one catalog, and the table screen.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod abelian;
pub mod error;
pub mod families;
pub mod forms;
pub mod laurent;
pub mod matrix;
pub mod pipeline;
pub mod sequiv;
pub mod snf;

pub use error::{Error, Result};
pub use matrix::{congruent_transform, Int, IntMatrix, SeifertMatrix};
