//! Gradings of finite-dimensional Lie algebras over the rationals.
//!
//! A grading of a Lie algebra is a direct sum decomposition indexed by an
//! abelian group such that brackets add indices. This crate computes, with
//! exact rational arithmetic throughout:
//!
//! - maximal gradings, built from a maximal torus of the derivation algebra;
//! - the complete finite enumeration of torsion-free gradings up to
//!   equivalence-level invariants, with verified equivalence witnesses;
//! - stratifications (Carnot gradings) via an explicit linear system;
//! - positive realizations, either with provably minimal maximal weight
//!   (exact integer programming) or via a fast rescale-and-perturb scheme;
//! - derivations with positive spectrum for the associated one-dimensional
//!   extensions, and optimal non-vanishing bounds for `l^{q,p}` cohomology.
//!
//! A small catalog of nilpotent Lie algebras of dimension at most 6 ships
//! with the crate; see [`corpus`].
//!
//! ```
//! use lie_gradings::corpus;
//! use lie_gradings::enumerate::maximal_grading;
//!
//! let heisenberg = corpus::get("L_3_2").unwrap();
//! let grading = maximal_grading(&heisenberg).unwrap();
//! assert_eq!(grading.rank(), 2);
//! assert_eq!(grading.layers().len(), 3);
//! ```

pub mod cli;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod exactmath;
pub mod formats;
pub mod grading;
pub mod liealg;
pub mod lqp;
pub mod positive;

pub use error::{Error, Result};

// Keep the book's code samples compiling; each chapter runs under `cargo test --doc`.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Overview, "../../../book/src/overview.md");
    chapter!(ExactArithmetic, "../../../book/src/exact-arithmetic.md");
    chapter!(LieAlgebras, "../../../book/src/lie-algebras.md");
    chapter!(Gradings, "../../../book/src/gradings.md");
    chapter!(MaximalGradings, "../../../book/src/maximal-gradings.md");
    chapter!(Enumeration, "../../../book/src/enumeration.md");
    chapter!(PositiveGradings, "../../../book/src/positive-gradings.md");
    chapter!(CohomologyBounds, "../../../book/src/cohomology-bounds.md");
    chapter!(CommandLine, "../../../book/src/command-line.md");
}
