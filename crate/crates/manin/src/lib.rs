//! Exact-arithmetic toolkit for Manin triples, classical r-matrices, and
//! the Poisson geometry of Drinfeld and Heisenberg doubles of matrix Lie
//! groups.
//!
//! The crate constructs quadratic Lie algebras and Manin triples from
//! structure constants, derives the associated r-matrix and the double
//! Poisson bivectors, and mechanically verifies — in exact rational
//! arithmetic, point by point — the linear-algebra conditions under which
//! quotients of the doubles admit weak sections and weak splittings of
//! their Poisson structures. Built-in constructions cover the standard
//! complete and partial flag-variety setups for `sl_n`.
//!
//! Layering (each module depends only on earlier ones):
//!
//! * [`exactlin`] — rationals, dense matrices, canonical-form subspaces;
//! * [`liecore`] — Lie algebras from structure constants, Killing forms,
//!   quadratic Lie algebras, normalizers, Lagrangian subalgebras;
//! * [`maningen`] — Manin triples, dual bases, r-matrices, the classical
//!   Yang–Baxter obstruction;
//! * [`groupgeom`] — matrix group points, adjoint actions, exact Bruhat
//!   decompositions, quotient frames;
//! * [`doublepoisson`] — Drinfeld/Heisenberg bivectors and pushforwards;
//! * [`splitcheck`] — section conditions, Poisson–Dirac transversals,
//!   weak-section and weak-splitting verdicts;
//! * [`flagapps`] — ready-made flag-variety configurations for `sl_n`;
//! * [`sampling`] — seeded random rational/group-point generation;
//! * [`cli`] — JSON input schema and the command-line driver.

pub mod cli;
pub mod doublepoisson;
pub mod error;
pub mod exactlin;
pub mod flagapps;
pub mod groupgeom;
pub mod liecore;
pub mod maningen;
pub mod report;
pub mod sampling;
pub mod splitcheck;

pub use doublepoisson::{
    bivector_at, chi_r_at, chi_r_with_ad, pushforward_bivector, Bivector, DoubleVariant, Frame,
};
pub use error::{Error, Result};
pub use exactlin::{Mat, Rat, Subspace};
pub use flagapps::{minimal_coset_reps, run_flag_suite, CaseKind, FlagCase, SuiteOpts};
pub use groupgeom::{BruhatMode, GroupPoint, MatRep, QuotientFrame};
pub use liecore::{LieAlg, QuadLie};
pub use maningen::{build_rmatrix, ManinTriple, RMatrix};
pub use report::{CheckReport, Clause};
pub use splitcheck::{
    check_section_conditions, check_weak_splitting, poisson_dirac_check,
    verify_section_with_samples, weak_section_verify, DoubleContext, GroupData, SectionSpec,
    SplittingSpec,
};
