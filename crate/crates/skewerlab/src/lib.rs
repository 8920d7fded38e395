//! Line geometry of 3-space in its three classical flavors, plus a seeded
//! Monte-Carlo verifier for configuration theorems about skewers (common
//! perpendiculars of lines).
//!
//! The kernel offers four interchangeable computational models:
//!
//! * [`hyperbolic`] — lines in hyperbolic 3-space as complex binary quadratic
//!   forms, with the discriminant pairing and the Poisson bracket.
//! * [`elliptic`] — oriented lines in elliptic 3-space as point pairs on two
//!   unit spheres (the product-of-spheres splitting of the Grassmannian).
//! * [`euclidean`] — oriented lines in `ℝ³` as unit dual vectors
//!   (direction + moment).
//! * [`fenchel`] — hyperbolic lines and points as 2×2 complex reflection
//!   matrices, with incidence and the line-through-points solver.
//!
//! On top of the kernel, [`congruence`] implements the circle analogs (axial
//! congruences, complex distance, spherical Poncelet chains, Fuss relations)
//! and [`program`] provides a small instruction DSL plus a library of theorem
//! verification programs that run seeded randomized trials and aggregate
//! residuals into [`report::TrialReport`] values.

pub mod congruence;
pub mod elliptic;
pub mod euclidean;
pub mod fenchel;
pub mod hyperbolic;
pub mod model;
pub mod program;
pub mod report;
pub mod scene;

mod linalg;

pub use report::TrialReport;
