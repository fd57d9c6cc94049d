//! Spectra of graph complements under connectivity constraints.
//!
//! This crate builds three parametric families of connected graphs,
//! computes adjacency spectra of their complements, evaluates the
//! closed-form quartics that carry those spectra, and brute-forces
//! extremal claims over every small connected graph with a given vertex
//! connectivity.
//!
//! The fastest way in is the `examples/` directory; each example is a
//! runnable tour of one capability:
//!
//! * `graph_toolbox` builds graphs, complements, distances, and graph6.
//! * `construct_families` assembles the three families and validates
//!   membership.
//! * `complement_spectrum` runs the Jacobi eigensolver on complements
//!   and checks the Rayleigh machinery.
//! * `quartic_closed_forms` compares quartic roots against computed
//!   spectra and walks the monotonicity differences.
//! * `enumerate_classes` counts connected graphs by connectivity and
//!   diameter and dedups them up to isomorphism.
//! * `verify_spectral_radius` runs the diameter-2 bound, the diameter-3
//!   minimizer scan, and the cut-profile comparison.
//! * `verify_least_eigenvalue` scans for the least-eigenvalue minimizer
//!   and reports which join geometry wins.
//! * `perturbation_spotcheck` stress-tests the edge perturbation
//!   monotonicity on seeded random graphs.
//! * `audit_findings` prints the audit table, including the claims that
//!   fail and where.
//!
//! The same functionality is scriptable through the `spectra` binary;
//! see the README for the command grammar.
//!
//! # Quick start
//!
//! ```
//! use extremal_spectra::constructions::{build_bb, BbParams, BbVariant};
//! use extremal_spectra::spectra::least_eigenvalue;
//!
//! let p = BbParams::new(3, 3, 1, BbVariant::Join).unwrap();
//! let lambda_n = least_eigenvalue(&build_bb(&p).complement());
//! assert!((lambda_n + 1.0 + 3f64.sqrt()).abs() < 1e-9);
//! ```

pub mod cli;
pub mod connectivity;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod quotient;
pub mod spectra;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::Graph;
