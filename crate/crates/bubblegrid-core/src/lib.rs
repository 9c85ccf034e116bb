//! Exact toolkit for the two-phase minimal-perimeter problem on the square
//! lattice: given disjoint point sets `A`, `B` of prescribed sizes, minimise
//! the lattice perimeter in which same-phase boundary counts with weight 1
//! and the A–B interface with weight `2 - 2*beta`, `beta` in (0,1).
//!
//! All energies and perimeters in this model are of the form `c0 + c1*beta`
//! with integer coefficients, so every comparison at a rational `beta` is
//! carried out in integer arithmetic. The crate is `no_std` (alloc only);
//! IO, file formats and the command-line front end live in the companion
//! `bubblegrid` crate.
//!
//! Module map:
//! * [`beta`] — the `beta` parameter and exact `c0 + c1*beta` values.
//! * [`lattice`] — configurations, bond counting, perimeter/energy algebra.
//! * [`geometry`] — connectivity, the A–B interface, lattice isometries,
//!   canonical forms, isometry-minimised symmetric difference.
//! * [`regularize`] — row/inter-row energy decomposition, lower bounds, and
//!   the energy-non-increasing rearrangement procedure.
//! * [`classify`] — the Class I..V taxonomy of admissible configurations.
//! * [`solver`] — closed-form minimal perimeter, explicit builders, Wulff
//!   shape diagnostics.
//! * [`oracle`] — exhaustive ground-truth search at small sizes.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod beta;
pub mod classify;
pub mod geometry;
pub mod lattice;
pub mod oracle;
pub mod regularize;
pub mod solver;

pub use beta::{AffineInBeta, AffineOrd, Beta, BetaError, BetaValue};
pub use lattice::{BondCounts, Configuration, LatticePoint, Phase};
