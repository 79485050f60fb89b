//! Rigid rotators of three attracting point masses on the two-sphere.
//!
//! Three bodies with masses `m1, m2, m3 > 0` move on a sphere of radius `R`
//! under a pairwise attractive potential. A *relative equilibrium* is a
//! motion in which the triangle formed by the bodies stays congruent to
//! itself: every colatitude is constant and all bodies share one rotation
//! rate about the vertical axis. This crate decides, for a given mass
//! triple and triangle shape, whether such a rigid rotator exists, and if
//! so produces the rotating configuration and its spin rate.
//!
//! The decision runs through a small pipeline:
//!
//! 1. [`geometry`] validates the shape (three mutual arc angles) and places
//!    it on the sphere.
//! 2. [`inertia`] assembles a symmetric 3×3 matrix from the masses and the
//!    cosines of the arcs, solves its eigenproblem ([`linalg`]), and
//!    translates an eigenpair with positive eigenvector into colatitudes
//!    and azimuths.
//! 3. [`rotator`] tests whether the translated configuration spins rigidly
//!    under the chosen [`potentials`] law and classifies the result.
//! 4. [`families`] walks the closed-form solution branches for symmetric
//!    mass triples (equilateral, equal-mass isosceles, two equal masses).
//! 5. [`dynamics`] integrates the full equations of motion, providing an
//!    independent check that accepted configurations really are rigid.
//!
//! The crate is `no_std`-compatible (with `alloc`); the default `std`
//! feature switches float math to the standard library.

#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod dynamics;
pub mod families;
pub mod geometry;
pub mod inertia;
pub mod linalg;
pub mod potentials;
pub mod rotator;
