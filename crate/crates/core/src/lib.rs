//! Numerical laboratory for the geometry of the Gromoll-Meyer exotic
//! 7-sphere and the Brieskorn spheres W^5_3 and W^13_3.
//!
//! The crate implements the explicit constructions of that geometry —
//! the two-parameter family of metrics on Sp(2), the star and bullet circle
//! actions, horizontal lifts and normal geodesics, the Brieskorn spheres with
//! their cohomogeneity-one group actions, explicit diffeomorphisms between
//! Euclidean and Brieskorn spheres, nonlinear SO(2) actions on Euclidean
//! spheres, free cyclic actions with a branched covering to the standard
//! sphere, and a finite-difference curvature engine for the induced metrics
//! on the fixed-point sets — and ships the numerical certificates that check
//! each construction against independent oracles.

pub mod algebra;
pub mod error;
pub mod numerics;
pub mod tolerances;

pub mod sp2;

pub mod brieskorn;

pub mod diffeo;

pub mod actions;

pub mod riemann;

pub mod quotients;


pub use error::{Error, Result};
