//! Nonlinear SO(2) actions on the Euclidean spheres S^5 and S^13: the
//! analytic twist map Q with its cocycle law, the twisted rotations they
//! generate (including the exotic involution at angle pi), and the bridge
//! identifying these actions with the linear actions on the Brieskorn
//! spheres through the trigonometric diffeomorphism.

pub mod bridge;
pub mod qmap;
pub mod rotate;

pub use bridge::{brieskorn_equivalence_residual, normal_curve, normal_curve_residual};
pub use qmap::{q_map, q_map_raw, q_map_twisted};
pub use rotate::{cocycle_residual, nonlinear_rotate, nonlinear_rotate_twisted};
