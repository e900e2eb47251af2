use super::qmap::{q_map, q_map_twisted};
use crate::diffeo::sphere_pair::SpherePair;

/// One step of the nonlinear circle action with twist multiplier m:
/// the linear rotation conjugated by the twist map.
pub fn nonlinear_rotate_twisted(x: &SpherePair, theta: f64, m: u32) -> SpherePair {
    let q = q_map_twisted(x, theta, m);
    let xt = x.rotate(theta);
    SpherePair::new_unchecked(
        q.sandwich(&xt.p.embed()).imag_vec(),
        q.sandwich(&xt.w.embed()).imag_vec(),
    )
}

/// The nonlinear SO(2) action (default twist).
pub fn nonlinear_rotate(x: &SpherePair, theta: f64) -> SpherePair {
    nonlinear_rotate_twisted(x, theta, 0)
}

/// Cocycle defect |Q(x, theta) Q(x_theta, tau) - Q(x, theta + tau)|;
/// its vanishing makes the twisted rotation a group action.
pub fn cocycle_residual(x: &SpherePair, theta: f64, tau: f64) -> f64 {
    let lhs = q_map(x, theta) * q_map(&x.rotate(theta), tau);
    let rhs = q_map(x, theta + tau);
    (lhs - rhs).norm()
}

/// Cocycle defect for the twisted variant.
pub fn cocycle_residual_twisted(x: &SpherePair, theta: f64, tau: f64, m: u32) -> f64 {
    let lhs = q_map_twisted(x, theta, m) * q_map_twisted(&x.rotate(theta), tau, m);
    let rhs = q_map_twisted(x, theta + tau, m);
    (lhs - rhs).norm()
}
