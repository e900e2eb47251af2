//! The group Sp(2) with the two-parameter family of left-invariant metrics,
//! the star (Gromoll-Meyer) and bullet (standard) circle actions, orbit
//! representatives of the exotic 7-sphere, horizontal lifts, the normal
//! geodesic, Killing fields and their inner-product matrix, membership tests
//! for the distinguished subsets, isotropy tables, and fixed-point searches.

pub mod actions;
pub mod element;
pub mod fixed_points;
pub mod geodesic;
pub mod isotropy;
pub mod killing;
pub mod lift;
pub mod membership;
pub mod sampling;

pub use actions::{
    bullet_act, isometry_differential_residual, orbit_distance, orbit_equal, star_act,
};
pub use element::{
    check_sp2, metric_inner, metric_inner_body, sp2_basis, MetricParams, QMat2, Sigma7Point,
    Sp2Tangent, SpElement,
};
pub use geodesic::{
    bullet_horizontality_residual, euler_arnold_residual, star_horizontality_residual,
    star_vertical_bodies,
};
pub use isotropy::BulletElement;
pub use killing::{
    c_function, killing_agreement_residual, killing_horizontal_closed,
    killing_horizontal_projected, metric_matrix_closed, metric_matrix_direct,
    metric_matrix_residual, orbit_killing_bodies, vertical_basis_bodies,
};
pub use lift::{alpha_tilde, horizontal_lift, torus_point, wiedersehen_check, wiedersehen_holds};
pub use membership::{in_sigma1, in_sigma5, in_sigma6_pm1};
