//! A chart-based finite-difference curvature engine (Christoffel symbols,
//! the lowered curvature tensor, sectional and scalar curvature, pointwise
//! sectional extremes through the curvature operator) together with the
//! specific metrics of the fixed-point sets: the totally geodesic 2-sphere,
//! the two suspension 3-spheres, the Berger metrics of the homogeneous
//! fixed-point sets, and the orbit-space hemisphere.

pub mod chart;
pub mod engine;
pub mod metrics;
pub mod sigma5_chart;

pub use chart::ChartMetric;
pub use engine::{
    euclidean, hyperbolic_plane, min_max_sectional, orbit_space_metric, product_metric,
    round_sphere2, round_sphere3, scalar_at, CurvaturePoint, FdSteps,
};
pub use metrics::{
    sigma2_k_at_pole,
    berger_extremes, berger_metric, berger_params, hemisphere_curvature, hemisphere_metric,
    hemisphere_omega, sigma2_curvature_values, sigma2_metric, sigma31_curvature_range,
    sigma31_metric, sigma32_deck_residual, sigma32_metric, sigma32_min_k, sigma32_mu1_agreement,
    sigma32_scalar_mu1,
};
pub use sigma5_chart::{curvature_component, sigma5_chart_metric};
