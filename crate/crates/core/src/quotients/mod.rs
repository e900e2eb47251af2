//! Free cyclic actions on the exotic sphere: the arithmetic freeness
//! predicate with its sampled fixed-point oracle, branched coverings to the
//! standard 5-sphere with their weight equivariance and fiber counts, the
//! degree-r join power map, homotopy lens-space metadata, and the geodesic
//! join parametrization of the exotic 7-sphere.

pub mod covering;
pub mod freeness;
pub mod join;

pub use covering::{fiber_count, phi, rho, CoveringVariant};
pub use freeness::{
    fixed_point_witness, freeness_oracle, is_free, lens_parameters, LensActionParams,
    LensMetadata,
};
pub use join::{join_to_sigma7, JoinPoint};
