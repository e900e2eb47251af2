//! The Brieskorn spheres W^{2n-1}_3 with modified coefficients, their
//! O(2) x SO(n) (and G2) actions, the unit-speed normal geodesic, isotropy
//! tables, the orbit-space disc projection, and G2 sampling through octonion
//! derivations.

pub mod action;
pub mod beta;
pub mod g2;
pub mod isotropy;
pub mod point;

pub use action::{act, deck_rotate, BrieskornIsometry, O2Element};
pub use beta::{beta, beta_geodesic_residual, beta_prime};
pub use g2::{automorphism_residual, derivation, derivation_matrix, g2_sample};
pub use isotropy::{
    principal_isotropy, singular_isotropy_minus, singular_isotropy_plus, verify_isotropy,
};
pub use point::{
    constraint_jacobian, killing_fields, project_tangent, BrieskornPoint, BrieskornRealForm,
};
