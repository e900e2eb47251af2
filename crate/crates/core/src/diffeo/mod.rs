//! Explicit equivariant diffeomorphisms from the Euclidean spheres S^5 and
//! S^13 onto the Brieskorn spheres W^5_3 and W^13_3: the rational map, its
//! trigonometric precursor, the closed-form inverse with its determinant
//! certificate, and the odd-dimensional injective partial maps.

pub mod inverse;
pub mod maps;
pub mod sphere_pair;

pub use inverse::{coefficient_matrix, det_lower_bound, psi_inverse, psi_trig_inverse};
pub use maps::{equivariance_residual, partial_injective, psi, psi_trig, span_residual, PsiVariant};
pub use sphere_pair::SpherePair;
