//! Quaternion and octonion arithmetic, the 3- and 7-dimensional cross
//! products, spherical exponentials, and singularity-safe trigonometric
//! quotients. All value types are immutable and every operation is pure.

pub mod hyper;
pub mod imvec;
pub mod octonion;
pub mod quaternion;
pub mod trig;

pub use hyper::Hyper;
pub use imvec::{cross, sphere_exp, ImVec};
pub use octonion::Octonion;
pub use quaternion::Quaternion;
pub use trig::{
    f1_odd, f2_odd, one_plus_cos_quotient, rational_trig_quotient, safe_trig_quotients,
    sin_pi_quotient,
};
