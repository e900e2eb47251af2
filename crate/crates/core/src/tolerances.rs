//! Central tolerance record.
//!
//! Every threshold used by the library and its verification suites is defined
//! here, grouped by the kind of computation that produces the residual.

/// Algebraic identities evaluated in closed form (products, conjugations).
pub const ALGEBRAIC: f64 = 1e-12;

/// Looser algebraic budget for long product chains (octonion identities,
/// Cayley-Dickson round trips).
pub const ALGEBRAIC_CHAIN: f64 = 1e-13;

/// Unit-norm preconditions checked at operation boundaries.
pub const UNIT_NORM: f64 = 1e-9;

/// Unitarity of Sp(2) elements.
pub const UNITARITY: f64 = 1e-12;

/// On-manifold residual for Brieskorn points.
pub const ON_MANIFOLD: f64 = 1e-10;

/// Orbit equality of Sigma^7 points (closed-form alignment residual).
pub const ORBIT_EQUAL: f64 = 1e-10;

/// Finite-difference certificates (horizontality, geodesic residuals).
pub const FD_CERT: f64 = 1e-7;

/// Horizontality residuals from a single first derivative.
pub const HORIZONTAL: f64 = 1e-8;

/// Negative controls must exceed this.
pub const NEG_CONTROL: f64 = 1e-3;

/// Geodesic residual of the Brieskorn normal geodesic (ambient second
/// difference projected to the tangent space).
pub const BETA_GEODESIC: f64 = 1e-5;

/// Closed-form vs. projected Killing fields along the normal geodesic.
pub const KILLING_AGREEMENT: f64 = 1e-11;

/// Residual of the rational sphere-to-Brieskorn map on the defining equations.
pub const PSI_RESIDUAL: f64 = 1e-12;

/// Residual of the trigonometric variant (series fallbacks near the
/// removable singularities cost one digit).
pub const PSI_TRIG_RESIDUAL: f64 = 1e-11;

/// Round trip through the explicit inverse.
pub const PSI_ROUNDTRIP: f64 = 1e-9;

/// Slack subtracted from the determinant lower bound before flagging.
pub const DET_BOUND_SLACK: f64 = 1e-9;

/// SO(3) equivariance of the diffeomorphisms.
pub const EQUIVARIANCE_SO3: f64 = 1e-12;

/// G2 equivariance (matrix exponential accuracy dominates).
pub const EQUIVARIANCE_G2: f64 = 1e-9;

/// Cocycle residual of the analytic twist map.
pub const COCYCLE: f64 = 1e-11;

/// Nonlinear action law and involution residuals.
pub const ACTION_LAW: f64 = 1e-10;

/// Conjugated nonlinear action vs. linear Brieskorn action.
pub const BRIDGE: f64 = 1e-9;

/// Isotropy elements must fix their geodesic point this tightly.
pub const ISOTROPY_FIX: f64 = 1e-12;

/// Non-members must move the point at least this far.
pub const ISOTROPY_MOVE: f64 = 1e-6;

/// Relative accuracy of finite-difference curvature against closed forms.
pub const CURVATURE_REL: f64 = 1e-3;

/// Relative accuracy of grid min/max sectional extremes.
pub const MINMAX_REL: f64 = 2e-2;

/// First Bianchi identity residual of the finite-difference tensor.
pub const BIANCHI: f64 = 1e-5;

/// Weight equivariance of the branched covering.
pub const COVERING_WEIGHTS: f64 = 1e-12;

/// Fixed-point threshold used by the freeness oracle.
pub const FIXED_POINT: f64 = 1e-6;

/// First finite-difference step for curve derivatives (fourth-order stencil).
pub const CURVE_STEP: f64 = 1e-3;

/// First-derivative step for metric components (Richardson once).
pub const METRIC_STEP_1: f64 = 1e-4;

/// Second-derivative step for metric components (Richardson once).
pub const METRIC_STEP_2: f64 = 1e-3;
