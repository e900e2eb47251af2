use super::rotate::nonlinear_rotate;
use crate::algebra::imvec::ImVec;
use crate::brieskorn::action::{act, BrieskornIsometry, O2Element};
use crate::brieskorn::beta::beta;
use crate::brieskorn::point::BrieskornPoint;
use crate::diffeo::maps::psi_trig;
use crate::diffeo::sphere_pair::SpherePair;
use nalgebra::DMatrix;
use std::f64::consts::PI;

/// Conjugation defect of the nonlinear sphere action against the linear
/// Brieskorn action through the trigonometric diffeomorphism:
/// | psi(rotate(x, theta)) - D(theta) . psi(x) |.
///
/// The trigonometric variant is the geodesic parametrization; the rational
/// variant is only isotopic to it and does not conjugate the actions
/// pointwise.
pub fn brieskorn_equivalence_residual(x: &SpherePair, theta: f64) -> f64 {
    let n = x.n();
    let lhs = psi_trig(&nonlinear_rotate(x, theta)).to_point();
    let g = BrieskornIsometry::new(O2Element::rotation(theta), DMatrix::identity(n, n))
        .expect("rotation is orthogonal");
    let rhs = act(&g, &psi_trig(x).to_point()).expect("psi image is on-manifold");
    lhs.dist(&rhs)
}

/// The normal curve of the nonlinear action on S^5:
/// s -> (j cos s, (k cos(pi cos s) - i sin(pi cos s)) sin s).
pub fn normal_curve(s: f64) -> SpherePair {
    let c = s.cos();
    let (sigma, kappa) = (PI * c).sin_cos();
    let p = ImVec::new(vec![0.0, c, 0.0]);
    let w = ImVec::new(vec![-sigma * s.sin(), 0.0, kappa * s.sin()]);
    SpherePair::new_unchecked(p, w)
}

/// The fixed identification relating the curve to the Brieskorn normal
/// geodesic: psi_trig(normal_curve(s)) equals the reflected geodesic
/// (conj z0, conj z) of beta(s), i.e. beta(-s). Returns the defect.
pub fn normal_curve_residual(s: f64) -> f64 {
    let img = psi_trig(&normal_curve(s)).to_point();
    let reflected = {
        let b = beta(s);
        BrieskornPoint::new_unchecked(b.z0.conj(), b.z.iter().map(|z| z.conj()).collect())
    };
    img.dist(&reflected)
}
