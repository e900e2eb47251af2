use super::element::{QMat2, Sigma7Point, SpElement};
use crate::algebra::quaternion::{Quaternion, ONE};
use crate::error::{contract, Result};
use crate::tolerances;

fn check_unit(q: &Quaternion) -> Result<()> {
    if (q.norm() - 1.0).abs() > 1e-12 {
        return Err(contract(format!("quaternion must be unit, |q| = {}", q.norm())));
    }
    Ok(())
}

fn check_orthogonal(b: &[[f64; 2]; 2]) -> Result<()> {
    let dot = |c1: [f64; 2], c2: [f64; 2]| c1[0] * c2[0] + c1[1] * c2[1];
    let c1 = [b[0][0], b[1][0]];
    let c2 = [b[0][1], b[1][1]];
    let r = (dot(c1, c1) - 1.0).abs() + (dot(c2, c2) - 1.0).abs() + dot(c1, c2).abs();
    if r > 1e-12 {
        return Err(contract(format!("matrix is not orthogonal, residual {r:.3e}")));
    }
    Ok(())
}

/// The Gromoll-Meyer action q * A = q A diag(conj q, 1).
pub fn star_act(q: Quaternion, a: &SpElement) -> Result<SpElement> {
    check_unit(&q)?;
    Ok(a.scalar_mul_left(q).mul_diag_right(q.conj(), ONE))
}

/// The standard action (B, q) . A = B A diag(1, conj q) with B in O(2).
pub fn bullet_act(b: &[[f64; 2]; 2], q: Quaternion, a: &SpElement) -> Result<SpElement> {
    check_unit(&q)?;
    check_orthogonal(b)?;
    Ok(QMat2::from_real(*b).mul(a).mul_diag_right(ONE, q.conj()))
}

/// Closed-form alignment of two star-orbit representatives.
///
/// The star action multiplies the second column by q on the left, and at
/// least one second-column entry of an Sp(2) element has squared norm >= 1/2,
/// so q is recovered from the dominant entry and verified on the rest.
/// Returns (residual, q).
pub fn orbit_distance(x: &Sigma7Point, y: &Sigma7Point) -> (f64, Quaternion) {
    let (xe, ye) = (&x.rep.e, &y.rep.e);
    let q = if xe[0][1].norm_sqr() >= xe[1][1].norm_sqr() {
        ye[0][1] * xe[0][1].inverse()
    } else {
        ye[1][1] * xe[1][1].inverse()
    };
    let n = q.norm();
    if !(0.5..=2.0).contains(&n) {
        // Norm mismatch: the orbits cannot be equal; report a raw distance.
        return (x.rep.sub(&y.rep).frobenius().max(1.0), q);
    }
    let qhat = q.scale(1.0 / n);
    let aligned = star_act(qhat, &x.rep).expect("normalized quaternion");
    (aligned.sub(&y.rep).frobenius(), qhat)
}

/// Orbit-space equality of two points of the exotic 7-sphere.
pub fn orbit_equal(x: &Sigma7Point, y: &Sigma7Point) -> bool {
    orbit_distance(x, y).0 < tolerances::ORBIT_EQUAL
}

/// Isometry certificate for a diffeomorphism of Sp(2): compares the metric
/// pairing of two tangent directions at x with the pairing of their images,
/// the image tangents taken by central differences along retracted curves.
pub fn isometry_differential_residual(
    map: &impl Fn(&SpElement) -> SpElement,
    x: &SpElement,
    u: &QMat2,
    v: &QMat2,
    params: crate::sp2::element::MetricParams,
) -> f64 {
    use crate::sp2::element::metric_inner_body;
    let h = 1e-6;
    let image_tangent = |dir: &QMat2| {
        let curve = |t: f64| {
            let step = QMat2::identity().add(&dir.scale(t));
            map(&x.mul(&step).orthonormalized())
        };
        let deriv = curve(h).sub(&curve(-h)).scale(1.0 / (2.0 * h));
        curve(0.0).conj_transpose().mul(&deriv)
    };
    let du = image_tangent(u);
    let dv = image_tangent(v);
    (metric_inner_body(params, &du, &dv) - metric_inner_body(params, u, v)).abs()
}
