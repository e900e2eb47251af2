use super::element::{metric_inner_body, sp2_basis, MetricParams, QMat2, SpElement};
use crate::algebra::quaternion::Quaternion;
use crate::tolerances::CURVE_STEP;

/// Body velocity of a curve in Sp(2) by a fourth-order stencil:
/// u(t) = X(t)^* X'(t).
pub fn body_velocity(curve: &impl Fn(f64) -> SpElement, t: f64, h: f64) -> QMat2 {
    let xp = curve(t + h);
    let xp2 = curve(t + 2.0 * h);
    let xm = curve(t - h);
    let xm2 = curve(t - 2.0 * h);
    let deriv = xp
        .scale(8.0)
        .sub(&xm.scale(8.0))
        .sub(&xp2)
        .add(&xm2)
        .scale(1.0 / (12.0 * h));
    curve(t).conj_transpose().mul(&deriv)
}

/// The left-trivialized geodesic certificate: for every basis direction w,
/// |d/dt <u, w> - <u, [u, w]>| must vanish along geodesics of the
/// left-invariant metric. Returns the maximum over the ten basis directions.
pub fn euler_arnold_residual(
    curve: &impl Fn(f64) -> SpElement,
    params: MetricParams,
    t: f64,
) -> f64 {
    let h = CURVE_STEP;
    let u = body_velocity(curve, t, h);
    let u_nodes = [
        body_velocity(curve, t + 2.0 * h, h),
        body_velocity(curve, t + h, h),
        body_velocity(curve, t - h, h),
        body_velocity(curve, t - 2.0 * h, h),
    ];
    let mut worst: f64 = 0.0;
    for w in sp2_basis() {
        let vals: Vec<f64> = u_nodes
            .iter()
            .map(|un| metric_inner_body(params, un, &w))
            .collect();
        let ddt = (-vals[0] + 8.0 * vals[1] - 8.0 * vals[2] + vals[3]) / (12.0 * h);
        let transport = metric_inner_body(params, &u, &u.commutator(&w));
        worst = worst.max((ddt - transport).abs());
    }
    worst
}

/// The star-action Killing vectors at a point, in body form:
/// X^* (c X) - diag(c, 0) for c = i, j, k.
pub fn star_vertical_bodies(x: &SpElement) -> [QMat2; 3] {
    let xd = x.conj_transpose();
    let mut out = [QMat2::zero(); 3];
    for (idx, c) in [
        Quaternion::new(0.0, 1.0, 0.0, 0.0),
        Quaternion::new(0.0, 0.0, 1.0, 0.0),
        Quaternion::new(0.0, 0.0, 0.0, 1.0),
    ]
    .iter()
    .enumerate()
    {
        let left = xd.mul(&x.scalar_mul_left(*c));
        out[idx] = left.sub(&QMat2::diag(*c, Quaternion::ZERO));
    }
    out
}

/// The bullet-action Killing vectors of the S^3 factor in body form:
/// diag(0, -c) for c = i, j, k (independent of the point).
pub fn bullet_vertical_bodies() -> [QMat2; 3] {
    [
        QMat2::diag(Quaternion::ZERO, Quaternion::new(0.0, -1.0, 0.0, 0.0)),
        QMat2::diag(Quaternion::ZERO, Quaternion::new(0.0, 0.0, -1.0, 0.0)),
        QMat2::diag(Quaternion::ZERO, Quaternion::new(0.0, 0.0, 0.0, -1.0)),
    ]
}

/// Maximum inner product of the curve's velocity against the three
/// star-vertical Killing vectors at the point; near zero certifies
/// horizontality with respect to the star submersion.
pub fn star_horizontality_residual(
    curve: &impl Fn(f64) -> SpElement,
    params: MetricParams,
    t: f64,
) -> f64 {
    let u = body_velocity_fine(curve, t);
    let x = curve(t);
    star_vertical_bodies(&x)
        .iter()
        .map(|xi| metric_inner_body(params, &u, xi).abs())
        .fold(0.0, f64::max)
}

/// Same certificate against the bullet-action vertical space.
pub fn bullet_horizontality_residual(
    curve: &impl Fn(f64) -> SpElement,
    params: MetricParams,
    t: f64,
) -> f64 {
    let u = body_velocity_fine(curve, t);
    bullet_vertical_bodies()
        .iter()
        .map(|xi| metric_inner_body(params, &u, xi).abs())
        .fold(0.0, f64::max)
}

// Single central difference with step 1e-6; enough for one differentiation.
fn body_velocity_fine(curve: &impl Fn(f64) -> SpElement, t: f64) -> QMat2 {
    let h = 1e-6;
    let deriv = curve(t + h).sub(&curve(t - h)).scale(1.0 / (2.0 * h));
    curve(t).conj_transpose().mul(&deriv)
}
