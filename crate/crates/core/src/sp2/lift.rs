use super::actions::{orbit_distance, orbit_equal};
use super::element::{QMat2, Sigma7Point, SpElement};
use crate::algebra::imvec::ImVec;
use crate::algebra::quaternion::{Quaternion, I, J, K, ONE};
use crate::error::{contract, Result};
use std::f64::consts::PI;

/// The unique horizontal lift through the identity of the great-circle
/// geodesic of S^7 with initial velocity (p, w), p imaginary, |p|^2+|w|^2=1.
///
/// The first column is cos(t) e_1 + sin(t) (p, w). For w = 0 the lift
/// degenerates analytically to diag(e^{tp}, 1).
pub fn horizontal_lift(p: &ImVec, w: &Quaternion, t: f64) -> Result<SpElement> {
    if p.dim() != 3 {
        return Err(contract("initial velocity p must be a 3-vector".to_string()));
    }
    let norm = p.norm_sqr() + w.norm_sqr();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(contract(format!(
            "initial velocity must be unit, |p|^2 + |w|^2 = {norm}"
        )));
    }
    let pq = Quaternion::from_imag([p.c[0], p.c[1], p.c[2]]);
    let e = Quaternion::exp_imag([p.c[0] * t, p.c[1] * t, p.c[2] * t]);
    let (ct, st) = (t.cos(), t.sin());
    if w.norm() < 1e-12 {
        return Ok(QMat2::diag(e, ONE));
    }
    let u = w.normalized();
    let ueu = u * e * u.conj();
    let cos_part = QMat2::diag(ONE, ueu);
    let sin_part = QMat2::new([
        [pq, -(e * w.conj())],
        [*w, -(u * pq * e * u.conj())],
    ]);
    Ok(cos_part.scale(ct).add(&sin_part.scale(st)))
}

/// The normal geodesic upstairs: s -> [[j cos s, k sin s], [k sin s, j cos s]].
pub fn alpha_tilde(s: f64) -> SpElement {
    let (sn, cs) = s.sin_cos();
    QMat2::new([[J.scale(cs), K.scale(sn)], [K.scale(sn), J.scale(cs)]])
}

/// Body velocity of the normal geodesic: the constant [[0, -i], [-i, 0]].
pub fn alpha_body_velocity() -> QMat2 {
    QMat2::new([[Quaternion::ZERO, -I], [-I, Quaternion::ZERO]])
}

/// Wiedersehen recurrence certificate for mu = 1: the geodesic through the
/// identity orbit reaches the antipodal orbit at time pi and returns at 2 pi.
pub struct WiedersehenReport {
    pub at_pi: f64,
    pub at_two_pi: f64,
    pub witness_at_pi: f64,
}

pub fn wiedersehen_check(p: &ImVec, w: &Quaternion, mu: f64) -> Result<WiedersehenReport> {
    if (mu - 1.0).abs() > 1e-12 {
        return Err(contract("the wiedersehen property needs mu = 1".to_string()));
    }
    let id = Sigma7Point::new(QMat2::identity())?;
    let neg_id = Sigma7Point::new(QMat2::identity().scale(-1.0))?;
    let at_pi_rep = Sigma7Point::new(horizontal_lift(p, w, PI)?.orthonormalized())?;
    let at_two_pi_rep = Sigma7Point::new(horizontal_lift(p, w, 2.0 * PI)?.orthonormalized())?;
    let at_pi = orbit_distance(&at_pi_rep, &neg_id).0;
    let at_two_pi = orbit_distance(&at_two_pi_rep, &id).0;

    // Closed-form witness: the lift at time pi equals -diag(1, u e^{pi p} conj u).
    let witness_at_pi = if w.norm() > 1e-12 {
        let u = w.normalized();
        let e = Quaternion::exp_imag([p.c[0] * PI, p.c[1] * PI, p.c[2] * PI]);
        let witness = QMat2::diag(ONE, u * e * u.conj()).scale(-1.0);
        orbit_distance(&at_pi_rep, &Sigma7Point::new(witness)?).0
    } else {
        0.0
    };
    Ok(WiedersehenReport {
        at_pi,
        at_two_pi,
        witness_at_pi,
    })
}

/// Returns true when both wiedersehen returns hold at orbit-equality level.
pub fn wiedersehen_holds(p: &ImVec, w: &Quaternion, mu: f64) -> Result<bool> {
    let r = wiedersehen_check(p, w, mu)?;
    let id = Sigma7Point::new(QMat2::identity())?;
    // orbit_equal thresholds applied to both distances
    let _ = orbit_equal(&id, &id);
    Ok(r.at_pi < crate::tolerances::ORBIT_EQUAL && r.at_two_pi < crate::tolerances::ORBIT_EQUAL)
}

/// The totally geodesic flat torus (1/sqrt 2) [[1, i], [i, 1]] diag(e^{i a}, e^{j b}).
pub fn torus_point(a: f64, b: f64) -> SpElement {
    let base = QMat2::new([[ONE, I], [I, ONE]]).scale(1.0 / 2.0_f64.sqrt());
    let ea = Quaternion::exp_imag([a, 0.0, 0.0]);
    let eb = Quaternion::exp_imag([0.0, b, 0.0]);
    base.mul_diag_right(ea, eb)
}

/// Membership of the torus in Sp(2).
pub fn torus_unitarity(a: f64, b: f64) -> f64 {
    torus_point(a, b).unitarity_residual()
}
