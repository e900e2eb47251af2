use crate::actions::rotate::nonlinear_rotate;
use crate::algebra::quaternion::Quaternion;
use crate::brieskorn::point::{BrieskornPoint, BrieskornRealForm};
use crate::diffeo::inverse::psi_trig_inverse;
use crate::error::{contract, Result};
use crate::sp2::element::{QMat2, Sigma7Point};
use crate::sp2::lift::horizontal_lift;
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

/// A point of the join S^1 * W^5_3: a circle phase, a Brieskorn point, and a
/// join parameter t in [0, pi/2]. At t = 0 the Brieskorn component is
/// quotiented out, at t = pi/2 the circle component is.
#[derive(Clone, Debug)]
pub struct JoinPoint {
    pub circle: Complex64,
    pub brieskorn: BrieskornPoint,
    pub t: f64,
}

impl JoinPoint {
    pub fn new(circle: Complex64, brieskorn: BrieskornPoint, t: f64) -> Result<Self> {
        if (circle.norm() - 1.0).abs() > 1e-9 {
            return Err(contract("circle component must be unit".to_string()));
        }
        if !(0.0..=FRAC_PI_2 + 1e-12).contains(&t) {
            return Err(contract(format!("join parameter {t} outside [0, pi/2]")));
        }
        if brieskorn.n() != 3 {
            return Err(contract("join needs the 5-sphere model".to_string()));
        }
        Ok(JoinPoint {
            circle,
            brieskorn,
            t,
        })
    }
}

/// The geodesic-join homeomorphism onto the exotic 7-sphere for mu = 1:
/// (zeta, b, t) goes to the orbit of A_zeta gamma_{(p, w)}(t), where (p, w)
/// is the sphere pair of b rotated back to the base frame by the nonlinear
/// action, so that the t = pi/2 endpoint depends only on b.
pub fn join_to_sigma7(j: &JoinPoint, mu: f64) -> Result<Sigma7Point> {
    if (mu - 1.0).abs() > 1e-12 {
        return Err(contract("the join parametrization needs mu = 1".to_string()));
    }
    let theta = j.circle.arg();
    let rf = BrieskornRealForm::from_point(&j.brieskorn);
    let pair = psi_trig_inverse(&rf)?;
    let based = nonlinear_rotate(&pair, -theta);
    let based = based.normalized();
    let w = Quaternion::from_imag([based.w.c[0], based.w.c[1], based.w.c[2]]);
    let lift = horizontal_lift(&based.p, &w, j.t)?;
    let (s, c) = theta.sin_cos();
    let rot = QMat2::from_real([[c, -s], [s, c]]);
    Sigma7Point::new(rot.mul(&lift).orthonormalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brieskorn::action::{act, BrieskornIsometry, O2Element};
    use crate::brieskorn::beta::beta;
    use crate::sp2::actions::{bullet_act, orbit_distance, orbit_equal};
    use crate::sp2::membership::in_sigma5;
    use crate::sp2::sampling;
    use nalgebra::DMatrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_brieskorn(rng: &mut ChaCha8Rng) -> BrieskornPoint {
        let (p, w) = sampling::random_sphere_pair(rng, 3);
        crate::diffeo::maps::psi_trig(&crate::diffeo::sphere_pair::SpherePair::new_unchecked(
            p, w,
        ))
        .to_point()
    }

    fn random_circle(rng: &mut ChaCha8Rng) -> Complex64 {
        Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU))
    }

    #[test]
    fn t_zero_is_the_wiedersehen_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(130);
        let zeta = random_circle(&mut rng);
        let b1 = random_brieskorn(&mut rng);
        let b2 = random_brieskorn(&mut rng);
        let x1 = join_to_sigma7(&JoinPoint::new(zeta, b1, 0.0).unwrap(), 1.0).unwrap();
        let x2 = join_to_sigma7(&JoinPoint::new(zeta, b2, 0.0).unwrap(), 1.0).unwrap();
        assert!(orbit_equal(&x1, &x2), "t = 0 output depends on the Brieskorn part");
        let theta = zeta.arg();
        let (s, c) = theta.sin_cos();
        let expected = Sigma7Point::new(QMat2::from_real([[c, -s], [s, c]])).unwrap();
        assert!(orbit_equal(&x1, &expected));
    }

    #[test]
    fn t_half_pi_lands_in_sigma5_independent_of_circle() {
        let mut rng = ChaCha8Rng::seed_from_u64(131);
        for _ in 0..20 {
            let b = random_brieskorn(&mut rng);
            let z1 = random_circle(&mut rng);
            let z2 = random_circle(&mut rng);
            let x1 = join_to_sigma7(&JoinPoint::new(z1, b.clone(), FRAC_PI_2).unwrap(), 1.0)
                .unwrap();
            let x2 = join_to_sigma7(&JoinPoint::new(z2, b.clone(), FRAC_PI_2).unwrap(), 1.0)
                .unwrap();
            assert!(in_sigma5(&x1));
            let (d, _) = orbit_distance(&x1, &x2);
            assert!(d < 1e-8, "endpoint depends on circle: {d:.3e}");
        }
    }

    #[test]
    fn join_is_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(132);
        for _ in 0..100 {
            let zeta = random_circle(&mut rng);
            let b = random_brieskorn(&mut rng);
            let t = rng.gen_range(0.05..FRAC_PI_2 - 0.05);
            let j = JoinPoint::new(zeta, b.clone(), t).unwrap();

            let theta = rng.gen_range(0.0..std::f64::consts::TAU);
            let reflect = rng.gen_bool(0.5);
            let q = sampling::random_unit_quaternion(&mut rng);
            let m = q.rotation_matrix();
            let g = BrieskornIsometry::new(
                O2Element { theta, reflect },
                DMatrix::from_fn(3, 3, |i, j| m[i][j]),
            )
            .unwrap();

            // the group acts on the circle through O(2) and on W through g
            let zeta_acted = {
                let base = if reflect { zeta.conj() } else { zeta };
                Complex64::from_polar(1.0, theta) * base
            };
            let j_acted = JoinPoint::new(zeta_acted, act(&g, &b).unwrap(), t).unwrap();
            let lhs = join_to_sigma7(&j_acted, 1.0).unwrap();

            let o2 = g.o2.matrix();
            let rhs_rep = bullet_act(&o2, q, &join_to_sigma7(&j, 1.0).unwrap().rep).unwrap();
            let rhs = Sigma7Point::new(rhs_rep).unwrap();
            let (d, _) = orbit_distance(&lhs, &rhs);
            assert!(d < 1e-7, "equivariance defect {d:.3e}");
        }
    }

    #[test]
    fn interior_points_leave_both_strata() {
        let j = JoinPoint::new(Complex64::new(1.0, 0.0), beta(0.4), 0.7).unwrap();
        let x = join_to_sigma7(&j, 1.0).unwrap();
        assert!(!in_sigma5(&x));
    }

    #[test]
    fn contracts() {
        let b = beta(0.4);
        assert!(JoinPoint::new(Complex64::new(2.0, 0.0), b.clone(), 0.3).is_err());
        assert!(JoinPoint::new(Complex64::new(1.0, 0.0), b.clone(), 2.0).is_err());
        let j = JoinPoint::new(Complex64::new(1.0, 0.0), b, 0.3).unwrap();
        assert!(join_to_sigma7(&j, 0.5).is_err());
    }
}
