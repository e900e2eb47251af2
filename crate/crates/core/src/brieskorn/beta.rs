use super::point::{killing_fields, project_tangent, BrieskornPoint};
use nalgebra::DVector;
use num_complex::Complex64;

/// The unit-speed normal geodesic of W^5_3:
/// beta(s) = (-cos(2s)/2, (0, (3 cos s - cos 3s)/6, i (3 sin s + sin 3s)/6)).
pub fn beta(s: f64) -> BrieskornPoint {
    let z0 = Complex64::new(-0.5 * (2.0 * s).cos(), 0.0);
    let z2 = Complex64::new((3.0 * s.cos() - (3.0 * s).cos()) / 6.0, 0.0);
    let z3 = Complex64::new(0.0, (3.0 * s.sin() + (3.0 * s).sin()) / 6.0);
    BrieskornPoint::new_unchecked(z0, vec![Complex64::new(0.0, 0.0), z2, z3])
}

/// Analytic velocity of the normal geodesic in ambient coordinates.
pub fn beta_prime(s: f64) -> DVector<f64> {
    let mut v = DVector::zeros(8);
    v[0] = (2.0 * s).sin();
    // z2' = (sin 3s - sin s)/2 (real), z3' = i (cos s + cos 3s)/2
    v[3] = ((3.0 * s).sin() - s.sin()) / 2.0;
    v[7] = (s.cos() + (3.0 * s).cos()) / 2.0;
    v
}

/// Geodesic and orbit-perpendicularity certificates along beta.
pub struct BetaReport {
    /// Norm of the tangential part of the ambient second derivative.
    pub tangential_acc: f64,
    /// Maximum inner product of the velocity with the action Killing fields.
    pub orbit_perp: f64,
    /// | |beta'| - 1 |.
    pub speed_defect: f64,
}

/// Second differences in the ambient space projected to the tangent space;
/// a vanishing tangential part certifies the geodesic property of the
/// induced metric.
pub fn beta_geodesic_residual(s: f64) -> BetaReport {
    beta_curve_residual(&beta, s)
}

/// The same certificate for an arbitrary curve on the Brieskorn sphere.
pub fn beta_curve_residual(curve: &impl Fn(f64) -> BrieskornPoint, s: f64) -> BetaReport {
    let h = 1e-3;
    let amb = |t: f64| curve(t).ambient();
    let two = amb(s).scale(2.0);
    let acc_h = (amb(s + h) + amb(s - h) - &two) / (h * h);
    let acc_h2 = (amb(s + h / 2.0) + amb(s - h / 2.0) - &two) / (h * h / 4.0);
    let acc = (acc_h2 * 4.0 - acc_h) / 3.0;
    let p = curve(s);
    let tangential = project_tangent(&p, &acc);

    let vel_h = (amb(s + h) - amb(s - h)) / (2.0 * h);
    let vel_h2 = (amb(s + h / 2.0) - amb(s - h / 2.0)) / h;
    let vel = (vel_h2 * 4.0 - vel_h) / 3.0;
    let orbit_perp = killing_fields(&p)
        .iter()
        .map(|k| k.dot(&vel).abs())
        .fold(0.0, f64::max);
    BetaReport {
        tangential_acc: tangential.norm(),
        orbit_perp,
        speed_defect: (vel.norm() - 1.0).abs(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn special_values() {
        let b0 = beta(0.0);
        assert!((b0.z0.re + 0.5).abs() < 1e-15);
        assert!((b0.z[1].re - 1.0 / 3.0).abs() < 1e-15);
        assert!(b0.z[0].norm() < 1e-15 && b0.z[2].norm() < 1e-15);

        let bq = beta(FRAC_PI_4);
        assert!(bq.z0.norm() < 1e-15);
        assert!((bq.z[1].re - 2.0_f64.sqrt() / 3.0).abs() < 1e-15);
        assert!((bq.z[2].im - 2.0_f64.sqrt() / 3.0).abs() < 1e-15);
        assert!(bq.on_manifold_residual() < 1e-15);
    }

    #[test]
    fn on_manifold_and_unit_speed() {
        for k in 0..64 {
            let s = -1.5 + 0.11 * k as f64;
            let b = beta(s);
            assert!(b.on_manifold_residual() < 1e-14);
            let v = beta_prime(s);
            assert!((v.norm() - 1.0).abs() < 1e-14);
            // analytic velocity matches the finite difference
            let h = 1e-5;
            let fd = (beta(s + h).ambient() - beta(s - h).ambient()) / (2.0 * h);
            assert!((fd - v).norm() < 1e-9);
        }
    }

    #[test]
    fn geodesic_certificate() {
        for k in 0..64 {
            let s = -1.0 + 0.09 * k as f64;
            let r = beta_geodesic_residual(s);
            assert!(r.tangential_acc < 1e-5, "tangential {:.3e} at s={s}", r.tangential_acc);
            assert!(r.orbit_perp < 1e-8, "orbit perp {:.3e} at s={s}", r.orbit_perp);
            assert!(r.speed_defect < 1e-9);
        }
    }

    #[test]
    fn reparametrized_curve_fails() {
        // beta(s^2) is not affinely parametrized, so the tangential second
        // derivative is large.
        let curve = |s: f64| beta(s * s);
        let r = beta_curve_residual(&curve, 0.8);
        assert!(r.tangential_acc > 1e-2);
    }

    #[test]
    fn fixed_point_structure() {
        // beta lies in Im z0 = 0, z1 = 0, Im z2 = 0, Re z3 = 0 exactly.
        for k in 0..32 {
            let b = beta(0.21 * k as f64);
            assert_eq!(b.z0.im, 0.0);
            assert_eq!(b.z[0], Complex64::new(0.0, 0.0));
            assert_eq!(b.z[1].im, 0.0);
            assert_eq!(b.z[2].re, 0.0);
        }
    }

    #[test]
    fn disc_projection_values() {
        assert!((beta(0.0).disc_projection() + Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(beta(FRAC_PI_4).disc_projection().norm() < 1e-15);
        assert!((beta(FRAC_PI_2).disc_projection() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }
}
