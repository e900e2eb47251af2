use super::element::Sigma7Point;

const TOL: f64 = 1e-10;

fn imag_norm(q: &crate::algebra::quaternion::Quaternion) -> f64 {
    (q.x * q.x + q.y * q.y + q.z * q.z).sqrt()
}

/// Membership in the 5-sphere: both first-column entries of any orbit
/// representative are imaginary. Real parts of the first column are
/// star-invariant, so the test is orbit-well-defined.
pub fn in_sigma5(x: &Sigma7Point) -> bool {
    x.rep.e[0][0].re().abs() < TOL && x.rep.e[1][0].re().abs() < TOL
}

/// Membership in the bisector through the identity: the top-left entry of
/// the representative is imaginary.
pub fn in_sigma6_pm1(x: &Sigma7Point) -> bool {
    x.rep.e[0][0].re().abs() < TOL
}

/// Membership in the wiedersehen circle: the orbits through O(2) matrices.
///
/// An Sp(2) element lies on such an orbit iff its first column is real;
/// the imaginary parts of the first column have star-invariant norms, and a
/// real first column forces the matrix onto the orbit of an O(2) element.
pub fn in_sigma1(x: &Sigma7Point) -> bool {
    imag_norm(&x.rep.e[0][0]) < TOL && imag_norm(&x.rep.e[1][0]) < TOL
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::imvec::ImVec;
    use crate::algebra::quaternion::Quaternion;
    use crate::sp2::actions::star_act;
    use crate::sp2::element::QMat2;
    use crate::sp2::lift::{alpha_tilde, horizontal_lift};
    use crate::sp2::sampling;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn alpha_lies_in_sigma5() {
        for k in 0..24 {
            let s = k as f64 * 0.27;
            let x = Sigma7Point::new(alpha_tilde(s)).unwrap();
            assert!(in_sigma5(&x));
            assert!(in_sigma6_pm1(&x));
        }
    }

    #[test]
    fn midpoints_lie_in_bisector() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let v: Vec<f64> = (0..7).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            let p = ImVec::new(vec![v[0] / norm, v[1] / norm, v[2] / norm]);
            let w = Quaternion::new(v[3] / norm, v[4] / norm, v[5] / norm, v[6] / norm);
            let g = horizontal_lift(&p, &w, FRAC_PI_2).unwrap();
            let x = Sigma7Point::new(g.orthonormalized()).unwrap();
            assert!(in_sigma6_pm1(&x));
            // invariance along the orbit
            let q = sampling::random_unit_quaternion(&mut rng);
            let moved = Sigma7Point::new(star_act(q, &x.rep).unwrap()).unwrap();
            assert_eq!(in_sigma6_pm1(&x), in_sigma6_pm1(&moved));
            assert_eq!(in_sigma5(&x), in_sigma5(&moved));
        }
    }

    #[test]
    fn identity_in_sigma1() {
        let x = Sigma7Point::new(QMat2::identity()).unwrap();
        assert!(in_sigma1(&x));
        assert!(!in_sigma5(&x));
    }

    #[test]
    fn sigma1_orbit_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let b = sampling::random_o2(&mut rng);
            let q = sampling::random_unit_quaternion(&mut rng);
            let rep = star_act(q, &QMat2::from_real(b)).unwrap();
            assert!(in_sigma1(&Sigma7Point::new(rep).unwrap()));
        }
        // generic points are not on the circle
        for _ in 0..20 {
            let a = sampling::random_sp2(&mut rng);
            let x = Sigma7Point::new(a).unwrap();
            assert!(!in_sigma1(&x));
        }
    }
}
