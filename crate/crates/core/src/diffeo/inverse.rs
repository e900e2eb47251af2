use super::maps::{coefficient_rows, PsiVariant};
use super::sphere_pair::SpherePair;
use crate::algebra::imvec::{cross, ImVec};
use crate::brieskorn::point::BrieskornRealForm;
use crate::error::{contract, Error, Result};
use crate::tolerances;
use nalgebra::Matrix3;

/// The 3x3 matrix expressing (x, y, x cross y) in the frame (p, w, p cross w).
///
/// The first two rows are the map's coefficient rows; the third follows from
/// bilinearity of the cross product and the two reduction identities
/// (p x w) x p = |p|^2 w - <p,w> p and (p x w) x w = <p,w> w - |w|^2 p,
/// which hold in dimensions 3 and 7 alike.
pub fn coefficient_matrix(variant: PsiVariant, x0: f64, y0: f64) -> Matrix3<f64> {
    let big_p = (1.0 - 2.0 * x0) / 2.0;
    let big_w = 1.0 - big_p;
    let s = -y0;
    let rows = coefficient_rows(variant, big_p, s);
    let [m11, m12, m13] = rows[0];
    let [m21, m22, m23] = rows[1];
    let a = m11 * m23 - m13 * m21;
    let b = m12 * m23 - m13 * m22;
    let r31 = s * a + big_w * b;
    let r32 = -(big_p * a + s * b);
    let r33 = m11 * m22 - m12 * m21;
    Matrix3::new(m11, m12, m13, m21, m22, m23, r31, r32, r33)
}

/// The certified lower bound 256 / (9 (3 - 2 x0)^8) for the determinant of
/// the rational coefficient matrix on the closed disc.
pub fn det_lower_bound(x0: f64) -> f64 {
    256.0 / (9.0 * (3.0 - 2.0 * x0).powi(8))
}

fn invert(variant: PsiVariant, b: &BrieskornRealForm, check_bound: bool) -> Result<SpherePair> {
    if b.max_residual() > tolerances::ON_MANIFOLD {
        return Err(contract(format!(
            "input is off the Brieskorn sphere, residual {:.3e}",
            b.max_residual()
        )));
    }
    let n = b.n();
    if n != 3 && n != 7 {
        return Err(contract(format!("inverse needs n = 3 or 7, got {n}")));
    }
    let m = coefficient_matrix(variant, b.x0, b.y0);
    let det = m.determinant();
    if check_bound && det < det_lower_bound(b.x0) - tolerances::DET_BOUND_SLACK {
        return Err(Error::Numerical(format!(
            "coefficient determinant {det:.6e} fell below the certified bound {:.6e}",
            det_lower_bound(b.x0)
        )));
    }
    let inv = m
        .try_inverse()
        .ok_or_else(|| Error::Numerical("coefficient matrix is singular".to_string()))?;
    let xy = cross(&b.x, &b.y)?;
    let data = [&b.x, &b.y, &xy];
    let mut p = ImVec::zeros(n);
    let mut w = ImVec::zeros(n);
    for k in 0..n {
        let col = nalgebra::Vector3::new(data[0].c[k], data[1].c[k], data[2].c[k]);
        let sol = inv * col;
        p.c[k] = sol[0];
        w.c[k] = sol[1];
    }
    Ok(SpherePair::new_unchecked(p, w).normalized())
}

/// Inverse of the rational diffeomorphism, with the determinant certificate.
pub fn psi_inverse(b: &BrieskornRealForm) -> Result<SpherePair> {
    invert(PsiVariant::Rational, b, true)
}

/// Inverse of the trigonometric variant (no determinant certificate is
/// stated for it; the matrix stays invertible on the disc).
pub fn psi_trig_inverse(b: &BrieskornRealForm) -> Result<SpherePair> {
    invert(PsiVariant::Trig, b, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffeo::maps::{psi, psi_trig};
    use crate::sp2::sampling;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sample_pair(rng: &mut ChaCha8Rng, n: usize) -> SpherePair {
        let (p, w) = sampling::random_sphere_pair(rng, n);
        SpherePair::new(p, w).unwrap()
    }

    #[test]
    fn round_trip_both_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(80);
        for &n in &[3usize, 7] {
            for _ in 0..1000 {
                let pair = sample_pair(&mut rng, n);
                let b = psi(&pair);
                let back = psi_inverse(&b).unwrap();
                assert!(pair.dist(&back) < 1e-9, "round trip {:.3e}", pair.dist(&back));
            }
        }
    }

    #[test]
    fn trig_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(81);
        for &n in &[3usize, 7] {
            for _ in 0..500 {
                let pair = sample_pair(&mut rng, n);
                let b = psi_trig(&pair);
                let back = psi_trig_inverse(&b).unwrap();
                assert!(pair.dist(&back) < 1e-9, "round trip {:.3e}", pair.dist(&back));
            }
        }
    }

    #[test]
    fn determinant_respects_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(82);
        for _ in 0..10_000 {
            let pair = sample_pair(&mut rng, 3);
            let b = psi(&pair);
            let det = coefficient_matrix(PsiVariant::Rational, b.x0, b.y0).determinant();
            assert!(det >= det_lower_bound(b.x0) - 1e-9, "det {det:.6e} below bound");
        }
    }

    #[test]
    fn bound_is_attained_at_the_pole() {
        // At (0, w) the determinant equals the bound 1/9 exactly.
        let det = coefficient_matrix(PsiVariant::Rational, 0.5, 0.0).determinant();
        assert!((det - det_lower_bound(0.5)).abs() < 1e-14);
        assert!((det - 1.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn boundary_round_trip() {
        // p parallel to w: the frame degenerates but the matrix does not.
        let mut rng = ChaCha8Rng::seed_from_u64(83);
        for _ in 0..200 {
            let p = sampling::random_unit_imvec(&mut rng, 3);
            let lambda: f64 = rng.gen_range(-2.0..2.0);
            let scale = (1.0 + lambda * lambda).sqrt();
            let pair = SpherePair::new(p.scale(1.0 / scale), p.scale(lambda / scale)).unwrap();
            let b = psi(&pair);
            let back = psi_inverse(&b).unwrap();
            assert!(pair.dist(&back) < 1e-8, "boundary round trip {:.3e}", pair.dist(&back));
        }
    }

    #[test]
    fn near_boundary_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(84);
        for _ in 0..200 {
            let p = sampling::random_unit_imvec(&mut rng, 3);
            let lambda: f64 = rng.gen_range(-1.0..1.0);
            let eps = sampling::random_imvec(&mut rng, 3).scale(1e-5);
            let w = p.scale(lambda).add(&eps);
            let norm = (p.norm_sqr() + w.norm_sqr()).sqrt();
            let pair = SpherePair::new(p.scale(1.0 / norm), w.scale(1.0 / norm)).unwrap();
            let b = psi(&pair);
            let back = psi_inverse(&b).unwrap();
            assert!(pair.dist(&back) < 1e-8);
        }
    }

    #[test]
    fn off_manifold_rejected() {
        let b = BrieskornRealForm::new(0.2, 0.1, ImVec::zeros(3), ImVec::zeros(3));
        assert!(psi_inverse(&b).is_err());
    }
}
