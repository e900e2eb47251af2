use super::sphere_pair::SpherePair;
use crate::algebra::imvec::{cross, ImVec};
use crate::algebra::trig::{
    one_plus_cos_quotient, rational_trig_quotient, safe_trig_quotients, sin_pi_quotient,
};
use crate::brieskorn::point::BrieskornRealForm;
use crate::error::{domain, Result};
use nalgebra::DMatrix;
use std::f64::consts::PI;

/// Which of the two diffeomorphisms S^{2n-1} -> W^{2n-1}_3 to evaluate.
///
/// The rational map and the trigonometric map are isotopic equivariant
/// diffeomorphisms but are not pointwise equal; the trigonometric one is the
/// geodesic parametrization and is the one conjugating the nonlinear sphere
/// action to the linear Brieskorn action.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PsiVariant {
    Rational,
    Trig,
}

/// The coefficient rows of x and y in the frame (p, w, p x w), as functions
/// of P = |p|^2 and S = <p, w>.
pub(crate) fn coefficient_rows(variant: PsiVariant, big_p: f64, s: f64) -> [[f64; 3]; 2] {
    let p = big_p;
    match variant {
        PsiVariant::Rational => {
            let den = 3.0 * (1.0 + p) * (1.0 + p);
            let m11 = ((3.0 - 2.0 * p) * (1.0 + p) * (1.0 + p) - 4.0 * (1.0 - p) * s * s) / den;
            let m12 = -2.0 * (3.0 + 8.0 * p + p * p - 4.0 * s * s) * s / den;
            let m13 = -8.0 * p * s / den;
            let m21 = 2.0 * (1.0 - p) * (1.0 + 3.0 * p) * s / den;
            let m22 =
                (-(1.0 + 2.0 * p) * (1.0 - 6.0 * p + p * p) - 4.0 * (1.0 + 3.0 * p) * s * s) / den;
            let m23 = -4.0 * (1.0 + 2.0 * p) * (1.0 - p) / den;
            [[m11, m12, m13], [m21, m22, m23]]
        }
        PsiVariant::Trig => {
            let w = 1.0 - p;
            let r = p.max(0.0).sqrt().min(1.0);
            let (f1, f2) = safe_trig_quotients(r).expect("r in [0,1]");
            let h1 = one_plus_cos_quotient(r);
            let g = rational_trig_quotient(r);
            let cos_pi_r = (PI * r).cos();
            let spq = sin_pi_quotient(r);
            let m11 = (3.0 - 2.0 * p - 2.0 * h1 * s * s) / 3.0;
            let m12 = -2.0 * (3.0 + p * h1 - 4.0 * f2 * f2 * s * s) * s / 3.0;
            let m13 = -4.0 * p * f1 * f2 * s / 3.0;
            let m21 = -g * w * s / 3.0;
            let m22 = (-(1.0 + 2.0 * p) * cos_pi_r + 2.0 * g * s * s) / 3.0;
            let m23 = -(1.0 + 2.0 * p) * spq / 3.0;
            [[m11, m12, m13], [m21, m22, m23]]
        }
    }
}

fn assemble(variant: PsiVariant, pair: &SpherePair) -> BrieskornRealForm {
    let big_p = pair.p.norm_sqr();
    let big_w = pair.w.norm_sqr();
    let s = pair.p.dot(&pair.w);
    let c = cross(&pair.p, &pair.w).expect("cross-product dimension");
    let rows = coefficient_rows(variant, big_p, s);
    let combine = |row: &[f64; 3]| {
        pair.p
            .scale(row[0])
            .add(&pair.w.scale(row[1]))
            .add(&c.scale(row[2]))
    };
    BrieskornRealForm::new(
        0.5 * (big_w - big_p),
        -s,
        combine(&rows[0]),
        combine(&rows[1]),
    )
}

/// The rational equivariant diffeomorphism S^{2n-1} -> W^{2n-1}_3, n = 3, 7.
pub fn psi(pair: &SpherePair) -> BrieskornRealForm {
    assemble(PsiVariant::Rational, pair)
}

/// The trigonometric (geodesic) variant of the diffeomorphism.
pub fn psi_trig(pair: &SpherePair) -> BrieskornRealForm {
    assemble(PsiVariant::Trig, pair)
}

/// The injective map on {w != 0}, valid in every dimension n >= 2:
/// -3x = (P + 3W - 4 S^2/W) p + 2 P (S/W) w, 3y = -(3P + W) w + 6 S p.
pub fn partial_injective(pair: &SpherePair) -> Result<BrieskornRealForm> {
    let big_w = pair.w.norm_sqr();
    if big_w.sqrt() < 1e-9 {
        return Err(domain("partial map undefined at w = 0".to_string()));
    }
    let big_p = pair.p.norm_sqr();
    let s = pair.p.dot(&pair.w);
    let x = pair
        .p
        .scale(big_p + 3.0 * big_w - 4.0 * s * s / big_w)
        .add(&pair.w.scale(2.0 * big_p * s / big_w))
        .scale(-1.0 / 3.0);
    let y = pair
        .w
        .scale(-(3.0 * big_p + big_w))
        .add(&pair.p.scale(6.0 * s))
        .scale(1.0 / 3.0);
    Ok(BrieskornRealForm::new(0.5 * (big_w - big_p), -s, x, y))
}

/// Residual of the orthogonal complement of span{p, w, p x w} in (x, y);
/// both output vectors must lie in the span.
pub fn span_residual(pair: &SpherePair, b: &BrieskornRealForm) -> f64 {
    let c = cross(&pair.p, &pair.w).expect("cross-product dimension");
    let frame = [&pair.p, &pair.w, &c];
    let project_out = |v: &ImVec| -> f64 {
        // Solve the Gram system to project v onto the span, then measure the
        // complement. Degenerate frames fall back to a pseudo-solution.
        let mut gram = DMatrix::zeros(3, 3);
        let mut rhs = nalgebra::DVector::zeros(3);
        for i in 0..3 {
            rhs[i] = frame[i].dot(v);
            for j in 0..3 {
                gram[(i, j)] = frame[i].dot(frame[j]);
            }
        }
        let svd = gram.svd(true, true);
        let coeffs = svd.solve(&rhs, 1e-12).expect("svd solve");
        let mut res = v.clone();
        for i in 0..3 {
            res = res.sub(&frame[i].scale(coeffs[i]));
        }
        res.norm()
    };
    project_out(&b.x).max(project_out(&b.y))
}

/// Equivariance defect of the chosen map under a rotation g acting
/// diagonally upstairs and on the (x, y)-part downstairs.
pub fn equivariance_residual(
    variant: PsiVariant,
    g: &DMatrix<f64>,
    pair: &SpherePair,
) -> f64 {
    let apply = |v: &ImVec| -> ImVec {
        let n = v.dim();
        ImVec::new(
            (0..n)
                .map(|i| (0..n).map(|j| g[(i, j)] * v.c[j]).sum())
                .collect(),
        )
    };
    let rotated = SpherePair::new_unchecked(apply(&pair.p), apply(&pair.w));
    let lhs = assemble(variant, &rotated);
    let base = assemble(variant, pair);
    let rhs = BrieskornRealForm::new(base.x0, base.y0, apply(&base.x), apply(&base.y));
    lhs.dist(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sp2::sampling;
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sample_pair(rng: &mut ChaCha8Rng, n: usize) -> SpherePair {
        let (p, w) = sampling::random_sphere_pair(rng, n);
        SpherePair::new(p, w).unwrap()
    }

    #[test]
    fn pole_values() {
        // (0, w): (1/2, 0, 0, -w/3); (p, 0): (-1/2, 0, p/3, 0).
        let w = ImVec::new(vec![0.0, 0.0, 1.0]);
        let pair = SpherePair::new(ImVec::zeros(3), w.clone()).unwrap();
        let b = psi(&pair);
        assert!((b.x0 - 0.5).abs() < 1e-15 && b.y0.abs() < 1e-15);
        assert!(b.x.norm() < 1e-15);
        assert!(b.y.sub(&w.scale(-1.0 / 3.0)).norm() < 1e-15);

        let p = ImVec::new(vec![0.0, 1.0, 0.0]);
        let pair = SpherePair::new(p.clone(), ImVec::zeros(3)).unwrap();
        let b = psi(&pair);
        assert!((b.x0 + 0.5).abs() < 1e-15);
        assert!(b.x.sub(&p.scale(1.0 / 3.0)).norm() < 1e-15);
        assert!(b.y.norm() < 1e-15);

        // trig variant agrees at both poles
        let bt = psi_trig(&pair);
        assert!(bt.dist(&b) < 1e-14);
    }

    #[test]
    fn rational_residuals_both_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(70);
        for &n in &[3usize, 7] {
            for _ in 0..2000 {
                let pair = sample_pair(&mut rng, n);
                let b = psi(&pair);
                assert!(b.max_residual() < 1e-12, "residual {:.3e}", b.max_residual());
            }
        }
    }

    #[test]
    fn trig_residuals_both_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for &n in &[3usize, 7] {
            for _ in 0..1000 {
                let pair = sample_pair(&mut rng, n);
                let b = psi_trig(&pair);
                assert!(b.max_residual() < 1e-11, "residual {:.3e}", b.max_residual());
            }
        }
    }

    #[test]
    fn disc_coordinate_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(72);
        for _ in 0..100 {
            let pair = sample_pair(&mut rng, 3);
            let b = psi(&pair);
            let z0 = b.to_point().disc_projection();
            let expect = Complex64::new(
                pair.w.norm_sqr() - pair.p.norm_sqr(),
                -2.0 * pair.p.dot(&pair.w),
            );
            assert!((z0 - expect).norm() < 1e-13);
        }
    }

    #[test]
    fn boundary_maps_to_circle() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for _ in 0..50 {
            let p = sampling::random_unit_imvec(&mut rng, 3);
            let lambda: f64 = rand::Rng::gen_range(&mut rng, -1.0..1.0);
            let scale = (1.0 + lambda * lambda).sqrt();
            let pair = SpherePair::new(p.scale(1.0 / scale), p.scale(lambda / scale)).unwrap();
            let b = psi(&pair);
            assert!((b.to_point().disc_projection().norm() - 1.0).abs() < 1e-12);
            // interior points map to the open disc
            let generic = sample_pair(&mut rng, 3);
            let bg = psi(&generic);
            assert!(bg.to_point().disc_projection().norm() < 1.0 - 1e-6);
        }
    }

    #[test]
    fn outputs_lie_in_frame_span() {
        let mut rng = ChaCha8Rng::seed_from_u64(74);
        for &n in &[3usize, 7] {
            for _ in 0..200 {
                let pair = sample_pair(&mut rng, n);
                let b = psi(&pair);
                assert!(span_residual(&pair, &b) < 1e-12);
            }
        }
    }

    #[test]
    fn partial_map_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(75);
        // residuals in a dimension with no cross product
        for _ in 0..500 {
            let pair = sample_pair(&mut rng, 5);
            let b = partial_injective(&pair).unwrap();
            assert!(b.max_residual() < 1e-11, "residual {:.3e}", b.max_residual());
        }
        // w = 0 rejected
        let p = sampling::random_unit_imvec(&mut rng, 5);
        assert!(partial_injective(&SpherePair::new_unchecked(p, ImVec::zeros(5))).is_err());
        // (0, w) matches the full map
        let w = ImVec::new(vec![0.0, 0.0, 1.0]);
        let pair = SpherePair::new(ImVec::zeros(3), w.clone()).unwrap();
        let b = partial_injective(&pair).unwrap();
        assert!(b.y.sub(&w.scale(-1.0 / 3.0)).norm() < 1e-15 && b.x.norm() < 1e-15);
    }

    #[test]
    fn partial_map_injective_by_hashing() {
        use std::collections::HashMap;
        let mut rng = ChaCha8Rng::seed_from_u64(76);
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        for idx in 0..10_000 {
            let pair = sample_pair(&mut rng, 5);
            if pair.w.norm() < 1e-6 {
                continue;
            }
            let b = partial_injective(&pair).unwrap();
            let mut key: Vec<i64> = vec![(b.x0 / 1e-8).round() as i64, (b.y0 / 1e-8).round() as i64];
            key.extend(b.x.c.iter().map(|v| (v / 1e-8).round() as i64));
            key.extend(b.y.c.iter().map(|v| (v / 1e-8).round() as i64));
            if let Some(prev) = seen.insert(key, idx) {
                panic!("collision between samples {prev} and {idx}");
            }
        }
    }

    #[test]
    fn so3_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..1000 {
            let q = sampling::random_unit_quaternion(&mut rng);
            let m = q.rotation_matrix();
            let g = DMatrix::from_fn(3, 3, |i, j| m[i][j]);
            let pair = sample_pair(&mut rng, 3);
            assert!(equivariance_residual(PsiVariant::Rational, &g, &pair) < 1e-12);
        }
        // identity gives zero exactly
        let pair = sample_pair(&mut rng, 3);
        let id = DMatrix::identity(3, 3);
        assert_eq!(equivariance_residual(PsiVariant::Rational, &id, &pair), 0.0);
    }

    #[test]
    fn g2_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(78);
        for seed in 0..20 {
            let g = crate::brieskorn::g2::g2_sample(seed);
            let pair = sample_pair(&mut rng, 7);
            let r = equivariance_residual(PsiVariant::Rational, &g, &pair);
            assert!(r < 1e-9, "residual {r:.3e}");
            let rt = equivariance_residual(PsiVariant::Trig, &g, &pair);
            assert!(rt < 1e-9, "trig residual {rt:.3e}");
        }
    }

    #[test]
    fn reflection_intertwines_conjugation() {
        // psi(p, -w) = (conj z0, conj z) of psi(p, w) for both variants.
        let mut rng = ChaCha8Rng::seed_from_u64(79);
        for variant in [PsiVariant::Rational, PsiVariant::Trig] {
            for _ in 0..100 {
                let pair = sample_pair(&mut rng, 3);
                let b = assemble(variant, &pair);
                let br = assemble(variant, &pair.reflect());
                let conj = BrieskornRealForm::new(b.x0, -b.y0, b.x.clone(), b.y.scale(-1.0));
                assert!(br.dist(&conj) < 1e-13);
            }
        }
    }
}
