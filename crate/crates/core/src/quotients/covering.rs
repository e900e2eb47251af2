use crate::brieskorn::point::BrieskornPoint;
use crate::error::{contract, domain, Result};
use num_complex::Complex64;

/// Which quadratic coordinates the branched covering keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoveringVariant {
    /// Forget z0 (the cubic variable): a 3:1 covering branched over z0 = 0.
    Standard,
    /// Forget z1 instead: a 2:1 covering branched over z1 = 0, used when the
    /// cyclic order is odd.
    Alternate,
}

/// The branched covering W^5_3 -> S^5.
///
/// The unnormalized image is (sqrt 2 z1, z2 + i z3, z3 + i z2) (standard) or
/// (sqrt 2 z0, z2 + i z3, z3 + i z2) (alternate); the normalization divides
/// by the actual Euclidean norm, which never vanishes on the sphere.
pub fn phi(p: &BrieskornPoint, variant: CoveringVariant) -> Result<[Complex64; 3]> {
    if p.n() != 3 {
        return Err(contract("the covering is defined on the 5-sphere model".to_string()));
    }
    if p.on_manifold_residual() > crate::tolerances::ON_MANIFOLD {
        return Err(contract("input point off the Brieskorn sphere".to_string()));
    }
    let first = match variant {
        CoveringVariant::Standard => p.z[0],
        CoveringVariant::Alternate => p.z0,
    };
    let i = Complex64::i();
    let v = [
        2.0_f64.sqrt() * first,
        p.z[1] + i * p.z[2],
        p.z[2] + i * p.z[1],
    ];
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    debug_assert!(norm > 1e-3, "covering image norm degenerate: {norm}");
    Ok([v[0] / norm, v[1] / norm, v[2] / norm])
}

fn unit_c3(v: &[Complex64; 3]) -> f64 {
    (v.iter().map(|z| z.norm_sqr()).sum::<f64>() - 1.0).abs()
}

/// Number of covering preimages of a unit target vector: the quadratic
/// coordinates are reconstructed from the direction and the forgotten
/// variable is recovered from the cubic (standard: three cube roots;
/// alternate: two square roots), collapsing on the branch locus.
pub fn fiber_count(target: &[Complex64; 3], variant: CoveringVariant) -> Result<usize> {
    if unit_c3(target) > 1e-9 {
        return Err(contract("target must be a unit vector".to_string()));
    }
    // invert the linear part: z2 = (v2 - i v3)/2, z3 = (v3 - i v2)/2
    let i = Complex64::i();
    let first_dir = target[0] / 2.0_f64.sqrt();
    let z2_dir = (target[1] - i * target[2]) / 2.0;
    let z3_dir = (target[2] - i * target[1]) / 2.0;

    let points = match variant {
        CoveringVariant::Standard => {
            // scale s > 0 for z = s (z1, z2, z3)-direction; solve
            // r^3 = (9/8) |A| s(r)^2 with s^2 = (4/9 - (4/3) r^2) / |zdir|^2.
            let dir_norm2 =
                first_dir.norm_sqr() + z2_dir.norm_sqr() + z3_dir.norm_sqr();
            let a_quad = first_dir * first_dir + z2_dir * z2_dir + z3_dir * z3_dir;
            let s2_of = |r: f64| (4.0 / 9.0 - 4.0 / 3.0 * r * r) / dir_norm2;
            let f = |r: f64| r * r * r - 9.0 / 8.0 * a_quad.norm() * s2_of(r);
            let mut lo = 0.0;
            let mut hi = 0.5;
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if f(mid) < 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let r = 0.5 * (lo + hi);
            let s = s2_of(r).max(0.0).sqrt();
            let zs = [first_dir * s, z2_dir * s, z3_dir * s];
            let cube = -9.0 / 8.0 * (zs[0] * zs[0] + zs[1] * zs[1] + zs[2] * zs[2]);
            if cube.norm() < 1e-9 {
                vec![BrieskornPoint::new_unchecked(Complex64::new(0.0, 0.0), zs.to_vec())]
            } else {
                let root = cube.powf(1.0 / 3.0);
                (0..3)
                    .map(|j| {
                        let omega =
                            Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / 3.0);
                        BrieskornPoint::new_unchecked(root * omega, zs.to_vec())
                    })
                    .collect()
            }
        }
        CoveringVariant::Alternate => {
            // scale s > 0 for (z0, z2, z3) = s * direction; z1^2 is then
            // forced by the cubic and |z1|^2 by the sphere equation.
            let dir0 = first_dir;
            let dir_q2 = z2_dir.norm_sqr() + z3_dir.norm_sqr();
            let c_of = |s: f64| {
                -(8.0 / 9.0) * (dir0 * s).powu(3) - s * s * (z2_dir * z2_dir + z3_dir * z3_dir)
            };
            let g = |s: f64| {
                4.0 / 9.0 - 4.0 / 3.0 * s * s * dir0.norm_sqr() - s * s * dir_q2
                    - c_of(s).norm()
            };
            let mut lo = 0.0;
            let mut hi = 1.0;
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if g(mid) > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let s = 0.5 * (lo + hi);
            let c = c_of(s);
            let z0 = dir0 * s;
            let (z2, z3) = (z2_dir * s, z3_dir * s);
            if c.norm() < 1e-9 {
                vec![BrieskornPoint::new_unchecked(
                    z0,
                    vec![Complex64::new(0.0, 0.0), z2, z3],
                )]
            } else {
                let root = c.sqrt();
                vec![
                    BrieskornPoint::new_unchecked(z0, vec![root, z2, z3]),
                    BrieskornPoint::new_unchecked(z0, vec![-root, z2, z3]),
                ]
            }
        }
    };

    // Validate the reconstruction: every candidate is on the sphere and maps
    // back to the target.
    for pt in &points {
        if pt.on_manifold_residual() > 1e-8 {
            return Err(domain("target is not in the image of the covering".to_string()));
        }
        let img = phi(pt, variant)?;
        let mut dist = 0.0;
        for k in 0..3 {
            dist += (img[k] - target[k]).norm_sqr();
        }
        if dist.sqrt() > 1e-7 {
            return Err(domain("target is not in the image of the covering".to_string()));
        }
    }
    Ok(points.len())
}

/// The join-coordinate power map of degree r on S^5 = S^1 * S^3 inside C^3:
/// the S^1 phase of the first coordinate is raised to the r-th power.
pub fn rho(r: u32, v: &[Complex64; 3]) -> [Complex64; 3] {
    let ct = v[0].norm();
    if ct < 1e-300 {
        return *v;
    }
    let lambda = v[0] / ct;
    [lambda.powu(r) * ct, v[1], v[2]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brieskorn::action::deck_rotate;
    use crate::brieskorn::beta::beta;
    use crate::quotients::freeness::LensActionParams;
    use std::f64::consts::{FRAC_PI_4, TAU};

    #[test]
    fn singular_orbit_image() {
        // beta(pi/4) maps to (0, 0, i) after normalization.
        let img = phi(&beta(FRAC_PI_4), CoveringVariant::Standard).unwrap();
        assert!(img[0].norm() < 1e-14);
        assert!(img[1].norm() < 1e-14);
        assert!((img[2] - Complex64::i()).norm() < 1e-14);
    }

    #[test]
    fn image_is_unit() {
        for k in 0..32 {
            let p = beta(0.2 + 0.17 * k as f64);
            for variant in [CoveringVariant::Standard, CoveringVariant::Alternate] {
                let img = phi(&p, variant).unwrap();
                assert!(unit_c3(&img) < 1e-13);
            }
        }
    }

    #[test]
    fn weight_equivariance() {
        let mut worst: f64 = 0.0;
        for (m, p, q) in [(7i64, 1i64, 0i64), (7, 1, 1), (5, 2, 1), (11, 3, -2)] {
            let params = LensActionParams::new(m, p, q).unwrap();
            let g = params.generator();
            for k in 0..16 {
                let pt = beta(0.1 + 0.19 * k as f64);
                let lhs = phi(&crate::brieskorn::action::act(&g, &pt).unwrap(), CoveringVariant::Standard)
                    .unwrap();
                let rhs = phi(&pt, CoveringVariant::Standard).unwrap();
                let weights = [3 * p, 3 * p + q, 3 * p - q];
                for (j, &wt) in weights.iter().enumerate() {
                    let phase = Complex64::from_polar(1.0, TAU * wt as f64 / m as f64);
                    worst = worst.max((lhs[j] - phase * rhs[j]).norm());
                }
            }
        }
        assert!(worst < 1e-12, "weight equivariance residual {worst:.3e}");
    }

    #[test]
    fn alternate_weight_equivariance() {
        // forgetting z1 instead, the first coordinate carries weight 2p.
        let params = LensActionParams::new(7, 2, 3).unwrap();
        let g = params.generator();
        let pt = beta(0.7);
        let lhs = phi(&crate::brieskorn::action::act(&g, &pt).unwrap(), CoveringVariant::Alternate)
            .unwrap();
        let rhs = phi(&pt, CoveringVariant::Alternate).unwrap();
        let weights = [2 * 2, 3 * 2 + 3, 3 * 2 - 3];
        for (j, &wt) in weights.iter().enumerate() {
            let phase = Complex64::from_polar(1.0, TAU * wt as f64 / 7.0);
            assert!((lhs[j] - phase * rhs[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn deck_invariance_is_exact() {
        for k in 0..16 {
            let pt = beta(0.1 + 0.19 * k as f64);
            let a = phi(&pt, CoveringVariant::Standard).unwrap();
            let b = phi(&deck_rotate(&pt), CoveringVariant::Standard).unwrap();
            for j in 0..3 {
                assert_eq!(a[j], b[j]);
            }
        }
    }

    #[test]
    fn fiber_counts() {
        // branch locus: z0 = 0
        let branch = phi(&beta(FRAC_PI_4), CoveringVariant::Standard).unwrap();
        assert_eq!(fiber_count(&branch, CoveringVariant::Standard).unwrap(), 1);
        // generic: three preimages
        let generic = phi(&beta(0.3), CoveringVariant::Standard).unwrap();
        assert_eq!(fiber_count(&generic, CoveringVariant::Standard).unwrap(), 3);
        // alternate covering: two preimages generically, one where z1 = 0
        let generic_alt = {
            // move beta off the z1 = 0 plane with a rotation
            let q = crate::algebra::quaternion::Quaternion::new(0.9, 0.1, 0.3, -0.27)
                .normalized();
            let m = q.rotation_matrix();
            let g = crate::brieskorn::action::BrieskornIsometry::new(
                crate::brieskorn::action::O2Element::rotation(0.4),
                nalgebra::DMatrix::from_fn(3, 3, |i, j| m[i][j]),
            )
            .unwrap();
            crate::brieskorn::action::act(&g, &beta(0.3)).unwrap()
        };
        let img_alt = phi(&generic_alt, CoveringVariant::Alternate).unwrap();
        assert_eq!(fiber_count(&img_alt, CoveringVariant::Alternate).unwrap(), 2);
        let img_branch_alt = phi(&beta(0.3), CoveringVariant::Alternate).unwrap();
        assert_eq!(
            fiber_count(&img_branch_alt, CoveringVariant::Alternate).unwrap(),
            1
        );
        // the covering is onto, so even the fixed-axis direction has a fiber
        let axis = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        assert_eq!(fiber_count(&axis, CoveringVariant::Standard).unwrap(), 3);
        // non-unit targets are rejected
        let bad = [
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        assert!(fiber_count(&bad, CoveringVariant::Standard).is_err());
    }

    #[test]
    fn deck_rotation_permutes_fibers() {
        let pt = beta(0.3);
        let img = phi(&pt, CoveringVariant::Standard).unwrap();
        let rotated = deck_rotate(&pt);
        let twice = deck_rotate(&rotated);
        // the three preimages are exactly the deck orbit
        assert_eq!(fiber_count(&img, CoveringVariant::Standard).unwrap(), 3);
        assert!(pt.dist(&rotated) > 0.1 && pt.dist(&twice) > 0.1);
        assert!(phi(&rotated, CoveringVariant::Standard).unwrap()[0].im == img[0].im);
    }

    #[test]
    fn rho_properties() {
        let v = phi(&beta(0.3), CoveringVariant::Standard).unwrap();
        // degree one is the identity
        let w = rho(1, &v);
        for j in 0..3 {
            assert!((w[j] - v[j]).norm() < 1e-15);
        }
        // join endpoint is fixed for all degrees
        let endpoint = [
            Complex64::new(0.0, 0.0),
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
        ];
        for r in [1u32, 2, 5] {
            let img = rho(r, &endpoint);
            for j in 0..3 {
                assert!((img[j] - endpoint[j]).norm() < 1e-15);
            }
        }
        // phase equivariance: rotating the first coordinate by alpha rotates
        // the image's first coordinate by r alpha.
        let alpha = 0.37;
        let mut rotated = v;
        rotated[0] *= Complex64::from_polar(1.0, alpha);
        let lhs = rho(4, &rotated);
        let rhs = {
            let base = rho(4, &v);
            [
                base[0] * Complex64::from_polar(1.0, 4.0 * alpha),
                base[1],
                base[2],
            ]
        };
        for j in 0..3 {
            assert!((lhs[j] - rhs[j]).norm() < 1e-13);
        }
    }
}
