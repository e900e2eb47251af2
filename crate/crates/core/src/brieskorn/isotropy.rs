use super::action::{act, BrieskornIsometry, O2Element};
use super::beta::beta;
use super::point::BrieskornPoint;
use crate::sp2::sampling;
use nalgebra::DMatrix;
use rand::Rng;

fn diag3(a: f64, b: f64, c: f64) -> DMatrix<f64> {
    DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![a, b, c]))
}

/// Block rotation diag(1, D(phi)) acting on (z2, z3).
fn block_rot(phi: f64) -> DMatrix<f64> {
    let (s, c) = phi.sin_cos();
    DMatrix::from_row_slice(3, 3, &[1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c])
}

/// Rotation in the (z1, z3)-plane fixing z2, with optional reflection
/// (determinant -1 block).
fn rot13(tau: f64, reflect: bool) -> DMatrix<f64> {
    let (s, c) = tau.sin_cos();
    if reflect {
        DMatrix::from_row_slice(3, 3, &[c, 0.0, s, 0.0, 1.0, 0.0, s, 0.0, -c])
    } else {
        DMatrix::from_row_slice(3, 3, &[c, 0.0, -s, 0.0, 1.0, 0.0, s, 0.0, c])
    }
}

/// The four principal isotropy elements at generic points of the normal
/// geodesic.
pub fn principal_isotropy() -> Vec<BrieskornIsometry> {
    vec![
        BrieskornIsometry::identity(3),
        BrieskornIsometry::new(
            O2Element::rotation(std::f64::consts::PI),
            diag3(1.0, -1.0, -1.0),
        )
        .unwrap(),
        BrieskornIsometry::new(O2Element::reflection(), diag3(-1.0, 1.0, -1.0)).unwrap(),
        BrieskornIsometry::new(
            O2Element {
                theta: std::f64::consts::PI,
                reflect: true,
            },
            diag3(-1.0, -1.0, 1.0),
        )
        .unwrap(),
    ]
}

/// Sampled elements of the singular isotropy at beta(0), a Z_2 x O(2): the
/// first axis is fixed or reversed while the (z1, z3)-plane rotates.
pub fn singular_isotropy_minus(taus: &[f64]) -> Vec<BrieskornIsometry> {
    let mut out = Vec::new();
    for &tau in taus {
        out.push(BrieskornIsometry::new(O2Element::identity(), rot13(tau, false)).unwrap());
        out.push(
            BrieskornIsometry::new(O2Element::rotation(std::f64::consts::PI), {
                let mut m = rot13(tau, true);
                m[(1, 1)] = -1.0;
                m
            })
            .unwrap(),
        );
        out.push(BrieskornIsometry::new(O2Element::reflection(), rot13(tau, false)).unwrap());
        out.push(
            BrieskornIsometry::new(
                O2Element {
                    theta: std::f64::consts::PI,
                    reflect: true,
                },
                {
                    let mut m = rot13(tau, true);
                    m[(1, 1)] = -1.0;
                    m
                },
            )
            .unwrap(),
        );
    }
    out
}

/// Sampled elements of the singular isotropy at beta(pi/4), an O(2).
///
/// The rotation family pairs D(theta) with diag(1, D(3 theta)): the action
/// multiplies z by e^{3 i theta} and the singular-orbit point has
/// (z2, z3) proportional to (1, i), an eigenvector of D(phi) with eigenvalue
/// e^{-i phi}, so the phases cancel exactly for phi = 3 theta.
pub fn singular_isotropy_plus(thetas: &[f64]) -> Vec<BrieskornIsometry> {
    let mut out = Vec::new();
    for &theta in thetas {
        out.push(
            BrieskornIsometry::new(O2Element::rotation(theta), block_rot(3.0 * theta)).unwrap(),
        );
        out.push(
            BrieskornIsometry::new(
                O2Element {
                    theta,
                    reflect: true,
                },
                block_rot(3.0 * theta) * diag3(-1.0, 1.0, -1.0),
            )
            .unwrap(),
        );
    }
    out
}

/// Report of the isotropy verification along the normal geodesic.
pub struct IsotropyReport {
    pub worst_fix: f64,
    pub smallest_move: f64,
}

pub fn fix_residual(g: &BrieskornIsometry, p: &BrieskornPoint) -> f64 {
    act(g, p).expect("on-manifold input").dist(p)
}

/// Listed isotropy elements fix their geodesic points; random group elements
/// move them.
pub fn verify_isotropy<R: Rng>(s_generic: f64, rng: &mut R, random_samples: usize) -> IsotropyReport {
    let mut worst_fix: f64 = 0.0;
    let p_generic = beta(s_generic);
    for g in principal_isotropy() {
        worst_fix = worst_fix.max(fix_residual(&g, &p_generic));
    }
    let taus: Vec<f64> = (0..8).map(|k| 0.13 + 0.79 * k as f64).collect();
    let p0 = beta(0.0);
    for g in singular_isotropy_minus(&taus) {
        worst_fix = worst_fix.max(fix_residual(&g, &p0));
    }
    let pq = beta(std::f64::consts::FRAC_PI_4);
    for g in singular_isotropy_plus(&taus) {
        worst_fix = worst_fix.max(fix_residual(&g, &pq));
    }

    let mut smallest_move = f64::INFINITY;
    for _ in 0..random_samples {
        let q = sampling::random_unit_quaternion(rng);
        let m = q.rotation_matrix();
        let g = BrieskornIsometry::new(
            O2Element {
                theta: rng.gen_range(0.0..std::f64::consts::TAU),
                reflect: rng.gen_bool(0.5),
            },
            DMatrix::from_fn(3, 3, |i, j| m[i][j]),
        )
        .unwrap();
        smallest_move = smallest_move.min(fix_residual(&g, &p_generic));
    }
    IsotropyReport {
        worst_fix,
        smallest_move,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn principal_elements_fix_generic_points() {
        for g in principal_isotropy() {
            for s in [0.3, 0.9, 1.35] {
                assert!(fix_residual(&g, &beta(s)) < 1e-12);
            }
        }
    }

    #[test]
    fn first_nontrivial_element_fixes() {
        let g = &principal_isotropy()[1];
        assert!(fix_residual(g, &beta(0.3)) < 1e-15);
    }

    #[test]
    fn k_plus_family_fixes_quarter_point() {
        let gs = singular_isotropy_plus(&[0.7]);
        let p = beta(std::f64::consts::FRAC_PI_4);
        for g in &gs {
            assert!(fix_residual(g, &p) < 1e-12);
        }
        // the same family does not fix generic points
        assert!(fix_residual(&gs[0], &beta(0.3)) > 1e-3);
    }

    #[test]
    fn isotropy_tables_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        let r = verify_isotropy(0.3, &mut rng, 100);
        assert!(r.worst_fix < 1e-12, "worst fix {:.3e}", r.worst_fix);
        assert!(r.smallest_move > 1e-3, "move {:.3e}", r.smallest_move);
    }
}
