use super::actions::orbit_distance;
use super::element::{sp2_basis, QMat2, Sigma7Point, SpElement};
use super::isotropy::BulletElement;
use super::sampling;
use crate::numerics::golden_min;
use nalgebra::{DMatrix, DVector};
use rand::Rng;

/// 16 real components of the orbit-aligned fixedness defect of psi at a.
fn residual_vector(psi: &BulletElement, a: &SpElement) -> DVector<f64> {
    let moved = crate::sp2::actions::bullet_act(&psi.o2, psi.q, a).expect("group element");
    let x = Sigma7Point { rep: moved };
    let y = Sigma7Point { rep: *a };
    let (_, q) = orbit_distance(&x, &y);
    let aligned = crate::sp2::actions::star_act(q, &moved).expect("unit quaternion");
    let diff = aligned.sub(a);
    let mut v = DVector::zeros(16);
    let mut idx = 0;
    for i in 0..2 {
        for j in 0..2 {
            let q = diff.e[i][j];
            v[idx] = q.w;
            v[idx + 1] = q.x;
            v[idx + 2] = q.y;
            v[idx + 3] = q.z;
            idx += 4;
        }
    }
    v
}

fn retract(a: &SpElement, basis: &[QMat2], delta: &DVector<f64>) -> SpElement {
    let mut step = QMat2::zero();
    for (k, b) in basis.iter().enumerate() {
        step = step.add(&b.scale(delta[k]));
    }
    a.mul(&QMat2::identity().add(&step)).orthonormalized()
}

/// Gauss-Newton search for a fixed point of the induced isometry on the
/// orbit space, starting from a random element. Returns the converged point
/// when the fixedness defect drops below 1e-9.
pub fn find_fixed_point<R: Rng>(
    psi: &BulletElement,
    rng: &mut R,
    max_iters: usize,
) -> Option<Sigma7Point> {
    let basis = sp2_basis();
    let mut a = sampling::random_sp2(rng);
    let mut lambda = 1e-6;
    let h = 1e-6;
    for _ in 0..max_iters {
        let r = residual_vector(psi, &a);
        let rn = r.norm();
        if rn < 1e-9 {
            return Some(Sigma7Point { rep: a });
        }
        let mut jac = DMatrix::zeros(16, 10);
        for k in 0..10 {
            let mut delta = DVector::zeros(10);
            delta[k] = h;
            let rp = residual_vector(psi, &retract(&a, &basis, &delta));
            jac.set_column(k, &((rp - &r) / h));
        }
        let jt = jac.transpose();
        let mut normal = &jt * &jac;
        for d in 0..10 {
            normal[(d, d)] += lambda;
        }
        let rhs = -(&jt * &r);
        let Some(step) = normal.lu().solve(&rhs) else {
            return None;
        };
        let candidate = retract(&a, &basis, &step);
        if residual_vector(psi, &candidate).norm() < rn {
            a = candidate;
            lambda = (lambda * 0.3).max(1e-12);
        } else {
            lambda *= 10.0;
            if lambda > 1e6 {
                return None;
            }
        }
    }
    let r = residual_vector(psi, &a).norm();
    (r < 1e-9).then_some(Sigma7Point { rep: a })
}

/// Residual of membership in the image of U(2): minimum over the alignment
/// circle of the off-complex parts of a star-aligned representative.
///
/// Entries of U(2) inside Sp(2) are complex (they commute with i). The star
/// action leaves a one-parameter family of candidate alignments once the
/// dominant second-column entry is made complex; the minimum over that circle
/// is zero exactly on the orbit of U(2).
pub fn u2_membership_residual(x: &Sigma7Point) -> f64 {
    let e = &x.rep.e;
    let dom = if e[0][1].norm_sqr() >= e[1][1].norm_sqr() {
        e[0][1]
    } else {
        e[1][1]
    };
    let base = dom.conj().scale(1.0 / dom.norm());
    let off_complex = |q: &crate::algebra::quaternion::Quaternion| q.y * q.y + q.z * q.z;
    let f = |phi: f64| {
        let q = crate::algebra::quaternion::Quaternion::exp_imag([phi, 0.0, 0.0]) * base;
        let aligned = crate::sp2::actions::star_act(q.normalized(), &x.rep).expect("unit");
        let mut total = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                total += off_complex(&aligned.e[i][j]);
            }
        }
        total
    };
    let n = 256;
    let mut best = (0usize, f64::INFINITY);
    for k in 0..n {
        let phi = k as f64 / n as f64 * std::f64::consts::TAU;
        let v = f(phi);
        if v < best.1 {
            best = (k, v);
        }
    }
    let center = best.0 as f64 / n as f64 * std::f64::consts::TAU;
    let half = std::f64::consts::TAU / n as f64;
    let (_, v) = golden_min(f, center - half, center + half, 60);
    v.min(best.1).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quaternion::{Quaternion, I};
    use crate::sp2::membership::in_sigma5;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const ID2: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, 1.0]];
    const NEG2: [[f64; 2]; 2] = [[-1.0, 0.0], [0.0, -1.0]];

    #[test]
    fn u2_points_pass_membership() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            // random U(2) element: complex entries, orthonormalized
            let c = |rng: &mut ChaCha8Rng| {
                Quaternion::new(
                    rand::Rng::gen_range(rng, -1.0..1.0),
                    rand::Rng::gen_range(rng, -1.0..1.0),
                    0.0,
                    0.0,
                )
            };
            let m = QMat2::new([[c(&mut rng), c(&mut rng)], [c(&mut rng), c(&mut rng)]])
                .orthonormalized();
            let q = sampling::random_unit_quaternion(&mut rng);
            let rep = crate::sp2::actions::star_act(q, &m).unwrap();
            let r = u2_membership_residual(&Sigma7Point { rep });
            assert!(r < 1e-8, "residual {r:.3e}");
        }
        // a generic point fails
        let a = sampling::random_sp2(&mut rng);
        assert!(u2_membership_residual(&Sigma7Point { rep: a }) > 1e-3);
    }

    #[test]
    fn fixed_points_of_type_iii_lie_in_u2_image() {
        // psi = (1, +-i): fixed points lie in the image of U(2).
        let psi = BulletElement::new(ID2, I);
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let mut found = 0;
        for _ in 0..20 {
            if let Some(x) = find_fixed_point(&psi, &mut rng, 80) {
                found += 1;
                let r = u2_membership_residual(&x);
                assert!(r < 1e-6, "fixed point not in U(2) image, residual {r:.3e}");
            }
        }
        assert!(found >= 3, "fixed-point search found only {found} points");
    }

    #[test]
    fn fixed_points_of_type_i_lie_in_sigma5() {
        // psi = (-1, +-i) has no fixed wiedersehen points; its fixed set is
        // inside the 5-sphere.
        let psi = BulletElement::new(NEG2, I);
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let mut found = 0;
        for _ in 0..20 {
            if let Some(x) = find_fixed_point(&psi, &mut rng, 80) {
                found += 1;
                assert!(in_sigma5(&x), "fixed point of (-1, i) escaped the 5-sphere");
            }
        }
        assert!(found >= 3, "fixed-point search found only {found} points");
    }
}
