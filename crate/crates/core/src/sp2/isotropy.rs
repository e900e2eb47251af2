use super::actions::{bullet_act, orbit_distance};
use super::element::Sigma7Point;
use super::lift::alpha_tilde;
use super::sampling;
use crate::algebra::quaternion::{Quaternion, I, J, K, ONE};
use rand::Rng;

/// An isometry (B, +-q) in O(2) x SO(3) acting through the bullet action.
#[derive(Clone, Copy, Debug)]
pub struct BulletElement {
    pub o2: [[f64; 2]; 2],
    pub q: Quaternion,
}

impl BulletElement {
    pub fn new(o2: [[f64; 2]; 2], q: Quaternion) -> Self {
        BulletElement { o2, q }
    }

    /// Residual of fixing the given orbit point.
    pub fn fix_residual(&self, x: &Sigma7Point) -> f64 {
        let moved = bullet_act(&self.o2, self.q, &x.rep).expect("valid group element");
        orbit_distance(&Sigma7Point { rep: moved }, x).0
    }
}

const ID2: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, 1.0]];
const NEG2: [[f64; 2]; 2] = [[-1.0, 0.0], [0.0, -1.0]];
const REFL: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, -1.0]];
const REFL_NEG: [[f64; 2]; 2] = [[-1.0, 0.0], [0.0, 1.0]];

/// The principal isotropy group along the normal geodesic: four elements
/// isomorphic to Z_2 x Z_2.
pub fn principal_isotropy() -> Vec<BulletElement> {
    vec![
        BulletElement::new(ID2, ONE),
        BulletElement::new(NEG2, I),
        BulletElement::new(REFL, J),
        BulletElement::new(REFL_NEG, K),
    ]
}

fn exp_j(tau: f64) -> Quaternion {
    Quaternion::exp_imag([0.0, tau, 0.0])
}

/// Sampled elements of the singular isotropy group at s = 0
/// (Z_2 x O(2), four one-parameter branches).
pub fn singular_isotropy_minus(taus: &[f64]) -> Vec<BulletElement> {
    let mut out = Vec::new();
    for &tau in taus {
        out.push(BulletElement::new(ID2, exp_j(tau)));
        out.push(BulletElement::new(NEG2, I * exp_j(tau)));
        out.push(BulletElement::new(REFL, exp_j(tau)));
        out.push(BulletElement::new(REFL_NEG, I * exp_j(tau)));
    }
    out
}

/// Sampled elements of the singular isotropy group at s = pi/4
/// (an O(2): the rotation family (D(theta), +-e^{-3 i theta / 2}) and its
/// reflected coset).
pub fn singular_isotropy_plus(thetas: &[f64]) -> Vec<BulletElement> {
    let mut out = Vec::new();
    for &theta in thetas {
        let d = sampling::rotation2(theta);
        let q = Quaternion::exp_imag([-1.5 * theta, 0.0, 0.0]);
        out.push(BulletElement::new(d, q));
        let dr = [[d[0][0], -d[0][1]], [d[1][0], -d[1][1]]];
        out.push(BulletElement::new(dr, q * J));
    }
    out
}

/// Report of the isotropy verification along the normal geodesic.
pub struct IsotropyReport {
    pub worst_fix: f64,
    pub smallest_move: f64,
}

/// Verifies the isotropy tables: listed elements fix their geodesic point,
/// random other elements move it.
pub fn verify_isotropy<R: Rng>(s_generic: f64, rng: &mut R, random_samples: usize) -> IsotropyReport {
    let mut worst_fix: f64 = 0.0;
    let x_generic = Sigma7Point {
        rep: alpha_tilde(s_generic),
    };
    for g in principal_isotropy() {
        worst_fix = worst_fix.max(g.fix_residual(&x_generic));
    }
    let taus: Vec<f64> = (0..8).map(|k| 0.11 + 0.77 * k as f64).collect();
    let x0 = Sigma7Point {
        rep: alpha_tilde(0.0),
    };
    for g in singular_isotropy_minus(&taus) {
        worst_fix = worst_fix.max(g.fix_residual(&x0));
    }
    let xq = Sigma7Point {
        rep: alpha_tilde(std::f64::consts::FRAC_PI_4),
    };
    for g in singular_isotropy_plus(&taus) {
        worst_fix = worst_fix.max(g.fix_residual(&xq));
    }

    let mut smallest_move = f64::INFINITY;
    for _ in 0..random_samples {
        let g = BulletElement::new(
            sampling::random_o2(rng),
            sampling::random_unit_quaternion(rng),
        );
        smallest_move = smallest_move.min(g.fix_residual(&x_generic));
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
    fn isotropy_tables_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let report = verify_isotropy(0.3, &mut rng, 100);
        assert!(report.worst_fix < 1e-12, "worst fix {:.3e}", report.worst_fix);
        assert!(report.smallest_move > 1e-6, "move {:.3e}", report.smallest_move);
    }

    #[test]
    fn k_plus_family_point() {
        // (D(0.7), e^{-1.05 i}) fixes alpha(pi/4).
        let g = &singular_isotropy_plus(&[0.7])[0];
        let x = Sigma7Point {
            rep: alpha_tilde(std::f64::consts::FRAC_PI_4),
        };
        assert!(g.fix_residual(&x) < 1e-13);
    }

    #[test]
    fn k_minus_family_point() {
        let g = BulletElement::new([[-1.0, 0.0], [0.0, -1.0]], I * exp_j(0.7));
        let x = Sigma7Point {
            rep: alpha_tilde(0.0),
        };
        assert!(g.fix_residual(&x) < 1e-13);
    }
}
