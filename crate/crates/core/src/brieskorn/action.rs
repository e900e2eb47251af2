use super::point::BrieskornPoint;
use crate::error::{contract, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// An element of O(2): the rotation D(theta), composed with the reflection
/// diag(1, -1) first when `reflect` is set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct O2Element {
    pub theta: f64,
    pub reflect: bool,
}

impl O2Element {
    pub fn rotation(theta: f64) -> Self {
        O2Element { theta, reflect: false }
    }

    pub fn reflection() -> Self {
        O2Element { theta: 0.0, reflect: true }
    }

    pub fn identity() -> Self {
        O2Element::rotation(0.0)
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        let (s, c) = self.theta.sin_cos();
        if self.reflect {
            [[c, s], [s, -c]]
        } else {
            [[c, -s], [s, c]]
        }
    }

    pub fn compose(&self, other: &O2Element) -> O2Element {
        let theta = if self.reflect { self.theta - other.theta } else { self.theta + other.theta };
        O2Element {
            theta,
            reflect: self.reflect ^ other.reflect,
        }
    }
}

/// An isometry (B, A) of W^{2n-1}_3 with B in O(2) and A an orthogonal
/// rotation part (SO(3) from a unit quaternion for n = 3, a G2 matrix for
/// n = 7).
#[derive(Clone, Debug)]
pub struct BrieskornIsometry {
    pub o2: O2Element,
    pub rot: DMatrix<f64>,
}

impl BrieskornIsometry {
    pub fn new(o2: O2Element, rot: DMatrix<f64>) -> Result<Self> {
        let n = rot.nrows();
        let r = (rot.transpose() * &rot - DMatrix::identity(n, n)).norm();
        if r > 1e-12 {
            return Err(contract(format!("rotation part not orthogonal, residual {r:.3e}")));
        }
        Ok(BrieskornIsometry { o2, rot })
    }

    pub fn identity(n: usize) -> Self {
        BrieskornIsometry {
            o2: O2Element::identity(),
            rot: DMatrix::identity(n, n),
        }
    }

    pub fn compose(&self, other: &BrieskornIsometry) -> BrieskornIsometry {
        BrieskornIsometry {
            o2: self.o2.compose(&other.o2),
            rot: &self.rot * &other.rot,
        }
    }
}

fn apply_rot(rot: &DMatrix<f64>, z: &[Complex64]) -> Vec<Complex64> {
    let n = z.len();
    (0..n)
        .map(|i| {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                acc += rot[(i, j)] * z[j];
            }
            acc
        })
        .collect()
}

/// The action: D(theta) sends (z0, z) to (e^{2 i theta} z0, e^{3 i theta} A z),
/// the reflection sends it to (conj z0, A conj z).
pub fn act(g: &BrieskornIsometry, p: &BrieskornPoint) -> Result<BrieskornPoint> {
    if p.on_manifold_residual() > crate::tolerances::ON_MANIFOLD {
        return Err(contract("input point off the Brieskorn sphere".to_string()));
    }
    if g.rot.nrows() != p.n() {
        return Err(contract("rotation part has wrong dimension".to_string()));
    }
    let (z0, z) = if g.o2.reflect {
        (p.z0.conj(), p.z.iter().map(|z| z.conj()).collect::<Vec<_>>())
    } else {
        (p.z0, p.z.clone())
    };
    let phase2 = Complex64::from_polar(1.0, 2.0 * g.o2.theta);
    let phase3 = Complex64::from_polar(1.0, 3.0 * g.o2.theta);
    let mut z = apply_rot(&g.rot, &z);
    for zk in z.iter_mut() {
        *zk *= phase3;
    }
    Ok(BrieskornPoint::new_unchecked(phase2 * z0, z))
}

/// The deck rotation z0 -> e^{2 pi i / 3} z0 of the cubic; a manifold
/// automorphism that the branched covering ignores.
pub fn deck_rotate(p: &BrieskornPoint) -> BrieskornPoint {
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    BrieskornPoint::new_unchecked(omega * p.z0, p.z.clone())
}
