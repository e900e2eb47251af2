use crate::algebra::quaternion::{self, Quaternion};
use crate::error::{contract, Result};
use crate::tolerances;

/// A 2x2 quaternionic matrix.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct QMat2 {
    pub e: [[Quaternion; 2]; 2],
}

impl QMat2 {
    pub fn new(e: [[Quaternion; 2]; 2]) -> Self {
        QMat2 { e }
    }

    pub fn zero() -> Self {
        QMat2::new([[Quaternion::ZERO; 2]; 2])
    }

    pub fn identity() -> Self {
        QMat2::diag(quaternion::ONE, quaternion::ONE)
    }

    pub fn diag(a: Quaternion, d: Quaternion) -> Self {
        QMat2::new([[a, Quaternion::ZERO], [Quaternion::ZERO, d]])
    }

    /// [[0, -conj(c)], [c, 0]]; together with the diagonals these span sp(2).
    pub fn offdiag(c: Quaternion) -> Self {
        QMat2::new([[Quaternion::ZERO, -c.conj()], [c, Quaternion::ZERO]])
    }

    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        QMat2::new([
            [Quaternion::scalar(m[0][0]), Quaternion::scalar(m[0][1])],
            [Quaternion::scalar(m[1][0]), Quaternion::scalar(m[1][1])],
        ])
    }

    pub fn mul(&self, r: &QMat2) -> QMat2 {
        let mut out = QMat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] =
                    self.e[i][0] * r.e[0][j] + self.e[i][1] * r.e[1][j];
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> QMat2 {
        QMat2::new([
            [self.e[0][0].conj(), self.e[1][0].conj()],
            [self.e[0][1].conj(), self.e[1][1].conj()],
        ])
    }

    pub fn add(&self, r: &QMat2) -> QMat2 {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = out.e[i][j] + r.e[i][j];
            }
        }
        out
    }

    pub fn sub(&self, r: &QMat2) -> QMat2 {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = out.e[i][j] - r.e[i][j];
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> QMat2 {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = out.e[i][j].scale(s);
            }
        }
        out
    }

    pub fn neg(&self) -> QMat2 {
        self.scale(-1.0)
    }

    /// Left multiplication by a quaternion scalar.
    pub fn scalar_mul_left(&self, q: Quaternion) -> QMat2 {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = q * out.e[i][j];
            }
        }
        out
    }

    /// Right multiplication by diag(d1, d2).
    pub fn mul_diag_right(&self, d1: Quaternion, d2: Quaternion) -> QMat2 {
        QMat2::new([
            [self.e[0][0] * d1, self.e[0][1] * d2],
            [self.e[1][0] * d1, self.e[1][1] * d2],
        ])
    }

    pub fn commutator(&self, r: &QMat2) -> QMat2 {
        self.mul(r).sub(&r.mul(self))
    }

    pub fn frobenius(&self) -> f64 {
        self.e
            .iter()
            .flatten()
            .map(|q| q.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn unitarity_residual(&self) -> f64 {
        self.conj_transpose()
            .mul(self)
            .sub(&QMat2::identity())
            .frobenius()
    }

    /// Residual of the sp(2) shape [[x, -conj(y)], [y, z]] with x, z imaginary.
    pub fn sp2_shape_residual(&self) -> f64 {
        let off = self.e[0][1] + self.e[1][0].conj();
        (self.e[0][0].re().powi(2) + self.e[1][1].re().powi(2) + off.norm_sqr()).sqrt()
    }

    /// Orthonormalizes the columns (right-module Gram-Schmidt); retraction
    /// onto Sp(2) for near-unitary matrices.
    pub fn orthonormalized(&self) -> QMat2 {
        let col = |m: &QMat2, j: usize| [m.e[0][j], m.e[1][j]];
        let c1 = col(self, 0);
        let n1 = (c1[0].norm_sqr() + c1[1].norm_sqr()).sqrt();
        let c1 = [c1[0].scale(1.0 / n1), c1[1].scale(1.0 / n1)];
        let c2 = col(self, 1);
        // <c1, c2> = sum conj(c1_i) c2_i; subtract c1 * <c1, c2> (right action).
        let ip = c1[0].conj() * c2[0] + c1[1].conj() * c2[1];
        let mut c2 = [c2[0] - c1[0] * ip, c2[1] - c1[1] * ip];
        let n2 = (c2[0].norm_sqr() + c2[1].norm_sqr()).sqrt();
        c2 = [c2[0].scale(1.0 / n2), c2[1].scale(1.0 / n2)];
        QMat2::new([[c1[0], c2[0]], [c1[1], c2[1]]])
    }
}

/// An element of Sp(2): a 2x2 quaternionic matrix with orthonormal columns.
pub type SpElement = QMat2;

/// Checks the unitarity invariant of an Sp(2) element.
pub fn check_sp2(a: &SpElement) -> Result<()> {
    let r = a.unitarity_residual();
    if r > tolerances::UNITARITY {
        return Err(contract(format!("matrix is not in Sp(2), residual {r:.3e}")));
    }
    Ok(())
}

/// A tangent vector to Sp(2) in left-trivialized form: the base point and the
/// body A^{-1} A' in the Lie algebra sp(2).
#[derive(Clone, Copy, Debug)]
pub struct Sp2Tangent {
    pub base: SpElement,
    pub body: QMat2,
}

impl Sp2Tangent {
    pub fn new(base: SpElement, body: QMat2) -> Result<Self> {
        let r = body.sp2_shape_residual();
        if r > 1e-9 {
            return Err(contract(format!("body is not in sp(2), residual {r:.3e}")));
        }
        Ok(Sp2Tangent { base, body })
    }
}

/// The parameters (mu, nu) of the left-invariant, Sp(1) x Sp(1) right
/// invariant inner products on sp(2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricParams {
    pub mu: f64,
    pub nu: f64,
}

impl MetricParams {
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        if mu <= 0.0 || nu <= 0.0 {
            return Err(contract(format!("metric parameters must be positive, got ({mu}, {nu})")));
        }
        Ok(MetricParams { mu, nu })
    }

    /// The biinvariant metric.
    pub fn biinvariant() -> Self {
        MetricParams { mu: 0.5, nu: 0.5 }
    }
}

/// Inner product of two sp(2) bodies: Re(mu conj(x1) x2 + conj(y1) y2 +
/// nu conj(z1) z2) for bodies [[x, -conj(y)], [y, z]].
pub fn metric_inner_body(p: MetricParams, u: &QMat2, v: &QMat2) -> f64 {
    let term = |a: Quaternion, b: Quaternion| (a.conj() * b).re();
    p.mu * term(u.e[0][0], v.e[0][0]) + term(u.e[1][0], v.e[1][0]) + p.nu * term(u.e[1][1], v.e[1][1])
}

/// Inner product of two tangent vectors at the same base point.
pub fn metric_inner(p: MetricParams, u: &Sp2Tangent, v: &Sp2Tangent) -> Result<f64> {
    if u.base.sub(&v.base).frobenius() > 1e-9 {
        return Err(contract("tangent vectors have different base points".to_string()));
    }
    Ok(metric_inner_body(p, &u.body, &v.body))
}

/// The fixed orthogonal basis of sp(2): three diagonal pairs and the four
/// off-diagonal generators. Orthogonal under every metric in the family.
pub fn sp2_basis() -> Vec<QMat2> {
    use quaternion::{I, J, K, ONE};
    let mut basis = Vec::with_capacity(10);
    for c in [I, J, K] {
        basis.push(QMat2::diag(c, Quaternion::ZERO));
    }
    for c in [I, J, K] {
        basis.push(QMat2::diag(Quaternion::ZERO, c));
    }
    for c in [ONE, I, J, K] {
        basis.push(QMat2::offdiag(c));
    }
    basis
}

/// A point of the exotic 7-sphere: the star-orbit of the stored
/// representative. Equality of two points is orbit equality, never raw
/// matrix equality.
#[derive(Clone, Copy, Debug)]
pub struct Sigma7Point {
    pub rep: SpElement,
}

impl Sigma7Point {
    pub fn new(rep: SpElement) -> Result<Self> {
        check_sp2(&rep)?;
        Ok(Sigma7Point { rep })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quaternion::{I, J};

    #[test]
    fn identity_is_unitary() {
        assert!(QMat2::identity().unitarity_residual() < 1e-15);
    }

    #[test]
    fn metric_single_term() {
        // u = v = [[i, 0], [0, 0]] under mu = 1/2 gives 1/2.
        let p = MetricParams::biinvariant();
        let body = QMat2::diag(I, Quaternion::ZERO);
        assert!((metric_inner_body(p, &body, &body) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn metric_orthogonality() {
        // u = [[0, -1], [1, 0]], v = [[0, -i], [i, 0]]: Re(conj(1) i) = 0.
        let p = MetricParams::new(0.7, 1.3).unwrap();
        let u = QMat2::offdiag(quaternion::ONE);
        let v = QMat2::offdiag(I);
        assert!(metric_inner_body(p, &u, &v).abs() < 1e-15);
    }

    #[test]
    fn basis_is_orthogonal_for_all_metrics() {
        let basis = sp2_basis();
        for p in [MetricParams::biinvariant(), MetricParams::new(1.7, 0.3).unwrap()] {
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    let ip = metric_inner_body(p, &basis[i], &basis[j]);
                    if i != j {
                        assert!(ip.abs() < 1e-15);
                    } else {
                        assert!(ip > 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn gram_schmidt_retracts() {
        let mut m = QMat2::identity();
        m.e[0][0] = m.e[0][0] + I.scale(0.05);
        m.e[1][0] = m.e[1][0] + J.scale(-0.03);
        let r = m.orthonormalized();
        assert!(r.unitarity_residual() < 1e-14);
    }

    #[test]
    fn base_mismatch_is_contract_violation() {
        let p = MetricParams::biinvariant();
        let body = QMat2::diag(I, Quaternion::ZERO);
        let u = Sp2Tangent::new(QMat2::identity(), body).unwrap();
        let v = Sp2Tangent::new(QMat2::identity().scale(-1.0), body).unwrap();
        assert!(metric_inner(p, &u, &v).is_err());
    }
}
