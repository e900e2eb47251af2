use crate::algebra::imvec::ImVec;
use crate::error::{contract, Result};
use crate::tolerances;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// A point of the Brieskorn sphere W^{2n-1}_3 with the modified coefficients:
/// (8/9) z0^3 + sum z_k^2 = 0 and (4/3)|z0|^2 + sum |z_k|^2 = 4/9.
#[derive(Clone, Debug, PartialEq)]
pub struct BrieskornPoint {
    pub z0: Complex64,
    pub z: Vec<Complex64>,
}

impl BrieskornPoint {
    pub fn new(z0: Complex64, z: Vec<Complex64>) -> Result<Self> {
        let p = BrieskornPoint { z0, z };
        let (rc, rs) = p.residuals();
        if rc > tolerances::ON_MANIFOLD || rs > tolerances::ON_MANIFOLD {
            return Err(contract(format!(
                "point is off the Brieskorn sphere: cubic {rc:.3e}, sphere {rs:.3e}"
            )));
        }
        Ok(p)
    }

    pub fn new_unchecked(z0: Complex64, z: Vec<Complex64>) -> Self {
        BrieskornPoint { z0, z }
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    /// (|cubic residual|, |sphere residual|).
    pub fn residuals(&self) -> (f64, f64) {
        let cubic: Complex64 = self.z0.powu(3) * (8.0 / 9.0)
            + self.z.iter().map(|z| z * z).sum::<Complex64>();
        let sphere = 4.0 / 3.0 * self.z0.norm_sqr()
            + self.z.iter().map(|z| z.norm_sqr()).sum::<f64>()
            - 4.0 / 9.0;
        (cubic.norm(), sphere.abs())
    }

    pub fn on_manifold_residual(&self) -> f64 {
        let (a, b) = self.residuals();
        a.max(b)
    }

    /// Ambient real coordinates (x0, y0, x_1..x_n, y_1..y_n).
    pub fn ambient(&self) -> DVector<f64> {
        let n = self.n();
        let mut v = DVector::zeros(2 + 2 * n);
        v[0] = self.z0.re;
        v[1] = self.z0.im;
        for k in 0..n {
            v[2 + k] = self.z[k].re;
            v[2 + n + k] = self.z[k].im;
        }
        v
    }

    pub fn from_ambient(v: &DVector<f64>) -> Self {
        let n = (v.len() - 2) / 2;
        let z0 = Complex64::new(v[0], v[1]);
        let z = (0..n)
            .map(|k| Complex64::new(v[2 + k], v[2 + n + k]))
            .collect();
        BrieskornPoint { z0, z }
    }

    pub fn dist(&self, other: &BrieskornPoint) -> f64 {
        let mut d = (self.z0 - other.z0).norm_sqr();
        for (a, b) in self.z.iter().zip(&other.z) {
            d += (a - b).norm_sqr();
        }
        d.sqrt()
    }

    /// The orbit-space disc coordinate 2 z0; |2 z0| <= 1 on the sphere with
    /// the boundary attained exactly on the singular orbit family.
    pub fn disc_projection(&self) -> Complex64 {
        2.0 * self.z0
    }
}

/// The same point in the real form (x0, y0, x, y) with z0 = x0 + i y0 and
/// z = x + i y, subject to the three real defining equations.
#[derive(Clone, Debug, PartialEq)]
pub struct BrieskornRealForm {
    pub x0: f64,
    pub y0: f64,
    pub x: ImVec,
    pub y: ImVec,
}

impl BrieskornRealForm {
    pub fn new(x0: f64, y0: f64, x: ImVec, y: ImVec) -> Self {
        BrieskornRealForm { x0, y0, x, y }
    }

    pub fn n(&self) -> usize {
        self.x.dim()
    }

    /// Residuals of the three real defining equations.
    pub fn residuals(&self) -> [f64; 3] {
        let (x0, y0) = (self.x0, self.y0);
        let r1 = self.x.norm_sqr()
            - 2.0 / 9.0
                * (1.0 - 2.0 * x0.powi(3) + 6.0 * x0 * y0 * y0 - 3.0 * x0 * x0 - 3.0 * y0 * y0);
        let r2 = self.y.norm_sqr()
            - 2.0 / 9.0
                * (1.0 + 2.0 * x0.powi(3) - 6.0 * x0 * y0 * y0 - 3.0 * x0 * x0 - 3.0 * y0 * y0);
        let r3 = self.x.dot(&self.y) - 4.0 / 9.0 * y0 * (y0 * y0 - 3.0 * x0 * x0);
        [r1.abs(), r2.abs(), r3.abs()]
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals().iter().cloned().fold(0.0, f64::max)
    }

    pub fn to_point(&self) -> BrieskornPoint {
        let n = self.n();
        let z = (0..n)
            .map(|k| Complex64::new(self.x.c[k], self.y.c[k]))
            .collect();
        BrieskornPoint::new_unchecked(Complex64::new(self.x0, self.y0), z)
    }

    pub fn from_point(p: &BrieskornPoint) -> Self {
        let x = ImVec::new(p.z.iter().map(|z| z.re).collect());
        let y = ImVec::new(p.z.iter().map(|z| z.im).collect());
        BrieskornRealForm::new(p.z0.re, p.z0.im, x, y)
    }

    pub fn dist(&self, other: &BrieskornRealForm) -> f64 {
        ((self.x0 - other.x0).powi(2)
            + (self.y0 - other.y0).powi(2)
            + self.x.sub(&other.x).norm_sqr()
            + self.y.sub(&other.y).norm_sqr())
        .sqrt()
    }
}

/// Jacobian of the three real constraint functions at an ambient point.
pub fn constraint_jacobian(p: &BrieskornPoint) -> DMatrix<f64> {
    let n = p.n();
    let dim = 2 + 2 * n;
    let mut jac = DMatrix::zeros(3, dim);
    let (x0, y0) = (p.z0.re, p.z0.im);
    // F1 = (8/9) Re z0^3 + sum (x_k^2 - y_k^2)
    jac[(0, 0)] = 8.0 / 9.0 * 3.0 * (x0 * x0 - y0 * y0);
    jac[(0, 1)] = 8.0 / 9.0 * (-6.0 * x0 * y0);
    // F2 = (8/9) Im z0^3 + 2 <x, y>
    jac[(1, 0)] = 8.0 / 9.0 * 6.0 * x0 * y0;
    jac[(1, 1)] = 8.0 / 9.0 * 3.0 * (x0 * x0 - y0 * y0);
    // F3 = (4/3)|z0|^2 + |z|^2 - 4/9
    jac[(2, 0)] = 8.0 / 3.0 * x0;
    jac[(2, 1)] = 8.0 / 3.0 * y0;
    for k in 0..n {
        let (xk, yk) = (p.z[k].re, p.z[k].im);
        jac[(0, 2 + k)] = 2.0 * xk;
        jac[(0, 2 + n + k)] = -2.0 * yk;
        jac[(1, 2 + k)] = 2.0 * yk;
        jac[(1, 2 + n + k)] = 2.0 * xk;
        jac[(2, 2 + k)] = 2.0 * xk;
        jac[(2, 2 + n + k)] = 2.0 * yk;
    }
    jac
}

/// Projects an ambient vector onto the tangent space of the Brieskorn sphere
/// at p (the kernel of the constraint Jacobian).
pub fn project_tangent(p: &BrieskornPoint, v: &DVector<f64>) -> DVector<f64> {
    let jac = constraint_jacobian(p);
    let gram = &jac * jac.transpose();
    let rhs = &jac * v;
    let coeffs = gram.lu().solve(&rhs).expect("constraint gradients independent");
    v - jac.transpose() * coeffs
}

/// The Killing fields of the O(2) x SO(n) action at p: the rotation
/// generator (2 i z0, 3 i z) and the so(n) generators (0, E_{ab} z).
pub fn killing_fields(p: &BrieskornPoint) -> Vec<DVector<f64>> {
    let n = p.n();
    let dim = 2 + 2 * n;
    let mut fields = Vec::new();
    let mut k_theta = DVector::zeros(dim);
    let t0 = 2.0 * Complex64::i() * p.z0;
    k_theta[0] = t0.re;
    k_theta[1] = t0.im;
    for k in 0..n {
        let t = 3.0 * Complex64::i() * p.z[k];
        k_theta[2 + k] = t.re;
        k_theta[2 + n + k] = t.im;
    }
    fields.push(k_theta);
    for a in 0..n {
        for b in (a + 1)..n {
            let mut f = DVector::zeros(dim);
            // E_ab z: z_a -> -z_b, z_b -> z_a
            let za = p.z[a];
            let zb = p.z[b];
            f[2 + a] = -zb.re;
            f[2 + n + a] = -zb.im;
            f[2 + b] = za.re;
            f[2 + n + b] = za.im;
            fields.push(f);
        }
    }
    fields
}
