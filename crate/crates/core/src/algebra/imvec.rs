use super::hyper::Hyper;
use super::octonion::Octonion;
use super::quaternion::Quaternion;
use crate::error::{contract, Result};

/// A real vector regarded as an imaginary quaternion (n = 3) or imaginary
/// octonion (n = 7). Other lengths are allowed for the operations that do not
/// need a cross product.
#[derive(Clone, Debug, PartialEq)]
pub struct ImVec {
    pub c: Vec<f64>,
}

impl ImVec {
    pub fn new(c: Vec<f64>) -> Self {
        ImVec { c }
    }

    pub fn zeros(n: usize) -> Self {
        ImVec { c: vec![0.0; n] }
    }

    pub fn dim(&self) -> usize {
        self.c.len()
    }

    pub fn dot(&self, other: &ImVec) -> f64 {
        self.c.iter().zip(&other.c).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> ImVec {
        ImVec::new(self.c.iter().map(|a| a * s).collect())
    }

    pub fn add(&self, other: &ImVec) -> ImVec {
        ImVec::new(self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ImVec) -> ImVec {
        ImVec::new(self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect())
    }

    /// Embeds into the ambient normed algebra with zero scalar part.
    pub fn embed(&self) -> Hyper {
        match self.dim() {
            3 => Hyper::Q(Quaternion::from_imag([self.c[0], self.c[1], self.c[2]])),
            7 => {
                let mut v = [0.0; 7];
                v.copy_from_slice(&self.c);
                Hyper::O(Octonion::from_imag(v))
            }
            d => panic!("no normed algebra embedding in dimension {d}"),
        }
    }
}

/// Cross product Im(a b) of two imaginary quaternions or octonions.
///
/// Bilinear and antisymmetric; perpendicular to both factors and
/// |a x b|^2 = |a|^2 |b|^2 - <a, b>^2.
pub fn cross(a: &ImVec, b: &ImVec) -> Result<ImVec> {
    if a.dim() != b.dim() {
        return Err(contract(format!(
            "cross product needs equal dimensions, got {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    match a.dim() {
        3 | 7 => Ok((a.embed() * b.embed()).imag_vec()),
        d => Err(contract(format!("cross product undefined in dimension {d}"))),
    }
}

/// Spherical exponential cos(t|p|) + (p/|p|) sin(t|p|), with the p = 0 limit 1.
pub fn sphere_exp(p: &ImVec, t: f64) -> Hyper {
    match p.dim() {
        3 => Hyper::Q(Quaternion::exp_imag([
            p.c[0] * t,
            p.c[1] * t,
            p.c[2] * t,
        ])),
        7 => {
            let mut v = [0.0; 7];
            for i in 0..7 {
                v[i] = p.c[i] * t;
            }
            Hyper::O(Octonion::exp_imag(v))
        }
        d => panic!("sphere_exp undefined in dimension {d}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_ij_is_k() {
        let i = ImVec::new(vec![1.0, 0.0, 0.0]);
        let j = ImVec::new(vec![0.0, 1.0, 0.0]);
        let k = cross(&i, &j).unwrap();
        assert_eq!(k.c, vec![0.0, 0.0, 1.0]);
    }

    #[test]
    fn cross_self_vanishes() {
        let a = ImVec::new(vec![0.3, -0.8, 0.17, 0.4, 1.2, -0.5, 0.9]);
        let c = cross(&a, &a).unwrap();
        assert!(c.norm() < 1e-15);
    }

    #[test]
    fn cross_dimension_mismatch() {
        let a = ImVec::new(vec![1.0, 0.0, 0.0]);
        let b = ImVec::zeros(7);
        assert!(cross(&a, &b).is_err());
        assert!(cross(&ImVec::zeros(5), &ImVec::zeros(5)).is_err());
    }

    #[test]
    fn sphere_exp_unit_and_limits() {
        let p = ImVec::new(vec![0.0, 1.0, 0.0]);
        let q = sphere_exp(&p, std::f64::consts::FRAC_PI_2);
        // cos(pi/2) + j sin(pi/2) = j
        let v = q.imag_vec();
        assert!(q.re().abs() < 1e-15 && (v.c[1] - 1.0).abs() < 1e-15);
        let zero = ImVec::zeros(3);
        assert_eq!(sphere_exp(&zero, 2.0).re(), 1.0);
    }
}
