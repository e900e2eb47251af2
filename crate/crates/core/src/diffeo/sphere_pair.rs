use crate::algebra::imvec::ImVec;
use crate::error::{contract, Result};

/// A point (p, w) of the Euclidean sphere S^{2n-1} in Im x Im coordinates,
/// |p|^2 + |w|^2 = 1, with n = 3 or 7 (general n for the partial maps).
#[derive(Clone, Debug, PartialEq)]
pub struct SpherePair {
    pub p: ImVec,
    pub w: ImVec,
}

impl SpherePair {
    pub fn new(p: ImVec, w: ImVec) -> Result<Self> {
        if p.dim() != w.dim() {
            return Err(contract("p and w must have the same dimension".to_string()));
        }
        let n = p.norm_sqr() + w.norm_sqr();
        if (n - 1.0).abs() > 1e-9 {
            return Err(contract(format!("pair is off the sphere, |p|^2+|w|^2 = {n}")));
        }
        Ok(SpherePair { p, w })
    }

    pub fn new_unchecked(p: ImVec, w: ImVec) -> Self {
        SpherePair { p, w }
    }

    pub fn n(&self) -> usize {
        self.p.dim()
    }

    pub fn sphere_defect(&self) -> f64 {
        (self.p.norm_sqr() + self.w.norm_sqr() - 1.0).abs()
    }

    /// Joint renormalization onto the sphere.
    pub fn normalized(&self) -> SpherePair {
        let n = (self.p.norm_sqr() + self.w.norm_sqr()).sqrt();
        SpherePair {
            p: self.p.scale(1.0 / n),
            w: self.w.scale(1.0 / n),
        }
    }

    /// The linear rotation (p_theta, w_theta) in the (p, w)-plane.
    pub fn rotate(&self, theta: f64) -> SpherePair {
        let (s, c) = theta.sin_cos();
        SpherePair {
            p: self.p.scale(c).sub(&self.w.scale(s)),
            w: self.p.scale(s).add(&self.w.scale(c)),
        }
    }

    /// The reflection (p, -w); together with the twisted rotations it
    /// generates an O(2) action.
    pub fn reflect(&self) -> SpherePair {
        SpherePair {
            p: self.p.clone(),
            w: self.w.scale(-1.0),
        }
    }

    pub fn dist(&self, other: &SpherePair) -> f64 {
        (self.p.sub(&other.p).norm_sqr() + self.w.sub(&other.w).norm_sqr()).sqrt()
    }
}
