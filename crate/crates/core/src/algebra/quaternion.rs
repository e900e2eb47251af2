use std::ops::{Add, Mul, Neg, Sub};

/// A quaternion `w + x i + y j + z k` with the convention `ij = k`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);

    pub fn scalar(w: f64) -> Self {
        Quaternion::new(w, 0.0, 0.0, 0.0)
    }

    pub fn from_imag(v: [f64; 3]) -> Self {
        Quaternion::new(0.0, v[0], v[1], v[2])
    }

    pub fn re(&self) -> f64 {
        self.w
    }

    pub fn imag(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn inverse(&self) -> Self {
        let n = self.norm_sqr();
        self.conj().scale(1.0 / n)
    }

    pub fn normalized(&self) -> Self {
        self.scale(1.0 / self.norm())
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Exponential of an imaginary quaternion: cos|v| + (v/|v|) sin|v|.
    pub fn exp_imag(v: [f64; 3]) -> Self {
        let r = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if r < 1e-300 {
            return ONE;
        }
        let s = r.sin() / r;
        Quaternion::new(r.cos(), v[0] * s, v[1] * s, v[2] * s)
    }

    /// Conjugation q v q^{-1} for unit q; the induced SO(3) rotation of Im H.
    pub fn rotate_imag(&self, v: [f64; 3]) -> [f64; 3] {
        let p = Quaternion::from_imag(v);
        (*self * p * self.conj()).imag()
    }

    /// Columns are the images of i, j, k under conjugation by a unit q.
    pub fn rotation_matrix(&self) -> [[f64; 3]; 3] {
        let cols = [
            self.rotate_imag([1.0, 0.0, 0.0]),
            self.rotate_imag([0.0, 1.0, 0.0]),
            self.rotate_imag([0.0, 0.0, 1.0]),
        ];
        let mut m = [[0.0; 3]; 3];
        for (c, col) in cols.iter().enumerate() {
            for r in 0..3 {
                m[r][c] = col[r];
            }
        }
        m
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        self.scale(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_table() {
        assert_eq!(I * J, K);
        assert_eq!(J * K, I);
        assert_eq!(K * I, J);
        assert_eq!(I * I, -ONE);
    }

    #[test]
    fn conjugation_reverses_products() {
        let a = Quaternion::new(0.3, -1.2, 0.5, 2.0);
        let b = Quaternion::new(-0.7, 0.1, 1.4, -0.2);
        let lhs = (a * b).conj();
        let rhs = b.conj() * a.conj();
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn norm_multiplicative() {
        let a = Quaternion::new(0.3, -1.2, 0.5, 2.0);
        let b = Quaternion::new(-0.7, 0.1, 1.4, -0.2);
        assert!(((a * b).norm() - a.norm() * b.norm()).abs() < 1e-14);
    }

    #[test]
    fn exp_imag_unit_norm() {
        let q = Quaternion::exp_imag([0.4, -0.3, 1.1]);
        assert!((q.norm() - 1.0).abs() < 1e-14);
        assert_eq!(Quaternion::exp_imag([0.0; 3]), ONE);
    }
}
