use super::quaternion::Quaternion;
use std::ops::{Add, Mul, Neg, Sub};

/// An octonion stored as a Cayley-Dickson pair of quaternions (a, b).
///
/// Multiplication convention: (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
/// The real basis is e0 = (1,0), e1..e3 = (i,0)..(k,0), e4 = (0,1),
/// e5..e7 = (0,i)..(0,k).
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Octonion {
    pub a: Quaternion,
    pub b: Quaternion,
}

impl Octonion {
    pub const fn new(a: Quaternion, b: Quaternion) -> Self {
        Octonion { a, b }
    }

    pub const ZERO: Octonion = Octonion::new(Quaternion::ZERO, Quaternion::ZERO);

    pub fn one() -> Self {
        Octonion::new(Quaternion::scalar(1.0), Quaternion::ZERO)
    }

    pub fn scalar(w: f64) -> Self {
        Octonion::new(Quaternion::scalar(w), Quaternion::ZERO)
    }

    pub fn from_components(c: [f64; 8]) -> Self {
        Octonion::new(
            Quaternion::new(c[0], c[1], c[2], c[3]),
            Quaternion::new(c[4], c[5], c[6], c[7]),
        )
    }

    pub fn components(&self) -> [f64; 8] {
        [
            self.a.w, self.a.x, self.a.y, self.a.z, self.b.w, self.b.x, self.b.y, self.b.z,
        ]
    }

    pub fn from_imag(v: [f64; 7]) -> Self {
        Octonion::from_components([0.0, v[0], v[1], v[2], v[3], v[4], v[5], v[6]])
    }

    pub fn re(&self) -> f64 {
        self.a.w
    }

    pub fn imag(&self) -> [f64; 7] {
        let c = self.components();
        [c[1], c[2], c[3], c[4], c[5], c[6], c[7]]
    }

    pub fn conj(&self) -> Self {
        Octonion::new(self.a.conj(), -self.b)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Octonion::new(self.a.scale(s), self.b.scale(s))
    }

    /// Exponential of an imaginary octonion: cos|v| + (v/|v|) sin|v|.
    pub fn exp_imag(v: [f64; 7]) -> Self {
        let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if r < 1e-300 {
            return Octonion::one();
        }
        let s = r.sin() / r;
        let mut c = [0.0; 8];
        c[0] = r.cos();
        for i in 0..7 {
            c[i + 1] = v[i] * s;
        }
        Octonion::from_components(c)
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        Octonion::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        Octonion::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion::new(-self.a, -self.b)
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, r: Octonion) -> Octonion {
        let (a, b) = (self.a, self.b);
        let (c, d) = (r.a, r.b);
        Octonion::new(a * c - d.conj() * b, d * a + b * c.conj())
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, s: f64) -> Octonion {
        self.scale(s)
    }
}
