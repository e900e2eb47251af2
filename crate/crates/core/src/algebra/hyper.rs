use super::imvec::ImVec;
use super::octonion::Octonion;
use super::quaternion::Quaternion;
use std::ops::{Add, Mul, Neg, Sub};

/// A quaternion or octonion behind one interface, for code that is generic
/// over the two sphere dimensions. Operands must live in the same algebra.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Hyper {
    Q(Quaternion),
    O(Octonion),
}

impl Hyper {
    pub fn one_like(&self) -> Hyper {
        match self {
            Hyper::Q(_) => Hyper::Q(Quaternion::scalar(1.0)),
            Hyper::O(_) => Hyper::O(Octonion::one()),
        }
    }

    pub fn scalar_like(&self, w: f64) -> Hyper {
        match self {
            Hyper::Q(_) => Hyper::Q(Quaternion::scalar(w)),
            Hyper::O(_) => Hyper::O(Octonion::scalar(w)),
        }
    }

    pub fn re(&self) -> f64 {
        match self {
            Hyper::Q(q) => q.re(),
            Hyper::O(o) => o.re(),
        }
    }

    pub fn conj(&self) -> Hyper {
        match self {
            Hyper::Q(q) => Hyper::Q(q.conj()),
            Hyper::O(o) => Hyper::O(o.conj()),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        match self {
            Hyper::Q(q) => q.norm_sqr(),
            Hyper::O(o) => o.norm_sqr(),
        }
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Hyper {
        match self {
            Hyper::Q(q) => Hyper::Q(q.scale(s)),
            Hyper::O(o) => Hyper::O(o.scale(s)),
        }
    }

    pub fn imag_vec(&self) -> ImVec {
        match self {
            Hyper::Q(q) => ImVec::new(q.imag().to_vec()),
            Hyper::O(o) => ImVec::new(o.imag().to_vec()),
        }
    }

    /// Conjugation self * v * conj(self); for unit elements an isometry of
    /// the imaginary part.
    pub fn sandwich(&self, v: &Hyper) -> Hyper {
        *self * *v * self.conj()
    }
}

impl Add for Hyper {
    type Output = Hyper;
    fn add(self, rhs: Hyper) -> Hyper {
        match (self, rhs) {
            (Hyper::Q(a), Hyper::Q(b)) => Hyper::Q(a + b),
            (Hyper::O(a), Hyper::O(b)) => Hyper::O(a + b),
            _ => panic!("mixed quaternion/octonion arithmetic"),
        }
    }
}

impl Sub for Hyper {
    type Output = Hyper;
    fn sub(self, rhs: Hyper) -> Hyper {
        match (self, rhs) {
            (Hyper::Q(a), Hyper::Q(b)) => Hyper::Q(a - b),
            (Hyper::O(a), Hyper::O(b)) => Hyper::O(a - b),
            _ => panic!("mixed quaternion/octonion arithmetic"),
        }
    }
}

impl Neg for Hyper {
    type Output = Hyper;
    fn neg(self) -> Hyper {
        match self {
            Hyper::Q(a) => Hyper::Q(-a),
            Hyper::O(a) => Hyper::O(-a),
        }
    }
}

impl Mul for Hyper {
    type Output = Hyper;
    fn mul(self, rhs: Hyper) -> Hyper {
        match (self, rhs) {
            (Hyper::Q(a), Hyper::Q(b)) => Hyper::Q(a * b),
            (Hyper::O(a), Hyper::O(b)) => Hyper::O(a * b),
            _ => panic!("mixed quaternion/octonion arithmetic"),
        }
    }
}

impl Mul<f64> for Hyper {
    type Output = Hyper;
    fn mul(self, s: f64) -> Hyper {
        self.scale(s)
    }
}
