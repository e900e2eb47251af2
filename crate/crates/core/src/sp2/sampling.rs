use super::element::{QMat2, SpElement};
use crate::algebra::imvec::ImVec;
use crate::algebra::quaternion::Quaternion;
use rand::Rng;
use rand_distr::StandardNormal;

pub fn random_quaternion<R: Rng>(rng: &mut R) -> Quaternion {
    Quaternion::new(
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
    )
}

pub fn random_unit_quaternion<R: Rng>(rng: &mut R) -> Quaternion {
    random_quaternion(rng).normalized()
}

pub fn random_imvec<R: Rng>(rng: &mut R, n: usize) -> ImVec {
    ImVec::new((0..n).map(|_| rng.sample(StandardNormal)).collect())
}

pub fn random_unit_imvec<R: Rng>(rng: &mut R, n: usize) -> ImVec {
    let v = random_imvec(rng, n);
    v.scale(1.0 / v.norm())
}

/// A uniformly random pair (p, w) with |p|^2 + |w|^2 = 1.
pub fn random_sphere_pair<R: Rng>(rng: &mut R, n: usize) -> (ImVec, ImVec) {
    let p = random_imvec(rng, n);
    let w = random_imvec(rng, n);
    let norm = (p.norm_sqr() + w.norm_sqr()).sqrt();
    (p.scale(1.0 / norm), w.scale(1.0 / norm))
}

/// Random element of Sp(2) from Gram-Schmidt on Gaussian quaternion entries.
pub fn random_sp2<R: Rng>(rng: &mut R) -> SpElement {
    let m = QMat2::new([
        [random_quaternion(rng), random_quaternion(rng)],
        [random_quaternion(rng), random_quaternion(rng)],
    ]);
    m.orthonormalized()
}

/// Random O(2) matrix: a rotation, reflected with probability 1/2.
pub fn random_o2<R: Rng>(rng: &mut R) -> [[f64; 2]; 2] {
    let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let (s, c) = t.sin_cos();
    if rng.gen_bool(0.5) {
        [[c, s], [s, -c]]
    } else {
        [[c, -s], [s, c]]
    }
}

pub fn rotation2(theta: f64) -> [[f64; 2]; 2] {
    let (s, c) = theta.sin_cos();
    [[c, -s], [s, c]]
}
