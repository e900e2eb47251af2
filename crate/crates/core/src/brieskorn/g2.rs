use crate::algebra::imvec::ImVec;
use crate::algebra::octonion::Octonion;
use crate::numerics::expm;
use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

fn to_oct(v: &ImVec) -> Octonion {
    let mut c = [0.0; 7];
    c.copy_from_slice(&v.c);
    Octonion::from_imag(c)
}

/// The derivation D_{a,b}(x) = [[a,b], x] - 3((a b) x - a (b x)) of the
/// octonions, restricted to the imaginary part.
///
/// The associator is totally antisymmetric, so this equals
/// [[a,b], x] + 3((a x) b - a (x b)); the sign is pinned by the Leibniz rule
/// under the Cayley-Dickson multiplication convention used here.
pub fn derivation(a: &ImVec, b: &ImVec, x: &ImVec) -> ImVec {
    let (a, b, x) = (to_oct(a), to_oct(b), to_oct(x));
    let comm = a * b - b * a;
    let first = comm * x - x * comm;
    let assoc = (a * b) * x - a * (b * x);
    ImVec::new((first - assoc.scale(3.0)).imag().to_vec())
}

/// The 7x7 matrix of a derivation on the imaginary octonions.
pub fn derivation_matrix(a: &ImVec, b: &ImVec) -> DMatrix<f64> {
    DMatrix::from_fn(7, 7, |i, j| {
        let mut e = ImVec::zeros(7);
        e.c[j] = 1.0;
        derivation(a, b, &e).c[i]
    })
}

/// How far g is from being an octonion automorphism, sampled over random
/// imaginary pairs.
pub fn automorphism_residual(g: &DMatrix<f64>, seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let apply = |m: &DMatrix<f64>, v: &ImVec| {
        ImVec::new((0..7).map(|i| (0..7).map(|j| m[(i, j)] * v.c[j]).sum()).collect())
    };
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let x = crate::sp2::sampling::random_unit_imvec(&mut rng, 7);
        let y = crate::sp2::sampling::random_unit_imvec(&mut rng, 7);
        let (ox, oy) = (to_oct(&x), to_oct(&y));
        let lhs = to_oct(&apply(g, &ImVec::new((ox * oy).imag().to_vec())))
            + Octonion::scalar((ox * oy).re());
        let rhs = to_oct(&apply(g, &x)) * to_oct(&apply(g, &y));
        worst = worst.max((lhs - rhs).norm());
    }
    worst
}

/// A pseudo-random element of G2 as exp of a random combination of
/// derivations. The result is orthogonal and an automorphism of the
/// octonion product to matrix-exponential accuracy.
pub fn g2_sample(seed: u64) -> DMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = DMatrix::zeros(7, 7);
    for _ in 0..3 {
        let a = crate::sp2::sampling::random_unit_imvec(&mut rng, 7);
        let b = crate::sp2::sampling::random_unit_imvec(&mut rng, 7);
        let c: f64 = rng.gen_range(-1.0..1.0);
        d += derivation_matrix(&a, &b) * c;
    }
    // keep exp well inside the scaling regime
    let norm = d.norm();
    if norm > 4.0 {
        d /= norm / 4.0;
    }
    expm(&d)
}
