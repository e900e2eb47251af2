use gmlab::algebra::imvec::ImVec;
use gmlab::algebra::octonion::Octonion;
use gmlab::sp2::sampling;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn to_oct(v: &ImVec) -> Octonion {
    let mut c = [0.0; 7];
    c.copy_from_slice(&v.c);
    Octonion::from_imag(c)
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a = to_oct(&sampling::random_unit_imvec(&mut rng, 7));
    let b = to_oct(&sampling::random_unit_imvec(&mut rng, 7));
    let x = to_oct(&sampling::random_unit_imvec(&mut rng, 7));
    let y = to_oct(&sampling::random_unit_imvec(&mut rng, 7));
    let comm = a * b - b * a;

    // candidate derivations
    let d = |z: Octonion, variant: i32| -> Octonion {
        let adz = comm * z - z * comm;
        match variant {
            0 => adz - ((a * z) * b - a * (z * b)).scale(3.0),   // -3[a,z,b]
            1 => adz + ((a * z) * b - a * (z * b)).scale(3.0),   // +3[a,z,b]
            2 => adz - ((a * b) * z - a * (b * z)).scale(3.0),   // -3[a,b,z]
            3 => adz + ((a * b) * z - a * (b * z)).scale(3.0),   // +3[a,b,z]
            _ => unreachable!(),
        }
    };
    for v in 0..4 {
        let dxy = d(x * y, v);
        let leib = d(x, v) * y + x * d(y, v);
        println!("variant {v}: leibniz residual {:.3e}", (dxy - leib).norm());
    }
}
