//! Shared numerical kernels: finite differences, small optimizers, and a
//! scaling-and-squaring matrix exponential.

use nalgebra::DMatrix;

/// Fourth-order central first derivative (five-point stencil).
pub fn deriv4(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

/// Central second derivative with one Richardson pass.
pub fn second_deriv_richardson(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let d = |hh: f64| (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh);
    (4.0 * d(h / 2.0) - d(h)) / 3.0
}

/// Central first derivative with one Richardson pass.
pub fn deriv_richardson(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let d = |hh: f64| (f(x + hh) - f(x - hh)) / (2.0 * hh);
    (4.0 * d(h / 2.0) - d(h)) / 3.0
}

/// Golden-section minimization of a unimodal function on [a, b].
pub fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> (f64, f64) {
    let phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..iters {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    let xm = 0.5 * (a + b);
    (xm, f(xm))
}

/// Nelder-Mead in low dimension. Returns (argmin, min).
pub fn nelder_mead(
    f: impl Fn(&[f64]) -> f64,
    x0: &[f64],
    scale: f64,
    iters: usize,
) -> (Vec<f64>, f64) {
    let n = x0.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += scale;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex.iter().map(|v| f(v)).collect();
    for _ in 0..iters {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
        let best = order[0];
        let worst = order[n];
        let second_worst = order[n - 1];

        let mut centroid = vec![0.0; n];
        for (idx, v) in simplex.iter().enumerate() {
            if idx != worst {
                for k in 0..n {
                    centroid[k] += v[k] / n as f64;
                }
            }
        }
        let lerp = |t: f64| -> Vec<f64> {
            (0..n)
                .map(|k| centroid[k] + t * (simplex[worst][k] - centroid[k]))
                .collect()
        };
        let xr = lerp(-1.0);
        let fr = f(&xr);
        if fr < values[best] {
            let xe = lerp(-2.0);
            let fe = f(&xe);
            if fe < fr {
                simplex[worst] = xe;
                values[worst] = fe;
            } else {
                simplex[worst] = xr;
                values[worst] = fr;
            }
        } else if fr < values[second_worst] {
            simplex[worst] = xr;
            values[worst] = fr;
        } else {
            let xc = lerp(0.5);
            let fc = f(&xc);
            if fc < values[worst] {
                simplex[worst] = xc;
                values[worst] = fc;
            } else {
                let best_point = simplex[best].clone();
                for (idx, v) in simplex.iter_mut().enumerate() {
                    if idx != best {
                        for k in 0..n {
                            v[k] = 0.5 * (v[k] + best_point[k]);
                        }
                    }
                }
                values = simplex.iter().map(|v| f(v)).collect();
            }
        }
    }
    let (mut bi, mut bv) = (0, values[0]);
    for (i, &v) in values.iter().enumerate() {
        if v < bv {
            bv = v;
            bi = i;
        }
    }
    (simplex[bi].clone(), bv)
}

/// Matrix exponential by scaling and squaring with a [6/6] Pade approximant.
pub fn expm(a: &DMatrix<f64>) -> DMatrix<f64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "expm needs a square matrix");
    let norm = a.iter().map(|v| v.abs()).fold(0.0, f64::max) * n as f64;
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil().max(0.0) as u32
    } else {
        0
    };
    let a_scaled = a * 2f64.powi(-(s as i32));

    // Pade [6/6] coefficients of exp(x).
    const C: [f64; 7] = [
        1.0,
        0.5,
        5.0 / 44.0,
        1.0 / 66.0,
        1.0 / 792.0,
        1.0 / 15840.0,
        1.0 / 665280.0,
    ];
    let id = DMatrix::<f64>::identity(n, n);
    let a2 = &a_scaled * &a_scaled;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let u_even = &id * C[0] + &a2 * C[2] + &a4 * C[4] + &a6 * C[6];
    let u_odd = &a_scaled * (&id * C[1] + &a2 * C[3] + &a4 * C[5]);
    let num = &u_even + &u_odd;
    let den = &u_even - &u_odd;
    let mut result = den
        .lu()
        .solve(&num)
        .expect("Pade denominator must be invertible");
    for _ in 0..s {
        result = &result * &result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deriv4_matches_cos() {
        let d = deriv4(f64::sin, 0.7, 1e-3);
        assert!((d - 0.7f64.cos()).abs() < 1e-12);
    }

    #[test]
    fn second_deriv_matches() {
        let d = second_deriv_richardson(f64::sin, 0.7, 1e-3);
        assert!((d + 0.7f64.sin()).abs() < 1e-9);
    }

    #[test]
    fn expm_rotation_block() {
        // exp of a 2x2 skew block is a rotation.
        let t = 0.83;
        let a = DMatrix::from_row_slice(2, 2, &[0.0, -t, t, 0.0]);
        let e = expm(&a);
        assert!((e[(0, 0)] - t.cos()).abs() < 1e-13);
        assert!((e[(1, 0)] - t.sin()).abs() < 1e-13);
    }

    #[test]
    fn golden_finds_parabola_min() {
        let (x, _) = golden_min(|x| (x - 1.3) * (x - 1.3), 0.0, 3.0, 80);
        assert!((x - 1.3).abs() < 1e-8);
    }

    #[test]
    fn nelder_mead_quadratic() {
        let (x, v) = nelder_mead(
            |x| (x[0] - 1.0).powi(2) + 3.0 * (x[1] + 2.0).powi(2),
            &[0.0, 0.0],
            0.5,
            200,
        );
        assert!(v < 1e-10);
        assert!((x[0] - 1.0).abs() < 1e-4 && (x[1] + 2.0).abs() < 1e-4);
    }
}
