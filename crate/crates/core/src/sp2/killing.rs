use super::element::{metric_inner_body, MetricParams, QMat2};
use crate::algebra::quaternion::{Quaternion, I, J, K};

/// Bodies of the star-vertical basis along the normal geodesic. The three
/// fields are mutually orthogonal under every metric of the family.
pub fn vertical_basis_bodies(s: f64) -> [QMat2; 3] {
    let c2 = (2.0 * s).cos();
    let s2 = (2.0 * s).sin();
    let xi1 = QMat2::diag(I.scale(-2.0), -I);
    let xi2 = QMat2::new([
        [J.scale(c2 - 1.0), K.scale(s2)],
        [K.scale(s2), J.scale(c2)],
    ]);
    let xi3 = QMat2::new([
        [K.scale(-(c2 + 1.0)), J.scale(s2)],
        [J.scale(s2), K.scale(-c2)],
    ]);
    [xi1, xi2, xi3]
}

/// Bodies of the four bullet-orbit Killing fields along the normal geodesic.
pub fn orbit_killing_bodies(s: f64) -> [QMat2; 4] {
    let c2 = (2.0 * s).cos();
    let s2 = (2.0 * s).sin();
    let v0 = QMat2::new([
        [I.scale(s2), Quaternion::scalar(-c2)],
        [Quaternion::scalar(c2), I.scale(-s2)],
    ]);
    let v1 = QMat2::diag(Quaternion::ZERO, -I);
    let v2 = QMat2::diag(Quaternion::ZERO, -J);
    let v3 = QMat2::diag(Quaternion::ZERO, -K);
    [v0, v1, v2, v3]
}

/// Horizontal parts of the orbit Killing fields in closed form.
///
/// The coefficients of the xi_2 / xi_3 corrections carry a factor nu; this is
/// forced by <v_i, xi_j> = 0 and reproduces c(s), d(s) of the metric matrix.
pub fn killing_horizontal_closed(s: f64, p: MetricParams) -> [QMat2; 4] {
    let (mu, nu) = (p.mu, p.nu);
    let d = 4.0 * mu + nu;
    let c2 = (2.0 * s).cos();
    let s2 = (2.0 * s).sin();
    let core = QMat2::diag(I.scale(nu), I.scale(-2.0 * mu));

    let v0 = core
        .scale(3.0 * s2 / d)
        .add(&QMat2::from_real([[0.0, -1.0], [1.0, 0.0]]).scale(c2));
    let v1 = core.scale(2.0 / d);

    let [_, xi2, xi3] = vertical_basis_bodies(s);
    let sin2 = s.sin() * s.sin();
    let cos2 = s.cos() * s.cos();
    let den2 = nu * c2 * c2 + 4.0 * (1.0 - (1.0 - mu) * sin2) * sin2;
    let den3 = nu * c2 * c2 + 4.0 * (1.0 - (1.0 - mu) * cos2) * cos2;
    let v2 = QMat2::diag(Quaternion::ZERO, -J).add(&xi2.scale(nu * c2 / den2));
    let v3 = QMat2::diag(Quaternion::ZERO, -K).sub(&xi3.scale(nu * c2 / den3));
    [v0, v1, v2, v3]
}

/// Horizontal parts by projecting the orbit Killing fields against the
/// vertical basis under the chosen metric; the independent route.
pub fn killing_horizontal_projected(s: f64, p: MetricParams) -> [QMat2; 4] {
    let xis = vertical_basis_bodies(s);
    let hats = orbit_killing_bodies(s);
    let mut out = [QMat2::zero(); 4];
    for (slot, hat) in hats.iter().enumerate() {
        let mut h = *hat;
        for xi in &xis {
            let coeff = metric_inner_body(p, hat, xi) / metric_inner_body(p, xi, xi);
            h = h.sub(&xi.scale(coeff));
        }
        out[slot] = h;
    }
    out
}

/// Maximum discrepancy between the two routes over the four fields.
pub fn killing_agreement_residual(s: f64, p: MetricParams) -> f64 {
    let a = killing_horizontal_closed(s, p);
    let b = killing_horizontal_projected(s, p);
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| x.sub(y).frobenius())
        .fold(0.0, f64::max)
}

/// The closed-form inner-product matrix of the horizontal Killing fields.
pub fn metric_matrix_closed(s: f64, p: MetricParams) -> [[f64; 4]; 4] {
    let (mu, nu) = (p.mu, p.nu);
    let d = 4.0 * mu + nu;
    let c2 = (2.0 * s).cos();
    let s2 = (2.0 * s).sin();
    let sin2 = s.sin() * s.sin();
    let cos2 = s.cos() * s.cos();
    let a = 1.0 - (1.0 - 9.0 * mu * nu / d) * s2 * s2;
    let b = 6.0 * mu * nu * s2 / d;
    let c_num = 4.0 * (1.0 - (1.0 - mu) * sin2) * sin2;
    let c = nu * c_num / (nu * c2 * c2 + c_num);
    let d_num = 4.0 * (1.0 - (1.0 - mu) * cos2) * cos2;
    let dd = nu * d_num / (nu * c2 * c2 + d_num);
    [
        [a, b, 0.0, 0.0],
        [b, 4.0 * mu * nu / d, 0.0, 0.0],
        [0.0, 0.0, c, 0.0],
        [0.0, 0.0, 0.0, dd],
    ]
}

/// Direct inner products of the projected horizontal fields.
pub fn metric_matrix_direct(s: f64, p: MetricParams) -> [[f64; 4]; 4] {
    let v = killing_horizontal_projected(s, p);
    let mut m = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = metric_inner_body(p, &v[i], &v[j]);
        }
    }
    m
}

/// Maximum entrywise discrepancy between the closed-form matrix and the
/// direct inner products.
pub fn metric_matrix_residual(s: f64, p: MetricParams) -> f64 {
    let a = metric_matrix_closed(s, p);
    let b = metric_matrix_direct(s, p);
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((a[i][j] - b[i][j]).abs());
        }
    }
    worst
}

/// c(s) entry of the metric matrix; the round factor of the totally geodesic
/// 2-sphere uses c(s)/4.
pub fn c_function(s: f64, p: MetricParams) -> f64 {
    metric_matrix_closed(s, p)[2][2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sp2::element::metric_inner_body;
    use std::f64::consts::PI;

    fn grids() -> (Vec<f64>, Vec<MetricParams>) {
        let s: Vec<f64> = (0..9).map(|k| 0.05 + k as f64 * 0.19).collect();
        let mut ps = Vec::new();
        for mu in [0.3, 0.5, 1.0, 1.4, 2.0] {
            for nu in [0.25, 0.5, 1.0, 1.5, 2.2] {
                ps.push(MetricParams::new(mu, nu).unwrap());
            }
        }
        (s, ps)
    }

    #[test]
    fn vertical_basis_is_orthogonal_for_all_metrics() {
        let (ss, ps) = grids();
        for &s in &ss {
            let xis = vertical_basis_bodies(s);
            for &p in &ps {
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j {
                            assert!(metric_inner_body(p, &xis[i], &xis[j]).abs() < 1e-13);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closed_equals_projected() {
        let (ss, ps) = grids();
        for &s in &ss {
            for &p in &ps {
                let r = killing_agreement_residual(s, p);
                assert!(r < 1e-11, "agreement residual {r:.3e} at s={s}");
            }
        }
    }

    #[test]
    fn horizontal_fields_are_horizontal() {
        let (ss, ps) = grids();
        for &s in &ss {
            for &p in &ps {
                let v = killing_horizontal_closed(s, p);
                let xis = vertical_basis_bodies(s);
                for vi in &v {
                    for xi in &xis {
                        assert!(metric_inner_body(p, vi, xi).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn v1_is_s_independent() {
        let p = MetricParams::new(0.8, 1.1).unwrap();
        let d = 4.0 * p.mu + p.nu;
        for s in [0.1, 0.9, 2.2] {
            let v1 = killing_horizontal_closed(s, p)[1];
            let expect = QMat2::diag(I.scale(2.0 * p.nu / d), I.scale(-4.0 * p.mu / d));
            assert!(v1.sub(&expect).frobenius() < 1e-14);
        }
    }

    #[test]
    fn metric_matrix_at_zero_and_quarter() {
        let p = MetricParams::new(0.7, 1.2).unwrap();
        let m0 = metric_matrix_closed(0.0, p);
        let d = 4.0 * p.mu + p.nu;
        assert!((m0[0][0] - 1.0).abs() < 1e-15);
        assert!(m0[0][1].abs() < 1e-15);
        assert!(m0[2][2].abs() < 1e-15);
        assert!((m0[3][3] - 4.0 * p.mu * p.nu / d).abs() < 1e-15);
        let mq = metric_matrix_closed(PI / 4.0, p);
        assert!((mq[0][0] - 9.0 * p.mu * p.nu / d).abs() < 1e-14);
    }

    #[test]
    fn metric_matrix_cross_check() {
        let (ss, ps) = grids();
        for &s in &ss {
            for &p in &ps {
                let r = metric_matrix_residual(s, p);
                assert!(r < 1e-11, "metric matrix residual {r:.3e} at s={s}");
            }
        }
    }

    #[test]
    fn off_block_entries_vanish() {
        let p = MetricParams::new(1.3, 0.6).unwrap();
        for s in [0.3, 1.1] {
            let m = metric_matrix_direct(s, p);
            for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
                assert!(m[i][j].abs() < 1e-12);
            }
        }
    }
}
