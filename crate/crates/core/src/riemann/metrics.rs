use super::chart::ChartMetric;
use super::engine::orbit_space_metric;
use crate::error::Result;
use crate::sp2::element::MetricParams;
use crate::sp2::killing::c_function;
use nalgebra::{DMatrix, DVector};
use std::f64::consts::PI;

const MARGIN: f64 = 1e-2;

/// The totally geodesic 2-sphere inside the 5-sphere: ds^2 + (c(s)/4) dphi^2
/// with c(s) from the Killing-field metric matrix.
pub fn sigma2_metric(p: MetricParams) -> ChartMetric {
    ChartMetric::with_domain(
        2,
        move |x: &[f64]| {
            DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, c_function(x[0], p) / 4.0]))
        },
        |x: &[f64]| x[0] > MARGIN && x[0] < PI - MARGIN,
    )
}

/// The closed-form sectional curvatures of the 2-sphere at s = 0, pi/4, pi/2.
pub fn sigma2_curvature_values(p: MetricParams) -> [f64; 3] {
    let (mu, nu) = (p.mu, p.nu);
    [
        12.0 / nu - 8.0 - 3.0 * mu,
        4.0 * nu / (1.0 + mu),
        -nu * (1.0 + 2.0 * mu) / (mu * (4.0 * mu + nu)),
    ]
}

/// The suspension 3-sphere: mu (dt^2 + (nu sin^2 t / (nu + 4 mu sin^2 t)) g_can).
pub fn sigma31_metric(p: MetricParams) -> ChartMetric {
    let (mu, nu) = (p.mu, p.nu);
    ChartMetric::with_domain(
        3,
        move |x: &[f64]| {
            let st2 = x[0].sin().powi(2);
            let warp = nu * st2 / (nu + 4.0 * mu * st2);
            DMatrix::from_diagonal(&DVector::from_vec(vec![
                mu,
                mu * warp,
                mu * warp * x[1].sin().powi(2),
            ]))
        },
        |x: &[f64]| {
            x[0] > MARGIN && x[0] < PI - MARGIN && x[1] > MARGIN && x[1] < PI - MARGIN
        },
    )
}

/// The closed-form curvature range (min, max) of the suspension 3-sphere.
pub fn sigma31_curvature_range(p: MetricParams) -> (f64, f64) {
    let (mu, nu) = (p.mu, p.nu);
    (nu / (mu * (4.0 * mu + nu)), (12.0 * mu + nu) / (mu * nu))
}

fn sigma32_components(p: MetricParams, t: f64, th: f64) -> DMatrix<f64> {
    let (mu, nu) = (p.mu, p.nu);
    let one_mu = 1.0 - mu;
    let st = t.sin();
    let ct = t.cos();
    let sth = th.sin();
    let cth = th.cos();
    let q = st * st * sth * sth; // sin^2 t sin^2 theta
    let s2t = (2.0 * t).sin();
    let tt = 2.0 * t - s2t;
    let d = 4.0 * (1.0 - one_mu * q) * q + nu * (1.0 - 2.0 * q) * (1.0 - 2.0 * q);

    let g11 = 1.0
        - (one_mu / d) * (4.0 * q + nu * (1.0 - 2.0 * q) * (1.0 - 2.0 * q)) * cth * cth;
    let g22 = st * st
        + (q / d)
            * (nu * sth * sth * tt * tt
                - one_mu
                    * ((nu + 4.0 * q) * ct * ct
                        + 2.0 * t * nu * sth * sth * (2.0 * t * q - s2t)));
    let g33 = (nu * q / d) * (1.0 - one_mu * q);
    let g23 = (nu * st * st * sth * sth * sth / d)
        * (tt + 0.5 * one_mu * (s2t - 4.0 * t * q));
    let g13 = -(nu * one_mu * q / d) * cth * (1.0 - 2.0 * q);
    let g12 = (one_mu / (4.0 * d))
        * (2.0 * th).sin()
        * (4.0 * s2t * q - nu * (1.0 - 2.0 * q) * (4.0 * t * q - s2t));

    DMatrix::from_row_slice(3, 3, &[g11, g12, g13, g12, g22, g23, g13, g23, g33])
}

/// The cohomogeneity-two 3-sphere in coordinates (t, theta, phi), valid away
/// from sin t sin theta = 0.
pub fn sigma32_metric(p: MetricParams) -> ChartMetric {
    ChartMetric::with_domain(
        3,
        move |x: &[f64]| sigma32_components(p, x[0], x[1]),
        |x: &[f64]| {
            x[0] > MARGIN && x[0] < PI - MARGIN && x[1] > MARGIN && x[1] < PI - MARGIN
        },
    )
}

/// The rank-one-update form the components specialize to at mu = 1.
pub fn sigma32_mu1_components(nu: f64, t: f64, th: f64) -> DMatrix<f64> {
    let st = t.sin();
    let sth = th.sin();
    let q = st * st * sth * sth;
    let factor = nu * q / (4.0 * q + nu * (1.0 - 2.0 * q) * (1.0 - 2.0 * q));
    let v = DVector::from_vec(vec![0.0, (2.0 * t - (2.0 * t).sin()) * sth, 1.0]);
    let mut g = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, st * st, 0.0]));
    g += factor * &v * v.transpose();
    g
}

/// Agreement of the general components with the mu = 1 specialization.
pub fn sigma32_mu1_agreement(nu: f64, grid: usize) -> f64 {
    let p = MetricParams::new(1.0, nu).expect("positive");
    let mut worst: f64 = 0.0;
    for i in 0..grid {
        for j in 0..grid {
            let t = 0.2 + (PI - 0.4) * i as f64 / (grid.max(2) - 1) as f64;
            let th = 0.2 + (PI - 0.4) * j as f64 / (grid.max(2) - 1) as f64;
            let a = sigma32_components(p, t, th);
            let b = sigma32_mu1_components(nu, t, th);
            worst = worst.max((a - b).norm());
        }
    }
    worst
}

/// The gluing isometry (t, theta, phi) -> (pi - t, theta + pi, phi - 2 pi cos theta):
/// pullback defect |J^T g(F x) J - g(x)|.
pub fn sigma32_deck_residual(p: MetricParams, t: f64, th: f64) -> f64 {
    let g = sigma32_components(p, t, th);
    let g_img = sigma32_components(p, PI - t, th + PI);
    let jac = DMatrix::from_row_slice(
        3,
        3,
        &[-1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 2.0 * PI * th.sin(), 1.0],
    );
    (jac.transpose() * g_img * jac - g).norm()
}

/// The closed-form scalar curvature of the mu = 1 family as a function of
/// the polar angle omega (cos omega = sin theta sin t).
///
/// The overall sign is pinned by the engine: the quoted rational expression
/// reproduces the finite-difference scalar to ten digits only after negating
/// the numerator (its source carries a sign slip).
pub fn sigma32_scalar_mu1(nu: f64, omega: f64) -> f64 {
    let c2 = (2.0 * omega).cos();
    let c4 = (4.0 * omega).cos();
    let c6 = (6.0 * omega).cos();
    let num = -4.0
        * (-12.0 + 4.0 * nu + 9.0 * nu * nu
            + 2.0 * (21.0 * nu - 8.0) * c2
            + (9.0 * nu * nu + 16.0 * nu - 4.0) * c4
            + 2.0 * nu * c6);
    let den = 4.0 + nu + 4.0 * c2 + nu * c4;
    num / (den * den)
}

/// The closed-form minimum of the sectional curvature for mu, nu <= 1.
pub fn sigma32_min_k(p: MetricParams) -> f64 {
    let (mu, nu) = (p.mu, p.nu);
    let d = 4.0 * mu + nu;
    (mu * nu / d).min((12.0 - 8.0 * (mu + nu) - 3.0 * mu * nu) / d)
}

/// The sectional curvature of the 2-sphere at the smooth pole s = 0,
/// evaluated as a limit: K is even in s, so two interior samples
/// extrapolate the s^2-term away.
pub fn sigma2_k_at_pole(p: MetricParams, steps: super::engine::FdSteps) -> Result<f64> {
    let m = sigma2_metric(p);
    let k_at = |s: f64| -> Result<f64> {
        super::engine::CurvaturePoint::compute(&m, &[s, 1.0], steps)?
            .sectional(&[1.0, 0.0], &[0.0, 1.0])
    };
    let k1 = k_at(0.04)?;
    let k2 = k_at(0.02)?;
    Ok((4.0 * k2 - k1) / 3.0)
}

/// The orbit space of the phi-circle action on the cohomogeneity-two
/// 3-sphere; a hemisphere with a rotationally invariant metric.
pub fn hemisphere_metric(p: MetricParams) -> Result<ChartMetric> {
    orbit_space_metric(sigma32_metric(p), 2, 0.7, &[1.3, 1.1])
}

/// The closed-form hemisphere curvature
/// mu (1 + 2 (1 - mu) cos^2 omega) / (1 - (1 - mu) cos^2 omega)^2.
pub fn hemisphere_curvature(mu: f64, omega: f64) -> f64 {
    let c2 = omega.cos().powi(2);
    mu * (1.0 + 2.0 * (1.0 - mu) * c2) / (1.0 - (1.0 - mu) * c2).powi(2)
}

/// The polar angle of the quotient hemisphere at chart point (t, theta).
pub fn hemisphere_omega(t: f64, th: f64) -> f64 {
    (th.sin() * t.sin()).clamp(-1.0, 1.0).acos()
}

/// A left-invariant Berger metric on S^3 with squared Hopf length w1 and
/// squared horizontal length w2 (lengths 2 pi sqrt(w1) and 2 pi sqrt(w2)).
///
/// The chart is q(a, b, c) = e^{ia} e^{jb} e^{kc}; body velocities have the
/// closed forms u_a = cos 2b (i cos 2c - j sin 2c) + k sin 2b,
/// u_b = j cos 2c + i sin 2c, u_c = k.
pub fn berger_metric(w1: f64, w2: f64) -> ChartMetric {
    ChartMetric::with_domain(
        3,
        move |x: &[f64]| {
            let (b, c) = (x[1], x[2]);
            let u = [
                [
                    (2.0 * b).cos() * (2.0 * c).cos(),
                    -(2.0 * b).cos() * (2.0 * c).sin(),
                    (2.0 * b).sin(),
                ],
                [(2.0 * c).sin(), (2.0 * c).cos(), 0.0],
                [0.0, 0.0, 1.0],
            ];
            DMatrix::from_fn(3, 3, |i, j| {
                w1 * u[i][0] * u[j][0] + w2 * (u[i][1] * u[j][1] + u[i][2] * u[j][2])
            })
        },
        |x: &[f64]| x[1].abs() < 0.6,
    )
}

/// Classical sectional extremes of the Berger metric: the pair
/// (w1 / w2^2, 4 / w2 - 3 w1 / w2^2), unordered.
pub fn berger_extremes(w1: f64, w2: f64) -> (f64, f64) {
    let a = w1 / (w2 * w2);
    let b = 4.0 / w2 - 3.0 * w1 / (w2 * w2);
    (a.min(b), a.max(b))
}

/// Berger parameters (w1, w2) of the three homogeneous fixed-point sets.
pub mod berger_params {
    use crate::sp2::element::MetricParams;

    /// Fixed set of (1, +-i): Hopf length 2 pi sqrt(mu), horizontal 2 pi.
    pub fn sigma30(p: MetricParams) -> (f64, f64) {
        (p.mu, 1.0)
    }

    /// Fixed lens space of (-1, +-i): Hopf length 2 pi sqrt(9 mu nu / (4 mu + nu)).
    pub fn l3(p: MetricParams) -> (f64, f64) {
        (9.0 * p.mu * p.nu / (4.0 * p.mu + p.nu), 1.0)
    }

    /// The projective singular orbit: horizontal 2 pi sqrt(nu), Hopf
    /// 2 pi sqrt(4 mu nu / (4 mu + nu)).
    pub fn p3(p: MetricParams) -> (f64, f64) {
        (4.0 * p.mu * p.nu / (4.0 * p.mu + p.nu), p.nu)
    }
}
