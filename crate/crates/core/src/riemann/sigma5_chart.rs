use super::chart::ChartMetric;
use super::engine::{CurvaturePoint, FdSteps};
use crate::algebra::quaternion::{Quaternion, I, J, K};
use crate::error::Result;
use crate::sp2::element::{metric_inner_body, MetricParams, QMat2};
use crate::sp2::lift::alpha_tilde;

fn alpha_prime(s: f64) -> QMat2 {
    let (sn, cs) = s.sin_cos();
    QMat2::new([[J.scale(-sn), K.scale(cs)], [K.scale(cs), J.scale(-sn)]])
}

fn rot_mat(theta: f64) -> QMat2 {
    QMat2::from_real([[theta.cos(), -theta.sin()], [theta.sin(), theta.cos()]])
}

fn rot_mat_prime(theta: f64) -> QMat2 {
    QMat2::from_real([[-theta.sin(), -theta.cos()], [theta.cos(), -theta.sin()]])
}

fn exp_axis(c: Quaternion, t: f64) -> Quaternion {
    Quaternion::exp_imag([c.x * t, c.y * t, c.z * t])
}

/// The chart Phi(s, theta, a, b, c) = R(theta) alpha(s) diag(1, conj q) with
/// q = e^{ia} e^{jb} e^{kc}: the normal-geodesic parameter plus the four
/// orbit directions of the bullet action on the 5-sphere.
struct ChartData {
    point: QMat2,
    tangents: [QMat2; 5],
}

fn chart(x: &[f64]) -> ChartData {
    let (s, theta, a, b, c) = (x[0], x[1], x[2], x[3], x[4]);
    let ea = exp_axis(I, a);
    let eb = exp_axis(J, b);
    let ec = exp_axis(K, c);
    // conj q = e^{-kc} e^{-jb} e^{-ia}
    let qbar = ec.conj() * eb.conj() * ea.conj();
    let r = rot_mat(theta);
    let al = alpha_tilde(s);
    let ral = r.mul(&al);
    let point = ral.mul_diag_right(Quaternion::scalar(1.0), qbar);

    let d_s = r.mul(&alpha_prime(s)).mul_diag_right(Quaternion::scalar(1.0), qbar);
    let d_theta = rot_mat_prime(theta)
        .mul(&al)
        .mul_diag_right(Quaternion::scalar(1.0), qbar);
    let d_a = ral.mul_diag_right(Quaternion::ZERO, ec.conj() * eb.conj() * (-I) * ea.conj());
    let d_b = ral.mul_diag_right(Quaternion::ZERO, ec.conj() * (-J) * eb.conj() * ea.conj());
    let d_c = ral.mul_diag_right(Quaternion::ZERO, (-K) * qbar);
    ChartData {
        point,
        tangents: [d_s, d_theta, d_a, d_b, d_c],
    }
}

/// The induced metric of the exotic 7-sphere on the 5-sphere in this chart:
/// tangents are projected onto the horizontal complement of the star-vertical
/// space and paired with the chosen inner product.
pub fn sigma5_chart_metric(p: MetricParams) -> ChartMetric {
    ChartMetric::new(5, move |x: &[f64]| {
        let data = chart(x);
        let phi = data.point;
        let phid = phi.conj_transpose();
        // star-vertical bodies at the point
        let vert: Vec<QMat2> = [I, J, K]
            .iter()
            .map(|&cq| {
                phid.mul(&phi.scalar_mul_left(cq))
                    .sub(&QMat2::diag(cq, Quaternion::ZERO))
            })
            .collect();
        let mut gram = nalgebra::Matrix3::<f64>::zeros();
        for i in 0..3 {
            for j in 0..3 {
                gram[(i, j)] = metric_inner_body(p, &vert[i], &vert[j]);
            }
        }
        let gram_inv = gram.try_inverse().expect("vertical space nondegenerate");
        let horizontal = |t: &QMat2| -> QMat2 {
            let body = phid.mul(t);
            let rhs = nalgebra::Vector3::new(
                metric_inner_body(p, &body, &vert[0]),
                metric_inner_body(p, &body, &vert[1]),
                metric_inner_body(p, &body, &vert[2]),
            );
            let coeff = gram_inv * rhs;
            let mut h = body;
            for i in 0..3 {
                h = h.sub(&vert[i].scale(coeff[i]));
            }
            h
        };
        let hor: Vec<QMat2> = data.tangents.iter().map(horizontal).collect();
        nalgebra::DMatrix::from_fn(5, 5, |i, j| metric_inner_body(p, &hor[i], &hor[j]))
    })
}

/// The curvature component <R(alpha', v_1) v_2, v_3> of the induced metric
/// at the geodesic point alpha(s); the chart directions 2, 3, 4 are the
/// three sphere-factor Killing fields.
pub fn curvature_component(s: f64, p: MetricParams, steps: FdSteps) -> Result<f64> {
    let metric = sigma5_chart_metric(p);
    let cp = CurvaturePoint::compute(&metric, &[s, 0.0, 0.0, 0.0, 0.0], steps)?;
    Ok(cp.riemann(0, 2, 3, 4))
}
