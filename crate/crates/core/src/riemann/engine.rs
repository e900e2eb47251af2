use super::chart::ChartMetric;
use crate::error::{contract, domain, Result};
use crate::numerics::nelder_mead;
use crate::tolerances::{METRIC_STEP_1, METRIC_STEP_2};
use nalgebra::{DMatrix, DVector};

/// Steps of the finite-difference scheme. Both derivatives carry one
/// Richardson pass.
#[derive(Clone, Copy, Debug)]
pub struct FdSteps {
    pub first: f64,
    pub second: f64,
}

impl Default for FdSteps {
    fn default() -> Self {
        FdSteps {
            first: METRIC_STEP_1,
            second: METRIC_STEP_2,
        }
    }
}

/// Christoffel symbols, the lowered curvature tensor, and derived quantities
/// at a single chart point.
pub struct CurvaturePoint {
    pub dim: usize,
    pub g: DMatrix<f64>,
    pub ginv: DMatrix<f64>,
    /// gamma[k] is the matrix of Gamma^k_{ij}.
    pub gamma: Vec<DMatrix<f64>>,
    /// riem[((a d + b) d + c) d + e] = <R(e_a, e_b) e_c, e_e> in coordinates.
    riem: Vec<f64>,
}

fn shifted(x: &[f64], k: usize, h: f64) -> Vec<f64> {
    let mut y = x.to_vec();
    y[k] += h;
    y
}

fn first_partial(metric: &ChartMetric, x: &[f64], k: usize, h: f64) -> DMatrix<f64> {
    let d = |hh: f64| {
        (metric.eval(&shifted(x, k, hh)) - metric.eval(&shifted(x, k, -hh))) / (2.0 * hh)
    };
    (d(h / 2.0) * 4.0 - d(h)) / 3.0
}

fn second_partial(metric: &ChartMetric, x: &[f64], a: usize, b: usize, h: f64) -> DMatrix<f64> {
    if a == b {
        let g0 = metric.eval(x) * 2.0;
        let d = |hh: f64| {
            (metric.eval(&shifted(x, a, hh)) + metric.eval(&shifted(x, a, -hh)) - &g0) / (hh * hh)
        };
        (d(h / 2.0) * 4.0 - d(h)) / 3.0
    } else {
        let d = |hh: f64| {
            let pp = metric.eval(&shifted(&shifted(x, a, hh), b, hh));
            let pm = metric.eval(&shifted(&shifted(x, a, hh), b, -hh));
            let mp = metric.eval(&shifted(&shifted(x, a, -hh), b, hh));
            let mm = metric.eval(&shifted(&shifted(x, a, -hh), b, -hh));
            (pp - pm - mp + mm) / (4.0 * hh * hh)
        };
        (d(h / 2.0) * 4.0 - d(h)) / 3.0
    }
}

impl CurvaturePoint {
    /// Evaluates the Levi-Civita data at x. The point must sit inside the
    /// domain with margin at least two steps.
    pub fn compute(metric: &ChartMetric, x: &[f64], steps: FdSteps) -> Result<Self> {
        let n = metric.dim();
        for k in 0..n {
            for &h in &[2.0 * steps.first, 2.0 * steps.second] {
                if !metric.in_domain(&shifted(x, k, h)) || !metric.in_domain(&shifted(x, k, -h)) {
                    return Err(domain(format!(
                        "point too close to the chart boundary in coordinate {k}"
                    )));
                }
            }
        }
        let g = metric.eval(x);
        let ginv = g
            .clone()
            .try_inverse()
            .ok_or_else(|| contract("metric is singular at the point".to_string()))?;

        let dg: Vec<DMatrix<f64>> = (0..n)
            .map(|k| first_partial(metric, x, k, steps.first))
            .collect();

        // Gamma^k_{ij} = 1/2 g^{kl} (dg_i[j,l] + dg_j[i,l] - dg_l[i,j])
        let mut gamma = vec![DMatrix::<f64>::zeros(n, n); n];
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let mut acc = 0.0;
                    for l in 0..n {
                        acc += ginv[(k, l)] * (dg[i][(j, l)] + dg[j][(i, l)] - dg[l][(i, j)]);
                    }
                    gamma[k][(i, j)] = 0.5 * acc;
                }
            }
        }

        // R_{abcd} = 1/2 (g_{bd,ac} + g_{ac,bd} - g_{bc,ad} - g_{ad,bc})
        //            + g_{lm} (Gamma^l_{ac} Gamma^m_{bd} - Gamma^l_{ad} Gamma^m_{bc})
        let mut d2 = vec![DMatrix::<f64>::zeros(n, n); n * n];
        for a in 0..n {
            for b in a..n {
                let m = second_partial(metric, x, a, b, steps.second);
                d2[a * n + b] = m.clone();
                d2[b * n + a] = m;
            }
        }
        let idx = |a: usize, b: usize, c: usize, d: usize| ((a * n + b) * n + c) * n + d;
        let mut riem = vec![0.0; n * n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let second = 0.5
                            * (d2[a * n + c][(b, d)] + d2[b * n + d][(a, c)]
                                - d2[a * n + d][(b, c)]
                                - d2[b * n + c][(a, d)]);
                        let mut quad = 0.0;
                        for l in 0..n {
                            for m in 0..n {
                                quad += g[(l, m)]
                                    * (gamma[l][(a, c)] * gamma[m][(b, d)]
                                        - gamma[l][(a, d)] * gamma[m][(b, c)]);
                            }
                        }
                        riem[idx(a, b, c, d)] = second + quad;
                    }
                }
            }
        }
        Ok(CurvaturePoint {
            dim: n,
            g,
            ginv,
            gamma,
            riem,
        })
    }

    /// <R(e_a, e_b) e_c, e_d> in chart coordinates.
    pub fn riemann(&self, a: usize, b: usize, c: usize, d: usize) -> f64 {
        let n = self.dim;
        self.riem[((a * n + b) * n + c) * n + d]
    }

    /// <R(u, v) v, u> for coordinate-component vectors.
    pub fn curvature_quadratic(&self, u: &[f64], v: &[f64]) -> f64 {
        let n = self.dim;
        let mut acc = 0.0;
        for a in 0..n {
            if u[a] == 0.0 {
                continue;
            }
            for b in 0..n {
                if v[b] == 0.0 {
                    continue;
                }
                for c in 0..n {
                    for d in 0..n {
                        acc += self.riemann(a, b, c, d) * u[a] * v[b] * v[c] * u[d];
                    }
                }
            }
        }
        acc
    }

    pub fn inner(&self, u: &[f64], v: &[f64]) -> f64 {
        let n = self.dim;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += self.g[(i, j)] * u[i] * v[j];
            }
        }
        acc
    }

    /// Sectional curvature of the plane spanned by u and v.
    pub fn sectional(&self, u: &[f64], v: &[f64]) -> Result<f64> {
        let gram = self.inner(u, u) * self.inner(v, v) - self.inner(u, v).powi(2);
        if gram < 1e-12 {
            return Err(contract("tangent plane is degenerate".to_string()));
        }
        Ok(self.curvature_quadratic(u, v) / gram)
    }

    /// A g-orthonormal frame (columns).
    pub fn orthonormal_frame(&self) -> DMatrix<f64> {
        let chol = self
            .g
            .clone()
            .cholesky()
            .expect("metric must be positive definite");
        chol.l()
            .transpose()
            .try_inverse()
            .expect("Cholesky factor invertible")
    }

    /// Scalar curvature: twice the sum of the sectional curvatures over an
    /// orthonormal frame's coordinate planes.
    pub fn scalar(&self) -> f64 {
        let f = self.orthonormal_frame();
        let n = self.dim;
        let mut acc = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                let u: Vec<f64> = (0..n).map(|a| f[(a, i)]).collect();
                let v: Vec<f64> = (0..n).map(|a| f[(a, j)]).collect();
                acc += self.curvature_quadratic(&u, &v);
            }
        }
        2.0 * acc
    }

    /// The curvature operator on Lambda^2 in an orthonormal frame. In
    /// dimensions two and three every unit 2-vector is decomposable, so its
    /// eigenvalue range is exactly the range of sectional curvatures.
    pub fn curvature_operator(&self) -> DMatrix<f64> {
        let f = self.orthonormal_frame();
        let n = self.dim;
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                pairs.push((i, j));
            }
        }
        let m = pairs.len();
        let frame_col = |i: usize| -> Vec<f64> { (0..n).map(|a| f[(a, i)]).collect() };
        let mut op = DMatrix::zeros(m, m);
        for (bi, &(i, j)) in pairs.iter().enumerate() {
            for (bj, &(k, l)) in pairs.iter().enumerate() {
                let (ei, ej, ek, el) = (frame_col(i), frame_col(j), frame_col(k), frame_col(l));
                let mut acc = 0.0;
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            for d in 0..n {
                                // <R(e_i ^ e_j), e_k ^ e_l>
                                acc += self.riemann(a, b, c, d) * ei[a] * ej[b] * el[c] * ek[d];
                            }
                        }
                    }
                }
                op[(bi, bj)] = acc;
            }
        }
        op
    }

    /// (min, max) eigenvalue of the curvature operator; in dimensions <= 3
    /// these are the pointwise sectional extremes.
    pub fn sectional_extremes(&self) -> (f64, f64) {
        let eigs = self.curvature_operator().symmetric_eigen().eigenvalues;
        let min = eigs.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = eigs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        (min, max)
    }

    /// First Bianchi residual: max over index choices of
    /// |R_{abcd} + R_{acdb} + R_{adbc}|.
    pub fn bianchi_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let s = self.riemann(a, b, c, d)
                            + self.riemann(a, c, d, b)
                            + self.riemann(a, d, b, c);
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }
}

/// Grid scan of the sectional extremes with a local refinement pass.
pub fn min_max_sectional(
    metric: &ChartMetric,
    grid: &[Vec<f64>],
    steps: FdSteps,
) -> Result<(f64, f64)> {
    let mut best_min = (f64::INFINITY, Vec::new());
    let mut best_max = (f64::NEG_INFINITY, Vec::new());
    for point in grid {
        let cp = CurvaturePoint::compute(metric, point, steps)?;
        let (lo, hi) = cp.sectional_extremes();
        if lo < best_min.0 {
            best_min = (lo, point.clone());
        }
        if hi > best_max.0 {
            best_max = (hi, point.clone());
        }
    }
    let eval_min = |x: &[f64]| -> f64 {
        match CurvaturePoint::compute(metric, x, steps) {
            Ok(cp) => cp.sectional_extremes().0,
            Err(_) => f64::INFINITY,
        }
    };
    let eval_max = |x: &[f64]| -> f64 {
        match CurvaturePoint::compute(metric, x, steps) {
            Ok(cp) => -cp.sectional_extremes().1,
            Err(_) => f64::INFINITY,
        }
    };
    let (_, refined_min) = nelder_mead(eval_min, &best_min.1, 0.05, 120);
    let (_, refined_max) = nelder_mead(eval_max, &best_max.1, 0.05, 120);
    Ok((best_min.0.min(refined_min), best_max.0.max(-refined_max)))
}

/// Quotient of a metric by a metric-Killing coordinate: the horizontal
/// complement metric h_{ab} = g_{ab} - g_{a phi} g_{b phi} / g_{phi phi} on
/// the remaining coordinates, evaluated at a fixed value of the Killing one.
pub fn orbit_space_metric(
    metric: ChartMetric,
    killing_idx: usize,
    killing_value: f64,
    probe: &[f64],
) -> Result<ChartMetric> {
    let n = metric.dim();
    if killing_idx >= n {
        return Err(contract("killing index out of range".to_string()));
    }
    // Killing check at the probe point: components independent of the
    // designated coordinate, fibre metric positive.
    let mut full = Vec::with_capacity(n);
    let mut it = probe.iter();
    for k in 0..n {
        if k == killing_idx {
            full.push(killing_value);
        } else {
            full.push(*it.next().expect("probe has dim-1 entries"));
        }
    }
    let g0 = metric.eval(&full);
    if g0[(killing_idx, killing_idx)] <= 0.0 {
        return Err(contract("killing fibre has nonpositive length".to_string()));
    }
    let mut shift = full.clone();
    shift[killing_idx] += 0.37;
    let drift = (metric.eval(&shift) - &g0).norm();
    if drift > 1e-12 {
        return Err(contract(format!(
            "designated coordinate is not metric-Killing, drift {drift:.3e}"
        )));
    }

    let reduced = ChartMetric::new(n - 1, move |x: &[f64]| {
        let mut full = Vec::with_capacity(n);
        let mut it = x.iter();
        for k in 0..n {
            if k == killing_idx {
                full.push(killing_value);
            } else {
                full.push(*it.next().unwrap());
            }
        }
        let g = metric.eval(&full);
        let keep: Vec<usize> = (0..n).filter(|&k| k != killing_idx).collect();
        let gff = g[(killing_idx, killing_idx)];
        DMatrix::from_fn(n - 1, n - 1, |i, j| {
            let (a, b) = (keep[i], keep[j]);
            g[(a, b)] - g[(a, killing_idx)] * g[(b, killing_idx)] / gff
        })
    });
    Ok(reduced)
}

/// Convenience: scalar curvature at a point.
pub fn scalar_at(metric: &ChartMetric, x: &[f64], steps: FdSteps) -> Result<f64> {
    Ok(CurvaturePoint::compute(metric, x, steps)?.scalar())
}

/// Convenience: the product-metric scalar additivity oracle needs block
/// metrics; builds the product of two charts.
pub fn product_metric(m1: ChartMetric, m2: ChartMetric) -> ChartMetric {
    let (d1, d2) = (m1.dim(), m2.dim());
    ChartMetric::new(d1 + d2, move |x: &[f64]| {
        let g1 = m1.eval(&x[..d1]);
        let g2 = m2.eval(&x[d1..]);
        let mut g = DMatrix::zeros(d1 + d2, d1 + d2);
        g.view_mut((0, 0), (d1, d1)).copy_from(&g1);
        g.view_mut((d1, d1), (d2, d2)).copy_from(&g2);
        g
    })
}

/// Vector helper for tests and scans.
pub fn coordinate_vector(dim: usize, k: usize) -> Vec<f64> {
    let mut v = vec![0.0; dim];
    v[k] = 1.0;
    v
}

/// Euclidean chart of the given dimension.
pub fn euclidean(dim: usize) -> ChartMetric {
    ChartMetric::new(dim, move |_x: &[f64]| DMatrix::identity(dim, dim))
}

/// Round sphere chart d theta^2 + sin^2 theta d phi^2.
pub fn round_sphere2() -> ChartMetric {
    ChartMetric::with_domain(
        2,
        |x: &[f64]| DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, x[0].sin().powi(2)])),
        |x: &[f64]| x[0] > 0.05 && x[0] < std::f64::consts::PI - 0.05,
    )
}

/// Hyperbolic half-plane chart (dx^2 + dy^2) / y^2.
pub fn hyperbolic_plane() -> ChartMetric {
    ChartMetric::with_domain(
        2,
        |x: &[f64]| {
            let s = 1.0 / (x[1] * x[1]);
            DMatrix::from_diagonal(&DVector::from_vec(vec![s, s]))
        },
        |x: &[f64]| x[1] > 0.05,
    )
}

/// Round 3-sphere in geodesic polar coordinates.
pub fn round_sphere3() -> ChartMetric {
    ChartMetric::with_domain(
        3,
        |x: &[f64]| {
            let r = x[0];
            let s2 = r.sin().powi(2);
            DMatrix::from_diagonal(&DVector::from_vec(vec![
                1.0,
                s2,
                s2 * x[1].sin().powi(2),
            ]))
        },
        |x: &[f64]| {
            x[0] > 0.2
                && x[0] < std::f64::consts::PI - 0.2
                && x[1] > 0.2
                && x[1] < std::f64::consts::PI - 0.2
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclidean_christoffel_vanishes() {
        let m = euclidean(3);
        let cp = CurvaturePoint::compute(&m, &[0.3, -0.2, 1.0], FdSteps::default()).unwrap();
        for k in 0..3 {
            assert!(cp.gamma[k].norm() < 1e-10);
        }
        assert!(cp.riem.iter().all(|v| v.abs() < 1e-9));
    }

    #[test]
    fn sphere_christoffel_closed_form() {
        let m = round_sphere2();
        let t = 0.9;
        let cp = CurvaturePoint::compute(&m, &[t, 0.4], FdSteps::default()).unwrap();
        // Gamma^t_{phi phi} = -sin t cos t, Gamma^phi_{t phi} = cot t
        assert!((cp.gamma[0][(1, 1)] + t.sin() * t.cos()).abs() < 1e-6);
        assert!((cp.gamma[1][(0, 1)] - t.cos() / t.sin()).abs() < 1e-6);
        // lower-index symmetry
        for k in 0..2 {
            assert!((cp.gamma[k][(0, 1)] - cp.gamma[k][(1, 0)]).abs() < 1e-12);
        }
    }

    #[test]
    fn unit_sphere_curvature() {
        let m = round_sphere2();
        let cp = CurvaturePoint::compute(&m, &[1.1, 0.7], FdSteps::default()).unwrap();
        let k = cp.sectional(&[1.0, 0.0], &[0.0, 1.0]).unwrap();
        assert!((k - 1.0).abs() < 1e-5, "K = {k}");
        assert!((cp.scalar() - 2.0).abs() < 1e-4);
    }

    #[test]
    fn hyperbolic_curvature() {
        let m = hyperbolic_plane();
        let cp = CurvaturePoint::compute(&m, &[0.3, 1.0], FdSteps::default()).unwrap();
        let k = cp.sectional(&[1.0, 0.0], &[0.0, 1.0]).unwrap();
        assert!((k + 1.0).abs() < 1e-5, "K = {k}");
    }

    #[test]
    fn degenerate_plane_rejected() {
        let m = euclidean(2);
        let cp = CurvaturePoint::compute(&m, &[0.0, 0.0], FdSteps::default()).unwrap();
        assert!(cp.sectional(&[1.0, 0.0], &[2.0, 0.0]).is_err());
    }

    #[test]
    fn product_scalar_adds() {
        let prod = product_metric(round_sphere2(), hyperbolic_plane());
        let x = [1.0, 0.5, 0.2, 1.3];
        let s = scalar_at(&prod, &x, FdSteps::default()).unwrap();
        let s1 = scalar_at(&round_sphere2(), &x[..2], FdSteps::default()).unwrap();
        let s2 = scalar_at(&hyperbolic_plane(), &x[2..], FdSteps::default()).unwrap();
        assert!((s - s1 - s2).abs() < 1e-4, "{s} vs {}", s1 + s2);
    }

    #[test]
    fn round_sphere3_extremes() {
        let m = round_sphere3();
        let grid: Vec<Vec<f64>> = vec![vec![1.2, 1.0, 0.5], vec![0.9, 1.4, 2.0]];
        let (lo, hi) = min_max_sectional(&m, &grid, FdSteps::default()).unwrap();
        assert!((lo - 1.0).abs() < 1e-4 && (hi - 1.0).abs() < 1e-4, "({lo}, {hi})");
    }

    #[test]
    fn bianchi_holds_on_samples() {
        let m = round_sphere3();
        let cp = CurvaturePoint::compute(&m, &[1.2, 1.0, 0.5], FdSteps::default()).unwrap();
        assert!(cp.bianchi_residual() < 1e-5);
    }

    #[test]
    fn near_boundary_rejected() {
        let m = round_sphere2();
        assert!(CurvaturePoint::compute(&m, &[0.051, 0.0], FdSteps::default()).is_err());
    }

    #[test]
    fn riemann_pair_symmetry() {
        let m = round_sphere3();
        let cp = CurvaturePoint::compute(&m, &[1.2, 1.0, 0.5], FdSteps::default()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        let r = cp.riemann(a, b, c, d);
                        assert!((r - cp.riemann(c, d, a, b)).abs() < 1e-6);
                        assert!((r + cp.riemann(b, a, c, d)).abs() < 1e-6);
                        assert!((r + cp.riemann(a, b, d, c)).abs() < 1e-6);
                    }
                }
            }
        }
    }

    #[test]
    fn richardson_consistency() {
        let m = round_sphere2();
        let k_at = |steps: FdSteps| {
            CurvaturePoint::compute(&m, &[1.1, 0.7], steps)
                .unwrap()
                .sectional(&[1.0, 0.0], &[0.0, 1.0])
                .unwrap()
        };
        let k1 = k_at(FdSteps::default());
        let k2 = k_at(FdSteps {
            first: METRIC_STEP_1 / 2.0,
            second: METRIC_STEP_2 / 2.0,
        });
        assert!((k1 - k2).abs() < 10.0 * 1e-5);
    }
}
