use gmlab::riemann::{
    berger_metric, berger_params, hemisphere_metric, min_max_sectional, sigma2_metric,
    sigma31_metric, sigma32_metric, ChartMetric, CurvaturePoint, FdSteps,
};
use gmlab::sp2::MetricParams;
use std::f64::consts::PI;

pub struct ScanSpec {
    pub metric_id: String,
    pub mu: f64,
    pub nu: f64,
    pub grid: usize,
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![0.5 * (lo + hi)];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Builds the chart and the scan grid for a metric id. Coordinates with no
/// effect on the components are held fixed.
fn build(spec: &ScanSpec) -> Result<(ChartMetric, Vec<Vec<f64>>), String> {
    let p = MetricParams::new(spec.mu, spec.nu).map_err(|e| e.to_string())?;
    let n = spec.grid.max(2);
    let interior = |n: usize| linspace(0.1, PI - 0.1, n);
    match spec.metric_id.as_str() {
        "sigma2" => {
            let grid = interior(n).into_iter().map(|s| vec![s, 1.0]).collect();
            Ok((sigma2_metric(p), grid))
        }
        "sigma31" => {
            let mut grid = Vec::new();
            for t in interior(n) {
                grid.push(vec![t, 1.2, 0.7]);
            }
            Ok((sigma31_metric(p), grid))
        }
        "sigma32" => {
            let mut grid = Vec::new();
            for t in interior(n) {
                for th in interior(n) {
                    for ph in linspace(0.1, 2.0, n.min(3)) {
                        grid.push(vec![t, th, ph]);
                    }
                }
            }
            Ok((sigma32_metric(p), grid))
        }
        "hemisphere" => {
            let mut grid = Vec::new();
            for t in interior(n) {
                for th in interior(n) {
                    grid.push(vec![t, th]);
                }
            }
            Ok((hemisphere_metric(p).map_err(|e| e.to_string())?, grid))
        }
        "l3" | "sigma30" | "p3" => {
            let (w1, w2) = match spec.metric_id.as_str() {
                "l3" => berger_params::l3(p),
                "sigma30" => berger_params::sigma30(p),
                _ => berger_params::p3(p),
            };
            let mut grid = Vec::new();
            for a in linspace(-0.4, 0.4, n) {
                grid.push(vec![a, 0.1, 0.3]);
            }
            Ok((berger_metric(w1, w2), grid))
        }
        other => Err(format!(
            "unknown metric id '{other}' (expected sigma2, sigma31, sigma32, l3, sigma30, p3, hemisphere)"
        )),
    }
}

/// Deterministic CSV: a header documenting the parameters and steps, then
/// one row (coords..., k_min, k_max, scalar) per grid point.
pub fn curvature_scan(spec: &ScanSpec) -> Result<String, String> {
    let steps = FdSteps::default();
    let (metric, grid) = build(spec)?;
    let mut out = String::new();
    out.push_str(&format!(
        "# metric={} mu={} nu={} grid={} fd_first={:e} fd_second={:e}\n",
        spec.metric_id, spec.mu, spec.nu, spec.grid, steps.first, steps.second
    ));
    let dim = metric.dim();
    let coords: Vec<String> = (0..dim).map(|k| format!("x{k}")).collect();
    out.push_str(&format!("{},k_min,k_max,scalar\n", coords.join(",")));
    for point in &grid {
        let cp = CurvaturePoint::compute(&metric, point, steps).map_err(|e| e.to_string())?;
        let (lo, hi) = cp.sectional_extremes();
        let row: Vec<String> = point.iter().map(|v| format!("{v:.12e}")).collect();
        out.push_str(&format!(
            "{},{:.12e},{:.12e},{:.12e}\n",
            row.join(","),
            lo,
            hi,
            cp.scalar()
        ));
    }
    Ok(out)
}

/// The global (min, max) over an emitted scan, for summary output.
pub fn scan_extremes(spec: &ScanSpec) -> Result<(f64, f64), String> {
    let steps = FdSteps::default();
    let (metric, grid) = build(spec)?;
    min_max_sectional(&metric, &grid, steps).map_err(|e| e.to_string())
}
