use crate::report::{BoundKind, ReportEntry, Status};
use gmlab::actions::{
    brieskorn_equivalence_residual, cocycle_residual, nonlinear_rotate, normal_curve_residual,
    q_map, q_map_raw,
};
use gmlab::algebra::imvec::{cross, ImVec};
use gmlab::algebra::quaternion::Quaternion;
use gmlab::algebra::safe_trig_quotients;
use gmlab::brieskorn::{self, beta, beta_geodesic_residual};
use gmlab::diffeo::{
    coefficient_matrix, det_lower_bound, equivariance_residual, partial_injective, psi,
    psi_inverse, psi_trig, span_residual, PsiVariant, SpherePair,
};
use gmlab::quotients::{
    fiber_count, freeness_oracle, is_free, join_to_sigma7, phi, rho, CoveringVariant, JoinPoint,
    LensActionParams,
};
use gmlab::riemann::{
    berger_extremes, berger_metric, berger_params, hemisphere_curvature, hemisphere_metric,
    hemisphere_omega, hyperbolic_plane, min_max_sectional, round_sphere2, sigma2_curvature_values,
    sigma2_k_at_pole, sigma2_metric, sigma31_curvature_range, sigma31_metric,
    sigma32_deck_residual, sigma32_metric, sigma32_min_k, sigma32_mu1_agreement,
    sigma32_scalar_mu1, curvature_component, CurvaturePoint, FdSteps,
};
use gmlab::sp2::{
    self, alpha_tilde, bullet_act, bullet_horizontality_residual, euler_arnold_residual,
    horizontal_lift, isometry_differential_residual, killing_agreement_residual,
    metric_matrix_residual, orbit_distance, sp2_basis, star_act, star_horizontality_residual,
    torus_point, wiedersehen_check, BulletElement, MetricParams, QMat2, Sigma7Point,
};
use gmlab::tolerances as tol;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

/// Deterministic configuration of a verification run.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub mu_nu: Vec<(f64, f64)>,
    pub tol_overrides: HashMap<String, f64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            samples: 1000,
            mu_nu: vec![(0.5, 0.5), (1.0, 0.5), (1.0, 1.0)],
            tol_overrides: HashMap::new(),
        }
    }
}

/// Per-check context: a private RNG stream derived from (seed, check id), so
/// filtering does not perturb other checks' samples.
pub struct CheckCtx {
    pub rng: ChaCha8Rng,
    pub samples: usize,
    pub mu_nu: Vec<(f64, f64)>,
}

impl CheckCtx {
    fn new(cfg: &SuiteConfig, id: &str) -> Self {
        let mut h = Sha256::new();
        h.update(cfg.seed.to_le_bytes());
        h.update(id.as_bytes());
        let digest = h.finalize();
        let mut seed = [0u8; 32];
        seed.copy_from_slice(&digest);
        CheckCtx {
            rng: ChaCha8Rng::from_seed(seed),
            samples: cfg.samples,
            mu_nu: cfg.mu_nu.clone(),
        }
    }

    fn pair(&mut self, n: usize) -> SpherePair {
        let (p, w) = gmlab::sp2::sampling::random_sphere_pair(&mut self.rng, n);
        SpherePair::new_unchecked(p, w)
    }

    fn metrics(&self) -> Vec<MetricParams> {
        self.mu_nu
            .iter()
            .map(|&(mu, nu)| MetricParams::new(mu, nu).expect("positive metric parameters"))
            .collect()
    }
}

/// Result of one check body: the extremal residual, its sample count, and
/// the bound direction.
pub struct Outcome {
    pub residual: f64,
    pub samples: usize,
    pub bound: BoundKind,
}

impl Outcome {
    fn upper(residual: f64, samples: usize) -> Self {
        Outcome {
            residual,
            samples,
            bound: BoundKind::Upper,
        }
    }

    fn lower(residual: f64, samples: usize) -> Self {
        Outcome {
            residual,
            samples,
            bound: BoundKind::Lower,
        }
    }
}

pub struct CheckDef {
    pub id: &'static str,
    pub anchor: &'static str,
    pub default_tol: f64,
    pub run: fn(&mut CheckCtx) -> Outcome,
}

/// Simple glob matching with `*` wildcards.
pub fn glob_match(pattern: &str, id: &str) -> bool {
    let parts: Vec<&str> = pattern.split('*').collect();
    if parts.len() == 1 {
        return pattern == id;
    }
    let mut rest = id;
    for (k, part) in parts.iter().enumerate() {
        if part.is_empty() {
            continue;
        }
        if k == 0 {
            match rest.strip_prefix(part) {
                Some(r) => rest = r,
                None => return false,
            }
        } else if k == parts.len() - 1 {
            return rest.ends_with(part);
        } else {
            match rest.find(part) {
                Some(pos) => rest = &rest[pos + part.len()..],
                None => return false,
            }
        }
    }
    parts.last().map(|p| p.is_empty()).unwrap_or(false) || rest.is_empty()
}

pub fn run_checks(cfg: &SuiteConfig, filter: Option<&str>) -> Result<Vec<ReportEntry>, String> {
    let defs = registry();
    let selected: Vec<&CheckDef> = match filter {
        None => defs.iter().collect(),
        Some(pat) => {
            let hits: Vec<&CheckDef> = defs.iter().filter(|d| glob_match(pat, d.id)).collect();
            if hits.is_empty() {
                return Err(format!("filter '{pat}' matches no registered check"));
            }
            hits
        }
    };
    let mut entries = Vec::new();
    for def in selected {
        let mut ctx = CheckCtx::new(cfg, def.id);
        let start = std::time::Instant::now();
        let outcome = (def.run)(&mut ctx);
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        let threshold = cfg
            .tol_overrides
            .get(def.id)
            .copied()
            .unwrap_or(def.default_tol);
        let passed = match outcome.bound {
            BoundKind::Upper => outcome.residual < threshold,
            BoundKind::Lower => outcome.residual > threshold,
        };
        entries.push(ReportEntry {
            check: def.id.to_string(),
            anchor: def.anchor.to_string(),
            status: if passed { Status::Pass } else { Status::Fail },
            residual: outcome.residual,
            threshold,
            bound: outcome.bound,
            samples: outcome.samples,
            wall_ms,
        });
    }
    Ok(entries)
}

pub fn registry() -> Vec<CheckDef> {
    vec![
        CheckDef {
            id: "algebra.cross",
            anchor: "seven-dimensional cross product identities",
            default_tol: 1e-12,
            run: |ctx| {
                let n = ctx.samples.min(2000);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let a = gmlab::sp2::sampling::random_unit_imvec(&mut ctx.rng, 7);
                    let b = gmlab::sp2::sampling::random_unit_imvec(&mut ctx.rng, 7);
                    let c = cross(&a, &b).unwrap();
                    worst = worst.max(c.dot(&a).abs()).max(c.dot(&b).abs());
                    let lagrange = a.norm_sqr() * b.norm_sqr() - a.dot(&b).powi(2);
                    worst = worst.max((c.norm_sqr() - lagrange).abs());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "algebra.sphere_exp",
            anchor: "spherical exponential is a unit one-parameter subgroup",
            default_tol: 1e-13,
            run: |ctx| {
                let n = ctx.samples.min(2000);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let v = gmlab::sp2::sampling::random_imvec(&mut ctx.rng, 3);
                    let (s, t) = (ctx.rng.gen_range(-3.0..3.0), ctx.rng.gen_range(-3.0..3.0));
                    let prod = gmlab::algebra::sphere_exp(&v, s) * gmlab::algebra::sphere_exp(&v, t);
                    worst = worst.max((prod - gmlab::algebra::sphere_exp(&v, s + t)).norm());
                    worst = worst.max((gmlab::algebra::sphere_exp(&v, t).norm() - 1.0).abs());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "algebra.trig_quotients",
            anchor: "removable singularities of the analytic quotients",
            default_tol: 1e-13,
            run: |ctx| {
                let n = ctx.samples.min(4000);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let r: f64 = ctx.rng.gen_range(0.0..1.0);
                    let (f1, f2) = safe_trig_quotients(r).unwrap();
                    if r > 1e-2 {
                        worst = worst.max((f1 - (PI * r / 2.0).sin() / r).abs());
                    }
                    if r < 1.0 - 1e-2 {
                        worst = worst.max((f2 - (PI * r / 2.0).cos() / (1.0 - r * r)).abs());
                    }
                }
                let (f1, _) = safe_trig_quotients(0.0).unwrap();
                let (_, f2) = safe_trig_quotients(1.0).unwrap();
                worst = worst.max((f1 - PI / 2.0).abs()).max((f2 - PI / 4.0).abs());
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "sp2.actions.commute",
            anchor: "the two circle actions commute",
            default_tol: 1e-13,
            run: |ctx| {
                let n = ctx.samples.min(500);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let a = gmlab::sp2::sampling::random_sp2(&mut ctx.rng);
                    let q = gmlab::sp2::sampling::random_unit_quaternion(&mut ctx.rng);
                    let r = gmlab::sp2::sampling::random_unit_quaternion(&mut ctx.rng);
                    let b = gmlab::sp2::sampling::random_o2(&mut ctx.rng);
                    let lhs = bullet_act(&b, r, &star_act(q, &a).unwrap()).unwrap();
                    let rhs = star_act(q, &bullet_act(&b, r, &a).unwrap()).unwrap();
                    worst = worst.max(lhs.sub(&rhs).frobenius());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "sp2.actions.isometry",
            anchor: "both actions preserve the two-parameter metrics",
            default_tol: 1e-7,
            run: |ctx| {
                let n = ctx.samples.min(50);
                let basis = sp2_basis();
                let mut worst: f64 = 0.0;
                for p in ctx.metrics() {
                    for _ in 0..n {
                        let x = gmlab::sp2::sampling::random_sp2(&mut ctx.rng);
                        let q = gmlab::sp2::sampling::random_unit_quaternion(&mut ctx.rng);
                        let b = gmlab::sp2::sampling::random_o2(&mut ctx.rng);
                        let r = gmlab::sp2::sampling::random_unit_quaternion(&mut ctx.rng);
                        let u = &basis[ctx.rng.gen_range(0..10)];
                        let v = &basis[ctx.rng.gen_range(0..10)];
                        let star = |a: &QMat2| star_act(q, a).unwrap();
                        let bullet = |a: &QMat2| bullet_act(&b, r, a).unwrap();
                        worst = worst.max(isometry_differential_residual(&star, &x, u, v, p));
                        worst = worst.max(isometry_differential_residual(&bullet, &x, u, v, p));
                    }
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "sp2.orbit_equal",
            anchor: "orbit equality by closed-form alignment",
            default_tol: 1e-12,
            run: |ctx| {
                let n = ctx.samples.min(1000);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let a = gmlab::sp2::sampling::random_sp2(&mut ctx.rng);
                    let q = gmlab::sp2::sampling::random_unit_quaternion(&mut ctx.rng);
                    let x = Sigma7Point { rep: a };
                    let y = Sigma7Point {
                        rep: star_act(q, &a).unwrap(),
                    };
                    worst = worst.max(orbit_distance(&x, &y).0);
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "sp2.lift.first_column",
            anchor: "horizontal lift covers the great circle",
            default_tol: 1e-12,
            run: |ctx| {
                let n = ctx.samples.min(500);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let (p, w) = random_velocity(&mut ctx.rng);
                    let t = ctx.rng.gen_range(-3.0..3.0);
                    let g = horizontal_lift(&p, &w, t).unwrap();
                    worst = worst.max(g.unitarity_residual());
                    let c0 = Quaternion::scalar(t.cos())
                        + Quaternion::from_imag([p.c[0], p.c[1], p.c[2]]).scale(t.sin());
                    let d = (g.e[0][0] - c0).norm_sqr() + (g.e[1][0] - w.scale(t.sin())).norm_sqr();
                    worst = worst.max(d.sqrt());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "sp2.lift.horizontal",
            anchor: "lifted circles are star-horizontal at mu = 1",
            default_tol: tol::HORIZONTAL,
            run: |ctx| {
                let n = ctx.samples.min(100);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let (p, w) = random_velocity(&mut ctx.rng);
                    let nu = ctx.rng.gen_range(0.2..2.0);
                    let params = MetricParams::new(1.0, nu).unwrap();
                    let curve = move |t: f64| horizontal_lift(&p, &w, t).unwrap();
                    for t in [0.3, 1.2, 2.2] {
                        worst = worst.max(star_horizontality_residual(&curve, params, t));
                    }
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "sp2.lift.horizontal_negative",
            anchor: "star-horizontality fails at mu = 2",
            default_tol: tol::NEG_CONTROL,
            run: |ctx| {
                let n = ctx.samples.min(30);
                let params = MetricParams::new(2.0, 1.0).unwrap();
                let mut best: f64 = 0.0;
                for _ in 0..n {
                    let (p, w) = random_velocity(&mut ctx.rng);
                    let curve = move |t: f64| horizontal_lift(&p, &w, t).unwrap();
                    for t in [0.4, 1.0, 1.9] {
                        best = best.max(star_horizontality_residual(&curve, params, t));
                    }
                }
                Outcome::lower(best, n)
            },
        },
        CheckDef {
            id: "sp2.alpha.geodesic",
            anchor: "the normal geodesic solves the left-invariant equation",
            default_tol: tol::FD_CERT,
            run: |_ctx| {
                let mut worst: f64 = 0.0;
                let mut count = 0;
                for mu in [0.3, 0.5, 1.0, 1.5, 2.0] {
                    for nu in [0.25, 0.5, 1.0, 1.5, 2.2] {
                        let p = MetricParams::new(mu, nu).unwrap();
                        for k in 0..4 {
                            worst = worst
                                .max(euler_arnold_residual(&alpha_tilde, p, 0.2 + 0.4 * k as f64));
                            count += 1;
                        }
                    }
                }
                Outcome::upper(worst, count)
            },
        },
        CheckDef {
            id: "sp2.alpha.horizontal",
            anchor: "the normal geodesic crosses all star orbits perpendicularly",
            default_tol: tol::HORIZONTAL,
            run: |ctx| {
                let mut worst: f64 = 0.0;
                let mut count = 0;
                for p in ctx.metrics() {
                    for k in 0..32 {
                        worst =
                            worst.max(star_horizontality_residual(&alpha_tilde, p, -1.5 + 0.2 * k as f64));
                        count += 1;
                    }
                }
                Outcome::upper(worst, count)
            },
        },
        CheckDef {
            id: "sp2.killing.agreement",
            anchor: "closed-form horizontal Killing fields match projections",
            default_tol: tol::KILLING_AGREEMENT,
            run: |_ctx| {
                let mut worst: f64 = 0.0;
                let mut count = 0;
                for mu in [0.3, 0.5, 1.0, 1.4, 2.0] {
                    for nu in [0.25, 0.5, 1.0, 1.5, 2.2] {
                        let p = MetricParams::new(mu, nu).unwrap();
                        for k in 0..16 {
                            worst = worst.max(killing_agreement_residual(0.05 + 0.19 * k as f64, p));
                            count += 1;
                        }
                    }
                }
                Outcome::upper(worst, count)
            },
        },
        CheckDef {
            id: "sp2.metric_matrix",
            anchor: "closed-form Killing inner products",
            default_tol: tol::KILLING_AGREEMENT,
            run: |_ctx| {
                let mut worst: f64 = 0.0;
                let mut count = 0;
                for mu in [0.3, 0.5, 1.0, 1.4, 2.0] {
                    for nu in [0.25, 0.5, 1.0, 1.5, 2.2] {
                        let p = MetricParams::new(mu, nu).unwrap();
                        for k in 0..16 {
                            worst = worst.max(metric_matrix_residual(0.05 + 0.19 * k as f64, p));
                            count += 1;
                        }
                    }
                }
                Outcome::upper(worst, count)
            },
        },
        CheckDef {
            id: "sp2.membership",
            anchor: "distinguished subsets detected on orbit representatives",
            default_tol: 0.5,
            run: |ctx| {
                let n = ctx.samples.min(200);
                let mut failures = 0.0;
                for k in 0..24 {
                    let x = Sigma7Point {
                        rep: alpha_tilde(0.27 * k as f64),
                    };
                    if !sp2::in_sigma5(&x) {
                        failures += 1.0;
                    }
                }
                for _ in 0..n {
                    let (p, w) = random_velocity(&mut ctx.rng);
                    let g = horizontal_lift(&p, &w, FRAC_PI_2).unwrap().orthonormalized();
                    let q = gmlab::sp2::sampling::random_unit_quaternion(&mut ctx.rng);
                    let x = Sigma7Point {
                        rep: star_act(q, &g).unwrap(),
                    };
                    if !sp2::in_sigma6_pm1(&x) {
                        failures += 1.0;
                    }
                }
                if !sp2::in_sigma1(&Sigma7Point {
                    rep: QMat2::identity(),
                }) {
                    failures += 1.0;
                }
                Outcome::upper(failures, n + 25)
            },
        },
        CheckDef {
            id: "sp2.wiedersehen",
            anchor: "all geodesics from the circle refocus after time pi",
            default_tol: tol::ORBIT_EQUAL,
            run: |ctx| {
                let n = ctx.samples.min(100);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let (p, w) = random_velocity(&mut ctx.rng);
                    let rep = wiedersehen_check(&p, &w, 1.0).unwrap();
                    worst = worst.max(rep.at_pi).max(rep.at_two_pi).max(rep.witness_at_pi);
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "sp2.flat_torus",
            anchor: "the rectangular torus is horizontal and totally geodesic",
            default_tol: tol::FD_CERT,
            run: |ctx| {
                let mut worst: f64 = 0.0;
                let mut count = 0;
                for &(mu, nu) in &[(0.5, 0.5), (0.5, 1.0), (1.0, 0.5), (1.0, 1.0)] {
                    let p = MetricParams::new(mu, nu).unwrap();
                    for i in 0..8 {
                        for j in 0..8 {
                            let (a, b) = (i as f64 * TAU / 8.0, j as f64 * TAU / 8.0);
                            worst = worst.max(torus_point(a, b).unitarity_residual());
                            let ca = move |t: f64| torus_point(t, b);
                            let cb = move |t: f64| torus_point(a, t);
                            worst = worst.max(star_horizontality_residual(&ca, p, a));
                            worst = worst.max(star_horizontality_residual(&cb, p, b));
                            count += 1;
                        }
                    }
                    worst = worst.max(euler_arnold_residual(&|t| torus_point(t, 0.3), p, 0.2));
                    worst = worst.max(euler_arnold_residual(&|t| torus_point(0.3, t), p, 0.2));
                }
                let _ = ctx;
                Outcome::upper(worst, count)
            },
        },
        CheckDef {
            id: "sp2.flat_torus_negative",
            anchor: "only a circle factor is horizontal for the bullet action",
            default_tol: tol::NEG_CONTROL,
            run: |_ctx| {
                let p = MetricParams::biinvariant();
                let cb = |t: f64| torus_point(0.3, t);
                Outcome::lower(bullet_horizontality_residual(&cb, p, 0.4), 1)
            },
        },
        CheckDef {
            id: "sp2.isotropy",
            anchor: "isotropy tables along the normal geodesic",
            default_tol: tol::ISOTROPY_FIX,
            run: |ctx| {
                let report = sp2::isotropy::verify_isotropy(0.3, &mut ctx.rng, ctx.samples.min(100));
                // the non-member margin is asserted through its own check
                Outcome::upper(report.worst_fix, ctx.samples.min(100))
            },
        },
        CheckDef {
            id: "sp2.isotropy_negative",
            anchor: "random isometries move the geodesic points",
            default_tol: tol::ISOTROPY_MOVE,
            run: |ctx| {
                let report = sp2::isotropy::verify_isotropy(0.3, &mut ctx.rng, ctx.samples.min(100));
                Outcome::lower(report.smallest_move, ctx.samples.min(100))
            },
        },
        CheckDef {
            id: "sp2.fixed_points",
            anchor: "fixed sets land in the predicted strata",
            default_tol: 1e-6,
            run: |ctx| {
                let mut worst: f64 = 0.0;
                let mut found = 0;
                let id2 = [[1.0, 0.0], [0.0, 1.0]];
                let neg2 = [[-1.0, 0.0], [0.0, -1.0]];
                let i_q = Quaternion::new(0.0, 1.0, 0.0, 0.0);
                for _ in 0..12 {
                    if let Some(x) =
                        sp2::fixed_points::find_fixed_point(&BulletElement::new(id2, i_q), &mut ctx.rng, 80)
                    {
                        found += 1;
                        worst = worst.max(sp2::fixed_points::u2_membership_residual(&x));
                    }
                }
                for _ in 0..12 {
                    if let Some(x) =
                        sp2::fixed_points::find_fixed_point(&BulletElement::new(neg2, i_q), &mut ctx.rng, 80)
                    {
                        found += 1;
                        if !sp2::in_sigma5(&x) {
                            worst = worst.max(1.0);
                        }
                    }
                }
                if found < 6 {
                    worst = worst.max(1.0);
                }
                Outcome::upper(worst, found)
            },
        },
        CheckDef {
            id: "sp2.curvature_component",
            anchor: "the R(alpha', v1) v2 . v3 component carries the sin 4s factor",
            default_tol: 1e-2,
            run: |_ctx| {
                let p = MetricParams::biinvariant();
                let steps = FdSteps::default();
                let at_quarter = curvature_component(FRAC_PI_4, p, steps).unwrap();
                let plus = curvature_component(FRAC_PI_4 + 0.2, p, steps).unwrap();
                let minus = curvature_component(FRAC_PI_4 - 0.2, p, steps).unwrap();
                let scale = plus.abs().max(minus.abs());
                let mut residual = at_quarter.abs() / scale.max(1e-12);
                if plus * minus >= 0.0 || scale < 1e-3 {
                    residual = 1.0;
                }
                residual = residual.max((plus + minus).abs() / scale);
                Outcome::upper(residual, 3)
            },
        },
        CheckDef {
            id: "brieskorn.action",
            anchor: "the circle-and-rotation action preserves both equations",
            default_tol: tol::ON_MANIFOLD,
            run: |ctx| {
                let n = ctx.samples.min(1000);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let pt = psi(&ctx.pair(3)).to_point();
                    let theta = ctx.rng.gen_range(0.0..TAU);
                    let reflect = ctx.rng.gen_bool(0.5);
                    let q = gmlab::sp2::sampling::random_unit_quaternion(&mut ctx.rng);
                    let m = q.rotation_matrix();
                    let g = brieskorn::BrieskornIsometry::new(
                        brieskorn::O2Element { theta, reflect },
                        DMatrix::from_fn(3, 3, |i, j| m[i][j]),
                    )
                    .unwrap();
                    worst = worst.max(brieskorn::act(&g, &pt).unwrap().on_manifold_residual());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "brieskorn.g2_action",
            anchor: "automorphism rotations preserve the 13-sphere model",
            default_tol: tol::EQUIVARIANCE_G2,
            run: |ctx| {
                let n = ctx.samples.min(50);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let g = brieskorn::g2_sample(k as u64);
                    let pair = ctx.pair(7);
                    let pt = psi(&pair);
                    let apply = |v: &ImVec| {
                        ImVec::new(
                            (0..7)
                                .map(|i| (0..7).map(|j| g[(i, j)] * v.c[j]).sum())
                                .collect(),
                        )
                    };
                    let rotated = gmlab::brieskorn::BrieskornRealForm::new(
                        pt.x0,
                        pt.y0,
                        apply(&pt.x),
                        apply(&pt.y),
                    );
                    worst = worst.max(rotated.max_residual());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "brieskorn.beta.unit_speed",
            anchor: "the normal geodesic is parametrized by arc length",
            default_tol: 1e-9,
            run: |_ctx| {
                let mut worst: f64 = 0.0;
                for k in 0..64 {
                    worst = worst.max(beta_geodesic_residual(-1.5 + 0.1 * k as f64).speed_defect);
                }
                Outcome::upper(worst, 64)
            },
        },
        CheckDef {
            id: "brieskorn.beta.geodesic",
            anchor: "tangential acceleration and orbit perpendicularity vanish",
            default_tol: tol::BETA_GEODESIC,
            run: |_ctx| {
                let mut worst: f64 = 0.0;
                for k in 0..64 {
                    let rep = beta_geodesic_residual(-1.5 + 0.1 * k as f64);
                    worst = worst.max(rep.tangential_acc).max(rep.orbit_perp);
                }
                Outcome::upper(worst, 64)
            },
        },
        CheckDef {
            id: "brieskorn.beta.negative",
            anchor: "a reparametrized curve fails the geodesic certificate",
            default_tol: 1e-2,
            run: |_ctx| {
                let curve = |s: f64| beta(s * s);
                Outcome::lower(
                    gmlab::brieskorn::beta::beta_curve_residual(&curve, 0.8).tangential_acc,
                    1,
                )
            },
        },
        CheckDef {
            id: "brieskorn.isotropy",
            anchor: "isotropy tables along the Brieskorn normal geodesic",
            default_tol: tol::ISOTROPY_FIX,
            run: |ctx| {
                let report = brieskorn::verify_isotropy(0.3, &mut ctx.rng, ctx.samples.min(100));
                Outcome::upper(report.worst_fix, ctx.samples.min(100))
            },
        },
        CheckDef {
            id: "brieskorn.isotropy_negative",
            anchor: "random isometries move the Brieskorn geodesic points",
            default_tol: tol::ISOTROPY_MOVE,
            run: |ctx| {
                let report = brieskorn::verify_isotropy(0.3, &mut ctx.rng, ctx.samples.min(100));
                Outcome::lower(report.smallest_move, ctx.samples.min(100))
            },
        },
        CheckDef {
            id: "brieskorn.disc",
            anchor: "the disc projection is bounded and rotation-invariant",
            default_tol: 1e-13,
            run: |ctx| {
                let n = ctx.samples.min(500);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let pt = psi(&ctx.pair(3)).to_point();
                    let disc = pt.disc_projection();
                    worst = worst.max((disc.norm() - 1.0).max(0.0));
                    let q = gmlab::sp2::sampling::random_unit_quaternion(&mut ctx.rng);
                    let m = q.rotation_matrix();
                    let g = brieskorn::BrieskornIsometry::new(
                        brieskorn::O2Element::identity(),
                        DMatrix::from_fn(3, 3, |i, j| m[i][j]),
                    )
                    .unwrap();
                    let moved = brieskorn::act(&g, &pt).unwrap();
                    worst = worst.max((moved.disc_projection() - disc).norm());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "brieskorn.g2",
            anchor: "derivation exponentials are octonion automorphisms",
            default_tol: tol::EQUIVARIANCE_G2,
            run: |ctx| {
                let n = ctx.samples.min(10);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let g = brieskorn::g2_sample(1000 + k as u64);
                    worst = worst.max(brieskorn::automorphism_residual(&g, k as u64, 30));
                    worst = worst
                        .max((&g * g.transpose() - DMatrix::<f64>::identity(7, 7)).norm());
                }
                let _ = &ctx.rng;
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "diffeo.psi.residual",
            anchor: "the rational map satisfies the three real equations",
            default_tol: tol::PSI_RESIDUAL,
            run: |ctx| {
                let n = ctx.samples.max(1000);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let dim = if k % 2 == 0 { 3 } else { 7 };
                    worst = worst.max(psi(&ctx.pair(dim)).max_residual());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "diffeo.psi_trig.residual",
            anchor: "the trigonometric precursor stays on the manifold",
            default_tol: tol::PSI_TRIG_RESIDUAL,
            run: |ctx| {
                let n = ctx.samples.min(2000);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let dim = if k % 2 == 0 { 3 } else { 7 };
                    worst = worst.max(psi_trig(&ctx.pair(dim)).max_residual());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "diffeo.inverse.roundtrip",
            anchor: "the closed-form inverse recovers the sphere pair",
            default_tol: tol::PSI_ROUNDTRIP,
            run: |ctx| {
                let n = ctx.samples.min(1000);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let dim = if k % 2 == 0 { 3 } else { 7 };
                    let pair = ctx.pair(dim);
                    let back = psi_inverse(&psi(&pair)).unwrap();
                    worst = worst.max(pair.dist(&back));
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "diffeo.inverse.det_bound",
            anchor: "determinant lower bound of the coefficient matrix",
            default_tol: tol::DET_BOUND_SLACK,
            run: |ctx| {
                let n = ctx.samples.max(2000);
                let mut margin = f64::INFINITY;
                for _ in 0..n {
                    let b = psi(&ctx.pair(3));
                    let det = coefficient_matrix(PsiVariant::Rational, b.x0, b.y0).determinant();
                    margin = margin.min(det - det_lower_bound(b.x0));
                }
                Outcome::lower(margin, n)
            },
        },
        CheckDef {
            id: "diffeo.partial",
            anchor: "odd-dimensional injective maps stay on the manifold",
            default_tol: 1e-11,
            run: |ctx| {
                let n = ctx.samples.min(1000);
                let mut worst: f64 = 0.0;
                let mut used = 0;
                for _ in 0..n {
                    let pair = ctx.pair(5);
                    if pair.w.norm() < 1e-6 {
                        continue;
                    }
                    used += 1;
                    worst = worst.max(partial_injective(&pair).unwrap().max_residual());
                }
                Outcome::upper(worst, used)
            },
        },
        CheckDef {
            id: "diffeo.span",
            anchor: "images lie in the span of the moving frame",
            default_tol: 1e-12,
            run: |ctx| {
                let n = ctx.samples.min(400);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let dim = if k % 2 == 0 { 3 } else { 7 };
                    let pair = ctx.pair(dim);
                    worst = worst.max(span_residual(&pair, &psi(&pair)));
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "diffeo.equivariance.so3",
            anchor: "rotation equivariance of the diffeomorphism",
            default_tol: tol::EQUIVARIANCE_SO3,
            run: |ctx| {
                let n = ctx.samples.min(1000);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let q = gmlab::sp2::sampling::random_unit_quaternion(&mut ctx.rng);
                    let m = q.rotation_matrix();
                    let g = DMatrix::from_fn(3, 3, |i, j| m[i][j]);
                    worst = worst.max(equivariance_residual(PsiVariant::Rational, &g, &ctx.pair(3)));
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "diffeo.equivariance.g2",
            anchor: "automorphism equivariance in dimension thirteen",
            default_tol: tol::EQUIVARIANCE_G2,
            run: |ctx| {
                let n = ctx.samples.min(100);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let g = brieskorn::g2_sample(k as u64);
                    worst = worst.max(equivariance_residual(PsiVariant::Rational, &g, &ctx.pair(7)));
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "actions.qmap.unit",
            anchor: "the twist map is unit on the whole sphere",
            default_tol: 1e-12,
            run: |ctx| {
                let n = ctx.samples.min(1000);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let dim = if k % 2 == 0 { 3 } else { 7 };
                    let x = ctx.pair(dim);
                    let theta = ctx.rng.gen_range(-7.0..7.0);
                    worst = worst.max((q_map(&x, theta).norm() - 1.0).abs());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "actions.qmap.raw_agreement",
            anchor: "analytic extension agrees with the raw quotient",
            default_tol: 1e-11,
            run: |ctx| {
                let n = ctx.samples.min(1000);
                let mut worst: f64 = 0.0;
                let mut used = 0;
                while used < n {
                    let x = ctx.pair(3);
                    let theta = ctx.rng.gen_range(-3.0..3.0);
                    let xt = x.rotate(theta);
                    let margin = x
                        .w
                        .norm()
                        .min(xt.w.norm())
                        .min(x.p.norm())
                        .min(xt.p.norm())
                        .min(1.0 - x.p.norm_sqr())
                        .min(1.0 - xt.p.norm_sqr());
                    if margin < 1e-3 {
                        continue;
                    }
                    used += 1;
                    worst = worst.max((q_map_raw(&x, theta, 0) - q_map(&x, theta)).norm());
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "actions.cocycle",
            anchor: "the twist cocycle law",
            default_tol: tol::COCYCLE,
            run: |ctx| {
                let n = ctx.samples.min(1000);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let x = ctx.pair(3);
                    worst = worst.max(cocycle_residual(
                        &x,
                        ctx.rng.gen_range(-3.0..3.0),
                        ctx.rng.gen_range(-3.0..3.0),
                    ));
                }
                for _ in 0..(n / 10).max(10) {
                    let x = ctx.pair(7);
                    worst = worst.max(
                        cocycle_residual(&x, ctx.rng.gen_range(-3.0..3.0), ctx.rng.gen_range(-3.0..3.0))
                            / 10.0,
                    );
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "actions.rotate.law",
            anchor: "the twisted rotations form a circle action",
            default_tol: tol::ACTION_LAW,
            run: |ctx| {
                let n = ctx.samples.min(300);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let dim = if k % 2 == 0 { 3 } else { 7 };
                    let x = ctx.pair(dim);
                    let theta = ctx.rng.gen_range(-3.0..3.0);
                    let tau = ctx.rng.gen_range(-3.0..3.0);
                    worst = worst.max(
                        nonlinear_rotate(&nonlinear_rotate(&x, theta), tau)
                            .dist(&nonlinear_rotate(&x, theta + tau)),
                    );
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "actions.involution",
            anchor: "the angle-pi involution squares to the identity",
            default_tol: tol::ACTION_LAW,
            run: |ctx| {
                let n = ctx.samples.min(300);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let dim = if k % 2 == 0 { 3 } else { 7 };
                    let x = ctx.pair(dim);
                    worst = worst.max(nonlinear_rotate(&nonlinear_rotate(&x, PI), PI).dist(&x));
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "actions.dihedral",
            anchor: "reflection conjugates the rotation to its inverse",
            default_tol: tol::ACTION_LAW,
            run: |ctx| {
                let n = ctx.samples.min(300);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let x = ctx.pair(3);
                    let theta = ctx.rng.gen_range(-3.0..3.0);
                    let lhs = nonlinear_rotate(&x.reflect(), theta).reflect();
                    worst = worst.max(lhs.dist(&nonlinear_rotate(&x, -theta)));
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "actions.bridge",
            anchor: "the conjugated nonlinear action is the linear one",
            default_tol: tol::BRIDGE,
            run: |ctx| {
                let n = ctx.samples.min(300);
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let dim = if k % 2 == 0 { 3 } else { 7 };
                    let x = ctx.pair(dim);
                    let theta = if k % 5 == 0 {
                        PI
                    } else {
                        ctx.rng.gen_range(-3.0..3.0)
                    };
                    worst = worst.max(brieskorn_equivalence_residual(&x, theta));
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "actions.normal_curve",
            anchor: "the sphere-side normal curve runs along the reflected geodesic",
            default_tol: tol::BRIDGE,
            run: |_ctx| {
                let mut worst: f64 = 0.0;
                for k in 0..32 {
                    worst = worst.max(normal_curve_residual(-1.5 + 0.1 * k as f64));
                }
                Outcome::upper(worst, 32)
            },
        },
        CheckDef {
            id: "riemann.engine",
            anchor: "classical curvature oracles",
            default_tol: 1e-4,
            run: |_ctx| {
                let steps = FdSteps::default();
                let mut worst: f64 = 0.0;
                let sphere = round_sphere2();
                let cp = CurvaturePoint::compute(&sphere, &[1.1, 0.7], steps).unwrap();
                worst = worst.max((cp.sectional(&[1.0, 0.0], &[0.0, 1.0]).unwrap() - 1.0).abs());
                worst = worst.max((cp.scalar() - 2.0).abs());
                let hyp = hyperbolic_plane();
                let cp = CurvaturePoint::compute(&hyp, &[0.3, 1.0], steps).unwrap();
                worst = worst.max((cp.sectional(&[1.0, 0.0], &[0.0, 1.0]).unwrap() + 1.0).abs());
                let prod = gmlab::riemann::product_metric(round_sphere2(), hyperbolic_plane());
                let s = gmlab::riemann::scalar_at(&prod, &[1.0, 0.5, 0.2, 1.3], steps).unwrap();
                worst = worst.max(s.abs()); // 2 + (-2) = 0
                Outcome::upper(worst, 4)
            },
        },
        CheckDef {
            id: "riemann.bianchi",
            anchor: "first Bianchi identity of the difference tensor",
            default_tol: tol::BIANCHI,
            run: |ctx| {
                let steps = FdSteps::default();
                let mut worst: f64 = 0.0;
                for p in ctx.metrics() {
                    let m = sigma32_metric(p);
                    let cp = CurvaturePoint::compute(&m, &[1.1, 0.9, 0.3], steps).unwrap();
                    worst = worst.max(cp.bianchi_residual());
                }
                Outcome::upper(worst, ctx.mu_nu.len())
            },
        },
        CheckDef {
            id: "riemann.sigma2",
            anchor: "three closed-form curvature values of the 2-sphere",
            default_tol: tol::CURVATURE_REL,
            run: |ctx| {
                let steps = FdSteps::default();
                let mut worst: f64 = 0.0;
                for p in ctx.metrics() {
                    let vals = sigma2_curvature_values(p);
                    let m = sigma2_metric(p);
                    let k0 = sigma2_k_at_pole(p, steps).unwrap();
                    worst = worst.max((k0 - vals[0]).abs() / vals[0].abs());
                    for (s, expect) in [(FRAC_PI_4, vals[1]), (FRAC_PI_2, vals[2])] {
                        let k = CurvaturePoint::compute(&m, &[s, 1.0], steps)
                            .unwrap()
                            .sectional(&[1.0, 0.0], &[0.0, 1.0])
                            .unwrap();
                        worst = worst.max((k - expect).abs() / expect.abs());
                    }
                }
                Outcome::upper(worst, 3 * ctx.mu_nu.len())
            },
        },
        CheckDef {
            id: "riemann.sigma31",
            anchor: "curvature range of the suspension sphere",
            default_tol: tol::CURVATURE_REL,
            run: |ctx| {
                let steps = FdSteps::default();
                let mut worst: f64 = 0.0;
                for p in ctx.metrics() {
                    let (lo_e, hi_e) = sigma31_curvature_range(p);
                    let m = sigma31_metric(p);
                    let grid: Vec<Vec<f64>> = (1..24)
                        .map(|i| vec![0.03 + (PI - 0.06) * i as f64 / 24.0, 1.2, 0.7])
                        .collect();
                    let (lo, hi) = min_max_sectional(&m, &grid, steps).unwrap();
                    worst = worst.max((lo - lo_e).abs() / lo_e.abs());
                    worst = worst.max((hi - hi_e).abs() / hi_e.abs());
                }
                Outcome::upper(worst, ctx.mu_nu.len())
            },
        },
        CheckDef {
            id: "riemann.sigma32.special",
            anchor: "rank-one specialization and gluing isometry",
            default_tol: 1e-9,
            run: |_ctx| {
                let mut worst = sigma32_mu1_agreement(0.5, 10).max(sigma32_mu1_agreement(1.7, 10));
                for (t, th) in [(0.8, 0.9), (1.4, 2.0), (2.1, 0.5)] {
                    worst = worst.max(sigma32_deck_residual(MetricParams::biinvariant(), t, th));
                    worst = worst
                        .max(sigma32_deck_residual(MetricParams::new(0.7, 1.2).unwrap(), t, th));
                }
                Outcome::upper(worst, 8)
            },
        },
        CheckDef {
            id: "riemann.sigma32.scalar",
            anchor: "closed-form scalar curvature at mu = 1",
            default_tol: tol::CURVATURE_REL,
            run: |_ctx| {
                let steps = FdSteps::default();
                let nu = 0.5;
                let m = sigma32_metric(MetricParams::new(1.0, nu).unwrap());
                let mut worst: f64 = 0.0;
                for (t, th) in [(1.1, 0.8), (1.7, 1.9), (0.9, 1.3), (2.0, 1.0)] {
                    let got = CurvaturePoint::compute(&m, &[t, th, 0.3], steps).unwrap().scalar();
                    let expect = sigma32_scalar_mu1(nu, hemisphere_omega(t, th));
                    worst = worst.max((got - expect).abs() / expect.abs().max(1.0));
                }
                Outcome::upper(worst, 4)
            },
        },
        CheckDef {
            id: "riemann.sigma32.minmax",
            anchor: "minimum formula and the 1/145 pinch ratio",
            default_tol: tol::MINMAX_REL,
            run: |_ctx| {
                let steps = FdSteps::default();
                let gm = MetricParams::biinvariant();
                let m = sigma32_metric(gm);
                let mut grid = Vec::new();
                for i in 1..22 {
                    for j in 1..22 {
                        grid.push(vec![
                            0.05 + (PI - 0.1) * i as f64 / 22.0,
                            0.05 + (PI - 0.1) * j as f64 / 22.0,
                            0.3,
                        ]);
                    }
                }
                let (lo, hi) = min_max_sectional(&m, &grid, steps).unwrap();
                let expect = sigma32_min_k(gm);
                let mut worst = (lo - expect).abs() / expect.abs();
                worst = worst.max((lo / hi - 1.0 / 145.0).abs() * 145.0);
                Outcome::upper(worst, grid.len())
            },
        },
        CheckDef {
            id: "riemann.l3",
            anchor: "lens-space Berger extremes and the round case",
            default_tol: tol::CURVATURE_REL,
            run: |ctx| {
                let steps = FdSteps::default();
                let mut worst: f64 = 0.0;
                for p in ctx.metrics() {
                    let (w1, w2) = berger_params::l3(p);
                    let (elo, ehi) = berger_extremes(w1, w2);
                    let m = berger_metric(w1, w2);
                    let (lo, hi) =
                        min_max_sectional(&m, &[vec![0.2, 0.1, 0.3]], steps).unwrap();
                    worst = worst.max((lo - elo).abs() / elo.abs().max(1.0));
                    worst = worst.max((hi - ehi).abs() / ehi.abs().max(1.0));
                }
                // the distinguished constant-curvature case
                let (w1, w2) = berger_params::l3(MetricParams::new(1.0, 0.5).unwrap());
                let (lo, hi) = min_max_sectional(
                    &berger_metric(w1, w2),
                    &[vec![0.2, 0.1, 0.3]],
                    steps,
                )
                .unwrap();
                worst = worst.max((lo - 1.0).abs()).max((hi - 1.0).abs());
                Outcome::upper(worst, ctx.mu_nu.len() + 1)
            },
        },
        CheckDef {
            id: "riemann.berger",
            anchor: "Berger data of the remaining homogeneous fixed sets",
            default_tol: tol::CURVATURE_REL,
            run: |ctx| {
                let steps = FdSteps::default();
                let mut worst: f64 = 0.0;
                for p in ctx.metrics() {
                    for (w1, w2) in [berger_params::sigma30(p), berger_params::p3(p)] {
                        let (elo, ehi) = berger_extremes(w1, w2);
                        let (lo, hi) = min_max_sectional(
                            &berger_metric(w1, w2),
                            &[vec![0.2, 0.1, 0.3]],
                            steps,
                        )
                        .unwrap();
                        worst = worst.max((lo - elo).abs() / elo.abs().max(1.0));
                        worst = worst.max((hi - ehi).abs() / ehi.abs().max(1.0));
                    }
                }
                Outcome::upper(worst, 2 * ctx.mu_nu.len())
            },
        },
        CheckDef {
            id: "riemann.hemisphere",
            anchor: "rotationally invariant quotient curvature",
            default_tol: tol::CURVATURE_REL,
            run: |_ctx| {
                let steps = FdSteps::default();
                let mut worst: f64 = 0.0;
                for p in [
                    MetricParams::new(1.0, 0.5).unwrap(),
                    MetricParams::new(0.5, 0.9).unwrap(),
                ] {
                    let m = hemisphere_metric(p).unwrap();
                    for (t, th) in [(1.1, 1.2), (1.8, 0.9), (1.5, 1.6)] {
                        let k = CurvaturePoint::compute(&m, &[t, th], steps)
                            .unwrap()
                            .sectional(&[1.0, 0.0], &[0.0, 1.0])
                            .unwrap();
                        let expect = hemisphere_curvature(p.mu, hemisphere_omega(t, th));
                        worst = worst.max((k - expect).abs() / expect.abs().max(1.0));
                    }
                }
                Outcome::upper(worst, 6)
            },
        },
        CheckDef {
            id: "riemann.frontier",
            anchor: "nonnegativity frontier separates the sign of min K",
            default_tol: 0.5,
            run: |_ctx| {
                let steps = FdSteps::default();
                let frontier = |mu: f64, nu: f64| 12.0 - 8.0 * (mu + nu) - 3.0 * mu * nu;
                let mut failures = 0.0;
                for (mu, nu) in [(1.0, 0.30), (1.0, 0.45), (0.5, 0.5), (0.95, 0.95)] {
                    let m = sigma32_metric(MetricParams::new(mu, nu).unwrap());
                    let mut grid = Vec::new();
                    for i in 1..16 {
                        for j in 1..16 {
                            grid.push(vec![
                                0.05 + (PI - 0.1) * i as f64 / 16.0,
                                0.05 + (PI - 0.1) * j as f64 / 16.0,
                                0.3,
                            ]);
                        }
                    }
                    let (lo, _) = min_max_sectional(&m, &grid, steps).unwrap();
                    if (frontier(mu, nu) < 0.0) != (lo < 0.0) {
                        failures += 1.0;
                    }
                }
                Outcome::upper(failures, 4)
            },
        },
        CheckDef {
            id: "quotients.freeness",
            anchor: "arithmetic predicate equals the fixed-point oracle",
            default_tol: 0.5,
            run: |ctx| {
                let mut mismatches = 0.0;
                let mut count = 0;
                for m in 2..=12i64 {
                    for p in -6..=6i64 {
                        for q in -6..=6i64 {
                            let params = LensActionParams::new(m, p, q).unwrap();
                            let predicted = is_free(params).unwrap();
                            let observed =
                                freeness_oracle(params, &mut ctx.rng, ctx.samples.min(200));
                            if predicted != observed {
                                mismatches += 1.0;
                            }
                            count += 1;
                        }
                    }
                }
                Outcome::upper(mismatches, count)
            },
        },
        CheckDef {
            id: "quotients.phi",
            anchor: "branched covering: norm, weights, deck invariance",
            default_tol: tol::COVERING_WEIGHTS,
            run: |_ctx| {
                let mut worst: f64 = 0.0;
                for (m, p, q) in [(7i64, 1i64, 0i64), (7, 1, 1), (11, 3, -2)] {
                    let params = LensActionParams::new(m, p, q).unwrap();
                    let g = params.generator();
                    for k in 0..16 {
                        let pt = beta(0.1 + 0.19 * k as f64);
                        let img = phi(&pt, CoveringVariant::Standard).unwrap();
                        worst = worst
                            .max((img.iter().map(|z| z.norm_sqr()).sum::<f64>() - 1.0).abs());
                        let moved =
                            phi(&brieskorn::act(&g, &pt).unwrap(), CoveringVariant::Standard)
                                .unwrap();
                        for (j, &wt) in [3 * p, 3 * p + q, 3 * p - q].iter().enumerate() {
                            let phase = Complex64::from_polar(1.0, TAU * wt as f64 / m as f64);
                            worst = worst.max((moved[j] - phase * img[j]).norm());
                        }
                        let deck =
                            phi(&brieskorn::deck_rotate(&pt), CoveringVariant::Standard).unwrap();
                        for j in 0..3 {
                            worst = worst.max((deck[j] - img[j]).norm());
                        }
                    }
                }
                Outcome::upper(worst, 48)
            },
        },
        CheckDef {
            id: "quotients.fibers",
            anchor: "three preimages off the branch locus, one on it",
            default_tol: 0.5,
            run: |_ctx| {
                let mut failures = 0.0;
                let generic = phi(&beta(0.3), CoveringVariant::Standard).unwrap();
                if fiber_count(&generic, CoveringVariant::Standard).unwrap() != 3 {
                    failures += 1.0;
                }
                let branch = phi(&beta(FRAC_PI_4), CoveringVariant::Standard).unwrap();
                if fiber_count(&branch, CoveringVariant::Standard).unwrap() != 1 {
                    failures += 1.0;
                }
                Outcome::upper(failures, 2)
            },
        },
        CheckDef {
            id: "quotients.rho",
            anchor: "join power map: identity, endpoint, phase equivariance",
            default_tol: 1e-13,
            run: |_ctx| {
                let v = phi(&beta(0.3), CoveringVariant::Standard).unwrap();
                let mut worst: f64 = 0.0;
                let w = rho(1, &v);
                for j in 0..3 {
                    worst = worst.max((w[j] - v[j]).norm());
                }
                let alpha = 0.37;
                let mut rotated = v;
                rotated[0] *= Complex64::from_polar(1.0, alpha);
                let lhs = rho(4, &rotated);
                let base = rho(4, &v);
                worst = worst
                    .max((lhs[0] - base[0] * Complex64::from_polar(1.0, 4.0 * alpha)).norm());
                Outcome::upper(worst, 2)
            },
        },
        CheckDef {
            id: "quotients.join",
            anchor: "join identifications and equivariance at orbit level",
            default_tol: 1e-7,
            run: |ctx| {
                let n = ctx.samples.min(50);
                let mut worst: f64 = 0.0;
                for _ in 0..n {
                    let pair = ctx.pair(3);
                    let b = psi_trig(&pair).to_point();
                    let z1 = Complex64::from_polar(1.0, ctx.rng.gen_range(0.0..TAU));
                    let z2 = Complex64::from_polar(1.0, ctx.rng.gen_range(0.0..TAU));
                    let x1 = join_to_sigma7(&JoinPoint::new(z1, b.clone(), FRAC_PI_2).unwrap(), 1.0)
                        .unwrap();
                    let x2 = join_to_sigma7(&JoinPoint::new(z2, b.clone(), FRAC_PI_2).unwrap(), 1.0)
                        .unwrap();
                    worst = worst.max(orbit_distance(&x1, &x2).0);
                    if !sp2::in_sigma5(&x1) {
                        worst = worst.max(1.0);
                    }
                    let pair2 = ctx.pair(3);
                    let b2 = psi_trig(&pair2).to_point();
                    let y1 = join_to_sigma7(&JoinPoint::new(z1, b.clone(), 0.0).unwrap(), 1.0).unwrap();
                    let y2 = join_to_sigma7(&JoinPoint::new(z1, b2, 0.0).unwrap(), 1.0).unwrap();
                    worst = worst.max(orbit_distance(&y1, &y2).0);
                }
                Outcome::upper(worst, n)
            },
        },
        CheckDef {
            id: "quotients.lens",
            anchor: "homotopy lens parameters for free actions (6 does not divide m)",
            default_tol: 0.5,
            run: |_ctx| {
                let mut failures = 0.0;
                let md = gmlab::quotients::lens_parameters(LensActionParams::new(7, 1, 1).unwrap())
                    .unwrap();
                if md.five_dim != (7, [1, 2, 4]) || md.seven_dim != (7, [1, 1, 2, 4]) {
                    failures += 1.0;
                }
                if gmlab::quotients::lens_parameters(LensActionParams::new(12, 1, 1).unwrap())
                    .is_ok()
                {
                    failures += 1.0;
                }
                Outcome::upper(failures, 2)
            },
        },
    ]
}

fn random_velocity(rng: &mut ChaCha8Rng) -> (ImVec, Quaternion) {
    let v: Vec<f64> = (0..7).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (
        ImVec::new(vec![v[0] / norm, v[1] / norm, v[2] / norm]),
        Quaternion::new(v[3] / norm, v[4] / norm, v[5] / norm, v[6] / norm),
    )
}
