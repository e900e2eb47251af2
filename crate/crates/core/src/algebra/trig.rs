use crate::error::{contract, Result};
use std::f64::consts::PI;

const SERIES_WINDOW: f64 = 1e-3;

fn sinc(u: f64) -> f64 {
    if u.abs() < 1e-2 {
        // sin(u)/u = 1 - u^2/6 + u^4/120 - u^6/5040
        let u2 = u * u;
        1.0 - u2 / 6.0 + u2 * u2 / 120.0 - u2 * u2 * u2 / 5040.0
    } else {
        u.sin() / u
    }
}

/// sin(a pi r / 2) / r for odd a, analytic on [0, 1] with value a pi / 2 at 0.
pub fn f1_odd(r: f64, a: u32) -> f64 {
    let half = a as f64 * PI / 2.0;
    if r.abs() < SERIES_WINDOW {
        half * sinc(half * r)
    } else {
        (half * r).sin() / r
    }
}

/// cos(a pi r / 2) / (1 - r^2) for odd a, analytic on [0, 1]; the value at 1
/// is (-1)^((a-1)/2) * a pi / 4.
pub fn f2_odd(r: f64, a: u32) -> f64 {
    debug_assert!(a % 2 == 1);
    let half = a as f64 * PI / 2.0;
    let eps = 1.0 - r;
    if eps.abs() < SERIES_WINDOW {
        // cos(a pi r/2) = sign * sin(a pi eps / 2) with sign = (-1)^((a-1)/2)
        let sign = if ((a - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        sign * half * sinc(half * eps) / (2.0 - eps)
    } else {
        (half * r).cos() / (1.0 - r * r)
    }
}

/// The pair (sin(pi r/2)/r, cos(pi r/2)/(1-r^2)) evaluated stably on [0, 1].
///
/// The limits are pi/2 at r = 0 and pi/4 at r = 1.
pub fn safe_trig_quotients(r: f64) -> Result<(f64, f64)> {
    if !(-1e-12..=1.0 + 1e-12).contains(&r) {
        return Err(contract(format!("trig quotient argument {r} outside [0, 1]")));
    }
    let r = r.clamp(0.0, 1.0);
    Ok((f1_odd(r, 1), f2_odd(r, 1)))
}

/// (1 + cos(pi r)) / (1 - r^2) = 2 cos(pi r / 2) f2(r), analytic on [0, 1].
pub fn one_plus_cos_quotient(r: f64) -> f64 {
    2.0 * (PI * r / 2.0).cos() * f2_odd(r, 1)
}

/// sin(pi r) / r = 2 cos(pi r / 2) f1(r), analytic on [0, 1].
pub fn sin_pi_quotient(r: f64) -> f64 {
    2.0 * (PI * r / 2.0).cos() * f1_odd(r, 1)
}

/// (-1 + 4 r^2 + (1 + 2 r^2) cos(pi r)) / (r^2 (1 - r^2)), analytic on [0, 1].
///
/// Both apparent singularities are removable; the values are 6 - pi^2/2 at
/// r = 0 and -2 at r = 1.
pub fn rational_trig_quotient(r: f64) -> f64 {
    if r < SERIES_WINDOW {
        let a0 = 3.0 - PI * PI / 4.0;
        let a1 = PI.powi(4) / 48.0 - PI * PI / 2.0;
        let a2 = PI.powi(4) / 24.0 - PI.powi(6) / 1440.0;
        let r2 = r * r;
        2.0 * (a0 + a1 * r2 + a2 * r2 * r2) / (1.0 - r2)
    } else {
        let c = (PI * r / 2.0).cos();
        2.0 / (r * r) * ((1.0 + 2.0 * r * r) * c * f2_odd(r, 1) - 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits() {
        let (f1, _) = safe_trig_quotients(0.0).unwrap();
        assert!((f1 - PI / 2.0).abs() < 1e-15);
        let (_, f2) = safe_trig_quotients(1.0).unwrap();
        assert!((f2 - PI / 4.0).abs() < 1e-15);
        let (f1, _) = safe_trig_quotients(0.5).unwrap();
        assert!((f1 - 2.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn series_matches_direct_across_windows() {
        for &r in &[0.9995, 0.999, 0.0005, 0.0011, 0.002, 0.998] {
            let (f1, f2) = safe_trig_quotients(r).unwrap();
            let direct1 = (PI * r / 2.0).sin() / r;
            let direct2 = (PI * r / 2.0).cos() / (1.0 - r * r);
            assert!((f1 - direct1).abs() / direct1.abs() < 1e-13);
            assert!((f2 - direct2).abs() / direct2.abs() < 1e-12);
            let g = rational_trig_quotient(r);
            let gd = (-1.0 + 4.0 * r * r + (1.0 + 2.0 * r * r) * (PI * r).cos())
                / (r * r * (1.0 - r * r));
            assert!((g - gd).abs() < 1e-9 * (1.0 + gd.abs()));
        }
    }

    #[test]
    fn rational_quotient_limits() {
        assert!((rational_trig_quotient(0.0) - 2.0 * (3.0 - PI * PI / 4.0)).abs() < 1e-14);
        assert!((rational_trig_quotient(1.0) + 2.0).abs() < 1e-12);
    }

    #[test]
    fn domain_check() {
        assert!(safe_trig_quotients(1.5).is_err());
        assert!(safe_trig_quotients(-0.2).is_err());
    }

    #[test]
    fn twisted_variants() {
        // a = 3: sin(3 pi r/2)/r at 0 -> 3 pi / 2; cos at 1 -> -3 pi / 4.
        assert!((f1_odd(0.0, 3) - 3.0 * PI / 2.0).abs() < 1e-14);
        assert!((f2_odd(1.0, 3) + 3.0 * PI / 4.0).abs() < 1e-13);
        let r = 0.6;
        assert!((f2_odd(r, 3) - (1.5 * PI * r).cos() / (1.0 - r * r)).abs() < 1e-13);
    }
}
