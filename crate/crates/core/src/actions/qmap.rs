use crate::algebra::hyper::Hyper;
use crate::algebra::imvec::sphere_exp;
use crate::algebra::trig::{f1_odd, f2_odd};
use crate::diffeo::sphere_pair::SpherePair;

/// The analytic four-term expansion of the twist map with odd multiplier
/// a = 2m + 1:
///
///   Q = w w_t conj(w) conj(w_t) f2(|p|) f2(|p_t|)
///     - p_t p f1(|p|) f1(|p_t|)
///     + w p_t conj(w) f2(|p|) f1(|p_t|)
///     - w_t p conj(w_t) f1(|p|) f2(|p_t|)
///
/// with f1(r) = sin(a pi r/2)/r and f2(r) = cos(a pi r/2)/(1 - r^2). All
/// factors lie in the associative subalgebra generated by p and w, so the
/// products need no parenthesization even over the octonions.
pub fn q_map_twisted(x: &SpherePair, theta: f64, m: u32) -> Hyper {
    let a = 2 * m + 1;
    let xt = x.rotate(theta);
    let p = x.p.embed();
    let w = x.w.embed();
    let pt = xt.p.embed();
    let wt = xt.w.embed();
    let rp = x.p.norm().min(1.0);
    let rt = xt.p.norm().min(1.0);
    let (f1p, f2p) = (f1_odd(rp, a), f2_odd(rp, a));
    let (f1t, f2t) = (f1_odd(rt, a), f2_odd(rt, a));

    let term1 = (((w * wt) * w.conj()) * wt.conj()).scale(f2p * f2t);
    let term2 = (pt * p).scale(-f1p * f1t);
    let term3 = ((w * pt) * w.conj()).scale(f2p * f1t);
    let term4 = ((wt * p) * wt.conj()).scale(-f1p * f2t);
    term1 + term2 + term3 + term4
}

/// The twist map with the default multiplier (m = 0).
pub fn q_map(x: &SpherePair, theta: f64) -> Hyper {
    q_map_twisted(x, theta, 0)
}

/// The raw quotient definition
/// (w/|w|) e^{-a pi p/2} (w_t/|w_t|) (conj w/|w|) e^{a pi p_t/2}
/// (conj w_t/|w_t|), defined away from the degenerate loci; the expansion
/// extends it analytically.
pub fn q_map_raw(x: &SpherePair, theta: f64, m: u32) -> Hyper {
    let a = (2 * m + 1) as f64;
    let xt = x.rotate(theta);
    let u = x.w.scale(1.0 / x.w.norm()).embed();
    let ut = xt.w.scale(1.0 / xt.w.norm()).embed();
    let e1 = sphere_exp(&x.p, -a * std::f64::consts::FRAC_PI_2);
    let e2 = sphere_exp(&xt.p, a * std::f64::consts::FRAC_PI_2);
    ((((u * e1) * ut) * u.conj()) * e2) * ut.conj()
}
