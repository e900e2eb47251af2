//! Property-based invariants of the normed-algebra layer.

use gmlab::algebra::imvec::{cross, sphere_exp, ImVec};
use gmlab::algebra::octonion::Octonion;
use gmlab::algebra::quaternion::Quaternion;
use proptest::prelude::*;

fn quaternion_strategy() -> impl Strategy<Value = Quaternion> {
    (any_component(), any_component(), any_component(), any_component())
        .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

fn any_component() -> impl Strategy<Value = f64> {
    -2.0..2.0f64
}

fn octonion_strategy() -> impl Strategy<Value = Octonion> {
    proptest::array::uniform8(any_component()).prop_map(Octonion::from_components)
}

fn imvec_strategy(n: usize) -> impl Strategy<Value = ImVec> {
    proptest::collection::vec(any_component(), n).prop_map(ImVec::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn quaternion_norm_multiplicative(a in quaternion_strategy(), b in quaternion_strategy()) {
        let lhs = (a * b).norm();
        let rhs = a.norm() * b.norm();
        prop_assert!((lhs - rhs).abs() <= 1e-14 * (1.0 + rhs));
    }

    #[test]
    fn quaternion_associative(
        a in quaternion_strategy(),
        b in quaternion_strategy(),
        c in quaternion_strategy()
    ) {
        let lhs = (a * b) * c;
        let rhs = a * (b * c);
        prop_assert!((lhs - rhs).norm() < 1e-13 * (1.0 + a.norm() * b.norm() * c.norm()));
    }

    #[test]
    fn octonion_norm_multiplicative(a in octonion_strategy(), b in octonion_strategy()) {
        let lhs = (a * b).norm();
        let rhs = a.norm() * b.norm();
        prop_assert!((lhs - rhs).abs() <= 1e-13 * (1.0 + rhs));
    }

    #[test]
    fn octonion_alternative(a in octonion_strategy(), b in octonion_strategy()) {
        let scale = 1.0 + a.norm_sqr() * b.norm();
        prop_assert!((a * (a * b) - (a * a) * b).norm() < 1e-12 * scale);
        prop_assert!(((b * a) * a - b * (a * a)).norm() < 1e-12 * scale);
    }

    #[test]
    fn cayley_dickson_doubling(
        a in quaternion_strategy(),
        b in quaternion_strategy(),
        c in quaternion_strategy(),
        d in quaternion_strategy()
    ) {
        // (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
        let lhs = Octonion::new(a, b) * Octonion::new(c, d);
        let rhs = Octonion::new(a * c - d.conj() * b, d * a + b * c.conj());
        prop_assert!((lhs - rhs).norm() < 1e-14 * (1.0 + lhs.norm()));
    }

    #[test]
    fn cross_is_orthogonal_with_lagrange_norm(a in imvec_strategy(7), b in imvec_strategy(7)) {
        let c = cross(&a, &b).unwrap();
        let scale = 1.0 + a.norm_sqr() * b.norm_sqr();
        prop_assert!(c.dot(&a).abs() < 1e-12 * scale);
        prop_assert!(c.dot(&b).abs() < 1e-12 * scale);
        let lagrange = a.norm_sqr() * b.norm_sqr() - a.dot(&b).powi(2);
        prop_assert!((c.norm_sqr() - lagrange).abs() < 1e-12 * scale);
    }

    #[test]
    fn cross_reduction_identities(a in imvec_strategy(7), b in imvec_strategy(7)) {
        // (p x w) x p = |p|^2 w - <p,w> p and (p x w) x w = <p,w> w - |w|^2 p
        let c = cross(&a, &b).unwrap();
        let scale = 1.0 + a.norm_sqr() * b.norm_sqr() * (a.norm() + b.norm());
        let lhs1 = cross(&c, &a).unwrap();
        let rhs1 = b.scale(a.norm_sqr()).sub(&a.scale(a.dot(&b)));
        prop_assert!(lhs1.sub(&rhs1).norm() < 1e-12 * scale);
        let lhs2 = cross(&c, &b).unwrap();
        let rhs2 = b.scale(a.dot(&b)).sub(&a.scale(b.norm_sqr()));
        prop_assert!(lhs2.sub(&rhs2).norm() < 1e-12 * scale);
    }

    #[test]
    fn sphere_exp_one_parameter_subgroup(
        v in imvec_strategy(3),
        s in -3.0..3.0f64,
        t in -3.0..3.0f64
    ) {
        let prod = sphere_exp(&v, s) * sphere_exp(&v, t);
        let sum = sphere_exp(&v, s + t);
        prop_assert!((prod - sum).norm() < 1e-13);
        prop_assert!((sphere_exp(&v, t).norm() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn sphere_exp_unit_norm_dim7(v in imvec_strategy(7), t in -3.0..3.0f64) {
        prop_assert!((sphere_exp(&v, t).norm() - 1.0).abs() < 1e-13);
    }
}
