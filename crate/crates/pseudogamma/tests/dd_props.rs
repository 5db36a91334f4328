//! Property tests for the double-double scalar type and the log-polar
//! complex layer: algebraic identities that must survive arbitrary inputs
//! within the supported range, with tolerances at the types' design grade
//! (~1e-30 relative for `Dd` arithmetic).

use num_complex::Complex64;
use proptest::prelude::*;
use pseudogamma::{Dd, LogComplex};

fn rel(got: Dd, want: Dd) -> f64 {
    if want.is_zero() {
        got.abs().to_f64()
    } else {
        ((got - want) / want).abs().to_f64()
    }
}

proptest! {
    #[test]
    fn add_then_subtract_returns_the_start(a in -1e10f64..1e10, b in -1e10f64..1e10) {
        let x = Dd::from(a);
        let y = Dd::from(b);
        let round_trip = (x + y) - y;
        let err = (round_trip - x).abs().to_f64();
        prop_assert!(err <= 1e-30 * (a.abs() + b.abs()));
    }

    #[test]
    fn multiply_then_divide_returns_the_start(a in -1e10f64..1e10, b in -1e10f64..1e10) {
        prop_assume!(b.abs() > 1e-10);
        let round_trip = (Dd::from(a) * Dd::from(b)) / Dd::from(b);
        prop_assert!(rel(round_trip, Dd::from(a)) < 1e-30);
    }

    #[test]
    fn multiplication_commutes_bitwise(a in -1e100f64..1e100, b in -1e100f64..1e100) {
        let ab = Dd::from(a) * Dd::from(b);
        let ba = Dd::from(b) * Dd::from(a);
        prop_assert_eq!(ab.hi().to_bits(), ba.hi().to_bits());
        prop_assert_eq!(ab.lo().to_bits(), ba.lo().to_bits());
    }

    #[test]
    fn sqrt_squares_back(x in 1e-100f64..1e100) {
        let root = Dd::from(x).sqrt();
        prop_assert!(rel(root * root, Dd::from(x)) < 1e-30);
    }

    #[test]
    fn exp_inverts_ln(x in 1e-200f64..1e200) {
        let round_trip = Dd::from(x).ln().exp();
        prop_assert!(rel(round_trip, Dd::from(x)) < 1e-29);
    }

    #[test]
    fn exp_of_log1p_is_one_plus_x(x in -0.999f64..1e10) {
        let lhs = Dd::from(x).log1p().exp();
        let rhs = Dd::ONE + Dd::from(x);
        prop_assert!(rel(lhs, rhs) < 1e-29);
    }

    #[test]
    fn floor_splits_into_integer_and_fraction(x in -1e14f64..1e14) {
        let v = Dd::from(x);
        let f = v.floor();
        let frac = v - f;
        prop_assert!(f <= v);
        prop_assert!(frac >= Dd::ZERO && frac < Dd::ONE);
        prop_assert_eq!(f.to_f64().fract(), 0.0);
    }

    #[test]
    fn ordering_agrees_with_f64(a in proptest::num::f64::NORMAL, b in proptest::num::f64::NORMAL) {
        prop_assert_eq!(Dd::from(a) < Dd::from(b), a < b);
        prop_assert_eq!(Dd::from(a) == Dd::from(b), a == b);
    }

    #[test]
    fn to_sci_parses_back(x in -1e30f64..1e30) {
        prop_assume!(x != 0.0);
        let v = Dd::from(x) / Dd::from(3.0); // force nontrivial low word
        let text = v.to_sci(30);
        let parsed: Dd = text.parse().unwrap();
        prop_assert!(rel(parsed, v) < 1e-29, "{} reparsed as {}", text, parsed);
    }

    #[test]
    fn mul_pow2_is_exact_and_invertible(x in -1e5f64..1e5, k in -300i32..300) {
        prop_assume!(x != 0.0);
        let v = Dd::from(x) / Dd::from(7.0);
        let scale = (k as f64).exp2();
        let inv = (-k as f64).exp2();
        let round_trip = v.mul_pow2(scale).mul_pow2(inv);
        prop_assert_eq!(round_trip.hi().to_bits(), v.hi().to_bits());
        prop_assert_eq!(round_trip.lo().to_bits(), v.lo().to_bits());
    }

    #[test]
    fn sincos_pi_stays_on_the_unit_circle(x in -1e6f64..1e6) {
        let (s, c) = Dd::sincos_pi(x);
        prop_assert!(rel(s * s + c * c, Dd::ONE) < 1e-30);
    }

    #[test]
    fn sincos_pi_has_exact_period_two(x in -1e6f64..1e6) {
        let (s1, c1) = Dd::sincos_pi(x);
        let (s2, c2) = Dd::sincos_pi(x + 2.0);
        prop_assert_eq!(s1.hi().to_bits(), s2.hi().to_bits());
        prop_assert_eq!(s1.lo().to_bits(), s2.lo().to_bits());
        prop_assert_eq!(c1.hi().to_bits(), c2.hi().to_bits());
        prop_assert_eq!(c1.lo().to_bits(), c2.lo().to_bits());
    }

    #[test]
    fn atan2_agrees_with_f64_seed(y in -1e8f64..1e8, x in -1e8f64..1e8) {
        prop_assume!(y != 0.0 || x != 0.0);
        let got = Dd::atan2(y, x).to_f64();
        let want = y.atan2(x);
        prop_assert!((got - want).abs() <= 4.0 * f64::EPSILON * (1.0 + want.abs()));
    }

    #[test]
    fn log_polar_mul_matches_cartesian(
        re1 in -50f64..50.0, im1 in -50f64..50.0,
        re2 in -50f64..50.0, im2 in -50f64..50.0,
    ) {
        let a = Complex64::new(re1, im1);
        let b = Complex64::new(re2, im2);
        prop_assume!(a.norm() > 1e-3 && b.norm() > 1e-3);
        let la = LogComplex::from_cartesian(re1, im1).unwrap();
        let lb = LogComplex::from_cartesian(re2, im2).unwrap();
        let (gre, gim) = la.mul(&lb).to_cartesian();
        let want = a * b;
        prop_assert!((Complex64::new(gre, gim) - want).norm() < 1e-12 * want.norm());
    }

    #[test]
    fn log_polar_pow_round_trips(re in -50f64..50.0, im in -50f64..50.0) {
        prop_assume!(re * re + im * im > 1e-6);
        let v = LogComplex::from_cartesian(re, im).unwrap();
        let p = Dd::from(7.0).recip();
        let round_trip = v.pow_real_dd(p).pow_real_dd(Dd::from(7.0));
        prop_assert!(rel(round_trip.log_mod(), v.log_mod()) < 1e-28);
        // The phase may only differ by the branch ambiguity of the 7th root.
        let diff = round_trip.arg() - v.arg();
        let wrapped = diff - std::f64::consts::TAU * (diff / std::f64::consts::TAU).round();
        prop_assert!(wrapped.abs() < 1e-13);
    }
}
