use std::cmp::Ordering;

use proptest::prelude::*;

use monotile::exactnum::{parse_scalar, QSqrt3, VecE};
use monotile::sequences::{fib, g_closed, g_recurrence, lucas};

fn scalar() -> impl Strategy<Value = QSqrt3> {
    (-1000i64..1000, 1i64..100, -1000i64..1000, 1i64..100)
        .prop_map(|(n, d, m, e)| QSqrt3::from_ratios(n, d, m, e))
}

fn nonzero_scalar() -> impl Strategy<Value = QSqrt3> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

fn vector() -> impl Strategy<Value = VecE> {
    (scalar(), scalar()).prop_map(|(x, y)| VecE::new(x, y))
}

/// Sign of (x + y·√3) from a 2^32-scaled integer square root.
fn fixed_point_sign(x: i64, y: i64) -> Ordering {
    let root = (3 * (y as i128).pow(2) as u128) << 64;
    let scaled = ((x as i128) << 32) + (y.signum() as i128) * root.isqrt() as i128;
    scaled.cmp(&0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiply_then_divide(a in scalar(), b in nonzero_scalar()) {
        prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
    }

    #[test]
    fn sign_matches_fixed_point(x in -(1i64 << 20)..(1 << 20), y in -(1i64 << 20)..(1 << 20), d in 1i64..1000) {
        let v = QSqrt3::from_ratios(x, d, y, d);
        prop_assert_eq!(v.cmp(&QSqrt3::zero()), fixed_point_sign(x, y));
    }

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        let n = &a * &a.conj();
        prop_assert!(n.is_rational());
        prop_assert_eq!(n.r(), &a.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn six_rotations_are_identity(v in vector()) {
        prop_assert_eq!(v.rotate60(6), v.clone());
        prop_assert_eq!(v.rotate60(2).rotate60(4), v.clone());
        prop_assert_eq!(v.rotate60(-1).rotate60(1), v.clone());
        prop_assert_eq!(v.rotate60(1).norm_sq(), v.norm_sq());
    }

    #[test]
    fn reflection_is_an_involution(v in vector(), k in -6i32..6) {
        prop_assert_eq!(v.reflect_y_axis().reflect_y_axis(), v.clone());
        // Mirroring conjugates a rotation into its inverse.
        prop_assert_eq!(v.rotate60(k).reflect_y_axis(), v.reflect_y_axis().rotate60(-k));
    }

    #[test]
    fn display_round_trips(a in scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn fibonacci_lucas_identities(m in 0u64..150, n in 1u64..150) {
        // F_{m+n} = F_m F_{n+1} + F_{m-1} F_n, written without negative indices.
        prop_assert_eq!(fib(m + n), fib(m) * fib(n + 1) + fib(m + 1) * fib(n) - fib(m) * fib(n));
        prop_assert_eq!(lucas(n), fib(n - 1) + fib(n + 1));
        prop_assert_eq!(fib(2 * n), fib(n) * lucas(n));
    }
}

#[test]
fn g_closed_form_and_recurrence_agree() {
    let rec = g_recurrence(300);
    for (i, g) in rec.iter().enumerate() {
        assert_eq!(&g_closed(i as u64 + 1).unwrap(), g);
    }
}

#[test]
fn parse_examples() {
    assert_eq!(parse_scalar("r3").unwrap(), QSqrt3::sqrt3());
    assert_eq!(
        parse_scalar("3/2+1/2*r3").unwrap(),
        QSqrt3::from_ratios(3, 2, 1, 2)
    );
    assert_eq!(parse_scalar("-r3").unwrap(), -QSqrt3::sqrt3());
    assert!(parse_scalar("1/0").is_err());
    assert!(parse_scalar("r2").is_err());
    assert!(parse_scalar("").is_err());
}
