use g25::algebra::bigfloat::parse_rational;
use g25::algebra::matrix::mat_mul;
use g25::algebra::roots::{isolate_real_roots, square_free_part};
use g25::algebra::{Rational, Scalar, Surd, UniPoly};
use g25::moduli::{fmt_sig, g_of, sigma};
use g25::sl2rep::{rep_matrix, GroupElement};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..20).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |q| *q != Rational::from_integer(0.into()))
}

/// `a + b sqrt(2) + c sqrt(3) + d sqrt(6)` with small rational parts.
fn surd() -> impl Strategy<Value = Surd> {
    (rat(), rat(), rat(), rat()).prop_map(|(a, b, c, d)| {
        let r = |n: i64| Surd::sqrt_rational(&Rational::from_integer(n.into())).unwrap();
        Surd::from_rational(a)
            + Surd::from_rational(b) * r(2)
            + Surd::from_rational(c) * r(3)
            + Surd::from_rational(d) * r(6)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn surd_field_laws(x in surd(), y in surd(), z in surd()) {
        prop_assert_eq!((x.clone() + y.clone()) * z.clone(), x.clone() * z.clone() + y.clone() * z.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        if !x.is_zero() {
            let xi = x.inv().unwrap();
            prop_assert_eq!(x * xi, Surd::from_int(1));
        }
    }

    #[test]
    fn surd_display_parses_back(x in surd()) {
        let back: Surd = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn rational_text_round_trips(q in rat()) {
        prop_assert_eq!(parse_rational(&q.to_string()), Some(q));
    }

    #[test]
    fn sigma_is_an_involution_scaling_g(t0 in nonzero_rat(), t1 in nonzero_rat(), t6 in nonzero_rat()) {
        let t = [t0, t1, t6];
        let s = sigma(&t).unwrap();
        prop_assert_eq!(sigma(&s).unwrap(), t.clone());
        prop_assert_eq!(g_of(&s).unwrap(), g_of(&t).unwrap().recip());
    }

    #[test]
    fn isolated_roots_bracket_planted_roots(mut rs in prop::collection::vec(rat(), 1..6)) {
        let mut p = UniPoly::from_ints(&[1]);
        for r in &rs {
            p = p * UniPoly::new(vec![-r.clone(), Rational::from_integer(1.into())]);
        }
        rs.sort();
        rs.dedup();
        let width = Rational::new(BigInt::from(1), BigInt::from(1000));
        let ivs = isolate_real_roots(&p, &width).unwrap();
        prop_assert_eq!(ivs.len(), rs.len());
        for (iv, r) in ivs.iter().zip(&rs) {
            prop_assert!(iv.contains(r));
            prop_assert!(iv.width() <= width);
        }
        prop_assert_eq!(square_free_part(&p).degree(), Some(rs.len()));
    }

    #[test]
    fn representation_is_multiplicative(a in rat(), b in rat(), c in rat(), d in rat(), n in 1usize..7) {
        let one = Surd::from_int(1);
        let lower = |x: Rational| GroupElement::new(one.clone(), Surd::zero(), Surd::from_rational(x), one.clone()).unwrap();
        let upper = |x: Rational| GroupElement::new(one.clone(), Surd::from_rational(x), Surd::zero(), one.clone()).unwrap();
        let g = lower(a).mul(&upper(b));
        let h = upper(c).mul(&lower(d));
        let lhs = rep_matrix(&g.mul(&h), n).unwrap();
        let rhs = mat_mul(&rep_matrix(&g, n).unwrap(), &rep_matrix(&h, n).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn significant_digits_parse_close(x in -1e12f64..1e12) {
        let s = fmt_sig(x, 12);
        let back: f64 = s.parse().unwrap();
        prop_assert!((back - x).abs() <= 1e-11 * x.abs().max(1e-300));
    }
}
