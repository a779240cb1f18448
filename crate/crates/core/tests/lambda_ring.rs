use num_bigint::BigInt;
use proptest::prelude::*;
use quiverkac_core::series::DimBox;
use quiverkac_core::{DimVector, Poly, RationalFunction, TruncatedSeries};

fn coefficient() -> impl Strategy<Value = RationalFunction> {
    let den = prop_oneof![
        Just(vec![1i64]),
        Just(vec![0, 1]),
        Just(vec![-1, 1]),
        Just(vec![1, 1]),
        Just(vec![2]),
        Just(vec![-1, 0, 1]),
    ];
    (prop::collection::vec(-3i64..=3, 0..3), den)
        .prop_map(|(n, d)| RationalFunction::new(Poly::from_i64s(&n), Poly::from_i64s(&d)).unwrap())
}

/// A series with zero constant term over a box of rank 1 or 2 with entries ≤ 3.
fn nilpotent_series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(0u32..=3, 1..=2).prop_flat_map(|bound| {
        let dom = DimBox::new(DimVector::new(bound));
        let n = dom.len();
        prop::collection::vec(prop::option::weighted(0.5, coefficient()), n).prop_map(move |cs| {
            let coeffs = cs
                .into_iter()
                .enumerate()
                .map(|(i, c)| if i == 0 { RationalFunction::zero() } else { c.unwrap_or_default() })
                .collect();
            TruncatedSeries::from_dense(dom.clone(), coeffs)
        })
    })
}

fn pair_in_same_box() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries)> {
    nilpotent_series().prop_flat_map(|f| {
        let dom = f.domain().clone();
        let n = dom.len();
        prop::collection::vec(prop::option::weighted(0.5, coefficient()), n).prop_map(move |cs| {
            let coeffs = cs
                .into_iter()
                .enumerate()
                .map(|(i, c)| if i == 0 { RationalFunction::zero() } else { c.unwrap_or_default() })
                .collect();
            (f.clone(), TruncatedSeries::from_dense(dom.clone(), coeffs))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exp_log_are_inverse(f in nilpotent_series()) {
        let e = f.plethystic_exp().unwrap();
        prop_assert!(e.constant_term().is_one());
        prop_assert_eq!(e.plethystic_log().unwrap(), f.clone());
        let one_plus = &TruncatedSeries::one(f.domain().clone()) + &f;
        prop_assert_eq!(one_plus.plethystic_log().unwrap().plethystic_exp().unwrap(), one_plus);
    }

    #[test]
    fn exp_turns_sums_into_products((f, g) in pair_in_same_box()) {
        let lhs = (&f + &g).plethystic_exp().unwrap();
        let rhs = &f.plethystic_exp().unwrap() * &g.plethystic_exp().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adams_operations_compose(f in nilpotent_series(), k in 1usize..4, m in 1usize..4) {
        let both = f.adams(m).adams(k);
        let direct = f.adams(k * m);
        prop_assert_eq!(both, direct);
        for (_, c) in f.terms() {
            prop_assert_eq!(c.adams(m).adams(k), c.adams(k * m));
        }
    }

    #[test]
    fn ring_axioms((f, g) in pair_in_same_box(), c in coefficient()) {
        let h = &f.adams(1) + &TruncatedSeries::constant(f.domain().clone(), c);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
    }

    #[test]
    fn rational_function_field_laws(a in coefficient(), b in coefficient(), c in coefficient()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
        let x = num_rational::BigRational::from_integer(BigInt::from(7));
        prop_assert_eq!((&a * &b).eval_at(&x).unwrap(), a.eval_at(&x).unwrap() * b.eval_at(&x).unwrap());
    }
}
