use num_bigint::BigInt;
use proptest::prelude::*;
use quiverkac_core::quiver::builtin;
use quiverkac_core::series::DimBox;
use quiverkac_core::{
    character_level_one, peterson, poincare_via_kac, weight_mult_freudenthal, weight_mult_level_one,
    weight_mult_via_betti, DimVector, HighestWeight, Quiver,
};

fn dv(v: &[u32]) -> DimVector {
    DimVector::from(v)
}

/// Checks the three routes agree on every drop in `bound`, and returns the table.
fn triple(q: &Quiver, hw: &[u32], bound: &[u32]) -> Vec<(DimVector, u64)> {
    let hw = HighestWeight(dv(hw));
    let bound = dv(bound);
    let level_one = character_level_one(q, &hw, &bound).unwrap();
    let roots = peterson(q, &bound).unwrap();
    let freudenthal = weight_mult_freudenthal(q, &hw, &bound, &roots).unwrap();
    assert_eq!(level_one.entries().collect::<Vec<_>>(), freudenthal.entries().collect::<Vec<_>>());
    for (beta, m) in level_one.entries() {
        let betti = poincare_via_kac(q, &beta, hw.pairings(), &DimBox::new(beta.clone())).unwrap();
        assert_eq!(weight_mult_via_betti(&betti), BigInt::from(m), "hw {:?}, drop {beta}", hw.pairings());
        assert_eq!(weight_mult_level_one(q, &hw, &beta, &bound).unwrap(), m);
    }
    level_one.entries().collect()
}

#[test]
fn sl2_modules() {
    let a1 = builtin::a1();
    for n in 1..=4u32 {
        let table = triple(&a1, &[n], &[n + 2]);
        for (beta, m) in table {
            let v = beta.entries()[0];
            assert_eq!(m, u64::from(v <= n), "n = {n}, v = {v}");
            // Weyl symmetry λ − v·α ↔ λ − (n − v)·α.
            if v <= n {
                let mirror = character_level_one(&a1, &HighestWeight(dv(&[n])), &dv(&[n])).unwrap();
                assert_eq!(mirror.mult(&dv(&[v])), mirror.mult(&dv(&[n - v])));
            }
        }
    }
}

#[test]
fn sl3_adjoint() {
    let table = triple(&builtin::a2(), &[1, 1], &[2, 2]);
    let expected = [
        ([0, 0], 1),
        ([1, 0], 1),
        ([2, 0], 0),
        ([0, 1], 1),
        ([1, 1], 2),
        ([2, 1], 1),
        ([0, 2], 0),
        ([1, 2], 1),
        ([2, 2], 1),
    ];
    for (beta, m) in expected {
        assert_eq!(table.iter().find(|(b, _)| *b == dv(&beta)).unwrap().1, m, "drop {beta:?}");
    }
}

#[test]
fn sl3_dimensions() {
    // Every weight of L(aω₁ + bω₂) lies above the lowest weight, whose drop is (a+b)(α₁+α₂).
    for (a, b) in [(1, 0), (0, 1), (2, 0), (1, 1), (2, 1), (3, 0)] {
        let s = a + b;
        let hw = HighestWeight(dv(&[a, b]));
        let roots = peterson(&builtin::a2(), &dv(&[s, s])).unwrap();
        let table = weight_mult_freudenthal(&builtin::a2(), &hw, &dv(&[s, s]), &roots).unwrap();
        let dim: u64 = table.entries().map(|(_, m)| m).sum();
        assert_eq!(dim, u64::from((a + 1) * (b + 1) * (a + b + 2) / 2), "({a}, {b})");
        let level_one = character_level_one(&builtin::a2(), &hw, &dv(&[s, s])).unwrap();
        assert_eq!(level_one, table);
    }
}

#[test]
fn other_quivers() {
    triple(&builtin::kronecker(2), &[1, 0], &[2, 2]);
    triple(&builtin::a3(), &[1, 0, 1], &[1, 2, 1]);
    triple(&builtin::triangle(), &[1, 0, 0], &[1, 1, 1]);
}

fn small_quiver() -> impl Strategy<Value = Quiver> {
    (1usize..=2, 0usize..=1).prop_map(|(forward, backward)| {
        let mut arrows = vec![(1, 2); forward];
        arrows.extend(vec![(2, 1); backward]);
        Quiver::numbered(2, &arrows).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn three_routes_agree(q in small_quiver(), l0 in 0u32..=2, l1 in 0u32..=1, b0 in 0u32..=2, b1 in 0u32..=1) {
        let hw = HighestWeight(dv(&[l0, l1]));
        let beta = dv(&[b0, b1]);
        let roots = peterson(&q, &beta).unwrap();
        let f = weight_mult_freudenthal(&q, &hw, &beta, &roots).unwrap().mult(&beta).unwrap();
        let t = weight_mult_level_one(&q, &hw, &beta, &beta).unwrap();
        let betti = poincare_via_kac(&q, &beta, hw.pairings(), &DimBox::new(beta.clone())).unwrap();
        prop_assert_eq!(f, t);
        prop_assert_eq!(BigInt::from(t), weight_mult_via_betti(&betti));
    }
}
