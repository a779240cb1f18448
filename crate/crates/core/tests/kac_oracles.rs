use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use quiverkac_core::fforacle::{count_absolutely_indecomposable, count_all_iso_classes};
use quiverkac_core::kac::kac_polynomials;
use quiverkac_core::quiver::builtin;
use quiverkac_core::series::DimBox;
use quiverkac_core::{is_real_root, kac_polynomial, peterson, DimVector, Poly, Quiver, RationalFunction};

fn dv(v: &[u32]) -> DimVector {
    DimVector::from(v)
}

fn eval(p: &Poly, x: u32) -> BigInt {
    let value = RationalFunction::from_poly(p.clone()).eval_at(&BigRational::from_integer(x.into())).unwrap();
    assert!(value.is_integer());
    value.to_integer()
}

fn assert_oracle(q: &Quiver, alpha: &[u32], primes: &[u32]) {
    let alpha = dv(alpha);
    let a = kac_polynomial(q, &alpha, &DimBox::new(alpha.clone())).unwrap();
    for &p in primes {
        let count = count_absolutely_indecomposable(q, &alpha, p).unwrap();
        assert_eq!(eval(&a.poly, p), BigInt::from(count), "α = {alpha}, p = {p}, a = {}", a.poly);
    }
}

#[test]
fn kac_polynomials_count_absolutely_indecomposables() {
    for q in [builtin::a2(), builtin::kronecker(2), builtin::kronecker(3)] {
        for alpha in DimBox::new(dv(&[1, 1])).iter() {
            assert_oracle(&q, alpha.entries(), &[2, 3, 5]);
        }
    }
    assert_oracle(&builtin::kronecker(2), &[1, 2], &[2, 3]);
    assert_oracle(&builtin::kronecker(2), &[2, 2], &[2]);
    assert_oracle(&builtin::kronecker(3), &[1, 2], &[2]);
    assert_oracle(&builtin::a1(), &[2], &[2, 3]);
    assert_oracle(&builtin::a3(), &[1, 1, 1], &[2, 3]);
    assert_oracle(&builtin::d4(), &[1, 2, 1, 1], &[2]);
    assert_oracle(&builtin::triangle(), &[1, 1, 1], &[2, 3]);
}

#[test]
fn known_kac_polynomials() {
    let k = |q: &Quiver, a: &[u32]| kac_polynomial(q, &dv(a), &DimBox::new(dv(a))).unwrap().poly;
    assert_eq!(k(&builtin::kronecker(2), &[1, 1]), Poly::from_i64s(&[1, 1]));
    assert_eq!(k(&builtin::kronecker(3), &[1, 1]), Poly::from_i64s(&[1, 1, 1]));
    assert_eq!(k(&builtin::kronecker(2), &[2, 2]), Poly::from_i64s(&[1, 1]));
    assert_eq!(k(&builtin::triangle(), &[1, 1, 1]), Poly::from_i64s(&[2, 1]));
    // Orbits of a 2-Kronecker pair over F_2 with dimension (1,1): zero plus three lines.
    assert_eq!(count_all_iso_classes(&builtin::kronecker(2), &dv(&[1, 1]), 2).unwrap(), 4);
}

#[test]
fn orientation_independence() {
    for q in [builtin::a2(), builtin::kronecker(3)] {
        let dom = DimBox::new(dv(&[2, 2]));
        assert_eq!(kac_polynomials(&q, &dom).unwrap(), kac_polynomials(&q.opposite(), &dom).unwrap());
    }
    let acyclic = Quiver::numbered(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
    let dom = DimBox::new(dv(&[1, 1, 1]));
    assert_eq!(kac_polynomials(&builtin::triangle(), &dom).unwrap(), kac_polynomials(&acyclic, &dom).unwrap());
    for alpha in [dv(&[1, 1]), dv(&[1, 0])] {
        let q = builtin::kronecker(2);
        for p in [2, 3] {
            assert_eq!(
                count_absolutely_indecomposable(&q, &alpha, p).unwrap(),
                count_absolutely_indecomposable(&q.opposite(), &alpha, p).unwrap()
            );
        }
    }
}

#[test]
fn roots_and_real_roots_match_peterson() {
    for (q, bound) in [
        (builtin::kronecker(2), dv(&[3, 3])),
        (builtin::kronecker(3), dv(&[2, 2])),
        (builtin::triangle(), dv(&[1, 1, 2])),
        (builtin::a3(), dv(&[2, 1, 2])),
    ] {
        let table = peterson(&q, &bound).unwrap();
        for a in kac_polynomials(&q, &DimBox::new(bound.clone())).unwrap() {
            if a.alpha.is_zero() {
                assert!(a.poly.is_zero());
                continue;
            }
            let mult = table.mult(&a.alpha).unwrap();
            assert_eq!(mult > 0, !a.poly.is_zero(), "root support at {}", a.alpha);
            assert_eq!(is_real_root(&q, &a.alpha, &table).unwrap(), a.poly.is_one(), "real root at {}", a.alpha);
            assert!(a.poly.coeffs().iter().all(|c| *c >= BigInt::from(0)), "non-negative coefficients at {}", a.alpha);
            // Kac's conjecture; at divisible roots this is the full form.
            assert_eq!(a.constant_term(), BigInt::from(mult), "a(0) vs mult at {}", a.alpha);
        }
    }
}

#[test]
fn finite_type_root_systems() {
    for (q, highest, count) in
        [(builtin::a2(), dv(&[1, 1]), 3), (builtin::a3(), dv(&[1, 1, 1]), 6), (builtin::d4(), dv(&[1, 2, 1, 1]), 12)]
    {
        let polys = kac_polynomials(&q, &DimBox::new(highest.clone())).unwrap();
        let roots: Vec<_> = polys.iter().filter(|a| !a.poly.is_zero()).collect();
        assert_eq!(roots.len(), count);
        assert!(roots.iter().all(|a| a.poly.is_one()));
        let table = peterson(&q, &highest).unwrap();
        let mut peterson_roots: Vec<_> = table.roots().collect();
        peterson_roots.sort();
        let mut kac_roots: Vec<_> = roots.iter().map(|a| (a.alpha.clone(), 1u64)).collect();
        kac_roots.sort();
        assert_eq!(peterson_roots, kac_roots);
    }
}

#[test]
fn kac_polynomial_at_one_vertex_is_trivial() {
    let a = kac_polynomials(&builtin::a1(), &DimBox::new(dv(&[5]))).unwrap();
    assert!(a[1].poly.is_one());
    assert!(a.iter().enumerate().all(|(i, k)| i == 1 || k.poly.is_zero()));
    assert!(BigInt::one() == a[1].constant_term());
}
