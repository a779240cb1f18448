//! Invariant checks on the built-in quivers, run by `quiverkac selftest`.

use num_bigint::BigInt;
use quiverkac_core::fforacle::count_absolutely_indecomposable;
use quiverkac_core::kac::{kac_polynomials, r_series};
use quiverkac_core::quiver::builtin;
use quiverkac_core::series::DimBox;
use quiverkac_core::{
    character_level_one, is_real_root, peterson, poincare_via_hausel, poincare_via_kac, weight_mult_freudenthal,
    DimVector, HighestWeight, Poly, Quiver,
};
use serde::Serialize;

use crate::formats::Report;
use crate::{CliError, Outcome};

type Check = Result<(), String>;
type NamedCheck = (&'static str, fn() -> Check);

fn dv(v: &[u32]) -> DimVector {
    DimVector::from(v)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: quiverkac_core::error::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn oracle_equivalence() -> Check {
    for q in [builtin::a2(), builtin::kronecker(2), builtin::kronecker(3)] {
        for a in core(kac_polynomials(&q, &DimBox::new(dv(&[1, 1]))))? {
            for p in [2u32, 3] {
                let count = core(count_absolutely_indecomposable(&q, &a.alpha, p))?;
                let value = a.poly.eval_int(&BigInt::from(p));
                ensure(value == BigInt::from(count), || {
                    format!("a_{}({p}) = {value} but the count is {count}", a.alpha)
                })?;
            }
        }
    }
    Ok(())
}

fn finite_types() -> Check {
    for (q, highest, expected) in
        [(builtin::a2(), dv(&[1, 1]), 3), (builtin::a3(), dv(&[1, 1, 1]), 6), (builtin::d4(), dv(&[1, 2, 1, 1]), 12)]
    {
        let polys = core(kac_polynomials(&q, &DimBox::new(highest.clone())))?;
        let roots: Vec<_> = polys.iter().filter(|a| !a.poly.is_zero()).collect();
        ensure(roots.len() == expected && roots.iter().all(|a| a.poly.is_one()), || {
            format!("expected {expected} real roots below {highest}, found {}", roots.len())
        })?;
        let table = core(peterson(&q, &highest))?;
        ensure(table.roots().count() == expected, || {
            format!("Peterson finds {} roots below {highest}", table.roots().count())
        })?;
    }
    Ok(())
}

fn kac_and_peterson(q: &Quiver, bound: &DimVector) -> Check {
    let table = core(peterson(q, bound))?;
    for a in core(kac_polynomials(q, &DimBox::new(bound.clone())))? {
        if a.alpha.is_zero() {
            continue;
        }
        let mult = table.mult(&a.alpha).expect("same box");
        ensure(a.constant_term() == BigInt::from(mult), || {
            format!("a_{}(0) = {} but mult = {mult}", a.alpha, a.constant_term())
        })?;
        let real = core(is_real_root(q, &a.alpha, &table))?;
        ensure(real == a.poly.is_one(), || format!("real-root test disagrees at {}", a.alpha))?;
        ensure(a.poly.coeffs().iter().all(|c| *c >= BigInt::from(0)), || {
            format!("negative coefficient in a_{}", a.alpha)
        })?;
    }
    Ok(())
}

fn orientation() -> Check {
    for q in [builtin::a2(), builtin::kronecker(3)] {
        let dom = DimBox::new(dv(&[2, 2]));
        ensure(core(kac_polynomials(&q, &dom))? == core(kac_polynomials(&q.opposite(), &dom))?, || {
            "reversing arrows changed a Kac polynomial".into()
        })?;
    }
    Ok(())
}

fn weight_multiplicities() -> Check {
    let q = builtin::a2();
    let hw = HighestWeight(dv(&[1, 1]));
    let bound = dv(&[2, 2]);
    let level_one = core(character_level_one(&q, &hw, &bound))?;
    let freudenthal = core(weight_mult_freudenthal(&q, &hw, &bound, &core(peterson(&q, &bound))?))?;
    ensure(level_one == freudenthal, || "level-one and Freudenthal characters differ".into())?;
    ensure(level_one.mult(&dv(&[1, 1])) == Some(2), || "zero weight of the sl3 adjoint is not 2".into())
}

fn betti_profiles() -> Check {
    let q = builtin::a1();
    for (lambda, bound) in [(dv(&[2]), dv(&[3])), (dv(&[3]), dv(&[3]))] {
        let hausel = core(poincare_via_hausel(&q, &lambda, &DimBox::new(bound.clone())))?;
        for (alpha, profile) in &hausel {
            let kac = core(poincare_via_kac(&q, alpha, &lambda, &DimBox::new(alpha.clone())))?;
            ensure(&kac == profile, || format!("profiles of M({alpha}, {lambda}) differ"))?;
        }
    }
    let p1 = core(poincare_via_kac(&q, &dv(&[1]), &dv(&[2]), &DimBox::new(dv(&[1]))))?;
    ensure(p1.p == Poly::from_i64s(&[0, 1, 1]), || format!("p(T*P1) = {}", p1.p))?;
    let empty = core(poincare_via_kac(&q, &dv(&[2]), &dv(&[1]), &DimBox::new(dv(&[2]))))?;
    ensure(empty.is_empty(), || "M(2, 1) over A1 should be empty".into())
}

fn lambda_ring() -> Check {
    let r = core(r_series(&builtin::kronecker(2), &DimBox::new(dv(&[2, 2]))))?;
    let back = core(core(r.plethystic_log())?.plethystic_exp())?;
    ensure(back == r, || "Exp(Log r) differs from r".into())
}

/// Runs every check; the outcome fails with exit code 3 if any check fails.
pub fn run() -> Outcome {
    #[derive(Serialize)]
    struct Entry {
        name: &'static str,
        passed: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        detail: Option<String>,
    }
    #[derive(Serialize)]
    struct Summary {
        checks: Vec<Entry>,
        passed: bool,
    }
    let checks: [NamedCheck; 8] = [
        ("oracle_equivalence", oracle_equivalence),
        ("finite_type_roots", finite_types),
        ("kac_vs_peterson_kronecker2", || kac_and_peterson(&builtin::kronecker(2), &dv(&[3, 3]))),
        ("kac_vs_peterson_triangle", || kac_and_peterson(&builtin::triangle(), &dv(&[1, 1, 2]))),
        ("orientation_independence", orientation),
        ("weight_multiplicities", weight_multiplicities),
        ("betti_profiles", betti_profiles),
        ("lambda_ring", lambda_ring),
    ];
    let entries: Vec<Entry> = checks
        .iter()
        .map(|(name, f)| {
            let result = f();
            Entry { name, passed: result.is_ok(), detail: result.err() }
        })
        .collect();
    let passed = entries.iter().all(|e| e.passed);
    let rows = entries
        .iter()
        .map(|e| vec![e.name.to_string(), e.passed.to_string(), e.detail.clone().unwrap_or_default()])
        .collect();
    let failed: Vec<&str> = entries.iter().filter(|e| !e.passed).map(|e| e.name).collect();
    let report = Report::new(&Summary { checks: entries, passed }, vec!["check", "passed", "detail"], rows);
    let failure = (!passed).then(|| CliError::Internal(format!("selftest failed: {}", failed.join(", "))));
    Outcome { report, failure }
}
