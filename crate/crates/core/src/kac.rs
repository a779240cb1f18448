//! Hua's series `r(Γ, q)` and the Kac polynomials `a(Γ, q) = (q − 1)·Log r(Γ, q)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_multipartitions, phi_partition, tits_statistic};
use crate::poly::Poly;
use crate::quiver::{DimVector, Quiver};
use crate::ratfunc::RationalFunction;
use crate::series::{DimBox, TruncatedSeries};

/// The Kac polynomial `a_α(Γ, q)` of one dimension vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KacPolynomial {
    pub alpha: DimVector,
    pub poly: Poly,
}

impl KacPolynomial {
    /// `a_α(Γ, 0)`.
    pub fn constant_term(&self) -> num_bigint::BigInt {
        self.poly.coeff(0)
    }
}

/// `r_α(Γ, q) = Σ_{|λ| = α} q^{−T(λ)} / Πᵢ φ_{λⁱ}(q⁻¹)`.
pub fn r_alpha(quiver: &Quiver, alpha: &DimVector) -> Result<RationalFunction> {
    quiver.check_dim(alpha)?;
    Ok(r_alpha_unchecked(quiver, alpha))
}

fn r_alpha_unchecked(quiver: &Quiver, alpha: &DimVector) -> RationalFunction {
    let mut total = RationalFunction::zero();
    for lambda in enumerate_multipartitions(alpha) {
        let denom = lambda.components().iter().fold(RationalFunction::one(), |acc, mu| &acc * &phi_partition(mu, true));
        let term = RationalFunction::q_power(-tits_statistic(quiver, &lambda))
            .checked_div(&denom)
            .expect("φ_μ(q⁻¹) is a nonzero product");
        total = &total + &term;
    }
    total
}

/// Memo of `r_α` values for one quiver.
#[derive(Debug, Clone)]
pub struct HuaTable {
    quiver: Quiver,
    memo: BTreeMap<DimVector, RationalFunction>,
}

impl HuaTable {
    pub fn new(quiver: Quiver) -> Self {
        HuaTable { quiver, memo: BTreeMap::new() }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn r_alpha(&mut self, alpha: &DimVector) -> Result<RationalFunction> {
        self.quiver.check_dim(alpha)?;
        if let Some(r) = self.memo.get(alpha) {
            return Ok(r.clone());
        }
        let r = r_alpha_unchecked(&self.quiver, alpha);
        self.memo.insert(alpha.clone(), r.clone());
        Ok(r)
    }

    /// `r(Γ, q)` truncated to `dom`.
    pub fn series(&mut self, dom: &DimBox) -> Result<TruncatedSeries> {
        self.quiver.check_dim(dom.bound())?;
        self.fill(dom);
        let coeffs = dom.iter().map(|e| self.memo[&e].clone()).collect();
        Ok(TruncatedSeries::from_dense(dom.clone(), coeffs))
    }

    #[cfg(not(feature = "parallel"))]
    fn fill(&mut self, dom: &DimBox) {
        for e in dom.iter() {
            if !self.memo.contains_key(&e) {
                let r = r_alpha_unchecked(&self.quiver, &e);
                self.memo.insert(e, r);
            }
        }
    }

    #[cfg(feature = "parallel")]
    fn fill(&mut self, dom: &DimBox) {
        use rayon::prelude::*;
        let missing: Vec<DimVector> = dom.iter().filter(|e| !self.memo.contains_key(e)).collect();
        let quiver = &self.quiver;
        let computed: Vec<(DimVector, RationalFunction)> = missing
            .into_par_iter()
            .map(|e| {
                let r = r_alpha_unchecked(quiver, &e);
                (e, r)
            })
            .collect();
        self.memo.extend(computed);
    }
}

/// `r(Γ, q) = Σ_α r_α x^α` over a box.
pub fn r_series(quiver: &Quiver, dom: &DimBox) -> Result<TruncatedSeries> {
    HuaTable::new(quiver.clone()).series(dom)
}

/// `a(Γ, q) = (q − 1)·Log r(Γ, q)` over a box.
///
/// Every coefficient is checked to be a polynomial with integer coefficients;
/// anything else is reported as [`Error::Internal`].
pub fn a_series(quiver: &Quiver, dom: &DimBox) -> Result<TruncatedSeries> {
    let r = r_series(quiver, dom)?;
    kac_from_r(&r)
}

fn kac_from_r(r: &TruncatedSeries) -> Result<TruncatedSeries> {
    let q_minus_one = RationalFunction::from_poly(Poly::from_i64s(&[-1, 1]));
    let a = r.plethystic_log()?.scale(&q_minus_one);
    for (e, c) in a.terms() {
        if c.as_integer_poly().is_none() {
            return Err(Error::Internal(format!("Kac coefficient at {e} is not an integer polynomial: {c}")));
        }
    }
    Ok(a)
}

/// The Kac polynomial `a_α(Γ, q)`, computed inside `dom` (which must contain `α`).
pub fn kac_polynomial(quiver: &Quiver, alpha: &DimVector, dom: &DimBox) -> Result<KacPolynomial> {
    quiver.check_dim(alpha)?;
    quiver.check_dim(dom.bound())?;
    if !dom.contains(alpha) {
        return Err(Error::OutOfBox);
    }
    // The α-coefficient only depends on exponents below α.
    let a = a_series(quiver, &DimBox::new(alpha.clone()))?;
    let poly = a.coeff(alpha).as_integer_poly().cloned().expect("checked by a_series");
    Ok(KacPolynomial { alpha: alpha.clone(), poly })
}

/// Kac polynomials for every dimension vector of a box, in box index order.
pub fn kac_polynomials(quiver: &Quiver, dom: &DimBox) -> Result<Vec<KacPolynomial>> {
    let a = a_series(quiver, dom)?;
    Ok(dom
        .iter()
        .map(|e| {
            let poly = a.coeff(&e).as_integer_poly().cloned().expect("checked by a_series");
            KacPolynomial { alpha: e, poly }
        })
        .collect())
}

/// Which framed generating function [`framed_slice`] extracts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceKind {
    R,
    A,
}

/// `Σ_α f_{(α,n)}(Γ_*) x^α` for `f = r` or `f = a`, as a series over `dom`.
///
/// Runs the generic computation on the framed quiver with bound `(dom, n)`.
pub fn framed_slice(
    quiver: &Quiver,
    lambda: &DimVector,
    n: u32,
    dom: &DimBox,
    which: SliceKind,
) -> Result<TruncatedSeries> {
    quiver.check_dim(dom.bound())?;
    let framed = quiver.frame(lambda)?;
    let framed_box = DimBox::new(dom.bound().framed(n));
    let full = match which {
        SliceKind::R => r_series(&framed, &framed_box)?,
        SliceKind::A => a_series(&framed, &framed_box)?,
    };
    full.slice_last(n)
}
