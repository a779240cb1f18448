//! Betti numbers of Nakajima quiver varieties `M(α, λ)`.
//!
//! `p(M, q) = Σᵢ h_c^{2i}(M) qⁱ` is obtained two ways:
//!
//! - from the framed Kac polynomial, `p = q^d · a_{(α,1)}(Γ_*, q)`;
//! - from Hua's series, as `q^d` times the `α`-coefficient of
//!   `(q − 1)·r₁(q)/r₀(q)`, where `r_n` collects the framed `r`-coefficients of
//!   `*`-degree `n`.
//!
//! Here `d = d(α, λ) = α·λ − T(α)` is half the dimension of `M(α, λ)`. The
//! varieties are taken with the stability parameter `θ = (−1,…,−1, Σαᵢ)`; it
//! plays no role in the arithmetic. The odd Betti numbers vanish and `p(M, q)`
//! also counts the points of `M` over `F_q` for large characteristic.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::kac::{kac_polynomial, HuaTable};
use crate::poly::Poly;
use crate::quiver::{DimVector, Quiver};
use crate::ratfunc::RationalFunction;
use crate::series::DimBox;

/// Compactly supported Betti numbers of `M(α, λ)` packaged as `p(M, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    pub alpha: DimVector,
    pub lambda: DimVector,
    /// Half the complex dimension.
    pub d: i64,
    /// `p(M, q)`; the coefficient of `qⁱ` is `h_c^{2i}(M)`.
    pub p: Poly,
}

impl BettiProfile {
    /// Validates a candidate polynomial against the degree window `[d, 2d]`,
    /// non-negativity, and integrality.
    fn checked(alpha: DimVector, lambda: DimVector, d: i64, p: Poly) -> Result<Self> {
        if let Some(c) = p.coeffs().iter().find(|c| c.is_negative()) {
            return Err(Error::Internal(format!("negative Betti number {c} for M({alpha}, {lambda})")));
        }
        if let (Some(lo), Some(hi)) = (p.low_degree(), p.degree()) {
            if d < 0 || (lo as i64) < d || (hi as i64) > 2 * d {
                return Err(Error::Internal(format!(
                    "p(M({alpha}, {lambda})) = {p} leaves the degree window [{d}, {}]",
                    2 * d
                )));
            }
        }
        Ok(BettiProfile { alpha, lambda, d, p })
    }

    /// `M(α, λ)` is empty exactly when `(α, 1)` is not a root of the framed quiver.
    pub fn is_empty(&self) -> bool {
        self.p.is_zero()
    }

    /// `(2i, h_c^{2i})` for every nonzero even Betti number.
    pub fn betti(&self) -> Vec<(u32, BigInt)> {
        self.p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (2 * i as u32, c.clone()))
            .collect()
    }
}

/// `p(M(α, λ), q) = q^{d(α,λ)} · a_{(α,1)}(Γ_*, q)`.
pub fn poincare_via_kac(quiver: &Quiver, alpha: &DimVector, lambda: &DimVector, dom: &DimBox) -> Result<BettiProfile> {
    quiver.check_dim(alpha)?;
    quiver.check_dim(dom.bound())?;
    if !dom.contains(alpha) {
        return Err(Error::OutOfBox);
    }
    let d = quiver.dim_function(alpha, lambda)?;
    let framed = quiver.frame(lambda)?;
    let top = alpha.framed(1);
    let a = kac_polynomial(&framed, &top, &DimBox::new(top.clone()))?.poly;
    if a.is_zero() {
        return Ok(BettiProfile { alpha: alpha.clone(), lambda: lambda.clone(), d, p: a });
    }
    if d < 0 {
        return Err(Error::Internal(format!("nonzero a_(α,1) = {a} with negative d = {d} at α = {alpha}")));
    }
    if a.coeff(0) < BigInt::from(1) || a.degree().unwrap() as i64 > d {
        return Err(Error::Internal(format!(
            "framed Kac polynomial {a} at α = {alpha} violates 1 ≤ a(0), deg ≤ d = {d}"
        )));
    }
    BettiProfile::checked(alpha.clone(), lambda.clone(), d, a.shift(d as usize))
}

/// Profiles of `M(α, λ)` for every `α` in `dom`, from `(q − 1)·r₁/r₀`.
pub fn poincare_via_hausel(
    quiver: &Quiver,
    lambda: &DimVector,
    dom: &DimBox,
) -> Result<BTreeMap<DimVector, BettiProfile>> {
    quiver.check_dim(dom.bound())?;
    quiver.check_dim(lambda)?;
    let framed = quiver.frame(lambda)?;
    let mut table = HuaTable::new(framed);
    let framed_series = table.series(&DimBox::new(dom.bound().framed(1)))?;
    let r0 = framed_series.slice_last(0)?;
    let r1 = framed_series.slice_last(1)?;
    let q_minus_one = RationalFunction::from_poly(Poly::from_i64s(&[-1, 1]));
    let ratio = (&r1 * &r0.inverse()?).scale(&q_minus_one);

    let mut out = BTreeMap::new();
    for alpha in dom.iter() {
        let d = quiver.dim_function(&alpha, lambda)?;
        let scaled = ratio.coeff(&alpha).shift(d);
        let p = scaled.as_integer_poly().cloned().ok_or_else(|| {
            Error::Internal(format!(
                "q^d times the ratio coefficient at {alpha} is not an integer polynomial: {scaled}"
            ))
        })?;
        out.insert(alpha.clone(), BettiProfile::checked(alpha, lambda.clone(), d, p)?);
    }
    Ok(out)
}

/// `h_c^{2d}(M)`, the coefficient of `q^d`, which equals `dim L(λ̄)_{λ̄−α}`.
pub fn weight_mult_via_betti(profile: &BettiProfile) -> BigInt {
    if profile.d < 0 {
        return BigInt::zero();
    }
    profile.p.coeff(profile.d as usize)
}

/// `p(M, 1)`, the sum of all Betti numbers.
pub fn euler_characteristic(profile: &BettiProfile) -> BigInt {
    profile.p.eval_int(&BigInt::from(1))
}
