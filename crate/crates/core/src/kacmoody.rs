//! Root multiplicities of symmetric Kac–Moody algebras and weight multiplicities
//! of their integrable highest-weight modules.
//!
//! Root multiplicities come from the Peterson recursion. Weight multiplicities of
//! `L(λ̄)` are computed two ways: as level-one root multiplicities `mult (β, 1)`
//! of the framed quiver, and independently by Freudenthal's recursion.
//!
//! The Cartan matrix is symmetric with 2 on the diagonal, so `(ρ, β) = ht(β)` and
//! `(λ̄, β) = λ·β`; neither `ρ` nor the fundamental weights are ever built.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};
use crate::series::DimBox;

/// How the Peterson sum over decompositions `β = β′ + β″` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSum {
    /// Every ordered pair.
    Naive,
    /// Unordered pairs, off-diagonal ones counted twice.
    Symmetric,
}

/// Root multiplicities `dim g_β` and Peterson coefficients `c_β` for `0 < β ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootTable {
    dom: DimBox,
    mult: Vec<u64>,
    c: Vec<BigRational>,
}

impl RootTable {
    pub fn bound(&self) -> &DimVector {
        self.dom.bound()
    }

    /// `dim g_β`, or `None` outside the table.
    pub fn mult(&self, beta: &DimVector) -> Option<u64> {
        self.dom.index_of(beta).map(|i| self.mult[i])
    }

    /// `c_β = Σ_{k ≥ 1} mult(β/k)/k`.
    pub fn c(&self, beta: &DimVector) -> Option<&BigRational> {
        self.dom.index_of(beta).map(|i| &self.c[i])
    }

    /// Positive roots in the table with their multiplicities, in box index order.
    pub fn roots(&self) -> impl Iterator<Item = (DimVector, u64)> + '_ {
        self.mult.iter().enumerate().filter(|(_, &m)| m > 0).map(move |(i, &m)| (self.dom.exponent(i), m))
    }
}

/// Root multiplicities for every `0 < β ≤ bound` by the Peterson recursion
///
/// `((β,β) − 2(ρ,β))·c_β = Σ_{β′+β″=β} (β′,β″)·c_{β′}·c_{β″}`,
/// `mult β = c_β − Σ_{k≥2} mult(β/k)/k`.
pub fn peterson(quiver: &Quiver, bound: &DimVector) -> Result<RootTable> {
    peterson_with(quiver, bound, PairSum::Symmetric)
}

pub fn peterson_with(quiver: &Quiver, bound: &DimVector, sum: PairSum) -> Result<RootTable> {
    quiver.check_dim(bound)?;
    let dom = DimBox::new(bound.clone());
    let mut mult = vec![0u64; dom.len()];
    let mut c = vec![BigRational::zero(); dom.len()];

    for idx in dom.indices_by_height() {
        let beta = dom.exponent(idx);
        let height = beta.height();
        if height == 0 {
            continue;
        }
        if height == 1 {
            mult[idx] = 1;
            c[idx] = BigRational::from_integer(1.into());
            continue;
        }

        let divisible = divisor_sum(&dom, &beta, &mult);
        let lhs = quiver.bilinear_unchecked(beta.entries(), beta.entries()) - 2 * height as i64;
        let rhs = match sum {
            PairSum::Naive => pair_sum_naive(quiver, &dom, &beta, &c),
            PairSum::Symmetric => pair_sum_symmetric(quiver, &dom, idx, &beta, &c),
        };
        let c_beta = if lhs != 0 {
            rhs / BigRational::from_integer(lhs.into())
        } else if rhs.is_zero() {
            divisible.clone()
        } else {
            return Err(Error::Internal(format!(
                "Peterson recursion at {beta}: left coefficient vanishes but the pair sum is {rhs}"
            )));
        };
        let m = &c_beta - &divisible;
        mult[idx] = to_multiplicity(&m)
            .ok_or_else(|| Error::Internal(format!("Peterson recursion gives multiplicity {m} at {beta}")))?;
        c[idx] = c_beta;
    }
    Ok(RootTable { dom, mult, c })
}

/// `Σ_{k≥2, k | β} mult(β/k)/k`.
fn divisor_sum(dom: &DimBox, beta: &DimVector, mult: &[u64]) -> BigRational {
    let mut total = BigRational::zero();
    for k in 2..=beta.content() {
        if let Some(part) = beta.divide(k) {
            let m = mult[dom.index_of(&part).expect("β/k lies in the box")];
            total += BigRational::new(m.into(), k.into());
        }
    }
    total
}

fn to_multiplicity(x: &BigRational) -> Option<u64> {
    if !x.is_integer() || x.is_negative() {
        return None;
    }
    x.to_integer().to_u64()
}

fn pair_sum_naive(quiver: &Quiver, dom: &DimBox, beta: &DimVector, c: &[BigRational]) -> BigRational {
    let mut total = BigRational::zero();
    for part in DimBox::new(beta.clone()).iter() {
        if part.is_zero() || &part == beta {
            continue;
        }
        let rest = beta.checked_sub(&part).expect("part ≤ β");
        let (i, j) = (dom.index_of(&part).unwrap(), dom.index_of(&rest).unwrap());
        if c[i].is_zero() || c[j].is_zero() {
            continue;
        }
        let pairing = quiver.bilinear_unchecked(part.entries(), rest.entries());
        total += &c[i] * &c[j] * BigRational::from_integer(pairing.into());
    }
    total
}

fn pair_sum_symmetric(
    quiver: &Quiver,
    dom: &DimBox,
    beta_idx: usize,
    beta: &DimVector,
    c: &[BigRational],
) -> BigRational {
    let mut total = BigRational::zero();
    for part in DimBox::new(beta.clone()).iter() {
        if part.is_zero() || &part == beta {
            continue;
        }
        let i = dom.index_of(&part).unwrap();
        // part ≤ β componentwise, so box indices subtract without borrows.
        let j = beta_idx - i;
        if i > j || c[i].is_zero() || c[j].is_zero() {
            continue;
        }
        let rest = dom.exponent(j);
        let pairing = quiver.bilinear_unchecked(part.entries(), rest.entries());
        let weight = if i == j { pairing } else { 2 * pairing };
        total += &c[i] * &c[j] * BigRational::from_integer(weight.into());
    }
    total
}

/// Real roots of a symmetric Kac–Moody algebra are exactly the roots with `T(β) = 1`.
pub fn is_real_root(quiver: &Quiver, beta: &DimVector, table: &RootTable) -> Result<bool> {
    quiver.check_dim(beta)?;
    let m = table.mult(beta).ok_or(Error::OutOfBox)?;
    Ok(m > 0 && quiver.tits_unchecked(beta.entries()) == 1)
}

/// Dominant integral highest weight `λ̄ = Σ λᵢ ωᵢ`, stored as the pairings `λᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight(pub DimVector);

impl HighestWeight {
    pub fn pairings(&self) -> &DimVector {
        &self.0
    }
}

impl From<DimVector> for HighestWeight {
    fn from(v: DimVector) -> Self {
        HighestWeight(v)
    }
}

/// `dim L(λ̄)_{λ̄ − β}` for every drop vector `0 ≤ β ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultTable {
    pub highest_weight: HighestWeight,
    dom: DimBox,
    mult: Vec<u64>,
}

impl WeightMultTable {
    pub fn bound(&self) -> &DimVector {
        self.dom.bound()
    }

    pub fn mult(&self, drop: &DimVector) -> Option<u64> {
        self.dom.index_of(drop).map(|i| self.mult[i])
    }

    /// `(β, dim L(λ̄)_{λ̄−β})` for every β in the box, in box index order.
    pub fn entries(&self) -> impl Iterator<Item = (DimVector, u64)> + '_ {
        self.mult.iter().enumerate().map(move |(i, &m)| (self.dom.exponent(i), m))
    }
}

/// `dim L(λ̄)_{λ̄−β} = mult (β, 1)` computed on the framed quiver.
pub fn weight_mult_level_one(quiver: &Quiver, hw: &HighestWeight, beta: &DimVector, bound: &DimVector) -> Result<u64> {
    quiver.check_dim(beta)?;
    quiver.check_dim(bound)?;
    if !beta.le(bound) {
        return Err(Error::OutOfBox);
    }
    let framed = quiver.frame(hw.pairings())?;
    let table = peterson(&framed, &bound.framed(1))?;
    Ok(table.mult(&beta.framed(1)).expect("(β,1) lies in the framed box"))
}

/// The character of `L(λ̄)` on all drops `β ≤ bound`, read off the level-one
/// root multiplicities of the framed quiver.
pub fn character_level_one(quiver: &Quiver, hw: &HighestWeight, bound: &DimVector) -> Result<WeightMultTable> {
    quiver.check_dim(bound)?;
    let framed = quiver.frame(hw.pairings())?;
    let table = peterson(&framed, &bound.framed(1))?;
    let dom = DimBox::new(bound.clone());
    let mult = dom.iter().map(|b| table.mult(&b.framed(1)).expect("in framed box")).collect();
    Ok(WeightMultTable { highest_weight: hw.clone(), dom, mult })
}

/// Weight multiplicities by Freudenthal's recursion, using the root table of `quiver`:
///
/// `(2(λ̄+ρ,β) − (β,β))·m_β = 2 Σ_{α>0} mult α Σ_{k≥1} m_{β−kα}·((λ̄,α) − (β,α) + k(α,α))`.
pub fn weight_mult_freudenthal(
    quiver: &Quiver,
    hw: &HighestWeight,
    bound: &DimVector,
    roots: &RootTable,
) -> Result<WeightMultTable> {
    quiver.check_dim(hw.pairings())?;
    quiver.check_dim(bound)?;
    if !bound.le(roots.bound()) {
        return Err(Error::Precondition("root table must cover the weight bound"));
    }
    let lambda = hw.pairings();
    let dom = DimBox::new(bound.clone());
    let mut mult = vec![0u64; dom.len()];
    let positive: Vec<(DimVector, u64)> = roots.roots().filter(|(a, _)| a.le(bound)).collect();

    for idx in dom.indices_by_height() {
        let beta = dom.exponent(idx);
        if beta.is_zero() {
            mult[idx] = 1;
            continue;
        }
        let ht = beta.height() as i64;
        let lhs = 2 * (lambda.dot(&beta) + ht) - quiver.bilinear_unchecked(beta.entries(), beta.entries());
        let mut rhs = BigInt::zero();
        for (alpha, m_alpha) in positive.iter().filter(|(a, _)| a.le(&beta)) {
            let la = lambda.dot(alpha);
            let ba = quiver.bilinear_unchecked(beta.entries(), alpha.entries());
            let aa = quiver.bilinear_unchecked(alpha.entries(), alpha.entries());
            let mut inner = BigInt::zero();
            let mut k = 1u32;
            while let Some(lower) = beta.checked_sub(&alpha.scale(k)) {
                let m = mult[dom.index_of(&lower).unwrap()];
                if m != 0 {
                    inner += BigInt::from(m) * BigInt::from(la - ba + i64::from(k) * aa);
                }
                k += 1;
            }
            rhs += inner * BigInt::from(*m_alpha);
        }
        rhs *= 2;
        mult[idx] = if lhs > 0 {
            let (m, r) = rhs.div_rem(&BigInt::from(lhs));
            if !r.is_zero() || m.is_negative() {
                return Err(Error::Internal(format!(
                    "Freudenthal recursion at {beta}: {rhs} / {lhs} is not a non-negative integer"
                )));
            }
            m.to_u64().ok_or_else(|| Error::Internal(format!("weight multiplicity at {beta} overflows")))?
        } else if rhs.is_zero() {
            0
        } else {
            return Err(Error::Internal(format!(
                "Freudenthal recursion at {beta}: left coefficient {lhs} with nonzero right side {rhs}"
            )));
        };
    }
    Ok(WeightMultTable { highest_weight: hw.clone(), dom, mult })
}
