//! Multivariate power series truncated to a box, as a λ-ring.
//!
//! Coefficients are [`RationalFunction`]s in `q`. The Adams operations act by
//! `ψₖ(c·xᵉ) = c(qᵏ)·x^{k·e}`, from which the plethystic exponential and
//! Cadogan's plethystic logarithm are built. Truncation is componentwise, so
//! every coefficient that survives is exact.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::quiver::DimVector;
use crate::ratfunc::RationalFunction;

/// The set `{e : 0 ≤ e ≤ bound}` with a dense mixed-radix indexing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimBox {
    bound: DimVector,
    strides: Vec<usize>,
    len: usize,
}

impl DimBox {
    pub fn new(bound: DimVector) -> Self {
        let mut strides = Vec::with_capacity(bound.len());
        let mut len = 1usize;
        for &b in bound.entries() {
            strides.push(len);
            len = len.checked_mul(b as usize + 1).expect("box too large to index");
        }
        DimBox { bound, strides, len }
    }

    pub fn bound(&self) -> &DimVector {
        &self.bound
    }

    pub fn rank(&self) -> usize {
        self.bound.len()
    }

    /// Number of exponents in the box.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, e: &DimVector) -> bool {
        e.le(&self.bound)
    }

    pub fn index_of(&self, e: &DimVector) -> Option<usize> {
        if !self.contains(e) {
            return None;
        }
        Some(e.entries().iter().zip(&self.strides).map(|(&x, s)| x as usize * s).sum())
    }

    pub fn exponent(&self, mut idx: usize) -> DimVector {
        let v = self
            .bound
            .entries()
            .iter()
            .map(|&b| {
                let r = b as usize + 1;
                let d = idx % r;
                idx /= r;
                d as u32
            })
            .collect::<Vec<_>>();
        DimVector::new(v)
    }

    /// All exponents in index order (first coordinate varies fastest).
    pub fn iter(&self) -> impl Iterator<Item = DimVector> + '_ {
        (0..self.len).map(move |i| self.exponent(i))
    }

    /// Indices sorted by height, ties broken by index.
    pub fn indices_by_height(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len).collect();
        let heights: Vec<u64> = (0..self.len).map(|i| self.exponent(i).height()).collect();
        idx.sort_by_key(|&i| (heights[i], i));
        idx
    }

    pub fn max_height(&self) -> u64 {
        self.bound.height()
    }
}

/// Möbius function, by trial division.
pub fn moebius(k: u64) -> i32 {
    assert!(k >= 1, "Möbius function is defined for k >= 1");
    let mut n = k;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// A power series in `x₁,…,x_r` with rational-function coefficients, truncated
/// to a [`DimBox`]. Exponents outside the box are discarded by every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    dom: DimBox,
    coeffs: Vec<RationalFunction>,
}

impl TruncatedSeries {
    pub fn zero(dom: DimBox) -> Self {
        let coeffs = vec![RationalFunction::zero(); dom.len()];
        TruncatedSeries { dom, coeffs }
    }

    pub fn one(dom: DimBox) -> Self {
        Self::constant(dom, RationalFunction::one())
    }

    pub fn constant(dom: DimBox, c: RationalFunction) -> Self {
        let mut s = Self::zero(dom);
        s.coeffs[0] = c;
        s
    }

    /// `c·xᵉ`, or zero if `e` is outside the box.
    pub fn monomial(dom: DimBox, e: &DimVector, c: RationalFunction) -> Self {
        let mut s = Self::zero(dom);
        if let Some(i) = s.dom.index_of(e) {
            s.coeffs[i] = c;
        }
        s
    }

    /// Builds a series from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(dom: DimBox, terms: I) -> Self
    where
        I: IntoIterator<Item = (DimVector, RationalFunction)>,
    {
        let mut s = Self::zero(dom);
        for (e, c) in terms {
            if let Some(i) = s.dom.index_of(&e) {
                s.coeffs[i] = &s.coeffs[i] + &c;
            }
        }
        s
    }

    /// Builds a series from one coefficient per exponent, in box index order.
    pub fn from_dense(dom: DimBox, coeffs: Vec<RationalFunction>) -> Self {
        assert_eq!(coeffs.len(), dom.len(), "coefficient count must match the box");
        TruncatedSeries { dom, coeffs }
    }

    pub fn domain(&self) -> &DimBox {
        &self.dom
    }

    pub fn coeff(&self, e: &DimVector) -> RationalFunction {
        self.dom.index_of(e).map(|i| self.coeffs[i].clone()).unwrap_or_default()
    }

    pub fn coeff_at(&self, idx: usize) -> &RationalFunction {
        &self.coeffs[idx]
    }

    pub fn set_coeff(&mut self, e: &DimVector, c: RationalFunction) -> Result<()> {
        let i = self.dom.index_of(e).ok_or(Error::OutOfBox)?;
        self.coeffs[i] = c;
        Ok(())
    }

    pub fn constant_term(&self) -> &RationalFunction {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RationalFunction::is_zero)
    }

    /// Nonzero terms in box index order.
    pub fn terms(&self) -> impl Iterator<Item = (DimVector, &RationalFunction)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.dom.exponent(i), c))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        self.map(|x| x * c)
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.map(|x| x.scale_rational(c))
    }

    fn map(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        let coeffs = self.coeffs.iter().map(|x| if x.is_zero() { RationalFunction::zero() } else { f(x) }).collect();
        TruncatedSeries { dom: self.dom.clone(), coeffs }
    }

    /// Adams operation `ψₙ`; terms whose exponent `n·e` leaves the box vanish.
    pub fn adams(&self, n: usize) -> Self {
        assert!(n >= 1, "Adams operations are indexed by n >= 1");
        let mut out = Self::zero(self.dom.clone());
        for (e, c) in self.terms() {
            if let Some(i) = self.dom.index_of(&e.scale(n as u32)) {
                out.coeffs[i] = c.adams(n);
            }
        }
        out
    }

    /// Coefficients at exponents whose last coordinate equals `n`, as a series in
    /// the remaining variables.
    pub fn slice_last(&self, n: u32) -> Result<Self> {
        let (rest, top) = self.dom.bound().split_last().ok_or(Error::Precondition("slice of a rank-0 series"))?;
        if n > top {
            return Err(Error::OutOfBox);
        }
        let dom = DimBox::new(rest);
        let coeffs = dom.iter().map(|e| self.coeff(&e.framed(n))).collect();
        Ok(TruncatedSeries { dom, coeffs })
    }

    /// Restriction to a smaller box.
    pub fn truncate(&self, dom: &DimBox) -> Result<Self> {
        if !dom.bound().le(self.dom.bound()) {
            return Err(Error::OutOfBox);
        }
        let coeffs = dom.iter().map(|e| self.coeff(&e)).collect();
        Ok(TruncatedSeries { dom: dom.clone(), coeffs })
    }

    fn check_same_box(&self, other: &Self) {
        assert_eq!(self.dom, other.dom, "series live in different boxes");
    }

    /// `1/s`, for a series with nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::Precondition("inverse needs a nonzero constant term"));
        }
        let inv_c0 = c0.recip()?;
        // 1/s = c0⁻¹ Σ (−u)ᵏ with u = s/c0 − 1 nilpotent.
        let mut u = self.scale(&inv_c0);
        u.coeffs[0] = RationalFunction::zero();
        let neg_u = -&u;
        let mut acc = Self::one(self.dom.clone());
        let mut power = Self::one(self.dom.clone());
        for _ in 0..self.dom.max_height() {
            power = &power * &neg_u;
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Ok(acc.scale(&inv_c0))
    }

    /// Formal exponential `Σ sᵏ/k!` of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::Precondition("exp needs a zero constant term"));
        }
        let mut acc = Self::one(self.dom.clone());
        let mut term = Self::one(self.dom.clone());
        for k in 1..=self.dom.max_height() {
            term = (&term * self).scale_rational(&BigRational::new(BigInt::one(), BigInt::from(k)));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Formal logarithm `Σ (−1)^{k+1}(s−1)ᵏ/k` of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::Precondition("log needs constant term 1"));
        }
        let mut u = self.clone();
        u.coeffs[0] = RationalFunction::zero();
        let mut acc = Self::zero(self.dom.clone());
        let mut power = Self::one(self.dom.clone());
        for k in 1..=self.dom.max_height() {
            power = &power * &u;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = &acc + &power.scale_rational(&BigRational::new(BigInt::from(sign), BigInt::from(k)));
        }
        Ok(acc)
    }

    /// Plethystic exponential `Exp(s) = exp(Σ_{k≥1} ψₖ(s)/k)`.
    ///
    /// The sum stops at the first `k` for which `ψₖ(s)` leaves the box; every
    /// later Adams image leaves it too.
    pub fn plethystic_exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::Precondition("Exp needs a zero constant term"));
        }
        let mut sum = Self::zero(self.dom.clone());
        for k in 1.. {
            let image = self.adams(k);
            if image.is_zero() {
                break;
            }
            sum = &sum + &image.scale_rational(&BigRational::new(BigInt::one(), BigInt::from(k)));
        }
        sum.exp()
    }

    /// Cadogan's plethystic logarithm `Log(s) = Σ_{k≥1} μ(k)/k · ψₖ(log s)`.
    pub fn plethystic_log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::Precondition("Log needs constant term 1"));
        }
        let l = self.log()?;
        let mut acc = Self::zero(self.dom.clone());
        for k in 1.. {
            let image = l.adams(k);
            if image.is_zero() {
                break;
            }
            let mu = moebius(k as u64);
            if mu != 0 {
                acc = &acc + &image.scale_rational(&BigRational::new(BigInt::from(mu), BigInt::from(k)));
            }
        }
        Ok(acc)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_box(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        TruncatedSeries { dom: self.dom.clone(), coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_box(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        TruncatedSeries { dom: self.dom.clone(), coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.map(|c| -c)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_box(rhs);
        let bound = self.dom.bound().entries();
        let support = |s: &TruncatedSeries| -> Vec<(usize, DimVector)> {
            s.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| (i, s.dom.exponent(i))).collect()
        };
        let left = support(self);
        let right = support(rhs);
        let mut coeffs = vec![RationalFunction::zero(); self.dom.len()];
        for (i, ei) in &left {
            for (j, ej) in &right {
                let fits = ei.entries().iter().zip(ej.entries()).zip(bound).all(|((a, b), m)| a + b <= *m);
                if fits {
                    // Mixed-radix indices add when no coordinate overflows.
                    let k = i + j;
                    let prod = &self.coeffs[*i] * &rhs.coeffs[*j];
                    coeffs[k] = &coeffs[k] + &prod;
                }
            }
        }
        TruncatedSeries { dom: self.dom.clone(), coeffs }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
