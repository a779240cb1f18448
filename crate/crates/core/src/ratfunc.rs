//! Exact rational functions in one variable `q` over the integers.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// `num / den` in canonical form.
///
/// Canonical means: `num` and `den` are coprime in `ℚ[q]`, the combined
/// coefficient content of both is 1, and `den` has a positive leading
/// coefficient. Zero is `0 / 1`. Two rational functions are equal exactly when
/// their canonical forms agree coefficientwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.degree() == Some(0) || num.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
            }
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Poly::constant(BigInt::from(c)))
    }

    pub fn from_rational(c: &BigRational) -> Self {
        Self::canonical(Poly::constant(c.numer().clone()), Poly::constant(c.denom().clone()))
    }

    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    /// `qᵏ` for any integer `k`, negative powers included.
    pub fn q_power(k: i64) -> Self {
        let m = Poly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RationalFunction { num: Poly::one(), den: m }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The polynomial this function equals when it lies in `ℤ[q]`.
    pub fn as_integer_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::canonical(self.num.scale(c.numer()), self.den.scale(c.denom()))
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::canonical(self.num.scale(c), self.den.clone())
    }

    /// Multiplies by `qᵏ`.
    pub fn shift(&self, k: i64) -> Self {
        if k >= 0 {
            Self::canonical(self.num.shift(k as usize), self.den.clone())
        } else {
            Self::canonical(self.num.clone(), self.den.shift(k.unsigned_abs() as usize))
        }
    }

    /// Adams operation `ψₙ f(q) = f(qⁿ)`.
    pub fn adams(&self, n: usize) -> Self {
        if n == 1 {
            return self.clone();
        }
        // q ↦ qⁿ preserves coprimality, content and leading coefficients.
        RationalFunction { num: self.num.compose_power(n), den: self.den.compose_power(n) }
    }

    /// Exact value at `q = x`.
    pub fn eval_at(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(x) / d)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::canonical(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // Cross-cancel before multiplying to keep the gcd work small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = cancel(&self.num, &rhs.den, &g1);
        let (c, b) = cancel(&rhs.num, &self.den, &g2);
        RationalFunction::canonical(&a * &c, &b * &d)
    }
}

fn cancel(x: &Poly, y: &Poly, g: &Poly) -> (Poly, Poly) {
    if g.is_one() || g.degree() == Some(0) {
        (x.clone(), y.clone())
    } else {
        (x.div_exact(g).expect("gcd divides"), y.div_exact(g).expect("gcd divides"))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
