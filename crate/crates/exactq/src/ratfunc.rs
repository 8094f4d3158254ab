//! The rational function field `ℚ(q)`, represented as reduced fractions of
//! integer Laurent polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ExactError;
use crate::laurent::LaurentPoly;
use crate::modp;

/// A reduced fraction `num/den`.
///
/// Canonical form: `den` is an ordinary polynomial with nonzero constant term
/// and positive leading coefficient, and `num` (a Laurent polynomial) shares
/// no nonunit factor with it.  Powers of `q` are units and always live in the
/// numerator, so equality of values is equality of representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

/// Dense ascending coefficients of a polynomial with nonzero constant term.
fn dense(p: &LaurentPoly) -> Vec<BigInt> {
    let lo = p.low_exp().unwrap_or(0);
    let hi = p.high_exp().unwrap_or(0);
    (lo..=hi).map(|e| p.coeff(e)).collect()
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let c = content(&v);
    if !c.is_zero() && !c.is_one() {
        for x in v.iter_mut() {
            *x /= &c;
        }
    }
    if v.last().map(|x| x.is_negative()).unwrap_or(false) {
        for x in v.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    v
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().map(|x| x.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

/// Gcd in `ℤ[q]` of two nonzero polynomials given with their `q`-power
/// factors removed; the result has positive leading coefficient.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let a = a.shift(-a.low_exp().unwrap());
    let b = b.shift(-b.low_exp().unwrap());
    let da = dense(&a);
    let db = dense(&b);
    let c = content(&da).gcd(&content(&db));
    if da.len() == 1 || db.len() == 1 {
        return LaurentPoly::constant(c);
    }
    let (mut x, mut y) = if da.len() >= db.len() {
        (primitive(da), primitive(db))
    } else {
        (primitive(db), primitive(da))
    };
    while y.len() > 1 {
        // Pseudo-remainder of x by y, made primitive after each reduction.
        let ly = y.last().unwrap().clone();
        while x.len() >= y.len() && !x.is_empty() {
            let lx = x.last().unwrap().clone();
            let shift = x.len() - y.len();
            let g = lx.gcd(&ly);
            let fx = &ly / &g;
            let fy = &lx / &g;
            for v in x.iter_mut() {
                *v *= &fx;
            }
            for (k, yk) in y.iter().enumerate() {
                x[k + shift] -= &fy * yk;
            }
            trim(&mut x);
            if !x.is_empty() {
                x = primitive(x);
            }
        }
        if x.is_empty() {
            let g = LaurentPoly::from_big(0, y);
            return g.scale(&c);
        }
        std::mem::swap(&mut x, &mut y);
    }
    if y.len() == 1 {
        // Nonzero constant remainder: the polynomials are coprime.
        return LaurentPoly::constant(c);
    }
    LaurentPoly::from_big(0, x).scale(&c)
}

impl RatFunc {
    /// Zero.
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    /// One.
    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    /// `q`.
    pub fn q() -> Self {
        Self::from(LaurentPoly::q())
    }

    /// `num/den`, reduced; fails on a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let dl = den.low_exp().unwrap();
        let mut den = den.shift(-dl);
        let mut num = num.shift(-dl);
        if !den.is_one() {
            let g = poly_gcd(&num, &den);
            if !g.is_one() {
                num = num.divide_exact(&g).expect("gcd divides numerator");
                den = den.divide_exact(&g).expect("gcd divides denominator");
            }
            if den.leading_coeff().is_negative() {
                num = -num;
                den = -den;
            }
        }
        RatFunc { num, den }
    }

    /// Numerator (a Laurent polynomial).
    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator (a polynomial with nonzero constant term).
    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `ℤ[q,q⁻¹]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Lossless conversion to a Laurent polynomial when possible.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    /// The bar involution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        Self::reduce(self.num.bar(), self.den.bar())
    }

    /// `self^n` for a signed exponent.
    pub fn pow(&self, n: i32) -> Result<Self, ExactError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..n.unsigned_abs() {
            r = &r * &base;
        }
        Ok(r)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        RatFunc { num: self.num.shift(k), den: self.den.clone() }
    }

    /// Multiplication by a Laurent polynomial.
    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        if self.den.is_one() {
            return RatFunc { num: self.num.mul_ref(p), den: LaurentPoly::one() };
        }
        Self::reduce(self.num.mul_ref(p), self.den.clone())
    }

    /// Value at `q = x` modulo `p`; `None` when the denominator vanishes.
    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let d = self.den.eval_mod(x, p);
        if d == 0 {
            return None;
        }
        Some(modp::mul(self.num.eval_mod(x, p), modp::inv(d, p), p))
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from(LaurentPoly::from(c))
    }
}

impl From<BigInt> for RatFunc {
    fn from(c: BigInt) -> Self {
        RatFunc::from(LaurentPoly::constant(c))
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let n = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc { num: n, den: LaurentPoly::one() };
            }
            return RatFunc::reduce(n, self.den.clone());
        }
        let n = &self.num.mul_ref(&rhs.den) + &rhs.num.mul_ref(&self.den);
        RatFunc::reduce(n, self.den.mul_ref(&rhs.den))
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: self.num.mul_ref(&rhs.num), den: LaurentPoly::one() };
        }
        RatFunc::reduce(self.num.mul_ref(&rhs.num), self.den.mul_ref(&rhs.den))
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = Result<RatFunc, ExactError>;
    fn div(self, rhs: &RatFunc) -> Result<RatFunc, ExactError> {
        Ok(self * &rhs.inv()?)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl fmt::Display for RatFunc {
    /// A Laurent value renders in the polynomial grammar; otherwise
    /// `(<num>)/(<den>)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Gcd in `ℤ[q, q⁻¹]`, normalized to an ordinary polynomial with nonzero
/// constant term and positive leading coefficient; `gcd(0, 0) = 0`.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let normal = |p: &LaurentPoly| {
        let p = p.shift(-p.low_exp().unwrap());
        if p.leading_coeff().is_negative() {
            -p
        } else {
            p
        }
    };
    match (a.is_zero(), b.is_zero()) {
        (true, true) => LaurentPoly::zero(),
        (true, false) => normal(b),
        (false, true) => normal(a),
        (false, false) => poly_gcd(a, b),
    }
}
