//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored densely from the lowest exponent upwards.  While
//! every coefficient fits in an `i64` the machine-word representation is used
//! and all arithmetic is overflow-checked; on overflow the operation is
//! transparently redone with big integers.  The representation is canonical:
//! the first and last stored coefficients are nonzero, the zero polynomial is
//! the empty sequence at exponent 0, and the small representation is used
//! whenever it can hold the value.

use std::cmp::{max, min};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ExactError;

#[derive(Clone, Debug)]
enum Coeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// An element of `ℤ[q, q⁻¹]`.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Coeffs,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.low != other.low {
            return false;
        }
        match (&self.coeffs, &other.coeffs) {
            (Coeffs::Small(a), Coeffs::Small(b)) => a == b,
            (Coeffs::Big(a), Coeffs::Big(b)) => a == b,
            // Canonical form never stores a value in the big representation
            // when the small one can hold it.
            _ => false,
        }
    }
}

impl Eq for LaurentPoly {}

impl Hash for LaurentPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.low.hash(state);
        match &self.coeffs {
            Coeffs::Small(v) => {
                0u8.hash(state);
                v.hash(state)
            }
            Coeffs::Big(v) => {
                1u8.hash(state);
                v.hash(state)
            }
        }
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

fn big_to_i64s(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|c| c.to_i64()).collect()
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Coeffs::Small(Vec::new()) }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial_i64(1, 0)
    }

    /// The monomial `q`.
    pub fn q() -> Self {
        Self::monomial_i64(1, 1)
    }

    /// `c·q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c: BigInt = c.into();
        Self::from_big(e, vec![c])
    }

    /// `c·q^e` with a machine-word coefficient.
    pub fn monomial_i64(c: i64, e: i64) -> Self {
        Self::from_small(e, vec![c])
    }

    /// Constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds `Σ coeffs[k]·q^(low+k)` from machine-word coefficients.
    pub fn from_small(low: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs: Coeffs::Small(coeffs) };
        p.normalize();
        p
    }

    /// Builds `Σ coeffs[k]·q^(low+k)` from big-integer coefficients.
    pub fn from_big(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs: Coeffs::Big(coeffs) };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            v[(e - lo) as usize] += c;
        }
        Self::from_big(lo, v)
    }

    fn normalize(&mut self) {
        match &mut self.coeffs {
            Coeffs::Small(v) => {
                let first = v.iter().position(|c| *c != 0);
                match first {
                    None => {
                        v.clear();
                        self.low = 0;
                    }
                    Some(f) => {
                        let last = v.iter().rposition(|c| *c != 0).unwrap();
                        v.truncate(last + 1);
                        if f > 0 {
                            v.drain(..f);
                            self.low += f as i64;
                        }
                    }
                }
            }
            Coeffs::Big(v) => {
                let first = v.iter().position(|c| !c.is_zero());
                match first {
                    None => {
                        self.coeffs = Coeffs::Small(Vec::new());
                        self.low = 0;
                        return;
                    }
                    Some(f) => {
                        let last = v.iter().rposition(|c| !c.is_zero()).unwrap();
                        v.truncate(last + 1);
                        if f > 0 {
                            v.drain(..f);
                            self.low += f as i64;
                        }
                    }
                }
                if let Some(s) = big_to_i64s(v) {
                    self.coeffs = Coeffs::Small(s);
                }
            }
        }
    }

    fn big_coeffs(&self) -> Vec<BigInt> {
        match &self.coeffs {
            Coeffs::Small(v) => v.iter().map(|&c| BigInt::from(c)).collect(),
            Coeffs::Big(v) => v.clone(),
        }
    }

    fn len(&self) -> usize {
        match &self.coeffs {
            Coeffs::Small(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.low == 0 && matches!(&self.coeffs, Coeffs::Small(v) if v.len() == 1 && v[0] == 1)
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn low_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low)
        }
    }

    /// Highest exponent with a nonzero coefficient (`None` for zero).
    pub fn high_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low + self.len() as i64 - 1)
        }
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        let k = e - self.low;
        if k < 0 || k >= self.len() as i64 {
            return BigInt::zero();
        }
        match &self.coeffs {
            Coeffs::Small(v) => BigInt::from(v[k as usize]),
            Coeffs::Big(v) => v[k as usize].clone(),
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        self.big_coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.low + k as i64, c))
            .collect()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        match &self.coeffs {
            Coeffs::Small(v) => v.iter().filter(|c| **c != 0).count(),
            Coeffs::Big(v) => v.iter().filter(|c| !c.is_zero()).count(),
        }
    }

    /// If the polynomial is `c·q^e`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        if self.len() == 1 {
            Some((self.coeff(self.low), self.low))
        } else {
            None
        }
    }

    /// If the polynomial is an integer constant, returns it.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        match self.as_monomial() {
            Some((c, 0)) => Some(c),
            _ => None,
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut r = self.clone();
        r.low += k;
        r
    }

    /// Multiplication by an integer.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if let (Some(ci), Coeffs::Small(v)) = (c.to_i64(), &self.coeffs) {
            let mut out = Vec::with_capacity(v.len());
            let mut ok = true;
            for &x in v {
                match x.checked_mul(ci) {
                    Some(y) => out.push(y),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return LaurentPoly { low: self.low, coeffs: Coeffs::Small(out) };
            }
        }
        Self::from_big(self.low, self.big_coeffs().into_iter().map(|x| x * c).collect())
    }

    /// The bar involution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let high = self.high_exp().unwrap();
        let coeffs = match &self.coeffs {
            Coeffs::Small(v) => Coeffs::Small(v.iter().rev().copied().collect()),
            Coeffs::Big(v) => Coeffs::Big(v.iter().rev().cloned().collect()),
        };
        LaurentPoly { low: -high, coeffs }
    }

    /// True when `bar(p) = p`.
    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    /// True when every coefficient is nonnegative (membership in `ℕ[q,q⁻¹]`).
    pub fn is_nonnegative(&self) -> bool {
        match &self.coeffs {
            Coeffs::Small(v) => v.iter().all(|c| *c >= 0),
            Coeffs::Big(v) => v.iter().all(|c| !c.is_negative()),
        }
    }

    /// Leading (highest-exponent) coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        match self.high_exp() {
            None => BigInt::zero(),
            Some(h) => self.coeff(h),
        }
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.big_coeffs() {
            g = g.gcd(&c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Adds `c·q^shift·other` into `self` in place.
    pub fn add_assign_scaled_shifted(&mut self, other: &LaurentPoly, shift: i64, negate: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.shift(shift);
            if negate {
                *self = -std::mem::take(self);
            }
            return;
        }
        let olow = other.low + shift;
        let ohigh = olow + other.len() as i64 - 1;
        let slow = self.low;
        let shigh = self.high_exp().unwrap();
        let nlow = min(slow, olow);
        let nhigh = max(shigh, ohigh);
        if let (Coeffs::Small(sv), Coeffs::Small(ov)) = (&mut self.coeffs, &other.coeffs) {
            let snap = if nlow < slow || nhigh > shigh { None } else { Some(()) };
            let mut buf;
            let target: &mut Vec<i64> = if snap.is_some() {
                sv
            } else {
                buf = vec![0i64; (nhigh - nlow + 1) as usize];
                let off = (slow - nlow) as usize;
                buf[off..off + sv.len()].copy_from_slice(sv);
                *sv = std::mem::take(&mut buf);
                self.low = nlow;
                sv
            };
            let base = (olow - self.low) as usize;
            let mut overflow = None;
            for (k, &x) in ov.iter().enumerate() {
                let t = &mut target[base + k];
                let r = if negate { t.checked_sub(x) } else { t.checked_add(x) };
                match r {
                    Some(y) => *t = y,
                    None => {
                        overflow = Some(k);
                        break;
                    }
                }
            }
            match overflow {
                None => {
                    self.normalize();
                    return;
                }
                Some(k) => {
                    // Undo the partial update, then redo with big integers.
                    for (j, &x) in ov.iter().enumerate().take(k) {
                        let t = &mut target[base + j];
                        *t = if negate { *t + x } else { *t - x };
                    }
                }
            }
        }
        let mut sv = vec![BigInt::zero(); (nhigh - nlow + 1) as usize];
        for (k, c) in self.big_coeffs().into_iter().enumerate() {
            sv[(self.low - nlow) as usize + k] = c;
        }
        for (k, c) in other.big_coeffs().into_iter().enumerate() {
            let t = &mut sv[(olow - nlow) as usize + k];
            if negate {
                *t -= c;
            } else {
                *t += c;
            }
        }
        *self = Self::from_big(nlow, sv);
    }

    /// Multiplication.
    pub fn mul_ref(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let low = self.low + other.low;
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.coeffs, &other.coeffs) {
            if a.len() == 1 && a[0] == 1 {
                return other.shift(self.low);
            }
            if b.len() == 1 && b[0] == 1 {
                return self.shift(other.low);
            }
            let mut acc = vec![0i128; a.len() + b.len() - 1];
            let mut ok = true;
            'outer: for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    match acc[i + j].checked_add(x as i128 * y as i128) {
                        Some(s) => acc[i + j] = s,
                        None => {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if ok {
                let small: Option<Vec<i64>> = acc.iter().map(|&s| i64::try_from(s).ok()).collect();
                if let Some(v) = small {
                    return Self::from_small(low, v);
                }
                return Self::from_big(low, acc.into_iter().map(BigInt::from).collect());
            }
        }
        let a = self.big_coeffs();
        let b = other.big_coeffs();
        let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                acc[i + j] += x * y;
            }
        }
        Self::from_big(low, acc)
    }

    /// `self^n`.
    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul_ref(self);
        }
        r
    }

    /// Exact division in `ℤ[q,q⁻¹]`.
    pub fn divide_exact(&self, b: &LaurentPoly) -> Result<LaurentPoly, ExactError> {
        if b.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((c, e)) = b.as_monomial() {
            if c.is_one() {
                return Ok(self.shift(-e));
            }
            let mut out = Vec::with_capacity(self.len());
            for x in self.big_coeffs() {
                let (qt, r) = x.div_rem(&c);
                if !r.is_zero() {
                    return Err(ExactError::NotDivisible);
                }
                out.push(qt);
            }
            return Ok(Self::from_big(self.low - e, out));
        }
        // Both sequences start with a nonzero coefficient, so the quotient's
        // coefficients are determined from the lowest degree upwards.
        let a = self.big_coeffs();
        let bv = b.big_coeffs();
        if a.len() < bv.len() {
            return Err(ExactError::NotDivisible);
        }
        let n = a.len() - bv.len() + 1;
        let mut rem = a;
        let mut quot = vec![BigInt::zero(); n];
        let b0 = &bv[0];
        for k in 0..n {
            if rem[k].is_zero() {
                continue;
            }
            let (qk, r) = rem[k].div_rem(b0);
            if !r.is_zero() {
                return Err(ExactError::NotDivisible);
            }
            for (j, bj) in bv.iter().enumerate() {
                rem[k + j] -= &qk * bj;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ExactError::NotDivisible);
        }
        Ok(Self::from_big(self.low - b.low, quot))
    }

    /// Value at `q = x` modulo the prime `p` (`x` must be invertible mod `p`).
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        crate::modp::eval_laurent(self, x, p)
    }

    /// Coefficients reduced modulo `p`, with their exponents.
    pub(crate) fn terms_mod(&self, p: u64) -> Vec<(i64, u64)> {
        match &self.coeffs {
            Coeffs::Small(v) => v
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(k, &c)| (self.low + k as i64, c.rem_euclid(p as i64) as u64))
                .collect(),
            Coeffs::Big(v) => {
                let pb = BigInt::from(p);
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (self.low + k as i64, c.mod_floor(&pb).to_u64().unwrap()))
                    .collect()
            }
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.big_coeffs().into_iter().sum()
    }

    /// Part with strictly positive exponents.
    pub fn positive_part(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().into_iter().filter(|(e, _)| *e > 0))
    }
}

/// The quantum integer `[n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹)`.
pub fn q_int(n: u32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let n = n as i64;
    LaurentPoly::from_small(-(n - 1), (0..2 * n - 1).map(|k| if k % 2 == 0 { 1 } else { 0 }).collect())
}

/// The quantum factorial `[n]! = [1][2]···[n]`.
pub fn q_factorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| acc.mul_ref(&q_int(k)))
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_assign_scaled_shifted(&rhs, 0, false);
        self
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r.add_assign_scaled_shifted(rhs, 0, false);
        r
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_assign_scaled_shifted(rhs, 0, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_assign_scaled_shifted(rhs, 0, true);
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_assign_scaled_shifted(&rhs, 0, true);
        self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r.add_assign_scaled_shifted(rhs, 0, true);
        r
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        match self.coeffs {
            Coeffs::Small(v) => {
                if v.iter().all(|&c| c != i64::MIN) {
                    LaurentPoly { low: self.low, coeffs: Coeffs::Small(v.into_iter().map(|c| -c).collect()) }
                } else {
                    LaurentPoly::from_big(self.low, v.into_iter().map(|c| -BigInt::from(c)).collect())
                }
            }
            Coeffs::Big(v) => LaurentPoly::from_big(self.low, v.into_iter().map(|c| -c).collect()),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -(self.clone())
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial_i64(c, 0)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*q^{e}")?;
        }
        Ok(())
    }
}
