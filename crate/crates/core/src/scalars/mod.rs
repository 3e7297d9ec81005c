//! Exact scalars: rationals and the ring Q[pi^(1/2), pi^(-1/2)].

mod decimal;
mod gamma;
mod text;

pub use decimal::{to_decimal, MAX_DIGITS};
pub use gamma::{c_beta, c_tilde_beta, gamma_half, normalizing_constant, Family};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Binomial coefficient extended to negative upper index by
/// C(n, k) = (-1)^k C(k - n - 1, k). Zero for k < 0.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let b = binom(k - n - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

pub fn binom_q(n: i64, k: i64) -> Rational {
    Rational::from_integer(binom(n, k))
}

/// Element of Q[pi^(1/2), pi^(-1/2)]: map from doubled pi-exponent to a
/// nonzero rational coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PiNumber {
    terms: BTreeMap<i32, Rational>,
}

impl PiNumber {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(q: Rational) -> Self {
        Self::monomial(q, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(int(n))
    }

    /// q * pi^(half_exp/2)
    pub fn monomial(q: Rational, half_exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(half_exp, q);
        }
        Self { terms }
    }

    /// pi^e for an integer e.
    pub fn pi_pow(e: i32) -> Self {
        Self::monomial(Rational::one(), 2 * e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, q) in it {
            out.add_term(e, q);
        }
        out
    }

    fn add_term(&mut self, e: i32, q: Rational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, q)| (*e, q))
    }

    /// Doubled pi-exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<i32> {
        self.terms.keys().copied().collect()
    }

    pub fn coefficient(&self, half_exp: i32) -> Rational {
        self.terms.get(&half_exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coefficient(0))
        } else {
            None
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    /// Multiply by pi^(half_exp/2).
    pub fn shift(&self, half_exp: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + half_exp, c.clone())).collect(),
        }
    }

    pub fn pow(&self, p: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..p {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a monomial.
    pub fn inv(&self) -> Result<Self> {
        if !self.is_monomial() {
            return Err(Error::NonMonomialDivision);
        }
        let (e, q) = self.terms.iter().next().unwrap();
        Ok(Self::monomial(q.recip(), -e))
    }

    /// Signed integer power of a monomial.
    pub fn powi(&self, p: i32) -> Result<Self> {
        if p >= 0 {
            Ok(self.pow(p as u32))
        } else {
            Ok(self.inv()?.pow((-p) as u32))
        }
    }

    pub fn div(&self, other: &PiNumber) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn to_f64(&self) -> f64 {
        let sqrt_pi = std::f64::consts::PI.sqrt();
        self.terms
            .iter()
            .map(|(e, q)| q.to_f64().unwrap_or(f64::NAN) * sqrt_pi.powi(*e))
            .sum()
    }

    /// Largest absolute doubled exponent, used for guard-digit budgeting.
    pub(crate) fn max_abs_exp(&self) -> i32 {
        self.terms.keys().map(|e| e.abs()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, q)| {
                    serde_json::json!({
                        "half_exp": e,
                        "num": q.numer().to_string(),
                        "den": q.denom().to_string(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("expected an array of terms".into()))?;
        let mut out = Self::zero();
        for t in arr {
            let e = t["half_exp"]
                .as_i64()
                .ok_or_else(|| Error::Parse("missing half_exp".into()))?;
            let num: BigInt = t["num"]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse("bad num".into()))?;
            let den: BigInt = t["den"]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse("bad den".into()))?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            out.add_term(e as i32, Rational::new(num, den));
        }
        Ok(out)
    }
}

impl From<Rational> for PiNumber {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl From<i64> for PiNumber {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a PiNumber> for &'a PiNumber {
    type Output = PiNumber;
    fn add(self, rhs: &PiNumber) -> PiNumber {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for PiNumber {
    type Output = PiNumber;
    fn add(mut self, rhs: PiNumber) -> PiNumber {
        self += &rhs;
        self
    }
}

impl AddAssign<&PiNumber> for PiNumber {
    fn add_assign(&mut self, rhs: &PiNumber) {
        for (e, q) in &rhs.terms {
            self.add_term(*e, q.clone());
        }
    }
}

impl AddAssign for PiNumber {
    fn add_assign(&mut self, rhs: PiNumber) {
        *self += &rhs;
    }
}

impl SubAssign<&PiNumber> for PiNumber {
    fn sub_assign(&mut self, rhs: &PiNumber) {
        for (e, q) in &rhs.terms {
            self.add_term(*e, -q.clone());
        }
    }
}

impl<'a> Sub<&'a PiNumber> for &'a PiNumber {
    type Output = PiNumber;
    fn sub(self, rhs: &PiNumber) -> PiNumber {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for PiNumber {
    type Output = PiNumber;
    fn sub(mut self, rhs: PiNumber) -> PiNumber {
        self -= &rhs;
        self
    }
}

impl Neg for PiNumber {
    type Output = PiNumber;
    fn neg(self) -> PiNumber {
        Self {
            terms: self.terms.into_iter().map(|(e, q)| (e, -q)).collect(),
        }
    }
}

impl Neg for &PiNumber {
    type Output = PiNumber;
    fn neg(self) -> PiNumber {
        -self.clone()
    }
}

impl<'a> Mul<&'a PiNumber> for &'a PiNumber {
    type Output = PiNumber;
    fn mul(self, rhs: &PiNumber) -> PiNumber {
        let mut out = PiNumber::zero();
        for (e1, q1) in &self.terms {
            for (e2, q2) in &rhs.terms {
                out.add_term(e1 + e2, q1 * q2);
            }
        }
        out
    }
}

impl Mul for PiNumber {
    type Output = PiNumber;
    fn mul(self, rhs: PiNumber) -> PiNumber {
        &self * &rhs
    }
}

impl Mul<&Rational> for &PiNumber {
    type Output = PiNumber;
    fn mul(self, rhs: &Rational) -> PiNumber {
        self.scale(rhs)
    }
}

impl std::iter::Sum for PiNumber {
    fn sum<I: Iterator<Item = PiNumber>>(iter: I) -> Self {
        iter.fold(PiNumber::zero(), |a, b| a + b)
    }
}

/// Exact rational power with signed exponent.
pub fn rat_pow(q: &Rational, p: i32) -> Rational {
    if p >= 0 {
        num_traits::pow(q.clone(), p as usize)
    } else {
        num_traits::pow(q.recip(), (-p) as usize)
    }
}
