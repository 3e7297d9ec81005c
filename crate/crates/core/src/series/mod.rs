//! Truncated Laurent series over Q and the coefficient extraction behind
//! the Bernoulli-weighted residue formulas.

mod bernoulli;
mod ugly;

pub use bernoulli::{bernoulli, cot_half_coeff, tan_half_coeff};
pub use ugly::{ugly_coefficient, UglyVariant};

use crate::error::{Error, Result};
use crate::scalars::{rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// Sum of c_j x^j for valuation <= j < order; exponents >= order are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    valuation: i64,
    coeffs: Vec<Rational>,
    order: i64,
}

impl LaurentSeries {
    /// Series from dense coefficients starting at x^valuation; known up to
    /// (excluding) x^(valuation + coeffs.len()).
    pub fn new(valuation: i64, coeffs: Vec<Rational>) -> Self {
        let order = valuation + coeffs.len() as i64;
        Self::with_order(valuation, coeffs, order)
    }

    fn with_order(valuation: i64, mut coeffs: Vec<Rational>, order: i64) -> Self {
        coeffs.truncate((order - valuation).max(0) as usize);
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(i) => {
                coeffs.drain(..i);
                Self {
                    valuation: valuation + i as i64,
                    coeffs,
                    order,
                }
            }
            None => Self::zero(order),
        }
    }

    /// Zero, known below x^order.
    pub fn zero(order: i64) -> Self {
        Self {
            valuation: order - 1,
            coeffs: vec![Rational::zero()],
            order,
        }
    }

    /// q x^e, exact below x^order.
    pub fn monomial(q: Rational, e: i64, order: i64) -> Self {
        let mut coeffs = vec![Rational::zero(); (order - e).max(0) as usize];
        if let Some(c) = coeffs.first_mut() {
            *c = q;
        }
        Self::with_order(e, coeffs, order)
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn get(&self, j: i64) -> Rational {
        if j < self.valuation || j >= self.order {
            Rational::zero()
        } else {
            self.coeffs[(j - self.valuation) as usize].clone()
        }
    }

    /// Coefficient of x^j.
    pub fn coefficient(&self, j: i64) -> Result<Rational> {
        if j >= self.order {
            return Err(Error::Series(format!(
                "coefficient of x^{j} requested but series is only known below x^{}",
                self.order
            )));
        }
        Ok(self.get(j))
    }

    /// Coefficient of x^-1.
    pub fn residue(&self) -> Result<Rational> {
        if self.order <= -1 {
            return Err(Error::Series(format!(
                "residue undetermined: series known only below x^{}",
                self.order
            )));
        }
        Ok(self.get(-1))
    }

    pub fn truncate(&self, order: i64) -> Self {
        Self::with_order(self.valuation, self.coeffs.clone(), order.min(self.order))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let v = self.valuation.min(other.valuation);
        let coeffs = (v..order).map(|j| self.get(j) + other.get(j)).collect();
        Self::with_order(v, coeffs, order)
    }

    pub fn neg(&self) -> Self {
        Self {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::with_order(
            self.valuation,
            self.coeffs.iter().map(|c| c * q).collect(),
            self.order,
        )
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            valuation: self.valuation + k,
            coeffs: self.coeffs.clone(),
            order: self.order + k,
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let order = (self.valuation + other.order).min(other.valuation + self.order);
        let v = self.valuation + other.valuation;
        let len = (order - v).max(0) as usize;
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::with_order(v, out, order)
    }

    /// s^p. Positive and negative p both go through the power recurrence
    /// g_n = (1/n) sum_{k=1}^n ((p+1)k - n) f_k g_{n-k} on the unit part.
    pub fn int_power(&self, p: i64) -> Result<Self> {
        let rel = self.order - self.valuation;
        if self.is_zero() {
            if p > 0 {
                return Ok(Self::zero(self.order + (p - 1) * self.valuation.max(0)));
            }
            return Err(Error::Series("reciprocal of a series that is zero to its order".into()));
        }
        if p == 0 {
            return Ok(Self::monomial(Rational::one(), 0, rel));
        }
        let lead = self.coeffs[0].clone();
        let f: Vec<Rational> = self.coeffs.iter().map(|c| c / &lead).collect();
        let n_terms = rel as usize;
        let mut g = vec![Rational::zero(); n_terms];
        g[0] = Rational::one();
        let p1 = p + 1;
        for n in 1..n_terms {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if f[k].is_zero() || g[n - k].is_zero() {
                    continue;
                }
                let w = p1 * k as i64 - n as i64;
                if w != 0 {
                    acc += &f[k] * &g[n - k] * rat(w, 1);
                }
            }
            g[n] = acc / rat(n as i64, 1);
        }
        let lead_p = crate::scalars::rat_pow(&lead, p as i32);
        let v = p * self.valuation;
        Ok(Self::with_order(
            v,
            g.into_iter().map(|c| c * &lead_p).collect(),
            v + rel,
        ))
    }

    /// Termwise antiderivative with zero constant of integration.
    pub fn antiderivative_from_zero(&self) -> Result<Self> {
        if self.valuation < 0 && !self.is_zero() {
            return Err(Error::Series(
                "antiderivative of a series with negative powers leaves the ring".into(),
            ));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.order + 1));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / rat(self.valuation + i as i64 + 1, 1))
            .collect();
        Ok(Self::with_order(self.valuation + 1, coeffs, self.order + 1))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * rat(self.valuation + i as i64, 1))
            .collect();
        Self::with_order(self.valuation - 1, coeffs, self.order - 1)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})x^{}", self.valuation + i as i64)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order)
    }
}

fn factorial_q(n: u64) -> Rational {
    Rational::from_integer(crate::scalars::factorial(n))
}

/// sin(x)/x known below x^order.
fn sinc(order: i64) -> LaurentSeries {
    let coeffs = (0..order.max(1))
        .map(|j| {
            if j % 2 == 1 {
                Rational::zero()
            } else {
                let s = if (j / 2) % 2 == 0 { 1 } else { -1 };
                Rational::from_integer(BigInt::from(s)) / factorial_q(j as u64 + 1)
            }
        })
        .collect();
    LaurentSeries::with_order(0, coeffs, order.max(1))
}

/// Taylor series of sin(x)^a known below x^order.
pub fn sin_power(a: i64, order: i64) -> Result<LaurentSeries> {
    if a < 0 || order <= a {
        return Err(Error::Series(format!("sin_power needs 0 <= a < order, got a={a}, order={order}")));
    }
    Ok(sinc(order - a).int_power(a)?.shift(a))
}

/// (x / sin x)^p known below x^order (order >= 1).
pub fn x_over_sin_power(p: i64, order: i64) -> Result<LaurentSeries> {
    sinc(order).int_power(-p)
}

/// Taylor series of cos x known below x^order.
pub fn cos_series(order: i64) -> LaurentSeries {
    let coeffs = (0..order.max(1))
        .map(|j| {
            if j % 2 == 1 {
                Rational::zero()
            } else {
                let s = if (j / 2) % 2 == 0 { 1 } else { -1 };
                Rational::from_integer(BigInt::from(s)) / factorial_q(j as u64)
            }
        })
        .collect();
    LaurentSeries::with_order(0, coeffs, order.max(1))
}

/// G(x) = int_0^x sin(y)^a dy, known below x^order.
pub fn sin_power_integral(a: i64, order: i64) -> Result<LaurentSeries> {
    sin_power(a, order - 1)?.antiderivative_from_zero()
}

/// Res_{x=0} num(x) / sin(x)^m, reading only the single needed coefficient.
pub fn residue_over_sin_power(num: &LaurentSeries, m: i64) -> Result<Rational> {
    if num.valuation() > m - 1 {
        return Ok(Rational::zero());
    }
    if num.order() < m {
        return Err(Error::Series(format!(
            "numerator known below x^{} but x^{} is needed",
            num.order(),
            m - 1
        )));
    }
    let rel = m - num.valuation();
    let u = x_over_sin_power(m, rel)?;
    let mut acc = Rational::zero();
    for j in num.valuation()..m {
        let a = num.get(j);
        if a.is_zero() {
            continue;
        }
        acc += a * u.get(m - 1 - j);
    }
    Ok(acc)
}
