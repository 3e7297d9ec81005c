use crate::error::{Error, Result};
use crate::scalars::{binom_q, c_beta, gamma_half, rat, PiNumber, Rational};
use num_traits::Zero;

/// Odd polynomial in t = tan x; coeffs[p] multiplies t^p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TanPoly {
    coeffs: Vec<Rational>,
}

impl TanPoly {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn mul_poly(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        out
    }

    /// Dense coefficients of T(t)^j.
    pub fn power(&self, j: u32) -> Vec<Rational> {
        let mut acc = vec![rat(1, 1)];
        for _ in 0..j {
            acc = Self::mul_poly(&acc, &self.coeffs);
        }
        acc
    }
}

/// T with int_0^x cos(y)^(-alpha-1) dy = T(tan x), for odd alpha.
pub fn inner_tan_antiderivative(alpha: u32) -> Result<TanPoly> {
    if alpha % 2 == 0 {
        return Err(Error::Domain(format!(
            "alpha = {alpha} is even: the antiderivative of sec^(alpha+1) is logarithmic"
        )));
    }
    // sec^(alpha+1) dx = (1 + t^2)^h dt with h = (alpha-1)/2
    let h = (alpha as i64 - 1) / 2;
    let mut coeffs = vec![Rational::zero(); alpha as usize + 1];
    for j in 0..=h {
        coeffs[2 * j as usize + 1] = binom_q(h, j) / rat(2 * j + 1, 1);
    }
    Ok(TanPoly { coeffs })
}

/// int_{-pi/2}^{pi/2} sin^p cos^q for p, q >= 0.
fn sin_cos_integral(p: u32, q: u32) -> PiNumber {
    if p % 2 == 1 {
        return PiNumber::zero();
    }
    let num = &gamma_half(p as i64 + 1).unwrap() * &gamma_half(q as i64 + 1).unwrap();
    num.div(&gamma_half((p + q) as i64 + 2).unwrap()).unwrap()
}

/// Internal angle sum J_{n,k}((alpha-n+1)/2) for odd alpha and even n, from
/// the real-interval integral with the inner antiderivative written in tan x.
pub fn bj_exact_case_iii(n: u32, k: u32, alpha: u32) -> Result<PiNumber> {
    if n % 2 == 1 || alpha % 2 == 0 {
        return Err(Error::Parity(format!(
            "tan algebra needs even n and odd alpha (n={n}, alpha={alpha})"
        )));
    }
    if (alpha as i64) < n as i64 - 3 || k < 1 || k > n {
        return Err(Error::Domain(format!("need alpha >= n-3 and 1 <= k <= n (n={n}, k={k}, alpha={alpha})")));
    }
    let c_out = c_beta((alpha * n) as i64)?;
    let c_in = c_beta(alpha as i64 - 1)?;
    let t = inner_tan_antiderivative(alpha)?;
    let r = n - k;
    let outer = alpha * n + 1;
    let mut re = PiNumber::zero();
    let mut im = PiNumber::zero();
    for j in 0..=r {
        let tj = t.power(j);
        let mut integral = PiNumber::zero();
        for (p, coef) in tj.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            // tan^p cos^(outer) = sin^p cos^(outer - p)
            let v = sin_cos_integral(p as u32, outer - p as u32);
            if !v.is_zero() {
                integral += &v.scale(coef);
            }
        }
        let weight = binom_q(r as i64, j as i64) / Rational::from_integer(num_bigint::BigInt::from(2).pow(r - j));
        let term = &integral * &c_in.pow(j);
        let term = term.scale(&weight);
        match j % 4 {
            0 => re += &term,
            1 => im += &term,
            2 => re -= &term,
            _ => im -= &term,
        }
    }
    if !im.is_zero() {
        return Err(Error::Consistency(format!(
            "imaginary part {im} did not cancel for n={n}, k={k}, alpha={alpha}"
        )));
    }
    Ok((&re * &c_out).scale(&binom_q(n as i64, k as i64)))
}
