use super::{PiNumber, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub const MAX_DIGITS: usize = 200;

fn pow10(p: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), p as usize)
}

/// floor(arctan(1/x) * scale)
fn arctan_inv(x: u32, scale: &BigInt) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = scale / &x;
    let mut sum = power.clone();
    let mut k = 1u32;
    loop {
        power = &power / &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

/// pi * 10^p, accurate to a few units in the last place.
fn pi_fixed(p: u32) -> BigInt {
    let extra = 10;
    let scale = pow10(p + extra);
    let v = arctan_inv(5, &scale) * 16 - arctan_inv(239, &scale) * 4;
    v / pow10(extra)
}

/// pi^(e/2) * 10^p for a doubled exponent e.
fn pi_half_pow_fixed(e: i32, p: u32) -> BigInt {
    let one = pow10(p);
    let pi = pi_fixed(p);
    let sqrt_pi = (&pi * &one).sqrt();
    let base_int = e.unsigned_abs() / 2;
    let mut acc = one.clone();
    for _ in 0..base_int {
        acc = acc * &pi / &one;
    }
    if e.unsigned_abs() % 2 == 1 {
        acc = acc * &sqrt_pi / &one;
    }
    if e < 0 {
        &one * &one / acc
    } else {
        acc
    }
}

fn format_scaled(q: &BigInt, negative: bool, digits: usize) -> String {
    let s = q.to_string();
    let (int_part, frac) = if digits == 0 {
        (s, String::new())
    } else if s.len() <= digits {
        ("0".to_string(), format!("{}{}", "0".repeat(digits - s.len()), s))
    } else {
        let (a, b) = s.split_at(s.len() - digits);
        (a.to_string(), b.to_string())
    };
    let sign = if negative && !q.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

fn round_rational(x: &Rational, digits: usize) -> String {
    let scaled = x.abs() * Rational::from_integer(pow10(digits as u32));
    let (mut q, r) = scaled.numer().div_rem(scaled.denom());
    if BigInt::from(2) * r >= *scaled.denom() {
        q += BigInt::one();
    }
    format_scaled(&q, x.is_negative(), digits)
}

fn decimal_digits(n: &BigInt) -> u32 {
    n.abs().to_string().len() as u32
}

/// Correctly rounded decimal expansion with `digits` places after the point
/// (round half away from zero).
pub fn to_decimal(x: &PiNumber, digits: usize) -> Result<String> {
    if digits > MAX_DIGITS {
        return Err(Error::Domain(format!("at most {MAX_DIGITS} digits supported")));
    }
    if let Some(q) = x.as_rational() {
        return Ok(round_rational(&q, digits));
    }
    // An irrational value never sits exactly on a rounding boundary, so
    // more guard digits always resolve an ambiguous case eventually.
    let mut guard = 20u32;
    for _ in 0..10 {
        let p = digits as u32 + guard;
        let coeff_digits = x
            .terms()
            .map(|(_, q)| decimal_digits(q.numer()) + decimal_digits(q.denom()))
            .max()
            .unwrap_or(0);
        let w = p + 10 + coeff_digits + 2 * x.max_abs_exp() as u32;
        let mut v = BigInt::zero();
        for (e, q) in x.terms() {
            v += q.numer() * pi_half_pow_fixed(e, w) / q.denom();
        }
        let v = v / pow10(w - p);
        let unit = pow10(guard);
        let half: BigInt = &unit / BigInt::from(2);
        let (q, rem): (BigInt, BigInt) = v.abs().div_rem(&unit);
        let diff: BigInt = &rem - &half;
        let dist = diff.abs();
        if dist <= BigInt::from(4) {
            guard += 20;
            continue;
        }
        let q = if rem >= half { q + 1 } else { q };
        return Ok(format_scaled(&q, v.is_negative(), digits));
    }
    Err(Error::Numeric("decimal rounding stayed ambiguous".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let p = pi_fixed(50).to_string();
        assert!(p.starts_with("3141592653589793238462643383279502884197169399375"));
    }
}
