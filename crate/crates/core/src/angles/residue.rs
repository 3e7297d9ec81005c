use crate::error::{Error, Result};
use crate::scalars::{binom_q, c_beta, c_tilde_beta, factorial, PiNumber, Rational};
use crate::series::{residue_over_sin_power, sin_power_integral, LaurentSeries};
use num_bigint::BigInt;
use num_traits::One;

/// Res_{x=0} (int_0^x sin^a)^p / sin(x)^q.
pub fn residue_rational(a: u32, p: u32, q: i64) -> Rational {
    if q < 1 {
        return Rational::from_integer(0.into());
    }
    let a = a as i64;
    let p = p as i64;
    let num = if p == 0 {
        LaurentSeries::monomial(Rational::one(), 0, q + 2)
    } else {
        // G has valuation a+1; G^p needs relative precision q - p(a+1) (+2 spare)
        let rel = (q - p * (a + 1)).max(0) + 2;
        let g = sin_power_integral(a, a + 1 + rel).expect("sine integral series");
        g.int_power(p).expect("positive power")
    };
    residue_over_sin_power(&num, q).expect("numerator long enough")
}

fn check_nk(n: u32, k: u32) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// J_{n,k}((alpha-n+1)/2) when alpha is even and n-k odd, or alpha and n are odd.
pub fn bj_residue(n: u32, k: u32, alpha: u32) -> Result<PiNumber> {
    check_nk(n, k)?;
    if n < 3 || alpha < 1 || (alpha as i64) < n as i64 - 3 {
        return Err(Error::Domain(format!(
            "residue formula needs n >= 3, alpha >= max(1, n-3) (n={n}, alpha={alpha})"
        )));
    }
    let case_i = alpha % 2 == 0 && (n - k) % 2 == 1;
    let case_ii = alpha % 2 == 1 && n % 2 == 1;
    if !(case_i || case_ii) {
        return Err(Error::Parity(format!(
            "residue formula needs alpha even with n-k odd, or alpha and n odd (n={n}, k={k}, alpha={alpha})"
        )));
    }
    let res = residue_rational(alpha, n - k, (alpha * n) as i64 + 2);
    let pref = &c_beta((alpha * n) as i64)? * &c_beta(alpha as i64 - 1)?.pow(n - k);
    Ok(pref.shift(2).scale(&(res * binom_q(n as i64, k as i64))))
}

/// J~_{n,k}((alpha+n-1)/2) when alpha k is even.
pub fn bjtilde_residue(n: u32, k: u32, alpha: u32) -> Result<PiNumber> {
    check_nk(n, k)?;
    if alpha < 1 || alpha * n < 2 {
        return Err(Error::Domain(format!("need alpha >= 1 and alpha n > 1 (n={n}, alpha={alpha})")));
    }
    if (alpha * k) % 2 == 1 {
        return Err(Error::Parity(format!("residue formula needs alpha k even (k={k}, alpha={alpha})")));
    }
    let res = residue_rational(alpha - 1, n - k, (alpha * n) as i64 - 1);
    let pref = &c_tilde_beta((alpha * n) as i64)? * &c_tilde_beta(alpha as i64 + 1)?.pow(n - k);
    Ok(pref.shift(2).scale(&(res * binom_q(n as i64, k as i64))))
}

/// R_m(n): J_{n,1}(m - 1/2) with its Gamma prefactors stripped.
pub fn rm_value(m: u32, n: u32) -> Result<Rational> {
    if n < 3 {
        return Err(Error::Domain(format!("R_m(n) needs n >= 3, got {n}")));
    }
    let alpha = n + 2 * m - 2;
    let res = residue_rational(alpha, n - 1, (alpha * n) as i64 + 2);
    Ok(res * Rational::from_integer(BigInt::from(alpha + 1).pow(n - 1)))
}

/// P_{alpha,k}(n): J~_{n,k}((alpha+n-1)/2) with its Gamma prefactors stripped.
pub fn p_alpha_k_value(alpha: u32, k: u32, n: u32) -> Result<Rational> {
    if alpha < 1 || (alpha * k) % 2 == 1 {
        return Err(Error::Parity(format!("P_(alpha,k) needs alpha k even (alpha={alpha}, k={k})")));
    }
    if n < k || alpha * n < 2 {
        return Err(Error::Domain(format!("P_(alpha,k)(n) needs n >= k and alpha n > 1 (n={n})")));
    }
    let res = residue_rational(alpha - 1, n - k, (alpha * n) as i64 - 1);
    Ok(res * Rational::from_integer(BigInt::from(alpha).pow(n - k)))
}

fn split(nu_num: i64, kappa_num: i64, alpha: u32) -> Result<u32> {
    let diff = nu_num - kappa_num;
    if alpha == 0 || diff < 0 || diff % alpha as i64 != 0 {
        return Err(Error::Domain(format!(
            "nu - kappa = ({nu_num} - {kappa_num})/{alpha} must be a nonnegative integer"
        )));
    }
    Ok((diff / alpha as i64) as u32)
}

fn a_weight(alpha: u32, r: u32) -> Rational {
    Rational::from_integer(BigInt::from(alpha).pow(r + 1))
        / Rational::from_integer(factorial(r as u64) * 2)
}

/// a[nu, kappa] for nu = nu_num/alpha, kappa = kappa_num/alpha, when
/// alpha kappa + nu - kappa is odd.
pub fn la_residue(nu_num: i64, kappa_num: i64, alpha: u32) -> Result<Rational> {
    let r = split(nu_num, kappa_num, alpha)?;
    if (kappa_num + r as i64).rem_euclid(2) == 0 {
        return Err(Error::Parity(format!(
            "alpha kappa + nu - kappa = {} is even; the residue vanishes and does not give a[nu, kappa]",
            kappa_num + r as i64
        )));
    }
    Ok(a_weight(alpha, r) * residue_rational(alpha, r, nu_num))
}

/// a~[nu, kappa] for nu = nu_num/alpha, kappa = kappa_num/alpha, when alpha kappa is even.
pub fn la_tilde_residue(nu_num: i64, kappa_num: i64, alpha: u32) -> Result<Rational> {
    let r = split(nu_num, kappa_num, alpha)?;
    if kappa_num.rem_euclid(2) == 1 {
        return Err(Error::Parity(format!("alpha kappa = {kappa_num} is odd")));
    }
    Ok(a_weight(alpha, r) * residue_rational(alpha - 1, r, nu_num + 1))
}

