use super::fourier::{cos_power_fourier, fourier_antiderivative, integrate_power_with_constant};
use crate::error::{Error, Result};
use crate::scalars::{binom_q, c_beta, c_tilde_beta, factorial, rat, PiNumber, Rational};
use num_traits::{One, Signed, ToPrimitive};
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

fn split_r(nu: &Rational, kappa: &Rational) -> Result<Option<u32>> {
    let r = nu - kappa;
    if !r.denom().is_one() {
        return Err(Error::Domain(format!("nu - kappa = {r} is not an integer")));
    }
    if r.is_negative() {
        return Ok(None);
    }
    Ok(Some(r.to_integer().to_u32().ok_or_else(|| Error::Domain("nu - kappa too large".into()))?))
}

fn integer_product(alpha: u32, kappa: &Rational) -> Result<u32> {
    let ak = kappa * rat(alpha as i64, 1);
    if !ak.denom().is_one() || ak.is_negative() {
        return Err(Error::Domain(format!(
            "alpha*kappa = {ak} is not a nonnegative integer; use the quadrature path"
        )));
    }
    ak.to_integer().to_u32().ok_or_else(|| Error::Domain("alpha*kappa too large".into()))
}

/// int_{-pi/2}^{pi/2} cos^w (F_a)^r with F_a(x) = int_{-pi/2}^x cos^a.
fn cos_weighted_power(w: u32, a: u32, r: u32) -> PiNumber {
    static C: OnceLock<RwLock<HashMap<(u32, u32, u32), PiNumber>>> = OnceLock::new();
    let cache = C.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = cache.read().unwrap().get(&(w, a, r)) {
        return v.clone();
    }
    let (poly, constant) = fourier_antiderivative(&cos_power_fourier(a));
    let v = integrate_power_with_constant(&cos_power_fourier(w), &poly, &constant, r);
    cache.write().unwrap().insert((w, a, r), v.clone());
    v
}

fn weight(alpha: u32, r: u32) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(alpha).pow(r)) / Rational::from_integer(factorial(r as u64))
}

/// b{nu, kappa} = alpha^(nu-kappa)/(nu-kappa)! int cos^(alpha kappa) F^(nu-kappa).
pub fn external_lb(nu: &Rational, kappa: &Rational, alpha: u32) -> Result<PiNumber> {
    let Some(r) = split_r(nu, kappa)? else {
        return Ok(PiNumber::zero());
    };
    let ak = integer_product(alpha, kappa)?;
    Ok(cos_weighted_power(ak, alpha, r).scale(&weight(alpha, r)))
}

/// b~{nu, kappa} = alpha^(nu-kappa)/(nu-kappa)! int cos^(alpha kappa - 1) F~^(nu-kappa).
pub fn external_lb_tilde(nu: &Rational, kappa: &Rational, alpha: u32) -> Result<PiNumber> {
    if alpha == 0 {
        return Err(Error::Domain("beta' quantities need alpha > 0".into()));
    }
    let Some(r) = split_r(nu, kappa)? else {
        return Ok(PiNumber::zero());
    };
    let ak = integer_product(alpha, kappa)?;
    if ak < 1 {
        return Err(Error::Domain("need alpha*kappa >= 1".into()));
    }
    Ok(cos_weighted_power(ak - 1, alpha - 1, r).scale(&weight(alpha, r)))
}

fn check_nk(n: u32, k: u32) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// Expected external angle sum I_{n,k}(alpha) of the beta simplex (bold I).
pub fn external_bi(n: u32, k: u32, alpha: u32) -> Result<PiNumber> {
    check_nk(n, k)?;
    let r = n - k;
    let c_outer = c_beta((alpha * k) as i64 - 1)?;
    let c_inner = c_beta(alpha as i64 - 1)?;
    let integral = cos_weighted_power(alpha * k, alpha, r);
    Ok((&(&integral * &c_outer) * &c_inner.pow(r)).scale(&binom_q(n as i64, k as i64)))
}

/// Expected external angle sum of the beta' simplex (bold I tilde).
pub fn external_bi_tilde(n: u32, k: u32, alpha: u32) -> Result<PiNumber> {
    check_nk(n, k)?;
    if alpha == 0 {
        return Err(Error::Domain("beta' external angles need alpha >= 1".into()));
    }
    let r = n - k;
    let c_outer = c_tilde_beta((alpha * k) as i64 + 1)?;
    let c_inner = c_tilde_beta(alpha as i64 + 1)?;
    let integral = cos_weighted_power(alpha * k - 1, alpha - 1, r);
    let v = &(&integral * &c_outer) * &c_inner.pow(r);
    Ok(v.scale(&binom_q(n as i64, k as i64)))
}
