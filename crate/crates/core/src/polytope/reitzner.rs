use crate::angles::{bj_exact, residue_rational};
use crate::error::{Error, Result};
use crate::quadrature::ln_gamma;
use crate::scalars::{binom_q, gamma_half, int, PiNumber};
use num_traits::ToPrimitive;
use std::f64::consts::PI;

/// A Reitzner constant with its exact internal-angle factor.
#[derive(Clone, Debug, PartialEq)]
pub struct ReitznerConstant {
    pub value: f64,
    /// J_{d,k+1}(1/2) for the ball, J_{d,k+1}(-1/2) for the sphere
    pub angle_factor: PiNumber,
    /// the whole constant, when it lies in Q[pi^(1/2), pi^(-1/2)]
    pub exact: Option<PiNumber>,
}

fn check(d: u32, k: u32, min_d: u32) -> Result<()> {
    if d < min_d || k >= d {
        return Err(Error::Domain(format!("need d >= {min_d} and 0 <= k <= d-1 (d={d}, k={k})")));
    }
    Ok(())
}

fn ball_prefactor(d: u32) -> f64 {
    let df = d as f64;
    let e = (df * df + 1.0) / (df + 1.0);
    let ln = 2f64.ln() + df * (df - 1.0) / (2.0 * (df + 1.0)) * PI.ln() - ln_gamma(df + 2.0)
        + ln_gamma(1.0 + df * df / 2.0)
        + ln_gamma(e)
        - ln_gamma((df * df + 1.0) / 2.0)
        + e * (df + 1.0).ln()
        + e * (ln_gamma((df + 1.0) / 2.0) - ln_gamma(1.0 + df / 2.0));
    ln.exp()
}

/// lim E f_k(K_n) / n^((d-1)/(d+1)) for uniform points in the d-ball.
pub fn reitzner_ball(d: u32, k: u32) -> Result<ReitznerConstant> {
    check(d, k, 1)?;
    let j = bj_exact(d, k + 1, 1)?;
    Ok(ReitznerConstant {
        value: ball_prefactor(d) * j.to_f64(),
        angle_factor: j,
        exact: None,
    })
}

/// The ball constant from its direct residue form, when d is odd or d, d-k are even.
pub fn reitzner_ball_residue(d: u32, k: u32) -> Result<f64> {
    check(d, k, 1)?;
    if !(d % 2 == 1 || (d - k) % 2 == 0) {
        return Err(Error::Parity("needs d odd, or d and d-k even".into()));
    }
    let df = d as f64;
    let res = residue_rational(d, d - k - 1, (d * d) as i64 + 2).to_f64().unwrap();
    let ratio = (0.5 * PI.ln() + ln_gamma((df + 1.0) / 2.0) - ln_gamma((df + 2.0) / 2.0)).exp();
    let ln = (df * df + 1.0).ln() - ln_gamma(df + 1.0)
        + (df * df - df) / (df + 1.0) * (df + 1.0).ln()
        + ln_gamma((df * df + 1.0) / (df + 1.0));
    Ok(ln.exp() * binom_q(d as i64, k as i64 + 1).to_f64().unwrap() * ratio.powf(k as f64 + 2.0 / (df + 1.0)) * res)
}

fn sphere_prefactor(d: u32) -> Result<PiNumber> {
    let di = d as i64;
    let g = gamma_half(di * (di - 2) + 2)?
        .div(&gamma_half((di - 1) * (di - 1))?)?;
    let r = gamma_half(di + 1)?.div(&gamma_half(di)?)?.pow(d - 1);
    let w = num_bigint::BigInt::from(2).pow(d);
    let den = int(di * (di - 1) * (di - 1));
    Ok((&g * &r).shift((di - 2) as i32).scale(&(crate::scalars::Rational::from_integer(w) / den)))
}

/// lim E f_k(K*_n) / n for uniform points on the sphere S^(d-1).
pub fn reitzner_sphere(d: u32, k: u32) -> Result<ReitznerConstant> {
    check(d, k, 2)?;
    let j = bj_exact(d, k + 1, -1)?;
    let exact = &sphere_prefactor(d)? * &j;
    Ok(ReitznerConstant {
        value: exact.to_f64(),
        angle_factor: j,
        exact: Some(exact),
    })
}

/// The sphere constant from its direct residue form, when d is odd or d, d-k are even.
///
/// (d-1)^(d-1)/d * C(d, k+1) * (sqrt(pi) G((d-1)/2)/G(d/2))^k * Res[F^(d-k-1)/sin^(d^2-2d+2)]
/// with F(x) = int_0^x sin^(d-2). There is no further sqrt(pi) in front: with one,
/// C*_{d,0} would come out as sqrt(pi) instead of 1.
pub fn reitzner_sphere_residue(d: u32, k: u32) -> Result<PiNumber> {
    check(d, k, 2)?;
    if !(d % 2 == 1 || (d - k) % 2 == 0) {
        return Err(Error::Parity("needs d odd, or d and d-k even".into()));
    }
    let di = d as i64;
    let res = residue_rational(d - 2, d - k - 1, di * di - 2 * di + 2);
    let ratio = gamma_half(di - 1)?.div(&gamma_half(di)?)?.shift(1).pow(k);
    let w = num_bigint::BigInt::from(d - 1).pow(d - 1);
    let q = crate::scalars::Rational::from_integer(w) / int(di) * binom_q(di, k as i64 + 1) * res;
    Ok(ratio.scale(&q))
}
