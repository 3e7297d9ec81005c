//! Expected internal angle sums J_{n,k}(beta) and J~_{n,k}(beta), exact for
//! half-integer beta and by quadrature otherwise, plus the a[nu, kappa]
//! quantities used by the inversion relations.

mod fill;
mod residue;

pub use fill::poincare_fill;
pub use residue::{
    bj_residue, bjtilde_residue, la_residue, la_tilde_residue, p_alpha_k_value, residue_rational,
    rm_value,
};

use crate::error::{Error, Result};
use crate::quadrature::{c_beta_f64, c_tilde_beta_f64, outer_integral, CoshIntegrand};
use crate::scalars::{c_beta, c_tilde_beta, factorial, rat, Family, PiNumber, Rational};
use crate::series::{sin_power_integral, ugly_coefficient, UglyVariant};
use crate::trig::bj_exact_case_iii;
use rayon::prelude::*;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Residue,
    Fill,
    TanAlgebra,
    Numeric,
    Closed,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Residue => "residue",
            Provenance::Fill => "fill",
            Provenance::TanAlgebra => "tan_algebra",
            Provenance::Numeric => "numeric",
            Provenance::Closed => "closed",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AngleValue {
    Exact(PiNumber),
    Float { value: f64, abs_error: f64 },
}

impl AngleValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            AngleValue::Exact(p) => p.to_f64(),
            AngleValue::Float { value, .. } => *value,
        }
    }

    pub fn exact(&self) -> Option<&PiNumber> {
        match self {
            AngleValue::Exact(p) => Some(p),
            AngleValue::Float { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BetaParam {
    /// beta = twice / 2
    HalfInteger(i64),
    Real(f64),
}

impl BetaParam {
    pub fn to_f64(self) -> f64 {
        match self {
            BetaParam::HalfInteger(t) => t as f64 / 2.0,
            BetaParam::Real(b) => b,
        }
    }
}

impl fmt::Display for BetaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BetaParam::HalfInteger(t) if t % 2 == 0 => write!(f, "{}", t / 2),
            BetaParam::HalfInteger(t) => write!(f, "{t}/2"),
            BetaParam::Real(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AngleEntry {
    pub k: u32,
    pub value: AngleValue,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AngleTable {
    pub family: Family,
    pub n: u32,
    pub beta: BetaParam,
    pub entries: Vec<AngleEntry>,
}

impl AngleTable {
    pub fn get(&self, k: u32) -> Option<&AngleEntry> {
        self.entries.get(k.checked_sub(1)? as usize)
    }

    pub fn exact_values(&self) -> Option<Vec<PiNumber>> {
        self.entries.iter().map(|e| e.value.exact().cloned()).collect()
    }

    pub fn floats(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.value.to_f64()).collect()
    }
}

fn closed(n: u32, k: u32) -> Option<PiNumber> {
    if k == n {
        Some(PiNumber::one())
    } else if k + 1 == n {
        Some(PiNumber::rational(rat(n as i64, 2)))
    } else if n == 3 && k == 1 {
        Some(PiNumber::rational(rat(1, 2)))
    } else {
        None
    }
}

/// alpha = 2 beta + n - 1 for the beta family, after validation.
pub fn beta_alpha(n: u32, twice_beta: i64) -> Result<u32> {
    if n < 1 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if twice_beta < -2 {
        return Err(Error::Domain(format!("beta family needs beta >= -1, got {twice_beta}/2")));
    }
    let alpha = twice_beta + n as i64 - 1;
    if alpha < (n as i64 - 3).max(0) {
        return Err(Error::Domain(format!(
            "alpha = 2 beta + n - 1 = {alpha} is below max(n-3, 0)"
        )));
    }
    Ok(alpha as u32)
}

/// alpha = 2 beta - n + 1 for the beta' family, after validation.
pub fn betaprime_alpha(n: u32, twice_beta: i64) -> Result<u32> {
    if n < 1 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let alpha = twice_beta - n as i64 + 1;
    if alpha < 1 {
        return Err(Error::Domain(format!(
            "beta' family needs beta > (n-1)/2, got beta = {twice_beta}/2 with n = {n}"
        )));
    }
    Ok(alpha as u32)
}

/// Direct (non-fill) route for one entry of the beta family.
fn bj_direct(n: u32, k: u32, alpha: u32) -> Option<Result<(PiNumber, Provenance)>> {
    if let Some(v) = closed(n, k) {
        return Some(Ok((v, Provenance::Closed)));
    }
    if alpha % 2 == 0 {
        if (n - k) % 2 == 1 {
            Some(bj_residue(n, k, alpha).map(|v| (v, Provenance::Residue)))
        } else {
            None
        }
    } else if n % 2 == 1 {
        Some(bj_residue(n, k, alpha).map(|v| (v, Provenance::Residue)))
    } else {
        Some(bj_exact_case_iii(n, k, alpha).map(|v| (v, Provenance::TanAlgebra)))
    }
}

fn bjtilde_direct(n: u32, k: u32, alpha: u32) -> Option<Result<(PiNumber, Provenance)>> {
    if let Some(v) = closed(n, k).filter(|_| k + 1 >= n) {
        return Some(Ok((v, Provenance::Closed)));
    }
    if (alpha * k) % 2 == 0 {
        Some(bjtilde_residue(n, k, alpha).map(|v| (v, Provenance::Residue)))
    } else {
        None
    }
}

fn exact_table(
    family: Family,
    n: u32,
    twice_beta: i64,
    alpha: u32,
    direct: fn(u32, u32, u32) -> Option<Result<(PiNumber, Provenance)>>,
) -> Result<AngleTable> {
    let computed: Vec<Option<(PiNumber, Provenance)>> = (1..=n)
        .into_par_iter()
        .map(|k| direct(n, k, alpha).transpose())
        .collect::<Result<_>>()?;
    let partial: Vec<Option<PiNumber>> = computed.iter().map(|c| c.as_ref().map(|(v, _)| v.clone())).collect();
    let filled = poincare_fill(n, &partial)?;
    let entries = filled
        .into_iter()
        .zip(computed)
        .enumerate()
        .map(|(i, (v, c))| AngleEntry {
            k: i as u32 + 1,
            value: AngleValue::Exact(v),
            provenance: c.map(|(_, p)| p).unwrap_or(Provenance::Fill),
        })
        .collect();
    Ok(AngleTable {
        family,
        n,
        beta: BetaParam::HalfInteger(twice_beta),
        entries,
    })
}

/// Exact J_{n,k}(beta), k = 1..n, for beta = twice_beta/2.
pub fn bj_table(n: u32, twice_beta: i64) -> Result<AngleTable> {
    let alpha = beta_alpha(n, twice_beta)?;
    exact_table(Family::Beta, n, twice_beta, alpha, bj_direct)
}

/// Exact J~_{n,k}(beta), k = 1..n, for beta = twice_beta/2.
pub fn bjtilde_table(n: u32, twice_beta: i64) -> Result<AngleTable> {
    let alpha = betaprime_alpha(n, twice_beta)?;
    exact_table(Family::BetaPrime, n, twice_beta, alpha, bjtilde_direct)
}

fn check_k(n: u32, k: u32) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// Exact J_{n,k}(beta) for beta = twice_beta/2.
pub fn bj_exact(n: u32, k: u32, twice_beta: i64) -> Result<PiNumber> {
    check_k(n, k)?;
    let alpha = beta_alpha(n, twice_beta)?;
    match bj_direct(n, k, alpha) {
        Some(r) => r.map(|(v, _)| v),
        None => Ok(bj_table(n, twice_beta)?.entries[k as usize - 1].value.exact().unwrap().clone()),
    }
}

/// Exact J~_{n,k}(beta) for beta = twice_beta/2.
pub fn bjtilde_exact(n: u32, k: u32, twice_beta: i64) -> Result<PiNumber> {
    check_k(n, k)?;
    let alpha = betaprime_alpha(n, twice_beta)?;
    match bjtilde_direct(n, k, alpha) {
        Some(r) => r.map(|(v, _)| v),
        None => Ok(bjtilde_table(n, twice_beta)?.entries[k as usize - 1].value.exact().unwrap().clone()),
    }
}

fn numeric_checked(n: u32, k: u32, alpha: f64, family: Family) -> Result<(f64, f64)> {
    check_k(n, k)?;
    if n <= 2 {
        return Ok((closed(n, k).unwrap().to_f64(), 0.0));
    }
    let r = outer_integral(n, k, alpha, family)?;
    if r.abs_error > 1e-10 {
        return Err(Error::Numeric(format!(
            "quadrature error bound {:.3e} exceeds 1e-10",
            r.abs_error
        )));
    }
    Ok((r.value, r.abs_error))
}

/// J_{n,k}(beta) by quadrature, for real beta >= -1.
pub fn bj_numeric(n: u32, k: u32, beta: f64) -> Result<f64> {
    if !(beta >= -1.0) {
        return Err(Error::Domain(format!("beta family needs beta >= -1, got {beta}")));
    }
    numeric_checked(n, k, 2.0 * beta + n as f64 - 1.0, Family::Beta).map(|v| v.0)
}

/// J~_{n,k}(beta) by quadrature, for real beta > (n-1)/2.
pub fn bjtilde_numeric(n: u32, k: u32, beta: f64) -> Result<f64> {
    if !(beta > (n as f64 - 1.0) / 2.0) {
        return Err(Error::Domain(format!("beta' family needs beta > (n-1)/2, got {beta}")));
    }
    numeric_checked(n, k, 2.0 * beta - n as f64 + 1.0, Family::BetaPrime).map(|v| v.0)
}

/// Table of J or J~ by quadrature.
pub fn numeric_table(family: Family, n: u32, beta: f64) -> Result<AngleTable> {
    let alpha = match family {
        Family::Beta => 2.0 * beta + n as f64 - 1.0,
        Family::BetaPrime => 2.0 * beta - n as f64 + 1.0,
    };
    match family {
        Family::Beta if !(beta >= -1.0) => {
            return Err(Error::Domain(format!("beta family needs beta >= -1, got {beta}")))
        }
        Family::BetaPrime if !(beta > (n as f64 - 1.0) / 2.0) => {
            return Err(Error::Domain(format!("beta' family needs beta > (n-1)/2, got {beta}")))
        }
        _ => {}
    }
    let entries = (1..=n)
        .into_par_iter()
        .map(|k| {
            let (value, abs_error) = numeric_checked(n, k, alpha, family)?;
            Ok(AngleEntry {
                k,
                value: AngleValue::Float { value, abs_error },
                provenance: Provenance::Numeric,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AngleTable {
        family,
        n,
        beta: BetaParam::Real(beta),
        entries,
    })
}

/// Exact table when beta is a half-integer in range, numeric otherwise.
pub fn angle_table(family: Family, n: u32, beta: BetaParam) -> Result<AngleTable> {
    match (family, beta) {
        (Family::Beta, BetaParam::HalfInteger(t)) => bj_table(n, t),
        (Family::BetaPrime, BetaParam::HalfInteger(t)) => bjtilde_table(n, t),
        (_, BetaParam::Real(b)) => numeric_table(family, n, b),
    }
}

fn sign(e: u32) -> Rational {
    rat(if e % 2 == 0 { 1 } else { -1 }, 1)
}

fn falling(n: u32, k: u32) -> Rational {
    Rational::new(factorial(n as u64), factorial(k as u64))
}

/// J_{n,k} for even alpha and even n-k through the Bernoulli-weighted
/// coefficient extraction, independent of the fill.
pub fn bj_ugly(n: u32, k: u32, alpha: u32) -> Result<PiNumber> {
    check_k(n, k)?;
    if alpha % 2 == 1 || (n - k) % 2 == 1 || k == n {
        return Err(Error::Parity("needs alpha even and n-k even and positive".into()));
    }
    let m = (alpha * n) as i64 + 2;
    let g = sin_power_integral(alpha as i64, m + 2)?;
    let c = c_beta(alpha as i64 - 1)?;
    let u = ugly_coefficient(&g, &c, m, (n - k) as i64, UglyVariant::SinOverTan)?;
    let pref = c_beta((alpha * n) as i64)?.shift(2);
    Ok((&pref * &u).scale(&(sign((n - k) / 2) * falling(n, k))))
}

/// J~_{n,k} for odd alpha k through the Bernoulli-weighted coefficient extraction.
pub fn bjtilde_ugly(n: u32, k: u32, alpha: u32) -> Result<PiNumber> {
    check_k(n, k)?;
    if (alpha * k) % 2 == 0 {
        return Err(Error::Parity("needs alpha k odd".into()));
    }
    let m = (alpha * n) as i64 - 1;
    let g = sin_power_integral(alpha as i64 - 1, m + 2)?;
    let c = c_tilde_beta(alpha as i64 + 1)?;
    let a = (n - k) as i64;
    let (variant, s) = if n % 2 == 1 {
        (UglyVariant::SinOverTan, sign((n - k) / 2))
    } else {
        (UglyVariant::CosOverCot, sign((n - k - 1) / 2))
    };
    let u = ugly_coefficient(&g, &c, m, a, variant)?;
    let pref = c_tilde_beta((alpha * n) as i64)?.shift(2);
    Ok((&pref * &u).scale(&(s * falling(n, k))))
}

/// Does an exact value have the pi-structure predicted for its parameters?
pub fn arithmetic_form_ok(family: Family, n: u32, k: u32, alpha: u32, value: &PiNumber) -> bool {
    let d = (n - k) as i32;
    let support = value.support();
    let within = |max_even: i32| support.iter().all(|&e| e <= 0 && e % 4 == 0 && e >= -2 * max_even);
    let single = |e: i32| support.iter().all(|&x| x == -2 * e);
    match family {
        Family::Beta => {
            if alpha % 2 == 1 {
                value.is_rational()
            } else if d % 2 == 1 {
                single(d - 1)
            } else {
                within(d)
            }
        }
        Family::BetaPrime => {
            let top = if d % 2 == 0 { d } else { d - 1 };
            if alpha % 2 == 0 {
                value.is_rational()
            } else if k % 2 == 0 {
                single(top)
            } else {
                within(top)
            }
        }
    }
}

/// a[nu, kappa] by quadrature (real alpha > 0, nu - kappa a nonnegative integer).
pub fn la_numeric(nu: f64, kappa: f64, alpha: f64) -> Result<f64> {
    a_numeric(nu, kappa, alpha, false)
}

/// a~[nu, kappa] by quadrature.
pub fn la_tilde_numeric(nu: f64, kappa: f64, alpha: f64) -> Result<f64> {
    a_numeric(nu, kappa, alpha, true)
}

fn a_numeric(nu: f64, kappa: f64, alpha: f64, tilde: bool) -> Result<f64> {
    let rf = nu - kappa;
    let r = rf.round();
    if (rf - r).abs() > 1e-9 || r < 0.0 || !(alpha > 0.0) {
        return Err(Error::Domain(format!("nu - kappa = {rf} must be a nonnegative integer")));
    }
    let m = r as u32;
    let (p, q, c) = if tilde {
        (alpha * nu + 1.0, alpha - 1.0, c_tilde_beta_f64((alpha + 1.0) / 2.0))
    } else {
        (alpha * nu, alpha, c_beta_f64((alpha - 1.0) / 2.0))
    };
    let integrand = CoshIntegrand { p, q, c, m, imaginary: true };
    let fact: f64 = (1..=m).map(|j| j as f64).product();
    let pref = alpha.powi(m as i32 + 1) / (fact * 2.0 * std::f64::consts::PI * c.powi(m as i32));
    let res = integrand.integrate(1e-13 / pref.max(1e-300))?;
    Ok(pref * res.value)
}
