//! Expected f-vectors of Poisson polytopes, the Poisson zero cell, the
//! typical Poisson-Voronoi cell, beta and beta' polytopes, plus the
//! Reitzner constants.

mod reitzner;

pub use reitzner::{
    reitzner_ball, reitzner_ball_residue, reitzner_sphere, reitzner_sphere_residue, ReitznerConstant,
};

use crate::angles::{
    bj_numeric, bj_table, bjtilde_numeric, bjtilde_table, residue_rational, AngleValue, BetaParam,
};
use crate::error::{Error, Result};
use crate::quadrature::{c_beta_f64, c_tilde_beta_f64, CoshIntegrand};
use crate::scalars::{binom_q, c_tilde_beta, factorial, int, rat, PiNumber, Rational};
use crate::series::{sin_power_integral, ugly_coefficient, x_over_sin_power, UglyVariant};
use crate::trig::{external_bi, external_bi_tilde};
use rayon::prelude::*;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    Poisson,
    ZeroCell,
    Voronoi,
    Beta,
    BetaPrime,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Poisson => "poisson",
            Model::ZeroCell => "zerocell",
            Model::Voronoi => "voronoi",
            Model::Beta => "beta",
            Model::BetaPrime => "betaprime",
        }
    }
}

impl std::str::FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "poisson" => Ok(Model::Poisson),
            "zerocell" | "zero-cell" => Ok(Model::ZeroCell),
            "voronoi" => Ok(Model::Voronoi),
            "beta" => Ok(Model::Beta),
            "betaprime" | "beta'" | "beta-prime" => Ok(Model::BetaPrime),
            _ => Err(Error::Parse(format!("unknown model '{s}'"))),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How an f-vector entry was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// sum of external times internal angle terms
    AngleSum,
    Closed,
    Numeric,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::AngleSum => "angle_sum",
            Route::Closed => "closed",
            Route::Numeric => "numeric",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FEntry {
    pub ell: u32,
    pub value: AngleValue,
    pub route: Route,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FVector {
    pub model: Model,
    pub d: u32,
    /// alpha for Poisson-type models
    pub alpha: Option<f64>,
    pub n: Option<u32>,
    pub beta: Option<BetaParam>,
    pub entries: Vec<FEntry>,
}

impl FVector {
    pub fn exact_values(&self) -> Option<Vec<PiNumber>> {
        self.entries.iter().map(|e| e.value.exact().cloned()).collect()
    }

    pub fn floats(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.value.to_f64()).collect()
    }

    fn from_exact(model: Model, d: u32, values: Vec<PiNumber>, route: Route) -> Self {
        Self {
            model,
            d,
            alpha: None,
            n: None,
            beta: None,
            entries: values
                .into_iter()
                .enumerate()
                .map(|(i, v)| FEntry {
                    ell: i as u32,
                    value: AngleValue::Exact(v),
                    route,
                })
                .collect(),
        }
    }

    fn reversed(&self, model: Model) -> Self {
        let mut out = self.clone();
        out.model = model;
        out.entries.reverse();
        for (i, e) in out.entries.iter_mut().enumerate() {
            e.ell = i as u32;
        }
        out
    }
}

/// Euler relation sum (-1)^l f_l = 1 - (-1)^d on f_0..f_{d-1}.
pub fn euler_holds(f: &[PiNumber]) -> bool {
    let d = f.len();
    let mut s = PiNumber::zero();
    for (l, v) in f.iter().enumerate() {
        if l % 2 == 0 { s += v } else { s -= v }
    }
    s == PiNumber::from_int(if d % 2 == 0 { 0 } else { 2 })
}

/// Dehn-Sommerville relations for a simplicial polytope with f_{k-1} = f[k-1]
/// and f_{-1} = 1.
pub fn dehn_sommerville_holds(f: &[PiNumber]) -> bool {
    let d = f.len() as u32;
    let at = |k: u32| if k == 0 { PiNumber::one() } else { f[k as usize - 1].clone() };
    (0..=d).all(|m| {
        let mut s = PiNumber::zero();
        for k in m..=d {
            let t = at(k).scale(&binom_q(k as i64, m as i64));
            if k % 2 == 0 { s += &t } else { s -= &t }
        }
        s == if d % 2 == 0 { at(m) } else { -at(m) }
    })
}

fn check_d(d: u32) -> Result<()> {
    if d < 1 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    Ok(())
}

/// I~_{infinity,m}(alpha) = c~_{(alpha m+1)/2} / c~_{(alpha+1)/2}^m * alpha^(m-1)/m.
pub fn iinf_tilde(m: u32, alpha: u32) -> Result<PiNumber> {
    if m < 1 || alpha < 1 {
        return Err(Error::Domain("need m >= 1 and alpha >= 1".into()));
    }
    let num = c_tilde_beta((alpha * m) as i64 + 1)?;
    let den = c_tilde_beta(alpha as i64 + 1)?.pow(m);
    let w = Rational::from_integer(num_bigint::BigInt::from(alpha).pow(m - 1)) / int(m as i64);
    Ok(num.div(&den)?.scale(&w))
}

/// Exact expected f-vector of the Poisson polytope for integer alpha.
pub fn poisson_exact(d: u32, alpha: u32) -> Result<FVector> {
    check_d(d)?;
    if alpha < 1 {
        return Err(Error::Domain("Poisson polytope needs alpha > 0".into()));
    }
    let ms: Vec<u32> = (1..=d).filter(|m| (d - m) % 2 == 0).collect();
    let parts: Vec<(u32, PiNumber, Vec<PiNumber>)> = ms
        .par_iter()
        .map(|&m| {
            let w = iinf_tilde(m, alpha)?;
            let t = bjtilde_table(m, (alpha + m) as i64 - 1)?.exact_values().unwrap();
            Ok((m, w, t))
        })
        .collect::<Result<_>>()?;
    let values = (1..=d)
        .map(|k| {
            let mut s = PiNumber::zero();
            for (m, w, t) in &parts {
                if *m >= k {
                    s += &(w * &t[k as usize - 1]);
                }
            }
            s.scale(&int(2))
        })
        .collect();
    let mut f = FVector::from_exact(Model::Poisson, d, values, Route::AngleSum);
    f.alpha = Some(alpha as f64);
    Ok(f)
}

/// E f_{k-1} of the Poisson polytope by the direct residue, alpha k even.
pub fn poisson_residue(d: u32, k: u32, alpha: u32) -> Result<PiNumber> {
    check_d(d)?;
    if k < 1 || k > d || alpha < 1 {
        return Err(Error::Domain("need 1 <= k <= d and alpha >= 1".into()));
    }
    if (alpha * k) % 2 == 1 {
        return Err(Error::Parity(format!("residue form needs alpha k even (alpha={alpha}, k={k})")));
    }
    let res = residue_rational(alpha - 1, d - k, (alpha * d) as i64 + 1);
    let inv_c = c_tilde_beta(alpha as i64 + 1)?.inv()?.pow(k);
    let w = Rational::from_integer(num_bigint::BigInt::from(alpha).pow(d)) * binom_q(d as i64, k as i64) * res;
    Ok(inv_c.scale(&w))
}

/// E f_{k-1} of the Poisson polytope by the Bernoulli-weighted extraction, alpha k odd.
pub fn poisson_ugly(d: u32, k: u32, alpha: u32) -> Result<PiNumber> {
    check_d(d)?;
    if k < 1 || k > d || (alpha * k) % 2 == 0 {
        return Err(Error::Parity("needs alpha k odd".into()));
    }
    let m = (alpha * d) as i64 + 1;
    let g = sin_power_integral(alpha as i64 - 1, m + 2)?;
    let c = c_tilde_beta(alpha as i64 + 1)?;
    let (variant, e) = if d % 2 == 1 {
        (UglyVariant::SinOverTan, (d - k) / 2)
    } else {
        (UglyVariant::CosOverCot, (d - k - 1) / 2)
    };
    let u = ugly_coefficient(&g, &c, m, (d - k) as i64, variant)?;
    let sign = if e % 2 == 0 { 1 } else { -1 };
    let w = Rational::from_integer(num_bigint::BigInt::from(alpha).pow(d)) * Rational::new(factorial(d as u64), factorial(k as u64)) * int(sign);
    Ok((&u * &c.inv()?.pow(d)).scale(&w))
}

/// Expected f-vector of the Poisson polytope by quadrature, any alpha > 0.
pub fn poisson_numeric(d: u32, alpha: f64) -> Result<FVector> {
    check_d(d)?;
    if !(alpha > 0.0) {
        return Err(Error::Domain("Poisson polytope needs alpha > 0".into()));
    }
    let c = c_tilde_beta_f64((alpha + 1.0) / 2.0);
    let pref0 = (alpha / c).powi(d as i32) / std::f64::consts::PI;
    let entries = (1..=d)
        .into_par_iter()
        .map(|k| {
            let pref = pref0 * binom_f(d, k);
            let integrand = CoshIntegrand {
                p: alpha * d as f64 + 1.0,
                q: alpha - 1.0,
                c,
                m: d - k,
                imaginary: true,
            };
            let r = integrand.integrate(1e-12 / pref)?;
            Ok(FEntry {
                ell: k - 1,
                value: AngleValue::Float {
                    value: pref * r.value,
                    abs_error: pref * r.abs_error,
                },
                route: Route::Numeric,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FVector {
        model: Model::Poisson,
        d,
        alpha: Some(alpha),
        n: None,
        beta: None,
        entries,
    })
}

fn binom_f(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

fn integral_alpha(alpha: f64) -> Option<u32> {
    (alpha >= 1.0 && alpha.fract() == 0.0 && alpha < 1e6).then(|| alpha as u32)
}

/// Exact when alpha is a positive integer, numeric otherwise.
pub fn poisson_polytope_fvector(d: u32, alpha: f64) -> Result<FVector> {
    match integral_alpha(alpha) {
        Some(a) => poisson_exact(d, a),
        None => poisson_numeric(d, alpha),
    }
}

/// Expected f-vector of the Poisson zero cell.
pub fn zero_cell_fvector(d: u32) -> Result<FVector> {
    let mut f = poisson_exact(d, 1)?.reversed(Model::ZeroCell);
    f.alpha = None;
    Ok(f)
}

/// E f_l(Z_d) for even d - l from the (x / sin x)^(d+1) coefficient.
pub fn zero_cell_nice(d: u32, ell: u32) -> Result<PiNumber> {
    if ell > d || (d - ell) % 2 == 1 {
        return Err(Error::Parity("needs d - l even".into()));
    }
    let j = (d - ell) as i64;
    let coef = x_over_sin_power(d as i64 + 1, j + 1)?.coefficient(j)?;
    Ok(PiNumber::pi_pow(j as i32).scale(&(coef * binom_q(d as i64, ell as i64))))
}

/// [x^m] prod_{1 <= j <= d-1, j != d mod 2} (1 + j^2 x^2).
pub fn zero_cell_product_coefficient(d: u32, m: u32) -> Rational {
    let mut poly = vec![Rational::from_integer(1.into())];
    for j in (1..d).filter(|j| (j + d) % 2 == 1) {
        let mut next = vec![Rational::from_integer(0.into()); poly.len() + 2];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 2] += c * int((j * j) as i64);
        }
        poly = next;
    }
    poly.get(m as usize).cloned().unwrap_or_else(|| Rational::from_integer(0.into()))
}

/// E f_l(Z_d) for even d - l, l >= 1, from the product formula.
pub fn zero_cell_product(d: u32, ell: u32) -> Result<PiNumber> {
    if ell < 1 || ell > d || (d - ell) % 2 == 1 {
        return Err(Error::Parity("needs 1 <= l and d - l even".into()));
    }
    let j = d - ell;
    let c = zero_cell_product_coefficient(d, j) / Rational::from_integer(factorial(j as u64));
    Ok(PiNumber::pi_pow(j as i32).scale(&c))
}

/// Expected f-vector of the typical Poisson-Voronoi cell.
pub fn typical_voronoi_fvector(d: u32) -> Result<FVector> {
    let mut f = poisson_exact(d, d)?.reversed(Model::Voronoi);
    f.alpha = None;
    Ok(f)
}

/// Intensity of j-faces of the Poisson-Voronoi tessellation.
pub fn face_intensity(d: u32, j: u32) -> Result<PiNumber> {
    if j > d {
        return Err(Error::Domain(format!("need 0 <= j <= d, got j={j}, d={d}")));
    }
    let f = if j == d {
        PiNumber::one()
    } else {
        typical_voronoi_fvector(d)?.entries[j as usize].value.exact().unwrap().clone()
    };
    Ok(f.scale(&rat(1, (d - j + 1) as i64)))
}

/// Is a Voronoi entry of the predicted pi-structure?
pub fn voronoi_form_ok(d: u32, ell: u32, v: &PiNumber) -> bool {
    let s = v.support();
    if d % 2 == 0 {
        v.is_rational()
    } else if ell % 2 == 1 {
        s.iter().all(|&e| e == 2 * (d - ell) as i32)
    } else {
        let lo = 2 * (d - ell - 1) as i32;
        s.iter().all(|&e| e % 4 == 0 && e >= lo && e <= 2 * (d as i32 - 1))
    }
}

fn beta_sum_exact(
    d: u32,
    bi: impl Fn(u32) -> Result<PiNumber> + Sync,
    table: impl Fn(u32) -> Result<Vec<PiNumber>> + Sync,
) -> Result<Vec<PiNumber>> {
    let ms: Vec<u32> = (1..=d).filter(|m| (d - m) % 2 == 0).collect();
    let parts: Vec<(u32, PiNumber, Vec<PiNumber>)> = ms
        .par_iter()
        .map(|&m| Ok((m, bi(m)?, table(m)?)))
        .collect::<Result<_>>()?;
    Ok((1..=d)
        .map(|k| {
            let mut s = PiNumber::zero();
            for (m, i, t) in &parts {
                if *m >= k {
                    s += &(i * &t[k as usize - 1]);
                }
            }
            s.scale(&int(2))
        })
        .collect())
}

/// I_{n,m}(alpha) or I~_{n,m}(alpha) for real alpha by quadrature.
pub fn bi_numeric(tilde: bool, n: u32, m: u32, alpha: f64) -> Result<f64> {
    if m < 1 || m > n {
        return Err(Error::Domain("need 1 <= m <= n".into()));
    }
    let mf = m as f64;
    let (pref, integrand) = if tilde {
        let c_in = c_tilde_beta_f64((alpha + 1.0) / 2.0);
        (
            binom_f(n, m) * c_tilde_beta_f64((alpha * mf + 1.0) / 2.0),
            CoshIntegrand { p: alpha * mf, q: -alpha, c: c_in, m: n - m, imaginary: false },
        )
    } else {
        let c_in = c_beta_f64((alpha - 1.0) / 2.0);
        (
            binom_f(n, m) * c_beta_f64((alpha * mf - 1.0) / 2.0),
            CoshIntegrand { p: alpha * mf + 1.0, q: -(alpha + 1.0), c: c_in, m: n - m, imaginary: false },
        )
    };
    let r = integrand.integrate(1e-12 / pref.max(1e-300))?;
    Ok(pref * r.value)
}

fn numeric_sum(
    d: u32,
    bi: impl Fn(u32) -> Result<f64> + Sync,
    bj: impl Fn(u32, u32) -> Result<f64> + Sync,
) -> Result<Vec<FEntry>> {
    (1..=d)
        .into_par_iter()
        .map(|k| {
            let mut s = 0.0;
            for m in (k..=d).filter(|m| (d - m) % 2 == 0) {
                s += bi(m)? * bj(m, k)?;
            }
            Ok(FEntry {
                ell: k - 1,
                value: AngleValue::Float { value: 2.0 * s, abs_error: 1e-9 * (1.0 + s.abs()) },
                route: Route::Numeric,
            })
        })
        .collect()
}

fn check_beta_poly(n: u32, d: u32) -> Result<()> {
    check_d(d)?;
    if n < d + 1 {
        return Err(Error::Domain(format!("need n >= d + 1 points (n={n}, d={d})")));
    }
    Ok(())
}

/// Expected f-vector of the convex hull of n beta-distributed points in R^d.
pub fn beta_polytope_fvector(n: u32, d: u32, beta: BetaParam) -> Result<FVector> {
    check_beta_poly(n, d)?;
    if !(beta.to_f64() >= -1.0) {
        return Err(Error::Domain("beta family needs beta >= -1".into()));
    }
    let entries = match beta {
        _ if n == d + 1 || d == 1 => closed_entries(d),
        BetaParam::HalfInteger(tb) => {
            let alpha = alpha_u32(tb + d as i64)?;
            let vals = beta_sum_exact(
                d,
                |m| external_bi(n, m, alpha),
                |m| Ok(bj_table(m, alpha as i64 - m as i64 + 1)?.exact_values().unwrap()),
            )?;
            exact_entries(vals)
        }
        BetaParam::Real(b) => {
            let alpha = 2.0 * b + d as f64;
            numeric_sum(
                d,
                |m| bi_numeric(false, n, m, alpha),
                |m, k| bj_numeric(m, k, (alpha - m as f64 + 1.0) / 2.0),
            )?
        }
    };
    Ok(FVector { model: Model::Beta, d, alpha: None, n: Some(n), beta: Some(beta), entries })
}

/// Expected f-vector of the convex hull of n beta'-distributed points in R^d.
pub fn betaprime_polytope_fvector(n: u32, d: u32, beta: BetaParam) -> Result<FVector> {
    check_beta_poly(n, d)?;
    if !(beta.to_f64() > d as f64 / 2.0) {
        return Err(Error::Domain("beta' family needs beta > d/2".into()));
    }
    let entries = match beta {
        _ if n == d + 1 || d == 1 => closed_entries(d),
        BetaParam::HalfInteger(tb) => {
            let alpha = alpha_u32(tb - d as i64)?;
            let vals = beta_sum_exact(
                d,
                |m| external_bi_tilde(n, m, alpha),
                |m| Ok(bjtilde_table(m, (alpha + m) as i64 - 1)?.exact_values().unwrap()),
            )?;
            exact_entries(vals)
        }
        BetaParam::Real(b) => {
            let alpha = 2.0 * b - d as f64;
            numeric_sum(
                d,
                |m| bi_numeric(true, n, m, alpha),
                |m, k| bjtilde_numeric(m, k, (alpha + m as f64 - 1.0) / 2.0),
            )?
        }
    };
    Ok(FVector { model: Model::BetaPrime, d, alpha: None, n: Some(n), beta: Some(beta), entries })
}

fn exact_entries(vals: Vec<PiNumber>) -> Vec<FEntry> {
    vals.into_iter()
        .enumerate()
        .map(|(i, v)| FEntry { ell: i as u32, value: AngleValue::Exact(v), route: Route::AngleSum })
        .collect()
}

/// A simplex has every face; for d = 1 the hull is a segment.
fn closed_entries(d: u32) -> Vec<FEntry> {
    (1..=d)
        .map(|k| FEntry {
            ell: k - 1,
            value: AngleValue::Exact(PiNumber::rational(binom_q((d + 1) as i64, k as i64))),
            route: Route::Closed,
        })
        .collect()
}

fn alpha_u32(alpha: i64) -> Result<u32> {
    u32::try_from(alpha).map_err(|_| Error::Domain(format!("alpha = {alpha} is negative")))
}

/// Is a beta / beta' polytope entry a combination of pi^(-2r), r <= (n-k)/2
/// (rational when the parity says so)?
pub fn beta_polytope_form_ok(prime: bool, n: u32, d: u32, twice_beta: i64, k: u32, v: &PiNumber) -> bool {
    let rational = if prime {
        (twice_beta - d as i64) % 2 == 0
    } else {
        (twice_beta + d as i64).rem_euclid(2) == 1
    };
    if rational {
        return v.is_rational();
    }
    let top = 4 * ((n - k) / 2) as i32;
    v.support().iter().all(|&e| e <= 0 && e % 4 == 0 && -e <= top)
}
