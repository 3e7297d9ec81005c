//! Real-line quadrature for the cosh-form integrals
//!   int_R cosh(u)^(-p) (1/2 + i c int_0^u cosh(v)^q dv)^m du
//! and their real-interval analogues.

mod gauss;

use crate::error::{Error, Result};
use crate::scalars::Family;
use num_complex::Complex64;

pub use gauss::{integrate as gauss_integrate, rule10, rule20, Rule};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub imag: f64,
    pub abs_error: f64,
    pub evaluations: usize,
}

/// int_R cosh^(-p) (1/2 + j c G(u))^m du with G(u) = int_0^u cosh^q and
/// j = i (complex form) or j = 1 (real form).
#[derive(Clone, Copy, Debug)]
pub struct CoshIntegrand {
    pub p: f64,
    pub q: f64,
    pub c: f64,
    pub m: u32,
    pub imaginary: bool,
}

fn ln_cosh(u: f64) -> f64 {
    let a = u.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// c_beta as a float.
pub fn c_beta_f64(beta: f64) -> f64 {
    (ln_gamma(beta + 1.5) - ln_gamma(beta + 1.0)).exp() / std::f64::consts::PI.sqrt()
}

/// c~_beta as a float.
pub fn c_tilde_beta_f64(beta: f64) -> f64 {
    (ln_gamma(beta) - ln_gamma(beta - 0.5)).exp() / std::f64::consts::PI.sqrt()
}

/// int_0^u cosh(v)^alpha dv, by Gauss panels of width at most 1/4.
pub fn inner_cumulative(alpha: f64, u: f64) -> f64 {
    let panels = ((u.abs() / 0.25).ceil() as usize).max(1);
    let h = u / panels as f64;
    let rule = rule20();
    (0..panels)
        .map(|i| {
            let a = i as f64 * h;
            gauss::integrate(rule, a, a + h, |v| (alpha * ln_cosh(v)).exp())
        })
        .sum()
}

const REL_FLOOR: f64 = 1e-13;

impl CoshIntegrand {
    /// Growth rate of |G| relative to cosh^s.
    fn growth(&self) -> f64 {
        if self.imaginary {
            self.q.max(0.0)
        } else {
            0.0
        }
    }

    fn decay(&self) -> f64 {
        self.p - self.m as f64 * self.growth()
    }

    /// Bound on |1/2 + j c G(u)| cosh(u)^(-s) for |u| <= big_u.
    fn w_bound(&self, big_u: f64) -> f64 {
        let q = self.q;
        let g = if q > 0.0 {
            if self.imaginary {
                big_u.min(2f64.powf(q) / q)
            } else {
                // real form with growing G is never requested; bound crudely
                big_u * (q * big_u).exp()
            }
        } else if q < 0.0 {
            big_u.min(2f64.powf(-q) / -q)
        } else {
            big_u
        };
        0.5 + self.c.abs() * g
    }

    /// Truncation horizon with tail below tol.
    fn horizon(&self, tol: f64) -> Result<f64> {
        let rho = self.decay();
        if rho <= 0.0 {
            return Err(Error::Numeric(format!(
                "integrand does not decay (rate {rho}); tail bound unreachable"
            )));
        }
        let mut u = 2.0f64;
        for _ in 0..60 {
            let w = self.w_bound(u).max(1.0);
            let next = ((2.0 * 2f64.powf(rho) * w.powi(self.m as i32) / (rho * tol)).ln() / rho).max(1.0);
            if (next - u).abs() < 1e-6 {
                u = next;
                break;
            }
            u = next;
        }
        if !u.is_finite() || u > 700.0 {
            return Err(Error::Numeric(format!("tail bound unreachable (horizon {u})")));
        }
        Ok(u)
    }

    fn value_at(&self, u: f64, g: f64) -> Complex64 {
        let s = self.growth();
        let base = if self.imaginary {
            Complex64::new(0.5, self.c * g)
        } else {
            Complex64::new(0.5 + self.c * g, 0.0)
        };
        let w = base * (-s * ln_cosh(u)).exp();
        let mut acc = Complex64::new(1.0, 0.0);
        for _ in 0..self.m {
            acc *= w;
        }
        acc * (-(self.p - self.m as f64 * s) * ln_cosh(u)).exp()
    }

    /// Quadrature on [-U, U] with panel width h; returns (value, estimate, evals).
    fn run(&self, big_u: f64, h: f64, sides: &[f64]) -> (Complex64, f64, usize) {
        let r20 = rule20();
        let r10 = rule10();
        let panels = (big_u / h).ceil() as usize;
        let h = big_u / panels as f64;
        let q = self.q;
        let inner = |a: f64, x: f64| gauss::integrate(r20, a, x, |v| (q * ln_cosh(v)).exp());
        let mut total = Complex64::new(0.0, 0.0);
        let mut err = 0.0;
        let mut evals = 0;
        let mut magnitude = 0.0;
        for &side in sides {
            let mut g_start = 0.0;
            for i in 0..panels {
                let a = side * i as f64 * h;
                let b = side * (i + 1) as f64 * h;
                let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
                let panel = |rule: &Rule| {
                    let mut s = Complex64::new(0.0, 0.0);
                    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                        let u = mid + half * x;
                        let g = g_start + inner(a, u);
                        s += self.value_at(u, g) * *w;
                    }
                    s * half.abs()
                };
                let fine = panel(r20);
                let coarse = panel(r10);
                evals += 30 * 21;
                err += (fine - coarse).norm();
                magnitude += fine.norm();
                total += fine;
                g_start += inner(a, b);
            }
        }
        // floating-point floor for the summation
        err += 1e-15 * magnitude;
        (total, err, evals)
    }

    /// Horizon U at which the analytic tail bound drops below tol.
    pub fn horizon_for(&self, tol: f64) -> Result<f64> {
        self.horizon(tol)
    }

    fn tail(&self, big_u: f64) -> f64 {
        let rho = self.decay();
        2.0 * 2f64.powf(rho) * self.w_bound(big_u).max(1.0).powi(self.m as i32) * (-rho * big_u).exp()
            / rho
    }

    fn refine(&self, big_u: f64, tol: f64, sides: &[f64], factor: f64) -> Result<QuadResult> {
        let tail = self.tail(big_u);
        let mut h = (2.0 / (self.p.max(1.0)).sqrt()).min(0.5);
        let mut evaluations = 0;
        let mut best = None;
        for _ in 0..5 {
            let (v, err, ev) = self.run(big_u, h, sides);
            evaluations += ev;
            let res = QuadResult {
                value: factor * v.re,
                imag: factor * v.im,
                abs_error: factor * err + tail,
                evaluations,
            };
            // requests finer than double precision resolves are raised to REL_FLOOR * |value|
            if res.abs_error <= tol.max(REL_FLOOR * res.value.hypot(res.imag)) {
                return Ok(res);
            }
            best = Some(res);
            h /= 2.0;
        }
        let res = best.unwrap();
        Err(Error::Numeric(format!(
            "quadrature did not converge: achieved error bound {:.3e}",
            res.abs_error
        )))
    }

    /// Full-line integral with estimated absolute error <= tol.
    pub fn integrate(&self, tol: f64) -> Result<QuadResult> {
        let big_u = self.horizon(tol * 0.01)?;
        self.refine(big_u, tol, &[1.0, -1.0], 1.0)
    }

    /// Full-line integral truncated to [-U, U] for a caller-chosen U.
    pub fn integrate_truncated(&self, big_u: f64, tol: f64) -> Result<QuadResult> {
        self.refine(big_u, tol, &[1.0, -1.0], 1.0)
    }

    /// Twice the integral of the even part over [0, inf). Equals the
    /// full-line real part by symmetry; the imaginary part is discarded.
    pub fn integrate_half_line(&self, tol: f64) -> Result<QuadResult> {
        let big_u = self.horizon(tol * 0.01)?;
        let mut r = self.refine(big_u, tol, &[1.0], 2.0)?;
        r.imag = 0.0;
        Ok(r)
    }
}

/// Expected internal angle sum by the cosh-form integral, prefactors included.
pub fn outer_integral(n: u32, k: u32, alpha: f64, family: Family) -> Result<QuadResult> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n (n={n}, k={k})")));
    }
    let nf = n as f64;
    let binom = crate::scalars::binom(n as i64, k as i64)
        .to_string()
        .parse::<f64>()
        .unwrap();
    let (pref, integrand) = match family {
        Family::Beta => {
            if alpha < nf - 3.0 || alpha <= -1.0 {
                return Err(Error::Domain(format!("beta family needs alpha >= n-3 (alpha={alpha})")));
            }
            (
                binom * c_beta_f64(alpha * nf / 2.0),
                CoshIntegrand {
                    p: alpha * nf + 2.0,
                    q: alpha,
                    c: c_beta_f64((alpha - 1.0) / 2.0),
                    m: n - k,
                    imaginary: true,
                },
            )
        }
        Family::BetaPrime => {
            if alpha * nf <= 1.0 || alpha <= 0.0 {
                return Err(Error::Domain(format!("beta' family needs alpha*n > 1 (alpha={alpha})")));
            }
            (
                binom * c_tilde_beta_f64(alpha * nf / 2.0),
                CoshIntegrand {
                    p: alpha * nf - 1.0,
                    q: alpha - 1.0,
                    c: c_tilde_beta_f64((alpha + 1.0) / 2.0),
                    m: n - k,
                    imaginary: true,
                },
            )
        }
    };
    let tol = 1e-12 / pref.max(1e-300);
    let r = integrand.integrate(tol.max(1e-15))?;
    if r.imag.abs() > 1e-10 * r.value.abs().max(1e-300) && r.imag.abs() > r.abs_error {
        return Err(Error::Consistency(format!(
            "imaginary part {:.3e} did not cancel (real part {:.3e})",
            r.imag, r.value
        )));
    }
    Ok(QuadResult {
        value: pref * r.value,
        imag: pref * r.imag,
        abs_error: pref * r.abs_error,
        evaluations: r.evaluations,
    })
}
