//! Named verification suites shared by the command line tool and the
//! acceptance tests. Every check reports a one-line result.

use crate::angles::{
    beta_alpha, bj_exact, bj_numeric, bj_table, bj_ugly, bjtilde_exact, bjtilde_numeric, bjtilde_table, bjtilde_ugly,
};
use crate::error::Result;
use crate::montecarlo::{mc_angle_sum, mc_beta_hull_2d, mc_betaprime_hull_2d, mc_voronoi_2d, McEstimate};
use crate::polytope::{
    beta_polytope_fvector, betaprime_polytope_fvector, dehn_sommerville_holds, euler_holds, poisson_exact,
    reitzner_ball, reitzner_sphere, typical_voronoi_fvector, voronoi_form_ok, zero_cell_fvector, zero_cell_nice,
    zero_cell_product,
};
use crate::angles::BetaParam;
use crate::scalars::{binom_q, Family, PiNumber};
use crate::trig::{external_bi, external_bi_tilde};
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    fn from_result(name: impl Into<String>, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Check::new(name, passed, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {}: {}", self.name, self.detail)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Crosscheck,
    MonteCarlo,
}

impl FromStr for Suite {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relations" => Ok(Suite::Relations),
            "crosscheck" => Ok(Suite::Crosscheck),
            "montecarlo" => Ok(Suite::MonteCarlo),
            _ => Err(crate::Error::Parse(format!("unknown suite '{s}'"))),
        }
    }
}

/// sum_{k=m}^n (-1)^k C(k, m) z_k = (-1)^n z_m for m = 0..n, with z_0 = 0.
pub fn poincare_holds(z: &[PiNumber]) -> bool {
    let n = z.len() as u32;
    let at = |k: u32| if k == 0 { PiNumber::zero() } else { z[k as usize - 1].clone() };
    (0..=n).all(|m| {
        let mut s = PiNumber::zero();
        for k in m..=n {
            let t = at(k).scale(&binom_q(k as i64, m as i64));
            if k % 2 == 0 {
                s += &t
            } else {
                s -= &t
            }
        }
        s == if n % 2 == 0 { at(m) } else { -at(m) }
    })
}

/// sum_{m=k}^n (-1)^m I_{n,m}(alpha) J_{m,k}((alpha - m + 1)/2), or the tilde analogue
/// with J~_{m,k}((alpha + m - 1)/2). Zero for 1 <= k < n.
pub fn inversion_residual(family: Family, n: u32, k: u32, alpha: u32) -> Result<PiNumber> {
    let mut s = PiNumber::zero();
    for m in k..=n {
        let t = match family {
            Family::Beta => &external_bi(n, m, alpha)? * &bj_exact(m, k, alpha as i64 - m as i64 + 1)?,
            Family::BetaPrime => &external_bi_tilde(n, m, alpha)? * &bjtilde_exact(m, k, alpha as i64 + m as i64 - 1)?,
        };
        if m % 2 == 0 {
            s += &t
        } else {
            s -= &t
        }
    }
    Ok(s)
}

fn table_alphas(family: Family, n: u32) -> Vec<u32> {
    match family {
        Family::Beta => ((n as i64 - 3).max(0) as u32..=(n + 3)).collect(),
        Family::BetaPrime => (1..=5).collect(),
    }
}

fn exact_table(family: Family, n: u32, alpha: u32) -> Result<Vec<PiNumber>> {
    let t = match family {
        Family::Beta => bj_table(n, alpha as i64 - n as i64 + 1)?,
        Family::BetaPrime => bjtilde_table(n, alpha as i64 + n as i64 - 1)?,
    };
    Ok(t.exact_values().expect("integer alpha gives exact tables"))
}

pub fn poincare_check(max_n: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for family in [Family::Beta, Family::BetaPrime] {
        for n in 2..=max_n {
            let r = table_alphas(family, n)
                .into_par_iter()
                .map(|a| exact_table(family, n, a).map(|z| (a, poincare_holds(&z))))
                .collect::<Result<Vec<_>>>()
                .map(|v| {
                    let bad: Vec<u32> = v.iter().filter(|x| !x.1).map(|x| x.0).collect();
                    (bad.is_empty(), format!("{} tables, failing alpha {:?}", v.len(), bad))
                });
            out.push(Check::from_result(format!("poincare {} n={n}", family.name()), r));
        }
    }
    out
}

/// Inversion relations for n <= max_n and every valid integer alpha <= 8.
pub fn inversion_check(max_n: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for family in [Family::Beta, Family::BetaPrime] {
        for n in 2..=max_n {
            let lo = match family {
                Family::Beta => (n as i64 - 3).max(0) as u32,
                Family::BetaPrime => 1,
            };
            let cases: Vec<(u32, u32)> = (lo..=8).flat_map(|a| (1..n).map(move |k| (a, k))).collect();
            let r = cases
                .par_iter()
                .map(|&(a, k)| inversion_residual(family, n, k, a).map(|s| (a, k, s.is_zero())))
                .collect::<Result<Vec<_>>>()
                .map(|v| {
                    let bad: Vec<(u32, u32)> = v.iter().filter(|x| !x.2).map(|x| (x.0, x.1)).collect();
                    (bad.is_empty(), format!("{} sums, nonzero at (alpha, k) {:?}", v.len(), bad))
                });
            out.push(Check::from_result(format!("inversion {} n={n}", family.name()), r));
        }
    }
    out
}

pub fn fvector_relations_check(max_d: u32) -> Vec<Check> {
    (1..=max_d)
        .into_par_iter()
        .map(|d| {
            let r = (|| -> Result<(bool, String)> {
                let z = zero_cell_fvector(d)?.exact_values().unwrap();
                let v = typical_voronoi_fvector(d)?.exact_values().unwrap();
                let mut ok = true;
                let mut notes = Vec::new();
                for (name, f) in [("zero cell", &z), ("voronoi", &v)] {
                    let mut dual = f.clone();
                    dual.reverse();
                    if !euler_holds(f) || !dehn_sommerville_holds(&dual) {
                        ok = false;
                        notes.push(name.to_string());
                    }
                }
                for alpha in 1..=3 {
                    let p = poisson_exact(d, alpha)?.exact_values().unwrap();
                    if !euler_holds(&p) || !dehn_sommerville_holds(&p) {
                        ok = false;
                        notes.push(format!("poisson alpha={alpha}"));
                    }
                }
                for (ell, x) in v.iter().enumerate() {
                    if !voronoi_form_ok(d, ell as u32, x) {
                        ok = false;
                        notes.push(format!("voronoi form l={ell}"));
                    }
                }
                Ok((ok, if notes.is_empty() { "euler, dehn-sommerville, forms".into() } else { format!("failing {notes:?}") }))
            })();
            Check::from_result(format!("f-vector relations d={d}"), r)
        })
        .collect()
}

pub fn relations(max_n: u32) -> Vec<Check> {
    let mut out = poincare_check(max_n);
    out.extend(inversion_check(max_n.min(8)));
    out.extend(fvector_relations_check(max_n));
    out
}

/// Fixed grid of (family, n, k, 2 beta) with n <= 7 for numeric against exact.
pub fn numeric_grid() -> Vec<(Family, u32, u32, i64)> {
    let mut g = Vec::new();
    for n in 3..=7u32 {
        for tb in [-2i64, -1, 0, 1, 3] {
            if beta_alpha(n, tb).is_err() {
                continue;
            }
            for k in [1u32, 2, n - 1] {
                g.push((Family::Beta, n, k, tb));
            }
        }
        for alpha in 1..=3i64 {
            for k in [1u32, 2] {
                g.push((Family::BetaPrime, n, k, alpha + n as i64 - 1));
            }
        }
    }
    g
}

/// |numeric - exact| for one grid case.
pub fn numeric_gap(family: Family, n: u32, k: u32, twice_beta: i64) -> Result<f64> {
    let b = twice_beta as f64 / 2.0;
    let (e, x) = match family {
        Family::Beta => (bj_exact(n, k, twice_beta)?, bj_numeric(n, k, b)?),
        Family::BetaPrime => (bjtilde_exact(n, k, twice_beta)?, bjtilde_numeric(n, k, b)?),
    };
    Ok((e.to_f64() - x).abs())
}

fn golden(name: &str, v: Result<PiNumber>, want: &str) -> Check {
    let want: PiNumber = want.parse().expect("valid literal");
    match v {
        Ok(v) => Check::new(name, v == want, format!("{v}")),
        Err(e) => Check::new(name, false, format!("error: {e}")),
    }
}

pub fn crosscheck(max_n: u32) -> Vec<Check> {
    let mut out = vec![
        golden("J_{4,1}(-1)", bj_exact(4, 1, -2), "1/8"),
        golden("J_{5,1}(-1)", bj_exact(5, 1, -2), "539/288 * pi^-2 - 1/6"),
        golden("J_{4,1}(0)", bj_exact(4, 1, 0), "401/2560"),
        golden("J_{5,1}(0)", bj_exact(5, 1, 0), "1692197/846720 * pi^-2 - 1/6"),
        golden("J~_{4,2}(5/2)", bjtilde_exact(4, 2, 5), "6/5"),
        golden("beta polytope n=4 d=2 beta=0, f_0", beta_polytope_fvector(4, 2, BetaParam::HalfInteger(0)).map(|f| f.exact_values().unwrap()[0].clone()), "4 - 35/12 * pi^-2"),
    ];
    let grid = numeric_grid();
    let gaps: Vec<(String, Result<f64>)> = grid
        .par_iter()
        .filter(|c| c.1 <= max_n)
        .map(|&(f, n, k, tb)| (format!("{} n={n} k={k} 2b={tb}", f.name()), numeric_gap(f, n, k, tb)))
        .collect();
    let worst = gaps.iter().filter_map(|g| g.1.as_ref().ok()).fold(0.0f64, |a, &b| a.max(b));
    let errs: Vec<&String> = gaps.iter().filter(|g| g.1.is_err()).map(|g| &g.0).collect();
    out.push(Check::new(
        "numeric vs exact grid",
        errs.is_empty() && worst <= 1e-8,
        format!("{} cases, max gap {worst:.2e}, errors {errs:?}", gaps.len()),
    ));
    for n in 3..=max_n.min(8) {
        let r = (|| -> Result<(bool, String)> {
            let mut ok = true;
            for alpha in table_alphas(Family::Beta, n) {
                let z = exact_table(Family::Beta, n, alpha)?;
                for k in 1..=n {
                    if let Ok(u) = bj_ugly(n, k, alpha) {
                        ok &= u == z[k as usize - 1];
                    }
                }
            }
            for alpha in table_alphas(Family::BetaPrime, n) {
                let z = exact_table(Family::BetaPrime, n, alpha)?;
                for k in 1..=n {
                    if let Ok(u) = bjtilde_ugly(n, k, alpha) {
                        ok &= u == z[k as usize - 1];
                    }
                }
            }
            Ok((ok, String::new()))
        })();
        out.push(Check::from_result(format!("bivariate coefficient path = table n={n}"), r));
    }
    let zc = (|| -> Result<(bool, String)> {
        let mut ok = true;
        for d in 1..=max_n.max(2) + 2 {
            let f = zero_cell_fvector(d)?.exact_values().unwrap();
            for ell in (0..d).filter(|l| (d - l) % 2 == 0) {
                let nice = zero_cell_nice(d, ell)?;
                ok &= nice == f[ell as usize];
                if ell >= 1 {
                    ok &= zero_cell_product(d, ell)? == nice;
                }
            }
        }
        Ok((ok, format!("d <= {}", max_n.max(2) + 2)))
    })();
    out.push(Check::from_result("zero cell formulas agree", zc));
    let a2 = (|| -> Result<(bool, String)> {
        let mut ok = true;
        for d in 1..=max_n {
            let f = poisson_exact(d, 2)?.exact_values().unwrap();
            for k in 1..=d {
                let want = binom_q(d as i64, k as i64) * binom_q((d + k) as i64, k as i64);
                ok &= f[k as usize - 1] == PiNumber::rational(want);
            }
        }
        Ok((ok, format!("d <= {max_n}")))
    })();
    out.push(Check::from_result("poisson alpha=2 closed form", a2));
    let rz = (|| -> Result<(bool, String)> {
        let mut ok = true;
        for d in 2..=8u32 {
            ok &= reitzner_sphere(d, 0)?.exact == Some(PiNumber::one());
            if d >= 3 {
                let (a, b) = (reitzner_ball(d, d - 2)?.value, reitzner_ball(d, d - 1)?.value);
                ok &= (a - d as f64 / 2.0 * b).abs() <= 1e-10 * a;
                let (a, b) = (reitzner_sphere(d, d - 2)?.value, reitzner_sphere(d, d - 1)?.value);
                ok &= (a - d as f64 / 2.0 * b).abs() <= 1e-10 * a;
            }
        }
        Ok((ok, "C*_{d,0} = 1, C_{d,d-2} = (d/2) C_{d,d-1}, d <= 8".into()))
    })();
    out.push(Check::from_result("reitzner constants", rz));
    out
}

fn mc_check(name: String, e: Result<McEstimate>, target: f64) -> Check {
    match e {
        Ok(e) => {
            let z = e.z_score(target);
            Check::new(name, z.abs() <= 4.0, format!("z = {z:+.3} (mean {:.6}, target {target:.6}, stderr {:.2e})", e.mean, e.stderr))
        }
        Err(err) => Check::new(name, false, format!("error: {err}")),
    }
}

/// Seeded stochastic checks. `trials` sets the hull and Voronoi sample sizes;
/// angle sums use trials/10 simplices with 32 directions each.
pub fn montecarlo(seed: u64, trials: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let simplices = (trials / 10).max(100);
    let mut s = seed;
    let mut next = || {
        s = s.wrapping_add(1);
        s
    };
    let mut cases = Vec::new();
    for n in 2..=5u32 {
        for tb in [-2i64, -1, 0, 2] {
            for k in 1..=n {
                cases.push((n, k, tb, next()));
            }
        }
    }
    let angle: Vec<Check> = cases
        .par_iter()
        .map(|&(n, k, tb, sd)| {
            let name = format!("angle sum beta n={n} k={k} beta={}", BetaParam::HalfInteger(tb));
            let target = match bj_exact(n, k, tb) {
                Ok(v) => v.to_f64(),
                // a segment: both sums are 1 for any beta >= -1
                Err(_) if n == 2 => 1.0,
                Err(e) => return Check::new(name, false, format!("error: {e}")),
            };
            mc_check(name, mc_angle_sum(Family::Beta, n, k, tb as f64 / 2.0, simplices, 32, sd), target)
        })
        .collect();
    out.extend(angle);
    for n in [4u32, 5, 6] {
        for tb in [-2i64, 0, 2] {
            let sd = next();
            let name = format!("hull f_0 beta n={n} beta={}", BetaParam::HalfInteger(tb));
            match beta_polytope_fvector(n, 2, BetaParam::HalfInteger(tb)) {
                Ok(f) => out.push(mc_check(name, mc_beta_hull_2d(n, tb as f64 / 2.0, trials, sd), f.floats()[0])),
                Err(e) => out.push(Check::new(name, false, format!("error: {e}"))),
            }
        }
    }
    let sd = next();
    match betaprime_polytope_fvector(4, 2, BetaParam::HalfInteger(3)) {
        Ok(f) => out.push(mc_check("hull f_0 beta' n=4 beta=3/2".into(), mc_betaprime_hull_2d(4, 1.5, trials, sd), f.floats()[0])),
        Err(e) => out.push(Check::new("hull f_0 beta' n=4 beta=3/2", false, format!("error: {e}"))),
    }
    let sd = next();
    out.push(mc_check("voronoi f_0 d=2".into(), mc_voronoi_2d(6.0, trials, sd), 6.0));
    out
}

pub fn run_suite(suite: Suite, seed: u64, trials: u64, max_n: u32) -> Vec<Check> {
    match suite {
        Suite::Relations => relations(max_n),
        Suite::Crosscheck => crosscheck(max_n),
        Suite::MonteCarlo => montecarlo(seed, trials),
    }
}
