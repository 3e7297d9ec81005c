use angleworks::angles::*;
use angleworks::scalars::{binom_q, c_beta, c_tilde_beta, gamma_half, rat, Rational};
use angleworks::trig::{external_bi, external_bi_tilde, external_lb, external_lb_tilde};
use angleworks::{Family, PiNumber};
use num_traits::{One, Zero};

fn p(s: &str) -> PiNumber {
    s.parse().unwrap()
}

#[test]
fn residue_workhorse_examples() {
    // [x^2] (x / sin x)^3
    assert_eq!(residue_rational(0, 0, 3), rat(1, 2));
    assert_eq!(bj_residue(3, 2, 1).unwrap(), PiNumber::rational(rat(3, 2)));
    // alpha kappa + nu - kappa even: the residue itself vanishes
    assert!(residue_rational(2, 2, 8).is_zero());
    assert!(residue_rational(3, 1, 8).is_zero());
    assert!(la_residue(8, 4, 2).is_err());
    assert!(residue_rational(3, 2, 0).is_zero());
}

#[test]
fn bj_residue_examples() {
    for n in [3u32, 5, 7] {
        for alpha in [n - 2, n, n + 2] {
            assert_eq!(bj_residue(n, n, alpha).unwrap(), PiNumber::one());
        }
    }
    assert_eq!(bj_residue(4, 3, 2).unwrap(), PiNumber::from_int(2));
    let z2 = bj_residue(5, 2, 2).unwrap();
    assert!(z2.support().iter().all(|&e| e == 0 || e == -4), "{z2}");
    let z4 = bj_residue(5, 4, 2).unwrap();
    let partial = vec![None, Some(z2), None, Some(z4), Some(PiNumber::one())];
    let filled = poincare_fill(5, &partial).unwrap();
    assert_eq!(filled[0], p("539/288 * pi^-2 - 1/6"));
    assert!(bj_residue(4, 2, 2).is_err());
    assert!(bj_residue(4, 1, 3).is_err());
}

#[test]
fn bjtilde_residue_examples() {
    assert_eq!(bjtilde_residue(4, 2, 2).unwrap(), PiNumber::rational(rat(6, 5)));
    assert_eq!(bjtilde_residue(3, 2, 2).unwrap(), PiNumber::rational(rat(3, 2)));
    for n in 2..7u32 {
        assert_eq!(bjtilde_residue(n, n, 2).unwrap(), PiNumber::one());
    }
    assert!(bjtilde_residue(4, 1, 3).is_err());
}

#[test]
fn fill_examples() {
    let partial = vec![None, Some(PiNumber::rational(rat(3, 2))), Some(PiNumber::one())];
    assert_eq!(poincare_fill(3, &partial).unwrap()[0], PiNumber::rational(rat(1, 2)));
    let zeros = vec![None, Some(PiNumber::zero()), None, Some(PiNumber::zero())];
    assert!(poincare_fill(4, &zeros).unwrap().iter().all(|z| z.is_zero()));
    let missing = vec![None, None, Some(PiNumber::one())];
    assert!(poincare_fill(3, &missing).is_err());
}

#[test]
fn bj_exact_examples() {
    assert_eq!(bj_exact(4, 1, -2).unwrap(), PiNumber::rational(rat(1, 8)));
    assert_eq!(bj_exact(5, 1, 0).unwrap(), p("1692197/846720 * pi^-2 - 1/6"));
    assert_eq!(bj_exact(5, 1, -2).unwrap(), p("539/288 * pi^-2 - 1/6"));
    assert_eq!(bj_exact(3, 1, 7).unwrap(), PiNumber::rational(rat(1, 2)));
    assert!(bj_exact(6, 1, -4).is_err());
    let t = bj_table(5, 0).unwrap();
    assert_eq!(t.get(1).unwrap().provenance, Provenance::Fill);
    assert_eq!(t.get(2).unwrap().provenance, Provenance::Residue);
    assert_eq!(t.get(5).unwrap().provenance, Provenance::Closed);
    assert_eq!(bj_table(4, -2).unwrap().get(1).unwrap().provenance, Provenance::TanAlgebra);
}

#[test]
fn bjtilde_exact_examples() {
    for n in 2..7u32 {
        assert_eq!(bjtilde_exact(n, n, n as i64 + 1).unwrap(), PiNumber::one());
    }
    assert_eq!(bjtilde_exact(4, 2, 5).unwrap(), PiNumber::rational(rat(6, 5)));
    assert_eq!(bjtilde_exact(3, 2, 3).unwrap(), PiNumber::rational(rat(3, 2)));
    assert!(bjtilde_exact(4, 2, 3).is_err());
    let t = bjtilde_table(5, 5).unwrap();
    assert_eq!(t.get(1).unwrap().provenance, Provenance::Fill);
    assert_eq!(t.get(2).unwrap().provenance, Provenance::Residue);
}

#[test]
fn numeric_examples() {
    assert!((bj_numeric(4, 1, -1.0).unwrap() - 0.125).abs() < 1e-10);
    let exact = p("1692197/846720 * pi^-2 - 1/6").to_f64();
    assert!((bj_numeric(5, 1, 0.0).unwrap() - exact).abs() < 1e-10);
    for n in 2..7u32 {
        let b = n as f64 / 2.0 + 0.3;
        assert!((bjtilde_numeric(n, n, b).unwrap() - 1.0).abs() < 1e-10);
    }
    assert!(bj_numeric(4, 1, -1.5).is_err());
    assert!(bjtilde_numeric(4, 1, 1.5).is_err());
}

#[test]
fn la_examples() {
    // a[kappa, kappa] = (alpha/2) Gamma(alpha kappa/2) / (sqrt(pi) Gamma((alpha kappa + 1)/2))
    for alpha in 1..6u32 {
        for ak in 1..12i64 {
            if ak % 2 == 0 {
                continue;
            }
            let v = la_residue(ak, ak, alpha).unwrap();
            let want = gamma_half(ak).unwrap().div(&gamma_half(ak + 1).unwrap()).unwrap().shift(-1);
            assert_eq!(PiNumber::rational(v), want.scale(&rat(alpha as i64, 2)));
        }
        // a~[kappa, kappa] = c~_{(alpha kappa + 1)/2} / kappa
        for ak in (2..12i64).step_by(2) {
            let v = la_tilde_residue(ak, ak, alpha).unwrap();
            let want = c_tilde_beta(ak + 1).unwrap().scale(&rat(alpha as i64, ak));
            assert_eq!(PiNumber::rational(v), want);
        }
    }
    assert!(la_tilde_residue(3, 3, 1).is_err());
    assert!(la_residue(5, 4, 2).is_err());
}

#[test]
fn la_numeric_matches_residue() {
    for alpha in 1..5u32 {
        for r in 0..4i64 {
            for kn in 1..8i64 {
                let nn = kn + r * alpha as i64;
                let (nu, ka) = (nn as f64 / alpha as f64, kn as f64 / alpha as f64);
                if let Ok(v) = la_residue(nn, kn, alpha) {
                    let x = la_numeric(nu, ka, alpha as f64).unwrap();
                    assert!((x - num_traits::ToPrimitive::to_f64(&v).unwrap()).abs() < 1e-10, "a[{nn},{kn}] alpha={alpha}");
                }
                if let Ok(v) = la_tilde_residue(nn, kn, alpha) {
                    let x = la_tilde_numeric(nu, ka, alpha as f64).unwrap();
                    assert!((x - num_traits::ToPrimitive::to_f64(&v).unwrap()).abs() < 1e-10, "a~[{nn},{kn}] alpha={alpha}");
                }
            }
        }
    }
}

#[test]
fn rm_and_p_values() {
    for n in 3..=10u32 {
        assert_eq!(rm_value(0, n).unwrap(), Rational::one());
        let nn = n as i64;
        assert_eq!(rm_value(1, n).unwrap(), rat(nn * nn + nn + 2, 2 * (nn + 3)));
        let num = nn.pow(5) + 15 * nn.pow(4) + 81 * nn.pow(3) + 225 * nn * nn + 326 * nn + 216;
        assert_eq!(rm_value(2, n).unwrap(), rat(num, 8 * (nn + 5) * (nn + 5) * (nn + 7)));
    }
    assert_eq!(rm_value(1, 5).unwrap(), rat(2, 1));
    for n in 4..=10i64 {
        let nu = n as u32;
        assert_eq!(p_alpha_k_value(1, 4, nu).unwrap(), rat(n - 1, 6));
        assert_eq!(p_alpha_k_value(1, 2, nu).unwrap(), Rational::one());
        assert_eq!(p_alpha_k_value(1, 6, nu.max(6)).unwrap(), rat(5 * n.max(6).pow(2) - 8 * n.max(6) + 3, 360));
        assert_eq!(p_alpha_k_value(2, 1, nu).unwrap(), Rational::one());
        assert_eq!(p_alpha_k_value(2, 2, nu).unwrap(), rat(n, 4));
        assert_eq!(p_alpha_k_value(2, 3, nu).unwrap(), rat(n * (n + 1), 32));
        assert_eq!(p_alpha_k_value(2, 4, nu).unwrap(), rat(n * (n * n + 3 * n + 2), 384));
    }
    for n in 8..=12i64 {
        let want = rat(35 * n.pow(3) - 63 * n * n + 37 * n - 9, 45360);
        assert_eq!(p_alpha_k_value(1, 8, n as u32).unwrap(), want);
    }
    assert!(p_alpha_k_value(1, 3, 5).is_err());
    // R_m ties back to J_{n,1}(m - 1/2)
    for (m, n) in [(0u32, 4u32), (1, 5), (2, 6)] {
        let alpha = n + 2 * m - 2;
        let pref = &c_beta((alpha * n) as i64).unwrap() * &c_beta(alpha as i64 - 1).unwrap().pow(n - 1);
        let want = pref.shift(2).scale(
            &(rm_value(m, n).unwrap() * rat(n as i64, 1) / Rational::from_integer(num_bigint::BigInt::from(alpha + 1).pow(n - 1))),
        );
        assert_eq!(bj_exact(n, 1, 2 * m as i64 - 1).unwrap(), want);
    }
}

fn alphas(n: u32, family: Family) -> Vec<u32> {
    match family {
        Family::Beta => ((n as i64 - 3).max(0) as u32..=(n + 3)).collect(),
        Family::BetaPrime => (1..=5).collect(),
    }
}

fn table(family: Family, n: u32, alpha: u32) -> Vec<PiNumber> {
    match family {
        Family::Beta => bj_table(n, alpha as i64 - n as i64 + 1),
        Family::BetaPrime => bjtilde_table(n, alpha as i64 + n as i64 - 1),
    }
    .unwrap()
    .exact_values()
    .unwrap()
}

#[test]
fn poincare_relations_hold_exactly() {
    for family in [Family::Beta, Family::BetaPrime] {
        for n in 2..=10u32 {
            for alpha in alphas(n, family) {
                let z = table(family, n, alpha);
                let at = |k: u32| if k == 0 { PiNumber::zero() } else { z[k as usize - 1].clone() };
                for m in 0..=n {
                    let mut s = PiNumber::zero();
                    for k in m..=n {
                        let t = at(k).scale(&binom_q(k as i64, m as i64));
                        if k % 2 == 0 { s += &t } else { s -= &t }
                    }
                    let rhs = if n % 2 == 0 { at(m) } else { -at(m) };
                    assert_eq!(s, rhs, "{family:?} n={n} alpha={alpha} m={m}");
                }
            }
        }
    }
}

#[test]
fn arithmetic_form_conformance() {
    for family in [Family::Beta, Family::BetaPrime] {
        for n in 2..=9u32 {
            for alpha in alphas(n, family) {
                for (i, v) in table(family, n, alpha).iter().enumerate() {
                    let k = i as u32 + 1;
                    assert!(arithmetic_form_ok(family, n, k, alpha, v), "{family:?} n={n} k={k} alpha={alpha}: {v}");
                }
            }
        }
    }
    assert!(arithmetic_form_ok(Family::Beta, 5, 2, 2, &p("1/3 * pi^-2")));
    assert!(!arithmetic_form_ok(Family::Beta, 5, 2, 2, &p("1/3 * pi^-2 + 1")));
}

#[test]
fn inversion_relations_hold_exactly() {
    for n in 2..=8u32 {
        for alpha in (n as i64 - 3).max(0) as u32..=(n + 2) {
            for k in 1..n {
                let mut s = PiNumber::zero();
                for m in k..=n {
                    let i = external_bi(n, m, alpha).unwrap();
                    let j = bj_exact(m, k, alpha as i64 - m as i64 + 1).unwrap();
                    let t = &i * &j;
                    if m % 2 == 0 { s += &t } else { s -= &t }
                }
                assert!(s.is_zero(), "beta n={n} k={k} alpha={alpha}: {s}");
            }
        }
        for alpha in 1..=4u32 {
            for k in 1..n {
                let mut s = PiNumber::zero();
                for m in k..=n {
                    let i = external_bi_tilde(n, m, alpha).unwrap();
                    let j = bjtilde_exact(m, k, alpha as i64 + m as i64 - 1).unwrap();
                    let t = &i * &j;
                    if m % 2 == 0 { s += &t } else { s -= &t }
                }
                assert!(s.is_zero(), "beta' n={n} k={k} alpha={alpha}: {s}");
            }
        }
    }
}

fn f0(alpha: u32) -> f64 {
    1.0 / (2.0 * c_beta(alpha as i64 - 1).unwrap().to_f64())
}

fn f0_tilde(alpha: u32) -> f64 {
    1.0 / (2.0 * c_tilde_beta(alpha as i64 + 1).unwrap().to_f64())
}

fn fact(r: u32) -> f64 {
    (1..=r).map(|j| j as f64).product()
}

#[test]
fn kronecker_relations() {
    for alpha in 1..=4u32 {
        let a = alpha as i64;
        for n in 1..=5u32 {
            for k in 1..=n {
                let (mut signed, mut unsigned) = (0.0, 0.0);
                for m in k..=n {
                    let b = external_lb(&rat(n as i64, 1), &rat(m as i64, 1), alpha).unwrap().to_f64();
                    let (nn, kn) = (a * m as i64 + 2, a * k as i64 + 2);
                    let av = match la_residue(nn, kn, alpha) {
                        Ok(v) => num_traits::ToPrimitive::to_f64(&v).unwrap(),
                        Err(_) => la_numeric(nn as f64 / a as f64, kn as f64 / a as f64, a as f64).unwrap(),
                    };
                    let t = b * (m as f64 + 1.0 / a as f64) * av;
                    signed += if (m - k) % 2 == 0 { t } else { -t };
                    unsigned += t;
                }
                let delta = if n == k { 1.0 } else { 0.0 };
                assert!((signed - delta).abs() < 1e-9, "alpha={alpha} n={n} k={k}: {signed}");
                let want = (2.0 * a as f64 * f0(alpha)).powi((n - k) as i32) / fact(n - k);
                assert!((unsigned - want).abs() < 1e-9 * want.max(1.0), "unsigned alpha={alpha} n={n} k={k}");
            }
        }
        for n in 1..=5u32 {
            for k in 1..=n {
                if alpha * k <= 1 {
                    continue;
                }
                let (mut signed, mut unsigned) = (0.0, 0.0);
                for m in k..=n {
                    let b = external_lb_tilde(&rat(n as i64, 1), &rat(m as i64, 1), alpha).unwrap().to_f64();
                    let (nn, kn) = (a * m as i64 - 2, a * k as i64 - 2);
                    let av = match la_tilde_residue(nn, kn, alpha) {
                        Ok(v) => num_traits::ToPrimitive::to_f64(&v).unwrap(),
                        Err(_) => la_tilde_numeric(nn as f64 / a as f64, kn as f64 / a as f64, a as f64).unwrap(),
                    };
                    let t = b * (m as f64 - 1.0 / a as f64) * av;
                    signed += if (m - k) % 2 == 0 { t } else { -t };
                    unsigned += t;
                }
                let delta = if n == k { 1.0 } else { 0.0 };
                assert!((signed - delta).abs() < 1e-9, "tilde alpha={alpha} n={n} k={k}: {signed}");
                let want = (2.0 * a as f64 * f0_tilde(alpha)).powi((n - k) as i32) / fact(n - k);
                assert!((unsigned - want).abs() < 1e-9 * want.max(1.0), "tilde unsigned alpha={alpha} n={n} k={k}");
            }
        }
    }
}

#[test]
fn kronecker_exact_where_admissible() {
    // beta side: only the diagonal term is admissible, which needs alpha k odd
    for alpha in [1u32, 3, 5] {
        let a = alpha as i64;
        for k in (1..=7u32).step_by(2) {
            let b = external_lb(&rat(k as i64, 1), &rat(k as i64, 1), alpha).unwrap();
            let av = la_residue(a * k as i64 + 2, a * k as i64 + 2, alpha).unwrap();
            let t = b.scale(&(av * (rat(k as i64, 1) + rat(1, a))));
            assert_eq!(t, PiNumber::one(), "alpha={alpha} k={k}");
        }
    }
    // beta' side: alpha k even makes every term admissible
    for alpha in 1..=4u32 {
        let a = alpha as i64;
        for n in 1..=6u32 {
            for k in (1..=n).filter(|k| (alpha * k) % 2 == 0 && alpha * k > 1) {
                let mut signed = PiNumber::zero();
                for m in k..=n {
                    let b = external_lb_tilde(&rat(n as i64, 1), &rat(m as i64, 1), alpha).unwrap();
                    let av = la_tilde_residue(a * m as i64 - 2, a * k as i64 - 2, alpha).unwrap();
                    let t = b.scale(&(av * (rat(m as i64, 1) - rat(1, a))));
                    if (m - k) % 2 == 0 { signed += &t } else { signed -= &t }
                }
                let want = if n == k { PiNumber::one() } else { PiNumber::zero() };
                assert_eq!(signed, want, "alpha={alpha} n={n} k={k}");
            }
        }
    }
}

#[test]
fn ugly_path_agrees_with_fill() {
    for n in 3..=8u32 {
        for alpha in (2..=(n + 3)).filter(|a| a % 2 == 0 && *a as i64 >= n as i64 - 3) {
            for k in (1..n).filter(|k| (n - k) % 2 == 0) {
                let fill = bj_exact(n, k, alpha as i64 - n as i64 + 1).unwrap();
                assert_eq!(bj_ugly(n, k, alpha).unwrap(), fill, "n={n} k={k} alpha={alpha}");
            }
        }
        for alpha in (1..=5u32).filter(|a| a % 2 == 1) {
            for k in (1..n).filter(|k| k % 2 == 1) {
                let fill = bjtilde_exact(n, k, alpha as i64 + n as i64 - 1).unwrap();
                assert_eq!(bjtilde_ugly(n, k, alpha).unwrap(), fill, "tilde n={n} k={k} alpha={alpha}");
            }
        }
    }
}

#[test]
fn numeric_agrees_with_exact_on_grid() {
    let mut cases = 0;
    for n in 3..=7u32 {
        for twice_beta in [-2i64, -1, 0, 1, 3] {
            if beta_alpha(n, twice_beta).is_err() {
                continue;
            }
            for k in [1u32, 2, n - 1] {
                let e = bj_exact(n, k, twice_beta).unwrap().to_f64();
                let x = bj_numeric(n, k, twice_beta as f64 / 2.0).unwrap();
                assert!((e - x).abs() <= 1e-8, "beta n={n} k={k} 2b={twice_beta}: {e} vs {x}");
                cases += 1;
            }
        }
        for alpha in 1..=3i64 {
            let tb = alpha + n as i64 - 1;
            for k in [1u32, 2] {
                let e = bjtilde_exact(n, k, tb).unwrap().to_f64();
                let x = bjtilde_numeric(n, k, tb as f64 / 2.0).unwrap();
                assert!((e - x).abs() <= 1e-8, "beta' n={n} k={k} 2b={tb}: {e} vs {x}");
                cases += 1;
            }
        }
    }
    assert!(cases >= 30);
}

#[test]
fn numeric_table_and_dispatch() {
    let t = angle_table(Family::Beta, 5, BetaParam::Real(0.37)).unwrap();
    assert!(t.entries.iter().all(|e| e.provenance == Provenance::Numeric));
    assert!((t.floats()[4] - 1.0).abs() < 1e-10);
    assert!((t.floats()[3] - 2.5).abs() < 1e-10);
    let t = angle_table(Family::BetaPrime, 4, BetaParam::HalfInteger(5)).unwrap();
    assert_eq!(t.get(2).unwrap().value.exact().unwrap(), &PiNumber::rational(rat(6, 5)));
}
