use angleworks::quadrature::{inner_cumulative, outer_integral, CoshIntegrand};
use angleworks::Family;

#[test]
fn inner_cumulative_matches_closed_forms() {
    assert!((inner_cumulative(1.0, 1.0) - 1f64.sinh()).abs() < 1e-12 * 1f64.sinh());
    assert!((inner_cumulative(0.0, 2.5) - 2.5).abs() < 1e-13);
    // int_0^u cosh^2 = u/2 + sinh(2u)/4
    let u = 3.7f64;
    let exact = u / 2.0 + (2.0 * u).sinh() / 4.0;
    assert!((inner_cumulative(2.0, u) - exact).abs() < 1e-12 * exact);
    // int_0^u sech = 2 atan(tanh(u/2))
    let exact = 2.0 * (u / 2.0).tanh().atan();
    assert!((inner_cumulative(-1.0, u) - exact).abs() < 1e-12 * exact);
}

#[test]
fn outer_integral_golden_value() {
    let r = outer_integral(4, 1, 1.0, Family::Beta).unwrap();
    assert!((r.value - 0.125).abs() < 1e-10, "{r:?}");
    assert!(r.abs_error < 1e-10);
    assert!(r.evaluations > 0);
}

#[test]
fn top_face_is_one() {
    for &(n, a) in &[(3u32, 0.5f64), (4, 1.0), (5, 2.25), (7, 6.0)] {
        let r = outer_integral(n, n, a, Family::Beta).unwrap();
        assert!((r.value - 1.0).abs() < 1e-11, "beta n={n} a={a}: {r:?}");
        let r = outer_integral(n, n, a, Family::BetaPrime).unwrap();
        assert!((r.value - 1.0).abs() < 1e-11, "beta' n={n} a={a}: {r:?}");
    }
}

#[test]
fn triangle_angle_sum() {
    // angles of a triangle sum to pi, so three vertices carry 1/2 in total
    for &a in &[0.0f64, 0.5, 1.7, 3.0, 8.5] {
        let r = outer_integral(3, 1, a, Family::Beta).unwrap();
        assert!((r.value - 0.5).abs() < 1e-11, "beta a={a}: {r:?}");
    }
    for &a in &[0.6f64, 1.0, 2.5, 7.0] {
        let r = outer_integral(3, 1, a, Family::BetaPrime).unwrap();
        assert!((r.value - 0.5).abs() < 1e-11, "beta' a={a}: {r:?}");
    }
}

fn cases() -> Vec<CoshIntegrand> {
    let mut v = Vec::new();
    for &(p, q, c, m) in &[
        (6.0, 1.0, 0.5, 3u32),
        (10.0, 2.0, 0.4, 4),
        (22.0, 4.0, 0.3, 4),
        (7.5, 0.5, 0.6, 2),
        (3.0, 0.0, 0.5, 1),
        (14.0, 3.0, 0.35, 3),
        (9.0, -1.0, 0.7, 5),
        (30.0, 5.0, 0.3, 5),
        (5.0, 1.5, 0.5, 2),
        (12.0, 1.0, 0.5, 8),
    ] {
        v.push(CoshIntegrand { p, q, c, m, imaginary: true });
    }
    v
}

#[test]
fn doubling_the_horizon_is_within_the_estimate() {
    for integrand in cases() {
        let tol = 1e-12;
        let u = integrand.horizon_for(tol * 0.01).unwrap();
        let a = integrand.integrate_truncated(u, tol).unwrap();
        let b = integrand.integrate_truncated(2.0 * u, tol).unwrap();
        assert!(
            (a.value - b.value).abs() <= a.abs_error.max(b.abs_error),
            "{integrand:?}: {} vs {} (est {})",
            a.value,
            b.value,
            a.abs_error
        );
    }
}

#[test]
fn half_line_symmetry() {
    for integrand in cases() {
        let full = integrand.integrate(1e-12).unwrap();
        let half = integrand.integrate_half_line(1e-12).unwrap();
        assert!((full.value - half.value).abs() < 1e-11, "{integrand:?}");
        assert!(full.imag.abs() <= 1e-10 * full.value.abs().max(1e-12), "{integrand:?}: {full:?}");
    }
}

#[test]
fn non_decaying_integrand_is_rejected() {
    let integrand = CoshIntegrand { p: 2.0, q: 1.0, c: 0.5, m: 3, imaginary: true };
    assert!(integrand.integrate(1e-12).is_err());
}

#[test]
fn domain_errors() {
    assert!(outer_integral(4, 0, 1.0, Family::Beta).is_err());
    assert!(outer_integral(4, 5, 1.0, Family::Beta).is_err());
    assert!(outer_integral(6, 1, 1.0, Family::Beta).is_err());
    assert!(outer_integral(2, 1, 0.4, Family::BetaPrime).is_err());
}
