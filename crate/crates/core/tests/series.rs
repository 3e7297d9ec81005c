use angleworks::scalars::{rat, Rational};
use angleworks::series::{
    bernoulli, cos_series, cot_half_coeff, residue_over_sin_power, sin_power, tan_half_coeff,
    ugly_coefficient, x_over_sin_power, LaurentSeries, UglyVariant,
};
use angleworks::PiNumber;
use proptest::prelude::*;

fn poly(v: i64, cs: &[(i64, i64)]) -> LaurentSeries {
    LaurentSeries::new(v, cs.iter().map(|&(n, d)| rat(n, d)).collect())
}

#[test]
fn sin_power_examples() {
    let s1 = sin_power(1, 6).unwrap();
    assert_eq!(s1, poly(1, &[(1, 1), (0, 1), (-1, 6), (0, 1), (1, 120)]));
    let s0 = sin_power(0, 5).unwrap();
    assert_eq!(s0, poly(0, &[(1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]));
    let s2 = sin_power(2, 7).unwrap();
    assert_eq!(s2, poly(2, &[(1, 1), (0, 1), (-1, 3), (0, 1), (2, 45)]));
    assert_eq!(s2.valuation(), 2);
    assert!(sin_power(3, 3).is_err());
}

#[test]
fn multiply_examples() {
    let x = LaurentSeries::monomial(rat(1, 1), 1, 5);
    let xi = LaurentSeries::monomial(rat(1, 1), -1, 3);
    let p = x.multiply(&xi);
    assert_eq!(p.coefficient(0).unwrap(), rat(1, 1));
    assert_eq!(p.valuation(), 0);
    let a = poly(0, &[(1, 1), (1, 1), (0, 1), (0, 1)]);
    let b = poly(0, &[(1, 1), (-1, 1), (0, 1), (0, 1)]);
    assert_eq!(a.multiply(&b), poly(0, &[(1, 1), (0, 1), (-1, 1), (0, 1)]));
    for a in 0..6 {
        for b in 0..6 {
            let order = 16;
            let prod = sin_power(a, order).unwrap().multiply(&sin_power(b, order).unwrap());
            let direct = sin_power(a + b, prod.order()).unwrap();
            assert_eq!(prod, direct, "a={a} b={b}");
        }
    }
}

#[test]
fn int_power_examples() {
    let x = LaurentSeries::monomial(rat(1, 1), 1, 6);
    let xi = x.int_power(-1).unwrap();
    assert_eq!(xi.valuation(), -1);
    assert_eq!(xi.coefficient(-1).unwrap(), rat(1, 1));
    let onep = poly(0, &[(1, 1), (1, 1), (0, 1), (0, 1)]);
    assert_eq!(onep.int_power(2).unwrap(), poly(0, &[(1, 1), (2, 1), (1, 1), (0, 1)]));
    // sin^-3 cos^-3 has residue 2
    let s = sin_power(1, 8).unwrap().int_power(-3).unwrap();
    let c = cos_series(8).int_power(-3).unwrap();
    assert_eq!(s.multiply(&c).residue().unwrap(), rat(2, 1));
    assert!(LaurentSeries::zero(4).int_power(-1).is_err());
}

#[test]
fn antiderivative_examples() {
    let one = LaurentSeries::monomial(rat(1, 1), 0, 4);
    let x = one.antiderivative_from_zero().unwrap();
    assert_eq!(x.valuation(), 1);
    assert_eq!(x.coefficient(1).unwrap(), rat(1, 1));
    let g1 = sin_power(1, 7).unwrap().antiderivative_from_zero().unwrap();
    assert_eq!(g1.coefficient(2).unwrap(), rat(1, 2));
    assert_eq!(g1.coefficient(4).unwrap(), rat(-1, 24));
    let g2 = sin_power(2, 7).unwrap().antiderivative_from_zero().unwrap();
    assert_eq!(g2.coefficient(3).unwrap(), rat(1, 3));
    assert_eq!(g2.coefficient(5).unwrap(), rat(-1, 15));
    let neg = LaurentSeries::monomial(rat(1, 1), -2, 3);
    assert!(neg.antiderivative_from_zero().is_err());
}

#[test]
fn residue_examples() {
    let xi = LaurentSeries::monomial(rat(1, 1), -1, 2);
    assert_eq!(xi.residue().unwrap(), rat(1, 1));
    assert_eq!(sin_power(2, 6).unwrap().residue().unwrap(), rat(0, 1));
    let s = sin_power(1, 8).unwrap().int_power(-3).unwrap();
    let c = cos_series(8).int_power(-3).unwrap();
    assert_eq!(s.multiply(&c).residue().unwrap(), rat(2, 1));
    let short = LaurentSeries::monomial(rat(1, 1), -4, -2);
    assert!(short.residue().is_err());
}

#[test]
fn coefficient_examples() {
    let u = x_over_sin_power(3, 6).unwrap();
    assert_eq!(u.coefficient(2).unwrap(), rat(1, 2));
    assert_eq!(u.coefficient(0).unwrap(), rat(1, 1));
    // [x^4](x/sin x)^5 against the product formula for d = 4, l = 0:
    // E f_0(Z_4) = pi^4 [x^4](x/sin x)^5 = pi^4/4! [x^4] (1+x^2)(1+9x^2)
    let u5 = x_over_sin_power(5, 6).unwrap();
    assert_eq!(u5.coefficient(4).unwrap() * rat(24, 1), rat(9, 1));
    assert!(u5.coefficient(6).is_err());
}

#[test]
fn curious_residue_identity() {
    // Res[sin^{-2k-1} cos^{-2d-1}] = C(d+k, k)
    for d in 0..=6i64 {
        for k in 0..=6i64 {
            let order = 2 * k + 4;
            let s = sin_power(1, order).unwrap().int_power(-(2 * k + 1)).unwrap();
            let c = cos_series(order + 2 * k + 2).int_power(-(2 * d + 1)).unwrap();
            let r = s.multiply(&c).residue().unwrap();
            assert_eq!(r, angleworks::scalars::binom_q(d + k, k), "d={d} k={k}");
        }
    }
}

#[test]
fn bernoulli_values() {
    assert_eq!(bernoulli(0), rat(1, 1));
    assert_eq!(bernoulli(1), rat(-1, 2));
    assert_eq!(bernoulli(2), rat(1, 6));
    assert_eq!(bernoulli(4), rat(-1, 30));
    assert_eq!(bernoulli(12), rat(-691, 2730));
    assert_eq!(bernoulli(7), rat(0, 1));
    // cot(u/2) = 2/u - u/6 - u^3/360 ...
    assert_eq!(cot_half_coeff(-1), rat(2, 1));
    assert_eq!(cot_half_coeff(1), rat(-1, 6));
    assert_eq!(cot_half_coeff(3), rat(-1, 360));
    // tan(u/2) = u/2 + u^3/24 + u^5/240 ...
    assert_eq!(tan_half_coeff(1), rat(1, 2));
    assert_eq!(tan_half_coeff(3), rat(1, 24));
    assert_eq!(tan_half_coeff(5), rat(1, 240));
}

#[test]
fn ugly_a_zero_is_single_residue() {
    // a = 0: only r = 1 with the 2/u term of cot(u/2)
    let g = sin_power(2, 30).unwrap().antiderivative_from_zero().unwrap();
    let c = PiNumber::monomial(rat(1, 2), 0);
    for m in [3i64, 4, 7, 8] {
        let v = ugly_coefficient(&g, &c, m, 0, UglyVariant::SinOverTan).unwrap();
        let direct = residue_over_sin_power(&g, m).unwrap();
        assert_eq!(v, PiNumber::rational(direct * rat(1, 1)), "M={m}");
        // G odd: G / sin^M is an even function for odd M, so no x^-1 term
        if m % 2 == 1 {
            assert!(v.is_zero());
        }
    }
    let short = sin_power(2, 5).unwrap().antiderivative_from_zero().unwrap();
    assert!(ugly_coefficient(&short, &c, 20, 2, UglyVariant::SinOverTan).is_err());
}

fn arb_unit() -> impl Strategy<Value = LaurentSeries> {
    (prop::collection::vec((-9i64..9, 1i64..6), 1..8), -3i64..3).prop_map(|(cs, v)| {
        let mut coeffs: Vec<Rational> = cs.into_iter().map(|(n, d)| rat(n, d)).collect();
        if coeffs[0] == rat(0, 1) {
            coeffs[0] = rat(1, 1);
        }
        LaurentSeries::new(v, coeffs)
    })
}

proptest! {
    #[test]
    fn power_times_inverse_is_one(s in arb_unit(), p in 1i64..6) {
        let a = s.int_power(p).unwrap();
        let b = s.int_power(-p).unwrap();
        let prod = a.multiply(&b);
        prop_assert_eq!(prod.valuation(), 0);
        for j in 0..prod.order() {
            let expect = if j == 0 { rat(1, 1) } else { rat(0, 1) };
            prop_assert_eq!(prod.coefficient(j).unwrap(), expect);
        }
    }

    #[test]
    fn derivative_has_no_residue(s in arb_unit()) {
        let d = s.derivative();
        if d.order() > -1 {
            prop_assert_eq!(d.residue().unwrap(), rat(0, 1));
        }
    }

    #[test]
    fn antiderivative_inverts_derivative(s in arb_unit()) {
        prop_assume!(s.valuation() >= 0);
        let back = s.antiderivative_from_zero().unwrap().derivative();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn power_matches_repeated_product(s in arb_unit(), p in 1i64..5) {
        let mut acc = s.clone();
        for _ in 1..p {
            acc = acc.multiply(&s);
        }
        prop_assert_eq!(s.int_power(p).unwrap(), acc);
    }
}
