use crate::scalars::{binom_q, factorial, rat, Rational};
use num_traits::Zero;
use std::sync::{OnceLock, RwLock};

fn table() -> &'static RwLock<Vec<Rational>> {
    static T: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    T.get_or_init(|| RwLock::new(vec![rat(1, 1)]))
}

/// Bernoulli number B_m with B_1 = -1/2 (so B_2 = 1/6, B_4 = -1/30).
pub fn bernoulli(m: usize) -> Rational {
    if let Some(b) = table().read().unwrap().get(m) {
        return b.clone();
    }
    let mut t = table().write().unwrap();
    while t.len() <= m {
        let n = t.len();
        let mut acc = Rational::zero();
        for (j, b) in t.iter().enumerate() {
            acc += binom_q(n as i64 + 1, j as i64) * b;
        }
        t.push(-acc / rat(n as i64 + 1, 1));
    }
    t[m].clone()
}

fn fact_q(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

/// Coefficient of u^j in cot(u/2) = (2/u) sum_i (-1)^i B_{2i} u^{2i} / (2i)!.
pub fn cot_half_coeff(j: i64) -> Rational {
    if j < -1 || j % 2 == 0 {
        return Rational::zero();
    }
    let i = ((j + 1) / 2) as usize;
    let s = if i % 2 == 0 { 2 } else { -2 };
    rat(s, 1) * bernoulli(2 * i) / fact_q(2 * i)
}

/// Coefficient of u^j in tan(u/2) = -(2/u) sum_{i>=1} (-1)^i (4^i - 1) B_{2i} u^{2i} / (2i)!.
pub fn tan_half_coeff(j: i64) -> Rational {
    if j < 1 || j % 2 == 0 {
        return Rational::zero();
    }
    let i = ((j + 1) / 2) as usize;
    let s = if i % 2 == 0 { -2 } else { 2 };
    let w = Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(4), i)) - rat(1, 1);
    rat(s, 1) * w * bernoulli(2 * i) / fact_q(2 * i)
}
