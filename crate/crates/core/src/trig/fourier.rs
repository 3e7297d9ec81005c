use crate::scalars::{binom_q, rat, PiNumber, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Cos,
    Sin,
}

/// Finite sum of q * x^j * cos(m x) and q * x^j * sin(m x) with rational q.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FourierPoly {
    terms: BTreeMap<(u32, u32, Kind), Rational>,
}

impl FourierPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(q: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, Kind::Cos, q);
        p
    }

    pub fn term(j: u32, m: u32, kind: Kind, q: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(j, m, kind, q);
        p
    }

    pub fn add_term(&mut self, j: u32, m: u32, kind: Kind, q: Rational) {
        if q.is_zero() || (kind == Kind::Sin && m == 0) {
            return;
        }
        let e = self.terms.entry((j, m, kind)).or_insert_with(Rational::zero);
        *e += q;
        if e.is_zero() {
            self.terms.remove(&(j, m, kind));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32, Kind), &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((j, m, k), q) in other.terms() {
            out.add_term(j, m, k, q.clone());
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero();
        for ((j, m, k), c) in self.terms() {
            out.add_term(j, m, k, c * q);
        }
        out
    }

    /// Product via the product-to-sum identities.
    pub fn mul(&self, other: &Self) -> Self {
        let half = rat(1, 2);
        let mut out = Self::zero();
        for (&(j1, m1, k1), q1) in &self.terms {
            for (&(j2, m2, k2), q2) in &other.terms {
                let j = j1 + j2;
                let q = q1 * q2 * &half;
                let (sum, diff) = (m1 + m2, m1.abs_diff(m2));
                match (k1, k2) {
                    (Kind::Cos, Kind::Cos) => {
                        out.add_term(j, diff, Kind::Cos, q.clone());
                        out.add_term(j, sum, Kind::Cos, q);
                    }
                    (Kind::Sin, Kind::Sin) => {
                        out.add_term(j, diff, Kind::Cos, q.clone());
                        out.add_term(j, sum, Kind::Cos, -q);
                    }
                    (Kind::Sin, Kind::Cos) | (Kind::Cos, Kind::Sin) => {
                        // sin(a) cos(b) = (sin(a+b) + sin(a-b)) / 2
                        let (a, b) = if k1 == Kind::Sin { (m1, m2) } else { (m2, m1) };
                        out.add_term(j, sum, Kind::Sin, q.clone());
                        if a >= b {
                            out.add_term(j, a - b, Kind::Sin, q);
                        } else {
                            out.add_term(j, b - a, Kind::Sin, -q);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, p: u32) -> Self {
        let mut acc = Self::constant(Rational::one());
        for _ in 0..p {
            acc = acc.mul(self);
        }
        acc
    }

    /// Is the function odd in x (every term x^j cos with j odd or x^j sin with j even)?
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|&(j, _, k)| match k {
            Kind::Cos => j % 2 == 1,
            Kind::Sin => j % 2 == 0,
        })
    }

    /// Value at x = -pi/2.
    pub fn eval_at_minus_half_pi(&self) -> PiNumber {
        let mut out = PiNumber::zero();
        for (&(j, m, k), q) in &self.terms {
            let trig = match k {
                Kind::Cos => cos_half_pi(m),
                Kind::Sin => -sin_half_pi(m),
            };
            if trig == 0 {
                continue;
            }
            let sign = if j % 2 == 0 { trig } else { -trig };
            let c = q * rat(sign as i64, 1) / Rational::from_integer(BigInt::from(2).pow(j));
            out += &PiNumber::monomial(c, 2 * j as i32);
        }
        out
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(&(j, m, k), q)| {
                let t = match k {
                    Kind::Cos => (m as f64 * x).cos(),
                    Kind::Sin => (m as f64 * x).sin(),
                };
                q.to_f64().unwrap() * x.powi(j as i32) * t
            })
            .sum()
    }
}

fn cos_half_pi(m: u32) -> i32 {
    match m % 4 {
        0 => 1,
        2 => -1,
        _ => 0,
    }
}

fn sin_half_pi(m: u32) -> i32 {
    match m % 4 {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// cos(x)^a as a sum of cos(m x), m <= a, m = a mod 2.
pub fn cos_power_fourier(a: u32) -> FourierPoly {
    let mut out = FourierPoly::zero();
    let scale = Rational::new(BigInt::one(), BigInt::from(2).pow(a));
    for j in 0..=a {
        let m = (a as i64 - 2 * j as i64).unsigned_abs() as u32;
        out.add_term(0, m, Kind::Cos, binom_q(a as i64, j as i64) * &scale);
    }
    out
}

/// Antiderivative of one term q x^j T(m x), with zero constant, built by parts.
fn term_antiderivative(j: u32, m: u32, kind: Kind, q: &Rational, out: &mut FourierPoly) {
    if m == 0 {
        // kind is Cos here
        out.add_term(j + 1, 0, Kind::Cos, q / rat(j as i64 + 1, 1));
        return;
    }
    let mm = rat(m as i64, 1);
    match kind {
        // int x^j cos = x^j sin / m - (j/m) int x^(j-1) sin
        Kind::Cos => {
            out.add_term(j, m, Kind::Sin, q / &mm);
            if j > 0 {
                let q2 = -(q * rat(j as i64, 1) / &mm);
                term_antiderivative(j - 1, m, Kind::Sin, &q2, out);
            }
        }
        // int x^j sin = -x^j cos / m + (j/m) int x^(j-1) cos
        Kind::Sin => {
            out.add_term(j, m, Kind::Cos, -(q / &mm));
            if j > 0 {
                let q2 = q * rat(j as i64, 1) / &mm;
                term_antiderivative(j - 1, m, Kind::Cos, &q2, out);
            }
        }
    }
}

/// Antiderivative vanishing at -pi/2, returned as (FourierPoly, PiNumber constant).
pub fn fourier_antiderivative(p: &FourierPoly) -> (FourierPoly, PiNumber) {
    let mut anti = FourierPoly::zero();
    for ((j, m, k), q) in p.terms() {
        term_antiderivative(j, m, k, q, &mut anti);
    }
    let c = -anti.eval_at_minus_half_pi();
    (anti, c)
}

fn cache() -> &'static RwLock<HashMap<(u32, u32, Kind), PiNumber>> {
    static C: OnceLock<RwLock<HashMap<(u32, u32, Kind), PiNumber>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// int_{-pi/2}^{pi/2} x^j T(m x) dx.
fn base_integral(j: u32, m: u32, kind: Kind) -> PiNumber {
    if let Some(v) = cache().read().unwrap().get(&(j, m, kind)) {
        return v.clone();
    }
    let v = compute_base(j, m, kind);
    cache().write().unwrap().insert((j, m, kind), v.clone());
    v
}

fn compute_base(j: u32, m: u32, kind: Kind) -> PiNumber {
    // (pi/2)^j as a PiNumber
    let half_pi_pow = |j: u32| {
        PiNumber::monomial(
            Rational::new(BigInt::one(), BigInt::from(2).pow(j)),
            2 * j as i32,
        )
    };
    if m == 0 {
        return match kind {
            Kind::Sin => PiNumber::zero(),
            Kind::Cos if j % 2 == 1 => PiNumber::zero(),
            Kind::Cos => half_pi_pow(j + 1).scale(&rat(2, j as i64 + 1)),
        };
    }
    let mm = rat(m as i64, 1);
    match kind {
        Kind::Cos => {
            // [x^j sin(mx)/m] - (j/m) S(j-1)
            let mut v = if j % 2 == 0 {
                half_pi_pow(j).scale(&(rat(2 * sin_half_pi(m) as i64, 1) / &mm))
            } else {
                PiNumber::zero()
            };
            if j > 0 {
                v -= &base_integral(j - 1, m, Kind::Sin).scale(&(rat(j as i64, 1) / &mm));
            }
            v
        }
        Kind::Sin => {
            // [-x^j cos(mx)/m] + (j/m) C(j-1)
            let mut v = if j % 2 == 1 {
                half_pi_pow(j).scale(&(rat(-2 * cos_half_pi(m) as i64, 1) / &mm))
            } else {
                PiNumber::zero()
            };
            if j > 0 {
                v += &base_integral(j - 1, m, Kind::Cos).scale(&(rat(j as i64, 1) / &mm));
            }
            v
        }
    }
}

/// Exact integral over [-pi/2, pi/2].
pub fn integrate_symmetric(p: &FourierPoly) -> PiNumber {
    let mut out = PiNumber::zero();
    for ((j, m, k), q) in p.terms() {
        let b = base_integral(j, m, k);
        if !b.is_zero() {
            out += &b.scale(q);
        }
    }
    out
}

/// Exact integral over [-pi/2, pi/2] of weight * (poly + constant)^r, expanded
/// binomially so the pi-valued constant stays outside the Fourier algebra.
pub fn integrate_power_with_constant(
    weight: &FourierPoly,
    poly: &FourierPoly,
    constant: &PiNumber,
    r: u32,
) -> PiNumber {
    let mut total = PiNumber::zero();
    let mut acc = weight.clone();
    for i in 0..=r {
        if i > 0 {
            acc = acc.mul(poly);
        }
        let integral = integrate_symmetric(&acc);
        if integral.is_zero() {
            continue;
        }
        let c = constant.pow(r - i).scale(&binom_q(r as i64, i as i64));
        total += &(&integral * &c);
    }
    total
}
