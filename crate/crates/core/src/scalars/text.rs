//! Canonical text form, e.g. "539/288 * pi^-2 - 1/6".

use super::{PiNumber, Rational};
use crate::error::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

fn pi_factor(e: i32) -> String {
    if e % 2 == 0 {
        match e / 2 {
            1 => "pi".to_string(),
            k => format!("pi^{k}"),
        }
    } else {
        format!("pi^({e}/2)")
    }
}

fn abs_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().abs().to_string()
    } else {
        format!("{}/{}", q.numer().abs(), q.denom())
    }
}

impl fmt::Display for PiNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, q)) in self.terms().enumerate() {
            let neg = q.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let body = if e == 0 {
                abs_rational(q)
            } else if q.abs().is_one() {
                pi_factor(e)
            } else {
                format!("{} * {}", abs_rational(q), pi_factor(e))
            };
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

impl PiNumber {
    /// LaTeX rendering of the canonical form.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, q)) in self.terms().enumerate() {
            let neg = q.is_negative();
            out.push_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let coef = if q.denom().is_one() {
                q.numer().abs().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
            };
            let pi = if e == 0 {
                String::new()
            } else if e == 2 {
                "\\pi".into()
            } else if e % 2 == 0 {
                format!("\\pi^{{{}}}", e / 2)
            } else {
                format!("\\pi^{{{}/2}}", e)
            };
            if e == 0 {
                out.push_str(&coef);
            } else if q.abs().is_one() {
                out.push_str(&pi);
            } else {
                out.push_str(&coef);
                out.push_str(&pi);
            }
        }
        out
    }
}

fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().map_err(|_| bad())?;
            let b: BigInt = b.parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(a, b))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_exponent(s: &str) -> Result<i32, Error> {
    let bad = || Error::Parse(format!("bad pi exponent '{s}'"));
    let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    let q = parse_rational(inner)?;
    let doubled = q * Rational::from_integer(BigInt::from(2));
    if !doubled.denom().is_one() {
        return Err(bad());
    }
    doubled.numer().try_into().map_err(|_| bad())
}

fn parse_term(t: &str) -> Result<(i32, Rational), Error> {
    let (coef, pi) = match t.find("pi") {
        None => (t, None),
        Some(pos) => (t[..pos].trim_end_matches('*'), Some(&t[pos + 2..])),
    };
    let q = if coef.is_empty() {
        Rational::one()
    } else {
        parse_rational(coef)?
    };
    let e = match pi {
        None => 0,
        Some("") => 2,
        Some(rest) => {
            let exp = rest
                .strip_prefix('^')
                .ok_or_else(|| Error::Parse(format!("bad term '{t}'")))?;
            parse_exponent(exp)?
        }
    };
    Ok((e, q))
}

impl std::str::FromStr for PiNumber {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty value".into()));
        }
        let bytes = compact.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        let mut depth = 0;
        for i in 0..bytes.len() {
            match bytes[i] {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if i > 0 && depth == 0 && bytes[i - 1] != b'^' => {
                    terms.push(&compact[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        terms.push(&compact[start..]);
        let mut out = PiNumber::zero();
        for t in terms {
            let (neg, body) = match t.as_bytes()[0] {
                b'-' => (true, &t[1..]),
                b'+' => (false, &t[1..]),
                _ => (false, t),
            };
            let (e, q) = parse_term(body)?;
            out += &PiNumber::monomial(if neg { -q } else { q }, e);
        }
        Ok(out)
    }
}
