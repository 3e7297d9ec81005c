use super::{cot_half_coeff, residue_over_sin_power, tan_half_coeff, LaurentSeries};
use crate::error::{Error, Result};
use crate::scalars::{factorial, PiNumber, Rational};
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UglyVariant {
    /// sin(u c G(x)) / tan(u/2)
    SinOverTan,
    /// cos(u c G(x)) / cot(u/2)
    CosOverCot,
}

/// [u^a x^-1] of sin(u c G) cot(u/2) / sin(x)^M (or cos(u c G) tan(u/2) / sin(x)^M).
///
/// Expanding sin/cos in powers of u c G leaves a finite sum over r of
/// Bernoulli weights times c^r Res[G^r / sin^M].
pub fn ugly_coefficient(
    g: &LaurentSeries,
    c: &PiNumber,
    m: i64,
    a: i64,
    variant: UglyVariant,
) -> Result<PiNumber> {
    if g.valuation() < 1 && !g.is_zero() {
        return Err(Error::Series("G must vanish at 0".into()));
    }
    if a < 0 || m < 1 {
        return Err(Error::Domain("need a >= 0 and M >= 1".into()));
    }
    let (r_start, r_end) = match variant {
        // cot(u/2) starts at u^-1, so r runs up to a + 1
        UglyVariant::SinOverTan => (1, a + 1),
        // tan(u/2) starts at u^1
        UglyVariant::CosOverCot => (0, a - 1),
    };
    let mut total = PiNumber::zero();
    let mut r = r_start;
    while r <= r_end {
        let weight = match variant {
            UglyVariant::SinOverTan => cot_half_coeff(a - r),
            UglyVariant::CosOverCot => tan_half_coeff(a - r),
        };
        if !weight.is_zero() {
            let gr = if r == 0 {
                LaurentSeries::monomial(Rational::from_integer(1.into()), 0, m + 1)
            } else {
                g.int_power(r)?
            };
            // the numerator must be known through x^(M-1) unless it already vanishes there
            if gr.valuation() < m && gr.order() < m {
                return Err(Error::Series(format!(
                    "G known below x^{} is too short to resolve the residue for r = {r}",
                    g.order()
                )));
            }
            let res = residue_over_sin_power(&gr, m)?;
            if !res.is_zero() {
                let sign = if (r / 2) % 2 == 0 { 1 } else { -1 };
                let q = weight * res * Rational::from_integer(sign.into())
                    / Rational::from_integer(factorial(r as u64));
                total += &c.pow(r as u32).scale(&q);
            }
        }
        r += 2;
    }
    Ok(total)
}
