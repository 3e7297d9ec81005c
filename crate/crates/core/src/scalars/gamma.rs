use super::{rat, PiNumber, Rational};
use crate::error::{domain, Result};
use num_traits::One;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Beta,
    BetaPrime,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Beta => "beta",
            Family::BetaPrime => "betaprime",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "beta" => Ok(Family::Beta),
            "betaprime" | "beta'" | "beta-prime" => Ok(Family::BetaPrime),
            _ => Err(crate::Error::Parse(format!("unknown family '{s}'"))),
        }
    }
}

/// Gamma(t/2) for a positive integer t.
pub fn gamma_half(t: i64) -> Result<PiNumber> {
    if t < 1 {
        return domain(format!("Gamma(t/2) needs t >= 1, got t = {t}"));
    }
    let mut q = Rational::one();
    if t % 2 == 0 {
        for j in 1..t / 2 {
            q *= rat(j, 1);
        }
        Ok(PiNumber::rational(q))
    } else {
        // Gamma(t/2) = prod_{j=1}^{(t-1)/2} (2j-1)/2 * sqrt(pi)
        for j in 1..=(t - 1) / 2 {
            q *= rat(2 * j - 1, 2);
        }
        Ok(PiNumber::monomial(q, 1))
    }
}

/// c_beta = Gamma(beta + 3/2) / (sqrt(pi) Gamma(beta + 1)), beta = twice_beta / 2.
pub fn c_beta(twice_beta: i64) -> Result<PiNumber> {
    if twice_beta <= -2 {
        return domain(format!("c_beta needs beta > -1, got beta = {twice_beta}/2"));
    }
    Ok(gamma_half(twice_beta + 3)?
        .div(&gamma_half(twice_beta + 2)?)?
        .shift(-1))
}

/// c~_beta = Gamma(beta) / (sqrt(pi) Gamma(beta - 1/2)), beta = twice_beta / 2.
pub fn c_tilde_beta(twice_beta: i64) -> Result<PiNumber> {
    if twice_beta <= 1 {
        return domain(format!("c~_beta needs beta > 1/2, got beta = {twice_beta}/2"));
    }
    Ok(gamma_half(twice_beta)?
        .div(&gamma_half(twice_beta - 1)?)?
        .shift(-1))
}

/// Density constant c_{d,beta} (beta family) or c~_{d,beta} (beta' family).
pub fn normalizing_constant(d: i64, twice_beta: i64, family: Family) -> Result<PiNumber> {
    if d < 1 {
        return domain("dimension must be positive");
    }
    let (num, den) = match family {
        Family::Beta => {
            if twice_beta <= -2 {
                return domain("beta family needs beta > -1");
            }
            (gamma_half(d + twice_beta + 2)?, gamma_half(twice_beta + 2)?)
        }
        Family::BetaPrime => {
            if twice_beta <= d {
                return domain("beta' family needs beta > d/2");
            }
            (gamma_half(twice_beta)?, gamma_half(twice_beta - d)?)
        }
    };
    Ok(num.div(&den)?.shift(-(d as i32)))
}
