use crate::error::{Error, Result};
use crate::scalars::{factorial, rat, PiNumber, Rational};
use crate::series::bernoulli;
use num_bigint::BigInt;

fn ratio(k: u32, r: i64) -> Rational {
    // (k+r)! / ((r+1)! k!)
    Rational::new(factorial((k as i64 + r) as u64), factorial((r + 1) as u64) * factorial(k as u64))
}

/// Fill the missing entries of z_1..z_n (index k-1) from the Poincare
/// relations. Entries beyond n are 0 and z_0 = 0. Each missing z_k is
/// expressed through entries of the opposite class only.
pub fn poincare_fill(n: u32, partial: &[Option<PiNumber>]) -> Result<Vec<PiNumber>> {
    if partial.len() != n as usize {
        return Err(Error::Domain(format!("expected {n} entries, got {}", partial.len())));
    }
    let get = |j: i64| -> Result<PiNumber> {
        if j <= 0 || j > n as i64 {
            return Ok(PiNumber::zero());
        }
        partial[j as usize - 1]
            .clone()
            .ok_or_else(|| Error::Domain(format!("entry z_{j} is needed by the fill but missing")))
    };
    let mut out = Vec::with_capacity(n as usize);
    for k in 1..=n {
        if let Some(v) = &partial[k as usize - 1] {
            out.push(v.clone());
            continue;
        }
        let mut z = PiNumber::zero();
        if (n - k) % 2 == 0 {
            let mut r = -1i64;
            while k as i64 + r <= n as i64 {
                let w = bernoulli((r + 1) as usize) * ratio(k, r) * rat(2, 1);
                z += &get(k as i64 + r)?.scale(&w);
                r += 2;
            }
        } else {
            let mut r = 1i64;
            while k as i64 + r <= n as i64 {
                let pow = Rational::from_integer(BigInt::from(2).pow((r + 1) as u32) - 1);
                let w = bernoulli((r + 1) as usize) * ratio(k, r) * pow * rat(2, 1);
                z += &get(k as i64 + r)?.scale(&w);
                r += 2;
            }
        }
        out.push(z);
    }
    Ok(out)
}
