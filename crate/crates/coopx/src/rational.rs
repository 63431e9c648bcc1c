//! Exact rational scalars and their serialized form.
//!
//! All optimization values in this crate are exact `BigInt` rationals; floats
//! appear only in the final human-facing decimal rendering. Files carry both
//! the exact `{num, den}` pair and a fixed six-decimal string so downstream
//! tooling can choose precision or readability.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational used everywhere a fractional optimum or average appears.
pub type Rat = num_rational::BigRational;

/// `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num / den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Render with exactly six decimal places, rounding half away from zero.
///
/// Comparisons in the crate are always exact; this string exists only for
/// reports and CSV rows.
pub fn decimal6(r: &Rat) -> String {
    let scale = BigInt::from(1_000_000u32);
    let num = r.numer() * &scale;
    let den = r.denom(); // > 0 by BigRational normalization
    let (mut q, rem) = num_integer::Integer::div_rem(&num, den);
    // round half away from zero
    let twice = rem.abs() * BigInt::from(2u8);
    if twice >= *den {
        if num.is_negative() {
            q -= 1;
        } else {
            q += 1;
        }
    }
    let neg = q.is_negative();
    let q = q.abs();
    let (int_part, frac_part) = num_integer::Integer::div_rem(&q, &scale);
    format!(
        "{}{}.{:06}",
        if neg { "-" } else { "" },
        int_part,
        frac_part.to_u64().expect("six decimal digits fit in u64")
    )
}

/// Serialized rational: exact pair plus the six-decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    pub num: i64,
    pub den: i64,
    pub decimal: String,
}

impl JsonRational {
    pub fn from_rat(r: &Rat) -> Result<Self> {
        let num = r.numer().to_i64().ok_or(Error::RationalOverflow)?;
        let den = r.denom().to_i64().ok_or(Error::RationalOverflow)?;
        Ok(JsonRational {
            num,
            den,
            decimal: decimal6(r),
        })
    }

    pub fn to_rat(&self) -> Rat {
        rat(self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rendering_rounds_half_away_from_zero() {
        assert_eq!(decimal6(&rat(4, 3)), "1.333333");
        assert_eq!(decimal6(&rat(2, 3)), "0.666667");
        assert_eq!(decimal6(&rat(-2, 3)), "-0.666667");
        assert_eq!(decimal6(&rat(1, 2)), "0.500000");
        assert_eq!(decimal6(&rat_int(7)), "7.000000");
        // exactly half of the last digit: 0.0000005 -> 0.000001
        assert_eq!(decimal6(&rat(1, 2_000_000)), "0.000001");
    }

    #[test]
    fn json_round_trip_is_exact() {
        let r = rat(22, 7);
        let j = JsonRational::from_rat(&r).unwrap();
        assert_eq!(j.num, 22);
        assert_eq!(j.den, 7);
        assert_eq!(j.to_rat(), r);
    }
}
