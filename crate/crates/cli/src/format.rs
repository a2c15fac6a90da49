use cyclic_cubic::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Parses a positive count written as digits or as `1e12`.
pub fn parse_count(s: &str) -> Result<u64, String> {
    let bad = || format!("expected a positive integer such as 1000000 or 1e12, found {s:?}");
    let n = match s.split_once(['e', 'E']) {
        Some((mantissa, exp)) => {
            let m: u64 = mantissa.parse().map_err(|_| bad())?;
            let e: u32 = exp.parse().map_err(|_| bad())?;
            10u64
                .checked_pow(e)
                .and_then(|p| p.checked_mul(m))
                .ok_or_else(bad)?
        }
        None => s.parse().map_err(|_| bad())?,
    };
    if n == 0 {
        return Err(bad());
    }
    Ok(n)
}

/// `x` rounded half away from zero to `digits` places after the point.
pub fn decimal(x: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + Rational::new(1.into(), 2.into()))
        .floor()
        .to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{frac:0>digits$}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclic_cubic::exactmath::rat;

    #[test]
    fn counts() {
        assert_eq!(parse_count("1e12"), Ok(1_000_000_000_000));
        assert_eq!(parse_count("250"), Ok(250));
        assert_eq!(parse_count("5e2"), Ok(500));
        assert!(parse_count("0").is_err());
        assert!(parse_count("1e40").is_err());
        assert!(parse_count("ten").is_err());
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(&rat(1, 3), 4), "0.3333");
        assert_eq!(decimal(&rat(2, 3), 4), "0.6667");
        assert_eq!(decimal(&rat(-7, 2), 2), "-3.50");
        assert_eq!(decimal(&rat(-1, 1000), 2), "0.00");
        assert_eq!(decimal(&rat(123, 1), 0), "123");
        assert_eq!(decimal(&rat(1, 100), 3), "0.010");
    }
}
