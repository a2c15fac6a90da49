//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; its `Display` form is `p/q`, or just `p` when the
//! denominator is one. Everything else in the crate is built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/1`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den`, reduced. Panics on a zero denominator; use only with literals.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rat: zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact quotient, reporting a zero divisor instead of panicking.
pub fn checked_div(num: &Rational, den: &Rational) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(num / den)
}

/// Floor of the square root of a nonnegative integer, by Newton iteration.
///
/// Panics if `n` is negative.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative integer");
    if n < &BigInt::from(2) {
        return n.clone();
    }
    // Start above the root so the iteration decreases monotonically.
    let mut x = BigInt::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

/// The nonnegative rational `r` with `r * r == x`.
pub fn rat_sqrt(x: &Rational) -> Result<Rational> {
    if x.is_negative() {
        return Err(Error::NegativeInput(x.clone()));
    }
    // Lowest terms: x is a square iff numerator and denominator both are.
    match (exact_isqrt(x.numer()), exact_isqrt(x.denom())) {
        (Some(n), Some(d)) => Ok(Rational::new(n, d)),
        _ => Err(Error::NotASquare(x.clone())),
    }
}

/// Whether `x` is the square of a rational.
pub fn is_rational_square(x: &Rational) -> bool {
    rat_sqrt(x).is_ok()
}

/// Last continued-fraction convergent of `x` whose denominator is at most
/// `max_den` (which must be at least one).
pub fn best_convergent(x: &Rational, max_den: &BigInt) -> Rational {
    assert!(max_den >= &BigInt::one(), "max_den must be at least 1");
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let mut best = x.floor();
    let mut rem = x.clone();
    loop {
        let a = rem.floor().to_integer();
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        if &k_next > max_den {
            break;
        }
        best = Rational::new(h_next.clone(), k_next.clone());
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        let frac = &rem - Rational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rem = frac.recip();
    }
    best
}

/// Recovers a fraction from a floating approximation: the last convergent of
/// the exact binary value of `x` with denominator at most `max_den`.
///
/// Non-finite inputs map to zero.
pub fn rationalize(x: f64, max_den: u64) -> Rational {
    let Some(exact) = Rational::from_float(x) else {
        return Rational::zero();
    };
    best_convergent(&exact, &BigInt::from(max_den.max(1)))
}

/// Nearest `f64` to `x`.
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// `|x|` as an integer ceiling, used for root bounds.
pub fn ceil_abs(x: &Rational) -> BigInt {
    x.abs().ceil().to_integer()
}

/// Positive divisors of `n` (which must be nonzero), by trial division.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "divisors of zero");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let co = &n / &d;
            if co != d {
                large.push(co);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_square_discriminant() {
        assert_eq!(rat_sqrt(&int(81)).unwrap(), int(9));
    }

    #[test]
    fn sqrt_of_fraction() {
        // Oracle: brute-force integer roots of 729 and 25.
        let brute = |n: u64| (0..=n).find(|r| r * r == n);
        assert_eq!(brute(729), Some(27));
        assert_eq!(brute(25), Some(5));
        assert_eq!(rat_sqrt(&rat(729, 25)).unwrap(), rat(27, 5));
    }

    #[test]
    fn sqrt_errors() {
        assert_eq!(rat_sqrt(&int(2)), Err(Error::NotASquare(int(2))));
        assert_eq!(rat_sqrt(&rat(4, 3)), Err(Error::NotASquare(rat(4, 3))));
        assert_eq!(rat_sqrt(&int(-4)), Err(Error::NegativeInput(int(-4))));
        assert_eq!(rat_sqrt(&int(0)).unwrap(), int(0));
    }

    #[test]
    fn isqrt_matches_brute_force() {
        for n in 0u64..2000 {
            let expected = (0..=n).take_while(|r| r * r <= n).last().unwrap();
            assert_eq!(isqrt(&BigInt::from(n)), BigInt::from(expected), "n = {n}");
        }
        let big = BigInt::from(10).pow(40) + 1;
        let r = isqrt(&big);
        assert!(&r * &r <= big && (&r + 1) * (&r + 1) > big);
    }

    #[test]
    fn rationalize_examples() {
        assert_eq!(rationalize(0.5, 10), rat(1, 2));
        assert_eq!(rationalize(0.3333333333, 100), rat(1, 3));
        assert_eq!(rationalize(-1.9999999, 10), int(-2));
        assert_eq!(rationalize(3.0, 1), int(3));
        assert_eq!(rationalize(f64::NAN, 10), int(0));
    }

    #[test]
    fn convergent_of_exact_rational() {
        let x = rat(355, 113);
        assert_eq!(best_convergent(&x, &BigInt::from(1000)), x);
        assert_eq!(best_convergent(&x, &BigInt::from(100)), rat(22, 7));
        assert_eq!(best_convergent(&rat(-7, 2), &BigInt::from(1)), int(-4));
    }

    #[test]
    fn divisors_small() {
        let ds: Vec<i64> = divisors(&BigInt::from(-12))
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect();
        assert_eq!(ds, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&BigInt::from(49)).len(), 3);
    }

    #[test]
    fn checked_division() {
        assert_eq!(checked_div(&int(1), &int(0)), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&int(1), &int(4)).unwrap(), rat(1, 4));
    }

    #[test]
    fn display_form() {
        assert_eq!(rat(-6, 4).to_string(), "-3/2");
        assert_eq!(int(9).to_string(), "9");
        assert_eq!(rat(0, 5).to_string(), "0");
    }
}
