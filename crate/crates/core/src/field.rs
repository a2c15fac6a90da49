//! Real roots of Galois cubics and a bounded decision procedure for whether
//! two of them generate the same field.
//!
//! Two cyclic cubics `f` and `p` share a field exactly when a root of `p` is a
//! rational polynomial `g` (of degree at most two) in a root of `f`. The
//! search for `g` matches roots numerically under each of the six orderings,
//! lifts the coefficients to rationals with bounded denominators and accepts
//! a candidate only if `p(g(x)) mod f` vanishes exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{best_convergent, int, to_f64, Rational};
use crate::galois::{certify, QuadMap};
use crate::isolate;
use crate::poly::Poly;

/// Default denominator bound for lifting root-expression coefficients.
pub const DEFAULT_MAX_DEN: u64 = 1_000_000_000_000;

/// Isolating intervals of the three real roots of a cubic, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct RootTriple {
    pub intervals: [(Rational, Rational); 3],
    /// Interval midpoints as floats.
    pub approx: [f64; 3],
}

impl RootTriple {
    pub fn midpoints(&self) -> [Rational; 3] {
        self.intervals.clone().map(|(lo, hi)| (lo + hi) / int(2))
    }
}

/// Isolates the three real roots of `p` to intervals of width at most `eps`.
pub fn real_roots(p: &Poly, eps: &Rational) -> Result<RootTriple> {
    let m = p.to_monic_cubic()?;
    let disc = m.discriminant();
    if !disc.is_positive() {
        return Err(Error::NotThreeRealRoots(disc));
    }
    if !eps.is_positive() {
        return Err(Error::Internal(format!(
            "precision must be positive, got {eps}"
        )));
    }
    let ivs = isolate::isolate_real_roots(&m.to_poly(), eps);
    let intervals: [(Rational, Rational); 3] = ivs
        .try_into()
        .map_err(|v: Vec<_>| Error::Internal(format!("isolated {} roots, expected 3", v.len())))?;
    let approx = intervals
        .clone()
        .map(|(lo, hi)| to_f64(&((lo + hi) / int(2))));
    Ok(RootTriple { intervals, approx })
}

const ORDERINGS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 2, 0],
    [2, 0, 1],
    [0, 2, 1],
    [2, 1, 0],
    [1, 0, 2],
];

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Solves `c0 + c1 r_i + c2 r_i^2 = s_i` by Cramer's rule.
fn interpolate(r: &[Rational; 3], s: &[Rational; 3]) -> Option<[Rational; 3]> {
    let vander = |i: usize| [Rational::one(), r[i].clone(), &r[i] * &r[i]];
    let v = [vander(0), vander(1), vander(2)];
    let det = det3(&v);
    if det.is_zero() {
        return None;
    }
    let mut out: [Rational; 3] = Default::default();
    for (col, slot) in out.iter_mut().enumerate() {
        let mut m = v.clone();
        for row in 0..3 {
            m[row][col] = s[row].clone();
        }
        *slot = det3(&m) / &det;
    }
    Some(out)
}

/// A quadratic `g` with `p(g(x)) = 0 mod f`, i.e. a root of `p` written in
/// terms of a root of `f`, if one exists with coefficient denominators at
/// most `max_den`.
pub fn root_expression(f: &Poly, p: &Poly, max_den: u64) -> Result<Option<QuadMap>> {
    let f = certify(f)?.poly().to_poly();
    let p = certify(p)?.poly().to_poly();
    let bound = BigInt::from(max_den.max(1));
    // Convergent recovery of u/v needs an error below 1/(2 v^2); leave a wide
    // margin for the conditioning of the Vandermonde system.
    let eps = Rational::new(BigInt::one(), (BigInt::one() << 64u32) * &bound * &bound);
    let rf = real_roots(&f, &eps)?.midpoints();
    let rp = real_roots(&p, &eps)?.midpoints();
    for order in ORDERINGS {
        let targets = order.map(|j| rp[j].clone());
        let Some(coeffs) = interpolate(&rf, &targets) else {
            continue;
        };
        let [c0, c1, c2] = coeffs.map(|c| best_convergent(&c, &bound));
        let g = Poly::quadratic(c2, c1, c0);
        if p.compose(&g).mod_reduce(&f)?.is_zero() {
            return Ok(QuadMap::from_poly(&g));
        }
    }
    Ok(None)
}

/// Which way the verified expression goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// A root of the second cubic as a polynomial in a root of the first.
    SecondInFirst,
    /// A root of the first cubic as a polynomial in a root of the second.
    FirstInSecond,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldStatus {
    Verified(Direction),
    AbsentAtBound(u64),
}

impl fmt::Display for FieldStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldStatus::Verified(Direction::SecondInFirst) => {
                f.write_str("verified (second in terms of first)")
            }
            FieldStatus::Verified(Direction::FirstInSecond) => {
                f.write_str("verified (first in terms of second)")
            }
            FieldStatus::AbsentAtBound(b) => write!(f, "absent at bound {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldComparison {
    pub same: bool,
    pub status: FieldStatus,
    pub expression: Option<QuadMap>,
}

/// Whether two Galois cubics generate the same field, decided up to the
/// denominator bound: `false` means no expression was found at that bound.
pub fn same_field(f: &Poly, p: &Poly, max_den: u64) -> Result<FieldComparison> {
    for (dir, (a, b)) in [
        (Direction::SecondInFirst, (f, p)),
        (Direction::FirstInSecond, (p, f)),
    ] {
        if let Some(g) = root_expression(a, b, max_den)? {
            return Ok(FieldComparison {
                same: true,
                status: FieldStatus::Verified(dir),
                expression: Some(g),
            });
        }
    }
    Ok(FieldComparison {
        same: false,
        status: FieldStatus::AbsentAtBound(max_den),
        expression: None,
    })
}

/// `t = 27 (y^2 + 2187y + 1594323)^3 / (y^3 - 4782969y - 3486784401)^2`,
/// parametrizing representatives `x^3 - tx - t` in the field of
/// `x^3 - 3x + 1` (2187 = 3^7, 1594323 = 3^13, 4782969 = 3^14,
/// 3486784401 = 3^20).
pub fn family_t(y: &Rational) -> Result<Rational> {
    let num = y * y + int(2187) * y + int(1_594_323);
    let den = family_denominator(y);
    if den.is_zero() {
        return Err(Error::PoleOfFamily(y.clone()));
    }
    Ok(int(27) * &num * &num * &num / (&den * &den))
}

fn family_denominator(y: &Rational) -> Rational {
    y * y * y - int(4_782_969) * y - int(3_486_784_401)
}

/// The denominator of [`family_t`] as a polynomial in `y`.
pub fn family_pole_poly() -> Poly {
    Poly::from_ints(&[1, 0, -4_782_969, -3_486_784_401])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn base() -> Poly {
        Poly::from_ints(&[1, 0, -3, 1])
    }

    #[test]
    fn roots_of_base_cubic() {
        let eps = rat(1, 1_000_000_000);
        let roots = real_roots(&base(), &eps).unwrap();
        // Oracle: trigonometric roots 2cos(2*pi*j/9 + ...) of x^3 - 3x + 1.
        let mut trig: Vec<f64> = (0..3)
            .map(|j| 2.0 * ((2.0 * std::f64::consts::PI * (3 * j + 1) as f64) / 9.0).cos())
            .collect();
        trig.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (i, (lo, hi)) in roots.intervals.iter().enumerate() {
            assert!(hi - lo <= eps);
            assert!((base().eval(lo) * base().eval(hi)).is_negative());
            assert!((roots.approx[i] - trig[i]).abs() < 1e-8);
        }
        let expected = [-1.879385, 0.347296, 1.532089];
        for (got, want) in roots.approx.iter().zip(expected) {
            assert!((got - want).abs() < 1e-6);
        }
    }

    #[test]
    fn roots_of_reducible_representative() {
        let rep = Poly::from_descending(vec![int(1), int(0), rat(-343, 36), rat(-343, 36)]);
        let roots = real_roots(&rep, &rat(1, 1000)).unwrap();
        let exact = [rat(-7, 3), rat(-7, 6), rat(7, 2)];
        for ((lo, hi), r) in roots.intervals.iter().zip(exact) {
            assert!(lo < &r && &r < hi);
        }
    }

    #[test]
    fn complex_roots_rejected() {
        assert_eq!(
            real_roots(&Poly::from_ints(&[1, 0, -1, -1]), &rat(1, 100)),
            Err(Error::NotThreeRealRoots(int(-23)))
        );
    }

    #[test]
    fn expression_for_itself() {
        let g = root_expression(&base(), &base(), DEFAULT_MAX_DEN)
            .unwrap()
            .unwrap();
        assert!(base()
            .compose(&g.to_poly())
            .mod_reduce(&base())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn coupled_fields_differ() {
        for other in [[1, 2, -3, -5], [1, 1, -2, -1]] {
            let other = Poly::from_ints(&other);
            assert_eq!(
                root_expression(&base(), &other, DEFAULT_MAX_DEN).unwrap(),
                None
            );
            let cmp = same_field(&base(), &other, DEFAULT_MAX_DEN).unwrap();
            assert!(!cmp.same);
            assert_eq!(cmp.status, FieldStatus::AbsentAtBound(DEFAULT_MAX_DEN));
        }
        let cmp = same_field(
            &Poly::from_ints(&[1, 2, -3, -5]),
            &Poly::from_ints(&[1, 1, -2, -1]),
            DEFAULT_MAX_DEN,
        )
        .unwrap();
        assert!(!cmp.same);
    }

    #[test]
    fn same_field_after_affine_change() {
        let moved = base().affine_sub(&int(2), &int(1)).unwrap();
        let cmp = same_field(&base(), &moved, DEFAULT_MAX_DEN).unwrap();
        assert!(cmp.same);
        assert_eq!(cmp.status, FieldStatus::Verified(Direction::SecondInFirst));
        let g = cmp.expression.unwrap().to_poly();
        assert!(moved.compose(&g).mod_reduce(&base()).unwrap().is_zero());
    }

    #[test]
    fn family_at_zero() {
        // 1594323 = 3^13 and 3486784401 = 3^20, so t = 27 * 3^39 / 3^40 = 9.
        assert_eq!(BigInt::from(3).pow(13), BigInt::from(1_594_323));
        assert_eq!(BigInt::from(3).pow(20), BigInt::from(3_486_784_401u64));
        assert_eq!(family_t(&int(0)).unwrap(), int(9));
        let p = Poly::from_ints(&[1, 0, -9, -9]);
        assert_eq!(p.to_monic_cubic().unwrap().discriminant(), int(729));
        assert!(p.is_irreducible_cubic().unwrap());
        let g = root_expression(&base(), &p, DEFAULT_MAX_DEN).unwrap();
        assert!(g.is_some());
    }

    #[test]
    fn family_has_no_rational_pole() {
        assert!(family_pole_poly().rational_roots().unwrap().is_empty());
        for y in -50..=50 {
            assert!(family_t(&int(y)).is_ok());
        }
    }

    #[test]
    fn rejects_non_galois_inputs() {
        assert!(root_expression(&base(), &Poly::from_ints(&[1, 0, 1, 1]), 100).is_err());
    }
}
