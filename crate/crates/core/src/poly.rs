//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{best_convergent, checked_div, divisors, int, Rational};
use crate::isolate;

/// Dense polynomial, coefficients in ascending degree.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Poly::new(coeffs)
    }

    /// From ascending coefficients; trailing zeros are stripped.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// From descending coefficients, the order people write them in.
    pub fn from_descending(coeffs: Vec<Rational>) -> Self {
        let mut coeffs = coeffs;
        coeffs.reverse();
        Poly::new(coeffs)
    }

    /// From descending integer coefficients.
    pub fn from_ints(desc: &[i64]) -> Self {
        Poly::from_descending(desc.iter().map(|&c| int(c)).collect())
    }

    /// `alpha x^2 + beta x + gamma`.
    pub fn quadratic(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Poly::new(vec![gamma, beta, alpha])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Degree, with `None` standing for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree rendered for messages: `-inf` for the zero polynomial.
    pub fn degree_label(&self) -> String {
        self.degree()
            .map_or_else(|| "-inf".to_string(), |d| d.to_string())
    }

    pub(crate) fn require_degree(&self, expected: usize) -> Result<()> {
        if self.degree() == Some(expected) {
            Ok(())
        } else {
            Err(Error::WrongDegree {
                expected,
                found: self.degree_label(),
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + crate::exactmath::to_f64(c))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Euclidean division: `self = q * g + r` with `deg r < deg g`.
    pub fn divrem(&self, g: &Poly) -> Result<(Poly, Poly)> {
        let Some(dg) = g.degree() else {
            return Err(Error::DivisionByZeroPoly);
        };
        let lc = g.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dg)];
        while rem.len() > dg {
            let top = rem.len() - 1;
            let c = checked_div(&rem[top], &lc)?;
            let shift = top - dg;
            for (i, gc) in g.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * gc;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Remainder of `self` modulo `m`.
    pub fn mod_reduce(&self, m: &Poly) -> Result<Poly> {
        Ok(self.divrem(m)?.1)
    }

    /// Exact quotient, or `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divrem(g)?;
        Ok(r.is_zero().then_some(q))
    }

    /// `self(g(x))`, by Horner's scheme in the outer polynomial.
    pub fn compose(&self, g: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * g) + &Poly::constant(c.clone())
        })
    }

    /// `self(alpha x + beta)`.
    pub fn affine_sub(&self, alpha: &Rational, beta: &Rational) -> Result<Poly> {
        if alpha.is_zero() {
            return Err(Error::DegenerateAffine);
        }
        Ok(self.compose(&Poly::new(vec![beta.clone(), alpha.clone()])))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.mod_reduce(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.divrem(&g).expect("gcd is nonzero");
        q.monic()
    }

    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient. Returns ascending integer coefficients.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    /// All distinct rational roots, in ascending order.
    ///
    /// Small inputs use the classical candidate test: after clearing
    /// denominators, every root is `±u/v` with `u` dividing the constant term
    /// and `v` dividing the leading term. When those terms are too large to
    /// factor by trial division, real roots are isolated exactly and each
    /// continued-fraction convergent with admissible denominator is tested.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        // Strip the factor x^m so the constant term is nonzero.
        if p.coeff(0).is_zero() {
            roots.push(Rational::zero());
            let shift = p.coeffs.iter().take_while(|c| c.is_zero()).count();
            p = Poly::new(p.coeffs[shift..].to_vec());
        }
        if p.degree().unwrap_or(0) > 0 {
            let ints = p.primitive_integer();
            let constant = ints.first().expect("nonzero").clone();
            let lead = ints.last().expect("nonzero").clone();
            let found = if constant.abs() <= trial_division_limit()
                && lead.abs() <= trial_division_limit()
            {
                rational_roots_by_divisors(&p, &constant, &lead)
            } else {
                rational_roots_by_isolation(&p, &lead)
            };
            roots.extend(found);
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    /// Degree-3 irreducibility criterion: no rational root.
    pub fn is_irreducible_cubic(&self) -> Result<bool> {
        self.require_degree(3)?;
        Ok(self.rational_roots()?.is_empty())
    }

    /// The monic cubic `self / leading`, when `self` has degree three.
    pub fn to_monic_cubic(&self) -> Result<MonicCubic> {
        self.require_degree(3)?;
        let m = self.monic();
        Ok(MonicCubic {
            a: m.coeff(2),
            b: m.coeff(1),
            c: m.coeff(0),
        })
    }

    /// Whether `self` and `other` differ by a nonzero scalar factor.
    pub fn is_scalar_multiple_of(&self, other: &Poly) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => self.monic() == other.monic(),
            _ => false,
        }
    }
}

// Divisor enumeration costs about sqrt(limit) trial divisions per term.
fn trial_division_limit() -> BigInt {
    BigInt::from(10u64.pow(12))
}

fn rational_roots_by_divisors(p: &Poly, constant: &BigInt, lead: &BigInt) -> Vec<Rational> {
    let nums = divisors(constant);
    let dens = divisors(lead);
    let mut roots = Vec::new();
    for u in &nums {
        for v in &dens {
            for sign in [1, -1] {
                let cand = Rational::new(u * sign, v.clone());
                if p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

fn rational_roots_by_isolation(p: &Poly, lead: &BigInt) -> Vec<Rational> {
    let sf = p.squarefree_part();
    let lead = lead.abs();
    // A root u/v has v <= |lead|; within 1/(2 lead^2) it must be a
    // convergent of any approximation.
    let two_l2 = Rational::from_integer(&lead * &lead * 2);
    let eps = two_l2.recip();
    let mut roots = Vec::new();
    for (lo, hi) in isolate::isolate_real_roots(&sf, &eps) {
        let mid = (&lo + &hi) / int(2);
        for cand in convergents_up_to(&mid, &lead) {
            if cand > lo && cand < hi && p.eval(&cand).is_zero() {
                roots.push(cand);
            }
        }
    }
    roots
}

fn convergents_up_to(x: &Rational, max_den: &BigInt) -> Vec<Rational> {
    let mut out = vec![x.floor(), x.ceil()];
    let mut bound = max_den.clone();
    // Walk down from the last admissible convergent by shrinking the bound.
    loop {
        let c = best_convergent(x, &bound);
        let den = c.denom().clone();
        out.push(c);
        if den.is_one() {
            break;
        }
        bound = den - 1;
    }
    out
}

/// The cubic `x^3 + a x^2 + b x + c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonicCubic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl MonicCubic {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        MonicCubic { a, b, c }
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(vec![
            self.c.clone(),
            self.b.clone(),
            self.a.clone(),
            Rational::one(),
        ])
    }

    /// `18abc - 4a^3 c + a^2 b^2 - 4b^3 - 27c^2`.
    pub fn discriminant(&self) -> Rational {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        int(18) * a * b * c - int(4) * a * a * a * c + a * a * b * b
            - int(4) * b * b * b
            - int(27) * c * c
    }

    /// `(P, Q)` with `p(x - a/3) = x^3 + P x + Q`.
    pub fn depress(&self) -> (Rational, Rational) {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let p = b - a * a / int(3);
        let q = c - a * b / int(3) + int(2) * a * a * a / int(27);
        (p, q)
    }
}

impl From<MonicCubic> for Poly {
    fn from(m: MonicCubic) -> Poly {
        m.to_poly()
    }
}

impl TryFrom<&Poly> for MonicCubic {
    type Error = Error;

    /// Only accepts polynomials that are already monic of degree three.
    fn try_from(p: &Poly) -> Result<MonicCubic> {
        p.require_degree(3)?;
        if !p.leading().is_one() {
            return Err(Error::WrongDegree {
                expected: 3,
                found: format!("3 (leading coefficient {})", p.leading()),
            });
        }
        p.to_monic_cubic()
    }
}

pub fn discriminant_cubic(p: &MonicCubic) -> Rational {
    p.discriminant()
}

pub fn depress(p: &MonicCubic) -> (Rational, Rational) {
    p.depress()
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Canonical expression form, e.g. `x^3 - 343/36*x - 343/36`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn p(desc: &[i64]) -> Poly {
        Poly::from_ints(desc)
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::new(vec![int(0), int(0)]), Poly::zero());
        assert_eq!(p(&[0, 0, 5]).degree(), Some(0));
        assert_eq!(Poly::zero().degree_label(), "-inf");
    }

    #[test]
    fn divrem_difference_of_squares() {
        let (q, r) = p(&[1, 0, -1]).divrem(&p(&[1, -1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_lower_degree() {
        let (q, r) = Poly::x().divrem(&p(&[1, 0, 0])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, Poly::x());
    }

    #[test]
    fn divrem_by_zero() {
        assert_eq!(
            Poly::x().divrem(&Poly::zero()),
            Err(Error::DivisionByZeroPoly)
        );
        assert_eq!(
            Poly::x().mod_reduce(&Poly::zero()),
            Err(Error::DivisionByZeroPoly)
        );
    }

    #[test]
    fn degree_eight_product_divisible() {
        let f = &(&p(&[1, 0, -3, 1]) * &p(&[-1, -2, 2])) * &p(&[1, 2, -3, -5]);
        assert_eq!(f.degree(), Some(8));
        assert!(f.mod_reduce(&p(&[1, 0, -3, 1])).unwrap().is_zero());
    }

    #[test]
    fn compose_matches_convolution_oracle() {
        // Oracle: (x^2 - 2)^2 - 2 by explicit coefficient convolution.
        let g = [-2i64, 0, 1];
        let mut sq = [0i64; 5];
        for (i, a) in g.iter().enumerate() {
            for (j, b) in g.iter().enumerate() {
                sq[i + j] += a * b;
            }
        }
        sq[0] -= 2;
        assert_eq!(sq, [2, 0, -4, 0, 1]);
        let q = p(&[1, 0, -2]);
        assert_eq!(q.compose(&q), p(&[1, 0, -4, 0, 2]));
        assert_eq!(q.compose(&Poly::x()), q);
    }

    #[test]
    fn composition_modulo_cubic() {
        let cubic = p(&[1, 0, -3, 1]);
        let q1 = p(&[-1, -1, 2]);
        let q2 = p(&[1, 0, -2]);
        assert_eq!(q1.compose(&q1).mod_reduce(&cubic).unwrap(), q2);
        assert_eq!(q2.compose(&q2).mod_reduce(&cubic).unwrap(), q1);
        assert!(p(&[1, 0, 0, 0])
            .mod_reduce(&p(&[1, 0, 0, 0]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn discriminants() {
        let d = |desc: &[i64]| p(desc).to_monic_cubic().unwrap().discriminant();
        assert_eq!(d(&[1, 0, -3, 1]), int(81));
        assert_eq!(d(&[1, 2, -3, -5]), int(169));
        assert_eq!(d(&[1, 1, -2, -1]), int(49));
        assert_eq!(d(&[1, 0, -27, -27]), int(59049));
        assert_eq!(d(&[1, 0, 1, 1]), int(-31));
    }

    #[test]
    fn affine_substitution() {
        let cube = p(&[1, 0, 0, 0]);
        assert_eq!(
            cube.affine_sub(&int(1), &int(-1)).unwrap(),
            p(&[1, -3, 3, -1])
        );
        let rep = p(&[1, 0, -27, -27]);
        let got = rep.affine_sub(&int(3), &int(0)).unwrap();
        // Oracle: pointwise evaluation of rep(3x) against 27x^3 - 81x - 27.
        for t in -3..=3 {
            let t = int(t);
            assert_eq!(got.eval(&t), rep.eval(&(int(3) * &t)));
        }
        assert_eq!(got, p(&[27, 0, -81, -27]));
        assert_eq!(rep.affine_sub(&int(1), &int(0)).unwrap(), rep);
        assert_eq!(
            rep.affine_sub(&int(0), &int(1)),
            Err(Error::DegenerateAffine)
        );
    }

    #[test]
    fn rational_roots_examples() {
        let rep = Poly::from_descending(vec![int(1), int(0), rat(-343, 36), rat(-343, 36)]);
        assert_eq!(
            rep.rational_roots().unwrap(),
            vec![rat(-7, 3), rat(-7, 6), rat(7, 2)]
        );
        assert!(p(&[1, 0, -3, 1]).rational_roots().unwrap().is_empty());
        assert_eq!(
            p(&[1, 0, -1]).rational_roots().unwrap(),
            vec![int(-1), int(1)]
        );
        assert_eq!(
            p(&[1, 0, -1, 0]).rational_roots().unwrap(),
            vec![int(-1), int(0), int(1)]
        );
        assert_eq!(
            Poly::zero().rational_roots(),
            Err(Error::DivisionByZeroPoly)
        );
    }

    #[test]
    fn rational_roots_large_coefficients() {
        // (12345678901 x - 98765432101)(x^2 - 3), beyond the trial-division limit.
        let big = Poly::from_descending(vec![
            Rational::from_integer(BigInt::from(12_345_678_901_234i64)),
            Rational::from_integer(BigInt::from(-98_765_432_101_999i64)),
        ]);
        let f = &big * &p(&[1, 0, -3]);
        let roots = f.rational_roots().unwrap();
        assert_eq!(
            roots,
            vec![Rational::new(
                BigInt::from(98_765_432_101_999i64),
                BigInt::from(12_345_678_901_234i64)
            )]
        );
        let irreducible = &Poly::constant(Rational::from_integer(BigInt::from(10).pow(15) + 7))
            * &p(&[1, 0, -3, 1]);
        assert!(irreducible.rational_roots().unwrap().is_empty());
    }

    #[test]
    fn irreducibility() {
        assert!(p(&[1, 0, -3, 1]).is_irreducible_cubic().unwrap());
        let rep = Poly::from_descending(vec![int(1), int(0), rat(-343, 36), rat(-343, 36)]);
        assert!(!rep.is_irreducible_cubic().unwrap());
        assert!(p(&[1458, -7301, -6930, 49763])
            .is_irreducible_cubic()
            .unwrap());
        assert!(p(&[1458, -7371, -6930, 49763])
            .is_irreducible_cubic()
            .unwrap());
        assert!(matches!(
            p(&[1, 0, 1]).is_irreducible_cubic(),
            Err(Error::WrongDegree { expected: 3, .. })
        ));
    }

    #[test]
    fn depress_examples() {
        let dep = |desc: &[i64]| p(desc).to_monic_cubic().unwrap().depress();
        assert_eq!(dep(&[1, 0, -3, 1]), (int(-3), int(1)));
        assert_eq!(dep(&[1, 1, -2, -1]), (rat(-7, 3), rat(-7, 27)));
        assert_eq!(dep(&[1, 2, -3, -5]), (rat(-13, 3), rat(-65, 27)));
        // Oracle: evaluate p(x - a/3) pointwise.
        let f = p(&[1, 2, -3, -5]);
        for t in -4..=4 {
            let t = int(t);
            let lhs = f.eval(&(&t - rat(2, 3)));
            let rhs = &t * &t * &t + rat(-13, 3) * &t + rat(-65, 27);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p(&[1, 0, -3, 1]).to_string(), "x^3 - 3*x + 1");
        assert_eq!(p(&[-1, -1, 2]).to_string(), "-x^2 - x + 2");
        let rep = Poly::from_descending(vec![int(1), int(0), rat(-343, 36), rat(-343, 36)]);
        assert_eq!(rep.to_string(), "x^3 - 343/36*x - 343/36");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(
            Poly::quadratic(rat(1, 3), int(-1), int(-6)).to_string(),
            "1/3*x^2 - x - 6"
        );
    }

    #[test]
    fn monic_cubic_conversion() {
        let f = p(&[2, 4, -6, -10]);
        let m = f.to_monic_cubic().unwrap();
        assert_eq!(m.to_poly(), p(&[1, 2, -3, -5]));
        assert!(MonicCubic::try_from(&f).is_err());
        assert_eq!(MonicCubic::try_from(&m.to_poly()).unwrap(), m);
    }

    mod search_paths {
        use super::*;
        use proptest::prelude::*;

        fn sorted(mut v: Vec<Rational>) -> Vec<Rational> {
            v.sort();
            v.dedup();
            v
        }

        proptest! {
            #[test]
            fn divisor_and_isolation_paths_agree(
                roots in prop::collection::vec((-40i64..40, 1i64..12), 1..4),
                extra in prop::collection::vec(-9i64..9, 1..4),
            ) {
                prop_assume!(extra[0] != 0);
                let mut p = Poly::from_ints(&extra);
                for (u, v) in &roots {
                    p = &p * &Poly::from_ints(&[*v, -*u]);
                }
                prop_assume!(!p.coeff(0).is_zero());
                let ints = p.primitive_integer();
                let (constant, lead) = (ints[0].clone(), ints.last().unwrap().clone());
                let by_divisors = sorted(rational_roots_by_divisors(&p, &constant, &lead));
                let by_isolation = sorted(rational_roots_by_isolation(&p, &lead));
                prop_assert_eq!(&by_divisors, &by_isolation);
                for (u, v) in &roots {
                    if *u != 0 {
                        prop_assert!(by_divisors.contains(&rat(*u, *v)));
                    }
                }
            }
        }
    }
}
