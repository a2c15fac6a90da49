//! Galois certification of cubics, the quadratic maps that cyclically permute
//! their roots, and coupled cubics.
//!
//! For a certified cubic `x^3 + ax^2 + bx + c` with discriminant `D = d^2`,
//! the quadratic
//!
//! ```text
//! q = (a^2 - 3b)/d' x^2 + (2a^3 + 9c - 7ab - d')/(2d') x + (a^2 b + 3ac - 4b^2 - a d')/(2d')
//! ```
//!
//! with `d' = ±d` sends each root to the next one in one of the two cyclic
//! orders. The cubic coupled to `p` through `q` is the remaining cubic factor
//! of `q(q(q(x))) - x` once `p` and `q(x) - x` are divided out.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, NotGaloisReason, Result};
use crate::exactmath::{int, is_rational_square, rat_sqrt, Rational};
use crate::poly::{MonicCubic, Poly};

/// Which square root of the discriminant divides in the permutation formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn apply(self, x: &Rational) -> Rational {
        match self {
            Sign::Plus => x.clone(),
            Sign::Minus => -x,
        }
    }

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Evidence that a cubic is Galois: irreducible with square discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisCert {
    poly: MonicCubic,
    discriminant: Rational,
    sqrt_disc: Rational,
}

impl GaloisCert {
    /// The monic normalization of the certified cubic.
    pub fn poly(&self) -> &MonicCubic {
        &self.poly
    }

    pub fn discriminant(&self) -> &Rational {
        &self.discriminant
    }

    /// The positive square root `d` of the discriminant.
    pub fn d(&self) -> &Rational {
        &self.sqrt_disc
    }
}

/// `alpha x^2 + beta x + gamma` with `alpha != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadMap {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl QuadMap {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        QuadMap { alpha, beta, gamma }
    }

    pub fn to_poly(&self) -> Poly {
        Poly::quadratic(self.alpha.clone(), self.beta.clone(), self.gamma.clone())
    }

    /// Reads a polynomial of degree at most two.
    pub fn from_poly(p: &Poly) -> Option<QuadMap> {
        (p.degree().unwrap_or(0) <= 2).then(|| QuadMap::new(p.coeff(2), p.coeff(1), p.coeff(0)))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        (&self.alpha * x + &self.beta) * x + &self.gamma
    }
}

impl fmt::Display for QuadMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt(f)
    }
}

/// Certifies that `p` (any nonzero leading coefficient) is a Galois cubic.
pub fn certify(p: &Poly) -> Result<GaloisCert> {
    let poly = p.to_monic_cubic()?;
    let discriminant = poly.discriminant();
    let not_galois = |r| Err(Error::NotGalois(r));
    if discriminant.is_zero() {
        return not_galois(NotGaloisReason::RepeatedRoots);
    }
    if !p.is_irreducible_cubic()? {
        return not_galois(NotGaloisReason::Reducible);
    }
    if !discriminant.is_positive() {
        return not_galois(NotGaloisReason::NonSquareDiscriminant);
    }
    let Ok(sqrt_disc) = rat_sqrt(&discriminant) else {
        return not_galois(NotGaloisReason::NonSquareDiscriminant);
    };
    if (&poly.a * &poly.a - int(3) * &poly.b).is_zero() {
        return not_galois(NotGaloisReason::DegenerateAlpha);
    }
    Ok(GaloisCert {
        poly,
        discriminant,
        sqrt_disc,
    })
}

fn perm_formula(m: &MonicCubic, d: &Rational) -> QuadMap {
    let (a, b, c) = (&m.a, &m.b, &m.c);
    let two_d = int(2) * d;
    let alpha = (a * a - int(3) * b) / d;
    let beta = (int(2) * a * a * a + int(9) * c - int(7) * a * b - d) / &two_d;
    let gamma = (a * a * b + int(3) * a * c - int(4) * b * b - a * d) / &two_d;
    QuadMap::new(alpha, beta, gamma)
}

/// The permutation quadratic for the divisor `sign * d`.
pub fn perm_poly(cert: &GaloisCert, sign: Sign) -> QuadMap {
    perm_formula(&cert.poly, &sign.apply(&cert.sqrt_disc))
}

/// Both permutation quadratics, `+` first.
pub fn perm_pair(cert: &GaloisCert) -> (QuadMap, QuadMap) {
    (perm_poly(cert, Sign::Plus), perm_poly(cert, Sign::Minus))
}

/// Both permutation quadratics of a cubic with distinct roots and square
/// discriminant, without the irreducibility check. A reducible cubic of this
/// kind has three rational roots, and the maps still cycle them.
pub fn perm_pair_unchecked(p: &Poly) -> Result<(QuadMap, QuadMap)> {
    let m = p.to_monic_cubic()?;
    let disc = m.discriminant();
    if disc.is_zero() {
        return Err(Error::RepeatedRoots);
    }
    let d = rat_sqrt(&disc).map_err(|_| Error::NotASquare(disc.clone()))?;
    Ok((perm_formula(&m, &d), perm_formula(&m, &-&d)))
}

/// Permutation quadratics of the representative `x^3 - ax - a` written in
/// terms of its characteristic number `k` (`4a - 27 = k^2`):
///
/// ```text
/// q1 =  3/k x^2 - (k + 9)/(2k) x - 2a/k
/// q2 = -3/k x^2 + (9 - k)/(2k) x + 2a/k
/// ```
///
/// `q1` is the `+` map (`d = ak`) and `q2` the `-` map.
pub fn perm_poly_rep(a: &Rational, k: &Rational) -> Result<(QuadMap, QuadMap)> {
    let lhs = int(4) * a - int(27);
    let rhs = k * k;
    if lhs != rhs || !k.is_positive() {
        return Err(Error::InconsistentPair {
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        });
    }
    let two_k = int(2) * k;
    let q1 = QuadMap::new(int(3) / k, -(k + int(9)) / &two_k, -(int(2) * a) / k);
    let q2 = QuadMap::new(-(int(3) / k), (int(9) - k) / &two_k, int(2) * a / k);
    Ok((q1, q2))
}

/// Whether `q` cyclically permutes the roots of the cubic `p`: `p` divides
/// `p(q(x))` and `q` is not the identity modulo `p`.
pub fn verify_permutes(p: &Poly, q: &QuadMap) -> bool {
    if p.degree() != Some(3) {
        return false;
    }
    let qp = q.to_poly();
    let stable = p
        .compose(&qp)
        .mod_reduce(p)
        .map(|r| r.is_zero())
        .unwrap_or(false);
    stable && qp.mod_reduce(p).map(|r| r != Poly::x()).unwrap_or(false)
}

/// The monic cubic whose roots `q` also permutes: `(q∘q∘q - x) / (p (q - x))`.
///
/// Reducible `p` with three distinct roots is accepted as long as `q` maps its
/// root set into itself.
pub fn coupled(p: &Poly, q: &QuadMap) -> Result<Poly> {
    p.require_degree(3)?;
    if !verify_permutes(p, q) {
        return Err(Error::NotPermuting);
    }
    let qp = q.to_poly();
    let s = &qp.compose(&qp.compose(&qp)) - &Poly::x();
    let divisor = &p.monic() * &(&qp - &Poly::x());
    let quotient = s.exact_div(&divisor)?.ok_or(Error::InexactDivision)?;
    if quotient.degree() != Some(3) {
        return Err(Error::InexactDivision);
    }
    let out = quotient.monic();
    let disc = out.to_monic_cubic()?.discriminant();
    if !is_rational_square(&disc) || disc.is_zero() {
        return Err(Error::NonSquareOutput(disc));
    }
    Ok(out)
}

/// Both cubics coupled to a Galois cubic `p`, in sign order `(+, -)`.
pub fn coupled_pair(p: &Poly) -> Result<(Poly, Poly)> {
    let cert = certify(p)?;
    let (qp, qm) = perm_pair(&cert);
    let monic = cert.poly.to_poly();
    Ok((coupled(&monic, &qp)?, coupled(&monic, &qm)?))
}

/// `q(q(x)) mod p`, the map permuting the roots in the opposite order.
pub fn square_mod(q: &QuadMap, p: &Poly) -> Result<QuadMap> {
    let qp = q.to_poly();
    let r = qp.compose(&qp).mod_reduce(p)?;
    QuadMap::from_poly(&r).ok_or_else(|| Error::Internal("remainder of degree > 2".into()))
}

impl QuadMap {
    /// The identity map `x`. Not a valid permutation map; used in checks.
    pub fn identity() -> QuadMap {
        QuadMap::new(Rational::zero(), Rational::one(), Rational::zero())
    }
}
