//! Classes of cubics under affine changes of variable, their representatives
//! `x^3 - ax - a` and characteristic numbers `k` with `4a - 27 = k^2`.
//!
//! Two cubics are equivalent when `r = c * p(alpha x + beta)` for nonzero
//! `c` and `alpha`; the scalar keeps the representative monic.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{checked_div, int, rat_sqrt, Rational};
use crate::galois::QuadMap;
use crate::poly::Poly;

/// The representative `x^3 - ax - a` together with its characteristic number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassRep {
    a: Rational,
    k: Rational,
}

impl ClassRep {
    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn poly(&self) -> Poly {
        rep_poly(&self.a)
    }
}

/// `x^3 - ax - a`.
pub fn rep_poly(a: &Rational) -> Poly {
    Poly::new(vec![
        -a.clone(),
        -a.clone(),
        Rational::zero(),
        Rational::one(),
    ])
}

/// `scale * source(alpha x + beta) = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWitness {
    pub alpha: Rational,
    pub beta: Rational,
    pub scale: Rational,
}

impl AffineWitness {
    pub fn identity() -> Self {
        AffineWitness {
            alpha: Rational::one(),
            beta: Rational::zero(),
            scale: Rational::one(),
        }
    }

    pub fn apply(&self, source: &Poly) -> Result<Poly> {
        Ok(source
            .affine_sub(&self.alpha, &self.beta)?
            .scale(&self.scale))
    }

    pub fn is_identity(&self) -> bool {
        *self == AffineWitness::identity()
    }
}

/// The coefficient `a` of the representative `x^3 - ax - a` in the class of
/// `p`, with the witness mapping `p` onto it. Works for any cubic with
/// distinct roots whose depressed form has both terms.
pub fn normal_form(p: &Poly) -> Result<(Rational, AffineWitness)> {
    let m = p.to_monic_cubic()?;
    if m.discriminant().is_zero() {
        return Err(Error::RepeatedRoots);
    }
    let (pp, qq) = m.depress();
    if pp.is_zero() {
        return Err(Error::NoRepresentative(
            "depressed cubic has no linear term",
        ));
    }
    if qq.is_zero() {
        return Err(Error::NoRepresentative(
            "zero is a root of the depressed cubic",
        ));
    }
    // (lx)^3 + P(lx) + Q = l^3 (x^3 - ax - a) with l = Q/P and a = -P^3/Q^2.
    let lambda = checked_div(&qq, &pp)?;
    let a = -(&pp * &pp * &pp) / (&qq * &qq);
    let witness = AffineWitness {
        beta: -(&m.a / int(3)),
        scale: (p.leading() * &lambda * &lambda * &lambda).recip(),
        alpha: lambda,
    };
    if witness.apply(p)? != rep_poly(&a) {
        return Err(Error::Internal(format!(
            "witness does not map {p} to its representative"
        )));
    }
    Ok((a, witness))
}

/// Class representative and characteristic number of a cubic with square
/// discriminant.
pub fn representative(p: &Poly) -> Result<(ClassRep, AffineWitness)> {
    let (a, witness) = normal_form(p)?;
    let k = char_number_of(&a)?;
    Ok((ClassRep { a, k }, witness))
}

fn char_number_of(a: &Rational) -> Result<Rational> {
    let radicand = int(4) * a - int(27);
    let k = rat_sqrt(&radicand).map_err(|_| Error::NotASquare(radicand))?;
    if k.is_zero() {
        return Err(Error::RepeatedRoots);
    }
    Ok(k)
}

/// `k = sqrt(4a - 27)`, positive branch.
pub fn char_number(a: &Rational) -> Result<Rational> {
    char_number_of(a)
}

/// The representative with characteristic number `k`: `a = (k^2 + 27)/4`.
pub fn rep_from_k(k: &Rational) -> Result<ClassRep> {
    if !k.is_positive() {
        return Err(Error::NonPositiveK(k.clone()));
    }
    Ok(ClassRep {
        a: (k * k + int(27)) / int(4),
        k: k.clone(),
    })
}

/// Whether two cubics with distinct roots are affinely equivalent.
pub fn is_equivalent(p: &Poly, r: &Poly) -> Result<bool> {
    Ok(normal_form(p)?.0 == normal_form(r)?.0)
}

/// `(q(alpha x + beta) - beta) / alpha`: the map `q` seen through the change of
/// variable `x -> alpha x + beta`.
pub fn conjugate_map(q: &QuadMap, alpha: &Rational, beta: &Rational) -> Result<QuadMap> {
    let moved = q.to_poly().affine_sub(alpha, beta)?;
    let out = (&moved - &Poly::constant(beta.clone())).scale(&alpha.recip());
    QuadMap::from_poly(&out).ok_or_else(|| Error::Internal("conjugate has degree > 2".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::galois::verify_permutes;

    #[test]
    fn example_two() {
        let (rep, w) = representative(&Poly::from_ints(&[1, 0, -3, 1])).unwrap();
        assert_eq!(rep.a(), &int(27));
        assert_eq!(rep.k(), &int(9));
        assert_eq!(rep.poly(), Poly::from_ints(&[1, 0, -27, -27]));
        assert_eq!(
            w.apply(&Poly::from_ints(&[1, 0, -3, 1])).unwrap(),
            rep.poly()
        );
    }

    #[test]
    fn coupled_cubics_representatives() {
        let (rep, _) = representative(&Poly::from_ints(&[1, 1, -2, -1])).unwrap();
        assert_eq!((rep.a().clone(), rep.k().clone()), (int(189), int(27)));
        let (rep, _) = representative(&Poly::from_ints(&[1, 2, -3, -5])).unwrap();
        assert_eq!(
            (rep.a().clone(), rep.k().clone()),
            (rat(351, 25), rat(27, 5))
        );
    }

    #[test]
    fn representative_is_fixed() {
        let (rep, w) = representative(&Poly::from_ints(&[1, 0, -27, -27])).unwrap();
        assert_eq!(rep.a(), &int(27));
        assert!(w.is_identity());
    }

    #[test]
    fn representative_errors() {
        assert_eq!(
            representative(&Poly::from_ints(&[1, 0, -3, 2])),
            Err(Error::RepeatedRoots)
        );
        assert!(matches!(
            representative(&Poly::from_ints(&[1, 0, -1, 0])),
            Err(Error::NoRepresentative(_))
        ));
        // x^3 + x + 1 has a class but no rational characteristic number.
        assert!(matches!(
            representative(&Poly::from_ints(&[1, 0, 1, 1])),
            Err(Error::NotASquare(_))
        ));
        assert!(normal_form(&Poly::from_ints(&[1, 0, 1, 1])).is_ok());
        assert!(matches!(
            representative(&Poly::from_ints(&[1, 1])),
            Err(Error::WrongDegree { .. })
        ));
    }

    #[test]
    fn char_numbers() {
        assert_eq!(char_number(&int(27)).unwrap(), int(9));
        assert_eq!(char_number(&rat(343, 36)).unwrap(), rat(10, 3));
        assert_eq!(char_number(&int(189)).unwrap(), int(27));
        assert!(matches!(char_number(&int(10)), Err(Error::NotASquare(_))));
    }

    #[test]
    fn reps_from_k() {
        assert_eq!(rep_from_k(&int(9)).unwrap().a(), &int(27));
        assert_eq!(rep_from_k(&rat(10, 3)).unwrap().a(), &rat(343, 36));
        // Oracle: (27/4) * (31*81 + 108*9 + 729) / (2*9 + 27)^2 = 351/25.
        let b = rat(27, 4) * int(31 * 81 + 108 * 9 + 729) / int(45 * 45);
        assert_eq!(b, rat(351, 25));
        assert_eq!(rep_from_k(&rat(27, 5)).unwrap().a(), &b);
        assert_eq!(rep_from_k(&int(0)), Err(Error::NonPositiveK(int(0))));
        assert_eq!(rep_from_k(&int(-2)), Err(Error::NonPositiveK(int(-2))));
    }

    #[test]
    fn equivalence() {
        let p = Poly::from_ints(&[1, 0, -3, 1]);
        assert!(is_equivalent(&p, &Poly::from_ints(&[1, 0, -27, -27])).unwrap());
        assert!(!is_equivalent(&p, &Poly::from_ints(&[1, 1, -2, -1])).unwrap());
        assert!(is_equivalent(&p, &p.affine_sub(&int(5), &int(-2)).unwrap()).unwrap());
    }

    #[test]
    fn conjugation() {
        let q = QuadMap::new(int(1), int(0), int(-2));
        assert_eq!(conjugate_map(&q, &int(1), &int(0)).unwrap(), q);
        assert_eq!(
            conjugate_map(&q, &int(-1), &int(0)).unwrap(),
            QuadMap::new(int(-1), int(0), int(2))
        );
        assert_eq!(
            conjugate_map(&q, &int(0), &int(1)),
            Err(Error::DegenerateAffine)
        );
        let p = Poly::from_ints(&[1, 0, -3, 1]);
        let (alpha, beta) = (rat(2, 3), rat(-5, 7));
        let g = p.affine_sub(&alpha, &beta).unwrap();
        assert!(verify_permutes(
            &g,
            &conjugate_map(&q, &alpha, &beta).unwrap()
        ));
    }
}
