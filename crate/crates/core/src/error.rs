use std::fmt;

use thiserror::Error;

use crate::exactmath::Rational;

/// Why a cubic failed Galois certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotGaloisReason {
    Reducible,
    NonSquareDiscriminant,
    RepeatedRoots,
    DegenerateAlpha,
}

impl fmt::Display for NotGaloisReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NotGaloisReason::Reducible => "reducible over the rationals",
            NotGaloisReason::NonSquareDiscriminant => {
                "discriminant is not a positive rational square"
            }
            NotGaloisReason::RepeatedRoots => "repeated roots (zero discriminant)",
            NotGaloisReason::DegenerateAlpha => "a^2 - 3b vanishes",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of negative value {0}")]
    NegativeInput(Rational),
    #[error("{0} is not the square of a rational")]
    NotASquare(Rational),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("expected a polynomial of degree {expected}, got degree {found}")]
    WrongDegree { expected: usize, found: String },
    #[error("affine substitution needs a nonzero scale")]
    DegenerateAffine,
    #[error("not a Galois cubic: {0}")]
    NotGalois(NotGaloisReason),
    #[error("4a - 27 = {lhs} differs from k^2 = {rhs}")]
    InconsistentPair {
        lhs: Box<Rational>,
        rhs: Box<Rational>,
    },
    #[error("quadratic map does not cyclically permute the roots")]
    NotPermuting,
    #[error("s = q(q(q)) - x is not divisible by p * (q - x)")]
    InexactDivision,
    #[error("coupled cubic has non-square discriminant {0}")]
    NonSquareOutput(Rational),
    #[error("cubic has repeated roots")]
    RepeatedRoots,
    #[error("no representative x^3 - ax - a: {0}")]
    NoRepresentative(&'static str),
    #[error("characteristic number must be positive, got {0}")]
    NonPositiveK(Rational),
    #[error("psi is undefined at the pole k = 27/2")]
    UndefinedAtPole,
    #[error("iteration count must be nonnegative, got {0}")]
    NegativeN(i64),
    #[error("cubic does not have three real roots (discriminant {0})")]
    NotThreeRealRoots(Rational),
    #[error("y = {0} is a pole of the family")]
    PoleOfFamily(Rational),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
