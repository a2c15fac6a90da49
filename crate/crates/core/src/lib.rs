//! Exact analysis of cubic polynomials with cyclic Galois group.
//!
//! A cubic over the rationals with three real roots and square discriminant
//! has a quadratic `q` permuting its roots cyclically. The same `q` permutes
//! the roots of a second cubic, its coupled cubic. Modulo affine changes of
//! variable every class has a representative `x^3 - ax - a` with
//! characteristic number `k = sqrt(4a - 27)`, and coupling acts on `k` by
//! `phi(k) = 27k/(2k + 27)` and `psi(k) = 27k/|2k - 27|`. Components of the
//! resulting graph are superclasses.
//!
//! All arithmetic is exact; see [`exactmath::Rational`].
//!
//! ```
//! use cyclic_cubic::{coupled_pair, parse_poly, representative};
//!
//! let p = parse_poly("x^3 - 3*x + 1").unwrap();
//! let (rep, _) = representative(&p).unwrap();
//! assert_eq!(rep.k().to_string(), "9");
//! let (p1, p2) = coupled_pair(&p).unwrap();
//! assert_eq!(p1.to_string(), "x^3 + x^2 - 2*x - 1");
//! assert_eq!(p2.to_string(), "x^3 + 2*x^2 - 3*x - 5");
//! ```

pub mod classes;
pub mod dynamics;
pub mod error;
pub mod exactmath;
pub mod field;
pub mod galois;
pub mod isolate;
pub mod parse;
pub mod poly;

pub use classes::{
    char_number, conjugate_map, is_equivalent, normal_form, rep_from_k, rep_poly, representative,
    AffineWitness, ClassRep,
};
pub use dynamics::{
    coupled_char_numbers, coupled_rep_coefficients, enumerate_superclass, generator, phi, phi_iter,
    psi, EdgeMap, Exceptional, SuperclassGraph, SuperclassNode,
};
pub use error::{Error, NotGaloisReason, Result};
pub use exactmath::{rat_sqrt, rationalize, Rational};
pub use field::{
    family_t, real_roots, root_expression, same_field, FieldComparison, FieldStatus, RootTriple,
    DEFAULT_MAX_DEN,
};
pub use galois::{
    certify, coupled, coupled_pair, perm_pair, perm_pair_unchecked, perm_poly, perm_poly_rep,
    verify_permutes, GaloisCert, QuadMap, Sign,
};
pub use parse::{parse_coeff_list, parse_poly, parse_rational, ParseError};
pub use poly::{MonicCubic, Poly};
