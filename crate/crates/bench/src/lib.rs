//! Inputs shared by the benchmarks.

use cyclic_cubic::exactmath::{int, rat};
use cyclic_cubic::{rep_from_k, Poly};

/// `x^3 - 3x + 1`.
pub fn base_cubic() -> Poly {
    Poly::from_ints(&[1, 0, -3, 1])
}

/// Irreducible representatives with growing coefficient size.
pub fn representatives() -> Vec<(&'static str, Poly)> {
    [
        ("k=9", int(9)),
        ("k=27/5", rat(27, 5)),
        ("k=270/41", rat(270, 41)),
    ]
    .into_iter()
    .map(|(name, k)| (name, rep_from_k(&k).unwrap().poly()))
    .collect()
}
