//! Real-root isolation with exact rational endpoints: Sturm sequences,
//! bisection and bracketed Newton steps.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactmath::{int, rat, Rational};
use crate::poly::Poly;

/// Sturm chain `p, p', -rem(p, p'), ...`.
pub fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone()];
    if p.degree().unwrap_or(0) == 0 {
        return chain;
    }
    chain.push(p.derivative());
    loop {
        let n = chain.len();
        let r = chain[n - 2]
            .mod_reduce(&chain[n - 1])
            .expect("chain entries are nonzero");
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn sign_variations(chain: &[Poly], x: &Rational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|q| q.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn count_roots(chain: &[Poly], lo: &Rational, hi: &Rational) -> usize {
    sign_variations(chain, lo).saturating_sub(sign_variations(chain, hi))
}

/// Cauchy bound `1 + max |a_i / a_n|`: every root has smaller magnitude.
pub fn root_bound(p: &Poly) -> Rational {
    let lc = p.leading().abs();
    let n = p.coeffs().len();
    let max = p.coeffs()[..n.saturating_sub(1)]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    max + int(1)
}

// Bisection fractions tried in order; a squarefree polynomial of degree n
// vanishes at no more than n of them.
const SPLITS: [(i64, i64); 9] = [
    (1, 2),
    (1, 3),
    (2, 3),
    (1, 4),
    (3, 4),
    (2, 5),
    (3, 5),
    (3, 7),
    (4, 7),
];

/// A point strictly inside `(lo, hi)` where `p` does not vanish.
fn split_point(p: &Poly, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    for (n, d) in SPLITS {
        let mid = lo + &width * rat(n, d);
        if !p.eval(&mid).is_zero() {
            return mid;
        }
    }
    // Only reachable for degree >= 9; walk a finer grid.
    (2..)
        .flat_map(|d: i64| (1..d).map(move |n| (n, d)))
        .map(|(n, d)| lo + &width * rat(n, d))
        .find(|m| !p.eval(m).is_zero())
        .expect("polynomial has finitely many roots")
}

/// Isolating intervals `(lo, hi)` for the real roots of a squarefree `p`,
/// ascending, each with `hi - lo <= eps` and `p(lo) * p(hi) < 0`.
pub fn isolate_real_roots(p: &Poly, eps: &Rational) -> Vec<(Rational, Rational)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(p);
    let bound = root_bound(p);
    let mut pending = vec![(-bound.clone(), bound)];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        match count_roots(&chain, &lo, &hi) {
            0 => {}
            1 => isolated.push(refine(p, lo, hi, eps)),
            _ => {
                let mid = split_point(p, &lo, &hi);
                pending.push((lo, mid.clone()));
                pending.push((mid, hi));
            }
        }
    }
    isolated.sort();
    isolated
}

/// Shrinks a single-root interval with nonzero endpoint values until its
/// width is at most `eps`. Newton steps from the midpoint are accepted only
/// when a sign change brackets them; otherwise the interval is bisected.
pub fn refine(
    p: &Poly,
    mut lo: Rational,
    mut hi: Rational,
    eps: &Rational,
) -> (Rational, Rational) {
    let dp = p.derivative();
    let lo_positive = p.eval(&lo).is_positive();
    let bits = precision_bits(eps);
    while &(&hi - &lo) > eps {
        if let Some((a, b)) = newton_bracket(p, &dp, &lo, &hi, lo_positive, bits) {
            lo = a;
            hi = b;
            continue;
        }
        let mid = split_point(p, &lo, &hi);
        if p.eval(&mid).is_positive() == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

fn precision_bits(eps: &Rational) -> u64 {
    // 2^-bits < eps / 4
    let ratio = eps.denom().bits().saturating_sub(eps.numer().bits());
    ratio + 4
}

fn round_dyadic(x: &Rational, bits: u64) -> Rational {
    let scale = Rational::from_integer(BigInt::one() << bits);
    (x * &scale).floor() / scale
}

// Tries to replace (lo, hi) by a much narrower bracket around a Newton
// iterate. The new endpoints are nonzero and straddle the root.
fn newton_bracket(
    p: &Poly,
    dp: &Poly,
    lo: &Rational,
    hi: &Rational,
    lo_positive: bool,
    bits: u64,
) -> Option<(Rational, Rational)> {
    let mid = (lo + hi) / int(2);
    let slope = dp.eval(&mid);
    if slope.is_zero() {
        return None;
    }
    let next = round_dyadic(&(&mid - p.eval(&mid) / slope), bits);
    let step = (&next - &mid).abs();
    let floor = Rational::new(BigInt::one(), BigInt::one() << bits);
    let radius = round_dyadic(&(&step / int(8)), bits).max(floor);
    let (a, b) = (&next - &radius, &next + &radius);
    if &a <= lo || &b >= hi {
        return None;
    }
    let (va, vb) = (p.eval(&a), p.eval(&b));
    if va.is_zero()
        || vb.is_zero()
        || va.is_positive() != lo_positive
        || vb.is_positive() == lo_positive
    {
        return None;
    }
    Some((a, b))
}
