use std::fmt::Write as _;

use serde_json::{json, Value};

use cyclic_cubic::exactmath::rat;
use cyclic_cubic::field::Direction;
use cyclic_cubic::{
    certify, coupled, coupled_pair, enumerate_superclass, family_t, parse_coeff_list, parse_poly,
    parse_rational, perm_pair, perm_pair_unchecked, phi_iter, real_roots, rep_from_k, rep_poly,
    representative, same_field, Error, FieldStatus, ParseError, Poly, Rational,
};

use crate::format::decimal;

pub enum Failure {
    Parse(ParseError),
    Domain(Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

pub struct Report {
    pub text: String,
    pub json: Value,
}

type Outcome = Result<Report, Failure>;

pub fn read_poly(s: &str, coeffs: bool) -> Result<Poly, ParseError> {
    if coeffs {
        parse_coeff_list(s)
    } else {
        parse_poly(s)
    }
}

pub fn read_rational(s: &str) -> Result<Rational, ParseError> {
    parse_rational(s)
}

fn lines(pairs: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (key, value) in pairs {
        let _ = writeln!(out, "{key}: {value}");
    }
    out
}

pub fn analyze(p: &Poly) -> Outcome {
    let cert = certify(p)?;
    let (qp, qm) = perm_pair(&cert);
    let (cp, cm) = coupled_pair(p)?;
    let (rep, _) = representative(p)?;
    let text = lines(&[
        ("polynomial", p.to_string()),
        ("galois", "true".into()),
        ("discriminant", cert.discriminant().to_string()),
        ("d", cert.d().to_string()),
        ("permutation +", qp.to_string()),
        ("permutation -", qm.to_string()),
        ("coupled +", cp.to_string()),
        ("coupled -", cm.to_string()),
        ("representative", rep.poly().to_string()),
        ("a", rep.a().to_string()),
        ("k", rep.k().to_string()),
    ]);
    let json = json!({
        "polynomial": p.to_string(),
        "galois": true,
        "discriminant": cert.discriminant().to_string(),
        "d": cert.d().to_string(),
        "permutation": { "+": qp.to_string(), "-": qm.to_string() },
        "coupled": { "+": cp.to_string(), "-": cm.to_string() },
        "representative": rep.poly().to_string(),
        "a": rep.a().to_string(),
        "k": rep.k().to_string(),
    });
    Ok(Report { text, json })
}

pub fn couple(p: &Poly, sign: Option<&str>) -> Outcome {
    let (qp, qm) = perm_pair_unchecked(p)?;
    let monic = p.monic();
    let mut text = String::new();
    let mut json = serde_json::Map::new();
    for (symbol, q) in [("+", qp), ("-", qm)] {
        if sign.is_some_and(|s| s != symbol) {
            continue;
        }
        let c = coupled(&monic, &q)?;
        let _ = writeln!(text, "{symbol}: {c}");
        json.insert(
            symbol.into(),
            json!({ "permutation": q.to_string(), "coupled": c.to_string() }),
        );
    }
    Ok(Report {
        text,
        json: Value::Object(json),
    })
}

pub fn rep(p: &Poly) -> Outcome {
    let (rep, w) = representative(p)?;
    let text = lines(&[
        ("representative", rep.poly().to_string()),
        ("a", rep.a().to_string()),
        ("k", rep.k().to_string()),
        (
            "witness",
            format!(
                "scale * p(alpha*x + beta) with alpha = {}, beta = {}, scale = {}",
                w.alpha, w.beta, w.scale
            ),
        ),
    ]);
    let json = json!({
        "representative": rep.poly().to_string(),
        "a": rep.a().to_string(),
        "k": rep.k().to_string(),
        "witness": {
            "alpha": w.alpha.to_string(),
            "beta": w.beta.to_string(),
            "scale": w.scale.to_string(),
        },
    });
    Ok(Report { text, json })
}

pub fn char_rep(k: &Rational) -> Outcome {
    let rep = rep_from_k(k)?;
    let reducible = !rep.poly().rational_roots()?.is_empty();
    let text = lines(&[
        ("k", k.to_string()),
        ("a", rep.a().to_string()),
        ("representative", rep.poly().to_string()),
        ("reducible", reducible.to_string()),
    ]);
    let json = json!({
        "k": k.to_string(),
        "a": rep.a().to_string(),
        "representative": rep.poly().to_string(),
        "reducible": reducible,
    });
    Ok(Report { text, json })
}

fn value_report(v: Rational) -> Outcome {
    Ok(Report {
        text: format!("{v}\n"),
        json: json!({ "value": v.to_string() }),
    })
}

pub fn phi(k: &Rational, iter: i64) -> Outcome {
    value_report(phi_iter(k, iter)?)
}

pub fn psi(k: &Rational) -> Outcome {
    value_report(cyclic_cubic::psi(k)?)
}

pub fn generator(k: &Rational) -> Outcome {
    value_report(cyclic_cubic::generator(k)?)
}

pub fn superclass(k: &Rational, max_nodes: usize, dot: bool) -> Outcome {
    let g = enumerate_superclass(k, max_nodes)?;
    let json = g.to_json();
    if dot {
        return Ok(Report {
            text: g.to_dot(),
            json,
        });
    }
    let mut text = String::new();
    let _ = writeln!(text, "generator: {}", g.generator);
    let _ = writeln!(text, "exceptional: {}", g.exceptional.name());
    let _ = writeln!(text, "nodes:");
    for n in &g.nodes {
        let flag = if n.reducible { ", reducible" } else { "" };
        let _ = writeln!(text, "  {} (a = {}, depth {}{flag})", n.k, n.a, n.depth);
    }
    let _ = writeln!(text, "edges:");
    for e in &g.edges {
        let _ = writeln!(text, "  {} -- {} [{}]", e.from, e.to, e.map.name());
    }
    Ok(Report { text, json })
}

fn direction_name(d: Direction) -> &'static str {
    match d {
        Direction::SecondInFirst => "second_in_first",
        Direction::FirstInSecond => "first_in_second",
    }
}

pub fn samefield(f: &Poly, p: &Poly, max_den: u64) -> Outcome {
    let cmp = same_field(f, p, max_den)?;
    let expression = cmp.expression.as_ref().map(|g| g.to_string());
    let mut text = lines(&[
        ("same field", cmp.same.to_string()),
        ("status", cmp.status.to_string()),
    ]);
    if let Some(g) = &expression {
        let _ = writeln!(text, "expression: {g}");
    }
    let direction = match cmp.status {
        FieldStatus::Verified(d) => Some(direction_name(d)),
        FieldStatus::AbsentAtBound(_) => None,
    };
    let json = json!({
        "same": cmp.same,
        "status": cmp.status.to_string(),
        "direction": direction,
        "expression": expression,
        "max_den": max_den,
    });
    Ok(Report { text, json })
}

pub fn family(y: &Rational) -> Outcome {
    let t = family_t(y)?;
    let member = rep_poly(&t);
    let galois = certify(&member);
    let k = cyclic_cubic::char_number(&t).ok();
    let base = Poly::from_ints(&[1, 0, -3, 1]);
    let field = match &galois {
        Ok(_) => Some(same_field(&member, &base, cyclic_cubic::DEFAULT_MAX_DEN)?),
        Err(_) => None,
    };
    let galois_text = match &galois {
        Ok(_) => "true".to_string(),
        Err(e) => format!("false ({e})"),
    };
    let mut pairs = vec![
        ("t", t.to_string()),
        ("representative", member.to_string()),
        ("galois", galois_text),
    ];
    if let Some(k) = &k {
        pairs.push(("k", k.to_string()));
    }
    if let Some(cmp) = &field {
        pairs.push((
            "same field as x^3 - 3*x + 1",
            format!("{} ({})", cmp.same, cmp.status),
        ));
    }
    let json = json!({
        "y": y.to_string(),
        "t": t.to_string(),
        "representative": member.to_string(),
        "galois": galois.is_ok(),
        "k": k.map(|k| k.to_string()),
        "same_field": field.as_ref().map(|c| c.same),
        "status": field.as_ref().map(|c| c.status.to_string()),
    });
    Ok(Report {
        text: lines(&pairs),
        json,
    })
}

pub fn roots(p: &Poly, digits: usize) -> Outcome {
    // Isolate to a quarter unit in the last printed place.
    let eps =
        rat(1, 4) / Rational::from_integer(num_bigint::BigInt::from(10u32).pow(digits as u32));
    let triple = real_roots(p, &eps)?;
    let mids = triple.midpoints();
    let shown: Vec<String> = mids.iter().map(|m| decimal(m, digits)).collect();
    let text = shown.iter().map(|s| format!("{s}\n")).collect();
    let json = json!({
        "roots": shown,
        "digits": digits,
        "intervals": triple.intervals.iter().map(|(lo, hi)| json!([lo.to_string(), hi.to_string()])).collect::<Vec<_>>(),
    });
    Ok(Report { text, json })
}
