//! The maps `phi(k) = 27k/(2k + 27)` and `psi(k) = 27k/|2k - 27|` sending a
//! characteristic number to those of its two coupled classes, and the
//! connected components ("superclasses") of the graph they generate.
//!
//! `1/phi(k) = 1/k + 2/27`, so `phi` walks down towards zero while `psi`
//! undoes it below `27/2`. Every component has a unique element `>= 27`, or
//! else is the chain hanging off the pole `27/2`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::classes::{rep_from_k, rep_poly};
use crate::error::{Error, Result};
use crate::exactmath::{int, rat, Rational};

fn require_positive(k: &Rational) -> Result<()> {
    if k.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveK(k.clone()))
    }
}

/// The pole of `psi`.
pub fn pole() -> Rational {
    rat(27, 2)
}

pub fn phi(k: &Rational) -> Result<Rational> {
    require_positive(k)?;
    Ok(int(27) * k / (int(2) * k + int(27)))
}

pub fn psi(k: &Rational) -> Result<Rational> {
    require_positive(k)?;
    let den = (int(2) * k - int(27)).abs();
    if den.is_zero() {
        return Err(Error::UndefinedAtPole);
    }
    Ok(int(27) * k / den)
}

/// `phi` applied `n` times, in closed form `27k / (2nk + 27)`.
pub fn phi_iter(k: &Rational, n: i64) -> Result<Rational> {
    require_positive(k)?;
    if n < 0 {
        return Err(Error::NegativeN(n));
    }
    Ok(int(27) * k / (int(2) * int(n) * k + int(27)))
}

/// `(phi(k), psi(k))`: characteristic numbers of the two coupled classes.
pub fn coupled_char_numbers(k: &Rational) -> Result<(Rational, Rational)> {
    Ok((phi(k)?, psi(k)?))
}

/// Representative coefficients of the coupled classes written directly in `k`:
///
/// ```text
/// b = (27/4) (31k^2 + 108k + 729) / (2k + 27)^2
/// c = (27/4) (31k^2 - 108k + 729) / (2k - 27)^2
/// ```
///
/// `c` is `None` at the pole.
pub fn coupled_rep_coefficients(k: &Rational) -> Result<(Rational, Option<Rational>)> {
    require_positive(k)?;
    let k2 = k * k;
    let quarter = rat(27, 4);
    let plus = int(2) * k + int(27);
    let b = &quarter * (int(31) * &k2 + int(108) * k + int(729)) / (&plus * &plus);
    let minus = int(2) * k - int(27);
    let c = (!minus.is_zero())
        .then(|| &quarter * (int(31) * &k2 - int(108) * k + int(729)) / (&minus * &minus));
    Ok((b, c))
}

/// Canonical generator of the component containing `k`: climb with `psi`
/// until reaching a value `>= 27` or the pole.
pub fn generator(k: &Rational) -> Result<Rational> {
    require_positive(k)?;
    let top = int(27);
    let pole = pole();
    let mut cur = k.clone();
    // Below 27/2, 1/psi(k) = 1/k - 2/27, so this takes at most ceil(27/(2k))
    // steps; one more jump from (27/2, 27) lands above 27.
    while cur < top {
        if cur == pole {
            return Ok(cur);
        }
        cur = psi(&cur)?;
    }
    Ok(cur)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeMap {
    Phi,
    Psi,
}

impl EdgeMap {
    pub fn name(self) -> &'static str {
        match self {
            EdgeMap::Phi => "phi",
            EdgeMap::Psi => "psi",
        }
    }

    pub fn apply(self, k: &Rational) -> Result<Rational> {
        match self {
            EdgeMap::Phi => phi(k),
            EdgeMap::Psi => psi(k),
        }
    }
}

/// How a node was first reached during enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Discovery {
    Root,
    Via(EdgeMap),
}

impl Discovery {
    pub fn name(self) -> &'static str {
        match self {
            Discovery::Root => "root",
            Discovery::Via(m) => m.name(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exceptional {
    None,
    K27,
    K27Over2,
}

impl Exceptional {
    pub fn name(self) -> &'static str {
        match self {
            Exceptional::None => "none",
            Exceptional::K27 => "k27",
            Exceptional::K27Over2 => "k27_over_2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperclassNode {
    pub k: Rational,
    pub a: Rational,
    /// The representative `x^3 - ax - a` has a rational root.
    pub reducible: bool,
    pub depth: usize,
    pub edge_from_parent: Discovery,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperclassEdge {
    pub from: Rational,
    pub to: Rational,
    pub map: EdgeMap,
}

#[derive(Debug, Clone)]
pub struct SuperclassGraph {
    pub generator: Rational,
    pub exceptional: Exceptional,
    /// Breadth-first order: ascending depth, then descending `k`.
    pub nodes: Vec<SuperclassNode>,
    pub edges: Vec<SuperclassEdge>,
}

impl SuperclassGraph {
    pub fn keys(&self) -> Vec<Rational> {
        self.nodes.iter().map(|n| n.k.clone()).collect()
    }

    pub fn node(&self, k: &Rational) -> Option<&SuperclassNode> {
        self.nodes.iter().find(|n| &n.k == k)
    }

    pub fn contains(&self, k: &Rational) -> bool {
        self.node(k).is_some()
    }

    /// Graphviz rendering; reducible nodes get a dashed border.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let ids: HashMap<&Rational, usize> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (&n.k, i))
            .collect();
        let _ = writeln!(out, "graph superclass {{");
        let _ = writeln!(
            out,
            "  // generator {}, exceptional {}",
            self.generator,
            self.exceptional.name()
        );
        for (i, n) in self.nodes.iter().enumerate() {
            let style = if n.reducible { ", style=dashed" } else { "" };
            let _ = writeln!(out, "  n{i} [label=\"k = {}\\na = {}\"{style}];", n.k, n.a);
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -- n{} [label=\"{}\"];",
                ids[&e.from],
                ids[&e.to],
                e.map.name()
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "generator": self.generator.to_string(),
            "exceptional": self.exceptional.name(),
            "nodes": self.nodes.iter().map(|n| json!({
                "k": n.k.to_string(),
                "a": n.a.to_string(),
                "reducible": n.reducible,
                "depth": n.depth,
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| json!({
                "from": e.from.to_string(),
                "to": e.to.to_string(),
                "map": e.map.name(),
            })).collect::<Vec<_>>(),
        })
    }
}

fn make_node(k: Rational, depth: usize, edge_from_parent: Discovery) -> Result<SuperclassNode> {
    let a = rep_from_k(&k)?.a().clone();
    let reducible = !rep_poly(&a).rational_roots()?.is_empty();
    Ok(SuperclassNode {
        k,
        a,
        reducible,
        depth,
        edge_from_parent,
    })
}

/// Breadth-first closure of `generator(k)` under `phi` and `psi`, stopping
/// after `max_nodes` nodes.
pub fn enumerate_superclass(k: &Rational, max_nodes: usize) -> Result<SuperclassGraph> {
    let generator = generator(k)?;
    let exceptional = if generator == int(27) {
        Exceptional::K27
    } else if generator == pole() {
        Exceptional::K27Over2
    } else {
        Exceptional::None
    };
    let max_nodes = max_nodes.max(1);
    let mut seen: HashSet<Rational> = HashSet::new();
    let mut nodes = vec![make_node(generator.clone(), 0, Discovery::Root)?];
    seen.insert(generator.clone());
    let mut level = vec![generator.clone()];
    let mut depth = 0;
    'bfs: while !level.is_empty() {
        depth += 1;
        let mut next: Vec<(Rational, EdgeMap)> = Vec::new();
        for k in &level {
            for map in [EdgeMap::Phi, EdgeMap::Psi] {
                let Ok(n) = map.apply(k) else { continue };
                if seen.insert(n.clone()) {
                    next.push((n, map));
                }
            }
        }
        next.sort_by(|x, y| y.0.cmp(&x.0));
        for (n, map) in &next {
            if nodes.len() >= max_nodes {
                break 'bfs;
            }
            nodes.push(make_node(n.clone(), depth, Discovery::Via(*map))?);
        }
        level = next.into_iter().map(|(n, _)| n).collect();
    }
    let edges = collect_edges(&nodes)?;
    Ok(SuperclassGraph {
        generator,
        exceptional,
        nodes,
        edges,
    })
}

// One edge per adjacent pair. {k, phi(k)} is the same pair as
// {psi(k'), k'} below the pole, so it is stored once as k -> phi(k).
fn collect_edges(nodes: &[SuperclassNode]) -> Result<Vec<SuperclassEdge>> {
    let present: HashSet<&Rational> = nodes.iter().map(|n| &n.k).collect();
    let mut keys: HashSet<(Rational, Rational)> = HashSet::new();
    let mut edges = Vec::new();
    for node in nodes {
        for map in [EdgeMap::Phi, EdgeMap::Psi] {
            let Ok(to) = map.apply(&node.k) else { continue };
            if !present.contains(&to) {
                continue;
            }
            let (from, to, map) = match map {
                EdgeMap::Psi if phi(&to)? == node.k => (to, node.k.clone(), EdgeMap::Phi),
                _ => (node.k.clone(), to, map),
            };
            let key = if from <= to {
                (from.clone(), to.clone())
            } else {
                (to.clone(), from.clone())
            };
            if keys.insert(key) {
                edges.push(SuperclassEdge { from, to, map });
            }
        }
    }
    Ok(edges)
}
