//! Plain-text PD codes.
//!
//! ```text
//! # right-handed trefoil
//! X 1,5,2,4 +
//! X 3,1,4,6 +
//! X 5,3,6,2 +
//! C 1,2,3,4,5,6
//! ```
//!
//! `X` lines give the four arcs of a crossing counterclockwise from the
//! incoming under-arc, then its sign. `C` lines list each component's arcs in
//! walk order, the first being its base point; a crossingless component is a
//! single unused label. Without `C` lines the components are derived from the
//! crossings. Blank lines and `#` comments are ignored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use super::{Crossing, CrossingSign, LinkDiagram};
use crate::{Error, Result};

pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let mut crossings = Vec::new();
    let mut components: Vec<Vec<u32>> = Vec::new();
    let mut uses: BTreeMap<u32, usize> = BTreeMap::new();
    let mut listed = BTreeSet::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (tag, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        match tag {
            "X" => {
                let mut parts = rest.split_whitespace();
                let arcs = parts.next().ok_or_else(|| err("missing arc list".into()))?;
                let sign = match parts.next() {
                    Some("+") => CrossingSign::Positive,
                    Some("-") => CrossingSign::Negative,
                    Some(s) => return Err(err(format!("crossing sign must be + or -, got {s:?}"))),
                    None => return Err(err("missing crossing sign".into())),
                };
                if let Some(extra) = parts.next() {
                    return Err(err(format!("unexpected trailing token {extra:?}")));
                }
                let labels = parse_labels(arcs).map_err(err)?;
                let arcs: [u32; 4] = labels
                    .try_into()
                    .map_err(|v: Vec<u32>| err(format!("a crossing needs 4 arcs, got {}", v.len())))?;
                for a in arcs {
                    let count = uses.entry(a).or_default();
                    *count += 1;
                    if *count > 2 {
                        return Err(err(format!("arc {a} appears more than twice")));
                    }
                }
                crossings.push(Crossing::new(arcs, sign));
            }
            "C" => {
                let labels = parse_labels(rest).map_err(err)?;
                for &a in &labels {
                    if !listed.insert(a) {
                        return Err(err(format!("arc {a} listed twice in components")));
                    }
                }
                components.push(labels);
            }
            other => return Err(err(format!("unknown record {other:?}, expected X or C"))),
        }
    }
    if let Some((a, _)) = uses.iter().find(|(_, &c)| c != 2) {
        return Err(Error::InvalidDiagram(format!("arc {a} appears only once")));
    }
    if components.is_empty() {
        if crossings.is_empty() {
            return Err(Error::InvalidDiagram("empty PD code".into()));
        }
        LinkDiagram::from_crossings(crossings, 0)
    } else {
        LinkDiagram::new(crossings, components)
    }
}

fn parse_labels(s: &str) -> std::result::Result<Vec<u32>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty arc list".into());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<u32>() {
                Ok(0) => Err("arc labels must be positive".to_string()),
                Ok(a) => Ok(a),
                Err(_) => Err(format!("bad arc label {t:?}")),
            }
        })
        .collect()
}

pub fn write_pd(d: &LinkDiagram) -> String {
    let mut out = String::new();
    for c in d.crossings() {
        let [i, j, k, l] = c.arcs;
        let s = if c.sign == CrossingSign::Positive { '+' } else { '-' };
        let _ = writeln!(out, "X {i},{j},{k},{l} {s}");
    }
    for comp in d.components() {
        let list: Vec<String> = comp.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "C {}", list.join(","));
    }
    out
}
