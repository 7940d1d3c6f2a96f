//! Conway polynomial by skein recursion on descending diagrams.
//!
//! Walking the components in order from their base points, a diagram in which
//! every crossing is first met on its over-strand is a stacked unlink: its
//! Conway polynomial is 1 for a knot and 0 otherwise. Any other diagram has a
//! first crossing met on its under-strand; the skein relation
//! `C(L+) - C(L-) = z C(L0)` rewrites it in terms of the switched diagram
//! (one fewer bad crossing, same base points) and the oriented smoothing
//! (one fewer crossing).

use std::collections::{HashMap, HashSet};

use super::diagram::ArcHead;
use super::{ConwayPoly, CrossingSign, LinkDiagram};
use crate::{Error, Result};

pub const DEFAULT_CROSSING_LIMIT: usize = 40;

/// Skein evaluator configuration.
///
/// Every call to [`SkeinOracle::conway`] uses its own private memo table.
#[derive(Clone, Debug)]
pub struct SkeinOracle {
    crossing_limit: usize,
    memoize: bool,
}

impl Default for SkeinOracle {
    fn default() -> Self {
        SkeinOracle { crossing_limit: DEFAULT_CROSSING_LIMIT, memoize: true }
    }
}

impl SkeinOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_crossing_limit(mut self, limit: usize) -> Self {
        self.crossing_limit = limit;
        self
    }

    pub fn with_memo(mut self, memoize: bool) -> Self {
        self.memoize = memoize;
        self
    }

    pub fn crossing_limit(&self) -> usize {
        self.crossing_limit
    }

    pub fn conway(&self, d: &LinkDiagram) -> Result<ConwayPoly> {
        if d.crossing_count() > self.crossing_limit {
            return Err(Error::CrossingLimit { crossings: d.crossing_count(), limit: self.crossing_limit });
        }
        let mut memo = self.memoize.then(HashMap::new);
        let poly = evaluate(d, &mut memo);
        check_output(d, &poly)?;
        Ok(poly)
    }
}

/// Conway polynomial with the default oracle settings.
pub fn conway_polynomial(d: &LinkDiagram) -> Result<ConwayPoly> {
    SkeinOracle::default().conway(d)
}

type Memo = Option<HashMap<Vec<u32>, ConwayPoly>>;

fn evaluate(d: &LinkDiagram, memo: &mut Memo) -> ConwayPoly {
    if d.crossing_count() == 0 {
        return if d.component_count() == 1 { ConwayPoly::one() } else { ConwayPoly::zero() };
    }
    // split diagrams, including any with a crossingless component
    if !d.is_connected() {
        return ConwayPoly::zero();
    }
    let key = memo.as_ref().map(|_| canonical_key(d));
    if let (Some(m), Some(k)) = (memo.as_ref(), key.as_ref()) {
        if let Some(hit) = m.get(k) {
            return hit.clone();
        }
    }
    let value = match first_bad_crossing(d) {
        None if d.component_count() == 1 => ConwayPoly::one(),
        None => ConwayPoly::zero(),
        Some(idx) => {
            let switched = evaluate(&d.switch_crossing(idx), memo);
            let smoothed = evaluate(&d.smooth_crossing(idx), memo).mul_z();
            match d.crossings()[idx].sign {
                CrossingSign::Positive => &switched + &smoothed,
                CrossingSign::Negative => &switched - &smoothed,
            }
        }
    };
    if let (Some(m), Some(k)) = (memo.as_mut(), key) {
        m.insert(k, value.clone());
    }
    value
}

/// Lowest-traversal-index crossing whose first visit is on its under-strand.
pub fn first_bad_crossing(d: &LinkDiagram) -> Option<usize> {
    let heads = d.heads();
    let mut visited = HashSet::new();
    for cycle in d.components() {
        for a in cycle {
            let Some(h) = heads.get(a) else { continue };
            if visited.insert(h.crossing) && h.under {
                return Some(h.crossing);
            }
        }
    }
    None
}

/// Relabeling-invariant serialization of a connected diagram.
///
/// For each possible starting arc, arcs are renumbered in walk order; when a
/// component closes, the walk resumes on the first discovered crossing that
/// still has an unnumbered strand (under-strand first). The crossings are
/// then written with the new labels and sorted. The key is the
/// lexicographic minimum over all starting arcs, so isomorphic PD codes
/// share a key and equal keys imply isomorphic codes.
pub fn canonical_key(d: &LinkDiagram) -> Vec<u32> {
    let heads = d.heads();
    let mut starts: Vec<u32> = heads.keys().copied().collect();
    starts.sort_unstable();
    starts
        .into_iter()
        .map(|s| key_from(d, &heads, s))
        .min()
        .unwrap_or_default()
}

fn key_from(d: &LinkDiagram, heads: &HashMap<u32, ArcHead>, start: u32) -> Vec<u32> {
    let crossings = d.crossings();
    let mut label: HashMap<u32, u32> = HashMap::with_capacity(heads.len());
    let mut discovered = vec![false; crossings.len()];
    let mut order = Vec::with_capacity(crossings.len());
    let mut next_start = Some(start);
    while let Some(s) = next_start {
        let mut a = s;
        while !label.contains_key(&a) {
            label.insert(a, label.len() as u32 + 1);
            let h = heads[&a];
            if !discovered[h.crossing] {
                discovered[h.crossing] = true;
                order.push(h.crossing);
            }
            a = h.next;
        }
        next_start = order.iter().find_map(|&ci| {
            let c = &crossings[ci];
            [c.under_in(), c.over_in()].into_iter().find(|x| !label.contains_key(x))
        });
    }
    // disconnected input: number the rest by original label, still a sound key
    let mut rest: Vec<u32> = heads.keys().filter(|a| !label.contains_key(a)).copied().collect();
    rest.sort_unstable();
    for a in rest {
        label.insert(a, label.len() as u32 + 1);
    }
    let mut rows: Vec<[u32; 5]> = crossings
        .iter()
        .map(|c| {
            let [i, j, k, l] = c.arcs.map(|a| label[&a]);
            [i, j, k, l, u32::from(c.sign == CrossingSign::Positive)]
        })
        .collect();
    rows.sort_unstable();
    let mut key = Vec::with_capacity(rows.len() * 5 + 1);
    key.push(d.component_count() as u32);
    key.extend(rows.into_iter().flatten());
    key
}

/// Structural checks on every oracle result.
///
/// A `c`-component link has only exponents congruent to `c - 1` mod 2, none
/// below `c - 1`; a knot has constant term 1 and a two-component link has
/// linear coefficient equal to the linking number.
fn check_output(d: &LinkDiagram, poly: &ConwayPoly) -> Result<()> {
    let c = d.component_count() as u32;
    if let Some((&e, _)) = poly.coefficients().iter().find(|(&e, _)| e % 2 != (c - 1) % 2 || e < c - 1) {
        return Err(Error::Invariant(format!("Conway polynomial of a {c}-component link has a z^{e} term")));
    }
    if c == 1 && poly.coefficient(0) != 1.into() {
        return Err(Error::Invariant(format!("knot with constant Conway coefficient {}", poly.coefficient(0))));
    }
    if c == 2 {
        let lk = d.linking_number(0, 1)?;
        if poly.coefficient(1) != lk.into() {
            return Err(Error::Invariant(format!(
                "linear Conway coefficient {} differs from linking number {lk}",
                poly.coefficient(1)
            )));
        }
    }
    Ok(())
}
