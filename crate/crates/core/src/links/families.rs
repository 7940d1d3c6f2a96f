//! Diagram generators: closed braids and pretzel links.

use std::collections::HashMap;

use super::{Crossing, CrossingSign, LinkDiagram};
use crate::{Error, Result};

/// Closure of a braid on `strands` strands, strands oriented upward.
///
/// Generator `i` is the crossing of positions `i` and `i+1` (1-based) with
/// the left strand passing over, a positive crossing; `-i` is its inverse.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram> {
    if strands == 0 {
        return Err(Error::InvalidParameter("a braid needs at least one strand".into()));
    }
    let mut cur: Vec<u32> = (1..=strands as u32).collect();
    let mut next = strands as u32 + 1;
    let mut crossings = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::InvalidParameter(format!("generator {g} on {strands} strands")));
        }
        let (left, right) = (i - 1, i);
        let (bl, br) = (cur[left], cur[right]);
        let (tl, tr) = (next, next + 1);
        next += 2;
        crossings.push(if g > 0 {
            Crossing::new([br, tr, tl, bl], CrossingSign::Positive)
        } else {
            Crossing::new([bl, br, tr, tl], CrossingSign::Negative)
        });
        cur[left] = tl;
        cur[right] = tr;
    }
    let mut free_loops = 0;
    let mut close: HashMap<u32, u32> = HashMap::new();
    for (t, &top) in cur.iter().enumerate() {
        let bottom = t as u32 + 1;
        if top == bottom {
            free_loops += 1;
        } else {
            close.insert(top, bottom);
        }
    }
    let crossings = crossings
        .into_iter()
        .map(|c| Crossing::new(c.arcs.map(|a| close.get(&a).copied().unwrap_or(a)), c.sign))
        .collect();
    Ok(LinkDiagram::from_crossings(crossings, free_loops)?.normalized())
}

pub fn unknot() -> LinkDiagram {
    braid_closure(1, &[]).expect("one strand")
}

/// Crossingless diagram of the `n`-component unlink.
pub fn unlink(n: usize) -> Result<LinkDiagram> {
    braid_closure(n, &[])
}

/// Two-crossing Hopf link with linking number `+1` or `-1`.
pub fn hopf_link(positive: bool) -> LinkDiagram {
    let g = if positive { 1 } else { -1 };
    braid_closure(2, &[g, g]).expect("valid braid")
}

/// The closed 2-braid `T(2, n)` with `n` positive crossings, `n` odd and at least 3.
pub fn torus2_diagram(n: i64) -> Result<LinkDiagram> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("T(2,n) needs odd n >= 3, got {n}")));
    }
    braid_closure(2, &vec![1; n as usize])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Port {
    BottomLeft,
    BottomRight,
    TopRight,
    TopLeft,
}

use Port::*;

impl Port {
    // counterclockwise around the crossing
    const CCW: [Port; 4] = [BottomRight, TopRight, TopLeft, BottomLeft];

    fn opposite(self) -> Port {
        match self {
            BottomLeft => TopRight,
            TopRight => BottomLeft,
            BottomRight => TopLeft,
            TopLeft => BottomRight,
        }
    }
}

type PortRef = (usize, Port);

/// Pretzel link `P(params[0], ..., params[m-1])`.
///
/// Column `t` is a vertical twist region of `|params[t]|` crossings; columns
/// are joined left to right along the top and bottom, the last back to the
/// first around the outside. In a column with positive parameter the strand
/// from bottom-left to top-right of each crossing passes over; negative
/// parameters use the mirror crossings. Orientation follows the order in
/// which strands are traced from the leftmost column.
pub fn pretzel_link(params: &[i64]) -> Result<LinkDiagram> {
    if params.is_empty() || params.contains(&0) {
        return Err(Error::InvalidParameter(format!("pretzel parameters must be nonzero, got {params:?}")));
    }
    let mut over_bl_tr = Vec::new();
    let mut edges: Vec<(PortRef, PortRef)> = Vec::new();
    let mut bottoms = Vec::new();
    let mut tops = Vec::new();
    for &p in params {
        let start = over_bl_tr.len();
        let len = p.unsigned_abs() as usize;
        over_bl_tr.extend(std::iter::repeat_n(p > 0, len));
        for m in start..start + len - 1 {
            edges.push(((m, TopLeft), (m + 1, BottomLeft)));
            edges.push(((m, TopRight), (m + 1, BottomRight)));
        }
        bottoms.push(((start, BottomLeft), (start, BottomRight)));
        tops.push(((start + len - 1, TopLeft), (start + len - 1, TopRight)));
    }
    let m = params.len();
    for t in 0..m {
        edges.push((tops[t].1, tops[(t + 1) % m].0));
        edges.push((bottoms[t].1, bottoms[(t + 1) % m].0));
    }
    let partner: HashMap<PortRef, PortRef> =
        edges.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();

    // orient by tracing: an arc leaves a crossing at one port and enters the next
    let mut arc_at: HashMap<PortRef, (u32, bool)> = HashMap::new();
    let mut label = 0u32;
    for &(first, _) in &edges {
        if arc_at.contains_key(&first) {
            continue;
        }
        let mut leave = first;
        while !arc_at.contains_key(&leave) {
            let enter = partner[&leave];
            label += 1;
            arc_at.insert(leave, (label, false));
            arc_at.insert(enter, (label, true));
            leave = (enter.0, enter.1.opposite());
        }
    }

    let crossings = (0..over_bl_tr.len())
        .map(|c| {
            let is_over = |p: Port| matches!(p, BottomLeft | TopRight) == over_bl_tr[c];
            let incoming = |p: Port| arc_at[&(c, p)].1;
            let under_in = Port::CCW.iter().position(|&p| incoming(p) && !is_over(p)).expect("one incoming under port");
            let ports: [Port; 4] = std::array::from_fn(|t| Port::CCW[(under_in + t) % 4]);
            let sign = if incoming(ports[3]) { CrossingSign::Positive } else { CrossingSign::Negative };
            Crossing::new(ports.map(|p| arc_at[&(c, p)].0), sign)
        })
        .collect();
    LinkDiagram::from_crossings(crossings, 0)
}

/// `P(2a+1, 2b, 2b)`: the unknot `U` and the torus knot `T(2, 2a+1)`, listed in that order.
pub fn pretzel_diagram(a: i64, b: i64) -> Result<LinkDiagram> {
    if a < 1 || b == 0 {
        return Err(Error::InvalidParameter(format!("pretzel family needs a >= 1 and b != 0, got a={a}, b={b}")));
    }
    let d = pretzel_link(&[2 * a + 1, 2 * b, 2 * b])?;
    if d.component_count() != 2 {
        return Err(Error::Invariant(format!("P(2a+1,2b,2b) has {} components", d.component_count())));
    }
    let comp = d.component_of_arc();
    let self_crossings = |i: usize| {
        d.crossings().iter().filter(|c| comp[&c.under_in()] == i && comp[&c.over_in()] == i).count()
    };
    let order = if self_crossings(0) == 0 { [0, 1] } else { [1, 0] };
    d.with_component_order(&order)
}
