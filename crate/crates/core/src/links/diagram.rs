use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::{Error, Result};

/// Sign of an oriented crossing.
///
/// A crossing is positive (right-handed) when, with both strands pointing up,
/// the over-strand runs from bottom-left to top-right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CrossingSign {
    Positive,
    Negative,
}

impl CrossingSign {
    pub fn value(self) -> i64 {
        match self {
            CrossingSign::Positive => 1,
            CrossingSign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            CrossingSign::Positive => CrossingSign::Negative,
            CrossingSign::Negative => CrossingSign::Positive,
        }
    }
}

/// One crossing of a PD code.
///
/// `arcs` lists the four arc labels counterclockwise, starting from the
/// incoming under-arc. The under-strand runs `arcs[0] -> arcs[2]`. On a
/// positive crossing the over-strand runs `arcs[3] -> arcs[1]`, on a negative
/// one `arcs[1] -> arcs[3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [u32; 4],
    pub sign: CrossingSign,
}

impl Crossing {
    pub fn new(arcs: [u32; 4], sign: CrossingSign) -> Self {
        Crossing { arcs, sign }
    }

    pub fn under_in(&self) -> u32 {
        self.arcs[0]
    }

    pub fn under_out(&self) -> u32 {
        self.arcs[2]
    }

    pub fn over_in(&self) -> u32 {
        match self.sign {
            CrossingSign::Positive => self.arcs[3],
            CrossingSign::Negative => self.arcs[1],
        }
    }

    pub fn over_out(&self) -> u32 {
        match self.sign {
            CrossingSign::Positive => self.arcs[1],
            CrossingSign::Negative => self.arcs[3],
        }
    }

    /// The same crossing with over and under exchanged.
    pub fn switched(&self) -> Crossing {
        let [i, j, k, l] = self.arcs;
        match self.sign {
            CrossingSign::Positive => Crossing::new([l, i, j, k], CrossingSign::Negative),
            CrossingSign::Negative => Crossing::new([j, k, l, i], CrossingSign::Positive),
        }
    }

    /// Arc pairs `(incoming, outgoing)` joined by the oriented smoothing.
    pub fn smoothing_pairs(&self) -> [(u32, u32); 2] {
        let [i, j, k, l] = self.arcs;
        match self.sign {
            CrossingSign::Positive => [(i, j), (l, k)],
            CrossingSign::Negative => [(i, l), (j, k)],
        }
    }

    fn relabeled(&self, f: impl FnMut(u32) -> u32) -> Crossing {
        Crossing::new(self.arcs.map(f), self.sign)
    }
}

/// Where an arc ends: the crossing it enters and the arc that continues the strand.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ArcHead {
    pub crossing: usize,
    pub under: bool,
    pub next: u32,
}

/// An oriented link diagram in PD form.
///
/// Each component is stored as the cyclic sequence of its arcs, starting at
/// the component's base point. Components without crossings are single arcs
/// that appear in no crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    components: Vec<Vec<u32>>,
}

impl LinkDiagram {
    /// Validates crossings against declared component cycles.
    pub fn new(crossings: Vec<Crossing>, components: Vec<Vec<u32>>) -> Result<Self> {
        let heads = arc_heads(&crossings)?;
        if components.is_empty() {
            return Err(Error::InvalidDiagram("a diagram needs at least one component".into()));
        }
        let mut seen = BTreeSet::new();
        for cycle in &components {
            if cycle.is_empty() {
                return Err(Error::InvalidDiagram("empty component".into()));
            }
            for &a in cycle {
                if a == 0 {
                    return Err(Error::InvalidDiagram("arc labels must be positive".into()));
                }
                if !seen.insert(a) {
                    return Err(Error::InvalidDiagram(format!("arc {a} listed in two components")));
                }
            }
            for (t, &a) in cycle.iter().enumerate() {
                let after = cycle[(t + 1) % cycle.len()];
                match heads.get(&a) {
                    Some(h) if h.next == after => {}
                    Some(h) => {
                        return Err(Error::InvalidDiagram(format!(
                            "component walk breaks after arc {a}: expected {}, found {after}",
                            h.next
                        )))
                    }
                    None if cycle.len() == 1 => {}
                    None => {
                        return Err(Error::InvalidDiagram(format!("arc {a} does not occur in any crossing")))
                    }
                }
            }
        }
        if let Some(a) = heads.keys().find(|a| !seen.contains(a)) {
            return Err(Error::InvalidDiagram(format!("arc {a} belongs to no component")));
        }
        Ok(LinkDiagram { crossings, components })
    }

    /// Derives component cycles from the crossings.
    ///
    /// Components are ordered by their smallest arc label and start there;
    /// `free_loops` crossingless unknotted components are appended.
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let heads = arc_heads(&crossings)?;
        let mut components = walk_cycles(&heads);
        let first_free = heads.keys().max().copied().unwrap_or(0) + 1;
        components.extend((first_free..).take(free_loops).map(|label| vec![label]));
        if components.is_empty() {
            return Err(Error::InvalidDiagram("a diagram needs at least one component".into()));
        }
        Ok(LinkDiagram { crossings, components })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn base_points(&self) -> Vec<u32> {
        self.components.iter().map(|c| c[0]).collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    /// Number of components that meet no crossing.
    pub fn free_loop_count(&self) -> usize {
        let heads = self.heads();
        self.components.iter().filter(|c| !heads.contains_key(&c[0])).count()
    }

    pub(crate) fn heads(&self) -> HashMap<u32, ArcHead> {
        arc_heads(&self.crossings).expect("validated at construction")
    }

    pub(crate) fn component_of_arc(&self) -> HashMap<u32, usize> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |&a| (a, i)))
            .collect()
    }

    /// Half the signed count of crossings between components `i` and `j`.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64> {
        let n = self.component_count();
        if i >= n {
            return Err(Error::ComponentIndex(i));
        }
        if j >= n {
            return Err(Error::ComponentIndex(j));
        }
        if i == j {
            return Err(Error::InvalidParameter("linking number needs two distinct components".into()));
        }
        let comp = self.component_of_arc();
        let total: i64 = self
            .crossings
            .iter()
            .filter(|c| {
                let (u, o) = (comp[&c.under_in()], comp[&c.over_in()]);
                (u == i && o == j) || (u == j && o == i)
            })
            .map(|c| c.sign.value())
            .sum();
        if total % 2 != 0 {
            return Err(Error::Invariant(format!("odd signed crossing count {total} between two components")));
        }
        Ok(total / 2)
    }

    /// The diagram with crossing `idx` switched; components and base points are kept.
    pub fn switch_crossing(&self, idx: usize) -> LinkDiagram {
        let mut crossings = self.crossings.clone();
        crossings[idx] = crossings[idx].switched();
        LinkDiagram { crossings, components: self.components.clone() }
    }

    /// The diagram with crossing `idx` replaced by its oriented smoothing.
    ///
    /// Smoothing can merge or split components, so the component partition
    /// is recomputed and base points move to the smallest label of each.
    pub fn smooth_crossing(&self, idx: usize) -> LinkDiagram {
        let c = self.crossings[idx];
        let mut uf = UnionFind::default();
        for (a, b) in c.smoothing_pairs() {
            uf.union(a, b);
        }
        let rest: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != idx)
            .map(|(_, x)| x.relabeled(|a| uf.find(a)))
            .collect();
        let used: BTreeSet<u32> = rest.iter().flat_map(|x| x.arcs).collect();
        let touched: BTreeSet<u32> = c.arcs.iter().map(|&a| uf.find(a)).collect();
        let new_loops = touched.iter().filter(|a| !used.contains(a)).count();
        LinkDiagram::from_crossings(rest, self.free_loop_count() + new_loops)
            .expect("smoothing preserves PD structure")
    }

    /// The one-component diagram obtained by deleting every other component.
    ///
    /// Crossings with the deleted components disappear and the arcs on either
    /// side of them are joined.
    pub fn component_sub_diagram(&self, component: usize) -> Result<LinkDiagram> {
        if component >= self.component_count() {
            return Err(Error::ComponentIndex(component));
        }
        let comp = self.component_of_arc();
        let mut uf = UnionFind::default();
        let mut kept = Vec::new();
        for c in &self.crossings {
            let under_here = comp[&c.under_in()] == component;
            let over_here = comp[&c.over_in()] == component;
            match (under_here, over_here) {
                (true, true) => kept.push(*c),
                (true, false) => uf.union(c.under_in(), c.under_out()),
                (false, true) => uf.union(c.over_in(), c.over_out()),
                (false, false) => {}
            }
        }
        let kept: Vec<Crossing> = kept.iter().map(|c| c.relabeled(|a| uf.find(a))).collect();
        let loops = usize::from(kept.is_empty());
        LinkDiagram::from_crossings(kept, loops)
    }

    /// True when the crossings and arcs form one connected piece.
    ///
    /// A diagram with several pieces represents a split link.
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.component_count() <= 1;
        }
        if self.free_loop_count() > 0 {
            return false;
        }
        let comp = self.component_of_arc();
        let mut uf = UnionFind::default();
        for c in &self.crossings {
            uf.union(comp[&c.under_in()] as u32, comp[&c.over_in()] as u32);
        }
        let root = uf.find(0);
        (1..self.component_count() as u32).all(|i| uf.find(i) == root)
    }

    /// Renumbers arcs `1..=n` in walk order, component by component.
    pub fn normalized(&self) -> LinkDiagram {
        let map: HashMap<u32, u32> = self
            .components
            .iter()
            .flatten()
            .enumerate()
            .map(|(t, &a)| (a, t as u32 + 1))
            .collect();
        LinkDiagram {
            crossings: self.crossings.iter().map(|c| c.relabeled(|a| map[&a])).collect(),
            components: self.components.iter().map(|c| c.iter().map(|a| map[a]).collect()).collect(),
        }
    }

    /// Reorders components; `order[t]` is the old index of the new `t`-th component.
    pub fn with_component_order(&self, order: &[usize]) -> Result<LinkDiagram> {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.component_count()).collect::<Vec<_>>() {
            return Err(Error::InvalidParameter(format!("{order:?} is not a component permutation")));
        }
        let components = order.iter().map(|&i| self.components[i].clone()).collect();
        Ok(LinkDiagram { crossings: self.crossings.clone(), components })
    }
}

/// Maps every arc that enters a crossing to that crossing and its successor arc.
///
/// Rejects codes in which an arc is not entered exactly once and left exactly once.
pub(crate) fn arc_heads(crossings: &[Crossing]) -> Result<HashMap<u32, ArcHead>> {
    let mut heads = HashMap::with_capacity(crossings.len() * 2);
    let mut tails = BTreeSet::new();
    for (idx, c) in crossings.iter().enumerate() {
        if c.arcs.contains(&0) {
            return Err(Error::InvalidDiagram("arc labels must be positive".into()));
        }
        for (inc, out, under) in [(c.under_in(), c.under_out(), true), (c.over_in(), c.over_out(), false)] {
            if heads.insert(inc, ArcHead { crossing: idx, under, next: out }).is_some() {
                return Err(Error::InvalidDiagram(format!("arc {inc} enters two crossings")));
            }
            if !tails.insert(out) {
                return Err(Error::InvalidDiagram(format!("arc {out} leaves two crossings")));
            }
        }
    }
    if let Some(a) = heads.keys().find(|a| !tails.contains(a)) {
        return Err(Error::InvalidDiagram(format!("arc {a} enters a crossing but never leaves one")));
    }
    if let Some(a) = tails.iter().find(|a| !heads.contains_key(a)) {
        return Err(Error::InvalidDiagram(format!("arc {a} leaves a crossing but never enters one")));
    }
    Ok(heads)
}

fn walk_cycles(heads: &HashMap<u32, ArcHead>) -> Vec<Vec<u32>> {
    let mut arcs: Vec<u32> = heads.keys().copied().collect();
    arcs.sort_unstable();
    let mut seen = BTreeSet::new();
    let mut cycles = Vec::new();
    for start in arcs {
        if seen.contains(&start) {
            continue;
        }
        let mut cycle = Vec::new();
        let mut a = start;
        while seen.insert(a) {
            cycle.push(a);
            a = heads[&a].next;
        }
        cycles.push(cycle);
    }
    cycles
}

#[derive(Default)]
struct UnionFind {
    parent: HashMap<u32, u32>,
}

impl UnionFind {
    fn find(&mut self, a: u32) -> u32 {
        let mut root = a;
        while let Some(&p) = self.parent.get(&root) {
            if p == root {
                break;
            }
            root = p;
        }
        let mut cur = a;
        while cur != root {
            let p = self.parent.insert(cur, root).unwrap_or(root);
            cur = p;
        }
        root
    }

    /// Keeps the smaller label as representative.
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(hi, lo);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CrossingSign::*;

    fn trefoil() -> LinkDiagram {
        // right-handed trefoil
        LinkDiagram::from_crossings(
            vec![
                Crossing::new([1, 5, 2, 4], Positive),
                Crossing::new([3, 1, 4, 6], Positive),
                Crossing::new([5, 3, 6, 2], Positive),
            ],
            0,
        )
        .unwrap()
    }

    #[test]
    fn switching_twice_is_identity() {
        for s in [Positive, Negative] {
            let c = Crossing::new([1, 2, 3, 4], s);
            assert_eq!(c.switched().switched(), c);
            assert_eq!(c.switched().under_in(), c.over_in());
            assert_eq!(c.switched().over_out(), c.under_out());
        }
    }

    #[test]
    fn derived_components() {
        let t = trefoil();
        assert_eq!(t.component_count(), 1);
        assert_eq!(t.components()[0], vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(t.writhe(), 3);
    }

    #[test]
    fn declared_components_are_checked() {
        let t = trefoil();
        assert!(LinkDiagram::new(t.crossings().to_vec(), vec![vec![1, 2, 3, 4, 5, 6]]).is_ok());
        assert!(LinkDiagram::new(t.crossings().to_vec(), vec![vec![2, 3, 4, 5, 6, 1]]).is_ok());
        assert!(LinkDiagram::new(t.crossings().to_vec(), vec![vec![1, 3, 2, 4, 5, 6]]).is_err());
        assert!(LinkDiagram::new(t.crossings().to_vec(), vec![vec![1, 2, 3]]).is_err());
        assert!(LinkDiagram::new(vec![], vec![]).is_err());
        assert!(LinkDiagram::new(vec![], vec![vec![7]]).is_ok());
    }

    #[test]
    fn malformed_codes_rejected() {
        let bad = vec![Crossing::new([1, 1, 2, 2], Positive), Crossing::new([1, 3, 4, 5], Positive)];
        assert!(LinkDiagram::from_crossings(bad, 0).is_err());
        assert!(LinkDiagram::from_crossings(vec![Crossing::new([0, 1, 2, 3], Positive)], 0).is_err());
    }

    #[test]
    fn smoothing_a_kink_adds_a_loop() {
        // one-crossing unknot: 1 -> under -> 2 -> over -> 1
        let kink = LinkDiagram::from_crossings(vec![Crossing::new([1, 1, 2, 2], Positive)], 0).unwrap();
        assert_eq!(kink.component_count(), 1);
        let sm = kink.smooth_crossing(0);
        assert_eq!(sm.crossing_count(), 0);
        assert_eq!(sm.component_count(), 2);
        assert_eq!(sm.free_loop_count(), 2);
    }

    #[test]
    fn smoothing_trefoil_crossing_gives_hopf_shape() {
        let sm = trefoil().smooth_crossing(0);
        assert_eq!(sm.crossing_count(), 2);
        assert_eq!(sm.component_count(), 2);
        assert_eq!(sm.linking_number(0, 1).unwrap(), 1);
    }

    #[test]
    fn linking_number_index_errors() {
        let t = trefoil();
        assert_eq!(t.linking_number(0, 1), Err(Error::ComponentIndex(1)));
        assert!(t.linking_number(0, 0).is_err());
    }

    #[test]
    fn sub_diagram_of_knot_is_itself() {
        let t = trefoil();
        let s = t.component_sub_diagram(0).unwrap();
        assert_eq!(s.crossing_count(), 3);
        assert_eq!(s.component_count(), 1);
    }
}
