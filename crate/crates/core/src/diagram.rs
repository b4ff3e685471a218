//! Planar diagram codes: parsing, component tracing, crossing signs,
//! linking numbers, and diagram surgery.
//!
//! Convention: a crossing tuple (a, b, c, d) lists the four arc ends
//! counterclockwise starting from the incoming under-strand, so the
//! under-strand runs a to c. The over-strand direction is recovered by
//! tracing; a component with at least one under-passage is oriented by its
//! tuples, a component that only ever passes over runs in the direction of
//! increasing arc labels unless reversed by an `O` line.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;
use thiserror::Error;

/// Arc label in a PD code. Positive in files; surgery keeps labels stable.
pub type ArcId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PdError {
    #[error("line {line}: {msg}")]
    MalformedLine { line: usize, msg: String },
    #[error("arc {arc} occurs {count} times; every arc must occur exactly twice")]
    ArcCount { arc: ArcId, count: usize },
    #[error("component through arc {arc} passes under in both directions")]
    InconsistentOrientation { arc: ArcId },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramOpError {
    #[error("component index {0} out of range")]
    InvalidComponent(usize),
    #[error("crossing index {0} out of range")]
    InvalidCrossing(usize),
}

/// An oriented link diagram with tracing data precomputed.
///
/// Crossing-free unknot components are counted in `extras` rather than
/// encoded as fake crossings. All derived fields (components, signs) are
/// rebuilt whenever a surgery operation produces a new diagram.
#[derive(Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<[ArcId; 4]>,
    extras: usize,
    /// Orientation reversal for components with no under-passages; indexed
    /// like `components`. Entries for forced components stay false.
    flips: Vec<bool>,
    components: Vec<Vec<ArcId>>,
    comp_of: BTreeMap<ArcId, usize>,
    signs: Vec<i8>,
    over_in: Vec<u8>,
}

struct Traced {
    flips: Vec<bool>,
    components: Vec<Vec<ArcId>>,
    comp_of: BTreeMap<ArcId, usize>,
    signs: Vec<i8>,
    over_in: Vec<u8>,
}

fn occurrences(crossings: &[[ArcId; 4]]) -> Result<BTreeMap<ArcId, Vec<(usize, usize)>>, PdError> {
    let mut occ: BTreeMap<ArcId, Vec<(usize, usize)>> = BTreeMap::new();
    for (ci, tup) in crossings.iter().enumerate() {
        for (s, &a) in tup.iter().enumerate() {
            occ.entry(a).or_default().push((ci, s));
        }
    }
    for (&arc, slots) in &occ {
        if slots.len() != 2 {
            return Err(PdError::ArcCount {
                arc,
                count: slots.len(),
            });
        }
    }
    Ok(occ)
}

fn trace(crossings: &[[ArcId; 4]], flips_in: &[bool]) -> Result<Traced, PdError> {
    let occ = occurrences(crossings)?;
    let walk = |start: (usize, usize), a0: ArcId| -> (Vec<ArcId>, Vec<(usize, usize)>) {
        let mut cycle = Vec::new();
        let mut entries = Vec::new();
        let (mut ci, mut s) = start;
        let mut arc = a0;
        loop {
            cycle.push(arc);
            entries.push((ci, s));
            let exit = (s + 2) % 4;
            let next_arc = crossings[ci][exit];
            let pair = &occ[&next_arc];
            let next = if pair[0] == (ci, exit) { pair[1] } else { pair[0] };
            arc = next_arc;
            ci = next.0;
            s = next.1;
            if arc == a0 && (ci, s) == start {
                break;
            }
        }
        (cycle, entries)
    };

    let mut entry_of = vec![[false; 4]; crossings.len()];
    let mut components = Vec::new();
    let mut flips = Vec::new();
    let mut seen: BTreeSet<ArcId> = BTreeSet::new();
    for &a0 in occ.keys() {
        if seen.contains(&a0) {
            continue;
        }
        let comp_idx = components.len();
        let (mut cycle, mut entries) = walk(occ[&a0][0], a0);
        let agree = entries.iter().filter(|&&(_, s)| s == 0).count();
        let disagree = entries.iter().filter(|&&(_, s)| s == 2).count();
        if agree > 0 && disagree > 0 {
            return Err(PdError::InconsistentOrientation { arc: a0 });
        }
        let mut flagged = false;
        let flip = if disagree > 0 {
            true
        } else if agree > 0 {
            false
        } else {
            // free component: direction of increasing labels, maybe reversed
            flagged = flips_in.get(comp_idx).copied().unwrap_or(false);
            let succ = cycle[1 % cycle.len()];
            let pred = cycle[cycle.len() - 1];
            (succ > pred) != flagged
        };
        if flip {
            let redo = walk(occ[&a0][1], a0);
            cycle = redo.0;
            entries = redo.1;
        }
        seen.extend(cycle.iter().copied());
        for (ci, s) in entries {
            entry_of[ci][s] = true;
        }
        components.push(cycle);
        flips.push(flagged);
    }

    let mut comp_of = BTreeMap::new();
    for (i, comp) in components.iter().enumerate() {
        for &a in comp {
            comp_of.insert(a, i);
        }
    }
    let mut signs = Vec::with_capacity(crossings.len());
    let mut over_in = Vec::with_capacity(crossings.len());
    for entries in &entry_of {
        debug_assert!(entries[0], "under-strand must enter at slot 0 after tracing");
        let oi = if entries[1] { 1u8 } else { 3u8 };
        debug_assert!(entries[oi as usize]);
        over_in.push(oi);
        signs.push(if oi == 3 { 1 } else { -1 });
    }
    Ok(Traced {
        flips,
        components,
        comp_of,
        signs,
        over_in,
    })
}

impl LinkDiagram {
    fn build(crossings: Vec<[ArcId; 4]>, extras: usize, flips: Vec<bool>) -> Result<Self, PdError> {
        let t = trace(&crossings, &flips)?;
        Ok(LinkDiagram {
            crossings,
            extras,
            flips: t.flips,
            components: t.components,
            comp_of: t.comp_of,
            signs: t.signs,
            over_in: t.over_in,
        })
    }

    fn rebuilt(&self, crossings: Vec<[ArcId; 4]>, extras: usize, flips: Vec<bool>) -> Self {
        Self::build(crossings, extras, flips).expect("surgery preserves diagram validity")
    }

    pub fn from_crossings(crossings: Vec<[ArcId; 4]>, extras: usize) -> Result<Self, PdError> {
        Self::build(crossings, extras, Vec::new())
    }

    /// The n-component unlink as a crossing-free diagram.
    pub fn unlink(n: usize) -> Self {
        Self::build(Vec::new(), n, Vec::new()).expect("crossing-free diagrams are always valid")
    }

    pub fn crossings(&self) -> &[[ArcId; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn unknotted_extras(&self) -> usize {
        self.extras
    }

    /// Traced components as cyclic arc sequences in orientation order,
    /// sorted by smallest arc label. Crossing-free extras are not listed.
    pub fn components(&self) -> &[Vec<ArcId>] {
        &self.components
    }

    /// Total component count including crossing-free extras.
    pub fn mu(&self) -> usize {
        self.components.len() + self.extras
    }

    pub fn component_of(&self, arc: ArcId) -> Option<usize> {
        self.comp_of.get(&arc).copied()
    }

    /// Crossing signs in crossing order, +1 or -1.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| i64::from(s)).sum()
    }

    /// Symmetric matrix of pairwise linking numbers, zero diagonal.
    /// Components are indexed traced-first, then crossing-free extras
    /// (whose rows are all zero).
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.mu();
        let mut m = vec![vec![0i64; n]; n];
        for (ci, tup) in self.crossings.iter().enumerate() {
            let i = self.comp_of[&tup[0]];
            let j = self.comp_of[&tup[1]];
            if i != j {
                m[i][j] += i64::from(self.signs[ci]);
                m[j][i] += i64::from(self.signs[ci]);
            }
        }
        for row in &mut m {
            for x in row.iter_mut() {
                debug_assert!(*x % 2 == 0, "signed inter-component count is even");
                *x /= 2;
            }
        }
        m
    }

    pub fn is_algebraically_split(&self) -> bool {
        let m = self.linking_matrix();
        m.iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| i == j || x == 0))
    }

    /// Connected pieces of the crossing-sharing graph, each as its own
    /// diagram with original arc labels; crossing-free extras come last as
    /// single-unknot pieces. Orientation override flags are not carried.
    pub fn split_components(&self) -> Vec<LinkDiagram> {
        let ntr = self.components.len();
        let mut parent: Vec<usize> = (0..ntr).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for tup in &self.crossings {
            let i = self.comp_of[&tup[0]];
            let j = self.comp_of[&tup[1]];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
        let mut groups: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..ntr {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().insert(i);
        }
        let mut pieces = Vec::new();
        for group in groups.values() {
            let crossings: Vec<[ArcId; 4]> = self
                .crossings
                .iter()
                .filter(|tup| group.contains(&self.comp_of[&tup[0]]))
                .copied()
                .collect();
            pieces.push(self.rebuilt(crossings, 0, Vec::new()));
        }
        for _ in 0..self.extras {
            pieces.push(LinkDiagram::unlink(1));
        }
        pieces
    }

    pub fn is_geometrically_split(&self) -> bool {
        self.split_components().len() >= 2
    }

    /// Places two diagrams side by side; the right operand's arc labels are
    /// shifted past the left's to keep them disjoint.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let offset = self
            .crossings
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0);
        let mut crossings = self.crossings.clone();
        crossings.extend(
            other
                .crossings
                .iter()
                .map(|tup| tup.map(|a| a + offset)),
        );
        let mut flips = self.flips.clone();
        flips.extend(other.flips.iter().copied());
        self.rebuilt(crossings, self.extras + other.extras, flips)
    }

    /// Removes the listed components. Crossings between a kept and a
    /// deleted strand dissolve by merging the kept strand's two arcs;
    /// kept components that lose every crossing become crossing-free
    /// extras.
    pub fn delete_components(&self, subset: &[usize]) -> Result<LinkDiagram, DiagramOpError> {
        let del: BTreeSet<usize> = subset.iter().copied().collect();
        if let Some(&bad) = del.iter().find(|&&i| i >= self.mu()) {
            return Err(DiagramOpError::InvalidComponent(bad));
        }
        let ntr = self.components.len();
        let extras = self.extras - del.iter().filter(|&&i| i >= ntr).count();
        let keep_arcs: Vec<ArcId> = self
            .components
            .iter()
            .enumerate()
            .filter(|(i, _)| !del.contains(i))
            .flat_map(|(_, c)| c.iter().copied())
            .collect();
        let mut uf = ArcUnion::new(keep_arcs.iter().copied());
        let mut kept = Vec::new();
        for tup in &self.crossings {
            let keep_under = !del.contains(&self.comp_of[&tup[0]]);
            let keep_over = !del.contains(&self.comp_of[&tup[1]]);
            match (keep_under, keep_over) {
                (true, true) => kept.push(*tup),
                (true, false) => uf.union(tup[0], tup[2]),
                (false, true) => uf.union(tup[1], tup[3]),
                (false, false) => {}
            }
        }
        let mut crossings = Vec::with_capacity(kept.len());
        for tup in kept {
            crossings.push(tup.map(|a| uf.find(a)));
        }
        let referenced: BTreeSet<ArcId> = crossings.iter().flatten().copied().collect();
        let loops = keep_arcs
            .iter()
            .map(|&a| uf.find(a))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .filter(|r| !referenced.contains(r))
            .count();
        Ok(self.rebuilt(crossings, extras + loops, Vec::new()))
    }

    /// Swaps the over- and under-strand at one crossing (sign flips).
    pub fn change_crossing(&self, idx: usize) -> Result<LinkDiagram, DiagramOpError> {
        if idx >= self.crossings.len() {
            return Err(DiagramOpError::InvalidCrossing(idx));
        }
        let mut crossings = self.crossings.clone();
        crossings[idx] = rotate(crossings[idx], self.over_in[idx] as usize);
        Ok(self.rebuilt(crossings, self.extras, Vec::new()))
    }

    /// Replaces one crossing by the orientation-respecting smoothing.
    /// Between distinct components this merges them; on a self-crossing it
    /// splits one component in two.
    pub fn smooth_crossing(&self, idx: usize) -> Result<LinkDiagram, DiagramOpError> {
        if idx >= self.crossings.len() {
            return Err(DiagramOpError::InvalidCrossing(idx));
        }
        let tup = self.crossings[idx];
        let mut uf = ArcUnion::new(self.crossings.iter().flatten().copied());
        if self.over_in[idx] == 3 {
            uf.union(tup[0], tup[1]);
            uf.union(tup[2], tup[3]);
        } else {
            uf.union(tup[0], tup[3]);
            uf.union(tup[1], tup[2]);
        }
        let mut crossings = Vec::with_capacity(self.crossings.len() - 1);
        for (ci, t) in self.crossings.iter().enumerate() {
            if ci != idx {
                crossings.push(t.map(|a| uf.find(a)));
            }
        }
        let referenced: BTreeSet<ArcId> = crossings.iter().flatten().copied().collect();
        let mut roots = BTreeSet::new();
        for t in &self.crossings {
            for &a in t {
                roots.insert(uf.find(a));
            }
        }
        let loops = roots.iter().filter(|r| !referenced.contains(r)).count();
        Ok(self.rebuilt(crossings, self.extras + loops, Vec::new()))
    }

    /// Mirror image: every crossing swapped. writhe(mirror) = -writhe.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.over_in)
            .map(|(tup, &oi)| rotate(*tup, oi as usize))
            .collect();
        self.rebuilt(crossings, self.extras, Vec::new())
    }

    /// Reverses the orientation of one component. For a component with
    /// under-passages this rotates its under-crossing tuples by two slots;
    /// a component that only passes over gets its direction flag toggled.
    pub fn reverse_component(&self, comp: usize) -> Result<LinkDiagram, DiagramOpError> {
        if comp >= self.mu() {
            return Err(DiagramOpError::InvalidComponent(comp));
        }
        if comp >= self.components.len() {
            return Ok(self.clone());
        }
        let mut crossings = self.crossings.clone();
        let mut rotated_any = false;
        for (ci, tup) in self.crossings.iter().enumerate() {
            if self.comp_of[&tup[0]] == comp {
                crossings[ci] = rotate(*tup, 2);
                rotated_any = true;
            }
        }
        let mut flips = self.flips.clone();
        if !rotated_any {
            flips[comp] = !flips[comp];
        }
        Ok(self.rebuilt(crossings, self.extras, flips))
    }

    /// Serializes back to the PD file format accepted by [`parse_pd`].
    pub fn render_pd(&self) -> String {
        let mut out = String::new();
        for tup in &self.crossings {
            let _ = writeln!(out, "X {} {} {} {}", tup[0], tup[1], tup[2], tup[3]);
        }
        for _ in 0..self.extras {
            let _ = writeln!(out, "U");
        }
        for (i, &f) in self.flips.iter().enumerate() {
            if f {
                let _ = writeln!(out, "O {i} -");
            }
        }
        out
    }
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinkDiagram(mu={}, crossings={:?}, extras={})",
            self.mu(),
            self.crossings,
            self.extras
        )
    }
}

fn rotate(tup: [ArcId; 4], by: usize) -> [ArcId; 4] {
    [
        tup[by % 4],
        tup[(by + 1) % 4],
        tup[(by + 2) % 4],
        tup[(by + 3) % 4],
    ]
}

struct ArcUnion {
    parent: BTreeMap<ArcId, ArcId>,
}

impl ArcUnion {
    fn new(arcs: impl Iterator<Item = ArcId>) -> Self {
        ArcUnion {
            parent: arcs.map(|a| (a, a)).collect(),
        }
    }

    fn find(&mut self, a: ArcId) -> ArcId {
        let p = self.parent[&a];
        if p == a {
            return a;
        }
        let root = self.find(p);
        self.parent.insert(a, root);
        root
    }

    fn union(&mut self, a: ArcId, b: ArcId) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent.insert(ra.max(rb), ra.min(rb));
        }
    }
}

/// Parses the PD file format: one item per line. `X a b c d` is a crossing
/// (arc ids are positive integers), `U` a crossing-free unknot component,
/// `O comp dir` reverses (`-`) or affirms (`+`) the orientation of the
/// 0-indexed component `comp`, and `#` starts a comment.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, PdError> {
    let mut crossings = Vec::new();
    let mut extras = 0usize;
    let mut overrides: Vec<(usize, usize, bool)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let malformed = |msg: String| PdError::MalformedLine { line, msg };
        match tokens[0] {
            "X" => {
                if tokens.len() != 5 {
                    return Err(malformed(format!(
                        "X takes exactly 4 arc ids, got {}",
                        tokens.len() - 1
                    )));
                }
                let mut tup = [0 as ArcId; 4];
                for (slot, tok) in tokens[1..].iter().enumerate() {
                    let arc: ArcId = tok
                        .parse()
                        .ok()
                        .filter(|&a| a >= 1)
                        .ok_or_else(|| malformed(format!("bad arc id {tok:?}")))?;
                    tup[slot] = arc;
                }
                crossings.push(tup);
            }
            "U" => {
                if tokens.len() != 1 {
                    return Err(malformed("U takes no arguments".into()));
                }
                extras += 1;
            }
            "O" => {
                if tokens.len() != 3 {
                    return Err(malformed("O takes a component index and + or -".into()));
                }
                let comp: usize = tokens[1]
                    .parse()
                    .map_err(|_| malformed(format!("bad component index {:?}", tokens[1])))?;
                let reverse = match tokens[2] {
                    "+" => false,
                    "-" => true,
                    other => return Err(malformed(format!("bad direction {other:?}"))),
                };
                overrides.push((line, comp, reverse));
            }
            other => {
                return Err(malformed(format!("unknown item {other:?}")));
            }
        }
    }
    let mut d = LinkDiagram::from_crossings(crossings, extras)?;
    for (line, comp, reverse) in overrides {
        if comp >= d.mu() {
            return Err(PdError::MalformedLine {
                line,
                msg: format!("component index {comp} out of range (mu = {})", d.mu()),
            });
        }
        if reverse {
            d = d
                .reverse_component(comp)
                .expect("index validated against mu");
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus_diagram;

    fn trefoil() -> LinkDiagram {
        corpus_diagram("trefoil_left").unwrap()
    }

    fn whitehead() -> LinkDiagram {
        corpus_diagram("whitehead").unwrap()
    }

    fn borromean() -> LinkDiagram {
        corpus_diagram("borromean").unwrap()
    }

    fn hopf() -> LinkDiagram {
        corpus_diagram("hopf_pos").unwrap()
    }

    #[test]
    fn parse_unknot_lines() {
        let d = parse_pd("U").unwrap();
        assert_eq!(d.mu(), 1);
        assert_eq!(d.crossing_count(), 0);
        let d2 = parse_pd("# two circles\nU\n\nU\n").unwrap();
        assert_eq!(d2.mu(), 2);
    }

    #[test]
    fn trefoil_shape() {
        let d = trefoil();
        assert_eq!(d.mu(), 1);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.signs(), &[-1, -1, -1]);
    }

    #[test]
    fn arc_count_rejected() {
        let err = parse_pd("X 1 1 1 2").unwrap_err();
        assert_eq!(err, PdError::ArcCount { arc: 1, count: 3 });
    }

    #[test]
    fn malformed_lines_rejected() {
        for text in ["X 1 2 3", "Y 1 2 3 4", "X 1 2 3 0", "X a 2 3 4", "U 2", "O 0", "O 0 ?"] {
            assert!(
                matches!(parse_pd(text), Err(PdError::MalformedLine { .. })),
                "{text:?} should be malformed"
            );
        }
        assert!(matches!(
            parse_pd("U\nO 3 -"),
            Err(PdError::MalformedLine { line: 2, .. })
        ));
    }

    #[test]
    fn inconsistent_under_direction_rejected() {
        // trefoil with one crossing tuple rotated by two: the strand would
        // have to run both ways
        let err = parse_pd("X 1 4 2 5\nX 4 1 3 6\nX 5 2 6 3").unwrap_err();
        assert!(matches!(err, PdError::InconsistentOrientation { .. }));
    }

    #[test]
    fn linking_matrices() {
        assert_eq!(hopf().linking_matrix(), vec![vec![0, 1], vec![1, 0]]);
        assert!(!hopf().is_algebraically_split());
        let w = whitehead().linking_matrix();
        assert_eq!(w, vec![vec![0, 0], vec![0, 0]]);
        assert!(whitehead().is_algebraically_split());
        assert!(borromean().is_algebraically_split());
        assert_eq!(trefoil().linking_matrix(), vec![vec![0]]);
    }

    #[test]
    fn mirror_negates_writhe_and_is_involutive() {
        for name in ["trefoil_left", "figure8", "hopf_pos", "whitehead", "borromean"] {
            let d = corpus_diagram(name).unwrap();
            let m = d.mirror();
            assert_eq!(m.writhe(), -d.writhe(), "{name}");
            assert_eq!(m.mirror(), d, "{name}");
        }
    }

    #[test]
    fn change_crossing_is_involutive_and_flips_sign() {
        let d = trefoil();
        for idx in 0..3 {
            let c = d.change_crossing(idx).unwrap();
            assert_eq!(c.signs()[idx], -d.signs()[idx]);
            assert_eq!(c.change_crossing(idx).unwrap(), d);
        }
        assert_eq!(
            d.change_crossing(7),
            Err(DiagramOpError::InvalidCrossing(7))
        );
    }

    #[test]
    fn deletions() {
        let w = whitehead();
        assert_eq!(w.delete_components(&[]).unwrap(), w);
        for i in 0..2 {
            let sub = w.delete_components(&[i]).unwrap();
            assert_eq!(sub.mu(), 1, "residue of deleting component {i}");
        }
        let b = borromean();
        for i in 0..3 {
            assert_eq!(b.delete_components(&[i]).unwrap().mu(), 2);
        }
        assert_eq!(b.delete_components(&[0, 2]).unwrap().mu(), 1);
        assert_eq!(b.delete_components(&[0, 1, 2]).unwrap().mu(), 0);
        assert_eq!(
            w.delete_components(&[5]),
            Err(DiagramOpError::InvalidComponent(5))
        );
    }

    #[test]
    fn smoothing_changes_component_count_by_one() {
        let h = hopf();
        let s = h.smooth_crossing(0).unwrap();
        assert_eq!(s.mu(), 1);
        assert_eq!(s.crossing_count(), 1);
        // a kink's self-crossing smooths into a 2-component unlink
        let kink = parse_pd("X 1 1 2 2").unwrap();
        let split = kink.smooth_crossing(0).unwrap();
        assert_eq!(split.mu(), 2);
        assert_eq!(split.crossing_count(), 0);
        assert_eq!(
            kink.smooth_crossing(1),
            Err(DiagramOpError::InvalidCrossing(1))
        );
    }

    #[test]
    fn union_and_split_round_trip() {
        let t = trefoil();
        let u = t.disjoint_union(&t);
        assert_eq!(u.mu(), 2);
        assert!(u.is_geometrically_split());
        assert!(u.is_algebraically_split());
        let pieces = u.split_components();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0], t);
        assert_eq!(pieces[1].crossing_count(), 3);
        assert_eq!(pieces[1].writhe(), t.writhe());
        assert!(!whitehead().is_geometrically_split());
        let with_extra = parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\nU").unwrap();
        assert!(with_extra.is_geometrically_split());
        assert_eq!(with_extra.split_components().len(), 2);
    }

    #[test]
    fn geometric_split_implies_algebraic_on_corpus_unions() {
        for a in ["trefoil_left", "figure8", "whitehead"] {
            for b in ["trefoil_right", "borromean"] {
                let u = corpus_diagram(a)
                    .unwrap()
                    .disjoint_union(&corpus_diagram(b).unwrap());
                assert!(u.is_geometrically_split());
                assert!(u.is_algebraically_split(), "{a} u {b}");
            }
        }
    }

    #[test]
    fn reverse_component_effects() {
        let w = whitehead();
        for i in 0..2 {
            let r = w.reverse_component(i).unwrap();
            assert_eq!(r.writhe(), w.writhe(), "lk=0 reversal keeps writhe");
            assert_eq!(r.reverse_component(i).unwrap(), w);
        }
        let h = hopf();
        let r = h.reverse_component(0).unwrap();
        assert_eq!(r.linking_matrix(), vec![vec![0, -1], vec![-1, 0]]);
        assert_eq!(r.writhe(), -2);
        assert_eq!(h.reverse_component(9), Err(DiagramOpError::InvalidComponent(9)));
    }

    #[test]
    fn reverse_of_over_only_component_uses_flag() {
        // component {1,2} passes over twice and never under
        let d = parse_pd("X 3 1 4 2\nX 4 1 3 2").unwrap();
        assert_eq!(d.signs(), &[-1, 1]);
        let r = d.reverse_component(0).unwrap();
        assert_eq!(r.signs(), &[1, -1]);
        assert_eq!(r.writhe(), 0);
        assert_eq!(r.reverse_component(0).unwrap(), d);
        assert_eq!(parse_pd(&r.render_pd()).unwrap(), r);
    }

    #[test]
    fn orientation_override_lines() {
        let w = whitehead();
        let text = format!("{}O 0 -\n", w.render_pd());
        assert_eq!(parse_pd(&text).unwrap(), w.reverse_component(0).unwrap());
        let text_plus = format!("{}O 1 +\n", w.render_pd());
        assert_eq!(parse_pd(&text_plus).unwrap(), w);
    }

    #[test]
    fn render_round_trips() {
        for name in [
            "unknot",
            "trefoil_left",
            "trefoil_right",
            "figure8",
            "hopf_pos",
            "whitehead",
            "borromean",
        ] {
            let d = corpus_diagram(name).unwrap();
            assert_eq!(parse_pd(&d.render_pd()).unwrap(), d, "{name}");
        }
        let surgered = whitehead().reverse_component(1).unwrap();
        assert_eq!(parse_pd(&surgered.render_pd()).unwrap(), surgered);
    }
}
