//! Combinatorial diagrams of oriented links and singular links.
//!
//! A diagram is a list of crossings over abstract oriented arcs plus a
//! counter of crossingless circles. Each crossing carries two strands: on a
//! positive or negative crossing strand `a` is the understrand and `b` the
//! overstrand; on a singular crossing (a transversal double point) the
//! labelling fixes the chirality: promoting strand `b` to the overstrand is
//! the positive resolution.
//!
//! Arc identifiers are arbitrary positive integers. Planarity of the code is
//! trusted, not verified; the skein evaluators are correct for diagrams that
//! present actual links.

mod combination;
mod family;
mod parse;

pub use combination::{differentiate_combination, negative_resolution, resolve, FormalCombination};
pub use family::{
    close_braid, eight_t_combination, eight_t_diagrams, make_g, BraidLetter, BraidWord,
    EightTClosure,
};
pub use parse::{parse_diagram, render_diagram, NamedDiagram};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

pub type ArcId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Positive,
    Negative,
    Singular,
}

/// One crossing. Strand `a` runs `a_in -> a_out`, strand `b` runs
/// `b_in -> b_out`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub a_in: ArcId,
    pub a_out: ArcId,
    pub b_in: ArcId,
    pub b_out: ArcId,
}

impl Crossing {
    /// Exchange over- and understrand; flips the sign of a classical
    /// crossing.
    pub fn switched(&self) -> Crossing {
        let kind = match self.kind {
            CrossingKind::Positive => CrossingKind::Negative,
            CrossingKind::Negative => CrossingKind::Positive,
            CrossingKind::Singular => CrossingKind::Singular,
        };
        Crossing {
            kind,
            a_in: self.b_in,
            a_out: self.b_out,
            b_in: self.a_in,
            b_out: self.a_out,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    /// An arc id occurs twice as an in-slot or twice as an out-slot.
    DuplicateSlot(ArcId),
    /// An arc id occurs as an in-slot without an out-slot or vice versa.
    UnbalancedArc(ArcId),
    /// No crossings and no free loops.
    Empty,
    CrossingOutOfRange(usize),
    /// The operation needs a classical crossing but found a singular one.
    SingularCrossing(usize),
    /// The operation needs a singular crossing but found a classical one.
    NotSingular(usize),
    /// Generator family index out of range (`l` must not exceed `n`).
    InvalidFamilyIndex { l: usize, n: usize },
    /// A parse failure, with 1-based line number.
    Parse { line: usize, msg: String },
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::DuplicateSlot(a) => write!(f, "arc {a} used twice in the same role"),
            DiagramError::UnbalancedArc(a) => {
                write!(f, "arc {a} does not appear exactly once as in and once as out")
            }
            DiagramError::Empty => write!(f, "diagram has no crossings and no free loops"),
            DiagramError::CrossingOutOfRange(i) => write!(f, "crossing index {i} out of range"),
            DiagramError::SingularCrossing(i) => write!(f, "crossing {i} is singular"),
            DiagramError::NotSingular(i) => write!(f, "crossing {i} is not singular"),
            DiagramError::InvalidFamilyIndex { l, n } => {
                write!(f, "generator index l = {l} exceeds n = {n}")
            }
            DiagramError::Parse { line, msg } => write!(f, "line {line}: {msg}"),
        }
    }
}

impl std::error::Error for DiagramError {}

/// An oriented link or singular-link diagram.
#[derive(Debug, Clone)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    free_loops: u32,
}

impl Diagram {
    /// Validate the arc structure: every arc id appears exactly once as an
    /// in-slot and exactly once as an out-slot.
    pub fn new(crossings: Vec<Crossing>, free_loops: u32) -> Result<Self, DiagramError> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        let mut ins = BTreeSet::new();
        let mut outs = BTreeSet::new();
        for c in &crossings {
            for a in [c.a_in, c.b_in] {
                if !ins.insert(a) {
                    return Err(DiagramError::DuplicateSlot(a));
                }
            }
            for a in [c.a_out, c.b_out] {
                if !outs.insert(a) {
                    return Err(DiagramError::DuplicateSlot(a));
                }
            }
        }
        if let Some(&a) = ins.symmetric_difference(&outs).next() {
            return Err(DiagramError::UnbalancedArc(a));
        }
        Ok(Diagram {
            crossings,
            free_loops,
        })
    }

    /// A crossingless diagram of `k` disjoint circles, `k` positive.
    pub fn unlink(k: u32) -> Self {
        assert!(k >= 1, "a diagram must be nonempty");
        Diagram {
            crossings: vec![],
            free_loops: k,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn singular_indices(&self) -> Vec<usize> {
        self.crossings
            .iter()
            .enumerate()
            .filter(|(_, c)| c.kind == CrossingKind::Singular)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_classical(&self) -> bool {
        self.crossings
            .iter()
            .all(|c| c.kind != CrossingKind::Singular)
    }

    /// Successor map on arcs: entering a crossing on an in-slot exits on the
    /// same strand's out-slot.
    pub fn arc_successor(&self) -> BTreeMap<ArcId, ArcId> {
        let mut succ = BTreeMap::new();
        for c in &self.crossings {
            succ.insert(c.a_in, c.a_out);
            succ.insert(c.b_in, c.b_out);
        }
        succ
    }

    /// Strand cycles, each listed from its minimal arc, ordered by that arc.
    /// Free loops are not included.
    pub fn strand_cycles(&self) -> Vec<Vec<ArcId>> {
        let succ = self.arc_successor();
        let mut seen = BTreeSet::new();
        let mut cycles = vec![];
        for &start in succ.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![];
            let mut x = start;
            loop {
                cycle.push(x);
                seen.insert(x);
                x = succ[&x];
                if x == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Number of link components: strand cycles plus free loops.
    pub fn component_count(&self) -> usize {
        self.strand_cycles().len() + self.free_loops as usize
    }

    /// Exchange over- and understrand at crossing `i`.
    pub fn switch_crossing(&self, i: usize) -> Result<Diagram, DiagramError> {
        let c = self
            .crossings
            .get(i)
            .ok_or(DiagramError::CrossingOutOfRange(i))?;
        if c.kind == CrossingKind::Singular {
            return Err(DiagramError::SingularCrossing(i));
        }
        let mut out = self.clone();
        out.crossings[i] = c.switched();
        Ok(out)
    }

    /// Replace classical crossing `i` by a double point, oriented so that
    /// its positive resolution is the positive form of this crossing. For a
    /// negative crossing the strand roles swap, keeping the chirality
    /// convention consistent with the planar picture.
    pub fn singularize_crossing(&self, i: usize) -> Result<Diagram, DiagramError> {
        let c = self
            .crossings
            .get(i)
            .ok_or(DiagramError::CrossingOutOfRange(i))?;
        let base = match c.kind {
            CrossingKind::Positive => *c,
            CrossingKind::Negative => c.switched(),
            CrossingKind::Singular => return Err(DiagramError::SingularCrossing(i)),
        };
        let mut out = self.clone();
        out.crossings[i] = Crossing {
            kind: CrossingKind::Singular,
            ..base
        };
        Ok(out)
    }

    /// Replace crossing `i` by its oriented smoothing: the strand arriving
    /// on `a_in` continues onto `b_out`, and the one arriving on `b_in`
    /// onto `a_out`. A reconnection that closes up without meeting another
    /// crossing becomes a free loop.
    pub fn smooth_crossing(&self, i: usize) -> Result<Diagram, DiagramError> {
        let c = *self
            .crossings
            .get(i)
            .ok_or(DiagramError::CrossingOutOfRange(i))?;
        let mut crossings: Vec<Crossing> = self.crossings.clone();
        crossings.remove(i);

        // Union-find over the four arcs at the removed crossing, glued by
        // the two reconnections.
        let mut classes: Vec<BTreeSet<ArcId>> = vec![];
        for (x, y) in [(c.a_in, c.b_out), (c.b_in, c.a_out)] {
            let ix = classes.iter().position(|s| s.contains(&x));
            let iy = classes.iter().position(|s| s.contains(&y));
            match (ix, iy) {
                (None, None) => classes.push([x, y].into_iter().collect()),
                (Some(i), None) => {
                    classes[i].insert(y);
                }
                (None, Some(j)) => {
                    classes[j].insert(x);
                }
                (Some(i), Some(j)) if i != j => {
                    let (lo, hi) = (i.min(j), i.max(j));
                    let moved = classes.remove(hi);
                    classes[lo].extend(moved);
                }
                _ => {}
            }
        }

        let mut rename: HashMap<ArcId, ArcId> = HashMap::new();
        let mut free_loops = self.free_loops;
        for class in classes {
            let referenced = crossings.iter().any(|cr| {
                [cr.a_in, cr.a_out, cr.b_in, cr.b_out]
                    .iter()
                    .any(|a| class.contains(a))
            });
            if referenced {
                let rep = *class.first().unwrap();
                for a in class {
                    rename.insert(a, rep);
                }
            } else {
                // The reconnection closed up into a crossingless circle.
                free_loops += 1;
            }
        }
        for cr in &mut crossings {
            for slot in [&mut cr.a_in, &mut cr.a_out, &mut cr.b_in, &mut cr.b_out] {
                if let Some(&rep) = rename.get(slot) {
                    *slot = rep;
                }
            }
        }
        Ok(Diagram {
            crossings,
            free_loops,
        })
    }

    /// Insert a one-crossing kink on the arc `arc`; `positive` selects the
    /// sign of the new crossing. The link presented is unchanged.
    pub fn with_kink(&self, arc: ArcId, positive: bool) -> Diagram {
        let fresh = self.max_arc_id() + 1;
        let w = fresh;
        let v = fresh + 1;
        let mut crossings = self.crossings.clone();
        // Split `arc` at the kink: the head of `arc` now reads `v`.
        for cr in &mut crossings {
            for slot in [&mut cr.a_in, &mut cr.b_in] {
                if *slot == arc {
                    *slot = v;
                }
            }
        }
        // First pass arc -> w, second pass w -> v.
        let kind = if positive {
            CrossingKind::Positive
        } else {
            CrossingKind::Negative
        };
        crossings.push(Crossing {
            kind,
            a_in: arc,
            a_out: w,
            b_in: w,
            b_out: v,
        });
        Diagram {
            crossings,
            free_loops: self.free_loops,
        }
    }

    pub fn max_arc_id(&self) -> ArcId {
        self.crossings
            .iter()
            .flat_map(|c| [c.a_in, c.a_out, c.b_in, c.b_out])
            .max()
            .unwrap_or(0)
    }

    /// Split union of two diagrams; the other diagram's arcs are shifted
    /// past this one's.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let shift = self.max_arc_id();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            kind: c.kind,
            a_in: c.a_in + shift,
            a_out: c.a_out + shift,
            b_in: c.b_in + shift,
            b_out: c.b_out + shift,
        }));
        Diagram {
            crossings,
            free_loops: self.free_loops + other.free_loops,
        }
    }

    /// A byte string equal for diagrams that differ only by arc relabelling
    /// and crossing reordering. Computed by minimizing a deterministic
    /// traversal labelling over all start arcs, independently per connected
    /// cluster of crossings.
    pub fn canonical_encoding(&self) -> Vec<u8> {
        let mut cluster_codes: Vec<Vec<u8>> = self
            .crossing_clusters()
            .into_iter()
            .map(|cluster| self.cluster_encoding(&cluster))
            .collect();
        cluster_codes.sort();
        let mut out = vec![];
        out.extend((cluster_codes.len() as u32).to_be_bytes());
        for code in cluster_codes {
            out.extend((code.len() as u32).to_be_bytes());
            out.extend(code);
        }
        out.extend(self.free_loops.to_be_bytes());
        out
    }

    /// Connected components of the crossing adjacency graph (crossings are
    /// adjacent when they share an arc).
    fn crossing_clusters(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut arc_to_crossings: HashMap<ArcId, Vec<usize>> = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for a in [c.a_in, c.a_out, c.b_in, c.b_out] {
                arc_to_crossings.entry(a).or_default().push(i);
            }
        }
        let mut seen = vec![false; n];
        let mut clusters = vec![];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut cluster = vec![];
            seen[start] = true;
            while let Some(i) = stack.pop() {
                cluster.push(i);
                let c = &self.crossings[i];
                for a in [c.a_in, c.a_out, c.b_in, c.b_out] {
                    for &j in &arc_to_crossings[&a] {
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
            cluster.sort();
            clusters.push(cluster);
        }
        clusters
    }

    fn cluster_encoding(&self, cluster: &[usize]) -> Vec<u8> {
        let succ = self.arc_successor();
        // head[x] = crossing where x is an in-slot; tail[x] = where it is an
        // out-slot, restricted to the cluster.
        let mut head: HashMap<ArcId, usize> = HashMap::new();
        let mut tail: HashMap<ArcId, usize> = HashMap::new();
        let mut arcs: BTreeSet<ArcId> = BTreeSet::new();
        for &i in cluster {
            let c = &self.crossings[i];
            head.insert(c.a_in, i);
            head.insert(c.b_in, i);
            tail.insert(c.a_out, i);
            tail.insert(c.b_out, i);
            arcs.extend([c.a_in, c.a_out, c.b_in, c.b_out]);
        }

        let mut best: Option<Vec<u8>> = None;
        for &start in &arcs {
            let mut label: HashMap<ArcId, u32> = HashMap::new();
            let mut order: Vec<ArcId> = vec![];
            let walk = |label: &mut HashMap<ArcId, u32>, order: &mut Vec<ArcId>, s: ArcId| {
                let mut x = s;
                loop {
                    label.insert(x, order.len() as u32 + 1);
                    order.push(x);
                    x = succ[&x];
                    if x == s {
                        break;
                    }
                }
            };
            walk(&mut label, &mut order, start);
            // Pull in further circles of the cluster in a label-determined
            // order: scan labelled arcs, inspect their crossings' in-slots.
            let mut scan = 0;
            while label.len() < arcs.len() {
                debug_assert!(scan < order.len());
                let x = order[scan];
                for c_idx in [head.get(&x), tail.get(&x)].into_iter().flatten() {
                    let c = &self.crossings[*c_idx];
                    for slot in [c.a_in, c.b_in] {
                        if !label.contains_key(&slot) {
                            walk(&mut label, &mut order, slot);
                        }
                    }
                }
                scan += 1;
            }

            let mut tuples: Vec<[u32; 5]> = cluster
                .iter()
                .map(|&i| {
                    let c = &self.crossings[i];
                    let kind = match c.kind {
                        CrossingKind::Positive => 0,
                        CrossingKind::Negative => 1,
                        CrossingKind::Singular => 2,
                    };
                    [kind, label[&c.a_in], label[&c.a_out], label[&c.b_in], label[&c.b_out]]
                })
                .collect();
            tuples.sort();
            let mut code = Vec::with_capacity(tuples.len() * 20);
            for t in tuples {
                for v in t {
                    code.extend(v.to_be_bytes());
                }
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.unwrap_or_default()
    }

    /// Equality of presented diagrams up to relabelling and reordering.
    pub fn same_diagram(&self, other: &Diagram) -> bool {
        self.canonical_encoding() == other.canonical_encoding()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn hopf_plus() -> Diagram {
        Diagram::new(
            vec![
                Crossing {
                    kind: CrossingKind::Positive,
                    a_in: 1,
                    a_out: 2,
                    b_in: 3,
                    b_out: 4,
                },
                Crossing {
                    kind: CrossingKind::Positive,
                    a_in: 4,
                    a_out: 3,
                    b_in: 2,
                    b_out: 1,
                },
            ],
            0,
        )
        .unwrap()
    }

    pub(crate) fn trefoil() -> Diagram {
        Diagram::new(
            vec![
                Crossing {
                    kind: CrossingKind::Positive,
                    a_in: 1,
                    a_out: 2,
                    b_in: 4,
                    b_out: 5,
                },
                Crossing {
                    kind: CrossingKind::Positive,
                    a_in: 3,
                    a_out: 4,
                    b_in: 6,
                    b_out: 1,
                },
                Crossing {
                    kind: CrossingKind::Positive,
                    a_in: 5,
                    a_out: 6,
                    b_in: 2,
                    b_out: 3,
                },
            ],
            0,
        )
        .unwrap()
    }

    fn positive_curl() -> Diagram {
        Diagram::new(
            vec![Crossing {
                kind: CrossingKind::Positive,
                a_in: 1,
                a_out: 2,
                b_in: 2,
                b_out: 1,
            }],
            0,
        )
        .unwrap()
    }

    #[test]
    fn component_counts() {
        assert_eq!(Diagram::unlink(1).component_count(), 1);
        assert_eq!(hopf_plus().component_count(), 2);
        assert_eq!(trefoil().component_count(), 1);
        assert_eq!(positive_curl().component_count(), 1);
    }

    #[test]
    fn switch_is_involution() {
        let d = hopf_plus();
        let twice = d
            .switch_crossing(0)
            .unwrap()
            .switch_crossing(0)
            .unwrap();
        assert!(d.same_diagram(&twice));
    }

    #[test]
    fn singularize_respects_chirality() {
        // Resolving the double point positively must recover the positive
        // form of the original crossing, whichever sign it had.
        for d in [hopf_plus(), hopf_plus().switch_crossing(0).unwrap()] {
            let s = d.singularize_crossing(0).unwrap();
            assert_eq!(s.crossings()[0].kind, CrossingKind::Singular);
            let positive_form = match d.crossings()[0].kind {
                CrossingKind::Positive => d.crossings()[0],
                _ => d.crossings()[0].switched(),
            };
            assert_eq!(
                Crossing {
                    kind: CrossingKind::Positive,
                    ..s.crossings()[0]
                },
                positive_form
            );
        }
        // A double point cannot be singularized again.
        let g = make_g(1, 1).unwrap();
        assert!(g.singularize_crossing(0).is_err());
    }

    #[test]
    fn smooth_curl_splits_off_loop() {
        let d = positive_curl();
        let s = d.smooth_crossing(0).unwrap();
        assert_eq!(s.crossing_count(), 0);
        assert_eq!(s.component_count(), 2);
    }

    #[test]
    fn smooth_hopf_merges() {
        let d = hopf_plus();
        let s = d.smooth_crossing(0).unwrap();
        assert_eq!(s.component_count(), 1);
        assert_eq!(s.crossing_count(), 1);
    }

    #[test]
    fn smoothing_changes_component_count_by_one() {
        for d in [hopf_plus(), trefoil(), positive_curl()] {
            let before = d.component_count() as i64;
            for i in 0..d.crossing_count() {
                let after = d.smooth_crossing(i).unwrap().component_count() as i64;
                assert_eq!((after - before).abs(), 1);
            }
        }
    }

    #[test]
    fn canonical_encoding_is_relabel_invariant() {
        let d = trefoil();
        // Relabel arcs 1..6 -> 10..60 and reorder the crossings.
        let relabel = |a: ArcId| a * 10;
        let mut crossings: Vec<Crossing> = d
            .crossings()
            .iter()
            .map(|c| Crossing {
                kind: c.kind,
                a_in: relabel(c.a_in),
                a_out: relabel(c.a_out),
                b_in: relabel(c.b_in),
                b_out: relabel(c.b_out),
            })
            .collect();
        crossings.rotate_left(1);
        let e = Diagram::new(crossings, 0).unwrap();
        assert!(d.same_diagram(&e));
    }

    #[test]
    fn canonical_encoding_random_relabelings() {
        use rand::rngs::StdRng;
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = StdRng::seed_from_u64(3);
        for d in [trefoil(), hopf_plus()] {
            let arcs: Vec<ArcId> = d.arc_successor().keys().copied().collect();
            for _ in 0..20 {
                let mut shuffled = arcs.clone();
                shuffled.shuffle(&mut rng);
                let map: std::collections::HashMap<ArcId, ArcId> = arcs
                    .iter()
                    .zip(&shuffled)
                    .map(|(&a, &b)| (a, b * 7 + 1))
                    .collect();
                let mut crossings: Vec<Crossing> = d
                    .crossings()
                    .iter()
                    .map(|c| Crossing {
                        kind: c.kind,
                        a_in: map[&c.a_in],
                        a_out: map[&c.a_out],
                        b_in: map[&c.b_in],
                        b_out: map[&c.b_out],
                    })
                    .collect();
                crossings.shuffle(&mut rng);
                let e = Diagram::new(crossings, d.free_loops()).unwrap();
                assert!(d.same_diagram(&e));
            }
        }
    }

    #[test]
    fn canonical_encoding_separates() {
        assert!(!hopf_plus().same_diagram(&Diagram::unlink(2)));
        assert!(!hopf_plus().same_diagram(&trefoil()));
        let switched = hopf_plus().switch_crossing(0).unwrap();
        assert!(!hopf_plus().same_diagram(&switched));
    }

    #[test]
    fn kink_preserves_validity_and_components() {
        let d = trefoil();
        let k = d.with_kink(1, true);
        assert_eq!(k.component_count(), 1);
        assert_eq!(k.crossing_count(), 4);
        // Validity: rebuilding through the constructor succeeds.
        Diagram::new(k.crossings().to_vec(), k.free_loops()).unwrap();
    }
}
