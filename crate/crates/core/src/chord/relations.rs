//! Generation of the four-term relation families.
//!
//! A four-term instance is built from a frame: a diagram carrying the
//! fixed chord and the spectator chords, plus an insertion site for the
//! anchored end of a moving chord. The moving end is then placed at the
//! four sites adjacent to the fixed chord's endpoints, signed
//! `+ before p1, - after p1, + before p2, - after p2` (before/after along
//! the circle orientation). The smoothed family arises by smoothing one of
//! the two active chords uniformly across the four terms; both choices are
//! emitted.

use num_rational::BigRational;

use super::{enumerate_diagrams, ChordCombination, ChordDiagram, ChordError};

/// One four-term instance with its active chords tracked by endpoint id;
/// ids are stable across the four placements.
#[derive(Debug, Clone)]
pub struct FourTInstance {
    /// `(sign, diagram)` for the four placements.
    pub terms: Vec<(i64, ChordDiagram)>,
    /// The fixed chord's endpoints.
    pub fixed: (usize, usize),
    /// The moving chord's endpoints (anchor first).
    pub moving: (usize, usize),
}

impl FourTInstance {
    pub fn combination(&self) -> ChordCombination {
        let mut out = ChordCombination::zero();
        for (sign, d) in &self.terms {
            out.add_term(d.clone(), BigRational::from_integer((*sign).into()));
        }
        out
    }

    /// Smooth one active chord uniformly across the four terms.
    pub fn smoothed(&self, chord: (usize, usize)) -> ChordCombination {
        let mut out = ChordCombination::zero();
        for (sign, d) in &self.terms {
            let s = d
                .smooth_chord(chord.0.min(chord.1), chord.0.max(chord.1))
                .expect("active chord present");
            out.add_term(s, BigRational::from_integer((*sign).into()));
        }
        out
    }
}

/// A frame with the anchor endpoint placed but not yet partnered.
#[derive(Debug, Clone)]
struct Scaffold {
    circles: Vec<Vec<usize>>,
    partner_pairs: Vec<(usize, usize)>,
    free: u32,
}

/// All four-term instances on `n` chords whose terms carry fewer than
/// `max_free` bare circles.
pub fn gen_4t_instances(n: usize, max_free: u32) -> Result<Vec<FourTInstance>, ChordError> {
    assert!(n >= 2, "a four-term instance needs two active chords");
    let frames = enumerate_diagrams(n - 1, max_free)?;
    let mut out = vec![];
    for frame in &frames {
        let k = frame.chord_count();
        let anchor = 2 * k;
        let mover = 2 * k + 1;
        for (f0, f1) in frame.chords() {
            // Anchor sites: every gap on every circle, plus a consumed free
            // circle when one is available.
            let mut sites: Vec<Option<(usize, usize)>> = vec![];
            for (ci, c) in frame.circles().iter().enumerate() {
                for gap in 0..c.len() {
                    sites.push(Some((ci, gap)));
                }
            }
            if frame.free_circles() > 0 {
                sites.push(None);
            }
            for site in sites {
                let based = place_anchor(frame, site, anchor);
                let terms = moving_slots(&based, f0, f1)
                    .into_iter()
                    .map(|(slot, sign)| (sign, place_mover(&based, slot, mover, anchor)))
                    .collect();
                out.push(FourTInstance {
                    terms,
                    fixed: (f0, f1),
                    moving: (anchor, mover),
                });
            }
        }
    }
    Ok(out)
}

fn place_anchor(frame: &ChordDiagram, site: Option<(usize, usize)>, q: usize) -> Scaffold {
    let mut circles = frame.circles().to_vec();
    let mut free = frame.free_circles();
    match site {
        Some((ci, gap)) => circles[ci].insert(gap, q),
        None => {
            circles.push(vec![q]);
            free -= 1;
        }
    }
    Scaffold {
        circles,
        partner_pairs: frame.chords(),
        free,
    }
}

/// The four placements adjacent to the fixed chord's endpoints, signed.
/// The gap at an endpoint's index precedes it; the next gap follows it.
fn moving_slots(based: &Scaffold, f0: usize, f1: usize) -> Vec<((usize, usize), i64)> {
    let mut out = vec![];
    for fp in [f0, f1] {
        let (ci, idx) = based
            .circles
            .iter()
            .enumerate()
            .find_map(|(ci, c)| c.iter().position(|&e| e == fp).map(|i| (ci, i)))
            .expect("fixed endpoint present");
        out.push(((ci, idx), 1));
        out.push(((ci, idx + 1), -1));
    }
    out
}

fn place_mover(based: &Scaffold, slot: (usize, usize), m: usize, q: usize) -> ChordDiagram {
    let mut circles = based.circles.clone();
    circles[slot.0].insert(slot.1, m);
    let total = 2 * (based.partner_pairs.len() + 1);
    let mut partner = vec![0usize; total];
    for &(a, b) in &based.partner_pairs {
        partner[a] = b;
        partner[b] = a;
    }
    partner[q] = m;
    partner[m] = q;
    ChordDiagram::new(circles, partner, based.free).expect("well-formed placement")
}

/// Canonical-merged four-term relation vectors on `n` chords.
pub fn gen_4t(n: usize, max_free: u32) -> Result<Vec<ChordCombination>, ChordError> {
    Ok(gen_4t_instances(n, max_free)?
        .iter()
        .map(FourTInstance::combination)
        .collect())
}

/// The smoothed four-term family on `n` chords: smooth either active chord
/// of every instance on `n + 1` chords uniformly across its four terms.
pub fn gen_4ts(n: usize, max_free: u32) -> Result<Vec<ChordCombination>, ChordError> {
    let mut out = vec![];
    for inst in gen_4t_instances(n + 1, max_free)? {
        out.push(inst.smoothed(inst.fixed));
        out.push(inst.smoothed(inst.moving));
    }
    Ok(out)
}
