//! Chord diagrams on oriented circles and the operator calculus on them.
//!
//! A chord diagram is a family of oriented circles carrying finitely many
//! disjoint chords (a perfect matching on the marked points), plus a count
//! of bare circles. Diagrams are compared through a canonical form that is
//! invariant under circle rotation, circle reordering and endpoint
//! relabelling; orientation is respected, so mirror images are not
//! identified.
//!
//! The extra bare circle is the action of the variable `u`.

mod quotient;
mod relations;
mod weight;

pub use quotient::{quotient_dim, relation_echelon, DiagramSpan, QuotientReport, RatEchelon};
pub use relations::{gen_4t, gen_4t_instances, gen_4ts, FourTInstance};
pub use weight::weight;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

/// Hard cap on exhaustive diagram enumeration; counts grow super-
/// exponentially past this.
pub const MAX_ENUM_CHORDS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordError {
    /// Structural invariant broken (endpoint multiplicity or matching).
    Invalid(String),
    /// The diagram has no circle to carry a new chord.
    Empty,
    /// Enumeration request past the resource guard.
    GuardExceeded { requested: usize, cap: usize },
    /// Operation addressed a chord that is not in the diagram.
    NoSuchChord(usize, usize),
}

impl fmt::Display for ChordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChordError::Invalid(s) => write!(f, "invalid chord diagram: {s}"),
            ChordError::Empty => write!(f, "empty diagram"),
            ChordError::GuardExceeded { requested, cap } => {
                write!(f, "enumeration of {requested} chords exceeds the cap {cap}")
            }
            ChordError::NoSuchChord(p, q) => write!(f, "no chord ({p}, {q})"),
        }
    }
}

impl std::error::Error for ChordError {}

/// A chord diagram. Endpoints are `0 .. 2k - 1` for `k` chords, each on
/// exactly one circle; `partner` is a fixed-point-free involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    circles: Vec<Vec<usize>>,
    partner: Vec<usize>,
    free_circles: u32,
}

impl ChordDiagram {
    pub fn new(
        circles: Vec<Vec<usize>>,
        partner: Vec<usize>,
        free_circles: u32,
    ) -> Result<Self, ChordError> {
        let n = partner.len();
        if !n.is_multiple_of(2) {
            return Err(ChordError::Invalid("odd endpoint count".into()));
        }
        let mut seen = vec![false; n];
        for circle in &circles {
            if circle.is_empty() {
                return Err(ChordError::Invalid("explicit circle without endpoints".into()));
            }
            for &e in circle {
                if e >= n || seen[e] {
                    return Err(ChordError::Invalid(format!("endpoint {e}")));
                }
                seen[e] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(ChordError::Invalid("endpoint missing from circles".into()));
        }
        for (e, &p) in partner.iter().enumerate() {
            if p >= n || p == e || partner[p] != e {
                return Err(ChordError::Invalid(format!("matching at {e}")));
            }
        }
        Ok(ChordDiagram {
            circles,
            partner,
            free_circles,
        })
    }

    /// `j` bare circles and nothing else.
    pub fn bare(j: u32) -> Self {
        ChordDiagram {
            circles: vec![],
            partner: vec![],
            free_circles: j,
        }
    }

    pub fn chord_count(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn free_circles(&self) -> u32 {
        self.free_circles
    }

    pub fn circles(&self) -> &[Vec<usize>] {
        &self.circles
    }

    /// Total circles, bare ones included.
    pub fn circle_count(&self) -> usize {
        self.circles.len() + self.free_circles as usize
    }

    /// Disjoint union with `j` bare circles (the `u^j` action).
    pub fn with_free(&self, j: u32) -> Self {
        let mut d = self.clone();
        d.free_circles += j;
        d
    }

    /// Chords as endpoint pairs `(min, max)`, sorted.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.partner.len())
            .filter(|&e| e < self.partner[e])
            .map(|e| (e, self.partner[e]))
            .collect();
        out.sort();
        out
    }

    fn position_of(&self, endpoint: usize) -> (usize, usize) {
        for (ci, circle) in self.circles.iter().enumerate() {
            if let Some(i) = circle.iter().position(|&e| e == endpoint) {
                return (ci, i);
            }
        }
        unreachable!("endpoint on some circle by the constructor invariant")
    }

    /// Compress endpoint ids to `0..len` after removals.
    fn compress(mut circles: Vec<Vec<usize>>, partner_map: BTreeMap<usize, usize>, free: u32) -> Self {
        let mut old_ids: Vec<usize> = partner_map.keys().copied().collect();
        old_ids.sort();
        let index: BTreeMap<usize, usize> =
            old_ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        for circle in &mut circles {
            for e in circle.iter_mut() {
                *e = index[e];
            }
        }
        let mut partner = vec![0; old_ids.len()];
        for (&e, &p) in &partner_map {
            partner[index[&e]] = index[&p];
        }
        ChordDiagram {
            circles,
            partner,
            free_circles: free,
        }
    }

    /// Smooth the chord `(p, q)`: orientation-respecting reconnection at its
    /// endpoints. Endpoints on distinct circles merge them; endpoints on one
    /// circle split it in two. Bare results increment the free count.
    pub fn smooth_chord(&self, p: usize, q: usize) -> Result<Self, ChordError> {
        self.check_chord(p, q)?;
        let (cp, ip) = self.position_of(p);
        let (cq, iq) = self.position_of(q);
        let mut circles: Vec<Vec<usize>> = vec![];
        let mut free = self.free_circles;
        if cp != cq {
            // Merge: with circle A = (p, a1..ak) and B = (q, b1..bj), the
            // reconnected circle reads (a1..ak b1..bj).
            let mut merged = rotate_from(&self.circles[cp], ip);
            merged.remove(0);
            let mut tail = rotate_from(&self.circles[cq], iq);
            tail.remove(0);
            merged.extend(tail);
            if merged.is_empty() {
                free += 1;
            } else {
                circles.push(merged);
            }
            for (ci, c) in self.circles.iter().enumerate() {
                if ci != cp && ci != cq {
                    circles.push(c.clone());
                }
            }
        } else {
            // Split: (p, a1..as, q, b1..bt) becomes (a1..as) and (b1..bt).
            let rotated = rotate_from(&self.circles[cp], ip);
            let qpos = rotated.iter().position(|&e| e == q).unwrap();
            let side_a = rotated[1..qpos].to_vec();
            let side_b = rotated[qpos + 1..].to_vec();
            for side in [side_a, side_b] {
                if side.is_empty() {
                    free += 1;
                } else {
                    circles.push(side);
                }
            }
            for (ci, c) in self.circles.iter().enumerate() {
                if ci != cp {
                    circles.push(c.clone());
                }
            }
        }
        let partner_map: BTreeMap<usize, usize> = (0..self.partner.len())
            .filter(|&e| e != p && e != q)
            .map(|e| (e, self.partner[e]))
            .collect();
        Ok(Self::compress(circles, partner_map, free))
    }

    /// Delete the chord `(p, q)`; a circle left bare becomes free.
    pub fn forget_chord(&self, p: usize, q: usize) -> Result<Self, ChordError> {
        self.check_chord(p, q)?;
        let mut circles = vec![];
        let mut free = self.free_circles;
        for circle in &self.circles {
            let kept: Vec<usize> = circle
                .iter()
                .copied()
                .filter(|&e| e != p && e != q)
                .collect();
            if kept.is_empty() {
                free += 1;
            } else {
                circles.push(kept);
            }
        }
        let partner_map: BTreeMap<usize, usize> = (0..self.partner.len())
            .filter(|&e| e != p && e != q)
            .map(|e| (e, self.partner[e]))
            .collect();
        Ok(Self::compress(circles, partner_map, free))
    }

    /// Insert an isolated chord at the canonical position: on the first
    /// circle of the canonical form, right at its basepoint. When the
    /// diagram has no chord-bearing circle a free circle is consumed
    /// instead.
    pub fn add_isolated_chord(&self) -> Result<Self, ChordError> {
        let canon = self.canonical_form();
        if canon.circles.is_empty() {
            if canon.free_circles == 0 {
                return Err(ChordError::Empty);
            }
            return ChordDiagram::new(vec![vec![0, 1]], vec![1, 0], canon.free_circles - 1);
        }
        let mut circles: Vec<Vec<usize>> = canon
            .circles
            .iter()
            .map(|c| c.iter().map(|&e| e + 2).collect())
            .collect();
        circles[0].insert(0, 1);
        circles[0].insert(0, 0);
        let mut partner = vec![1, 0];
        partner.extend(canon.partner.iter().map(|&p| p + 2));
        ChordDiagram::new(circles, partner, canon.free_circles)
    }

    fn check_chord(&self, p: usize, q: usize) -> Result<(), ChordError> {
        if p < self.partner.len() && self.partner[p] == q {
            Ok(())
        } else {
            Err(ChordError::NoSuchChord(p, q))
        }
    }

    /// The canonical representative: circles in canonical order starting at
    /// canonical basepoints, endpoints relabelled by global position.
    pub fn canonical_form(&self) -> ChordDiagram {
        let (_, rep) = self.canonical_encoding_and_form();
        rep
    }

    /// Canonical byte string; equal exactly for isomorphic diagrams.
    pub fn canonical_encoding(&self) -> Vec<u8> {
        let (enc, _) = self.canonical_encoding_and_form();
        enc
    }

    fn canonical_encoding_and_form(&self) -> (Vec<u8>, ChordDiagram) {
        // Circle order: descending length (so the largest circle carries the
        // canonical basepoint), permutations only within equal-length
        // groups, all rotations per circle.
        let mut idx: Vec<usize> = (0..self.circles.len()).collect();
        idx.sort_by_key(|&i| std::cmp::Reverse(self.circles[i].len()));
        let groups: Vec<Vec<usize>> = {
            let mut gs: Vec<Vec<usize>> = vec![];
            for &i in &idx {
                match gs.last_mut() {
                    Some(g) if self.circles[g[0]].len() == self.circles[i].len() => g.push(i),
                    _ => gs.push(vec![i]),
                }
            }
            gs
        };
        let mut best: Option<Vec<u16>> = None;
        let mut order: Vec<usize> = vec![];
        self.search_orderings(&groups, 0, &mut order, &mut best);
        let key = best.expect("at least one candidate ordering");
        let rep = self.rebuild_from_key(&key);
        let mut bytes = Vec::with_capacity(key.len() * 2 + 4);
        for v in &key {
            bytes.extend(v.to_be_bytes());
        }
        bytes.extend(self.free_circles.to_be_bytes());
        (bytes, rep)
    }

    fn search_orderings(
        &self,
        groups: &[Vec<usize>],
        gi: usize,
        order: &mut Vec<usize>,
        best: &mut Option<Vec<u16>>,
    ) {
        if gi == groups.len() {
            self.scan_rotations(order, best);
            return;
        }
        permute(groups[gi].clone(), &mut |perm| {
            let len = perm.len();
            order.extend_from_slice(perm);
            self.search_orderings(groups, gi + 1, order, best);
            order.truncate(order.len() - len);
        });
    }

    /// For a fixed circle order, try all rotation combinations.
    fn scan_rotations(&self, order: &[usize], best: &mut Option<Vec<u16>>) {
        let lens: Vec<usize> = order.iter().map(|&i| self.circles[i].len()).collect();
        let mut rot = vec![0usize; order.len()];
        loop {
            let key = self.key_for(order, &rot);
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
            // Mixed-radix increment over rotations.
            let mut i = 0;
            loop {
                if i == rot.len() {
                    return;
                }
                rot[i] += 1;
                if rot[i] < lens[i] {
                    break;
                }
                rot[i] = 0;
                i += 1;
            }
        }
    }

    fn key_for(&self, order: &[usize], rot: &[usize]) -> Vec<u16> {
        let n = self.partner.len();
        let mut pos = vec![u16::MAX; n];
        let mut global = 0u16;
        for (k, &ci) in order.iter().enumerate() {
            let circle = &self.circles[ci];
            for i in 0..circle.len() {
                pos[circle[(rot[k] + i) % circle.len()]] = global;
                global += 1;
            }
        }
        let mut key: Vec<u16> = Vec::with_capacity(1 + order.len() + n);
        key.push(order.len() as u16);
        for &ci in order {
            key.push(self.circles[ci].len() as u16);
        }
        let mut by_pos = vec![0usize; n];
        for e in 0..n {
            by_pos[pos[e] as usize] = e;
        }
        for p in 0..n {
            key.push(pos[self.partner[by_pos[p]]]);
        }
        key
    }

    fn rebuild_from_key(&self, key: &[u16]) -> ChordDiagram {
        let circle_count = key[0] as usize;
        let lens = &key[1..1 + circle_count];
        let partner_pos = &key[1 + circle_count..];
        let mut circles = vec![];
        let mut next = 0usize;
        for &len in lens {
            circles.push((next..next + len as usize).collect::<Vec<usize>>());
            next += len as usize;
        }
        let partner: Vec<usize> = partner_pos.iter().map(|&p| p as usize).collect();
        ChordDiagram {
            circles,
            partner,
            free_circles: self.free_circles,
        }
    }
}

fn rotate_from(circle: &[usize], start: usize) -> Vec<usize> {
    let mut out = circle.to_vec();
    out.rotate_left(start);
    out
}

fn permute<F: FnMut(&[usize])>(mut items: Vec<usize>, f: &mut F) {
    fn rec<F: FnMut(&[usize])>(items: &mut Vec<usize>, k: usize, f: &mut F) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, f);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, f);
}

/// The chord diagram underlying the singular link `G(l, n)`: a long circle
/// with `l` isolated chords and `n - l` chords out to one-point circles.
pub fn g_chord(l: usize, n: usize) -> ChordDiagram {
    assert!(l <= n);
    if n == 0 {
        return ChordDiagram::bare(1);
    }
    let mut long = vec![];
    let mut partner = vec![0usize; 2 * n];
    let mut next = 0usize;
    for _ in 0..l {
        long.push(next);
        long.push(next + 1);
        partner[next] = next + 1;
        partner[next + 1] = next;
        next += 2;
    }
    let mut circles = vec![];
    let mut needles = vec![];
    for _ in 0..(n - l) {
        long.push(next);
        needles.push(vec![next + 1]);
        partner[next] = next + 1;
        partner[next + 1] = next;
        next += 2;
    }
    circles.push(long);
    circles.extend(needles);
    ChordDiagram::new(circles, partner, 0).expect("well-formed by construction")
}

/// All isomorphism classes with exactly `n_chords` chords and fewer than
/// `max_free` bare circles. Every configuration of endpoints into oriented
/// circles arises as the cycle structure of a permutation, so scanning all
/// permutations of the endpoints against a fixed matching is exhaustive.
pub fn enumerate_diagrams(
    n_chords: usize,
    max_free: u32,
) -> Result<Vec<ChordDiagram>, ChordError> {
    if n_chords > MAX_ENUM_CHORDS {
        return Err(ChordError::GuardExceeded {
            requested: n_chords,
            cap: MAX_ENUM_CHORDS,
        });
    }
    let n = 2 * n_chords;
    let partner: Vec<usize> = (0..n).map(|e| e ^ 1).collect();
    let mut seen = BTreeMap::new();
    let mut base: Vec<ChordDiagram> = vec![];
    permute((0..n).collect(), &mut |perm| {
        let circles = cycles_of(perm);
        let d = ChordDiagram {
            circles,
            partner: partner.clone(),
            free_circles: 0,
        };
        let enc = d.canonical_encoding();
        if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(enc) {
            let canon = d.canonical_form();
            e.insert(());
            base.push(canon);
        }
    });
    let mut out = vec![];
    for j in 0..max_free {
        for d in &base {
            out.push(d.with_free(j));
        }
    }
    Ok(out)
}

fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut cycles = vec![];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![];
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        cycles.push(cycle);
    }
    cycles
}

/// A finite formal combination of chord diagrams over `Q`, keyed by
/// canonical encoding; zero coefficients are dropped.
#[derive(Debug, Clone, Default)]
pub struct ChordCombination {
    terms: BTreeMap<Vec<u8>, (ChordDiagram, BigRational)>,
}

impl ChordCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn singleton(d: ChordDiagram, c: BigRational) -> Self {
        let mut out = Self::zero();
        out.add_term(d, c);
        out
    }

    pub fn add_term(&mut self, d: ChordDiagram, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let key = d.canonical_encoding();
        match self.terms.get_mut(&key) {
            Some((_, acc)) => {
                *acc += c;
                if acc.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, (d, c));
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in other.iter() {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (d, coeff) in self.iter() {
            out.add_term(d.clone(), coeff * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::from_integer(1.into())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ChordDiagram, &BigRational)> {
        self.terms.values().map(|(d, c)| (d, c))
    }
}

/// The smoothing operator: sum of all single-chord smoothings.
pub fn op_s(d: &ChordDiagram) -> ChordCombination {
    let mut out = ChordCombination::zero();
    for (p, q) in d.chords() {
        out.add_term(
            d.smooth_chord(p, q).expect("chord exists"),
            BigRational::from_integer(1.into()),
        );
    }
    out
}

/// The forgetting operator: sum of all single-chord deletions.
pub fn op_f(d: &ChordDiagram) -> ChordCombination {
    let mut out = ChordCombination::zero();
    for (p, q) in d.chords() {
        out.add_term(
            d.forget_chord(p, q).expect("chord exists"),
            BigRational::from_integer(1.into()),
        );
    }
    out
}

/// Linear extension of a diagram operator to combinations.
pub fn extend_linear<F>(c: &ChordCombination, f: F) -> ChordCombination
where
    F: Fn(&ChordDiagram) -> ChordCombination,
{
    let mut out = ChordCombination::zero();
    for (d, coeff) in c.iter() {
        out = out.add(&f(d).scale(coeff));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn canonical_distinguishes_curl_from_connector() {
        let connector = g_chord(0, 1);
        let curl = g_chord(1, 1);
        assert_ne!(connector.canonical_encoding(), curl.canonical_encoding());
    }

    #[test]
    fn canonical_invariance_under_rotation_and_reorder() {
        // g(0, 2) built two different ways.
        let a = g_chord(0, 2);
        let b = ChordDiagram::new(
            vec![vec![3], vec![1], vec![2, 0]],
            vec![1, 0, 3, 2],
            0,
        )
        .unwrap();
        assert_eq!(a.canonical_encoding(), b.canonical_encoding());
        // Rotating the long circle changes nothing.
        let c = ChordDiagram::new(
            vec![vec![2, 0], vec![1], vec![3]],
            vec![1, 0, 3, 2],
            0,
        )
        .unwrap();
        assert_eq!(a.canonical_encoding(), c.canonical_encoding());
    }

    #[test]
    fn canonical_roundtrip_through_form() {
        for d in enumerate_diagrams(2, 2).unwrap() {
            let canon = d.canonical_form();
            assert_eq!(canon.canonical_encoding(), d.canonical_encoding());
        }
    }

    #[test]
    fn smooth_examples() {
        // Curl chord: splits off a free circle.
        let curl = g_chord(1, 1);
        let s = curl.smooth_chord(0, 1).unwrap();
        assert_eq!(s.chord_count(), 0);
        assert_eq!(s.circle_count(), 2);
        // Connector of g(0, 1): merges into one bare circle.
        let conn = g_chord(0, 1);
        let s = conn.smooth_chord(0, 1).unwrap();
        assert_eq!(s.circle_count(), 1);
        assert_eq!(s.free_circles(), 1);
    }

    #[test]
    fn forget_examples() {
        let conn = g_chord(0, 1);
        let f = conn.forget_chord(0, 1).unwrap();
        assert_eq!(f.free_circles(), 2);
        assert_eq!(f.chord_count(), 0);
    }

    #[test]
    fn s_formula_on_g_family() {
        // S(g(l, n)) = u l g(l-1, n-1) + (n - l) g(l, n-1).
        for n in 1..=4usize {
            for l in 0..=n {
                let got = op_s(&g_chord(l, n));
                let mut expect = ChordCombination::zero();
                if l >= 1 {
                    expect.add_term(g_chord(l - 1, n - 1).with_free(1), rat(l as i64));
                }
                if n - l >= 1 {
                    expect.add_term(g_chord(l, n - 1), rat((n - l) as i64));
                }
                assert!(got.sub(&expect).is_zero(), "S(g({l},{n}))");
            }
        }
    }

    #[test]
    fn f_formula_on_g_family() {
        // F(g(l, n)) = l g(l-1, n-1) + u (n - l) g(l, n-1).
        for n in 1..=4usize {
            for l in 0..=n {
                let got = op_f(&g_chord(l, n));
                let mut expect = ChordCombination::zero();
                if l >= 1 {
                    expect.add_term(g_chord(l - 1, n - 1), rat(l as i64));
                }
                if n - l >= 1 {
                    expect.add_term(g_chord(l, n - 1).with_free(1), rat((n - l) as i64));
                }
                assert!(got.sub(&expect).is_zero(), "F(g({l},{n}))");
            }
        }
    }

    #[test]
    fn t_on_g_family() {
        // T(g(l, n-1)) = g(l+1, n).
        for n in 1..=4usize {
            for l in 0..n {
                let t = g_chord(l, n - 1).add_isolated_chord().unwrap();
                assert_eq!(
                    t.canonical_encoding(),
                    g_chord(l + 1, n).canonical_encoding(),
                    "T(g({l},{}))",
                    n - 1
                );
            }
        }
    }

    #[test]
    fn t_on_bare_circles() {
        let d = ChordDiagram::bare(2);
        let t = d.add_isolated_chord().unwrap();
        assert_eq!(t.chord_count(), 1);
        assert_eq!(t.free_circles(), 1);
        assert!(ChordDiagram::bare(0).add_isolated_chord().is_err());
    }

    #[test]
    fn enumeration_counts() {
        // One chord: both endpoints on one circle, or on two circles.
        let one = enumerate_diagrams(1, 1).unwrap();
        assert_eq!(one.len(), 2);
        // Zero chords: one class per free-circle count below the bound.
        let zero = enumerate_diagrams(0, 2).unwrap();
        assert_eq!(zero.len(), 2);
        // Round-trip through canonical encoding.
        for d in enumerate_diagrams(3, 1).unwrap() {
            assert_eq!(
                d.canonical_form().canonical_encoding(),
                d.canonical_encoding()
            );
        }
    }

    #[test]
    fn smoothing_is_order_independent() {
        // Smallest-first and largest-first consumption orders reach the
        // same circle count.
        for d in enumerate_diagrams(3, 1).unwrap() {
            let mut forward = d.clone();
            while let Some(&(p, q)) = forward.chords().first() {
                forward = forward.smooth_chord(p, q).unwrap();
            }
            let mut backward = d.clone();
            while let Some(&(p, q)) = backward.chords().last() {
                backward = backward.smooth_chord(p, q).unwrap();
            }
            assert_eq!(forward.circle_count(), backward.circle_count());
        }
    }
}
