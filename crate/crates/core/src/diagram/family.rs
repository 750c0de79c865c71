//! Constructed diagram families: the two-parameter singular links `G(l, n)`,
//! braid-word closures, and the vanishing eight-term combination.

use num_bigint::BigInt;

use crate::algebra::IntPoly;

use super::{
    resolve, ArcId, Crossing, CrossingKind, Diagram, DiagramError, FormalCombination,
};

/// The singular link `G(l, n)`: one long circle carrying `l` curls (double
/// points of the circle with itself) and crossed by `n - l` small embedded
/// circles, each meeting the long circle in one double point and one
/// positive crossing (long strand over). It has `n` double points and
/// `n - l + 1` components.
pub fn make_g(l: usize, n: usize) -> Result<Diagram, DiagramError> {
    if l > n {
        return Err(DiagramError::InvalidFamilyIndex { l, n });
    }
    if n == 0 {
        return Ok(Diagram::unlink(1));
    }
    // Long-circle arcs: gadget j runs entry(j) -> mid(j) -> entry(j+1).
    let entry = |j: usize| -> ArcId { (2 * j + 1) as ArcId };
    let mid = |j: usize| -> ArcId { (2 * j + 2) as ArcId };
    let mut next_arc = (2 * n + 1) as ArcId;
    let mut crossings = vec![];
    for j in 0..n {
        let e = entry(j);
        let m = mid(j);
        let x = entry((j + 1) % n);
        if j < l {
            // A curl: the long strand crosses itself.
            crossings.push(Crossing {
                kind: CrossingKind::Singular,
                a_in: e,
                a_out: m,
                b_in: m,
                b_out: x,
            });
        } else {
            // A needle: small circle with arcs s1, s2.
            let s1 = next_arc;
            let s2 = next_arc + 1;
            next_arc += 2;
            crossings.push(Crossing {
                kind: CrossingKind::Singular,
                a_in: e,
                a_out: m,
                b_in: s1,
                b_out: s2,
            });
            crossings.push(Crossing {
                kind: CrossingKind::Positive,
                a_in: s2,
                a_out: s1,
                b_in: m,
                b_out: x,
            });
        }
    }
    Diagram::new(crossings, 0)
}

/// One letter of a singular braid word on `strands` strands; `i` is
/// 1-based and addresses positions `i`, `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidLetter {
    /// Positive crossing: the strand entering at position `i` passes over.
    Pos(usize),
    /// Negative crossing: the strand entering at position `i + 1` passes
    /// over.
    Neg(usize),
    /// Double point.
    Sing(usize),
}

impl BraidLetter {
    fn position(&self) -> usize {
        match *self {
            BraidLetter::Pos(i) | BraidLetter::Neg(i) | BraidLetter::Sing(i) => i,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Self {
        assert!(strands >= 1);
        for letter in &letters {
            assert!((1..strands).contains(&letter.position()));
        }
        BraidWord { strands, letters }
    }

    /// Concatenate words on the same strand count.
    pub fn then(&self, tail: &[BraidLetter]) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(tail);
        BraidWord::new(self.strands, letters)
    }
}

/// Trace closure of a braid word, all strands oriented the same way. A
/// strand column touched by no letter closes into a free loop.
pub fn close_braid(word: &BraidWord) -> Diagram {
    let n = word.strands;
    // current[p] = arc currently running upward at position p.
    let initial: Vec<ArcId> = (1..=n as ArcId).collect();
    let mut current = initial.clone();
    let mut next_arc = (n + 1) as ArcId;
    let mut crossings = vec![];
    for letter in &word.letters {
        let i = letter.position() - 1;
        let left_in = current[i];
        let right_in = current[i + 1];
        let out_left = next_arc;
        let out_right = next_arc + 1;
        next_arc += 2;
        // Both strand paths cross: left input exits right, right input
        // exits left.
        let c = match letter {
            // Over-strand b enters at the left position.
            BraidLetter::Pos(_) | BraidLetter::Sing(_) => Crossing {
                kind: if matches!(letter, BraidLetter::Pos(_)) {
                    CrossingKind::Positive
                } else {
                    CrossingKind::Singular
                },
                a_in: right_in,
                a_out: out_left,
                b_in: left_in,
                b_out: out_right,
            },
            // Over-strand b enters at the right position.
            BraidLetter::Neg(_) => Crossing {
                kind: CrossingKind::Negative,
                a_in: left_in,
                a_out: out_right,
                b_in: right_in,
                b_out: out_left,
            },
        };
        crossings.push(c);
        current[i] = out_left;
        current[i + 1] = out_right;
    }
    // Close up: the top arc of each column is the bottom arc.
    let mut free_loops = 0;
    for p in 0..n {
        if current[p] == initial[p] {
            free_loops += 1;
            continue;
        }
        for c in &mut crossings {
            for slot in [&mut c.a_out, &mut c.b_out] {
                if *slot == current[p] {
                    *slot = initial[p];
                }
            }
        }
    }
    Diagram::new(crossings, free_loops).expect("braid closures are valid diagrams")
}

/// The two shipped completions of the eight-term tangle family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EightTClosure {
    /// Plain trace closure.
    Trace,
    /// Trace closure after appending two positive crossings of the first
    /// two strands.
    Twisted,
}

impl EightTClosure {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "trace" => Some(EightTClosure::Trace),
            "twisted" => Some(EightTClosure::Twisted),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EightTClosure::Trace => "trace",
            EightTClosure::Twisted => "twisted",
        }
    }
}

/// The eight singular links of the vanishing combination, as closures of
/// eight three-strand singular tangles.
///
/// The tangle words arise from sliding a double point of strands 1, 2
/// through the passage of strand 3 over or under it, and telescoping the
/// two routes through crossing changes: each crossing change contributes a
/// new double point plus `h` times a smoothing, and the isotopic routes
/// cancel. The resulting identity in the resolved module is
/// `t1 - t2 + t3 - t4 + h (t5 - t6 + t7 - t8) = 0`.
pub fn eight_t_diagrams(closure: EightTClosure) -> [Diagram; 8] {
    use BraidLetter::{Neg, Pos, Sing};
    let words: [Vec<BraidLetter>; 8] = [
        vec![Sing(2), Pos(1), Sing(2)],
        vec![Sing(1), Sing(2), Pos(1)],
        vec![Neg(2), Sing(1), Sing(2)],
        vec![Sing(1), Neg(2), Sing(1)],
        vec![Pos(1), Sing(2)],
        vec![Sing(1), Pos(1)],
        vec![Neg(2), Sing(2)],
        vec![Sing(1), Neg(2)],
    ];
    words.map(|letters| {
        let word = BraidWord::new(3, letters);
        let completed = match closure {
            EightTClosure::Trace => word,
            EightTClosure::Twisted => word.then(&[Pos(1), Pos(1)]),
        };
        close_braid(&completed)
    })
}

/// The resolved eight-term combination
/// `r(t1) - r(t2) + r(t3) - r(t4) + h (r(t5) - r(t6) + r(t7) - r(t8))`.
/// Every link invariant extended linearly evaluates it to zero.
pub fn eight_t_combination(closure: EightTClosure) -> FormalCombination {
    let diagrams = eight_t_diagrams(closure);
    let h = IntPoly::h();
    let mut out = FormalCombination::zero();
    for (i, d) in diagrams.iter().enumerate() {
        let sign = if i % 2 == 0 {
            IntPoly::one()
        } else {
            IntPoly::constant(BigInt::from(-1))
        };
        let coeff = if i < 4 { sign } else { &sign * &h };
        out = out.add(&resolve(d).scale(&coeff));
    }
    out
}
