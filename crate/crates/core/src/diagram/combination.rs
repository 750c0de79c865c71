//! Formal `Z[h]`-combinations of diagrams and the three-term resolution of
//! double points.

use std::collections::BTreeMap;

use crate::algebra::IntPoly;

use super::{Crossing, CrossingKind, Diagram, DiagramError};

/// A finite `Z[h]`-linear combination of diagrams, keyed by canonical
/// encoding so that relabelled duplicates merge. Zero coefficients are not
/// stored.
#[derive(Debug, Clone, Default)]
pub struct FormalCombination {
    terms: BTreeMap<Vec<u8>, (Diagram, IntPoly)>,
}

impl FormalCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn singleton(d: Diagram, coeff: IntPoly) -> Self {
        let mut c = Self::zero();
        c.add_term(d, coeff);
        c
    }

    pub fn add_term(&mut self, d: Diagram, coeff: IntPoly) {
        if coeff.is_zero() {
            return;
        }
        let key = d.canonical_encoding();
        match self.terms.get_mut(&key) {
            Some((_, c)) => {
                let merged = &*c + &coeff;
                if merged.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *c = merged;
                }
            }
            None => {
                self.terms.insert(key, (d, coeff));
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

    /// Multiply every coefficient by `p`.
    pub fn scale(&self, p: &IntPoly) -> Self {
        let mut out = Self::zero();
        for (d, c) in self.iter() {
            out.add_term(d.clone(), c * p);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Diagram, &IntPoly)> {
        self.terms.values().map(|(d, c)| (d, c))
    }
}

/// Resolve every double point through `X. -> X+ - X- - h X0`. A diagram
/// with `n` double points expands into `3^n` summands (before merging of
/// equal diagrams); the result contains no singular crossings.
pub fn resolve(d: &Diagram) -> FormalCombination {
    let mut out = FormalCombination::zero();
    for (diagram, coeff) in resolve_terms(d) {
        out.add_term(diagram, coeff);
    }
    out
}

/// The raw `3^n` resolution summands, unmerged.
pub fn resolve_terms(d: &Diagram) -> Vec<(Diagram, IntPoly)> {
    let mut done = vec![];
    let mut stack = vec![(d.clone(), IntPoly::one())];
    while let Some((diag, coeff)) = stack.pop() {
        match diag.singular_indices().first().copied() {
            None => done.push((diag, coeff)),
            Some(i) => {
                let c = diag.crossings()[i];
                let mut pos = diag.clone();
                positive_resolution_at(&mut pos, i, c);
                stack.push((pos, coeff.clone()));

                let mut neg = diag.clone();
                negative_resolution_at(&mut neg, i, c);
                stack.push((neg, -&coeff));

                let smooth = diag.smooth_crossing(i).expect("index in range");
                stack.push((smooth, &(-&coeff) * &IntPoly::h()));
            }
        }
    }
    done
}

fn positive_resolution_at(d: &mut Diagram, i: usize, c: Crossing) {
    debug_assert_eq!(c.kind, CrossingKind::Singular);
    replace_crossing(
        d,
        i,
        Crossing {
            kind: CrossingKind::Positive,
            ..c
        },
    );
}

fn negative_resolution_at(d: &mut Diagram, i: usize, c: Crossing) {
    debug_assert_eq!(c.kind, CrossingKind::Singular);
    replace_crossing(
        d,
        i,
        Crossing {
            kind: CrossingKind::Positive,
            ..c
        }
        .switched(),
    );
}

fn replace_crossing(d: &mut Diagram, i: usize, c: Crossing) {
    // Rebuild through the constructor to keep the validation invariant.
    let mut crossings = d.crossings().to_vec();
    crossings[i] = c;
    *d = Diagram::new(crossings, d.free_loops()).expect("slot structure unchanged");
}

/// The classical link obtained by turning the double points in `x` into
/// negative crossings and smoothing every other double point.
pub fn negative_resolution(d: &Diagram, x: &[usize]) -> Result<Diagram, DiagramError> {
    for &i in x {
        match d.crossings().get(i) {
            None => return Err(DiagramError::CrossingOutOfRange(i)),
            Some(c) if c.kind != CrossingKind::Singular => {
                return Err(DiagramError::NotSingular(i))
            }
            _ => {}
        }
    }
    let mut out = d.clone();
    for &i in x {
        let c = out.crossings()[i];
        negative_resolution_at(&mut out, i, c);
    }
    // Smooth the remaining double points, one at a time (indices shift).
    while let Some(&i) = out.singular_indices().first() {
        out = out.smooth_crossing(i)?;
    }
    Ok(out)
}

/// Differentiate the coefficients with respect to `h`; the diagrams are
/// untouched and terms whose derivative vanishes drop out.
pub fn differentiate_combination(c: &FormalCombination) -> FormalCombination {
    let mut out = FormalCombination::zero();
    for (d, coeff) in c.iter() {
        out.add_term(d.clone(), coeff.derivative());
    }
    out
}
