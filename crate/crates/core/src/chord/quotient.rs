//! Exact rational row reduction and the truncated quotient ranks.
//!
//! The quotient of the span of all `n`-chord diagrams (with fewer than `e`
//! bare circles, the truncation of the `u`-action) by all four-term and
//! smoothed four-term relations has dimension `(n + 1) e`, with the classes
//! `u^j g(l, n)` as a basis. The rank computation certifies both facts.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{enumerate_diagrams, g_chord, gen_4t, gen_4ts, ChordCombination, ChordError};

/// Sparse row echelon over the rationals with deterministic leftmost
/// pivoting. Rows are kept pivot-normalized.
#[derive(Debug, Clone, Default)]
pub struct RatEchelon {
    /// `pivot column -> reduced row`, each row sorted by column.
    rows: BTreeMap<usize, Vec<(usize, BigRational)>>,
}

impl RatEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce a row against the echelon; the result has no pivot column of
    /// the echelon in its support.
    pub fn reduce(&self, mut row: Vec<(usize, BigRational)>) -> Vec<(usize, BigRational)> {
        loop {
            row.retain(|(_, c)| !c.is_zero());
            row.sort_by_key(|&(col, _)| col);
            let Some(&(lead, ref coeff)) = row.first() else {
                return row;
            };
            let Some(pivot_row) = self.rows.get(&lead) else {
                return row;
            };
            let factor = coeff.clone();
            row = sub_scaled(&row, pivot_row, &factor);
        }
    }

    /// Insert a row, returning true when it enlarges the span.
    pub fn insert(&mut self, row: Vec<(usize, BigRational)>) -> bool {
        let reduced = self.reduce(row);
        let Some((lead, coeff)) = reduced.first().cloned() else {
            return false;
        };
        let normalized: Vec<(usize, BigRational)> = reduced
            .into_iter()
            .map(|(col, c)| (col, c / coeff.clone()))
            .collect();
        self.rows.insert(lead, normalized);
        true
    }

    pub fn contains(&self, row: Vec<(usize, BigRational)>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// `a - factor * b` on sorted sparse rows ('b' is pivot-normalized).
fn sub_scaled(
    a: &[(usize, BigRational)],
    b: &[(usize, BigRational)],
    factor: &BigRational,
) -> Vec<(usize, BigRational)> {
    let mut out = vec![];
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    i += 1;
                } else if cb < ca {
                    out.push((*cb, -(vb * factor)));
                    j += 1;
                } else {
                    let v = va - vb * factor;
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -(vb * factor)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// A fixed column indexing of the truncated diagram span.
#[derive(Debug, Clone)]
pub struct DiagramSpan {
    pub n_chords: usize,
    pub max_free: u32,
    columns: BTreeMap<Vec<u8>, usize>,
}

impl DiagramSpan {
    pub fn build(n_chords: usize, max_free: u32) -> Result<Self, ChordError> {
        let mut columns = BTreeMap::new();
        if n_chords == 0 {
            // A chordless diagram is u^(j-1) times the single bare circle,
            // so the truncated span runs over 1 ..= max_free circles.
            for j in 1..=max_free {
                let key = super::ChordDiagram::bare(j).canonical_encoding();
                let next = columns.len();
                columns.entry(key).or_insert(next);
            }
        } else {
            for d in enumerate_diagrams(n_chords, max_free)? {
                let key = d.canonical_encoding();
                let next = columns.len();
                columns.entry(key).or_insert(next);
            }
        }
        Ok(DiagramSpan {
            n_chords,
            max_free,
            columns,
        })
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    /// The `u`-degree of a term: bare circles carried on top of the
    /// chord-bearing part (for chordless terms, one circle is the base).
    fn u_degree(d: &super::ChordDiagram) -> u32 {
        if d.chord_count() == 0 {
            d.free_circles().saturating_sub(1)
        } else {
            d.free_circles()
        }
    }

    /// Project a combination onto the span, dropping terms at or past the
    /// `u`-truncation.
    pub fn vector_of(&self, c: &ChordCombination) -> Vec<(usize, BigRational)> {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (d, coeff) in c.iter() {
            if Self::u_degree(d) >= self.max_free {
                continue;
            }
            let key = d.canonical_encoding();
            let col = *self
                .columns
                .get(&key)
                .expect("combination term outside the enumerated span");
            let entry = acc.entry(col).or_insert_with(BigRational::zero);
            *entry += coeff;
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// The relation echelon for the truncated quotient at `n` chords.
pub fn relation_echelon(
    span: &DiagramSpan,
) -> Result<RatEchelon, ChordError> {
    let n = span.n_chords;
    let e = span.max_free;
    let mut ech = RatEchelon::new();
    if n >= 2 {
        for v in gen_4t(n, e)? {
            ech.insert(span.vector_of(&v));
        }
    }
    if n >= 1 {
        for v in gen_4ts(n, e)? {
            ech.insert(span.vector_of(&v));
        }
    }
    Ok(ech)
}

/// Rank data for one truncated quotient.
#[derive(Debug, Clone)]
pub struct QuotientReport {
    pub n_chords: usize,
    pub truncation: u32,
    pub span_dim: usize,
    pub relation_rank: usize,
    pub dim: usize,
    pub expected_dim: usize,
    /// The classes `u^j g(l, n)` are independent modulo the relations and
    /// hence a basis exactly when `dim == expected_dim`.
    pub basis_ok: bool,
}

impl QuotientReport {
    pub fn ok(&self) -> bool {
        self.dim == self.expected_dim && self.basis_ok
    }
}

/// Dimension of span / (4T, 4TS, u-truncation) and the basis certificate.
pub fn quotient_dim(n: usize, e: u32) -> Result<QuotientReport, ChordError> {
    let span = DiagramSpan::build(n, e)?;
    let relations = relation_echelon(&span)?;
    let relation_rank = relations.rank();
    let dim = span.dim() - relation_rank;
    // Stack the candidate basis on top of the relations; every vector must
    // enlarge the span for independence in the quotient.
    let mut augmented = relations.clone();
    let mut basis_ok = true;
    for j in 0..e {
        for l in 0..=n {
            let v = ChordCombination::singleton(
                g_chord(l, n).with_free(j),
                BigRational::from_integer(1.into()),
            );
            if !augmented.insert(span.vector_of(&v)) {
                basis_ok = false;
            }
        }
    }
    let expected_dim = (n + 1) * e as usize;
    Ok(QuotientReport {
        n_chords: n,
        truncation: e,
        span_dim: span.dim(),
        relation_rank,
        dim,
        expected_dim,
        basis_ok: basis_ok && dim == expected_dim,
    })
}
