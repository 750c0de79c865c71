//! Memoized skein-tree evaluation of the three link invariants.
//!
//! The recursion rewrites the first "bad" crossing of a diagram until it
//! becomes descending, at which point the diagram presents an unlink and the
//! base values apply. Components are traversed in order of their minimal
//! arc identifier, starting at that arc; a crossing is good when its first
//! visit runs along the overstrand. Switching the first bad crossing makes
//! it good without disturbing any other crossing's first visit, and
//! smoothing drops the crossing count, so the measure
//! (crossing count, bad count) decreases lexicographically on both branches.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{BivariateSeries, IntPoly, LaurentPoly, TwoVarLaurent, USeries};
use crate::diagram::{Diagram, FormalCombination};
use crate::series::SkeinSeries;

/// Which invariant to evaluate; used where callers dispatch by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Conway,
    Homfly,
    P,
}

impl Invariant {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "conway" => Some(Invariant::Conway),
            "homfly" => Some(Invariant::Homfly),
            "p" => Some(Invariant::P),
            _ => None,
        }
    }
}

/// Evaluation context: truncation order, the series entering the
/// two-variable skein relation, and one memo cache per invariant.
pub struct SkeinContext {
    order: usize,
    alpha: USeries,
    beta: USeries,
    one_plus_h_alpha: BivariateSeries,
    inv_one_plus_h_alpha: BivariateSeries,
    h_one_plus_beta: BivariateSeries,
    cache_enabled: bool,
    conway_cache: RefCell<HashMap<Vec<u8>, IntPoly>>,
    homfly_cache: RefCell<HashMap<Vec<u8>, TwoVarLaurent>>,
    p_cache: RefCell<HashMap<Vec<u8>, BivariateSeries>>,
}

impl SkeinContext {
    pub fn new(order: usize) -> Self {
        Self::with_cache(order, true)
    }

    /// Caching is semantically transparent; disabling it exists for tests.
    pub fn with_cache(order: usize, cache_enabled: bool) -> Self {
        let series = SkeinSeries::new(order);
        let mut one_plus_h_alpha = BivariateSeries::one(order);
        let mut h_one_plus_beta = BivariateSeries::zero(order);
        for k in 0..order {
            let a = series.alpha.coeff(k);
            if !a.is_zero() {
                one_plus_h_alpha = &one_plus_h_alpha
                    + &BivariateSeries::monomial(LaurentPoly::monomial(a, 1), k, order);
            }
        }
        for k in 0..order {
            let b = if k == 0 {
                BigInt::from(1)
            } else {
                series.beta.coeff(k)
            };
            if !b.is_zero() {
                h_one_plus_beta = &h_one_plus_beta
                    + &BivariateSeries::monomial(LaurentPoly::monomial(b, 1), k, order);
            }
        }
        let inv_one_plus_h_alpha = one_plus_h_alpha
            .invert()
            .expect("1 + h alpha has unit constant term");
        SkeinContext {
            order,
            alpha: series.alpha,
            beta: series.beta,
            one_plus_h_alpha,
            inv_one_plus_h_alpha,
            h_one_plus_beta,
            cache_enabled,
            conway_cache: RefCell::new(HashMap::new()),
            homfly_cache: RefCell::new(HashMap::new()),
            p_cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alpha(&self) -> &USeries {
        &self.alpha
    }

    pub fn beta(&self) -> &USeries {
        &self.beta
    }

    /// The switch-branch factor of the series skein relation.
    pub fn one_plus_h_alpha(&self) -> &BivariateSeries {
        &self.one_plus_h_alpha
    }

    /// The smoothing-branch factor of the series skein relation.
    pub fn h_one_plus_beta(&self) -> &BivariateSeries {
        &self.h_one_plus_beta
    }

    /// Conway polynomial; descending base case 1 on a knot, 0 on a split
    /// unlink of two or more components.
    pub fn conway(&self, d: &Diagram) -> IntPoly {
        assert!(d.is_classical(), "conway needs a resolved diagram");
        let key = d.canonical_encoding();
        if self.cache_enabled {
            if let Some(v) = self.conway_cache.borrow().get(&key) {
                return v.clone();
            }
        }
        let value = match first_bad_crossing(d) {
            None => {
                if d.component_count() == 1 {
                    IntPoly::one()
                } else {
                    IntPoly::zero()
                }
            }
            Some(i) => {
                let switched = self.conway(&d.switch_crossing(i).unwrap());
                let smoothed = self.conway(&d.smooth_crossing(i).unwrap());
                let h_term = &smoothed * &IntPoly::h();
                if d.crossings()[i].kind == crate::diagram::CrossingKind::Positive {
                    &switched + &h_term
                } else {
                    &switched - &h_term
                }
            }
        };
        if self.cache_enabled {
            self.conway_cache.borrow_mut().insert(key, value.clone());
        }
        value
    }

    /// The two-variable polynomial with relation
    /// `x P(X+) - x^-1 P(X-) = h P(X0)` and value 1 on the unknot; a
    /// k-component unlink takes ((x - x^-1)/h)^(k-1).
    pub fn homfly(&self, d: &Diagram) -> TwoVarLaurent {
        assert!(d.is_classical(), "homfly needs a resolved diagram");
        let key = d.canonical_encoding();
        if self.cache_enabled {
            if let Some(v) = self.homfly_cache.borrow().get(&key) {
                return v.clone();
            }
        }
        let value = match first_bad_crossing(d) {
            None => {
                let k = d.component_count();
                let split = &TwoVarLaurent::monomial(BigInt::from(1), 1, -1)
                    - &TwoVarLaurent::monomial(BigInt::from(1), -1, -1);
                split.pow(k - 1)
            }
            Some(i) => {
                let switched = self.homfly(&d.switch_crossing(i).unwrap());
                let smoothed = self.homfly(&d.smooth_crossing(i).unwrap());
                if d.crossings()[i].kind == crate::diagram::CrossingKind::Positive {
                    // P(X+) = x^-2 P(X-) + x^-1 h P(X0)
                    &switched.mul_monomial(&BigInt::from(1), -2, 0)
                        + &smoothed.mul_monomial(&BigInt::from(1), -1, 1)
                } else {
                    // P(X-) = x^2 P(X+) - x h P(X0)
                    &switched.mul_monomial(&BigInt::from(1), 2, 0)
                        - &smoothed.mul_monomial(&BigInt::from(1), 1, 1)
                }
            }
        };
        if self.cache_enabled {
            self.homfly_cache.borrow_mut().insert(key, value.clone());
        }
        value
    }

    /// The series invariant with relation
    /// `P(X+) = (1 + h alpha) P(X-) + h (1 + beta) P(X0)` and value
    /// `u^(k-1)` on a k-component unlink.
    pub fn p_series(&self, d: &Diagram) -> BivariateSeries {
        assert!(d.is_classical(), "p_series needs a resolved diagram");
        let key = d.canonical_encoding();
        if self.cache_enabled {
            if let Some(v) = self.p_cache.borrow().get(&key) {
                return v.clone();
            }
        }
        let value = match first_bad_crossing(d) {
            None => {
                let k = d.component_count();
                BivariateSeries::monomial(LaurentPoly::one(), k - 1, self.order)
            }
            Some(i) => {
                let switched = self.p_series(&d.switch_crossing(i).unwrap());
                let smoothed = self.p_series(&d.smooth_crossing(i).unwrap());
                let smooth_term = &self.h_one_plus_beta * &smoothed;
                if d.crossings()[i].kind == crate::diagram::CrossingKind::Positive {
                    &(&self.one_plus_h_alpha * &switched) + &smooth_term
                } else {
                    &self.inv_one_plus_h_alpha * &(&switched - &smooth_term)
                }
            }
        };
        if self.cache_enabled {
            self.p_cache.borrow_mut().insert(key, value.clone());
        }
        value
    }

    /// `Z[h]`-linear extension of `conway` to formal combinations.
    pub fn eval_conway(&self, c: &FormalCombination) -> IntPoly {
        let mut acc = IntPoly::zero();
        for (d, coeff) in c.iter() {
            acc = &acc + &(coeff * &self.conway(d));
        }
        acc
    }

    /// Linear extension of `homfly`; the coefficient variable maps to the
    /// target ring's `h`.
    pub fn eval_homfly(&self, c: &FormalCombination) -> TwoVarLaurent {
        let mut acc = TwoVarLaurent::zero();
        for (d, coeff) in c.iter() {
            acc = &acc + &(&TwoVarLaurent::from(coeff) * &self.homfly(d));
        }
        acc
    }

    /// Linear extension of `p_series`.
    pub fn eval_p(&self, c: &FormalCombination) -> BivariateSeries {
        let mut acc = BivariateSeries::zero(self.order);
        for (d, coeff) in c.iter() {
            acc = &acc + &self.p_series(d).mul_laurent(&LaurentPoly::from(coeff));
        }
        acc
    }
}

/// The first crossing whose first visit along the global traversal runs on
/// the understrand, or `None` when the diagram is descending. The traversal
/// walks components in order of minimal arc identifier, each from its
/// minimal arc.
pub fn first_bad_crossing(d: &Diagram) -> Option<usize> {
    let mut at_in_slot: HashMap<u32, (usize, bool)> = HashMap::new();
    for (i, c) in d.crossings().iter().enumerate() {
        at_in_slot.insert(c.a_in, (i, false));
        at_in_slot.insert(c.b_in, (i, true));
    }
    let mut visited = vec![false; d.crossing_count()];
    for cycle in d.strand_cycles() {
        for arc in cycle {
            let &(i, over) = at_in_slot.get(&arc).expect("valid diagram");
            if !visited[i] {
                visited[i] = true;
                if !over {
                    return Some(i);
                }
            }
        }
    }
    None
}
