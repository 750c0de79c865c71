//! The higher invariant hierarchy extracted from the series invariant.
//!
//! `nabla(l, 0)` is read off the `u^l` coefficient of the series `P`, scaled
//! by `(-h)^-l`; `nabla(l, m)` follows by the derivative formula
//! `nabla(l, m) = h^-l / m! * (d/dh)^m (h^l nabla(l, 0))`, whose division by
//! `m!` is exact because an `m`-fold derivative carries binomial factors.
//! Linear extensions to formal combinations multiply per-diagram values by
//! the `Z[h]` coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    eval_twovar_at_series, taylor_shift, AlgebraError, BivariateSeries, IntPoly, LaurentPoly,
    QBivariateSeries, QLaurentPoly, TwoVarLaurent,
};
use crate::diagram::{
    differentiate_combination, make_g, negative_resolution, resolve, Diagram, DiagramError,
    FormalCombination,
};
use crate::skein::SkeinContext;

#[derive(Debug)]
pub enum HigherError {
    /// The requested `u` power is not carried at this truncation order.
    OrderExceeded { l: usize, order: usize },
    /// `lmax + mmax + 2` must stay within the truncation order.
    WindowExceeded {
        lmax: usize,
        mmax: usize,
        order: usize,
    },
    /// `h^l nabla(l, 0)` left the polynomial ring; the theory guarantees
    /// integrality, so this indicates a bug.
    NotIntegral(String),
    Algebra(AlgebraError),
    Diagram(DiagramError),
}

impl std::fmt::Display for HigherError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HigherError::OrderExceeded { l, order } => {
                write!(f, "u^{l} is not carried at truncation order {order}")
            }
            HigherError::WindowExceeded { lmax, mmax, order } => write!(
                f,
                "window ({lmax}, {mmax}) plus guard exceeds truncation order {order}"
            ),
            HigherError::NotIntegral(s) => write!(f, "expected a polynomial in h: {s}"),
            HigherError::Algebra(e) => write!(f, "{e}"),
            HigherError::Diagram(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for HigherError {}

impl From<AlgebraError> for HigherError {
    fn from(e: AlgebraError) -> Self {
        HigherError::Algebra(e)
    }
}

impl From<DiagramError> for HigherError {
    fn from(e: DiagramError) -> Self {
        HigherError::Diagram(e)
    }
}

fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `(-1)^l h^-l` times the `u^l` coefficient of the series invariant.
pub fn nabla_l0(ctx: &SkeinContext, d: &Diagram, l: usize) -> Result<LaurentPoly, HigherError> {
    if l >= ctx.order() {
        return Err(HigherError::OrderExceeded {
            l,
            order: ctx.order(),
        });
    }
    Ok(scale_off_u_power(&ctx.p_series(d), l))
}

fn scale_off_u_power(p: &BivariateSeries, l: usize) -> LaurentPoly {
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    p.coeff(l).mul_monomial(&BigInt::from(sign), -(l as i64))
}

/// `h^l nabla(l, 0)` as an honest polynomial in `h`.
fn h_pow_nabla_l0(ctx: &SkeinContext, d: &Diagram, l: usize) -> Result<IntPoly, HigherError> {
    let n = nabla_l0(ctx, d, l)?;
    let g = n.mul_monomial(&BigInt::one(), l as i64);
    g.to_int_poly()
        .ok_or_else(|| HigherError::NotIntegral(g.to_string()))
}

/// The derivative formula; `m = 0` reduces to `nabla_l0`.
pub fn nabla_lm(
    ctx: &SkeinContext,
    d: &Diagram,
    l: usize,
    m: usize,
) -> Result<LaurentPoly, HigherError> {
    if m == 0 {
        return nabla_l0(ctx, d, l);
    }
    let mut g = h_pow_nabla_l0(ctx, d, l)?;
    for _ in 0..m {
        g = g.derivative();
    }
    let divided = g.exact_div(&factorial(m))?;
    Ok(LaurentPoly::from(&divided).mul_monomial(&BigInt::one(), -(l as i64)))
}

/// `Z[h]`-linear extension of `nabla(l, m)` to formal combinations.
pub fn nabla_lm_combination(
    ctx: &SkeinContext,
    c: &FormalCombination,
    l: usize,
    m: usize,
) -> Result<LaurentPoly, HigherError> {
    let mut acc = LaurentPoly::zero();
    for (d, coeff) in c.iter() {
        let v = nabla_lm(ctx, d, l, m)?;
        acc = &acc + &(&LaurentPoly::from(coeff) * &v);
    }
    Ok(acc)
}

/// Grid evaluation of the delta pattern on one resolved generator.
#[derive(Debug, Clone)]
pub struct KroneckerReport {
    pub lp: usize,
    pub np: usize,
    pub window: usize,
    /// `(l, m) -> (value, whether the delta pattern expects 1 here)`
    pub entries: BTreeMap<(usize, usize), (LaurentPoly, bool)>,
}

impl KroneckerReport {
    pub fn all_ok(&self) -> bool {
        self.entries.values().all(|(value, expect_one)| {
            if *expect_one {
                value.is_one()
            } else {
                value.is_zero()
            }
        })
    }
}

/// Evaluate `nabla(l, m)` on the resolution of `G(lp, np)` for all
/// `l + m <= window` and compare against the delta pattern: the value is 1
/// exactly at `(l, m) = (lp, np - lp)` and 0 elsewhere. Requires the guard
/// `window + 2 <= order`.
pub fn kronecker_check(
    ctx: &SkeinContext,
    lp: usize,
    np: usize,
    window: usize,
) -> Result<KroneckerReport, HigherError> {
    if window + 2 > ctx.order() {
        return Err(HigherError::WindowExceeded {
            lmax: window,
            mmax: 0,
            order: ctx.order(),
        });
    }
    let g = make_g(lp, np)?;
    let r = resolve(&g);
    let mut entries = BTreeMap::new();
    for l in 0..=window {
        for m in 0..=(window - l) {
            let value = nabla_lm_combination(ctx, &r, l, m)?;
            let expect_one = l == lp && l + m == np;
            entries.insert((l, m), (value, expect_one));
        }
    }
    Ok(KroneckerReport {
        lp,
        np,
        window,
        entries,
    })
}

/// The coefficients `q_0 .. q_n` of a singular diagram with `n` double
/// points: `q_l` sums the Conway polynomials of the links obtained by
/// turning an `l`-subset of the double points negative and smoothing the
/// rest.
pub fn q_coefficients(ctx: &SkeinContext, d: &Diagram) -> Result<Vec<IntPoly>, HigherError> {
    let singular = d.singular_indices();
    let n = singular.len();
    assert!(n <= 16, "subset enumeration guard");
    let mut q = vec![IntPoly::zero(); n + 1];
    for mask in 0u32..(1 << n) {
        let subset: Vec<usize> = (0..n)
            .filter(|&b| mask & (1 << b) != 0)
            .map(|b| singular[b])
            .collect();
        let link = negative_resolution(d, &subset)?;
        let l = subset.len();
        q[l] = &q[l] + &ctx.conway(&link);
    }
    Ok(q)
}

/// First `count` coefficients of the expansion of `h^l nabla(l, 0)` in
/// powers of `h - eps`; integral for `eps = +-1` by the structure theory.
pub fn epsilon_coefficients(
    ctx: &SkeinContext,
    d: &Diagram,
    l: usize,
    eps: i64,
    count: usize,
) -> Result<Vec<BigInt>, HigherError> {
    let g = h_pow_nabla_l0(ctx, d, l)?;
    let mut shift = taylor_shift(&g, eps);
    shift.resize(count.max(shift.len()), BigInt::zero());
    shift.truncate(count);
    Ok(shift)
}

/// Outcome of the substitution cross-check between the two-variable
/// polynomial and the series invariant.
#[derive(Debug, Clone)]
pub struct ReparamReport {
    pub matches: bool,
    pub substituted: QBivariateSeries,
    pub direct: QBivariateSeries,
}

/// Substitute `x := (1 + h alpha)^(-1/2)` and
/// `h := h (1 + beta) (1 + h alpha)^(-1/2)` into the two-variable
/// polynomial and compare with the series invariant. The substitution is
/// the unique change of variables matching both skein relations
/// (`x^-2 = 1 + h alpha`, `x^-1 h~ = h (1 + beta)`) together with the
/// unlink values (`(x - x^-1)/h~ = -alpha/(1 + beta) = u`).
pub fn homfly_reparam_check(
    ctx: &SkeinContext,
    d: &Diagram,
) -> Result<ReparamReport, HigherError> {
    let order = ctx.order();
    let hom: TwoVarLaurent = ctx.homfly(d);
    let one_plus_h_alpha = one_plus_h_series(ctx.alpha().coeffs(), order);
    let h_one_plus_beta = h_times_one_plus_series(ctx.beta().coeffs(), order);
    let x_sub = one_plus_h_alpha.sqrt_inv()?;
    let h_sub = &h_one_plus_beta * &x_sub;
    let substituted = eval_twovar_at_series(&hom, &x_sub, &h_sub)?;
    let direct = QBivariateSeries::from_bivariate(&ctx.p_series(d));
    Ok(ReparamReport {
        matches: substituted == direct,
        substituted,
        direct,
    })
}

/// `1 + h s` for an integer series `s`.
fn one_plus_h_series(coeffs: &[BigInt], order: usize) -> QBivariateSeries {
    let mut out = QBivariateSeries::one(order);
    for (k, c) in coeffs.iter().enumerate().take(order) {
        if !c.is_zero() {
            let term = QLaurentPoly::monomial(BigRational::from(c.clone()), 1);
            out = &out + &QBivariateSeries::u_monomial(term, k, order);
        }
    }
    out
}

/// `h (1 + s)` for an integer series `s` (with `s` vanishing at `u^0`).
fn h_times_one_plus_series(coeffs: &[BigInt], order: usize) -> QBivariateSeries {
    let h = QLaurentPoly::monomial(BigRational::one(), 1);
    let mut out = QBivariateSeries::constant(h, order);
    for (k, c) in coeffs.iter().enumerate().take(order) {
        if !c.is_zero() {
            let term = QLaurentPoly::monomial(BigRational::from(c.clone()), 1);
            out = &out + &QBivariateSeries::u_monomial(term, k, order);
        }
    }
    out
}

/// Both invariant images of the derivative identity
/// `d(r(G(0, t))) = -t r(G(0, t - 1))`.
#[derive(Debug, Clone)]
pub struct DIdentityReport {
    pub t: usize,
    pub homfly_ok: bool,
    pub p_ok: bool,
}

pub fn d_identity_check(ctx: &SkeinContext, t: usize) -> Result<DIdentityReport, HigherError> {
    assert!(t >= 1);
    let lhs = differentiate_combination(&resolve(&make_g(0, t)?));
    let rhs = resolve(&make_g(0, t - 1)?).scale(&IntPoly::constant(BigInt::from(-(t as i64))));
    Ok(DIdentityReport {
        t,
        homfly_ok: ctx.eval_homfly(&lhs) == ctx.eval_homfly(&rhs),
        p_ok: ctx.eval_p(&lhs) == ctx.eval_p(&rhs),
    })
}

/// `u`-divisibility of the series image of a resolved singular diagram,
/// with the top coefficient pinned by the all-negative resolution.
#[derive(Debug, Clone)]
pub struct DivisibilityReport {
    pub double_points: usize,
    pub valuation_ok: bool,
    pub top_coefficient_ok: bool,
}

pub fn divisibility_check(
    ctx: &SkeinContext,
    d: &Diagram,
) -> Result<DivisibilityReport, HigherError> {
    let singular = d.singular_indices();
    let n = singular.len();
    let p = ctx.eval_p(&resolve(d));
    let valuation_ok = p.u_valuation() >= n;
    let top = p.coeff(n);
    let q_top = ctx.conway(&negative_resolution(d, &singular)?);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let expected = LaurentPoly::from(&q_top).mul_monomial(&BigInt::from(sign), n as i64);
    Ok(DivisibilityReport {
        double_points: n,
        valuation_ok,
        top_coefficient_ok: top == expected,
    })
}

/// The `(l, m)` table of higher invariants of one diagram, with its JSON
/// form pinned for the command-line interface.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NablaTable {
    pub link: String,
    #[serde(rename = "N")]
    pub order: usize,
    pub entries: Vec<NablaEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NablaEntry {
    pub l: usize,
    pub m: usize,
    pub poly: String,
}

impl NablaTable {
    /// Table of a diagram; a singular diagram is tabulated through its
    /// resolution.
    pub fn compute(
        ctx: &SkeinContext,
        name: &str,
        d: &Diagram,
        lmax: usize,
        mmax: usize,
    ) -> Result<NablaTable, HigherError> {
        if lmax + mmax + 2 > ctx.order() {
            return Err(HigherError::WindowExceeded {
                lmax,
                mmax,
                order: ctx.order(),
            });
        }
        let combination = resolve(d);
        let mut entries = vec![];
        for l in 0..=lmax {
            for m in 0..=mmax {
                entries.push(NablaEntry {
                    l,
                    m,
                    poly: nabla_lm_combination(ctx, &combination, l, m)?.to_string(),
                });
            }
        }
        Ok(NablaTable {
            link: name.to_string(),
            order: ctx.order(),
            entries,
        })
    }
}
