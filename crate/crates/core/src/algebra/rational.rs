//! Rational-coefficient analogues of the integer types.
//!
//! These exist for the two places exact fractions are unavoidable: the
//! square-root substitution cross-check against the two-variable polynomial,
//! and the chord-module linear algebra.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraError, IntPoly, LaurentPoly, TwoVarLaurent, USeries};

/// Dense polynomial over `Q`, ascending powers; trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        while p.coeffs.last().is_some_and(|c| c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl From<&IntPoly> for QPoly {
    fn from(p: &IntPoly) -> Self {
        QPoly::from_coeffs(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

/// Laurent polynomial in `h` over `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QLaurentPoly {
    offset: i64,
    coeffs: Vec<BigRational>,
}

impl QLaurentPoly {
    pub fn new(offset: i64, coeffs: Vec<BigRational>) -> Self {
        let mut p = QLaurentPoly { offset, coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        QLaurentPoly {
            offset: 0,
            coeffs: vec![],
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn monomial(c: BigRational, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QLaurentPoly {
            offset: k,
            coeffs: vec![c],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigRational {
        let i = k - self.offset;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.offset, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Inverse of a single-term Laurent monomial, if that is what we are.
    fn monomial_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 && !self.coeffs[0].is_zero() {
            Some(Self::monomial(self.coeffs[0].recip(), -self.offset))
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }
}

impl From<&LaurentPoly> for QLaurentPoly {
    fn from(p: &LaurentPoly) -> Self {
        let mut out = QLaurentPoly::zero();
        for (k, c) in p.terms() {
            out = &out + &QLaurentPoly::monomial(BigRational::from(c.clone()), k);
        }
        out
    }
}

impl Add for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn add(self, rhs: &QLaurentPoly) -> QLaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = (self.offset + self.coeffs.len() as i64 - 1)
            .max(rhs.offset + rhs.coeffs.len() as i64 - 1);
        QLaurentPoly::new(lo, (lo..=hi).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn sub(self, rhs: &QLaurentPoly) -> QLaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn neg(self) -> QLaurentPoly {
        QLaurentPoly::new(self.offset, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn mul(self, rhs: &QLaurentPoly) -> QLaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return QLaurentPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QLaurentPoly::new(self.offset + rhs.offset, coeffs)
    }
}

/// Truncated series in `u` with `QLaurentPoly` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QBivariateSeries {
    coeffs: Vec<QLaurentPoly>,
}

impl QBivariateSeries {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1);
        QBivariateSeries {
            coeffs: vec![QLaurentPoly::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(QLaurentPoly::one(), order)
    }

    pub fn constant(c: QLaurentPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * u^k`, truncated away when `k >= order`.
    pub fn u_monomial(c: QLaurentPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_bivariate(s: &super::BivariateSeries) -> Self {
        QBivariateSeries {
            coeffs: s.coeffs().iter().map(QLaurentPoly::from).collect(),
        }
    }

    pub fn from_useries(s: &USeries) -> Self {
        QBivariateSeries {
            coeffs: s
                .coeffs()
                .iter()
                .map(|c| QLaurentPoly::monomial(BigRational::from(c.clone()), 0))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> QLaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(QLaurentPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn mul_laurent(&self, p: &QLaurentPoly) -> Self {
        QBivariateSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Multiplicative inverse; the `u^0` coefficient must be a nonzero
    /// Laurent monomial.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        let Some(c0_inv) = self.coeffs[0].monomial_inverse() else {
            return Err(AlgebraError::NonUnitConstant(format!(
                "{:?}",
                self.coeffs[0]
            )));
        };
        let n = self.order();
        let mut inv = Self::zero(n);
        inv.coeffs[0] = c0_inv.clone();
        for m in 1..n {
            let mut acc = QLaurentPoly::zero();
            for i in 1..=m {
                acc = &acc + &(&self.coeffs[i] * &inv.coeffs[m - i]);
            }
            inv.coeffs[m] = -&(&c0_inv * &acc);
        }
        Ok(inv)
    }

    /// The inverse square root `r` with `r^2 * self = 1` and `r = 1 + O(u)`;
    /// the `u^0` coefficient of `self` must equal 1.
    pub fn sqrt_inv(&self) -> Result<Self, AlgebraError> {
        if self.coeffs[0] != QLaurentPoly::one() {
            return Err(AlgebraError::ConstantNotOne(format!("{:?}", self.coeffs[0])));
        }
        let n = self.order();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut r = Self::one(n);
        for m in 1..n {
            // With r correct mod u^m, the u^m coefficient of r^2 * self is
            // cancelled by adjusting r_m by -(r^2 s)_m / 2.
            let t = &(&r * &r) * self;
            let delta = (-&t.coeffs[m]).scale(&half);
            r.coeffs[m] = &r.coeffs[m] + &delta;
        }
        Ok(r)
    }

    fn check_orders(&self, rhs: &Self) {
        assert_eq!(self.order(), rhs.order(), "series truncation orders differ");
    }

    /// Integer power, negative exponents via inversion.
    fn int_pow(&self, e: i64) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl Add for &QBivariateSeries {
    type Output = QBivariateSeries;
    fn add(self, rhs: &QBivariateSeries) -> QBivariateSeries {
        self.check_orders(rhs);
        QBivariateSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &QBivariateSeries {
    type Output = QBivariateSeries;
    fn sub(self, rhs: &QBivariateSeries) -> QBivariateSeries {
        self.check_orders(rhs);
        QBivariateSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &QBivariateSeries {
    type Output = QBivariateSeries;
    fn mul(self, rhs: &QBivariateSeries) -> QBivariateSeries {
        self.check_orders(rhs);
        let n = self.order();
        let mut out = QBivariateSeries::zero(n);
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        out
    }
}

/// Substitute series for both variables of a two-variable Laurent
/// polynomial: `F(x := xs, h := hs)`, truncated to the common order.
///
/// Negative exponents require `xs` and `hs` to be invertible series.
pub fn eval_twovar_at_series(
    f: &TwoVarLaurent,
    xs: &QBivariateSeries,
    hs: &QBivariateSeries,
) -> Result<QBivariateSeries, AlgebraError> {
    assert_eq!(xs.order(), hs.order(), "series truncation orders differ");
    let order = xs.order();
    let mut out = QBivariateSeries::zero(order);
    let mut xpow: std::collections::HashMap<i64, QBivariateSeries> = Default::default();
    let mut hpow: std::collections::HashMap<i64, QBivariateSeries> = Default::default();
    for (&(a, b), c) in f.terms() {
        if let std::collections::hash_map::Entry::Vacant(e) = xpow.entry(a) {
            e.insert(xs.int_pow(a)?);
        }
        if let std::collections::hash_map::Entry::Vacant(e) = hpow.entry(b) {
            e.insert(hs.int_pow(b)?);
        }
        let term = (&xpow[&a] * &hpow[&b])
            .mul_laurent(&QLaurentPoly::monomial(BigRational::from(c.clone()), 0));
        out = &out + &term;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn qpoly_arithmetic() {
        let p = QPoly::from_coeffs(vec![q(1, 2), q(0, 1), q(1, 1)]);
        let r = QPoly::from(&crate::algebra::IntPoly::from_i64(&[2, 1]));
        let sum = &p + &r;
        assert_eq!(sum.coeff(0), q(5, 2));
        assert_eq!(sum.coeff(1), q(1, 1));
        let prod = &p * &r;
        assert_eq!(prod.coeff(0), q(1, 1));
        assert_eq!(prod.coeff(3), q(1, 1));
        assert!(QPoly::from_coeffs(vec![q(0, 1)]).is_zero());
    }

    fn u_plus_one(order: usize) -> QBivariateSeries {
        let mut s = QBivariateSeries::one(order);
        s.coeffs[1] = QLaurentPoly::one();
        s
    }

    #[test]
    fn sqrt_inv_of_one() {
        let one = QBivariateSeries::one(6);
        assert_eq!(one.sqrt_inv().unwrap(), one);
    }

    #[test]
    fn sqrt_inv_of_one_plus_u() {
        let s = u_plus_one(6);
        let r = s.sqrt_inv().unwrap();
        // r^2 s = 1 and the leading corrections are -1/2, 3/8.
        assert_eq!(&(&r * &r) * &s, QBivariateSeries::one(6));
        assert_eq!(r.coeff(1), QLaurentPoly::monomial(q(-1, 2), 0));
        assert_eq!(r.coeff(2), QLaurentPoly::monomial(q(3, 8), 0));
    }

    #[test]
    fn sqrt_inv_of_perfect_square() {
        let s = u_plus_one(6);
        let sq = &s * &s;
        let r = sq.sqrt_inv().unwrap();
        assert_eq!(r, s.invert().unwrap());
    }

    #[test]
    fn sqrt_inv_requires_constant_one() {
        let s = QBivariateSeries::constant(QLaurentPoly::monomial(q(2, 1), 0), 4);
        assert!(s.sqrt_inv().is_err());
    }

    #[test]
    fn eval_projection_and_cancellation() {
        let order = 6;
        let xs = u_plus_one(order);
        let hs = QBivariateSeries::constant(QLaurentPoly::monomial(q(1, 1), 1), order);
        // F = x
        let f = TwoVarLaurent::monomial(BigInt::from(1), 1, 0);
        assert_eq!(eval_twovar_at_series(&f, &xs, &hs).unwrap(), xs);
        // F = x x^-1 = 1
        let f = &TwoVarLaurent::monomial(BigInt::from(1), 1, 0)
            * &TwoVarLaurent::monomial(BigInt::from(1), -1, 0);
        assert_eq!(
            eval_twovar_at_series(&f, &xs, &hs).unwrap(),
            QBivariateSeries::one(order)
        );
        // F = x^-2 at x = 1+u: 1 - 2u + 3u^2 - ...
        let f = TwoVarLaurent::monomial(BigInt::from(1), -2, 0);
        let got = eval_twovar_at_series(&f, &xs, &hs).unwrap();
        let direct = &xs.invert().unwrap() * &xs.invert().unwrap();
        assert_eq!(got, direct);
        for k in 0..order {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                got.coeff(k),
                QLaurentPoly::monomial(q(sign * (k as i64 + 1), 1), 0)
            );
        }
    }
}
