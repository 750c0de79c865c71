//! Truncated power series in `u` with Laurent-polynomial coefficients in `h`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::render::{push_term, var_power};
use super::{AlgebraError, IntPoly, LaurentPoly, USeries};

/// An element of `Z[h, h^-1][[u]]` known modulo `u^N`: `coeffs[k]` is the
/// `u^k` coefficient. Binary operations require equal orders.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariateSeries {
    coeffs: Vec<LaurentPoly>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be positive");
        BivariateSeries {
            coeffs: vec![LaurentPoly::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LaurentPoly::one(), order)
    }

    pub fn constant(c: LaurentPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `p * u^k`, truncated away when `k >= order`.
    pub fn monomial(p: LaurentPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = p;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty());
        BivariateSeries { coeffs }
    }

    /// Lift an integer series to `h`-degree zero coefficients.
    pub fn from_useries(s: &USeries) -> Self {
        BivariateSeries {
            coeffs: s
                .coeffs()
                .iter()
                .map(|c| LaurentPoly::monomial(c.clone(), 0))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Largest `n` such that `u^n` divides the series (up to the truncation
    /// order, which is returned for the zero series).
    pub fn u_valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.order())
    }

    /// Multiply by `u^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in k..n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Multiply every coefficient by a Laurent polynomial in `h`.
    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        BivariateSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Multiplicative inverse; the `u^0` coefficient must be a unit of
    /// `Z[h, h^-1]`, i.e. a monomial with coefficient 1 or -1.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        let c0 = &self.coeffs[0];
        let Some((c, k)) = c0.unit_monomial() else {
            return Err(AlgebraError::NonUnitConstant(c0.to_string()));
        };
        // (c h^k)^-1 = c h^-k since c = +-1.
        let c0_inv = LaurentPoly::monomial(c, -k);
        let n = self.order();
        let mut inv = Self::zero(n);
        inv.coeffs[0] = c0_inv.clone();
        for m in 1..n {
            let mut acc = LaurentPoly::zero();
            for i in 1..=m {
                acc = &acc + &(&self.coeffs[i] * &inv.coeffs[m - i]);
            }
            inv.coeffs[m] = -&(&c0_inv * &acc);
        }
        Ok(inv)
    }

    fn check_orders(&self, rhs: &Self) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "series truncation orders differ"
        );
    }
}

impl From<(&IntPoly, usize)> for BivariateSeries {
    fn from((p, order): (&IntPoly, usize)) -> Self {
        Self::constant(LaurentPoly::from(p), order)
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.check_orders(rhs);
        BivariateSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;
    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.check_orders(rhs);
        BivariateSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;
    fn neg(self) -> BivariateSeries {
        BivariateSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;
    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.check_orders(rhs);
        let n = self.order();
        let mut out = BivariateSeries::zero(n);
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

impl fmt::Display for BivariateSeries {
    /// Ascending `u` power, then ascending `h` power; the `h` part precedes
    /// the `u` part in each monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, p) in self.coeffs.iter().enumerate() {
            for (a, c) in p.terms() {
                let var = format!("{}{}", var_power('h', a), var_power('u', k as i64));
                push_term(&mut out, c, &var);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{} + O(u^{})", out, self.order())
    }
}
