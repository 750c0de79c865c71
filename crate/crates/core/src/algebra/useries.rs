//! Truncated integer power series in `u`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::render::render_single_var;
use super::AlgebraError;

/// An element of `Z[[u]]` known modulo `u^N`: `coeffs` has length exactly
/// `N` and `coeffs[k]` is the coefficient of `u^k`.
///
/// Binary operations require equal orders and panic on a mismatch.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct USeries {
    coeffs: Vec<BigInt>,
}

impl USeries {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be positive");
        USeries {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigInt::one(), order)
    }

    pub fn constant(c: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The monomial `c * u^k`, truncated away entirely when `k >= order`.
    pub fn monomial(c: BigInt, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty());
        USeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: BigInt) {
        assert!(k < self.order());
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Multiply by `u^k` (truncated shift).
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in k..n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        let c0 = &self.coeffs[0];
        if !c0.magnitude().is_one() {
            return Err(AlgebraError::NonUnitConstant(c0.to_string()));
        }
        let n = self.order();
        let mut inv = Self::zero(n);
        inv.coeffs[0] = c0.clone();
        for k in 1..n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &inv.coeffs[k - i];
            }
            inv.coeffs[k] = -c0 * acc;
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

impl Add for &USeries {
    type Output = USeries;
    fn add(self, rhs: &USeries) -> USeries {
        self.check_orders(rhs);
        USeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &USeries {
    type Output = USeries;
    fn sub(self, rhs: &USeries) -> USeries {
        self.check_orders(rhs);
        USeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &USeries {
    type Output = USeries;
    fn neg(self) -> USeries {
        USeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &USeries {
    type Output = USeries;
    fn mul(self, rhs: &USeries) -> USeries {
        self.check_orders(rhs);
        let n = self.order();
        let mut out = USeries::zero(n);
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        out
    }
}

impl fmt::Display for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64, c.clone()))
            .collect();
        write!(f, "{} + O(u^{})", render_single_var(&terms, 'u'), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn us(cs: &[i64]) -> USeries {
        USeries::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn geometric_inverse() {
        // 1/(1 - u) = 1 + u + u^2 + ...
        let s = us(&[1, -1, 0, 0, 0]);
        assert_eq!(s.invert().unwrap(), us(&[1, 1, 1, 1, 1]));
        assert_eq!(USeries::one(4).invert().unwrap(), USeries::one(4));
    }

    #[test]
    fn invert_rejects_non_unit() {
        assert!(us(&[2, 1]).invert().is_err());
        assert!(us(&[0, 1]).invert().is_err());
    }

    #[test]
    fn display_with_order_marker() {
        assert_eq!(us(&[0, -1, 0, -1]).to_string(), "-u - u^3 + O(u^4)");
        assert_eq!(USeries::zero(3).to_string(), "0 + O(u^3)");
    }

    proptest! {
        #[test]
        fn inverse_multiplies_to_one(mut cs in proptest::collection::vec(-5i64..5, 6)) {
            cs[0] = if cs[0] % 2 == 0 { 1 } else { -1 };
            let s = us(&cs);
            let inv = s.invert().unwrap();
            prop_assert_eq!(&s * &inv, USeries::one(6));
        }
    }
}
