//! Polynomials in `h` over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::render::render_single_var;
use super::AlgebraError;

/// An element of `Z[h]`, stored densely: `coeffs[k]` is the coefficient of
/// `h^k`. Trailing zeros are trimmed; the zero polynomial is the empty
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from machine integers, ascending powers of h.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * h^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// The variable `h`.
    pub fn h() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Formal derivative with respect to `h`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Divide every coefficient by `d`, failing if any division is inexact.
    pub fn exact_div(&self, d: &BigInt) -> Result<Self, AlgebraError> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = num_integer_div_rem(c, d);
            if !r.is_zero() {
                return Err(AlgebraError::InexactDivision(format!("{c} / {d}")));
            }
            out.push(q);
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64, c.clone()))
            .collect();
        write!(f, "{}", render_single_var(&terms, 'h'))
    }
}

/// Coefficients `c_m` with `p(h) = sum c_m (h - eps)^m`, i.e. the Taylor
/// expansion of `p` around `h = eps`. Always exact over the integers.
pub fn taylor_shift(p: &IntPoly, eps: i64) -> Vec<BigInt> {
    // Repeated synthetic division of p by (h - eps): the remainders are the
    // expansion coefficients in ascending order.
    let mut work: Vec<BigInt> = p.coeffs().to_vec();
    let deg = work.len();
    let e = BigInt::from(eps);
    let mut out = Vec::with_capacity(deg.max(1));
    if deg == 0 {
        return vec![BigInt::zero()];
    }
    for m in 0..deg {
        // Divide work (degree deg-1-m) by (h - eps) in place.
        let mut carry = BigInt::zero();
        for k in (0..deg - m).rev() {
            let q = &work[k] + &carry * &e;
            carry = q.clone();
            work[k] = q;
        }
        // work[0] is now the remainder; work[1..] the quotient shifted down.
        out.push(work[0].clone());
        work.remove(0);
    }
    out.push(BigInt::zero());
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_normalized() {
        let p = IntPoly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPoly::from_i64(&[0, 0]).is_zero());
    }

    #[test]
    fn derivative_power_rule() {
        assert_eq!(
            IntPoly::from_i64(&[0, 0, 1]).derivative(),
            IntPoly::from_i64(&[0, 2])
        );
        assert_eq!(IntPoly::from_i64(&[5]).derivative(), IntPoly::zero());
    }

    #[test]
    fn taylor_shift_examples() {
        // 1 + h^2 around h = 1 and h = -1.
        let p = IntPoly::from_i64(&[1, 0, 1]);
        let at1: Vec<i64> = taylor_shift(&p, 1).iter().map(big_to_i64).collect();
        assert_eq!(at1, vec![2, 2, 1]);
        let atm1: Vec<i64> = taylor_shift(&p, -1).iter().map(big_to_i64).collect();
        assert_eq!(atm1, vec![2, -2, 1]);
        // Identity shift.
        let h = IntPoly::h();
        let at0: Vec<i64> = taylor_shift(&h, 0).iter().map(big_to_i64).collect();
        assert_eq!(at0, vec![0, 1]);
    }

    #[test]
    fn taylor_shift_reexpansion_roundtrip() {
        let p = IntPoly::from_i64(&[3, -1, 0, 7, 2]);
        for eps in [-2i64, -1, 0, 1, 3] {
            let cs = taylor_shift(&p, eps);
            // Rebuild sum c_m (h - eps)^m.
            let base = IntPoly::from_i64(&[-eps, 1]);
            let mut acc = IntPoly::zero();
            let mut pw = IntPoly::one();
            for c in &cs {
                acc = &acc + &(&pw * &IntPoly::constant(c.clone()));
                pw = &pw * &base;
            }
            assert_eq!(acc, p);
        }
    }

    #[test]
    fn display_format() {
        assert_eq!(IntPoly::from_i64(&[1, 0, 1]).to_string(), "1 + h^2");
        assert_eq!(IntPoly::from_i64(&[0, 2]).to_string(), "2h");
        assert_eq!(IntPoly::from_i64(&[1, 0, -1]).to_string(), "1 - h^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[0, -1]).to_string(), "-h");
    }

    fn big_to_i64(b: &BigInt) -> i64 {
        use num_traits::ToPrimitive;
        b.to_i64().unwrap()
    }
}
