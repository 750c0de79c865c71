//! Laurent polynomials in `h` over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::render::render_single_var;
use super::{AlgebraError, IntPoly};

/// An element of `Z[h, h^-1]`. `coeffs[i]` is the coefficient of
/// `h^(offset + i)`; the first and last stored coefficients are nonzero
/// unless the polynomial is zero (empty sequence, offset 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { offset, coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        LaurentPoly {
            offset: 0,
            coeffs: vec![],
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The monomial `c * h^k`, any integer `k`.
    pub fn monomial(c: BigInt, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            offset: k,
            coeffs: vec![c],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.offset == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient, or `None` if zero.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        let i = k - self.offset;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.offset + i as i64, c))
    }

    /// True when the polynomial is `c * h^k` with `c` in `{1, -1}`, i.e. a
    /// unit of the Laurent ring.
    pub fn unit_monomial(&self) -> Option<(BigInt, i64)> {
        if self.coeffs.len() == 1 && self.coeffs[0].magnitude().is_one() {
            Some((self.coeffs[0].clone(), self.offset))
        } else {
            None
        }
    }

    /// Formal derivative with respect to `h`: `h^k` maps to `k h^(k-1)`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            if k != 0 {
                out = &out + &Self::monomial(c * BigInt::from(k), k - 1);
            }
        }
        out
    }

    /// Multiply by the monomial `c * h^k`.
    pub fn mul_monomial(&self, c: &BigInt, k: i64) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self::new(self.offset + k, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divide every coefficient by `d`, failing on a nonzero remainder.
    pub fn exact_div(&self, d: &BigInt) -> Result<Self, AlgebraError> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = (c / d, c % d);
            if !r.is_zero() {
                return Err(AlgebraError::InexactDivision(format!("{c} / {d}")));
            }
            out.push(q);
        }
        Ok(Self::new(self.offset, out))
    }

    /// Reinterpret as an ordinary polynomial; `None` if any negative power
    /// of `h` survives.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.offset < 0 {
            return None;
        }
        let mut coeffs = vec![BigInt::zero(); self.offset as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Some(IntPoly::from_coeffs(coeffs))
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

impl From<&IntPoly> for LaurentPoly {
    fn from(p: &IntPoly) -> Self {
        LaurentPoly::new(0, p.coeffs().to_vec())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let coeffs = (lo..=hi).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::new(self.offset, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
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
        LaurentPoly::new(self.offset + rhs.offset, coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, BigInt)> = self.terms().map(|(k, c)| (k, c.clone())).collect();
        write!(f, "{}", render_single_var(&terms, 'h'))
    }
}
