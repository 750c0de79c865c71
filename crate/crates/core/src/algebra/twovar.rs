//! Laurent polynomials in the two variables `x` and `h`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::render::{push_term, var_power};
use super::{IntPoly, LaurentPoly};

/// An element of `Z[x, x^-1, h, h^-1]`, stored sparsely as a map
/// `(x exponent, h exponent) -> coefficient` with no zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwoVarLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl TwoVarLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    /// The monomial `c * x^a * h^b`.
    pub fn monomial(c: BigInt, a: i64, b: i64) -> Self {
        let mut t = Self::zero();
        if !c.is_zero() {
            t.terms.insert((a, b), c);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms as `((x exp, h exp), coefficient)` in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    fn insert(&mut self, key: (i64, i64), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Multiply by the monomial `c * x^a * h^b`.
    pub fn mul_monomial(&self, c: &BigInt, a: i64, b: i64) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (&(i, j), v) in &self.terms {
            out.terms.insert((i + a, j + b), v * c);
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `x := 1`, collapsing to a Laurent polynomial in `h`.
    pub fn eval_x_one(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(_, b), c) in &self.terms {
            out = &out + &LaurentPoly::monomial(c.clone(), b);
        }
        out
    }
}

impl From<&LaurentPoly> for TwoVarLaurent {
    fn from(p: &LaurentPoly) -> Self {
        let mut out = TwoVarLaurent::zero();
        for (k, c) in p.terms() {
            out.terms.insert((0, k), c.clone());
        }
        out
    }
}

impl From<&IntPoly> for TwoVarLaurent {
    fn from(p: &IntPoly) -> Self {
        TwoVarLaurent::from(&LaurentPoly::from(p))
    }
}

impl Add for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn add(self, rhs: &TwoVarLaurent) -> TwoVarLaurent {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, c.clone());
        }
        out
    }
}

impl Sub for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn sub(self, rhs: &TwoVarLaurent) -> TwoVarLaurent {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, -c);
        }
        out
    }
}

impl Neg for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn neg(self) -> TwoVarLaurent {
        let mut out = TwoVarLaurent::zero();
        for (&k, c) in &self.terms {
            out.terms.insert(k, -c);
        }
        out
    }
}

impl Mul for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn mul(self, rhs: &TwoVarLaurent) -> TwoVarLaurent {
        let mut out = TwoVarLaurent::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.insert((i + k, j + l), a * b);
            }
        }
        out
    }
}

impl fmt::Display for TwoVarLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (&(a, b), c) in &self.terms {
            let var = format!("{}{}", var_power('x', a), var_power('h', b));
            push_term(&mut out, c, &var);
        }
        write!(f, "{out}")
    }
}
