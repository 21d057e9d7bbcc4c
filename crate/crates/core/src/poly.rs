//! Dense univariate polynomials with exact `BigInt` coefficients.
//!
//! A polynomial carries a variable tag so that rook polynomials in `t`,
//! recurrence coefficients in `n`, and generating functions in `x` cannot be
//! mixed by accident: the checked operations refuse mismatched tags and the
//! operator forms panic on them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Variable tag: `t` for rook polynomials, `n` for recurrence coefficients,
/// `x` for generating functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    T,
    N,
    X,
}

impl Var {
    pub fn letter(self) -> char {
        match self {
            Var::T => 't',
            Var::N => 'n',
            Var::X => 'x',
        }
    }
}

/// A polynomial in one variable with integer coefficients, stored densely in
/// ascending order of degree with no trailing zeros (the zero polynomial has
/// no coefficients at all).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    var: Var,
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Build a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn new(var: Var, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { var, coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        IntPoly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, BigInt::one())
    }

    pub fn constant(var: Var, c: BigInt) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * v^k` in the variable `v` of the tag.
    pub fn monomial(var: Var, k: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `v^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VarMismatch(self.var.letter(), other.var.letter()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        Ok(Self::new(self.var, coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.clone().neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self::new(self.var, coeffs))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact evaluation at a rational point (Horner).
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact evaluation at an integer point (Horner).
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Greatest common divisor of the coefficients (nonnegative; zero for the
    /// zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Render with an explicit variable letter (used when the display
    /// convention differs from the stored tag).
    pub fn to_string_with(&self, letter: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let unit = mag.is_one();
            if k == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !unit {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push(letter);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    /// Ascending powers with explicit `*` and `^`: `1 + 3*t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(self.var.letter()))
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            var: self.var,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! ref_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                self.$checked(rhs).expect("polynomial variable mismatch")
            }
        }
        impl $trait<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

ref_binop!(Add, add, try_add);
ref_binop!(Sub, sub, try_sub);
ref_binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(Var::T, coeffs)
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[1, 2]).degree(), Some(1));
    }

    #[test]
    fn display_follows_the_output_convention() {
        assert_eq!(p(&[1, 3, 1]).to_string(), "1 + 3*t + t^2");
        assert_eq!(p(&[0, 0, -1]).to_string(), "-t^2");
        assert_eq!(p(&[1, -2, 0, 5]).to_string(), "1 - 2*t + 5*t^3");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-7]).to_string(), "-7");
        assert_eq!(p(&[0, 1]).to_string(), "t");
        assert_eq!(IntPoly::from_ints(Var::N, &[2, 1]).to_string(), "2 + n");
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = IntPoly::from_ints(Var::T, &[1]);
        let b = IntPoly::from_ints(Var::N, &[1]);
        assert_eq!(a.try_add(&b), Err(Error::VarMismatch('t', 'n')));
        assert_eq!(a.try_mul(&b), Err(Error::VarMismatch('t', 'n')));
    }

    #[test]
    fn eval_of_the_worked_rook_polynomial_at_one_sums_coefficients() {
        let r = p(&[1, 14, 63, 105, 56, 6]);
        let one = BigRational::from_integer(BigInt::from(1));
        assert_eq!(
            r.eval_rational(&one),
            BigRational::from_integer(BigInt::from(245))
        );
        assert_eq!(r.eval_int(&BigInt::from(1)), BigInt::from(245));
    }

    #[test]
    fn content_is_the_coefficient_gcd() {
        assert_eq!(p(&[6, -9, 12]).content(), BigInt::from(3));
        assert_eq!(p(&[]).content(), BigInt::from(0));
    }

    proptest! {
        #[test]
        fn mul_distributes_over_add(
            a in proptest::collection::vec(-50i64..50, 0..6),
            b in proptest::collection::vec(-50i64..50, 0..6),
            c in proptest::collection::vec(-50i64..50, 0..6),
        ) {
            let (a, b, c) = (p(&a), p(&b), p(&c));
            let lhs = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
            let rhs = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eval_is_a_ring_homomorphism(
            a in proptest::collection::vec(-50i64..50, 0..6),
            b in proptest::collection::vec(-50i64..50, 0..6),
            num in -20i64..20,
            den in 1i64..10,
        ) {
            let (a, b) = (p(&a), p(&b));
            let x = BigRational::new(BigInt::from(num), BigInt::from(den));
            let sum = a.try_add(&b).unwrap().eval_rational(&x);
            prop_assert_eq!(sum, a.eval_rational(&x) + b.eval_rational(&x));
            let prod = a.try_mul(&b).unwrap().eval_rational(&x);
            prop_assert_eq!(prod, a.eval_rational(&x) * b.eval_rational(&x));
        }
    }
}
