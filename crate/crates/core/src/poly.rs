//! Exact integer polynomial arithmetic and closed-form counting formulas.
//!
//! [`IntPolynomial`] stores arbitrary-precision integer coefficients indexed
//! by exponent, in canonical form (no trailing zero coefficients; the zero
//! polynomial has an empty coefficient list). All operations are exact.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors from polynomial-level counting operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// An argument was outside the operation's domain.
    InvalidArgument(&'static str),
    /// An identity the implementation relies on failed; this signals a bug,
    /// not bad input.
    Inconsistent(&'static str),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
            PolyError::Inconsistent(what) => write!(f, "internal inconsistency: {what}"),
        }
    }
}

/// A univariate polynomial with exact integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The representation is kept
/// canonical: the highest stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from coefficients in ascending exponent order,
    /// trimming trailing zeros.
    pub fn from_coeffs<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)))
    }

    /// `coeff * x^exp`.
    pub fn monomial(coeff: BigInt, exp: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = coeff;
        IntPolynomial { coeffs }
    }

    /// Coefficients in ascending exponent order (canonical, possibly empty).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient of `x^k` (zero beyond the stored degree).
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

    /// Exact evaluation at an integer point (Horner).
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact polynomial composition `self(inner(x))` (Horner).
    pub fn compose(&self, inner: &IntPolynomial) -> IntPolynomial {
        let mut acc = IntPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &IntPolynomial::from_coeffs([c.clone()]);
        }
        acc
    }

    /// Small integer power by repeated multiplication.
    pub fn pow(&self, exp: u32) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by `x`, returning `None` when the constant term is nonzero.
    pub fn div_x(&self) -> Option<IntPolynomial> {
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        if !self.coeffs[0].is_zero() {
            return None;
        }
        Some(IntPolynomial {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
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
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The polynomial `x(x+1)(x+2)...(x+n-2)`, an `n-1`-factor rising factorial
/// starting at `x`; for `n = 1` the empty product 1.
///
/// Its coefficient of `x^k` counts the decreasing trees on `n` vertices in
/// which the top vertex has `k` children, so evaluating at 1 gives `(n-1)!`.
pub fn rising_factorial(n: u32) -> Result<IntPolynomial, PolyError> {
    if n < 1 {
        return Err(PolyError::InvalidArgument("rising_factorial requires n >= 1"));
    }
    let mut acc = IntPolynomial::one();
    for shift in 0..n - 1 {
        let factor = IntPolynomial::from_coeffs([BigInt::from(shift), BigInt::one()]);
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// Builds the generating polynomial of a vector of counts: entry `i`
/// becomes the coefficient of `x^i`. Entries must be nonnegative.
pub fn poly_from_counts(entries: &[BigInt]) -> Result<IntPolynomial, PolyError> {
    if entries.iter().any(Signed::is_negative) {
        return Err(PolyError::InvalidArgument(
            "count vector entries must be nonnegative",
        ));
    }
    Ok(IntPolynomial::from_coeffs(entries.iter().cloned()))
}

/// The number of bounded regions of the rank-`n` arrangement
/// `x_j - x_i = 1` (`1 <= i < j <= n`), by the closed binomial formula
/// `(1/2^n) * sum_j C(n,j) (j-1)^(n-1)`.
///
/// The sum is carried out in exact rationals and the result is asserted to
/// be an integer; a fractional outcome is an internal error, never a valid
/// answer.
pub fn linial_bounded_regions(n: u32) -> Result<BigInt, PolyError> {
    if n < 1 {
        return Err(PolyError::InvalidArgument(
            "linial_bounded_regions requires n >= 1",
        ));
    }
    let mut sum = BigInt::zero();
    for j in 0..=u64::from(n) {
        let base = BigInt::from(j) - BigInt::one();
        let term = binomial(u64::from(n), j) * pow_bigint(&base, n - 1);
        sum += term;
    }
    let ratio = BigRational::new(sum, pow_bigint(&BigInt::from(2), n));
    if !ratio.is_integer() {
        return Err(PolyError::Inconsistent(
            "bounded-region formula did not produce an integer",
        ));
    }
    Ok(ratio.to_integer())
}

/// `base^exp` with the convention `0^0 = 1`.
pub fn pow_bigint(base: &BigInt, exp: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}
