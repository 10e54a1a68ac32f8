//! Dense integer polynomials in one variable `q`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An integer polynomial in `q`, stored as a dense coefficient vector with
/// index `i` holding the coefficient of `q^i`.
///
/// The vector carries no trailing zeros; the zero polynomial is the empty
/// vector. This makes equality structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GPolynomial {
    coeffs: Vec<BigInt>,
}

impl GPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        GPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from coefficients (low degree first), trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        GPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(q - 1)^k`.
    pub fn q_minus_one_pow(k: usize) -> Self {
        let mut p = GPolynomial::one();
        let step = GPolynomial::from_ints(&[-1, 1]);
        for _ in 0..k {
            p = &p * &step;
        }
        p
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn coefficientwise_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &GPolynomial {
    type Output = GPolynomial;
    fn add(self, rhs: &GPolynomial) -> GPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        GPolynomial::from_coeffs(out)
    }
}

impl Sub for &GPolynomial {
    type Output = GPolynomial;
    fn sub(self, rhs: &GPolynomial) -> GPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        GPolynomial::from_coeffs(out)
    }
}

impl Mul for &GPolynomial {
    type Output = GPolynomial;
    fn mul(self, rhs: &GPolynomial) -> GPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return GPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        GPolynomial::from_coeffs(out)
    }
}

impl Neg for &GPolynomial {
    type Output = GPolynomial;
    fn neg(self) -> GPolynomial {
        GPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for GPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
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
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}", mag)?;
                }
                if i == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
