//! Dense polynomials with `i64` coefficients.
//!
//! Every operation uses checked arithmetic and reports [`PolyError::Overflow`]
//! instead of wrapping.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("integer overflow in polynomial arithmetic")]
    Overflow,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("leading coefficient {divisor} does not divide {dividend} exactly")]
    NonIntegralQuotient { dividend: i64, divisor: i64 },
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, PolyError>;

/// Integer polynomial stored in ascending degree order.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

fn add_checked(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(PolyError::Overflow)
}

fn mul_checked(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(PolyError::Overflow)
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: i64, degree: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self { coeffs }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] -= 1;
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    /// `1 + x + ... + x^(n-1)`, i.e. `(x^n - 1) / (x - 1)`.
    pub fn geometric(n: usize) -> Self {
        Self::new(vec![1; n])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<i64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(1)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| add_checked(self.coeff(i), other.coeff(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn neg(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_neg().ok_or(PolyError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    pub fn scale(&self, factor: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| mul_checked(c, factor))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = add_checked(coeffs[i + j], mul_checked(a, b)?)?;
            }
        }
        Ok(Self::new(coeffs))
    }

    /// Long division over the integers, returning `(quotient, remainder)`.
    ///
    /// Each step divides by the leading coefficient of `divisor`, so a
    /// non-monic divisor fails with [`PolyError::NonIntegralQuotient`] as soon
    /// as a step is not integral.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading_coeff().ok_or(PolyError::DivisionByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; rem.len() - ddeg];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + ddeg];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(PolyError::NonIntegralQuotient {
                    dividend: top,
                    divisor: lead,
                });
            }
            let q = top / lead;
            quot[shift] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = rem[shift + j]
                    .checked_sub(mul_checked(q, d)?)
                    .ok_or(PolyError::Overflow)?;
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient `q` with `q * divisor == self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::InexactDivision)
        }
    }

    /// Reduction modulo `x^modulus - 1`: exponent `e` folds onto `e mod modulus`.
    ///
    /// # Panics
    ///
    /// If `modulus` is zero.
    pub fn reduce_mod_cyclic(&self, modulus: usize) -> Result<Self> {
        assert!(modulus >= 1, "cyclic modulus must be positive");
        if self.coeffs.len() <= modulus {
            return Ok(self.clone());
        }
        let mut folded = vec![0i64; modulus];
        for (e, &c) in self.coeffs.iter().enumerate() {
            folded[e % modulus] = add_checked(folded[e % modulus], c)?;
        }
        Ok(Self::new(folded))
    }

    /// Horner evaluation.
    pub fn eval_at(&self, a: i64) -> Result<i64> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(0i64, |acc, &c| add_checked(mul_checked(acc, a)?, c))
    }
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Self::new(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let (sign, abs) = if c < 0 { ("-", c.unsigned_abs()) } else { ("+", c as u64) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, abs) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, a) => write!(f, "{a}x")?,
                (e, 1) => write!(f, "x^{e}")?,
                (e, a) => write!(f, "{a}x^{e}")?,
            }
        }
        Ok(())
    }
}
