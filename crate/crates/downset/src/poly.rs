//! Univariate polynomials with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::dyadic::Dyadic;

/// A polynomial in one variable over the integers; index is the degree,
/// trailing zero coefficients are trimmed, the zero polynomial is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::from_coeffs(vec![BigInt::from(1)])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_dyadic(&self, t: &Dyadic) -> Dyadic {
        let mut acc = Dyadic::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + &Dyadic::from_int(c.clone());
        }
        acc
    }

    /// `(1 - t)^k`, expanded exactly.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let row = crate::binom::binomial_row(k, k);
        let coeffs = row
            .into_iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c } else { -c })
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
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
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

/// Ascending-degree form, e.g. `1-2t^2+t^3`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let abs = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = abs == BigInt::from(1);
            match deg {
                0 => write!(f, "{abs}")?,
                1 => {
                    if unit {
                        write!(f, "t")?;
                    } else {
                        write!(f, "{abs}t")?;
                    }
                }
                _ => {
                    if unit {
                        write!(f, "t^{deg}")?;
                    } else {
                        write!(f, "{abs}t^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(poly(&[0, 0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let p = poly(&[1, 1]); // 1 + t
        let sq = &p * &p;
        assert_eq!(sq, poly(&[1, 2, 1]));
        assert_eq!(&sq - &p, poly(&[0, 1, 1]));
        assert_eq!(&p + &-&p, IntPolynomial::zero());
    }

    #[test]
    fn one_minus_t_powers() {
        assert_eq!(IntPolynomial::one_minus_t_pow(0), poly(&[1]));
        assert_eq!(IntPolynomial::one_minus_t_pow(1), poly(&[1, -1]));
        assert_eq!(IntPolynomial::one_minus_t_pow(4), poly(&[1, -4, 6, -4, 1]));
    }

    #[test]
    fn evaluation() {
        let k = poly(&[1, 0, -2, 1]); // 1 - 2t^2 + t^3
        assert_eq!(k.eval_int(&BigInt::from(1)), BigInt::from(0));
        assert_eq!(k.eval_int(&BigInt::from(-1)), BigInt::from(-2));
        let half = Dyadic::one_half();
        // 1 - 1/2 + 1/8 = 5/8
        assert_eq!(k.eval_dyadic(&half), Dyadic::new(BigInt::from(5), 3));
    }

    #[test]
    fn display_ascending() {
        assert_eq!(poly(&[1, 4, 4, 1]).to_string(), "1+4t+4t^2+t^3");
        assert_eq!(poly(&[1, 0, -2, 1]).to_string(), "1-2t^2+t^3");
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[0, -1]).to_string(), "-t");
        assert_eq!(poly(&[-3, 0, 2]).to_string(), "-3+2t^2");
    }
}
