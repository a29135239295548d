//! Exact rationals with power-of-two denominators.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `numerator / 2^exponent`, kept canonical: the numerator is odd or the
/// exponent is zero (and zero is `0 / 2^0`). Closed under addition,
/// subtraction and multiplication; ordering is exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: BigInt, exponent: u32) -> Self {
        let mut d = Dyadic {
            numerator,
            exponent,
        };
        d.canonicalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic {
            numerator: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic::from_int(BigInt::one())
    }

    pub fn one_half() -> Self {
        Dyadic::new(BigInt::one(), 1)
    }

    pub fn from_int<T: Into<BigInt>>(value: T) -> Self {
        Dyadic {
            numerator: value.into(),
            exponent: 0,
        }
    }

    /// `2^{-k}`.
    pub fn two_pow_neg(k: u32) -> Self {
        Dyadic {
            numerator: BigInt::one(),
            exponent: k,
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    /// Log2 of the canonical denominator.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn denominator(&self) -> BigInt {
        BigInt::one() << self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    pub fn pow(&self, k: u32) -> Self {
        // Canonical form is preserved: powers of an odd numerator stay odd.
        if k == 0 {
            return Dyadic::one();
        }
        Dyadic::new(self.numerator.pow(k), self.exponent * k)
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return;
        }
        while self.exponent > 0 && self.numerator.is_even() {
            self.numerator >>= 1;
            self.exponent -= 1;
        }
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exp = self.exponent.max(rhs.exponent);
        let a = &self.numerator << (exp - self.exponent);
        let b = &rhs.numerator << (exp - rhs.exponent);
        Dyadic::new(a + b, exp)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &-rhs
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            numerator: -&self.numerator,
            exponent: self.exponent,
        }
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.numerator * &rhs.numerator, self.exponent + rhs.exponent)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exponent.max(other.exponent);
        let a = &self.numerator << (exp - self.exponent);
        let b = &other.numerator << (exp - other.exponent);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator())
        }
    }
}

/// Accepts `p`, `p/q` with `q` a power of two, and `p/2^k`.
impl FromStr for Dyadic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            None => (s, None),
            Some((n, d)) => (n, Some(d)),
        };
        let numerator =
            BigInt::from_str(num_str).map_err(|_| format!("invalid numerator {num_str:?}"))?;
        let exponent = match den_str {
            None => 0,
            Some(d) => {
                if let Some(k) = d.strip_prefix("2^") {
                    k.parse::<u32>()
                        .map_err(|_| format!("invalid denominator exponent {k:?}"))?
                } else {
                    let den =
                        BigInt::from_str(d).map_err(|_| format!("invalid denominator {d:?}"))?;
                    if den.is_zero() || den.is_negative() {
                        return Err(format!("denominator must be a positive power of two, got {den}"));
                    }
                    let bits = den.bits() - 1;
                    if den != BigInt::one() << bits {
                        return Err(format!("denominator must be a power of two, got {den}"));
                    }
                    u32::try_from(bits).map_err(|_| "denominator too large".to_string())?
                }
            }
        };
        Ok(Dyadic::new(numerator, exponent))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(Dyadic::new(BigInt::from(4), 3), d("1/2"));
        assert_eq!(Dyadic::new(BigInt::from(0), 7), Dyadic::zero());
        assert_eq!(d("6/8"), d("3/4"));
    }

    #[test]
    fn arithmetic_and_order() {
        assert_eq!(&d("3/4") + &d("1/2"), d("5/4"));
        assert_eq!(&(&d("1") - &d("1/4")) - &d("1/4"), d("1/2"));
        assert_eq!(&d("3/4") * &d("1/2"), d("3/8"));
        assert_eq!(d("1/2").pow(3), d("1/8"));
        assert_eq!(d("-2").pow(0), Dyadic::one());
        assert!(d("5/8") < d("3/4"));
        assert!(d("-1/2") < Dyadic::zero());
        assert!(&d("3/4") + &d("1/2") >= Dyadic::one());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(d("1/2^3"), d("1/8"));
        assert_eq!(d("-5/8"), Dyadic::new(BigInt::from(-5), 3));
        assert_eq!(d("2"), Dyadic::from_int(2));
        assert!("1/3".parse::<Dyadic>().is_err());
        assert!("1/0".parse::<Dyadic>().is_err());
        assert!("x".parse::<Dyadic>().is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["0", "1", "-3", "1/2", "5/8", "-11/1024"] {
            assert_eq!(d(s).to_string(), s);
        }
    }
}
