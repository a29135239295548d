//! Exact binomial coefficients with the out-of-range-is-zero convention.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)` with `C(a, b) = 0` whenever `b < 0` or `b > a`.
pub fn binomial(a: usize, b: isize) -> BigInt {
    if b < 0 || b as usize > a {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(a), BigInt::from(b))
}

/// The row `C(a, 0), C(a, 1), …, C(a, upto)`.
pub fn binomial_row(a: usize, upto: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(upto + 1);
    let mut value = BigInt::one();
    row.push(value.clone());
    for k in 1..=upto {
        if k > a {
            row.push(BigInt::zero());
            continue;
        }
        value = value * BigInt::from(a - k + 1) / BigInt::from(k);
        row.push(value.clone());
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_matches_pointwise() {
        for a in 0..=12 {
            let row = binomial_row(a, a + 2);
            for (k, c) in row.iter().enumerate() {
                assert_eq!(*c, binomial(a, k as isize), "C({a},{k})");
            }
        }
    }

    #[test]
    fn out_of_range_is_zero() {
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn central_value() {
        // C(30, 15)
        assert_eq!(binomial(30, 15), BigInt::from(155_117_520u64));
    }
}
