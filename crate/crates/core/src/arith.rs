//! Small exact-arithmetic helpers shared by the other modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient with the falling-factorial convention
/// `C(a, m) = a (a-1) ... (a-m+1) / m!`, valid for every integer `a`.
/// Returns zero for negative `m`.
pub fn binomial(a: &BigInt, m: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        num *= a - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn binom(a: i64, m: i64) -> BigInt {
    binomial(&BigInt::from(a), m)
}

/// `n!` for `n >= 0`.
pub fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Converts an exact rational to an integer, failing if it is not one.
pub fn to_integer(q: &BigRational, what: &str) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} = {q}")))
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.abs().gcd(&b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_top_binomials_follow_the_polynomial() {
        // C(-1, m) = (-1)^m
        assert_eq!(binom(-1, 3), BigInt::from(-1));
        assert_eq!(binom(-1, 4), BigInt::from(1));
        assert_eq!(binom(-3, 2), BigInt::from(6));
        assert_eq!(binom(2, 3), BigInt::zero());
        assert_eq!(binom(7, 0), BigInt::one());
        assert_eq!(binom(5, -1), BigInt::zero());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(7), BigInt::from(5040));
    }
}
