//! Closed degree formulas for the rank strata of a linear system of
//! quadrics, and degrees of Grassmannians.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::schubert::{integrate_schubert, SchubertClass};
use crate::arith::{binom, factorial, to_integer};
use crate::error::{Error, Result};

const MAX_GRASSMANNIAN_DIM: usize = 24;

fn check_genus(g: i64) -> Result<()> {
    if g < 6 {
        return Err(Error::InvalidInput(format!(
            "genus must be at least 6, got {g}"
        )));
    }
    Ok(())
}

/// `prod_{k=0}^{2} C(2g-5, g-2k) / C(2g-5, 2k)`.
pub fn harris_tu_sigma_degree(g: i64) -> Result<BigInt> {
    check_genus(g)?;
    let n = 2 * g - 5;
    let product = (0..=2).fold(BigRational::one(), |acc, k| {
        acc * BigRational::new(binom(n, g - 2 * k), binom(n, 2 * k))
    });
    to_integer(&product, &format!("harris_tu_sigma_degree({g})"))
}

/// `(2g-9)! / (g-5)!`.
pub fn deg_y0(g: i64) -> Result<BigInt> {
    check_genus(g)?;
    Ok(factorial(2 * g - 9) / factorial(g - 5))
}

/// `12 (2g-8)! / ((g/2-2)! (g/2-1)! (g/2)! (g/2+1)!)`, for even `g`.
pub fn deg_y_top(g: i64) -> Result<BigInt> {
    check_genus(g)?;
    if g % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "deg_y_top needs even genus, got {g}"
        )));
    }
    let h = g / 2;
    let den = factorial(h - 2) * factorial(h - 1) * factorial(h) * factorial(h + 1);
    Ok(BigInt::from(12) * factorial(2 * g - 8) / den)
}

/// `int sigma_1^{k(n-k)}` over `Gr(k, n)`.
pub fn grassmannian_degree(k: usize, n: usize) -> Result<BigInt> {
    let sigma1 = SchubertClass::special(k, n, 1)?;
    let dim = sigma1.dim();
    if dim > MAX_GRASSMANNIAN_DIM {
        return Err(Error::InvalidInput(format!(
            "Gr({k},{n}) has dimension {dim}, above the supported {MAX_GRASSMANNIAN_DIM}"
        )));
    }
    Ok(integrate_schubert(&sigma1.pow(dim)))
}

/// Number of standard tableaux of the `k x (n-k)` rectangle.
pub fn hook_length_degree(k: usize, n: usize) -> BigInt {
    let cols = n - k;
    let hooks = (0..k)
        .flat_map(|r| (0..cols).map(move |c| (k - r) + (cols - c) - 1))
        .fold(BigInt::one(), |acc, h| acc * BigInt::from(h));
    factorial((k * cols) as i64) / hooks
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaDecomposition {
    pub genus: i64,
    pub total: BigInt,
    pub y0: BigInt,
    pub y_top: Option<BigInt>,
    pub residual: BigInt,
}

impl fmt::Display for SigmaDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma={} y0={}", self.total, self.y0)?;
        if let Some(top) = &self.y_top {
            write!(f, " y_top={top}")?;
        }
        write!(f, " residual={}", self.residual)
    }
}

pub fn sigma_decomposition(g: i64) -> Result<SigmaDecomposition> {
    let total = harris_tu_sigma_degree(g)?;
    let y0 = deg_y0(g)?;
    let y_top = if g % 2 == 0 {
        Some(deg_y_top(g)?)
    } else {
        None
    };
    let residual = &total - &y0 - y_top.clone().unwrap_or_default();
    if residual.is_negative() {
        return Err(Error::Inconsistent(format!(
            "genus {g}: sigma degree {total} is smaller than the known strata"
        )));
    }
    Ok(SigmaDecomposition {
        genus: g,
        total,
        y0,
        y_top,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn sigma_degrees() {
        assert_eq!(harris_tu_sigma_degree(6).unwrap(), b(7));
        assert_eq!(harris_tu_sigma_degree(7).unwrap(), b(84));
        assert_eq!(harris_tu_sigma_degree(8).unwrap(), b(1386));
        assert!(harris_tu_sigma_degree(5).is_err());
    }

    #[test]
    fn stratum_degrees() {
        assert_eq!(deg_y0(6).unwrap(), b(6));
        assert_eq!(deg_y0(7).unwrap(), b(60));
        assert_eq!(deg_y0(8).unwrap(), b(840));
        assert_eq!(deg_y_top(6).unwrap(), b(1));
        assert_eq!(deg_y_top(8).unwrap(), b(14));
        assert!(deg_y_top(7).is_err());
    }

    #[test]
    fn grassmannian_degrees() {
        assert_eq!(grassmannian_degree(2, 6).unwrap(), b(14));
        assert_eq!(grassmannian_degree(2, 4).unwrap(), b(2));
        assert_eq!(grassmannian_degree(1, 7).unwrap(), b(1));
        assert_eq!(hook_length_degree(2, 6), b(14));
        assert_eq!(hook_length_degree(3, 6), b(42));
        assert!(grassmannian_degree(5, 11).is_err());
    }

    #[test]
    fn decompositions() {
        assert_eq!(
            sigma_decomposition(6).unwrap().to_string(),
            "sigma=7 y0=6 y_top=1 residual=0"
        );
        assert_eq!(sigma_decomposition(7).unwrap().residual, b(24));
        assert_eq!(sigma_decomposition(8).unwrap().residual, b(532));
        assert_eq!(
            sigma_decomposition(7).unwrap().to_string(),
            "sigma=84 y0=60 residual=24"
        );
    }
}
