//! Truncated power series over the rationals and the Todd class of an even
//! quadric `Q^{2m}`, a polynomial in the hyperplane class `h`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::chern::ChernPoly;
use super::quadric::QuadricClass;
use crate::arith::{factorial, rat};
use crate::error::{Error, Result};

pub const MAX_TODD_M: usize = 6;

/// Coefficients `s[0..=top]` of a power series in one variable.
pub type Series = Vec<BigRational>;

pub fn series_mul(a: &[BigRational], b: &[BigRational], top: usize) -> Series {
    (0..=top)
        .map(|k| {
            (0..=k).fold(BigRational::zero(), |acc, i| {
                let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
                let y = b.get(k - i).cloned().unwrap_or_else(BigRational::zero);
                acc + x * y
            })
        })
        .collect()
}

/// `1 / a`; needs `a[0] != 0`.
pub fn series_inverse(a: &[BigRational], top: usize) -> Series {
    let mut s = vec![BigRational::one() / a[0].clone()];
    for k in 1..=top {
        let acc = (1..=k).fold(BigRational::zero(), |acc, i| {
            acc + a.get(i).cloned().unwrap_or_else(BigRational::zero) * s[k - i].clone()
        });
        s.push(-acc / a[0].clone());
    }
    s
}

pub fn series_pow(a: &[BigRational], e: usize, top: usize) -> Series {
    let mut out = vec![BigRational::one()];
    for _ in 0..e {
        out = series_mul(&out, a, top);
    }
    out.resize(top + 1, BigRational::zero());
    out
}

/// `x / (1 - e^{-c x})` up to degree `top`, divided by `c`.
fn todd_line(c: i64, top: usize) -> Series {
    // (1 - e^{-cx}) / (cx) = sum_k (-c)^k x^k / (k+1)!
    let denom: Series = (0..=top)
        .map(|k| {
            let sign_pow = (-c).pow(k as u32);
            BigRational::new(sign_pow.into(), factorial(k as i64 + 1))
        })
        .collect();
    series_inverse(&denom, top)
}

/// Coefficients of `h^0..h^{2m}` in `td(Q^{2m}) = td(O(1))^{2m+2} / td(O(2))`.
pub fn todd_quadric_series(m: usize) -> Result<Series> {
    if m == 0 || m > MAX_TODD_M {
        return Err(Error::InvalidInput(format!(
            "todd class implemented for 1 <= m <= {MAX_TODD_M}, got {m}"
        )));
    }
    let top = 2 * m;
    let ambient = series_pow(&todd_line(1, top), 2 * m + 2, top);
    let normal = todd_line(2, top);
    Ok(series_mul(&ambient, &series_inverse(&normal, top), top))
}

/// The Todd class as a class in the quadric ring.
pub fn todd_quadric(m: usize) -> Result<ChernPoly<QuadricClass>> {
    let series = todd_quadric_series(m)?;
    let classes = series
        .iter()
        .enumerate()
        .map(|(i, c)| QuadricClass::h_power(m, i).map(|h| h.scale(c)))
        .collect::<Result<Vec<_>>>()?;
    ChernPoly::new(classes)
}

/// `int_{Q^{2m}} p(h)` for a polynomial in `h`.
pub fn integrate_h_series(m: usize, p: &[BigRational]) -> BigRational {
    p.get(2 * m).cloned().unwrap_or_else(BigRational::zero) * rat(2)
}

/// `chi(O(t))` on `Q^{2m}` by Hirzebruch-Riemann-Roch.
pub fn chi_line_bundle(m: usize, t: i64) -> Result<BigRational> {
    let td = todd_quadric_series(m)?;
    let top = 2 * m;
    let exp: Series = (0..=top)
        .map(|k| {
            BigRational::new(
                num_bigint::BigInt::from(t).pow(k as u32),
                factorial(k as i64),
            )
        })
        .collect();
    Ok(integrate_h_series(m, &series_mul(&exp, &td, top)))
}
