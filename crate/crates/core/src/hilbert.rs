//! Riemann-Roch polynomial and Hilbert functions of polarized fourfolds of
//! K3^[2]-type.
//!
//! A polarization of square `2d` embeds the fourfold in `P^n` with
//! `n = C(d+3, 2) - 1`. Ideal dimensions assume projective normality; the
//! formulas here do not check that hypothesis and may go negative when it
//! fails.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{binom, binomial};
use crate::error::{Error, Result};

/// A polarized fourfold, recorded by `d = q(H)/2` and its embedding dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizedFourfold {
    pub d: i64,
    pub n: i64,
}

impl PolarizedFourfold {
    pub fn new(d: i64) -> Result<Self> {
        Ok(PolarizedFourfold {
            d,
            n: embedding_dimension(d)?,
        })
    }

    pub fn codim(&self) -> i64 {
        self.n - 4
    }
}

/// `RR(q) = C(q/2 + m + 1, m)` for K3^[m]-type; `q` must be even.
pub fn rr_polynomial(m: i64, q: i64) -> Result<BigInt> {
    if q % 2 != 0 {
        return Err(Error::OddSquare(q.to_string()));
    }
    if m < 1 {
        return Err(Error::InvalidInput(format!("m must be positive, got {m}")));
    }
    Ok(binom(q / 2 + m + 1, m))
}

/// `h^0(X, H^e)`: `1` for `e = 0`, `C(d e^2 + 3, 2)` otherwise.
pub fn h0_power(d: i64, e: i64) -> BigInt {
    if e == 0 {
        BigInt::one()
    } else {
        let de2 = BigInt::from(d) * BigInt::from(e) * BigInt::from(e);
        binomial(&(de2 + 3), 2)
    }
}

pub fn embedding_dimension(d: i64) -> Result<i64> {
    if d < 1 {
        return Err(Error::InvalidInput(format!("d must be >= 1, got {d}")));
    }
    Ok((d + 3) * (d + 2) / 2 - 1)
}

/// `dim I_e = C(n + e, e) - h^0(H^e)`.
pub fn ideal_dimension(d: i64, e: i64) -> Result<BigInt> {
    if e < 1 {
        return Err(Error::InvalidInput(format!("degree must be >= 1, got {e}")));
    }
    let n = embedding_dimension(d)?;
    Ok(binom(n + e, e) - h0_power(d, e))
}

/// Degree of the embedded fourfold, read off as the fourth finite difference
/// of `e -> h^0(H^e)` over `e = 1..=5`.
pub fn degree_from_hilbert(d: i64) -> Result<BigInt> {
    embedding_dimension(d)?;
    let mut values: Vec<BigInt> = (1..=5).map(|e| h0_power(d, e)).collect();
    for _ in 0..4 {
        values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(values.remove(0))
}

/// `h^0(S^[2], L_2 - 2 delta) = C(g - 2, 2)`, checked against the
/// Riemann-Roch polynomial at square `2g - 10`.
pub fn quadric_section_count(g: i64) -> Result<BigInt> {
    if g < 6 {
        return Err(Error::InvalidInput(format!("needs g >= 6, got {g}")));
    }
    let direct = binom(g - 2, 2);
    let rr = rr_polynomial(2, 2 * g - 10)?;
    if direct != rr {
        return Err(Error::Inconsistent(format!(
            "C(g-2,2) = {direct} but RR(2g-10) = {rr}"
        )));
    }
    Ok(direct)
}

/// Deformation-theoretic dimensions for the genus-7 Hilbert square in `P^9`
/// and in the quadric `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Genus7DeformationDims {
    pub h0_tp: i64,
    pub h1_tp: i64,
    pub h0_n_xp: i64,
    pub h1_n_xp: i64,
    pub h0_tq: i64,
    pub h1_tq: i64,
    pub h0_n_xq: i64,
    pub h1_n_xq: i64,
}

/// `h^1(T_X) = b_2 - 2` for K3^[2]-type. Standard, not derived here.
pub const K3_2_DEFORMATIONS: i64 = 21;

/// The fixed table of first-order deformation dimensions, after checking
/// the identities it must satisfy.
pub fn genus7_deformation_dims() -> Result<Genus7DeformationDims> {
    let dims = Genus7DeformationDims {
        h0_tp: 99,
        h1_tp: 1,
        h0_n_xp: 119,
        h1_n_xp: 0,
        h0_tq: 45,
        h1_tq: 2,
        h0_n_xq: 64,
        h1_n_xq: 0,
    };
    let n = embedding_dimension(2)?;
    let checks = [
        ("h0(T_P|X) = (n+1)^2 - 1", dims.h0_tp, (n + 1) * (n + 1) - 1),
        (
            "h0(N_X/P) = h0(T_P|X) + h1(T_X) - h1(T_P|X)",
            dims.h0_n_xp,
            dims.h0_tp + K3_2_DEFORMATIONS - dims.h1_tp,
        ),
        ("h0(N_X/Q) = h0(L) dim W", dims.h0_n_xq, 8 * 8),
    ];
    for (what, got, want) in checks {
        if got != want {
            return Err(Error::Inconsistent(format!("{what}: {got} != {want}")));
        }
    }
    Ok(dims)
}
