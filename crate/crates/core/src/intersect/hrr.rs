//! Chern classes `c_1..c_3` of the spinor bundle `S` on `Q^8`, solved from
//! Hirzebruch-Riemann-Roch against the Euler characteristics `chi(S(t))`
//! computed by Borel-Weil-Bott.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use super::chern::ChernPoly;
use super::quadric::QuadricClass;
use super::todd::{series_mul, todd_quadric_series};
use crate::arith::{factorial, rat, to_integer};
use crate::bwb::{euler_characteristic, Ambient, Descriptor, HomogBundle};
use crate::error::{Error, Result};
use crate::json::json_to_big;

const M: usize = 4;
const DIM: usize = 2 * M;
const RANK: i64 = 8;
const SAMPLES: std::ops::RangeInclusive<i64> = 0..=8;
const EXTRA_SAMPLES: [i64; 8] = [9, 10, 11, 12, -1, -2, -3, -4];

/// `c_i(S) = c_i h^i` for `i = 1, 2, 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinorChern {
    pub c1: BigInt,
    pub c2: BigInt,
    pub c3: BigInt,
}

impl SpinorChern {
    /// `1 + c_1 + c_2 + c_3` on `Q^8`.
    pub fn chern_poly(&self) -> Result<ChernPoly<QuadricClass>> {
        let mut classes = vec![QuadricClass::one(M)?];
        for (i, c) in [&self.c1, &self.c2, &self.c3].into_iter().enumerate() {
            classes.push(
                QuadricClass::h_power(M, i + 1)?.scale(&BigRational::from_integer(c.clone())),
            );
        }
        ChernPoly::new(classes)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let field = |name: &str| -> Result<BigInt> {
            let v = value.get(name).ok_or_else(|| {
                Error::InvalidInput(format!("spinor Chern file lacks field `{name}`"))
            })?;
            json_to_big(v)
        };
        if !value.is_object() {
            return Err(Error::InvalidInput(
                "spinor Chern file must hold an object".into(),
            ));
        }
        Ok(SpinorChern {
            c1: field("c1")?,
            c2: field("c2")?,
            c3: field("c3")?,
        })
    }
}

impl fmt::Display for SpinorChern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "c1 = {}h, c2 = {}h^2, c3 = {}h^3",
            self.c1, self.c2, self.c3
        )
    }
}

fn spinor_chi(t: i64) -> Result<BigInt> {
    let bundle = HomogBundle::irreducible(Ambient::even_quadric(M)?, Descriptor::spinor(M), t)?;
    euler_characteristic(&bundle)
}

/// Coefficients of the interpolating polynomial through `(x_i, y_i)`.
fn interpolate(points: &[(i64, BigInt)]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); points.len()];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = series_mul(&basis, &[rat(-xj), rat(1)], basis.len());
            denom *= rat(xi - xj);
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += b * &scale;
        }
    }
    out
}

fn evaluate(poly: &[BigRational], t: i64) -> BigRational {
    poly.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * rat(t) + c)
}

/// Solves for `c_1, c_2, c_3` of `S`.
///
/// `chi(S(t)) = sum_j t^j / j! * int ch(S) h^j td`, so the coefficient of
/// `t^{8-i}` determines `ch_i` once `ch_0..ch_{i-1}` are known.
pub fn spinor_chern_via_hrr() -> Result<SpinorChern> {
    let points: Vec<(i64, BigInt)> = SAMPLES
        .map(|t| spinor_chi(t).map(|c| (t, c)))
        .collect::<Result<_>>()?;
    let poly = interpolate(&points);
    for t in EXTRA_SAMPLES {
        let chi = BigRational::from_integer(spinor_chi(t)?);
        let predicted = evaluate(&poly, t);
        if chi != predicted {
            return Err(Error::InconsistentHrr(format!(
                "chi(S({t})) = {chi} but the interpolated polynomial gives {predicted}"
            )));
        }
    }
    if poly.len() > DIM + 1 && poly[DIM + 1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::InconsistentHrr(
            "chi(S(t)) has degree above 8".into(),
        ));
    }

    let td = todd_quadric_series(M)?;
    // ch[i] is the coefficient of h^i in ch(S)
    let mut ch: Vec<BigRational> = Vec::new();
    for i in 0..=3usize {
        let j = DIM - i;
        // coefficient of t^j = 2 / j! * sum_{a + b = i} ch_a td_b
        let target = poly[j].clone() * BigRational::from_integer(factorial(j as i64)) / rat(2);
        let known = (0..i).fold(BigRational::zero(), |acc, a| acc + &ch[a] * &td[i - a]);
        ch.push(target - known);
    }
    if ch[0] != rat(RANK) {
        return Err(Error::InconsistentHrr(format!(
            "rank from HRR is {}, expected {RANK}",
            ch[0]
        )));
    }
    let c1 = ch[1].clone();
    let c2 = (&c1 * &c1 - rat(2) * &ch[2]) / rat(2);
    let c3 = (rat(6) * &ch[3] - &c1 * &c1 * &c1 + rat(3) * &c1 * &c2) / rat(3);
    let result = SpinorChern {
        c1: to_integer(&c1, "c1(S)").map_err(|e| Error::InconsistentHrr(e.to_string()))?,
        c2: to_integer(&c2, "c2(S)").map_err(|e| Error::InconsistentHrr(e.to_string()))?,
        c3: to_integer(&c3, "c3(S)").map_err(|e| Error::InconsistentHrr(e.to_string()))?,
    };
    if result.c1 != BigInt::from(-4) {
        return Err(Error::InconsistentHrr(format!(
            "c1(S) = {}h, expected -4h",
            result.c1
        )));
    }
    Ok(result)
}

/// Compares an override file against the derived classes.
pub fn check_spinor_override(text: &str) -> Result<SpinorChern> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("spinor Chern file: {e}")))?;
    let given = SpinorChern::from_json(&value)?;
    let derived = spinor_chern_via_hrr()?;
    if given != derived {
        return Err(Error::Inconsistent(format!(
            "spinor Chern override ({given}) disagrees with HRR ({derived})"
        )));
    }
    Ok(derived)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_a_cubic() {
        let pts: Vec<(i64, BigInt)> = (0..4)
            .map(|t| (t, BigInt::from(t * t * t - 2 * t + 5)))
            .collect();
        let p = interpolate(&pts);
        assert_eq!(p, vec![rat(5), rat(-2), rat(0), rat(1)]);
    }

    #[test]
    fn spinor_classes() {
        let s = spinor_chern_via_hrr().unwrap();
        assert_eq!(s.c1, BigInt::from(-4));
        let c = s.chern_poly().unwrap();
        assert_eq!(c.c(1), QuadricClass::h_power(4, 1).unwrap().scale(&rat(-4)));
    }

    #[test]
    fn override_file() {
        let s = spinor_chern_via_hrr().unwrap();
        let good = format!(r#"{{"c1": {}, "c2": {}, "c3": {}}}"#, s.c1, s.c2, s.c3);
        assert_eq!(check_spinor_override(&good).unwrap(), s);
        let bad = format!(r#"{{"c1": -3, "c2": {}, "c3": {}}}"#, s.c2, s.c3);
        assert!(check_spinor_override(&bad).unwrap_err().is_inconsistency());
        assert!(matches!(
            check_spinor_override("{\"c1\": 1}"),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            check_spinor_override("nope"),
            Err(Error::InvalidInput(_))
        ));
    }
}
