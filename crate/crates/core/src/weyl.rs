//! Weyl-group combinatorics for the root systems `A_{n-1}` (on `GL(n)`
//! weights) and `D_n`: dominance, the dotted action, and Weyl's dimension
//! formula.
//!
//! Weights are stored doubled so that spin weights stay integral.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::to_integer;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootSystem {
    /// `GL(n)` weights, root system `A_{n-1}`.
    TypeA(usize),
    /// `SO(2n)` weights, root system `D_n`.
    TypeD(usize),
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        match *self {
            RootSystem::TypeA(n) | RootSystem::TypeD(n) => n,
        }
    }
}

/// A weight in the standard `e_i` coordinates, stored as `2 * entry`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    system: RootSystem,
    doubled: Vec<i64>,
}

impl WeightVector {
    /// Builds a weight from doubled coordinates.
    pub fn from_doubled(system: RootSystem, doubled: Vec<i64>) -> Result<Self> {
        if doubled.len() != system.rank() {
            return Err(Error::InvalidInput(format!(
                "{system:?} needs {} entries, got {}",
                system.rank(),
                doubled.len()
            )));
        }
        let parity = doubled.first().map(|x| x.rem_euclid(2));
        if doubled.iter().any(|x| Some(x.rem_euclid(2)) != parity) {
            return Err(Error::InvalidInput(
                "entries must be all integral or all half-integral".into(),
            ));
        }
        if matches!(system, RootSystem::TypeD(n) if n < 2) {
            return Err(Error::InvalidInput("type D needs rank >= 2".into()));
        }
        if matches!(system, RootSystem::TypeA(_)) && parity == Some(1) {
            return Err(Error::InvalidInput("GL(n) weights must be integral".into()));
        }
        Ok(WeightVector { system, doubled })
    }

    pub fn from_integers(system: RootSystem, entries: &[i64]) -> Result<Self> {
        Self::from_doubled(system, entries.iter().map(|x| 2 * x).collect())
    }

    pub fn zero(system: RootSystem) -> Self {
        WeightVector {
            system,
            doubled: vec![0; system.rank()],
        }
    }

    pub fn system(&self) -> RootSystem {
        self.system
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&x| x == 0)
    }

    fn add(&self, other: &WeightVector) -> WeightVector {
        debug_assert_eq!(self.system, other.system);
        WeightVector {
            system: self.system,
            doubled: self
                .doubled
                .iter()
                .zip(&other.doubled)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub(&self, other: &WeightVector) -> WeightVector {
        debug_assert_eq!(self.system, other.system);
        WeightVector {
            system: self.system,
            doubled: self
                .doubled
                .iter()
                .zip(&other.doubled)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .doubled
            .iter()
            .map(|&x| {
                if x % 2 == 0 {
                    (x / 2).to_string()
                } else {
                    format!("{x}/2")
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses one coordinate: an integer or a half-integer written `k/2`.
/// Returns the doubled value.
pub fn parse_half_integer(s: &str) -> Result<i64> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not an integer or half-integer: `{s}`"));
    match s.split_once('/') {
        Some((num, "2")) => num.trim().parse::<i64>().map_err(|_| bad()),
        Some(_) => Err(bad()),
        None => s.parse::<i64>().map(|x| 2 * x).map_err(|_| bad()),
    }
}

/// Parses a comma-separated list of (half-)integers into doubled values.
pub fn parse_doubled_list(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_half_integer).collect()
}

impl FromStr for RootSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unknown root system `{s}`"));
        let (kind, n) = s.split_at(1);
        let n: usize = n.parse().map_err(|_| bad())?;
        match kind {
            "A" | "a" => Ok(RootSystem::TypeA(n)),
            "D" | "d" => Ok(RootSystem::TypeD(n)),
            _ => Err(bad()),
        }
    }
}

/// Half-sum of positive roots, in the usual normalization `(n-1, ..., 1, 0)`.
pub fn rho(system: RootSystem) -> WeightVector {
    let n = system.rank() as i64;
    WeightVector {
        system,
        doubled: (0..n).map(|i| 2 * (n - 1 - i)).collect(),
    }
}

pub fn is_dominant(w: &WeightVector) -> bool {
    let v = &w.doubled;
    let decreasing = v.windows(2).all(|p| p[0] >= p[1]);
    match w.system {
        RootSystem::TypeA(_) => decreasing,
        RootSystem::TypeD(n) => {
            if n < 2 {
                return true;
            }
            v[..n - 1].windows(2).all(|p| p[0] >= p[1]) && v[n - 2] >= v[n - 1].abs()
        }
    }
}

/// Outcome of straightening a weight under the dotted action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StraightenResult {
    /// `lambda + rho` lies on a wall; all cohomology vanishes.
    Singular,
    /// `w . lambda` is dominant for a unique `w` of the given length.
    Regular {
        length: usize,
        dominant: WeightVector,
    },
}

fn is_singular(v: &[i64], system: RootSystem) -> bool {
    let key: Vec<i64> = match system {
        RootSystem::TypeA(_) => v.to_vec(),
        RootSystem::TypeD(_) => v.iter().map(|x| x.abs()).collect(),
    };
    let mut sorted = key;
    sorted.sort_unstable();
    sorted.windows(2).any(|p| p[0] == p[1])
}

/// Moves `lambda` into the dominant chamber under `w . lambda = w(lambda + rho) - rho`.
///
/// Simple reflections are applied one at a time whenever the pairing with
/// the corresponding simple root is negative; each application lowers the
/// length by exactly one, so the number of steps is the length of `w`.
pub fn dotted_straighten(lambda: &WeightVector) -> StraightenResult {
    let system = lambda.system;
    let r = rho(system);
    let mut v = lambda.add(&r).doubled;
    if is_singular(&v, system) {
        return StraightenResult::Singular;
    }
    let n = v.len();
    let mut length = 0usize;
    loop {
        let mut moved = false;
        for i in 0..n.saturating_sub(1) {
            if v[i] < v[i + 1] {
                v.swap(i, i + 1);
                length += 1;
                moved = true;
            }
        }
        if let RootSystem::TypeD(_) = system {
            // simple root e_{n-1} + e_n
            if n >= 2 && v[n - 2] + v[n - 1] < 0 {
                let (a, b) = (v[n - 2], v[n - 1]);
                v[n - 2] = -b;
                v[n - 1] = -a;
                length += 1;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let dominant = WeightVector { system, doubled: v }.sub(&r);
    StraightenResult::Regular { length, dominant }
}

/// Dimension of the irreducible representation with dominant highest weight `mu`.
pub fn weyl_dimension(mu: &WeightVector) -> Result<BigInt> {
    if !is_dominant(mu) {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let n = mu.doubled.len();
    let shifted = mu.add(&rho(mu.system)).doubled;
    let base = rho(mu.system).doubled;
    let mut prod = BigRational::one();
    for i in 0..n {
        for j in i + 1..n {
            let (num, den) = match mu.system {
                RootSystem::TypeA(_) => (shifted[i] - shifted[j], base[i] - base[j]),
                RootSystem::TypeD(_) => (
                    shifted[i] * shifted[i] - shifted[j] * shifted[j],
                    base[i] * base[i] - base[j] * base[j],
                ),
            };
            prod *= BigRational::new(BigInt::from(num), BigInt::from(den));
        }
    }
    to_integer(&prod, "Weyl dimension")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(entries: &[i64]) -> WeightVector {
        WeightVector::from_doubled(RootSystem::TypeD(entries.len()), entries.to_vec()).unwrap()
    }

    fn a(entries: &[i64]) -> WeightVector {
        WeightVector::from_integers(RootSystem::TypeA(entries.len()), entries).unwrap()
    }

    #[test]
    fn rho_vectors() {
        assert_eq!(rho(RootSystem::TypeD(5)).doubled(), &[8, 6, 4, 2, 0]);
        assert_eq!(rho(RootSystem::TypeA(6)).doubled(), &[10, 8, 6, 4, 2, 0]);
        assert_eq!(rho(RootSystem::TypeD(2)).doubled(), &[2, 0]);
    }

    #[test]
    fn dominance() {
        assert!(is_dominant(&d(&[2, 2, 2, 0, 0])));
        assert!(is_dominant(&d(&[1, 1, 1, 1, -1])));
        assert!(!is_dominant(&a(&[0, 1, 0])));
        assert!(!is_dominant(&d(&[2, 2, 0, 0, -2])));
    }

    #[test]
    fn straightening_examples() {
        // E_{2 alpha_4}(-5) on the eight-dimensional quadric
        let r = dotted_straighten(&d(&[-8, 2, 2, 2, -2]));
        assert_eq!(
            r,
            StraightenResult::Regular {
                length: 4,
                dominant: WeightVector::zero(RootSystem::TypeD(5))
            }
        );
        // E_{alpha_3}(-3)
        let r = dotted_straighten(&d(&[-4, 2, 2, 0, 0]));
        assert_eq!(
            r,
            StraightenResult::Regular {
                length: 2,
                dominant: WeightVector::zero(RootSystem::TypeD(5))
            }
        );
        // lambda + rho = (3,3,2,1,0)
        assert_eq!(
            dotted_straighten(&d(&[-2, 0, 0, 0, 0])),
            StraightenResult::Singular
        );
    }

    #[test]
    fn dominant_inputs_are_fixed() {
        let w = d(&[1, 1, 1, 1, -1]);
        assert_eq!(
            dotted_straighten(&w),
            StraightenResult::Regular {
                length: 0,
                dominant: w
            }
        );
    }

    #[test]
    fn dimensions() {
        assert_eq!(weyl_dimension(&d(&[1, 1, 1, 1, -1])).unwrap(), 16.into());
        assert_eq!(weyl_dimension(&a(&[3, 3, 0, 0, 0, 0])).unwrap(), 490.into());
        assert_eq!(weyl_dimension(&a(&[1, 1, 0, 0, 0, 0])).unwrap(), 15.into());
        // D4 fibres of the pieces of Lambda S
        assert_eq!(weyl_dimension(&d(&[2, 2, 2, -2])).unwrap(), 35.into());
        assert_eq!(weyl_dimension(&d(&[2, 2, 0, 0])).unwrap(), 28.into());
        assert_eq!(weyl_dimension(&d(&[2, 0, 0, 0, 0])).unwrap(), 10.into());
        for n in 1..7 {
            assert_eq!(
                weyl_dimension(&WeightVector::zero(RootSystem::TypeA(n))).unwrap(),
                1.into()
            );
            assert_eq!(
                weyl_dimension(&WeightVector::zero(RootSystem::TypeD(n.max(2)))).unwrap(),
                1.into()
            );
        }
        assert!(matches!(
            weyl_dimension(&a(&[0, 1])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_doubled_list("1/2,-1/2,3").unwrap(), vec![1, -1, 6]);
        assert!(parse_half_integer("1/3").is_err());
        assert!(WeightVector::from_doubled(RootSystem::TypeD(2), vec![1, 2]).is_err());
        assert_eq!("D5".parse::<RootSystem>().unwrap(), RootSystem::TypeD(5));
    }
}
