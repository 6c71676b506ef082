//! Borel-Weil-Bott cohomology of homogeneous bundles on Grassmannians and
//! even-dimensional quadrics.
//!
//! Conventions, pinned by the fixture tests at the bottom of this file:
//!
//! * On `Gr(k, n)` with `0 -> U -> V -> Q -> 0`, the bundle
//!   `Sigma^beta U^vee (x) Sigma^alpha Q^vee (t)` has `GL(n)` weight
//!   `(beta + t | alpha)`: the `k` coordinates of `U^vee` first, shifted by
//!   the twist since `O(1) = det U^vee`.
//! * On `Q^{2m} = SO(2m+2)/P`, a bundle is given by its Levi weight
//!   `(a | b_1, ..., b_m)` with `b` dominant for `D_m`; `O(1)` adds one to
//!   `a`. The dual spinor bundle is `(1/2 | 1/2, ..., 1/2, -1/2)`.
//!
//! A summand's cohomology is concentrated in the degree given by the length
//! of the straightening, with dimension the Weyl dimension of the dominant
//! representative.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{
    dotted_straighten, is_dominant, weyl_dimension, RootSystem, StraightenResult, WeightVector,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    /// `k`-dimensional subspaces of an `n`-dimensional space.
    Grassmannian { k: usize, n: usize },
    /// Smooth quadric of dimension `2m`.
    EvenQuadric { m: usize },
}

impl Ambient {
    pub fn grassmannian(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidInput(format!(
                "need 1 <= k < n, got Gr({k},{n})"
            )));
        }
        Ok(Ambient::Grassmannian { k, n })
    }

    pub fn even_quadric(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidInput(format!(
                "even quadric needs m >= 2, got {m}"
            )));
        }
        Ok(Ambient::EvenQuadric { m })
    }

    pub fn dim(&self) -> usize {
        match *self {
            Ambient::Grassmannian { k, n } => k * (n - k),
            Ambient::EvenQuadric { m } => 2 * m,
        }
    }

    pub fn root_system(&self) -> RootSystem {
        match *self {
            Ambient::Grassmannian { n, .. } => RootSystem::TypeA(n),
            Ambient::EvenQuadric { m } => RootSystem::TypeD(m + 1),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Ambient::Grassmannian { k, n } => write!(f, "Gr({k},{n})"),
            Ambient::EvenQuadric { m } => write!(f, "Q^{}", 2 * m),
        }
    }
}

/// Irreducible homogeneous bundle, before twisting.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Descriptor {
    /// `Sigma^quot_dual Q^vee (x) Sigma^sub_dual U^vee` on a Grassmannian.
    Grassmannian {
        quot_dual: Vec<i64>,
        sub_dual: Vec<i64>,
    },
    /// Levi weight `(a | b)` on an even quadric, doubled.
    Quadric { doubled: Vec<i64> },
}

impl Descriptor {
    pub fn trivial(ambient: Ambient) -> Self {
        match ambient {
            Ambient::Grassmannian { .. } => Descriptor::Grassmannian {
                quot_dual: vec![],
                sub_dual: vec![],
            },
            Ambient::EvenQuadric { m } => Descriptor::Quadric {
                doubled: vec![0; m + 1],
            },
        }
    }

    pub fn schur_quot_dual(pattern: &[i64]) -> Self {
        Descriptor::Grassmannian {
            quot_dual: pattern.to_vec(),
            sub_dual: vec![],
        }
    }

    pub fn schur_sub_dual(pattern: &[i64]) -> Self {
        Descriptor::Grassmannian {
            quot_dual: vec![],
            sub_dual: pattern.to_vec(),
        }
    }

    /// `S^vee` on `Q^{2m}`.
    pub fn spinor_dual(m: usize) -> Self {
        let mut doubled = vec![1; m + 1];
        doubled[m] = -1;
        Descriptor::Quadric { doubled }
    }

    /// The spinor bundle `S = S^vee(-1)`; for `m` even this is self-dual up to twist.
    pub fn spinor(m: usize) -> Self {
        let mut doubled = vec![1; m + 1];
        doubled[0] = -1;
        doubled[m] = -1;
        Descriptor::Quadric { doubled }
    }

    /// Levi weight given in ordinary (undoubled) integers.
    pub fn quadric_integral(entries: &[i64]) -> Self {
        Descriptor::Quadric {
            doubled: entries.iter().map(|x| 2 * x).collect(),
        }
    }
}

/// One summand `descriptor(twist)^{multiplicity}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub descriptor: Descriptor,
    pub twist: i64,
    pub multiplicity: u64,
}

/// Formal direct sum of twisted irreducible homogeneous bundles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogBundle {
    pub ambient: Ambient,
    pub summands: Vec<Summand>,
}

impl HomogBundle {
    pub fn zero(ambient: Ambient) -> Self {
        HomogBundle {
            ambient,
            summands: Vec::new(),
        }
    }

    /// A single irreducible summand, validated against the ambient.
    pub fn irreducible(ambient: Ambient, descriptor: Descriptor, twist: i64) -> Result<Self> {
        Self::zero(ambient).with(descriptor, twist, 1)
    }

    pub fn line(ambient: Ambient, twist: i64) -> Self {
        HomogBundle {
            ambient,
            summands: vec![Summand {
                descriptor: Descriptor::trivial(ambient),
                twist,
                multiplicity: 1,
            }],
        }
    }

    /// Adds `descriptor(twist)^{multiplicity}`.
    pub fn with(mut self, descriptor: Descriptor, twist: i64, multiplicity: u64) -> Result<Self> {
        validate_descriptor(self.ambient, &descriptor)?;
        if multiplicity > 0 {
            self.summands.push(Summand {
                descriptor,
                twist,
                multiplicity,
            });
        }
        Ok(self)
    }

    /// Direct sum.
    pub fn plus(mut self, other: &HomogBundle) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::InvalidInput(format!(
                "cannot add bundles on {} and {}",
                self.ambient, other.ambient
            )));
        }
        self.summands.extend(other.summands.iter().cloned());
        Ok(self)
    }

    /// Every summand twisted by `O(t)`.
    pub fn twisted(&self, t: i64) -> Self {
        HomogBundle {
            ambient: self.ambient,
            summands: self
                .summands
                .iter()
                .map(|s| Summand {
                    twist: s.twist + t,
                    ..s.clone()
                })
                .collect(),
        }
    }

    /// All multiplicities scaled by `k`.
    pub fn times(&self, k: u64) -> Self {
        HomogBundle {
            ambient: self.ambient,
            summands: self
                .summands
                .iter()
                .filter(|_| k > 0)
                .map(|s| Summand {
                    multiplicity: s.multiplicity * k,
                    ..s.clone()
                })
                .collect(),
        }
    }

    pub fn rank(&self) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for s in &self.summands {
            total += summand_rank(self.ambient, &s.descriptor)? * BigInt::from(s.multiplicity);
        }
        Ok(total)
    }
}

fn is_weakly_decreasing(v: &[i64]) -> bool {
    v.windows(2).all(|p| p[0] >= p[1])
}

fn validate_descriptor(ambient: Ambient, descriptor: &Descriptor) -> Result<()> {
    match (ambient, descriptor) {
        (
            Ambient::Grassmannian { k, n },
            Descriptor::Grassmannian {
                quot_dual,
                sub_dual,
            },
        ) => {
            if quot_dual.len() > n - k || sub_dual.len() > k {
                return Err(Error::InvalidInput(format!(
                    "pattern lengths ({}, {}) exceed bundle ranks ({}, {k})",
                    quot_dual.len(),
                    sub_dual.len(),
                    n - k
                )));
            }
            for p in [quot_dual, sub_dual] {
                if !is_weakly_decreasing(p) || p.iter().any(|&x| x < 0) {
                    return Err(Error::InvalidInput(format!("{p:?} is not a partition")));
                }
            }
            Ok(())
        }
        (Ambient::EvenQuadric { m }, Descriptor::Quadric { doubled }) => {
            if doubled.len() != m + 1 {
                return Err(Error::InvalidInput(format!(
                    "Q^{} weights have {} entries, got {}",
                    2 * m,
                    m + 1,
                    doubled.len()
                )));
            }
            let tail = WeightVector::from_doubled(RootSystem::TypeD(m), doubled[1..].to_vec())?;
            WeightVector::from_doubled(RootSystem::TypeD(m + 1), doubled.clone())?;
            if !is_dominant(&tail) {
                return Err(Error::InvalidInput(format!(
                    "Levi part {tail} is not dominant for D{m}"
                )));
            }
            Ok(())
        }
        _ => Err(Error::InvalidInput(format!(
            "descriptor {descriptor:?} does not live on {ambient}"
        ))),
    }
}

fn pad(p: &[i64], len: usize) -> Vec<i64> {
    let mut v = p.to_vec();
    v.resize(len, 0);
    v
}

/// Rank of the irreducible bundle: dimension of its fibre representation.
pub fn summand_rank(ambient: Ambient, descriptor: &Descriptor) -> Result<BigInt> {
    validate_descriptor(ambient, descriptor)?;
    match (ambient, descriptor) {
        (
            Ambient::Grassmannian { k, n },
            Descriptor::Grassmannian {
                quot_dual,
                sub_dual,
            },
        ) => {
            let q = WeightVector::from_integers(RootSystem::TypeA(n - k), &pad(quot_dual, n - k))?;
            let u = WeightVector::from_integers(RootSystem::TypeA(k), &pad(sub_dual, k))?;
            Ok(weyl_dimension(&q)? * weyl_dimension(&u)?)
        }
        (Ambient::EvenQuadric { m }, Descriptor::Quadric { doubled }) => weyl_dimension(
            &WeightVector::from_doubled(RootSystem::TypeD(m), doubled[1..].to_vec())?,
        ),
        _ => unreachable!("validated above"),
    }
}

/// Full-group weight whose dotted straightening computes the cohomology of
/// `descriptor(twist)`.
pub fn to_weight(ambient: Ambient, descriptor: &Descriptor, twist: i64) -> Result<WeightVector> {
    validate_descriptor(ambient, descriptor)?;
    match (ambient, descriptor) {
        (
            Ambient::Grassmannian { k, n },
            Descriptor::Grassmannian {
                quot_dual,
                sub_dual,
            },
        ) => {
            let mut w: Vec<i64> = pad(sub_dual, k).into_iter().map(|x| x + twist).collect();
            w.extend(pad(quot_dual, n - k));
            WeightVector::from_integers(RootSystem::TypeA(n), &w)
        }
        (Ambient::EvenQuadric { m }, Descriptor::Quadric { doubled }) => {
            let mut w = doubled.clone();
            w[0] += 2 * twist;
            WeightVector::from_doubled(RootSystem::TypeD(m + 1), w)
        }
        _ => unreachable!("validated above"),
    }
}

/// Dimensions of `H^i`, zero degrees omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub degrees: BTreeMap<usize, BigInt>,
}

impl CohomologyTable {
    pub fn get(&self, i: usize) -> BigInt {
        self.degrees.get(&i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    fn add_at(&mut self, i: usize, value: BigInt) {
        if value.is_zero() {
            return;
        }
        let entry = self.degrees.entry(i).or_default();
        *entry += value;
        if entry.is_zero() {
            self.degrees.remove(&i);
        }
    }

    /// Cell-wise sum.
    pub fn plus(&self, other: &CohomologyTable) -> CohomologyTable {
        let mut out = self.clone();
        for (&i, v) in &other.degrees {
            out.add_at(i, v.clone());
        }
        out
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.degrees
            .iter()
            .map(|(&i, v)| if i % 2 == 0 { v.clone() } else { -v })
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<serde_json::Value> = self
            .degrees
            .iter()
            .map(|(i, v)| serde_json::json!({ "degree": i, "dim": crate::json::big_to_json(v) }))
            .collect();
        serde_json::json!({ "cohomology": cells })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::InvalidInput(format!("malformed cohomology json: {what}"));
        let cells = value
            .get("cohomology")
            .and_then(|c| c.as_array())
            .ok_or_else(|| bad("missing `cohomology` array"))?;
        let mut out = CohomologyTable::default();
        for c in cells {
            let i = c
                .get("degree")
                .and_then(|d| d.as_u64())
                .ok_or_else(|| bad("degree"))?;
            let v = crate::json::json_to_big(c.get("dim").ok_or_else(|| bad("dim"))?)?;
            if v.is_negative() {
                return Err(bad("negative dimension"));
            }
            out.add_at(i as usize, v);
        }
        Ok(out)
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "all cohomology vanishes");
        }
        let parts: Vec<String> = self
            .degrees
            .iter()
            .map(|(i, v)| format!("h{i} = {v}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Cohomology of one irreducible summand: `(degree, dimension)` or `None`.
pub fn irreducible_cohomology(
    ambient: Ambient,
    descriptor: &Descriptor,
    twist: i64,
) -> Result<Option<(usize, BigInt)>> {
    let weight = to_weight(ambient, descriptor, twist)?;
    match dotted_straighten(&weight) {
        StraightenResult::Singular => Ok(None),
        StraightenResult::Regular { length, dominant } => {
            if length > ambient.dim() {
                return Err(Error::Inconsistent(format!(
                    "straightening length {length} exceeds dim {}",
                    ambient.dim()
                )));
            }
            Ok(Some((length, weyl_dimension(&dominant)?)))
        }
    }
}

pub fn cohomology(bundle: &HomogBundle) -> Result<CohomologyTable> {
    let mut table = CohomologyTable::default();
    for s in &bundle.summands {
        if let Some((deg, dim)) = irreducible_cohomology(bundle.ambient, &s.descriptor, s.twist)? {
            table.add_at(deg, dim * BigInt::from(s.multiplicity));
        }
    }
    Ok(table)
}

pub fn euler_characteristic(bundle: &HomogBundle) -> Result<BigInt> {
    Ok(cohomology(bundle)?.euler_characteristic())
}

pub fn global_sections_dim(bundle: &HomogBundle) -> Result<BigInt> {
    Ok(cohomology(bundle)?.get(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr26() -> Ambient {
        Ambient::grassmannian(2, 6).unwrap()
    }

    fn q8() -> Ambient {
        Ambient::even_quadric(4).unwrap()
    }

    fn table(entries: &[(usize, i64)]) -> CohomologyTable {
        CohomologyTable {
            degrees: entries.iter().map(|&(i, v)| (i, BigInt::from(v))).collect(),
        }
    }

    fn coh(ambient: Ambient, d: Descriptor, t: i64) -> CohomologyTable {
        cohomology(&HomogBundle::irreducible(ambient, d, t).unwrap()).unwrap()
    }

    #[test]
    fn fixture_battery() {
        assert_eq!(
            cohomology(&HomogBundle::line(gr26(), 1)).unwrap(),
            table(&[(0, 15)])
        );
        assert_eq!(coh(q8(), Descriptor::spinor_dual(4), 0), table(&[(0, 16)]));
        assert_eq!(
            coh(q8(), Descriptor::quadric_integral(&[1, 1, 1, 1, -1]), -5),
            table(&[(4, 1)])
        );
        assert_eq!(
            coh(q8(), Descriptor::quadric_integral(&[1, 1, 1, 0, 0]), -3),
            table(&[(2, 1)])
        );
        assert!(coh(gr26(), Descriptor::schur_quot_dual(&[2, 1, 1]), 1).is_zero());
        assert_eq!(
            coh(gr26(), Descriptor::schur_quot_dual(&[2, 2]), -2),
            table(&[(4, 1)])
        );
    }

    #[test]
    fn spinor_twists_vanish_in_the_middle() {
        for d in -12..=6 {
            let t = coh(q8(), Descriptor::spinor(4), d);
            for i in 1..8 {
                assert_eq!(t.get(i), BigInt::zero(), "H^{i}(S({d}))");
            }
            if d <= 0 {
                assert_eq!(t.get(0), BigInt::zero());
            }
        }
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(
            euler_characteristic(&HomogBundle::line(q8(), 1)).unwrap(),
            10.into()
        );
        assert_eq!(
            euler_characteristic(&HomogBundle::line(q8(), -1)).unwrap(),
            0.into()
        );
        let s_dual = HomogBundle::irreducible(q8(), Descriptor::spinor_dual(4), 0).unwrap();
        assert_eq!(euler_characteristic(&s_dual).unwrap(), 16.into());
    }

    #[test]
    fn global_sections() {
        let s1 = HomogBundle::zero(q8())
            .with(Descriptor::spinor(4), 1, 8)
            .unwrap();
        assert_eq!(global_sections_dim(&s1).unwrap(), 128.into());
        let m1 = HomogBundle::zero(gr26())
            .with(Descriptor::schur_quot_dual(&[1, 1]), 1, 6)
            .unwrap();
        assert_eq!(global_sections_dim(&m1).unwrap(), 90.into());
        assert_eq!(
            global_sections_dim(&HomogBundle::line(gr26(), 3)).unwrap(),
            490.into()
        );
    }

    #[test]
    fn serre_duality_on_the_quadric() {
        for t in -10..=2 {
            let a = cohomology(&HomogBundle::line(q8(), t)).unwrap();
            let b = cohomology(&HomogBundle::line(q8(), -8 - t)).unwrap();
            for i in 0..=8 {
                assert_eq!(a.get(i), b.get(8 - i), "t = {t}, i = {i}");
            }
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(
            summand_rank(q8(), &Descriptor::spinor(4)).unwrap(),
            8.into()
        );
        assert_eq!(
            summand_rank(q8(), &Descriptor::quadric_integral(&[1, 1, 1, 1, -1])).unwrap(),
            35.into()
        );
        assert_eq!(
            summand_rank(q8(), &Descriptor::quadric_integral(&[1, 1, 1, 0, 0])).unwrap(),
            28.into()
        );
        assert_eq!(
            summand_rank(gr26(), &Descriptor::schur_quot_dual(&[1, 1])).unwrap(),
            6.into()
        );
        assert_eq!(
            summand_rank(gr26(), &Descriptor::schur_quot_dual(&[2, 2])).unwrap(),
            20.into()
        );
        assert_eq!(
            summand_rank(gr26(), &Descriptor::schur_quot_dual(&[2, 1, 1])).unwrap(),
            15.into()
        );
    }

    #[test]
    fn invalid_descriptors() {
        assert!(HomogBundle::irreducible(gr26(), Descriptor::schur_quot_dual(&[1, 2]), 0).is_err());
        assert!(
            HomogBundle::irreducible(gr26(), Descriptor::schur_sub_dual(&[1, 1, 1]), 0).is_err()
        );
        assert!(
            HomogBundle::irreducible(q8(), Descriptor::quadric_integral(&[0, 0, 1, 0, 0]), 0)
                .is_err()
        );
        assert!(HomogBundle::irreducible(q8(), Descriptor::schur_quot_dual(&[1]), 0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = table(&[(0, 15), (4, 1)]);
        assert_eq!(CohomologyTable::from_json(&t.to_json()).unwrap(), t);
    }
}
