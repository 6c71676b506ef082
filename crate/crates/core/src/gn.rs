//! Gulliksen-Negard resolutions of the Hilbert square inside its Mukai
//! model, and what their hypercohomology spectral sequence says about the
//! ideal sheaf.
//!
//! For a corank-2 degeneracy locus of `phi: F -> F^vee (delta)` with
//! `det F = O(delta)` the resolution reads
//!
//! ```text
//! 0 -> O(d + 2 delta) -> F(d + delta)^r -> Lambda F(d) + O(d + delta)^(r^2 - 1) -> F(d + delta + 1)^r -> I(d) -> 0
//! ```
//!
//! The terms sit in homological degrees `-3..=0`, so `E_1^{p,q} = H^q(F_{-p})`
//! converges to `H^{p+q}(I(d))`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::binom;
use crate::bwb::{
    cohomology, global_sections_dim, Ambient, CohomologyTable, Descriptor, HomogBundle,
};
use crate::error::{Error, Result};
use crate::hilbert::ideal_dimension;
use crate::report::{CheckResult, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GnCaseName {
    Genus7,
    Genus8,
}

impl GnCaseName {
    pub const ALL: [GnCaseName; 2] = [GnCaseName::Genus7, GnCaseName::Genus8];

    pub fn case(self) -> GnCase {
        match self {
            GnCaseName::Genus7 => GnCase::genus7(),
            GnCaseName::Genus8 => GnCase::genus8(),
        }
    }
}

impl FromStr for GnCaseName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "genus7" => Ok(GnCaseName::Genus7),
            "genus8" => Ok(GnCaseName::Genus8),
            _ => Err(Error::InvalidInput(format!(
                "unknown case `{s}`, expected genus7 or genus8"
            ))),
        }
    }
}

impl fmt::Display for GnCaseName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GnCaseName::Genus7 => "genus7",
            GnCaseName::Genus8 => "genus8",
        })
    }
}

/// A piece of the two-step filtration of `Lambda F`; contributes
/// `descriptor(d + offset)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaPiece {
    pub descriptor: Descriptor,
    pub offset: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnCase {
    pub name: GnCaseName,
    pub genus: i64,
    pub ambient: Ambient,
    /// Half the square of the polarization on the Hilbert square.
    pub square_half: i64,
    pub r: u64,
    pub f: Descriptor,
    /// `det F = O(detf_twist)`.
    pub detf_twist: i64,
    /// `0 -> sub -> Lambda F -> quot -> 0`.
    pub lambda_sub: LambdaPiece,
    pub lambda_quot: LambdaPiece,
}

impl GnCase {
    /// Spinor bundle on the eight-dimensional quadric.
    pub fn genus7() -> Self {
        GnCase {
            name: GnCaseName::Genus7,
            genus: 7,
            ambient: Ambient::EvenQuadric { m: 4 },
            square_half: 2,
            r: 8,
            f: Descriptor::spinor(4),
            detf_twist: -4,
            lambda_sub: LambdaPiece {
                descriptor: Descriptor::quadric_integral(&[1, 1, 1, 1, -1]),
                offset: -5,
            },
            lambda_quot: LambdaPiece {
                descriptor: Descriptor::quadric_integral(&[1, 1, 1, 0, 0]),
                offset: -5,
            },
        }
    }

    /// `M = wedge^2 Q^vee` on `Gr(2, 6)`.
    pub fn genus8() -> Self {
        GnCase {
            name: GnCaseName::Genus8,
            genus: 8,
            ambient: Ambient::Grassmannian { k: 2, n: 6 },
            square_half: 3,
            r: 6,
            f: Descriptor::schur_quot_dual(&[1, 1]),
            detf_twist: -3,
            lambda_sub: LambdaPiece {
                descriptor: Descriptor::schur_quot_dual(&[2, 2]),
                offset: -2,
            },
            lambda_quot: LambdaPiece {
                descriptor: Descriptor::schur_quot_dual(&[2, 1, 1]),
                offset: -2,
            },
        }
    }

    pub fn lambda_sub(&self, d: i64) -> HomogBundle {
        self.piece(&self.lambda_sub, d)
    }

    pub fn lambda_quot(&self, d: i64) -> HomogBundle {
        self.piece(&self.lambda_quot, d)
    }

    fn piece(&self, p: &LambdaPiece, d: i64) -> HomogBundle {
        HomogBundle::irreducible(self.ambient, p.descriptor.clone(), d + p.offset)
            .expect("case data is valid")
    }

    /// Rank of `Lambda F` from the Weyl dimensions of both pieces.
    pub fn lambda_rank(&self) -> Result<BigInt> {
        Ok(self.lambda_sub(0).rank()? + self.lambda_quot(0).rank()?)
    }

    /// `r^2 - 1`.
    pub fn trivial_multiplicity(&self) -> u64 {
        self.r * self.r - 1
    }
}

/// `[F_3, F_2, F_1, F_0]` twisted by `O(d)`, with `Lambda F(d)` expanded into its pieces.
pub fn gn_terms(case: &GnCase, d: i64) -> Result<[HomogBundle; 4]> {
    let delta = case.detf_twist;
    let a = case.ambient;
    let f3 = HomogBundle::line(a, d + 2 * delta);
    let f2 = HomogBundle::zero(a).with(case.f.clone(), d + delta, case.r)?;
    let f1 = case.lambda_sub(d).plus(&case.lambda_quot(d))?.with(
        Descriptor::trivial(a),
        d + delta,
        case.trivial_multiplicity(),
    )?;
    let f0 = HomogBundle::zero(a).with(case.f.clone(), d + delta + 1, case.r)?;
    Ok([f3, f2, f1, f0])
}

/// `E_1^{p,q} = H^q(F_{-p})`, zero entries omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct E1Page {
    pub entries: BTreeMap<(i64, usize), BigInt>,
    /// Cells where the two pieces of `Lambda F` could interact.
    pub indeterminate: BTreeSet<(i64, usize)>,
}

impl E1Page {
    pub fn get(&self, p: i64, q: usize) -> BigInt {
        self.entries.get(&(p, q)).cloned().unwrap_or_default()
    }

    fn is_nonzero(&self, p: i64, q: i64) -> bool {
        q >= 0 && self.entries.contains_key(&(p, q as usize))
    }

    fn add(&mut self, p: i64, table: &CohomologyTable) {
        for (&q, v) in &table.degrees {
            *self.entries.entry((p, q)).or_default() += v;
        }
        self.entries.retain(|_, v| !v.is_zero());
    }

    /// `sum (-1)^(p+q) e_{p,q}`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(&(p, q), v)| {
                if (p + q as i64).rem_euclid(2) == 0 {
                    v.clone()
                } else {
                    -v
                }
            })
            .sum()
    }
}

/// Connecting maps `H^q(quot) -> H^{q+1}(sub)` can only be nonzero when both
/// sides are.
fn lambda_adjacency(sub: &CohomologyTable, quot: &CohomologyTable) -> Vec<usize> {
    quot.degrees
        .keys()
        .filter(|&&q| sub.degrees.contains_key(&(q + 1)))
        .copied()
        .collect()
}

pub fn e1_page(case: &GnCase, d: i64) -> Result<E1Page> {
    let terms = gn_terms(case, d)?;
    let mut page = E1Page::default();
    for (idx, term) in terms.iter().enumerate() {
        let p = idx as i64 - 3;
        page.add(p, &cohomology(term)?);
    }
    let sub = cohomology(&case.lambda_sub(d))?;
    let quot = cohomology(&case.lambda_quot(d))?;
    for q in lambda_adjacency(&sub, &quot) {
        page.indeterminate.insert((-1, q));
        page.indeterminate.insert((-1, q + 1));
    }
    Ok(page)
}

/// `h^i(I(d))` for every `i` with a contribution; `h^0` is always present.
pub fn ideal_cohomology(case: &GnCase, d: i64) -> Result<BTreeMap<i64, BigInt>> {
    let page = e1_page(case, d)?;
    if let Some(&(p, q)) = page.indeterminate.iter().next() {
        return Err(Error::NotDegenerate(format!(
            "{} d={d}: pieces of Lambda F meet at E1({p},{q})",
            case.name
        )));
    }
    let mut out = BTreeMap::new();
    let h0: BigInt = page
        .entries
        .iter()
        .filter(|((_, q), _)| *q == 0)
        .map(|(&(p, _), v)| if p % 2 == 0 { v.clone() } else { -v })
        .sum();
    if h0.is_negative() {
        return Err(Error::Inconsistent(format!(
            "{} d={d}: alternating sum of sections is {h0}",
            case.name
        )));
    }
    out.insert(0, h0);

    for (&(p, q), v) in page.entries.iter().filter(|((_, q), _)| *q > 0) {
        let q = q as i64;
        for r in 1..=(q + 4) {
            let target = page.is_nonzero(p + r, q - r + 1);
            let source = page.is_nonzero(p - r, q + r - 1);
            if target || source {
                return Err(Error::NotDegenerate(format!(
                    "{} d={d}: E1({p},{q}) has a possibly nonzero d_{r}",
                    case.name
                )));
            }
        }
        let total = p + q;
        if total < 0 {
            return Err(Error::Inconsistent(format!(
                "{} d={d}: E1({p},{q}) survives in negative total degree",
                case.name
            )));
        }
        *out.entry(total).or_insert_with(BigInt::zero) += v;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    pub case: GnCaseName,
    /// Quadrics of the projective space cutting out the ambient.
    pub ambient_quadrics: BigInt,
    /// `h^0(I(e))` of the ideal inside the ambient, up to the generator degree.
    pub ideal_sections: BTreeMap<i64, BigInt>,
    /// Degree of the generators of the ideal inside the ambient.
    pub generator_degree: i64,
    pub generators: BigInt,
    /// The distinguished generator and the cokernel `H^0(L) (x) W`.
    pub extension: (BigInt, BigInt),
}

/// Dimension of the projective space the ambient is embedded in by `O(1)`.
fn linear_span(ambient: Ambient) -> Result<i64> {
    let sections = global_sections_dim(&HomogBundle::line(ambient, 1))?;
    i64::try_from(sections - 1).map_err(|_| Error::InvalidInput(format!("{ambient} is too large")))
}

/// `h^0(P^N, O(e))` for the span of the ambient.
fn projective_sections(case: &GnCase, e: i64) -> Result<BigInt> {
    Ok(binom(linear_span(case.ambient)? + e, e))
}

/// Generator counts. Surjectivity of the multiplication maps above the
/// generator degree is taken from the irreducibility of the section modules
/// and not re-checked here.
pub fn generator_report(case: &GnCase) -> Result<GeneratorReport> {
    let a = case.ambient;
    let ambient_quadrics =
        projective_sections(case, 2)? - global_sections_dim(&HomogBundle::line(a, 2))?;
    let generator_degree = -case.detf_twist;
    let mut ideal_sections = BTreeMap::new();
    for e in 2..=generator_degree {
        let h = ideal_cohomology(case, e)?;
        ideal_sections.insert(e, h[&0].clone());
    }
    let generators = ideal_sections[&generator_degree].clone();
    for (e, v) in &ideal_sections {
        if *e < generator_degree && !v.is_zero() {
            return Err(Error::Inconsistent(format!(
                "{}: {v} equations in degree {e} below the generator degree",
                case.name
            )));
        }
    }
    let h0_l = BigInt::from(case.genus + 1);
    let cokernel = h0_l * BigInt::from(case.r);
    let distinguished = &generators - &cokernel;
    Ok(GeneratorReport {
        case: case.name,
        ambient_quadrics,
        ideal_sections,
        generator_degree,
        generators,
        extension: (distinguished, cokernel),
    })
}

/// The degree-`e` ideal in projective space, reassembled from the ambient's
/// own equations and the generators found above.
pub fn cross_check_ideal(case: &GnCase) -> Result<ValidationReport> {
    let report = generator_report(case)?;
    cross_check_ideal_with(case, &report.generators)
}

/// As [`cross_check_ideal`], with the generator count supplied by the caller.
pub fn cross_check_ideal_with(case: &GnCase, generators: &BigInt) -> Result<ValidationReport> {
    let e = -case.detf_twist;
    let from_ambient =
        projective_sections(case, e)? - global_sections_dim(&HomogBundle::line(case.ambient, e))?;
    let want = ideal_dimension(case.square_half, e)?;
    let got = &from_ambient + generators;
    let mut report = ValidationReport::default();
    report.push(CheckResult::new(
        format!("{} ideal in degree {e}", case.name),
        got == want,
        format!("{from_ambient} + {generators} = {got}, dim I_{e} = {want}"),
    ));
    Ok(report)
}
