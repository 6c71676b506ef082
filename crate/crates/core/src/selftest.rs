//! The acceptance battery: every numbered criterion, evaluated with computed
//! and expected values side by side.

use std::collections::{HashSet, VecDeque};
use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::arith::binom;
use crate::betti::{expected_betti, fixture_table, validate_table, CellStatus, Fixture};
use crate::bwb::{
    cohomology, global_sections_dim, Ambient, CohomologyTable, Descriptor, HomogBundle,
};
use crate::error::Result;
use crate::gn::{cross_check_ideal, generator_report, ideal_cohomology, GnCase, GnCaseName};
use crate::hilbert::{degree_from_hilbert, ideal_dimension};
use crate::intersect::{
    check_spinor_override, deg_y0, deg_y_top, degeneracy_degree, first_degeneracy_class,
    grassmannian_degree, harris_tu_sigma_degree, sigma_decomposition, spinor_chern_via_hrr,
    QuadricClass, RingClass, SchubertClass,
};
use crate::lattice::{
    inequality_catalog, mukai_square, mukai_to_chern, relative_grassmannian_dim, GenusContext,
    MukaiVector,
};
use crate::weyl::{dotted_straighten, RootSystem, StraightenResult, WeightVector};

pub const WEYL_SAMPLES: usize = 120;
const WEYL_SEED: u64 = 0x005e_edd4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criterion {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Default)]
pub struct SelftestOptions {
    /// Contents of a spinor Chern override file.
    pub spinor_override: Option<String>,
}

#[derive(Default)]
struct Battery {
    expected: Vec<String>,
    got: Vec<String>,
    pass: bool,
}

impl Battery {
    fn new() -> Self {
        Battery {
            pass: true,
            ..Default::default()
        }
    }

    fn check<E: Display, G: Display + PartialEq<E>>(
        &mut self,
        label: &str,
        expected: E,
        got: Result<G>,
    ) {
        self.expected.push(format!("{label}={expected}"));
        match got {
            Ok(g) => {
                self.pass &= g == expected;
                self.got.push(format!("{label}={g}"));
            }
            Err(e) => {
                self.pass = false;
                self.got.push(format!("{label}: {e}"));
            }
        }
    }

    fn truth(&mut self, label: &str, got: Result<bool>) {
        self.check(label, true, got);
    }

    fn finish(self, name: &str) -> Criterion {
        Criterion {
            name: name.to_string(),
            expected: self.expected.join("; "),
            got: self.got.join("; "),
            pass: self.pass,
        }
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn criterion_1() -> Criterion {
    let mut b = Battery::new();
    for (d, e, want) in [(2, 3, 10), (2, 4, 120), (3, 2, 15), (3, 3, 245), (2, 2, 0)] {
        b.check(
            &format!("ideal_dimension({d},{e})"),
            big(want),
            ideal_dimension(d, e),
        );
    }
    b.finish("1 hilbert/ideal dimensions")
}

fn higher_vanishing(case: &GnCase, from: i64) -> Result<bool> {
    for d in from..=10 {
        let h = ideal_cohomology(case, d)?;
        if h.iter().any(|(&i, v)| i >= 1 && !v.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn criterion_2() -> Criterion {
    let mut b = Battery::new();
    let g7 = GnCase::genus7();
    let g8 = GnCase::genus8();
    match generator_report(&g7) {
        Ok(r) => {
            b.check("genus7 cubics", big(0), Ok(r.ideal_sections[&3].clone()));
            b.check("genus7 quartics", big(65), Ok(r.generators));
        }
        Err(e) => b.check::<i64, i64>("genus7 generators", 0, Err(e)),
    }
    b.check(
        "genus7 h1(I(2))",
        big(1),
        ideal_cohomology(&g7, 2).map(|h| h.get(&1).cloned().unwrap_or_default()),
    );
    match generator_report(&g8) {
        Ok(r) => {
            b.check("genus8 quadrics", big(0), Ok(r.ideal_sections[&2].clone()));
            b.check("genus8 cubics", big(55), Ok(r.generators));
        }
        Err(e) => b.check::<i64, i64>("genus8 generators", 0, Err(e)),
    }
    b.truth(
        "genus7 h^{i>=1}(I(d))=0 for 3<=d<=10",
        higher_vanishing(&g7, 3),
    );
    b.truth(
        "genus8 h^{i>=1}(I(d))=0 for 2<=d<=10",
        higher_vanishing(&g8, 2),
    );
    b.finish("2 generator counts via GN")
}

fn criterion_3() -> Criterion {
    let mut b = Battery::new();
    for case in [GnCase::genus7(), GnCase::genus8()] {
        match cross_check_ideal(&case) {
            Ok(r) => {
                let detail = r
                    .checks
                    .iter()
                    .map(|c| c.detail.clone())
                    .collect::<Vec<_>>()
                    .join(", ");
                b.expected.push(format!("{} identity holds", case.name));
                b.got.push(detail);
                b.pass &= r.passed();
            }
            Err(e) => b.check::<i64, i64>(&case.name.to_string(), 0, Err(e)),
        }
    }
    let weyl_cubics =
        Ambient::grassmannian(2, 6).and_then(|a| global_sections_dim(&HomogBundle::line(a, 3)));
    b.check("h0(Gr(2,6),O(3))", big(490), weyl_cubics.clone());
    b.check(
        "C(17,3) - h0(O(3))",
        big(190),
        weyl_cubics.map(|w| binom(17, 3) - w),
    );
    b.finish("3 cross-module ideal identities")
}

fn table(entries: &[(usize, i64)]) -> CohomologyTable {
    CohomologyTable {
        degrees: entries.iter().map(|&(i, v)| (i, big(v))).collect(),
    }
}

fn coh(ambient: Result<Ambient>, d: Descriptor, twist: i64) -> Result<CohomologyTable> {
    cohomology(&HomogBundle::irreducible(ambient?, d, twist)?)
}

fn criterion_4() -> Criterion {
    let mut b = Battery::new();
    let gr = || Ambient::grassmannian(2, 6);
    let q8 = || Ambient::even_quadric(4);
    b.check(
        "H(Gr(2,6),O(1))",
        table(&[(0, 15)]),
        gr().and_then(|a| cohomology(&HomogBundle::line(a, 1))),
    );
    b.check(
        "H(Q8,S^v)",
        table(&[(0, 16)]),
        coh(q8(), Descriptor::spinor_dual(4), 0),
    );
    b.check(
        "H(Q8,E_2a4(-5))",
        table(&[(4, 1)]),
        coh(q8(), Descriptor::quadric_integral(&[1, 1, 1, 1, -1]), -5),
    );
    b.check(
        "H(Q8,E_a3(-3))",
        table(&[(2, 1)]),
        coh(q8(), Descriptor::quadric_integral(&[1, 1, 1, 0, 0]), -3),
    );
    b.check(
        "H(Gr(2,6),S211Q^v(1))",
        table(&[]),
        coh(gr(), Descriptor::schur_quot_dual(&[2, 1, 1]), 1),
    );
    b.check(
        "H(Gr(2,6),S22Q^v(-2))",
        table(&[(4, 1)]),
        coh(gr(), Descriptor::schur_quot_dual(&[2, 2]), -2),
    );
    b.finish("4 BWB fixture battery")
}

/// Straightening by brute force: breadth-first search through the orbit of
/// `lambda + rho` under the simple reflections of `D_n`.
pub fn orbit_straighten(lambda: &WeightVector) -> StraightenResult {
    let n = lambda.system().rank();
    let rho: Vec<i64> = (0..n as i64).map(|i| 2 * (n as i64 - 1 - i)).collect();
    let start: Vec<i64> = lambda
        .doubled()
        .iter()
        .zip(&rho)
        .map(|(a, b)| a + b)
        .collect();
    let reflect = |v: &[i64], i: usize| -> Vec<i64> {
        let mut w = v.to_vec();
        if i + 1 < n {
            w.swap(i, i + 1);
        } else {
            let (a, c) = (w[n - 2], w[n - 1]);
            w[n - 2] = -c;
            w[n - 1] = -a;
        }
        w
    };
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    let mut found = None;
    while let Some((v, dist)) = queue.pop_front() {
        let strictly_dominant = v.windows(2).all(|p| p[0] > p[1]) && v[n - 2] > v[n - 1].abs();
        if strictly_dominant && found.is_none() {
            found = Some((v.clone(), dist));
        }
        for i in 0..n {
            let w = reflect(&v, i);
            if seen.insert(w.clone()) {
                queue.push_back((w, dist + 1));
            }
        }
    }
    let weyl_order = (1..=n).product::<usize>() << (n - 1);
    match found {
        Some((v, length)) if seen.len() == weyl_order => {
            let doubled = v.iter().zip(&rho).map(|(a, b)| a - b).collect();
            let dominant = WeightVector::from_doubled(lambda.system(), doubled)
                .expect("orbit stays in the lattice");
            StraightenResult::Regular { length, dominant }
        }
        _ => StraightenResult::Singular,
    }
}

/// A random `D_n` weight with entries in `[-6, 6]`, integral or half-integral.
pub fn random_type_d_weight(rng: &mut impl Rng, n: usize) -> WeightVector {
    let half = rng.gen_bool(0.5);
    let doubled = (0..n)
        .map(|_| {
            if half {
                2 * rng.gen_range(-6..=5) + 1
            } else {
                2 * rng.gen_range(-6..=6)
            }
        })
        .collect();
    WeightVector::from_doubled(RootSystem::TypeD(n), doubled).expect("valid weight")
}

fn criterion_5() -> Criterion {
    let mut rng = StdRng::seed_from_u64(WEYL_SEED);
    let mut agree = 0usize;
    let mut first_bad = None;
    let mut total = 0usize;
    for n in 2..=4 {
        for _ in 0..WEYL_SAMPLES {
            let w = random_type_d_weight(&mut rng, n);
            total += 1;
            if dotted_straighten(&w) == orbit_straighten(&w) {
                agree += 1;
            } else if first_bad.is_none() {
                first_bad = Some(w.to_string());
            }
        }
    }
    let got = match first_bad {
        None => format!("{agree}/{total} agree"),
        Some(w) => format!("{agree}/{total} agree, first mismatch at {w}"),
    };
    Criterion {
        name: "5 Weyl oracle".into(),
        expected: format!("{total}/{total} agree"),
        pass: agree == total,
        got,
    }
}

fn fixture_passes(f: Fixture) -> Result<bool> {
    Ok(validate_table(&fixture_table(f), f.square_half())?.passed())
}

fn perturbation_rejected() -> Result<bool> {
    let mut t = fixture_table(Fixture::S2G7);
    let (&(i, j), v) = t
        .cells()
        .filter(|((_, j), _)| (1..=3).contains(j))
        .find_map(|(c, s)| s.known().map(|v| (c, v.clone())))
        .expect("fixture has middle cells");
    t.set(i, j, CellStatus::Known(v + 1))?;
    Ok(!validate_table(&t, Fixture::S2G7.square_half())?.passed())
}

fn criterion_6() -> Criterion {
    let mut b = Battery::new();
    b.truth(
        "expected_betti(2) == DEF_G7",
        expected_betti(2).map(|t| t == fixture_table(Fixture::DefG7)),
    );
    for f in Fixture::ALL {
        b.truth(&format!("validate {}", f.name()), fixture_passes(f));
    }
    let c4 = validate_table(&fixture_table(Fixture::S2G8Partial), 3).map(|r| {
        r.checks
            .iter()
            .find(|c| c.name == "antidiagonal k=4")
            .map_or_else(|| "missing".to_string(), |c| c.detail.clone())
    });
    b.check("S2_G8_PARTIAL k=4", "sum = 315, c_4 = 315".to_string(), c4);
    b.truth("perturbed S2_G7 rejected", perturbation_rejected());
    b.finish("6 Betti diagrams")
}

fn criterion_7() -> Criterion {
    let mut b = Battery::new();
    b.check(
        "harris_tu_sigma_degree(6)",
        big(7),
        harris_tu_sigma_degree(6),
    );
    b.check("deg_y0(6)", big(6), deg_y0(6));
    b.check("deg_y_top(6)", big(1), deg_y_top(6));
    b.check(
        "residual(6)",
        big(0),
        sigma_decomposition(6).map(|s| s.residual),
    );
    b.check("deg_y_top(8)", big(14), deg_y_top(8));
    b.check(
        "grassmannian_degree(4,6)",
        big(14),
        grassmannian_degree(4, 6),
    );
    for (case, d) in [(GnCaseName::Genus8, 3), (GnCaseName::Genus7, 2)] {
        match degree_from_hilbert(d) {
            Ok(want) => b.check(&format!("porteous {case}"), want, degeneracy_degree(case)),
            Err(e) => b.check::<i64, i64>(&format!("12d^2 for d={d}"), 0, Err(e)),
        }
    }
    let quartic =
        QuadricClass::h_power(4, 1).map(|h| RingClass::Quadric(h.scale(&crate::arith::rat(4))));
    match quartic {
        Ok(q) => b.check(
            "first class genus7",
            q,
            first_degeneracy_class(GnCaseName::Genus7),
        ),
        Err(e) => b.check::<i64, i64>("first class genus7", 0, Err(e)),
    }
    let cubic = SchubertClass::special(2, 6, 1).map(|s| RingClass::Schubert(s.scale(&big(3))));
    match cubic {
        Ok(c) => b.check(
            "first class genus8",
            c,
            first_degeneracy_class(GnCaseName::Genus8),
        ),
        Err(e) => b.check::<i64, i64>("first class genus8", 0, Err(e)),
    }
    b.finish("7 degrees")
}

fn criterion_8(opts: &SelftestOptions) -> Criterion {
    let mut b = Battery::new();
    b.check("c1(S)", big(-4), spinor_chern_via_hrr().map(|s| s.c1));
    b.check(
        "porteous genus7",
        big(48),
        degeneracy_degree(GnCaseName::Genus7),
    );
    b.check(
        "chi(O_Q8(1)) via HRR",
        crate::arith::rat(10),
        crate::intersect::todd::chi_line_bundle(4, 1),
    );
    if let Some(text) = &opts.spinor_override {
        b.truth("override agrees", check_spinor_override(text).map(|_| true));
    }
    b.finish("8 spinor HRR")
}

fn catalog_thresholds(g: i64) -> Result<bool> {
    let entries = inequality_catalog(g)?;
    let ctx = GenusContext::new(g)?;
    let expected = [-g + 4, -2 * g + 12, -g + 7, -2 * g + 22];
    let closed_forms = entries
        .iter()
        .zip(expected)
        .all(|(e, want)| e.value == big(want));
    // each square first drops below -2 at g = 7, 8, 10, 13
    let thresholds = entries
        .iter()
        .zip([7, 8, 10, 13])
        .all(|(e, t)| e.satisfied == (g < t));
    let w = entries
        .iter()
        .find(|e| e.name == "w_square")
        .map(|e| e.value.clone());
    let v = mukai_square(&MukaiVector::new(1, 0, -1), &ctx);
    Ok(closed_forms && thresholds && w == Some(big(2 * g - 10)) && v == big(2))
}

fn chern_and_strata(g: i64) -> Result<bool> {
    let ctx = GenusContext::new(g)?;
    for ell in 0..=(g / 2 - 2) {
        if relative_grassmannian_dim(g, ell)? != big(2 * g - 8) {
            return Ok(false);
        }
        let (_, c2) = mukai_to_chern(&MukaiVector::new(2, 1, ell + 2), &ctx)?;
        if c2 != big(g - 1 - ell) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn criterion_9() -> Criterion {
    let mut b = Battery::new();
    let sweep = |f: fn(i64) -> Result<bool>| -> Result<bool> {
        for g in 6..=20 {
            if !f(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    b.truth(
        "squares and thresholds, 6<=g<=20",
        sweep(catalog_thresholds),
    );
    b.truth(
        "rel. Grassmannian dim and c2, 6<=g<=20",
        sweep(chern_and_strata),
    );
    b.finish("9 lattice catalog")
}

/// Runs criteria 1 through 9.
pub fn run(opts: &SelftestOptions) -> Vec<Criterion> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(opts),
        criterion_9(),
    ]
}

/// Criterion 10 is not computed; this is the text reported in its place.
pub const CRITERION_10: &str =
    "10 not reproducible at desk scale: very-ampleness, strange duality and the \
     minimal resolution from generators are covered by criteria 2, 3 and 6";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_passes() {
        for c in run(&SelftestOptions::default()) {
            assert!(c.pass, "{}: expected {} got {}", c.name, c.expected, c.got);
        }
    }

    #[test]
    fn bad_override_fails_criterion_8() {
        let opts = SelftestOptions {
            spinor_override: Some(r#"{"c1": -3, "c2": 0, "c3": 0}"#.into()),
        };
        let c = criterion_8(&opts);
        assert!(!c.pass);
    }

    #[test]
    fn orbit_oracle_on_known_weights() {
        let w = WeightVector::from_doubled(RootSystem::TypeD(2), vec![0, 0]).unwrap();
        assert_eq!(orbit_straighten(&w), dotted_straighten(&w));
        let singular = WeightVector::from_doubled(RootSystem::TypeD(3), vec![0, -2, 0]).unwrap();
        assert_eq!(orbit_straighten(&singular), StraightenResult::Singular);
    }
}
