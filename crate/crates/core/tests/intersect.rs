use num_bigint::BigInt;
use num_rational::BigRational;

use hilbsq_core::gn::GnCaseName;
use hilbsq_core::hilbert::degree_from_hilbert;
use hilbsq_core::intersect::{
    chern_schur_bundle, deg_y0, deg_y_top, degeneracy_degree, grassmannian_degree,
    harris_tu_sigma_degree, hook_length_degree, integrate_quadric, sigma_decomposition,
    todd_quadric, QuadricClass, Side,
};

#[test]
fn top_stratum_is_a_grassmannian() {
    for g in (6..=16).step_by(2) {
        assert_eq!(
            deg_y_top(g).unwrap(),
            grassmannian_degree(4, (g / 2 + 2) as usize).unwrap(),
            "g = {g}"
        );
    }
}

#[test]
fn residuals_are_nonnegative_through_genus_16() {
    for g in 6..=16 {
        let s = sigma_decomposition(g).unwrap();
        assert!(s.residual >= BigInt::from(0), "g = {g}");
    }
}

#[test]
fn residuals_turn_negative_from_genus_17() {
    // deg Y_0 outgrows the product formula: at g = 17, 25!/12! > 28326647278516500
    assert_eq!(
        harris_tu_sigma_degree(17).unwrap(),
        "28326647278516500".parse::<BigInt>().unwrap()
    );
    assert_eq!(
        deg_y0(17).unwrap(),
        "32382376266240000".parse::<BigInt>().unwrap()
    );
    for g in 17..=20 {
        let err = sigma_decomposition(g).unwrap_err();
        assert!(err.is_inconsistency(), "g = {g}: {err}");
    }
}

#[test]
fn grassmannian_degrees_match_hook_lengths() {
    for n in 2..=10 {
        for k in 1..n {
            if k * (n - k) <= 24 {
                assert_eq!(
                    grassmannian_degree(k, n).unwrap(),
                    hook_length_degree(k, n),
                    "Gr({k},{n})"
                );
            }
        }
    }
}

#[test]
fn middle_classes_on_even_quadrics() {
    for m in [2, 4] {
        let a = QuadricClass::ruling_a(m).unwrap();
        let b = QuadricClass::ruling_b(m).unwrap();
        let two = BigRational::from_integer(2.into());
        assert_eq!(integrate_quadric(&a.add(&b).pow(2)), two);
        assert_eq!(
            integrate_quadric(&a.mul(&b)),
            BigRational::from_integer(0.into())
        );
    }
}

#[test]
fn porteous_degrees_equal_hilbert_degrees() {
    assert_eq!(
        degeneracy_degree(GnCaseName::Genus8).unwrap(),
        degree_from_hilbert(3).unwrap()
    );
    assert_eq!(
        degeneracy_degree(GnCaseName::Genus7).unwrap(),
        degree_from_hilbert(2).unwrap()
    );
}

#[test]
fn todd_class_starts_at_one() {
    let td = todd_quadric(4).unwrap();
    assert_eq!(td.c(0), QuadricClass::one(4).unwrap());
}

#[test]
fn rank_limit_on_schur_bundles() {
    assert!(chern_schur_bundle(2, 6, &[2, 2], Side::QuotDual, 0).is_err());
    assert!(chern_schur_bundle(2, 6, &[1, 1], Side::QuotDual, 0).is_ok());
}
