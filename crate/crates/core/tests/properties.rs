use num_bigint::BigInt;
use proptest::prelude::*;

use hilbsq_core::betti::{expected_betti, fixture_table, Fixture};
use hilbsq_core::intersect::schubert::{lr_coefficients, SchubertClass};
use hilbsq_core::lattice::{mukai_pairing, mukai_square, GenusContext, MukaiVector};
use hilbsq_core::selftest::orbit_straighten;
use hilbsq_core::weyl::{dotted_straighten, RootSystem, StraightenResult, WeightVector};

fn mukai() -> impl Strategy<Value = MukaiVector> {
    (-20i64..20, -20i64..20, -20i64..20).prop_map(|(r, c, s)| MukaiVector::new(r, c, s))
}

proptest! {
    #[test]
    fn mukai_pairing_is_symmetric(u in mukai(), v in mukai(), g in 2i64..30) {
        let ctx = GenusContext::new(g).unwrap();
        prop_assert_eq!(mukai_pairing(&u, &v, &ctx), mukai_pairing(&v, &u, &ctx));
    }

    #[test]
    fn mukai_pairing_is_bilinear(u in mukai(), v in mukai(), w in mukai(), a in -5i64..5, g in 2i64..30) {
        let ctx = GenusContext::new(g).unwrap();
        let lhs = mukai_pairing(&(&(&BigInt::from(a) * &u) + &v), &w, &ctx);
        let rhs = BigInt::from(a) * mukai_pairing(&u, &w, &ctx) + mukai_pairing(&v, &w, &ctx);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mukai_squares_are_even(v in mukai(), g in 2i64..30) {
        let ctx = GenusContext::new(g).unwrap();
        prop_assert_eq!(mukai_square(&v, &ctx) % BigInt::from(2), BigInt::from(0));
    }
}

fn type_d_weight() -> impl Strategy<Value = WeightVector> {
    (
        2usize..=4,
        any::<bool>(),
        prop::collection::vec(-6i64..=6, 4),
    )
        .prop_map(|(n, half, xs)| {
            let doubled = xs[..n]
                .iter()
                .map(|&x| if half { 2 * x.min(5) + 1 } else { 2 * x })
                .collect();
            WeightVector::from_doubled(RootSystem::TypeD(n), doubled).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn straightening_matches_orbit_search(w in type_d_weight()) {
        prop_assert_eq!(dotted_straighten(&w), orbit_straighten(&w));
    }

    #[test]
    fn length_parity_is_the_permutation_sign(w in type_d_weight()) {
        // (-1)^length = det(w); sign changes in D_n come in pairs
        let n = w.doubled().len() as i64;
        let shifted: Vec<i64> = w.doubled().iter().zip(0..).map(|(x, i)| (x + 2 * (n - 1 - i)).abs()).collect();
        let inversions = (0..shifted.len())
            .flat_map(|i| (i + 1..shifted.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| shifted[i] < shifted[j])
            .count();
        if let StraightenResult::Regular { length, .. } = dotted_straighten(&w) {
            prop_assert_eq!(length % 2, inversions % 2);
        }
    }
}

fn partition(rows: usize, cols: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=cols, rows).prop_map(|mut p| {
        p.sort_unstable_by(|a, b| b.cmp(a));
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    })
}

fn class_on(k: usize, n: usize) -> impl Strategy<Value = SchubertClass> {
    prop::collection::vec((partition(k, n - k), -3i64..=3), 1..4).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(SchubertClass::zero(k, n).unwrap(), |acc, (p, c)| {
                acc.add(
                    &SchubertClass::sigma(k, n, &p)
                        .unwrap()
                        .scale(&BigInt::from(c)),
                )
            })
    })
}

proptest! {
    #[test]
    fn lr_is_commutative(x in class_on(3, 6), y in class_on(3, 6)) {
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }

    #[test]
    fn lr_is_associative(x in class_on(2, 6), y in class_on(2, 6), z in class_on(2, 6)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn lr_coefficients_are_symmetric(l in partition(3, 3), m in partition(3, 3)) {
        prop_assert_eq!(lr_coefficients(&l, &m, 3, 3), lr_coefficients(&m, &l, 3, 3));
    }
}

/// `sigma_a sigma_b` for a two-row partition `(a, b)` via Jacobi-Trudi:
/// `sigma_{(a,b)} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}`, with each
/// product of special classes expanded by Pieri.
fn pieri(k: usize, n: usize, lambda: &[usize], i: usize) -> SchubertClass {
    // sigma_lambda * sigma_i: add i boxes, no two in a column
    let cols = n - k;
    let mut out = SchubertClass::zero(k, n).unwrap();
    let mut shape = lambda.to_vec();
    shape.resize(k, 0);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        shape: &mut Vec<usize>,
        orig: &[usize],
        row: usize,
        left: usize,
        cols: usize,
        k: usize,
        n: usize,
        out: &mut SchubertClass,
    ) {
        if left == 0 {
            *out = out.add(&SchubertClass::sigma(k, n, shape).unwrap());
            return;
        }
        if row == shape.len() {
            return;
        }
        let cap = if row == 0 { cols } else { orig[row - 1] };
        for take in 0..=left.min(cap - shape[row]) {
            shape[row] += take;
            rec(shape, orig, row + 1, left - take, cols, k, n, out);
            shape[row] -= take;
        }
    }
    let orig = shape.clone();
    rec(&mut shape, &orig, 0, i, cols, k, n, &mut out);
    out
}

fn pieri_product(k: usize, n: usize, x: &SchubertClass, i: usize) -> SchubertClass {
    x.terms()
        .fold(SchubertClass::zero(k, n).unwrap(), |acc, (p, c)| {
            acc.add(&pieri(k, n, p, i).scale(c))
        })
}

fn jacobi_trudi(k: usize, n: usize, a: usize, b: usize) -> SchubertClass {
    let one = SchubertClass::one(k, n).unwrap();
    let first = pieri_product(k, n, &pieri_product(k, n, &one, a), b);
    if b == 0 {
        return pieri_product(k, n, &one, a);
    }
    let second = pieri_product(k, n, &pieri_product(k, n, &one, a + 1), b - 1);
    first.add(&second.neg())
}

proptest! {
    #[test]
    fn two_row_classes_match_pieri_chains(
        (k, n) in prop_oneof![Just((2usize, 6usize)), Just((3, 6))],
        a in 0usize..=4, b in 0usize..=4, x in class_on(2, 6),
    ) {
        let (a, b) = (a.max(b), a.min(b));
        let lhs = SchubertClass::sigma(k, n, &[a, b]).unwrap();
        prop_assert_eq!(&lhs, &jacobi_trudi(k, n, a, b));
        if (k, n) == (2, 6) {
            let direct = x.mul(&lhs);
            let chained = pieri_product(2, 6, &pieri_product(2, 6, &x, a), b)
                .add(&pieri_product(2, 6, &pieri_product(2, 6, &x, a + 1), b.saturating_sub(1)).neg());
            if b > 0 {
                prop_assert_eq!(direct, chained);
            }
        }
    }
}

#[test]
fn betti_duality_is_an_involution() {
    for t in [
        fixture_table(Fixture::S2G7),
        fixture_table(Fixture::DefG7),
        expected_betti(2).unwrap(),
        expected_betti(3).unwrap(),
    ] {
        let codim = t.codim();
        for ((i, j), _) in t.cells() {
            if *j < 4 {
                continue;
            }
            let (pi, pj) = (codim - *i as i64, 5 - *j as i64);
            let (qi, qj) = (codim - pi, 5 - pj);
            assert_eq!((qi, qj), (*i as i64, *j as i64));
            assert_eq!(
                t.known(*i as i64, *j as i64),
                t.known(pi, pj),
                "cell ({i},{j})"
            );
        }
    }
}
