//! Total Chern classes, Thom-Porteous determinants, and Chern classes of
//! Schur functors of the tautological bundles on `Gr(k, n)`.

use num_bigint::BigInt;

use super::quadric::QuadricClass;
use super::schubert::SchubertClass;
use super::symmetric::{ssyt_weights, to_elementary, Poly};
use crate::error::{Error, Result};

/// The graded ring operations the Chern calculus needs.
pub trait RingElement: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn ambient_dim(&self) -> usize;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl RingElement for SchubertClass {
    fn zero_like(&self) -> Self {
        SchubertClass::zero(self.k, self.n).expect("valid Grassmannian")
    }
    fn one_like(&self) -> Self {
        SchubertClass::one(self.k, self.n).expect("valid Grassmannian")
    }
    fn add(&self, other: &Self) -> Self {
        SchubertClass::add(self, other)
    }
    fn neg(&self) -> Self {
        SchubertClass::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        SchubertClass::mul(self, other)
    }
    fn ambient_dim(&self) -> usize {
        self.dim()
    }
}

impl RingElement for QuadricClass {
    fn zero_like(&self) -> Self {
        QuadricClass::zero(self.m).expect("valid quadric")
    }
    fn one_like(&self) -> Self {
        QuadricClass::one(self.m).expect("valid quadric")
    }
    fn add(&self, other: &Self) -> Self {
        QuadricClass::add(self, other)
    }
    fn neg(&self) -> Self {
        QuadricClass::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        QuadricClass::mul(self, other)
    }
    fn ambient_dim(&self) -> usize {
        2 * self.m
    }
}

/// Total Chern class `c_0 + c_1 + ...`, with `classes[i]` of codimension `i`.
/// Components past the end are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernPoly<C> {
    pub classes: Vec<C>,
}

impl<C: RingElement> ChernPoly<C> {
    pub fn new(classes: Vec<C>) -> Result<Self> {
        let Some(first) = classes.first() else {
            return Err(Error::InvalidInput("a total Chern class needs c_0".into()));
        };
        if *first != first.one_like() {
            return Err(Error::InvalidInput("c_0 must be 1".into()));
        }
        Ok(ChernPoly { classes })
    }

    /// `c_i`, zero outside the stored range and for negative `i`.
    pub fn c(&self, i: i64) -> C {
        let zero = self.classes[0].zero_like();
        if i < 0 {
            return zero;
        }
        self.classes.get(i as usize).cloned().unwrap_or(zero)
    }

    /// Components `c_0..=c_top` of `1 / c`.
    pub fn inverse(&self, top: usize) -> Self {
        let mut s: Vec<C> = vec![self.classes[0].one_like()];
        for k in 1..=top {
            let mut acc = self.classes[0].zero_like();
            for i in 1..=k {
                acc = acc.add(&self.c(i as i64).mul(&s[k - i]));
            }
            s.push(acc.neg());
        }
        ChernPoly { classes: s }
    }

    pub fn mul(&self, other: &Self, top: usize) -> Self {
        let classes = (0..=top)
            .map(|k| {
                (0..=k).fold(self.classes[0].zero_like(), |acc, i| {
                    acc.add(&self.c(i as i64).mul(&other.c((k - i) as i64)))
                })
            })
            .collect();
        ChernPoly { classes }
    }
}

fn determinant<C: RingElement>(m: &[Vec<C>], one: &C) -> C {
    match m.len() {
        0 => one.clone(),
        1 => m[0][0].clone(),
        size => {
            let mut acc = one.zero_like();
            for col in 0..size {
                let minor: Vec<Vec<C>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].mul(&determinant(&minor, one));
                acc = if col % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

/// Class of the locus where a map `F -> G` of ranks `f`, `g` has rank at
/// most `r`: `det(c_{g-r+j-i}(G - F))` over `1 <= i, j <= f - r`.
pub fn porteous_class<C: RingElement>(
    c_virtual: &ChernPoly<C>,
    f: usize,
    g: usize,
    r: usize,
) -> Result<C> {
    if r > f.min(g) {
        return Err(Error::InvalidInput(format!(
            "rank bound {r} exceeds min({f}, {g})"
        )));
    }
    let one = c_virtual.classes[0].one_like();
    let codim = (f - r) * (g - r);
    if codim > one.ambient_dim() {
        return Err(Error::InvalidInput(format!(
            "expected codimension {codim} exceeds the ambient dimension {}",
            one.ambient_dim()
        )));
    }
    let size = f - r;
    let shift = (g - r) as i64;
    let matrix: Vec<Vec<C>> = (1..=size as i64)
        .map(|i| {
            (1..=size as i64)
                .map(|j| c_virtual.c(shift + j - i))
                .collect()
        })
        .collect();
    Ok(determinant(&matrix, &one))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `Sigma^pattern U^vee`.
    SubDual,
    /// `Sigma^pattern Q^vee`.
    QuotDual,
}

const MAX_SCHUR_RANK: usize = 8;

/// Total Chern class of `Sigma^pattern (U^vee or Q^vee) (twist)` on `Gr(k, n)`.
pub fn chern_schur_bundle(
    k: usize,
    n: usize,
    pattern: &[usize],
    side: Side,
    twist: i64,
) -> Result<ChernPoly<SchubertClass>> {
    SchubertClass::zero(k, n)?;
    if pattern.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!(
            "{pattern:?} is not a partition"
        )));
    }
    let q = n - k;
    let nvars = k + q;
    let dim = (k * q) as u32;
    let (offset, m) = match side {
        Side::SubDual => (0, k),
        Side::QuotDual => (k, q),
    };
    let weights = ssyt_weights(pattern, m);
    if weights.len() > MAX_SCHUR_RANK {
        return Err(Error::InvalidInput(format!(
            "bundle of rank {} exceeds the supported rank {MAX_SCHUR_RANK}",
            weights.len()
        )));
    }
    // variables: x_1..x_k roots of U^vee, then y_1..y_q roots of Q^vee
    let mut twist_coeffs = vec![0i64; nvars];
    twist_coeffs[..k].fill(twist);
    let mut total = Poly::one(nvars);
    for w in &weights {
        let mut coeffs = twist_coeffs.clone();
        for (i, &e) in w.iter().enumerate() {
            coeffs[offset + i] += e as i64;
        }
        total = total.mul_truncated(&Poly::one(nvars).add(&Poly::linear(&coeffs)), dim);
    }

    let zero = SchubertClass::zero(k, n)?;
    let mut class = zero.clone();
    for (beta_y, coeff) in to_elementary(&total, k..nvars)? {
        let mut y_part = SchubertClass::one(k, n)?;
        for (j, &b) in beta_y.iter().enumerate() {
            // e_j(Q^vee) = (-1)^j sigma_j
            let mut e = SchubertClass::special(k, n, j + 1)?;
            if (j + 1) % 2 == 1 {
                e = e.neg();
            }
            y_part = y_part.mul(&e.pow(b as usize));
        }
        for (beta_x, c) in to_elementary(&coeff, 0..k)? {
            let scalar = c.constant_term();
            let mut x_part = SchubertClass::one(k, n)?;
            for (j, &b) in beta_x.iter().enumerate() {
                x_part = x_part.mul(&SchubertClass::special_column(k, n, j + 1)?.pow(b as usize));
            }
            class = class.add(&x_part.mul(&y_part).scale(&scalar));
        }
    }
    let classes: Vec<SchubertClass> = (0..=dim as usize).map(|d| class.component(d)).collect();
    if classes[0] != SchubertClass::one(k, n)? {
        return Err(Error::Inconsistent("total Chern class has c_0 != 1".into()));
    }
    ChernPoly::new(classes)
}

/// `c_1`, read off a total Chern class.
pub fn first_chern<C: RingElement>(c: &ChernPoly<C>) -> C {
    c.c(1)
}

/// Total Chern class of a trivial bundle.
pub fn trivial<C: RingElement>(like: &C) -> ChernPoly<C> {
    ChernPoly {
        classes: vec![like.one_like()],
    }
}

/// `m * sigma_1`.
pub fn sigma1_multiple(k: usize, n: usize, m: i64) -> Result<SchubertClass> {
    Ok(SchubertClass::special(k, n, 1)?.scale(&BigInt::from(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::schubert::integrate_schubert;

    fn is_one<C: RingElement>(c: &C) -> bool {
        *c == c.one_like()
    }

    fn s(lambda: &[usize]) -> SchubertClass {
        SchubertClass::sigma(2, 6, lambda).unwrap()
    }

    #[test]
    fn tautological_classes() {
        let u = chern_schur_bundle(2, 6, &[1], Side::SubDual, 0).unwrap();
        assert_eq!(u.c(1), s(&[1]));
        assert_eq!(u.c(2), s(&[1, 1]));
        assert!(u.c(3).is_zero());
        let q = chern_schur_bundle(2, 6, &[1], Side::QuotDual, 0).unwrap();
        assert_eq!(q.c(1), s(&[1]).neg());
        assert_eq!(q.c(2), s(&[2]));
        assert_eq!(q.c(4), s(&[4]));
    }

    #[test]
    fn line_bundle() {
        let o1 = chern_schur_bundle(2, 6, &[], Side::QuotDual, 1).unwrap();
        assert_eq!(o1.c(1), s(&[1]));
        assert!(o1.c(2).is_zero());
    }

    #[test]
    fn wedge_two_of_quotient_dual() {
        let m = chern_schur_bundle(2, 6, &[1, 1], Side::QuotDual, 0).unwrap();
        assert_eq!(m.c(1), sigma1_multiple(2, 6, -3).unwrap());
    }

    #[test]
    fn whitney_sum_with_u() {
        // c(U) c(Q) = 1, so c(U^vee) c(Q^vee) = 1 as well
        let u = chern_schur_bundle(2, 6, &[1], Side::SubDual, 0).unwrap();
        let q = chern_schur_bundle(2, 6, &[1], Side::QuotDual, 0).unwrap();
        let prod = u.mul(&q, 8);
        assert!(is_one(&prod.c(0)));
        for d in 1..=8 {
            assert!(prod.c(d).is_zero(), "degree {d}");
        }
    }

    #[test]
    fn porteous_corank_zero_is_one() {
        let c = chern_schur_bundle(2, 6, &[1, 1], Side::QuotDual, 0).unwrap();
        assert_eq!(porteous_class(&c, 6, 6, 6).unwrap(), s(&[]));
    }

    #[test]
    fn porteous_corank_one_is_c1() {
        let c = chern_schur_bundle(2, 6, &[1, 1], Side::QuotDual, 0)
            .unwrap()
            .inverse(8);
        assert_eq!(porteous_class(&c, 6, 6, 5).unwrap(), c.c(1));
        assert!(porteous_class(&c, 6, 6, 2).is_err());
    }

    #[test]
    fn degree_of_gr26() {
        assert_eq!(integrate_schubert(&s(&[1]).pow(8)), 14.into());
    }
}
