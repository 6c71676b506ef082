//! Schubert calculus on `Gr(k, n)`: classes in the Schubert basis and the
//! Littlewood-Richardson product.
//!
//! `sigma_lambda` is the Schur polynomial `s_lambda` in the Chern roots of
//! `U^vee`; in particular `sigma_i = c_i(Q)` and `sigma_{1^i} = c_i(U^vee)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Partition with no trailing zeros.
pub type Partition = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass {
    pub k: usize,
    pub n: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

fn trim(mut p: Partition) -> Partition {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

impl SchubertClass {
    pub fn zero(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidInput(format!(
                "need 1 <= k < n, got Gr({k},{n})"
            )));
        }
        Ok(SchubertClass {
            k,
            n,
            coeffs: BTreeMap::new(),
        })
    }

    /// `sigma_lambda`; zero when `lambda` leaves the `k x (n-k)` box.
    pub fn sigma(k: usize, n: usize, lambda: &[usize]) -> Result<Self> {
        let mut c = Self::zero(k, n)?;
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "{lambda:?} is not a partition"
            )));
        }
        c.add_term(trim(lambda.to_vec()), BigInt::one());
        Ok(c)
    }

    pub fn one(k: usize, n: usize) -> Result<Self> {
        Self::sigma(k, n, &[])
    }

    /// `sigma_i = c_i(Q)`.
    pub fn special(k: usize, n: usize, i: usize) -> Result<Self> {
        Self::sigma(k, n, &[i])
    }

    /// `sigma_{1^j} = c_j(U^vee)`.
    pub fn special_column(k: usize, n: usize, j: usize) -> Result<Self> {
        Self::sigma(k, n, &vec![1; j])
    }

    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    fn fits(&self, p: &[usize]) -> bool {
        p.len() <= self.k && p.first().is_none_or(|&x| x <= self.n - self.k)
    }

    fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() || !self.fits(&p) {
            return;
        }
        let entry = self.coeffs.entry(p.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn coefficient(&self, lambda: &[usize]) -> BigInt {
        self.coeffs
            .get(&trim(lambda.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            (self.k, self.n),
            (other.k, other.n),
            "classes on different Grassmannians"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = SchubertClass {
            coeffs: BTreeMap::new(),
            ..self.clone()
        };
        for (p, v) in &self.coeffs {
            out.add_term(p.clone(), v * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    /// Homogeneous component of codimension `d`.
    pub fn component(&self, d: usize) -> Self {
        SchubertClass {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(p, _)| p.iter().sum::<usize>() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        lr_multiply(self, other)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one(self.k, self.n).expect("valid Grassmannian");
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(p, c)| {
                let name = if p.is_empty() {
                    "1".to_string()
                } else {
                    let idx: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                    format!("sigma_{{{}}}", idx.join(","))
                };
                if c.is_one() {
                    name
                } else {
                    format!("{c}*{name}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Littlewood-Richardson coefficients `c^nu_{lambda,mu}` for all `nu` inside
/// a box with `rows` rows and `cols` columns.
pub fn lr_coefficients(
    lambda: &[usize],
    mu: &[usize],
    rows: usize,
    cols: usize,
) -> BTreeMap<Partition, u64> {
    let mut shape: Vec<usize> = lambda.to_vec();
    shape.resize(rows, 0);
    if lambda.len() > rows || lambda.first().is_some_and(|&x| x > cols) {
        return BTreeMap::new();
    }
    // labels[r] holds the labels of the cells added to row r, left to right
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); rows];
    let mut out = BTreeMap::new();
    add_strips(&mut shape, &mut labels, mu, 0, cols, &mut out);
    out
}

fn add_strips(
    shape: &mut Vec<usize>,
    labels: &mut Vec<Vec<usize>>,
    mu: &[usize],
    step: usize,
    cols: usize,
    out: &mut BTreeMap<Partition, u64>,
) {
    if step == mu.len() {
        if is_lattice(labels, mu.len()) {
            *out.entry(trim(shape.clone())).or_default() += 1;
        }
        return;
    }
    let before = shape.clone();
    place_strip(shape, labels, mu, step, cols, &before, 0, mu[step], out);
}

/// Adds `left` cells labelled `step + 1` as a horizontal strip, choosing the
/// number of cells row by row from `row` downwards.
#[allow(clippy::too_many_arguments)]
fn place_strip(
    shape: &mut Vec<usize>,
    labels: &mut Vec<Vec<usize>>,
    mu: &[usize],
    step: usize,
    cols: usize,
    before: &[usize],
    row: usize,
    left: usize,
    out: &mut BTreeMap<Partition, u64>,
) {
    if left == 0 {
        add_strips(shape, labels, mu, step + 1, cols, out);
        return;
    }
    if row == shape.len() {
        return;
    }
    // a horizontal strip never puts a cell below another new cell
    let cap = if row == 0 { cols } else { before[row - 1] };
    let room = cap.min(cols) - shape[row];
    for take in (0..=room.min(left)).rev() {
        shape[row] += take;
        labels[row].extend(std::iter::repeat_n(step + 1, take));
        place_strip(
            shape,
            labels,
            mu,
            step,
            cols,
            before,
            row + 1,
            left - take,
            out,
        );
        let len = labels[row].len();
        labels[row].truncate(len - take);
        shape[row] -= take;
    }
}

/// Reading rows top to bottom, each right to left, every prefix has at least
/// as many `i` as `i + 1`.
fn is_lattice(labels: &[Vec<usize>], parts: usize) -> bool {
    let mut counts = vec![0usize; parts + 2];
    for row in labels {
        for &l in row.iter().rev() {
            counts[l] += 1;
            if l > 1 && counts[l] > counts[l - 1] {
                return false;
            }
        }
    }
    true
}

pub fn lr_multiply(x: &SchubertClass, y: &SchubertClass) -> SchubertClass {
    x.check_same(y);
    let (k, cols) = (x.k, x.n - x.k);
    let mut out = SchubertClass {
        coeffs: BTreeMap::new(),
        ..x.clone()
    };
    for (lambda, a) in &x.coeffs {
        for (mu, b) in &y.coeffs {
            let ab = a * b;
            for (nu, c) in lr_coefficients(lambda, mu, k, cols) {
                out.add_term(nu, &ab * BigInt::from(c));
            }
        }
    }
    out
}

/// Degree of the top class.
pub fn integrate_schubert(x: &SchubertClass) -> BigInt {
    x.coefficient(&vec![x.n - x.k; x.k])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lambda: &[usize]) -> SchubertClass {
        SchubertClass::sigma(2, 6, lambda).unwrap()
    }

    #[test]
    fn pieri_square() {
        assert_eq!(s(&[1]).mul(&s(&[1])), s(&[2]).add(&s(&[1, 1])));
    }

    #[test]
    fn degree_of_gr26() {
        let top = s(&[1]).pow(8);
        assert_eq!(top, s(&[4, 4]).scale(&14.into()));
        assert_eq!(integrate_schubert(&top), 14.into());
    }

    #[test]
    fn identity() {
        let x = s(&[2, 1]).add(&s(&[3]).scale(&5.into()));
        assert_eq!(SchubertClass::one(2, 6).unwrap().mul(&x), x);
    }

    #[test]
    fn classic_coefficient() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        let c = lr_coefficients(&[2, 1], &[2, 1], 3, 3);
        assert_eq!(c[&vec![3, 2, 1]], 2);
        assert_eq!(c.values().sum::<u64>(), 4);
    }

    #[test]
    fn box_overflow_vanishes() {
        assert!(s(&[5]).is_zero());
        assert!(s(&[4, 4]).mul(&s(&[1])).is_zero());
        assert!(SchubertClass::sigma(2, 6, &[1, 2]).is_err());
    }
}
