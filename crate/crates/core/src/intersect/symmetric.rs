//! Integer polynomials in a fixed number of variables, reduction of
//! partially symmetric polynomials to elementary symmetric ones, and
//! semistandard tableaux.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Polynomial with integer coefficients; exponent vectors all have length `nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, BigInt::one());
        p
    }

    /// `sum_i coeffs[i] x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let mut p = Poly::zero(coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; coeffs.len()];
            e[i] = 1;
            p.add_term(e, c.into());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// Constant term.
    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_default()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Product, dropping terms of total degree above `max_deg`.
    pub fn mul_truncated(&self, other: &Poly, max_deg: u32) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            let d1: u32 = e1.iter().sum();
            for (e2, c2) in &other.terms {
                if d1 + e2.iter().sum::<u32>() > max_deg {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_truncated(other, u32::MAX)
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Elementary symmetric polynomial `e_j` in the variables `vars`.
    pub fn elementary(nvars: usize, vars: Range<usize>, j: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        let idx: Vec<usize> = vars.collect();
        for subset in subsets(&idx, j) {
            let mut e = vec![0; nvars];
            for i in subset {
                e[i] = 1;
            }
            out.add_term(e, BigInt::one());
        }
        out
    }
}

fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if items.len() < size {
        return vec![];
    }
    let mut out = subsets(&items[1..], size);
    for mut s in subsets(&items[1..], size - 1) {
        s.insert(0, items[0]);
        out.push(s);
    }
    out
}

/// Writes `p`, symmetric in the variables `vars`, as
/// `sum_beta coeff_beta * prod_j e_j(vars)^{beta_j}` with coefficients in the
/// remaining variables. Keys are the exponent vectors `beta` (length `|vars|`).
pub fn to_elementary(p: &Poly, vars: Range<usize>) -> Result<BTreeMap<Vec<u32>, Poly>> {
    let m = vars.len();
    let n = p.nvars();
    let project = |e: &[u32]| -> Vec<u32> { e[vars.clone()].to_vec() };
    let mut remaining = p.clone();
    let mut out: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
    while let Some(alpha) = remaining.terms.keys().map(|e| project(e)).max() {
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Inconsistent(format!(
                "polynomial is not symmetric in variables {vars:?}: leading exponent {alpha:?}"
            )));
        }
        let mut coeff = Poly::zero(n);
        for (e, c) in &remaining.terms {
            if project(e) == alpha {
                let mut rest = e.clone();
                for i in vars.clone() {
                    rest[i] = 0;
                }
                coeff.add_term(rest, c.clone());
            }
        }
        let beta: Vec<u32> = (0..m)
            .map(|j| alpha[j] - alpha.get(j + 1).copied().unwrap_or(0))
            .collect();
        let mut product = coeff.clone();
        for (j, &b) in beta.iter().enumerate() {
            if b > 0 {
                product = product.mul(&Poly::elementary(n, vars.clone(), j + 1).pow(b));
            }
        }
        remaining = remaining.sub(&product);
        let slot = out.entry(beta).or_insert_with(|| Poly::zero(n));
        *slot = slot.add(&coeff);
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Content vectors of all semistandard tableaux of shape `shape` with
/// entries in `1..=m`, with repetition.
pub fn ssyt_weights(shape: &[usize], m: usize) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, &mut filling, m, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    t: &mut Vec<Vec<usize>>,
    m: usize,
    out: &mut Vec<Vec<u32>>,
) {
    if idx == cells.len() {
        let mut w = vec![0u32; m];
        for row in t.iter() {
            for &v in row {
                w[v - 1] += 1;
            }
        }
        out.push(w);
        return;
    }
    let (r, c) = cells[idx];
    let lo_row = if c > 0 { t[r][c - 1] } else { 1 };
    let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=m {
        t[r][c] = v;
        fill(cells, idx + 1, t, m, out);
    }
    t[r][c] = 0;
}
