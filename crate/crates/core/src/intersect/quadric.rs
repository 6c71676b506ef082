//! Rational cohomology ring of an even-dimensional quadric `Q^{2m}`.
//!
//! Basis `h^i` for `i != m`, plus the two middle classes `a`, `b` of the
//! rulings with `h^m = a + b`. Multiplication: `h a = h b = h^{m+1} / 2`;
//! for `m` even `a^2 = b^2 = h^{2m} / 2` and `a b = 0`, for `m` odd the
//! other way round. `h^{2m}` integrates to 2.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuadricBasis {
    /// `h^i`, `i != m`.
    Power(usize),
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricClass {
    pub m: usize,
    coeffs: BTreeMap<QuadricBasis, BigRational>,
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

impl QuadricClass {
    pub fn zero(m: usize) -> Result<Self> {
        if !(2..=4).contains(&m) {
            return Err(Error::InvalidInput(format!(
                "quadric ring implemented for m in 2..=4, got {m}"
            )));
        }
        Ok(QuadricClass {
            m,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn one(m: usize) -> Result<Self> {
        Self::h_power(m, 0)
    }

    /// `h^i`, zero above the top degree.
    pub fn h_power(m: usize, i: usize) -> Result<Self> {
        let mut c = Self::zero(m)?;
        c.add_power(i, BigRational::one());
        Ok(c)
    }

    pub fn ruling_a(m: usize) -> Result<Self> {
        let mut c = Self::zero(m)?;
        c.add_term(QuadricBasis::A, BigRational::one());
        Ok(c)
    }

    pub fn ruling_b(m: usize) -> Result<Self> {
        let mut c = Self::zero(m)?;
        c.add_term(QuadricBasis::B, BigRational::one());
        Ok(c)
    }

    fn add_term(&mut self, basis: QuadricBasis, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(basis).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&basis);
        }
    }

    fn add_power(&mut self, i: usize, c: BigRational) {
        if i > 2 * self.m {
        } else if i == self.m {
            self.add_term(QuadricBasis::A, c.clone());
            self.add_term(QuadricBasis::B, c);
        } else {
            self.add_term(QuadricBasis::Power(i), c);
        }
    }

    pub fn coefficient(&self, basis: QuadricBasis) -> BigRational {
        self.coeffs
            .get(&basis)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `h^i` for `i != m`.
    pub fn h_coefficient(&self, i: usize) -> BigRational {
        self.coefficient(QuadricBasis::Power(i))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "classes on different quadrics");
        let mut out = self.clone();
        for (&b, c) in &other.coeffs {
            out.add_term(b, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = QuadricClass {
            m: self.m,
            coeffs: BTreeMap::new(),
        };
        for (&b, v) in &self.coeffs {
            out.add_term(b, v * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    fn degree_of(&self, b: QuadricBasis) -> usize {
        match b {
            QuadricBasis::Power(i) => i,
            _ => self.m,
        }
    }

    /// Homogeneous component of codimension `d`.
    pub fn component(&self, d: usize) -> Self {
        QuadricClass {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&b, _)| self.degree_of(b) == d)
                .map(|(&b, c)| (b, c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "classes on different quadrics");
        let m = self.m;
        let mut out = QuadricClass {
            m,
            coeffs: BTreeMap::new(),
        };
        for (&x, cx) in &self.coeffs {
            for (&y, cy) in &other.coeffs {
                let c = cx * cy;
                use QuadricBasis::*;
                match (x, y) {
                    (Power(i), Power(j)) => out.add_power(i + j, c),
                    (Power(0), r) | (r, Power(0)) => out.add_term(r, c),
                    (Power(i), _) | (_, Power(i)) => out.add_power(m + i, c * half()),
                    (A, A) | (B, B) if m.is_multiple_of(2) => out.add_power(2 * m, c * half()),
                    (A, B) | (B, A) if m % 2 == 1 => out.add_power(2 * m, c * half()),
                    _ => {}
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one(self.m).expect("valid quadric");
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for QuadricClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(b, c)| {
                let name = match b {
                    QuadricBasis::Power(0) => "1".to_string(),
                    QuadricBasis::Power(1) => "h".to_string(),
                    QuadricBasis::Power(i) => format!("h^{i}"),
                    QuadricBasis::A => "a".to_string(),
                    QuadricBasis::B => "b".to_string(),
                };
                if c.is_one() {
                    name
                } else if name == "1" {
                    c.to_string()
                } else {
                    format!("{c}*{name}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Degree: twice the coefficient of `h^{2m}`.
pub fn integrate_quadric(x: &QuadricClass) -> BigRational {
    x.h_coefficient(2 * x.m) * BigRational::from_integer(BigInt::from(2))
}
