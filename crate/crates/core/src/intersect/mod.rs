//! Intersection theory: Schubert calculus, the quadric ring, Chern classes,
//! degeneracy loci, Riemann-Roch for spinor bundles, and degree formulas.

pub mod chern;
pub mod degrees;
pub mod hrr;
pub mod quadric;
pub mod schubert;
pub mod symmetric;
pub mod todd;

use std::fmt;

use num_bigint::BigInt;

pub use chern::{chern_schur_bundle, porteous_class, ChernPoly, RingElement, Side};
pub use degrees::{
    deg_y0, deg_y_top, grassmannian_degree, harris_tu_sigma_degree, hook_length_degree,
    sigma_decomposition, SigmaDecomposition,
};
pub use hrr::{check_spinor_override, spinor_chern_via_hrr, SpinorChern};
pub use quadric::{integrate_quadric, QuadricClass};
pub use schubert::{integrate_schubert, lr_multiply, SchubertClass};
pub use todd::todd_quadric;

use crate::arith::to_integer;
use crate::error::Result;
use crate::gn::GnCaseName;

/// A class on either kind of ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingClass {
    Schubert(SchubertClass),
    Quadric(QuadricClass),
}

impl RingClass {
    pub fn integrate(&self) -> Result<BigInt> {
        match self {
            RingClass::Schubert(x) => Ok(integrate_schubert(x)),
            RingClass::Quadric(x) => to_integer(&integrate_quadric(x), "degree"),
        }
    }
}

impl fmt::Display for RingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingClass::Schubert(x) => x.fmt(f),
            RingClass::Quadric(x) => x.fmt(f),
        }
    }
}

/// `c_1(G - F)`.
pub fn virtual_first_chern<C: RingElement>(g: &ChernPoly<C>, f: &ChernPoly<C>) -> C {
    g.c(1).sub(&f.c(1))
}

fn spinor_case() -> Result<ChernPoly<QuadricClass>> {
    spinor_chern_via_hrr()?.chern_poly()
}

fn wedge_case() -> Result<ChernPoly<SchubertClass>> {
    chern_schur_bundle(2, 6, &[1, 1], Side::QuotDual, 0)
}

/// Degeneracy data `(f, g, r)` of `phi: F -> G`. The bundle `F` is `S` on `Q^8`
/// resp. `wedge^2 Q^vee` on `Gr(2,6)`; `G` is trivial.
pub fn porteous_ranks(case: GnCaseName) -> (usize, usize, usize) {
    match case {
        GnCaseName::Genus7 => (8, 8, 6),
        GnCaseName::Genus8 => (6, 6, 4),
    }
}

/// The class of the first degeneracy locus, `c_1(G - F)`.
pub fn first_degeneracy_class(case: GnCaseName) -> Result<RingClass> {
    Ok(match case {
        GnCaseName::Genus7 => {
            let f = spinor_case()?;
            RingClass::Quadric(virtual_first_chern(&chern::trivial(&f.c(0)), &f))
        }
        GnCaseName::Genus8 => {
            let f = wedge_case()?;
            RingClass::Schubert(virtual_first_chern(&chern::trivial(&f.c(0)), &f))
        }
    })
}

/// The Thom-Porteous class of the corank-2 locus.
pub fn degeneracy_class(case: GnCaseName) -> Result<RingClass> {
    let (f, g, r) = porteous_ranks(case);
    Ok(match case {
        GnCaseName::Genus7 => {
            let c = spinor_case()?;
            RingClass::Quadric(porteous_class(&c.inverse(3), f, g, r)?)
        }
        GnCaseName::Genus8 => {
            let c = wedge_case()?;
            RingClass::Schubert(porteous_class(&c.inverse(c.c(0).ambient_dim()), f, g, r)?)
        }
    })
}

/// Degree of the degeneracy locus in the polarization `h` resp. `sigma_1`.
pub fn degeneracy_degree(case: GnCaseName) -> Result<BigInt> {
    match degeneracy_class(case)? {
        RingClass::Quadric(x) => {
            let h4 = QuadricClass::h_power(x.m, 4)?;
            RingClass::Quadric(x.mul(&h4)).integrate()
        }
        RingClass::Schubert(x) => {
            let s4 = SchubertClass::special(x.k, x.n, 1)?.pow(4);
            RingClass::Schubert(x.mul(&s4)).integrate()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::degree_from_hilbert;
    use num_rational::BigRational;

    #[test]
    fn first_degeneracy_classes() {
        let quartic = QuadricClass::h_power(4, 1)
            .unwrap()
            .scale(&BigRational::from_integer(4.into()));
        assert_eq!(
            first_degeneracy_class(GnCaseName::Genus7).unwrap(),
            RingClass::Quadric(quartic)
        );
        let cubic = SchubertClass::special(2, 6, 1).unwrap().scale(&3.into());
        assert_eq!(
            first_degeneracy_class(GnCaseName::Genus8).unwrap(),
            RingClass::Schubert(cubic)
        );
    }

    #[test]
    fn trivial_virtual_bundle_has_no_first_class() {
        let f = wedge_case().unwrap();
        assert!(virtual_first_chern(&f, &f).is_zero());
    }

    #[test]
    fn porteous_degrees_match_hilbert_degrees() {
        assert_eq!(
            degeneracy_degree(GnCaseName::Genus8).unwrap(),
            BigInt::from(108)
        );
        assert_eq!(
            degeneracy_degree(GnCaseName::Genus7).unwrap(),
            BigInt::from(48)
        );
        assert_eq!(
            degeneracy_degree(GnCaseName::Genus8).unwrap(),
            degree_from_hilbert(3).unwrap()
        );
        assert_eq!(
            degeneracy_degree(GnCaseName::Genus7).unwrap(),
            degree_from_hilbert(2).unwrap()
        );
    }
}
