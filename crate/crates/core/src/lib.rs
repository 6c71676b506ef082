//! Exact bookkeeping for polarized Hilbert squares of K3 surfaces: Mukai
//! lattice arithmetic, Hilbert functions, Betti tables, Borel-Weil-Bott
//! cohomology on Grassmannians and quadrics, Gulliksen-Negard resolutions,
//! and intersection numbers of degeneracy loci.

pub mod arith;
pub mod betti;
pub mod bwb;
pub mod error;
pub mod gn;
pub mod hilbert;
pub mod intersect;
pub mod json;
pub mod lattice;
pub mod report;
pub mod selftest;
pub mod weyl;

pub use error::{Error, Result};
