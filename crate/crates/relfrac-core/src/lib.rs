//! Exact computation of the relative fractional independence number
//! α*(G|H) and the invariants around it: independence numbers of strong
//! products, fractional independence and chromatic numbers, Expand
//! membership, homomorphisms and generalized independence numbers.
//!
//! The crate is `no_std` and needs only `alloc`. Wall-clock limits are
//! supplied by the caller through [`budget::Deadline`].

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod budget;
pub mod error;
pub mod expand;
pub mod genind;
pub mod graph;
pub mod hom;
pub mod lp;
pub mod mis;
pub mod relfrac;
pub mod symmetry;

pub use bitset::VertexSet;
pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::Graph;

pub type Rational = num_rational::BigRational;

/// `p/q` as a [`Rational`].
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
