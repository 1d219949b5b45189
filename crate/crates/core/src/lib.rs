//! Exact determinantal divisors, elementary divisors and Smith forms of square
//! matrices over `Z` and `Z[sqrt(-5)]`, and realizability of divisor triples
//! `(d(A), d(B), d(AB))` for matrix products.

pub mod cli;
pub mod error;
pub mod ideal;
pub mod invariants;
pub mod json;
pub mod matrix;
pub mod oracle;
pub mod ring;
pub mod realize;
pub mod smith;

pub use error::{Error, Result};
pub use ideal::{FracIdeal, Ideal, IdealClass};
pub use invariants::{column_class, det_divisor, divisor_chain, elem_divisor, rank, DivisorChain};
pub use matrix::{subsets, Matrix};
pub use ring::{Ring, RingElem};
