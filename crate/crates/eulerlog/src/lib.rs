//! Exact symbolic-numeric engine for logarithmic integrals and Euler-type
//! sums: enumeration of the index families, relation generation and exact
//! elimination over the rationals, arbitrary-precision numerical evaluation,
//! integer-relation detection, and verification of the full closed-form
//! corpus.

pub mod constants;
pub mod corpus;
pub mod index;
pub mod linalg;
pub mod numeric;

pub mod expand;
pub mod forge;

pub use constants::{Atom, BasisVector, Monomial};
pub use index::{Family, Index};
