//! Strong two-sided Gröbner bases in free associative algebras over the
//! integers, the rationals and squarefree residue rings.

pub mod coeff;
pub mod engine;
pub mod error;
pub mod modlift;
pub mod overlap;
pub mod poly;
pub mod word;

pub use coeff::{CoeffRing, DomainKind, EuclideanCoeffs, Integers, PrimeField, Rationals, ResidueRing};
pub use error::{Error, Result};
pub use poly::{FreeAlgebra, Poly, Polynomial};
pub use word::{Alphabet, Bimonomial, MonomialOrder, OrderKey, OrderKind, Word};
