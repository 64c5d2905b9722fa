//! Exact construction and verification of the torus-invariant prime ideals
//! of the quantum matrix algebras `R_q[M_{m,n}]`.
//!
//! The crate is organised bottom-up:
//!
//! * [`qcoeff`]: the coefficient field `Q(q)`.
//! * [`lattice`]: type-A weights, roots and the degree/weight formulas.
//! * [`weyl`]: permutations, Bruhat order and intervals.
//! * [`qmatrix`]: the algebra itself in PBW normal form, and quantum minors.
//! * [`parse`]: reading scalars and elements back from text.
//! * [`groebner`]: left and two-sided Groebner bases in that algebra.
//! * [`linalg`]: exact linear algebra over `Q(q)`.
//! * [`polynormal`]: the generating sequences of the torus-invariant primes
//!   and the verifiers built on top of them.
//! * [`exterior`]: the quantum exterior algebra as a module over `U_q(sl_N)`.
//! * [`certificate`]: the JSON record every verifier returns.
//! * [`parallel`]: the map used to spread work over independent inputs.

pub mod certificate;
pub mod error;
pub mod exterior;
pub mod groebner;
pub mod lattice;
pub mod linalg;
pub mod parallel;
pub mod parse;
pub mod polynormal;
pub mod qcoeff;
pub mod qmatrix;
pub mod weyl;

pub use error::{Error, Result};
