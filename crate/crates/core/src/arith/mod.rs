//! Exact scalars (rationals, prime-field residues, cyclotomic surrogates) and dense
//! exact linear algebra.

pub mod cyclotomic;
pub mod matrix;
pub mod modp;
pub mod scalar;

pub use cyclotomic::CyclotomicEmbedding;
pub use matrix::{kernel_basis, rank, Matrix};
pub use modp::{is_prime, sample_prime, Modulus};
pub use scalar::{Backend, Fp, Rational, Scalar};
