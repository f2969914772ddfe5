//! Exact computer-algebra kernel for Toeplitz principal minors and the
//! substitution involution they induce.
//!
//! The k-by-k Toeplitz matrix `T(k) = (x_{i-j+1})` (with `x_0 = 1` and
//! `x_m = 0` for m < 0) has principal minors `m_k = det T(k)` satisfying
//! `m_k = sum_{i=1..k} (-1)^(i-1) x_i m_{k-i}` with `m_0 = 1`. Substituting
//! `x_k -> m_k` defines a ring endomorphism `phi` of `R[x1..xn]` over any
//! commutative ring `R`, and `phi` composed with itself is the identity.
//!
//! Everything here is exact: coefficients are arbitrary-precision integers
//! (plain or reduced modulo m >= 2), polynomials are kept in a unique
//! canonical form, and no operation ever divides. All values are immutable
//! and all operations are pure, so concurrent use needs no coordination.

pub mod error;
pub mod involution;
mod parse;
pub mod poly;
pub mod ring;
pub mod toeplitz;

pub use error::{Error, Result};
pub use involution::{
    apply_phi, apply_phi_twice, phi_from_table, phi_homomorphism, verify_involution,
    verify_involution_with_table, GeneratorCheck, InvolutionReport,
};
pub use poly::{Homomorphism, Monomial, Polynomial};
pub use ring::{RingElement, RingSpec};
pub use toeplitz::{
    build_toeplitz, det_berkowitz, det_leibniz, first_column_det, minor_recursive, minor_table,
    recover_generator, MinorTable, PolyMatrix, DET_LEIBNIZ_MAX_SIZE,
};
