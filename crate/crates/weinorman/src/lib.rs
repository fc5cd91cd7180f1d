//! Product-of-exponentials coordinates for time-dependent evolution on SU(N).
//!
//! A time-dependent generator `H(t) = Σ uᵘ(t) A_µ` built on a skew-Hermitian
//! basis `A_1..A_n` of su(N) drives a unitary flow `U̇ = H(t) U`. This crate
//! converts that flow into Wei-Norman form, i.e. an ordered product of
//! one-parameter subgroups
//!
//! ```text
//! U(t) = exp(γ¹(t) A_σ(1)) · exp(γ²(t) A_σ(2)) · … · exp(γⁿ(t) A_σ(n))
//! ```
//!
//! by deriving the structure constants of the basis, building the adjoint
//! generators `M_i` and their closed-form exponentials (Cayley-Hamilton /
//! spectral method), assembling the Wei-Norman matrix Ξ(γ), and integrating
//! the parameter ODE `γ̇ = Ξ(γ)⁻¹ u(t)`.
//!
//! The crate ships two built-in bases (`su2_pauli_half`, `su3_cartan`), a
//! loader for user-supplied bases, a reference time-ordered propagator for
//! cross-validation, and a golden-value suite checking every closed form
//! against the classical su(2)/su(3) tables.

pub mod adjoint;
pub mod algebra;
pub mod chart;
mod error;
pub mod expm;
pub mod golden;
pub mod io;
pub mod propagation;
pub mod tol;

pub use error::{Error, Result};
