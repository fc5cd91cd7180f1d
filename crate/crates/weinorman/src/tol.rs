//! Numerical tolerances used across the crate.
//!
//! Everything here operates on small dense matrices (n ≤ a few dozen) with
//! entries of order one, so the defaults are close to f64 machine precision
//! with a few digits of headroom for accumulated rounding.

/// Entrywise checks that hold exactly in real arithmetic
/// (skew-Hermitian symmetry, traces, bracket antisymmetry).
pub const ENTRYWISE: f64 = 1e-12;

/// Structural residuals built from O(n) exact operations:
/// Jacobi identity and bracket-closure reconstruction.
pub const STRUCTURAL: f64 = 1e-10;

/// Rejection threshold for a basis that is not closed under the bracket.
/// Two orders looser than [`STRUCTURAL`] so genuine closure failures are
/// reported as such rather than as tolerance noise.
pub const CLOSURE_REJECT: f64 = 1e-8;

/// Snap a value to the nearest integer when within this distance.
/// Structure constants and characteristic-polynomial coefficients of the
/// built-in bases are small integers; snapping makes table comparisons exact.
pub const INT_SNAP: f64 = 1e-9;

/// Eigenvalues closer than this merge into one root with summed multiplicity.
pub const ROOT_CLUSTER: f64 = 1e-7;

/// Largest acceptable |Re| of an adjoint-generator eigenvalue after
/// refinement; the spectra of a compact algebra are purely imaginary.
pub const SPECTRUM_REAL_PART: f64 = 1e-9;

/// Largest acceptable modulus of the monic characteristic polynomial
/// evaluated at a refined root.
pub const ROOT_RESIDUAL: f64 = 1e-8;

/// Largest acceptable imaginary residue when the β coefficients are
/// recovered from the complex confluent solve.
pub const BETA_IMAG: f64 = 1e-10;

/// Default floor on |det Ξ| below which the parameter ODE is treated as
/// singular and integration aborts.
pub const SINGULARITY_THRESHOLD: f64 = 1e-8;

/// Relative accuracy target of the series matrix exponential.
pub const MATRIX_EXP_REL: f64 = 1e-13;

/// Return `x` rounded to the nearest integer if it is within [`INT_SNAP`]
/// of one, and unchanged otherwise.
pub fn snap_int(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= INT_SNAP {
        r
    } else {
        x
    }
}
