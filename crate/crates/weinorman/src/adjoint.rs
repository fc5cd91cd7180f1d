//! Closed-form exponentials of adjoint generators.
//!
//! By the Cayley-Hamilton theorem an n×n matrix satisfies
//! `M^n = a₀I + a₁M + … + a_{n−1}M^{n−1}`, so its exponential collapses to a
//! degree-(n−1) matrix polynomial
//!
//! ```text
//! e^{γM} = Σ_{k=0}^{n−1} β_k(γ) M^k .
//! ```
//!
//! The β coefficients are pinned down by the spectrum: for every eigenvalue
//! `s` of multiplicity `m` the polynomial `Σ β_k s^k` must osculate `e^{γs}`
//! to order `m−1`, i.e. `d^j/ds^j [Σ_k β_k s^k] = γ^j e^{γs}` at `s` for
//! `j = 0..m−1`. Stacking these conditions gives a confluent Vandermonde
//! system, solved once per spectrum in complex arithmetic; the imaginary
//! parts of β cancel and are dropped after an explicit residue check.
//!
//! [`GeneratorExp`] caches the powers, the spectrum and the factored
//! confluent matrix of one generator so that repeated evaluations (as in the
//! Ξ assembly along an ODE trajectory) only pay for one triangular solve.

use std::collections::BTreeMap;

use nalgebra::linalg::{Schur, LU};
use nalgebra::{DMatrix, DVector, Dyn};
use num_complex::Complex64;

use crate::algebra::{AdjointGenerator, StructureTensor};
use crate::tol;
use crate::{Error, Result};

/// Eigenvalue data of a matrix: the Cayley-Hamilton coefficients and the
/// clustered roots of the characteristic polynomial with multiplicities.
#[derive(Debug, Clone)]
pub struct Spectrum {
    char_poly: Vec<f64>,
    roots: Vec<(Complex64, usize)>,
}

impl Spectrum {
    /// Coefficients `a₀..a_{n−1}` of `M^n = a₀I + a₁M + … + a_{n−1}M^{n−1}`.
    pub fn char_poly(&self) -> &[f64] {
        &self.char_poly
    }

    /// Coefficients `q₀..q_{n−1}` of the monic characteristic polynomial
    /// `det(sI − M) = s^n + q_{n−1}s^{n−1} + … + q₀`; these are `−a_k`.
    pub fn monic_coefficients(&self) -> Vec<f64> {
        self.char_poly.iter().map(|a| -a).collect()
    }

    /// Clustered roots with multiplicities, sorted by (Im, Re).
    pub fn roots(&self) -> &[(Complex64, usize)] {
        &self.roots
    }

    /// Matrix order n = Σ multiplicities.
    pub fn order(&self) -> usize {
        self.char_poly.len()
    }
}

/// Cayley-Hamilton coefficients of a real square matrix by the
/// Faddeev-LeVerrier recursion, with integer snapping.
pub fn characteristic_polynomial(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let n = m.nrows();
    // det(sI - M) = s^n + q_{n-1} s^{n-1} + ... + q_0 via
    //   B_0 = I,  q_{n-k} = -tr(M B_{k-1})/k,  B_k = M B_{k-1} + q_{n-k} I.
    let mut q = vec![0.0; n];
    let mut b = DMatrix::<f64>::identity(n, n);
    for k in 1..=n {
        let mb = m * &b;
        let qk = -mb.trace() / k as f64;
        q[n - k] = qk;
        b = mb;
        for d in 0..n {
            b[(d, d)] += qk;
        }
    }
    Ok(q.iter().map(|&qk| tol::snap_int(-qk)).collect())
}

/// Evaluate the monic characteristic polynomial and its derivative at `s`.
fn monic_eval(a: &[f64], s: Complex64) -> (Complex64, Complex64) {
    let n = a.len();
    // p(s) = s^n - a_{n-1} s^{n-1} - ... - a_0
    let mut p = Complex64::new(1.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for k in (0..n).rev() {
        dp = dp * s + p;
        p = p * s - a[k];
    }
    (p, dp)
}

/// Spectrum of an arbitrary real square matrix: Schur eigenvalues, one
/// Newton polish per root on the characteristic polynomial, then clustering
/// at [`tol::ROOT_CLUSTER`] to assign multiplicities.
pub fn spectrum(m: &DMatrix<f64>) -> Result<Spectrum> {
    let a = characteristic_polynomial(m)?;
    let n = m.nrows();
    if n == 0 {
        return Err(Error::NotSquare { rows: 0, cols: 0 });
    }
    let schur = Schur::try_new(m.clone(), 1e-14, 2000)
        .ok_or_else(|| Error::EigensolveFailed("Schur iteration did not converge".into()))?;
    let raw = schur.complex_eigenvalues();

    let mut polished: Vec<Complex64> = Vec::with_capacity(n);
    for &s0 in raw.iter() {
        let (p, dp) = monic_eval(&a, s0);
        // Skip the polish near a multiple root, where p' is as small as p.
        let s = if dp.norm() > 1e-3 && p.norm() < dp.norm() {
            s0 - p / dp
        } else {
            s0
        };
        polished.push(s);
    }
    polished.sort_by(|x, y| {
        (x.im, x.re)
            .partial_cmp(&(y.im, y.re))
            .expect("eigenvalues are finite")
    });

    let mut roots: Vec<(Complex64, usize)> = Vec::new();
    for s in polished {
        match roots.last_mut() {
            Some((r, mult)) if (s - *r).norm() <= tol::ROOT_CLUSTER => {
                // Running mean keeps the cluster representative centered.
                *r = (*r * (*mult as f64) + s) / (*mult as f64 + 1.0);
                *mult += 1;
            }
            _ => roots.push((s, 1)),
        }
    }

    let residuals: Vec<f64> = roots
        .iter()
        .map(|(s, _)| monic_eval(&a, *s).0.norm())
        .collect();
    if let Some(worst) = residuals.iter().cloned().fold(None::<f64>, |acc, r| {
        Some(acc.map_or(r, |a| a.max(r)))
    }) {
        if worst > tol::ROOT_RESIDUAL {
            return Err(Error::EigensolveFailed(format!(
                "root residuals {residuals:?} exceed {:.1e}",
                tol::ROOT_RESIDUAL
            )));
        }
    }
    Ok(Spectrum {
        char_poly: a,
        roots,
    })
}

/// Spectrum of an adjoint generator of a compact algebra: as [`spectrum`],
/// additionally enforcing that the eigenvalues are purely imaginary (to
/// [`tol::SPECTRUM_REAL_PART`]) and occur in conjugate pairs of equal
/// multiplicity, which are then symmetrized exactly.
pub fn spectrum_adjoint(m: &DMatrix<f64>) -> Result<Spectrum> {
    let mut spec = spectrum(m)?;
    for (s, _) in &mut spec.roots {
        if s.re.abs() > tol::SPECTRUM_REAL_PART {
            return Err(Error::EigensolveFailed(format!(
                "eigenvalue {s} has real part beyond {:.1e}",
                tol::SPECTRUM_REAL_PART
            )));
        }
        *s = Complex64::new(0.0, s.im);
        if s.im.abs() <= tol::ROOT_CLUSTER {
            *s = Complex64::new(0.0, 0.0);
        }
    }
    // Pair +iw with -iw and average the magnitudes.
    let mut out = spec.roots.clone();
    for idx in 0..out.len() {
        let (s, mult) = out[idx];
        if s.im <= 0.0 {
            continue;
        }
        let partner = out
            .iter()
            .position(|(r, _)| (r.im + s.im).abs() <= tol::ROOT_CLUSTER && r.im < 0.0);
        match partner {
            Some(p) if out[p].1 == mult => {
                let w = (s.im - out[p].0.im) / 2.0;
                out[idx].0 = Complex64::new(0.0, w);
                out[p].0 = Complex64::new(0.0, -w);
            }
            _ => {
                return Err(Error::EigensolveFailed(format!(
                    "eigenvalue {s} (multiplicity {mult}) has no conjugate partner"
                )))
            }
        }
    }
    out.sort_by(|x, y| {
        (x.0.im, x.0.re)
            .partial_cmp(&(y.0.im, y.0.re))
            .expect("eigenvalues are finite")
    });
    spec.roots = out;
    Ok(spec)
}

/// The coefficients of `e^{γM}` as a polynomial in `M`.
#[derive(Debug, Clone)]
pub struct BetaSet {
    gamma: f64,
    beta: Vec<f64>,
}

impl BetaSet {
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// β₀..β_{n−1}.
    pub fn coefficients(&self) -> &[f64] {
        &self.beta
    }
}

/// Build the confluent Vandermonde matrix of a spectrum: one row per
/// (root, derivative order), entry `(k)_d s^{k−d}` in column k.
fn confluent_matrix(spec: &Spectrum) -> DMatrix<Complex64> {
    let n = spec.order();
    let mut mat = DMatrix::<Complex64>::zeros(n, n);
    let mut row = 0;
    for &(s, mult) in &spec.roots {
        for d in 0..mult {
            for k in d..n {
                let mut fall = 1.0;
                for t in 0..d {
                    fall *= (k - t) as f64;
                }
                mat[(row, k)] = s.powu((k - d) as u32) * fall;
            }
            row += 1;
        }
    }
    debug_assert_eq!(row, n);
    mat
}

fn confluent_rhs(spec: &Spectrum, gamma: f64) -> DVector<Complex64> {
    let n = spec.order();
    let mut rhs = DVector::<Complex64>::zeros(n);
    let mut row = 0;
    for &(s, mult) in &spec.roots {
        let e = (s * gamma).exp();
        for d in 0..mult {
            rhs[row] = e * gamma.powi(d as i32);
            row += 1;
        }
    }
    rhs
}

fn solve_beta(
    lu: &LU<Complex64, Dyn, Dyn>,
    spec: &Spectrum,
    gamma: f64,
    cond_hint: f64,
) -> Result<BetaSet> {
    let rhs = confluent_rhs(spec, gamma);
    let sol = lu
        .solve(&rhs)
        .ok_or(Error::SingularConfluentSystem { cond: cond_hint })?;
    let residue = sol.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if residue > tol::BETA_IMAG {
        return Err(Error::ComplexResidue { residue });
    }
    Ok(BetaSet {
        gamma,
        beta: sol.iter().map(|z| z.re).collect(),
    })
}

/// Estimate the 1-norm condition of the confluent matrix; used only to
/// decorate the singular-system error.
fn condition_estimate(mat: &DMatrix<Complex64>, lu: &LU<Complex64, Dyn, Dyn>) -> f64 {
    let n = mat.nrows();
    let norm_a = mat
        .column_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut norm_inv = 0.0f64;
    for j in 0..n {
        let mut e = DVector::<Complex64>::zeros(n);
        e[j] = Complex64::new(1.0, 0.0);
        if let Some(col) = lu.solve(&e) {
            norm_inv = norm_inv.max(col.iter().map(|z| z.norm()).sum::<f64>());
        } else {
            return f64::INFINITY;
        }
    }
    norm_a * norm_inv
}

/// Solve for the β of one spectrum at one γ.
pub fn beta_coefficients(spec: &Spectrum, gamma: f64) -> Result<BetaSet> {
    let mat = confluent_matrix(spec);
    let lu = LU::new(mat.clone());
    let cond = condition_estimate(&mat, &lu);
    solve_beta(&lu, spec, gamma, cond)
}

/// `e^{γM} = Σ β_k M^k` with powers by repeated multiplication.
///
/// `spec` must be the spectrum of `m`.
pub fn exp_adjoint(m: &DMatrix<f64>, spec: &Spectrum, gamma: f64) -> Result<DMatrix<f64>> {
    let beta = beta_coefficients(spec, gamma)?;
    let n = m.nrows();
    let mut out = DMatrix::<f64>::identity(n, n) * beta.coefficients()[0];
    let mut power = DMatrix::<f64>::identity(n, n);
    for &bk in &beta.coefficients()[1..] {
        power = &power * m;
        out += &power * bk;
    }
    Ok(out)
}

/// A generator equipped with everything needed to evaluate `e^{γ ad_{A_i}}`
/// cheaply for many γ: the powers `M_i^0..M_i^{n−1}`, the spectrum, and the
/// factored confluent system.
#[derive(Debug, Clone)]
pub struct GeneratorExp {
    index: usize,
    powers: Vec<DMatrix<f64>>,
    spectrum: Spectrum,
    lu: LU<Complex64, Dyn, Dyn>,
    cond: f64,
}

impl GeneratorExp {
    pub fn new(generator: &AdjointGenerator) -> Result<Self> {
        let m = generator.matrix();
        let spectrum = spectrum_adjoint(m)?;
        let n = m.nrows();
        let mut powers = Vec::with_capacity(n);
        powers.push(DMatrix::identity(n, n));
        for k in 1..n {
            let next = &powers[k - 1] * m;
            powers.push(next);
        }
        let mat = confluent_matrix(&spectrum);
        let lu = LU::new(mat.clone());
        let cond = condition_estimate(&mat, &lu);
        Ok(Self {
            index: generator.index(),
            powers,
            spectrum,
            lu,
            cond,
        })
    }

    /// 1-based generator index.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn beta(&self, gamma: f64) -> Result<BetaSet> {
        solve_beta(&self.lu, &self.spectrum, gamma, self.cond)
    }

    /// `e^{γ M_i}`.
    pub fn eval(&self, gamma: f64) -> Result<DMatrix<f64>> {
        let beta = self.beta(gamma)?;
        let n = self.powers[0].nrows();
        let mut out = DMatrix::<f64>::zeros(n, n);
        for (bk, p) in beta.coefficients().iter().zip(&self.powers) {
            if *bk != 0.0 {
                out += p * *bk;
            }
        }
        Ok(out)
    }
}

/// Ordered product `e^{γ₁ ad_{A_{i₁}}} · e^{γ₂ ad_{A_{i₂}}} · …` for 1-based
/// factor indices, left to right. The empty product is the identity.
pub fn exp_adjoint_product(
    tensor: &StructureTensor,
    factors: &[(usize, f64)],
) -> Result<DMatrix<f64>> {
    let n = tensor.dim();
    let mut cache: BTreeMap<usize, GeneratorExp> = BTreeMap::new();
    let mut out = DMatrix::<f64>::identity(n, n);
    for &(i, gamma) in factors {
        if !cache.contains_key(&i) {
            cache.insert(i, GeneratorExp::new(&tensor.adjoint_generator(i)?)?);
        }
        out = &out * cache[&i].eval(gamma)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LieBasis;
    use crate::expm::matrix_exp;
    use rand::{Rng, SeedableRng};

    fn su2_tensor() -> StructureTensor {
        LieBasis::builtin("su2_pauli_half")
            .unwrap()
            .structure_tensor()
            .unwrap()
    }

    fn su3_tensor() -> StructureTensor {
        LieBasis::builtin("su3_cartan")
            .unwrap()
            .structure_tensor()
            .unwrap()
    }

    /// β by summing the power series after Cayley-Hamilton reduction:
    /// carry the coefficient vector of M^j over {M^0..M^{n-1}} and
    /// accumulate γ^j/j! times it. Independent of the confluent solve.
    fn beta_via_recurrence(a: &[f64], gamma: f64, terms: usize) -> Vec<f64> {
        let n = a.len();
        let mut beta = vec![0.0; n];
        let mut cur = vec![0.0; n];
        cur[0] = 1.0;
        let mut coeff = 1.0; // gamma^j / j!
        for j in 0..terms {
            for k in 0..n {
                beta[k] += coeff * cur[k];
            }
            let carry = cur[n - 1];
            for k in (1..n).rev() {
                cur[k] = cur[k - 1] + carry * a[k];
            }
            cur[0] = carry * a[0];
            coeff *= gamma / (j + 1) as f64;
        }
        beta
    }

    #[test]
    fn char_poly_su2_is_s_cubed_plus_s() {
        let c = su2_tensor();
        for i in 1..=3 {
            let m = c.adjoint_generator(i).unwrap();
            // det(sI - M) = s^3 + s  =>  a = (0, -1, 0)
            assert_eq!(characteristic_polynomial(m.matrix()).unwrap(), vec![0.0, -1.0, 0.0]);
        }
    }

    #[test]
    fn char_poly_zero_matrix() {
        let z = DMatrix::<f64>::zeros(5, 5);
        assert_eq!(characteristic_polynomial(&z).unwrap(), vec![0.0; 5]);
    }

    #[test]
    fn char_poly_su3_derived_generators() {
        // Every adjoint generator of the derived su(3) tensor has
        // det(sI - M) = s^8 + 6s^6 + 9s^4 + 4s^2.
        let c = su3_tensor();
        for i in 1..=8 {
            let m = c.adjoint_generator(i).unwrap();
            let a = characteristic_polynomial(m.matrix()).unwrap();
            assert_eq!(a, vec![0.0, 0.0, -4.0, 0.0, -9.0, 0.0, -6.0, 0.0], "generator {i}");
        }
    }

    #[test]
    fn spectrum_su2_zero_plus_minus_i() {
        let c = su2_tensor();
        for i in 1..=3 {
            let m = c.adjoint_generator(i).unwrap();
            let s = spectrum_adjoint(m.matrix()).unwrap();
            let roots = s.roots();
            assert_eq!(roots.len(), 3);
            assert_eq!(roots[0], (Complex64::new(0.0, -1.0), 1));
            assert_eq!(roots[1], (Complex64::new(0.0, 0.0), 1));
            assert_eq!(roots[2], (Complex64::new(0.0, 1.0), 1));
        }
    }

    #[test]
    fn spectrum_clusters_multiplicities() {
        let c = su3_tensor();
        let m = c.adjoint_generator(1).unwrap();
        let s = spectrum_adjoint(m.matrix()).unwrap();
        let mults: Vec<(f64, usize)> = s.roots().iter().map(|(r, m)| (r.im, *m)).collect();
        assert_eq!(mults, vec![(-2.0, 1), (-1.0, 2), (0.0, 2), (1.0, 2), (2.0, 1)]);
    }

    #[test]
    fn beta_at_zero_is_identity_coefficients() {
        let c = su3_tensor();
        let m = c.adjoint_generator(5).unwrap();
        let s = spectrum_adjoint(m.matrix()).unwrap();
        let b = beta_coefficients(&s, 0.0).unwrap();
        assert!((b.coefficients()[0] - 1.0).abs() < 1e-14);
        for &bk in &b.coefficients()[1..] {
            assert!(bk.abs() < 1e-14);
        }
    }

    #[test]
    fn beta_matches_recurrence_oracle() {
        for (tensor, idx) in [(su2_tensor(), 1), (su3_tensor(), 1), (su3_tensor(), 5)] {
            let m = tensor.adjoint_generator(idx).unwrap();
            let s = spectrum_adjoint(m.matrix()).unwrap();
            for gamma in [-1.5, -0.3, 0.2, 0.9, 2.0] {
                let b = beta_coefficients(&s, gamma).unwrap();
                let oracle = beta_via_recurrence(s.char_poly(), gamma, 60);
                for (k, (x, y)) in b.coefficients().iter().zip(&oracle).enumerate() {
                    assert!(
                        (x - y).abs() < 1e-10,
                        "idx {idx} gamma {gamma} beta_{k}: {x} vs {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn exp_adjoint_su2_rotation_blocks() {
        let c = su2_tensor();
        let m1 = c.adjoint_generator(1).unwrap();
        let s = spectrum_adjoint(m1.matrix()).unwrap();
        for gamma in [-2.0, 0.4, 1.3] {
            let e = exp_adjoint(m1.matrix(), &s, gamma).unwrap();
            assert!((e[(0, 0)] - 1.0).abs() < 1e-12);
            assert!((e[(1, 1)] - gamma.cos()).abs() < 1e-12);
            assert!((e[(1, 2)] + gamma.sin()).abs() < 1e-12);
            assert!((e[(2, 1)] - gamma.sin()).abs() < 1e-12);
        }
    }

    #[test]
    fn exp_adjoint_gamma_zero_is_identity() {
        let c = su3_tensor();
        let m = c.adjoint_generator(3).unwrap();
        let s = spectrum_adjoint(m.matrix()).unwrap();
        let e = exp_adjoint(m.matrix(), &s, 0.0).unwrap();
        assert!((e - DMatrix::<f64>::identity(8, 8)).amax() < 1e-14);
    }

    #[test]
    fn exp_adjoint_matches_series_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for tensor in [su2_tensor(), su3_tensor()] {
            for i in 1..=tensor.dim() {
                let gexp = GeneratorExp::new(&tensor.adjoint_generator(i).unwrap()).unwrap();
                let m = tensor.adjoint_generator(i).unwrap().into_matrix();
                for _ in 0..5 {
                    let gamma: f64 = rng.gen_range(-3.0..3.0);
                    let closed = gexp.eval(gamma).unwrap();
                    let series = matrix_exp(&(m.clone() * gamma)).unwrap();
                    let err = (&closed - &series).amax();
                    assert!(err < 1e-10, "generator {i} gamma {gamma}: err {err}");
                }
            }
        }
    }

    #[test]
    fn one_parameter_group_law() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let tensor = su3_tensor();
        for i in 1..=8 {
            let gexp = GeneratorExp::new(&tensor.adjoint_generator(i).unwrap()).unwrap();
            for _ in 0..10 {
                let g1: f64 = rng.gen_range(-2.0..2.0);
                let g2: f64 = rng.gen_range(-2.0..2.0);
                let lhs = gexp.eval(g1).unwrap() * gexp.eval(g2).unwrap();
                let rhs = gexp.eval(g1 + g2).unwrap();
                assert!((lhs - rhs).amax() < 1e-10);
            }
        }
    }

    #[test]
    fn exp_preserves_bracket() {
        // e^{ad} is an automorphism: exp([d, b]) = [exp d, exp b].
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for tensor in [su2_tensor(), su3_tensor()] {
            let n = tensor.dim();
            for _ in 0..20 {
                let i = rng.gen_range(1..=n);
                let gamma: f64 = rng.gen_range(-2.0..2.0);
                let e = GeneratorExp::new(&tensor.adjoint_generator(i).unwrap())
                    .unwrap()
                    .eval(gamma)
                    .unwrap();
                let d = DVector::from_fn(n, |_, _| rng.gen_range(-1.0..1.0));
                let b = DVector::from_fn(n, |_, _| rng.gen_range(-1.0..1.0));
                let lhs = &e * tensor.adjoint_action(&d, &b).unwrap();
                let rhs = tensor.adjoint_action(&(&e * d), &(&e * b)).unwrap();
                assert!((lhs - rhs).amax() < 1e-9);
            }
        }
    }

    #[test]
    fn exp_determinant_is_one() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let tensor = su3_tensor();
        for i in 1..=8 {
            let gexp = GeneratorExp::new(&tensor.adjoint_generator(i).unwrap()).unwrap();
            let gamma: f64 = rng.gen_range(-2.5..2.5);
            let det = gexp.eval(gamma).unwrap().lu().determinant();
            assert!((det - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn product_empty_and_inverse() {
        let tensor = su2_tensor();
        let id = exp_adjoint_product(&tensor, &[]).unwrap();
        assert_eq!(id, DMatrix::identity(3, 3));
        let p = exp_adjoint_product(&tensor, &[(2, 0.8), (2, -0.8)]).unwrap();
        assert!((p - DMatrix::<f64>::identity(3, 3)).amax() <= 1e-12);
    }

    #[test]
    fn product_su2_mixed_entry() {
        // Product of the A1 and A2 rotations: entry (1,3) is sin(g2).
        let tensor = su2_tensor();
        let (g1, g2) = (0.6, -1.1);
        let p = exp_adjoint_product(&tensor, &[(1, g1), (2, g2)]).unwrap();
        assert!((p[(0, 2)] - g2.sin()).abs() < 1e-12);
    }
}
