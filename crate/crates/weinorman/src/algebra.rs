//! Lie-algebra bases, structure constants and adjoint generators.
//!
//! A [`LieBasis`] holds an ordered set of skew-Hermitian traceless N×N
//! matrices `A_1..A_n`. Its multiplication table is the structure tensor
//! `c^k_{ij}` defined by `[A_i, A_j] = Σ_k c^k_{ij} A_k`, solved here from
//! the vectorized linear system so that user-supplied (including
//! non-orthogonal) bases work. The adjoint generator of `A_i` is the real
//! n×n matrix `M_i` with `(M_i)_{kj} = c^k_{ij}`; it acts on coordinate
//! vectors the way `ad_{A_i} = [A_i, ·]` acts on algebra elements.
//!
//! All public generator indices are 1-based, matching the conventional
//! `c^k_{ij}` notation; storage is 0-based internally.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::tol;
use crate::{Error, Result};

/// An ordered basis of a matrix Lie algebra in the defining representation.
#[derive(Debug, Clone)]
pub struct LieBasis {
    label: String,
    dim_defining: usize,
    generators: Vec<DMatrix<Complex64>>,
}

impl LieBasis {
    /// Validate and wrap a set of generators.
    ///
    /// Checks that every generator is N×N, skew-Hermitian and traceless to
    /// [`tol::ENTRYWISE`], and that the set is linearly independent over the
    /// reals (numerical rank of the n×2N² vectorization matrix equals n).
    pub fn new(
        label: impl Into<String>,
        dim_defining: usize,
        generators: Vec<DMatrix<Complex64>>,
    ) -> Result<Self> {
        let label = label.into();
        let n_def = dim_defining;
        if n_def == 0 {
            return Err(Error::InvalidBasis("defining dimension must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidBasis("basis must contain at least one generator".into()));
        }
        for (idx, g) in generators.iter().enumerate() {
            let i = idx + 1;
            if g.nrows() != n_def || g.ncols() != n_def {
                return Err(Error::InvalidBasis(format!(
                    "generator {i} is {}x{}, expected {n_def}x{n_def}",
                    g.nrows(),
                    g.ncols()
                )));
            }
            let skew = g + g.adjoint();
            let worst = skew.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if worst > tol::ENTRYWISE {
                return Err(Error::InvalidBasis(format!(
                    "generator {i} is not skew-Hermitian (residual {worst:.3e})"
                )));
            }
            let tr = g.trace().norm();
            if tr > tol::ENTRYWISE {
                return Err(Error::InvalidBasis(format!(
                    "generator {i} is not traceless (|trace| = {tr:.3e})"
                )));
            }
        }
        let vec_mat = vectorization_matrix(&generators);
        let rank = vec_mat.rank(1e-10);
        if rank != generators.len() {
            return Err(Error::InvalidBasis(format!(
                "generators are linearly dependent (rank {rank} < {})",
                generators.len()
            )));
        }
        Ok(Self {
            label,
            dim_defining: n_def,
            generators,
        })
    }

    /// One of the built-in bases: `su2_pauli_half` or `su3_cartan`.
    ///
    /// `su2_pauli_half` is the Pauli basis scaled so that the bracket table
    /// is fully cyclic with unit constants, `[A_1, A_2] = A_3` etc.; that
    /// normalization is `A_j = σ_j / 2i`.
    ///
    /// `su3_cartan` realizes su(3) as the compact real form of the rank-two
    /// A₂ algebra in its Cartan presentation, ordered as
    /// `iH₁, iH₂, X₁₂, Y₁₂, X₁₃, Y₁₃, X₂₃, Y₂₃` where `X_{ab}` is the real
    /// skew matrix `E_{ab} − E_{ba}` and `Y_{ab} = i(E_{ab} + E_{ba})`.
    pub fn builtin(label: &str) -> Result<Self> {
        match label {
            "su2_pauli_half" => Self::new(label, 2, su2_pauli_half_generators()),
            "su3_cartan" => Self::new(label, 3, su3_cartan_generators()),
            other => Err(Error::UnsupportedBasis(other.to_string())),
        }
    }

    /// Labels accepted by [`LieBasis::builtin`].
    pub const BUILTIN_LABELS: [&'static str; 2] = ["su2_pauli_half", "su3_cartan"];

    pub fn label(&self) -> &str {
        &self.label
    }

    /// N, the size of the defining representation.
    pub fn dim_defining(&self) -> usize {
        self.dim_defining
    }

    /// n, the number of generators.
    pub fn dim_algebra(&self) -> usize {
        self.generators.len()
    }

    /// Generator `A_i`, 1-based.
    pub fn generator(&self, i: usize) -> Result<&DMatrix<Complex64>> {
        self.generators
            .get(i.wrapping_sub(1))
            .ok_or(Error::IndexOutOfRange {
                index: i,
                n: self.generators.len(),
            })
    }

    pub fn generators(&self) -> &[DMatrix<Complex64>] {
        &self.generators
    }

    /// Materialize `Σ_µ bᵘ A_µ` from a coordinate vector.
    pub fn element(&self, coords: &DVector<f64>) -> Result<DMatrix<Complex64>> {
        if coords.len() != self.generators.len() {
            return Err(Error::DimensionMismatch {
                expected: self.generators.len(),
                got: coords.len(),
            });
        }
        let n = self.dim_defining;
        let mut out = DMatrix::<Complex64>::zeros(n, n);
        for (b, g) in coords.iter().zip(&self.generators) {
            out += g * Complex64::new(*b, 0.0);
        }
        Ok(out)
    }

    /// Derive the structure tensor of this basis.
    ///
    /// Each bracket `[A_i, A_j]` is expanded over the basis by a least-squares
    /// solve against the vectorized generators; the residual of that solve is
    /// exactly the Frobenius distance between the bracket and its expansion.
    /// Coefficients within [`tol::INT_SNAP`] of an integer are snapped, and
    /// antisymmetry in (i, j) holds exactly by construction.
    pub fn structure_tensor(&self) -> Result<StructureTensor> {
        let n = self.generators.len();
        let vec_mat = vectorization_matrix(&self.generators);
        let svd = vec_mat.svd(true, true);

        let mut c = vec![0.0; n * n * n];
        let mut worst = (0usize, 0usize, 0.0f64);
        for i in 0..n {
            for j in (i + 1)..n {
                let bracket = &self.generators[i] * &self.generators[j]
                    - &self.generators[j] * &self.generators[i];
                let w = vectorize(&bracket);
                let x = svd
                    .solve(&w, 1e-12)
                    .map_err(|e| Error::InvalidBasis(e.to_string()))?;
                let residual = (&vec_mat * &x - &w).norm();
                if residual > worst.2 {
                    worst = (i + 1, j + 1, residual);
                }
                for k in 0..n {
                    let v = tol::snap_int(x[k]);
                    c[tensor_offset(n, k, i, j)] = v;
                    c[tensor_offset(n, k, j, i)] = -v;
                }
            }
        }
        if worst.2 > tol::CLOSURE_REJECT {
            return Err(Error::BasisNotClosed {
                i: worst.0,
                j: worst.1,
                residual: worst.2,
            });
        }
        Ok(StructureTensor { n, c })
    }
}

/// The structure constants `c^k_{ij}` of an n-dimensional algebra,
/// antisymmetric in the lower pair.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureTensor {
    n: usize,
    /// Row-major over (k, i, j).
    c: Vec<f64>,
}

#[inline]
fn tensor_offset(n: usize, k: usize, i: usize, j: usize) -> usize {
    (k * n + i) * n + j
}

impl StructureTensor {
    /// Build a tensor from 1-based nonzero triplets `(k, i, j, value)` with
    /// `i < j`; the `j > i` mirror is filled in by antisymmetry.
    ///
    /// Only structural validity (index ranges, no diagonal entries, no
    /// conflicting duplicates) is enforced here; whether the tensor satisfies
    /// the Jacobi identity can be inspected with
    /// [`StructureTensor::jacobi_residual`].
    pub fn from_triplets(n: usize, triplets: &[(usize, usize, usize, f64)]) -> Result<Self> {
        let mut c = vec![0.0; n * n * n];
        for &(k, i, j, v) in triplets {
            for idx in [k, i, j] {
                if idx == 0 || idx > n {
                    return Err(Error::IndexOutOfRange { index: idx, n });
                }
            }
            if i == j {
                return Err(Error::InvalidConfig(format!(
                    "structure constant c^{k}_{{{i}{j}}} must vanish on the diagonal"
                )));
            }
            let (k, i, j) = (k - 1, i - 1, j - 1);
            let off = tensor_offset(n, k, i, j);
            if c[off] != 0.0 && c[off] != v {
                return Err(Error::InvalidConfig(format!(
                    "conflicting values for c^{}_{{{}{}}}",
                    k + 1,
                    i + 1,
                    j + 1
                )));
            }
            c[off] = v;
            c[tensor_offset(n, k, j, i)] = -v;
        }
        Ok(Self { n, c })
    }

    /// Algebra dimension n.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// `c^k_{ij}` with 1-based indices.
    pub fn constant(&self, k: usize, i: usize, j: usize) -> f64 {
        assert!(
            k >= 1 && k <= self.n && i >= 1 && i <= self.n && j >= 1 && j <= self.n,
            "structure-constant index out of range"
        );
        self.c[tensor_offset(self.n, k - 1, i - 1, j - 1)]
    }

    /// The adjoint generator `M_i` with `(M_i)_{kj} = c^k_{ij}`, 1-based `i`.
    pub fn adjoint_generator(&self, i: usize) -> Result<AdjointGenerator> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let i0 = i - 1;
        let matrix = DMatrix::from_fn(self.n, self.n, |k, j| {
            self.c[tensor_offset(self.n, k, i0, j)]
        });
        Ok(AdjointGenerator { index: i, matrix })
    }

    /// Coordinates of `[D, B]` for coordinate vectors `d`, `b`.
    pub fn adjoint_action(&self, d: &DVector<f64>, b: &DVector<f64>) -> Result<DVector<f64>> {
        if d.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: d.len(),
            });
        }
        if b.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: b.len(),
            });
        }
        let mut out = DVector::zeros(self.n);
        for k in 0..self.n {
            let mut acc = 0.0;
            for nu in 0..self.n {
                if d[nu] == 0.0 {
                    continue;
                }
                for mu in 0..self.n {
                    acc += d[nu] * self.c[tensor_offset(self.n, k, nu, mu)] * b[mu];
                }
            }
            out[k] = acc;
        }
        Ok(out)
    }

    /// Worst absolute Jacobi-identity residual
    /// `Σ_µ (c^µ_{ij} c^l_{µk} + c^µ_{jk} c^l_{µi} + c^µ_{ki} c^l_{µj})`
    /// over all index quadruples.
    pub fn jacobi_residual(&self) -> f64 {
        let n = self.n;
        let c = |k: usize, i: usize, j: usize| self.c[tensor_offset(n, k, i, j)];
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut s = 0.0;
                        for mu in 0..n {
                            s += c(mu, i, j) * c(l, mu, k)
                                + c(mu, j, k) * c(l, mu, i)
                                + c(mu, k, i) * c(l, mu, j);
                        }
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// Nonzero entries as 1-based `(k, i, j, value)` triplets with `i < j`,
    /// sorted by `(i, j, k)`.
    pub fn nonzero_triplets(&self) -> Vec<(usize, usize, usize, f64)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                for k in 0..self.n {
                    let v = self.c[tensor_offset(self.n, k, i, j)];
                    if v != 0.0 {
                        out.push((k + 1, i + 1, j + 1, v));
                    }
                }
            }
        }
        out.sort_by(|a, b| (a.1, a.2, a.0).cmp(&(b.1, b.2, b.0)));
        out
    }
}

/// The real n×n matrix of `ad_{A_i}` in basis coordinates.
#[derive(Debug, Clone)]
pub struct AdjointGenerator {
    index: usize,
    matrix: DMatrix<f64>,
}

impl AdjointGenerator {
    /// 1-based generator index.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.matrix
    }
}

/// Stack `Re` over `Im` of the entries of `m` into a real vector; this
/// preserves the Frobenius norm.
fn vectorize(m: &DMatrix<Complex64>) -> DVector<f64> {
    let len = m.len();
    let mut v = DVector::zeros(2 * len);
    for (idx, z) in m.iter().enumerate() {
        v[idx] = z.re;
        v[len + idx] = z.im;
    }
    v
}

fn vectorization_matrix(generators: &[DMatrix<Complex64>]) -> DMatrix<f64> {
    let cols: Vec<DVector<f64>> = generators.iter().map(vectorize).collect();
    DMatrix::from_columns(&cols)
}

fn cm(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn su2_pauli_half_generators() -> Vec<DMatrix<Complex64>> {
    let z = cm(0.0, 0.0);
    // A_j = sigma_j / 2i
    vec![
        DMatrix::from_row_slice(2, 2, &[z, cm(0.0, -0.5), cm(0.0, -0.5), z]),
        DMatrix::from_row_slice(2, 2, &[z, cm(-0.5, 0.0), cm(0.5, 0.0), z]),
        DMatrix::from_row_slice(2, 2, &[cm(0.0, -0.5), z, z, cm(0.0, 0.5)]),
    ]
}

fn su3_cartan_generators() -> Vec<DMatrix<Complex64>> {
    let z = cm(0.0, 0.0);
    let i = cm(0.0, 1.0);
    let ni = cm(0.0, -1.0);
    let one = cm(1.0, 0.0);
    let none = cm(-1.0, 0.0);
    #[rustfmt::skip]
    let gens = vec![
        // iH1
        DMatrix::from_row_slice(3, 3, &[i, z, z,  z, ni, z,  z, z, z]),
        // iH2
        DMatrix::from_row_slice(3, 3, &[z, z, z,  z, i, z,  z, z, ni]),
        // X12
        DMatrix::from_row_slice(3, 3, &[z, one, z,  none, z, z,  z, z, z]),
        // Y12
        DMatrix::from_row_slice(3, 3, &[z, i, z,  i, z, z,  z, z, z]),
        // X13
        DMatrix::from_row_slice(3, 3, &[z, z, one,  z, z, z,  none, z, z]),
        // Y13
        DMatrix::from_row_slice(3, 3, &[z, z, i,  z, z, z,  i, z, z]),
        // X23
        DMatrix::from_row_slice(3, 3, &[z, z, z,  z, z, one,  z, none, z]),
        // Y23
        DMatrix::from_row_slice(3, 3, &[z, z, z,  z, z, i,  z, i, z]),
    ];
    gens
}
