//! The Wei-Norman matrix Ξ and the parameter ODE it defines.
//!
//! For a chart sequence σ (an ordered list of generator indices, repeats
//! allowed) the product-of-exponentials coordinates γ satisfy
//! `Ξ(γ) γ̇ = u`, where column j of Ξ is the coordinate vector of
//! `(Π_{i<j} e^{γ^i ad_{A_σ(i)}}) A_σ(j)`. Ξ is assembled incrementally:
//! extract column σ(j) of the running product, then multiply the j-th
//! exponential factor into it.
//!
//! `Ξ(γ)γ̇ = u` is valid everywhere; the inverted form `γ̇ = Ξ⁻¹u` is local
//! and fails where det Ξ vanishes. All solves go through LU with partial
//! pivoting; no explicit inverse is formed.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};

use crate::adjoint::GeneratorExp;
use crate::algebra::StructureTensor;
use crate::tol;
use crate::{Error, Result};

/// An ordered list of 1-based generator indices defining a
/// product-of-exponentials chart, e.g. `(1, 2, 3)` (canonical) or
/// `(3, 2, 3)` (ZYZ Euler angles on su(2)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartSequence {
    indices: Vec<usize>,
}

impl ChartSequence {
    pub fn new(indices: Vec<usize>) -> Self {
        Self { indices }
    }

    /// The identity-ordered chart `(1, 2, …, n)`.
    pub fn canonical(n: usize) -> Self {
        Self {
            indices: (1..=n).collect(),
        }
    }

    /// The ZYZ Euler-angle chart `(3, 2, 3)` on a three-dimensional algebra.
    pub fn su2_zyz() -> Self {
        Self {
            indices: vec![3, 2, 3],
        }
    }

    /// Parse a comma-separated list of 1-based indices, e.g. `"3,2,3"`.
    pub fn parse(text: &str) -> Result<Self> {
        let indices = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidConfig(format!("bad chart index `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if indices.is_empty() {
            return Err(Error::InvalidConfig("empty chart".into()));
        }
        Ok(Self { indices })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// 1-based generator indices in product order.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }
}

impl std::fmt::Display for ChartSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Ξ evaluated at one γ, together with its determinant.
#[derive(Debug, Clone)]
pub struct XiMatrix {
    gamma: DVector<f64>,
    matrix: DMatrix<f64>,
    det: f64,
}

impl XiMatrix {
    pub fn gamma(&self) -> &DVector<f64> {
        &self.gamma
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// det Ξ by LU factorization.
    pub fn det(&self) -> f64 {
        self.det
    }
}

/// Immutable per-(tensor, chart) context: adjoint generators, spectra and
/// factored confluent systems are computed once, so evaluating Ξ along a
/// trajectory costs one triangular solve per factor. Shareable across
/// threads.
#[derive(Debug, Clone)]
pub struct WeiNormanSystem {
    tensor: StructureTensor,
    chart: ChartSequence,
    exps: BTreeMap<usize, GeneratorExp>,
    singularity_threshold: f64,
    singular_at_origin: bool,
}

impl WeiNormanSystem {
    pub fn new(tensor: StructureTensor, chart: ChartSequence) -> Result<Self> {
        Self::with_threshold(tensor, chart, tol::SINGULARITY_THRESHOLD)
    }

    pub fn with_threshold(
        tensor: StructureTensor,
        chart: ChartSequence,
        singularity_threshold: f64,
    ) -> Result<Self> {
        let n = tensor.dim();
        if chart.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: chart.len(),
            });
        }
        let mut exps = BTreeMap::new();
        for &i in chart.indices() {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            if !exps.contains_key(&i) {
                exps.insert(i, GeneratorExp::new(&tensor.adjoint_generator(i)?)?);
            }
        }
        let mut sys = Self {
            tensor,
            chart,
            exps,
            singularity_threshold,
            singular_at_origin: false,
        };
        let origin = DVector::zeros(n);
        sys.singular_at_origin = sys.xi(&origin)?.det.abs() <= singularity_threshold;
        Ok(sys)
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    pub fn chart(&self) -> &ChartSequence {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn singularity_threshold(&self) -> f64 {
        self.singularity_threshold
    }

    /// Whether Ξ(0) is numerically singular; the ZYZ chart is, the
    /// canonical chart is not.
    pub fn singular_at_origin(&self) -> bool {
        self.singular_at_origin
    }

    /// `e^{γ ad_{A_i}}` for a chart generator (1-based).
    pub fn exp_adjoint(&self, i: usize, gamma: f64) -> Result<DMatrix<f64>> {
        self.exps
            .get(&i)
            .ok_or(Error::IndexOutOfRange {
                index: i,
                n: self.dim(),
            })?
            .eval(gamma)
    }

    /// Assemble Ξ(γ).
    pub fn xi(&self, gamma: &DVector<f64>) -> Result<XiMatrix> {
        let n = self.dim();
        if gamma.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: gamma.len(),
            });
        }
        let mut matrix = DMatrix::<f64>::zeros(n, n);
        let mut running = DMatrix::<f64>::identity(n, n);
        for (j, &idx) in self.chart.indices().iter().enumerate() {
            matrix.set_column(j, &running.column(idx - 1));
            if j + 1 < n {
                let factor = self.exps[&idx].eval(gamma[j])?;
                running = running * factor;
            }
        }
        let det = matrix.clone().lu().determinant();
        Ok(XiMatrix {
            gamma: gamma.clone(),
            matrix,
            det,
        })
    }

    /// `γ̇ = Ξ(γ)⁻¹ u` by LU solve; fails with a chart-singularity error
    /// when |det Ξ| is at or below the configured threshold.
    pub fn rhs(&self, gamma: &DVector<f64>, u: &DVector<f64>) -> Result<DVector<f64>> {
        Ok(self.rhs_with_det(gamma, u)?.0)
    }

    /// As [`WeiNormanSystem::rhs`], also returning det Ξ(γ).
    pub fn rhs_with_det(
        &self,
        gamma: &DVector<f64>,
        u: &DVector<f64>,
    ) -> Result<(DVector<f64>, f64)> {
        let n = self.dim();
        if u.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: u.len(),
            });
        }
        let xi = self.xi(gamma)?;
        if xi.det.abs() <= self.singularity_threshold {
            return Err(Error::ChartSingularity {
                gamma: gamma.iter().cloned().collect(),
                det: xi.det,
                threshold: self.singularity_threshold,
            });
        }
        let lu = xi.matrix.lu();
        let sol = lu.solve(u).ok_or(Error::ChartSingularity {
            gamma: gamma.iter().cloned().collect(),
            det: xi.det,
            threshold: self.singularity_threshold,
        })?;
        Ok((sol, xi.det))
    }

    /// The globally valid direction `u = Ξ(γ) γ̇`; recovers controls from a
    /// known coordinate path and closes the round trip with
    /// [`WeiNormanSystem::rhs`].
    pub fn forward(&self, gamma: &DVector<f64>, gamma_dot: &DVector<f64>) -> Result<DVector<f64>> {
        if gamma_dot.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: gamma_dot.len(),
            });
        }
        Ok(self.xi(gamma)?.matrix * gamma_dot)
    }
}

/// One-shot Ξ evaluation; builds the per-chart context internally.
pub fn xi_matrix(
    tensor: &StructureTensor,
    chart: &ChartSequence,
    gamma: &DVector<f64>,
) -> Result<XiMatrix> {
    WeiNormanSystem::new(tensor.clone(), chart.clone())?.xi(gamma)
}

/// One-shot `γ̇ = Ξ⁻¹u` with an explicit singularity threshold.
pub fn wei_norman_rhs(
    tensor: &StructureTensor,
    chart: &ChartSequence,
    gamma: &DVector<f64>,
    u: &DVector<f64>,
    singularity_threshold: f64,
) -> Result<DVector<f64>> {
    WeiNormanSystem::with_threshold(tensor.clone(), chart.clone(), singularity_threshold)?
        .rhs(gamma, u)
}

/// One-shot `u = Ξ(γ) γ̇`.
pub fn forward_map(
    tensor: &StructureTensor,
    chart: &ChartSequence,
    gamma: &DVector<f64>,
    gamma_dot: &DVector<f64>,
) -> Result<DVector<f64>> {
    WeiNormanSystem::new(tensor.clone(), chart.clone())?.forward(gamma, gamma_dot)
}
