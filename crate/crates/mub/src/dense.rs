//! Dense complex matrices: the evaluation target for products and all
//! numerical verification.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for entrywise numerical comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(abs_eps: f64) -> Self {
        Tolerance { abs_eps }
    }

    /// Reads `MUB_TOLERANCE` from the environment, falling back to the default.
    pub fn from_env() -> Self {
        match std::env::var("MUB_TOLERANCE") {
            Ok(s) => match s.parse::<f64>() {
                Ok(eps) if eps > 0.0 && eps.is_finite() => Tolerance::new(eps),
                _ => Tolerance::default(),
            },
            Err(_) => Tolerance::default(),
        }
    }

    pub fn within(&self, deviation: f64) -> bool {
        deviation < self.abs_eps
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::new(Self::DEFAULT_EPS)
    }
}

/// A square complex matrix in double precision, stored row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DenseMatrixRepr", into = "DenseMatrixRepr")]
pub struct DenseMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

#[derive(Serialize, Deserialize, Clone)]
struct DenseMatrixRepr {
    dim: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

impl From<DenseMatrix> for DenseMatrixRepr {
    fn from(m: DenseMatrix) -> Self {
        let entries = (0..m.dim)
            .map(|j| {
                (0..m.dim)
                    .map(|k| [m.get(j, k).re, m.get(j, k).im])
                    .collect()
            })
            .collect();
        DenseMatrixRepr {
            dim: m.dim,
            entries,
        }
    }
}

impl TryFrom<DenseMatrixRepr> for DenseMatrix {
    type Error = Error;

    fn try_from(repr: DenseMatrixRepr) -> Result<Self> {
        if repr.dim == 0 {
            return Err(Error::DimensionTooSmall { min: 1, got: 0 });
        }
        if repr.entries.len() != repr.dim || repr.entries.iter().any(|r| r.len() != repr.dim) {
            return Err(Error::InvalidData(format!(
                "expected a {0}x{0} entry grid",
                repr.dim
            )));
        }
        let entries: Vec<Complex64> = repr
            .entries
            .iter()
            .flatten()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidData("non-finite entry".into()));
        }
        Ok(DenseMatrix {
            dim: repr.dim,
            entries,
        })
    }
}

impl DenseMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for j in 0..dim {
            for k in 0..dim {
                entries.push(f(j, k));
            }
        }
        DenseMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |j, k| {
            if j == k {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn column(&self, col: usize) -> Vec<Complex64> {
        (0..self.dim).map(|row| self.get(row, col)).collect()
    }

    /// Standard matrix product.
    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for j in 0..d {
            for l in 0..d {
                let a = self.entries[j * d + l];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..d {
                    entries[j * d + k] += a * other.entries[l * d + k];
                }
            }
        }
        Ok(DenseMatrix { dim: d, entries })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.dim, |j, k| self.get(k, j).conj())
    }

    pub fn scale(&self, factor: Complex64) -> DenseMatrix {
        DenseMatrix::from_fn(self.dim, |j, k| self.get(j, k) * factor)
    }

    /// Largest entrywise absolute difference against `other`.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Max entrywise `|A*A - I|`.
    pub fn max_deviation_from_unitary(&self) -> f64 {
        let gram = self
            .adjoint()
            .mul(self)
            .expect("square matrices always multiply");
        gram.max_abs_diff(&DenseMatrix::identity(self.dim))
            .expect("dims match")
    }
}

/// Standard matrix product of two dense matrices.
pub fn mat_mul(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    a.mul(b)
}
