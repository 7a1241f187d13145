//! Numerical checks of unbiasedness, unitarity and the eigenvector relations,
//! including a brute-force inner-product sweep independent of matrix products.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constructions::MubSet;
use crate::dense::{DenseMatrix, Tolerance};
use crate::error::{Error, Result};
use crate::schwinger;

/// Max deviation of the entry moduli of `A* B` from `1/sqrt(d)`.
pub fn unbiasedness_deviation(a: &DenseMatrix, b: &DenseMatrix) -> Result<f64> {
    let product = a.adjoint().mul(b)?;
    let d = product.dim();
    let target = 1.0 / (d as f64).sqrt();
    let mut worst: f64 = 0.0;
    for j in 0..d {
        for k in 0..d {
            worst = worst.max((product.get(j, k).norm() - target).abs());
        }
    }
    Ok(worst)
}

/// Whether the pair `(A, B)` is unbiased within the tolerance.
pub fn is_unbiased(a: &DenseMatrix, b: &DenseMatrix, tol: Tolerance) -> Result<bool> {
    Ok(tol.within(unbiasedness_deviation(a, b)?))
}

/// Whether every pair from the slice is unbiased within the tolerance.
pub fn is_mutually_unbiased(bases: &[DenseMatrix], tol: Tolerance) -> Result<bool> {
    for i in 0..bases.len() {
        for j in i + 1..bases.len() {
            if !is_unbiased(&bases[i], &bases[j], tol)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Deviation record for one pair of bases. Index 0 is the implicit identity;
/// stored bases are numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairResult {
    pub i: usize,
    pub j: usize,
    #[serde(rename = "max_dev")]
    pub max_deviation: f64,
}

/// Full verification report for a [`MubSet`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub dim: usize,
    pub passed: bool,
    pub tolerance: f64,
    pub pairs: Vec<PairResult>,
    pub unitarity: Vec<f64>,
}

/// Checks unitarity of every basis and unbiasedness of every pair, identity
/// included.
pub fn verify_mum(set: &MubSet, tol: Tolerance) -> Report {
    let mut dense = vec![DenseMatrix::identity(set.dim())];
    dense.extend(set.bases().iter().map(|b| b.eval_dense()));

    let unitarity: Vec<f64> = dense
        .iter()
        .map(DenseMatrix::max_deviation_from_unitary)
        .collect();

    let mut pairs = Vec::new();
    for i in 0..dense.len() {
        for j in i + 1..dense.len() {
            let max_deviation = unbiasedness_deviation(&dense[i], &dense[j])
                .expect("bases in a set share the dimension");
            pairs.push(PairResult {
                i,
                j,
                max_deviation,
            });
        }
    }

    let passed = unitarity.iter().all(|&u| tol.within(u))
        && pairs.iter().all(|p| tol.within(p.max_deviation));
    Report {
        dim: set.dim(),
        passed,
        tolerance: tol.abs_eps,
        pairs,
        unitarity,
    }
}

/// Max deviation of `P* V_k P` from its diagonal form: the clock `U` for odd
/// `d` (any `k`) and for `k = 0`, and `ωU` with `ω = e^{iπ/d}` for even `d`,
/// `k = 1`. Other even `k` have no supported relation.
pub fn check_eigenrelation(dim: usize, k: usize, p: &crate::phase::PhaseMatrix) -> Result<f64> {
    if p.dim() != dim {
        return Err(Error::DimensionMismatch {
            left: dim,
            right: p.dim(),
        });
    }
    let v_k = schwinger::twisted_shift(dim, k)?.eval_dense();
    let clock = schwinger::clock(dim)?.eval_dense();
    let target = if dim % 2 == 1 || k == 0 {
        clock
    } else if k == 1 {
        let omega = Complex64::from_polar(1.0, std::f64::consts::PI / dim as f64);
        clock.scale(omega)
    } else {
        return Err(Error::UnsupportedRelation { dim, k });
    };
    let dense = p.eval_dense();
    let conjugated = dense.adjoint().mul(&v_k)?.mul(&dense)?;
    conjugated.max_abs_diff(&target)
}

/// Observed range of `|<a, b>|` over all column pairs from distinct bases.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InnerProductRange {
    pub min: f64,
    pub max: f64,
}

/// Recomputes every cross-basis column inner product with plain loops, no
/// matrix products involved. Identity columns are included. Returns `None`
/// when the set has no stored bases.
pub fn brute_force_inner_products(set: &MubSet) -> Option<InnerProductRange> {
    if set.bases().is_empty() {
        return None;
    }
    let d = set.dim();
    let mut dense = vec![DenseMatrix::identity(d)];
    dense.extend(set.bases().iter().map(|b| b.eval_dense()));

    let mut min = f64::INFINITY;
    let mut max: f64 = 0.0;
    for bi in 0..dense.len() {
        for bj in bi + 1..dense.len() {
            for ci in 0..d {
                for cj in 0..d {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for row in 0..d {
                        acc += dense[bi].get(row, ci) * dense[bj].get(row, cj).conj();
                    }
                    let modulus = acc.norm();
                    min = min.min(modulus);
                    max = max.max(modulus);
                }
            }
        }
    }
    Some(InnerProductRange { min, max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::phase::PhaseMatrix;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn fourier_is_unbiased_to_identity() {
        let id = DenseMatrix::identity(5);
        let p0 = schwinger::fourier(5).unwrap().eval_dense();
        assert!(is_unbiased(&id, &p0, tol()).unwrap());
        assert!(unbiasedness_deviation(&id, &p0).unwrap() < 1e-12);
    }

    #[test]
    fn identity_pair_is_biased() {
        let id = DenseMatrix::identity(4);
        assert!(!is_unbiased(&id, &id, tol()).unwrap());
        // |I|-entries are 0 or 1, both 1/2 away from 1/sqrt(4)
        assert!((unbiasedness_deviation(&id, &id).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn mutual_check_over_slice() {
        let set = constructions::build_prime_full(3).unwrap();
        let mut dense = vec![DenseMatrix::identity(3)];
        dense.extend(set.bases().iter().map(PhaseMatrix::eval_dense));
        assert!(is_mutually_unbiased(&dense, tol()).unwrap());
        dense.push(DenseMatrix::identity(3));
        assert!(!is_mutually_unbiased(&dense, tol()).unwrap());
    }

    #[test]
    fn report_shape() {
        let set = constructions::build_generic_triple(3).unwrap();
        let report = verify_mum(&set, tol());
        assert!(report.passed);
        assert_eq!(report.dim, 3);
        assert_eq!(report.unitarity.len(), 3);
        assert_eq!(report.pairs.len(), 3);
        assert_eq!((report.pairs[0].i, report.pairs[0].j), (0, 1));
        let json = serde_json::to_value(&report).unwrap();
        assert!(json["pairs"][0]["max_dev"].is_f64());
        assert_eq!(json["tolerance"], 1e-9);
    }

    #[test]
    fn eigenrelation_even_branch() {
        let p1 = constructions::build_p1_even(6).unwrap();
        assert!(check_eigenrelation(6, 1, &p1).unwrap() < 1e-9);
        assert_eq!(
            check_eigenrelation(6, 2, &p1),
            Err(Error::UnsupportedRelation { dim: 6, k: 2 })
        );
        let p0 = schwinger::fourier(6).unwrap();
        assert!(check_eigenrelation(6, 0, &p0).unwrap() < 1e-9);
    }

    #[test]
    fn eigenrelation_detects_wrong_basis() {
        // the plain Fourier matrix does not diagonalize V_1 to U for d = 5
        let p0 = schwinger::fourier(5).unwrap();
        assert!(check_eigenrelation(5, 1, &p0).unwrap() > 0.5);
    }

    #[test]
    fn brute_force_matches_product_path() {
        let set = constructions::construct_mubs(5).unwrap();
        let range = brute_force_inner_products(&set).unwrap();
        let expected = 1.0 / 5f64.sqrt();
        assert!((range.min - expected).abs() < 1e-12);
        assert!((range.max - expected).abs() < 1e-12);

        let empty = MubSet::new(3, constructions::Method::GenericTriple, vec![]).unwrap();
        assert!(brute_force_inner_products(&empty).is_none());
    }
}
