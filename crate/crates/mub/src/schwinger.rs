//! The Schwinger generator matrices: the clock `U`, the shift `V`, their
//! twisted products `V_k = V U^k`, the Fourier (Vandermonde) matrix `P0` that
//! diagonalizes `V`, the index-reversal permutation `W = P0^2`, and the
//! quadratic diagonal phases used to build the remaining bases.

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::dense::Tolerance;
use crate::error::{Error, Result};
use crate::phase::{phase_mul_diag, PhaseEntry, PhaseMatrix};

/// Common phase modulus for dimension `d`: covers the d-th roots (`q`), the
/// 2d-th roots (`ω`) and the factors of `i` in the dimension-4 blocks.
pub fn modulus_for(dim: usize) -> u64 {
    (2 * dim as u64).lcm(&4)
}

fn require_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        Err(Error::DimensionTooSmall { min: 1, got: 0 })
    } else {
        Ok(())
    }
}

/// Clock matrix `U = diag(1, q, q^2, ..., q^{d-1})` with `q = exp(2πi/d)`.
pub fn clock(dim: usize) -> Result<PhaseMatrix> {
    require_dim(dim)?;
    clock_pow(dim, 1)
}

/// `U^k` for any integer power, exact.
pub fn clock_pow(dim: usize, k: i128) -> Result<PhaseMatrix> {
    require_dim(dim)?;
    let modulus = modulus_for(dim);
    let q_exp = modulus / dim as u64;
    PhaseMatrix::from_fn(dim, modulus, 1, |j, l| {
        if j != l {
            PhaseEntry::Zero
        } else {
            let e = (k.rem_euclid(dim as i128)) * (j as i128) % dim as i128;
            PhaseEntry::root(e * q_exp as i128, modulus)
        }
    })
}

/// Shift matrix `V`: ones on the superdiagonal and in the lower-left corner.
pub fn shift(dim: usize) -> Result<PhaseMatrix> {
    require_dim(dim)?;
    PhaseMatrix::from_fn(dim, modulus_for(dim), 1, |j, k| {
        if (j + 1) % dim == k {
            PhaseEntry::ONE
        } else {
            PhaseEntry::Zero
        }
    })
}

/// `V_k = V U^k`; superdiagonal entry `(j, j+1)` is `q^{k(j+1)}`, corner is 1.
pub fn twisted_shift(dim: usize, k: usize) -> Result<PhaseMatrix> {
    require_dim(dim)?;
    if k >= dim {
        return Err(Error::IndexOutOfRange { index: k, dim });
    }
    let modulus = modulus_for(dim);
    let q_exp = modulus / dim as u64;
    PhaseMatrix::from_fn(dim, modulus, 1, |j, l| {
        if (j + 1) % dim == l {
            let e = (k * l) % dim;
            PhaseEntry::Root(e as u64 * q_exp)
        } else {
            PhaseEntry::Zero
        }
    })
}

/// Fourier matrix `P0` with entries `d^{-1/2} q^{jk}`.
pub fn fourier(dim: usize) -> Result<PhaseMatrix> {
    require_dim(dim)?;
    let modulus = modulus_for(dim);
    let q_exp = modulus / dim as u64;
    PhaseMatrix::from_fn(dim, modulus, dim as u64, |j, k| {
        PhaseEntry::Root(((j * k) % dim) as u64 * q_exp)
    })
}

/// Index-reversal permutation `W = P0^2`: `W[0][0] = 1`, `W[j][d-j] = 1`.
pub fn reversal(dim: usize) -> Result<PhaseMatrix> {
    require_dim(dim)?;
    PhaseMatrix::from_fn(dim, modulus_for(dim), 1, |j, k| {
        if (j + k) % dim == 0 {
            PhaseEntry::ONE
        } else {
            PhaseEntry::Zero
        }
    })
}

/// Quadratic diagonal `D = diag(q^{j(j+1)/2})`, defined for odd `d` only.
pub fn quadratic_diag(dim: usize) -> Result<PhaseMatrix> {
    quadratic_diag_pow(dim, 1)
}

/// `D^k` for any integer power; odd `d` only.
pub fn quadratic_diag_pow(dim: usize, k: i128) -> Result<PhaseMatrix> {
    require_dim(dim)?;
    if dim % 2 == 0 {
        return Err(Error::OddRequired(dim));
    }
    let modulus = modulus_for(dim);
    let q_exp = modulus / dim as u64;
    PhaseMatrix::from_fn(dim, modulus, 1, |j, l| {
        if j != l {
            PhaseEntry::Zero
        } else {
            let tri = (j as i128 * (j as i128 + 1) / 2) % dim as i128;
            let e = (k.rem_euclid(dim as i128) * tri) % dim as i128;
            PhaseEntry::root(e * q_exp as i128, modulus)
        }
    })
}

/// Even-case diagonal `D' = diag(ω^{-k^2})` with `ω = exp(iπ/d)`; even `d` only.
pub fn even_quadratic_diag(dim: usize) -> Result<PhaseMatrix> {
    require_dim(dim)?;
    if dim % 2 != 0 {
        return Err(Error::EvenRequired(dim));
    }
    let modulus = modulus_for(dim);
    let omega_exp = modulus / (2 * dim as u64);
    PhaseMatrix::from_fn(dim, modulus, 1, |j, l| {
        if j != l {
            PhaseEntry::Zero
        } else {
            let e = (-(j as i128 * j as i128)).rem_euclid(2 * dim as i128);
            PhaseEntry::root(e * omega_exp as i128, modulus)
        }
    })
}

/// The generator pair for one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub dim: usize,
    pub clock: PhaseMatrix,
    pub shift: PhaseMatrix,
    /// Exponent `n` with `q = exp(2πi n/N)` under the common modulus.
    pub q_exponent: u64,
}

impl GeneratorSet {
    pub fn new(dim: usize) -> Result<Self> {
        Ok(GeneratorSet {
            dim,
            clock: clock(dim)?,
            shift: shift(dim)?,
            q_exponent: modulus_for(dim) / dim as u64,
        })
    }
}

/// One structural identity together with its observed deviation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub max_deviation: f64,
    pub passed: bool,
}

/// Deviations for the structural identities of the generator pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    pub dim: usize,
    pub tolerance: f64,
    pub checks: Vec<IdentityCheck>,
    pub passed: bool,
}

/// Checks the defining relations numerically:
/// `VU = qUV`, `V = P0 U P0*`, `P0^2 = W`, `U^k P0 = P0 (V*)^k` for all `k`,
/// and (odd `d`) `D^k V = V_{-k} D^k` for all `k`.
pub fn check_identities(dim: usize, tol: Tolerance) -> Result<IdentityReport> {
    require_dim(dim)?;
    let u = clock(dim)?;
    let v = shift(dim)?;
    let p0 = fourier(dim)?;
    let (ud, vd, p0d) = (u.eval_dense(), v.eval_dense(), p0.eval_dense());

    let mut checks = Vec::new();
    let mut push = |name: &str, dev: f64| {
        checks.push(IdentityCheck {
            name: name.to_string(),
            max_deviation: dev,
            passed: tol.within(dev),
        });
    };

    let q = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / dim as f64);
    let dev = vd.mul(&ud)?.max_abs_diff(&ud.mul(&vd)?.scale(q))?;
    push("q-commutation VU = qUV", dev);

    let dev = vd.max_abs_diff(&p0d.mul(&ud)?.mul(&p0d.adjoint())?)?;
    push("fourier diagonalization V = P0 U P0*", dev);

    let dev = p0d.mul(&p0d)?.max_abs_diff(&reversal(dim)?.eval_dense())?;
    push("fourier square P0^2 = W", dev);

    // U^k P0 is exact in phase form; P0 (V*)^k accumulates densely.
    let vstar = vd.adjoint();
    let mut rhs = p0d.clone();
    let mut worst = 0.0f64;
    for k in 0..dim as i128 {
        let lhs = phase_mul_diag(&clock_pow(dim, k)?, &p0)?.eval_dense();
        worst = worst.max(lhs.max_abs_diff(&rhs)?);
        rhs = rhs.mul(&vstar)?;
    }
    push("intertwining U^k P0 = P0 (V*)^k", worst);

    if dim % 2 == 1 {
        let mut worst = 0.0f64;
        for k in 0..dim {
            let dk = quadratic_diag_pow(dim, k as i128)?;
            let lhs = phase_mul_diag(&dk, &v)?.eval_dense();
            let v_neg_k = twisted_shift(dim, (dim - k) % dim)?.eval_dense();
            let rhs = v_neg_k.mul(&dk.eval_dense())?;
            worst = worst.max(lhs.max_abs_diff(&rhs)?);
        }
        push("quadratic diagonal D^k V = V_{-k} D^k", worst);
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(IdentityReport {
        dim,
        tolerance: tol.abs_eps,
        checks,
        passed,
    })
}
