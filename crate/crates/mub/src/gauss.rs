//! Quadratic Gauss sums: traces of powers of the quadratic diagonal, the
//! generalized sum S(a, b, d), its reciprocity law, and the link between
//! unbiasedness of the eigenvector bases and these sums.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::constructions;
use crate::error::{Error, Result};
use crate::schwinger;

/// `Tr D^k` for odd `d`: the sum of `q^{k j(j+1)/2}` over `j`. Has modulus
/// `sqrt(d)` exactly when `gcd(k, d) = 1`.
pub fn quadratic_trace(dim: usize, k: i128) -> Result<Complex64> {
    if dim % 2 == 0 {
        return Err(Error::OddRequired(dim));
    }
    let d = dim as i128;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..d {
        let e = (k * (j * (j + 1) / 2)).rem_euclid(d);
        acc += Complex64::from_polar(1.0, 2.0 * PI * e as f64 / d as f64);
    }
    Ok(acc)
}

/// `S(a, b, d) = sum_{n=0}^{|d|-1} exp(iπ (a n² + b n) / d)`.
pub fn gauss_sum(a: i64, b: i64, d: i64) -> Result<Complex64> {
    if d == 0 {
        return Err(Error::InvalidParams("gauss sum needs d != 0".into()));
    }
    let m = 2 * (d as i128).abs();
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 0..(d as i128).abs() {
        // reduce the exponent mod 2|d| so the angle stays small
        let t = (a as i128 * n * n + b as i128 * n).rem_euclid(m);
        acc += Complex64::from_polar(1.0, PI * t as f64 / d as f64);
    }
    Ok(acc)
}

/// Deviation between the two sides of the reciprocity law
/// `S(a, b, d) = sqrt(|d/a|) exp(iπ (|ad| - b²) / (4ad)) S(-d, -b, a)`,
/// valid for `ad != 0` with `ad + b` even.
pub fn reciprocity_deviation(a: i64, b: i64, d: i64) -> Result<f64> {
    if a == 0 || d == 0 {
        return Err(Error::InvalidParams(
            "reciprocity needs a != 0 and d != 0".into(),
        ));
    }
    if (a.wrapping_mul(d).wrapping_add(b)) % 2 != 0 {
        return Err(Error::InvalidParams("reciprocity needs ad + b even".into()));
    }
    let lhs = gauss_sum(a, b, d)?;
    let prefactor = (d.abs() as f64 / a.abs() as f64).sqrt();
    let ad = a as f64 * d as f64;
    let phase = Complex64::from_polar(1.0, PI * (ad.abs() - (b as f64).powi(2)) / (4.0 * ad));
    let rhs = gauss_sum(-d, -b, a)? * prefactor * phase;
    Ok((lhs - rhs).norm())
}

/// `sum_{k=0}^{d-1} exp(iπ k²/d)` for even `d`; equals `sqrt(d) e^{iπ/4}`.
pub fn even_quadratic_sum(dim: usize) -> Result<Complex64> {
    if dim == 0 || dim % 2 != 0 {
        return Err(Error::EvenRequired(dim));
    }
    gauss_sum(1, 0, dim as i64)
}

/// The closed form `sqrt(d) e^{iπ/4}` the even quadratic sum must equal.
pub fn even_quadratic_reference(dim: usize) -> Complex64 {
    Complex64::from_polar((dim as f64).sqrt(), PI / 4.0)
}

/// First-column inner product `<p0, p_k>` of the Fourier basis with the k-th
/// eigenvector basis equals `Tr D^k / d`; returns the observed deviation.
/// Unbiasedness of the pair therefore forces `|Tr D^k| = sqrt(d)`.
pub fn gauss_trace_consistency(dim: usize, k: usize) -> Result<f64> {
    if dim % 2 == 0 {
        return Err(Error::OddRequired(dim));
    }
    if k >= dim {
        return Err(Error::IndexOutOfRange { index: k, dim });
    }
    let p0 = schwinger::fourier(dim)?.eval_dense();
    let pk = constructions::build_pk_odd(dim, k)?.eval_dense();
    let mut inner = Complex64::new(0.0, 0.0);
    for j in 0..dim {
        inner += p0.get(j, 0) * pk.get(j, 0).conj();
    }
    let expected = quadratic_trace(dim, k as i128)? / dim as f64;
    Ok((inner - expected).norm())
}
