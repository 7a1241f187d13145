//! Exact root-of-unity matrices.
//!
//! Every matrix the constructions produce has entries that are either zero or
//! a root of unity `exp(2πi n/N)`, times a global scalar `1/√m`. Keeping the
//! exponents as integers mod `N` makes construction exact; evaluation to
//! [`DenseMatrix`] happens only when products or verification need it.

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};

/// Zero or a root of unity; the exponent is reduced modulo the modulus of the
/// matrix that owns the entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Option<u64>", into = "Option<u64>")]
pub enum PhaseEntry {
    Zero,
    Root(u64),
}

impl From<Option<u64>> for PhaseEntry {
    fn from(v: Option<u64>) -> Self {
        match v {
            None => PhaseEntry::Zero,
            Some(n) => PhaseEntry::Root(n),
        }
    }
}

impl From<PhaseEntry> for Option<u64> {
    fn from(e: PhaseEntry) -> Self {
        match e {
            PhaseEntry::Zero => None,
            PhaseEntry::Root(n) => Some(n),
        }
    }
}

impl PhaseEntry {
    /// Root with a possibly negative or unreduced exponent.
    pub fn root(exponent: i128, modulus: u64) -> PhaseEntry {
        PhaseEntry::Root(exponent.rem_euclid(modulus as i128) as u64)
    }

    pub const ONE: PhaseEntry = PhaseEntry::Root(0);

    fn reduced(self, modulus: u64) -> PhaseEntry {
        match self {
            PhaseEntry::Zero => PhaseEntry::Zero,
            PhaseEntry::Root(n) => PhaseEntry::Root(n % modulus),
        }
    }

    fn rescaled(self, factor: u64) -> PhaseEntry {
        match self {
            PhaseEntry::Zero => PhaseEntry::Zero,
            PhaseEntry::Root(n) => PhaseEntry::Root(n * factor),
        }
    }

    fn conj(self, modulus: u64) -> PhaseEntry {
        match self {
            PhaseEntry::Zero => PhaseEntry::Zero,
            PhaseEntry::Root(n) => PhaseEntry::Root((modulus - n % modulus) % modulus),
        }
    }

    fn mul(self, other: PhaseEntry, modulus: u64) -> PhaseEntry {
        match (self, other) {
            (PhaseEntry::Root(a), PhaseEntry::Root(b)) => PhaseEntry::Root((a + b) % modulus),
            _ => PhaseEntry::Zero,
        }
    }
}

/// A `dim x dim` grid of [`PhaseEntry`] over a common modulus, with global
/// scalar `1/√scale_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PhaseMatrixRepr", into = "PhaseMatrixRepr")]
pub struct PhaseMatrix {
    dim: usize,
    modulus: u64,
    scale_m: u64,
    entries: Vec<PhaseEntry>,
}

#[derive(Serialize, Deserialize, Clone)]
struct PhaseMatrixRepr {
    dim: usize,
    modulus: u64,
    scale_m: u64,
    entries: Vec<Vec<Option<u64>>>,
}

impl From<PhaseMatrix> for PhaseMatrixRepr {
    fn from(m: PhaseMatrix) -> Self {
        let entries = (0..m.dim)
            .map(|j| (0..m.dim).map(|k| m.entry(j, k).into()).collect())
            .collect();
        PhaseMatrixRepr {
            dim: m.dim,
            modulus: m.modulus,
            scale_m: m.scale_m,
            entries,
        }
    }
}

impl TryFrom<PhaseMatrixRepr> for PhaseMatrix {
    type Error = Error;

    fn try_from(repr: PhaseMatrixRepr) -> Result<Self> {
        if repr.dim == 0 {
            return Err(Error::DimensionTooSmall { min: 1, got: 0 });
        }
        if repr.modulus == 0 || repr.scale_m == 0 {
            return Err(Error::InvalidData(
                "modulus and scale_m must be positive".into(),
            ));
        }
        if repr.entries.len() != repr.dim || repr.entries.iter().any(|r| r.len() != repr.dim) {
            return Err(Error::InvalidData(format!(
                "expected a {0}x{0} entry grid",
                repr.dim
            )));
        }
        if repr
            .entries
            .iter()
            .flatten()
            .any(|e| matches!(e, Some(n) if *n >= repr.modulus))
        {
            return Err(Error::InvalidData(
                "exponent not reduced modulo modulus".into(),
            ));
        }
        let entries = repr
            .entries
            .iter()
            .flatten()
            .map(|&e| PhaseEntry::from(e))
            .collect();
        Ok(PhaseMatrix {
            dim: repr.dim,
            modulus: repr.modulus,
            scale_m: repr.scale_m,
            entries,
        })
    }
}

impl PhaseMatrix {
    pub fn from_fn(
        dim: usize,
        modulus: u64,
        scale_m: u64,
        mut f: impl FnMut(usize, usize) -> PhaseEntry,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionTooSmall { min: 1, got: 0 });
        }
        if modulus == 0 || scale_m == 0 {
            return Err(Error::InvalidData(
                "modulus and scale_m must be positive".into(),
            ));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for j in 0..dim {
            for k in 0..dim {
                entries.push(f(j, k).reduced(modulus));
            }
        }
        Ok(PhaseMatrix {
            dim,
            modulus,
            scale_m,
            entries,
        })
    }

    pub fn identity(dim: usize, modulus: u64) -> Result<Self> {
        Self::from_fn(dim, modulus, 1, |j, k| {
            if j == k {
                PhaseEntry::ONE
            } else {
                PhaseEntry::Zero
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn scale_m(&self) -> u64 {
        self.scale_m
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> PhaseEntry {
        self.entries[row * self.dim + col]
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|j| (0..self.dim).all(|k| j == k || self.entry(j, k) == PhaseEntry::Zero))
    }

    /// Re-expresses all exponents over a larger compatible modulus.
    pub fn to_modulus(&self, new_modulus: u64) -> Result<PhaseMatrix> {
        if new_modulus == 0 || new_modulus % self.modulus != 0 {
            return Err(Error::InvalidData(format!(
                "modulus {new_modulus} is not a multiple of {}",
                self.modulus
            )));
        }
        let factor = new_modulus / self.modulus;
        PhaseMatrix::from_fn(self.dim, new_modulus, self.scale_m, |j, k| {
            self.entry(j, k).rescaled(factor)
        })
    }

    /// Evaluates every entry: `Root(n) -> exp(2πi n/N)/√m`, `Zero -> 0`.
    pub fn eval_dense(&self) -> DenseMatrix {
        let scale = 1.0 / (self.scale_m as f64).sqrt();
        let step = 2.0 * std::f64::consts::PI / self.modulus as f64;
        DenseMatrix::from_fn(self.dim, |j, k| match self.entry(j, k) {
            PhaseEntry::Zero => Complex64::new(0.0, 0.0),
            PhaseEntry::Root(n) => Complex64::from_polar(scale, step * n as f64),
        })
    }

    /// Conjugate transpose, exact in the phase representation.
    pub fn adjoint(&self) -> PhaseMatrix {
        let modulus = self.modulus;
        PhaseMatrix::from_fn(self.dim, modulus, self.scale_m, |j, k| {
            self.entry(k, j).conj(modulus)
        })
        .expect("valid matrix stays valid under adjoint")
    }

    /// Kronecker product; `entry[(a·dB + b), (c·dB + e)] = A[a][c]·B[b][e]`.
    pub fn tensor(&self, other: &PhaseMatrix) -> PhaseMatrix {
        let modulus = self.modulus.lcm(&other.modulus);
        let fa = modulus / self.modulus;
        let fb = modulus / other.modulus;
        let db = other.dim;
        PhaseMatrix::from_fn(
            self.dim * db,
            modulus,
            self.scale_m * other.scale_m,
            |row, col| {
                let (a, b) = (row / db, row % db);
                let (c, e) = (col / db, col % db);
                self.entry(a, c)
                    .rescaled(fa)
                    .mul(other.entry(b, e).rescaled(fb), modulus)
            },
        )
        .expect("factor dims are positive")
    }
}

/// Exact product of a diagonal phase matrix with an arbitrary one: row `j` of
/// `m` is scaled by `diag[j][j]`. The result lives over the lcm of the two
/// moduli and multiplies the scales.
pub fn phase_mul_diag(diag: &PhaseMatrix, m: &PhaseMatrix) -> Result<PhaseMatrix> {
    if diag.dim != m.dim {
        return Err(Error::DimensionMismatch {
            left: diag.dim,
            right: m.dim,
        });
    }
    if !diag.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    let modulus = diag.modulus.lcm(&m.modulus);
    let fd = modulus / diag.modulus;
    let fm = modulus / m.modulus;
    PhaseMatrix::from_fn(m.dim, modulus, diag.scale_m * m.scale_m, |j, k| {
        diag.entry(j, j)
            .rescaled(fd)
            .mul(m.entry(j, k).rescaled(fm), modulus)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schwinger;

    fn root(n: u64) -> PhaseEntry {
        PhaseEntry::Root(n)
    }

    #[test]
    fn eval_clock_d2() {
        // q = -1 when d = 2
        let u = schwinger::clock(2).unwrap().eval_dense();
        assert!((u.get(0, 0) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((u.get(1, 1) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert_eq!(u.get(0, 1), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn eval_fourier_d2() {
        let p0 = schwinger::fourier(2).unwrap().eval_dense();
        let s = 1.0 / 2f64.sqrt();
        for (j, k, v) in [(0, 0, s), (0, 1, s), (1, 0, s), (1, 1, -s)] {
            assert!((p0.get(j, k) - Complex64::new(v, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn eval_shift_d3() {
        let v = schwinger::shift(3).unwrap();
        let expected = [
            [PhaseEntry::Zero, root(0), PhaseEntry::Zero],
            [PhaseEntry::Zero, PhaseEntry::Zero, root(0)],
            [root(0), PhaseEntry::Zero, PhaseEntry::Zero],
        ];
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(v.entry(j, k), expected[j][k]);
            }
        }
    }

    #[test]
    fn diag_mul_identity_fixes_fourier() {
        let p0 = schwinger::fourier(3).unwrap();
        let id = PhaseMatrix::identity(3, p0.modulus()).unwrap();
        assert_eq!(phase_mul_diag(&id, &p0).unwrap(), p0);
    }

    #[test]
    fn diag_mul_quadratic_inverse_d3() {
        // D^{-1} P0 has first column (1, q^2, 1)/sqrt(3)
        let p0 = schwinger::fourier(3).unwrap();
        let d_inv = schwinger::quadratic_diag_pow(3, -1).unwrap();
        let p1 = phase_mul_diag(&d_inv, &p0).unwrap();
        let q_exp = p1.modulus() / 3;
        assert_eq!(p1.entry(0, 0), root(0));
        assert_eq!(p1.entry(1, 0), root(2 * q_exp));
        assert_eq!(p1.entry(2, 0), root(0));
    }

    #[test]
    fn diag_mul_even_phase_d2() {
        // diag(1, w^{-1}) P0 = (1/sqrt 2)[[1,1],[-i,i]]
        let p0 = schwinger::fourier(2).unwrap();
        let dprime = schwinger::even_quadratic_diag(2).unwrap();
        let p1 = phase_mul_diag(&dprime, &p0).unwrap().eval_dense();
        let s = 1.0 / 2f64.sqrt();
        assert!((p1.get(1, 0) - Complex64::new(0.0, -s)).norm() < 1e-12);
        assert!((p1.get(1, 1) - Complex64::new(0.0, s)).norm() < 1e-12);
    }

    #[test]
    fn diag_mul_rejects_non_diagonal() {
        let v = schwinger::shift(3).unwrap();
        let p0 = schwinger::fourier(3).unwrap();
        assert_eq!(phase_mul_diag(&v, &p0), Err(Error::NotDiagonal));
    }

    #[test]
    fn adjoint_of_clock_d4() {
        let u = schwinger::clock(4).unwrap().adjoint().eval_dense();
        let expected = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, 1.0),
        ];
        for (j, want) in expected.iter().enumerate() {
            assert!((u.get(j, j) - want).norm() < 1e-15);
        }
    }

    #[test]
    fn adjoint_involution_d7() {
        let v = schwinger::shift(7).unwrap();
        assert_eq!(v.adjoint().adjoint(), v);
    }

    #[test]
    fn adjoint_gives_inverse_of_fourier_d6() {
        let p0 = schwinger::fourier(6).unwrap();
        let prod = p0.adjoint().eval_dense().mul(&p0.eval_dense()).unwrap();
        assert!(prod.max_abs_diff(&DenseMatrix::identity(6)).unwrap() < 1e-12);
    }

    #[test]
    fn tensor_identities() {
        let i2 = PhaseMatrix::identity(2, 4).unwrap();
        let i3 = PhaseMatrix::identity(3, 12).unwrap();
        let i6 = i2.tensor(&i3);
        assert_eq!(i6.dim(), 6);
        let id = DenseMatrix::identity(6);
        assert!(i6.eval_dense().max_abs_diff(&id).unwrap() < 1e-15);
    }

    #[test]
    fn tensor_shift_with_itself() {
        // V(2) x V(2) is the permutation with ones at (0,3),(1,2),(2,1),(3,0)
        let v = schwinger::shift(2).unwrap();
        let t = v.tensor(&v);
        for j in 0..4 {
            for k in 0..4 {
                let expected = if j + k == 3 {
                    root(0)
                } else {
                    PhaseEntry::Zero
                };
                assert_eq!(t.entry(j, k), expected);
            }
        }
    }

    #[test]
    fn tensor_scales_multiply() {
        let p = schwinger::fourier(2).unwrap();
        let t = p.tensor(&p);
        assert_eq!(t.scale_m(), 4);
        let dense = t.eval_dense();
        for j in 0..4 {
            for k in 0..4 {
                assert!((dense.get(j, k).norm() - 0.5).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let m = schwinger::twisted_shift(5, 3).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        let back: PhaseMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn json_shape_uses_null_for_zero() {
        let v = schwinger::shift(2).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert!(json["entries"][0][0].is_null());
        assert_eq!(json["entries"][0][1], 0);
    }

    #[test]
    fn json_rejects_unreduced_exponent() {
        let bad = r#"{"dim":1,"modulus":4,"scale_m":1,"entries":[[7]]}"#;
        assert!(serde_json::from_str::<PhaseMatrix>(bad).is_err());
    }
}
