//! Construction of mutually unbiased bases for each dimension class: a triple
//! for every dimension, a complete set of `d + 1` for prime `d`, clique-indexed
//! families for odd composite `d`, tensor combinations for composite `d`, and
//! the explicit five-basis completion in dimension 4.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::clique;
use crate::error::{Error, Result};
use crate::phase::{phase_mul_diag, PhaseEntry, PhaseMatrix};
use crate::schwinger;

/// How a [`MubSet`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    GenericTriple,
    EvenTriple,
    OddClique,
    PrimeFull,
    TensorCombined,
    D4Complete,
    Fixture,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::GenericTriple => "generic-triple",
            Method::EvenTriple => "even-triple",
            Method::OddClique => "odd-clique",
            Method::PrimeFull => "prime-full",
            Method::TensorCombined => "tensor-combined",
            Method::D4Complete => "d4-complete",
            Method::Fixture => "fixture",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic-triple" => Ok(Method::GenericTriple),
            "even-triple" => Ok(Method::EvenTriple),
            "odd-clique" => Ok(Method::OddClique),
            "prime-full" => Ok(Method::PrimeFull),
            "tensor-combined" => Ok(Method::TensorCombined),
            "d4-complete" => Ok(Method::D4Complete),
            "fixture" => Ok(Method::Fixture),
            _ => Err(Error::InvalidParams(format!("unknown method `{s}`"))),
        }
    }
}

/// An ordered family of unbiased unitaries. The identity basis is implicit:
/// `claimed_count` counts it, `bases` does not.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MubSetRepr", into = "MubSetRepr")]
pub struct MubSet {
    dim: usize,
    method: Method,
    claimed_count: usize,
    bases: Vec<PhaseMatrix>,
}

#[derive(Serialize, Deserialize, Clone)]
struct MubSetRepr {
    dim: usize,
    method: Method,
    claimed_count: usize,
    bases: Vec<PhaseMatrix>,
}

impl From<MubSet> for MubSetRepr {
    fn from(s: MubSet) -> Self {
        MubSetRepr {
            dim: s.dim,
            method: s.method,
            claimed_count: s.claimed_count,
            bases: s.bases,
        }
    }
}

impl TryFrom<MubSetRepr> for MubSet {
    type Error = Error;

    fn try_from(repr: MubSetRepr) -> Result<Self> {
        let set = MubSet::new(repr.dim, repr.method, repr.bases)?;
        if repr.claimed_count != set.claimed_count {
            return Err(Error::InvalidData(format!(
                "claimed_count {} does not match {} stored bases",
                repr.claimed_count,
                set.bases.len()
            )));
        }
        Ok(set)
    }
}

impl MubSet {
    pub fn new(dim: usize, method: Method, bases: Vec<PhaseMatrix>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionTooSmall { min: 1, got: 0 });
        }
        for b in &bases {
            if b.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: b.dim(),
                });
            }
        }
        let claimed_count = bases.len() + 1;
        Ok(MubSet {
            dim,
            method,
            claimed_count,
            bases,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Number of bases including the implicit identity.
    pub fn claimed_count(&self) -> usize {
        self.claimed_count
    }

    /// The stored (non-identity) bases.
    pub fn bases(&self) -> &[PhaseMatrix] {
        &self.bases
    }
}

/// Residues mod `d` whose pairwise differences are coprime to `d`; indexes a
/// pairwise mutually unbiased family of bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CliqueSetRepr", into = "CliqueSetRepr")]
pub struct CliqueSet {
    dim: usize,
    members: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone)]
struct CliqueSetRepr {
    dim: usize,
    members: Vec<usize>,
}

impl From<CliqueSet> for CliqueSetRepr {
    fn from(c: CliqueSet) -> Self {
        CliqueSetRepr {
            dim: c.dim,
            members: c.members,
        }
    }
}

impl TryFrom<CliqueSetRepr> for CliqueSet {
    type Error = Error;

    fn try_from(repr: CliqueSetRepr) -> Result<Self> {
        CliqueSet::new(repr.dim, repr.members)
    }
}

impl CliqueSet {
    pub fn new(dim: usize, mut members: Vec<usize>) -> Result<Self> {
        if dim % 2 == 0 {
            return Err(Error::OddRequired(dim));
        }
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            if m >= dim {
                return Err(Error::IndexOutOfRange { index: m, dim });
            }
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let divisor = members[i].abs_diff(members[j]).gcd(&dim);
                if divisor != 1 {
                    return Err(Error::InvalidClique {
                        dim,
                        a: members[i],
                        b: members[j],
                        divisor,
                    });
                }
            }
        }
        Ok(CliqueSet { dim, members })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

pub fn smallest_prime_factor(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return Some(f);
        }
        f += 1;
    }
    Some(n)
}

fn odd_prime_square_root(d: usize) -> Option<usize> {
    let p = (d as f64).sqrt().round() as usize;
    (p * p == d && p % 2 == 1 && is_prime(p)).then_some(p)
}

/// `P_k = D^{-k} P0` for odd `d`; diagonalizes `V_k` to the clock `U`.
pub fn build_pk_odd(dim: usize, k: usize) -> Result<PhaseMatrix> {
    if dim % 2 == 0 {
        return Err(Error::OddRequired(dim));
    }
    if k >= dim {
        return Err(Error::IndexOutOfRange { index: k, dim });
    }
    let d_inv_k = schwinger::quadratic_diag_pow(dim, -(k as i128))?;
    phase_mul_diag(&d_inv_k, &schwinger::fourier(dim)?)
}

/// `P1 = D' P0` for even `d`; diagonalizes `V_1` to `ωU`.
pub fn build_p1_even(dim: usize) -> Result<PhaseMatrix> {
    if dim % 2 != 0 {
        return Err(Error::EvenRequired(dim));
    }
    phase_mul_diag(
        &schwinger::even_quadratic_diag(dim)?,
        &schwinger::fourier(dim)?,
    )
}

/// `{I, P0, P1}`: three mutually unbiased bases in any dimension `d >= 2`.
pub fn build_generic_triple(dim: usize) -> Result<MubSet> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: dim });
    }
    let p0 = schwinger::fourier(dim)?;
    let (p1, method) = if dim % 2 == 0 {
        (build_p1_even(dim)?, Method::EvenTriple)
    } else {
        (build_pk_odd(dim, 1)?, Method::GenericTriple)
    };
    MubSet::new(dim, method, vec![p0, p1])
}

/// Maximum coprime-difference residue set for odd `d`, lexicographically
/// smallest among the maximum ones.
pub fn max_coprime_clique(dim: usize) -> Result<CliqueSet> {
    CliqueSet::new(dim, clique::max_clique(dim)?)
}

/// Every maximum coprime-difference residue set for odd `d`.
pub fn all_max_coprime_cliques(dim: usize) -> Result<Vec<CliqueSet>> {
    clique::all_max_cliques(dim)?
        .into_iter()
        .map(|members| CliqueSet::new(dim, members))
        .collect()
}

/// `{I} ∪ {P_k : k ∈ E}` for a coprime-difference set `E` in odd dimension.
pub fn build_odd_clique_mub(dim: usize, set: &CliqueSet) -> Result<MubSet> {
    if set.dim() != dim {
        return Err(Error::DimensionMismatch {
            left: dim,
            right: set.dim(),
        });
    }
    let bases = set
        .members()
        .iter()
        .map(|&k| build_pk_odd(dim, k))
        .collect::<Result<Vec<_>>>()?;
    MubSet::new(dim, Method::OddClique, bases)
}

/// The complete family `{I, D^{-k} P0 : k = 0..d-1}` for prime `d`.
pub fn build_prime_full(dim: usize) -> Result<MubSet> {
    if !is_prime(dim) {
        return Err(Error::NotPrime(dim));
    }
    let bases = if dim == 2 {
        // the quadratic diagonal needs odd d; dimension 2 uses the even branch
        vec![schwinger::fourier(2)?, build_p1_even(2)?]
    } else {
        (0..dim)
            .map(|k| build_pk_odd(dim, k))
            .collect::<Result<Vec<_>>>()?
    };
    MubSet::new(dim, Method::PrimeFull, bases)
}

/// Pairs the i-th bases of two families by Kronecker product.
pub fn tensor_combine(a: &MubSet, b: &MubSet) -> MubSet {
    let n = a.bases().len().min(b.bases().len());
    let bases = (0..n).map(|i| a.bases()[i].tensor(&b.bases()[i])).collect();
    MubSet::new(a.dim() * b.dim(), Method::TensorCombined, bases)
        .expect("tensor factors have consistent dimensions")
}

/// `p + 1` bases in dimension `p^2` from the diagonal tensor pairs
/// `P_j ⊗ P_j`, for odd prime `p`.
pub fn build_prime_square_tensor(p: usize) -> Result<MubSet> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let bases = (0..p)
        .map(|j| Ok(build_pk_odd(p, j)?.tensor(&build_pk_odd(p, j)?)))
        .collect::<Result<Vec<_>>>()?;
    MubSet::new(p * p, Method::TensorCombined, bases)
}

// --- dimension 4 ------------------------------------------------------------
//
// The four bases below complete {I} to five mutually unbiased bases of C^4.
// They are stored as exact phase tables over the 8th roots of unity
// (exponent n stands for exp(2πi n/8); 0 = 1, 2 = i, 4 = -1, 6 = -i).

const D4_TABLES: [[[u64; 4]; 4]; 4] = [
    // P00 = P0 x P0
    [[0, 0, 0, 0], [0, 4, 0, 4], [0, 0, 4, 4], [0, 4, 4, 0]],
    // P01' : upper blocks P0, lower blocks -i P0', i P0'
    [[0, 0, 0, 0], [0, 4, 0, 4], [6, 6, 2, 2], [2, 6, 6, 2]],
    // P10' : upper blocks P1, lower blocks -P1', P1'
    [[0, 0, 0, 0], [2, 6, 2, 6], [4, 4, 0, 0], [2, 6, 6, 2]],
    // P11 = P1 x P1
    [[0, 0, 0, 0], [2, 6, 2, 6], [2, 2, 6, 6], [4, 0, 0, 4]],
];

fn d4_matrix(table: &[[u64; 4]; 4]) -> PhaseMatrix {
    PhaseMatrix::from_fn(4, 8, 4, |j, k| PhaseEntry::Root(table[j][k]))
        .expect("static table is well formed")
}

/// The four stored bases of the five-basis completion in dimension 4, in
/// lexicographic index order (0,0), (0,1), (1,0), (1,1).
pub fn d4_bases() -> [PhaseMatrix; 4] {
    [
        d4_matrix(&D4_TABLES[0]),
        d4_matrix(&D4_TABLES[1]),
        d4_matrix(&D4_TABLES[2]),
        d4_matrix(&D4_TABLES[3]),
    ]
}

/// The unitary `A` relating the recombined bases to the plain tensor products:
/// `P10 = P10' A` and `P01 = P01' A*`.
pub fn d4_recombiner() -> PhaseMatrix {
    let table: [[Option<u64>; 4]; 4] = [
        [Some(7), None, None, Some(1)],
        [None, Some(7), Some(1), None],
        [None, Some(1), Some(7), None],
        [Some(1), None, None, Some(7)],
    ];
    PhaseMatrix::from_fn(4, 8, 2, |j, k| PhaseEntry::from(table[j][k]))
        .expect("static table is well formed")
}

/// The five-basis completion `{I, P00, P01', P10', P11}` in dimension 4.
pub fn build_d4_complete() -> MubSet {
    MubSet::new(4, Method::D4Complete, d4_bases().to_vec()).expect("hard-coded bases are 4x4")
}

/// Picks the construction with the largest basis count available for `dim`.
pub fn construct_mubs(dim: usize) -> Result<MubSet> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: dim });
    }
    if is_prime(dim) {
        return build_prime_full(dim);
    }
    if dim == 4 {
        return Ok(build_d4_complete());
    }
    if dim % 2 == 1 {
        if let Some(p) = odd_prime_square_root(dim) {
            return build_prime_square_tensor(p);
        }
        return build_odd_clique_mub(dim, &max_coprime_clique(dim)?);
    }
    // even composite: the triple always works; a 4m split may beat it
    let triple = build_generic_triple(dim)?;
    if dim % 4 == 0 {
        let combined = tensor_combine(&build_d4_complete(), &construct_mubs(dim / 4)?);
        if combined.claimed_count() >= triple.claimed_count() {
            return Ok(combined);
        }
    }
    Ok(triple)
}
