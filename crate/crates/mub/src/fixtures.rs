//! Hard-coded low-dimensional reference matrices (d = 2, 3, 4, 6, 12, 20) and
//! checks that the programmatic constructions reproduce them. Tables are
//! transcribed independently of the builders so a slip on either side shows up
//! as a mismatch.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::constructions::{self, Method, MubSet};
use crate::dense::Tolerance;
use crate::phase::{phase_mul_diag, PhaseEntry, PhaseMatrix};
use crate::schwinger;
use crate::verify;

fn table3(modulus: u64, scale: u64, rows: [[u64; 3]; 3]) -> PhaseMatrix {
    PhaseMatrix::from_fn(3, modulus, scale, |j, k| PhaseEntry::Root(rows[j][k]))
        .expect("static table is well formed")
}

/// The printed second basis in dimension 2: `(1/sqrt 2) [[1, 1], [i, -i]]`.
/// Differs from the even-branch construction by a column swap.
pub fn d2_second_basis() -> PhaseMatrix {
    PhaseMatrix::from_fn(2, 4, 2, |j, k| PhaseEntry::Root([[0, 0], [1, 3]][j][k]))
        .expect("static table is well formed")
}

/// The printed second and third bases in dimension 3, exponents over the 3rd
/// roots of unity (stored mod 12 with q = e^{2πi/3} at exponent 4).
pub fn d3_printed_bases() -> [PhaseMatrix; 2] {
    [
        table3(12, 3, [[0, 0, 0], [8, 0, 4], [0, 8, 4]]),
        table3(12, 3, [[0, 0, 0], [4, 8, 0], [0, 8, 4]]),
    ]
}

/// A printed symmetric variant for dimension 3: together with its adjoint and
/// the Fourier basis it spans the same maximal family, with the pair matching
/// the constructed second and third bases up to column phases.
pub fn d3_variant_basis() -> PhaseMatrix {
    table3(12, 3, [[0, 0, 4], [0, 4, 0], [4, 0, 0]])
}

/// The printed twisting diagonal for dimension 6, exponents over the 12th
/// roots of unity.
pub fn d6_twist_diag() -> PhaseMatrix {
    let exps: [u64; 6] = [0, 1, 0, 9, 4, 9];
    PhaseMatrix::from_fn(6, 12, 1, |j, k| {
        if j == k {
            PhaseEntry::Root(exps[j])
        } else {
            PhaseEntry::Zero
        }
    })
    .expect("static table is well formed")
}

/// The printed second basis in dimension 6: the twisting diagonal applied to
/// the Fourier basis. Satisfies `P* V_1 P = iU`.
pub fn d6_second_basis() -> PhaseMatrix {
    let rows: [[u64; 6]; 6] = [
        [0, 0, 0, 0, 0, 0],
        [1, 3, 5, 7, 9, 11],
        [0, 4, 8, 0, 4, 8],
        [9, 3, 9, 3, 9, 3],
        [4, 0, 8, 4, 0, 8],
        [9, 7, 5, 3, 1, 11],
    ];
    PhaseMatrix::from_fn(6, 12, 6, |j, k| PhaseEntry::Root(rows[j][k]))
        .expect("static table is well formed")
}

fn d5_printed(j: usize) -> PhaseMatrix {
    // rows of D^{-j} P0 over the 5th roots (stored mod 20, q at exponent 4)
    let tables: [[[u64; 5]; 5]; 4] = [
        [
            [0, 0, 0, 0, 0],
            [0, 4, 8, 12, 16],
            [0, 8, 16, 4, 12],
            [0, 12, 4, 16, 8],
            [0, 16, 12, 8, 4],
        ],
        [
            [0, 0, 0, 0, 0],
            [16, 0, 4, 8, 12],
            [8, 16, 4, 12, 0],
            [16, 8, 0, 12, 4],
            [0, 16, 12, 8, 4],
        ],
        [
            [0, 0, 0, 0, 0],
            [12, 16, 0, 4, 8],
            [16, 4, 12, 0, 8],
            [12, 4, 16, 8, 0],
            [0, 16, 12, 8, 4],
        ],
        [
            [0, 0, 0, 0, 0],
            [8, 12, 16, 0, 4],
            [4, 12, 0, 8, 16],
            [8, 0, 12, 4, 16],
            [0, 16, 12, 8, 4],
        ],
    ];
    PhaseMatrix::from_fn(5, 20, 5, |r, c| PhaseEntry::Root(tables[j][r][c]))
        .expect("static table is well formed")
}

/// The printed three-basis family in dimension 12: the j-th dimension-3 basis
/// tensored with the j-th dimension-4 basis, in that factor order.
pub fn d12_printed_bases() -> Vec<PhaseMatrix> {
    let p0 = schwinger::fourier(3).expect("d = 3 is valid");
    let [p1, p2] = d3_printed_bases();
    let q = constructions::d4_bases();
    vec![p0.tensor(&q[0]), p1.tensor(&q[1]), p2.tensor(&q[2])]
}

/// The printed four-basis family in dimension 20: the j-th dimension-4 basis
/// tensored with the j-th dimension-5 basis.
pub fn d20_printed_bases() -> Vec<PhaseMatrix> {
    let q = constructions::d4_bases();
    (0..4).map(|j| q[j].tensor(&d5_printed(j))).collect()
}

/// How two phase matrices relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MatrixRelation {
    /// Identical entry for entry once brought to a common modulus.
    Exact,
    /// Same basis: columns agree up to a permutation and unit phases.
    ColumnEquivalent,
    Different,
}

/// Classifies the relation between two matrices, treating them as bases
/// (column sets).
pub fn compare_matrices(a: &PhaseMatrix, b: &PhaseMatrix, tol: Tolerance) -> MatrixRelation {
    if a.dim() != b.dim() {
        return MatrixRelation::Different;
    }
    let m = a.modulus().lcm(&b.modulus());
    let lifted = (a.to_modulus(m), b.to_modulus(m));
    if let (Ok(la), Ok(lb)) = lifted {
        if la == lb {
            return MatrixRelation::Exact;
        }
    }
    let (da, db) = (a.eval_dense(), b.eval_dense());
    let d = a.dim();
    let norm = |m: &crate::dense::DenseMatrix, c: usize| -> f64 {
        (0..d).map(|r| m.get(r, c).norm_sqr()).sum::<f64>().sqrt()
    };
    let mut used = vec![false; d];
    'cols: for i in 0..d {
        for j in 0..d {
            if used[j] {
                continue;
            }
            let mut acc = Complex64::new(0.0, 0.0);
            for r in 0..d {
                acc += da.get(r, i).conj() * db.get(r, j);
            }
            let cosine = acc.norm() / (norm(&da, i) * norm(&db, j));
            if (1.0 - cosine).abs() < tol.abs_eps {
                used[j] = true;
                continue 'cols;
            }
        }
        return MatrixRelation::Different;
    }
    MatrixRelation::ColumnEquivalent
}

/// Result of one fixture check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum FixtureOutcome {
    ExactMatch,
    ColumnEquivalent,
    Verified { max_deviation: f64 },
    Mismatch { detail: String },
}

impl fmt::Display for FixtureOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureOutcome::ExactMatch => write!(f, "exact match"),
            FixtureOutcome::ColumnEquivalent => write!(f, "column equivalent"),
            FixtureOutcome::Verified { max_deviation } => {
                write!(f, "verified (max deviation {max_deviation:.2e})")
            }
            FixtureOutcome::Mismatch { detail } => write!(f, "MISMATCH: {detail}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureCheck {
    pub name: &'static str,
    pub outcome: FixtureOutcome,
}

impl FixtureCheck {
    pub fn passed(&self) -> bool {
        !matches!(self.outcome, FixtureOutcome::Mismatch { .. })
    }
}

fn check_relation(
    name: &'static str,
    a: &PhaseMatrix,
    b: &PhaseMatrix,
    tol: Tolerance,
    require_exact: bool,
) -> FixtureCheck {
    let outcome = match compare_matrices(a, b, tol) {
        MatrixRelation::Exact => FixtureOutcome::ExactMatch,
        MatrixRelation::ColumnEquivalent if !require_exact => FixtureOutcome::ColumnEquivalent,
        MatrixRelation::ColumnEquivalent => FixtureOutcome::Mismatch {
            detail: "only column equivalent, exact agreement expected".into(),
        },
        MatrixRelation::Different => FixtureOutcome::Mismatch {
            detail: "matrices describe different bases".into(),
        },
    };
    FixtureCheck { name, outcome }
}

fn check_deviation(name: &'static str, deviation: f64, tol: Tolerance) -> FixtureCheck {
    let outcome = if tol.within(deviation) {
        FixtureOutcome::Verified {
            max_deviation: deviation,
        }
    } else {
        FixtureOutcome::Mismatch {
            detail: format!(
                "deviation {deviation:.3e} exceeds tolerance {:.1e}",
                tol.abs_eps
            ),
        }
    };
    FixtureCheck { name, outcome }
}

fn mum_deviation(dim: usize, bases: Vec<PhaseMatrix>, tol: Tolerance) -> f64 {
    let set = MubSet::new(dim, Method::Fixture, bases).expect("fixture dims are consistent");
    let report = verify::verify_mum(&set, tol);
    report
        .pairs
        .iter()
        .map(|p| p.max_deviation)
        .chain(report.unitarity.iter().copied())
        .fold(0.0, f64::max)
}

/// Runs every fixture check. A failing check means the builders and the
/// transcribed reference tables disagree.
pub fn run_all(tol: Tolerance) -> Vec<FixtureCheck> {
    let mut checks = Vec::new();

    // dimension 2
    checks.push(check_relation(
        "d2: printed second basis vs even-branch construction",
        &d2_second_basis(),
        &constructions::build_p1_even(2).expect("d = 2 is even"),
        tol,
        false,
    ));
    checks.push(check_deviation(
        "d2: printed triple is mutually unbiased",
        mum_deviation(
            2,
            vec![schwinger::fourier(2).unwrap(), d2_second_basis()],
            tol,
        ),
        tol,
    ));

    // dimension 3
    let [p1, p2] = d3_printed_bases();
    checks.push(check_relation(
        "d3: printed second basis equals construction",
        &p1,
        &constructions::build_pk_odd(3, 1).unwrap(),
        tol,
        true,
    ));
    checks.push(check_relation(
        "d3: printed third basis equals construction",
        &p2,
        &constructions::build_pk_odd(3, 2).unwrap(),
        tol,
        true,
    ));
    checks.push(check_relation(
        "d3: variant basis is the constructed third basis",
        &d3_variant_basis(),
        &constructions::build_pk_odd(3, 2).unwrap(),
        tol,
        false,
    ));
    checks.push(check_relation(
        "d3: adjoint of the variant is the constructed second basis",
        &d3_variant_basis().adjoint(),
        &constructions::build_pk_odd(3, 1).unwrap(),
        tol,
        false,
    ));
    checks.push(check_deviation(
        "d3: variant maximal set is mutually unbiased",
        mum_deviation(
            3,
            vec![
                schwinger::fourier(3).unwrap(),
                d3_variant_basis(),
                d3_variant_basis().adjoint(),
            ],
            tol,
        ),
        tol,
    ));
    checks.push(check_deviation(
        "d3: printed complete set of four is mutually unbiased",
        mum_deviation(3, vec![schwinger::fourier(3).unwrap(), p1, p2], tol),
        tol,
    ));

    // dimension 4
    checks.push(check_deviation(
        "d4: five-basis completion is mutually unbiased",
        mum_deviation(4, constructions::d4_bases().to_vec(), tol),
        tol,
    ));
    checks.push(check_deviation(
        "d4: recombining matrix is unitary",
        constructions::d4_recombiner()
            .eval_dense()
            .max_deviation_from_unitary(),
        tol,
    ));
    {
        let [_, p01p, p10p, _] = constructions::d4_bases();
        let a = constructions::d4_recombiner().eval_dense();
        let p0 = schwinger::fourier(2).unwrap();
        let p10 = d2_second_basis().tensor(&p0).eval_dense();
        let p01 = p0.tensor(&d2_second_basis()).eval_dense();
        let dev1 = p10
            .max_abs_diff(&p10p.eval_dense().mul(&a).unwrap())
            .unwrap();
        let dev2 = p01
            .max_abs_diff(&p01p.eval_dense().mul(&a.adjoint()).unwrap())
            .unwrap();
        checks.push(check_deviation(
            "d4: recombining matrix relates block bases to tensor bases",
            dev1.max(dev2),
            tol,
        ));
    }

    // dimension 6
    checks.push(check_relation(
        "d6: printed second basis equals twist diagonal times Fourier",
        &d6_second_basis(),
        &phase_mul_diag(&d6_twist_diag(), &schwinger::fourier(6).unwrap()).unwrap(),
        tol,
        true,
    ));
    {
        // the twisted basis conjugates V_1 to iU rather than ωU
        let p = d6_second_basis().eval_dense();
        let v1 = schwinger::twisted_shift(6, 1).unwrap().eval_dense();
        let target = schwinger::clock(6)
            .unwrap()
            .eval_dense()
            .scale(Complex64::new(0.0, 1.0));
        let dev = p
            .adjoint()
            .mul(&v1)
            .unwrap()
            .mul(&p)
            .unwrap()
            .max_abs_diff(&target)
            .unwrap();
        checks.push(check_deviation(
            "d6: printed basis conjugates the twisted shift to iU",
            dev,
            tol,
        ));
    }
    checks.push(check_deviation(
        "d6: printed triple is mutually unbiased",
        mum_deviation(
            6,
            vec![schwinger::fourier(6).unwrap(), d6_second_basis()],
            tol,
        ),
        tol,
    ));

    // dimension 12
    checks.push(check_deviation(
        "d12: printed three-basis family is mutually unbiased",
        mum_deviation(12, d12_printed_bases(), tol),
        tol,
    ));
    {
        // constructed set uses the opposite tensor factor order
        let constructed = constructions::construct_mubs(12).unwrap();
        let q = constructions::d4_bases();
        let p0 = schwinger::fourier(3).unwrap();
        let [p1, p2] = d3_printed_bases();
        let swapped = [q[0].tensor(&p0), q[1].tensor(&p1), q[2].tensor(&p2)];
        let mut worst = MatrixRelation::Exact;
        for (s, c) in swapped.iter().zip(constructed.bases()) {
            match compare_matrices(s, c, tol) {
                MatrixRelation::Exact => {}
                MatrixRelation::ColumnEquivalent if worst == MatrixRelation::Exact => {
                    worst = MatrixRelation::ColumnEquivalent;
                }
                MatrixRelation::ColumnEquivalent => {}
                MatrixRelation::Different => worst = MatrixRelation::Different,
            }
        }
        let outcome = match worst {
            MatrixRelation::Exact => FixtureOutcome::ExactMatch,
            MatrixRelation::ColumnEquivalent => FixtureOutcome::ColumnEquivalent,
            MatrixRelation::Different => FixtureOutcome::Mismatch {
                detail: "swapped printed factors disagree with constructed set".into(),
            },
        };
        checks.push(FixtureCheck {
            name: "d12: printed factors in swapped order equal constructed set",
            outcome,
        });
    }

    // dimension 20
    checks.push(check_deviation(
        "d20: printed four-basis family is mutually unbiased",
        mum_deviation(20, d20_printed_bases(), tol),
        tol,
    ));
    {
        let constructed = constructions::construct_mubs(20).unwrap();
        let printed = d20_printed_bases();
        let mut check = FixtureCheck {
            name: "d20: printed family equals constructed set",
            outcome: FixtureOutcome::ExactMatch,
        };
        if printed.len() != constructed.bases().len() {
            check.outcome = FixtureOutcome::Mismatch {
                detail: format!(
                    "printed {} bases, constructed {}",
                    printed.len(),
                    constructed.bases().len()
                ),
            };
        } else {
            for (p, c) in printed.iter().zip(constructed.bases()) {
                if compare_matrices(p, c, tol) != MatrixRelation::Exact {
                    check.outcome = FixtureOutcome::Mismatch {
                        detail: "printed and constructed bases differ".into(),
                    };
                    break;
                }
            }
        }
        checks.push(check);
    }

    checks
}
