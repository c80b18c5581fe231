//! Benchmark fixtures shared by the criterion targets.
use ginbetti::exactla::{DenseMatrix, FieldSpec};
use ginbetti::groebner::GradedIdeal;
use ginbetti::monideal::MonomialIdeal;
use ginbetti::ring::RingCtx;
use ginbetti::verifier::{random_ideal, IdealSpec, Shape};

fn ring(n: usize, field: FieldSpec) -> RingCtx {
    RingCtx::new(n, field).expect("ring")
}

/// `rows x cols` matrix with small pseudo-random integer entries.
pub fn integer_matrix(field: FieldSpec, rows: usize, cols: usize, seed: u64) -> DenseMatrix {
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    let rows: Vec<Vec<i64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    ((state >> 33) % 19) as i64 - 9
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    DenseMatrix::from_i64_rows(field, &refs)
}

/// `(x1^2, x2^2) + (x1, x2, x3)^3`.
pub fn squares_plus_cube() -> GradedIdeal {
    let c = ring(3, FieldSpec::rationals());
    GradedIdeal::parse(&c, &["x1^2", "x2^2"])
        .unwrap()
        .plus(MonomialIdeal::maximal_power(&c, 3).to_graded().gens())
        .unwrap()
}

/// The twisted cubic in four variables.
pub fn twisted_cubic() -> GradedIdeal {
    let c = ring(4, FieldSpec::rationals());
    GradedIdeal::parse(&c, &["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"]).unwrap()
}

/// Two dense random quadrics in `n` variables.
pub fn dense_quadrics(n: usize, seed: u64) -> GradedIdeal {
    random_ideal(&IdealSpec::new(n, 2, (2, 2), Shape::DenseRandom), seed).unwrap()
}

/// `(x1, .., xn)^d`, a strongly stable ideal with many generators.
pub fn maximal_power(n: usize, d: u32) -> MonomialIdeal {
    MonomialIdeal::maximal_power(&ring(n, FieldSpec::rationals()), d)
}
