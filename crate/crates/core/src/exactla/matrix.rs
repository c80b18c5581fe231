//! Dense matrices over an exact field: rank, null space and membership.

use std::fmt;

use super::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            entries.extend(row);
        }
        DenseMatrix {
            rows: r,
            cols: c,
            field,
            entries,
        }
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.entries[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(
            v.len(),
            self.cols,
            "dimension mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(other.row(r));
        }
        DenseMatrix {
            rows: self.rows,
            cols,
            field: self.field,
            entries,
        }
    }

    /// In-place Gaussian elimination. Pivots are chosen column by column,
    /// taking the first row (top to bottom) with a nonzero entry. With
    /// `reduced` the result is the reduced row echelon form. Returns the
    /// pivot columns in row order.
    fn echelonize(&mut self, reduced: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                self.swap_rows(p, row);
            }
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            self.scale_row(row, col, &inv);
            let start = if reduced { 0 } else { row + 1 };
            for r in start..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if !factor.is_zero() {
                    self.sub_row_multiple(r, row, col, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, from_col: usize, s: &Scalar) {
        for c in from_col..self.cols {
            let idx = r * self.cols + c;
            if !self.entries[idx].is_zero() {
                self.entries[idx] = &self.entries[idx] * s;
            }
        }
    }

    /// `row[target] -= factor * row[source]`, touching columns `>= from_col`.
    fn sub_row_multiple(&mut self, target: usize, source: usize, from_col: usize, factor: &Scalar) {
        let cols = self.cols;
        let (t, s) = if target < source {
            let (lo, hi) = self.entries.split_at_mut(source * cols);
            (&mut lo[target * cols..(target + 1) * cols], &hi[..cols])
        } else {
            let (lo, hi) = self.entries.split_at_mut(target * cols);
            (&mut hi[..cols], &lo[source * cols..(source + 1) * cols])
        };
        for c in from_col..cols {
            if !s[c].is_zero() {
                t[c] = &t[c] - &(factor * &s[c]);
            }
        }
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "DenseMatrix {}x{} over {}",
            self.rows, self.cols, self.field
        )?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn rank(m: &DenseMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let mut work = m.clone();
    work.echelonize(false).len()
}

/// Basis of the right null space, one vector per column of the result.
pub fn kernel_basis(m: &DenseMatrix) -> DenseMatrix {
    let mut work = m.clone();
    let pivots = work.echelonize(true);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..m.cols).filter(|&c| !is_pivot[c]).collect();
    let mut basis = DenseMatrix::zeros(m.field, m.cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis.set(f, k, m.field.one());
        for (r, &pc) in pivots.iter().enumerate() {
            let v = work.get(r, f);
            if !v.is_zero() {
                basis.set(pc, k, -v);
            }
        }
    }
    basis
}

/// Some `x` with `m x = v` when `v` lies in the column span of `m`.
pub fn solve_membership(m: &DenseMatrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(v.len(), m.rows, "right-hand side has the wrong length");
    let rhs = DenseMatrix::from_columns(m.field, m.rows, &[v.to_vec()]);
    let mut aug = m.hstack(&rhs);
    let pivots = aug.echelonize(true);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![m.field.zero(); m.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.get(r, m.cols).clone();
    }
    Some(x)
}

/// An incrementally grown subspace of `K^dim` kept in echelon form, for
/// repeated membership tests against one span.
#[derive(Clone, Debug)]
pub struct ColumnSpace {
    ambient: usize,
    field: FieldSpec,
    basis: Vec<(usize, Vec<Scalar>)>,
}

impl ColumnSpace {
    pub fn new(field: FieldSpec, ambient: usize) -> Self {
        ColumnSpace {
            ambient,
            field,
            basis: Vec::new(),
        }
    }

    /// The span of the columns of `m`.
    pub fn of_columns(m: &DenseMatrix) -> Self {
        let mut space = Self::new(m.field, m.rows);
        if m.rows > 0 {
            let mut t = m.transpose();
            let pivots = t.echelonize(false);
            for (r, &pc) in pivots.iter().enumerate() {
                space.basis.push((pc, t.row(r).to_vec()));
            }
        }
        space
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, v: &mut [Scalar]) {
        // Every stored vector vanishes at the pivots of the vectors stored
        // before it, so one pass in insertion order suffices.
        for (p, b) in &self.basis {
            if v[*p].is_zero() {
                continue;
            }
            let factor = v[*p].clone();
            for (x, y) in v.iter_mut().zip(b).skip(*p) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero");
        for x in w.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        self.basis.push((p, w));
        true
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&DenseMatrix::identity(q(), 3)), 3);
        assert_eq!(rank(&DenseMatrix::zeros(q(), 2, 3)), 0);
        assert_eq!(
            rank(&DenseMatrix::from_i64_rows(q(), &[&[1, 2], &[2, 4]])),
            1
        );
        assert_eq!(rank(&DenseMatrix::zeros(q(), 0, 4)), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&DenseMatrix::identity(q(), 2)).cols(), 0);

        let k = kernel_basis(&DenseMatrix::from_i64_rows(q(), &[&[1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![q().from_i64(-1), q().from_i64(1)]);

        let m = DenseMatrix::from_i64_rows(q(), &[&[1, 2], &[2, 4]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        // proportional to (2, -1)
        let c = k.column(0);
        assert_eq!(&c[0] + &(&c[1] * &q().from_i64(2)), q().zero());
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn membership_examples() {
        let v = vec![q().from_i64(3), q().from_i64(-7)];
        assert_eq!(
            solve_membership(&DenseMatrix::identity(q(), 2), &v),
            Some(v.clone())
        );
        assert_eq!(solve_membership(&DenseMatrix::zeros(q(), 2, 2), &v), None);
        let col = DenseMatrix::from_i64_rows(q(), &[&[1], &[2]]);
        let x = solve_membership(&col, &[q().from_i64(2), q().from_i64(4)]).unwrap();
        assert_eq!(x, vec![q().from_i64(2)]);
    }

    #[test]
    fn prime_field_rank_differs_from_rational() {
        // det = 7
        let rows: &[&[i64]] = &[&[1, 2], &[3, 13]];
        assert_eq!(rank(&DenseMatrix::from_i64_rows(q(), rows)), 2);
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(rank(&DenseMatrix::from_i64_rows(f7, rows)), 1);
    }

    fn matrix_strategy() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
            (
                Just(r),
                Just(c),
                proptest::collection::vec(-3i64..=3, r * c),
            )
        })
    }

    fn build(field: FieldSpec, r: usize, c: usize, data: &[i64]) -> DenseMatrix {
        let rows: Vec<Vec<Scalar>> = (0..r)
            .map(|i| (0..c).map(|j| field.from_i64(data[i * c + j])).collect())
            .collect();
        let mut m = DenseMatrix::zeros(field, r, c);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    proptest! {
        #[test]
        fn rank_nullity_and_transpose((r, c, data) in matrix_strategy()) {
            for field in [q(), FieldSpec::prime(5).unwrap()] {
                let m = build(field, r, c, &data);
                let rk = rank(&m);
                prop_assert_eq!(rk, rank(&m.transpose()));
                let k = kernel_basis(&m);
                prop_assert_eq!(k.cols() + rk, c);
                if r > 0 {
                    prop_assert!(m.mul(&k).is_zero());
                }
                prop_assert_eq!(ColumnSpace::of_columns(&m).dim(), rk);
            }
        }

        #[test]
        fn membership_recovers_combination((r, c, data) in matrix_strategy(),
                                           coeffs in proptest::collection::vec(-4i64..=4, 6)) {
            let m = build(q(), r, c, &data);
            let x: Vec<Scalar> = (0..c).map(|j| q().from_i64(coeffs[j])).collect();
            let v = if c == 0 { vec![q().zero(); r] } else { m.mul_vec(&x) };
            let sol = solve_membership(&m, &v).expect("v is in the span");
            if c > 0 {
                prop_assert_eq!(m.mul_vec(&sol), v.clone());
            }
            prop_assert!(ColumnSpace::of_columns(&m).contains(&v));
        }
    }
}
