use std::collections::HashMap;

use super::quotient::Quotient;
use crate::exactla::{kernel_basis, ColumnSpace, DenseMatrix, Scalar};

/// All `k`-subsets of `0..p` in lexicographic order.
pub(crate) fn subsets(p: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, p: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in start..p {
            if p - a < k - cur.len() {
                break;
            }
            cur.push(a);
            rec(a + 1, p, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= p {
        rec(0, p, k, &mut Vec::new(), &mut out);
    }
    out
}

/// The Koszul complex `K(y_1..y_p; S/I)` degree by degree, with memoized
/// cycles and boundaries.
///
/// `K_{i,d}` is the direct sum over `i`-subsets `A` of `(S/I)_{d-i} e_A`,
/// blocks ordered lexicographically, and
/// `d(e_A v) = sum_k (-1)^k e_{A minus a_k} y_{a_k} v`.
pub(crate) struct KoszulComplex<'q> {
    q: &'q Quotient,
    forms: Vec<Vec<Scalar>>,
    form_mats: Vec<HashMap<u32, DenseMatrix>>,
    subsets: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    cycles: HashMap<(usize, u32), DenseMatrix>,
    boundaries: HashMap<(usize, u32), ColumnSpace>,
    representatives: HashMap<(usize, u32), Vec<Vec<Scalar>>>,
}

impl<'q> KoszulComplex<'q> {
    pub(crate) fn new(q: &'q Quotient, forms: Vec<Vec<Scalar>>) -> Self {
        let p = forms.len();
        let subsets: Vec<Vec<Vec<usize>>> = (0..=p).map(|k| subsets(p, k)).collect();
        let index = subsets
            .iter()
            .map(|s| s.iter().cloned().enumerate().map(|(k, a)| (a, k)).collect())
            .collect();
        KoszulComplex {
            q,
            form_mats: vec![HashMap::new(); p],
            forms,
            subsets,
            index,
            cycles: HashMap::new(),
            boundaries: HashMap::new(),
            representatives: HashMap::new(),
        }
    }

    pub(crate) fn p(&self) -> usize {
        self.forms.len()
    }

    fn block(&self, i: usize, d: u32) -> usize {
        self.q.dim(d as i64 - i as i64)
    }

    pub(crate) fn dim(&self, i: usize, d: u32) -> usize {
        if i > self.p() {
            return 0;
        }
        self.subsets[i].len() * self.block(i, d)
    }

    fn form_matrix(&mut self, k: usize, d: u32) -> &DenseMatrix {
        if !self.form_mats[k].contains_key(&d) {
            let m = self.q.form_matrix(&self.forms[k], d);
            self.form_mats[k].insert(d, m);
        }
        &self.form_mats[k][&d]
    }

    /// `d_{i,d}: K_{i,d} -> K_{i-1,d}`, for `1 <= i <= p`.
    pub(crate) fn differential(&mut self, i: usize, d: u32) -> DenseMatrix {
        let field = self.q.field();
        let (rows, cols) = (self.dim(i - 1, d), self.dim(i, d));
        let mut m = DenseMatrix::zeros(field, rows, cols);
        let src = self.block(i, d);
        let dst = self.block(i - 1, d);
        if rows == 0 || cols == 0 {
            return m;
        }
        let deg = d - i as u32;
        let sets = self.subsets[i].clone();
        for (col_block, a) in sets.iter().enumerate() {
            for (k, &ak) in a.iter().enumerate() {
                let mut face = a.clone();
                face.remove(k);
                let row_block = self.index[i - 1][&face];
                let negate = k % 2 == 1;
                let fm = self.form_matrix(ak, deg).clone();
                for r in 0..dst {
                    for c in 0..src {
                        let v = fm.get(r, c);
                        if v.is_zero() {
                            continue;
                        }
                        let v = if negate { -v } else { v.clone() };
                        m.set(row_block * dst + r, col_block * src + c, v);
                    }
                }
            }
        }
        m
    }

    /// Basis of `Z_{i,d}` as matrix columns.
    pub(crate) fn cycles(&mut self, i: usize, d: u32) -> &DenseMatrix {
        if !self.cycles.contains_key(&(i, d)) {
            let z = if i == 0 {
                DenseMatrix::identity(self.q.field(), self.dim(0, d))
            } else {
                kernel_basis(&self.differential(i, d))
            };
            self.cycles.insert((i, d), z);
        }
        &self.cycles[&(i, d)]
    }

    /// `B_{i,d}`, the image of `d_{i+1,d}`.
    pub(crate) fn boundaries(&mut self, i: usize, d: u32) -> &ColumnSpace {
        if !self.boundaries.contains_key(&(i, d)) {
            let b = if i + 1 > self.p() {
                ColumnSpace::new(self.q.field(), self.dim(i, d))
            } else {
                ColumnSpace::of_columns(&self.differential(i + 1, d))
            };
            self.boundaries.insert((i, d), b);
        }
        &self.boundaries[&(i, d)]
    }

    /// `dim H_i` in degree `d`, as `dim K_i - rank d_i - rank d_{i+1}`.
    pub(crate) fn homology(&mut self, i: usize, d: u32) -> u64 {
        if i > self.p() || self.dim(i, d) == 0 {
            return 0;
        }
        let out = if i == 0 {
            0
        } else {
            self.boundaries(i - 1, d).dim()
        };
        let b = self.boundaries(i, d).dim();
        (self.dim(i, d) - out - b) as u64
    }

    /// Cycles whose classes form a basis of `H_i` in degree `d`.
    fn representatives(&mut self, i: usize, d: u32) -> Vec<Vec<Scalar>> {
        if let Some(r) = self.representatives.get(&(i, d)) {
            return r.clone();
        }
        let h = self.homology(i, d) as usize;
        let mut reps = Vec::with_capacity(h);
        if h > 0 {
            let z = self.cycles(i, d).clone();
            let mut space = self.boundaries(i, d).clone();
            for c in 0..z.cols() {
                let col = z.column(c);
                if space.insert(&col) {
                    reps.push(col);
                    if reps.len() == h {
                        break;
                    }
                }
            }
        }
        self.representatives.insert((i, d), reps.clone());
        reps
    }

    /// Multiplies a chain in `K_{i,d}` by the linear form with coefficient
    /// matrix `mult` (acting `Q_{d-i} -> Q_{d-i+1}`) blockwise.
    fn multiply_chain(&self, i: usize, d: u32, mult: &DenseMatrix, v: &[Scalar]) -> Vec<Scalar> {
        let (src, dst) = (self.block(i, d), self.block(i, d + 1));
        let field = self.q.field();
        let mut out = vec![field.zero(); self.subsets[i].len() * dst];
        for blk in 0..self.subsets[i].len() {
            let piece = mult.mul_vec(&v[blk * src..(blk + 1) * src]);
            out[blk * dst..(blk + 1) * dst].clone_from_slice(&piece);
        }
        out
    }

    /// `dim (B_{i,d+1} + w Z_{i,d}) - dim B_{i,d+1}`: the rank of multiplication
    /// by `w` on `H_i` from degree `d`. Since `w B_{i,d} ⊆ B_{i,d+1}`, only
    /// homology representatives are multiplied.
    pub(crate) fn image_rank(&mut self, i: usize, d: u32, w: &[Scalar]) -> u64 {
        if i > self.p() || self.dim(i, d) == 0 || self.dim(i, d + 1) == 0 {
            return 0;
        }
        let reps = self.representatives(i, d);
        if reps.is_empty() {
            return 0;
        }
        let mult = self.q.form_matrix(w, d - i as u32);
        let mut space = self.boundaries(i, d + 1).clone();
        let mut gained = 0;
        for col in &reps {
            if space.insert(&self.multiply_chain(i, d, &mult, col)) {
                gained += 1;
            }
        }
        gained
    }

    /// Whether `x_t Z_{i,d} ⊆ B_{i,d+1}` for every variable `x_t`.
    pub(crate) fn killed_by_maxideal(&mut self, i: usize, d: u32) -> bool {
        if i > self.p() || self.dim(i, d) == 0 || self.dim(i, d + 1) == 0 {
            return true;
        }
        let reps = self.representatives(i, d);
        if reps.is_empty() {
            return true;
        }
        let space = self.boundaries(i, d + 1).clone();
        let deg = d - i as u32;
        for t in 0..self.q.ctx().n() {
            let mult = self.q.var_matrix(t, deg);
            for col in &reps {
                if !space.contains(&self.multiply_chain(i, d, mult, col)) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
