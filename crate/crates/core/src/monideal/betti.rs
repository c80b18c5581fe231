use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::ring::binomial;

/// Whether a table describes `I` or `S/I`; `beta_{i,j}(I) = beta_{i+1,j}(S/I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BettiConvention {
    Ideal,
    Quotient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub value: u64,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("convention", &self.convention)?;
        st.serialize_field("totals", &self.totals())?;
        st.serialize_field("entries", &self.entries())?;
        st.end()
    }
}

/// Graded Betti numbers `beta_{i,j}`; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    convention: BettiConvention,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new(convention: BettiConvention) -> Self {
        BettiTable {
            convention,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(convention: BettiConvention, entries: &[(usize, u32, u64)]) -> Self {
        let mut t = Self::new(convention);
        for &(i, j, v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn convention(&self) -> BettiConvention {
        self.convention
    }

    pub fn add(&mut self, i: usize, j: u32, v: u64) {
        if v == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += v;
    }

    pub fn set(&mut self, i: usize, j: u32, v: u64) {
        if v == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|(&(i, j), &value)| BettiEntry { i, j, value })
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, u32::MAX))
            .map(|(_, v)| v)
            .sum()
    }

    /// `beta_0, beta_1, ...` up to the last nonzero index.
    pub fn totals(&self) -> Vec<u64> {
        match self.max_index() {
            None => Vec::new(),
            Some(m) => (0..=m).map(|i| self.total(i)).collect(),
        }
    }

    /// Entries `beta_{i,j}` with `j` varying, for fixed `i`.
    pub fn row(&self, i: usize) -> Vec<(u32, u64)> {
        self.entries
            .range((i, 0)..=(i, u32::MAX))
            .map(|(&(_, j), &v)| (j, v))
            .collect()
    }

    /// `max(j - i)` over nonzero entries, in this table's own indexing.
    pub fn max_shift(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// Castelnuovo–Mumford regularity of the ideal.
    pub fn regularity(&self) -> Option<i64> {
        self.to_ideal().max_shift()
    }

    pub fn to_quotient(&self) -> BettiTable {
        match self.convention {
            BettiConvention::Quotient => self.clone(),
            BettiConvention::Ideal => {
                let mut t = BettiTable::new(BettiConvention::Quotient);
                // S/S = 0 when the ideal is the unit ideal
                if self.get(0, 0) == 0 {
                    t.add(0, 0, 1);
                    for (i, j, v) in self.iter() {
                        t.add(i + 1, j, v);
                    }
                }
                t
            }
        }
    }

    pub fn to_ideal(&self) -> BettiTable {
        match self.convention {
            BettiConvention::Ideal => self.clone(),
            BettiConvention::Quotient => {
                let mut t = BettiTable::new(BettiConvention::Ideal);
                if self.is_empty() {
                    t.add(0, 0, 1);
                }
                for (i, j, v) in self.iter() {
                    if i > 0 {
                        t.add(i - 1, j, v);
                    }
                }
                t
            }
        }
    }

    /// Entrywise `self <= other` on totals.
    pub fn totals_le(&self, other: &BettiTable) -> bool {
        let (a, b) = (self.totals(), other.totals());
        (0..a.len().max(b.len()))
            .all(|i| a.get(i).copied().unwrap_or(0) <= b.get(i).copied().unwrap_or(0))
    }

    /// Rows indexed by `j - i`, columns by `i`, with a totals row.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let Some(max_i) = self.max_index() else {
            out.push_str("(zero table)\n");
            return out;
        };
        let shifts: Vec<i64> = {
            let mut s: Vec<i64> = self
                .entries
                .keys()
                .map(|&(i, j)| j as i64 - i as i64)
                .collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        let (lo, hi) = (shifts[0], *shifts.last().unwrap());
        let totals = self.totals();
        let width = totals
            .iter()
            .chain(self.entries.values())
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(max_i.to_string().len());
        let label = "total:"
            .len()
            .max(format!("{hi}:").len())
            .max(format!("{lo}:").len());
        let _ = write!(out, "{:>label$}", "");
        for i in 0..=max_i {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label$}", "total:");
        for t in &totals {
            let _ = write!(out, " {t:>width$}");
        }
        out.push('\n');
        for s in lo..=hi {
            let _ = write!(out, "{:>label$}", format!("{s}:"));
            for i in 0..=max_i {
                let j = s + i as i64;
                let v = if j >= 0 { self.get(i, j as u32) } else { 0 };
                if v == 0 {
                    let _ = write!(out, " {:>width$}", ".");
                } else {
                    let _ = write!(out, " {v:>width$}");
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Graded Betti numbers of a stable ideal: each `u ∈ G(I)` contributes
/// `C(m(u)-1, i)` to `beta_{i, deg(u)+i}(I)`.
pub fn ek_graded_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_stable() {
        return Err(Error::NotStable);
    }
    let mut t = BettiTable::new(BettiConvention::Ideal);
    for u in ideal.gens() {
        let m = u.max_index() as u64;
        let d = u.degree();
        if m == 0 {
            t.add(0, d, 1);
            continue;
        }
        for i in 0..m {
            t.add(i as usize, d + i as u32, binomial(m - 1, i));
        }
    }
    Ok(t)
}

/// Total Betti numbers `beta_i(I)` of a stable ideal, `i = 0..n-1`.
pub fn ek_total_betti(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    if !ideal.is_stable() {
        return Err(Error::NotStable);
    }
    let n = ideal.ctx().n() as u64;
    let mut b = vec![0u64; n as usize];
    for u in ideal.gens() {
        let m = (u.max_index() as u64).max(1);
        for (i, slot) in b.iter_mut().enumerate().take(m as usize) {
            *slot += binomial(m - 1, i as u64);
        }
    }
    Ok(b)
}

/// `beta_{i,i+j}(I) = beta_i(I_<j>) - beta_i(m I_<j-1>)`, with every
/// component required to be stable.
pub fn cwl_graded_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let mut t = BettiTable::new(BettiConvention::Ideal);
    let (Some(lo), Some(hi)) = (ideal.min_degree(), ideal.max_degree()) else {
        return Ok(t);
    };
    let n = ideal.ctx().n();
    let mut prev_times_m: Option<Vec<u64>> = None;
    for j in lo..=hi {
        let comp = ideal.component_ideal(j);
        if !comp.is_stable() {
            return Err(Error::Precondition(format!(
                "component ideal in degree {j} is not stable"
            )));
        }
        let b_comp = ek_total_betti(&comp)?;
        let b_prev = prev_times_m.take().unwrap_or_else(|| vec![0; n]);
        for i in 0..n {
            let v = b_comp[i].checked_sub(b_prev[i]).ok_or_else(|| {
                Error::Precondition(format!(
                    "negative Betti difference at i = {i}, j = {j}; ideal is not componentwise linear"
                ))
            })?;
            t.add(i, i as u32 + j, v);
        }
        prev_times_m = Some(ek_total_betti(&comp.times_maxideal())?);
    }
    Ok(t)
}

/// Right-hand side of the truncation identity
/// `beta_i(I_<N+1>) - beta_i(I) = sum_{j=d}^{N} sum_{k=i+1}^{n} m_{<=k-1}(I_<j>) C(k-1, i)`
/// for strongly stable `I` generated in degrees `d..=N`.
pub fn truncation_delta(ideal: &MonomialIdeal, i: usize, d: u32, big_n: u32) -> Result<u64> {
    if !ideal.is_strongly_stable() {
        return Err(Error::Precondition("ideal is not strongly stable".into()));
    }
    if d == 0 || d > big_n {
        return Err(Error::Precondition(format!(
            "degree window must satisfy 1 <= d <= N, got d = {d}, N = {big_n}"
        )));
    }
    if let (Some(lo), Some(hi)) = (ideal.min_degree(), ideal.max_degree()) {
        if lo < d || hi > big_n {
            return Err(Error::Precondition(format!(
                "generator degrees {lo}..{hi} fall outside the window {d}..{big_n}"
            )));
        }
    }
    let n = ideal.ctx().n();
    let mut acc = 0u64;
    for j in d..=big_n {
        let st = ideal.component_ideal(j).stats();
        for k in (i + 1)..=n {
            acc += st.m_le(k - 1) * binomial(k as u64 - 1, i as u64);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::ring::RingCtx;

    fn ctx(n: usize) -> RingCtx {
        RingCtx::new(n, FieldSpec::rationals()).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(&ctx(n), gens).unwrap()
    }

    #[test]
    fn maximal_ideal_is_koszul() {
        let t = ek_graded_betti(&MonomialIdeal::maximal_power(&ctx(3), 1)).unwrap();
        assert_eq!(t.totals(), vec![3, 3, 1]);
        assert_eq!(t.row(1), vec![(2, 3)]);
        assert_eq!(t.row(2), vec![(3, 1)]);
    }

    #[test]
    fn gin_of_first_example() {
        let g = ideal(
            3,
            &[
                "x1^2", "x1*x2", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2", "x3^3",
            ],
        );
        let t = ek_graded_betti(&g).unwrap();
        assert_eq!(t.row(0), vec![(2, 2), (3, 5)]);
        assert_eq!(t.row(1), vec![(3, 1), (4, 9)]);
        assert_eq!(t.row(2), vec![(5, 4)]);
        assert_eq!(t.totals(), vec![7, 10, 4]);
    }

    #[test]
    fn lex_of_second_example() {
        let l = ideal(4, &["x1^2", "x1*x2", "x1*x3", "x1*x4^2", "x2^3", "x2^2*x3"]);
        let t = ek_graded_betti(&l).unwrap();
        assert_eq!(t.totals(), vec![6, 9, 5, 1]);
        assert_eq!(t.row(2), vec![(4, 1), (5, 4)]);
        assert_eq!(t.row(3), vec![(6, 1)]);
    }

    #[test]
    fn totals_match_generating_polynomial() {
        // sum_i beta_i t^i = sum_u (1+t)^{m(u)-1}, evaluated at t = 1
        let l = ideal(4, &["x1^2", "x1*x2", "x1*x3", "x1*x4^2", "x2^3", "x2^2*x3"]);
        let total: u64 = ek_graded_betti(&l).unwrap().totals().iter().sum();
        let expect: u64 = l.gens().iter().map(|u| 1u64 << (u.max_index() - 1)).sum();
        assert_eq!(total, expect);
        assert_eq!(ek_total_betti(&l).unwrap(), vec![6, 9, 5, 1]);
    }

    #[test]
    fn cwl_examples() {
        let m2 = MonomialIdeal::maximal_power(&ctx(3), 2);
        assert_eq!(cwl_graded_betti(&m2).unwrap().totals(), vec![6, 8, 3]);
        assert_eq!(
            cwl_graded_betti(&ideal(3, &["x1"])).unwrap().totals(),
            vec![1]
        );
        let g = ideal(
            3,
            &[
                "x1^2", "x1*x2", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2", "x3^3",
            ],
        );
        assert_eq!(cwl_graded_betti(&g).unwrap(), ek_graded_betti(&g).unwrap());
    }

    #[test]
    fn truncation_examples() {
        let m = MonomialIdeal::maximal_power(&ctx(2), 1);
        assert_eq!(truncation_delta(&m, 0, 1, 1).unwrap(), 1);
        for n in 1..5 {
            let x1 = ideal(n, &["x1"]);
            assert_eq!(truncation_delta(&x1, 0, 1, 1).unwrap(), n as u64 - 1);
        }
        let ex = ideal(4, &["x1^2", "x1*x2", "x2^2", "x1*x3^2", "x1*x3*x4"]);
        for i in 0..4 {
            let lhs = ek_total_betti(&ex.component_ideal(4)).unwrap()[i]
                - ek_total_betti(&ex).unwrap()[i];
            assert_eq!(truncation_delta(&ex, i, 2, 3).unwrap(), lhs);
        }
        assert!(truncation_delta(&ex, 0, 3, 3).is_err());
    }

    #[test]
    fn convention_round_trip_and_render() {
        let t = BettiTable::from_entries(
            BettiConvention::Ideal,
            &[(0, 2, 2), (0, 3, 4), (1, 4, 9), (2, 5, 4)],
        );
        let q = t.to_quotient();
        assert_eq!(q.totals(), vec![1, 6, 9, 4]);
        assert_eq!(q.to_ideal(), t);
        assert_eq!(t.regularity(), Some(3));
        let r = t.render();
        assert!(r.contains("total: 6 9 4"), "{r}");
        assert!(r.contains("    2: 2 . ."), "{r}");
        assert!(r.contains("    3: 4 9 4"), "{r}");
        assert!(ek_graded_betti(&ideal(2, &["x1^2", "x2^2"])).is_err());
    }
}
