use std::collections::HashSet;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::ring::{Monomial, RingCtx};

/// Lex-segment ideal from ideal dimensions `hf[d] = dim I_d`, `d = 0..=D`,
/// without the stabilization check. Also returns the largest degree in
/// which a new minimal generator appeared.
pub fn lex_segment_ideal_with(ctx: &RingCtx, hf: &[u64]) -> Result<(MonomialIdeal, Option<u32>)> {
    let n = ctx.n();
    let mut gens = Vec::new();
    let mut prev: Vec<Monomial> = Vec::new();
    let mut last_new = None;
    for (d, &want) in hf.iter().enumerate() {
        let d = d as u32;
        let all = Monomial::all_of_degree(n, d);
        if want > all.len() as u64 {
            return Err(Error::ImpossibleDimension {
                degree: d,
                requested: want,
                available: all.len() as u64,
            });
        }
        let seg: Vec<Monomial> = all.into_iter().take(want as usize).collect();
        let seg_set: HashSet<&Monomial> = seg.iter().collect();
        let mut shadow: HashSet<Monomial> = HashSet::new();
        for m in &prev {
            for i in 0..n {
                let s = m.mul_var(i);
                if !seg_set.contains(&s) {
                    return Err(Error::NotOSequence { degree: d });
                }
                shadow.insert(s);
            }
        }
        for m in &seg {
            if !shadow.contains(m) {
                gens.push(m.clone());
                last_new = Some(d);
            }
        }
        prev = seg;
    }
    Ok((MonomialIdeal::new(ctx.clone(), gens), last_new))
}

/// Lex-segment ideal with the given ideal dimensions `dim I_d`, `d = 0..=D`.
/// The last two degrees of the window must produce no new generators.
pub fn lex_segment_ideal(ctx: &RingCtx, hf: &[u64]) -> Result<MonomialIdeal> {
    let (ideal, last_new) = lex_segment_ideal_with(ctx, hf)?;
    if hf.len() < 2 {
        return Err(Error::WindowTooShort(
            "need at least two degrees to certify lex generators".into(),
        ));
    }
    let top = hf.len() as u32 - 1;
    if let Some(d) = last_new {
        if d + 2 > top {
            return Err(Error::WindowTooShort(format!(
                "lex generator appeared in degree {d}, window ends at {top}"
            )));
        }
    }
    Ok(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::ring::monomial_count;

    fn ctx(n: usize) -> RingCtx {
        RingCtx::new(n, FieldSpec::rationals()).unwrap()
    }

    fn ideal_dims(i: &MonomialIdeal, top: u32) -> Vec<u64> {
        (0..=top).map(|d| i.degree_part(d).len() as u64).collect()
    }

    #[test]
    fn full_segment() {
        let c = ctx(3);
        let m2 = MonomialIdeal::maximal_power(&c, 2);
        assert_eq!(lex_segment_ideal(&c, &ideal_dims(&m2, 4)).unwrap(), m2);
    }

    #[test]
    fn second_example_lex() {
        let c = ctx(4);
        let i =
            MonomialIdeal::parse(&c, &["x1^2", "x1*x2", "x2^2", "x1*x3^2", "x1*x3*x4"]).unwrap();
        let l = lex_segment_ideal(&c, &ideal_dims(&i, 6)).unwrap();
        let expect = MonomialIdeal::parse(
            &c,
            &["x1^2", "x1*x2", "x1*x3", "x1*x4^2", "x2^3", "x2^2*x3"],
        )
        .unwrap();
        assert_eq!(l, expect);
        assert!(l.is_strongly_stable());
    }

    #[test]
    fn invalid_inputs() {
        let c = ctx(2);
        assert!(matches!(
            lex_segment_ideal(&c, &[0, 0, 4]),
            Err(Error::ImpossibleDimension { degree: 2, .. })
        ));
        // dim I_1 = 1 forces dim I_2 >= 2
        assert!(matches!(
            lex_segment_ideal(&c, &[0, 1, 1, 2]),
            Err(Error::NotOSequence { degree: 2 })
        ));
        assert!(matches!(
            lex_segment_ideal(&c, &[0, 0, 1]),
            Err(Error::WindowTooShort(_))
        ));
        let full: Vec<u64> = (0..5).map(|d| monomial_count(2, d)).collect();
        assert_eq!(lex_segment_ideal(&c, &full).unwrap().gens().len(), 1);
    }
}
