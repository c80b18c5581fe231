use std::collections::HashMap;

use crate::exactla::{rank, DenseMatrix};
use crate::monideal::{BettiConvention, BettiTable, MonomialIdeal};
use crate::ring::Monomial;

/// Graded Betti numbers of `S/J` from the multigraded Koszul complex
/// `K(x_1..x_n; S/J)`, one multidegree `a <= lcm(G(J))` at a time.
///
/// In multidegree `a` the chain group `K_i` has one basis vector `e_F` for
/// each `i`-subset `F` of `supp(a)` with `x^(a-F)` outside `J`. Computed over
/// the ideal's field, so characteristic-dependent Tor is handled.
pub(crate) fn multigraded_betti(j: &MonomialIdeal) -> BettiTable {
    let ctx = j.ctx();
    let n = ctx.n();
    let field = ctx.field();
    let mut table = BettiTable::new(BettiConvention::Quotient);
    let top = j.gens().iter().fold(ctx.one(), |l, g| l.lcm(g));
    let bounds: Vec<u16> = top.exponents().to_vec();

    let mut exps = vec![0u16; n];
    loop {
        let a = Monomial::from_exponents(&exps);
        // only lcm-lattice points carry higher syzygies; `1` carries Tor_0
        if a.is_one() || j.contains(&a) {
            let supp: Vec<usize> = (0..n).filter(|&k| exps[k] > 0).collect();
            let s = supp.len();
            // chains[i]: subsets (bitmask over supp) with x^(a-F) not in J
            let mut chains: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
            for mask in 0u32..(1 << s) {
                let mut m = a.clone();
                for (b, &k) in supp.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        m = m.div_var(k).unwrap();
                    }
                }
                if !j.contains(&m) {
                    chains[mask.count_ones() as usize].push(mask);
                }
            }
            let mut ranks = vec![0usize; s + 2];
            for i in 1..=s {
                let (src, dst) = (&chains[i], &chains[i - 1]);
                if src.is_empty() || dst.is_empty() {
                    continue;
                }
                let pos: HashMap<u32, usize> =
                    dst.iter().enumerate().map(|(r, &f)| (f, r)).collect();
                let mut mat = DenseMatrix::zeros(field, dst.len(), src.len());
                for (c, &f) in src.iter().enumerate() {
                    let mut sign_count = 0;
                    for b in 0..s {
                        if f >> b & 1 == 0 {
                            continue;
                        }
                        // faces missing from the chain group are zero in S/J
                        if let Some(&r) = pos.get(&(f & !(1 << b))) {
                            let v = if sign_count % 2 == 0 {
                                field.one()
                            } else {
                                -field.one()
                            };
                            mat.set(r, c, v);
                        }
                        sign_count += 1;
                    }
                }
                ranks[i] = rank(&mat);
            }
            for i in 0..=s {
                let h = chains[i].len() - ranks[i] - ranks[i + 1];
                if h > 0 {
                    table.add(i, a.degree(), h as u64);
                }
            }
        }
        // odometer over 0 <= exps <= bounds
        let mut k = 0;
        while k < n && exps[k] == bounds[k] {
            exps[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        exps[k] += 1;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::monideal::ek_graded_betti;
    use crate::ring::RingCtx;

    fn ctx(n: usize) -> RingCtx {
        RingCtx::new(n, FieldSpec::rationals()).unwrap()
    }

    #[test]
    fn complete_intersection() {
        let c = ctx(2);
        let j = MonomialIdeal::parse(&c, &["x1^2", "x2^2"]).unwrap();
        let t = multigraded_betti(&j);
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.totals(), vec![1, 2, 1]);
    }

    #[test]
    fn zero_and_unit() {
        let c = ctx(3);
        let t = multigraded_betti(&MonomialIdeal::zero(&c));
        assert_eq!(t.totals(), vec![1]);
        let unit = MonomialIdeal::new(c.clone(), vec![c.one()]);
        assert!(multigraded_betti(&unit).is_empty());
    }

    #[test]
    fn matches_eliahou_kervaire_on_stable() {
        let c = ctx(3);
        for gens in [
            vec!["x1^2", "x1*x2", "x2^2", "x1*x3"],
            vec!["x1", "x2^2", "x2*x3^3"],
            vec!["x1^3", "x1^2*x2", "x1*x2^2", "x2^3", "x1^2*x3"],
        ] {
            let j = MonomialIdeal::parse(&c, &gens).unwrap();
            let ek = ek_graded_betti(&j).unwrap().to_quotient();
            assert_eq!(multigraded_betti(&j), ek, "{gens:?}");
        }
    }
}
