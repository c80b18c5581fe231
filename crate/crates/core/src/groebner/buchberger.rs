use super::GradedIdeal;
use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;
use crate::ring::{Monomial, Polynomial, RingCtx, TermOrder};

/// A reduced Gröbner basis: monic, interreduced, sorted by increasing
/// leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ctx: RingCtx,
    order: TermOrder,
    elements: Vec<Polynomial>,
    source: GradedIdeal,
}

impl GroebnerBasis {
    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn source(&self) -> &GradedIdeal {
        &self.source
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ctx.clone(), self.leading_monomials())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let refs: Vec<&Polynomial> = self.elements.iter().collect();
        reduce(&f.with_order(self.order), &refs)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let refs: Vec<&Polynomial> = self.elements.iter().collect();
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j]);
                if !reduce(&s, &refs).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Whether both bases describe the same ideal (reduced bases are unique).
    pub fn same_ideal(&self, other: &GroebnerBasis) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

/// `normal_form(f, gb)`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(f)
}

/// Full reduction of `f` by the monic polynomials `basis`.
fn reduce(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let order = f.order();
    let mut p = f.clone();
    let mut done: Vec<(Monomial, crate::exactla::Scalar)> = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        let reducer = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match reducer {
            Some(g) => {
                let q = m.div(g.leading_monomial().unwrap()).unwrap();
                p = p.sub_multiple(&c, &q, g);
            }
            None => {
                let mut terms = p.into_terms();
                let lead = terms.remove(0);
                done.push(lead);
                p = Polynomial::from_sorted_terms(order, terms);
            }
        }
    }
    Polynomial::from_sorted_terms(order, done)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lf.lcm(lg);
    let one = f.leading_coeff().unwrap().one_like();
    f.mul_term(&l.div(lf).unwrap(), &one)
        .sub_multiple(&one, &l.div(lg).unwrap(), g)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer–Möller installation of the new element `h` (an index into `polys`).
fn update(polys: &[Polynomial], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = polys[h].leading_monomial().unwrap().clone();
    let cands: Vec<(usize, Monomial, bool)> = active
        .iter()
        .map(|&g| {
            let lg = polys[g].leading_monomial().unwrap();
            (g, lg.lcm(&lh), lg.is_coprime(&lh))
        })
        .collect();
    // chain criterion among the new pairs
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (k, (g, l, coprime)) in cands.iter().enumerate() {
        let dominated = cands[k + 1..].iter().any(|(_, l2, _)| l2.divides(l))
            || kept.iter().any(|(_, l2, _)| l2.divides(l));
        if *coprime || !dominated {
            kept.push((*g, l.clone(), *coprime));
        }
    }
    // old pairs whose lcm is strictly divisible via h
    pairs.retain(|p| {
        if !lh.divides(&p.lcm) {
            return true;
        }
        let li = polys[p.i].leading_monomial().unwrap().lcm(&lh);
        let lj = polys[p.j].leading_monomial().unwrap().lcm(&lh);
        li == p.lcm || lj == p.lcm
    });
    // product criterion
    pairs.extend(
        kept.into_iter()
            .filter(|(_, _, coprime)| !coprime)
            .map(|(g, lcm, _)| Pair { i: g, j: h, lcm }),
    );
    active.retain(|&g| !lh.divides(polys[g].leading_monomial().unwrap()));
    active.push(h);
}

/// Reduced Gröbner basis of `ideal` by the normal selection strategy
/// (lowest degree, then smallest lcm in `order`).
pub fn buchberger(ideal: &GradedIdeal, order: TermOrder) -> Result<GroebnerBasis> {
    let ctx = ideal.ctx().clone();
    let guard = ctx.degree_guard();
    let mut inputs: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.with_order(order).make_monic())
        .collect();
    inputs.sort_by(|a, b| {
        a.degree().cmp(&b.degree()).then_with(|| {
            order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
        })
    });
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut next_input = 0;
    loop {
        let in_deg = inputs.get(next_input).and_then(Polynomial::degree);
        let pair_pos = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.compare(&a.lcm, &b.lcm))
            })
            .map(|(k, _)| k);
        let pair_deg = pair_pos.map(|k| pairs[k].lcm.degree());
        let (candidate, deg) = match (in_deg, pair_deg) {
            (None, None) => break,
            (Some(d), p) if p.is_none_or(|p| d <= p) => {
                next_input += 1;
                (inputs[next_input - 1].clone(), d)
            }
            (_, Some(d)) => {
                let p = pairs.swap_remove(pair_pos.unwrap());
                (s_polynomial(&polys[p.i], &polys[p.j]), d)
            }
            (Some(_), None) => unreachable!(),
        };
        if deg > guard {
            return Err(Error::DegreeGuard { degree: deg, guard });
        }
        let refs: Vec<&Polynomial> = active.iter().map(|&k| &polys[k]).collect();
        let h = reduce(&candidate, &refs);
        if h.is_zero() {
            continue;
        }
        polys.push(h.make_monic());
        let idx = polys.len() - 1;
        update(&polys, &mut active, &mut pairs, idx);
    }

    // interreduce the minimal basis
    let mut minimal: Vec<Polynomial> = active.iter().map(|&k| polys[k].clone()).collect();
    minimal.sort_by(|a, b| {
        order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut elements = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, g)| g)
            .collect();
        let g = &minimal[k];
        let lead = Polynomial::from_sorted_terms(order, vec![g.leading_term().unwrap().clone()]);
        let tail = Polynomial::from_sorted_terms(order, g.terms()[1..].to_vec());
        elements.push(lead.add(&reduce(&tail, &others)).make_monic());
    }
    Ok(GroebnerBasis {
        ctx,
        order,
        elements,
        source: ideal.clone(),
    })
}

/// Minimal generators of the initial ideal of `ideal` under `order`.
pub fn initial_ideal(ideal: &GradedIdeal, order: TermOrder) -> Result<MonomialIdeal> {
    if let Some(m) = MonomialIdeal::from_graded(ideal) {
        return Ok(m);
    }
    Ok(buchberger(ideal, order)?.initial_ideal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;

    fn ctx(n: usize) -> RingCtx {
        RingCtx::new(n, FieldSpec::rationals()).unwrap()
    }

    fn gb(c: &RingCtx, gens: &[&str], o: TermOrder) -> GroebnerBasis {
        buchberger(&GradedIdeal::parse(c, gens).unwrap(), o).unwrap()
    }

    fn strs(g: &GroebnerBasis) -> Vec<String> {
        g.elements()
            .iter()
            .map(|e| e.to_string_with(g.ctx()))
            .collect()
    }

    #[test]
    fn principal_and_monomial() {
        let c = ctx(2);
        assert_eq!(
            strs(&gb(&c, &["x1^2 - x2^2"], TermOrder::DegRevLex)),
            vec!["x1^2 - x2^2"]
        );
        let g = gb(&c, &["x1^2", "x1^3", "x1*x2"], TermOrder::DegRevLex);
        assert_eq!(strs(&g), vec!["x1*x2", "x1^2"]);
    }

    #[test]
    fn one_s_pair() {
        let c = ctx(2);
        let g = gb(&c, &["x1^2 + x2^2", "x1*x2"], TermOrder::DegRevLex);
        assert_eq!(strs(&g), vec!["x1*x2", "x1^2 + x2^2", "x2^3"]);
        assert!(g.is_groebner());
        assert_eq!(g.initial_ideal().to_string(), "(x1^2, x1*x2, x2^3)");
        let f = c.parse(TermOrder::DegRevLex, "x1^3").unwrap();
        assert!(normal_form(&f, &g).is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let c = ctx(2);
        let g = gb(&c, &["x1"], TermOrder::DegRevLex);
        let f = c.parse(TermOrder::DegRevLex, "x2^2").unwrap();
        assert_eq!(g.normal_form(&f), f);
        let h = c.parse(TermOrder::DegRevLex, "x1*x2 + x2^2").unwrap();
        assert_eq!(g.normal_form(&h), f);
    }

    #[test]
    fn twisted_cubic_lex_and_revlex() {
        let c = ctx(4);
        let gens = ["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"];
        for o in [TermOrder::DegRevLex, TermOrder::DegLex, TermOrder::Lex] {
            let g = gb(&c, &gens, o);
            assert!(g.is_groebner(), "{o}");
            for s in gens {
                assert!(g.contains(&c.parse(o, s).unwrap()));
            }
        }
        assert_eq!(gb(&c, &gens, TermOrder::DegRevLex).elements().len(), 3);
    }

    #[test]
    fn degree_guard_aborts() {
        let c = ctx(3).with_degree_guard(3);
        let i = GradedIdeal::parse(
            &c,
            &["x1^2 + x2*x3", "x2^2 + x1*x3", "x3^2 + x1*x2 + x2*x3"],
        )
        .unwrap();
        let r = buchberger(&i, TermOrder::Lex);
        assert!(matches!(r, Err(Error::DegreeGuard { guard: 3, .. })));
    }
}
