use super::random::{random_ideal, IdealSpec, Shape};
use super::report::{CheckConfig, TheoremReport};
use crate::error::{Error, Result};
use crate::gin::{generic_initial_ideal_with, generic_linear_forms, GinResult};
use crate::groebner::{
    buchberger, hilbert_function, hilbert_polynomial, hilbert_polynomial_from, initial_ideal,
    regularity_bound, GradedIdeal,
};
use crate::koszul::{
    alpha_bound, annihilator_numbers, annihilator_numbers_with_forms, correction_pairs, degree_cap,
    graded_betti, is_componentwise_linear, is_proper_sequence, koszul_homology,
    subset_homology_annihilation_all,
};
use crate::monideal::{ek_graded_betti, lex_segment_ideal, BettiTable, MonomialIdeal};
use crate::ring::{binomial, monomial_count, Monomial, RingCtx, TermOrder};

fn padded(v: Vec<u64>, len: usize) -> Vec<u64> {
    let mut v = v;
    v.resize(len.max(v.len()), 0);
    v
}

/// `beta_0(I), ..., beta_{n-1}(I)`.
fn ideal_totals(t: &BettiTable, n: usize) -> Vec<u64> {
    padded(t.to_ideal().totals(), n)
}

/// `beta_i(S/I)` at index `i`, `i = 0..=n`.
fn quotient_totals(t: &BettiTable, n: usize) -> Vec<u64> {
    padded(t.to_quotient().totals(), n + 1)
}

/// Betti table of a monomial ideal, by Eliahou–Kervaire when stable.
fn monomial_betti(j: &MonomialIdeal) -> Result<BettiTable> {
    if j.is_stable() {
        Ok(ek_graded_betti(j)?.to_quotient())
    } else {
        graded_betti(&j.to_graded())
    }
}

/// Once true, stays true.
fn upward_closed(flags: &[bool]) -> bool {
    flags.windows(2).all(|w| !w[0] || w[1])
}

fn equal_indices(a: &[u64], b: &[u64]) -> Vec<usize> {
    (0..a.len().min(b.len()))
        .filter(|&i| a[i] == b[i])
        .collect()
}

fn gin(ideal: &GradedIdeal, order: TermOrder, cfg: &CheckConfig) -> Result<GinResult> {
    generic_initial_ideal_with(ideal, order, cfg.seed, &cfg.gin)
}

fn note_characteristic(r: &mut TheoremReport, ctx: &RingCtx) {
    if !ctx.field().is_char_zero() {
        r.note(format!(
            "computed over {}; the statement assumes characteristic 0",
            ctx.field()
        ));
    }
}

/// The lex-segment ideal with the Hilbert function of `I`. The window grows
/// until no lex generator appears in its last two degrees, it passes the
/// largest generator degree of `in(I)`, and the Hilbert polynomials agree.
pub fn lex_ideal_of(ideal: &GradedIdeal) -> Result<MonomialIdeal> {
    let ctx = ideal.ctx();
    let j = initial_ideal(ideal, TermOrder::DegRevLex)?;
    let target = hilbert_polynomial(&j)?;
    let mut top = j.max_degree().unwrap_or(0) + 2;
    loop {
        if top > ctx.degree_guard() {
            return Err(Error::DegreeGuard {
                degree: top,
                guard: ctx.degree_guard(),
            });
        }
        let hf = hilbert_function(&j, top);
        let dims: Vec<u64> = hf
            .iter()
            .enumerate()
            .map(|(d, &h)| monomial_count(ctx.n(), d as u32) - h)
            .collect();
        match lex_segment_ideal(ctx, &dims) {
            Ok(l) if hilbert_polynomial(&l)? == target => return Ok(l),
            Ok(_) | Err(Error::WindowTooShort(_)) => top += 1,
            Err(e) => return Err(e),
        }
    }
}

/// Betti numbers of `S/I` against the bound from generic annihilator numbers,
/// and the equality criteria through `m`-annihilation of Koszul homology.
pub fn bound_check(ideal: &GradedIdeal, cfg: &CheckConfig) -> Result<TheoremReport> {
    let ctx = ideal.ctx();
    let n = ctx.n();
    let mut r = TheoremReport::new("betti_bound", &[ideal], cfg);
    let forms = generic_linear_forms(ctx, n, cfg.seed);
    let rep = koszul_homology(ideal, &forms, degree_cap(ideal)?)?;
    let table = graded_betti(ideal)?;
    let beta = quotient_totals(&table, n);
    let bounds: Vec<u64> = (0..=n).map(|i| alpha_bound(rep.alpha(), i, n)).collect();
    let eq: Vec<bool> = (1..=n).map(|i| beta[i] == bounds[i]).collect();

    r.verdict(
        "koszul homology along generic forms equals Tor",
        (1..=n).all(|i| rep.h(i, n) == beta[i]),
        "koszul_homology, graded_betti",
    );
    r.verdict(
        "(a) beta_i(S/I) <= sum_j C(n-j, i-1) alpha_j for all i >= 1",
        (1..=n).all(|i| beta[i] <= bounds[i]),
        "graded_betti, koszul_homology",
    );
    let per_index = (1..=n).all(|i| {
        let ann = correction_pairs(i, n)
            .iter()
            .all(|&(a, b)| rep.annihilated(a, b));
        eq[i - 1] == ann
    });
    r.verdict(
        "(b) equality at i iff m H_a(b) = 0 for all (a,b) in A_{i,n}",
        per_index,
        "koszul_homology annihilation flags",
    );
    let all_ann = (1..n).all(|b| (1..=b).all(|a| rep.annihilated(a, b)));
    r.verdict(
        "(c) equality for all i iff m H_a(b) = 0 for all b and a >= 1",
        eq.iter().all(|&e| e) == all_ann,
        "koszul_homology annihilation flags",
    );
    r.witness("betti_quotient", &beta[1..]);
    r.witness("bound", &bounds[1..]);
    r.witness("alpha", rep.alpha());
    r.witness(
        "equality_indices",
        (1..=n).filter(|&i| eq[i - 1]).collect::<Vec<_>>(),
    );
    r.witness("betti_table", &table);
    Ok(r)
}

/// The bound, the exact identity with the multiplication-map correction,
/// the equality criteria for every `1 <= i <= p <= n`, and both long exact
/// sequence recursions.
pub fn homology_identity_check(ideal: &GradedIdeal, cfg: &CheckConfig) -> Result<TheoremReport> {
    let ctx = ideal.ctx();
    let n = ctx.n();
    let mut r = TheoremReport::new("koszul_identity", &[ideal], cfg);
    let forms = generic_linear_forms(ctx, n, cfg.seed);
    let rep = koszul_homology(ideal, &forms, degree_cap(ideal)?)?;
    let (mut bound, mut identity, mut equiv, mut rec1, mut rec2) = (true, true, true, true, true);
    let mut rows = Vec::new();
    for p in 1..=n {
        for i in 1..=p {
            let h = rep.h(i, p);
            let b = rep.alpha_bound(i, p);
            bound &= h <= b;
            identity &= h as i64 == rep.identity_rhs(i, p);
            let pairs = correction_pairs(i, p);
            let no_phi = pairs.iter().all(|&(a, c)| rep.phi(a, c) == 0);
            let ann = pairs.iter().all(|&(a, c)| rep.annihilated(a, c));
            equiv &= (h == b) == no_phi && no_phi == ann;
            rows.push(serde_json::json!({ "i": i, "p": p, "h": h, "bound": b }));
        }
        rec1 &= rep.h(1, p) + rep.phi(1, p - 1) == rep.h(1, p - 1) + rep.alpha()[p - 1];
        for i in 2..=p {
            rec2 &= rep.h(i, p) + rep.phi(i, p - 1) + rep.phi(i - 1, p - 1)
                == rep.h(i, p - 1) + rep.h(i - 1, p - 1);
        }
    }
    let via = "koszul_homology";
    r.verdict("h_i(p) <= sum_j C(p-j, i-1) alpha_j", bound, via);
    r.verdict("exact identity with phi-image correction", identity, via);
    r.verdict(
        "equality iff phi vanishes on A_{i,p} iff m-annihilation on A_{i,p}",
        equiv,
        via,
    );
    r.verdict(
        "h_1(p) = h_1(p-1) + alpha_p - dim Im phi_{1,p-1}",
        rec1,
        via,
    );
    r.verdict(
        "h_i(p) = h_i(p-1) + h_{i-1}(p-1) - dim Im phi_{i,p-1} - dim Im phi_{i-1,p-1}",
        rec2,
        via,
    );
    let gb_route = annihilator_numbers_with_forms(ideal, &forms)?;
    r.verdict(
        "alpha from H_0 agrees with alpha from colon quotients",
        gb_route.alpha == rep.alpha(),
        "koszul_homology, annihilator_numbers",
    );
    r.witness("alpha", rep.alpha());
    r.witness("homology", rows);
    Ok(r)
}

/// The equivalence of maximal Betti numbers, proper generic sequences,
/// componentwise linearity and `beta(I) = beta(Gin(I))`.
pub fn maximal_equivalences(ideal: &GradedIdeal, cfg: &CheckConfig) -> Result<TheoremReport> {
    let ctx = ideal.ctx();
    let n = ctx.n();
    let mut r = TheoremReport::new("maximal_betti", &[ideal], cfg);
    note_characteristic(&mut r, ctx);
    let table = graded_betti(ideal)?;
    let beta = quotient_totals(&table, n);
    let alpha = annihilator_numbers(ideal, cfg.seed)?;
    let a = (1..=n).all(|i| beta[i] == alpha_bound(&alpha.alpha, i, n));
    let b = is_proper_sequence(ideal, cfg.seed)?;
    let c = is_componentwise_linear(ideal)?;
    let g = gin(ideal, TermOrder::DegRevLex, cfg)?;
    let gin_table = monomial_betti(&g.ideal)?;
    let d = table == gin_table;
    r.fact("(a) maximal Betti numbers", a);
    r.fact("(b) generic sequence is proper", b);
    r.fact("(c) componentwise linear", c);
    r.fact("(d) same graded Betti numbers as Gin(I)", d);
    r.verdict(
        "(a) <=> (b) <=> (c) <=> (d)",
        a == b && b == c && c == d,
        "graded_betti, annihilator_numbers, is_proper_sequence, is_componentwise_linear, generic_initial_ideal",
    );
    r.note("(e) linear-part condition not computed");
    r.witness("alpha", &alpha.alpha);
    r.witness("betti_table", &table);
    r.witness("gin", g.ideal.fmt_gens());
    r.witness("gin_betti_table", &gin_table);
    Ok(r)
}

/// Rigidity of Betti numbers between `I` and `Gin(I)`, and upward closedness
/// of the indices where `beta_i(S/I)` meets the annihilator bound.
pub fn rigidity_check(ideal: &GradedIdeal, cfg: &CheckConfig) -> Result<TheoremReport> {
    let ctx = ideal.ctx();
    let n = ctx.n();
    let mut r = TheoremReport::new("rigidity", &[ideal], cfg);
    note_characteristic(&mut r, ctx);
    let table = graded_betti(ideal)?;
    let g = gin(ideal, TermOrder::DegRevLex, cfg)?;
    let gin_table = monomial_betti(&g.ideal)?;
    let bi = ideal_totals(&table, n);
    let bg = ideal_totals(&gin_table, n);
    let first = (0..n).find(|&i| bi[i] == bg[i]);
    let tail = first.is_none_or(|i| (i..n).all(|k| bi[k] == bg[k]));
    r.verdict(
        "beta_i(I) = beta_i(Gin(I)) implies equality for all k >= i",
        tail,
        "graded_betti, generic_initial_ideal",
    );
    let alpha = annihilator_numbers(ideal, cfg.seed)?;
    let beta = quotient_totals(&table, n);
    let meets: Vec<bool> = (1..=n)
        .map(|i| beta[i] == alpha_bound(&alpha.alpha, i, n))
        .collect();
    r.verdict(
        "indices where beta_i(S/I) meets the alpha bound are upward closed",
        upward_closed(&meets),
        "graded_betti, annihilator_numbers",
    );
    r.witness("minimal_index", first);
    r.witness("betti", &bi);
    r.witness("gin_betti", &bg);
    r.witness("gin", g.ideal.fmt_gens());
    r.witness("alpha", &alpha.alpha);
    r.witness(
        "bound_indices",
        (1..=n).filter(|&i| meets[i - 1]).collect::<Vec<_>>(),
    );
    Ok(r)
}

/// What `I` is compared with in [`lex_comparison`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparand {
    Lex,
    Gin(TermOrder),
}

/// `beta(I) <= beta(Gin(I)) <= beta(J)` with `J` the lex-segment ideal or a
/// gin for another order, and rigidity of equality between `I` and `J`.
pub fn lex_comparison(
    ideal: &GradedIdeal,
    against: Comparand,
    cfg: &CheckConfig,
) -> Result<TheoremReport> {
    let ctx = ideal.ctx();
    let n = ctx.n();
    let mut r = TheoremReport::new("lex_comparison", &[ideal], cfg);
    note_characteristic(&mut r, ctx);
    let j = match against {
        Comparand::Lex => lex_ideal_of(ideal)?,
        Comparand::Gin(o) => gin(ideal, o, cfg)?.ideal,
    };
    let g = gin(ideal, TermOrder::DegRevLex, cfg)?;
    let ti = graded_betti(ideal)?;
    let (tg, tj) = (monomial_betti(&g.ideal)?, monomial_betti(&j)?);
    let (bi, bg, bj) = (
        ideal_totals(&ti, n),
        ideal_totals(&tg, n),
        ideal_totals(&tj, n),
    );
    let len = bi.len().max(bg.len()).max(bj.len());
    let (bi, bg, bj) = (padded(bi, len), padded(bg, len), padded(bj, len));
    r.verdict(
        "beta_i(I) <= beta_i(Gin(I)) <= beta_i(J) for all i",
        (0..len).all(|i| bi[i] <= bg[i] && bg[i] <= bj[i]),
        "graded_betti, generic_initial_ideal, lex_segment_ideal",
    );
    let first = (0..len).find(|&i| bi[i] == bj[i]);
    r.verdict(
        "beta_i(I) = beta_i(J) implies equality for all k >= i",
        first.is_none_or(|i| (i..len).all(|k| bi[k] == bj[k])),
        "graded_betti",
    );
    r.witness(
        "comparand",
        match against {
            Comparand::Lex => "lex".to_string(),
            Comparand::Gin(o) => format!("gin_{}", o.name()),
        },
    );
    r.witness("J", j.fmt_gens());
    r.witness("betti", &bi);
    r.witness("gin_betti", &bg);
    r.witness("J_betti", &bj);
    r.witness("J_betti_table", &tj);
    r.witness("equality_indices", equal_indices(&bi, &bj));
    Ok(r)
}

/// Comparison of two componentwise linear ideals `I ⊆ J` with the same
/// Hilbert polynomial.
pub fn lowerbound_check(
    small: &GradedIdeal,
    big: &GradedIdeal,
    cfg: &CheckConfig,
) -> Result<TheoremReport> {
    let ctx = small.ctx();
    let n = ctx.n();
    let mut r = TheoremReport::new("lower_bound", &[small, big], cfg);
    if !ctx.compatible(big.ctx()) {
        r.not_applicable("ideals live in different rings");
        return Ok(r);
    }
    let gb_big = buchberger(big, TermOrder::DegRevLex)?;
    let contained = small.gens().iter().all(|f| gb_big.contains(f));
    let (ji, jj) = (
        initial_ideal(small, TermOrder::DegRevLex)?,
        initial_ideal(big, TermOrder::DegRevLex)?,
    );
    let reg = regularity_bound(&ji).max(regularity_bound(&jj));
    let same_hp = hilbert_polynomial_from(&ji, reg)? == hilbert_polynomial_from(&jj, reg)?;
    let cwl = (
        is_componentwise_linear(small)?,
        is_componentwise_linear(big)?,
    );
    r.fact("I is contained in J", contained);
    r.fact("equal Hilbert polynomials", same_hp);
    r.fact("I componentwise linear", cwl.0);
    r.fact("J componentwise linear", cwl.1);
    if !(contained && same_hp && cwl.0 && cwl.1) {
        r.not_applicable("hypotheses fail: see facts");
        return Ok(r);
    }
    let (ti, tj) = (graded_betti(small)?, graded_betti(big)?);
    let (bi, bj) = (ideal_totals(&ti, n), ideal_totals(&tj, n));
    let len = bi.len().max(bj.len());
    let (bi, bj) = (padded(bi, len), padded(bj, len));
    r.verdict(
        "(a) beta_i(J) <= beta_i(I) for all i",
        (0..len).all(|i| bj[i] <= bi[i]),
        "graded_betti",
    );
    let some_eq = (0..n.min(len)).any(|i| bi[i] == bj[i]);
    r.verdict(
        "(b) equality at some i < n forces equality everywhere",
        !some_eq || bi == bj,
        "graded_betti",
    );
    let y = generic_linear_forms(ctx, 1, cfg.seed);
    let gi = buchberger(&small.plus(&y)?, TermOrder::DegRevLex)?;
    let gj = buchberger(&big.plus(&y)?, TermOrder::DegRevLex)?;
    let same_mod_y = gi.same_ideal(&gj);
    r.fact("I + (y) = J + (y)", same_mod_y);
    r.verdict(
        "(c) equality at some i < n iff I + (y) = J + (y)",
        some_eq == same_mod_y,
        "graded_betti, buchberger",
    );
    r.witness("betti_I", &bi);
    r.witness("betti_J", &bj);
    r.witness("equality_indices", equal_indices(&bi, &bj));
    Ok(r)
}

/// Lower bound for the number of generators of `Gin(I)` for `m`-primary
/// `I ⊆ m^d`, with equality exactly when `I` and `m^d` agree modulo a generic
/// linear form.
pub fn strange_check(ideal: &GradedIdeal, d: u32, cfg: &CheckConfig) -> Result<TheoremReport> {
    let ctx = ideal.ctx();
    let n = ctx.n();
    let mut r = TheoremReport::new("gin_generator_bound", &[ideal], cfg);
    note_characteristic(&mut r, ctx);
    let artinian = hilbert_polynomial(&initial_ideal(ideal, TermOrder::DegRevLex)?)?.is_zero();
    let inside = ideal.min_degree().is_some_and(|m| m >= d);
    r.fact("I is m-primary", artinian);
    r.fact("I is contained in m^d", inside);
    if !(artinian && inside) {
        r.not_applicable("hypotheses fail: see facts");
        return Ok(r);
    }
    let g = gin(ideal, TermOrder::DegRevLex, cfg)?;
    let b0 = g.ideal.len() as u64;
    let floor = binomial((n as u64) + d as u64 - 1, d as u64);
    r.verdict(
        "(a) beta_0(Gin(I)) >= C(n+d-1, d)",
        b0 >= floor,
        "generic_initial_ideal",
    );
    let y = generic_linear_forms(ctx, 1, cfg.seed);
    let a = initial_ideal(&ideal.plus(&y)?, TermOrder::DegRevLex)?;
    let power = MonomialIdeal::maximal_power(ctx, d).to_graded();
    let b = initial_ideal(&power.plus(&y)?, TermOrder::DegRevLex)?;
    let top = regularity_bound(&a).max(regularity_bound(&b)) + 1;
    let same = hilbert_function(&a, top) == hilbert_function(&b, top);
    r.fact("I and m^d agree modulo y", same);
    r.verdict(
        "(b) beta_0(Gin(I)) = C(n+d-1, d) iff I and m^d agree modulo y",
        (b0 == floor) == same,
        "generic_initial_ideal, buchberger, hilbert_function",
    );
    r.witness("beta0_gin", b0);
    r.witness("binomial", floor);
    r.witness("gin", g.ideal.fmt_gens());
    Ok(r)
}

/// Gins of the monomial complete intersection `(x_1^d..x_n^d)` and of a
/// random complete intersection of `n` forms of degree `d`.
pub fn ci_experiment(ctx: &RingCtx, d: u32, cfg: &CheckConfig) -> Result<TheoremReport> {
    let n = ctx.n();
    let mono = MonomialIdeal::new(
        ctx.clone(),
        (0..n)
            .map(|i| {
                let mut e = vec![0u16; n];
                e[i] = d as u16;
                Monomial::from_exponents(&e)
            })
            .collect(),
    )
    .to_graded();
    let spec = IdealSpec::new(n, n, (d, d), Shape::CompleteIntersection).with_field(ctx.field());
    let generic = random_ideal(&spec, cfg.seed)?.with_ctx(ctx.clone())?;
    let mut r = TheoremReport::new("complete_intersection_gins", &[&mono, &generic], cfg);
    note_characteristic(&mut r, ctx);
    let gins = gin(&mono, TermOrder::DegRevLex, cfg)
        .and_then(|gm| Ok((gm, gin(&generic, TermOrder::DegRevLex, cfg)?)));
    let (gm, gg) = match gins {
        Ok(p) => p,
        Err(e) if e.is_resource_guard() => {
            r.not_applicable(format!("aborted: {e}"));
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    let (b_mono, b_gen) = (gm.ideal.len(), gg.ideal.len());
    r.verdict(
        "beta_0(Gin(generic)) <= beta_0(Gin(monomial))",
        b_gen <= b_mono,
        "generic_initial_ideal",
    );
    r.fact("gins differ", gm.ideal != gg.ideal);
    let (tm, tg) = (monomial_betti(&gm.ideal)?, monomial_betti(&gg.ideal)?);
    let graded_le = tg.iter().all(|(i, j, v)| v <= tm.get(i, j));
    r.fact(
        "graded Betti numbers of Gin(generic) <= Gin(monomial)",
        graded_le,
    );
    if n <= 4 {
        let same = graded_betti(&mono)? == graded_betti(&generic)?;
        r.fact("the two ideals have the same graded Betti numbers", same);
    }
    for w in gm.warnings.iter().chain(&gg.warnings) {
        if !r.notes.contains(w) {
            r.note(w.clone());
        }
    }
    r.witness("beta0_gin_monomial", b_mono);
    r.witness("beta0_gin_generic", b_gen);
    r.witness("gin_monomial_betti", ideal_totals(&tm, n));
    r.witness("gin_generic_betti", ideal_totals(&tg, n));
    Ok(r)
}

/// If `m H_i(y_A) = 0` for every subset `A`, the same holds at `i + 1`.
pub fn propagation_check(ideal: &GradedIdeal, cfg: &CheckConfig) -> Result<TheoremReport> {
    let ctx = ideal.ctx();
    let n = ctx.n();
    let mut r = TheoremReport::new("annihilation_propagation", &[ideal], cfg);
    let forms = generic_linear_forms(ctx, n, cfg.seed);
    let levels: Vec<bool> = subset_homology_annihilation_all(ideal, &forms)?
        .iter()
        .map(|flags| flags.values().all(|&f| f))
        .collect();
    r.verdict(
        "all-subset annihilation at i implies it at i + 1",
        upward_closed(&levels),
        "subset_homology_annihilation_all",
    );
    r.witness("all_annihilated_by_level", &levels);
    Ok(r)
}

/// `alpha(S/I) = alpha(S/Gin(I))`.
pub fn alpha_invariance_check(ideal: &GradedIdeal, cfg: &CheckConfig) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("alpha_invariance", &[ideal], cfg);
    note_characteristic(&mut r, ideal.ctx());
    let a = annihilator_numbers(ideal, cfg.seed)?;
    let g = gin(ideal, TermOrder::DegRevLex, cfg)?;
    let ag = annihilator_numbers(&g.ideal.to_graded(), cfg.seed)?;
    r.verdict(
        "alpha(S/I) = alpha(S/Gin(I))",
        a.alpha == ag.alpha,
        "annihilator_numbers, generic_initial_ideal",
    );
    if let Ok(st) = g.ideal.alpha_from_stable() {
        r.verdict(
            "alpha(S/Gin(I)) = (m_n, ..., m_1)(Gin(I))",
            st.alpha == ag.alpha,
            "alpha_from_stable",
        );
    }
    r.witness("alpha", &a.alpha);
    r.witness("gin_alpha", &ag.alpha);
    r.witness("gin", g.ideal.fmt_gens());
    Ok(r)
}
