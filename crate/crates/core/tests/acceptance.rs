//! Acceptance gate: the structural identities the library must satisfy,
//! one test per criterion, all at zero tolerance (arithmetic is exact).
//! Each test prints a `[PASS]`/`[FAIL]` line (visible with --nocapture).

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use skeinlab::algebra::{IntPoly, LaurentPoly, TwoVarLaurent, USeries};
use skeinlab::chord::{
    enumerate_diagrams, extend_linear, g_chord, gen_4t, gen_4t_instances, gen_4ts, op_f, op_s,
    quotient_dim, relation_echelon, weight, ChordCombination, ChordDiagram, DiagramSpan,
    RatEchelon,
};
use skeinlab::diagram::{
    eight_t_combination, make_g, CrossingKind, Diagram, EightTClosure,
};
use skeinlab::higher::{
    d_identity_check, divisibility_check, epsilon_coefficients, homfly_reparam_check,
    kronecker_check, nabla_lm,
};
use skeinlab::series::{alpha_beta_series, gamma_cubic_residual, gamma_series, SkeinSeries};
use skeinlab::skein::SkeinContext;
use skeinlab::verify::{classical_fixtures, random_diagrams};

const SEED: u64 = 7;

struct Criterion {
    name: &'static str,
    budget_secs: u64,
    start: Instant,
}

impl Criterion {
    fn new(name: &'static str, budget_secs: u64) -> Self {
        Criterion {
            name,
            budget_secs,
            start: Instant::now(),
        }
    }

    fn finish(self, passed: bool) {
        let elapsed = self.start.elapsed();
        println!(
            "[{}] {} ({elapsed:.2?})",
            if passed { "PASS" } else { "FAIL" },
            self.name
        );
        assert!(passed, "{} failed", self.name);
        assert!(
            elapsed.as_secs() < self.budget_secs,
            "{} exceeded its {}s budget: {elapsed:?}",
            self.name,
            self.budget_secs
        );
    }
}

fn fixture(name: &str) -> Diagram {
    classical_fixtures()
        .into_iter()
        .find(|(n, _)| *n == name)
        .unwrap()
        .1
}

#[test]
fn criterion_01_series_system() {
    let c = Criterion::new("criterion 1: series system at order 16", 1);
    let order = 16;
    let gamma = gamma_series(order);
    let mut ok = gamma_cubic_residual(&gamma).is_zero();
    ok &= gamma == USeries::constant(BigInt::from(-1), order);
    let (alpha, beta) = alpha_beta_series(order);
    let s = SkeinSeries {
        gamma: gamma.clone(),
        alpha: alpha.clone(),
        beta: beta.clone(),
    };
    let report = skeinlab::series::verify_equations_of(&s);
    ok &= report.alpha_residual.is_zero() && report.beta_residual.is_zero();
    ok &= report.alpha_low_ok && report.beta_low_ok;
    for k in 0..order {
        let want_a = if k % 2 == 1 { -1 } else { 0 };
        let want_b = i64::from(k % 2 == 0 && k > 0);
        ok &= alpha.coeff(k) == BigInt::from(want_a);
        ok &= beta.coeff(k) == BigInt::from(want_b);
    }
    c.finish(ok);
}

#[test]
fn criterion_02_classical_invariants() {
    let c = Criterion::new("criterion 2: classical invariant values", 5);
    let ctx = SkeinContext::new(12);
    let mut ok = ctx.conway(&fixture("unknot")).is_one();
    ok &= ctx.conway(&fixture("trefoil")) == IntPoly::from_i64(&[1, 0, 1]);
    ok &= ctx.conway(&fixture("figure_eight")) == IntPoly::from_i64(&[1, 0, -1]);
    ok &= ctx.conway(&fixture("hopf_plus")) == IntPoly::from_i64(&[0, 1]);
    ok &= ctx.conway(&Diagram::unlink(2)).is_zero();
    ok &= ctx.conway(&Diagram::unlink(3)).is_zero();
    let mut pool: Vec<Diagram> = classical_fixtures().into_iter().map(|(_, d)| d).collect();
    pool.extend(random_diagrams(SEED, 50, 8));
    for d in &pool {
        ok &= ctx.homfly(d).eval_x_one() == LaurentPoly::from(&ctx.conway(d));
    }
    c.finish(ok);
}

#[test]
fn criterion_03_skein_relation_properties() {
    let c = Criterion::new("criterion 3: skein relations on sampled triples", 10);
    let ctx = SkeinContext::new(12);
    let mut ok = true;
    let diagrams = random_diagrams(SEED.wrapping_add(1), 20, 8);
    for (k, d) in diagrams.iter().enumerate() {
        let i = k % d.crossing_count();
        let sw = d.switch_crossing(i).unwrap();
        let sm = d.smooth_crossing(i).unwrap();
        let (plus, minus) = match d.crossings()[i].kind {
            CrossingKind::Positive => (d.clone(), sw),
            _ => (sw, d.clone()),
        };
        let x = |a: i64, b: i64| TwoVarLaurent::monomial(BigInt::from(1), a, b);
        let lhs = &(&x(1, 0) * &ctx.homfly(&plus)) - &(&x(-1, 0) * &ctx.homfly(&minus));
        ok &= lhs == &x(0, 1) * &ctx.homfly(&sm);
        let rhs = &(ctx.one_plus_h_alpha() * &ctx.p_series(&minus))
            + &(ctx.h_one_plus_beta() * &ctx.p_series(&sm));
        ok &= ctx.p_series(&plus) == rhs;
    }
    c.finish(ok);
}

#[test]
fn criterion_04_kronecker_grid() {
    let c = Criterion::new("criterion 4: delta grid on resolved generators", 30);
    let ctx = SkeinContext::new(12);
    let mut ok = true;
    for np in 0..=3usize {
        for lp in 0..=np {
            ok &= kronecker_check(&ctx, lp, np, 4).unwrap().all_ok();
        }
    }
    c.finish(ok);
}

#[test]
fn criterion_05_filtration_divisibility() {
    let c = Criterion::new("criterion 5: u-divisibility with pinned top coefficient", 30);
    let ctx = SkeinContext::new(12);
    let mut ok = true;
    for n in 1..=4usize {
        for l in 0..=n {
            let r = divisibility_check(&ctx, &make_g(l, n).unwrap()).unwrap();
            ok &= r.valuation_ok && r.top_coefficient_ok;
        }
    }
    for d in skeinlab::diagram::eight_t_diagrams(EightTClosure::Trace) {
        let r = divisibility_check(&ctx, &d).unwrap();
        ok &= r.valuation_ok && r.top_coefficient_ok;
    }
    c.finish(ok);
}

#[test]
fn criterion_06_eight_term_vanishing() {
    let c = Criterion::new("criterion 6: eight-term combinations vanish", 30);
    let ctx = SkeinContext::new(12);
    let mut ok = true;
    for closure in [EightTClosure::Trace, EightTClosure::Twisted] {
        let comb = eight_t_combination(closure);
        ok &= ctx.eval_conway(&comb).is_zero();
        ok &= ctx.eval_homfly(&comb).is_zero();
        ok &= ctx.eval_p(&comb).is_zero();
    }
    c.finish(ok);
}

#[test]
fn criterion_07_derivative_structure() {
    let c = Criterion::new("criterion 7: derivative formula and integrality", 60);
    let ctx = SkeinContext::new(12);
    let mut ok = true;
    let fixtures: Vec<Diagram> = classical_fixtures().into_iter().map(|(_, d)| d).collect();
    for d in &fixtures {
        let mut der = ctx.conway(d);
        let mut fact = BigInt::from(1);
        for m in 1..=4usize {
            der = der.derivative();
            fact *= BigInt::from(m);
            ok &= nabla_lm(&ctx, d, 0, m).unwrap()
                == LaurentPoly::from(&der.exact_div(&fact).unwrap());
        }
    }
    let mut pool = fixtures.clone();
    pool.extend(random_diagrams(SEED.wrapping_add(2), 30, 8));
    for d in &pool {
        for l in 0..=4usize {
            for m in 0..=(4 - l) {
                let hl = nabla_lm(&ctx, d, l, m)
                    .unwrap()
                    .mul_monomial(&BigInt::from(1), l as i64);
                ok &= hl.to_int_poly().is_some();
            }
        }
    }
    for d in pool.iter().take(10) {
        for eps in [1i64, -1] {
            // Integral by construction; faithfulness of the expansion.
            let coeffs = epsilon_coefficients(&ctx, d, 1, eps, 12).unwrap();
            let base = IntPoly::from_i64(&[-eps, 1]);
            let mut acc = IntPoly::zero();
            let mut pw = IntPoly::one();
            for co in &coeffs {
                acc = &acc + &(&pw * &IntPoly::constant(co.clone()));
                pw = &pw * &base;
            }
            let direct = nabla_lm(&ctx, d, 1, 0)
                .unwrap()
                .mul_monomial(&BigInt::from(1), 1);
            ok &= LaurentPoly::from(&acc) == direct;
        }
    }
    c.finish(ok);
}

#[test]
fn criterion_08_reparametrization() {
    let c = Criterion::new("criterion 8: substitution matches the series invariant", 60);
    let ctx = SkeinContext::new(12);
    let ok = classical_fixtures()
        .iter()
        .all(|(_, d)| homfly_reparam_check(&ctx, d).unwrap().matches);
    c.finish(ok);
}

#[test]
fn criterion_09_differential_identity() {
    let c = Criterion::new("criterion 9: derivative of resolved generators", 60);
    let ctx = SkeinContext::new(12);
    let ok = (1..=3usize).all(|t| {
        let r = d_identity_check(&ctx, t).unwrap();
        r.homfly_ok && r.p_ok
    });
    c.finish(ok);
}

#[test]
fn criterion_10_chord_quotients() {
    let c = Criterion::new("criterion 10: chord quotient ranks and operator calculus", 120);
    let mut ok = true;

    // Rank table with basis certificates.
    for n in 0..=2usize {
        for e in 1..=2u32 {
            let r = quotient_dim(n, e).unwrap();
            ok &= r.ok() && r.dim == (n + 1) * e as usize;
        }
    }

    // Operator identities on every diagram with up to three chords.
    let e = 2u32;
    let spans: Vec<DiagramSpan> = (0..=3).map(|n| DiagramSpan::build(n, e).unwrap()).collect();
    let echelons: Vec<RatEchelon> = spans.iter().map(|s| relation_echelon(s).unwrap()).collect();
    let diagrams: Vec<ChordDiagram> = (0..=3)
        .flat_map(|n| enumerate_diagrams(n, e).unwrap())
        .filter(|d| d.circle_count() > 0)
        .collect();
    let one = num_rational::BigRational::from_integer(1.into());
    let t_comb = |d: &ChordDiagram| {
        ChordCombination::singleton(d.add_isolated_chord().unwrap(), one.clone())
    };
    for d in &diagrams {
        let n = d.chord_count();
        let dd = ChordCombination::singleton(d.clone(), one.clone());
        ok &= extend_linear(&op_s(d), op_f)
            .sub(&extend_linear(&op_f(d), op_s))
            .is_zero();
        let td = t_comb(d);
        let ft_tf = extend_linear(&td, op_f)
            .sub(&extend_linear(&extend_linear(&dd, op_f), |x| t_comb(x)));
        ok &= echelons[n].contains(spans[n].vector_of(&ft_tf.sub(&dd)));
        let st_ts = extend_linear(&td, op_s)
            .sub(&extend_linear(&extend_linear(&dd, op_s), |x| t_comb(x)));
        let u_d = ChordCombination::singleton(d.with_free(1), one.clone());
        ok &= echelons[n].contains(spans[n].vector_of(&st_ts.sub(&u_d)));
        let s_minus_uf = |c: &ChordCombination| {
            let s = extend_linear(c, op_s);
            let uf = extend_linear(c, |x| {
                op_f(x)
                    .iter()
                    .fold(ChordCombination::zero(), |mut acc, (t, co)| {
                        acc.add_term(t.with_free(1), co.clone());
                        acc
                    })
            });
            s.sub(&uf)
        };
        let comm = s_minus_uf(&td).sub(&extend_linear(&s_minus_uf(&dd), |x| t_comb(x)));
        ok &= echelons[n].contains(spans[n].vector_of(&comm));
    }

    // Exact operator formulas on the generator family.
    for n in 1..=4usize {
        for l in 0..=n {
            let rat = |v: i64| num_rational::BigRational::from_integer(v.into());
            let mut want_s = ChordCombination::zero();
            let mut want_f = ChordCombination::zero();
            if l >= 1 {
                want_s.add_term(g_chord(l - 1, n - 1).with_free(1), rat(l as i64));
                want_f.add_term(g_chord(l - 1, n - 1), rat(l as i64));
            }
            if n > l {
                want_s.add_term(g_chord(l, n - 1), rat((n - l) as i64));
                want_f.add_term(g_chord(l, n - 1).with_free(1), rat((n - l) as i64));
            }
            ok &= op_s(&g_chord(l, n)).sub(&want_s).is_zero();
            ok &= op_f(&g_chord(l, n)).sub(&want_f).is_zero();
            if l < n {
                ok &= g_chord(l, n - 1)
                    .add_isolated_chord()
                    .unwrap()
                    .canonical_encoding()
                    == g_chord(l + 1, n).canonical_encoding();
            }
        }
    }

    // Isolated-chord mobility inside the smoothed-relation span.
    let span4 = DiagramSpan::build(4, e).unwrap();
    let mut ech4 = RatEchelon::new();
    for v in gen_4ts(4, e).unwrap() {
        ech4.insert(span4.vector_of(&v));
    }
    let ts_echelons: Vec<RatEchelon> = (0..=3usize)
        .map(|n| {
            let mut ech = RatEchelon::new();
            if n >= 1 {
                for v in gen_4ts(n, e).unwrap() {
                    ech.insert(spans[n].vector_of(&v));
                }
            }
            ech
        })
        .collect();
    for d in &diagrams {
        let inserted = insertions(d);
        let n = d.chord_count() + 1;
        for i in 0..inserted.len() {
            for j in i + 1..inserted.len() {
                let diff = ChordCombination::singleton(inserted[i].clone(), one.clone()).sub(
                    &ChordCombination::singleton(inserted[j].clone(), one.clone()),
                );
                ok &= if n == 4 {
                    ech4.contains(span4.vector_of(&diff))
                } else {
                    ts_echelons[n].contains(spans[n].vector_of(&diff))
                };
            }
        }
    }

    // Weight: annihilates every generated relation, detects g(0, k).
    for n in 1..=3usize {
        let mut vs = gen_4ts(n, e).unwrap();
        if n >= 2 {
            vs.extend(gen_4t(n, e).unwrap());
        }
        for v in vs {
            let mut acc = num_rational::BigRational::zero();
            for (d, co) in v.iter() {
                acc += co * num_rational::BigRational::from_integer(weight(d).into());
            }
            ok &= acc.is_zero();
        }
    }
    for k in 1..=4usize {
        ok &= weight(&g_chord(0, k)) == 1;
    }

    // Smoothing maps four-term instances into the relation span one level
    // down.
    for n in 1..=3usize {
        for inst in gen_4t_instances(n + 1, e).unwrap() {
            let image = extend_linear(&inst.combination(), op_s);
            ok &= echelons[n].contains(spans[n].vector_of(&image));
        }
    }

    c.finish(ok);
}

/// Every single-site insertion of an isolated chord.
fn insertions(d: &ChordDiagram) -> Vec<ChordDiagram> {
    let k = d.chord_count();
    let (a, b) = (2 * k, 2 * k + 1);
    let mut partner: Vec<usize> = vec![0; 2 * k + 2];
    for (p, q) in d.chords() {
        partner[p] = q;
        partner[q] = p;
    }
    partner[a] = b;
    partner[b] = a;
    let mut out = vec![];
    for (ci, c) in d.circles().iter().enumerate() {
        for gap in 0..c.len() {
            let mut circles = d.circles().to_vec();
            circles[ci].insert(gap, b);
            circles[ci].insert(gap, a);
            out.push(ChordDiagram::new(circles, partner.clone(), d.free_circles()).unwrap());
        }
    }
    if d.free_circles() > 0 {
        let mut circles = d.circles().to_vec();
        circles.push(vec![a, b]);
        out.push(ChordDiagram::new(circles, partner.clone(), d.free_circles() - 1).unwrap());
    }
    out
}
