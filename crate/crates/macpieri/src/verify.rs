//! Self-verification suites shared by the command line and the acceptance
//! tests. Every check compares two independent computations exactly.

use crate::arith::{Field, MonomialArg, RatFunc, Rational};
use crate::error::Error;
use crate::hook::{column_expand, hook_expand, hook_recurrence_residual, kerov_det};
use crate::inverse_pieri::{
    c_coeff, c_hl_in, c_mono, expand_full, expand_sequence, fn_gn, hl_limit_check, invert_step, jack_limit_check, resum,
    schur_c_check, CArgs, CFlavor, FullExpansion, Side, StepExpansion,
};
use crate::inversions::{random_rational, verify_random, PairFamily};
use crate::oracle::{hl_raising_q, oracle_p, oracle_q, oracle_weight};
use crate::partitions::{enumerate_partitions, non_partition_rearrangements, IntSeq, Partition, ThetaVector};
use crate::pieri::{d_coeff, hl_pieri_expand, hl_recurrence_expand, pieri_args, pieri_expand, psi_coeff, PieriExpansion};
use crate::symfunc::{multiply, Basis, Family, SymFunc};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;

/// Outcome of one suite.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: usize,
    pub violations: Vec<String>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: suite.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one check; `Err` text becomes a violation.
    pub fn record(&mut self, r: std::result::Result<(), String>) {
        self.checks += 1;
        if let Err(e) = r {
            self.violations.push(e);
        }
    }

    pub fn merge(&mut self, o: Report) {
        self.checks += o.checks;
        self.violations.extend(o.violations);
    }

    fn run<T: Sync>(&mut self, cases: &[T], f: impl Fn(&T) -> std::result::Result<(), String> + Sync + Send) {
        let out: Vec<_> = cases.par_iter().map(f).collect();
        for r in out {
            self.record(r);
        }
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// All partitions with `1 ≤ |λ| ≤ max_weight` and the given bounds.
pub fn partitions(max_weight: usize, max_len: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
    (1..=max_weight).flat_map(|n| enumerate_partitions(n, max_len, max_part)).collect()
}

/// Builds oracle tables up to `w` one weight at a time, before parallel use.
pub fn warm(family: Family, w: usize) {
    for n in 0..=w {
        oracle_weight(family, n);
    }
}

// ---------------------------------------------------------------------------
// inverse pairs

/// Every inverse pair on `{0,1,2}^n` for `n ≤ max_dim` (capped per family),
/// `draws` random rational parameter sets each.
pub fn inversions(seed: u64, draws: usize, max_dim: usize) -> Report {
    let mut rep = Report::new("inversions");
    let cases: Vec<(PairFamily, usize)> = PairFamily::ALL
        .into_iter()
        .flat_map(|f| (1..=f.max_dim().unwrap_or(max_dim).min(max_dim)).map(move |n| (f, n)))
        .collect();
    let results: Vec<Vec<std::result::Result<(), String>>> = cases
        .par_iter()
        .map(|&(f, n)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 8) ^ f as u64);
            match verify_random(f, n, draws, 0, 2, &mut rng) {
                Ok(reports) => reports
                    .into_iter()
                    .map(|r| check(r.violations.is_empty(), || format!("{} n={n}: {:?}", f.name(), r.violations)))
                    .collect(),
                Err(e) => vec![Err(format!("{} n={n}: {e}", f.name()))],
            }
        })
        .collect();
    for r in results.into_iter().flatten() {
        rep.record(r);
    }
    rep
}

// ---------------------------------------------------------------------------
// Pieri formula

/// `d = ψ` on every strip and `Q_λ Q_(r)` re-summed against the oracle, for
/// `|λ| ≤ max_weight`, `ℓ(λ) ≤ max_len`, `r ≤ max_r`.
pub fn pieri(max_weight: usize, max_len: usize, max_r: usize) -> Report {
    let mut rep = Report::new("pieri");
    warm(Family::Macdonald, max_weight + max_r);
    let cases: Vec<(Partition, usize)> = std::iter::once(Partition::empty())
        .chain(partitions(max_weight, Some(max_len), None))
        .flat_map(|l| (0..=max_r).map(move |r| (l.clone(), r)))
        .collect();
    rep.run(&cases, |(lam, r)| {
        let n = lam.len();
        let l: Vec<i64> = lam.padded(n).into_iter().map(|x| x as i64).collect();
        let u = pieri_args(&l, *r as i64);
        for theta in ThetaVector::all_bounded(n, *r) {
            let mut k = l.clone();
            for (x, t) in k.iter_mut().zip(&theta.0) {
                *x += *t as i64;
            }
            k.push(*r as i64 - theta.weight() as i64);
            let Some(kappa) = IntSeq(k).to_partition() else { continue };
            let d = d_coeff(&theta, &u).map_err(err)?;
            check(d == psi_coeff(&kappa, lam), || format!("d ≠ ψ at λ={lam} r={r} θ={:?}", theta.0))?;
        }
        let lhs = multiply(&oracle_q(lam, Family::Macdonald), &oracle_q(&Partition::row(*r), Family::Macdonald));
        let e = pieri_expand(lam, *r, false).map_err(err)?;
        let mut rhs = SymFunc::zero(Basis::Monomial, lam.weight() + r);
        for t in &e.terms {
            let kappa = t.kappa.to_partition().expect("clean expansion");
            rhs = rhs.add(&oracle_q(&kappa, Family::Macdonald).scale(&t.coeff)).map_err(err)?;
        }
        check(lhs.equals(&rhs), || format!("Pieri product differs at λ={lam} r={r}"))
    });
    rep
}

// ---------------------------------------------------------------------------
// inversion theorem and full expansions

/// `X_μ` for a side: the function its expansions are written in.
pub fn side_function(side: Side, mu: &Partition) -> SymFunc {
    match side {
        Side::QG => oracle_q(mu, Family::Macdonald),
        Side::JackQ => oracle_q(mu, Family::Jack),
        Side::PE => oracle_p(mu, Family::Macdonald),
        Side::Hl => oracle_p(mu, Family::HallLittlewood),
        Side::JackP => oracle_p(mu, Family::Jack),
        Side::SchurH | Side::SchurE => oracle_p(mu, Family::Schur),
        Side::Mono => SymFunc::basis_element(Basis::Monomial, mu.clone()).to_monomial(),
    }
}

fn side_family(side: Side) -> Option<Family> {
    match side {
        Side::QG | Side::PE => Some(Family::Macdonald),
        Side::JackQ | Side::JackP => Some(Family::Jack),
        Side::Hl => Some(Family::HallLittlewood),
        Side::SchurH | Side::SchurE => Some(Family::Schur),
        Side::Mono => None,
    }
}

/// Re-sums one inversion step in the monomial basis, `X_μ = 0` off partitions.
pub fn resum_step(e: &StepExpansion, degree: usize) -> crate::Result<SymFunc> {
    let mut acc = SymFunc::zero(Basis::Monomial, degree);
    for t in &e.terms {
        let Some(mu) = e.rest_partition(t) else { continue };
        let row = SymFunc::basis_element(e.side.factor_basis(), Partition::row(t.factor as usize)).to_monomial();
        acc = acc.add(&multiply(&row, &side_function(e.side, &mu)).scale(&t.coeff))?;
    }
    acc.with_degree_bound(degree)
}

/// One step on `λ`, re-summed against the oracle.
pub fn step_reconstructs(side: Side, lam: &Partition) -> std::result::Result<(), String> {
    let e = invert_step(&IntSeq::from_partition(lam, lam.len()), side).map_err(err)?;
    let rhs = resum_step(&e, lam.weight()).map_err(err)?;
    check(side_function(side, lam).equals(&rhs), || format!("{} step differs from the oracle at {lam}", side.name()))
}

/// Full expansion of `λ`, re-summed against the oracle.
pub fn full_reconstructs(side: Side, lam: &Partition) -> std::result::Result<FullExpansion, String> {
    let e = expand_full(lam, side, false).map_err(err)?;
    let rhs = e.to_symfunc().map_err(err)?.to_monomial();
    check(side_function(side, lam).equals(&rhs), || format!("{} full expansion differs from the oracle at {lam}", side.name()))?;
    Ok(e)
}

fn warm_side(side: Side, w: usize) {
    if let Some(f) = side_family(side) {
        warm(f, w);
    }
}

/// One step for every `λ` with `|λ| ≤ max_weight`, `ℓ(λ) ≤ max_len`.
pub fn steps(side: Side, max_weight: usize, max_len: Option<usize>, max_part: Option<usize>) -> Report {
    let mut rep = Report::new(&format!("step {}", side.name()));
    warm_side(side, max_weight);
    rep.run(&partitions(max_weight, max_len, max_part), |lam| step_reconstructs(side, lam));
    rep
}

/// Full expansions for every `λ` with `|λ| ≤ max_weight`.
pub fn full(side: Side, max_weight: usize) -> Report {
    let mut rep = Report::new(&format!("full {}", side.name()));
    warm_side(side, max_weight);
    rep.run(&partitions(max_weight, None, None), |lam| full_reconstructs(side, lam).map(|_| ()));
    rep
}

/// `expand_full(λ, Q-g)` and `expand_full(λ′, P-e)`: same θ-matrices, same
/// product indices, coefficients exchanged by `q ↔ t`.
pub fn omega_duality(max_weight: usize) -> Report {
    let mut rep = Report::new("omega duality");
    rep.run(&partitions(max_weight, None, None), |lam| {
        let g = expand_full(lam, Side::QG, false).map_err(err)?;
        let e = expand_full(&lam.conjugate(), Side::PE, false).map_err(err)?;
        let em: HashMap<_, _> = e.terms.iter().map(|t| (t.theta.clone(), t)).collect();
        check(em.len() == g.terms.len(), || format!("term counts differ at {lam}"))?;
        for t in &g.terms {
            let Some(d) = em.get(&t.theta) else { return Err(format!("θ {:?} missing on the dual side of {lam}", t.theta)) };
            check(
                crate::inverse_pieri::product_index(&t.index) == crate::inverse_pieri::product_index(&d.index)
                    && t.coeff == d.coeff.swap_qt(),
                || format!("dual term differs at {lam}, θ {:?}", t.theta),
            )?;
        }
        Ok(())
    });
    rep
}

fn c1(u: &RatFunc) -> crate::Result<RatFunc> {
    let one = RatFunc::from_int(1);
    "(t-1)/(1-q)".parse::<RatFunc>()?.mul(&one.sub(&"q^2".parse::<RatFunc>()?.mul(u))).div(&one.sub(&"q*t".parse::<RatFunc>()?.mul(u)))
}

fn c2(u: &RatFunc) -> crate::Result<RatFunc> {
    let one = RatFunc::from_int(1);
    let p = |s: &str| s.parse::<RatFunc>();
    p("(t-1)/(1-q) * (t-q)/(1-q^2)")?
        .mul(&one.sub(&p("q")?.mul(u)))
        .div(&one.sub(&p("q*t")?.mul(u)))?
        .mul(&one.sub(&p("q^4")?.mul(u)))
        .div(&one.sub(&p("q^2*t")?.mul(u)))
}

/// The one-part coefficients `C_1(u)`, `C_2(u)` in closed form.
pub fn length_two_displays() -> Report {
    let mut rep = Report::new("C_1, C_2 displays");
    for u in ["q", "q^2", "q^3*t", "t^2", "q^-1"] {
        let uf: RatFunc = u.parse().expect("literal");
        for (th, f) in [(1usize, c1 as fn(&RatFunc) -> crate::Result<RatFunc>), (2, c2)] {
            let r = (|| {
                let got = c_coeff(CFlavor::Qt, &ThetaVector(vec![th]), &CArgs::U(vec![uf.clone()])).map_err(err)?;
                let want = f(&uf).map_err(err)?;
                check(got == want, || format!("C_{th}({u}) = {got}, expected {want}"))
            })();
            rep.record(r);
        }
    }
    rep
}

/// Non-partition sequences: one step (with `Q_μ = 0` off partitions) and the
/// raw recursion both sum to zero.
pub fn non_partitions(max_weight: usize) -> Report {
    let mut rep = Report::new("non-partition vanishing");
    warm(Family::Macdonald, max_weight);
    let cases: Vec<(IntSeq, usize)> =
        partitions(max_weight, None, None).iter().flat_map(|l| non_partition_rearrangements(l).into_iter().map(|s| (s, l.weight()))).collect();
    rep.run(&cases, |(s, w)| {
        let e = invert_step(s, Side::QG).map_err(err)?;
        check(resum_step(&e, *w).map_err(err)?.is_zero(), || format!("one step on {s} is not zero"))?;
        let raw = expand_sequence(s, Side::QG).map_err(err)?;
        check(resum(&raw, Side::QG, *w).map_err(err)?.is_zero(), || format!("raw expansion of {s} is not zero"))
    });
    rep
}

type Formal = HashMap<Vec<i64>, RatFunc>;

fn formal_apply(f: &Formal, step: impl Fn(&IntSeq) -> crate::Result<PieriExpansion>) -> crate::Result<Formal> {
    let mut out = Formal::new();
    for (k, c) in f {
        for t in step(&IntSeq(k.clone()))?.terms {
            let v = out.remove(&t.kappa.0).map(|x| x.add(&t.coeff.mul(c))).unwrap_or_else(|| t.coeff.mul(c));
            if !v.is_zero() {
                out.insert(t.kappa.0, v);
            }
        }
    }
    Ok(out)
}

fn sequences(max_len: usize, max_entry: i64) -> Vec<IntSeq> {
    let mut out = Vec::new();
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &frontier {
            for x in 0..=max_entry {
                let mut v: Vec<i64> = s.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(IntSeq));
        frontier = next;
    }
    out
}

/// Hall–Littlewood on integer sequences: `Q_(1,2) = t Q_(2,1)` for the
/// raising-operator functions, and the analytic Pieri pair composes to the
/// identity in both orders on sequences of length ≤ 3 with entries ≤ 3.
pub fn hall_littlewood_sequences() -> Report {
    let mut rep = Report::new("Hall–Littlewood sequences");
    let a = hl_raising_q(&IntSeq(vec![1, 2]));
    let b = hl_raising_q(&IntSeq(vec![2, 1])).scale(&RatFunc::t());
    rep.record(check(a.equals(&b), || "Q_(1,2) ≠ t Q_(2,1)".into()));
    let pieri = |s: &IntSeq| -> crate::Result<PieriExpansion> {
        let (&last, front) = s.0.split_last().expect("nonempty");
        Ok(hl_pieri_expand(&IntSeq(front.to_vec()), last as usize))
    };
    rep.run(&sequences(3, 3), |s| {
        let start: Formal = std::iter::once((s.0.clone(), RatFunc::from_int(1))).collect();
        let there = formal_apply(&formal_apply(&start, pieri).map_err(err)?, hl_recurrence_expand).map_err(err)?;
        let back = formal_apply(&formal_apply(&start, hl_recurrence_expand).map_err(err)?, pieri).map_err(err)?;
        check(there == start && back == start, || format!("HL pair is not inverse at {s}"))
    });
    rep
}

/// The theorem-level suite: one step, full expansions, ω-duality, displays,
/// integer sequences.
pub fn main_suite(max_weight: usize) -> Report {
    let mut rep = Report::new("main");
    rep.merge(length_two_displays());
    rep.merge(steps(Side::QG, max_weight, Some(4), None));
    rep.merge(steps(Side::PE, max_weight, None, Some(4)));
    rep.merge(full(Side::QG, max_weight));
    rep.merge(full(Side::PE, max_weight));
    rep.merge(omega_duality(max_weight.min(7)));
    rep.merge(non_partitions(max_weight.min(5)));
    rep.merge(hall_littlewood_sequences());
    rep
}

// ---------------------------------------------------------------------------
// specializations

/// `C^{(t,t)}_θ ∈ {0, ±1}` as predicted, for `θ` entries ≤ 3 and `n ≤ 3`.
pub fn schur_values() -> Report {
    let mut rep = Report::new("Schur coefficient values");
    let cases: Vec<ThetaVector> = (1..=3).flat_map(|n| ThetaVector::all_boxed(n, 3)).collect();
    rep.run(&cases, |theta| {
        let n = theta.len();
        let u: Vec<MonomialArg> = (0..n).map(|k| MonomialArg::new(2 * (n - k) as i64 + 1, (n - 1 - k) as i64)).collect();
        schur_c_check(theta, &u).map(|_| ()).map_err(err)
    });
    rep
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut x = p.clone();
            x.insert(i, n - 1);
            out.push(x);
        }
    }
    out
}

/// `det(h_{λ_i − i + j})` expanded over permutations, in the `h` basis.
pub fn jacobi_trudi(lam: &Partition) -> HashMap<Partition, i64> {
    let n = lam.len();
    let mut acc: HashMap<Partition, i64> = HashMap::new();
    for p in permutations(n) {
        let idx: Vec<i64> = (0..n).map(|i| lam.part(i) as i64 - i as i64 + p[i] as i64).collect();
        if idx.iter().any(|&x| x < 0) {
            continue;
        }
        let mut inv = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        let key = Partition::from_unsorted(idx.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect());
        *acc.entry(key).or_default() += if inv % 2 == 0 { 1 } else { -1 };
    }
    acc.retain(|_, v| *v != 0);
    acc
}

/// The `q = t` expansion against Jacobi–Trudi.
pub fn schur_jacobi_trudi(max_weight: usize) -> Report {
    let mut rep = Report::new("Jacobi–Trudi");
    rep.run(&partitions(max_weight, None, None), |lam| {
        let s = expand_full(lam, Side::SchurH, false).map_err(err)?.to_symfunc().map_err(err)?;
        let jt = jacobi_trudi(lam);
        let got: HashMap<Partition, i64> = s
            .terms()
            .map(|(k, c)| {
                let v = c.as_rational().filter(|r| r.is_integer()).ok_or_else(|| format!("non-integer coefficient at {lam}"))?;
                Ok((k.clone(), i64::try_from(v.to_integer()).map_err(|e| e.to_string())?))
            })
            .collect::<std::result::Result<_, String>>()?;
        check(got == jt, || format!("Jacobi–Trudi differs at {lam}"))
    });
    rep
}

/// `P_λ(q = 1, t) = e_{λ′}` and `C^{(t,1)}_θ = 0` for `θ ≠ 0`.
pub fn q_equals_one(max_weight: usize) -> Report {
    let mut rep = Report::new("q = 1");
    rep.run(&partitions(max_weight, None, Some(4)), |lam| {
        let s = expand_full(lam, Side::PE, false).map_err(err)?.to_symfunc().map_err(err)?;
        let at = s.map_coeffs(|c| c.subs_q(&RatFunc::from_int(1))).map_err(err)?;
        let expect = SymFunc::basis_element(Basis::Elementary, lam.conjugate()).with_degree_bound(lam.weight()).map_err(err)?;
        check(at.equals(&expect), || format!("P_{lam}(1,t) ≠ e_{}", lam.conjugate()))
    });
    let u: Vec<RatFunc> = [MonomialArg::new(2, 3), MonomialArg::new(1, 1), MonomialArg::new(0, 1)].iter().map(MonomialArg::to_ratfunc).collect();
    rep.run(&ThetaVector::all_boxed(3, 2), |theta| {
        let c = c_coeff(CFlavor::Tq, theta, &CArgs::U(u.clone())).map_err(err)?;
        let at = c.subs_q(&RatFunc::from_int(1)).map_err(err)?;
        let want = RatFunc::from_int(if theta.weight() == 0 { 1 } else { 0 });
        check(at == want, || format!("C^(t,1)_{:?} = {at}", theta.0))
    });
    rep
}

/// `C^{(t)}` against `lim_{q→0} C^{(t,q)}` at `draws` random rational `t`.
pub fn hall_littlewood_limit(seed: u64, draws: usize) -> Report {
    let mut rep = Report::new("Hall–Littlewood limit");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = <Rational as One>::one();
    let mut cases = Vec::new();
    while cases.len() < draws {
        let t = random_rational(&mut rng);
        if t == one || t == -one.clone() {
            continue;
        }
        for n in 1..=3usize {
            for theta in ThetaVector::all_boxed(n, 2) {
                let m: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
                cases.push((t.clone(), theta, m));
            }
        }
        cases.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1 && a.2 == b.2);
        if cases.iter().map(|c| &c.0).collect::<std::collections::HashSet<_>>().len() >= draws {
            break;
        }
    }
    rep.run(&cases, |(t, theta, m)| {
        let (closed, limit) = hl_limit_check(theta, m, t).map_err(err)?;
        check(closed == limit, || format!("C^(t)_{:?}({m:?}) at t={t}: {closed} vs {limit}", theta.0))
    });
    rep
}

/// The monomial `C` equals `C^{(t)}` at `t = 1`, all `θ, m` with entries ≤ 3.
pub fn monomial_is_hl_at_one() -> Report {
    let mut rep = Report::new("monomial = Hall–Littlewood at t = 1");
    let one = <Rational as One>::one();
    let cases: Vec<(ThetaVector, Vec<i64>)> = (1..=3)
        .flat_map(|n| {
            ThetaVector::all_boxed(n, 3).into_iter().flat_map(move |th| {
                ThetaVector::all_boxed(n, 3).into_iter().map(move |m| (th.clone(), m.0.iter().map(|&x| x as i64).collect()))
            })
        })
        .collect();
    rep.run(&cases, |(theta, m)| {
        let hl = c_hl_in(&RatFunc::t(), &theta.0, m).map_err(err)?;
        let at = hl.eval(&Rational::from_i64(0), &one).map_err(err)?;
        let mono = c_mono(&theta.0, m).map_err(err)?;
        check(at == mono, || format!("θ={:?} m={m:?}: {at} vs {mono}", theta.0))
    });
    rep
}

/// `F_n = G_n` for `n ≤ max_n`, `draws` random rational draws each.
pub fn subset_sums(seed: u64, max_n: usize, draws: usize) -> Report {
    let mut rep = Report::new("F_n = G_n");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..=max_n {
        let mut done = 0;
        let mut tries = 0;
        while done < draws && tries < 100 * draws {
            tries += 1;
            let a: Vec<Rational> = (0..=n).map(|_| random_rational(&mut rng)).collect();
            let b: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
            let Ok((f, g)) = fn_gn(&a, &b) else { continue };
            rep.record(check(f == g, || format!("n={n}: {f} vs {g}")));
            done += 1;
        }
        if done < draws {
            rep.record(Err(format!("n={n}: too many degenerate draws")));
        }
    }
    rep
}

/// `C^{(a)}` against the `x → 1` limit of `C^{(q,t)}` along `q = x^p`, `t = x^r`.
pub fn jack_limit(max_weight: usize) -> Report {
    let mut rep = Report::new("Jack limit");
    let mut cases = Vec::new();
    for (p, r) in [(1i64, 1i64), (2, 1), (1, 2)] {
        for lam in partitions(max_weight, Some(4), None) {
            if lam.len() < 2 {
                continue;
            }
            let n = lam.len() - 1;
            let last = lam.part(n) as i64;
            let a = Rational::new(r.into(), p.into());
            let u: Vec<Rational> = (0..n).map(|k| Rational::from_i64(lam.part(k) as i64 - last) + Rational::from_i64((n - 1 - k) as i64) * &a).collect();
            for theta in ThetaVector::all_bounded(n, last as usize) {
                cases.push((p, r, lam.clone(), u.clone(), theta));
            }
        }
    }
    rep.run(&cases, |(p, r, lam, u, theta)| {
        let (closed, limit) = jack_limit_check(theta, u, *p, *r).map_err(err)?;
        check(closed == limit, || format!("α={p}/{r} λ={lam} θ={:?}: {closed} vs {limit}", theta.0))
    });
    rep
}

/// Schur, Hall–Littlewood, monomial and Jack cases.
pub fn specializations(max_weight: usize, seed: u64) -> Report {
    let mut rep = Report::new("specializations");
    rep.merge(schur_values());
    rep.merge(schur_jacobi_trudi(max_weight));
    rep.merge(q_equals_one(max_weight));
    rep.merge(steps(Side::Hl, max_weight, None, None));
    rep.merge(full(Side::Hl, max_weight));
    rep.merge(steps(Side::Mono, max_weight, None, None));
    rep.merge(full(Side::Mono, max_weight));
    rep.merge(hall_littlewood_limit(seed, 10));
    rep.merge(monomial_is_hl_at_one());
    rep.merge(subset_sums(seed, 4, 50));
    let jw = max_weight.min(7);
    rep.merge(steps(Side::JackQ, jw, None, None));
    rep.merge(steps(Side::JackP, jw, None, None));
    rep.merge(full(Side::JackQ, jw.min(6)));
    rep.merge(full(Side::JackP, jw.min(6)));
    rep.merge(jack_limit(jw.min(6)));
    rep
}

// ---------------------------------------------------------------------------
// hooks

/// Kerov's determinant, the composition sums, the full expansion and the
/// oracle agree on `(r, 1^s)`, `r + s ≤ max_weight`; the recurrence closes;
/// the two composition sums are exchanged by `ω`.
pub fn hooks(max_weight: usize) -> Report {
    let mut rep = Report::new("hook");
    warm(Family::Macdonald, max_weight);
    let cases: Vec<(usize, usize)> = (1..=max_weight).flat_map(|r| (0..=max_weight - r).map(move |s| (r, s))).collect();
    rep.run(&cases, |&(r, s)| {
        let lam = Partition::hook(r, s);
        let kerov = kerov_det(r, s).map_err(err)?;
        let comp = hook_expand(r, s, Side::QG).map_err(err)?.to_symfunc().map_err(err)?;
        let full = expand_full(&lam, Side::QG, false).map_err(err)?.to_symfunc().map_err(err)?;
        check(kerov.equals(&comp) && kerov.equals(&full), || format!("hook expansions differ at {lam}"))?;
        check(kerov.to_monomial().equals(&oracle_q(&lam, Family::Macdonald)), || format!("Kerov determinant ≠ oracle at {lam}"))?;
        let pe = hook_expand(r, s, Side::PE).map_err(err)?.to_symfunc().map_err(err)?;
        check(pe.to_monomial().equals(&oracle_p(&lam, Family::Macdonald)), || format!("dual hook sum ≠ oracle at {lam}"))?;
        let dual = hook_expand(s + 1, r - 1, Side::PE).map_err(err)?;
        let dm: HashMap<_, _> = dual.terms.iter().map(|t| (t.composition.clone(), t)).collect();
        for t in &hook_expand(r, s, Side::QG).map_err(err)?.terms {
            let d = dm[&t.composition];
            check(t.index == d.index && t.coeff == d.coeff.swap_qt(), || format!("ω fails at {lam}, {:?}", t.composition))?;
        }
        if s > 0 {
            check(hook_recurrence_residual(r, s).map_err(err)?.is_zero(), || format!("recurrence fails at ({r},{s})"))?;
        }
        let col = column_expand(s + 1).map_err(err)?;
        check(col.terms == hook_expand(1, s, Side::QG).map_err(err)?.terms, || format!("column (1^{}) differs", s + 1))
    });
    rep
}

/// A suite by name.
pub fn by_name(name: &str, max_weight: usize, seed: u64) -> Option<Report> {
    Some(match name {
        "inversions" => inversions(seed, 20, 3),
        "pieri" => pieri(max_weight, 3, 4),
        "main" => main_suite(max_weight),
        "specializations" => specializations(max_weight, seed),
        "hook" => hooks(max_weight),
        _ => return None,
    })
}

pub const SUITES: [&str; 5] = ["inversions", "pieri", "main", "specializations", "hook"];
