use macpieri::arith::{Field, MonomialArg, RatFunc, Rational};
use macpieri::inverse_pieri::*;
use macpieri::inversions::random_rational;
use macpieri::oracle::{oracle_p, oracle_q};
use macpieri::partitions::{enumerate_partitions, non_partition_rearrangements, IntSeq, Partition, ThetaVector};
use macpieri::pieri::d_four;
use macpieri::symfunc::{multiply, Basis, Family, SymFunc};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

fn one() -> Rational {
    <Rational as One>::one()
}

fn partitions(max_weight: usize, max_len: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
    (1..=max_weight).flat_map(|n| enumerate_partitions(n, max_len, max_part)).collect()
}

/// `X_μ` for the side: the function the expansion is written in.
fn rest_function(side: Side, mu: &Partition) -> SymFunc {
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

fn row_factor(side: Side, k: i64) -> SymFunc {
    SymFunc::basis_element(side.factor_basis(), Partition::row(k as usize)).to_monomial()
}

/// Re-sums one inversion step with `X_μ = 0` for non-partitions.
fn resum_step(e: &StepExpansion, degree: usize) -> SymFunc {
    let mut acc = SymFunc::zero(Basis::Monomial, degree);
    for t in &e.terms {
        let Some(mu) = e.rest_partition(t) else { continue };
        let f = multiply(&row_factor(e.side, t.factor), &rest_function(e.side, &mu));
        acc = acc.add(&f.scale(&t.coeff)).unwrap();
    }
    acc.with_degree_bound(degree).unwrap()
}

fn assert_step_reconstructs(side: Side, lam: &Partition) {
    let s = IntSeq::from_partition(lam, lam.len());
    let e = invert_step(&s, side).unwrap();
    let lhs = rest_function(side, lam);
    let rhs = resum_step(&e, lam.weight());
    assert!(lhs.equals(&rhs), "{} step fails for {lam}", side.name());
}

fn assert_full_reconstructs(side: Side, lam: &Partition) -> FullExpansion {
    let e = expand_full(lam, side, false).unwrap();
    let lhs = rest_function(side, lam);
    let rhs = e.to_symfunc().unwrap().to_monomial();
    assert!(lhs.equals(&rhs), "{} full expansion fails for {lam}", side.name());
    e
}

// ---------------------------------------------------------------------------
// the coefficient itself

#[test]
fn three_routes_agree_at_random_rationals() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut compared = 0;
    for n in 1..=3usize {
        for theta in ThetaVector::all_boxed(n, 2) {
            for _ in 0..3 {
                let q = random_rational(&mut rng);
                let t = random_rational(&mut rng);
                let u: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
                let routes = [
                    c_qt_det(&q, &t, &theta.0, &u),
                    c_qt_subsets(&q, &t, &theta.0, &u),
                    c_qt_reduced(&q, &t, &theta.0, &u),
                ];
                let ok: Vec<&Rational> = routes.iter().filter_map(|r| r.as_ref().ok()).collect();
                if ok.len() == 3 {
                    compared += 1;
                    assert!(ok[0] == ok[1] && ok[1] == ok[2], "θ={:?} q={q} t={t} u={u:?}", theta.0);
                }
            }
        }
    }
    assert!(compared > 100);
}

#[test]
fn three_routes_agree_symbolically() {
    // c_coeff errors on any disagreement
    for n in 1..=3usize {
        for theta in ThetaVector::all_boxed(n, 2) {
            let u: Vec<RatFunc> = (0..n).map(|k| MonomialArg::new(3 * (n - k) as i64 - 1, (n - 1 - k) as i64).to_ratfunc()).collect();
            c_coeff(CFlavor::Qt, &theta, &CArgs::U(u.clone())).unwrap();
            c_coeff(CFlavor::Tq, &theta, &CArgs::U(u)).unwrap();
        }
    }
}

#[test]
fn one_part_closed_form() {
    let (q, t) = (RatFunc::q(), RatFunc::t());
    let qp = |x: &RatFunc, k: usize| (0..k).fold(RatFunc::from_int(1), |acc, i| acc.mul(&RatFunc::from_int(1).sub(&x.mul(&q.powi(i as i64).unwrap()))));
    for th in 1..=3usize {
        for u in [rf("q^2"), rf("q*t^3"), rf("q^5"), rf("t")] {
            let got = c_coeff(CFlavor::Qt, &ThetaVector(vec![th]), &CArgs::U(vec![u.clone()])).unwrap();
            let expect = t
                .powi(th as i64)
                .unwrap()
                .mul(&qp(&t.inv().unwrap(), th))
                .div(&qp(&q, th))
                .unwrap()
                .mul(&qp(&u, th))
                .div(&qp(&q.mul(&t).mul(&u), th))
                .unwrap()
                .mul(&RatFunc::from_int(1).sub(&q.powi(2 * th as i64).unwrap().mul(&u)))
                .div(&RatFunc::from_int(1).sub(&u))
                .unwrap();
            assert_eq!(got, expect, "θ={th} u={u}");
        }
    }
}

#[test]
fn length_two_worked_example() {
    let e = invert_step(&IntSeq(vec![2, 1]), Side::QG).unwrap();
    let c1 = rf("(t-1)/(1-q) * (1-q^3)/(1-q^2*t)");
    let got: Vec<(Vec<usize>, RatFunc, i64, Vec<i64>)> =
        e.terms.iter().map(|t| (t.theta.0.clone(), t.coeff.clone(), t.factor, t.rest.0.clone())).collect();
    assert_eq!(got, vec![(vec![0], RatFunc::from_int(1), 1, vec![2]), (vec![1], c1, 0, vec![3])]);
    // Q_(1,2) = Q_1 Q_2 + C_1(1/q) Q_2 Q_1 + C_2(1/q) Q_3 with C_1(1/q) = −1, C_2(1/q) = 0
    let e = invert_step(&IntSeq(vec![1, 2]), Side::QG).unwrap();
    let got: Vec<(Vec<usize>, RatFunc)> = e.terms.iter().map(|t| (t.theta.0.clone(), t.coeff.clone())).collect();
    assert_eq!(got, vec![(vec![0], RatFunc::from_int(1)), (vec![1], RatFunc::from_int(-1))]);
}

#[test]
fn monomial_coefficient_examples() {
    for m in -3..6i64 {
        if m == -1 {
            continue;
        }
        assert_eq!(c_mono(&[1], &[m]).unwrap(), Rational::from_i64(-(m + 2)), "m={m}");
    }
}

#[test]
fn matrix_inverse_link() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=2usize {
        let window: Vec<Vec<i64>> = (0..3i64.pow(n as u32)).map(|mut x| (0..n).map(|_| { let d = x % 3; x /= 3; d }).collect()).collect();
        let mut draws = 0;
        while draws < 5 {
            let q = random_rational(&mut rng);
            let t = random_rational(&mut rng);
            let u: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
            let shifted = |k: &[i64]| -> Vec<Rational> {
                let s: i64 = k.iter().sum();
                k.iter().zip(&u).map(|(&ki, ui)| q.powi(ki + s).unwrap().mul(ui)).collect()
            };
            let diff = |a: &[i64], b: &[i64]| -> Option<Vec<usize>> {
                a.iter().zip(b).map(|(x, y)| usize::try_from(x - y).ok()).collect()
            };
            let f = |b: &[i64], k: &[i64]| -> Result<Rational, ()> {
                match diff(b, k) {
                    None => Ok(Rational::zero()),
                    Some(th) => c_qt_in(&q, &t, &th, &shifted(k)).map_err(|_| ()),
                }
            };
            let g = |k: &[i64], c: &[i64]| -> Result<Rational, ()> {
                match diff(k, c) {
                    None => Ok(Rational::zero()),
                    Some(th) => d_four(&q, &t, &th, &shifted(c)).map_err(|_| ()),
                }
            };
            let mut fm = Vec::new();
            let mut gm = Vec::new();
            let mut degenerate = false;
            for a in &window {
                let mut fr = Vec::new();
                let mut gr = Vec::new();
                for b in &window {
                    match (f(a, b), g(a, b)) {
                        (Ok(x), Ok(y)) => {
                            fr.push(x);
                            gr.push(y);
                        }
                        _ => degenerate = true,
                    }
                }
                fm.push(fr);
                gm.push(gr);
            }
            if degenerate {
                continue;
            }
            draws += 1;
            let len = window.len();
            for i in 0..len {
                for j in 0..len {
                    let delta = if i == j { one() } else { Rational::zero() };
                    let fg = (0..len).fold(Rational::zero(), |acc, k| acc.add(&fm[i][k].mul(&gm[k][j])));
                    let gf = (0..len).fold(Rational::zero(), |acc, k| acc.add(&gm[i][k].mul(&fm[k][j])));
                    assert_eq!(fg, delta, "fg n={n} {:?} {:?}", window[i], window[j]);
                    assert_eq!(gf, delta, "gf n={n} {:?} {:?}", window[i], window[j]);
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Macdonald expansions

#[test]
fn one_step_reconstructs_q() {
    for lam in partitions(8, Some(4), None) {
        assert_step_reconstructs(Side::QG, &lam);
    }
}

#[test]
fn one_step_reconstructs_p() {
    for lam in partitions(8, None, Some(4)) {
        assert_step_reconstructs(Side::PE, &lam);
    }
}

#[test]
fn full_expansions_reconstruct() {
    for lam in partitions(8, None, None) {
        assert_full_reconstructs(Side::QG, &lam);
        assert_full_reconstructs(Side::PE, &lam);
    }
}

#[test]
fn full_expansion_small_cases() {
    for k in 1..=4usize {
        let e = expand_full(&Partition::row(k), Side::QG, false).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].coeff, RatFunc::from_int(1));
        assert_eq!(product_index(&e.terms[0].index), Some(Partition::row(k)));
        let e = expand_full(&Partition::column(k), Side::PE, false).unwrap();
        let s = e.to_symfunc().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(&Partition::row(k)), RatFunc::from_int(1));
    }
    let e = expand_full(&Partition::new(vec![2, 1]).unwrap(), Side::QG, false).unwrap();
    let s = e.to_symfunc().unwrap();
    assert_eq!(s.coeff(&Partition::new(vec![2, 1]).unwrap()), RatFunc::from_int(1));
    assert_eq!(s.coeff(&Partition::row(3)), rf("(t-1)/(1-q) * (1-q^3)/(1-q^2*t)"));
}

#[test]
fn peeling_matches_closed_products() {
    for lam in partitions(6, None, None) {
        for side in [Side::QG, Side::PE, Side::Hl, Side::Mono] {
            let e = expand_full(&lam, side, false).unwrap();
            for t in &e.terms {
                assert_eq!(closed_index(&lam, side, &t.theta), t.index, "{} {lam} {:?}", side.name(), t.theta);
                assert_eq!(closed_coefficient(&lam, side, &t.theta).unwrap(), t.coeff, "{} {lam} {:?}", side.name(), t.theta);
            }
        }
    }
}

#[test]
fn omega_duality() {
    for lam in partitions(7, None, None) {
        let g = expand_full(&lam, Side::QG, false).unwrap();
        let e = expand_full(&lam.conjugate(), Side::PE, false).unwrap();
        let by_theta = |x: &FullExpansion| -> HashMap<_, _> { x.terms.iter().map(|t| (t.theta.clone(), (t.index.clone(), t.coeff.clone()))).collect() };
        let (gm, em) = (by_theta(&g), by_theta(&e));
        assert_eq!(gm.len(), em.len(), "{lam}");
        for (theta, (idx, c)) in &gm {
            let (idx2, c2) = &em[theta];
            assert_eq!(product_index(idx), product_index(idx2), "{lam} {theta:?}");
            assert_eq!(c, &c2.swap_qt(), "{lam} {theta:?}");
        }
    }
}

#[test]
fn raw_full_expansion_adds_nothing() {
    for lam in partitions(6, Some(3), None) {
        let clean = expand_full(&lam, Side::QG, false).unwrap().to_symfunc().unwrap();
        let raw = expand_full(&lam, Side::QG, true).unwrap().to_symfunc().unwrap();
        assert!(clean.equals(&raw), "{lam}");
    }
}

// ---------------------------------------------------------------------------
// Schur

#[test]
fn schur_values_of_the_coefficient() {
    for n in 1..=3usize {
        for theta in ThetaVector::all_boxed(n, 3) {
            let u: Vec<MonomialArg> = (0..n).map(|k| MonomialArg::new(2 * (n - k) as i64 + 1, (n - 1 - k) as i64)).collect();
            let v = schur_c_check(&theta, &u).unwrap();
            let expect = if theta.0.iter().all(|&x| x <= 1) {
                RatFunc::from_int(if theta.weight() % 2 == 0 { 1 } else { -1 })
            } else {
                RatFunc::from_int(0)
            };
            assert_eq!(v, expect, "θ={:?}", theta.0);
        }
    }
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

fn parity(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 { 1 } else { -1 }
}

/// `det(h_{λ_i − i + j})` expanded over permutations.
fn jacobi_trudi(lam: &Partition) -> HashMap<Partition, i64> {
    let n = lam.len();
    let mut acc: HashMap<Partition, i64> = HashMap::new();
    for p in permutations(n) {
        let idx: Vec<i64> = (0..n).map(|i| lam.part(i) as i64 - i as i64 + p[i] as i64).collect();
        if idx.iter().any(|&x| x < 0) {
            continue;
        }
        let key = Partition::from_unsorted(idx.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect());
        *acc.entry(key).or_default() += parity(&p);
    }
    acc.retain(|_, v| *v != 0);
    acc
}

#[test]
fn schur_expansion_is_jacobi_trudi() {
    for lam in partitions(8, None, None) {
        let s = expand_full(&lam, Side::SchurH, false).unwrap().to_symfunc().unwrap();
        let got: HashMap<Partition, i64> = s
            .terms()
            .map(|(k, c)| (k.clone(), c.as_rational().unwrap().to_integer().try_into().unwrap()))
            .collect();
        assert_eq!(got, jacobi_trudi(&lam), "{lam}");
    }
    let s = expand_full(&Partition::new(vec![2, 1]).unwrap(), Side::SchurH, false).unwrap().to_symfunc().unwrap();
    assert_eq!(s.coeff(&Partition::new(vec![2, 1]).unwrap()), RatFunc::from_int(1));
    assert_eq!(s.coeff(&Partition::row(3)), RatFunc::from_int(-1));
}

#[test]
fn schur_sides_reconstruct() {
    for lam in partitions(6, None, None) {
        assert_step_reconstructs(Side::SchurH, &lam);
        assert_step_reconstructs(Side::SchurE, &lam);
        assert_full_reconstructs(Side::SchurE, &lam);
    }
}

#[test]
fn q_equals_one_collapses_to_elementary() {
    for lam in partitions(8, None, Some(4)) {
        let s = expand_full(&lam, Side::PE, false).unwrap().to_symfunc().unwrap();
        let at = s.map_coeffs(|c| c.subs_q(&RatFunc::from_int(1))).unwrap();
        let expect = SymFunc::basis_element(Basis::Elementary, lam.conjugate());
        assert!(at.equals(&expect.with_degree_bound(lam.weight()).unwrap()), "{lam}: {:?}", at.terms().collect::<Vec<_>>());
    }
    let u = [MonomialArg::new(2, 3), MonomialArg::new(1, 1), MonomialArg::new(0, 1)];
    for theta in ThetaVector::all_boxed(3, 2) {
        let c = c_coeff(CFlavor::Tq, &theta, &CArgs::U(u.iter().map(MonomialArg::to_ratfunc).collect())).unwrap();
        let at = c.subs_q(&RatFunc::from_int(1)).unwrap();
        let expect = if theta.weight() == 0 { 1 } else { 0 };
        assert_eq!(at, RatFunc::from_int(expect), "θ={:?}", theta.0);
    }
}

// ---------------------------------------------------------------------------
// Hall–Littlewood and monomial

#[test]
fn hall_littlewood_expansions_reconstruct() {
    for lam in partitions(8, None, None) {
        assert_step_reconstructs(Side::Hl, &lam);
        assert_full_reconstructs(Side::Hl, &lam);
    }
}

#[test]
fn monomial_expansions_reconstruct() {
    for lam in partitions(8, None, None) {
        assert_step_reconstructs(Side::Mono, &lam);
        assert_full_reconstructs(Side::Mono, &lam);
    }
}

#[test]
fn hall_littlewood_coefficient_is_the_q_to_zero_limit() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut ts = Vec::new();
    while ts.len() < 10 {
        let t = random_rational(&mut rng);
        if t != one() && t != one().neg() {
            ts.push(t);
        }
    }
    for t in &ts {
        for n in 1..=3usize {
            for theta in ThetaVector::all_boxed(n, 2) {
                let m: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
                let (closed, limit) = hl_limit_check(&theta, &m, t).unwrap();
                assert_eq!(closed, limit, "t={t} θ={:?} m={m:?}", theta.0);
            }
        }
    }
}

#[test]
fn monomial_coefficient_is_hall_littlewood_at_one() {
    let t = RatFunc::t();
    for n in 1..=3usize {
        for theta in ThetaVector::all_boxed(n, 3) {
            for m in ThetaVector::all_boxed(n, 3) {
                let m: Vec<i64> = m.0.iter().map(|&x| x as i64).collect();
                let hl = c_hl_in(&t, &theta.0, &m).unwrap();
                let at = hl.eval(&Rational::zero(), &one()).unwrap();
                assert_eq!(at, c_mono(&theta.0, &m).unwrap(), "θ={:?} m={m:?}", theta.0);
            }
        }
    }
}

#[test]
fn subset_sum_equals_closed_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    assert_eq!(fn_gn::<Rational>(&[Rational::from_i64(4)], &[]).unwrap(), (one(), one()));
    let (a, b) = ([Rational::from_i64(2), Rational::from_i64(7)], [Rational::from_i64(3)]);
    let f1 = one().add(&a[1].try_div(&b[0]).unwrap().mul(&a[0].sub(&b[0])).try_div(&a[1].sub(&b[0])).unwrap());
    assert_eq!(fn_gn(&a, &b).unwrap(), (f1.clone(), f1));
    for n in 0..=4usize {
        let mut done = 0;
        while done < 50 {
            let a: Vec<Rational> = (0..=n).map(|_| random_rational(&mut rng)).collect();
            let b: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
            let Ok((f, g)) = fn_gn(&a, &b) else { continue };
            assert_eq!(f, g, "a={a:?} b={b:?}");
            done += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Jack

#[test]
fn jack_expansions_reconstruct() {
    for lam in partitions(7, None, None) {
        assert_step_reconstructs(Side::JackQ, &lam);
        assert_step_reconstructs(Side::JackP, &lam);
    }
    for lam in partitions(6, None, None) {
        assert_full_reconstructs(Side::JackQ, &lam);
        assert_full_reconstructs(Side::JackP, &lam);
    }
}

#[test]
fn jack_coefficient_is_the_macdonald_limit() {
    // α = p/r runs through 1, 2, 1/2 and a = 1/α = r/p
    for (p, r) in [(1i64, 1i64), (2, 1), (1, 2)] {
        let alpha = Rational::new(p.into(), r.into());
        for lam in partitions(6, Some(4), None) {
            if lam.len() < 2 {
                continue;
            }
            let n = lam.len() - 1;
            let last = lam.part(n) as i64;
            let u: Vec<Rational> = (0..n)
                .map(|k| Rational::from_i64(lam.part(k) as i64 - last).add(&Rational::from_i64((n - 1 - k) as i64).try_div(&alpha).unwrap()))
                .collect();
            for theta in ThetaVector::all_bounded(n, last as usize) {
                let (closed, limit) = jack_limit_check(&theta, &u, p, r).unwrap();
                assert_eq!(closed, limit, "α={alpha} λ={lam} θ={:?}", theta.0);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// integer sequences

#[test]
fn non_partitions_vanish() {
    let mut checked = 0;
    for lam in partitions(5, None, None) {
        for s in non_partition_rearrangements(&lam) {
            let e = invert_step(&s, Side::QG).unwrap();
            assert!(resum_step(&e, lam.weight()).is_zero(), "{s}");
            let raw = expand_sequence(&s, Side::QG).unwrap();
            assert!(resum(&raw, Side::QG, lam.weight()).unwrap().is_zero(), "{s}");
            checked += 1;
        }
    }
    assert_eq!(checked, 13);
}

// ---------------------------------------------------------------------------
// output

#[test]
fn json_and_latex() {
    let lam = Partition::new(vec![2, 1]).unwrap();
    let e = expand_full(&lam, Side::QG, false).unwrap();
    let j = e.to_json();
    assert_eq!(j["basis"], "g");
    assert_eq!(j["degree"], 3);
    assert_eq!(j["terms"].as_array().unwrap().len(), 2);
    assert!(j["terms"][0]["theta"].is_object());
    let tex = e.to_latex();
    assert!(tex.starts_with("Q_{(2,1)} = "), "{tex}");
    assert!(tex.contains("g_{2} g_{1}"), "{tex}");
    let step = invert_step(&IntSeq(vec![2, 1]), Side::QG).unwrap();
    let tex = step.to_latex();
    assert!(tex.contains("g_{1} Q_{(2)}"), "{tex}");
    let s = serde_json::to_value(&step).unwrap();
    assert_eq!(s["side"], "Q-g");
}

#[test]
fn side_names_round_trip() {
    for s in Side::ALL {
        assert_eq!(Side::parse(s.name()), Some(s));
        assert_eq!(serde_json::to_value(s).unwrap(), s.name());
    }
}
