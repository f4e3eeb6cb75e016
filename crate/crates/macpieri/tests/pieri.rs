use macpieri::arith::RatFunc;
use macpieri::oracle::{hl_raising_q, oracle_q};
use macpieri::partitions::{enumerate_partitions, IntSeq, Partition, ThetaVector};
use macpieri::pieri::*;
use macpieri::symfunc::{multiply, multiply_in_basis, Basis, Family, SymFunc};
use std::collections::HashMap;

fn small_partitions() -> Vec<Partition> {
    (0..=6).flat_map(|n| enumerate_partitions(n, Some(3), None)).collect()
}

#[test]
fn analytic_coefficients_are_the_strip_coefficients() {
    for lam in small_partitions() {
        let n = lam.len();
        let l: Vec<i64> = lam.padded(n).into_iter().map(|x| x as i64).collect();
        for r in 0..=4usize {
            let u = pieri_args(&l, r as i64);
            let mut strips = 0;
            for theta in ThetaVector::all_bounded(n, r) {
                let mut k = l.clone();
                for (x, t) in k.iter_mut().zip(&theta.0) {
                    *x += *t as i64;
                }
                k.push(r as i64 - theta.weight() as i64);
                let Some(kappa) = IntSeq(k).to_partition() else { continue };
                let d = d_coeff(&theta, &u).unwrap();
                let psi = psi_coeff(&kappa, &lam);
                assert_eq!(d, psi, "λ={lam} r={r} θ={:?}", theta.0);
                if kappa.is_horizontal_strip_over(&lam) {
                    strips += 1;
                    assert!(!d.is_zero());
                }
            }
            // every horizontal r-strip over λ has exactly one θ
            let expected = enumerate_partitions(lam.weight() + r, Some(n + 1), None)
                .into_iter()
                .filter(|k| k.is_horizontal_strip_over(&lam))
                .count();
            assert_eq!(strips, expected, "λ={lam} r={r}");
        }
    }
}

#[test]
fn pieri_resums_to_the_oracle_product() {
    for lam in small_partitions() {
        let q_lam = oracle_q(&lam, Family::Macdonald);
        for r in 0..=4usize {
            let lhs = multiply(&q_lam, &oracle_q(&Partition::row(r), Family::Macdonald));
            let e = pieri_expand(&lam, r, false).unwrap();
            let mut rhs = SymFunc::zero(Basis::Monomial, lam.weight() + r);
            for term in &e.terms {
                let kappa = term.kappa.to_partition().unwrap();
                rhs = rhs.add(&oracle_q(&kappa, Family::Macdonald).scale(&term.coeff)).unwrap();
            }
            assert_eq!(lhs, rhs.with_degree_bound(lam.weight() + r).unwrap(), "λ={lam} r={r}");
        }
    }
}

#[test]
fn raw_expansion_keeps_non_partitions() {
    let lam = Partition::new(vec![2, 1]).unwrap();
    let raw = pieri_expand(&lam, 2, true).unwrap();
    let clean = pieri_expand(&lam, 2, false).unwrap();
    assert!(raw.terms.len() > clean.terms.len());
    assert!(clean.terms.iter().all(|t| raw.terms.contains(t)));
    let json = serde_json::to_value(&clean).unwrap();
    assert_eq!(json["lambda"], serde_json::json!([2, 1]));
    assert_eq!(json["r"], 2);
    assert!(json["terms"][0]["kappa"].is_array());
}

fn sequences(max_len: usize, max_entry: i64) -> Vec<IntSeq> {
    let mut out = vec![IntSeq(vec![])];
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

fn hl_row(r: usize) -> SymFunc {
    SymFunc::basis_element(Basis::G(Family::HallLittlewood), Partition::row(r))
}

#[test]
fn hall_littlewood_pieri_holds_for_raising_operator_functions() {
    for s in sequences(2, 3) {
        for r in 0..=3usize {
            let lhs = multiply_in_basis(&hl_raising_q(&s), &hl_row(r)).unwrap();
            let e = hl_pieri_expand(&s, r);
            let parts: Vec<(RatFunc, SymFunc)> = e.terms.iter().map(|t| (t.coeff.clone(), hl_raising_q(&t.kappa))).collect();
            let items: Vec<(RatFunc, &SymFunc)> = parts.iter().map(|(c, f)| (c.clone(), f)).collect();
            let rhs = SymFunc::combine(lhs.basis(), lhs.degree_bound(), &items).unwrap();
            assert_eq!(lhs, rhs, "s={:?} r={r}", s.0);
        }
    }
}

#[test]
fn hall_littlewood_recurrence_holds_for_raising_operator_functions() {
    for s in sequences(3, 3).into_iter().filter(|s| !s.0.is_empty()) {
        let lhs = hl_raising_q(&s);
        let e = hl_recurrence_expand(&s).unwrap();
        let parts: Vec<(RatFunc, SymFunc)> = e
            .terms
            .iter()
            .map(|t| {
                let (&last, front) = t.kappa.0.split_last().unwrap();
                let f = multiply_in_basis(&hl_raising_q(&IntSeq(front.to_vec())), &hl_row(last as usize)).unwrap();
                (t.coeff.clone(), f)
            })
            .collect();
        let items: Vec<(RatFunc, &SymFunc)> = parts.iter().map(|(c, f)| (c.clone(), f)).collect();
        let rhs = SymFunc::combine(lhs.basis(), lhs.degree_bound(), &items).unwrap();
        assert_eq!(lhs, rhs, "s={:?}", s.0);
    }
}

type Formal = HashMap<Vec<i64>, RatFunc>;

fn push(acc: &mut Formal, k: Vec<i64>, c: RatFunc) {
    let v = acc.remove(&k).map(|x| x.add(&c)).unwrap_or(c);
    if !v.is_zero() {
        acc.insert(k, v);
    }
}

/// Applies one of the two expansions to every symbol of a formal sum.
fn apply(f: &Formal, step: impl Fn(&IntSeq) -> PieriExpansion) -> Formal {
    let mut out = Formal::new();
    for (k, c) in f {
        for t in step(&IntSeq(k.clone())).terms {
            push(&mut out, t.kappa.0, t.coeff.mul(c));
        }
    }
    out
}

#[test]
fn hall_littlewood_pair_is_two_sided_inverse() {
    let pieri = |s: &IntSeq| {
        let (&last, front) = s.0.split_last().unwrap();
        hl_pieri_expand(&IntSeq(front.to_vec()), last as usize)
    };
    let rec = |s: &IntSeq| hl_recurrence_expand(s).unwrap();
    for s in sequences(3, 3).into_iter().filter(|s| !s.0.is_empty()) {
        let start: Formal = std::iter::once((s.0.clone(), RatFunc::from_int(1))).collect();
        assert_eq!(apply(&apply(&start, pieri), rec), start, "{:?}", s.0);
        assert_eq!(apply(&apply(&start, rec), pieri), start, "{:?}", s.0);
    }
}
