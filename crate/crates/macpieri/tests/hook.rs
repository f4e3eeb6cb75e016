use macpieri::arith::{qpoch_in, Field, RatFunc};
use macpieri::hook::*;
use macpieri::inverse_pieri::{expand_full, Side};
use macpieri::oracle::{oracle_p, oracle_q};
use macpieri::partitions::Partition;
use macpieri::symfunc::{Basis, Family, SymFunc};
use std::collections::HashMap;

fn hooks(max: usize) -> Vec<(usize, usize)> {
    (1..=max).flat_map(|r| (0..=max - r).map(move |s| (r, s))).collect()
}

#[test]
fn four_way_agreement() {
    for (r, s) in hooks(8) {
        let lam = Partition::hook(r, s);
        let kerov = kerov_det(r, s).unwrap();
        let comp = hook_expand(r, s, Side::QG).unwrap().to_symfunc().unwrap();
        let full = expand_full(&lam, Side::QG, false).unwrap().to_symfunc().unwrap();
        assert!(kerov.equals(&comp), "kerov vs compositions at {lam}");
        assert!(kerov.equals(&full), "kerov vs full expansion at {lam}");
        assert!(kerov.to_monomial().equals(&oracle_q(&lam, Family::Macdonald)), "kerov vs oracle at {lam}");
    }
}

#[test]
fn dual_side_agreement() {
    for (r, s) in hooks(8) {
        let lam = Partition::hook(r, s);
        let comp = hook_expand(r, s, Side::PE).unwrap().to_symfunc().unwrap();
        let full = expand_full(&lam, Side::PE, false).unwrap().to_symfunc().unwrap();
        assert!(comp.equals(&full), "compositions vs full expansion at {lam}");
        assert!(comp.to_monomial().equals(&oracle_p(&lam, Family::Macdonald)), "vs oracle at {lam}");
    }
}

#[test]
fn omega_swaps_the_two_theorems() {
    for (r, s) in hooks(8) {
        let g = hook_expand(r, s, Side::QG).unwrap();
        let e = hook_expand(s + 1, r - 1, Side::PE).unwrap();
        let em: HashMap<_, _> = e.terms.iter().map(|t| (t.composition.clone(), t)).collect();
        assert_eq!(g.terms.len(), em.len());
        for t in &g.terms {
            let d = em[&t.composition];
            assert_eq!(t.index, d.index, "({r},{s}) {:?}", t.composition);
            assert_eq!(t.coeff, d.coeff.swap_qt(), "({r},{s}) {:?}", t.composition);
        }
    }
}

#[test]
fn pieri_recurrence_closes() {
    for (r, s) in hooks(8) {
        if s == 0 {
            continue;
        }
        assert!(hook_recurrence_residual(r, s).unwrap().is_zero(), "({r},{s})");
    }
}

#[test]
fn columns() {
    for n in 1..=8usize {
        let col = column_expand(n).unwrap();
        assert_eq!(col.terms.len(), 1 << (n - 1));
        let hook = hook_expand(1, n - 1, Side::QG).unwrap();
        assert_eq!(col.terms, hook.terms, "n={n}");
        // Q_{1^n} = (t;t)_n/(q;t)_n e_n
        let (q, t) = (RatFunc::q(), RatFunc::t());
        let c = qpoch_in(&t, &t, n as i64).unwrap().try_div(&qpoch_in(&q, &t, n as i64).unwrap()).unwrap();
        let expect = SymFunc::basis_element(Basis::Elementary, Partition::row(n)).scale(&c).to_monomial();
        assert!(col.to_symfunc().unwrap().to_monomial().equals(&expect), "n={n}");
    }
}

#[test]
fn json_shape() {
    let h = hook_expand(2, 1, Side::QG).unwrap();
    let v = serde_json::to_value(&h).unwrap();
    assert_eq!(v["lambda"], serde_json::json!([2, 1]));
    assert_eq!(v["side"], "Q-g");
    assert!(v["terms"][0]["composition"].is_array());
}
