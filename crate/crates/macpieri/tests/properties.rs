//! Property tests for the arithmetic, partition, symmetric-function and
//! oracle layers.

use macpieri::arith::{det, det_cofactor, qpoch, Field, MonomialArg, MultiPoly, RatFunc, Rational, Vars};
use macpieri::oracle::{b_lambda, by_operator, gram_schmidt, oracle_norm, oracle_p};
use macpieri::partitions::{enumerate_compositions, enumerate_partitions, Partition};
use macpieri::symfunc::{e_to_m_matrix, g_product_in_p, p_to_m_matrix, scalar_product, Basis, Family, SymFunc};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u32..4, 0u32..4, -6i64..7), 1..5)
        .prop_map(|ts| MultiPoly::from_terms(Vars::QT, &ts.into_iter().map(|(i, j, c)| ([i, j], BigInt::from(c))).collect::<Vec<_>>()))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..10, 1i64..6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn mono_symfunc(max: usize) -> impl Strategy<Value = SymFunc> {
    (1..=max)
        .prop_flat_map(|n| {
            let parts = enumerate_partitions(n, None, None);
            let k = parts.len();
            (Just(n), Just(parts), prop::collection::vec(-4i64..5, k))
        })
        .prop_map(|(n, parts, cs)| {
            SymFunc::from_terms(Basis::Monomial, n, parts.into_iter().zip(cs).map(|(p, c)| (p, RatFunc::from_int(c)))).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::from_int(1));
        }
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn gcd_algorithms_agree(a in poly(), b in poly(), c in poly()) {
        let x = a.mul(&c);
        let y = b.mul(&c);
        let g = x.gcd(&y);
        prop_assert_eq!(&g, &x.gcd_prs(&y));
        if !g.is_zero() {
            prop_assert!(x.div_exact(&g).is_some() && y.div_exact(&g).is_some());
        }
    }

    #[test]
    fn qpoch_recurrence(qe in -4i64..5, te in -4i64..5, s in small_rational(), k in 0usize..8) {
        let a = MonomialArg::scaled(s, qe, te);
        let step = RatFunc::from_int(1).sub(&a.shift_q(k as i64).to_ratfunc());
        prop_assert_eq!(qpoch(&a, k + 1), qpoch(&a, k).mul(&step));
    }

    #[test]
    fn determinant_matches_cofactors(n in 1usize..5, seed in prop::collection::vec((-3i64..4, -3i64..4, -3i64..4), 16)) {
        let (q, t) = (RatFunc::q(), RatFunc::t());
        let m: Vec<Vec<RatFunc>> = (0..n)
            .map(|i| (0..n).map(|j| {
                let (a, b, c) = seed[i * 4 + j];
                RatFunc::from_int(a).add(&q.scale_i64(b)).add(&t.mul(&t).scale_i64(c))
            }).collect())
            .collect();
        prop_assert_eq!(det(&m), det_cofactor(&m));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), q0 in small_rational(), t0 in small_rational()) {
        let ev = |f: &RatFunc| f.eval(&q0, &t0).ok();
        if let (Some(x), Some(y)) = (ev(&a), ev(&b)) {
            prop_assert_eq!(ev(&a.add(&b)), Some(&x + &y));
            prop_assert_eq!(ev(&a.mul(&b)), Some(&x * &y));
            if !y.is_zero() && !b.is_zero() {
                if let Some(z) = ev(&a.div(&b).unwrap()) {
                    prop_assert_eq!(z, &x / &y);
                }
            }
        }
    }

    #[test]
    fn monomial_powersum_round_trip(f in mono_symfunc(8)) {
        prop_assert!(f.to_powersum().to_monomial().equals(&f));
    }

    #[test]
    fn scalar_product_symmetric_bilinear(f in mono_symfunc(5), g in mono_symfunc(5), h in mono_symfunc(5), s in small_rational()) {
        let fam = Family::Macdonald;
        prop_assert_eq!(scalar_product(&f, &g, fam), scalar_product(&g, &f, fam));
        if let Ok(gh) = g.scale(&RatFunc::from_bigrational(&s)).add(&h) {
            let lhs = scalar_product(&f, &gh, fam);
            let rhs = scalar_product(&f, &g, fam).mul(&RatFunc::from_bigrational(&s)).add(&scalar_product(&f, &h, fam));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn conjugation_is_an_involution() {
    for n in 0..=12 {
        for p in enumerate_partitions(n, None, None) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }
}

#[test]
fn partition_counts() {
    let expect = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    for (n, &c) in expect.iter().enumerate() {
        assert_eq!(enumerate_partitions(n, None, None).len(), c, "p({n})");
    }
}

#[test]
fn length_and_weight_from_multiplicities() {
    for n in 1..=10 {
        for p in enumerate_partitions(n, None, None) {
            let m = p.multiplicities();
            assert_eq!(m.iter().sum::<usize>(), p.len());
            assert_eq!(m.iter().enumerate().map(|(i, &x)| (i + 1) * x).sum::<usize>(), p.weight());
        }
    }
}

#[test]
fn composition_counts() {
    for n in 1..=10 {
        let cs = enumerate_compositions(n);
        assert_eq!(cs.len(), 1 << (n - 1));
        assert!(cs.iter().all(|c| c.weight() == n));
    }
}

#[test]
fn conversions_are_stable_in_the_number_of_variables() {
    for n in 1..=7 {
        assert_eq!(p_to_m_matrix(n, n), p_to_m_matrix(n, n + 1), "p, degree {n}");
        assert_eq!(e_to_m_matrix(n, n), e_to_m_matrix(n, n + 1), "e, degree {n}");
    }
}

#[test]
fn g_products_are_dual_to_monomials() {
    for fam in [Family::Macdonald, Family::HallLittlewood, Family::Jack] {
        for n in 1..=5 {
            let parts = enumerate_partitions(n, None, None);
            for lam in &parts {
                let g = g_product_in_p(fam, lam);
                for mu in &parts {
                    let m = SymFunc::basis_element(Basis::Monomial, mu.clone());
                    let want = RatFunc::from_int(i64::from(lam == mu));
                    let got = scalar_product(&g, &m, fam);
                    assert_eq!(got.as_rational(), want.as_rational(), "{} ⟨g_{lam}, m_{mu}⟩", fam.name());
                }
            }
        }
    }
}

#[test]
fn oracle_is_orthogonal_with_closed_form_norms() {
    for n in 1..=6 {
        let parts = enumerate_partitions(n, None, None);
        for (i, a) in parts.iter().enumerate() {
            let pa = oracle_p(a, Family::Macdonald);
            for b in &parts[i + 1..] {
                assert!(scalar_product(&pa, &oracle_p(b, Family::Macdonald), Family::Macdonald).is_zero(), "⟨P_{a}, P_{b}⟩");
            }
            assert_eq!(b_lambda(a).mul(&oracle_norm(a, Family::Macdonald)), RatFunc::from_int(1), "b_{a}");
        }
    }
}

#[test]
fn specializations_of_the_oracle() {
    for n in 1..=6 {
        for lam in enumerate_partitions(n, None, None) {
            let mac = oracle_p(&lam, Family::Macdonald);
            let at_t = mac.map_coeffs(|c| c.subs_q(&RatFunc::t())).unwrap();
            assert!(at_t.equals(&oracle_p(&lam, Family::Schur)), "q = t at {lam}");
            let at_0 = mac.map_coeffs(|c| c.subs_q(&RatFunc::from_int(0))).unwrap();
            let hl = oracle_p(&lam, Family::HallLittlewood);
            assert!(at_0.equals(&hl), "q = 0 at {lam}");
        }
    }
}

#[test]
fn jack_columns_are_elementary() {
    for k in 1..=6 {
        let col = Partition::column(k);
        let e = SymFunc::basis_element(Basis::Elementary, Partition::row(k)).to_monomial();
        assert!(oracle_p(&col, Family::Jack).equals(&e), "k = {k}");
    }
}

#[test]
fn operator_matches_gram_schmidt_at_six_and_seven() {
    for n in 6..=7 {
        let a = gram_schmidt(Family::Macdonald, n);
        let b = by_operator(n);
        assert_eq!(a.p, b.p, "weight {n}");
        assert_eq!(a.norm, b.norm, "weight {n}");
    }
}
