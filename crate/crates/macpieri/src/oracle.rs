//! Independent ground truth: Gram–Schmidt orthogonalization of the monomial
//! basis, the Hall–Littlewood raising-operator definition, and the
//! Macdonald difference operator `E`.

use crate::arith::{qpoch, MonomialArg, RatFunc, Rational, Vars};
use crate::partitions::{IntSeq, Partition};
use crate::symfunc::{tables, Basis, Family, SymFunc};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Orthogonal family of one weight, in the order of [`tables`].
pub struct OracleWeight {
    pub parts: Vec<Partition>,
    /// `P_λ` in the monomial basis.
    pub p: Vec<SymFunc>,
    /// `⟨P_λ, P_λ⟩`.
    pub norm: Vec<RatFunc>,
}

/// All `P_λ` of weight `n` for a family (cached).
pub fn oracle_weight(family: Family, n: usize) -> Arc<OracleWeight> {
    static CACHE: OnceLock<Mutex<HashMap<(Family, usize), Arc<OracleWeight>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(w) = cache.lock().unwrap().get(&(family, n)) {
        return w.clone();
    }
    let w = Arc::new(match family {
        Family::Macdonald if n > GRAM_SCHMIDT_MAX => by_operator(n),
        _ => gram_schmidt(family, n),
    });
    cache.lock().unwrap().insert((family, n), w.clone());
    w
}

/// Above this weight the Macdonald family is built from the operator `E`
/// instead; the two constructions are compared in the tests below it.
pub const GRAM_SCHMIDT_MAX: usize = 7;

/// Orthogonalizes the monomial basis in reverse-lex order, bottom up.
pub fn gram_schmidt(family: Family, n: usize) -> OracleWeight {
    let tab = tables(n);
    let parts = tab.parts.clone();
    let k = parts.len();
    let zw: Vec<RatFunc> = parts
        .iter()
        .map(|rho| family.power_weight(rho).scale_int(&rho.z_factor()))
        .collect();
    // Gram matrix of the monomial basis.
    let mut gram = vec![vec![RatFunc::from_int(0); k]; k];
    for a in 0..k {
        for b in a..k {
            let mut acc = Vec::new();
            for r in 0..k {
                let x = &tab.m_to_p[a][r] * &tab.m_to_p[b][r];
                if !x.is_zero() {
                    acc.push(zw[r].mul(&RatFunc::from_bigrational(&x)));
                }
            }
            let s = RatFunc::sum_many(acc);
            gram[a][b] = s.clone();
            gram[b][a] = s;
        }
    }
    // u[i][j]: coefficient of m_j in P_i, nonzero only for j >= i.
    let mut u: Vec<Vec<RatFunc>> = vec![Vec::new(); k];
    let mut norm = vec![RatFunc::from_int(0); k];
    for i in (0..k).rev() {
        let mut coeffs = vec![RatFunc::from_int(0); k];
        coeffs[i] = RatFunc::from_int(1);
        for j in (i + 1)..k {
            let ip = RatFunc::sum_many((j..k).filter(|&l| !u[j][l].is_zero()).map(|l| u[j][l].mul(&gram[i][l])));
            if ip.is_zero() {
                continue;
            }
            let f = ip.div(&norm[j]).expect("norms are nonzero").neg();
            for l in j..k {
                if !u[j][l].is_zero() {
                    coeffs[l] = coeffs[l].add(&f.mul(&u[j][l]));
                }
            }
        }
        norm[i] = RatFunc::sum_many((i..k).filter(|&l| !coeffs[l].is_zero()).map(|l| coeffs[l].mul(&gram[i][l])));
        u[i] = coeffs;
    }
    let p = u
        .iter()
        .map(|row| {
            SymFunc::from_terms(Basis::Monomial, n, row.iter().enumerate().map(|(j, c)| (parts[j].clone(), c.clone())))
                .expect("weights agree")
        })
        .collect();
    OracleWeight { parts, p, norm }
}

/// Stable Macdonald operator on power sums:
/// `E p_ρ = (t−1)^{-1} Σ_{∅≠S⊆ρ} ∏_{j∈S}(q^{ρ_j}−1) g̃_{|S|} ∏_{j∉S} p_{ρ_j}`,
/// with `Σ g̃_m z^m = exp Σ_r (1 − t^{−r}) p_r z^r / r`. Sub-multisets `S`
/// are counted with their multiplicity.
fn operator_on_powersums(n: usize) -> Vec<HashMap<Partition, RatFunc>> {
    let one = RatFunc::from_int(1);
    let mono = |a: i64, b: i64| RatFunc::monomial(Vars::QT, &Rational::one(), a, b);
    let mut gt: Vec<HashMap<Partition, RatFunc>> = vec![std::iter::once((Partition::empty(), one.clone())).collect()];
    for m in 1..=n {
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        let inv_m = RatFunc::from_bigrational(&Rational::new(1.into(), (m as i64).into()));
        for r in 1..=m {
            let f = one.sub(&mono(0, -(r as i64))).mul(&inv_m);
            for (rho, c) in &gt[m - r] {
                let mut parts = rho.parts().to_vec();
                parts.push(r);
                acc.entry(Partition::from_unsorted(parts)).or_default().push(c.mul(&f));
            }
        }
        gt.push(acc.into_iter().map(|(k, v)| (k, RatFunc::sum_many(v))).filter(|(_, c)| !c.is_zero()).collect());
    }
    let inv_tm1 = mono(0, 1).sub(&one).inv().expect("t − 1 is nonzero");
    let tab = tables(n);
    tab.parts
        .iter()
        .map(|rho| {
            // distinct parts with multiplicities
            let mut kinds: Vec<(usize, usize)> = Vec::new();
            for &x in rho.parts() {
                match kinds.last_mut() {
                    Some((v, c)) if *v == x => *c += 1,
                    _ => kinds.push((x, 1)),
                }
            }
            let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
            let mut pick = vec![0usize; kinds.len()];
            loop {
                // advance the odometer; the all-zero choice is skipped
                let mut i = 0;
                while i < kinds.len() && pick[i] == kinds[i].1 {
                    pick[i] = 0;
                    i += 1;
                }
                if i == kinds.len() {
                    break;
                }
                pick[i] += 1;
                let mut coef = inv_tm1.clone();
                let mut rest = Vec::new();
                let mut size = 0;
                for (&(v, c), &s) in kinds.iter().zip(&pick) {
                    let b = crate::arith::binomial(c as i64, s as i64);
                    coef = coef.scale_int(&b);
                    let f = mono(v as i64, 0).sub(&one);
                    for _ in 0..s {
                        coef = coef.mul(&f);
                    }
                    size += v * s;
                    rest.extend(std::iter::repeat(v).take(c - s));
                }
                for (sigma, c) in &gt[size] {
                    let mut parts = rest.clone();
                    parts.extend_from_slice(sigma.parts());
                    acc.entry(Partition::from_unsorted(parts)).or_default().push(c.mul(&coef));
                }
            }
            acc.into_iter().map(|(k, v)| (k, RatFunc::sum_many(v))).filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect()
}

/// Matrix of `E` on the monomial basis: `E m_ν = Σ_μ out[ν][μ] m_μ`.
pub fn operator_matrix(n: usize) -> Vec<Vec<RatFunc>> {
    let tab = tables(n);
    let k = tab.parts.len();
    let on_p = operator_on_powersums(n);
    // E p_ρ in the monomial basis
    let on_p_m: Vec<Vec<RatFunc>> = on_p
        .iter()
        .map(|row| {
            (0..k)
                .map(|mu| {
                    RatFunc::sum_many(row.iter().filter_map(|(sigma, c)| {
                        let x = &tab.p_to_m[tab.index[sigma]][mu];
                        (!x.is_zero()).then(|| c.scale_int(x))
                    }))
                })
                .collect()
        })
        .collect();
    (0..k)
        .map(|nu| {
            (0..k)
                .map(|mu| {
                    RatFunc::sum_many((0..k).filter_map(|rho| {
                        let x = &tab.m_to_p[nu][rho];
                        (!x.is_zero() && !on_p_m[rho][mu].is_zero())
                            .then(|| on_p_m[rho][mu].mul(&RatFunc::from_bigrational(x)))
                    }))
                })
                .collect()
        })
        .collect()
}

/// `P_λ` as the triangular eigenvector of `E`, eigenvalue
/// `ε_λ = Σ_i (q^{λ_i} − 1) t^{−i}`; `⟨P_λ, P_λ⟩ = 1/b_λ`.
pub fn by_operator(n: usize) -> OracleWeight {
    let tab = tables(n);
    let parts = tab.parts.clone();
    let k = parts.len();
    let e = operator_matrix(n);
    let mut p = Vec::with_capacity(k);
    for i in 0..k {
        let mut c = vec![RatFunc::from_int(0); k];
        c[i] = RatFunc::from_int(1);
        for j in (i + 1)..k {
            if !parts[i].dominates(&parts[j]) {
                continue;
            }
            let s = RatFunc::sum_many((i..j).filter(|&l| !c[l].is_zero() && !e[l][j].is_zero()).map(|l| c[l].mul(&e[l][j])));
            if !s.is_zero() {
                c[j] = s.div(&e[i][i].sub(&e[j][j])).expect("distinct eigenvalues");
            }
        }
        p.push(
            SymFunc::from_terms(Basis::Monomial, n, c.into_iter().enumerate().map(|(j, x)| (parts[j].clone(), x)))
                .expect("weights agree"),
        );
    }
    let norm = parts.iter().map(|l| b_lambda(l).inv().expect("nonzero")).collect();
    OracleWeight { parts, p, norm }
}

/// `P_λ` in the monomial basis.
pub fn oracle_p(lambda: &Partition, family: Family) -> SymFunc {
    let w = oracle_weight(family, lambda.weight());
    let i = w.parts.iter().position(|p| p == lambda).expect("partition of its own weight");
    w.p[i].clone()
}

/// `⟨P_λ, P_λ⟩` from the orthogonalization.
pub fn oracle_norm(lambda: &Partition, family: Family) -> RatFunc {
    let w = oracle_weight(family, lambda.weight());
    let i = w.parts.iter().position(|p| p == lambda).expect("partition of its own weight");
    w.norm[i].clone()
}

/// `Q_λ = P_λ / ⟨P_λ, P_λ⟩` in the monomial basis.
pub fn oracle_q(lambda: &Partition, family: Family) -> SymFunc {
    let b = oracle_norm(lambda, family).inv().expect("norms are nonzero");
    oracle_p(lambda, family).scale(&b)
}

/// Closed product for `b_λ(q,t) = ⟨P_λ, P_λ⟩^{-1}`.
pub fn b_lambda(lambda: &Partition) -> RatFunc {
    let l = lambda.len();
    let mut out = RatFunc::from_int(1);
    for i in 1..=l {
        for j in i..=l {
            let lam = |k: usize| lambda.part(k - 1) as i64;
            let len = (lam(j) - lam(j + 1)) as usize;
            let num = MonomialArg::new(lam(i) - lam(j), (j - i + 1) as i64);
            let den = MonomialArg::new(lam(i) - lam(j) + 1, (j - i) as i64);
            out = out.mul(&qpoch(&num, len)).div(&qpoch(&den, len)).expect("generic parameters");
        }
    }
    out
}

/// Hall–Littlewood normalization `∏_i (t;t)_{m_i(λ)}`.
pub fn b_lambda_hl(lambda: &Partition) -> RatFunc {
    let mut out = RatFunc::from_int(1);
    for m in lambda.multiplicities() {
        for j in 1..=m {
            out = out.mul(&RatFunc::from_int(1).sub(&RatFunc::monomial(Vars::QT, &Rational::one(), 0, j as i64)));
        }
    }
    out
}

/// `Q_s(t)` for an arbitrary integer sequence through
/// `∏_{i<j} (1 − R_ij)/(1 − t R_ij) q_s`, in products of the `q_k`.
///
/// Expanding the geometric series, `R^θ` carries `t^{|θ|}(1 − 1/t)^{#θ≠0}`;
/// every raised index must stay nonnegative, which bounds the θ-range.
pub fn hl_raising_q(s: &IntSeq) -> SymFunc {
    let l = s.len();
    let total = s.sum();
    let basis = Basis::G(Family::HallLittlewood);
    if total < 0 {
        return SymFunc::zero(basis, 0);
    }
    let deg = total as usize;
    let pairs: Vec<(usize, usize)> = (0..l).flat_map(|i| ((i + 1)..l).map(move |j| (i, j))).collect();
    // Row i of θ sums to R_i − s_i + Σ_{h<i} θ_hi ≤ (i+1)·total − (s_0+…+s_i).
    let mut row_cap = Vec::with_capacity(l);
    let mut prefix = 0i64;
    for i in 0..l {
        prefix += s.0[i];
        row_cap.push(((i as i64 + 1) * total - prefix).max(0));
    }
    let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
    let mut theta = vec![0i64; pairs.len()];
    let one_minus_inv_t = RatFunc::from_int(1).sub(&RatFunc::monomial(Vars::QT, &Rational::one(), 0, -1));
    fn rec(
        idx: usize,
        pairs: &[(usize, usize)],
        theta: &mut Vec<i64>,
        row_cap: &[i64],
        f: &mut dyn FnMut(&[i64]),
    ) {
        if idx == pairs.len() {
            f(theta);
            return;
        }
        let (i, _) = pairs[idx];
        let used: i64 = pairs[..idx].iter().zip(theta.iter()).filter(|((a, _), _)| *a == i).map(|(_, v)| *v).sum();
        let cap = row_cap[i] - used;
        for v in 0..=cap.max(0) {
            theta[idx] = v;
            rec(idx + 1, pairs, theta, row_cap, f);
        }
        theta[idx] = 0;
    }
    rec(0, &pairs, &mut theta, &row_cap, &mut |th: &[i64]| {
        let mut r = s.0.clone();
        for (&(i, j), &v) in pairs.iter().zip(th) {
            r[i] += v;
            r[j] -= v;
        }
        if r.iter().any(|&x| x < 0) {
            return;
        }
        let weight: i64 = th.iter().sum();
        let nonzero = th.iter().filter(|&&v| v != 0).count();
        let mut c = RatFunc::monomial(Vars::QT, &Rational::one(), 0, weight);
        for _ in 0..nonzero {
            c = c.mul(&one_minus_inv_t);
        }
        let idx = Partition::from_unsorted(r.into_iter().filter(|&x| x > 0).map(|x| x as usize).collect());
        acc.entry(idx).or_default().push(c);
    });
    let mut out = SymFunc::zero(basis, deg);
    for (k, v) in acc {
        out.add_term(k, RatFunc::sum_many(v)).expect("weight is the sequence sum");
    }
    out
}

type XPoly = HashMap<Vec<u8>, RatFunc>;

fn restrict(f: &SymFunc, nvars: usize) -> XPoly {
    let mut out = XPoly::new();
    for (mu, c) in f.to_monomial().terms() {
        if mu.len() > nvars {
            continue;
        }
        let mut v: Vec<u8> = mu.padded(nvars).into_iter().map(|x| x as u8).collect();
        v.sort_unstable();
        loop {
            out.insert(v.clone(), c.clone());
            let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { break };
            let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
            v.swap(i - 1, j);
            v[i..].reverse();
        }
    }
    out
}

fn xmul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut acc: HashMap<Vec<u8>, Vec<RatFunc>> = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            acc.entry(e).or_default().push(ca.mul(cb));
        }
    }
    collect_x(acc)
}

fn collect_x(acc: HashMap<Vec<u8>, Vec<RatFunc>>) -> XPoly {
    acc.into_iter()
        .map(|(e, v)| (e, RatFunc::sum_many(v)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn linear(nvars: usize, terms: &[(usize, RatFunc)]) -> XPoly {
    terms
        .iter()
        .map(|(i, c)| {
            let mut e = vec![0u8; nvars];
            e[*i] = 1;
            (e, c.clone())
        })
        .collect()
}

/// Whether `P_λ` restricted to `n` variables is an eigenvector of
/// `E = Σ_i A_i(X;t) T_{q,x_i}` with eigenvalue `Σ q^{λ_i} t^{n−i}`.
/// Both sides are multiplied by the Vandermonde product to stay polynomial.
pub fn eigencheck(lambda: &Partition, n: usize) -> bool {
    if lambda.len() > n {
        return false;
    }
    let p = restrict(&oracle_p(lambda, Family::Macdonald), n);
    let one = RatFunc::from_int(1);
    let t = RatFunc::t();
    let const_one: XPoly = std::iter::once((vec![0u8; n], one.clone())).collect();
    let vandermonde_without = |skip: Option<usize>| {
        let mut v = const_one.clone();
        for a in 0..n {
            for b in (a + 1)..n {
                if Some(a) == skip || Some(b) == skip {
                    continue;
                }
                v = xmul(&v, &linear(n, &[(a, one.clone()), (b, one.neg())]));
            }
        }
        v
    };
    let mut lhs_acc: HashMap<Vec<u8>, Vec<RatFunc>> = HashMap::new();
    for i in 0..n {
        let shifted: XPoly = p
            .iter()
            .map(|(e, c)| (e.clone(), c.mul(&RatFunc::monomial(Vars::QT, &Rational::one(), e[i] as i64, 0))))
            .collect();
        let mut term = xmul(&vandermonde_without(Some(i)), &shifted);
        for j in 0..n {
            if j != i {
                term = xmul(&term, &linear(n, &[(i, t.clone()), (j, one.neg())]));
            }
        }
        let sign = if i % 2 == 0 { one.clone() } else { one.neg() };
        for (e, c) in term {
            lhs_acc.entry(e).or_default().push(c.mul(&sign));
        }
    }
    let lhs = collect_x(lhs_acc);
    let mut ev = Vec::new();
    for i in 0..n {
        ev.push(RatFunc::monomial(Vars::QT, &Rational::one(), lambda.part(i) as i64, (n - 1 - i) as i64));
    }
    let ev = RatFunc::sum_many(ev);
    let rhs: XPoly = xmul(&vandermonde_without(None), &p).into_iter().map(|(e, c)| (e, c.mul(&ev))).collect();
    lhs == rhs
}

/// Value of a Jack-field function at `α = a`.
pub fn at_alpha(f: &RatFunc, a: &Rational) -> crate::Result<Rational> {
    f.eval(a, &Rational::zero())
}
