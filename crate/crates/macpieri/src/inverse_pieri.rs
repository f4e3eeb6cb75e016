//! Inverse Pieri coefficients `C_θ` in every flavor, one inversion step
//! `Q_λ → Σ C · g · Q` (and its duals), and the full analytic expansions
//! obtained by peeling the last part repeatedly.

use crate::arith::{det, factorial, rising, Field, Laurent, MonomialArg, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::partitions::{IntSeq, Partition, ThetaMatrix, ThetaVector};
use crate::pieri::qratio;
use crate::symfunc::{Basis, Family, SymFunc};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;

// ---------------------------------------------------------------------------
// C^{(q,t)}: three evaluations

fn sign<F: Field>(k: usize) -> F {
    if k % 2 == 0 {
        F::one()
    } else {
        F::one().neg()
    }
}

fn subsets(items: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u32..(1 << items.len())).map(move |mask| {
        items.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &x)| x).collect()
    })
}

fn q_shifted<F: Field>(q: &F, theta: &[usize], u: &[F]) -> Result<Vec<F>> {
    theta.iter().zip(u).map(|(&th, x)| Ok(q.powi(th as i64)?.mul(x))).collect()
}

/// `∏_{i<j≤n} (qu_i/tu_j;q)_{θ_i}/(qu_i/u_j;q)_{θ_i} · (tu_i/v_j;q)_{θ_i}/(u_i/v_j;q)_{θ_i}`.
fn pair_ratios<F: Field>(q: &F, t: &F, theta: &[usize], u: &[F], v: &[F]) -> Result<F> {
    let n = theta.len();
    let mut acc = F::one();
    for i in 0..n {
        if theta[i] == 0 {
            continue;
        }
        for j in (i + 1)..n {
            let r = u[i].try_div(&u[j])?;
            acc = acc.mul(&qratio(&q.mul(&r).try_div(t)?, &q.mul(&r), q, theta[i])?);
            let s = u[i].try_div(&v[j])?;
            acc = acc.mul(&qratio(&t.mul(&s), &s, q, theta[i])?);
        }
    }
    Ok(acc)
}

fn vandermonde<F: Field>(v: &[F]) -> F {
    let mut acc = F::one();
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            acc = acc.mul(&v[i].sub(&v[j]));
        }
    }
    acc
}

/// Determinant display of `C^{(q,t)}_θ(u)`.
///
/// A row with `θ_i = 0` has `v_i = u_i`, so its product over `k` contains
/// `u_i − v_i = 0` identically and the row reduces to `v_i^{n−j}`.
pub fn c_qt_det<F: Field>(q: &F, t: &F, theta: &[usize], u: &[F]) -> Result<F> {
    let n = theta.len();
    let v = q_shifted(q, theta, u)?;
    let mut pre = pair_ratios(q, t, theta, u, &v)?;
    let q_over_t = q.try_div(t)?;
    for k in 0..n {
        let th = theta[k];
        pre = pre.mul(&t.powi(th as i64)?);
        pre = pre.mul(&qratio(&q_over_t, q, q, th)?);
        pre = pre.mul(&qratio(&q.mul(&u[k]), &q.mul(t).mul(&u[k]), q, th)?);
    }
    let mut m = vec![vec![F::zero(); n]; n];
    for i in 0..n {
        let prod = if theta[i] == 0 {
            F::zero()
        } else {
            let mut p = F::one().sub(&t.mul(&v[i])).try_div(&F::one().sub(&v[i]))?;
            for k in 0..n {
                p = p.mul(&u[k].sub(&v[i]).try_div(&t.mul(&u[k]).sub(&v[i]))?);
            }
            p
        };
        for j in 0..n {
            let vp = v[i].powi((n - 1 - j) as i64)?;
            m[i][j] = vp.mul(&F::one().sub(&t.powi(j as i64)?.mul(&prod)));
        }
    }
    pre.mul(&det(&m)).try_div(&vandermonde(&v))
}

/// Compact prefactor (with `u_{n+1} = 1/t`) times the subset sum over
/// `K ⊆ {1..n}`. Sets meeting `{k : θ_k = 0}` vanish identically and are skipped.
pub fn c_qt_subsets<F: Field>(q: &F, t: &F, theta: &[usize], u: &[F]) -> Result<F> {
    let n = theta.len();
    let v = q_shifted(q, theta, u)?;
    let mut uu = u.to_vec();
    uu.push(t.try_inv()?);
    let mut pre = F::one();
    for i in 0..n {
        let th = theta[i];
        if th == 0 {
            continue;
        }
        for j in (i + 1)..=n {
            let r = uu[i].try_div(&uu[j])?;
            pre = pre.mul(&qratio(&q.mul(&r).try_div(t)?, &q.mul(&r), q, th)?);
        }
        for j in i..n {
            let s = u[i].try_div(&v[j])?;
            pre = pre.mul(&qratio(&t.mul(&s), &s, q, th)?);
        }
    }
    let support: Vec<usize> = (0..n).filter(|&k| theta[k] != 0).collect();
    let inv_t = t.try_inv()?;
    let mut sum = F::zero();
    for kset in subsets(&support) {
        let c = kset.len();
        let mut term = sign::<F>(c).mul(&inv_t.powi((c * (c + 1) / 2) as i64)?);
        for &k in &kset {
            let vk_t = v[k].mul(&inv_t);
            for j in (0..n).filter(|j| !kset.contains(j)) {
                term = term.mul(&v[j].sub(&vk_t).try_div(&v[j].sub(&v[k]))?);
            }
            for x in &uu {
                term = term.mul(&x.sub(&v[k]).try_div(&x.sub(&vk_t))?);
            }
        }
        sum = sum.add(&term);
    }
    Ok(pre.mul(&sum))
}

/// Reduced form over the support `T` of `θ`, built on `F_θ`.
///
/// The factor `1 − v_k` is taken out of `(qu_k;q)_{θ_k}` and cleared against
/// the `(1 − tv_k)/(1 − v_k)` of `F_θ`, so `v_k = 1` is not a pole here.
pub fn c_qt_reduced<F: Field>(q: &F, t: &F, theta: &[usize], u: &[F]) -> Result<F> {
    let n = theta.len();
    let v = q_shifted(q, theta, u)?;
    let support: Vec<usize> = (0..n).filter(|&k| theta[k] != 0).collect();
    let mut pre = pair_ratios(q, t, theta, u, &v)?;
    let q_over_t = q.try_div(t)?;
    for &k in &support {
        let th = theta[k];
        pre = pre.mul(&t.powi(th as i64 - 1)?);
        pre = pre.mul(&qratio(&q_over_t, q, q, th - 1)?);
        // (qu_k;q)_θ over 1 − v_k, the last factor moved into F
        pre = pre.mul(&qratio(&q.mul(&u[k]), &q.mul(t).mul(&u[k]), q, th - 1)?);
        pre = pre.try_div(&F::one().sub(&q.powi(th as i64)?.mul(t).mul(&u[k])))?;
    }
    let inv_t = t.try_inv()?;
    let mut f = F::zero();
    for kset in subsets(&support) {
        let c = kset.len();
        let mut term = sign::<F>(c).mul(&inv_t.powi((c * c.saturating_sub(1) / 2) as i64)?);
        let rest: Vec<usize> = support.iter().copied().filter(|j| !kset.contains(j)).collect();
        for &j in &rest {
            let qj = q.powi(theta[j] as i64)?;
            term = term.mul(&t.sub(&qj).try_div(&F::one().sub(&qj))?);
            term = term.mul(&F::one().sub(&v[j]));
        }
        for &k in &kset {
            let vk_t = v[k].mul(&inv_t);
            for &j in &rest {
                term = term.mul(&v[j].sub(&vk_t).try_div(&v[j].sub(&v[k]))?);
            }
            term = term.mul(&F::one().sub(&t.mul(&v[k])));
            for &i in support.iter().filter(|&&i| i != k) {
                term = term.mul(&u[i].sub(&v[k]).try_div(&u[i].sub(&vk_t))?);
            }
        }
        f = f.add(&term);
    }
    Ok(pre.mul(&f))
}

/// Agreement of independent evaluations. Routes failing on a vanishing
/// denominator are skipped; at least one must succeed.
fn agree<F: Field>(what: &str, routes: Vec<Result<F>>) -> Result<F> {
    let mut value: Option<F> = None;
    let mut zero_div = false;
    for r in routes {
        match r {
            Ok(x) => match &value {
                None => value = Some(x),
                Some(v) if *v == x => {}
                Some(v) => return Err(Error::Consistency(format!("{what}: {v:?} vs {x:?}"))),
            },
            Err(Error::DivisionByZero) | Err(Error::Pole(_)) => zero_div = true,
            Err(e) => return Err(e),
        }
    }
    match value {
        Some(v) => Ok(v),
        None if zero_div => Err(Error::DivisionByZero),
        None => Ok(F::one()),
    }
}

fn all_routes<F: Field>(q: &F, t: &F, theta: &[usize], u: &[F]) -> Result<F> {
    agree(
        &format!("C_{theta:?}"),
        vec![c_qt_det(q, t, theta, u), c_qt_subsets(q, t, theta, u), c_qt_reduced(q, t, theta, u)],
    )
}

/// `C^{(q,t)}_θ(u)` over any field, all three displays cross-checked.
///
/// At points where every display reads `0/0` the value is the limit along a
/// perturbation of `u`, computed in two directions that must agree.
pub fn c_qt_in<F: Field + std::fmt::Debug>(q: &F, t: &F, theta: &[usize], u: &[F]) -> Result<F> {
    if theta.len() != u.len() {
        return Err(Error::Parameter("θ and u differ in length".into()));
    }
    if theta.iter().all(|&x| x == 0) {
        return Ok(F::one());
    }
    match all_routes(q, t, theta, u) {
        Err(Error::DivisionByZero) => {}
        other => return other,
    }
    // every display is 0/0 here: perturb t and u
    let mut point = vec![t.clone()];
    point.extend(u.iter().cloned());
    limit_along(&format!("C_{theta:?}"), &point, false, |x| {
        let lq = Laurent::constant(q.clone(), x[0].rel());
        all_routes(&lq, &x[0], theta, &x[1..])
    })
}

/// Value at `point` of a function whose displays are `0/0` there: the `ε^0`
/// term along two perturbation directions, which must agree. Perturbations
/// are `x(1 + kε)`, or `x + kε` when `additive`.
fn limit_along<F: Field>(
    what: &str,
    point: &[F],
    additive: bool,
    f: impl Fn(&[Laurent<F>]) -> Result<Laurent<F>>,
) -> Result<F> {
    let mut last = Err(Error::DivisionByZero);
    for rel in [8usize, 16] {
        let lim = |dir: &dyn Fn(usize) -> i64| -> Result<F> {
            let x: Vec<Laurent<F>> = point
                .iter()
                .enumerate()
                .map(|(k, x)| {
                    if additive {
                        Laurent::shifted(x.clone(), dir(k), rel)
                    } else {
                        Laurent::perturbed(x.clone(), dir(k), rel)
                    }
                })
                .collect();
            f(&x)?.constant_term()
        };
        match (lim(&|k| k as i64 + 2), lim(&|k| 4 * (k * k) as i64 + 3)) {
            (Ok(a), Ok(b)) if a == b => return Ok(a),
            (Ok(a), Ok(b)) => return Err(Error::Consistency(format!("{what} has no limit here: {a} vs {b}"))),
            (Err(e), _) | (_, Err(e)) => last = Err(e),
        }
    }
    last
}

// ---------------------------------------------------------------------------
// Hall–Littlewood, monomial and Jack coefficients

/// `C^{(t)}_θ(m)` over any field containing `t`. A factor
/// `(t^{θ_j} − 1)/(1 − t^{−m_j−θ_j})` with `θ_j = 0` is taken as 0.
pub fn c_hl_in<F: Field>(t: &F, theta: &[usize], m: &[i64]) -> Result<F> {
    if theta.len() != m.len() {
        return Err(Error::Parameter("θ and m differ in length".into()));
    }
    let n = theta.len();
    let w: usize = theta.iter().sum();
    let mut acc = sign::<F>(w);
    for k in 0..n {
        let th = theta[k];
        acc = acc.mul(&t.powi((th * th.saturating_sub(1) / 2) as i64)?);
        acc = acc.mul(&qratio(&t.powi(m[k] + 1)?, t, t, th)?);
    }
    let mut s = F::one();
    for k in 0..n {
        let mut prod = F::one();
        for j in k..n {
            if theta[j] == 0 {
                prod = F::zero();
                break;
            }
            let num = t.powi(theta[j] as i64)?.sub(&F::one());
            let den = F::one().sub(&t.powi(-m[j] - theta[j] as i64)?);
            prod = prod.mul(&num.try_div(&den)?);
        }
        s = s.add(&prod);
    }
    Ok(acc.mul(&s))
}

/// Monomial coefficient: `(−1)^{|θ|} ∏ binom(m_k+θ_k, θ_k) (1 + Σ_k ∏_{j≥k} θ_j/(m_j+θ_j))`,
/// the binomial read as `(m+1)_θ / θ!` so that negative `m` is allowed.
pub fn c_mono(theta: &[usize], m: &[i64]) -> Result<Rational> {
    if theta.len() != m.len() {
        return Err(Error::Parameter("θ and m differ in length".into()));
    }
    let n = theta.len();
    let w: usize = theta.iter().sum();
    let mut acc: Rational = sign(w);
    for k in 0..n {
        let fact = Rational::from_integer(factorial(theta[k]));
        acc = acc.mul(&rising(&Rational::from_i64(m[k] + 1), theta[k])).try_div(&fact)?;
    }
    let mut s = <Rational as One>::one();
    for k in 0..n {
        let mut prod = <Rational as One>::one();
        for j in k..n {
            if theta[j] == 0 {
                prod = Rational::zero();
                break;
            }
            prod = prod.mul(&Rational::from_i64(theta[j] as i64).try_div(&Rational::from_i64(m[j] + theta[j] as i64))?);
        }
        s = s.add(&prod);
    }
    Ok(acc.mul(&s))
}

fn rising_ratio<F: Field>(a: &F, b: &F, k: usize) -> Result<F> {
    rising(a, k).try_div(&rising(b, k))
}

/// Jack determinant display of `C^{(a)}_θ(u)`, `v_k = u_k + θ_k`.
pub fn c_jack_det<F: Field>(a: &F, theta: &[usize], u: &[F]) -> Result<F> {
    let n = theta.len();
    let v: Vec<F> = theta.iter().zip(u).map(|(&th, x)| x.add(&F::from_i64(th as i64))).collect();
    let one = F::one();
    let mut pre = F::one();
    for k in 0..n {
        let th = theta[k];
        let fact = F::from_rational(&Rational::from_integer(factorial(th)));
        pre = pre.mul(&rising(&one.sub(a), th)).try_div(&fact)?;
        pre = pre.mul(&rising_ratio(&u[k].add(&one), &u[k].add(&one).add(a), th)?);
        for j in (k + 1)..n {
            let d = u[k].sub(&u[j]);
            pre = pre.mul(&rising_ratio(&d.add(&one).sub(a), &d.add(&one), th)?);
            let e = u[k].sub(&v[j]);
            pre = pre.mul(&rising_ratio(&e.add(a), &e, th)?);
        }
    }
    let mut m = vec![vec![F::zero(); n]; n];
    for i in 0..n {
        let prod = if theta[i] == 0 {
            F::zero()
        } else {
            let mut p = v[i].add(a).try_div(&v[i])?;
            for x in u {
                p = p.mul(&v[i].sub(x).try_div(&v[i].sub(x).sub(a))?);
            }
            p
        };
        for j in 0..n {
            let e = (n - 1 - j) as i64;
            m[i][j] = v[i].powi(e)?.sub(&v[i].sub(a).powi(e)?.mul(&prod));
        }
    }
    pre.mul(&det(&m)).try_div(&vandermonde(&v))
}

/// Compact Jack prefactor (`u_{n+1} = −a`) times the subset expansion of the
/// determinant.
pub fn c_jack_subsets<F: Field>(a: &F, theta: &[usize], u: &[F]) -> Result<F> {
    let n = theta.len();
    let v: Vec<F> = theta.iter().zip(u).map(|(&th, x)| x.add(&F::from_i64(th as i64))).collect();
    let one = F::one();
    let mut uu = u.to_vec();
    uu.push(a.neg());
    let mut pre = F::one();
    for i in 0..n {
        let th = theta[i];
        if th == 0 {
            continue;
        }
        for j in (i + 1)..=n {
            let d = uu[i].sub(&uu[j]);
            pre = pre.mul(&rising_ratio(&d.add(&one).sub(a), &d.add(&one), th)?);
        }
        for j in i..n {
            let e = u[i].sub(&v[j]);
            pre = pre.mul(&rising_ratio(&e.add(a), &e, th)?);
        }
    }
    let support: Vec<usize> = (0..n).filter(|&k| theta[k] != 0).collect();
    let mut sum = F::zero();
    for kset in subsets(&support) {
        let mut term = sign::<F>(kset.len());
        for &k in &kset {
            for j in (0..n).filter(|j| !kset.contains(j)) {
                let d = v[k].sub(&v[j]);
                term = term.mul(&d.sub(a).try_div(&d)?);
            }
            for x in &uu {
                let d = v[k].sub(x);
                term = term.mul(&d.try_div(&d.sub(a))?);
            }
        }
        sum = sum.add(&term);
    }
    Ok(pre.mul(&sum))
}

/// `C^{(a)}_θ(u)`, both Jack displays cross-checked, with the same limit
/// fallback as [`c_qt_in`] (perturbing `a` and `u`).
pub fn c_jack_in<F: Field + std::fmt::Debug>(a: &F, theta: &[usize], u: &[F]) -> Result<F> {
    if theta.len() != u.len() {
        return Err(Error::Parameter("θ and u differ in length".into()));
    }
    if theta.iter().all(|&x| x == 0) {
        return Ok(F::one());
    }
    fn both<G: Field>(a: &G, theta: &[usize], u: &[G]) -> Result<G> {
        agree(&format!("C^(a)_{theta:?}"), vec![c_jack_det(a, theta, u), c_jack_subsets(a, theta, u)])
    }
    match both(a, theta, u) {
        Err(Error::DivisionByZero) => {}
        other => return other,
    }
    let mut point = vec![a.clone()];
    point.extend(u.iter().cloned());
    limit_along(&format!("C^(a)_{theta:?}"), &point, true, |x| both(&x[0], theta, &x[1..]))
}

// ---------------------------------------------------------------------------
// Flavors

/// Coefficient family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CFlavor {
    /// `C^{(q,t)}`, argument `u`.
    Qt,
    /// `C^{(t,q)}`: `q` and `t` exchanged.
    Tq,
    /// `C^{(t)}`, argument `m`.
    Hl,
    /// The `t = 1` case, argument `m`.
    Mono,
    /// `C^{(a)}`, argument `u` and the parameter `a`.
    Jack,
}

/// Argument of [`c_coeff`].
#[derive(Clone, Debug)]
pub enum CArgs {
    U(Vec<RatFunc>),
    M(Vec<i64>),
    Jack { a: RatFunc, u: Vec<RatFunc> },
}

/// `C_θ` of the given flavor as a reduced rational function.
pub fn c_coeff(flavor: CFlavor, theta: &ThetaVector, args: &CArgs) -> Result<RatFunc> {
    let th = &theta.0;
    match (flavor, args) {
        (CFlavor::Qt, CArgs::U(u)) => c_qt_in(&RatFunc::q(), &RatFunc::t(), th, u),
        (CFlavor::Tq, CArgs::U(u)) => c_qt_in(&RatFunc::t(), &RatFunc::q(), th, u),
        (CFlavor::Hl, CArgs::M(m)) => c_hl_in(&RatFunc::t(), th, m),
        (CFlavor::Mono, CArgs::M(m)) => Ok(RatFunc::from_bigrational(&c_mono(th, m)?)),
        (CFlavor::Jack, CArgs::Jack { a, u }) => c_jack_in(a, th, u),
        _ => Err(Error::Parameter(format!("arguments do not fit the {flavor:?} coefficient"))),
    }
}

fn monomials(u: &[MonomialArg]) -> Vec<RatFunc> {
    u.iter().map(MonomialArg::to_ratfunc).collect()
}

/// `C^{(q,t)}_θ(u)` at `q = t`, checked against the closed value:
/// `(−1)^{|θ|}` for `θ ∈ {0,1}^n`, zero otherwise.
pub fn schur_c_check(theta: &ThetaVector, u: &[MonomialArg]) -> Result<RatFunc> {
    let c = c_coeff(CFlavor::Qt, theta, &CArgs::U(monomials(u)))?;
    let at = c.subs_q(&RatFunc::t())?;
    let expect = if theta.0.iter().all(|&x| x <= 1) { sign(theta.weight()) } else { RatFunc::from_int(0) };
    // the reduced display can also be evaluated at q = t directly, away from 0/0 points
    let direct = match c_qt_reduced(&RatFunc::t(), &RatFunc::t(), &theta.0, &u_at_q_equals_t(u)) {
        Err(Error::DivisionByZero) => expect.clone(),
        r => r?,
    };
    if at != expect || direct != expect {
        return Err(Error::Consistency(format!("C_{:?} at q = t is {at}, expected {expect}", theta.0)));
    }
    Ok(at)
}

fn u_at_q_equals_t(u: &[MonomialArg]) -> Vec<RatFunc> {
    u.iter().map(|x| MonomialArg::scaled(x.scale.clone(), 0, x.q_exp + x.t_exp).to_ratfunc()).collect()
}

/// `C^{(t)}_θ(m)` at a rational `t` next to `lim_{q→0} C^{(t,q)}_θ(u)` with
/// `u_k = q^{n−k} t^{M_k}`, `M_k = Σ_{j≥k} m_j`.
pub fn hl_limit_check(theta: &ThetaVector, m: &[i64], t: &Rational) -> Result<(Rational, Rational)> {
    let n = m.len();
    let closed = c_hl_in(t, &theta.0, m)?;
    let tf = RatFunc::from_bigrational(t);
    let q = RatFunc::q();
    let mut u = Vec::with_capacity(n);
    for k in 0..n {
        let mk: i64 = m[k..].iter().sum();
        u.push(q.powi((n - 1 - k) as i64)?.mul(&tf.powi(mk)?));
    }
    let c = c_qt_in(&tf, &q, &theta.0, &u)?;
    let limit = c.eval(&Rational::zero(), &Rational::zero())?;
    Ok((closed, limit))
}

/// `C^{(a)}_θ(u)` for `a = r/p` next to the `x → 1` value of
/// `C^{(q,t)}_θ(q^{u})` along `q = x^p`, `t = x^r`; every `p u_k` must be an integer.
pub fn jack_limit_check(theta: &ThetaVector, u: &[Rational], p: i64, r: i64) -> Result<(Rational, Rational)> {
    if p <= 0 {
        return Err(Error::Parameter("p must be positive".into()));
    }
    let a = Rational::new(r.into(), p.into());
    let closed = c_jack_in(&a, &theta.0, u)?;
    let x = RatFunc::q();
    let mut big_u = Vec::with_capacity(u.len());
    for uk in u {
        let e = uk * Rational::from_i64(p);
        if !e.is_integer() {
            return Err(Error::Parameter(format!("p·u = {e} is not an integer")));
        }
        let e: i64 = e.to_integer().try_into().map_err(|_| Error::Parameter("exponent too large".into()))?;
        big_u.push(x.powi(e)?);
    }
    let c = c_qt_in(&x.powi(p)?, &x.powi(r)?, &theta.0, &big_u)?;
    let limit = c.eval(&<Rational as One>::one(), &Rational::zero())?;
    Ok((closed, limit))
}

/// Subset sum `F_n` and the closed sum `G_n` for `a` of length `n+1`, `b` of length `n`.
pub fn fn_gn<F: Field>(a: &[F], b: &[F]) -> Result<(F, F)> {
    let n = b.len();
    if a.len() != n + 1 {
        return Err(Error::Parameter("a must have one more entry than b".into()));
    }
    let idx: Vec<usize> = (0..n).collect();
    let mut f = F::zero();
    for kset in subsets(&idx) {
        let mut term = F::one();
        for &k in &kset {
            if k + 1 < n && !kset.contains(&(k + 1)) {
                term = term.mul(&b[k + 1].sub(&b[k]).try_div(&b[k + 1])?);
            }
            term = term.mul(&a[k + 1].try_div(&b[k])?);
            term = term.mul(&a[k].sub(&b[k]).try_div(&a[k + 1].sub(&b[k]))?);
        }
        f = f.add(&term);
    }
    let mut g = F::zero();
    for k in 0..=n {
        let mut term = F::one();
        for j in 0..k {
            term = term.mul(&a[j].try_div(&b[j])?);
        }
        for j in k..n {
            term = term.mul(&a[j].sub(&b[j]).try_div(&a[j + 1].sub(&b[j]))?);
        }
        g = g.add(&term);
    }
    Ok((f, g))
}

// ---------------------------------------------------------------------------
// One inversion step

/// Which expansion theorem to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// `Q_λ` over products `g_k Q_μ`, Macdonald.
    #[serde(rename = "Q-g")]
    QG,
    /// `P_λ` over `e_k P_μ`, Macdonald.
    #[serde(rename = "P-e")]
    PE,
    /// Hall–Littlewood `P_λ(t)` over `e_k P_μ(t)`.
    #[serde(rename = "hl")]
    Hl,
    /// `m_λ` over `e_k m_μ`.
    #[serde(rename = "mono")]
    Mono,
    /// Jack `Q_λ(α)` over `Q_(k) Q_μ`.
    #[serde(rename = "jack-Q")]
    JackQ,
    /// Jack `P_λ(α)` over `e_k P_μ`.
    #[serde(rename = "jack-P")]
    JackP,
    /// Schur `s_λ` over `h_k s_μ`.
    #[serde(rename = "schur-h")]
    SchurH,
    /// Schur `s_λ` over `e_k s_μ`.
    #[serde(rename = "schur-e")]
    SchurE,
}

impl Side {
    pub const ALL: [Side; 8] = [Side::QG, Side::PE, Side::Hl, Side::Mono, Side::JackQ, Side::JackP, Side::SchurH, Side::SchurE];

    /// Whether the step removes the last part (`true`) or the largest
    /// parts through their multiplicity (`false`).
    pub fn removes_last_part(self) -> bool {
        matches!(self, Side::QG | Side::JackQ | Side::SchurH)
    }

    /// Basis of the one-row factors.
    pub fn factor_basis(self) -> Basis {
        match self {
            Side::QG => Basis::G(Family::Macdonald),
            Side::JackQ => Basis::G(Family::Jack),
            Side::SchurH => Basis::G(Family::Schur),
            _ => Basis::Elementary,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::QG => "Q-g",
            Side::PE => "P-e",
            Side::Hl => "hl",
            Side::Mono => "mono",
            Side::JackQ => "jack-Q",
            Side::JackP => "jack-P",
            Side::SchurH => "schur-h",
            Side::SchurE => "schur-e",
        }
    }

    pub fn parse(s: &str) -> Option<Side> {
        Side::ALL.into_iter().find(|x| x.name().eq_ignore_ascii_case(s))
    }

    /// The coefficient for a last-part step on the sequence `s` (length `n+1`).
    fn coeff_parts(self, s: &[i64], theta: &ThetaVector) -> Result<RatFunc> {
        let n = s.len() - 1;
        let last = s[n];
        match self {
            Side::QG => {
                let u: Vec<MonomialArg> = (0..n).map(|k| MonomialArg::new(s[k] - last, (n - 1 - k) as i64)).collect();
                c_coeff(CFlavor::Qt, theta, &CArgs::U(monomials(&u)))
            }
            Side::JackQ => {
                let alpha = RatFunc::alpha();
                let inv = alpha.inv()?;
                let u = (0..n)
                    .map(|k| RatFunc::from_int(s[k] - last).add(&inv.mul(&RatFunc::from_int((n - 1 - k) as i64))))
                    .collect();
                c_coeff(CFlavor::Jack, theta, &CArgs::Jack { a: inv, u })
            }
            Side::SchurH => Ok(schur_value(theta)),
            _ => Err(Error::Parameter(format!("{} removes multiplicities, not a last part", self.name()))),
        }
    }

    /// The coefficient for a multiplicity step on `m = (m_1..m_{n+1})`.
    fn coeff_mult(self, m: &[i64], theta: &ThetaVector) -> Result<RatFunc> {
        let n = m.len() - 1;
        let tail = |k: usize| -> i64 { m[k..n].iter().sum() };
        match self {
            Side::PE => {
                let u: Vec<MonomialArg> = (0..n).map(|k| MonomialArg::new((n - 1 - k) as i64, tail(k))).collect();
                c_coeff(CFlavor::Tq, theta, &CArgs::U(monomials(&u)))
            }
            Side::Hl => c_coeff(CFlavor::Hl, theta, &CArgs::M(m[..n].to_vec())),
            Side::Mono => c_coeff(CFlavor::Mono, theta, &CArgs::M(m[..n].to_vec())),
            Side::JackP => {
                let alpha = RatFunc::alpha();
                let u = (0..n)
                    .map(|k| RatFunc::from_int(tail(k)).add(&alpha.mul(&RatFunc::from_int((n - 1 - k) as i64))))
                    .collect();
                c_coeff(CFlavor::Jack, theta, &CArgs::Jack { a: alpha, u })
            }
            Side::SchurE => Ok(schur_value(theta)),
            _ => Err(Error::Parameter(format!("{} removes a last part, not multiplicities", self.name()))),
        }
    }
}

fn schur_value(theta: &ThetaVector) -> RatFunc {
    if theta.0.iter().all(|&x| x <= 1) {
        sign(theta.weight())
    } else {
        RatFunc::from_int(0)
    }
}

/// `coeff · f_factor · X_rest`, where `f` is the side's one-row function and
/// `X_rest` is `Q_rest` (a sequence of parts) for last-part sides and
/// `P_rest` (multiplicities `m_1..m_n`) for the dual sides.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepTerm {
    pub theta: ThetaVector,
    pub coeff: RatFunc,
    pub factor: i64,
    pub rest: IntSeq,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepExpansion {
    pub side: Side,
    /// Parts for last-part sides, multiplicities for the dual sides.
    pub lambda: IntSeq,
    pub terms: Vec<StepTerm>,
}

/// Multiplicities `(m_1, …, m_{λ_1})` of a partition.
pub fn multiplicity_vector(lambda: &Partition) -> Vec<i64> {
    (1..=lambda.largest()).map(|i| lambda.multiplicity(i) as i64).collect()
}

/// Partition with multiplicities `m`, when all are nonnegative.
pub fn from_multiplicity_vector(m: &[i64]) -> Option<Partition> {
    if m.iter().any(|&x| x < 0) {
        return None;
    }
    Some(Partition::from_multiplicities(&m.iter().map(|&x| x as usize).collect::<Vec<_>>()))
}

fn step_parts(side: Side, s: &[i64]) -> Result<Vec<StepTerm>> {
    let n = s.len() - 1;
    let last = s[n];
    if last < 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for theta in ThetaVector::all_bounded(n, last as usize) {
        let c = side.coeff_parts(s, &theta)?;
        if c.is_zero() {
            continue;
        }
        let rest: Vec<i64> = s[..n].iter().zip(&theta.0).map(|(&x, &t)| x + t as i64).collect();
        out.push(StepTerm { factor: last - theta.weight() as i64, theta, coeff: c, rest: IntSeq(rest) });
    }
    Ok(out)
}

fn step_mult(side: Side, m: &[i64]) -> Result<Vec<StepTerm>> {
    let n = m.len() - 1;
    let top = m[n];
    if top < 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for theta in ThetaVector::all_bounded(n, top as usize) {
        let c = side.coeff_mult(m, &theta)?;
        if c.is_zero() {
            continue;
        }
        let th = |k: usize| theta.0.get(k).copied().unwrap_or(0) as i64;
        let mut rest: Vec<i64> = (0..n).map(|k| m[k] + th(k) - th(k + 1)).collect();
        if n > 0 {
            rest[n - 1] = m[n - 1] + m[n] + th(n - 1);
        }
        out.push(StepTerm { factor: top - theta.weight() as i64, theta, coeff: c, rest: IntSeq(rest) });
    }
    Ok(out)
}

/// One application of the inversion theorem for `side`.
///
/// Last-part sides take any nonempty integer sequence `λ = (λ_1..λ_{n+1})`.
/// Dual sides take a partition and work with `n + 1 = λ_1`; targets with a
/// negative multiplicity are dropped.
pub fn invert_step(lambda: &IntSeq, side: Side) -> Result<StepExpansion> {
    if side.removes_last_part() {
        if lambda.is_empty() {
            return Err(Error::Parameter("empty sequence".into()));
        }
        let terms = step_parts(side, &lambda.0)?;
        return Ok(StepExpansion { side, lambda: lambda.clone(), terms });
    }
    let p = lambda.to_partition().ok_or_else(|| Error::Parameter(format!("{lambda} is not a partition")))?;
    if p.is_empty() {
        return Err(Error::Parameter("empty partition".into()));
    }
    let m = multiplicity_vector(&p);
    let terms = step_mult(side, &m)?.into_iter().filter(|t| t.rest.0.iter().all(|&x| x >= 0)).collect();
    Ok(StepExpansion { side, lambda: IntSeq(m), terms })
}

impl StepExpansion {
    /// `X_rest` of a term as a partition, if it is one.
    pub fn rest_partition(&self, term: &StepTerm) -> Option<Partition> {
        if self.side.removes_last_part() {
            term.rest.to_partition()
        } else {
            from_multiplicity_vector(&term.rest.0)
        }
    }

    pub fn to_latex(&self) -> String {
        let (lhs, f, x) = match self.side {
            Side::QG | Side::JackQ => ("Q", "g", "Q"),
            Side::SchurH => ("s", "h", "s"),
            Side::SchurE => ("s", "e", "s"),
            Side::Mono => ("m", "e", "m"),
            _ => ("P", "e", "P"),
        };
        let idx = |s: &IntSeq| -> String {
            if self.side.removes_last_part() {
                seq_latex(&s.0)
            } else {
                match from_multiplicity_vector(&s.0) {
                    Some(p) => seq_latex(&p.parts().iter().map(|&x| x as i64).collect::<Vec<_>>()),
                    None => format!("[{}]", s.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
                }
            }
        };
        let mut out = format!("{lhs}_{{{}}} = ", idx(&self.lambda));
        if self.terms.is_empty() {
            out.push('0');
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let _ = write!(out, "\\left({}\\right) {f}_{{{}}} {x}_{{{}}}", t.coeff.to_latex(), t.factor, idx(&t.rest));
        }
        out
    }
}

fn seq_latex(s: &[i64]) -> String {
    format!("({})", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

// ---------------------------------------------------------------------------
// Full expansions

/// One summand `coeff · ∏_k f_{index_k}` with its θ-matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct FullTerm {
    pub theta: ThetaMatrix,
    pub coeff: RatFunc,
    /// One-row indices `k = 1..n+1`, in order.
    pub index: IntSeq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FullExpansion {
    pub lambda: Partition,
    pub side: Side,
    pub terms: Vec<FullTerm>,
}

/// Repeated [`invert_step`] down to the empty partition.
///
/// Intermediate targets that are not partitions (or have a negative
/// multiplicity) are dropped unless `raw` is set, in which case they are
/// expanded by the same recursion.
pub fn expand_full(lambda: &Partition, side: Side, raw: bool) -> Result<FullExpansion> {
    let mut terms = Vec::new();
    if side.removes_last_part() {
        let s = IntSeq::from_partition(lambda, lambda.len());
        expand_parts(side, &s.0, raw, &mut terms)?;
    } else {
        let m = multiplicity_vector(lambda);
        expand_mult(side, &m, raw, &mut terms)?;
    }
    Ok(FullExpansion { lambda: lambda.clone(), side, terms })
}

/// Raw full expansion of `Q_s` for any integer sequence (last-part sides).
pub fn expand_sequence(s: &IntSeq, side: Side) -> Result<Vec<FullTerm>> {
    if !side.removes_last_part() {
        return Err(Error::Parameter(format!("{} does not take sequences", side.name())));
    }
    let mut terms = Vec::new();
    expand_parts(side, &s.0, true, &mut terms)?;
    Ok(terms)
}

fn expand_parts(side: Side, s: &[i64], raw: bool, out: &mut Vec<FullTerm>) -> Result<()> {
    let size = s.len();
    let mut stack: Vec<(Vec<i64>, ThetaMatrix, RatFunc, Vec<i64>)> =
        vec![(s.to_vec(), ThetaMatrix::zero(size), RatFunc::from_int(1), vec![0; size])];
    while let Some((cur, theta, coeff, mut index)) = stack.pop() {
        if cur.is_empty() {
            out.push(FullTerm { theta, coeff, index: IntSeq(index) });
            continue;
        }
        let l = cur.len();
        for t in step_parts(side, &cur)? {
            if !raw && !t.rest.is_partition() {
                continue;
            }
            let mut th = theta.clone();
            for (i, &v) in t.theta.0.iter().enumerate() {
                th.set(i + 1, l, v)?;
            }
            index[l - 1] = t.factor;
            stack.push((t.rest.0, th, coeff.mul(&t.coeff), index.clone()));
        }
    }
    Ok(())
}

fn expand_mult(side: Side, m: &[i64], raw: bool, out: &mut Vec<FullTerm>) -> Result<()> {
    let size = m.len();
    let mut stack: Vec<(Vec<i64>, ThetaMatrix, RatFunc, Vec<i64>)> =
        vec![(m.to_vec(), ThetaMatrix::zero(size), RatFunc::from_int(1), vec![0; size])];
    while let Some((cur, theta, coeff, mut index)) = stack.pop() {
        if cur.is_empty() {
            out.push(FullTerm { theta, coeff, index: IntSeq(index) });
            continue;
        }
        let l = cur.len();
        for t in step_mult(side, &cur)? {
            if !raw && t.rest.0.iter().any(|&x| x < 0) {
                continue;
            }
            let mut th = theta.clone();
            for (i, &v) in t.theta.0.iter().enumerate() {
                th.set(i + 1, l, v)?;
            }
            index[l - 1] = t.factor;
            stack.push((t.rest.0, th, coeff.mul(&t.coeff), index.clone()));
        }
    }
    Ok(())
}

/// `∏ f_{index_k}` as a basis index; `None` when some index is negative.
pub fn product_index(index: &IntSeq) -> Option<Partition> {
    if index.0.iter().any(|&x| x < 0) {
        return None;
    }
    Some(Partition::from_unsorted(index.0.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect()))
}

/// Sum of the terms in the side's product basis.
pub fn resum(terms: &[FullTerm], side: Side, degree: usize) -> Result<SymFunc> {
    let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
    for t in terms {
        if let Some(p) = product_index(&t.index) {
            acc.entry(p).or_default().push(t.coeff.clone());
        }
    }
    SymFunc::from_terms(side.factor_basis(), degree, acc.into_iter().map(|(k, v)| (k, RatFunc::sum_many(v))))
}

impl FullExpansion {
    pub fn to_symfunc(&self) -> Result<SymFunc> {
        resum(&self.terms, self.side, self.lambda.weight())
    }

    /// Terms ordered by θ-matrix for stable output.
    pub fn sorted_terms(&self) -> Vec<&FullTerm> {
        let mut v: Vec<&FullTerm> = self.terms.iter().collect();
        v.sort_by(|a, b| a.theta.cmp(&b.theta).then_with(|| a.index.cmp(&b.index)));
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        let basis = self.side.factor_basis();
        let family = if let Basis::G(f) = basis { Some(f) } else { None };
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .filter_map(|t| {
                let p = product_index(&t.index)?;
                Some(serde_json::json!({ "index": p, "coeff": t.coeff, "theta": t.theta }))
            })
            .collect();
        let mut v = serde_json::json!({
            "basis": basis.tag(),
            "degree": self.lambda.weight(),
            "lambda": self.lambda,
            "side": self.side,
            "terms": terms,
        });
        if let Some(f) = family {
            v["family"] = serde_json::to_value(f).expect("family serializes");
        }
        v
    }

    pub fn to_latex(&self) -> String {
        let f = match self.side.factor_basis() {
            Basis::G(Family::Schur) => "h",
            Basis::G(_) => "g",
            _ => "e",
        };
        let lhs = match self.side {
            Side::QG | Side::JackQ => "Q",
            Side::SchurH | Side::SchurE => "s",
            Side::Mono => "m",
            _ => "P",
        };
        let parts: Vec<i64> = self.lambda.parts().iter().map(|&x| x as i64).collect();
        let mut out = format!("{lhs}_{{{}}} = ", seq_latex(&parts));
        let mut first = true;
        for t in self.sorted_terms() {
            let Some(p) = product_index(&t.index) else { continue };
            if !first {
                out.push_str(" + ");
            }
            first = false;
            let _ = write!(out, "\\left({}\\right)", t.coeff.to_latex());
            for x in p.parts() {
                let _ = write!(out, " {f}_{{{x}}}");
            }
        }
        if first {
            out.push('0');
        }
        out
    }
}

/// Coefficient of a θ-matrix read directly from the closed product over
/// `k = 1..n` (Macdonald `Q-g`/`P-e`, Hall–Littlewood and monomial sides).
pub fn closed_coefficient(lambda: &Partition, side: Side, theta: &ThetaMatrix) -> Result<RatFunc> {
    let size = theta.size();
    let n = size.saturating_sub(1);
    let th = |i: usize, j: usize| theta.get(i, j) as i64;
    let mut acc = RatFunc::from_int(1);
    match side {
        Side::QG => {
            let lam = |i: usize| lambda.part(i - 1) as i64;
            for k in 1..=n {
                let col = ThetaVector((1..=k).map(|i| theta.get(i, k + 1)).collect());
                let u: Vec<MonomialArg> = (1..=k)
                    .map(|i| {
                        let shift: i64 = ((k + 2)..=size).map(|j| th(i, j) - th(k + 1, j)).sum();
                        MonomialArg::new(lam(i) - lam(k + 1) + shift, (k - i) as i64)
                    })
                    .collect();
                acc = acc.mul(&c_coeff(CFlavor::Qt, &col, &CArgs::U(monomials(&u)))?);
            }
        }
        Side::PE | Side::Hl | Side::Mono => {
            let m = multiplicity_vector(lambda);
            let mm = |i: usize| m.get(i - 1).copied().unwrap_or(0);
            for k in 1..=n {
                let col = ThetaVector((1..=k).map(|i| theta.get(i, k + 1)).collect());
                let c = match side {
                    Side::PE => {
                        let u: Vec<MonomialArg> = (1..=k)
                            .map(|i| {
                                let shift: i64 = ((k + 2)..=size).map(|j| th(i, j) - th(k + 1, j)).sum();
                                let tail: i64 = (i..=k).map(mm).sum();
                                MonomialArg::new((k - i) as i64, tail + shift)
                            })
                            .collect();
                        c_coeff(CFlavor::Tq, &col, &CArgs::U(monomials(&u)))?
                    }
                    _ => {
                        let args: Vec<i64> = (1..=k)
                            .map(|i| mm(i) + ((k + 2)..=size).map(|j| th(i, j) - th(i + 1, j)).sum::<i64>())
                            .collect();
                        let flavor = if side == Side::Hl { CFlavor::Hl } else { CFlavor::Mono };
                        c_coeff(flavor, &col, &CArgs::M(args))?
                    }
                };
                acc = acc.mul(&c);
            }
        }
        _ => return Err(Error::Parameter(format!("no closed product for {}", side.name()))),
    }
    Ok(acc)
}

/// The closed g- or e-indices of a θ-matrix.
pub fn closed_index(lambda: &Partition, side: Side, theta: &ThetaMatrix) -> IntSeq {
    let size = theta.size();
    let th = |i: usize, j: usize| theta.get(i, j) as i64;
    let base = |k: usize| -> i64 {
        if side.removes_last_part() {
            lambda.part(k - 1) as i64
        } else {
            let m = multiplicity_vector(lambda);
            (k..=size).map(|j| m.get(j - 1).copied().unwrap_or(0)).sum()
        }
    };
    IntSeq(
        (1..=size)
            .map(|k| base(k) + ((k + 1)..=size).map(|j| th(k, j)).sum::<i64>() - (1..k).map(|j| th(j, k)).sum::<i64>())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn zero_theta_is_one() {
        for fl in [CFlavor::Qt, CFlavor::Tq] {
            let u = vec![rf("q^2*t"), rf("q")];
            assert_eq!(c_coeff(fl, &ThetaVector::zero(2), &CArgs::U(u)).unwrap(), RatFunc::from_int(1));
        }
        assert_eq!(c_coeff(CFlavor::Hl, &ThetaVector::zero(2), &CArgs::M(vec![1, 0])).unwrap(), RatFunc::from_int(1));
    }

    fn c1(u: &RatFunc) -> RatFunc {
        rf("(t-1)/(1-q)").mul(&RatFunc::from_int(1).sub(&rf("q^2").mul(u))).div(&RatFunc::from_int(1).sub(&rf("q*t").mul(u))).unwrap()
    }

    #[test]
    fn one_part_displays() {
        for u in [rf("q^2"), rf("q*t^3"), rf("q"), rf("t^2")] {
            let got = c_coeff(CFlavor::Qt, &ThetaVector(vec![1]), &CArgs::U(vec![u.clone()])).unwrap();
            assert_eq!(got, c1(&u), "u={u}");
            let c2 = rf("(t-1)/(1-q) * (t-q)/(1-q^2)")
                .mul(&RatFunc::from_int(1).sub(&rf("q").mul(&u)))
                .div(&RatFunc::from_int(1).sub(&rf("q*t").mul(&u)))
                .unwrap()
                .mul(&RatFunc::from_int(1).sub(&rf("q^4").mul(&u)))
                .div(&RatFunc::from_int(1).sub(&rf("q^2*t").mul(&u)))
                .unwrap();
            let got = c_coeff(CFlavor::Qt, &ThetaVector(vec![2]), &CArgs::U(vec![u.clone()])).unwrap();
            assert_eq!(got, c2, "u={u}");
        }
        // removable singularity at v = 1
        let at = c_coeff(CFlavor::Qt, &ThetaVector(vec![1]), &CArgs::U(vec![rf("q^-1")])).unwrap();
        assert_eq!(at, RatFunc::from_int(-1));
    }

    #[test]
    fn mono_example() {
        for m in 0..5i64 {
            assert_eq!(c_mono(&[1], &[m]).unwrap(), Rational::from_i64(-(m + 2)));
        }
    }

    #[test]
    fn fn_gn_small() {
        let a = [Rational::from_i64(2), Rational::from_i64(5)];
        let b = [Rational::from_i64(3)];
        let (f, g) = fn_gn(&a, &b).unwrap();
        assert_eq!(f, g);
        let (f0, g0) = fn_gn::<Rational>(&[Rational::from_i64(7)], &[]).unwrap();
        assert_eq!((f0.clone(), g0), (Rational::from_i64(1), Rational::from_i64(1)));
    }

    #[test]
    fn schur_values() {
        let u = [MonomialArg::new(2, 1), MonomialArg::new(1, 0)];
        assert_eq!(schur_c_check(&ThetaVector(vec![1, 0]), &u).unwrap(), RatFunc::from_int(-1));
        assert_eq!(schur_c_check(&ThetaVector(vec![1, 1]), &u).unwrap(), RatFunc::from_int(1));
        assert!(schur_c_check(&ThetaVector(vec![2]), &u[..1]).unwrap().is_zero());
    }
}
