//! Analytic Pieri coefficients `d_θ(u)`, the expansion of `Q_λ Q_(r)` in the
//! `Q` basis, the combinatorial `ψ` coefficients and the Hall–Littlewood
//! analytic Pieri formula.

use crate::arith::{qpoch_in, Field, MonomialArg, RatFunc, Rational, Vars};
use crate::error::{Error, Result};
use crate::partitions::{IntSeq, Partition, ThetaVector};
use num_traits::One;
use serde::{Deserialize, Serialize};

/// `(x; q)_k` for a nonnegative length.
pub(crate) fn qp<F: Field>(x: &F, q: &F, k: usize) -> Result<F> {
    qpoch_in(x, q, k as i64)
}

/// Ratio `(a; q)_k / (b; q)_k`.
pub(crate) fn qratio<F: Field>(a: &F, b: &F, q: &F, k: usize) -> Result<F> {
    qp(a, q, k)?.try_div(&qp(b, q, k)?)
}

/// The four-ratio form of `d_θ(u)` over any field.
pub fn d_four<F: Field>(q: &F, t: &F, theta: &[usize], u: &[F]) -> Result<F> {
    let n = theta.len();
    let w: usize = theta.iter().sum();
    let qw = q.powi(w as i64)?;
    let mut acc = F::one();
    for k in 0..n {
        let th = theta[k];
        acc = acc.mul(&qratio(t, q, q, th)?);
        acc = acc.mul(&qratio(&qw.mul(q).mul(&u[k]), &qw.mul(t).mul(&u[k]), q, th)?);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let r = u[i].try_div(&u[j])?;
            acc = acc.mul(&qratio(&t.mul(&r), &q.mul(&r), q, theta[i])?);
            let s = q.powi(-(theta[j] as i64))?.mul(&r);
            acc = acc.mul(&qratio(&s.mul(q).try_div(t)?, &s, q, theta[i])?);
        }
    }
    Ok(acc)
}

/// The compact form with `u_{n+1} = 1/t`, `θ_{n+1} = −|θ|`, `v_k = q^{θ_k} u_k`.
pub fn d_compact<F: Field>(q: &F, t: &F, theta: &[usize], u: &[F]) -> Result<F> {
    let n = theta.len();
    let w: i64 = theta.iter().sum::<usize>() as i64;
    let mut uu = u.to_vec();
    uu.push(t.try_inv()?);
    let mut v = Vec::with_capacity(n + 1);
    for k in 0..n {
        v.push(q.powi(theta[k] as i64)?.mul(&u[k]));
    }
    v.push(q.powi(-w)?.mul(&uu[n]));
    let mut acc = F::one();
    for i in 0..n {
        for j in i..n {
            let r = uu[i].try_div(&uu[j])?;
            acc = acc.mul(&qratio(&t.mul(&r), &q.mul(&r), q, theta[i])?);
        }
        for j in (i + 1)..=n {
            let r = uu[i].try_div(&v[j])?;
            acc = acc.mul(&qratio(&q.mul(&r).try_div(t)?, &r, q, theta[i])?);
        }
    }
    Ok(acc)
}

fn qt_symbols() -> (RatFunc, RatFunc) {
    (RatFunc::q(), RatFunc::t())
}

fn args_to_ratfunc(u: &[MonomialArg]) -> Vec<RatFunc> {
    u.iter().map(MonomialArg::to_ratfunc).collect()
}

/// `d_θ(u)` in `Q(q,t)`; both displayed forms are evaluated and compared.
pub fn d_coeff(theta: &ThetaVector, u: &[MonomialArg]) -> Result<RatFunc> {
    if theta.len() != u.len() {
        return Err(Error::Parameter("θ and u differ in length".into()));
    }
    let (q, t) = qt_symbols();
    let uf = args_to_ratfunc(u);
    let a = d_four(&q, &t, &theta.0, &uf)?;
    let b = d_compact(&q, &t, &theta.0, &uf)?;
    if a != b {
        return Err(Error::Consistency(format!("d_{:?}: the two product forms differ", theta.0)));
    }
    Ok(a)
}

/// `u_k = q^{λ_k − λ_{n+1}} t^{n−k}` for `k = 1..n`.
pub fn pieri_args(lambda: &[i64], last: i64) -> Vec<MonomialArg> {
    let n = lambda.len() as i64;
    lambda.iter().enumerate().map(|(k, &l)| MonomialArg::new(l - last, n - 1 - k as i64)).collect()
}

/// `w_r(u) = (tu; q)_r / (qu; q)_r`.
fn w_ratio(r: usize, u: &MonomialArg) -> RatFunc {
    let tu = u.mul(&MonomialArg::new(0, 1));
    let qu = u.mul(&MonomialArg::new(1, 0));
    crate::arith::qpoch(&tu, r).div(&crate::arith::qpoch(&qu, r)).expect("nonzero q-shifted factorial")
}

/// `ψ_{κ/λ}`: zero unless `κ/λ` is a horizontal strip.
pub fn psi_coeff(kappa: &Partition, lambda: &Partition) -> RatFunc {
    if !kappa.is_horizontal_strip_over(lambda) {
        return RatFunc::from_int(0);
    }
    let n = lambda.len().max(kappa.len().saturating_sub(1));
    let l: Vec<i64> = lambda.padded(n).into_iter().map(|x| x as i64).collect();
    let k: Vec<i64> = kappa.padded(n + 1).into_iter().map(|x| x as i64).collect();
    let mut num = RatFunc::from_int(1);
    let mut den = RatFunc::from_int(1);
    for i in 0..n {
        let r = (k[i] - l[i]) as usize;
        for j in i..n {
            let tj = (j - i) as i64;
            num = num.mul(&w_ratio(r, &MonomialArg::new(l[i] - l[j], tj)));
            den = den.mul(&w_ratio(r, &MonomialArg::new(l[i] - k[j + 1], tj)));
        }
    }
    num.div(&den).expect("nonzero ψ denominator")
}

/// One summand `coeff · basis[indices]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PieriTerm {
    pub kappa: IntSeq,
    pub coeff: RatFunc,
}

/// Right-hand side of a Pieri formula for `Q_λ · Q_(r)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PieriExpansion {
    pub lambda: Vec<i64>,
    pub r: usize,
    pub terms: Vec<PieriTerm>,
}

fn kappa_of(lambda: &[i64], r: usize, theta: &ThetaVector) -> IntSeq {
    let mut k: Vec<i64> = lambda.iter().zip(&theta.0).map(|(&l, &t)| l + t as i64).collect();
    k.push(r as i64 - theta.weight() as i64);
    IntSeq(k)
}

/// `Q_λ Q_(r) = Σ_θ d_θ(u) Q_{(λ+θ, r−|θ|)}` with `λ` padded to `n` parts.
/// Non-partition targets are kept only when `raw` is set.
pub fn pieri_expand_in(lambda: &Partition, n: usize, r: usize, raw: bool) -> Result<PieriExpansion> {
    if lambda.len() > n {
        return Err(Error::Parameter(format!("{lambda} has more than {n} parts")));
    }
    let l: Vec<i64> = lambda.padded(n).into_iter().map(|x| x as i64).collect();
    let u = pieri_args(&l, r as i64);
    let mut terms = Vec::new();
    for theta in ThetaVector::all_bounded(n, r) {
        let kappa = kappa_of(&l, r, &theta);
        if !raw && !kappa.is_partition() {
            continue;
        }
        let c = d_coeff(&theta, &u)?;
        if !c.is_zero() {
            terms.push(PieriTerm { kappa, coeff: c });
        }
    }
    Ok(PieriExpansion { lambda: l, r, terms })
}

/// [`pieri_expand_in`] at the working length `ℓ(λ)`.
pub fn pieri_expand(lambda: &Partition, r: usize, raw: bool) -> Result<PieriExpansion> {
    pieri_expand_in(lambda, lambda.len(), r, raw)
}

/// `(1 − t)^{n(θ)}`, `n(θ) = #{j : θ_j ≠ 0}`.
pub fn hl_pieri_coeff(theta: &ThetaVector) -> RatFunc {
    let one_minus_t = RatFunc::from_int(1).sub(&RatFunc::t());
    let mut c = RatFunc::from_int(1);
    for _ in theta.support() {
        c = c.mul(&one_minus_t);
    }
    c
}

/// `t^{|θ|} (1 − 1/t)^{n(θ)}`, the inverse recurrence coefficient.
pub fn hl_recurrence_coeff(theta: &ThetaVector) -> RatFunc {
    let f = RatFunc::from_int(1).sub(&RatFunc::monomial(Vars::QT, &<Rational as One>::one(), 0, -1));
    let mut c = RatFunc::monomial(Vars::QT, &<Rational as One>::one(), 0, theta.weight() as i64);
    for _ in theta.support() {
        c = c.mul(&f);
    }
    c
}

/// Hall–Littlewood analytic Pieri formula over all `θ` with `|θ| ≤ r`;
/// targets are kept as raw integer sequences.
pub fn hl_pieri_expand(lambda: &IntSeq, r: usize) -> PieriExpansion {
    let terms = ThetaVector::all_bounded(lambda.len(), r)
        .into_iter()
        .map(|theta| PieriTerm { kappa: kappa_of(&lambda.0, r, &theta), coeff: hl_pieri_coeff(&theta) })
        .collect();
    PieriExpansion { lambda: lambda.0.clone(), r, terms }
}

/// Inverse of [`hl_pieri_expand`]:
/// `Q_{(s_1..s_n, s_{n+1})} = Σ_θ t^{|θ|}(1 − 1/t)^{n(θ)} Q_{(s_{n+1}−|θ|)} Q_{s+θ}`.
/// Each term's `kappa` is `(s + θ, s_{n+1} − |θ|)`, read as the product of
/// `Q` at the first `n` entries with the one-row function at the last.
pub fn hl_recurrence_expand(seq: &IntSeq) -> Result<PieriExpansion> {
    let Some((&last, front)) = seq.0.split_last() else {
        return Err(Error::Parameter("empty sequence".into()));
    };
    let r = usize::try_from(last).map_err(|_| Error::Parameter("negative last entry".into()))?;
    let terms = ThetaVector::all_bounded(front.len(), r)
        .into_iter()
        .map(|theta| PieriTerm { kappa: kappa_of(front, r, &theta), coeff: hl_recurrence_coeff(&theta) })
        .collect();
    Ok(PieriExpansion { lambda: front.to_vec(), r, terms })
}
