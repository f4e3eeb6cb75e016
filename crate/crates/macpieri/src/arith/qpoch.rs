//! Monomial arguments and q-shifted factorials.

use super::field::{Field, Rational};
use super::poly::{MultiPoly, Vars};
use super::ratfunc::RatFunc;
use crate::error::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `scale · q^q_exp · t^t_exp`, exponents of either sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialArg {
    pub scale: Rational,
    pub q_exp: i64,
    pub t_exp: i64,
}

impl MonomialArg {
    pub fn new(q_exp: i64, t_exp: i64) -> Self {
        MonomialArg { scale: <Rational as One>::one(), q_exp, t_exp }
    }

    pub fn scaled(scale: Rational, q_exp: i64, t_exp: i64) -> Self {
        MonomialArg { scale, q_exp, t_exp }
    }

    pub fn mul(&self, o: &Self) -> Self {
        MonomialArg { scale: &self.scale * &o.scale, q_exp: self.q_exp + o.q_exp, t_exp: self.t_exp + o.t_exp }
    }

    pub fn inv(&self) -> Self {
        MonomialArg { scale: <Rational as One>::one() / &self.scale, q_exp: -self.q_exp, t_exp: -self.t_exp }
    }

    pub fn shift_q(&self, k: i64) -> Self {
        MonomialArg { scale: self.scale.clone(), q_exp: self.q_exp + k, t_exp: self.t_exp }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::monomial(Vars::QT, &self.scale, self.q_exp, self.t_exp)
    }
}

/// `(a; q)_k = ∏_{i<k} (1 - a q^i)` as a reduced rational function.
pub fn qpoch(a: &MonomialArg, k: usize) -> RatFunc {
    if k == 0 {
        return RatFunc::from_int(1);
    }
    if Zero::is_zero(&a.scale) {
        return RatFunc::from_int(1);
    }
    // factor i is (D - s q^{a+i} t^b · D) / D with D the monomial clearing negatives
    let sn = a.scale.numer().clone();
    let sd = a.scale.denom().clone();
    let mut num = MultiPoly::one(Vars::QT);
    let mut den = MultiPoly::one(Vars::QT);
    for i in 0..k as i64 {
        let qe = a.q_exp + i;
        let te = a.t_exp;
        let (cq, ct) = ((-qe).max(0) as usize, (-te).max(0) as usize);
        let d = MultiPoly::monomial(Vars::QT, sd.clone(), cq, ct);
        let m = MultiPoly::monomial(Vars::QT, sn.clone(), (qe + cq as i64) as usize, (te + ct as i64) as usize);
        num = num.mul(&d.sub(&m));
        den = den.mul(&d);
    }
    RatFunc::new(num, den).expect("nonzero monomial denominator")
}

/// `(a; b)_k` over any field, with `(a; b)_{-k} = 1 / ∏_{i=1}^{k} (1 - a b^{-i})`.
pub fn qpoch_in<F: Field>(a: &F, base: &F, k: i64) -> Result<F> {
    let mut acc = F::one();
    if k >= 0 {
        let mut x = a.clone();
        for _ in 0..k {
            acc = acc.mul(&F::one().sub(&x));
            x = x.mul(base);
        }
        Ok(acc)
    } else {
        let binv = base.try_inv()?;
        let mut x = a.mul(&binv);
        for _ in 0..(-k) {
            acc = acc.mul(&F::one().sub(&x));
            x = x.mul(&binv);
        }
        F::one().try_div(&acc)
    }
}

/// Rising factorial `(u)_k = u (u+1) ... (u+k-1)`.
pub fn rising<F: Field>(u: &F, k: usize) -> F {
    let mut acc = F::one();
    for i in 0..k {
        acc = acc.mul(&u.add(&F::from_i64(i as i64)));
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, b| a * BigInt::from(b))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}
