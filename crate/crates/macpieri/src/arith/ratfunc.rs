//! Canonically reduced rational functions over `Z[q,t]` or `Z[α]`.

use super::field::{Field, Rational};
use super::poly::{merge_vars, MultiPoly, Vars};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// `num / den` with `gcd(num, den) = 1` and a positive graded-lex leading
/// coefficient in `den`.  Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Reduce `num / den` to canonical form.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> Self {
        let vars = merge_vars(&num, &den);
        if num.is_zero() {
            return Self::zero_in(vars);
        }
        let g = num.gcd(&den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Self::fix_sign(n.with_vars(vars), d.with_vars(vars))
    }

    fn fix_sign(n: MultiPoly, d: MultiPoly) -> Self {
        if d.leading_coeff().is_negative() {
            RatFunc { num: n.neg(), den: d.neg() }
        } else {
            RatFunc { num: n, den: d }
        }
    }

    pub fn zero_in(vars: Vars) -> Self {
        RatFunc { num: MultiPoly::zero(vars), den: MultiPoly::one(vars) }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let vars = p.vars();
        RatFunc { num: p, den: MultiPoly::one(vars) }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(MultiPoly::constant(Vars::QT, BigInt::from(n)))
    }

    pub fn from_bigrational(r: &Rational) -> Self {
        RatFunc {
            num: MultiPoly::constant(Vars::QT, r.numer().clone()),
            den: MultiPoly::constant(Vars::QT, r.denom().clone()),
        }
    }

    pub fn q() -> Self {
        Self::from_poly(MultiPoly::monomial(Vars::QT, BigInt::one(), 1, 0))
    }

    pub fn t() -> Self {
        Self::from_poly(MultiPoly::monomial(Vars::QT, BigInt::one(), 0, 1))
    }

    pub fn alpha() -> Self {
        Self::from_poly(MultiPoly::monomial(Vars::Alpha, BigInt::one(), 1, 0))
    }

    /// `scale · x^a · t^b` with possibly negative exponents (`x` = `q` or `α`).
    pub fn monomial(vars: Vars, scale: &Rational, a: i64, b: i64) -> Self {
        if Zero::is_zero(scale) {
            return Self::zero_in(vars);
        }
        let (na, da) = if a >= 0 { (a as usize, 0) } else { (0, (-a) as usize) };
        let (nb, db) = if b >= 0 { (b as usize, 0) } else { (0, (-b) as usize) };
        Self::fix_sign(
            MultiPoly::monomial(vars, scale.numer().clone(), na, nb),
            MultiPoly::monomial(vars, scale.denom().clone(), da, db),
        )
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn vars(&self) -> Vars {
        if self.num.is_constant() && self.den.is_constant() {
            self.num.vars()
        } else if self.num.is_constant() {
            self.den.vars()
        } else {
            self.num.vars()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as a rational number when no variable occurs.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(BigRational::new(self.num.as_constant()?, self.den.as_constant()?))
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            return Self::reduce(n, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: self.num.mul(&o.den).add(&o.num), den: o.den.clone() };
        }
        if o.den.is_one() {
            return RatFunc { num: o.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            let d = self.den.mul(&o.den);
            return if n.is_zero() { Self::zero_in(d.vars()) } else { Self::fix_sign(n, d) };
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = o.den.div_exact(&g).unwrap();
        let n = self.num.mul(&d1).add(&o.num.mul(&b1));
        if n.is_zero() {
            return Self::zero_in(g.vars());
        }
        let h = n.gcd(&g);
        let (n, g2) = if h.is_one() { (n, g) } else { (n.div_exact(&h).unwrap(), g.div_exact(&h).unwrap()) };
        Self::fix_sign(n, b1.mul(&d1).mul(&g2))
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Sum of many terms: numerators over equal denominators are added
    /// first, then the groups are combined pairwise.
    pub fn sum_many<I: IntoIterator<Item = RatFunc>>(terms: I) -> RatFunc {
        let mut groups: Vec<(MultiPoly, MultiPoly)> = Vec::new();
        let mut index: std::collections::HashMap<MultiPoly, usize> = std::collections::HashMap::new();
        let mut vars = None;
        for r in terms {
            if r.num.is_zero() {
                continue;
            }
            if !r.is_constant() {
                vars = Some(r.vars());
            }
            match index.get(&r.den) {
                Some(&i) => groups[i].0 = groups[i].0.add(&r.num),
                None => {
                    index.insert(r.den.clone(), groups.len());
                    groups.push((r.num, r.den));
                }
            }
        }
        let mut parts: Vec<RatFunc> = groups
            .into_iter()
            .filter(|(n, _)| !n.is_zero())
            .map(|(n, d)| Self::reduce(n, d))
            .collect();
        if parts.is_empty() {
            return Self::zero_in(vars.unwrap_or(Vars::QT));
        }
        while parts.len() > 1 {
            let mut next = Vec::with_capacity(parts.len() / 2 + 1);
            let mut it = parts.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(a.add(&b)),
                    None => next.push(a),
                }
            }
            parts = next;
        }
        parts.pop().unwrap()
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero_in(merge_vars(&self.num, &o.num));
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d = if g1.is_one() { o.den.clone() } else { o.den.div_exact(&g1).unwrap() };
        let c = if g2.is_one() { o.num.clone() } else { o.num.div_exact(&g2).unwrap() };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        Self::fix_sign(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::fix_sign(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.mul(&Self::from_poly(MultiPoly::constant(self.vars(), c.clone())))
    }

    /// Exchange `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self::fix_sign(self.num.swap_qt(), self.den.swap_qt())
    }

    /// Substitute `value` for variable slot `slot` (0 = `q`/`α`, 1 = `t`).
    /// The reduced denominator vanishing after substitution is a pole.
    pub fn subs(&self, slot: usize, value: &RatFunc) -> Result<Self> {
        let (nn, nd, en) = subs_poly(&self.num, slot, value);
        let (dn, dd, ed) = subs_poly(&self.den, slot, value);
        if dn.is_zero() {
            return Err(Error::Pole(format!("{} = {}", slot_name(self.vars(), slot), value)));
        }
        // num(V) = nn / nd^en, den(V) = dn / dd^ed with nd == dd == den(V)
        let _ = nd;
        let base = dd;
        let (num, den) = if en >= ed {
            (nn, dn.mul(&base.pow((en - ed) as u32)))
        } else {
            (nn.mul(&base.pow((ed - en) as u32)), dn)
        };
        RatFunc::new(num, den)
    }

    pub fn subs_q(&self, value: &RatFunc) -> Result<Self> {
        self.subs(0, value)
    }

    pub fn subs_t(&self, value: &RatFunc) -> Result<Self> {
        self.subs(1, value)
    }

    /// Evaluate at rational `q`, `t` (for the α field only `q` is used as α).
    pub fn eval(&self, q: &Rational, t: &Rational) -> Result<Rational> {
        let d = eval_poly(&self.den, q, t);
        if Zero::is_zero(&d) {
            return Err(Error::Pole(format!("q = {q}, t = {t}")));
        }
        Ok(eval_poly(&self.num, q, t) / d)
    }

    pub fn to_latex(&self) -> String {
        let n = poly_latex(&self.num);
        if self.den.is_one() {
            n
        } else {
            format!("\\frac{{{}}}{{{}}}", n, poly_latex(&self.den))
        }
    }
}

fn slot_name(vars: Vars, slot: usize) -> &'static str {
    vars.names().get(slot).copied().unwrap_or("?")
}

/// Returns `(N, D, e)` with `p(value) = N / D^e`.
fn subs_poly(p: &MultiPoly, slot: usize, value: &RatFunc) -> (MultiPoly, MultiPoly, usize) {
    let vars = if p.is_constant() { value.vars() } else { p.vars() };
    let terms = p.terms();
    let emax = terms.iter().map(|(e, _)| e[slot] as usize).max().unwrap_or(0);
    let vn = &value.num;
    let vd = &value.den;
    let mut npow = vec![MultiPoly::one(vars)];
    let mut dpow = vec![MultiPoly::one(vars)];
    for k in 0..emax {
        npow.push(npow[k].mul(vn));
        dpow.push(dpow[k].mul(vd));
    }
    let mut acc = MultiPoly::zero(vars);
    let mut grouped: Vec<Vec<([u32; 2], BigInt)>> = vec![Vec::new(); emax + 1];
    for (e, c) in terms {
        let k = e[slot] as usize;
        let mut rest = e;
        rest[slot] = 0;
        grouped[k].push((rest, c));
    }
    for (k, g) in grouped.into_iter().enumerate() {
        if g.is_empty() {
            continue;
        }
        let part = MultiPoly::from_terms(vars, &g);
        acc = acc.add(&part.mul(&npow[k]).mul(&dpow[emax - k]));
    }
    (acc, vd.clone(), emax)
}

fn eval_poly(p: &MultiPoly, q: &Rational, t: &Rational) -> Rational {
    let mut acc = <Rational as Zero>::zero();
    for row in p.rows().iter().rev() {
        let mut r = <Rational as Zero>::zero();
        for c in row.iter().rev() {
            r = r * t + BigRational::from_integer(c.clone());
        }
        acc = acc * q + r;
    }
    acc
}

fn poly_latex(p: &MultiPoly) -> String {
    let terms = p.terms();
    if terms.is_empty() {
        return "0".into();
    }
    let names = p.vars().names();
    let mut s = String::new();
    for (k, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mut mono = String::new();
        for (v, &ex) in e.iter().enumerate() {
            if ex == 0 || v >= names.len() {
                continue;
            }
            let name = if names[v] == "α" { "\\alpha" } else { names[v] };
            if ex == 1 {
                mono.push_str(name);
            } else {
                mono.push_str(&format!("{}^{{{}}}", name, ex));
            }
        }
        let abs = c.abs();
        if mono.is_empty() {
            s.push_str(&abs.to_string());
        } else if abs.is_one() {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{}{}", abs, mono));
        }
    }
    s
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &MultiPoly| {
            let s = p.to_string();
            if p.nterms() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        Self::zero_in(Vars::QT)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_bigrational(r)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn try_div(&self, o: &Self) -> Result<Self> {
        self.div(o)
    }
}

// ---- JSON ----

#[derive(Serialize, Deserialize)]
struct Wire {
    vars: Vec<String>,
    num: Vec<(Vec<u32>, String)>,
    den: Vec<(Vec<u32>, String)>,
}

fn wire_terms(p: &MultiPoly, nvars: usize) -> Vec<(Vec<u32>, String)> {
    p.terms().into_iter().map(|(e, c)| (e[..nvars].to_vec(), c.to_string())).collect()
}

fn parse_terms<E: serde::de::Error>(vars: Vars, v: &[(Vec<u32>, String)]) -> std::result::Result<MultiPoly, E> {
    let n = vars.names().len();
    let mut terms = Vec::with_capacity(v.len());
    for (e, c) in v {
        if e.len() != n {
            return Err(E::custom("exponent vector length does not match vars"));
        }
        let c: BigInt = c.parse().map_err(|_| E::custom(format!("bad coefficient {c:?}")))?;
        let mut ex = [0u32; 2];
        ex[..n].copy_from_slice(e);
        terms.push((ex, c));
    }
    Ok(MultiPoly::from_terms(vars, &terms))
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let vars = self.vars();
        let n = vars.names().len();
        Wire {
            vars: vars.names().iter().map(|x| x.to_string()).collect(),
            num: wire_terms(&self.num, n),
            den: wire_terms(&self.den, n),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let vars = match w.vars.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
            ["q", "t"] => Vars::QT,
            ["α"] => Vars::Alpha,
            other => return Err(D::Error::custom(format!("unsupported variables {other:?}"))),
        };
        let num = parse_terms::<D::Error>(vars, &w.num)?;
        let den = parse_terms::<D::Error>(vars, &w.den)?;
        RatFunc::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q()
    }
    fn t() -> RatFunc {
        RatFunc::t()
    }
    fn one() -> RatFunc {
        RatFunc::from_int(1)
    }

    #[test]
    fn sub_reduces_to_one() {
        let a = one().div(&one().sub(&q())).unwrap();
        let b = q().div(&one().sub(&q())).unwrap();
        assert_eq!(a.sub(&b), one());
    }

    #[test]
    fn inverse_pair_cancels() {
        let a = one().sub(&t()).div(&one().sub(&q())).unwrap();
        let b = one().sub(&q()).div(&one().sub(&t())).unwrap();
        assert_eq!(a.mul(&b), one());
        assert_eq!(a.add(&RatFunc::zero()), a);
    }

    #[test]
    fn canonical_sign() {
        let a = one().div(&one().sub(&q())).unwrap();
        assert_eq!(a.to_string(), "-1/(q - 1)");
        assert!(a.denom().leading_coeff().is_positive());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(one().div(&RatFunc::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn substitution_and_pole() {
        // (1 - t)/(1 - q) at q = t is 1; at q = 1 it is a pole
        let a = one().sub(&t()).div(&one().sub(&q())).unwrap();
        assert_eq!(a.subs_q(&t()).unwrap(), one());
        assert!(matches!(a.subs_q(&one()), Err(Error::Pole(_))));
        // reduced first: (1 - q^2)/(1 - q) = 1 + q, finite at q = 1
        let b = one().sub(&q().mul(&q())).div(&one().sub(&q())).unwrap();
        assert_eq!(b.subs_q(&one()).unwrap(), RatFunc::from_int(2));
    }

    #[test]
    fn json_round_trip() {
        let a = one().sub(&t().mul(&q())).div(&RatFunc::from_int(3).sub(&q())).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        let b: RatFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert_eq!(serde_json::to_string(&b).unwrap(), s);
        assert_eq!(s, r#"{"vars":["q","t"],"num":[[[1,1],"1"],[[0,0],"-1"]],"den":[[[1,0],"1"],[[0,0],"-3"]]}"#);
    }

    #[test]
    fn laurent_monomial() {
        let m = RatFunc::monomial(Vars::QT, &BigRational::from_integer(2.into()), -1, 2);
        assert_eq!(m.to_string(), "2*t^2/q");
    }
}
