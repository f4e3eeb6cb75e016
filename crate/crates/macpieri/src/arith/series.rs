//! Truncated Laurent series in an auxiliary `ε` over any field. Used to read
//! off the value of a rational expression at a point where its displayed form
//! is `0/0`: perturb the inputs along `ε`, evaluate, take the `ε^0` term.

use super::field::{Field, Rational};
use crate::error::{Error, Result};
use std::fmt;

/// `ε^val (c_0 + c_1 ε + …)`, known up to (excluding) `ε^prec`.
/// `prec = None` marks an exact finite sum.
#[derive(Clone, Debug)]
pub struct Laurent<F: Field> {
    val: i64,
    c: Vec<F>,
    prec: Option<i64>,
    /// Relative precision kept by inexact results.
    rel: usize,
}

impl<F: Field> Laurent<F> {
    fn exact(val: i64, c: Vec<F>, rel: usize) -> Self {
        Self { val, c, prec: None, rel }.normalized()
    }

    /// The constant `x`, carrying relative precision `rel` into later divisions.
    pub fn constant(x: F, rel: usize) -> Self {
        Self::exact(0, vec![x], rel)
    }

    /// `x (1 + k ε)`.
    pub fn perturbed(x: F, k: i64, rel: usize) -> Self {
        let kx = x.scale_i64(k);
        Self::exact(0, vec![x, kx], rel)
    }

    /// `x + kε`.
    pub fn shifted(x: F, k: i64, rel: usize) -> Self {
        Self::exact(0, vec![x, F::from_i64(k)], rel)
    }

    pub fn rel(&self) -> usize {
        self.rel
    }

    /// Coefficient of `ε^0`, failing on a pole or when it was not resolved.
    pub fn constant_term(&self) -> Result<F> {
        if let Some(lead) = self.c.first() {
            if self.val < 0 && !lead.is_zero() {
                return Err(Error::Pole("perturbation limit diverges".into()));
            }
        }
        if self.val > 0 {
            return Ok(F::zero());
        }
        let idx = (-self.val) as usize;
        match self.c.get(idx) {
            Some(x) => Ok(x.clone()),
            None if self.prec.map_or(true, |p| p > 0) => Ok(F::zero()),
            None => Err(Error::Consistency("perturbation precision exhausted".into())),
        }
    }

    fn normalized(mut self) -> Self {
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        self.c.drain(..lead);
        self.val += lead as i64;
        if let Some(p) = self.prec {
            let keep = (p - self.val).max(0) as usize;
            self.c.truncate(keep);
        } else {
            while self.c.last().is_some_and(|x| x.is_zero()) {
                self.c.pop();
            }
            if self.c.len() > self.rel {
                // keep exact sums short
                self.prec = Some(self.val + self.rel as i64);
                self.c.truncate(self.rel);
            }
        }
        if self.c.is_empty() && self.prec.is_none() {
            self.val = 0;
        }
        self
    }

    fn top(&self) -> Option<i64> {
        self.prec
    }

    fn coeff_at(&self, e: i64) -> F {
        if e < self.val {
            return F::zero();
        }
        self.c.get((e - self.val) as usize).cloned().unwrap_or_else(F::zero)
    }

    fn end(&self) -> i64 {
        self.val + self.c.len() as i64
    }
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<F: Field> Field for Laurent<F> {
    fn zero() -> Self {
        Self { val: 0, c: Vec::new(), prec: None, rel: 8 }
    }
    fn one() -> Self {
        Self::constant(F::one(), 8)
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n), 8)
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(F::from_rational(r), 8)
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let rel = self.rel.max(o.rel);
        if self.c.is_empty() && self.prec.is_none() {
            return o.clone();
        }
        if o.c.is_empty() && o.prec.is_none() {
            return self.clone();
        }
        let prec = min_opt(self.top(), o.top());
        let lo = self.val.min(o.val);
        let hi = prec.unwrap_or_else(|| self.end().max(o.end()));
        let c = (lo..hi.max(lo)).map(|e| self.coeff_at(e).add(&o.coeff_at(e))).collect();
        Self { val: lo, c, prec, rel }.normalized()
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn neg(&self) -> Self {
        Self { val: self.val, c: self.c.iter().map(F::neg).collect(), prec: self.prec, rel: self.rel }
    }
    fn mul(&self, o: &Self) -> Self {
        let rel = self.rel.max(o.rel);
        let val = self.val + o.val;
        let prec = match (self.prec, o.prec) {
            (None, None) => None,
            (Some(p), None) => Some(p + o.val),
            (None, Some(p)) => Some(p + self.val),
            (Some(p), Some(r)) => Some((p + o.val).min(r + self.val)),
        };
        if self.c.is_empty() || o.c.is_empty() {
            return Self { val, c: Vec::new(), prec, rel }.normalized();
        }
        let len = match prec {
            Some(p) => (p - val).max(0) as usize,
            None => self.c.len() + o.c.len() - 1,
        };
        let mut c = vec![F::zero(); len];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                if i + j < len {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        Self { val, c, prec, rel }.normalized()
    }
    fn try_div(&self, o: &Self) -> Result<Self> {
        let Some(b0) = o.c.first() else { return Err(Error::DivisionByZero) };
        let rel = self.rel.max(o.rel);
        let val = self.val - o.val;
        // relative precision of the quotient
        let r_a = self.prec.map(|p| p - self.val);
        let r_b = o.prec.map(|p| p - o.val);
        let r = match (r_a, r_b) {
            (None, None) if o.c.len() == 1 => None,
            (x, y) => Some(min_opt(x, y).unwrap_or(rel as i64).min(rel as i64).max(0)),
        };
        if self.c.is_empty() {
            return Ok(Self { val, c: Vec::new(), prec: self.prec.map(|p| p - o.val), rel }.normalized());
        }
        let len = match r {
            Some(r) => r as usize,
            None => self.c.len(),
        };
        let mut rem: Vec<F> = (0..len).map(|i| self.c.get(i).cloned().unwrap_or_else(F::zero)).collect();
        let mut c = Vec::with_capacity(len);
        for i in 0..len {
            let x = rem[i].try_div(b0)?;
            for (j, b) in o.c.iter().enumerate().skip(1) {
                if i + j < len {
                    rem[i + j] = rem[i + j].sub(&x.mul(b));
                }
            }
            c.push(x);
        }
        Ok(Self { val, c, prec: r.map(|r| val + r), rel }.normalized())
    }
}

impl<F: Field> PartialEq for Laurent<F> {
    fn eq(&self, o: &Self) -> bool {
        let lo = self.val.min(o.val);
        let hi = match min_opt(self.prec, o.prec) {
            Some(p) => p,
            None => self.end().max(o.end()),
        };
        (lo..hi).all(|e| self.coeff_at(e) == o.coeff_at(e))
    }
}

impl<F: Field> fmt::Display for Laurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({x})ε^{}", self.val + i as i64)?;
        }
        if self.c.is_empty() {
            write!(f, "0")?;
        }
        if let Some(p) = self.prec {
            write!(f, " + O(ε^{p})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = Laurent<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn removable_ratio() {
        // ((1+2ε)−1)/((1+3ε)−1) → 2/3
        let a = L::perturbed(r(1), 2, 6).sub(&L::one());
        let b = L::perturbed(r(1), 3, 6).sub(&L::one());
        let q = a.try_div(&b).unwrap();
        assert_eq!(q.constant_term().unwrap(), Rational::new(2.into(), 3.into()));
    }

    #[test]
    fn pole_is_reported() {
        let a = L::perturbed(r(1), 2, 6).sub(&L::one());
        assert!(matches!(L::one().try_div(&a).unwrap().constant_term(), Err(Error::Pole(_))));
    }

    #[test]
    fn series_inverse() {
        // 1/(1−ε) = 1 + ε + ε² + …
        let x = L::perturbed(r(1), -1, 5);
        let inv = x.try_inv().unwrap();
        let back = inv.mul(&x);
        assert_eq!(back.constant_term().unwrap(), r(1));
        assert!(inv.c.len() >= 5 && inv.c.iter().all(|x| *x == r(1)));
    }
}
