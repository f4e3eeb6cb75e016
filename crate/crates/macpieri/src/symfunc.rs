//! Symmetric functions with rational-function coefficients.
//!
//! Every basis converts to the monomial basis, which is the comparison
//! basis for all verifications.  Products are formed in the power-sum basis
//! (where they are concatenations of indices) and converted back.

use crate::arith::{MultiPoly, RatFunc, Rational, Vars};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Coefficient field and scalar product of a polynomial family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Macdonald `(q, t)`.
    Macdonald,
    /// Hall–Littlewood, the `q = 0` specialization.
    #[serde(rename = "hl")]
    HallLittlewood,
    /// Schur, the `q = t` specialization (Hall scalar product).
    Schur,
    /// Jack over `Q(α)`.
    Jack,
}

impl Family {
    pub fn vars(self) -> Vars {
        match self {
            Family::Jack => Vars::Alpha,
            _ => Vars::QT,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Macdonald => "macdonald",
            Family::HallLittlewood => "hl",
            Family::Schur => "schur",
            Family::Jack => "jack",
        }
    }

    /// Coefficient of `p_m u^m / m` in `log Σ u^k g_k`.
    pub fn log_ratio(self, m: usize) -> RatFunc {
        let m = m as i64;
        let one = RatFunc::from_int(1);
        match self {
            Family::Macdonald => {
                let num = one.sub(&RatFunc::monomial(Vars::QT, &Rational::one(), 0, m));
                let den = one.sub(&RatFunc::monomial(Vars::QT, &Rational::one(), m, 0));
                num.div(&den).expect("1 - q^m is nonzero")
            }
            Family::HallLittlewood => one.sub(&RatFunc::monomial(Vars::QT, &Rational::one(), 0, m)),
            Family::Schur => one,
            Family::Jack => RatFunc::alpha().inv().expect("α is nonzero"),
        }
    }

    /// `⟨p_ρ, p_ρ⟩ / z_ρ`.
    pub fn power_weight(self, rho: &Partition) -> RatFunc {
        match self {
            Family::Macdonald => {
                let mut w = RatFunc::from_int(1);
                for &r in rho.parts() {
                    let r = r as i64;
                    let one = RatFunc::from_int(1);
                    let a = one.sub(&RatFunc::monomial(Vars::QT, &Rational::one(), r, 0));
                    let b = one.sub(&RatFunc::monomial(Vars::QT, &Rational::one(), 0, r));
                    w = w.mul(&a.div(&b).expect("1 - t^r is nonzero"));
                }
                w
            }
            Family::HallLittlewood => {
                let mut d = RatFunc::from_int(1);
                for &r in rho.parts() {
                    d = d.mul(&RatFunc::from_int(1).sub(&RatFunc::monomial(Vars::QT, &Rational::one(), 0, r as i64)));
                }
                d.inv().expect("nonzero")
            }
            Family::Schur => RatFunc::from_int(1),
            Family::Jack => RatFunc::monomial(Vars::Alpha, &Rational::one(), rho.len() as i64, 0),
        }
    }
}

/// Basis tag of a [`SymFunc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    PowerSum,
    Elementary,
    /// Products of the one-row functions `g_k` of a family: `g_k(q,t)`,
    /// `q_k(t)`, `h_k` or the Jack `Q_(k)(α)`.
    G(Family),
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::Elementary => "e",
            Basis::G(_) => "g",
        }
    }
}

/// Finite linear combination of basis elements indexed by partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { basis, degree, coeffs: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        let mut s = Self::zero(basis, index.weight());
        s.coeffs.insert(index, RatFunc::from_int(1));
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, RatFunc)>>(basis: Basis, degree: usize, terms: I) -> Result<Self> {
        let mut s = Self::zero(basis, degree);
        for (k, c) in terms {
            s.add_term(k, c)?;
        }
        Ok(s)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree_bound(&self) -> usize {
        self.degree
    }

    pub fn with_degree_bound(mut self, d: usize) -> Result<Self> {
        if let Some(k) = self.coeffs.keys().find(|k| k.weight() > d) {
            return Err(Error::Degree { degree: k.weight(), bound: d });
        }
        self.degree = d;
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: &Partition) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(|| RatFunc::from_int(0))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Terms in reverse-lexicographic order of the index.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter().rev()
    }

    pub fn add_term(&mut self, k: Partition, c: RatFunc) -> Result<()> {
        if k.weight() > self.degree {
            return Err(Error::Degree { degree: k.weight(), bound: self.degree });
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.coeffs.get_mut(&k) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.coeffs.remove(&k);
                } else {
                    *v = s;
                }
            }
            None => {
                self.coeffs.insert(k, c);
            }
        }
        Ok(())
    }

    fn from_accumulator(basis: Basis, degree: usize, acc: HashMap<Partition, Vec<RatFunc>>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, v) in acc {
            let c = RatFunc::sum_many(v);
            if !c.is_zero() {
                coeffs.insert(k, c);
            }
        }
        SymFunc { basis, degree, coeffs }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis, self.degree);
        }
        let coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect();
        SymFunc { basis: self.basis, degree: self.degree, coeffs }
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    /// Sum of two functions in the same basis.
    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.basis != o.basis {
            return Err(Error::Parameter(format!("adding {:?} to {:?}", o.basis, self.basis)));
        }
        let mut s = self.clone();
        s.degree = self.degree.max(o.degree);
        for (k, c) in &o.coeffs {
            s.add_term(k.clone(), c.clone())?;
        }
        Ok(s)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// Linear combination `Σ c_i f_i` of functions in one basis.
    pub fn combine(basis: Basis, degree: usize, items: &[(RatFunc, &SymFunc)]) -> Result<Self> {
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        for (c, f) in items {
            if f.basis != basis {
                return Err(Error::Parameter(format!("combining {:?} into {:?}", f.basis, basis)));
            }
            for (k, v) in &f.coeffs {
                acc.entry(k.clone()).or_default().push(v.mul(c));
            }
        }
        Ok(Self::from_accumulator(basis, degree, acc))
    }

    /// Apply a coefficient map (e.g. a specialization) and drop zeros.
    pub fn map_coeffs<F: Fn(&RatFunc) -> Result<RatFunc>>(&self, f: F) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (k, v) in &self.coeffs {
            let c = f(v)?;
            if !c.is_zero() {
                coeffs.insert(k.clone(), c);
            }
        }
        Ok(SymFunc { basis: self.basis, degree: self.degree, coeffs })
    }

    /// Same function in the power-sum basis.
    pub fn to_powersum(&self) -> SymFunc {
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        match self.basis {
            Basis::PowerSum => return self.clone(),
            Basis::Monomial | Basis::Elementary => {
                let m = self.to_monomial();
                for (lam, c) in &m.coeffs {
                    let tab = tables(lam.weight());
                    let i = tab.index[lam];
                    for (j, r) in tab.m_to_p[i].iter().enumerate() {
                        if !r.is_zero() {
                            acc.entry(tab.parts[j].clone()).or_default().push(c.mul(&RatFunc::from_bigrational(r)));
                        }
                    }
                }
            }
            Basis::G(fam) => {
                for (mu, c) in &self.coeffs {
                    for (rho, v) in g_product_in_p(fam, mu).coeffs.iter() {
                        acc.entry(rho.clone()).or_default().push(c.mul(v));
                    }
                }
            }
        }
        Self::from_accumulator(Basis::PowerSum, self.degree, acc)
    }

    /// Same function in the monomial basis.
    pub fn to_monomial(&self) -> SymFunc {
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        match self.basis {
            Basis::Monomial => return self.clone(),
            Basis::PowerSum => {
                for (rho, c) in &self.coeffs {
                    let tab = tables(rho.weight());
                    let i = tab.index[rho];
                    for (j, r) in tab.p_to_m[i].iter().enumerate() {
                        if !r.is_zero() {
                            acc.entry(tab.parts[j].clone()).or_default().push(c.scale_int(r));
                        }
                    }
                }
            }
            Basis::Elementary => {
                for (lam, c) in &self.coeffs {
                    let tab = tables(lam.weight());
                    let i = tab.index[lam];
                    for (j, r) in tab.e_to_m[i].iter().enumerate() {
                        if !r.is_zero() {
                            acc.entry(tab.parts[j].clone()).or_default().push(c.scale_int(r));
                        }
                    }
                }
            }
            Basis::G(_) => return self.to_powersum().to_monomial(),
        }
        Self::from_accumulator(Basis::Monomial, self.degree, acc)
    }

    /// Change of basis from the monomial basis into the elementary basis.
    pub fn to_elementary(&self) -> SymFunc {
        let m = self.to_monomial();
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        for (lam, c) in &m.coeffs {
            let tab = tables(lam.weight());
            let i = tab.index[lam];
            for (j, r) in tab.m_to_e[i].iter().enumerate() {
                if !r.is_zero() {
                    acc.entry(tab.parts[j].clone()).or_default().push(c.mul(&RatFunc::from_bigrational(r)));
                }
            }
        }
        Self::from_accumulator(Basis::Elementary, self.degree, acc)
    }

    /// Equality as symmetric functions (compared in the monomial basis).
    pub fn equals(&self, o: &SymFunc) -> bool {
        self.to_monomial().coeffs == o.to_monomial().coeffs
    }
}

/// Exact product, returned in the monomial basis.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let a = f.to_powersum();
    let b = g.to_powersum();
    let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
    for (r1, c1) in &a.coeffs {
        for (r2, c2) in &b.coeffs {
            let mut parts = r1.parts().to_vec();
            parts.extend_from_slice(r2.parts());
            acc.entry(Partition::from_unsorted(parts)).or_default().push(c1.mul(c2));
        }
    }
    SymFunc::from_accumulator(Basis::PowerSum, f.degree + g.degree, acc).to_monomial()
}

/// Product in a multiplicative basis (`p`, `e` or `g`), concatenating indices.
pub fn multiply_in_basis(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    if f.basis != g.basis || f.basis == Basis::Monomial {
        return Err(Error::Parameter(format!("no index product for {:?} · {:?}", f.basis, g.basis)));
    }
    let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
    for (r1, c1) in &f.coeffs {
        for (r2, c2) in &g.coeffs {
            let mut parts = r1.parts().to_vec();
            parts.extend_from_slice(r2.parts());
            acc.entry(Partition::from_unsorted(parts)).or_default().push(c1.mul(c2));
        }
    }
    Ok(SymFunc::from_accumulator(f.basis, f.degree + g.degree, acc))
}

/// Product with an explicit degree bound on the result.
pub fn multiply_within(f: &SymFunc, g: &SymFunc, bound: usize) -> Result<SymFunc> {
    let d = f.coeffs.keys().map(|k| k.weight()).max().unwrap_or(0) + g.coeffs.keys().map(|k| k.weight()).max().unwrap_or(0);
    if d > bound {
        return Err(Error::Degree { degree: d, bound });
    }
    multiply(f, g).with_degree_bound(bound)
}

/// Scalar product for which the power sums are orthogonal with
/// `⟨p_ρ, p_ρ⟩ = z_ρ · family weight`.
pub fn scalar_product(f: &SymFunc, g: &SymFunc, family: Family) -> RatFunc {
    let a = f.to_powersum();
    let b = g.to_powersum();
    let mut terms = Vec::new();
    for (rho, c) in &a.coeffs {
        if let Some(d) = b.coeffs.get(rho) {
            let z = RatFunc::from_poly(MultiPoly::constant(family.vars(), rho.z_factor()));
            terms.push(c.mul(d).mul(&z).mul(&family.power_weight(rho)));
        }
    }
    RatFunc::sum_many(terms)
}

/// `g_k` of a family in the power-sum basis, from
/// `k g_k = Σ_{m=1}^{k} (log ratio)_m p_m g_{k−m}`.
pub fn gk_in_p_basis(k: usize, family: Family) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<(Family, usize), Arc<SymFunc>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().unwrap().get(&(family, k)) {
        return (**s).clone();
    }
    let value = if k == 0 {
        SymFunc::one(Basis::PowerSum)
    } else {
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        let inv_k = RatFunc::from_bigrational(&BigRational::new(BigInt::one(), BigInt::from(k)));
        for m in 1..=k {
            let r = family.log_ratio(m).mul(&inv_k);
            let prev = gk_in_p_basis(k - m, family);
            for (rho, c) in &prev.coeffs {
                let mut parts = rho.parts().to_vec();
                parts.push(m);
                acc.entry(Partition::from_unsorted(parts)).or_default().push(c.mul(&r));
            }
        }
        SymFunc::from_accumulator(Basis::PowerSum, k, acc)
    };
    cache.lock().unwrap().insert((family, k), Arc::new(value.clone()));
    value
}

/// `g_μ = ∏ g_{μ_i}` in the power-sum basis (cached).
pub fn g_product_in_p(family: Family, mu: &Partition) -> Arc<SymFunc> {
    static CACHE: OnceLock<Mutex<HashMap<(Family, Partition), Arc<SymFunc>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().unwrap().get(&(family, mu.clone())) {
        return s.clone();
    }
    let value = if mu.len() <= 1 {
        gk_in_p_basis(mu.weight(), family)
    } else {
        let rest = Partition::new(mu.parts()[1..].to_vec()).expect("tail of a partition");
        let a = gk_in_p_basis(mu.part(0), family);
        let b = g_product_in_p(family, &rest);
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        for (r1, c1) in &a.coeffs {
            for (r2, c2) in &b.coeffs {
                let mut parts = r1.parts().to_vec();
                parts.extend_from_slice(r2.parts());
                acc.entry(Partition::from_unsorted(parts)).or_default().push(c1.mul(c2));
            }
        }
        SymFunc::from_accumulator(Basis::PowerSum, mu.weight(), acc)
    };
    let value = Arc::new(value);
    cache.lock().unwrap().insert((family, mu.clone()), value.clone());
    value
}

/// Change-of-basis tables for one weight.
pub struct Tables {
    /// Partitions of the weight in reverse-lex order.
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_ρ = Σ_λ p_to_m[ρ][λ] m_λ`.
    pub p_to_m: Vec<Vec<BigInt>>,
    /// `m_λ = Σ_ρ m_to_p[λ][ρ] p_ρ`.
    pub m_to_p: Vec<Vec<Rational>>,
    /// `e_μ = Σ_λ e_to_m[μ][λ] m_λ`.
    pub e_to_m: Vec<Vec<BigInt>>,
    /// `m_λ = Σ_μ m_to_e[λ][μ] e_μ`.
    pub m_to_e: Vec<Vec<Rational>>,
}

/// Cached tables for weight `n`.
pub fn tables(n: usize) -> Arc<Tables> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let parts = enumerate_partitions(n, None, None);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let p_to_m = p_to_m_matrix(n, n.max(1));
    let e_to_m = e_to_m_matrix(n, n.max(1));
    let m_to_p = invert_integer_matrix(&p_to_m);
    let m_to_e = invert_integer_matrix(&e_to_m);
    let t = Arc::new(Tables { parts, index, p_to_m, m_to_p, e_to_m, m_to_e });
    cache.lock().unwrap().insert(n, t.clone());
    t
}

type Poly = HashMap<Vec<u8>, i128>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out: Poly = HashMap::with_capacity(a.len() * 2);
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn power_sum_poly(k: usize, nvars: usize) -> Poly {
    (0..nvars)
        .map(|i| {
            let mut e = vec![0u8; nvars];
            e[i] = k as u8;
            (e, 1)
        })
        .collect()
}

fn elementary_poly(k: usize, nvars: usize) -> Poly {
    fn rec(start: usize, left: usize, e: &mut Vec<u8>, out: &mut Poly) {
        if left == 0 {
            out.insert(e.clone(), 1);
            return;
        }
        for i in start..e.len() {
            e[i] = 1;
            rec(i + 1, left - 1, e, out);
            e[i] = 0;
        }
    }
    let mut out = HashMap::new();
    rec(0, k, &mut vec![0u8; nvars], &mut out);
    out
}

fn expand_to_m(product: &Poly, parts: &[Partition], nvars: usize) -> Vec<BigInt> {
    parts
        .iter()
        .map(|lam| {
            if lam.len() > nvars {
                return BigInt::zero();
            }
            let e: Vec<u8> = lam.padded(nvars).into_iter().map(|x| x as u8).collect();
            BigInt::from(product.get(&e).copied().unwrap_or(0))
        })
        .collect()
}

fn one_poly(nvars: usize) -> Poly {
    std::iter::once((vec![0u8; nvars], 1i128)).collect()
}

/// `p_ρ → m` by multiplying out power sums in `nvars` variables.
pub fn p_to_m_matrix(n: usize, nvars: usize) -> Vec<Vec<BigInt>> {
    let parts = enumerate_partitions(n, None, None);
    parts
        .iter()
        .map(|rho| {
            let prod = rho.parts().iter().fold(one_poly(nvars), |acc, &k| poly_mul(&acc, &power_sum_poly(k, nvars)));
            expand_to_m(&prod, &parts, nvars)
        })
        .collect()
}

/// `e_μ → m` by multiplying out elementary functions in `nvars` variables.
pub fn e_to_m_matrix(n: usize, nvars: usize) -> Vec<Vec<BigInt>> {
    let parts = enumerate_partitions(n, None, None);
    parts
        .iter()
        .map(|mu| {
            let prod = mu.parts().iter().fold(one_poly(nvars), |acc, &k| poly_mul(&acc, &elementary_poly(k, nvars)));
            expand_to_m(&prod, &parts, nvars)
        })
        .collect()
}

fn invert_integer_matrix(a: &[Vec<BigInt>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).expect("transition matrix is invertible");
        m.swap(c, p);
        let inv = Rational::one() / &m[c][c];
        for x in m[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot = m[c].clone();
                for (x, y) in m[r].iter_mut().zip(pivot.iter()) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

// ---- JSON ----

#[derive(Serialize, Deserialize)]
struct TermWire {
    index: Partition,
    coeff: RatFunc,
}

#[derive(Serialize, Deserialize)]
struct SymFuncWire {
    basis: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    family: Option<Family>,
    degree: usize,
    terms: Vec<TermWire>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let family = if let Basis::G(f) = self.basis { Some(f) } else { None };
        SymFuncWire {
            basis: self.basis.tag().to_string(),
            family,
            degree: self.degree,
            terms: self.terms().map(|(k, c)| TermWire { index: k.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = SymFuncWire::deserialize(d)?;
        let basis = match (w.basis.as_str(), w.family) {
            ("m", None) => Basis::Monomial,
            ("p", None) => Basis::PowerSum,
            ("e", None) => Basis::Elementary,
            ("g", Some(f)) => Basis::G(f),
            ("g", None) => Basis::G(Family::Macdonald),
            (b, _) => return Err(D::Error::custom(format!("unknown basis {b:?}"))),
        };
        SymFunc::from_terms(basis, w.degree, w.terms.into_iter().map(|t| (t.index, t.coeff))).map_err(D::Error::custom)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.tag();
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{sym}{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn m_of(terms: &[(&[usize], i64)]) -> SymFunc {
        let n = terms.iter().map(|(k, _)| k.iter().sum::<usize>()).max().unwrap_or(0);
        SymFunc::from_terms(Basis::Monomial, n, terms.iter().map(|(k, c)| (p(k), RatFunc::from_int(*c)))).unwrap()
    }

    #[test]
    fn elementary_and_power_sums() {
        assert_eq!(SymFunc::basis_element(Basis::Elementary, p(&[2])).to_monomial(), m_of(&[(&[1, 1], 1)]));
        assert_eq!(SymFunc::basis_element(Basis::PowerSum, p(&[2])).to_monomial(), m_of(&[(&[2], 1)]));
        let h2 = SymFunc::basis_element(Basis::G(Family::Schur), p(&[2])).to_monomial();
        assert_eq!(h2, m_of(&[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn products() {
        let m1 = SymFunc::basis_element(Basis::Monomial, p(&[1]));
        let m2 = SymFunc::basis_element(Basis::Monomial, p(&[2]));
        assert_eq!(multiply(&m1, &m1), m_of(&[(&[2], 1), (&[1, 1], 2)]));
        assert_eq!(multiply(&m1, &m2), m_of(&[(&[3], 1), (&[2, 1], 1)]));
        assert_eq!(multiply(&m2, &SymFunc::one(Basis::Monomial)), m2);
        assert!(multiply_within(&m1, &m2, 2).is_err());
    }

    #[test]
    fn g1_g2() {
        let one = RatFunc::from_int(1);
        let q = RatFunc::q();
        let t = RatFunc::t();
        let g1 = gk_in_p_basis(1, Family::Macdonald);
        assert_eq!(g1.coeff(&p(&[1])), one.sub(&t).div(&one.sub(&q)).unwrap());
        let g2 = gk_in_p_basis(2, Family::Macdonald);
        let two = RatFunc::from_int(2);
        let c2 = one.sub(&t.mul(&t)).div(&two.mul(&one.sub(&q.mul(&q)))).unwrap();
        let c11 = one.sub(&t).mul(&one.sub(&t)).div(&two.mul(&one.sub(&q)).mul(&one.sub(&q))).unwrap();
        assert_eq!(g2.coeff(&p(&[2])), c2);
        assert_eq!(g2.coeff(&p(&[1, 1])), c11);
    }

    #[test]
    fn scalar_products() {
        let p2 = SymFunc::basis_element(Basis::PowerSum, p(&[2]));
        let p1 = SymFunc::basis_element(Basis::PowerSum, p(&[1]));
        let one = RatFunc::from_int(1);
        let q2 = RatFunc::q().mul(&RatFunc::q());
        let t2 = RatFunc::t().mul(&RatFunc::t());
        let expect = RatFunc::from_int(2).mul(&one.sub(&q2)).div(&one.sub(&t2)).unwrap();
        assert_eq!(scalar_product(&p2, &p2, Family::Macdonald), expect);
        assert!(scalar_product(&p1, &p2, Family::Macdonald).is_zero());
        let g1 = SymFunc::basis_element(Basis::G(Family::Macdonald), p(&[1]));
        assert_eq!(scalar_product(&g1, &p1, Family::Macdonald), one);
    }

    #[test]
    fn json_shape() {
        let f = m_of(&[(&[2], 3), (&[1, 1], -1)]);
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.starts_with(r#"{"basis":"m","degree":2,"terms":[{"index":[2],"coeff":"#));
        assert_eq!(serde_json::from_str::<SymFunc>(&s).unwrap(), f);
    }
}
