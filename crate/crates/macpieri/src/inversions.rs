//! Multidimensional inverse pairs of infinite lower-triangular matrices and
//! their exact verification on finite windows.
//!
//! Entries are generic over [`Field`]; the indeterminate sequences are
//! supplied as tables of field values (random rationals in the checks).

use crate::arith::{det, qpoch_in, Field, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// The inverse pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairFamily {
    /// `b`-extension with the determinant on the `g` side.
    ProductDet,
    /// `b`-extension with the determinant on the `f` side.
    DetProduct,
    /// `a ↦ a + b/a` form with the determinant on the `g` side.
    ShiftedProductDet,
    /// `a ↦ a + b/a` form with the determinant on the `f` side.
    ShiftedDetProduct,
    /// q-Pochhammer extension of Bressoud's inverse.
    BressoudExt,
    /// One-dimensional Krattenthaler pair.
    Kratt1d,
    /// One-dimensional pair with an extra parameter `b`.
    Kratt1dB,
}

impl PairFamily {
    pub const ALL: [PairFamily; 7] = [
        PairFamily::ProductDet,
        PairFamily::DetProduct,
        PairFamily::ShiftedProductDet,
        PairFamily::ShiftedDetProduct,
        PairFamily::BressoudExt,
        PairFamily::Kratt1d,
        PairFamily::Kratt1dB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PairFamily::ProductDet => "product_det",
            PairFamily::DetProduct => "det_product",
            PairFamily::ShiftedProductDet => "shifted_product_det",
            PairFamily::ShiftedDetProduct => "shifted_det_product",
            PairFamily::BressoudExt => "bressoud_ext",
            PairFamily::Kratt1d => "kratt1d",
            PairFamily::Kratt1dB => "kratt1d_b",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown inverse pair {s:?}")))
    }

    /// Largest dimension the family is defined for.
    pub fn max_dim(self) -> Option<usize> {
        match self {
            PairFamily::Kratt1d | PairFamily::Kratt1dB => Some(1),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    F,
    G,
}

/// Parameters of one inverse pair.
#[derive(Clone, Debug)]
pub struct InversePairSpec<F: Field> {
    pub family: PairFamily,
    pub n: usize,
    /// Sequence tables cover the indices `lo ..= lo + len - 1`.
    pub lo: i64,
    pub a: Vec<Vec<F>>,
    pub c: Vec<Vec<F>>,
    pub b: F,
    /// Base of the q-Pochhammer symbols (Bressoud family).
    pub q: F,
    /// `t_0, …, t_n` (Bressoud family).
    pub t: Vec<F>,
    /// `u_1, …, u_n` (Bressoud family).
    pub u: Vec<F>,
}

impl<F: Field> InversePairSpec<F> {
    fn check_dim(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Parameter("dimension must be positive".into()));
        }
        if let Some(m) = self.family.max_dim() {
            if self.n > m {
                return Err(Error::Parameter(format!("{} is one-dimensional", self.family.name())));
            }
        }
        Ok(())
    }

    fn seq<'a>(&'a self, table: &'a [Vec<F>], i: usize, k: i64) -> Result<&'a F> {
        let idx = k - self.lo;
        table
            .get(i)
            .and_then(|row| usize::try_from(idx).ok().and_then(|j| row.get(j)))
            .ok_or_else(|| Error::Parameter(format!("sequence index {k} outside the supplied range")))
    }

    pub fn a(&self, i: usize, k: i64) -> Result<&F> {
        self.seq(&self.a, i, k)
    }

    pub fn c(&self, i: usize, k: i64) -> Result<&F> {
        self.seq(&self.c, i, k)
    }

    /// Same pair with the sequences read backwards: `ã(y) = a(−y)`.
    pub fn negated(&self) -> Self {
        let rev = |t: &Vec<Vec<F>>| t.iter().map(|r| r.iter().rev().cloned().collect()).collect();
        let len = self.a.first().map_or(0, |r| r.len()) as i64;
        InversePairSpec { lo: -(self.lo + len - 1), a: rev(&self.a), c: rev(&self.c), ..self.clone() }
    }
}

fn prod_range<F: Field>(lo: i64, hi: i64, mut f: impl FnMut(i64) -> Result<F>) -> Result<F> {
    let mut acc = F::one();
    for y in lo..=hi {
        acc = acc.mul(&f(y)?);
    }
    Ok(acc)
}

fn ge(row: &[i64], col: &[i64]) -> bool {
    row.iter().zip(col).all(|(a, b)| a >= b)
}

/// Entry of the `f` or `g` matrix at `(row, col)`; zero unless `row ≥ col`.
pub fn pair_entry<F: Field>(spec: &InversePairSpec<F>, side: Side, row: &[i64], col: &[i64]) -> Result<F> {
    spec.check_dim()?;
    if row.len() != spec.n || col.len() != spec.n {
        return Err(Error::Parameter("multi-index length differs from the dimension".into()));
    }
    if !ge(row, col) {
        return Ok(F::zero());
    }
    match (spec.family, side) {
        (PairFamily::ProductDet, Side::F) => b_product_side(spec, row, col, true),
        (PairFamily::ProductDet, Side::G) => b_det_side(spec, row, col, false),
        (PairFamily::DetProduct, Side::F) => b_det_side(spec, row, col, true),
        (PairFamily::DetProduct, Side::G) => b_product_side(spec, row, col, false),
        (PairFamily::ShiftedProductDet, Side::F) => plus_product_side(spec, row, col, true),
        (PairFamily::ShiftedProductDet, Side::G) => plus_det_side(spec, row, col, false),
        (PairFamily::ShiftedDetProduct, Side::F) => plus_det_side(spec, row, col, true),
        (PairFamily::ShiftedDetProduct, Side::G) => plus_product_side(spec, row, col, false),
        (PairFamily::BressoudExt, Side::F) => bressoud_f(spec, row, col),
        (PairFamily::BressoudExt, Side::G) => bressoud_g(spec, row, col),
        (PairFamily::Kratt1d, s) => kratt(spec, s, row[0], col[0], false),
        (PairFamily::Kratt1dB, s) => kratt(spec, s, row[0], col[0], true),
    }
}

/// `b / ∏_j c_j(k_j)`.
fn b_over<F: Field>(spec: &InversePairSpec<F>, k: &[i64]) -> Result<F> {
    let mut p = F::one();
    for (j, &kj) in k.iter().enumerate() {
        p = p.mul(spec.c(j, kj)?);
    }
    spec.b.try_div(&p)
}

/// `∏_j (x − c_j(k_j))`.
fn prod_minus_c<F: Field>(spec: &InversePairSpec<F>, x: &F, k: &[i64]) -> Result<F> {
    let mut p = F::one();
    for (j, &kj) in k.iter().enumerate() {
        p = p.mul(&x.sub(spec.c(j, kj)?));
    }
    Ok(p)
}

/// Product-only side of the `b`-extensions.  With `lower = true` this is the
/// `f` matrix whose numerator runs over `y = k..m−1`; otherwise the `g`
/// matrix of the transposed pair with numerator over `y = l+1..k`.
/// `k` is always the index carrying `b / ∏ c(k)`.
fn b_product_side<F: Field>(spec: &InversePairSpec<F>, row: &[i64], col: &[i64], lower: bool) -> Result<F> {
    let k = if lower { col } else { row };
    let bb = b_over(spec, k)?;
    let mut acc = F::one();
    for i in 0..spec.n {
        let (nlo, nhi, dlo, dhi) =
            if lower { (col[i], row[i] - 1, col[i] + 1, row[i]) } else { (col[i] + 1, row[i], col[i], row[i] - 1) };
        let num = prod_range(nlo, nhi, |y| {
            let a = spec.a(i, y)?;
            Ok(a.sub(&bb).mul(&prod_minus_c(spec, a, k)?))
        })?;
        let den = prod_range(dlo, dhi, |y| {
            let c = spec.c(i, y)?;
            Ok(c.sub(&bb).mul(&prod_minus_c(spec, c, k)?))
        })?;
        acc = acc.mul(&num.try_div(&den)?);
    }
    Ok(acc)
}

/// Side carrying the determinant in the `b`-extensions.  With `upper = false`
/// this is `g_{kl}` (determinant at `l`, products over `y = l..k−1`); with
/// `upper = true` it is `f_{mk}` (determinant at `m`, products over
/// `y = k+1..m`).  The `b`-index is the column for `f`, the row for `g`.
fn b_det_side<F: Field>(spec: &InversePairSpec<F>, row: &[i64], col: &[i64], upper: bool) -> Result<F> {
    let n = spec.n;
    let k = if upper { col } else { row };
    let at = if upper { row } else { col };
    let bb = b_over(spec, k)?;
    let mut acc = F::one();
    for i in 0..n {
        acc = acc.mul(spec.c(i, k[i])?);
        for j in (i + 1)..n {
            acc = acc.mul(&spec.c(i, k[i])?.sub(spec.c(j, k[j])?));
        }
    }
    acc = F::one().try_div(&acc)?;
    for i in 0..n {
        let (lo, hi) = if upper { (col[i] + 1, row[i]) } else { (col[i], row[i] - 1) };
        acc = acc.mul(&prod_range(lo, hi, |y| {
            let a = spec.a(i, y)?;
            let c = spec.c(i, y)?;
            let r = a.sub(&bb).try_div(&c.sub(&bb))?;
            r.mul(&prod_minus_c(spec, a, k)?).try_div(&prod_minus_c(spec, c, k)?)
        })?);
    }
    let mut mat = Vec::with_capacity(n);
    for i in 0..n {
        let a = spec.a(i, at[i])?;
        let c = spec.c(i, at[i])?;
        let ratio = c.sub(&bb).try_div(&a.sub(&bb))?.mul(&prod_minus_c(spec, c, k)?).try_div(&prod_minus_c(spec, a, k)?)?;
        let mut r = Vec::with_capacity(n);
        for j in 0..n {
            let e = (n - j) as i64;
            r.push(c.powi(e)?.sub(&a.powi(e)?.mul(&ratio)));
        }
        mat.push(r);
    }
    Ok(acc.mul(&det(&mat)))
}

/// `∏_j (x − b/c_j(k_j))(x − c_j(k_j))`.
fn plus_pair<F: Field>(spec: &InversePairSpec<F>, x: &F, k: &[i64]) -> Result<F> {
    let mut p = F::one();
    for (j, &kj) in k.iter().enumerate() {
        let c = spec.c(j, kj)?;
        p = p.mul(&x.sub(&spec.b.try_div(c)?)).mul(&x.sub(c));
    }
    Ok(p)
}

fn plus_product_side<F: Field>(spec: &InversePairSpec<F>, row: &[i64], col: &[i64], lower: bool) -> Result<F> {
    let k = if lower { col } else { row };
    let mut acc = F::one();
    for i in 0..spec.n {
        let (nlo, nhi, dlo, dhi) =
            if lower { (col[i], row[i] - 1, col[i] + 1, row[i]) } else { (col[i] + 1, row[i], col[i], row[i] - 1) };
        let num = prod_range(nlo, nhi, |y| plus_pair(spec, spec.a(i, y)?, k))?;
        let den = prod_range(dlo, dhi, |y| plus_pair(spec, spec.c(i, y)?, k))?;
        acc = acc.mul(&num.try_div(&den)?);
    }
    Ok(acc)
}

fn plus_det_side<F: Field>(spec: &InversePairSpec<F>, row: &[i64], col: &[i64], upper: bool) -> Result<F> {
    let n = spec.n;
    let k = if upper { col } else { row };
    let at = if upper { row } else { col };
    let b = &spec.b;
    let mut pre = F::one();
    for i in 0..n {
        let ck = spec.c(i, k[i])?;
        pre = pre.mul(&ck.powi(n as i64)?).mul(&ck.add(&b.try_div(ck)?));
        for j in (i + 1)..n {
            let cj = spec.c(j, k[j])?;
            pre = pre.mul(&F::one().sub(&b.try_div(&ck.mul(cj))?)).mul(&ck.sub(cj));
        }
    }
    let mut acc = F::one().try_div(&pre)?;
    for i in 0..n {
        acc = acc.mul(&spec.c(i, at[i])?.powi(n as i64)?);
        let (lo, hi) = if upper { (col[i] + 1, row[i]) } else { (col[i], row[i] - 1) };
        acc = acc.mul(&prod_range(lo, hi, |y| {
            plus_pair(spec, spec.a(i, y)?, k)?.try_div(&plus_pair(spec, spec.c(i, y)?, k)?)
        })?);
    }
    let mut mat = Vec::with_capacity(n);
    for i in 0..n {
        let a = spec.a(i, at[i])?;
        let c = spec.c(i, at[i])?;
        let mut ratio = F::one();
        for s in 0..n {
            let cs = spec.c(s, k[s])?;
            let num = F::one().sub(&b.try_div(&c.mul(cs))?).mul(&c.sub(cs));
            let den = F::one().sub(&b.try_div(&a.mul(cs))?).mul(&a.sub(cs));
            ratio = ratio.mul(&num.try_div(&den)?);
        }
        let cc = c.add(&b.try_div(c)?);
        let aa = a.add(&b.try_div(a)?);
        let mut r = Vec::with_capacity(n);
        for j in 0..n {
            let e = (n - j) as i64;
            r.push(cc.powi(e)?.sub(&aa.powi(e)?.mul(&ratio)));
        }
        mat.push(r);
    }
    Ok(acc.mul(&det(&mat)))
}

fn kratt<F: Field>(spec: &InversePairSpec<F>, side: Side, row: i64, col: i64, with_b: bool) -> Result<F> {
    let b = &spec.b;
    let factor = |x: &F, ck: &F| -> Result<F> {
        let base = x.sub(ck);
        if with_b {
            Ok(base.mul(&x.sub(&b.try_div(ck)?)))
        } else {
            Ok(base)
        }
    };
    match side {
        Side::F => {
            let (m, k) = (row, col);
            let ck = spec.c(0, k)?;
            let num = prod_range(k, m - 1, |y| factor(spec.a(0, y)?, ck))?;
            let den = prod_range(k + 1, m, |y| factor(spec.c(0, y)?, ck))?;
            num.try_div(&den)
        }
        Side::G => {
            let (k, l) = (row, col);
            let ck = spec.c(0, k)?;
            let edge = |y: i64| -> Result<F> {
                let a = spec.a(0, y)?;
                let c = spec.c(0, y)?;
                let base = a.sub(c);
                if with_b {
                    Ok(b.sub(&a.mul(c)).mul(&base))
                } else {
                    Ok(base)
                }
            };
            let pre = edge(l)?.try_div(&edge(k)?)?;
            let num = prod_range(l + 1, k, |y| factor(spec.a(0, y)?, ck))?;
            let den = prod_range(l, k - 1, |y| factor(spec.c(0, y)?, ck))?;
            Ok(pre.mul(&num.try_div(&den)?))
        }
    }
}

fn qp<F: Field>(spec: &InversePairSpec<F>, a: F, len: i64) -> Result<F> {
    qpoch_in(&a, &spec.q, len)
}

fn bressoud_check<F: Field>(spec: &InversePairSpec<F>) -> Result<()> {
    if spec.t.len() != spec.n + 1 || spec.u.len() != spec.n {
        return Err(Error::Parameter("need t_0..t_n and u_1..u_n".into()));
    }
    Ok(())
}

fn bressoud_f<F: Field>(spec: &InversePairSpec<F>, m: &[i64], k: &[i64]) -> Result<F> {
    bressoud_check(spec)?;
    let n = spec.n;
    let (q, t, u) = (&spec.q, &spec.t, &spec.u);
    let kk: i64 = k.iter().sum();
    let qp_u = |e: i64, i: usize| -> Result<F> { Ok(q.powi(e)?.mul(&u[i])) };
    let mut acc = F::one();
    for i in 0..n {
        for j in (i + 1)..n {
            acc = acc.try_div(&qp_u(m[i], i)?.sub(&qp_u(m[j], j)?))?;
        }
    }
    for i in 0..n {
        let d = m[i] - k[i];
        let ti = &t[i + 1];
        acc = acc.mul(&ti.powi(d)?);
        acc = acc.mul(&qp(spec, q.try_div(ti)?, d)?.try_div(&qp(spec, q.clone(), d)?)?);
        let base = q.powi(k[i] + kk + 1)?.mul(&t[0]).mul(&u[i]);
        acc = acc.mul(&qp(spec, base.try_div(ti)?, d)?.try_div(&qp(spec, base, d)?)?);
        for j in (i + 1)..n {
            let tj = &t[j + 1];
            let uij = u[i].try_div(&u[j])?;
            let x = q.powi(k[i] - k[j] + 1)?.mul(&uij);
            acc = acc.mul(&qp(spec, x.try_div(ti)?, d)?.try_div(&qp(spec, x, d)?)?);
            let y = q.powi(k[i] - m[j])?.mul(&uij);
            acc = acc.mul(&qp(spec, y.mul(tj), d)?.try_div(&qp(spec, y, d)?)?);
        }
    }
    let mut mat = Vec::with_capacity(n);
    for i in 0..n {
        let ti = &t[i + 1];
        let x = qp_u(m[i], i)?;
        let z = q.powi(m[i] + kk)?.mul(&t[0]).mul(&u[i]);
        let mut ratio = F::one().sub(&z).try_div(&F::one().sub(&z.try_div(ti)?))?;
        for s in 0..n {
            let ks = qp_u(k[s], s)?;
            ratio = ratio.mul(&x.sub(&ks).try_div(&x.try_div(ti)?.sub(&ks))?);
        }
        let mut r = Vec::with_capacity(n);
        for j in 0..n {
            let tpow = ti.powi(j as i64 + 1 - n as i64 - 1)?;
            r.push(x.powi((n - 1 - j) as i64)?.mul(&F::one().sub(&tpow.mul(&ratio))));
        }
        mat.push(r);
    }
    Ok(acc.mul(&det(&mat)))
}

fn bressoud_g<F: Field>(spec: &InversePairSpec<F>, k: &[i64], l: &[i64]) -> Result<F> {
    bressoud_check(spec)?;
    let n = spec.n;
    let (q, t, u) = (&spec.q, &spec.t, &spec.u);
    let kk: i64 = k.iter().sum();
    let mut acc = F::one();
    for i in 0..n {
        let d = k[i] - l[i];
        let ti = &t[i + 1];
        acc = acc.mul(&qp(spec, ti.clone(), d)?.try_div(&qp(spec, q.clone(), d)?)?);
        let z = q.powi(l[i] + kk)?.mul(&t[0]).mul(&u[i]);
        acc = acc.mul(&qp(spec, z.mul(q).try_div(ti)?, d)?.try_div(&qp(spec, z, d)?)?);
        for j in (i + 1)..n {
            let tj = &t[j + 1];
            let uij = u[i].try_div(&u[j])?;
            let x = q.powi(l[i] - l[j])?.mul(&uij);
            acc = acc.mul(&qp(spec, x.mul(tj), d)?.try_div(&qp(spec, x.mul(q), d)?)?);
            let y = q.powi(l[i] - k[j])?.mul(&uij);
            acc = acc.mul(&qp(spec, y.mul(q).try_div(ti)?, d)?.try_div(&qp(spec, y, d)?)?);
        }
    }
    Ok(acc)
}

/// Preset used by the inverse Pieri formula: `t_k = t`, `a_i(y) = q^y u_i / t`,
/// `c_i(y) = q^y u_i`, `b = t^{-1} ∏ u_j`, as a determinant-on-`f` pair.
pub fn geometric_preset<F: Field>(q: &F, t: &F, u: &[F], lo: i64, hi: i64) -> Result<InversePairSpec<F>> {
    let n = u.len();
    let mut a = Vec::with_capacity(n);
    let mut c = Vec::with_capacity(n);
    for ui in u {
        let mut ra = Vec::new();
        let mut rc = Vec::new();
        for y in lo..=hi {
            let cy = q.powi(y)?.mul(ui);
            ra.push(cy.try_div(t)?);
            rc.push(cy);
        }
        a.push(ra);
        c.push(rc);
    }
    let mut b = t.try_inv()?;
    for ui in u {
        b = b.mul(ui);
    }
    Ok(InversePairSpec {
        family: PairFamily::DetProduct,
        n,
        lo,
        a,
        c,
        b,
        q: q.clone(),
        t: vec![t.clone(); n + 1],
        u: u.to_vec(),
    })
}

/// All multi-indices in `[lo, hi]^n`, lexicographic.
pub fn window(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// One failed delta relation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub orientation: String,
    pub m: Vec<i64>,
    pub l: Vec<i64>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InverseReport {
    pub family: PairFamily,
    pub n: usize,
    pub window: [i64; 2],
    pub checked: usize,
    pub violations: Vec<Violation>,
}

type EntryCache<F> = HashMap<(Vec<i64>, Vec<i64>), F>;

fn cached<F: Field>(
    cache: &mut EntryCache<F>,
    spec: &InversePairSpec<F>,
    side: Side,
    r: &[i64],
    c: &[i64],
) -> Result<F> {
    let key = (r.to_vec(), c.to_vec());
    if let Some(v) = cache.get(&key) {
        return Ok(v.clone());
    }
    let v = pair_entry(spec, side, r, c)?;
    cache.insert(key, v.clone());
    Ok(v)
}

/// Checks `Σ_k f_{mk} g_{kl} = δ_{ml}` and `Σ_k g_{mk} f_{kl} = δ_{ml}` for
/// every `m ≥ l` in the window `[lo, hi]^n`.  Division by zero while
/// building entries is an error (the caller redraws parameters).
pub fn verify_inverse<F: Field>(spec: &InversePairSpec<F>, lo: i64, hi: i64) -> Result<InverseReport> {
    spec.check_dim()?;
    let pts = window(spec.n, lo, hi);
    let mut fc: EntryCache<F> = HashMap::new();
    let mut gc: EntryCache<F> = HashMap::new();
    let mut checked = 0;
    let mut violations = Vec::new();
    for m in &pts {
        for l in &pts {
            if !ge(m, l) {
                continue;
            }
            let between: Vec<&Vec<i64>> = pts.iter().filter(|k| ge(m, k) && ge(k, l)).collect();
            for (name, first, second) in [("fg", Side::F, Side::G), ("gf", Side::G, Side::F)] {
                let mut s = F::zero();
                for k in &between {
                    let (c1, c2) = if first == Side::F { (&mut fc, &mut gc) } else { (&mut gc, &mut fc) };
                    let x = cached(c1, spec, first, m, k)?;
                    let y = cached(c2, spec, second, k, l)?;
                    s = s.add(&x.mul(&y));
                }
                let expect = if m == l { F::one() } else { F::zero() };
                checked += 1;
                if s != expect {
                    violations.push(Violation { orientation: name.into(), m: m.clone(), l: l.clone(), value: s.to_string() });
                }
            }
        }
    }
    Ok(InverseReport { family: spec.family, n: spec.n, window: [lo, hi], checked, violations })
}

/// Small random nonzero rational `±p/q` with `p, q ≤ 40`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-40..=40);
        let q: i64 = rng.gen_range(1..=40);
        if p != 0 {
            return Rational::new(BigInt::from(p), BigInt::from(q));
        }
    }
}

/// Random rational parameters for a family on the index range `[lo, hi]`.
pub fn random_spec<R: Rng>(family: PairFamily, n: usize, lo: i64, hi: i64, rng: &mut R) -> InversePairSpec<Rational> {
    let len = (hi - lo + 1) as usize;
    let table = |rng: &mut R| (0..n).map(|_| (0..len).map(|_| random_rational(rng)).collect()).collect::<Vec<Vec<_>>>();
    let a = table(rng);
    let c = table(rng);
    InversePairSpec {
        family,
        n,
        lo,
        a,
        c,
        b: random_rational(rng),
        q: random_rational(rng),
        t: (0..=n).map(|_| random_rational(rng)).collect(),
        u: (0..n).map(|_| random_rational(rng)).collect(),
    }
}

/// Verify a family on `draws` random parameter sets, redrawing whenever an
/// entry hits a pole.  Returns one report per accepted draw.
pub fn verify_random<R: Rng>(
    family: PairFamily,
    n: usize,
    draws: usize,
    lo: i64,
    hi: i64,
    rng: &mut R,
) -> Result<Vec<InverseReport>> {
    let mut out = Vec::with_capacity(draws);
    let mut attempts = 0;
    while out.len() < draws {
        attempts += 1;
        if attempts > 50 * draws + 50 {
            return Err(Error::Parameter("could not draw pole-free parameters".into()));
        }
        let spec = random_spec(family, n, lo - 1, hi + 1, rng);
        match verify_inverse(&spec, lo, hi) {
            Ok(r) => out.push(r),
            Err(Error::DivisionByZero) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Multiply `f` entries by `d_m/d_k` and `g` entries by `d_k/d_l` and report
/// whether the pair is still inverse on the window.
pub fn transfer_preserves<F: Field>(
    spec: &InversePairSpec<F>,
    d: &dyn Fn(&[i64]) -> F,
    lo: i64,
    hi: i64,
) -> Result<bool> {
    let pts = window(spec.n, lo, hi);
    for m in &pts {
        for l in &pts {
            if !ge(m, l) {
                continue;
            }
            let mut s = F::zero();
            for k in pts.iter().filter(|k| ge(m, k) && ge(k, l)) {
                let f = pair_entry(spec, Side::F, m, k)?.mul(&d(m)).try_div(&d(k))?;
                let g = pair_entry(spec, Side::G, k, l)?.mul(&d(k)).try_div(&d(l))?;
                s = s.add(&f.mul(&g));
            }
            let expect = if m == l { F::one() } else { F::zero() };
            if s != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Entries of the `b → ∞` limit of the `b`-extension pair (`product_det` when
/// `det_on_g`, `det_product` otherwise), after substituting `a ↦ a + b/a`,
/// `c ↦ c + b/c`.
pub fn substituted_limit_entry<F: Field>(
    spec: &InversePairSpec<F>,
    side: Side,
    row: &[i64],
    col: &[i64],
    det_on_g: bool,
) -> Result<F> {
    if !ge(row, col) {
        return Ok(F::zero());
    }
    let b = &spec.b;
    let mut sub = spec.clone();
    for tab in [&mut sub.a, &mut sub.c] {
        for r in tab.iter_mut() {
            for x in r.iter_mut() {
                *x = x.add(&b.try_div(x)?);
            }
        }
    }
    let lim = |s: &InversePairSpec<F>, lower_product: bool| -> Result<F> {
        // b → ∞: every factor (x − b/∏c) cancels against its partner.
        let n = s.n;
        let product_side = (side == Side::F) == lower_product;
        let k = if side == Side::F { col } else { row };
        if product_side {
            let mut acc = F::one();
            for i in 0..n {
                let (nlo, nhi, dlo, dhi) = if side == Side::F {
                    (col[i], row[i] - 1, col[i] + 1, row[i])
                } else {
                    (col[i] + 1, row[i], col[i], row[i] - 1)
                };
                let num = prod_range(nlo, nhi, |y| prod_minus_c(s, s.a(i, y)?, k))?;
                let den = prod_range(dlo, dhi, |y| prod_minus_c(s, s.c(i, y)?, k))?;
                acc = acc.mul(&num.try_div(&den)?);
            }
            Ok(acc)
        } else {
            let at = if side == Side::F { row } else { col };
            let mut acc = F::one();
            for i in 0..n {
                acc = acc.mul(s.c(i, k[i])?);
                for j in (i + 1)..n {
                    acc = acc.mul(&s.c(i, k[i])?.sub(s.c(j, k[j])?));
                }
            }
            acc = F::one().try_div(&acc)?;
            for i in 0..n {
                let (lo, hi) = if side == Side::F { (col[i] + 1, row[i]) } else { (col[i], row[i] - 1) };
                acc = acc.mul(&prod_range(lo, hi, |y| {
                    prod_minus_c(s, s.a(i, y)?, k)?.try_div(&prod_minus_c(s, s.c(i, y)?, k)?)
                })?);
            }
            let mut mat = Vec::with_capacity(n);
            for i in 0..n {
                let a = s.a(i, at[i])?;
                let c = s.c(i, at[i])?;
                let ratio = prod_minus_c(s, c, k)?.try_div(&prod_minus_c(s, a, k)?)?;
                mat.push(
                    (0..n)
                        .map(|j| {
                            let e = (n - j) as i64;
                            Ok(c.powi(e)?.sub(&a.powi(e)?.mul(&ratio)))
                        })
                        .collect::<Result<Vec<F>>>()?,
                );
            }
            Ok(acc.mul(&det(&mat)))
        }
    };
    lim(&sub, det_on_g)
}

/// True when the pair `(f₁, g₁)` equals `(f₂, g₂)` after a transfer: there is
/// `d` with `f₁_{mk} = f₂_{mk}·d_m/d_k` and `g₁_{kl} = g₂_{kl}·d_k/d_l` on the
/// window.  `d` is read off from the `f` column at the lowest index.
pub fn same_up_to_transfer<F: Field>(
    first: &dyn Fn(Side, &[i64], &[i64]) -> Result<F>,
    second: &dyn Fn(Side, &[i64], &[i64]) -> Result<F>,
    n: usize,
    lo: i64,
    hi: i64,
) -> Result<bool> {
    let pts = window(n, lo, hi);
    let base = vec![lo; n];
    let ratio = |side: Side, r: &[i64], c: &[i64]| -> Result<Option<F>> {
        let x = first(side, r, c)?;
        let y = second(side, r, c)?;
        match (x.is_zero(), y.is_zero()) {
            (true, true) => Ok(None),
            (false, false) => Ok(Some(x.try_div(&y)?)),
            _ => Err(Error::Consistency("zero pattern differs".into())),
        }
    };
    let mut d = HashMap::new();
    for m in &pts {
        match ratio(Side::F, m, &base) {
            Ok(Some(v)) => {
                d.insert(m.clone(), v);
            }
            // A vanishing column means degenerate parameters, not a mismatch.
            Ok(None) => return Err(Error::DivisionByZero),
            Err(Error::Consistency(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    for side in [Side::F, Side::G] {
        for r in &pts {
            for c in pts.iter().filter(|c| ge(r, c)) {
                let want = d[r].try_div(&d[c])?;
                match ratio(side, r, c) {
                    Ok(None) => {}
                    Ok(Some(v)) if v == want => {}
                    Ok(_) | Err(Error::Consistency(_)) => return Ok(false),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(true)
}

/// `det_product` specialized at `a_i(y) = q^y u_i / t_i`, `c_i(y) = q^y u_i`,
/// `b = t_0^{-1} ∏ u_j`, with tables on `[lo, hi]`.
pub fn bressoud_specialization<F: Field>(spec: &InversePairSpec<F>, lo: i64, hi: i64) -> Result<InversePairSpec<F>> {
    bressoud_check(spec)?;
    let n = spec.n;
    let mut a = Vec::with_capacity(n);
    let mut c = Vec::with_capacity(n);
    for i in 0..n {
        let mut ra = Vec::new();
        let mut rc = Vec::new();
        for y in lo..=hi {
            let cy = spec.q.powi(y)?.mul(&spec.u[i]);
            ra.push(cy.try_div(&spec.t[i + 1])?);
            rc.push(cy);
        }
        a.push(ra);
        c.push(rc);
    }
    let mut b = spec.t[0].try_inv()?;
    for u in &spec.u {
        b = b.mul(u);
    }
    Ok(InversePairSpec { family: PairFamily::DetProduct, n, lo, a, c, b, ..spec.clone() })
}

/// Checks `det_product f_{mk}(a, c) = product_det g_{−k,−m}(ã, c̃)` and
/// `det_product g_{kl}(a, c) = product_det f_{−l,−k}(ã, c̃)` with `ã(y) = a(−y)`.
pub fn negation_holds<F: Field>(spec: &InversePairSpec<F>, lo: i64, hi: i64) -> Result<bool> {
    let s32 = InversePairSpec { family: PairFamily::DetProduct, ..spec.clone() };
    let s31 = InversePairSpec { family: PairFamily::ProductDet, ..spec.negated() };
    let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
    let pts = window(spec.n, lo, hi);
    for r in &pts {
        for c in pts.iter().filter(|c| ge(r, c)) {
            if pair_entry(&s32, Side::F, r, c)? != pair_entry(&s31, Side::G, &neg(c), &neg(r))? {
                return Ok(false);
            }
            if pair_entry(&s32, Side::G, r, c)? != pair_entry(&s31, Side::F, &neg(c), &neg(r))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn one_dim_entries() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let spec = random_spec(PairFamily::Kratt1d, 1, -1, 4, &mut rng);
        let f = pair_entry(&spec, Side::F, &[2], &[1]).unwrap();
        let expect = (spec.a(0, 1).unwrap() - spec.c(0, 1).unwrap()) / (spec.c(0, 2).unwrap() - spec.c(0, 1).unwrap());
        assert_eq!(f, expect);
        assert_eq!(pair_entry(&spec, Side::F, &[1], &[2]).unwrap(), r(0));
        assert_eq!(pair_entry(&spec, Side::G, &[3], &[3]).unwrap(), r(1));
        assert!(pair_entry(&spec, Side::F, &[9], &[0]).is_err());
    }

    #[test]
    fn diagonals_are_one_for_product_sides() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let spec = random_spec(PairFamily::ProductDet, 2, -1, 3, &mut rng);
        assert_eq!(pair_entry(&spec, Side::F, &[1, 2], &[1, 2]).unwrap(), r(1));
    }

    #[test]
    fn small_windows_invert() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for fam in PairFamily::ALL {
            for n in 1..=fam.max_dim().unwrap_or(2) {
                for rep in verify_random(fam, n, 2, 0, 2, &mut rng).unwrap() {
                    assert!(rep.violations.is_empty(), "{fam:?} n={n}: {:?}", rep.violations.first());
                }
            }
        }
    }
}
