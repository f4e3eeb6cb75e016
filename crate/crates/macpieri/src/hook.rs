//! Hook partitions `(r, 1^s)`: Kerov's determinant in the `g_k`, the
//! composition sums for `Q_{(r,1^s)}` and `P_{(r,1^s)}`, the column case and
//! the two-term Pieri recurrence linking them.

use crate::arith::{qpoch_in, Field, RatFunc};
use crate::error::{Error, Result};
use crate::inverse_pieri::Side;
use crate::partitions::{enumerate_compositions, Composition, Partition};
use crate::symfunc::{multiply_in_basis, Basis, Family, SymFunc};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

fn q() -> RatFunc {
    RatFunc::q()
}

fn t() -> RatFunc {
    RatFunc::t()
}

fn qt(a: i64, b: i64) -> RatFunc {
    RatFunc::monomial(crate::arith::Vars::QT, &crate::arith::Rational::from_i64(1), a, b)
}

fn one() -> RatFunc {
    RatFunc::from_int(1)
}

fn g_basis() -> Basis {
    Basis::G(Family::Macdonald)
}

fn collect(basis: Basis, degree: usize, acc: HashMap<Partition, Vec<RatFunc>>) -> Result<SymFunc> {
    SymFunc::from_terms(basis, degree, acc.into_iter().map(|(k, v)| (k, RatFunc::sum_many(v))))
}

/// `Q_{(r,1^s)}` as the `(s+1)×(s+1)` determinant with entries
/// `(1 − q^{λ_i−i+j} t^{s−j+1}) / (1 − q^{λ_i} t^{s−i+1}) · g_{λ_i−i+j}`,
/// expanded over permutations (entries with a negative index vanish).
pub fn kerov_det(r: usize, s: usize) -> Result<SymFunc> {
    if r == 0 {
        return Err(Error::Parameter("a hook needs r ≥ 1".into()));
    }
    let size = s + 1;
    let lam = |i: usize| if i == 1 { r as i64 } else { 1 };
    let entry = |i: usize, j: usize| -> Result<Option<(i64, RatFunc)>> {
        let k = lam(i) - i as i64 + j as i64;
        if k < 0 {
            return Ok(None);
        }
        let num = one().sub(&qt(k, (s + 1 - j) as i64));
        let den = one().sub(&qt(lam(i), (s + 1 - i) as i64));
        Ok(Some((k, num.div(&den)?)))
    };
    let mut table = vec![vec![None; size + 1]; size + 1];
    for (i, row) in table.iter_mut().enumerate().skip(1) {
        for (j, cell) in row.iter_mut().enumerate().skip(1) {
            *cell = entry(i, j)?;
        }
    }
    let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
    let mut used = vec![false; size + 1];
    let mut idx = Vec::with_capacity(size);
    expand_rows(&table, 1, &mut used, &mut idx, one(), 1, &mut acc);
    collect(g_basis(), r + s, acc)
}

type Cell = Option<(i64, RatFunc)>;

fn expand_rows(
    table: &[Vec<Cell>],
    i: usize,
    used: &mut [bool],
    idx: &mut Vec<i64>,
    coeff: RatFunc,
    sign: i64,
    acc: &mut HashMap<Partition, Vec<RatFunc>>,
) {
    let size = table.len() - 1;
    if i > size {
        let key = Partition::from_unsorted(idx.iter().filter(|&&k| k > 0).map(|&k| k as usize).collect());
        acc.entry(key).or_default().push(coeff.scale_i64(sign));
        return;
    }
    for j in 1..=size {
        if used[j] {
            continue;
        }
        let Some((k, c)) = &table[i][j] else { continue };
        // sign of the permutation: count used columns to the right of j
        let crossings = used[j + 1..].iter().filter(|&&u| u).count() as i64;
        let s = if crossings % 2 == 0 { sign } else { -sign };
        used[j] = true;
        idx.push(*k);
        expand_rows(table, i + 1, used, idx, coeff.mul(c), s, acc);
        idx.pop();
        used[j] = false;
    }
}

/// One summand of a hook expansion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HookTerm {
    pub composition: Composition,
    pub coeff: RatFunc,
    /// Indices of the one-row factors (`g` or `e`), as a partition.
    pub index: Partition,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HookExpansion {
    pub lambda: Partition,
    pub side: Side,
    pub terms: Vec<HookTerm>,
}

impl HookExpansion {
    pub fn to_symfunc(&self) -> Result<SymFunc> {
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        for t in &self.terms {
            acc.entry(t.index.clone()).or_default().push(t.coeff.clone());
        }
        collect(self.side.factor_basis(), self.lambda.weight(), acc)
    }
}

fn index_of(parts: Vec<usize>) -> Partition {
    Partition::from_unsorted(parts.into_iter().filter(|&k| k > 0).collect())
}

/// `Q_{(r,1^s)}` over compositions of `s+1` (side `Q-g`) or
/// `P_{(r,1^s)}` over compositions of `r` (side `P-e`).
pub fn hook_expand(r: usize, s: usize, side: Side) -> Result<HookExpansion> {
    if r == 0 {
        return Err(Error::Parameter("a hook needs r ≥ 1".into()));
    }
    let (ri, si) = (r as i64, s as i64);
    let mut terms = Vec::new();
    match side {
        Side::QG => {
            let pre = qpoch_in(&t(), &t(), si)?.try_div(&qpoch_in(&q(), &t(), si)?)?.scale_i64(if s % 2 == 0 { 1 } else { -1 });
            let tail_den = one().sub(&qt(ri, si));
            for c in enumerate_compositions(s + 1) {
                let l = c.len();
                let mut coeff = pre.clone();
                let mut idx = Vec::with_capacity(l);
                for i in 1..l {
                    let ci = c.parts()[i - 1] as i64;
                    let num = qt(ci, c.partial_sum(i - 1) as i64).sub(&one());
                    coeff = coeff.mul(&num).div(&one().sub(&qt(0, c.partial_sum(i) as i64)))?;
                    idx.push(ci as usize);
                }
                let cl = c.parts()[l - 1] as i64;
                coeff = coeff.mul(&one().sub(&qt(ri + cl - 1, si - cl + 1))).div(&tail_den)?;
                idx.push((ri + cl - 1) as usize);
                terms.push(HookTerm { composition: c, coeff, index: index_of(idx) });
            }
        }
        Side::PE => {
            let m = r - 1;
            let pre = qpoch_in(&q(), &q(), m as i64)?.try_div(&qpoch_in(&t(), &q(), m as i64)?)?.scale_i64(if m % 2 == 0 { 1 } else { -1 });
            let tail_den = one().sub(&qt(ri - 1, si + 1));
            for c in enumerate_compositions(r) {
                let l = c.len();
                let mut coeff = pre.clone();
                let mut idx = Vec::with_capacity(l);
                for i in 1..l {
                    let ci = c.parts()[i - 1] as i64;
                    let num = qt(c.partial_sum(i - 1) as i64, ci).sub(&one());
                    coeff = coeff.mul(&num).div(&one().sub(&qt(c.partial_sum(i) as i64, 0)))?;
                    idx.push(ci as usize);
                }
                let cl = c.parts()[l - 1] as i64;
                coeff = coeff.mul(&one().sub(&qt(ri - cl, si + cl))).div(&tail_den)?;
                idx.push((si + cl) as usize);
                terms.push(HookTerm { composition: c, coeff, index: index_of(idx) });
            }
        }
        _ => return Err(Error::Parameter(format!("hook expansions exist for Q-g and P-e, not {}", side.name()))),
    }
    Ok(HookExpansion { lambda: Partition::hook(r, s), side, terms })
}

/// `Q_{1^n} = (−1)^n (t;t)_n/(q;t)_n Σ_{c ∈ C(n)} ∏ (q^{c_i} t^{[c_{i−1}]} − 1)/(1 − t^{[c_i]}) g_{c_i}`.
pub fn column_expand(n: usize) -> Result<HookExpansion> {
    if n == 0 {
        return Err(Error::Parameter("a column needs n ≥ 1".into()));
    }
    let ni = n as i64;
    let pre = qpoch_in(&t(), &t(), ni)?.try_div(&qpoch_in(&q(), &t(), ni)?)?.scale_i64(if n % 2 == 0 { 1 } else { -1 });
    let mut terms = Vec::new();
    for c in enumerate_compositions(n) {
        let mut coeff = pre.clone();
        for i in 1..=c.len() {
            let ci = c.parts()[i - 1] as i64;
            let num = qt(ci, c.partial_sum(i - 1) as i64).sub(&one());
            coeff = coeff.mul(&num).div(&one().sub(&qt(0, c.partial_sum(i) as i64)))?;
        }
        let index = index_of(c.parts().to_vec());
        terms.push(HookTerm { composition: c, coeff, index });
    }
    Ok(HookExpansion { lambda: Partition::column(n), side: Side::QG, terms })
}

/// Coefficient of `Q_{(r+1,1^{s−1})}` in `Q_{1^s} Q_{(r)}`.
pub fn hook_pieri_coeff(r: usize, s: usize) -> Result<RatFunc> {
    let (ri, si) = (r as i64, s as i64);
    let a = one().sub(&qt(0, si)).div(&one().sub(&qt(1, si - 1)))?;
    let b = one().sub(&qt(ri + 1, si - 1)).div(&one().sub(&qt(ri, si)))?;
    Ok(a.mul(&b))
}

/// `Q_{1^s} Q_{(r)} − A Q_{(r+1,1^{s−1})} − Q_{(r,1^s)}` in the `g` basis, each hook
/// taken from [`hook_expand`]; zero when the recurrence closes.
pub fn hook_recurrence_residual(r: usize, s: usize) -> Result<SymFunc> {
    if r == 0 || s == 0 {
        return Err(Error::Parameter("the recurrence needs r, s ≥ 1".into()));
    }
    let col = column_expand(s)?.to_symfunc()?;
    let row = SymFunc::basis_element(g_basis(), Partition::row(r));
    let lhs = multiply_in_basis(&col, &row)?;
    let up = hook_expand(r + 1, s - 1, Side::QG)?.to_symfunc()?.scale(&hook_pieri_coeff(r, s)?);
    let same = hook_expand(r, s, Side::QG)?.to_symfunc()?;
    lhs.sub(&up)?.sub(&same)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row() {
        for r in 1..=4 {
            let k = kerov_det(r, 0).unwrap();
            assert_eq!(k, SymFunc::basis_element(g_basis(), Partition::row(r)).with_degree_bound(r).unwrap());
            let h = hook_expand(r, 0, Side::QG).unwrap();
            assert_eq!(h.terms.len(), 1);
            assert_eq!(h.terms[0].coeff, one());
        }
    }

    #[test]
    fn two_by_two() {
        // g_1² − (1−q²)(1−t)/((1−qt)(1−q)) g_2
        let k = kerov_det(1, 1).unwrap();
        assert_eq!(k.coeff(&Partition::new(vec![1, 1]).unwrap()), one());
        let c: RatFunc = "-(1+q)(1-t)/(1-q*t)".parse().unwrap();
        assert_eq!(k.coeff(&Partition::row(2)), c);
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn column_of_one() {
        let c = column_expand(1).unwrap();
        assert_eq!(c.terms.len(), 1);
        assert_eq!(c.terms[0].coeff, one());
    }

    #[test]
    fn term_counts() {
        for r in 1..=4 {
            for s in 0..=4 {
                assert_eq!(hook_expand(r, s, Side::QG).unwrap().terms.len(), 1 << s);
                assert_eq!(hook_expand(r, s, Side::PE).unwrap().terms.len(), 1 << (r - 1));
            }
        }
        assert!(hook_expand(0, 1, Side::QG).is_err());
        assert!(hook_expand(1, 1, Side::Hl).is_err());
    }
}
