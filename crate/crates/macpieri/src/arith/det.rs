//! Exact determinants.

use super::field::Field;
use super::poly::MultiPoly;
use super::ratfunc::RatFunc;

/// Determinant of a square matrix of rational functions: each row is cleared
/// to a common denominator, then fraction-free (Bareiss) elimination runs on
/// the polynomial matrix.
pub fn ratfunc_det(m: &[Vec<RatFunc>]) -> RatFunc {
    let n = m.len();
    assert!(n >= 1 && m.iter().all(|r| r.len() == n), "square matrix required");
    let mut den_total = RatFunc::from_int(1);
    let mut a: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    for row in m {
        let mut l = row[0].denom().clone();
        for x in &row[1..] {
            let d = x.denom();
            let g = l.gcd(d);
            l = l.mul(&d.div_exact(&g).unwrap());
        }
        let prow: Vec<MultiPoly> =
            row.iter().map(|x| x.numer().mul(&l.div_exact(x.denom()).unwrap())).collect();
        den_total = den_total.mul(&RatFunc::from_poly(l));
        a.push(prow);
    }
    let vars = a[0][0].vars();
    let mut sign = false;
    let mut prev = MultiPoly::one(vars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return RatFunc::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = RatFunc::from_poly(a[n - 1][n - 1].clone());
    let d = if sign { d.neg() } else { d };
    d.div(&den_total).expect("nonzero denominators")
}

/// Determinant over any field by Gaussian elimination.
pub fn det<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix required");
    if n == 0 {
        return F::one();
    }
    let mut a = m.to_vec();
    let mut acc = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return F::zero();
        };
        if p != k {
            a.swap(p, k);
            acc = acc.neg();
        }
        let piv = a[k][k].clone();
        acc = acc.mul(&piv);
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].try_div(&piv).expect("nonzero pivot");
            for j in k..n {
                let v = a[i][j].sub(&f.mul(&a[k][j]));
                a[i][j] = v;
            }
        }
    }
    acc
}

/// Laplace expansion along the first row (reference implementation).
pub fn det_cofactor<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    if n == 0 {
        return F::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = F::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<F>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = m[0][j].mul(&det_cofactor(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one_and_vandermonde() {
        let r = RatFunc::q().div(&RatFunc::t()).unwrap();
        assert_eq!(ratfunc_det(&[vec![r.clone()]]), r);
        let one = RatFunc::from_int(1);
        let m = vec![vec![one.clone(), RatFunc::q()], vec![one.clone(), RatFunc::t()]];
        assert_eq!(ratfunc_det(&m), RatFunc::t().sub(&RatFunc::q()));
    }

    #[test]
    fn singular() {
        let one = RatFunc::from_int(1);
        let a = one.div(&one.sub(&RatFunc::q())).unwrap();
        let m = vec![vec![a, one.clone()], vec![one.clone(), one.sub(&RatFunc::q())]];
        assert_eq!(ratfunc_det(&m), RatFunc::zero());
        assert_eq!(det(&m), RatFunc::zero());
    }
}
