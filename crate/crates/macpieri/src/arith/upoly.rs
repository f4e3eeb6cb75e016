//! Dense univariate polynomials over Z (lowest degree first), used as the
//! coefficient ring of the bivariate layer.

use super::zp;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type UPoly = Vec<BigInt>;

pub(crate) fn trim(a: &mut UPoly) {
    while a.last().map_or(false, |c| c.is_zero()) {
        a.pop();
    }
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

pub(crate) fn scale_div(a: &[BigInt], d: &BigInt) -> UPoly {
    a.iter().map(|c| c / d).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if let (Some(sa), Some(sb)) = (small(a), small(b)) {
        let bound = (max_abs(&sa) as u128) * (max_abs(&sb) as u128) * (a.len().min(b.len()) as u128);
        if bound < (1u128 << 126) {
            let mut acc = vec![0i128; a.len() + b.len() - 1];
            for (i, x) in sa.iter().enumerate() {
                if *x == 0 {
                    continue;
                }
                for (j, y) in sb.iter().enumerate() {
                    acc[i + j] += (*x as i128) * (*y as i128);
                }
            }
            let mut r: UPoly = acc.into_iter().map(BigInt::from).collect();
            trim(&mut r);
            return r;
        }
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                r[i + j] += x * y;
            }
        }
    }
    trim(&mut r);
    r
}

pub(crate) fn small(a: &[BigInt]) -> Option<Vec<i64>> {
    a.iter().map(|c| i64::try_from(c).ok()).collect()
}

pub(crate) fn max_abs(a: &[i64]) -> u64 {
    a.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
}

pub(crate) fn add_assign(a: &mut UPoly, b: &[BigInt]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    trim(a);
}

pub(crate) fn sub_assign(a: &mut UPoly, b: &[BigInt]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
    trim(a);
}

/// Exact quotient `a / b` over Z, or `None` if `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                r[shift + i] -= &c * bc;
            }
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

fn lowest_order(a: &[BigInt]) -> usize {
    a.iter().position(|c| !c.is_zero()).unwrap_or(0)
}

/// Normalize sign so the leading coefficient is positive.
pub(crate) fn normalize_sign(mut a: UPoly) -> UPoly {
    if a.last().map_or(false, |c| c.is_negative()) {
        for c in a.iter_mut() {
            *c = -&*c;
        }
    }
    a
}

/// gcd over Z with positive leading coefficient (modular algorithm, verified
/// by trial division).
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return normalize_sign(b.to_vec());
    }
    if b.is_empty() {
        return normalize_sign(a.to_vec());
    }
    let ord = lowest_order(a).min(lowest_order(b));
    let ca = content(a);
    let cb = content(b);
    let c = ca.gcd(&cb);
    let a1: UPoly = a[lowest_order(a)..].iter().map(|x| x / &ca).collect();
    let b1: UPoly = b[lowest_order(b)..].iter().map(|x| x / &cb).collect();
    let mut g = if a1.len() == 1 || b1.len() == 1 {
        vec![BigInt::one()]
    } else {
        gcd_primitive(&a1, &b1).unwrap_or_else(|| gcd_prs_primitive(&a1, &b1))
    };
    for x in g.iter_mut() {
        *x *= &c;
    }
    let mut r = vec![BigInt::zero(); ord];
    r.extend(g);
    normalize_sign(r)
}

/// Modular gcd of primitive polynomials with nonzero constant terms.
fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    let gamma = a.last().unwrap().gcd(b.last().unwrap());
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = Vec::new();
    let mut deg = usize::MAX;
    for &p in zp::primes().iter().take(64) {
        let la = zp::big_mod(a.last().unwrap(), p);
        let lb = zp::big_mod(b.last().unwrap(), p);
        if la == 0 || lb == 0 {
            continue;
        }
        let ap: Vec<u64> = a.iter().map(|c| zp::big_mod(c, p)).collect();
        let bp: Vec<u64> = b.iter().map(|c| zp::big_mod(c, p)).collect();
        let mut g = zp::gcd(&ap, &bp, p);
        let d = g.len() - 1;
        if d == 0 {
            return Some(vec![BigInt::one()]);
        }
        if d > deg {
            continue;
        }
        let gm = zp::big_mod(&gamma, p);
        for c in g.iter_mut() {
            *c = zp::mulmod(*c, gm, p);
        }
        if d < deg {
            deg = d;
            modulus = BigInt::one();
            acc = vec![BigInt::zero(); d + 1];
        }
        crt_combine(&mut acc, &modulus, &g, p);
        modulus *= p;
        let cand = symmetric(&acc, &modulus);
        let cc = content(&cand);
        let cand: UPoly = cand.iter().map(|x| x / &cc).collect();
        if div_exact(a, &cand).is_some() && div_exact(b, &cand).is_some() {
            return Some(normalize_sign(cand));
        }
    }
    None
}

pub(crate) fn crt_combine(acc: &mut [BigInt], modulus: &BigInt, image: &[u64], p: u64) {
    let mm = zp::big_mod(modulus, p);
    let inv = zp::invmod(mm, p);
    for (x, &v) in acc.iter_mut().zip(image.iter().chain(std::iter::repeat(&0))) {
        let cur = zp::big_mod(x, p);
        let k = zp::mulmod(zp::submod(v, cur, p), inv, p);
        if k != 0 {
            *x += modulus * BigInt::from(k);
        }
    }
}

pub(crate) fn symmetric(acc: &[BigInt], modulus: &BigInt) -> UPoly {
    let half: BigInt = modulus >> 1;
    let mut r: UPoly = acc
        .iter()
        .map(|x| if x > &half { x - modulus } else { x.clone() })
        .collect();
    trim(&mut r);
    r
}

/// Pseudo-remainder of `a` by `b`.
pub(crate) fn prem(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let c = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Primitive polynomial remainder sequence gcd of primitive inputs.
pub(crate) fn gcd_prs_primitive(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let (mut x, mut y) = if a.len() >= b.len() { (a.to_vec(), b.to_vec()) } else { (b.to_vec(), a.to_vec()) };
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = if r.is_empty() {
            r
        } else {
            let c = content(&r);
            r.iter().map(|v| v / &c).collect()
        };
    }
    normalize_sign(x)
}

/// Reference gcd: content gcd times primitive PRS gcd.
pub(crate) fn gcd_prs(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return normalize_sign(b.to_vec());
    }
    if b.is_empty() {
        return normalize_sign(a.to_vec());
    }
    let ca = content(a);
    let cb = content(b);
    let c = ca.gcd(&cb);
    let a1 = scale_div(a, &ca);
    let b1 = scale_div(b, &cb);
    let g = gcd_prs_primitive(&a1, &b1);
    normalize_sign(g.iter().map(|x| x * &c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly {
        let mut r: UPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut r);
        r
    }

    #[test]
    fn gcd_matches_prs() {
        // (1+x)^2 (2 - x) and (1+x)(3x + 4)*6
        let a = mul(&mul(&p(&[1, 1]), &p(&[1, 1])), &p(&[2, -1]));
        let b = mul(&mul(&p(&[1, 1]), &p(&[4, 3])), &p(&[6]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd_prs(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn gcd_with_monomial_factor() {
        let a = p(&[0, 0, 2, 2]);
        let b = p(&[0, 4, 4]);
        assert_eq!(gcd(&a, &b), p(&[0, 2, 2]));
    }

    #[test]
    fn exact_division() {
        let a = mul(&p(&[1, -1]), &p(&[3, 0, 1]));
        assert_eq!(div_exact(&a, &p(&[1, -1])), Some(p(&[3, 0, 1])));
        assert_eq!(div_exact(&a, &p(&[1, 2])), None);
    }
}
