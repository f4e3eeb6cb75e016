//! Word-size prime field helpers used by the modular GCD.

use num_bigint::{BigInt, Sign};
use std::sync::OnceLock;

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub(crate) fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub(crate) fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending list of primes just below 2^62.
pub(crate) fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut v = Vec::with_capacity(256);
        let mut n = (1u64 << 62) - 1;
        while v.len() < 256 {
            if is_prime(n) {
                v.push(n);
            }
            n -= 2;
        }
        v
    })
}

/// Residue of a big integer modulo `p`, in `[0, p)`.
pub(crate) fn big_mod(x: &BigInt, p: u64) -> u64 {
    let mut r: u128 = 0;
    let digits: Vec<u64> = x.magnitude().iter_u64_digits().collect();
    for d in digits.iter().rev() {
        r = ((r << 64) | *d as u128) % p as u128;
    }
    let r = r as u64;
    if x.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

// ---- dense univariate polynomials over Z/p, lowest degree first ----

pub(crate) fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    let mut r = 0u64;
    for c in a.iter().rev() {
        r = addmod(mulmod(r, x, p), *c, p);
    }
    r
}

/// Remainder of `a` modulo `b` (b nonzero), in place.
fn rem_in_place(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = invmod(b[db], p);
    while a.len() > db && !a.is_empty() {
        let da = a.len() - 1;
        let c = mulmod(a[da], inv, p);
        if c != 0 {
            let shift = da - db;
            for (i, bc) in b.iter().enumerate() {
                let t = mulmod(c, *bc, p);
                a[shift + i] = submod(a[shift + i], t, p);
            }
        }
        a.pop();
        trim(a);
    }
}

/// Monic gcd over Z/p.  Returns an empty vector only when both inputs are zero.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        rem_in_place(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    if let Some(&lc) = x.last() {
        let inv = invmod(lc, p);
        for c in x.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    x
}

/// Incremental Newton interpolation of a vector of polynomials in one variable.
pub(crate) struct Newton {
    p: u64,
    /// running product of (x - a_k)
    w: Vec<u64>,
    pub(crate) coeffs: Vec<Vec<u64>>,
    pub(crate) points: usize,
}

impl Newton {
    pub(crate) fn new(width: usize, p: u64) -> Self {
        Newton { p, w: vec![1], coeffs: vec![Vec::new(); width], points: 0 }
    }

    pub(crate) fn add_point(&mut self, x: u64, values: &[u64]) {
        let p = self.p;
        let wx = eval(&self.w, x, p);
        let winv = invmod(wx, p);
        for (h, v) in self.coeffs.iter_mut().zip(values) {
            let cur = eval(h, x, p);
            let c = mulmod(submod(*v, cur, p), winv, p);
            if c != 0 {
                if h.len() < self.w.len() {
                    h.resize(self.w.len(), 0);
                }
                for (i, wc) in self.w.iter().enumerate() {
                    h[i] = addmod(h[i], mulmod(c, *wc, p), p);
                }
                trim(h);
            }
        }
        // w *= (x - a)
        let mut nw = vec![0u64; self.w.len() + 1];
        for (i, wc) in self.w.iter().enumerate() {
            nw[i + 1] = addmod(nw[i + 1], *wc, p);
            nw[i] = submod(nw[i], mulmod(*wc, x, p), p);
        }
        self.w = nw;
        self.points += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime_and_distinct() {
        let ps = primes();
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|&p| is_prime(p)));
    }

    #[test]
    fn gcd_mod_p() {
        let p = primes()[0];
        // (x+1)(x+2) and (x+1)(x+3)
        let a = vec![2, 3, 1];
        let b = vec![3, 4, 1];
        assert_eq!(gcd(&a, &b, p), vec![1, 1]);
    }

    #[test]
    fn big_mod_negative() {
        let p = 97;
        assert_eq!(big_mod(&BigInt::from(-1), p), 96);
        assert_eq!(big_mod(&BigInt::from(200), p), 6);
    }

    #[test]
    fn newton_recovers_polynomial() {
        let p = primes()[1];
        let f = |x: u64| addmod(mulmod(3, mulmod(x, x, p), p), 5, p);
        let mut n = Newton::new(1, p);
        for x in 1..=3 {
            n.add_point(x, &[f(x)]);
        }
        assert_eq!(n.coeffs[0], vec![5, 0, 3]);
    }
}
