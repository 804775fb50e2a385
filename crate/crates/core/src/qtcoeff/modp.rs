//! Arithmetic modulo word-sized primes below `2^32`.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_traits::Zero;

/// Dense polynomial over `Z/p`, ascending, trimmed.
pub type PolyP = Vec<u64>;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 61] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // Bases 2, 7, 61 are deterministic below 4_759_123_141.
    'witness: for a in [2u64, 7, 61] {
        let mut x = pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `i`-th largest prime below `2^32`.
pub fn prime(i: usize) -> u64 {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    let list = PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(512);
        let mut n: u64 = (1u64 << 32) - 1;
        while out.len() < 512 {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    });
    list[i]
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

pub fn reduce(c: &BigInt, p: u64) -> u64 {
    let mut r: u64 = 0;
    let digits: Vec<u32> = c.magnitude().iter_u32_digits().collect();
    for d in digits.iter().rev() {
        r = ((r << 32) | *d as u64) % p;
    }
    if c.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

pub fn reduce_poly(c: &[BigInt], p: u64) -> PolyP {
    let mut out: PolyP = c.iter().map(|x| reduce(x, p)).collect();
    trim(&mut out);
    out
}

pub fn trim(a: &mut PolyP) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0;
    for c in a.iter().rev() {
        acc = add(mul(acc, x, p), *c, p);
    }
    acc
}

pub fn make_monic(a: &mut PolyP, p: u64) {
    if let Some(&lead) = a.last() {
        let li = inv(lead, p);
        for c in a.iter_mut() {
            *c = mul(*c, li, p);
        }
    }
}

/// `a mod b` in place; `b` nonzero.
fn rem_assign(a: &mut PolyP, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let li = inv(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let c = mul(a[top], li, p);
        if c != 0 {
            let shift = top - db;
            for (i, bi) in b.iter().enumerate() {
                a[shift + i] = sub(a[shift + i], mul(c, *bi, p), p);
            }
        }
        a.pop();
        trim(a);
    }
}

/// Monic gcd; zero when both inputs are zero.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let mut x: PolyP = a.to_vec();
    let mut y: PolyP = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        rem_assign(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    make_monic(&mut x, p);
    x
}

/// Interpolates values `ys` at distinct points `xs`, returning ascending
/// coefficients of the unique polynomial of degree `< xs.len()`.
pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> PolyP {
    let n = xs.len();
    // Divided differences.
    let mut coef: Vec<u64> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = sub(coef[i], coef[i - 1], p);
            let den = sub(xs[i], xs[i - j], p);
            coef[i] = mul(num, inv(den, p), p);
        }
    }
    // Expand the Newton form by Horner.
    let mut out: PolyP = vec![0; n];
    for i in (0..n).rev() {
        // out = out * (t - xs[i]) + coef[i]
        let len = n - 1 - i;
        let mut next = vec![0u64; len + 1];
        for k in 0..len {
            next[k + 1] = add(next[k + 1], out[k], p);
            next[k] = sub(next[k], mul(out[k], xs[i], p), p);
        }
        next[0] = add(next[0], coef[i], p);
        out[..=len].copy_from_slice(&next);
    }
    trim(&mut out);
    out
}

/// Chinese remaindering of `h mod m` with `g mod p`, returning a residue in
/// `[0, m p)`.
pub fn crt(h: &BigInt, m: &BigInt, g: u64, p: u64) -> BigInt {
    let hp = reduce(h, p);
    let mp = reduce(m, p);
    let k = mul(sub(g, hp, p), inv(mp, p), p);
    if k == 0 {
        h.clone()
    } else {
        h + m * BigInt::from(k)
    }
}

/// Representative in `(-m/2, m/2]`.
pub fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
    let half: BigInt = m >> 1;
    if x > &half {
        x - m
    } else if x.is_zero() {
        BigInt::zero()
    } else {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_descending_and_below_word() {
        assert_eq!(prime(0), 4294967291);
        assert_eq!(prime(1), 4294967279);
        assert!(prime(10) < prime(9));
        assert!(is_prime(prime(100)));
        assert!(!is_prime(4294967297));
    }

    #[test]
    fn reduce_handles_sign_and_size() {
        let p = prime(0);
        let big: BigInt = BigInt::from(p) * BigInt::from(p) + 5;
        assert_eq!(reduce(&big, p), 5);
        assert_eq!(reduce(&BigInt::from(-1), p), p - 1);
    }

    #[test]
    fn gcd_and_interpolation_mod_p() {
        let p = 101;
        // (x-1)(x-2) and (x-1)(x+3)
        let a = vec![2, p - 3, 1];
        let b = vec![p - 3, 2, 1];
        assert_eq!(gcd(&a, &b, p), vec![p - 1, 1]);
        let xs = [1, 2, 3];
        let ys: Vec<u64> = xs.iter().map(|&x| eval(&a, x, p)).collect();
        assert_eq!(interpolate(&xs, &ys, p), a);
    }

    #[test]
    fn crt_recovers_negative_values() {
        let p1 = prime(0);
        let p2 = prime(1);
        let target = BigInt::from(-123456789012345678i64);
        let h = BigInt::from(reduce(&target, p1));
        let m = BigInt::from(p1);
        let x = crt(&h, &m, reduce(&target, p2), p2);
        assert_eq!(symmetric(&x, &(m * BigInt::from(p2))), target);
    }
}
