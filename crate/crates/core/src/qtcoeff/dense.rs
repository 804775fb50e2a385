//! Dense helpers: univariate polynomials over Z in `t` and polynomials in `q`
//! with `Z[t]` coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Mono, QtPoly};

/// Ascending coefficients, trimmed of trailing zeros; empty means zero.
pub type UPoly = Vec<BigInt>;

pub fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut out: UPoly = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// `r[shift..] -= c * b`.
fn sub_mul_assign(r: &mut UPoly, c: &BigInt, b: &[BigInt], shift: usize) {
    if r.len() < b.len() + shift {
        r.resize(b.len() + shift, BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        if !y.is_zero() {
            r[i + shift] -= c * y;
        }
    }
}

/// Nonnegative gcd of the coefficients.
pub fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn div_scalar(p: &[BigInt], c: &BigInt) -> UPoly {
    p.iter().map(|x| x / c).collect()
}

pub fn scale(p: &[BigInt], c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|x| x * c).collect()
}

/// Exact quotient in `Z[t]`, or `None` if `b` does not divide `a`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lead = &b[db];
    let mut r: UPoly = a.to_vec();
    let mut quo = vec![BigInt::zero(); a.len() - db];
    for k in (0..quo.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lead);
        if !rem.is_zero() {
            return None;
        }
        sub_mul_assign(&mut r, &c, b, k);
        quo[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quo);
    Some(quo)
}

/// Index `i` holds the `Z[t]` coefficient of `q^i`.
pub fn to_tq(p: &QtPoly) -> Vec<UPoly> {
    let dq = p.degree_q() as usize;
    let mut out: Vec<UPoly> = vec![Vec::new(); dq + 1];
    for (m, c) in p.terms() {
        let row = &mut out[m.q as usize];
        if row.len() <= m.t as usize {
            row.resize(m.t as usize + 1, BigInt::zero());
        }
        row[m.t as usize] = c.clone();
    }
    if p.is_zero() {
        out.clear();
    }
    out
}

pub fn from_tq(p: &[UPoly]) -> QtPoly {
    let mut terms = Vec::new();
    for (i, row) in p.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push((Mono::new(i as u32, j as u32), c.clone()));
            }
        }
    }
    terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
    QtPoly::from_sorted_terms(terms)
}

/// `q`-polynomial with `t`-coefficients, zero-trimmed at the top.
pub fn trim_tq(p: &mut Vec<UPoly>) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

/// Exact division in `Z[t][q]`.
pub fn bivariate_div_exact(a: &[UPoly], b: &[UPoly]) -> Option<Vec<UPoly>> {
    let mut b = b.to_vec();
    trim_tq(&mut b);
    if b.is_empty() {
        return None;
    }
    let mut r = a.to_vec();
    trim_tq(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quo: Vec<UPoly> = vec![Vec::new(); r.len() - db];
    for k in (0..quo.len()).rev() {
        if r[k + db].is_empty() {
            continue;
        }
        let c = div_exact(&r[k + db], &lead)?;
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_empty() {
                let prod = mul(&c, bi);
                r[k + i] = sub(&r[k + i], &prod);
            }
        }
        quo[k] = c;
    }
    if r.iter().any(|c| !c.is_empty()) {
        return None;
    }
    trim_tq(&mut quo);
    Some(quo)
}

/// Makes the leading coefficient positive.
pub fn normalize_sign(p: &mut UPoly) {
    if p.last().is_some_and(|c| c.is_negative()) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: &[i64]) -> UPoly {
        let mut p: UPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn univariate_exact_division() {
        let a = u(&[-1, 0, 1]);
        let b = u(&[1, 1]);
        assert_eq!(div_exact(&a, &b), Some(u(&[-1, 1])));
        assert_eq!(div_exact(&u(&[1, 0, 1]), &b), None);
        assert_eq!(div_exact(&u(&[1, 1]), &u(&[2])), None);
    }

    #[test]
    fn tq_round_trip() {
        let p = QtPoly::from_terms([(3, 2, 1), (-1, 0, 4), (5, 0, 0)]);
        assert_eq!(from_tq(&to_tq(&p)), p);
        assert!(to_tq(&QtPoly::zero()).is_empty());
    }
}
