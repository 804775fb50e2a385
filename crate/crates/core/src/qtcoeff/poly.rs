use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense;

/// Exponent pair of a monomial `q^q t^t`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Mono {
    pub q: u32,
    pub t: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, t: 0 };

    pub fn new(q: u32, t: u32) -> Self {
        Mono { q, t }
    }

    pub fn degree(self) -> u32 {
        self.q + self.t
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Mono) -> Mono {
        Mono::new(self.q + other.q, self.t + other.t)
    }

    pub fn divides(self, other: Mono) -> bool {
        self.q <= other.q && self.t <= other.t
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(self, other: Mono) -> Mono {
        debug_assert!(other.divides(self));
        Mono::new(self.q - other.q, self.t - other.t)
    }

    pub fn min(self, other: Mono) -> Mono {
        Mono::new(self.q.min(other.q), self.t.min(other.t))
    }
}

/// Graded lexicographic order with `q > t`.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.q).cmp(&(other.degree(), other.q))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `q, t` with integer coefficients.
///
/// Terms are kept sorted by decreasing graded-lex monomial and no stored
/// coefficient is zero, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QtPoly {
    terms: Vec<(Mono, BigInt)>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, q: u32, t: u32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            QtPoly {
                terms: vec![(Mono::new(q, t), c)],
            }
        }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(coefficient, q-exponent, t-exponent)` triples,
    /// merging repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, u32, u32)>,
        C: Into<BigInt>,
    {
        let mut acc: HashMap<Mono, BigInt> = HashMap::new();
        for (c, q, t) in terms {
            *acc.entry(Mono::new(q, t)).or_default() += c.into();
        }
        Self::from_map(acc)
    }

    fn from_map(map: HashMap<Mono, BigInt>) -> Self {
        let mut terms: Vec<(Mono, BigInt)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        QtPoly { terms }
    }

    /// Terms sorted by decreasing graded-lex order.
    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == Mono::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, q: u32, t: u32) -> BigInt {
        let m = Mono::new(q, t);
        self.terms
            .binary_search_by(|(x, _)| m.cmp(x))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.q).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.t).max().unwrap_or(0)
    }

    /// Largest monomial dividing every term.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter().map(|(m, _)| *m);
        match it.next() {
            None => Mono::ONE,
            Some(first) => it.fold(first, Mono::min),
        }
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn neg(&self) -> Self {
        QtPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((*m, if negate { -c } else { c.clone() }));
        }
        QtPoly { terms: out }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QtPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Divides by a monomial that is known to divide every term.
    pub fn div_mono(&self, m: Mono) -> Self {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.div(m), c.clone()))
                .collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        QtPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x / c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return other.mul_mono(*m).scale(c);
        }
        if other.is_monomial() {
            let (m, c) = &other.terms[0];
            return self.mul_mono(*m).scale(c);
        }
        let lo = self.min_mono().mul(other.min_mono());
        let hq = self.degree_q() + other.degree_q();
        let ht = self.degree_t() + other.degree_t();
        let wq = (hq - lo.q + 1) as usize;
        let wt = (ht - lo.t + 1) as usize;
        let pairs = self.terms.len() * other.terms.len();
        if wq * wt <= 4 * pairs + 256 {
            let mut grid = vec![BigInt::zero(); wq * wt];
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    let m = ma.mul(*mb);
                    grid[(m.q - lo.q) as usize * wt + (m.t - lo.t) as usize] += ca * cb;
                }
            }
            let mut terms = Vec::new();
            for (idx, c) in grid.into_iter().enumerate() {
                if !c.is_zero() {
                    let m = Mono::new(lo.q + (idx / wt) as u32, lo.t + (idx % wt) as u32);
                    terms.push((m, c));
                }
            }
            terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
            QtPoly { terms }
        } else {
            let mut acc: HashMap<Mono, BigInt> = HashMap::with_capacity(pairs);
            for (ma, cb_a) in &self.terms {
                for (mb, cb_b) in &other.terms {
                    *acc.entry(ma.mul(*mb)).or_default() += cb_a * cb_b;
                }
            }
            Self::from_map(acc)
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `q -> q^k`, `t -> t^k`.
    pub fn substitute_powers(&self, k: u32) -> Self {
        // Scaling every exponent by k > 0 preserves the graded-lex order.
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono::new(m.q * k, m.t * k), c.clone()))
                .collect(),
        }
    }

    /// `q -> t`, `t -> q`.
    pub fn swap_variables(&self) -> Self {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (Mono::new(m.t, m.q), c.clone()))
            .collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        QtPoly { terms }
    }

    /// `q^{dq} t^{dt} p(1/q, 1/t)` with `dq, dt` the degrees of `p`.
    pub fn reversal(&self) -> (Self, Mono) {
        let dq = self.degree_q();
        let dt = self.degree_t();
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (Mono::new(dq - m.q, dt - m.t), c.clone()))
            .collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        (QtPoly { terms }, Mono::new(dq, dt))
    }

    pub fn evaluate(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        let dq = self.degree_q() as usize;
        let dt = self.degree_t() as usize;
        let qp = powers(q0, dq);
        let tp = powers(t0, dt);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += &qp[m.q as usize] * &tp[m.t as usize] * BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if other.is_monomial() {
            let (m, c) = &other.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (x, a) in &self.terms {
                if !m.divides(*x) {
                    return None;
                }
                let (quo, rem) = a.div_rem(c);
                if !rem.is_zero() {
                    return None;
                }
                terms.push((x.div(*m), quo));
            }
            return Some(QtPoly { terms });
        }
        let ma = self.min_mono();
        let mb = other.min_mono();
        if !mb.divides(ma) {
            return None;
        }
        if self.degree_q() < other.degree_q() || self.degree_t() < other.degree_t() {
            return None;
        }
        let a = dense::to_tq(&self.div_mono(ma));
        let b = dense::to_tq(&other.div_mono(mb));
        let quo = dense::bivariate_div_exact(&a, &b)?;
        Some(dense::from_tq(&quo).mul_mono(ma.div(mb)))
    }

    /// Leading coefficient sign normalisation: returns `-self` when the
    /// graded-lex leading coefficient is negative.
    pub fn with_positive_lead(self) -> Self {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    pub(crate) fn from_sorted_terms(terms: Vec<(Mono, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        QtPoly { terms }
    }
}

fn powers(x: &BigRational, n: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigRational::one());
    for i in 0..n {
        let next = &out[i] * x;
        out.push(next);
    }
    out
}
