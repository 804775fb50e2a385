//! The operators `Q_{m,n}`: split decomposition, expansion into words in the
//! generators `T_a = Q_{a,1}` and `D_0 = Q_{1,0}`, and their action on `HExp`.

mod constant;
mod symbol;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use parking_lot::RwLock;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hspace::{hmu_monomial, to_hbasis, HExp};
use crate::qtcoeff::QtScalar;
use crate::shapes::{stats, Partition};
use crate::symfun::{scalar_plethysm, Alphabet, SymFun};

pub use constant::q_const;
pub use symbol::{symbol, word_symbol, MultiPoly};

/// Lattice index `(m, n)` of `Q_{m,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QIndex {
    pub m: i64,
    pub n: i64,
}

impl QIndex {
    pub fn new(m: i64, n: i64) -> Self {
        QIndex { m, n }
    }
}

impl fmt::Display for QIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{},{}]", self.m, self.n)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

/// `(m, n) = (a, b) + (c, d)` with `a d - b c = 1`, `0 <= a <= m`, `0 <= b <= n`.
pub fn split(m: i64, n: i64) -> Result<((i64, i64), (i64, i64))> {
    if m < 1 || n < 1 || gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    for b in 0..=n {
        if (1 + b * m) % n == 0 {
            let a = (1 + b * m) / n;
            if a <= m {
                return Ok(((a, b), (m - a, n - b)));
            }
        }
    }
    unreachable!("a coprime pair always splits")
}

/// Generator symbols of an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    /// `T_a = Q_{a,1} = -nabla^a e_1 nabla^{-a}`.
    T(u32),
    /// `D_0 = Q_{1,0}`.
    D0,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::T(a) => write!(f, "T{a}"),
            Gen::D0 => f.write_str("D0"),
        }
    }
}

/// A linear combination of generator sequences; each sequence acts from the
/// right, and the empty sequence is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorWord {
    terms: BTreeMap<Vec<Gen>, QtScalar>,
}

impl OperatorWord {
    pub fn zero() -> Self {
        OperatorWord::default()
    }

    pub fn identity() -> Self {
        OperatorWord::generator_seq(Vec::new())
    }

    pub fn generator(g: Gen) -> Self {
        OperatorWord::generator_seq(vec![g])
    }

    fn generator_seq(seq: Vec<Gen>) -> Self {
        OperatorWord {
            terms: [(seq, QtScalar::one())].into_iter().collect(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<Gen>, QtScalar)>) -> Self {
        let mut out = OperatorWord::zero();
        for (k, v) in terms {
            out.push(k, v);
        }
        out
    }

    fn push(&mut self, k: Vec<Gen>, v: QtScalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !v.is_zero() {
                    e.insert(v);
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Gen>, QtScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &OperatorWord) -> OperatorWord {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.push(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &QtScalar) -> OperatorWord {
        OperatorWord::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// The composite `self ∘ other`.
    pub fn compose(&self, other: &OperatorWord) -> OperatorWord {
        let mut out = OperatorWord::zero();
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                let seq: Vec<Gen> = k1.iter().chain(k2).copied().collect();
                out.push(seq, v1 * v2);
            }
        }
        out
    }

    /// `(1/M) [self, other]`.
    pub fn bracket_over_m(&self, other: &OperatorWord) -> OperatorWord {
        let c = QtScalar::m().inv().expect("M is nonzero");
        self.compose(other)
            .add(&other.compose(self).scale(&QtScalar::from(-1)))
            .scale(&c)
    }

    /// Applies the word to `f`, rightmost generator first.
    pub fn apply(&self, f: &HExp) -> HExp {
        let parts: Vec<HExp> = self
            .terms
            .par_iter()
            .map(|(seq, c)| {
                let mut g = f.clone();
                for gen in seq.iter().rev() {
                    g = match gen {
                        Gen::T(a) => g.q_m1(*a as i64),
                        Gen::D0 => g.d0(),
                    };
                }
                g.scale(c)
            })
            .collect();
        parts.iter().fold(HExp::zero(), |acc, x| acc.add(x))
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(seq, v)| {
            let mut name = String::new();
            let mut i = 0;
            while i < seq.len() {
                let mut j = i;
                while j < seq.len() && seq[j] == seq[i] {
                    j += 1;
                }
                if !name.is_empty() {
                    name.push('*');
                }
                name.push_str(&seq[i].to_string());
                if j - i > 1 {
                    name.push_str(&format!("^{}", j - i));
                }
                i = j;
            }
            if name.is_empty() {
                name.push('I');
            }
            (name, v)
        });
        f.write_str(&crate::symfun::text_sum(terms))
    }
}

static WORDS: RwLock<Option<HashMap<QIndex, OperatorWord>>> = RwLock::new(None);

pub(crate) fn clear_cache() {
    *WORDS.write() = None;
}

fn coprime_word(m: i64, n: i64) -> Result<OperatorWord> {
    if (m, n) == (1, 0) {
        return Ok(OperatorWord::generator(Gen::D0));
    }
    if n == 1 && m >= 0 {
        return Ok(OperatorWord::generator(Gen::T(m as u32)));
    }
    let ((a, b), (c, d)) = split(m, n)?;
    Ok(q_word(QIndex::new(c, d))?.bracket_over_m(&q_word(QIndex::new(a, b))?))
}

/// The word of `Q_{u,v}`, `v >= 1`: the split bracket for coprime pairs and
/// the bracket with `(i, j) = (k - 1, 0)` for `(u, v) = k (m, n)`.
pub fn q_word(idx: QIndex) -> Result<OperatorWord> {
    if let Some(w) = WORDS.read().as_ref().and_then(|m| m.get(&idx)) {
        return Ok(w.clone());
    }
    let QIndex { m, n } = idx;
    let w = if (m, n) == (1, 0) || (m >= 0 && n == 1) {
        coprime_word(m, n)?
    } else if m >= 1 && n >= 1 {
        let k = gcd(m, n);
        if k == 1 {
            coprime_word(m, n)?
        } else {
            q_word_choice(m, n, (k - 1) as usize)?
        }
    } else {
        return Err(Error::UnsupportedRegion(m, n));
    };
    WORDS
        .write()
        .get_or_insert_with(HashMap::new)
        .insert(idx, w.clone());
    Ok(w)
}

/// The pair `((i m + a, i n + b), (j m + c, j n + d))` bracketed for
/// `(u, v) = k (m, n)` and `i + j = k - 1`.
pub fn non_coprime_pair(u: i64, v: i64, i: usize) -> Result<(QIndex, QIndex)> {
    if u < 1 || v < 1 {
        return Err(Error::UnsupportedRegion(u, v));
    }
    let k = gcd(u, v);
    if i as i64 >= k {
        return Err(Error::UnsupportedRegion(u, v));
    }
    let (m, n) = (u / k, v / k);
    let ((a, b), (c, d)) = split(m, n)?;
    let (i, j) = (i as i64, k - 1 - i as i64);
    Ok((
        QIndex::new(i * m + a, i * n + b),
        QIndex::new(j * m + c, j * n + d),
    ))
}

/// `Q_{u,v} = (1/M) [Q_{j m + c, j n + d}, Q_{i m + a, i n + b}]` for a chosen `i`.
pub fn q_word_choice(u: i64, v: i64, i: usize) -> Result<OperatorWord> {
    let (first, second) = non_coprime_pair(u, v, i)?;
    Ok(coprime_word(second.m, second.n)?.bracket_over_m(&coprime_word(first.m, first.n)?))
}

fn qt() -> QtScalar {
    QtScalar::monomial(1, 1, 1)
}

/// `(qt/(qt - 1)) h_m[D_mu (1/qt - 1)]` with `D_mu = M B_mu - 1`.
pub fn q_m0_eigenvalue(m: usize, mu: &Partition) -> QtScalar {
    let d = QtScalar::m() * &stats(mu).b_mu - QtScalar::one();
    let arg = d * (qt().inv().expect("qt is nonzero") - QtScalar::one());
    let pref = qt() / (qt() - QtScalar::one());
    pref * scalar_plethysm(&SymFun::h(m), &arg)
}

/// `Q_{k,k} = (qt/(qt - 1)) nabla h_k[X(1/qt - 1)] nabla^{-1}`.
pub fn q_kk_multiplicative(k: usize, f: &HExp) -> HExp {
    let kernel = SymFun::h(k).plethysm_plain(&Alphabet::scaled(
        qt().inv().expect("qt is nonzero") - QtScalar::one(),
    ));
    let pref = qt() / (qt() - QtScalar::one());
    f.nabla(-1).mul_sym(&kernel).nabla(1).scale(&pref)
}

/// `Q_{m,n} F` in the supported regions: words for `n >= 1`, the
/// multiplicative form on the diagonal, eigenoperators for `n = 0`, and
/// `-M nabla^{-m} e_1^perp nabla^m` for `n = -1`.
pub fn apply_q(idx: QIndex, f: &HExp) -> Result<HExp> {
    let QIndex { m, n } = idx;
    match n {
        -1 if m >= 0 => Ok(f.q_m_neg1(m)),
        0 if m >= 1 => Ok(f.delta_eigen(|mu| q_m0_eigenvalue(m as usize, mu))),
        _ if n >= 2 && m == n => Ok(q_kk_multiplicative(m as usize, f)),
        _ if n >= 1 && m >= 0 => Ok(q_word(idx)?.apply(f)),
        _ => Err(Error::UnsupportedRegion(m, n)),
    }
}

/// One mismatch between `D_k` and `Q_{1,k}` on `H~_mu`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeDiscrepancy {
    pub k: i64,
    pub mu: Partition,
    pub plethystic: HExp,
    pub operator: HExp,
}

/// Compares `D_k H~_mu` computed plethystically with `Q_{1,k} H~_mu` for all
/// `mu` of size `n`.
pub fn d_bridge_check(k: i64, n: usize) -> Result<Vec<BridgeDiscrepancy>> {
    let mut out = Vec::new();
    for mu in Partition::all(n) {
        let plethystic = to_hbasis(&hmu_monomial(&mu).d_k(k));
        let operator = apply_q(QIndex::new(1, k), &HExp::unit(mu.clone()))?;
        if plethystic != operator {
            out.push(BridgeDiscrepancy {
                k,
                mu,
                plethystic,
                operator,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::part;

    fn t(a: u32) -> Gen {
        Gen::T(a)
    }

    fn span(n: usize) -> Vec<HExp> {
        Partition::all(n).into_iter().map(HExp::unit).collect()
    }

    #[test]
    fn split_examples() {
        assert_eq!(split(3, 2).unwrap(), ((2, 1), (1, 1)));
        assert_eq!(split(5, 3).unwrap(), ((2, 1), (3, 2)));
        assert_eq!(split(7, 4).unwrap(), ((2, 1), (5, 3)));
        assert_eq!(split(1, 1).unwrap(), ((1, 0), (0, 1)));
        assert!(matches!(split(4, 2), Err(Error::NotCoprime(4, 2))));
        for m in 1..12 {
            for n in 1..12 {
                if let Ok(((a, b), (c, d))) = split(m, n) {
                    assert_eq!(a * d - b * c, 1);
                    assert_eq!((a + c, b + d), (m, n));
                }
            }
        }
    }

    #[test]
    fn word_examples() {
        assert_eq!(
            q_word(QIndex::new(1, 1)).unwrap(),
            OperatorWord::generator(t(1))
        );
        let minv = QtScalar::m().inv().unwrap();
        let w32 = OperatorWord::from_terms([
            (vec![t(1), t(2)], minv.clone()),
            (vec![t(2), t(1)], -minv.clone()),
        ]);
        assert_eq!(q_word(QIndex::new(3, 2)).unwrap(), w32);
        let c = minv.pow(3);
        let w74 = OperatorWord::from_terms([
            (vec![t(1), t(2), t(2), t(2)], c.clone()),
            (vec![t(2), t(1), t(2), t(2)], c.clone() * QtScalar::from(-3)),
            (vec![t(2), t(2), t(1), t(2)], c.clone() * QtScalar::from(3)),
            (vec![t(2), t(2), t(2), t(1)], -c),
        ]);
        assert_eq!(q_word(QIndex::new(7, 4)).unwrap(), w74);
        assert_eq!(q_word(QIndex::new(1, 1)).unwrap().to_string(), "T1");
        assert_eq!(
            OperatorWord::from_terms([(vec![t(2), t(2), Gen::D0], QtScalar::q())]).to_string(),
            "q*T2^2*D0"
        );
        assert!(matches!(
            q_word(QIndex::new(0, 2)),
            Err(Error::UnsupportedRegion(0, 2))
        ));
        assert!(matches!(
            q_word(QIndex::new(1, -2)),
            Err(Error::UnsupportedRegion(1, -2))
        ));
    }

    #[test]
    fn region_examples() {
        let empty = HExp::one();
        assert_eq!(
            apply_q(QIndex::new(0, 1), &empty).unwrap(),
            HExp::unit(part(&[1])).neg()
        );
        let one = HExp::unit(part(&[1]));
        let eig = QtScalar::one() - QtScalar::m();
        assert_eq!(apply_q(QIndex::new(1, 0), &one).unwrap(), one.scale(&eig));
        for f in span(2).into_iter().chain(span(1)) {
            let lhs = apply_q(QIndex::new(1, 1), &f).unwrap();
            let rhs = apply_q(QIndex::new(0, 1), &f.nabla(-1)).unwrap().nabla(1);
            assert_eq!(lhs, rhs);
        }
        assert!(matches!(
            apply_q(QIndex::new(2, -2), &empty),
            Err(Error::UnsupportedRegion(2, -2))
        ));
    }

    #[test]
    fn q_m0_matches_d0_at_m1() {
        for n in 0..=4 {
            for f in span(n) {
                assert_eq!(apply_q(QIndex::new(1, 0), &f).unwrap(), f.d0());
            }
        }
    }

    #[test]
    fn bridge_small() {
        for k in 0..=2 {
            for n in 0..=3 {
                assert!(d_bridge_check(k, n).unwrap().is_empty(), "k={k} n={n}");
            }
        }
    }
}
