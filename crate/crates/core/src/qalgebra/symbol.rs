//! The symbol polynomials `Xi_{m,n}(x_1, ..., x_n)`.

use std::collections::BTreeMap;
use std::fmt;

use super::{split, Gen, OperatorWord};
use crate::error::{Error, Result};
use crate::qtcoeff::QtScalar;

/// A polynomial in `x_1, ..., x_k` with `QtScalar` coefficients, keyed by
/// exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Vec<u32>, QtScalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn monomial(exponents: Vec<u32>, c: QtScalar) -> Self {
        MultiPoly::from_terms([(exponents, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, QtScalar)>) -> Self {
        let mut acc: BTreeMap<Vec<u32>, QtScalar> = BTreeMap::new();
        for (mut e, c) in terms {
            while e.last() == Some(&0) {
                e.pop();
            }
            *acc.entry(e).or_default() += &c;
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { terms: acc }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, QtScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let neg = other.terms.iter().map(|(e, c)| (e.clone(), -c));
        MultiPoly::from_terms(self.terms.clone().into_iter().chain(neg))
    }

    pub fn scale(&self, c: &QtScalar) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(e, v)| (e.clone(), v * c)))
    }

    /// `self(x_1..x_k) * other(x_{k+1}..)`, placing `other` after `k` variables.
    fn concat(&self, k: usize, other: &MultiPoly) -> MultiPoly {
        let mut out = Vec::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = e1.clone();
                e.resize(k, 0);
                e.extend(e2);
                out.push((e, c1 * c2));
            }
        }
        MultiPoly::from_terms(out)
    }

    /// Substitutes `x_i -> values[i - 1]`; missing variables count as zero
    /// only through positive exponents.
    pub fn evaluate(&self, values: &[QtScalar]) -> QtScalar {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        v *= &values.get(i).cloned().unwrap_or_default().pow(k as i64);
                    }
                }
                v
            })
            .sum()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(e, c)| {
            let name: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{k}", i + 1)
                    }
                })
                .collect();
            let name = if name.is_empty() {
                "1".to_string()
            } else {
                name.join("*")
            };
            (name, c)
        });
        f.write_str(&crate::symfun::text_sum(terms))
    }
}

/// `Xi_{m,1} = x_1^m`; otherwise, with `(m, n) = (a, b) + (c, d)`,
/// `Xi_{m,n} = (1/M)(Xi_{c,d} S_d Xi_{a,b} - Xi_{a,b} S_b Xi_{c,d})`.
pub fn symbol(m: i64, n: i64) -> Result<MultiPoly> {
    if n == 1 && m >= 0 {
        return Ok(MultiPoly::monomial(vec![m as u32], QtScalar::one()));
    }
    let ((a, b), (c, d)) = split(m, n)?;
    let (xab, xcd) = (symbol(a, b)?, symbol(c, d)?);
    let diff = xcd
        .concat(d as usize, &xab)
        .sub(&xab.concat(b as usize, &xcd));
    Ok(diff.scale(&QtScalar::m().inv()?))
}

/// Replaces the `i`-th generator `T_a` of each sequence by `x_i^a`.
pub fn word_symbol(w: &OperatorWord) -> Result<MultiPoly> {
    let mut out = Vec::new();
    for (seq, c) in w.terms() {
        let mut e = Vec::with_capacity(seq.len());
        for g in seq {
            match g {
                Gen::T(a) => e.push(*a),
                Gen::D0 => return Err(Error::UnsupportedRegion(1, 0)),
            }
        }
        out.push((e, c.clone()));
    }
    Ok(MultiPoly::from_terms(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::{q_word, QIndex};

    #[test]
    fn examples() {
        assert_eq!(symbol(4, 1).unwrap().to_string(), "x1^4");
        let minv = QtScalar::m().inv().unwrap();
        let s32 = MultiPoly::from_terms([(vec![1, 2], minv.clone()), (vec![2, 1], -minv.clone())]);
        assert_eq!(symbol(3, 2).unwrap(), s32);
        let c = minv.pow(3);
        let s74 = MultiPoly::from_terms([
            (vec![1, 2, 2, 2], c.clone()),
            (vec![2, 1, 2, 2], c.clone() * QtScalar::from(-3)),
            (vec![2, 2, 1, 2], c.clone() * QtScalar::from(3)),
            (vec![2, 2, 2, 1], -c),
        ]);
        assert_eq!(symbol(7, 4).unwrap(), s74);
        assert!(matches!(symbol(2, 2), Err(Error::NotCoprime(2, 2))));
    }

    #[test]
    fn recursion_matches_words() {
        for m in 0..=7i64 {
            for n in 1..=7i64 {
                if m + n <= 7 && num_integer::Integer::gcd(&m, &n) == 1 {
                    let w = q_word(QIndex::new(m, n)).unwrap();
                    assert_eq!(symbol(m, n).unwrap(), word_symbol(&w).unwrap(), "({m},{n})");
                }
            }
        }
    }
}
