//! Standard-tableau sums for the monomial table, for `h_m^perp`, and for
//! chained `e_1^perp` words.

use std::collections::BTreeMap;

use super::HExp;
use crate::error::{Error, Result};
use crate::pieri::{c1, d1};
use crate::qtcoeff::QtScalar;
use crate::shapes::{standard_tableaux, stats, Partition};

/// `Pi_m` along `chain[0] ⊃ chain[1] ⊃ ... ⊃ chain[m]`:
/// `prod_j c(chain[j-1], chain[j]) w(chain[j-1]/chain[j]) / (B_{chain[0]} - B_{chain[j]})`.
fn chain_product(chain: &[Partition]) -> Result<QtScalar> {
    let b0 = &stats(&chain[0]).b_mu;
    let mut v = QtScalar::one();
    for pair in chain.windows(2) {
        let (upper, lower) = (&pair[0], &pair[1]);
        let cell = upper.cover_cell(lower).ok_or_else(|| Error::NotACover {
            mu: upper.clone(),
            nu: lower.clone(),
        })?;
        v *= &(c1(upper, lower)? * cell.weight());
        v = v.checked_div(&(b0 - &stats(lower).b_mu))?;
    }
    Ok(v)
}

/// `M_{lambda,mu} = sum_{T in ST(mu)} prod_i Pi_{lambda_i}(T^(n - p_i))`,
/// `p_i = lambda_1 + ... + lambda_{i-1}`.
pub fn tableau_m(lambda: &Partition, mu: &Partition) -> Result<QtScalar> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let mut total = QtScalar::zero();
    for t in standard_tableaux(mu) {
        let mut chain = t.shape_chain();
        chain.reverse();
        let mut v = QtScalar::one();
        let mut start = 0;
        for &part in lambda.parts() {
            v *= &chain_product(&chain[start..=start + part])?;
            start += part;
        }
        total += &v;
    }
    Ok(total)
}

/// `h_m^perp H~_mu` as a sum over the distinct chains of `m` cell removals.
pub fn tableau_skew_hm(mu: &Partition, m: usize) -> HExp {
    fn walk(chain: &mut Vec<Partition>, left: usize, acc: &mut BTreeMap<Partition, QtScalar>) {
        if left == 0 {
            let v = chain_product(chain).expect("chain of covers");
            *acc.entry(chain.last().expect("nonempty").clone())
                .or_default() += &v;
            return;
        }
        for nu in chain.last().expect("nonempty").covers_down() {
            chain.push(nu);
            walk(chain, left - 1, acc);
            chain.pop();
        }
    }
    if m > mu.size() {
        return HExp::zero();
    }
    let mut acc = BTreeMap::new();
    walk(&mut vec![mu.clone()], m, &mut acc);
    HExp::from_terms(acc)
}

fn check_word(mu: &Partition, a: &[usize]) -> Result<()> {
    if a.len() != mu.size() {
        return Err(Error::LengthMismatch {
            expected: mu.size(),
            got: a.len(),
        });
    }
    Ok(())
}

/// `sum_{T in ST(mu)} prod_k w_T(k)^{a_k} d(T^(k), T^(k-1))`.
pub fn pi_word_adjoint(mu: &Partition, a: &[usize]) -> Result<QtScalar> {
    check_word(mu, a)?;
    let mut total = QtScalar::zero();
    for t in standard_tableaux(mu) {
        let chain = t.shape_chain();
        let mut v = QtScalar::one();
        for (k, &ak) in a.iter().enumerate().map(|(i, x)| (i + 1, x)) {
            v *= &(d1(&chain[k], &chain[k - 1])? * t.weight(k)?.pow(ak as i64));
        }
        total += &v;
    }
    Ok(total)
}

/// `(M^n / w_mu)` times the constant term of
/// `nabla^{-a_1} e_1^perp nabla^{a_1} ... nabla^{-a_n} e_1^perp nabla^{a_n} H~_mu`.
pub fn pi_word_adjoint_operator(mu: &Partition, a: &[usize]) -> Result<QtScalar> {
    check_word(mu, a)?;
    let mut f = HExp::unit(mu.clone());
    for &ak in a.iter().rev() {
        let p = ak as i64;
        f = f.nabla(p).skew_e1().nabla(-p);
    }
    let scale = QtScalar::m()
        .pow(mu.size() as i64)
        .checked_div(&stats(mu).w_mu)?;
    Ok(f.coeff(&Partition::empty()) * scale)
}
