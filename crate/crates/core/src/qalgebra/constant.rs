//! Closed tableau formula for `Q_{m,n}(-1)^n`.

use super::symbol;
use crate::error::{Error, Result};
use crate::hspace::HExp;
use crate::qtcoeff::QtScalar;
use crate::shapes::{standard_tableaux, stats, Partition};

/// `f(u) = (1 - u/t)(1 - u/q) / ((1 - u)(1 - u/qt))`.
fn f(u: &QtScalar) -> Result<QtScalar> {
    let one = QtScalar::one();
    let (q, t) = (QtScalar::q(), QtScalar::t());
    let num = (&one - &(u / &t)) * (&one - &(u / &q));
    let den = (&one - u) * (&one - &(u / &(q * t)));
    if den.is_zero() {
        return Err(Error::SingularSubstitution(format!(
            "f({u}) has a vanishing denominator"
        )));
    }
    num.checked_div(&den)
}

/// `Q_{m,n}(-1)^n = M^n sum_mu H~_mu / w_mu sum_{T in ST(mu)}
/// Xi_{m,n}(w_T(n), ..., w_T(1)) prod_{k=2}^n (1 - w_T(k) qt)/(1 - qt)
/// prod_{h<k} f(w_T(h)/w_T(k))`.
pub fn q_const(m: i64, n: i64) -> Result<HExp> {
    q_const_oriented(m, n, true)
}

fn q_const_oriented(m: i64, n: i64, reverse: bool) -> Result<HExp> {
    let xi = symbol(m, n)?;
    let size = n as usize;
    let qt = QtScalar::monomial(1, 1, 1);
    let one = QtScalar::one();
    let mut terms = Vec::new();
    for mu in Partition::all(size) {
        let mut total = QtScalar::zero();
        for t in standard_tableaux(&mu) {
            let w: Vec<QtScalar> = (1..=size).map(|k| t.weight(k)).collect::<Result<_>>()?;
            let args: Vec<QtScalar> = if reverse {
                w.iter().rev().cloned().collect()
            } else {
                w.clone()
            };
            let mut v = xi.evaluate(&args);
            if v.is_zero() {
                continue;
            }
            for k in 1..size {
                v *= &(&one - &(&w[k] * &qt)).checked_div(&(&one - &qt))?;
                for h in 0..k {
                    v *= &f(&(&w[h] / &w[k]))?;
                }
            }
            total += &v;
        }
        let c = total * QtScalar::m().pow(n) / stats(&mu).w_mu.clone();
        terms.push((mu, c));
    }
    Ok(HExp::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::{q_word, QIndex};
    use crate::shapes::part;

    fn word_route(m: i64, n: i64) -> HExp {
        let start = if n % 2 == 0 {
            HExp::one()
        } else {
            HExp::one().neg()
        };
        q_word(QIndex::new(m, n)).unwrap().apply(&start)
    }

    #[test]
    fn single_row_cases() {
        for m in 0..=4 {
            assert_eq!(q_const(m, 1).unwrap(), HExp::unit(part(&[1])));
        }
    }

    #[test]
    fn matches_word_route_small() {
        for (m, n) in [(1, 2), (3, 2), (5, 2), (1, 3), (2, 3)] {
            assert_eq!(q_const(m, n).unwrap(), word_route(m, n), "({m},{n})");
        }
    }

    #[test]
    fn label_order_matters() {
        let natural = q_const_oriented(3, 2, false).unwrap();
        assert_ne!(natural, word_route(3, 2));
    }

    #[test]
    fn rejects_non_coprime() {
        assert!(matches!(q_const(2, 2), Err(Error::NotCoprime(2, 2))));
    }
}
