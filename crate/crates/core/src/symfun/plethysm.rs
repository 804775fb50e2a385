//! Plethystic substitution through the power sums.

use std::collections::{BTreeMap, HashMap};

use super::{accumulate, Basis, SymFun};
use crate::qtcoeff::QtScalar;
use crate::shapes::Partition;

/// The expression `scale X + shift + coef z^zexp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub scale: QtScalar,
    pub shift: QtScalar,
    pub zshift: Option<(QtScalar, i64)>,
}

impl Alphabet {
    /// `scale X`.
    pub fn scaled(scale: QtScalar) -> Self {
        Alphabet {
            scale,
            shift: QtScalar::zero(),
            zshift: None,
        }
    }

    /// The scalar alphabet `shift`.
    pub fn scalar(shift: QtScalar) -> Self {
        Alphabet {
            scale: QtScalar::zero(),
            shift,
            zshift: None,
        }
    }

    /// `X + coef z^zexp`.
    pub fn translate(coef: QtScalar, zexp: i64) -> Self {
        Alphabet {
            scale: QtScalar::one(),
            shift: QtScalar::zero(),
            zshift: Some((coef, zexp)),
        }
    }

    /// `p_k[A]` as `(coefficient of p_k, constant, (z coefficient, z exponent))`.
    fn power(&self, k: usize) -> Power {
        let k32 = k as u32;
        let z = self
            .zshift
            .as_ref()
            .map(|(c, e)| (c.substitute_powers(k32), e * k as i64));
        (
            self.scale.substitute_powers(k32),
            self.shift.substitute_powers(k32),
            z,
        )
    }
}

/// `(scale, shift, z-shift)` of an alphabet at `p_k`.
type Power = (QtScalar, QtScalar, Option<(QtScalar, i64)>);

/// `z`-graded value: exponent of `z` to a symmetric function in `X`.
pub type ZGraded = BTreeMap<i64, SymFun>;

impl SymFun {
    /// `F[A]`, graded by the power of `z`.
    pub fn plethysm(&self, alpha: &Alphabet) -> ZGraded {
        let p = self.convert(Basis::P);
        let mut powers: HashMap<usize, Power> = HashMap::new();
        let mut out: BTreeMap<i64, BTreeMap<Partition, QtScalar>> = BTreeMap::new();
        for (lambda, c) in p.terms() {
            // Expand prod_i p_{lambda_i}[A] one factor at a time.
            let mut acc: HashMap<(i64, Vec<usize>), QtScalar> = HashMap::new();
            acc.insert((0, Vec::new()), c.clone());
            for &k in lambda.parts() {
                let (a, b, z) = powers.entry(k).or_insert_with(|| alpha.power(k)).clone();
                let mut next: HashMap<(i64, Vec<usize>), QtScalar> = HashMap::new();
                let mut push = |key: (i64, Vec<usize>), v: QtScalar| {
                    if v.is_zero() {
                        return;
                    }
                    let slot = next.entry(key).or_default();
                    *slot = slot.add_ref(&v);
                };
                for ((e, parts), v) in &acc {
                    if !a.is_zero() {
                        let mut ps = parts.clone();
                        ps.push(k);
                        push((*e, ps), v * &a);
                    }
                    if !b.is_zero() {
                        push((*e, parts.clone()), v * &b);
                    }
                    if let Some((zc, ze)) = &z {
                        if !zc.is_zero() {
                            push((e + ze, parts.clone()), v * zc);
                        }
                    }
                }
                next.retain(|_, v| !v.is_zero());
                acc = next;
            }
            for ((e, parts), v) in acc {
                accumulate(
                    out.entry(e).or_default(),
                    Partition::from_unsorted(parts),
                    v,
                );
            }
        }
        out.into_iter()
            .map(|(e, terms)| {
                (
                    e,
                    SymFun {
                        basis: Basis::P,
                        terms,
                    },
                )
            })
            .filter(|(_, f)| !f.is_zero())
            .collect()
    }

    /// `F[A]` for an alphabet without a `z` term.
    pub fn plethysm_plain(&self, alpha: &Alphabet) -> SymFun {
        assert!(alpha.zshift.is_none(), "alphabet carries a z term");
        self.plethysm(alpha)
            .remove(&0)
            .unwrap_or_else(|| SymFun::zero(Basis::P))
    }
}

/// `F[E]` for a scalar expression `E` in `q, t`.
pub fn scalar_plethysm(f: &SymFun, e: &QtScalar) -> QtScalar {
    let p = f.convert(Basis::P);
    let mut cache: HashMap<usize, QtScalar> = HashMap::new();
    p.terms()
        .iter()
        .map(|(lambda, c)| {
            let mut v = c.clone();
            for &k in lambda.parts() {
                let ek = cache
                    .entry(k)
                    .or_insert_with(|| e.substitute_powers(k as u32));
                v *= &*ek;
            }
            v
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::part;

    fn s(x: &str) -> QtScalar {
        x.parse().unwrap()
    }

    #[test]
    fn h_of_m_closed_form() {
        let m = QtScalar::m();
        for k in 1..=4 {
            let want: QtScalar = m.clone()
                * (0..k)
                    .map(|i| QtScalar::monomial(1, i, i))
                    .sum::<QtScalar>();
            assert_eq!(scalar_plethysm(&SymFun::h(k as usize), &m), want);
        }
        assert_eq!(scalar_plethysm(&SymFun::h(2), &m), s("(1-t)*(1-q)*(1+q*t)"));
    }

    #[test]
    fn translation_of_power_sums() {
        for k in 1..=3usize {
            let g = SymFun::p(k).plethysm(&Alphabet::translate(QtScalar::m(), -1));
            assert_eq!(g.len(), 2);
            assert_eq!(g[&0], SymFun::p(k));
            let e = k as i64;
            let want = (QtScalar::one() - QtScalar::monomial(1, 0, e))
                * (QtScalar::one() - QtScalar::monomial(1, e, 0));
            assert_eq!(g[&-e], SymFun::constant(want));
        }
    }

    #[test]
    fn e_n_over_m() {
        let g = SymFun::e(1).plethysm_plain(&Alphabet::scaled(QtScalar::m().inv().unwrap()));
        assert_eq!(g, SymFun::p(1).scale(&QtScalar::m().inv().unwrap()));
    }

    #[test]
    fn omega_as_epsilon_substitution() {
        // omega F[X] = F[-epsilon X]: on p_k the sign is (-1)^{k-1}.
        let f = SymFun::element(Basis::S, part(&[2, 1])).add(&SymFun::h(3).scale(&s("q")));
        let neg = f.plethysm_plain(&Alphabet::scaled(QtScalar::from_int(-1)));
        let signs = SymFun::from_terms(
            Basis::P,
            neg.terms().iter().map(|(k, v)| {
                if k.size() % 2 == 1 {
                    (k.clone(), v.neg())
                } else {
                    (k.clone(), v.clone())
                }
            }),
        );
        assert_eq!(signs, f.omega());
    }

    #[test]
    fn cauchy_kernel_is_multiplicative() {
        // Omega[A + B] = Omega[A] Omega[B] degree by degree, Omega = sum h_n.
        let a = s("q - t");
        let b = s("1 - q*t");
        for n in 0..=6usize {
            let lhs = scalar_plethysm(&SymFun::h(n), &(a.clone() + b.clone()));
            let rhs: QtScalar = (0..=n)
                .map(|i| {
                    scalar_plethysm(&SymFun::h(i), &a) * scalar_plethysm(&SymFun::h(n - i), &b)
                })
                .sum();
            assert_eq!(lhs, rhs, "degree {n}");
        }
    }
}
