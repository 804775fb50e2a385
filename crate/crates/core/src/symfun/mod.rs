//! Symmetric functions over `Q(q, t)` in the classical bases.

mod operators;
mod plethysm;
mod text;
pub mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qtcoeff::QtScalar;
use crate::shapes::Partition;

pub use plethysm::{scalar_plethysm, Alphabet, ZGraded};
pub(crate) use text::{parse_terms as text_terms, write_sum as text_sum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.letter() == c)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next().and_then(Basis::from_letter), chars.next()) {
            (Some(b), None) => Ok(b),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// A finite sum `sum_lambda c_lambda b_lambda`; index partitions may have
/// different sizes, in which case each size is one graded component.
#[derive(Clone, Debug)]
pub struct SymFun {
    basis: Basis,
    terms: BTreeMap<Partition, QtScalar>,
}

pub(crate) fn accumulate(map: &mut BTreeMap<Partition, QtScalar>, key: Partition, value: QtScalar) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().add_ref(&value);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl SymFun {
    pub fn zero(basis: Basis) -> Self {
        SymFun {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::element(Basis::P, Partition::empty())
    }

    pub fn constant(c: QtScalar) -> Self {
        Self::from_terms(Basis::P, [(Partition::empty(), c)])
    }

    /// The basis element `b_lambda`.
    pub fn element(basis: Basis, lambda: Partition) -> Self {
        Self::from_terms(basis, [(lambda, QtScalar::one())])
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, QtScalar)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in terms {
            accumulate(&mut map, k, v);
        }
        SymFun { basis, terms: map }
    }

    pub fn e(n: usize) -> Self {
        Self::single(Basis::E, n)
    }

    pub fn h(n: usize) -> Self {
        Self::single(Basis::H, n)
    }

    pub fn p(n: usize) -> Self {
        Self::single(Basis::P, n)
    }

    fn single(basis: Basis, n: usize) -> Self {
        let lambda = if n == 0 {
            Partition::empty()
        } else {
            Partition::from_unsorted(vec![n])
        };
        Self::element(basis, lambda)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QtScalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, QtScalar> {
        self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QtScalar {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sizes of the nonzero graded components, increasing.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn component(&self, n: usize) -> SymFun {
        SymFun {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() == n)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Terms in display order: by size, then `(n)` first within a size.
    pub fn ordered_terms(&self) -> Vec<(&Partition, &QtScalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then_with(|| b.0.cmp(a.0)));
        v
    }

    pub fn convert(&self, target: Basis) -> SymFun {
        if target == self.basis {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        for n in self.degrees() {
            let table = transition::table(n);
            let mat = table.matrix(self.basis, target);
            let mut acc: Vec<Vec<QtScalar>> = vec![Vec::new(); table.parts.len()];
            for (lambda, c) in self.terms.iter().filter(|(k, _)| k.size() == n) {
                for (j, x) in &mat.rows[table.index[lambda]] {
                    acc[*j].push(c.scale_rational(x));
                }
            }
            for (j, parts) in acc.into_iter().enumerate() {
                let sum: QtScalar = parts.into_iter().sum();
                if !sum.is_zero() {
                    out.insert(table.parts[j].clone(), sum);
                }
            }
        }
        SymFun {
            basis: target,
            terms: out,
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&QtScalar) -> QtScalar) -> SymFun {
        SymFun::from_terms(
            self.basis,
            self.terms.iter().map(|(k, v)| (k.clone(), f(v))),
        )
    }

    pub fn scale(&self, c: &QtScalar) -> SymFun {
        if c.is_zero() {
            return SymFun::zero(self.basis);
        }
        self.map_coefficients(|v| v * c)
    }

    pub fn neg(&self) -> SymFun {
        self.map_coefficients(QtScalar::neg)
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &SymFun) -> SymFun {
        let other = other.convert(self.basis);
        let mut terms = self.terms.clone();
        for (k, v) in other.terms {
            accumulate(&mut terms, k, v);
        }
        SymFun {
            basis: self.basis,
            terms,
        }
    }

    pub fn sub(&self, other: &SymFun) -> SymFun {
        self.add(&other.neg())
    }

    /// Product, expressed in the basis of `self`.
    pub fn mul(&self, other: &SymFun) -> SymFun {
        let a = self.convert(Basis::P);
        let b = other.convert(Basis::P);
        let mut terms = BTreeMap::new();
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                let mut parts = la.parts().to_vec();
                parts.extend_from_slice(lb.parts());
                accumulate(&mut terms, Partition::from_unsorted(parts), ca * cb);
            }
        }
        SymFun {
            basis: Basis::P,
            terms,
        }
        .convert(self.basis)
    }

    pub fn pow(&self, k: usize) -> SymFun {
        let mut acc = SymFun::one().convert(self.basis);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Diagonal pairing in the power sums with weights `weight(lambda)`.
    fn p_pairing(&self, other: &SymFun, weight: impl Fn(&Partition) -> QtScalar) -> QtScalar {
        let a = self.convert(Basis::P);
        let b = other.convert(Basis::P);
        a.terms
            .iter()
            .filter_map(|(k, x)| b.terms.get(k).map(|y| x * y * weight(k)))
            .sum()
    }

    /// `<p_lambda, p_mu> = z_mu chi(lambda = mu)`.
    pub fn hall_product(&self, other: &SymFun) -> QtScalar {
        self.p_pairing(other, |k| QtScalar::from_int(k.z()))
    }

    /// `<p_lambda, p_mu>_* = (-1)^{|mu| - l(mu)} prod (1 - t^mu_i)(1 - q^mu_i) z_mu chi(lambda = mu)`.
    pub fn star_product(&self, other: &SymFun) -> QtScalar {
        self.p_pairing(other, star_weight)
    }

    /// `omega p_lambda = (-1)^{|lambda| - l(lambda)} p_lambda`.
    pub fn omega(&self) -> SymFun {
        let p = self.convert(Basis::P);
        let terms = p.terms.into_iter().map(|(k, v)| {
            if transition::omega_sign(&k) {
                (k, v.neg())
            } else {
                (k, v)
            }
        });
        SymFun::from_terms(Basis::P, terms).convert(self.basis)
    }

    /// `q -> 1/q, t -> 1/t` on every coefficient.
    pub fn invert_variables(&self) -> SymFun {
        self.map_coefficients(QtScalar::invert_variables)
    }

    /// `F -> omega F[X; 1/q, 1/t]`.
    pub fn down(&self) -> SymFun {
        self.invert_variables().omega()
    }

    /// `p_k^perp = k d/dp_k`.
    pub fn skew_p(&self, k: usize) -> SymFun {
        assert!(k > 0, "p_0 is not a power sum");
        let p = self.convert(Basis::P);
        let mut terms = BTreeMap::new();
        for (lambda, c) in &p.terms {
            let mult = lambda.parts().iter().filter(|&&x| x == k).count();
            if mult == 0 {
                continue;
            }
            let mut parts = lambda.parts().to_vec();
            let pos = parts.iter().position(|&x| x == k).expect("part present");
            parts.remove(pos);
            accumulate(
                &mut terms,
                Partition::from_unsorted(parts),
                c.scale_int(&((k * mult) as i64).into()),
            );
        }
        SymFun {
            basis: Basis::P,
            terms,
        }
        .convert(self.basis)
    }

    /// `e_1^perp`, the Hall adjoint of multiplication by `e_1`.
    pub fn skew_e1(&self) -> SymFun {
        self.skew_p(1)
    }

    pub fn mul_e1(&self) -> SymFun {
        self.mul(&SymFun::e(1))
    }
}

pub(crate) fn star_weight(k: &Partition) -> QtScalar {
    let mut w = QtScalar::from_int(k.z());
    if transition::omega_sign(k) {
        w = w.neg();
    }
    for &part in k.parts() {
        let e = part as i64;
        let a = QtScalar::one() - QtScalar::monomial(1, 0, e);
        let b = QtScalar::one() - QtScalar::monomial(1, e, 0);
        w = w * a * b;
    }
    w
}

impl PartialEq for SymFun {
    /// Equality as symmetric functions, regardless of basis.
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.terms == other.convert(self.basis).terms
        }
    }
}

impl Eq for SymFun {}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::to_string(self))
    }
}

impl FromStr for SymFun {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        text::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    part: Partition,
    coeff: QtScalar,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    basis: Basis,
    terms: Vec<WireTerm>,
}

impl Serialize for SymFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .ordered_terms()
            .into_iter()
            .map(|(k, v)| WireTerm {
                part: k.clone(),
                coeff: v.clone(),
            })
            .collect();
        Wire {
            basis: self.basis,
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        Ok(SymFun::from_terms(
            w.basis,
            w.terms.into_iter().map(|t| (t.part, t.coeff)),
        ))
    }
}

pub(crate) fn clear_cache() {
    transition::clear_cache();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::part;

    fn s(x: &str) -> QtScalar {
        x.parse().unwrap()
    }

    fn f(x: &str) -> SymFun {
        x.parse().unwrap()
    }

    #[test]
    fn classical_conversions() {
        assert_eq!(SymFun::e(1).convert(Basis::M), f("m[1]"));
        let h2 = SymFun::h(2).convert(Basis::M);
        assert_eq!(h2.basis(), Basis::M);
        assert_eq!(h2.terms().len(), 2);
        assert_eq!(h2, f("m[2] + m[1,1]"));
        let s11 = SymFun::element(Basis::S, part(&[1, 1])).convert(Basis::P);
        assert_eq!(s11.coeff(&part(&[1, 1])), s("1/2"));
        assert_eq!(s11.coeff(&part(&[2])), s("-1/2"));
    }

    #[test]
    fn conversions_round_trip() {
        let x = f("(1 + q)*s[2,1] - t*s[3] + s[] + 2*s[1]");
        for b in Basis::ALL {
            let there = x.convert(b);
            assert_eq!(there.basis(), b);
            let back = there.convert(Basis::S);
            assert_eq!(back.terms(), x.terms());
        }
    }

    #[test]
    fn scalar_products() {
        let p2 = SymFun::p(2);
        assert_eq!(p2.hall_product(&p2), s("2"));
        for lam in Partition::all(3) {
            let m = SymFun::element(Basis::M, lam.clone());
            let want = if lam == part(&[3]) {
                QtScalar::one()
            } else {
                QtScalar::zero()
            };
            assert_eq!(SymFun::h(3).hall_product(&m), want);
            for mu in Partition::all(3) {
                let a = SymFun::element(Basis::S, lam.clone());
                let b = SymFun::element(Basis::S, mu.clone());
                let want = if lam == mu {
                    QtScalar::one()
                } else {
                    QtScalar::zero()
                };
                assert_eq!(a.hall_product(&b), want);
            }
        }
        let p1 = SymFun::p(1);
        assert_eq!(p1.star_product(&p1), QtScalar::m());
        assert_eq!(p2.star_product(&p2), s("-2*(1-t^2)*(1-q^2)"));
    }

    #[test]
    fn omega_and_down() {
        for n in 0..=4 {
            assert_eq!(SymFun::h(n).omega(), SymFun::e(n));
        }
        assert_eq!(SymFun::p(2).omega(), SymFun::p(2).neg());
        let x = SymFun::element(Basis::S, part(&[2, 1])).scale(&s("q/(1-t)"));
        assert_eq!(x.down().down(), x);
        assert_eq!(x.omega().omega(), x);
    }

    #[test]
    fn products_and_skewing() {
        let e1 = SymFun::e(1);
        assert_eq!(e1.mul(&e1), f("p[1,1]"));
        assert_eq!(SymFun::p(1).pow(2).skew_e1(), f("2*p[1]"));
        let s21 = SymFun::element(Basis::S, part(&[2, 1]));
        assert_eq!(s21.skew_e1(), f("s[2] + s[1,1]"));
        assert_eq!(SymFun::one().skew_e1(), SymFun::zero(Basis::P));
    }

    #[test]
    fn json_round_trip() {
        let x = f("m[2] + (1 + q)*m[1,1]");
        let js = serde_json::to_string(&x).unwrap();
        assert!(js.starts_with(r#"{"basis":"m","terms":[{"part":[2],"coeff":"#));
        let back: SymFun = serde_json::from_str(&js).unwrap();
        assert_eq!(back.terms(), x.terms());
        assert_eq!(back.basis(), Basis::M);
    }
}
