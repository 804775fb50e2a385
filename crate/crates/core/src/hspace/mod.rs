//! Symmetric functions in the modified Macdonald basis and the operators
//! that act diagonally or by Pieri rules there.

mod mtable;
mod oracle;
mod tableaux;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pieri::{c1, ck_table, d1, dk};
use crate::qtcoeff::QtScalar;
use crate::shapes::{stats, Partition};
use crate::symfun::{accumulate, SymFun};

pub use mtable::{
    cache_dir, from_hbasis, hmu_monomial, m_table, m_table_bh, nabla_sym, set_cache_dir, to_hbasis,
    MTable, MTABLE_FORMAT_VERSION,
};
pub use oracle::{hmu_oracle, oracle_m_table};
pub use tableaux::{pi_word_adjoint, pi_word_adjoint_operator, tableau_m, tableau_skew_hm};

/// `sum_mu c_mu H~_mu`, possibly spread over several degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HExp {
    terms: BTreeMap<Partition, QtScalar>,
}

impl HExp {
    pub fn zero() -> Self {
        HExp::default()
    }

    /// `H~_mu`.
    pub fn unit(mu: Partition) -> Self {
        Self::from_terms([(mu, QtScalar::one())])
    }

    /// `H~_empty = 1`.
    pub fn one() -> Self {
        Self::unit(Partition::empty())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, QtScalar)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in terms {
            accumulate(&mut map, k, v);
        }
        HExp { terms: map }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QtScalar> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition) -> QtScalar {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.terms.keys().map(Partition::size).collect();
        set.into_iter().collect()
    }

    pub fn component(&self, n: usize) -> HExp {
        HExp {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() == n)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn ordered_terms(&self) -> Vec<(&Partition, &QtScalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then_with(|| b.0.cmp(a.0)));
        v
    }

    pub fn add(&self, other: &HExp) -> HExp {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            accumulate(&mut terms, k.clone(), v.clone());
        }
        HExp { terms }
    }

    pub fn sub(&self, other: &HExp) -> HExp {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HExp {
        self.map(|_, v| v.neg())
    }

    pub fn scale(&self, c: &QtScalar) -> HExp {
        self.map(|_, v| v * c)
    }

    fn map(&self, f: impl Fn(&Partition, &QtScalar) -> QtScalar) -> HExp {
        HExp::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), f(k, v))))
    }

    /// Linear extension of `H~_mu -> sum_nu a(mu, nu) H~_nu`.
    pub fn apply_edges(&self, edges: impl Fn(&Partition) -> Vec<(Partition, QtScalar)>) -> HExp {
        let mut acc: BTreeMap<Partition, Vec<QtScalar>> = BTreeMap::new();
        for (mu, c) in &self.terms {
            for (nu, a) in edges(mu) {
                acc.entry(nu).or_default().push(c * &a);
            }
        }
        HExp::from_terms(acc.into_iter().map(|(k, vs)| (k, vs.into_iter().sum())))
    }

    /// Multiplication by `e_1`.
    pub fn mul_e1(&self) -> HExp {
        self.apply_edges(|nu| {
            nu.covers_up()
                .into_iter()
                .map(|mu| (mu.clone(), d1(&mu, nu).expect("upper cover")))
                .collect()
        })
    }

    /// `e_1^perp`.
    pub fn skew_e1(&self) -> HExp {
        self.apply_edges(|mu| {
            mu.covers_down()
                .into_iter()
                .map(|nu| (nu.clone(), c1(mu, &nu).expect("lower cover")))
                .collect()
        })
    }

    /// `nabla^p`: `H~_mu -> T_mu^p H~_mu`.
    pub fn nabla(&self, p: i64) -> HExp {
        if p == 0 {
            return self.clone();
        }
        self.map(|mu, v| v * stats(mu).t_mu.pow(p))
    }

    /// The eigenoperator `H~_mu -> eigen(mu) H~_mu`.
    pub fn delta_eigen(&self, eigen: impl Fn(&Partition) -> QtScalar) -> HExp {
        self.map(|mu, v| v * eigen(mu))
    }

    /// `D_0`, with eigenvalue `1 - M B_mu`.
    pub fn d0(&self) -> HExp {
        self.delta_eigen(|mu| QtScalar::one() - QtScalar::m() * &stats(mu).b_mu)
    }

    /// `D_0^*`, with eigenvalue `1 - M~ B_mu(1/q, 1/t)`.
    pub fn d0_star(&self) -> HExp {
        self.delta_eigen(|mu| {
            QtScalar::one() - QtScalar::m_tilde() * stats(mu).b_mu.invert_variables()
        })
    }

    /// `Q_{m,1} = -nabla^m e_1 nabla^{-m}`.
    pub fn q_m1(&self, m: i64) -> HExp {
        self.nabla(-m).mul_e1().nabla(m).neg()
    }

    /// `Q_{m,-1} = -M nabla^{-m} e_1^perp nabla^m`.
    pub fn q_m_neg1(&self, m: i64) -> HExp {
        self.nabla(m)
            .skew_e1()
            .nabla(-m)
            .scale(&QtScalar::m().neg())
    }

    /// `h_k^perp`.
    pub fn skew_hk(&self, k: usize) -> HExp {
        if k == 0 {
            return self.clone();
        }
        self.apply_edges(|mu| {
            if mu.size() < k {
                return Vec::new();
            }
            let table = ck_table(mu);
            table.levels[k]
                .iter()
                .map(|(nu, v)| (nu.clone(), v.clone()))
                .collect()
        })
    }

    /// Multiplication by `e_k[X/M]`.
    pub fn mul_ek_over_m(&self, k: usize) -> HExp {
        if k == 0 {
            return self.clone();
        }
        self.apply_edges(|nu| {
            supersets(nu, k)
                .into_iter()
                .map(|mu| (mu.clone(), dk(&mu, nu, k).expect("contained")))
                .collect()
        })
    }

    /// Multiplication by an arbitrary symmetric function, through the
    /// monomial expansion of each `H~_mu`.
    pub fn mul_sym(&self, g: &SymFun) -> HExp {
        let f = from_hbasis(self);
        to_hbasis(&f.mul(g))
    }
}

/// Partitions obtained from `nu` by adding `k` cells.
pub fn supersets(nu: &Partition, k: usize) -> Vec<Partition> {
    let mut layer: BTreeSet<Partition> = [nu.clone()].into_iter().collect();
    for _ in 0..k {
        layer = layer.iter().flat_map(|p| p.covers_up()).collect();
    }
    layer.into_iter().collect()
}

impl fmt::Display for HExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = crate::symfun::text_sum(
            self.ordered_terms()
                .into_iter()
                .map(|(k, v)| (format!("H{k}"), v)),
        );
        f.write_str(&s)
    }
}

impl FromStr for HExp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(HExp::zero());
        }
        let terms = crate::symfun::text_terms(s, &['H'])?;
        if terms.is_empty() {
            return Err(Error::Parse(format!("no basis elements in {s:?}")));
        }
        Ok(HExp::from_terms(terms.into_iter().map(|(_, k, v)| (k, v))))
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    part: Partition,
    coeff: QtScalar,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    basis: String,
    terms: Vec<WireTerm>,
}

impl Serialize for HExp {
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
            basis: "H".into(),
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HExp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = Wire::deserialize(d)?;
        if w.basis != "H" {
            return Err(D::Error::custom(format!(
                "expected basis \"H\", found {:?}",
                w.basis
            )));
        }
        Ok(HExp::from_terms(
            w.terms.into_iter().map(|t| (t.part, t.coeff)),
        ))
    }
}

pub(crate) fn clear_cache() {
    mtable::clear_cache();
}
