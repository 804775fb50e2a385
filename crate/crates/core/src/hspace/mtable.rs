//! Monomial expansion tables `M_{lambda,mu} = h_lambda^perp H~_mu`, their
//! persistence, and the conversions between `SymFun` and `HExp`.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use parking_lot::RwLock;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::HExp;
use crate::error::{Error, Result};
use crate::pieri::ck_table;
use crate::qtcoeff::{QtPoly, QtScalar};
use crate::shapes::{stats, Partition};
use crate::symfun::{star_weight, transition, Basis, SymFun};

pub const MTABLE_FORMAT_VERSION: u32 = 1;

/// All `M_{lambda,mu}` with `lambda, mu` partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTable {
    n: usize,
    entries: HashMap<(Partition, Partition), QtScalar>,
}

impl MTable {
    pub(crate) fn new(n: usize, entries: HashMap<(Partition, Partition), QtScalar>) -> MTable {
        MTable { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&QtScalar> {
        self.entries.get(&(lambda.clone(), mu.clone()))
    }

    /// The entry as a polynomial; fails if it is not one.
    pub fn poly(&self, lambda: &Partition, mu: &Partition) -> Result<QtPoly> {
        self.get(lambda, mu)
            .ok_or_else(|| Error::SizeMismatch {
                left: lambda.size(),
                right: mu.size(),
            })?
            .as_polynomial()
    }

    /// Entries ordered by `(mu, lambda)` in the listing order of partitions.
    pub fn ordered(&self) -> Vec<(Partition, Partition, &QtScalar)> {
        let parts = Partition::all(self.n);
        let mut out = Vec::with_capacity(self.entries.len());
        for mu in &parts {
            for lambda in &parts {
                if let Some(v) = self.get(lambda, mu) {
                    out.push((lambda.clone(), mu.clone(), v));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (lambda, mu, v) in self.ordered() {
            let poly = v.as_polynomial()?;
            let poly = poly
                .terms()
                .iter()
                .map(|(m, c)| (c.to_string(), m.q, m.t))
                .collect();
            entries.push(WireEntry { lambda, mu, poly });
        }
        let wire = Wire {
            version: MTABLE_FORMAT_VERSION,
            n: self.n,
            entries,
        };
        serde_json::to_string(&wire).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<MTable> {
        let wire: Wire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if wire.version != MTABLE_FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported table format version {}",
                wire.version
            )));
        }
        let mut entries = HashMap::with_capacity(wire.entries.len());
        for e in wire.entries {
            if e.lambda.size() != wire.n || e.mu.size() != wire.n {
                return Err(Error::SizeMismatch {
                    left: e.lambda.size(),
                    right: e.mu.size(),
                });
            }
            let mut terms = Vec::with_capacity(e.poly.len());
            for (c, i, j) in e.poly {
                let c: num_bigint::BigInt = c
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid integer {c:?}")))?;
                terms.push((c, i, j));
            }
            entries.insert((e.lambda, e.mu), QtScalar::from(QtPoly::from_terms(terms)));
        }
        let expected = Partition::all(wire.n).len().pow(2);
        if entries.len() != expected {
            return Err(Error::Parse(format!(
                "table for n={} has {} entries, expected {expected}",
                wire.n,
                entries.len()
            )));
        }
        Ok(MTable { n: wire.n, entries })
    }
}

#[derive(Serialize, Deserialize)]
struct WireEntry {
    lambda: Partition,
    mu: Partition,
    poly: Vec<(String, u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    version: u32,
    n: usize,
    entries: Vec<WireEntry>,
}

static TABLES: RwLock<Option<HashMap<usize, Arc<MTable>>>> = RwLock::new(None);
static CACHE_DIR: RwLock<Option<PathBuf>> = RwLock::new(None);

pub(crate) fn clear_cache() {
    *TABLES.write() = None;
}

/// Directory for persisted tables; `None` keeps tables in memory only.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.write() = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.read().clone()
}

fn cache_file(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("mtable-n{n}.json"))
}

fn load(dir: &Path, n: usize) -> Option<MTable> {
    let text = std::fs::read_to_string(cache_file(dir, n)).ok()?;
    MTable::from_json(&text).ok().filter(|t| t.n == n)
}

fn store(dir: &Path, table: &MTable) -> std::io::Result<()> {
    let text = table.to_json().map_err(std::io::Error::other)?;
    std::fs::create_dir_all(dir)?;
    let path = cache_file(dir, table.n);
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(tmp, path)
}

/// The table for degree `n`, read through the memory and disk caches.
///
/// Unreadable cache files count as misses; failed writes leave the table in
/// memory only.
pub fn m_table(n: usize) -> Arc<MTable> {
    if let Some(t) = TABLES.read().as_ref().and_then(|m| m.get(&n)) {
        return t.clone();
    }
    let dir = cache_dir();
    let table = match dir.as_deref().and_then(|d| load(d, n)) {
        Some(t) => t,
        None => {
            let t = m_table_bh(n);
            if let Some(d) = dir.as_deref() {
                let _ = store(d, &t);
            }
            t
        }
    };
    let t = Arc::new(table);
    TABLES
        .write()
        .get_or_insert_with(HashMap::new)
        .entry(n)
        .or_insert(t)
        .clone()
}

/// Computes degree `n` by peeling the largest part of `lambda`:
/// `M_{lambda,mu} = sum_nu c^{(lambda_1)}_{mu nu} M_{lambda', nu}`.
pub fn m_table_bh(n: usize) -> MTable {
    let parts = Partition::all(n);
    let lower: Vec<Arc<MTable>> = (0..n).map(m_table).collect();
    let rows: Vec<Vec<((Partition, Partition), QtScalar)>> = parts
        .par_iter()
        .map(|mu| {
            if n == 0 {
                return vec![((mu.clone(), mu.clone()), QtScalar::one())];
            }
            let table = ck_table(mu);
            parts
                .iter()
                .map(|lambda| {
                    let first = lambda.parts()[0];
                    let rest =
                        Partition::new(lambda.parts()[1..].to_vec()).expect("tail of a partition");
                    let sub = &lower[n - first];
                    let v: QtScalar = table.levels[first]
                        .iter()
                        .map(|(nu, c)| c * sub.get(&rest, nu).expect("complete lower table"))
                        .sum();
                    ((lambda.clone(), mu.clone()), v)
                })
                .collect()
        })
        .collect();
    MTable {
        n,
        entries: rows.into_iter().flatten().collect(),
    }
}

/// `H~_mu = sum_lambda M_{lambda,mu} m_lambda`.
pub fn hmu_monomial(mu: &Partition) -> SymFun {
    let table = m_table(mu.size());
    SymFun::from_terms(
        Basis::M,
        Partition::all(mu.size()).into_iter().map(|lambda| {
            let v = table.get(&lambda, mu).expect("complete table").clone();
            (lambda, v)
        }),
    )
}

/// `sum c_mu H~_mu` as a symmetric function in the monomial basis.
pub fn from_hbasis(f: &HExp) -> SymFun {
    let mut out = SymFun::zero(Basis::M);
    for (mu, c) in f.terms() {
        out = out.add(&hmu_monomial(mu).scale(c));
    }
    out
}

/// `F = sum_mu H~_mu / w_mu sum_lambda <m_lambda, F>_* M_{lambda,mu}`.
pub fn to_hbasis(f: &SymFun) -> HExp {
    let mut out = HExp::zero();
    for n in f.degrees() {
        let table = transition::table(n);
        let g = f.component(n).convert(Basis::P);
        let weighted: Vec<(usize, QtScalar)> = g
            .terms()
            .iter()
            .map(|(rho, c)| (table.index[rho], c * star_weight(rho)))
            .collect();
        let m_in_p = table.matrix(Basis::M, Basis::P);
        let pairings: Vec<QtScalar> = table
            .parts
            .iter()
            .map(|lambda| {
                let row = &m_in_p.rows[table.index[lambda]];
                weighted
                    .iter()
                    .filter_map(|(j, v)| {
                        row.iter()
                            .find(|(k, _)| k == j)
                            .map(|(_, x)| v.scale_rational(x))
                    })
                    .sum()
            })
            .collect();
        let mt = m_table(n);
        let terms = table.parts.iter().map(|mu| {
            let s: QtScalar = table
                .parts
                .iter()
                .zip(&pairings)
                .filter(|(_, p)| !p.is_zero())
                .map(|(lambda, p)| p * mt.get(lambda, mu).expect("complete table"))
                .sum();
            let w = &stats(mu).w_mu;
            (mu.clone(), s.checked_div(w).expect("w_mu is nonzero"))
        });
        out = out.add(&HExp::from_terms(terms));
    }
    out
}

/// `nabla^p` acting on a symmetric function, expressed in its basis.
pub fn nabla_sym(f: &SymFun, p: i64) -> SymFun {
    from_hbasis(&to_hbasis(f).nabla(p)).convert(f.basis())
}
