//! Pieri coefficients for `e_1` multiplication and skewing in the modified
//! Macdonald basis, and their `k`-cell extensions.

pub mod raw;

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qtcoeff::QtScalar;
use crate::shapes::{corner_data, stats, Partition};
use crate::symfun::{scalar_plethysm, SymFun};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PieriKind {
    C1,
    D1,
    Ck,
    Dk,
}

/// One Pieri coefficient between `nu` and `mu = nu + k cells`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieriEdge {
    pub mu: Partition,
    pub nu: Partition,
    pub value: QtScalar,
    pub kind: PieriKind,
    pub k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    C,
    D,
}

static C1_MEMO: RwLock<Option<HashMap<(Partition, Partition), QtScalar>>> = RwLock::new(None);
static CK_MEMO: RwLock<Option<HashMap<Partition, Arc<CkTable>>>> = RwLock::new(None);

pub(crate) fn clear_cache() {
    *C1_MEMO.write() = None;
    *CK_MEMO.write() = None;
}

fn check_cover(mu: &Partition, nu: &Partition) -> Result<crate::shapes::Cell> {
    mu.cover_cell(nu).ok_or_else(|| Error::NotACover {
        mu: mu.clone(),
        nu: nu.clone(),
    })
}

/// Coefficient of `H~_nu` in `e_1^perp H~_mu`, from the corner weights of `mu`.
pub fn c1(mu: &Partition, nu: &Partition) -> Result<QtScalar> {
    let key = (mu.clone(), nu.clone());
    if let Some(v) = C1_MEMO.read().as_ref().and_then(|m| m.get(&key)) {
        return Ok(v.clone());
    }
    let cell = check_cover(mu, nu)?;
    let cd = corner_data(mu);
    let k = 1 + cd
        .removable
        .iter()
        .position(|(c, _)| *c == cell)
        .expect("removed cell is a corner");
    let xk = cd.x(k);
    let xk_inv = xk.inv()?;
    let one = QtScalar::one();
    let mut num = xk.checked_div(&QtScalar::m_tilde())?;
    for i in 0..=cd.ell() {
        num *= &(&one - cd.u(i) * &xk_inv);
    }
    let mut den = QtScalar::one();
    for i in (1..=cd.ell()).filter(|&i| i != k) {
        den *= &(&one - cd.x(i) * &xk_inv);
    }
    let v = num.checked_div(&den)?;
    C1_MEMO
        .write()
        .get_or_insert_with(HashMap::new)
        .insert(key, v.clone());
    Ok(v)
}

/// Coefficient of `H~_mu` in `e_1 H~_nu`, from the corner weights of `nu`.
pub fn d1(mu: &Partition, nu: &Partition) -> Result<QtScalar> {
    let cell = check_cover(mu, nu)?;
    let cd = corner_data(nu);
    let k = cd
        .addable
        .iter()
        .position(|(c, _)| *c == cell)
        .expect("added cell is addable");
    let uk = cd.u_bar(k);
    let uk_inv = uk.inv()?;
    let one = QtScalar::one();
    let mut num = uk_inv.clone();
    for i in 1..=cd.ell() {
        num *= &(&one - cd.x_bar(i) * &uk_inv);
    }
    let mut den = QtScalar::one();
    for i in (0..=cd.ell()).filter(|&i| i != k) {
        den *= &(&one - cd.u_bar(i) * &uk_inv);
    }
    num.checked_div(&den)
}

/// `(d_{mu nu}, M (w_nu / w_mu) c_{mu nu})`.
pub fn duality_check(mu: &Partition, nu: &Partition) -> Result<(QtScalar, QtScalar)> {
    let d = d1(mu, nu)?;
    let c = c1(mu, nu)?;
    let ratio = stats(nu).w_mu.checked_div(&stats(mu).w_mu)?;
    Ok((d, QtScalar::m() * ratio * c))
}

/// All `c^{(k)}_{mu nu}` for one `mu`, indexed by `k`.
#[derive(Debug)]
pub struct CkTable {
    pub levels: Vec<HashMap<Partition, QtScalar>>,
}

/// Builds `c^{(k)}` level by level from `c^{(k+1)}_{mu nu} =
/// (B_mu - B_nu)^{-1} sum_alpha c^{(k)}_{mu alpha} c_{alpha nu} T_alpha / T_nu`.
pub fn ck_table(mu: &Partition) -> Arc<CkTable> {
    if let Some(t) = CK_MEMO.read().as_ref().and_then(|m| m.get(mu)) {
        return t.clone();
    }
    let b_mu = stats(mu).b_mu.clone();
    let mut levels: Vec<HashMap<Partition, QtScalar>> =
        vec![[(mu.clone(), QtScalar::one())].into_iter().collect()];
    for k in 1..=mu.size() {
        let prev = &levels[k - 1];
        let mut acc: HashMap<Partition, Vec<QtScalar>> = HashMap::new();
        for (alpha, ca) in prev {
            for nu in alpha.covers_down() {
                let cell = alpha.cover_cell(&nu).expect("lower cover");
                let c = c1(alpha, &nu).expect("lower cover");
                let mut term = ca * &c;
                if k > 1 {
                    term *= &cell.weight();
                }
                acc.entry(nu).or_default().push(term);
            }
        }
        let mut level = HashMap::new();
        for (nu, terms) in acc {
            let sum: QtScalar = terms.into_iter().sum();
            let v = if k > 1 {
                let b = &b_mu - &stats(&nu).b_mu;
                sum.checked_div(&b)
                    .expect("B_mu - B_nu is a nonzero sum of monomials")
            } else {
                sum
            };
            if !v.is_zero() {
                level.insert(nu, v);
            }
        }
        levels.push(level);
    }
    let t = Arc::new(CkTable { levels });
    CK_MEMO
        .write()
        .get_or_insert_with(HashMap::new)
        .entry(mu.clone())
        .or_insert(t)
        .clone()
}

fn check_contained(mu: &Partition, nu: &Partition, k: usize) -> Result<()> {
    if !mu.contains(nu) || mu.size() != nu.size() + k {
        return Err(Error::NotContained {
            mu: mu.clone(),
            nu: nu.clone(),
            k,
        });
    }
    Ok(())
}

/// Coefficient of `H~_nu` in `h_k^perp H~_mu`.
pub fn ck(mu: &Partition, nu: &Partition, k: usize) -> Result<QtScalar> {
    check_contained(mu, nu, k)?;
    Ok(ck_table(mu).levels[k].get(nu).cloned().unwrap_or_default())
}

/// Coefficient of `H~_mu` in `e_k[X/M] H~_nu`.
pub fn dk(mu: &Partition, nu: &Partition, k: usize) -> Result<QtScalar> {
    let c = ck(mu, nu, k)?;
    Ok(c * stats(nu).w_mu.checked_div(&stats(mu).w_mu)?)
}

/// Closed form of `sum_nu c_{mu nu} (T_mu/T_nu)^k` (side `C`) or of
/// `sum_mu d_{mu nu} (T_mu/T_nu)^k` (side `D`, with `shape = nu`).
pub fn sum_rule(shape: &Partition, k: usize, side: Side) -> QtScalar {
    let st = stats(shape);
    match (side, k) {
        (Side::C, 0) => st.b_mu.clone(),
        (Side::D, 0) => QtScalar::one(),
        (Side::C, _) => {
            let qt = QtScalar::monomial(1, 1, 1);
            let arg = st.d_mu.checked_div(&qt).expect("qt is nonzero");
            let h = scalar_plethysm(&SymFun::h(k + 1), &arg);
            qt.checked_div(&QtScalar::m()).expect("M is nonzero") * h
        }
        (Side::D, _) => {
            let e = scalar_plethysm(&SymFun::e(k - 1), &st.d_mu);
            if k.is_multiple_of(2) {
                e.neg()
            } else {
                e
            }
        }
    }
}

/// The left side of [`sum_rule`], summed over covers.
pub fn cover_sum(shape: &Partition, k: usize, side: Side) -> Result<QtScalar> {
    let mut total = QtScalar::zero();
    match side {
        Side::C => {
            for nu in shape.covers_down() {
                let w = shape
                    .cover_cell(&nu)
                    .expect("lower cover")
                    .weight()
                    .pow(k as i64);
                total += &(c1(shape, &nu)? * w);
            }
        }
        Side::D => {
            for mu in shape.covers_up() {
                let w = mu
                    .cover_cell(shape)
                    .expect("upper cover")
                    .weight()
                    .pow(k as i64);
                total += &(d1(&mu, shape)? * w);
            }
        }
    }
    Ok(total)
}

/// Edges `nu -> mu` for `e_1` multiplication out of `nu`.
pub fn e1_edges(nu: &Partition) -> Vec<PieriEdge> {
    nu.covers_up()
        .into_iter()
        .map(|mu| {
            let value = d1(&mu, nu).expect("upper cover");
            PieriEdge {
                mu,
                nu: nu.clone(),
                value,
                kind: PieriKind::D1,
                k: 1,
            }
        })
        .collect()
}

/// Edges `mu -> nu` for `e_1` skewing out of `mu`.
pub fn skew_edges(mu: &Partition) -> Vec<PieriEdge> {
    mu.covers_down()
        .into_iter()
        .map(|nu| {
            let value = c1(mu, &nu).expect("lower cover");
            PieriEdge {
                mu: mu.clone(),
                nu,
                value,
                kind: PieriKind::C1,
                k: 1,
            }
        })
        .collect()
}

/// Nonzero `c^{(k)}` edges out of `mu`, ordered by `nu`.
pub fn ck_edges(mu: &Partition, k: usize) -> Vec<PieriEdge> {
    let table = ck_table(mu);
    let mut out: Vec<PieriEdge> = table
        .levels
        .get(k)
        .map(|lv| {
            lv.iter()
                .map(|(nu, v)| PieriEdge {
                    mu: mu.clone(),
                    nu: nu.clone(),
                    value: v.clone(),
                    kind: PieriKind::Ck,
                    k,
                })
                .collect()
        })
        .unwrap_or_default();
    out.sort_by(|a, b| b.nu.cmp(&a.nu));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::part;

    fn s(x: &str) -> QtScalar {
        x.parse().unwrap()
    }

    #[test]
    fn one_cell_values() {
        let e = Partition::empty();
        assert_eq!(c1(&part(&[1]), &e).unwrap(), s("1"));
        assert_eq!(c1(&part(&[2]), &part(&[1])).unwrap(), s("1+q"));
        assert_eq!(c1(&part(&[1, 1]), &part(&[1])).unwrap(), s("1+t"));
        assert_eq!(d1(&part(&[1]), &e).unwrap(), s("1"));
        assert_eq!(d1(&part(&[2]), &part(&[1])).unwrap(), s("(1-t)/(q-t)"));
        assert_eq!(d1(&part(&[1, 1]), &part(&[1])).unwrap(), s("(1-q)/(t-q)"));
        assert_eq!(
            c1(&part(&[2]), &e),
            Err(Error::NotACover {
                mu: part(&[2]),
                nu: e.clone()
            })
        );
        assert!(d1(&part(&[1, 1]), &part(&[2])).is_err());
    }

    #[test]
    fn duality_pairs() {
        for (mu, nu) in [
            (part(&[1]), Partition::empty()),
            (part(&[2]), part(&[1])),
            (part(&[2, 1]), part(&[2])),
        ] {
            let (a, b) = duality_check(&mu, &nu).unwrap();
            assert_eq!(a, b, "{mu} {nu}");
        }
        assert_eq!(
            duality_check(&part(&[1]), &Partition::empty()).unwrap(),
            (s("1"), s("1"))
        );
    }

    #[test]
    fn k_cell_values() {
        let e = Partition::empty();
        assert_eq!(ck(&part(&[2]), &e, 2).unwrap(), s("1"));
        assert_eq!(ck(&part(&[1, 1]), &e, 2).unwrap(), s("1"));
        assert_eq!(ck(&part(&[2, 1]), &part(&[2, 1]), 0).unwrap(), s("1"));
        assert_eq!(
            dk(&part(&[1]), &e, 1).unwrap(),
            QtScalar::m().inv().unwrap()
        );
        for mu in Partition::all(2) {
            assert_eq!(dk(&mu, &e, 2).unwrap(), stats(&mu).w_mu.inv().unwrap());
        }
        assert!(matches!(
            ck(&part(&[2]), &part(&[1, 1]), 0),
            Err(Error::NotContained { .. })
        ));
        assert!(matches!(
            ck(&part(&[2]), &e, 1),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn sum_rule_examples() {
        assert_eq!(sum_rule(&part(&[2]), 0, Side::C), s("1+q"));
        assert_eq!(sum_rule(&part(&[1]), 0, Side::D), s("1"));
        assert_eq!(sum_rule(&part(&[1]), 1, Side::D), s("1"));
        assert_eq!(cover_sum(&part(&[1]), 1, Side::D).unwrap(), s("1"));
    }

    #[test]
    fn sums_through_size_six() {
        for n in 0..=6 {
            for mu in Partition::all(n) {
                for k in 0..=3 {
                    if n > 0 {
                        assert_eq!(
                            cover_sum(&mu, k, Side::C).unwrap(),
                            sum_rule(&mu, k, Side::C),
                            "c {mu} {k}"
                        );
                    }
                    assert_eq!(
                        cover_sum(&mu, k, Side::D).unwrap(),
                        sum_rule(&mu, k, Side::D),
                        "d {mu} {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn cancelled_forms_match_raw_forms() {
        for n in 1..=6 {
            for mu in Partition::all(n) {
                for nu in mu.covers_down() {
                    assert_eq!(
                        c1(&mu, &nu).unwrap(),
                        raw::c1_raw(&mu, &nu).unwrap(),
                        "{mu} {nu}"
                    );
                    assert_eq!(
                        d1(&mu, &nu).unwrap(),
                        raw::d1_raw(&mu, &nu).unwrap(),
                        "{mu} {nu}"
                    );
                    let (a, b) = duality_check(&mu, &nu).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn edge_listing() {
        let edges = e1_edges(&part(&[1]));
        assert_eq!(edges.len(), 2);
        assert_eq!(edges[0].mu, part(&[1, 1]));
        assert_eq!(edges[1].value, s("(1-t)/(q-t)"));
        let js = serde_json::to_string(&edges[1]).unwrap();
        assert!(js.contains(r#""kind":"d1""#));
        assert_eq!(ck_edges(&part(&[2]), 2).len(), 1);
    }
}
