//! Exact rational change-of-basis matrices, one table per degree, all routed
//! through the power-sum basis.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use super::Basis;
use crate::shapes::Partition;

/// Sparse rows: `rows[i]` lists `(j, a_ij)` with nonzero entries.
#[derive(Clone, Debug)]
pub struct Matrix {
    pub rows: Vec<Vec<(usize, BigRational)>>,
}

impl Matrix {
    fn from_dense(d: Vec<Vec<BigRational>>) -> Self {
        let rows = d
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        Matrix { rows }
    }

    fn to_dense(&self, n: usize) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|row| {
                let mut d = vec![BigRational::zero(); n];
                for (j, x) in row {
                    d[*j] = x.clone();
                }
                d
            })
            .collect()
    }

    fn identity(n: usize) -> Self {
        Matrix {
            rows: (0..n).map(|i| vec![(i, BigRational::one())]).collect(),
        }
    }

    fn mul(&self, other: &Matrix, n: usize) -> Matrix {
        let mut out = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut acc = vec![BigRational::zero(); n];
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    acc[*j] += a * b;
                }
            }
            out.push(
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect(),
            );
        }
        Matrix { rows: out }
    }
}

/// Gauss-Jordan inverse of an invertible square matrix.
fn invert(m: &Matrix, n: usize) -> Matrix {
    let mut a = m.to_dense(n);
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrices are invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    let d = &f * &a[col][j];
                    a[r][j] -= d;
                }
                if !inv[col][j].is_zero() {
                    let d = &f * &inv[col][j];
                    inv[r][j] -= d;
                }
            }
        }
    }
    Matrix::from_dense(inv)
}

/// All transition data for one degree.
pub struct Table {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    to_p: [Arc<Matrix>; 5],
    from_p: [Arc<Matrix>; 5],
    combined: RwLock<HashMap<(Basis, Basis), Arc<Matrix>>>,
}

fn slot(b: Basis) -> usize {
    match b {
        Basis::M => 0,
        Basis::E => 1,
        Basis::H => 2,
        Basis::P => 3,
        Basis::S => 4,
    }
}

/// Sparse power-sum expansion with rational coefficients.
type PExp = HashMap<Partition, BigRational>;

fn p_product(a: &PExp, b: &PExp) -> PExp {
    let mut out = PExp::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            let mut parts = la.parts().to_vec();
            parts.extend_from_slice(lb.parts());
            *out.entry(Partition::from_unsorted(parts))
                .or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `h_n` (or `e_n` when `signed`) as `sum_rho (+-) p_rho / z_rho`.
fn elementary_p(n: usize, signed: bool) -> PExp {
    Partition::all(n)
        .into_iter()
        .map(|rho| {
            let mut c = BigRational::new(BigInt::one(), rho.z());
            if signed && (n - rho.len()) % 2 == 1 {
                c = -c;
            }
            (rho, c)
        })
        .collect()
}

struct Generators {
    h: Vec<PExp>,
    e: Vec<PExp>,
}

impl Generators {
    fn new(n: usize) -> Self {
        Generators {
            h: (0..=n).map(|k| elementary_p(k, false)).collect(),
            e: (0..=n).map(|k| elementary_p(k, true)).collect(),
        }
    }

    fn product(&self, gens: &[PExp], lambda: &[usize]) -> PExp {
        let mut acc: PExp = [(Partition::empty(), BigRational::one())]
            .into_iter()
            .collect();
        for &k in lambda {
            acc = p_product(&acc, &gens[k]);
        }
        acc
    }
}

/// Integer expansion of `det(g_{lambda_i - i + j})` as a sum of generator
/// products, by cofactor expansion along rows with memoized minors.
fn jacobi_trudi(lambda: &[usize]) -> HashMap<Partition, BigInt> {
    fn minor(
        lambda: &[usize],
        row: usize,
        used: u64,
        memo: &mut HashMap<(usize, u64), HashMap<Partition, BigInt>>,
    ) -> HashMap<Partition, BigInt> {
        let l = lambda.len();
        if row == l {
            return [(Partition::empty(), BigInt::one())].into_iter().collect();
        }
        if let Some(v) = memo.get(&(row, used)) {
            return v.clone();
        }
        let mut out: HashMap<Partition, BigInt> = HashMap::new();
        let mut sign_pos = 0usize;
        for col in 0..l {
            if used & (1 << col) != 0 {
                continue;
            }
            let sign = if sign_pos.is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            sign_pos += 1;
            let idx = lambda[row] as i64 - row as i64 + col as i64;
            if idx < 0 {
                continue;
            }
            let rest = minor(lambda, row + 1, used | (1 << col), memo);
            for (nu, c) in rest {
                let mut parts = nu.parts().to_vec();
                if idx > 0 {
                    parts.push(idx as usize);
                }
                *out.entry(Partition::from_unsorted(parts))
                    .or_insert_with(BigInt::zero) += &sign * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        memo.insert((row, used), out.clone());
        out
    }
    minor(lambda, 0, 0, &mut HashMap::new())
}

/// Number of maps from the parts of `lambda` to the rows of `mu` whose
/// fibres sum to the rows: the coefficient of `m_mu` in `p_lambda`.
fn p_to_m_count(lambda: &[usize], mu: &[usize]) -> BigInt {
    fn rec(
        lambda: &[usize],
        i: usize,
        room: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
    ) -> BigInt {
        if i == lambda.len() {
            return if room.iter().all(|&r| r == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let key = (i, room.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for j in 0..room.len() {
            if room[j] >= lambda[i] {
                room[j] -= lambda[i];
                total += rec(lambda, i + 1, room, memo);
                room[j] += lambda[i];
            }
        }
        memo.insert(key, total.clone());
        total
    }
    rec(lambda, 0, &mut mu.to_vec(), &mut HashMap::new())
}

impl Table {
    fn build(n: usize) -> Table {
        let parts = Partition::all(n);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let size = parts.len();
        let gens = Generators::new(n);
        let dense = |exp: &PExp| {
            let mut row = vec![BigRational::zero(); size];
            for (rho, c) in exp {
                row[index[rho]] = c.clone();
            }
            row
        };

        let p_in_m: Vec<Vec<BigRational>> = parts
            .iter()
            .map(|lam| {
                parts
                    .iter()
                    .map(|mu| BigRational::from_integer(p_to_m_count(lam.parts(), mu.parts())))
                    .collect()
            })
            .collect();
        let p_in_m = Matrix::from_dense(p_in_m);
        let m_to_p = invert(&p_in_m, size);

        let e_to_p = Matrix::from_dense(
            parts
                .iter()
                .map(|l| dense(&gens.product(&gens.e, l.parts())))
                .collect(),
        );
        let h_to_p = Matrix::from_dense(
            parts
                .iter()
                .map(|l| dense(&gens.product(&gens.h, l.parts())))
                .collect(),
        );
        let s_to_p = Matrix::from_dense(
            parts
                .iter()
                .map(|lam| {
                    let conj = lam.conjugate();
                    let (shape, g) = if lam.len() > conj.len() {
                        (conj, &gens.e)
                    } else {
                        (lam.clone(), &gens.h)
                    };
                    let mut acc = PExp::new();
                    for (nu, c) in jacobi_trudi(shape.parts()) {
                        let c = BigRational::from_integer(c);
                        for (rho, x) in gens.product(g, nu.parts()) {
                            *acc.entry(rho).or_insert_with(BigRational::zero) += &c * x;
                        }
                    }
                    dense(&acc)
                })
                .collect(),
        );
        let e_from = invert(&e_to_p, size);
        let h_from = invert(&h_to_p, size);
        let s_from = invert(&s_to_p, size);
        let id = Arc::new(Matrix::identity(size));
        Table {
            parts,
            index,
            to_p: [
                Arc::new(m_to_p),
                Arc::new(e_to_p),
                Arc::new(h_to_p),
                id.clone(),
                Arc::new(s_to_p),
            ],
            from_p: [
                Arc::new(p_in_m),
                Arc::new(e_from),
                Arc::new(h_from),
                id,
                Arc::new(s_from),
            ],
            combined: RwLock::new(HashMap::new()),
        }
    }

    /// Row `i` expresses the `i`-th element of `from` in the basis `to`.
    pub fn matrix(&self, from: Basis, to: Basis) -> Arc<Matrix> {
        if from == Basis::P {
            return self.from_p[slot(to)].clone();
        }
        if to == Basis::P {
            return self.to_p[slot(from)].clone();
        }
        if let Some(m) = self.combined.read().get(&(from, to)) {
            return m.clone();
        }
        let m = Arc::new(self.to_p[slot(from)].mul(&self.from_p[slot(to)], self.parts.len()));
        self.combined.write().insert((from, to), m.clone());
        m
    }
}

static TABLES: RwLock<Option<HashMap<usize, Arc<Table>>>> = RwLock::new(None);

pub fn table(n: usize) -> Arc<Table> {
    if let Some(t) = TABLES.read().as_ref().and_then(|m| m.get(&n)) {
        return t.clone();
    }
    let t = Arc::new(Table::build(n));
    TABLES
        .write()
        .get_or_insert_with(HashMap::new)
        .entry(n)
        .or_insert(t)
        .clone()
}

pub(crate) fn clear_cache() {
    *TABLES.write() = None;
}

/// Sign `(-1)^{|lambda| - l(lambda)}`.
pub fn omega_sign(lambda: &Partition) -> bool {
    (lambda.size() - lambda.len()) % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::part;
    use num_traits::Signed;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn entry(m: &Matrix, t: &Table, from: &[usize], to: &[usize]) -> BigRational {
        let i = t.index[&part(from)];
        let j = t.index[&part(to)];
        m.rows[i]
            .iter()
            .find(|(k, _)| *k == j)
            .map(|(_, x)| x.clone())
            .unwrap_or_else(BigRational::zero)
    }

    #[test]
    fn power_sums_in_monomials() {
        assert_eq!(p_to_m_count(&[1, 1], &[1, 1]), BigInt::from(2));
        assert_eq!(p_to_m_count(&[1, 1], &[2]), BigInt::from(1));
        assert_eq!(p_to_m_count(&[2, 1], &[1, 1, 1]), BigInt::zero());
        assert_eq!(p_to_m_count(&[1, 1, 1], &[2, 1]), BigInt::from(3));
    }

    #[test]
    fn classical_small_transitions() {
        let t = table(2);
        let hm = t.matrix(Basis::H, Basis::M);
        assert_eq!(entry(&hm, &t, &[2], &[2]), r(1, 1));
        assert_eq!(entry(&hm, &t, &[2], &[1, 1]), r(1, 1));
        let sp = t.matrix(Basis::S, Basis::P);
        assert_eq!(entry(&sp, &t, &[1, 1], &[1, 1]), r(1, 2));
        assert_eq!(entry(&sp, &t, &[1, 1], &[2]), r(-1, 2));
    }

    #[test]
    fn schur_is_orthonormal_and_unitriangular() {
        for n in 1..=6 {
            let t = table(n);
            let sp = t.matrix(Basis::S, Basis::P);
            for (i, a) in sp.rows.iter().enumerate() {
                for (j, b) in sp.rows.iter().enumerate() {
                    let mut acc = BigRational::zero();
                    for (k, x) in a {
                        if let Some((_, y)) = b.iter().find(|(l, _)| l == k) {
                            acc += x * y * BigRational::from_integer(t.parts[*k].z());
                        }
                    }
                    let want = if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(acc, want, "n={n} {} {}", t.parts[i], t.parts[j]);
                }
            }
            let sm = t.matrix(Basis::S, Basis::M);
            for (i, row) in sm.rows.iter().enumerate() {
                for (j, x) in row {
                    assert!(!x.is_negative());
                    assert!(*j >= i, "dominance order");
                }
                assert_eq!(
                    entry(&sm, &t, t.parts[i].parts(), t.parts[i].parts()),
                    r(1, 1)
                );
            }
        }
    }

    #[test]
    fn round_trips_are_identities() {
        let t = table(4);
        let size = t.parts.len();
        for a in Basis::ALL {
            for b in Basis::ALL {
                let there = t.matrix(a, b);
                let back = t.matrix(b, a);
                let prod = there.mul(&back, size);
                for (i, row) in prod.rows.iter().enumerate() {
                    assert_eq!(row, &vec![(i, BigRational::one())]);
                }
            }
        }
    }
}
