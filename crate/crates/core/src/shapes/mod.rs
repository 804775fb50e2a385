//! Partitions and Ferrers diagrams in French notation: row 0 is the bottom
//! row and a cell `(row, col)` carries the weight `t^row q^col`.

mod corners;
mod tableaux;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use parking_lot::RwLock;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qtcoeff::QtScalar;

pub use corners::{corner_data, CornerData};
pub use tableaux::{hook_length_count, standard_tableaux, tableau_weight, StandardTableau};

/// Weakly decreasing sequence of positive parts; the empty partition is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `t^row q^col`.
    pub fn weight(self) -> QtScalar {
        QtScalar::monomial(1, self.col as i64, self.row as i64)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `r`, zero above the diagram.
    pub fn row(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.col < self.row(c.row)
    }

    /// Cells row by row from the bottom.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| Cell::new(r, c)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().take_while(|&&p| p > c).count())
                .collect(),
        )
    }

    /// `nu ⊆ self` as diagrams.
    pub fn contains(&self, nu: &Partition) -> bool {
        nu.len() <= self.len() && nu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn add_cell(&self, row: usize) -> Option<Partition> {
        let mut parts = self.0.clone();
        if row == parts.len() {
            parts.push(1);
        } else if row < parts.len() && (row == 0 || parts[row - 1] > parts[row]) {
            parts[row] += 1;
        } else {
            return None;
        }
        Some(Partition(parts))
    }

    pub fn remove_cell(&self, row: usize) -> Option<Partition> {
        if row >= self.len() || self.row(row + 1) == self.0[row] {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Some(Partition(parts))
    }

    /// Removable corner cells by decreasing row.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (0..self.len())
            .rev()
            .filter(|&r| self.row(r) > self.row(r + 1))
            .map(|r| Cell::new(r, self.0[r] - 1))
            .collect()
    }

    /// Addable cells by decreasing row.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (0..=self.len())
            .rev()
            .filter(|&r| r == 0 || self.row(r - 1) > self.row(r))
            .map(|r| Cell::new(r, self.row(r)))
            .collect()
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut run = 0usize;
        for (k, &p) in self.0.iter().enumerate() {
            if k > 0 && self.0[k - 1] == p {
                run += 1;
            } else {
                run = 1;
            }
            acc *= BigInt::from(p) * BigInt::from(run);
        }
        acc
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Counts of cells strictly East, North, West and South of `c`.
    pub fn arm_leg(&self, c: Cell) -> Result<ArmLeg> {
        if !self.contains_cell(c) {
            return Err(Error::CellOutsideShape {
                row: c.row,
                col: c.col,
                shape: self.clone(),
            });
        }
        let arm = self.0[c.row] - c.col - 1;
        let leg = self
            .0
            .iter()
            .skip(c.row + 1)
            .take_while(|&&p| p > c.col)
            .count();
        Ok(ArmLeg {
            arm,
            leg,
            coarm: c.col,
            coleg: c.row,
        })
    }

    /// Partitions one cell above, by decreasing row of the added cell.
    pub fn covers_up(&self) -> Vec<Partition> {
        self.addable_cells()
            .into_iter()
            .map(|c| self.add_cell(c.row).expect("addable"))
            .collect()
    }

    /// Partitions one cell below, by decreasing row of the removed cell.
    pub fn covers_down(&self) -> Vec<Partition> {
        self.removable_cells()
            .into_iter()
            .map(|c| self.remove_cell(c.row).expect("removable"))
            .collect()
    }

    pub fn covers(&self, direction: Direction) -> Vec<Partition> {
        match direction {
            Direction::Up => self.covers_up(),
            Direction::Down => self.covers_down(),
        }
    }

    /// The single cell of `self` missing from `nu`, if `nu` is a lower cover.
    pub fn cover_cell(&self, nu: &Partition) -> Option<Cell> {
        if nu.size() + 1 != self.size() || !self.contains(nu) {
            return None;
        }
        (0..self.len())
            .find(|&r| self.row(r) != nu.row(r))
            .map(|r| Cell::new(r, nu.row(r)))
    }

    pub fn stats(&self) -> Arc<Stats> {
        stats(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArmLeg {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

/// Shape statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stats {
    /// Product of the cell weights.
    pub t_mu: QtScalar,
    /// Sum of the cell weights.
    pub b_mu: QtScalar,
    /// `prod (1 - weight)` over cells other than the origin.
    pub pi_mu: QtScalar,
    /// `prod (q^a - t^{l+1})(t^l - q^{a+1})`.
    pub w_mu: QtScalar,
    /// `M B_mu - 1`.
    pub d_mu: QtScalar,
}

fn compute_stats(mu: &Partition) -> Stats {
    let mut b = QtScalar::zero();
    let mut pi = QtScalar::one();
    let mut w = QtScalar::one();
    let (mut sq, mut st) = (0i64, 0i64);
    for c in mu.cells() {
        let al = mu.arm_leg(c).expect("cell of the shape");
        let wt = c.weight();
        b += &wt;
        sq += c.col as i64;
        st += c.row as i64;
        if c != Cell::new(0, 0) {
            pi *= &(QtScalar::one() - &wt);
        }
        let (a, l) = (al.arm as i64, al.leg as i64);
        let f1 = QtScalar::monomial(1, a, 0) - QtScalar::monomial(1, 0, l + 1);
        let f2 = QtScalar::monomial(1, 0, l) - QtScalar::monomial(1, a + 1, 0);
        w *= &(f1 * f2);
    }
    let d = QtScalar::m() * &b - QtScalar::one();
    Stats {
        t_mu: QtScalar::monomial(1, sq, st),
        b_mu: b,
        pi_mu: pi,
        w_mu: w,
        d_mu: d,
    }
}

static STATS: RwLock<Option<HashMap<Partition, Arc<Stats>>>> = RwLock::new(None);

/// Memoized shape statistics.
pub fn stats(mu: &Partition) -> Arc<Stats> {
    if let Some(s) = STATS.read().as_ref().and_then(|m| m.get(mu)) {
        return s.clone();
    }
    let s = Arc::new(compute_stats(mu));
    STATS
        .write()
        .get_or_insert_with(HashMap::new)
        .insert(mu.clone(), s.clone());
    s
}

pub(crate) fn clear_cache() {
    *STATS.write() = None;
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,1`, `[3,2,1]`, `(3,2,1)`, and `[]` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split([',', ' '])
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout the tests: `part(&[2, 1])`.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}
