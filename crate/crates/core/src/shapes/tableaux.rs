use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qtcoeff::QtScalar;

use super::{Cell, Partition};

/// Standard filling of a shape; `rows[r]` lists the labels of row `r`
/// (bottom row first) from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    cells: Vec<Cell>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut cells = vec![None; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &label) in row.iter().enumerate() {
                if label == 0 || label > n {
                    return Err(Error::LabelOutOfRange { label, size: n });
                }
                if cells[label - 1].replace(Cell::new(r, c)).is_some() {
                    return Err(Error::InvalidPartition(format!("label {label} repeated")));
                }
                let left_ok = c == 0 || row[c - 1] < label;
                let below_ok = r == 0 || rows[r - 1][c] < label;
                if !left_ok || !below_ok {
                    return Err(Error::InvalidPartition(format!(
                        "rows {rows:?} are not standard"
                    )));
                }
            }
        }
        let cells = cells
            .into_iter()
            .map(|c| c.expect("bijective labels"))
            .collect();
        Ok(StandardTableau { shape, rows, cells })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Cell holding `label` (1-based).
    pub fn cell(&self, label: usize) -> Result<Cell> {
        if label == 0 || label > self.size() {
            return Err(Error::LabelOutOfRange {
                label,
                size: self.size(),
            });
        }
        Ok(self.cells[label - 1])
    }

    /// `w_T(k) = q^col t^row` of the cell labelled `k`.
    pub fn weight(&self, label: usize) -> Result<QtScalar> {
        Ok(self.cell(label)?.weight())
    }

    /// The tableau obtained by dropping labels larger than `k`.
    pub fn restrict(&self, k: usize) -> StandardTableau {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| row.iter().copied().filter(|&l| l <= k).collect::<Vec<_>>())
            .filter(|row| !row.is_empty())
            .collect();
        StandardTableau::from_rows(rows).expect("restriction of a standard tableau")
    }

    /// Chain of shapes `T^(0) ⊂ T^(1) ⊂ ... ⊂ T^(n)`.
    pub fn shape_chain(&self) -> Vec<Partition> {
        let mut parts: Vec<usize> = Vec::new();
        let mut out = vec![Partition::empty()];
        for c in &self.cells {
            if c.row == parts.len() {
                parts.push(0);
            }
            parts[c.row] += 1;
            out.push(Partition::new(parts.clone()).expect("standard chain"));
        }
        out
    }
}

/// `tableau_weight(T, k)`.
pub fn tableau_weight(t: &StandardTableau, k: usize) -> Result<QtScalar> {
    t.weight(k)
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// All standard tableaux of `mu`: the largest label is placed in each
/// removable corner in decreasing-row order and the rest is filled recursively.
pub fn standard_tableaux(mu: &Partition) -> Vec<StandardTableau> {
    fn rec(mu: &Partition) -> Vec<Vec<Vec<usize>>> {
        let n = mu.size();
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (cell, smaller) in mu.removable_cells().into_iter().zip(mu.covers_down()) {
            for mut rows in rec(&smaller) {
                if rows.len() == cell.row {
                    rows.push(Vec::new());
                }
                rows[cell.row].push(n);
                out.push(rows);
            }
        }
        out
    }
    rec(mu)
        .into_iter()
        .map(|rows| StandardTableau::from_rows(rows).expect("standard by construction"))
        .collect()
}

/// `n! / prod hooks`.
pub fn hook_length_count(mu: &Partition) -> BigInt {
    let mut num = BigInt::one();
    for k in 2..=mu.size() {
        num *= BigInt::from(k);
    }
    let mut den = BigInt::one();
    for c in mu.cells() {
        let al = mu.arm_leg(c).expect("cell of the shape");
        den *= BigInt::from(al.arm + al.leg + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::super::part;
    use super::*;

    #[test]
    fn counts_match_hook_lengths() {
        assert_eq!(standard_tableaux(&part(&[2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&part(&[5])).len(), 1);
        assert_eq!(standard_tableaux(&part(&[2, 2])).len(), 2);
        for n in 0..=7 {
            for mu in Partition::all(n) {
                assert_eq!(
                    BigInt::from(standard_tableaux(&mu).len()),
                    hook_length_count(&mu),
                    "{mu}"
                );
            }
        }
    }

    #[test]
    fn weights_of_labels() {
        let a = StandardTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        let b = StandardTableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap();
        assert!(a.weight(1).unwrap().is_one());
        assert_eq!(a.weight(2).unwrap(), QtScalar::q());
        assert_eq!(a.weight(3).unwrap(), QtScalar::t());
        assert_eq!(b.weight(2).unwrap(), QtScalar::t());
        assert_eq!(b.weight(3).unwrap(), QtScalar::q());
        assert_eq!(
            a.weight(4),
            Err(Error::LabelOutOfRange { label: 4, size: 3 })
        );
    }

    #[test]
    fn restriction_and_chain() {
        let a = StandardTableau::from_rows(vec![vec![1, 2, 4], vec![3]]).unwrap();
        assert_eq!(a.restrict(3).rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(a.shape_chain().last().unwrap(), &part(&[3, 1]));
        assert!(StandardTableau::from_rows(vec![vec![2, 1]]).is_err());
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[1,2,4],[3]]");
    }
}
