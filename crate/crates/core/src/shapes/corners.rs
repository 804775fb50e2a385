use crate::qtcoeff::QtScalar;

use super::{Cell, Partition};

/// Corner weight ladders of a partition, both ordered by decreasing row.
///
/// With `l` removable corners there are `l + 1` addable cells. Indices follow
/// the usual convention: `x(0) = 1/(qt)` and `x(k)` for `k = 1..=l` are the
/// removable weights, `u_bar(i)` for `i = 0..=l` the addable weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerData {
    pub removable: Vec<(Cell, QtScalar)>,
    pub addable: Vec<(Cell, QtScalar)>,
    pub x0: QtScalar,
}

pub fn corner_data(mu: &Partition) -> CornerData {
    let removable = mu
        .removable_cells()
        .into_iter()
        .map(|c| (c, c.weight()))
        .collect();
    let addable = mu
        .addable_cells()
        .into_iter()
        .map(|c| (c, c.weight()))
        .collect();
    CornerData {
        removable,
        addable,
        x0: QtScalar::monomial(1, -1, -1),
    }
}

impl CornerData {
    /// Number of removable corners.
    pub fn ell(&self) -> usize {
        self.removable.len()
    }

    pub fn x(&self, k: usize) -> QtScalar {
        if k == 0 {
            self.x0.clone()
        } else {
            self.removable[k - 1].1.clone()
        }
    }

    /// `qt x_k`, with `x_bar(0) = 1`.
    pub fn x_bar(&self, k: usize) -> QtScalar {
        self.x(k) * QtScalar::monomial(1, 1, 1)
    }

    pub fn u_bar(&self, i: usize) -> QtScalar {
        self.addable[i].1.clone()
    }

    /// `u_bar_i / (qt)`.
    pub fn u(&self, i: usize) -> QtScalar {
        self.u_bar(i) * QtScalar::monomial(1, -1, -1)
    }

    /// `sum_k x_k - sum_i u_i`, which equals `M~ B_mu`.
    pub fn tilde_side(&self) -> QtScalar {
        let xs: QtScalar = (0..=self.ell()).map(|k| self.x(k)).sum();
        let us: QtScalar = (0..=self.ell()).map(|i| self.u(i)).sum();
        xs - us
    }

    /// `sum_k x_bar_k - sum_i u_bar_i`, which equals `M B_mu`.
    pub fn barred_side(&self) -> QtScalar {
        let xs: QtScalar = (0..=self.ell()).map(|k| self.x_bar(k)).sum();
        let us: QtScalar = (0..=self.ell()).map(|i| self.u_bar(i)).sum();
        xs - us
    }
}
