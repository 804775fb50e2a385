//! Arm/leg product forms of the one-cell Pieri coefficients, kept to
//! validate the corner-weight forms.

use crate::error::{Error, Result};
use crate::qtcoeff::QtScalar;
use crate::shapes::{Cell, Partition};

fn row_and_column(mu: &Partition, nu: &Partition) -> Result<(Vec<Cell>, Vec<Cell>)> {
    let cell = mu.cover_cell(nu).ok_or_else(|| Error::NotACover {
        mu: mu.clone(),
        nu: nu.clone(),
    })?;
    let row = nu.cells().filter(|c| c.row == cell.row).collect();
    let col = nu.cells().filter(|c| c.col == cell.col).collect();
    Ok((row, col))
}

/// `q^a - t^{l+1}` for the arm and leg of `s` in `shape`.
fn row_factor(shape: &Partition, s: Cell) -> QtScalar {
    let al = shape.arm_leg(s).expect("cell of the shape");
    QtScalar::monomial(1, al.arm as i64, 0) - QtScalar::monomial(1, 0, al.leg as i64 + 1)
}

/// `t^l - q^{a+1}`.
fn col_factor(shape: &Partition, s: Cell) -> QtScalar {
    let al = shape.arm_leg(s).expect("cell of the shape");
    QtScalar::monomial(1, 0, al.leg as i64) - QtScalar::monomial(1, al.arm as i64 + 1, 0)
}

pub fn d1_raw(mu: &Partition, nu: &Partition) -> Result<QtScalar> {
    let (row, col) = row_and_column(mu, nu)?;
    let mut v = QtScalar::one();
    for s in row {
        v *= &row_factor(nu, s).checked_div(&row_factor(mu, s))?;
    }
    for s in col {
        v *= &col_factor(nu, s).checked_div(&col_factor(mu, s))?;
    }
    Ok(v)
}

pub fn c1_raw(mu: &Partition, nu: &Partition) -> Result<QtScalar> {
    let (row, col) = row_and_column(mu, nu)?;
    let mut v = QtScalar::one();
    for s in row {
        v *= &col_factor(mu, s).checked_div(&col_factor(nu, s))?;
    }
    for s in col {
        v *= &row_factor(mu, s).checked_div(&row_factor(nu, s))?;
    }
    Ok(v)
}
