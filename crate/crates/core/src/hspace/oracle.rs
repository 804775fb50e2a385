//! Independent construction of `H~_mu` by projecting `e_n[X/M]` onto the
//! eigenspaces of `D_0`, using only the symmetric-function layer.

use std::collections::{BTreeMap, HashMap};

use super::MTable;
use crate::error::{Error, Result};
use crate::qtcoeff::QtScalar;
use crate::shapes::{stats, Partition};
use crate::symfun::{Alphabet, Basis, SymFun};

/// `H~_mu = w_mu prod_{nu != mu} (D_0 - l_nu)/(l_mu - l_nu) e_n[X/M]` with
/// `l_mu = 1 - M B_mu`, for every `mu` of size `n`, in the power-sum basis.
pub fn hmu_oracle(n: usize) -> Result<BTreeMap<Partition, SymFun>> {
    let parts = Partition::all(n);
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let m = QtScalar::m();
    let eigen: Vec<QtScalar> = parts
        .iter()
        .map(|mu| QtScalar::one() - &m * &stats(mu).b_mu)
        .collect();
    for i in 0..eigen.len() {
        for j in 0..i {
            if eigen[i] == eigen[j] {
                return Err(Error::DegenerateSpectrum(n));
            }
        }
    }

    // Column rho of the matrix is D_0 p_rho.
    let d0: Vec<Vec<(usize, QtScalar)>> = parts
        .iter()
        .map(|rho| {
            let image = SymFun::element(Basis::P, rho.clone()).d_k(0);
            image
                .terms()
                .iter()
                .map(|(k, v)| (index[k], v.clone()))
                .collect()
        })
        .collect();
    let apply = |v: &[QtScalar], shift: &QtScalar| -> Vec<QtScalar> {
        let mut out: Vec<QtScalar> = v.iter().map(|x| -(x * shift)).collect();
        for (j, col) in d0.iter().enumerate() {
            if v[j].is_zero() {
                continue;
            }
            for (i, a) in col {
                out[i.to_owned()] += &(a * &v[j]);
            }
        }
        out
    };

    let start = SymFun::e(n)
        .plethysm_plain(&Alphabet::scaled(m.inv()?))
        .convert(Basis::P);
    let seed: Vec<QtScalar> = parts.iter().map(|rho| start.coeff(rho)).collect();
    let mut out = BTreeMap::new();
    for (i, mu) in parts.iter().enumerate() {
        let mut v = seed.clone();
        let mut scale = stats(mu).w_mu.clone();
        for (j, lj) in eigen.iter().enumerate() {
            if i != j {
                v = apply(&v, lj);
                scale = scale.checked_div(&(&eigen[i] - lj))?;
            }
        }
        let f = SymFun::from_terms(
            Basis::P,
            parts.iter().cloned().zip(v).map(|(k, x)| (k, x * &scale)),
        );
        out.insert(mu.clone(), f);
    }
    Ok(out)
}

/// The monomial table read off from [`hmu_oracle`].
pub fn oracle_m_table(n: usize) -> Result<MTable> {
    let hs = hmu_oracle(n)?;
    let mut entries = HashMap::new();
    for (mu, f) in hs {
        let f = f.convert(Basis::M);
        for lambda in Partition::all(n) {
            entries.insert((lambda.clone(), mu.clone()), f.coeff(&lambda));
        }
    }
    Ok(MTable::new(n, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hspace::{hmu_monomial, m_table};
    use crate::shapes::part;

    #[test]
    fn small_degrees() {
        let h1 = hmu_oracle(1).unwrap();
        assert_eq!(h1[&part(&[1])], "m[1]".parse().unwrap());
        let h2 = hmu_oracle(2).unwrap();
        assert_eq!(h2[&part(&[2])], "m[2] + (1+q)*m[1,1]".parse().unwrap());
        assert_eq!(h2[&part(&[1, 1])], "m[2] + (1+t)*m[1,1]".parse().unwrap());
    }

    #[test]
    fn agrees_with_pieri_tables() {
        for n in 0..=4 {
            assert_eq!(&oracle_m_table(n).unwrap(), m_table(n).as_ref(), "n={n}");
            for (mu, f) in hmu_oracle(n).unwrap() {
                assert_eq!(f, hmu_monomial(&mu));
            }
        }
    }

    #[test]
    fn star_orthogonality() {
        for n in 1..=4 {
            let hs = hmu_oracle(n).unwrap();
            for (lambda, f) in &hs {
                for (mu, g) in &hs {
                    let expected = if lambda == mu {
                        stats(mu).w_mu.clone()
                    } else {
                        QtScalar::zero()
                    };
                    assert_eq!(f.star_product(g), expected, "{lambda} {mu}");
                }
            }
        }
    }
}
