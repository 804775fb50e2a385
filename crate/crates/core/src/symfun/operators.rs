//! The plethystic operators `D_k` and `D_k^*`.

use super::plethysm::Alphabet;
use super::{Basis, SymFun};
use crate::qtcoeff::QtScalar;

impl SymFun {
    /// `D_k F = F[X + M/z] sum_i (-z)^i e_i[X] |_{z^k}`; `k` may be negative.
    pub fn d_k(&self, k: i64) -> SymFun {
        let graded = self.plethysm(&Alphabet::translate(QtScalar::m(), -1));
        let mut out = SymFun::zero(Basis::P);
        for (zexp, g) in graded {
            // z^zexp (-z)^i contributes at z^k when i = k - zexp.
            let i = k - zexp;
            if i < 0 {
                continue;
            }
            let mut term = g.mul(&SymFun::e(i as usize));
            if i % 2 == 1 {
                term = term.neg();
            }
            out = out.add(&term);
        }
        out.convert(self.basis)
    }

    /// `D_k^* F = F[X - M~/z] sum_i z^i h_i[X] |_{z^k}`.
    pub fn d_k_star(&self, k: i64) -> SymFun {
        let graded = self.plethysm(&Alphabet::translate(QtScalar::m_tilde().neg(), -1));
        let mut out = SymFun::zero(Basis::P);
        for (zexp, g) in graded {
            let i = k - zexp;
            if i < 0 {
                continue;
            }
            out = out.add(&g.mul(&SymFun::h(i as usize)));
        }
        out.convert(self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{part, Partition};

    fn s(x: &str) -> QtScalar {
        x.parse().unwrap()
    }

    fn span(n: usize) -> Vec<SymFun> {
        Partition::all(n)
            .into_iter()
            .map(|l| SymFun::element(Basis::S, l))
            .collect()
    }

    #[test]
    fn small_values() {
        assert_eq!(
            SymFun::p(1).d_k(0),
            SymFun::p(1).scale(&(QtScalar::one() - QtScalar::m()))
        );
        assert_eq!(SymFun::one().d_k(1), SymFun::e(1).neg());
        assert_eq!(SymFun::one().d_k(2), SymFun::e(2));
        assert_eq!(SymFun::e(1).d_k(-1), SymFun::constant(QtScalar::m()));
        assert!(SymFun::one().d_k(-1).is_zero());
        let h2 = SymFun::element(Basis::M, part(&[2]))
            .add(&SymFun::element(Basis::M, part(&[1, 1])).scale(&s("1+q")));
        let eig = QtScalar::one() - QtScalar::m() * s("1+q");
        assert_eq!(h2.d_k(0), h2.scale(&eig));
    }

    #[test]
    fn commutator_with_e1_raises_index() {
        let m = QtScalar::m();
        for n in 0..=4 {
            for f in span(n) {
                for k in 1..=3 {
                    let lhs = f
                        .mul_e1()
                        .d_k(k - 1)
                        .sub(&f.d_k(k - 1).mul_e1())
                        .scale(&m.inv().unwrap());
                    assert_eq!(lhs, f.d_k(k), "n={n} k={k} f={f}");
                }
            }
        }
    }

    #[test]
    fn table_rows_two_and_five() {
        let m = QtScalar::m();
        let mt = QtScalar::m_tilde();
        for n in 0..=3 {
            for f in span(n) {
                for k in -1..=2 {
                    let ii = f.mul_e1().d_k(k).sub(&f.d_k(k).mul_e1());
                    assert_eq!(ii, f.d_k(k + 1).scale(&m));
                    let ii_star = f.mul_e1().d_k_star(k).sub(&f.d_k_star(k).mul_e1());
                    assert_eq!(ii_star, f.d_k_star(k + 1).scale(&mt.neg()));
                    let v = f.skew_e1().d_k(k).sub(&f.d_k(k).skew_e1());
                    assert_eq!(v, f.d_k(k - 1));
                    let v_star = f.skew_e1().d_k_star(k).sub(&f.d_k_star(k).skew_e1());
                    assert_eq!(v_star, f.d_k_star(k - 1).neg());
                }
            }
        }
    }

    #[test]
    fn mixed_commutator() {
        // (D_a D_b^* - D_b^* D_a) P = M (qt)^{-a}/(tq - 1) h_{a+b}[X(1 - tq)] P.
        let m = QtScalar::m();
        for n in 0..=2 {
            for f in span(n) {
                for a in -1i64..=3 {
                    for b in -1i64..=3 {
                        let s_ab = a + b;
                        if !(1..=3).contains(&s_ab) {
                            continue;
                        }
                        let lhs = f.d_k_star(b).d_k(a).sub(&f.d_k(a).d_k_star(b));
                        let kernel = SymFun::h(s_ab as usize)
                            .plethysm_plain(&Alphabet::scaled(s("1 - q*t")));
                        let c = m.clone() * QtScalar::monomial(1, -a, -a)
                            / (QtScalar::monomial(1, 1, 1) - QtScalar::one());
                        assert_eq!(lhs, kernel.mul(&f).scale(&c), "a={a} b={b} f={f}");
                    }
                }
            }
        }
    }

    #[test]
    fn star_product_through_omega_phi() {
        for n in 0..=3 {
            for f in span(n) {
                let phi = f.plethysm_plain(&Alphabet::scaled(QtScalar::m())).omega();
                for g in span(n) {
                    assert_eq!(f.star_product(&g), phi.hall_product(&g));
                    assert_eq!(f.star_product(&g), g.star_product(&f));
                }
            }
        }
    }

    #[test]
    fn down_conjugates_d_k() {
        for n in 0..=3 {
            for f in span(n) {
                for k in 0..=2i64 {
                    let lhs = f.down().d_k(k).down();
                    let rhs = f.d_k_star(k);
                    let rhs = if k % 2 == 1 { rhs.neg() } else { rhs };
                    assert_eq!(lhs, rhs, "k={k} f={f}");
                }
            }
        }
    }
}
