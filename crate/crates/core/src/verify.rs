//! Named identity checks grouped into suites, shared by the command line
//! and the acceptance run.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hspace::{
    hmu_monomial, hmu_oracle, m_table, nabla_sym, pi_word_adjoint, pi_word_adjoint_operator,
    tableau_m, tableau_skew_hm, to_hbasis, HExp,
};
use crate::pieri::{c1, cover_sum, d1, duality_check, raw, sum_rule, Side};
use crate::qalgebra::{
    apply_q, d_bridge_check, non_coprime_pair, q_const, q_kk_multiplicative, q_m0_eigenvalue,
    q_word, q_word_choice, symbol, word_symbol, QIndex,
};
use crate::qtcoeff::QtScalar;
use crate::shapes::{corner_data, stats, Partition};
use crate::symfun::{Alphabet, Basis, SymFun};

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n    counterexample: {c}")?;
        }
        Ok(())
    }
}

type Outcome = std::result::Result<(), String>;

fn run(name: String, body: impl FnOnce() -> Outcome) -> Check {
    match body() {
        Ok(()) => Check {
            name,
            passed: true,
            counterexample: None,
        },
        Err(c) => Check {
            name,
            passed: false,
            counterexample: Some(c),
        },
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn same<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T, ctx: impl FnOnce() -> String) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: left = {lhs}, right = {rhs}", ctx()))
    }
}

fn partitions_upto(lo: usize, hi: usize) -> impl Iterator<Item = Partition> {
    (lo..=hi).flat_map(Partition::all)
}

fn h_units(n: usize) -> Vec<HExp> {
    Partition::all(n).into_iter().map(HExp::unit).collect()
}

fn schur_span(n: usize) -> Vec<SymFun> {
    Partition::all(n)
        .into_iter()
        .map(|l| SymFun::element(Basis::S, l))
        .collect()
}

fn qt() -> QtScalar {
    QtScalar::monomial(1, 1, 1)
}

fn minv() -> QtScalar {
    QtScalar::m().inv().expect("M is nonzero")
}

// Pieri coefficients.

pub fn raw_pieri(max_n: usize) -> Check {
    run(
        format!(
            "one-cell coefficients: arm/leg products equal corner-weight forms, |mu| <= {max_n}"
        ),
        || {
            for mu in partitions_upto(1, max_n) {
                for nu in mu.covers_down() {
                    same(
                        &c1(&mu, &nu).map_err(err)?,
                        &raw::c1_raw(&mu, &nu).map_err(err)?,
                        || format!("c {mu} -> {nu}"),
                    )?;
                    same(
                        &d1(&mu, &nu).map_err(err)?,
                        &raw::d1_raw(&mu, &nu).map_err(err)?,
                        || format!("d {mu} -> {nu}"),
                    )?;
                }
            }
            Ok(())
        },
    )
}

pub fn duality(max_n: usize) -> Check {
    run(
        format!("duality d_mu,nu w_mu = M c_mu,nu w_nu on cover pairs, |mu| <= {max_n}"),
        || {
            for mu in partitions_upto(1, max_n) {
                for nu in mu.covers_down() {
                    let (a, b) = duality_check(&mu, &nu).map_err(err)?;
                    same(&a, &b, || format!("{mu} -> {nu}"))?;
                }
            }
            Ok(())
        },
    )
}

pub fn corner_identities(max_n: usize) -> Check {
    run(
        format!("corner weights sum to M B_mu and M~ B_mu, |mu| <= {max_n}"),
        || {
            let mt = QtScalar::m_tilde();
            for mu in partitions_upto(0, max_n) {
                let cd = corner_data(&mu);
                let b = &stats(&mu).b_mu;
                same(&cd.barred_side(), &(QtScalar::m() * b), || {
                    format!("barred {mu}")
                })?;
                same(&cd.tilde_side(), &(&mt * b), || format!("tilde {mu}"))?;
            }
            Ok(())
        },
    )
}

pub fn sum_rules(max_n: usize, max_k: usize) -> Check {
    run(
        format!("weighted Pieri sums equal their closed forms, |mu| <= {max_n}, k <= {max_k}"),
        || {
            for mu in partitions_upto(0, max_n) {
                for k in 0..=max_k {
                    if !mu.is_empty() {
                        same(
                            &cover_sum(&mu, k, Side::C).map_err(err)?,
                            &sum_rule(&mu, k, Side::C),
                            || format!("c-side mu={mu} k={k}"),
                        )?;
                    }
                    same(
                        &cover_sum(&mu, k, Side::D).map_err(err)?,
                        &sum_rule(&mu, k, Side::D),
                        || format!("d-side nu={mu} k={k}"),
                    )?;
                }
            }
            Ok(())
        },
    )
}

// Eigenoperators.

fn v_op(f: &HExp, k: i64) -> HExp {
    f.nabla(k).skew_e1().nabla(-k)
}

pub fn nabla_skew_commutator(max_n: usize, max_k: usize) -> Check {
    run(
        format!("[nabla^-k e1^perp nabla^k, e1] acts by (qt/(qt-1)) h_k[D_mu(1/qt-1)], k <= {max_k}, |mu| <= {max_n}"),
        || {
            for mu in partitions_upto(0, max_n) {
                let h = HExp::unit(mu.clone());
                for k in 1..=max_k {
                    let lhs = v_op(&h.mul_e1(), k as i64).sub(&v_op(&h, k as i64).mul_e1());
                    same(&lhs, &h.scale(&q_m0_eigenvalue(k, &mu)), || format!("mu={mu} k={k}"))?;
                }
            }
            Ok(())
        },
    )
}

pub fn commutator_commutes_with_d0(max_n: usize, max_m: usize) -> Check {
    run(
        format!(
            "[nabla^-m e1^perp nabla^m, e1] commutes with D_0, m <= {max_m}, degree <= {max_n}"
        ),
        || {
            for n in 0..=max_n {
                for f in h_units(n) {
                    for m in 0..=max_m as i64 {
                        let op = |g: &HExp| v_op(&g.mul_e1(), m).sub(&v_op(g, m).mul_e1());
                        same(&op(&f.d0()), &op(&f).d0(), || format!("f={f} m={m}"))?;
                    }
                }
            }
            Ok(())
        },
    )
}

fn bracket(f: &HExp, first: QIndex, second: QIndex) -> Result<HExp> {
    let a = apply_q(first, &apply_q(second, f)?)?;
    let b = apply_q(second, &apply_q(first, f)?)?;
    Ok(a.sub(&b).scale(&minv()))
}

pub fn bracket_independence(max_n: usize, max_m: usize) -> Check {
    run(
        format!("(1/M)[Q_(b,-1), Q_(a,1)] is the same eigenoperator for all a+b = m, m <= {max_m}, degree <= {max_n}"),
        || {
            for n in 0..=max_n {
                for mu in Partition::all(n) {
                    let h = HExp::unit(mu.clone());
                    for m in 1..=max_m as i64 {
                        let expected = h.scale(&q_m0_eigenvalue(m as usize, &mu));
                        for a in 0..=m {
                            let got = bracket(&h, QIndex::new(m - a, -1), QIndex::new(a, 1)).map_err(err)?;
                            same(&got, &expected, || format!("mu={mu} a={a} b={}", m - a))?;
                        }
                    }
                }
            }
            Ok(())
        },
    )
}

pub fn reversed_bracket_sign(max_n: usize, max_m: usize) -> Check {
    run(
        format!("(1/M)[Q_(a,1), Q_(b,-1)] equals minus (qt/(qt-1)) h_(a+b)[D_mu(1/qt-1)], m <= {max_m}, degree <= {max_n}"),
        || {
            for mu in partitions_upto(0, max_n) {
                let h = HExp::unit(mu.clone());
                for m in 1..=max_m as i64 {
                    let expected = h.scale(&q_m0_eigenvalue(m as usize, &mu)).neg();
                    for a in 0..=m {
                        let got = bracket(&h, QIndex::new(a, 1), QIndex::new(m - a, -1)).map_err(err)?;
                        same(&got, &expected, || format!("mu={mu} a={a} b={}", m - a))?;
                    }
                }
            }
            Ok(())
        },
    )
}

pub fn d0_star_lowering(max_n: usize, max_m: usize) -> Check {
    run(format!("[D_0^*, V_m] = M~ V_(m-1) with V_m = nabla^-m e1^perp nabla^m, m <= {max_m}, degree <= {max_n}"), || {
        let mt = QtScalar::m_tilde();
        for n in 0..=max_n {
            for f in h_units(n) {
                for m in 1..=max_m as i64 {
                    let lhs = v_op(&f, m).d0_star().sub(&v_op(&f.d0_star(), m));
                    same(&lhs, &v_op(&f, m - 1).scale(&mt), || format!("f={f} m={m}"))?;
                }
            }
        }
        Ok(())
    })
}

pub fn d0_brackets(max_n: usize, max_a: usize) -> Check {
    run(format!("Q_(a,1) = (1/M)[Q_(a-1,1), D_0] and Q_(b,-1) = (1/M)[D_0, Q_(b-1,-1)], a, b <= {max_a}, degree <= {max_n}"), || {
        let d0 = QIndex::new(1, 0);
        for n in 0..=max_n {
            for f in h_units(n) {
                for a in 1..=max_a as i64 {
                    let up = bracket(&f, QIndex::new(a - 1, 1), d0).map_err(err)?;
                    same(&up, &f.q_m1(a), || format!("f={f} a={a}"))?;
                    let down = bracket(&f, d0, QIndex::new(a - 1, -1)).map_err(err)?;
                    same(&down, &f.q_m_neg1(a), || format!("f={f} b={a}"))?;
                }
            }
        }
        Ok(())
    })
}

pub fn e_n_over_m(max_n: usize) -> Check {
    run(
        format!("e_n[X/M] = sum_mu H~_mu / w_mu through both expansions, n <= {max_n}"),
        || {
            let scale = Alphabet::scaled(minv());
            for n in 0..=max_n {
                let via_table = to_hbasis(&SymFun::e(n).plethysm_plain(&scale));
                let via_pieri = HExp::one().mul_ek_over_m(n);
                for mu in Partition::all(n) {
                    let w = stats(&mu).w_mu.inv().map_err(err)?;
                    same(&via_table.coeff(&mu), &w, || format!("table route mu={mu}"))?;
                    same(&via_pieri.coeff(&mu), &w, || format!("Pieri route mu={mu}"))?;
                }
            }
            Ok(())
        },
    )
}

// Plethystic operators.

pub fn mixed_commutator(max_n: usize) -> Check {
    run(
        format!(
            "[D_a, D_b^*] = M (qt)^-a/(qt-1) h_(a+b)[X(1-qt)] for a+b in 1..=3, degree <= {max_n}"
        ),
        || {
            for n in 0..=max_n {
                for f in schur_span(n) {
                    for a in -1i64..=4 {
                        for b in -1i64..=4 {
                            let s = a + b;
                            if !(1..=3).contains(&s) {
                                continue;
                            }
                            let lhs = f.d_k_star(b).d_k(a).sub(&f.d_k(a).d_k_star(b));
                            let kernel = SymFun::h(s as usize)
                                .plethysm_plain(&Alphabet::scaled(QtScalar::one() - qt()));
                            let c = QtScalar::m() * QtScalar::monomial(1, -a, -a)
                                / (qt() - QtScalar::one());
                            same(&lhs, &kernel.mul(&f).scale(&c), || {
                                format!("f={f} a={a} b={b}")
                            })?;
                        }
                    }
                }
            }
            Ok(())
        },
    )
}

pub fn raising_lowering_rows(max_n: usize) -> Check {
    run(
        format!("D_k and D_k^* commutators with e1 and e1^perp, k in -1..=2, degree <= {max_n}"),
        || {
            let m = QtScalar::m();
            let mt = QtScalar::m_tilde();
            for n in 0..=max_n {
                for f in schur_span(n) {
                    for k in -1..=2 {
                        let ctx = || format!("f={f} k={k}");
                        same(
                            &f.mul_e1().d_k(k).sub(&f.d_k(k).mul_e1()),
                            &f.d_k(k + 1).scale(&m),
                            ctx,
                        )?;
                        let lhs = f.mul_e1().d_k_star(k).sub(&f.d_k_star(k).mul_e1());
                        same(&lhs, &f.d_k_star(k + 1).scale(&mt.neg()), ctx)?;
                        same(
                            &f.skew_e1().d_k(k).sub(&f.d_k(k).skew_e1()),
                            &f.d_k(k - 1),
                            ctx,
                        )?;
                        let lhs = f.skew_e1().d_k_star(k).sub(&f.d_k_star(k).skew_e1());
                        same(&lhs, &f.d_k_star(k - 1).neg(), ctx)?;
                    }
                }
            }
            Ok(())
        },
    )
}

pub fn nabla_conjugation_rows(max_n: usize) -> Check {
    run(
        format!("nabla conjugates e1, D_1^*, e1^perp and D_-1^* as stated, degree <= {max_n}"),
        || {
            let mt = QtScalar::m_tilde();
            for n in 0..=max_n {
                for f in schur_span(n) {
                    let ctx = || format!("f={f}");
                    let lhs = nabla_sym(&nabla_sym(&f, -1).mul_e1(), 1);
                    same(&lhs, &f.d_k(1).neg(), ctx)?;
                    let lhs = nabla_sym(&nabla_sym(&f, -1).d_k_star(1), 1);
                    same(&lhs, &f.mul_e1(), ctx)?;
                    let lhs = nabla_sym(&nabla_sym(&f, 1).skew_e1(), -1);
                    same(&lhs, &f.d_k(-1).scale(&minv()), ctx)?;
                    let lhs = nabla_sym(&nabla_sym(&f, 1).d_k_star(-1), -1);
                    same(&lhs, &f.skew_e1().scale(&mt.neg()), ctx)?;
                }
            }
            Ok(())
        },
    )
}

pub fn diagonal_rows(max_n: usize) -> Check {
    run(
        format!("D_0 and D_0^* act on H~_mu by -D_mu(q,t) and -D_mu(1/q,1/t), |mu| <= {max_n}"),
        || {
            for mu in partitions_upto(0, max_n) {
                let h = hmu_monomial(&mu);
                let d = stats(&mu).d_mu.clone();
                same(&h.d_k(0), &h.scale(&d.neg()), || format!("D_0 mu={mu}"))?;
                same(
                    &h.d_k_star(0),
                    &h.scale(&d.invert_variables().neg()),
                    || format!("D_0^* mu={mu}"),
                )?;
            }
            Ok(())
        },
    )
}

pub fn star_adjoints(max_n: usize) -> Check {
    run(format!("D_k is *-adjoint to (-1)^k D_-k and D_k^* to (-qt)^k D_-k^*, k in -2..=2, degree <= {max_n}"), || {
        for n in 0..=max_n {
            let span = schur_span(n);
            for f in &span {
                for g in &span {
                    for k in -2i64..=2 {
                        let sign = QtScalar::from(if k % 2 == 0 { 1 } else { -1 });
                        let lhs = f.d_k(k).star_product(g);
                        let rhs = f.star_product(&g.d_k(-k)) * &sign;
                        same(&lhs, &rhs, || format!("D f={f} g={g} k={k}"))?;
                        let lhs = f.d_k_star(k).star_product(g);
                        let rhs = f.star_product(&g.d_k_star(-k)) * sign * qt().pow(k);
                        same(&lhs, &rhs, || format!("D^* f={f} g={g} k={k}"))?;
                    }
                }
            }
        }
        Ok(())
    })
}

pub fn down_involution(max_n: usize) -> Check {
    run(format!("down conjugates nabla to nabla^-1 and D_k to (-1)^k D_k^*, k in 0..=2, degree <= {max_n}"), || {
        for n in 0..=max_n {
            for f in schur_span(n) {
                same(&nabla_sym(&f.down(), 1).down(), &nabla_sym(&f, -1), || format!("nabla f={f}"))?;
                for k in 0..=2i64 {
                    let rhs = f.d_k_star(k);
                    let rhs = if k % 2 == 1 { rhs.neg() } else { rhs };
                    same(&f.down().d_k(k).down(), &rhs, || format!("D_k f={f} k={k}"))?;
                }
            }
        }
        Ok(())
    })
}

// Tableau sums.

pub fn tableau_tables(max_n: usize) -> Check {
    run(
        format!("tableau sums reproduce every M_(lambda,mu), n <= {max_n}"),
        || {
            for n in 0..=max_n {
                let table = m_table(n);
                for mu in Partition::all(n) {
                    for lambda in Partition::all(n) {
                        let v = tableau_m(&lambda, &mu).map_err(err)?;
                        same(&v, table.get(&lambda, &mu).expect("complete table"), || {
                            format!("lambda={lambda} mu={mu}")
                        })?;
                    }
                }
            }
            Ok(())
        },
    )
}

pub fn tableau_skews(max_n: usize) -> Check {
    run(
        format!("chain sums reproduce h_m^perp H~_mu, |mu| <= {max_n}, m <= |mu|"),
        || {
            for mu in partitions_upto(0, max_n) {
                for m in 0..=mu.size() {
                    let h = HExp::unit(mu.clone());
                    same(&tableau_skew_hm(&mu, m), &h.skew_hk(m), || {
                        format!("mu={mu} m={m}")
                    })?;
                }
            }
            Ok(())
        },
    )
}

pub fn word_routes(max_n: usize, max_entry: usize) -> Check {
    run(format!("tableau and operator evaluations of e1^perp words agree, |mu| <= {max_n}, entries <= {max_entry}"), || {
        let base = max_entry + 1;
        for mu in partitions_upto(1, max_n) {
            let n = mu.size();
            for code in 0..base.pow(n as u32) {
                let a: Vec<usize> = (0..n).map(|i| code / base.pow(i as u32) % base).collect();
                let lhs = pi_word_adjoint(&mu, &a).map_err(err)?;
                let rhs = pi_word_adjoint_operator(&mu, &a).map_err(err)?;
                same(&lhs, &rhs, || format!("mu={mu} a={a:?}"))?;
            }
        }
        Ok(())
    })
}

// Bridges between routes.

pub fn d_bridge(max_n: usize, max_k: i64) -> Check {
    run(
        format!(
            "plethystic D_k equals the operator word Q_(1,k), k in 0..={max_k}, degree <= {max_n}"
        ),
        || {
            for k in 0..=max_k {
                for n in 0..=max_n {
                    let bad = d_bridge_check(k, n).map_err(err)?;
                    if let Some(b) = bad.first() {
                        return Err(format!(
                            "k={k} mu={}: plethystic = {}, operator = {}",
                            b.mu, b.plethystic, b.operator
                        ));
                    }
                }
            }
            Ok(())
        },
    )
}

pub fn constant_routes(max_m: i64, max_n: i64) -> Check {
    run(format!("tableau formula for Q_(m,n)(-1)^n equals the word route, coprime m <= {max_m}, n <= {max_n}"), || {
        for n in 1..=max_n {
            for m in 0..=max_m {
                if num_integer::Integer::gcd(&m, &n) != 1 {
                    continue;
                }
                let start = if n % 2 == 0 { HExp::one() } else { HExp::one().neg() };
                let route = apply_q(QIndex::new(m, n), &start).map_err(err)?;
                same(&q_const(m, n).map_err(err)?, &route, || format!("(m,n)=({m},{n})"))?;
            }
        }
        Ok(())
    })
}

pub fn nabla_shift(max_n: usize) -> Check {
    run(format!("Q_(m+n,n) = nabla Q_(m,n) nabla^-1 for (m,n) in (1,1),(1,2),(2,1),(3,2), degree <= {max_n}"), || {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (3, 2)] {
            for deg in 0..=max_n {
                for f in h_units(deg) {
                    let lhs = apply_q(QIndex::new(m + n, n), &f).map_err(err)?;
                    let rhs = apply_q(QIndex::new(m, n), &f.nabla(-1)).map_err(err)?.nabla(1);
                    same(&lhs, &rhs, || format!("(m,n)=({m},{n}) f={f}"))?;
                }
            }
        }
        Ok(())
    })
}

// Well-definedness of Q_(u,v).

pub fn split_choices(max_n: usize) -> Check {
    run(format!("every admissible bracket for Q_(2,2), Q_(4,2), Q_(3,3) acts the same, degree <= {max_n}"), || {
        for (u, v) in [(2i64, 2i64), (4, 2), (3, 3)] {
            let k = num_integer::Integer::gcd(&u, &v) as usize;
            let words: Vec<_> = (0..k).map(|i| q_word_choice(u, v, i)).collect::<Result<_>>().map_err(err)?;
            for deg in 0..=max_n {
                for f in h_units(deg) {
                    let base = words[0].apply(&f);
                    for (i, w) in words.iter().enumerate().skip(1) {
                        let (first, second) = non_coprime_pair(u, v, i).map_err(err)?;
                        same(&w.apply(&f), &base, || format!("({u},{v}) via {first},{second} f={f}"))?;
                    }
                }
            }
        }
        Ok(())
    })
}

pub fn diagonal_routes(max_n: usize, k: usize) -> Check {
    run(
        format!(
            "Q_({k},{k}) as conjugated multiplication equals its bracket word, degree <= {max_n}"
        ),
        || {
            let word = q_word(QIndex::new(k as i64, k as i64)).map_err(err)?;
            for deg in 0..=max_n {
                for f in h_units(deg) {
                    same(&q_kk_multiplicative(k, &f), &word.apply(&f), || {
                        format!("f={f}")
                    })?;
                }
            }
            Ok(())
        },
    )
}

pub fn symbol_words(max_sum: i64) -> Check {
    run(
        format!("symbol recursion matches the symbolized word, coprime m + n <= {max_sum}"),
        || {
            for n in 1..=max_sum {
                for m in 0..=max_sum - n {
                    if num_integer::Integer::gcd(&m, &n) != 1 {
                        continue;
                    }
                    let w = q_word(QIndex::new(m, n)).map_err(err)?;
                    same(
                        &symbol(m, n).map_err(err)?,
                        &word_symbol(&w).map_err(err)?,
                        || format!("(m,n)=({m},{n})"),
                    )?;
                }
            }
            Ok(())
        },
    )
}

// Tables and the oracle.

pub fn oracle_agreement(max_n: usize) -> Check {
    run(
        format!("Pieri-built H~_mu equal the D_0 eigenprojections, n <= {max_n}"),
        || {
            for n in 0..=max_n {
                for (mu, f) in hmu_oracle(n).map_err(err)? {
                    same(&hmu_monomial(&mu), &f.convert(Basis::M), || {
                        format!("mu={mu}")
                    })?;
                }
            }
            Ok(())
        },
    )
}

pub fn star_orthogonality(max_n: usize) -> Check {
    run(
        format!("<H~_lambda, H~_mu>_* = w_mu if lambda = mu and 0 otherwise, n <= {max_n}"),
        || {
            for n in 0..=max_n {
                let hs: Vec<(Partition, SymFun)> = Partition::all(n)
                    .into_iter()
                    .map(|mu| (mu.clone(), hmu_monomial(&mu)))
                    .collect();
                for (lambda, f) in &hs {
                    for (mu, g) in &hs {
                        let expected = if lambda == mu {
                            stats(mu).w_mu.clone()
                        } else {
                            QtScalar::zero()
                        };
                        same(&f.star_product(g), &expected, || {
                            format!("lambda={lambda} mu={mu}")
                        })?;
                    }
                }
            }
            Ok(())
        },
    )
}

pub fn table_positivity(max_n: usize) -> Check {
    run(format!("every M_(lambda,mu) is a polynomial with nonnegative integer coefficients and M_((n),mu) = 1, n <= {max_n}"), || {
        for n in 0..=max_n {
            let table = m_table(n);
            let top = Partition::from_unsorted(if n == 0 { vec![] } else { vec![n] });
            for (lambda, mu, v) in table.ordered() {
                let p = v.as_polynomial().map_err(|e| format!("lambda={lambda} mu={mu}: {e}"))?;
                if let Some((m, c)) = p.terms().iter().find(|(_, c)| c.is_negative()) {
                    return Err(format!("lambda={lambda} mu={mu}: coefficient {c} at q^{} t^{}", m.q, m.t));
                }
                if lambda == top {
                    same(v, &QtScalar::one(), || format!("mu={mu}"))?;
                }
            }
        }
        Ok(())
    })
}

/// Suites selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Pieri,
    Sums,
    Eigen,
    Commutator,
    Tableaux,
    Bridge,
    Oracle,
    Qwelldef,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "all",
        "pieri",
        "sums",
        "eigen",
        "commutator",
        "tableaux",
        "bridge",
        "oracle",
        "qwelldef",
    ];
    const EACH: [Suite; 8] = [
        Suite::Pieri,
        Suite::Sums,
        Suite::Eigen,
        Suite::Commutator,
        Suite::Tableaux,
        Suite::Bridge,
        Suite::Oracle,
        Suite::Qwelldef,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            Suite::All => 0,
            Suite::Pieri => 1,
            Suite::Sums => 2,
            Suite::Eigen => 3,
            Suite::Commutator => 4,
            Suite::Tableaux => 5,
            Suite::Bridge => 6,
            Suite::Oracle => 7,
            Suite::Qwelldef => 8,
        };
        f.write_str(Suite::NAMES[i])
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Runs a suite with every degree bound set to `max_n`; bounds on other
/// parameters (`k`, `m`, word entries) are fixed small ranges.
pub fn run_suite(suite: Suite, max_n: usize) -> Vec<Check> {
    let n = max_n;
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|s| run_suite(*s, n)).collect(),
        Suite::Pieri => vec![raw_pieri(n), duality(n), corner_identities(n)],
        Suite::Sums => vec![sum_rules(n, 3), e_n_over_m(n)],
        Suite::Eigen => vec![
            nabla_skew_commutator(n, 3),
            commutator_commutes_with_d0(n, 3),
            bracket_independence(n, 3),
            reversed_bracket_sign(n, 3),
            d0_star_lowering(n, 3),
            d0_brackets(n, 3),
        ],
        Suite::Commutator => vec![
            mixed_commutator(n),
            raising_lowering_rows(n),
            nabla_conjugation_rows(n),
            diagonal_rows(n),
            star_adjoints(n),
            down_involution(n),
        ],
        Suite::Tableaux => vec![tableau_tables(n), tableau_skews(n), word_routes(n, 2)],
        Suite::Bridge => vec![
            d_bridge(n, 3),
            constant_routes(5, n.min(3) as i64),
            nabla_shift(n),
        ],
        Suite::Oracle => vec![
            oracle_agreement(n),
            star_orthogonality(n),
            table_positivity(n),
        ],
        Suite::Qwelldef => vec![split_choices(n), diagonal_routes(n, 2), symbol_words(7)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes_at_degree_three() {
        for check in run_suite(Suite::All, 3) {
            assert!(check.passed, "{check}");
        }
    }

    #[test]
    fn failure_carries_counterexample() {
        let c = run("demo".into(), || same(&1, &2, || "x".into()));
        assert!(!c.passed);
        assert_eq!(
            c.to_string(),
            "FAIL demo\n    counterexample: x: left = 1, right = 2"
        );
    }
}
