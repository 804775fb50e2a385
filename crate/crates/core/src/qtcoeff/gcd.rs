//! Modular gcd in `Z[t]` and `Z[q, t]`.
//!
//! Images are taken modulo word-sized primes, and for the bivariate case at
//! evaluation points `t = alpha`, recombined by interpolation and Chinese
//! remaindering, and certified by exact trial division over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::dense::{self, UPoly};
use super::modp::{self, PolyP};
use super::poly::QtPoly;

/// Whether every lifted coefficient sits well inside the symmetric range, in
/// which case a trial division is worth attempting without waiting for the
/// image to stabilise.
fn comfortably_small<'a>(coeffs: impl Iterator<Item = &'a BigInt>, modulus: &BigInt) -> bool {
    let limit = modulus.bits().saturating_sub(24);
    coeffs.into_iter().all(|c| c.bits() < limit)
}

/// Gcd in `Z[t]` with positive leading coefficient.
pub fn gcd_univariate(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    dense::trim(&mut a);
    dense::trim(&mut b);
    if a.is_empty() {
        dense::normalize_sign(&mut b);
        return b;
    }
    if b.is_empty() {
        dense::normalize_sign(&mut a);
        return a;
    }
    let ca = dense::content(&a);
    let cb = dense::content(&b);
    let c = ca.gcd(&cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let a = dense::div_scalar(&a, &ca);
    let b = dense::div_scalar(&b, &cb);
    if a == b {
        let mut out = dense::scale(&a, &c);
        dense::normalize_sign(&mut out);
        return out;
    }
    let lca = a.last().unwrap();
    let lcb = b.last().unwrap();
    let gamma = lca.gcd(lcb);

    let mut acc: Option<(Vec<BigInt>, BigInt)> = None;
    let mut prev: Option<UPoly> = None;
    for i in 0.. {
        let p = modp::prime(i);
        if modp::reduce(lca, p) == 0 || modp::reduce(lcb, p) == 0 {
            continue;
        }
        let ap = modp::reduce_poly(&a, p);
        let bp = modp::reduce_poly(&b, p);
        let mut g = modp::gcd(&ap, &bp, p);
        if g.len() == 1 {
            return vec![c];
        }
        let gp = modp::reduce(&gamma, p);
        for x in g.iter_mut() {
            *x = modp::mul(*x, gp, p);
        }
        acc = match acc.take() {
            Some((h, m)) if h.len() == g.len() => {
                let h: Vec<BigInt> = h
                    .iter()
                    .zip(&g)
                    .map(|(hi, gi)| modp::crt(hi, &m, *gi, p))
                    .collect();
                Some((h, m * BigInt::from(p)))
            }
            Some((h, m)) if h.len() < g.len() => Some((h, m)),
            _ => Some((
                g.iter().map(|&x| BigInt::from(x)).collect(),
                BigInt::from(p),
            )),
        };
        let (h, m) = acc.as_ref().unwrap();
        let lift: UPoly = h.iter().map(|x| modp::symmetric(x, m)).collect();
        let stable = prev.as_ref() == Some(&lift);
        if stable || comfortably_small(lift.iter(), m) {
            let cont = dense::content(&lift);
            let cand = dense::div_scalar(&lift, &cont);
            if dense::div_exact(&a, &cand).is_some() && dense::div_exact(&b, &cand).is_some() {
                let mut out = dense::scale(&cand, &c);
                dense::normalize_sign(&mut out);
                return out;
            }
        }
        prev = Some(lift);
    }
    unreachable!("prime supply exhausted")
}

/// Gcd of the `Z[t]` coefficients of a `Z[t][q]` polynomial.
fn content_q(a: &[UPoly]) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        if c.is_empty() {
            continue;
        }
        g = gcd_univariate(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn div_by_t_poly(a: &[UPoly], c: &[BigInt]) -> Vec<UPoly> {
    a.iter()
        .map(|x| {
            if x.is_empty() {
                Vec::new()
            } else {
                dense::div_exact(x, c).expect("content divides")
            }
        })
        .collect()
}

fn t_degree(a: &[UPoly]) -> usize {
    a.iter().map(|c| dense::degree(c)).max().unwrap_or(0)
}

/// Gcd in `Z[q, t]`, normalised to a positive graded-lex leading coefficient.
pub fn gcd(a: &QtPoly, b: &QtPoly) -> QtPoly {
    if a.is_zero() {
        return b.clone().with_positive_lead();
    }
    if b.is_zero() {
        return a.clone().with_positive_lead();
    }
    let ma = a.min_mono();
    let mb = b.min_mono();
    let mono = ma.min(mb);
    if a.is_monomial() || b.is_monomial() {
        let c = a.content().gcd(&b.content());
        return QtPoly::monomial(c, mono.q, mono.t);
    }
    let a = a.div_mono(ma);
    let b = b.div_mono(mb);
    if a == b || a == b.neg() {
        return a.mul_mono(mono).with_positive_lead();
    }
    // Keep q as the main variable only when it actually occurs in both.
    let core = if a.degree_q() == 0 || b.degree_q() == 0 {
        if a.degree_t() == 0 || b.degree_t() == 0 {
            QtPoly::constant(a.content().gcd(&b.content()))
        } else {
            gcd_main_q(&a.swap_variables(), &b.swap_variables()).swap_variables()
        }
    } else {
        gcd_main_q(&a, &b)
    };
    core.mul_mono(mono).with_positive_lead()
}

/// Gcd treating `q` as main variable; the inputs carry no monomial content.
fn gcd_main_q(a: &QtPoly, b: &QtPoly) -> QtPoly {
    let a = dense::to_tq(a);
    let b = dense::to_tq(b);
    let ca = content_q(&a);
    let cb = content_q(&b);
    let cont = gcd_univariate(&ca, &cb);
    let cont_poly = dense::from_tq(&[cont]);
    let pa = div_by_t_poly(&a, &ca);
    let pb = div_by_t_poly(&b, &cb);
    if pa.len() == 1 || pb.len() == 1 {
        return cont_poly;
    }
    if pa == pb {
        return dense::from_tq(&pa).mul(&cont_poly);
    }
    let lca = pa.last().unwrap().clone();
    let lcb = pb.last().unwrap().clone();
    let gamma = gcd_univariate(&lca, &lcb);
    let npoints = dense::degree(&gamma) + t_degree(&pa).min(t_degree(&pb)) + 1;

    // Accumulated residues per q-degree, each a t-coefficient vector of
    // length `npoints`.
    let mut acc: Option<(Vec<Vec<BigInt>>, BigInt)> = None;
    let mut prev: Option<Vec<UPoly>> = None;
    for i in 0.. {
        let p = modp::prime(i);
        let lcap = modp::reduce_poly(&lca, p);
        let lcbp = modp::reduce_poly(&lcb, p);
        if lcap.is_empty() || lcbp.is_empty() {
            continue;
        }
        let ap: Vec<PolyP> = pa.iter().map(|c| modp::reduce_poly(c, p)).collect();
        let bp: Vec<PolyP> = pb.iter().map(|c| modp::reduce_poly(c, p)).collect();
        let gammap = modp::reduce_poly(&gamma, p);
        let image = match image_mod_p(&ap, &bp, &lcap, &lcbp, &gammap, npoints, p) {
            Image::Trivial => return cont_poly,
            Image::Poly(g) => g,
        };
        acc = match acc.take() {
            Some((h, m)) if h.len() == image.len() => {
                let h = h
                    .iter()
                    .zip(&image)
                    .map(|(hr, gr)| {
                        hr.iter()
                            .enumerate()
                            .map(|(j, hv)| modp::crt(hv, &m, gr.get(j).copied().unwrap_or(0), p))
                            .collect()
                    })
                    .collect();
                Some((h, m * BigInt::from(p)))
            }
            Some((h, m)) if h.len() < image.len() => Some((h, m)),
            _ => {
                let h = image
                    .iter()
                    .map(|gr| {
                        (0..npoints)
                            .map(|j| BigInt::from(gr.get(j).copied().unwrap_or(0)))
                            .collect()
                    })
                    .collect();
                Some((h, BigInt::from(p)))
            }
        };
        let (h, m) = acc.as_ref().unwrap();
        let lift: Vec<UPoly> = h
            .iter()
            .map(|row| {
                let mut r: UPoly = row.iter().map(|x| modp::symmetric(x, m)).collect();
                dense::trim(&mut r);
                r
            })
            .collect();
        let stable = prev.as_ref() == Some(&lift);
        if stable || comfortably_small(lift.iter().flatten(), m) {
            let c = content_q(&lift);
            let cand = div_by_t_poly(&lift, &c);
            if dense::bivariate_div_exact(&pa, &cand).is_some()
                && dense::bivariate_div_exact(&pb, &cand).is_some()
            {
                return dense::from_tq(&cand).mul(&cont_poly);
            }
        }
        prev = Some(lift);
    }
    unreachable!("prime supply exhausted")
}

enum Image {
    Trivial,
    Poly(Vec<PolyP>),
}

/// `gamma`-scaled gcd image modulo `p`, as a `q`-indexed list of `t`-polynomials.
fn image_mod_p(
    a: &[PolyP],
    b: &[PolyP],
    lca: &[u64],
    lcb: &[u64],
    gamma: &[u64],
    npoints: usize,
    p: u64,
) -> Image {
    let mut xs: Vec<u64> = Vec::with_capacity(npoints);
    let mut values: Vec<PolyP> = Vec::with_capacity(npoints);
    // Pseudo-random points, so that an unlucky point does not recur for
    // every prime.
    let mut state: u64 = p;
    while xs.len() < npoints {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let alpha = (state >> 16) % p;
        if alpha == 0 || xs.contains(&alpha) {
            continue;
        }
        if modp::eval(lca, alpha, p) == 0 || modp::eval(lcb, alpha, p) == 0 {
            continue;
        }
        let av: PolyP = a.iter().map(|c| modp::eval(c, alpha, p)).collect();
        let bv: PolyP = b.iter().map(|c| modp::eval(c, alpha, p)).collect();
        let mut g = modp::gcd(&av, &bv, p);
        if g.len() == 1 {
            return Image::Trivial;
        }
        if let Some(first) = values.first() {
            if g.len() > first.len() {
                continue;
            }
            if g.len() < first.len() {
                xs.clear();
                values.clear();
            }
        }
        let s = modp::eval(gamma, alpha, p);
        for x in g.iter_mut() {
            *x = modp::mul(*x, s, p);
        }
        xs.push(alpha);
        values.push(g);
    }
    let dq = values[0].len();
    let out = (0..dq)
        .map(|k| {
            let ys: Vec<u64> = values.iter().map(|v| v[k]).collect();
            modp::interpolate(&xs, &ys, p)
        })
        .collect();
    Image::Poly(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, u32, u32)]) -> QtPoly {
        QtPoly::from_terms(terms.iter().map(|&(c, i, j)| (c, i, j)))
    }

    fn big(v: &[i64]) -> UPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn univariate_gcd_with_content() {
        // 6(t-1)(t+2) and 4(t-1)(t+5)
        let a = dense::scale(&big(&[-2, 1, 1]), &BigInt::from(6));
        let b = dense::scale(&big(&[-5, 4, 1]), &BigInt::from(4));
        assert_eq!(gcd_univariate(&a, &b), big(&[-2, 2]));
        assert_eq!(gcd_univariate(&big(&[1, 1]), &big(&[-1, 1])), big(&[1]));
    }

    #[test]
    fn bivariate_gcd_recovers_common_factor() {
        let g = p(&[(1, 1, 0), (-1, 0, 2), (3, 1, 1)]);
        let x = p(&[(1, 0, 0), (-1, 1, 1)]);
        let y = p(&[(2, 2, 0), (5, 0, 3), (-1, 0, 0)]);
        let a = g.mul(&x);
        let b = g.mul(&y);
        assert_eq!(gcd(&a, &b), g.with_positive_lead());
    }

    #[test]
    fn gcd_handles_monomials_and_pure_t() {
        let a = p(&[(2, 2, 1), (4, 1, 3)]);
        let b = p(&[(6, 1, 1)]);
        assert_eq!(gcd(&a, &b), p(&[(2, 1, 1)]));
        let c = p(&[(1, 0, 2), (-1, 0, 0)]);
        let d = p(&[(1, 0, 1), (-1, 0, 0)]).mul(&p(&[(1, 1, 0), (1, 0, 0)]));
        assert_eq!(gcd(&c, &d), p(&[(1, 0, 1), (-1, 0, 0)]));
    }

    #[test]
    fn coprime_inputs_give_one() {
        let a = p(&[(1, 0, 0), (-1, 1, 0)]);
        let b = p(&[(1, 0, 0), (-1, 0, 1)]);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn unlucky_small_evaluation_points_are_avoided() {
        // At t = 1 both factor through 2q - 1, yet the gcd is 1.
        let a = p(&[(-6, 2, 0), (-3, 1, 1), (3, 0, 0)]);
        let b = p(&[(6, 1, 0), (-3, 0, 0)]);
        assert_eq!(gcd(&a, &b), p(&[(3, 0, 0)]));
    }

    #[test]
    fn large_coefficients_need_several_primes() {
        let huge: BigInt = BigInt::from(10).pow(40u32) + 7;
        let g = QtPoly::from_terms([(huge.clone(), 2, 1), (BigInt::from(-3), 0, 0), (huge, 1, 3)]);
        let a = g.mul(&p(&[(1, 1, 0), (7, 0, 1)]));
        let b = g.mul(&p(&[(1, 1, 0), (-7, 0, 1), (1, 0, 0)]));
        assert_eq!(gcd(&a, &b), g.with_positive_lead());
    }
}
