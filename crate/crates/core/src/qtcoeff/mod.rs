//! Exact arithmetic in the rational function field `Q(q, t)`.

mod dense;
pub mod gcd;
mod modp;
mod poly;
mod text;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use gcd::gcd;
pub use poly::{Mono, QtPoly};

/// A reduced quotient `num / den` of integer polynomials in `q, t`.
///
/// The pair is coprime over `Z[q, t]` (so the joint integer content is one)
/// and the graded-lex leading coefficient of `den` is positive, which makes
/// structural equality coincide with equality in `Q(q, t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QtScalar {
    num: QtPoly,
    den: QtPoly,
}

impl Default for QtScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl QtScalar {
    pub fn zero() -> Self {
        QtScalar {
            num: QtPoly::zero(),
            den: QtPoly::one(),
        }
    }

    pub fn one() -> Self {
        QtScalar {
            num: QtPoly::one(),
            den: QtPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        QtScalar {
            num: QtPoly::constant(c),
            den: QtPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts_unchecked(
            QtPoly::constant(r.numer().clone()),
            QtPoly::constant(r.denom().clone()),
        )
    }

    pub fn q() -> Self {
        QtPoly::q().into()
    }

    pub fn t() -> Self {
        QtPoly::t().into()
    }

    /// `c q^i t^j` for signed exponents.
    pub fn monomial(c: impl Into<BigInt>, i: i64, j: i64) -> Self {
        let c = c.into();
        let num = QtPoly::monomial(c, i.max(0) as u32, j.max(0) as u32);
        let den = QtPoly::monomial(1, (-i).max(0) as u32, (-j).max(0) as u32);
        QtScalar { num, den }.fix_zero()
    }

    /// `M = (1 - t)(1 - q)`.
    pub fn m() -> Self {
        QtPoly::from_terms([(1, 0, 0), (-1, 1, 0), (-1, 0, 1), (1, 1, 1)]).into()
    }

    /// `M~ = (1 - 1/t)(1 - 1/q)`.
    pub fn m_tilde() -> Self {
        Self::m().invert_variables()
    }

    /// Canonical representative of `num / den`.
    pub fn normalize(num: QtPoly, den: QtPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::from_parts_unchecked(num, den))
    }

    fn from_parts_unchecked(num: QtPoly, den: QtPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        Self::with_sign(num, den)
    }

    /// Applies the sign convention to an already coprime pair.
    fn with_sign(num: QtPoly, den: QtPoly) -> Self {
        match den.leading() {
            Some((_, c)) if c.is_negative() => QtScalar {
                num: num.neg(),
                den: den.neg(),
            },
            _ => QtScalar { num, den },
        }
    }

    fn fix_zero(self) -> Self {
        if self.num.is_zero() {
            Self::zero()
        } else {
            self
        }
    }

    pub fn numerator(&self) -> &QtPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QtPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Rational constant value, if the scalar does not depend on `q, t`.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRational::new(n, d))
    }

    pub fn as_polynomial(&self) -> Result<QtPoly> {
        if self.den.is_one() {
            return Ok(self.num.clone());
        }
        // Coprime pairs: the only polynomial quotients have a unit denominator.
        match self.den.constant_value() {
            Some(d) if d.abs().is_one() => Ok(self.num.scale(&d)),
            _ => Err(Error::NotPolynomial),
        }
    }

    pub fn neg(&self) -> Self {
        QtScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::with_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        if b.is_one() && d.is_one() {
            return QtScalar {
                num: a.add(c),
                den: QtPoly::one(),
            }
            .fix_zero();
        }
        if b.is_one() {
            return Self::with_sign(a.mul(d).add(c), d.clone()).fix_zero();
        }
        if d.is_one() {
            return Self::with_sign(a.add(&c.mul(b)), b.clone()).fix_zero();
        }
        if b == d {
            let n = a.add(c);
            return Self::from_parts_unchecked(n, b.clone());
        }
        let g = gcd(b, d);
        if g.is_one() {
            let n = a.mul(d).add(&c.mul(b));
            if n.is_zero() {
                return Self::zero();
            }
            return Self::with_sign(n, b.mul(d));
        }
        let b1 = b.div_exact(&g).expect("gcd divides");
        let d1 = d.div_exact(&g).expect("gcd divides");
        let n = a.mul(&d1).add(&c.mul(&b1));
        if n.is_zero() {
            return Self::zero();
        }
        let g2 = gcd(&n, &g);
        if g2.is_one() {
            Self::with_sign(n, b1.mul(d))
        } else {
            let n = n.div_exact(&g2).expect("gcd divides");
            let d2 = d.div_exact(&g2).expect("gcd divides");
            Self::with_sign(n, b1.mul(&d2))
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        if b.is_one() && d.is_one() {
            return QtScalar {
                num: a.mul(c),
                den: QtPoly::one(),
            };
        }
        let g1 = gcd(a, d);
        let g2 = gcd(c, b);
        let a1 = div_if(a, &g1);
        let d1 = div_if(d, &g1);
        let c1 = div_if(c, &g2);
        let b1 = div_if(b, &g2);
        Self::with_sign(a1.mul(&c1), b1.mul(&d1))
    }

    /// Multiplication by an integer.
    pub fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let g = self.den.content().gcd(k);
        if g.is_one() {
            QtScalar {
                num: self.num.scale(k),
                den: self.den.clone(),
            }
        } else {
            QtScalar {
                num: self.num.scale(&(k / &g)),
                den: self.den.div_scalar_exact(&g),
            }
        }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.mul_ref(&Self::from_rational(r))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        QtScalar {
            num: self.num.pow(e as u32),
            den: self.den.pow(e as u32),
        }
        .fix_zero_or_one(e)
    }

    fn fix_zero_or_one(self, e: i64) -> Self {
        if e == 0 {
            Self::one()
        } else {
            self.fix_zero()
        }
    }

    /// `q -> q^k`, `t -> t^k`. The image of a coprime pair stays coprime.
    pub fn substitute_powers(&self, k: u32) -> Self {
        assert!(k > 0, "substitution exponent must be positive");
        if k == 1 {
            return self.clone();
        }
        QtScalar {
            num: self.num.substitute_powers(k),
            den: self.den.substitute_powers(k),
        }
    }

    /// `q -> 1/q`, `t -> 1/t`.
    pub fn invert_variables(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (rn, sn) = self.num.reversal();
        let (rd, sd) = self.den.reversal();
        // num(1/q,1/t) / den(1/q,1/t) = rn * q^sd.q t^sd.t / (rd * q^sn.q t^sn.t)
        let eq = sd.q as i64 - sn.q as i64;
        let et = sd.t as i64 - sn.t as i64;
        let num = rn.mul_mono(Mono::new(eq.max(0) as u32, et.max(0) as u32));
        let den = rd.mul_mono(Mono::new((-eq).max(0) as u32, (-et).max(0) as u32));
        Self::from_parts_unchecked(num, den)
    }

    /// `q <-> t`.
    pub fn swap_variables(&self) -> Self {
        Self::with_sign(self.num.swap_variables(), self.den.swap_variables())
    }

    pub fn evaluate(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.evaluate(q0, t0);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.evaluate(q0, t0) / d)
    }
}

fn div_if(a: &QtPoly, g: &QtPoly) -> QtPoly {
    if g.is_one() {
        a.clone()
    } else {
        a.div_exact(g).expect("gcd divides")
    }
}

impl From<QtPoly> for QtScalar {
    fn from(p: QtPoly) -> Self {
        QtScalar {
            num: p,
            den: QtPoly::one(),
        }
    }
}

impl From<i64> for QtScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigInt> for QtScalar {
    fn from(c: BigInt) -> Self {
        Self::from_int(c)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&QtScalar> for &QtScalar {
            type Output = QtScalar;
            fn $method(self, rhs: &QtScalar) -> QtScalar {
                self.$inner(rhs)
            }
        }
        impl $tr<QtScalar> for QtScalar {
            type Output = QtScalar;
            fn $method(self, rhs: QtScalar) -> QtScalar {
                self.$inner(&rhs)
            }
        }
        impl $tr<&QtScalar> for QtScalar {
            type Output = QtScalar;
            fn $method(self, rhs: &QtScalar) -> QtScalar {
                self.$inner(rhs)
            }
        }
        impl $tr<QtScalar> for &QtScalar {
            type Output = QtScalar;
            fn $method(self, rhs: QtScalar) -> QtScalar {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<&QtScalar> for &QtScalar {
    type Output = QtScalar;
    /// Panics on division by zero; use [`QtScalar::checked_div`] to recover.
    fn div(self, rhs: &QtScalar) -> QtScalar {
        self.checked_div(rhs).expect("division by zero in Q(q,t)")
    }
}

impl Div<QtScalar> for QtScalar {
    type Output = QtScalar;
    fn div(self, rhs: QtScalar) -> QtScalar {
        &self / &rhs
    }
}

impl Div<&QtScalar> for QtScalar {
    type Output = QtScalar;
    fn div(self, rhs: &QtScalar) -> QtScalar {
        &self / rhs
    }
}

impl Neg for QtScalar {
    type Output = QtScalar;
    fn neg(self) -> QtScalar {
        QtScalar::neg(&self)
    }
}

impl Neg for &QtScalar {
    type Output = QtScalar;
    fn neg(self) -> QtScalar {
        QtScalar::neg(self)
    }
}

impl AddAssign<&QtScalar> for QtScalar {
    fn add_assign(&mut self, rhs: &QtScalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&QtScalar> for QtScalar {
    fn sub_assign(&mut self, rhs: &QtScalar) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&QtScalar> for QtScalar {
    fn mul_assign(&mut self, rhs: &QtScalar) {
        *self = self.mul_ref(rhs);
    }
}

impl std::iter::Sum for QtScalar {
    fn sum<I: Iterator<Item = QtScalar>>(iter: I) -> Self {
        iter.fold(QtScalar::zero(), |acc, x| acc.add_ref(&x))
    }
}

impl std::iter::Product for QtScalar {
    fn product<I: Iterator<Item = QtScalar>>(iter: I) -> Self {
        iter.fold(QtScalar::one(), |acc, x| acc.mul_ref(&x))
    }
}

impl fmt::Display for QtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_scalar(f, self)
    }
}

impl std::str::FromStr for QtScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        text::parse(s)
    }
}

type WireTerms = Vec<(String, u32, u32)>;

#[derive(Serialize, Deserialize)]
struct Wire {
    num: WireTerms,
    den: WireTerms,
}

fn to_wire(p: &QtPoly) -> WireTerms {
    p.terms()
        .iter()
        .map(|(m, c)| (c.to_string(), m.q, m.t))
        .collect()
}

fn from_wire(w: &WireTerms) -> std::result::Result<QtPoly, String> {
    let mut terms = Vec::with_capacity(w.len());
    for (c, i, j) in w {
        let c: BigInt = c.parse().map_err(|_| format!("invalid integer {c:?}"))?;
        terms.push((c, *i, *j));
    }
    Ok(QtPoly::from_terms(terms))
}

impl Serialize for QtScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            num: to_wire(&self.num),
            den: to_wire(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QtScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = Wire::deserialize(d)?;
        let num = from_wire(&w.num).map_err(D::Error::custom)?;
        let den = from_wire(&w.den).map_err(D::Error::custom)?;
        QtScalar::normalize(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, u32, u32)]) -> QtPoly {
        QtPoly::from_terms(terms.iter().map(|&(c, i, j)| (c, i, j)))
    }

    fn s(text: &str) -> QtScalar {
        text.parse().unwrap()
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn normalize_cancels_common_factors() {
        let n =
            QtScalar::normalize(p(&[(1, 2, 0), (-1, 0, 0)]), p(&[(1, 1, 0), (-1, 0, 0)])).unwrap();
        assert_eq!(n, s("1 + q"));
        assert!(n.is_polynomial());
        let z = QtScalar::normalize(QtPoly::zero(), p(&[(1, 1, 1)])).unwrap();
        assert_eq!(z.denominator(), &QtPoly::one());
        assert!(z.is_zero());
        let qmt = p(&[(1, 1, 0), (-1, 0, 1)]);
        let m = QtScalar::m();
        let n = QtScalar::normalize(m.numerator().mul(&qmt), qmt).unwrap();
        assert_eq!(n, m);
        assert_eq!(
            QtScalar::normalize(QtPoly::one(), QtPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn canonical_sign_and_content() {
        let a = QtScalar::normalize(p(&[(2, 0, 0)]), p(&[(-4, 1, 0), (2, 0, 0)])).unwrap();
        assert_eq!(a.numerator(), &p(&[(-1, 0, 0)]));
        assert_eq!(a.denominator(), &p(&[(2, 1, 0), (-1, 0, 0)]));
    }

    #[test]
    fn field_operations() {
        assert_eq!(QtScalar::q() + QtScalar::t(), s("q + t"));
        let qt = s("q*t");
        assert!((s("1/(q*t)") * &qt).is_one());
        let x = QtScalar::m() * s("1 + q + t");
        assert!((&x - &x).is_zero());
        assert_eq!(
            QtScalar::one().checked_div(&QtScalar::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(QtScalar::zero().inv(), Err(Error::DivisionByZero));
        let a = s("1/(1 - q)");
        let b = s("q/(1 - q)");
        assert!((a - b).is_one());
    }

    #[test]
    fn substitute_powers_examples() {
        assert_eq!(QtScalar::m().substitute_powers(2), s("(1 - t^2)*(1 - q^2)"));
        assert_eq!(s("1/(q*t)").substitute_powers(3), s("1/(q^3*t^3)"));
        assert_eq!(s("q + t").substitute_powers(1), s("q + t"));
    }

    #[test]
    fn invert_variables_examples() {
        assert_eq!(QtScalar::q().invert_variables(), s("1/q"));
        assert_eq!(QtScalar::m().invert_variables(), s("(1 - 1/t)*(1 - 1/q)"));
        // (1/q + 1/t)/(1 - 1/(qt)) = (q + t)/(qt - 1)
        let x = s("(q + t)/(1 - q*t)").invert_variables();
        assert_eq!(x.numerator(), &p(&[(1, 1, 0), (1, 0, 1)]));
        assert_eq!(x.denominator(), &p(&[(1, 1, 1), (-1, 0, 0)]));
    }

    #[test]
    fn as_polynomial_examples() {
        assert_eq!(
            s("(q^2 - t^2)/(q - t)").as_polynomial(),
            Ok(p(&[(1, 1, 0), (1, 0, 1)]))
        );
        assert_eq!(s("1 + q").as_polynomial(), Ok(p(&[(1, 0, 0), (1, 1, 0)])));
        assert_eq!(s("1/(1 - q)").as_polynomial(), Err(Error::NotPolynomial));
        assert_eq!(s("-3/(-1)").as_polynomial(), Ok(p(&[(3, 0, 0)])));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(QtScalar::m().evaluate(&r(2), &r(3)), Ok(r(2)));
        assert_eq!(
            s("1/(q*t)").evaluate(&r(2), &r(3)),
            Ok(BigRational::new(1.into(), 6.into()))
        );
        assert_eq!(
            s("1/(1 - q*t)").evaluate(&r(1), &r(1)),
            Err(Error::PoleAtPoint)
        );
    }

    #[test]
    fn json_round_trip() {
        let x = s("(1 - q^2*t)/(1 - q*t)");
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(
            j,
            r#"{"num":[["1",2,1],["-1",0,0]],"den":[["1",1,1],["-1",0,0]]}"#
        );
        let back: QtScalar = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
    }
}
