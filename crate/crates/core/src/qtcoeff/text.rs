//! Infix text form of scalars, e.g. `(1 - q^2*t)/(1 - q*t)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::{Mono, QtPoly};
use super::QtScalar;
use crate::error::{Error, Result};

fn write_mono(out: &mut String, m: Mono) {
    let mut parts = Vec::new();
    for (name, e) in [("q", m.q), ("t", m.t)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    out.push_str(&parts.join("*"));
}

/// Terms in increasing graded-lex order.
pub fn poly_to_string(p: &QtPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().rev().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if *m == Mono::ONE {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            write_mono(&mut out, *m);
        }
    }
    out
}

pub fn write_scalar(f: &mut fmt::Formatter<'_>, s: &QtScalar) -> fmt::Result {
    let num = poly_to_string(s.numerator());
    if s.denominator().is_one() {
        return f.write_str(&num);
    }
    let den = poly_to_string(s.denominator());
    let num = if s.numerator().len() > 1 {
        format!("({num})")
    } else {
        num
    };
    let atomic = s.denominator().len() == 1 && !den.contains('*');
    let den = if atomic { den } else { format!("({den})") };
    write!(f, "{num}/{den}")
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Tok::Int(digits.parse().expect("digits")));
            }
            'q' => out.push(Tok::Q),
            't' => out.push(Tok::T),
            '+' => out.push(Tok::Plus),
            '-' | '\u{2212}' => out.push(Tok::Minus),
            '*' | '\u{b7}' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::Open),
            ')' => out.push(Tok::Close),
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {other:?} in {s:?}"
                )))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<QtScalar> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add_ref(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QtScalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul_ref(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                // Juxtaposition such as `2q` or `(1-q)(1-t)`.
                Some(Tok::Int(_) | Tok::Q | Tok::T | Tok::Open) => {
                    acc = acc.mul_ref(&self.power()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<QtScalar> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QtScalar> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let e = match self.bump() {
            Some(Tok::Int(n)) => {
                i64::try_from(n).map_err(|_| Error::Parse("exponent too large".into()))?
            }
            other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        };
        let e = if negative { -e } else { e };
        if e < 0 && base.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<QtScalar> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(QtScalar::from_int(n)),
            Some(Tok::Q) => Ok(QtScalar::q()),
            Some(Tok::T) => Ok(QtScalar::t()),
            Some(Tok::Open) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::Close) => Ok(inner),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse(s: &str) -> Result<QtScalar> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trips() {
        for text in [
            "0",
            "1 + q",
            "(1 - q^2*t)/(1 - q*t)",
            "-3*q*t^2 + 7",
            "1/(q*t)",
            "(q + t)/(q*t - 1)",
        ] {
            let x: QtScalar = text.parse().unwrap();
            let again: QtScalar = x.to_string().parse().unwrap();
            assert_eq!(x, again, "{text}");
        }
        let x: QtScalar = "(1-q^2*t)/(1-q*t)".parse().unwrap();
        assert_eq!(x.to_string(), "(-1 + q^2*t)/(-1 + q*t)");
    }

    #[test]
    fn parser_features() {
        let a: QtScalar = "2q(1-t)".parse().unwrap();
        let b: QtScalar = "2*q - 2*q*t".parse().unwrap();
        assert_eq!(a, b);
        let c: QtScalar = "q^-2 * q^2".parse().unwrap();
        assert!(c.is_one());
        assert!(matches!("q +".parse::<QtScalar>(), Err(Error::Parse(_))));
        assert!(matches!("x".parse::<QtScalar>(), Err(Error::Parse(_))));
        assert_eq!("1/(q-q)".parse::<QtScalar>(), Err(Error::DivisionByZero));
    }
}
