//! Text form such as `m[2] + (1 + q)*m[1,1]`.

use num_traits::Signed;

use super::{Basis, SymFun};
use crate::error::{Error, Result};
use crate::qtcoeff::QtScalar;
use crate::shapes::Partition;

/// Coefficient text with its sign pulled out when that is unambiguous.
pub(crate) fn coefficient_text(c: &QtScalar) -> (bool, String) {
    let negative = c.numerator().len() == 1
        && c.numerator()
            .leading()
            .is_some_and(|(_, x)| x.is_negative());
    let a = if negative { c.neg() } else { c.clone() };
    if a.is_one() {
        return (negative, String::new());
    }
    let body = a.to_string();
    let simple = a.is_polynomial() && a.numerator().len() == 1;
    let body = if simple { body } else { format!("({body})") };
    (negative, format!("{body}*"))
}

/// Writes `sum c_i name_i` given pre-rendered element names.
pub(crate) fn write_sum<'a>(terms: impl Iterator<Item = (String, &'a QtScalar)>) -> String {
    let mut out = String::new();
    for (k, (name, c)) in terms.enumerate() {
        let (neg, coef) = coefficient_text(c);
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&coef);
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn to_string(f: &SymFun) -> String {
    let letter = f.basis().letter();
    write_sum(
        f.ordered_terms()
            .into_iter()
            .map(|(k, v)| (format!("{letter}{k}"), v)),
    )
}

/// Splits `c1*x[..] + c2*y[..]` into `(letter, partition, coefficient)`.
pub(crate) fn parse_terms(s: &str, letters: &[char]) -> Result<Vec<(char, Partition, QtScalar)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut seg_start = 0;
    let mut i = 0;
    while i < chars.len() {
        if letters.contains(&chars[i]) && chars.get(i + 1) == Some(&'[') {
            let close = (i + 1..chars.len())
                .find(|&j| chars[j] == ']')
                .ok_or_else(|| Error::Parse(format!("unclosed '[' in {s:?}")))?;
            let seg: String = chars[seg_start..i].iter().collect();
            let coef = parse_coefficient(&seg, out.is_empty())?;
            let inner: String = chars[i + 1..=close].iter().collect();
            let lambda: Partition = format!("[{inner}").parse()?;
            out.push((chars[i], lambda, coef));
            i = close + 1;
            seg_start = i;
        } else {
            i += 1;
        }
    }
    let tail: String = chars[seg_start..].iter().collect();
    if !tail.trim().is_empty() {
        return Err(Error::Parse(format!("trailing input {tail:?}")));
    }
    Ok(out)
}

fn parse_coefficient(seg: &str, first: bool) -> Result<QtScalar> {
    let mut rest = seg.trim();
    let mut sign = QtScalar::one();
    if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    } else if let Some(r) = rest
        .strip_prefix('-')
        .or_else(|| rest.strip_prefix('\u{2212}'))
    {
        rest = r;
        sign = sign.neg();
    } else if !first {
        return Err(Error::Parse(format!("expected '+' or '-' before {seg:?}")));
    }
    let rest = rest.trim();
    let rest = rest.strip_suffix('*').unwrap_or(rest).trim();
    if rest.is_empty() {
        return Ok(sign);
    }
    Ok(sign * rest.parse::<QtScalar>()?)
}

pub fn parse(s: &str) -> Result<SymFun> {
    if s.trim() == "0" {
        return Ok(SymFun::zero(Basis::M));
    }
    let letters: Vec<char> = Basis::ALL.iter().map(|b| b.letter()).collect();
    let terms = parse_terms(s, &letters)?;
    let Some(first) = terms.first() else {
        return Err(Error::Parse(format!("no basis elements in {s:?}")));
    };
    let letter = first.0;
    if terms.iter().any(|t| t.0 != letter) {
        return Err(Error::Parse(format!("mixed bases in {s:?}")));
    }
    let basis = Basis::from_letter(letter).expect("letter from the basis list");
    Ok(SymFun::from_terms(
        basis,
        terms.into_iter().map(|(_, k, v)| (k, v)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let x: SymFun = "m[2] + (1+q)*m[1,1]".parse().unwrap();
        assert_eq!(x.to_string(), "m[2] + (1 + q)*m[1,1]");
        let y: SymFun = "-2*q*s[1] + s[] - t/(1-q)*s[2]".parse().unwrap();
        assert_eq!(y.to_string(), "s[] - 2*q*s[1] + (t/(-1 + q))*s[2]");
        assert_eq!(SymFun::zero(Basis::P).to_string(), "0");
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "m[2] + (1 + q)*m[1,1]",
            "-e[3] + 3*e[2,1]",
            "(q - t)/(1 - q*t)*p[2] - p[1,1]",
            "h[]",
        ] {
            let x: SymFun = text.parse().unwrap();
            let again: SymFun = x.to_string().parse().unwrap();
            assert_eq!(x.terms(), again.terms(), "{text}");
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!("m[2] + e[1]".parse::<SymFun>().is_err());
        assert!("m[2] q".parse::<SymFun>().is_err());
        assert!("m[1,2]".parse::<SymFun>().is_err());
        assert!("m[2".parse::<SymFun>().is_err());
        assert!("2*q".parse::<SymFun>().is_err());
    }
}
