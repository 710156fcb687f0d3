use std::fmt;

use super::Poly;
use crate::error::{Error, Result};
use crate::gf::Field;

pub(super) fn format_human(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let terms = p.terms();
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (k, &(e, c)) in terms.iter().rev().enumerate() {
        if k > 0 {
            f.write_str("+")?;
        }
        match (e, c) {
            (0, c) => write!(f, "{c}")?,
            (1, 1) => f.write_str("t")?,
            (1, c) => write!(f, "{c}*t")?,
            (e, 1) => write!(f, "t^{e}")?,
            (e, c) => write!(f, "{c}*t^{e}")?,
        }
    }
    Ok(())
}

pub(super) fn format_list(p: &Poly) -> String {
    let codes: Vec<String> = p.codes().iter().map(u64::to_string).collect();
    format!("[{}]", codes.join(","))
}

pub(super) fn parse(field: &Field, s: &str) -> Result<Poly> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unterminated list {s:?}")))?;
        if inner.is_empty() {
            return Ok(Poly::zero(field));
        }
        let codes = inner
            .split(',')
            .map(|c| parse_code(c, &s))
            .collect::<Result<Vec<_>>>()?;
        return Poly::from_codes(field, codes);
    }
    let mut terms: Vec<(usize, u64)> = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..=bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
            let (e, c) = parse_term(field, &s[start..i], &s)?;
            terms.push((e, c));
            start = i;
        }
    }
    Poly::from_terms(field, &terms)
}

fn parse_code(text: &str, whole: &str) -> Result<u64> {
    text.parse()
        .map_err(|_| Error::Parse(format!("bad coefficient {text:?} in {whole:?}")))
}

fn parse_term(field: &Field, term: &str, whole: &str) -> Result<(usize, u64)> {
    let bad = || Error::Parse(format!("bad term {term:?} in {whole:?}"));
    let (negate, body) = match term.as_bytes().first() {
        Some(b'+') => (false, &term[1..]),
        Some(b'-') => (true, &term[1..]),
        _ => (false, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let (coeff, exp) = match body.find(['t', 'x']) {
        None => (parse_code(body, whole)?, 0),
        Some(pos) => {
            let head = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
            let coeff = if head.is_empty() {
                1
            } else {
                parse_code(head, whole)?
            };
            let tail = &body[pos + 1..];
            let exp = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse::<usize>()
                    .map_err(|_| bad())?
            };
            (coeff, exp)
        }
    };
    if !field.contains(coeff) {
        return Err(Error::CodeOutOfRange {
            code: coeff,
            order: field.order(),
        });
    }
    Ok((exp, if negate { field.neg(coeff) } else { coeff }))
}
