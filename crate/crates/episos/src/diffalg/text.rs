//! Textual form of a [`DiffForm`]: one term per line,
//! `coef * d(h1,h2,...,hn)^e * ...`, rationals printed `num/den`.
//!
//! Terms are rendered in descending monomial order and factors in
//! descending derivative order, so rendering is canonical: serializing
//! and parsing round-trips bit-exactly.

use std::fmt::Write as _;

use num_traits::One;
use thiserror::Error;

use super::{Derivative, DiffForm, Monomial, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected {expected}, found {found:?}")]
    Unexpected {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("line {line}: derivative has {got} coordinates, expected {want}")]
    DimensionMismatch { line: usize, got: usize, want: usize },
    #[error("line {line}: invalid number {text:?}")]
    BadNumber { line: usize, text: String },
}

pub fn render_rat(c: &Rat) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn render_monomial(m: &Monomial) -> String {
    let mut out = String::new();
    for (d, e) in m.factors() {
        let mi: Vec<String> = d.multi_index().iter().map(|h| h.to_string()).collect();
        let _ = write!(out, " * d({})^{}", mi.join(","), e);
    }
    out
}

pub fn render_diff_form(form: &DiffForm) -> String {
    if form.is_zero() {
        return "0".to_string();
    }
    let mut lines = Vec::with_capacity(form.num_terms());
    for (m, c) in form.terms_desc() {
        lines.push(format!("{}{}", render_rat(c), render_monomial(m)));
    }
    lines.join("\n")
}

fn parse_rat(line_no: usize, text: &str) -> Result<Rat, ParseError> {
    let bad = || ParseError::BadNumber {
        line: line_no,
        text: text.to_string(),
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == 0.into() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: num_bigint::BigInt = text.trim().parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
    }
}

fn parse_factor(line_no: usize, n: usize, text: &str) -> Result<(Derivative, u32), ParseError> {
    let text = text.trim();
    let unexpected = |found: &str| ParseError::Unexpected {
        line: line_no,
        expected: "d(h1,...,hn)^e",
        found: found.to_string(),
    };
    let rest = text.strip_prefix("d(").ok_or_else(|| unexpected(text))?;
    let (inside, tail) = rest.split_once(')').ok_or_else(|| unexpected(text))?;
    let mi: Result<Vec<u32>, _> = inside.split(',').map(|s| s.trim().parse::<u32>()).collect();
    let mi = mi.map_err(|_| ParseError::BadNumber {
        line: line_no,
        text: inside.to_string(),
    })?;
    if mi.len() != n {
        return Err(ParseError::DimensionMismatch {
            line: line_no,
            got: mi.len(),
            want: n,
        });
    }
    let exp = match tail.trim() {
        "" => 1,
        t => {
            let t = t.strip_prefix('^').ok_or_else(|| unexpected(text))?;
            t.trim().parse::<u32>().map_err(|_| ParseError::BadNumber {
                line: line_no,
                text: t.to_string(),
            })?
        }
    };
    Ok((Derivative::new(mi), exp))
}

/// Parse the textual form back into a [`DiffForm`] of dimension `n`.
pub fn parse_diff_form(n: usize, text: &str) -> Result<DiffForm, ParseError> {
    let mut form = DiffForm::zero(n);
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "0" {
            continue;
        }
        let mut parts = line.split('*');
        let coef_text = parts.next().ok_or_else(|| ParseError::Unexpected {
            line: line_no,
            expected: "coefficient",
            found: line.to_string(),
        })?;
        let coef = parse_rat(line_no, coef_text.trim())?;
        let mut factors = Vec::new();
        for part in parts {
            factors.push(parse_factor(line_no, n, part)?);
        }
        form.add_term(Monomial::new(n, factors), coef);
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    #[test]
    fn round_trips_bit_exactly() {
        let form = &DiffForm::term1(ratio(-1, 2), &[(0, 3), (1, 1), (2, 1)])
            + &DiffForm::term1(rat(4), &[(3, 2)]);
        let text = render_diff_form(&form);
        let back = parse_diff_form(1, &text).unwrap();
        assert_eq!(back, form);
        assert_eq!(render_diff_form(&back), text);
    }

    #[test]
    fn zero_form() {
        assert_eq!(render_diff_form(&DiffForm::zero(2)), "0");
        assert_eq!(parse_diff_form(2, "0").unwrap(), DiffForm::zero(2));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let err = parse_diff_form(2, "1 * d(1)^1").unwrap_err();
        assert_eq!(
            err,
            ParseError::DimensionMismatch {
                line: 1,
                got: 1,
                want: 2
            }
        );
    }

    #[test]
    fn junk_rejected_with_location() {
        assert!(matches!(
            parse_diff_form(1, "1 * e(1)^1"),
            Err(ParseError::Unexpected { line: 1, .. })
        ));
        assert!(matches!(
            parse_diff_form(1, "x * d(1)^1"),
            Err(ParseError::BadNumber { line: 1, .. })
        ));
    }
}
