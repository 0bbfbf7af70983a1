//! Text notation for fields, elements, point lists and polynomials.
//!
//! * field: `p`, `p^e`, or `p^e:c0,c1,…,ce` with an explicit monic modulus
//!   given low-to-high;
//! * element: an integer code in `[0, q)`, `a`, or `a^k` (powers of the
//!   field's generator);
//! * list: comma-separated elements, `all`, or `units`;
//! * polynomial: comma-separated coefficients, low-to-high.
//!
//! Parse errors carry a 1-based column into the input string.

use crate::error::{Error, Result};
use crate::gf::{make_field, Elem, Field};
use crate::poly::UniPoly;

fn parse_uint(s: &str, column: usize) -> Result<u64> {
    let t = s.trim();
    t.parse::<u64>()
        .map_err(|_| Error::parse(column + (s.len() - s.trim_start().len()), format!("expected an integer, found '{t}'")))
}

/// Splits on commas, yielding each piece with its 1-based start column.
fn pieces(s: &str, base: usize) -> impl Iterator<Item = (&str, usize)> {
    let mut col = base;
    s.split(',').map(move |p| {
        let here = col;
        col += p.len() + 1;
        (p, here)
    })
}

pub fn parse_field(s: &str) -> Result<Field> {
    let (head, modulus) = match s.split_once(':') {
        Some((h, m)) => (h, Some((m, h.len() + 2))),
        None => (s, None),
    };
    let (p, e) = match head.split_once('^') {
        Some((p, e)) => (parse_uint(p, 1)?, parse_uint(e, p.len() + 2)?),
        None => (parse_uint(head, 1)?, 1),
    };
    if p > u32::MAX as u64 || e > 64 {
        return Err(Error::parse(1, format!("field {head} is out of range")));
    }
    let coeffs = match modulus {
        None => None,
        Some((m, col)) => Some(
            pieces(m, col)
                .map(|(c, col)| {
                    let v = parse_uint(c, col)?;
                    if v >= p {
                        return Err(Error::parse(col, format!("coefficient {v} is not below p = {p}")));
                    }
                    Ok(v as u32)
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    make_field(p as u32, e as u32, coeffs.as_deref())
}

/// Parses an element at 1-based `column` (used only for messages).
pub fn parse_element_at(field: &Field, s: &str, column: usize) -> Result<Elem> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let col = column + lead;
    if t.is_empty() {
        return Err(Error::parse(col, "empty element"));
    }
    if let Some(rest) = t.strip_prefix('a') {
        let k = if rest.is_empty() {
            1
        } else if let Some(exp) = rest.strip_prefix('^') {
            parse_uint(exp, col + 2)?
        } else {
            return Err(Error::parse(col + 1, format!("expected '^' after 'a' in '{t}'")));
        };
        return Ok(field.gen_pow(k));
    }
    let v = parse_uint(t, col)?;
    if v >= field.order() as u64 {
        return Err(Error::parse(col, format!("element code {v} is not below q = {}", field.order())));
    }
    Ok(v as Elem)
}

pub fn parse_element(field: &Field, s: &str) -> Result<Elem> {
    parse_element_at(field, s, 1)
}

pub fn parse_element_list(field: &Field, s: &str) -> Result<Vec<Elem>> {
    match s.trim() {
        "all" => return Ok(field.elements().collect()),
        "units" => return Ok(field.units().collect()),
        "" => return Err(Error::parse(1, "empty list")),
        _ => {}
    }
    pieces(s, 1).map(|(p, col)| parse_element_at(field, p, col)).collect()
}

pub fn parse_poly(field: &Field, s: &str) -> Result<UniPoly> {
    Ok(UniPoly::from_coeffs(field, parse_element_list_strict(field, s)?))
}

fn parse_element_list_strict(field: &Field, s: &str) -> Result<Vec<Elem>> {
    if s.trim().is_empty() {
        return Err(Error::parse(1, "empty coefficient list"));
    }
    pieces(s, 1).map(|(p, col)| parse_element_at(field, p, col)).collect()
}

/// Integer for prime-subfield elements, `a^k` otherwise.
pub fn format_element(field: &Field, x: Elem) -> String {
    if x < field.p() || field.e() == 1 {
        x.to_string()
    } else if x == field.generator() {
        "a".to_string()
    } else {
        format!("a^{}", field.log(x).expect("nonzero"))
    }
}

/// Human-readable `c_d x^d + … + c_0`.
pub fn format_poly(p: &UniPoly) -> String {
    let field = p.field();
    if p.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (i, &c) in p.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = format_element(field, c);
        let mono = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        terms.push(match (i, c) {
            (0, _) => coef,
            (_, 1) => mono,
            _ => format!("{coef}{mono}"),
        });
    }
    terms.join(" + ")
}

/// Comma-separated coefficients in element notation, low-to-high; parses
/// back with [`parse_poly`].
pub fn format_coeffs(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs().iter().map(|&c| format_element(p.field(), c)).collect::<Vec<_>>().join(",")
}

pub fn format_list(field: &Field, xs: &[Elem]) -> String {
    xs.iter().map(|&x| format_element(field, x)).collect::<Vec<_>>().join(",")
}
