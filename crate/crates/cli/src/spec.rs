//! Algebra specifications: `gwa q=2 a="h^2+h+1"`, `gwa q=1 h0=1 a="h^2-h"`,
//! `lgwa q=2 a="h^-1 + h"`, `smith q=2 f="h^2+h"`, `witten 2,1,2,1,1,3,4`,
//! `lebruyn alpha=2 beta=3`.

use std::fmt;

use gwa::{LaurentPoly, Poly, Rational};
use num_traits::Zero;

use crate::error::ParseError;
use crate::expr::{parse_expr, parse_fraction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSpec {
    Gwa { q: Rational, h0: Rational, a: Poly },
    Lgwa { q: Rational, a: LaurentPoly },
    Smith { q: Rational, f: Poly },
    Witten(Box<[Rational; 7]>),
    LeBruyn { alpha: Rational, beta: Rational },
}

impl AlgebraSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraSpec::Gwa { .. } => "gwa",
            AlgebraSpec::Lgwa { .. } => "lgwa",
            AlgebraSpec::Smith { .. } => "smith",
            AlgebraSpec::Witten(_) => "witten",
            AlgebraSpec::LeBruyn { .. } => "lebruyn",
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Gwa { q, h0, a } if h0.is_zero() => write!(f, "gwa q={q} a=\"{a}\""),
            AlgebraSpec::Gwa { q, h0, a } => write!(f, "gwa q={q} h0={h0} a=\"{a}\""),
            AlgebraSpec::Lgwa { q, a } => write!(f, "lgwa q={q} a=\"{a}\""),
            AlgebraSpec::Smith { q, f: poly } => write!(f, "smith q={q} f=\"{poly}\""),
            AlgebraSpec::Witten(eps) => {
                let parts: Vec<String> = eps.iter().map(|e| e.to_string()).collect();
                write!(f, "witten {}", parts.join(","))
            }
            AlgebraSpec::LeBruyn { alpha, beta } => write!(f, "lebruyn alpha={alpha} beta={beta}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Eq,
    Comma,
    Num(Rational),
    /// Quoted text and the column of its first character.
    Str(String, usize),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("'{w}'"),
            Tok::Eq => "'='".into(),
            Tok::Comma => "','".into(),
            Tok::Num(r) => format!("number {r}"),
            Tok::Str(s, _) => format!("string {s:?}"),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let take = |i: &mut usize, pred: &dyn Fn(char) -> bool| -> String {
        let start = *i;
        while *i < chars.len() && pred(chars[*i]) {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '=' => {
                i += 1;
                Tok::Eq
            }
            ',' => {
                i += 1;
                Tok::Comma
            }
            '"' => {
                i += 1;
                let body = take(&mut i, &|c| c != '"');
                if i == chars.len() {
                    return Err(ParseError::syntax(i + 1, "unterminated string", &["'\"'"]));
                }
                i += 1;
                Tok::Str(body, col + 1)
            }
            'a'..='z' | 'A'..='Z' => Tok::Word(take(&mut i, &|c| {
                c.is_ascii_alphanumeric() || c == '_' || c == '-'
            })),
            '-' | '0'..='9' => {
                let negative = c == '-';
                if negative {
                    i += 1;
                }
                let num = take(&mut i, &|c| c.is_ascii_digit());
                if num.is_empty() {
                    return Err(ParseError::syntax(i + 1, "expected digits", &["digit"]));
                }
                let mut den = "1".to_string();
                if chars.get(i) == Some(&'/') {
                    i += 1;
                    den = take(&mut i, &|c| c.is_ascii_digit());
                    if den.is_empty() {
                        return Err(ParseError::syntax(i + 1, "incomplete fraction", &["digit"]));
                    }
                }
                let r = parse_fraction(&num, &den).ok_or_else(|| {
                    ParseError::syntax(col, "zero denominator", &["nonzero denominator"])
                })?;
                Tok::Num(if negative { -r } else { r })
            }
            other => {
                return Err(ParseError::syntax(
                    col,
                    format!("unexpected character {other:?}"),
                    &["name", "'='", "number", "'\"'"],
                ))
            }
        };
        out.push((col, tok));
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

const KINDS: &[&str] = &["gwa", "lgwa", "smith", "witten", "lebruyn"];

fn keys_for(kind: &str) -> &'static [&'static str] {
    match kind {
        "gwa" => &["q", "h0", "a"],
        "lgwa" => &["q", "a"],
        "smith" => &["q", "f"],
        "lebruyn" => &["alpha", "beta"],
        _ => &[],
    }
}

enum Value {
    Num(Rational),
    Poly(LaurentPoly),
}

pub fn parse_algebra_spec(text: &str) -> Result<AlgebraSpec, ParseError> {
    let toks = lex(text)?;
    let mut pos = 0;
    let unexpected = |pos: usize, expected: &[&str]| {
        let (col, t) = &toks[pos];
        ParseError::syntax(*col, format!("unexpected {}", t.describe()), expected)
    };
    let kind = match &toks[0].1 {
        Tok::Word(w) if KINDS.contains(&w.as_str()) => w.clone(),
        _ => return Err(unexpected(0, KINDS)),
    };
    pos += 1;

    if kind == "witten" {
        let mut eps = Vec::new();
        loop {
            match &toks[pos].1 {
                Tok::Num(r) => eps.push(r.clone()),
                _ => return Err(unexpected(pos, &["number"])),
            }
            pos += 1;
            match &toks[pos].1 {
                Tok::Comma => pos += 1,
                Tok::End => break,
                _ => return Err(unexpected(pos, &["','", "end of input"])),
            }
        }
        let eps: [Rational; 7] = eps.try_into().map_err(|v: Vec<Rational>| {
            ParseError::semantic(format!("witten needs 7 parameters, got {}", v.len()))
        })?;
        return Ok(AlgebraSpec::Witten(Box::new(eps)));
    }

    let allowed = keys_for(&kind);
    let mut values: Vec<(String, Value)> = Vec::new();
    while toks[pos].1 != Tok::End {
        let key = match &toks[pos].1 {
            Tok::Word(w) if allowed.contains(&w.as_str()) => w.clone(),
            _ => return Err(unexpected(pos, allowed)),
        };
        if values.iter().any(|(k, _)| *k == key) {
            return Err(ParseError::syntax(
                toks[pos].0,
                format!("duplicate key {key}"),
                &[],
            ));
        }
        pos += 1;
        if toks[pos].1 != Tok::Eq {
            return Err(unexpected(pos, &["'='"]));
        }
        pos += 1;
        let polynomial_key = key == "a" || key == "f";
        let value = match &toks[pos].1 {
            Tok::Num(r) if !polynomial_key => Value::Num(r.clone()),
            Tok::Str(body, col) if polynomial_key => {
                let e = parse_expr(body, kind == "lgwa").map_err(|e| e.shifted(col - 1))?;
                Value::Poly(e.to_laurent()?)
            }
            _ if polynomial_key => return Err(unexpected(pos, &["quoted polynomial"])),
            _ => return Err(unexpected(pos, &["number"])),
        };
        pos += 1;
        values.push((key, value));
    }

    let mut get = |key: &str| {
        values
            .iter()
            .position(|(k, _)| k == key)
            .map(|i| values.remove(i).1)
    };
    let mut num = |key: &str, default: Option<Rational>| -> Result<Rational, ParseError> {
        match get(key) {
            Some(Value::Num(r)) => Ok(r),
            Some(Value::Poly(_)) => unreachable!("keys are typed"),
            None => default.ok_or_else(|| ParseError::semantic(format!("missing {key}"))),
        }
    };
    let q_nonzero = |q: Rational| {
        if q.is_zero() {
            Err(ParseError::semantic("q must be nonzero"))
        } else {
            Ok(q)
        }
    };
    let spec = match kind.as_str() {
        "gwa" | "lgwa" | "smith" => {
            let q = q_nonzero(num("q", None)?)?;
            let h0 = if kind == "gwa" {
                num("h0", Some(Rational::zero()))?
            } else {
                Rational::zero()
            };
            let key = if kind == "smith" { "f" } else { "a" };
            let Some(Value::Poly(p)) = get(key) else {
                return Err(ParseError::semantic(format!("missing {key}")));
            };
            if p.is_zero() {
                return Err(ParseError::semantic(format!("{key} must be nonzero")));
            }
            match kind.as_str() {
                "lgwa" => AlgebraSpec::Lgwa { q, a: p },
                "gwa" => AlgebraSpec::Gwa {
                    q,
                    h0,
                    a: p.to_poly().expect("no negative powers outside lgwa"),
                },
                _ => {
                    let f = p.to_poly().expect("no negative powers outside lgwa");
                    if !f.coeff(0).is_zero() {
                        return Err(ParseError::semantic("f(0)=0 required"));
                    }
                    AlgebraSpec::Smith { q, f }
                }
            }
        }
        _ => AlgebraSpec::LeBruyn {
            alpha: num("alpha", None)?,
            beta: num("beta", None)?,
        },
    };
    Ok(spec)
}

/// Comma-separated rationals, optionally wrapped in braces: `0,1/2,-3` or `{0, 1}`.
pub fn parse_roots(text: &str) -> Result<Vec<Rational>, ParseError> {
    let trimmed = text.trim();
    let (body, offset) = match trimmed.strip_prefix('{') {
        Some(rest) => match rest.strip_suffix('}') {
            Some(inner) => (
                inner,
                text.find('{').map_or(0, |b| text[..b].chars().count()) + 1,
            ),
            None => {
                return Err(ParseError::syntax(
                    text.chars().count() + 1,
                    "unterminated root list",
                    &["'}'"],
                ))
            }
        },
        None => (text, 0),
    };
    let toks = lex(body).map_err(|e| e.shifted(offset))?;
    let mut roots = Vec::new();
    let mut pos = 0;
    if toks[0].1 == Tok::End {
        return Ok(roots);
    }
    loop {
        let (col, t) = &toks[pos];
        match t {
            Tok::Num(r) => roots.push(r.clone()),
            other => {
                return Err(ParseError::syntax(
                    col + offset,
                    format!("unexpected {}", other.describe()),
                    &["number"],
                ))
            }
        }
        pos += 1;
        let (col, t) = &toks[pos];
        match t {
            Tok::Comma => pos += 1,
            Tok::End => return Ok(roots),
            other => {
                return Err(ParseError::syntax(
                    col + offset,
                    format!("unexpected {}", other.describe()),
                    &["','", "end of input"],
                ))
            }
        }
    }
}
