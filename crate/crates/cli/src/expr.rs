//! Element expressions over `h`, `x`, `y` and rational literals.

use gwa::{GwaElement, GwaPresentation, LaurentPoly, Rational};
use num_traits::{One, ToPrimitive};

use crate::error::ParseError;

/// Exponents above this are rejected to keep evaluation bounded.
pub const MAX_EXPONENT: u32 = 64;
const MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    H,
    X,
    Y,
    Num(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Negative exponents only occur on `h`.
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    H,
    X,
    Y,
    Num(Rational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::H => "'h'".into(),
            Tok::X => "'x'".into(),
            Tok::Y => "'y'".into(),
            Tok::Num(r) => format!("number {r}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

const OPERAND: &[&str] = &["h", "x", "y", "number", "'('", "'-'"];

fn digits(chars: &[char], i: &mut usize) -> String {
    let start = *i;
    while *i < chars.len() && chars[*i].is_ascii_digit() {
        *i += 1;
    }
    chars[start..*i].iter().collect()
}

/// Tokens paired with their 1-based columns.
fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let tok = match chars[i] {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let num = digits(&chars, &mut i);
                let mut den = "1".to_string();
                if chars.get(i) == Some(&'/') {
                    i += 1;
                    den = digits(&chars, &mut i);
                    if den.is_empty() {
                        return Err(ParseError::syntax(
                            i + 1,
                            "incomplete fraction",
                            &["digits"],
                        ));
                    }
                }
                let r = parse_fraction(&num, &den).ok_or_else(|| {
                    ParseError::syntax(col, "zero denominator", &["nonzero denominator"])
                })?;
                out.push((col, Tok::Num(r)));
                continue;
            }
            'h' => Tok::H,
            'x' => Tok::X,
            'y' => Tok::Y,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError::syntax(
                    col,
                    format!("unexpected character {other:?}"),
                    &["h", "x", "y", "digit", "+", "-", "*", "^", "(", ")"],
                ))
            }
        };
        out.push((col, tok));
        i += 1;
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

pub(crate) fn parse_fraction(num: &str, den: &str) -> Option<Rational> {
    format!("{num}/{den}").parse().ok()
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    depth: usize,
    allow_negative: bool,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn column(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        ParseError::syntax(
            self.column(),
            format!("unexpected {}", self.peek().describe()),
            expected,
        )
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::syntax(self.column(), "nesting too deep", &[]));
        }
        let mut lhs = self.signed()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.signed()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.signed()?));
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(lhs)
    }

    /// Unary minus binds looser than `*` and `^`.
    fn signed(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            self.depth += 1;
            if self.depth > MAX_DEPTH {
                return Err(ParseError::syntax(self.column(), "nesting too deep", &[]));
            }
            let inner = self.signed()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.product()
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.power()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let col = self.column();
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let Tok::Num(n) = self.peek().clone() else {
            return Err(self.unexpected(&["non-negative integer"]));
        };
        self.bump();
        if !n.is_integer() {
            return Err(ParseError::syntax(
                col,
                "exponent must be an integer",
                &["integer"],
            ));
        }
        let e = match n.to_integer().to_u32() {
            Some(e) if e <= MAX_EXPONENT => e as i64,
            _ => {
                return Err(ParseError::syntax(
                    col,
                    format!("exponent exceeds {MAX_EXPONENT}"),
                    &[],
                ))
            }
        };
        if negative {
            if !self.allow_negative || base != Expr::H {
                return Err(ParseError::syntax(
                    col,
                    "negative exponent",
                    &["non-negative integer"],
                ));
            }
            return Ok(Expr::Pow(Box::new(base), -e));
        }
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::H => {
                self.bump();
                Ok(Expr::H)
            }
            Tok::X => {
                self.bump();
                Ok(Expr::X)
            }
            Tok::Y => {
                self.bump();
                Ok(Expr::Y)
            }
            Tok::Num(r) => {
                self.bump();
                Ok(Expr::Num(r))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected(&["')'", "'+'", "'-'", "'*'", "'^'"]));
                }
                self.bump();
                Ok(e)
            }
            _ => Err(self.unexpected(OPERAND)),
        }
    }
}

/// Parses an expression; `h^-n` is accepted only with `allow_negative`.
pub fn parse_expr(text: &str, allow_negative: bool) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        depth: 0,
        allow_negative,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected(&["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(e)
}

impl Expr {
    /// Evaluates in the algebra, leaving the result in normal form.
    pub fn eval(&self, a: &GwaPresentation) -> Result<GwaElement, ParseError> {
        Ok(match self {
            Expr::H => GwaElement::h(),
            Expr::X => GwaElement::x(),
            Expr::Y => GwaElement::y(),
            Expr::Num(r) => GwaElement::scalar(r.clone()),
            Expr::Neg(e) => -&e.eval(a)?,
            Expr::Add(l, r) => &l.eval(a)? + &r.eval(a)?,
            Expr::Sub(l, r) => &l.eval(a)? - &r.eval(a)?,
            Expr::Mul(l, r) => a.multiply(&l.eval(a)?, &r.eval(a)?),
            Expr::Pow(b, e) if *e < 0 => {
                debug_assert_eq!(**b, Expr::H);
                GwaElement::coeff(LaurentPoly::monomial(Rational::one(), *e))
            }
            Expr::Pow(b, e) => a.power(&b.eval(a)?, *e as u32),
        })
    }

    /// Evaluates an expression in `h` alone as a Laurent polynomial.
    pub fn to_laurent(&self) -> Result<LaurentPoly, ParseError> {
        Ok(match self {
            Expr::H => LaurentPoly::monomial(Rational::one(), 1),
            Expr::X | Expr::Y => {
                return Err(ParseError::semantic(
                    "only h may appear in a defining polynomial",
                ))
            }
            Expr::Num(r) => LaurentPoly::monomial(r.clone(), 0),
            Expr::Neg(e) => -&e.to_laurent()?,
            Expr::Add(l, r) => &l.to_laurent()? + &r.to_laurent()?,
            Expr::Sub(l, r) => &l.to_laurent()? - &r.to_laurent()?,
            Expr::Mul(l, r) => &l.to_laurent()? * &r.to_laurent()?,
            Expr::Pow(b, e) => {
                let base = b.to_laurent()?;
                if *e < 0 {
                    LaurentPoly::monomial(Rational::one(), *e)
                } else {
                    (0..*e).fold(LaurentPoly::one(), |acc, _| &acc * &base)
                }
            }
        })
    }
}

pub fn parse_element_expr(text: &str, a: &GwaPresentation) -> Result<GwaElement, ParseError> {
    let laurent = a.base() == gwa::BaseRing::Laurent;
    parse_expr(text, laurent)?.eval(a)
}
