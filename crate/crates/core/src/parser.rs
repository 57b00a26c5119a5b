//! Textual polynomial input and output.
//!
//! Grammar (ASCII, whitespace ignored):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | 'x' ('^' nat)? | '(' expr ')'
//! rational := int ('/' posint)?
//! ```
//!
//! Unary minus is allowed at the head of an expression and immediately after
//! `'('`, nowhere else. Integer literals are unsigned digit strings of
//! arbitrary length.
//!
//! The plain renderer emits the canonical form — descending powers, explicit
//! `*` between coefficient and variable, rationals as `a/b` — and
//! `parse_polynomial(render_polynomial(p, Plain)) == p` for every polynomial.

use std::fmt;

use num_bigint::BigInt;

use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Output syntax for [`render_polynomial`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Plain,
    Latex,
}

/// A syntax error, with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses the grammar above into a [`Polynomial`].
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        input: text.as_bytes(),
        pos: 0,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.input.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .input
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        // Unary minus at the head negates the first term.
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let degree = if self.eat(b'^') { self.nat()? } else { 1 };
                Ok(Polynomial::monomial(Rational::one(), degree))
            }
            Some(b) if b.is_ascii_digit() => Ok(Polynomial::constant(self.rational()?)),
            _ => Err(self.error("expected a rational, 'x', or '('")),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.integer()?;
        if self.eat(b'/') {
            self.skip_ws();
            let denom_pos = self.pos;
            let denom = self.integer()?;
            Rational::checked_new(numer, denom).ok_or(ParseError {
                position: denom_pos,
                message: "division by zero in rational literal".to_string(),
            })
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .input
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.input[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string is a valid integer"))
    }

    fn nat(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let at = self.pos;
        let value = self.integer()?;
        usize::try_from(&value).map_err(|_| ParseError {
            position: at,
            message: "exponent too large".to_string(),
        })
    }
}

/// Renders a polynomial in descending powers.
pub fn render_polynomial(p: &Polynomial, format: RenderFormat) -> String {
    let Some(degree) = p.degree() else {
        return "0".to_string();
    };
    let mut out = String::new();
    for k in (0..=degree).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        render_term(&mut out, &c.abs(), k, format);
    }
    out
}

fn render_term(out: &mut String, magnitude: &Rational, power: usize, format: RenderFormat) {
    let coeff_text = match format {
        RenderFormat::Plain => magnitude.to_string(),
        RenderFormat::Latex if magnitude.is_integer() => magnitude.to_string(),
        RenderFormat::Latex => format!("\\frac{{{}}}{{{}}}", magnitude.numer(), magnitude.denom()),
    };
    let variable = match power {
        0 => String::new(),
        1 => "x".to_string(),
        _ if format == RenderFormat::Latex => format!("x^{{{power}}}"),
        _ => format!("x^{power}"),
    };
    if power == 0 {
        out.push_str(&coeff_text);
    } else if magnitude.is_one() {
        out.push_str(&variable);
    } else {
        out.push_str(&coeff_text);
        if format == RenderFormat::Plain {
            out.push('*');
        }
        out.push_str(&variable);
    }
}
