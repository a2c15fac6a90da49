//! Textual input: rationals (`p/q`), polynomial expressions (`x^3-3*x+1`)
//! and descending coefficient lists (`1,0,-3,1`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactmath::Rational;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

/// Parses `p`, `-p`, `p/q` or `-p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let mut parser = Parser::new(s);
    parser.skip_ws();
    let negative = parser.eat('-');
    if !negative {
        parser.eat('+');
    }
    parser.skip_ws();
    let value = parser.number()?;
    parser.skip_ws();
    parser.expect_end("end of rational")?;
    Ok(if negative { -value } else { value })
}

/// Parses a polynomial expression in `x`.
pub fn parse_poly(s: &str) -> Result<Poly, ParseError> {
    let mut parser = Parser::new(s);
    let p = parser.expr()?;
    parser.skip_ws();
    parser.expect_end("operator or end of input")?;
    Ok(p)
}

/// Parses descending coefficients separated by commas.
pub fn parse_coeff_list(s: &str) -> Result<Poly, ParseError> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for piece in s.split(',') {
        let c = parse_rational(piece).map_err(|mut e| {
            e.position += offset;
            e
        })?;
        coeffs.push(c);
        offset += piece.chars().count() + 1;
    }
    Ok(Poly::from_descending(coeffs))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(s: &str) -> Self {
        Parser {
            chars: s
                .chars()
                .map(|c| if c == '\u{2212}' { '-' } else { c })
                .collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos,
            expected: expected.to_string(),
            found: self
                .peek()
                .map_or_else(|| "end of input".to_string(), |c| format!("'{c}'")),
        }
    }

    fn expect_end(&self, expected: &str) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error(expected)),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("digit"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    /// Unsigned integer or fraction literal.
    fn number(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den_pos = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ParseError {
                    position: den_pos,
                    expected: "nonzero denominator".to_string(),
                    found: "'0'".to_string(),
                });
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else {
                self.skip_ws();
                // Juxtaposition such as `3x` or `2(x+1)`.
                match self.peek() {
                    Some('x') | Some('(') => acc = &acc * &self.power()?,
                    _ => return Ok(acc),
                }
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.primary()?;
        if self.eat('^') {
            self.skip_ws();
            let exp_pos = self.pos;
            let e = self.digits()?;
            let e: u32 = e.try_into().map_err(|_| ParseError {
                position: exp_pos,
                expected: "small exponent".to_string(),
                found: "oversized exponent".to_string(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Poly::constant(self.number()?)),
            _ => Err(self.error("number, 'x' or '('")),
        }
    }
}
