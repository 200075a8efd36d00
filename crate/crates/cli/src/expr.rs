//! Expression syntax for Weyl algebra elements.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' uint)?
//! atom     := 'p' | 'q' | 'h' | rational | '(' expr ')'
//! rational := uint ('/' posint)?
//! ```
//!
//! `h` is read as `p*q`. Products keep their source order, so `q*p` only
//! becomes `p*q - 1` when evaluated. Whitespace between tokens is ignored.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use weyl_core::{Scalar, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    P,
    Q,
    Rational(Scalar),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Sum(Vec<(Sign, ExprAst)>),
    Product(Vec<ExprAst>),
    Power(Box<ExprAst>, u32),
    Atom(Atom),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the problem was detected.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_expr(s: &str) -> Result<ExprAst, ParseError> {
    let mut parser = Parser { src: s.as_bytes(), pos: 0 };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error("empty expression"));
    }
    let ast = parser.expr()?;
    parser.skip_ws();
    match parser.peek() {
        None => Ok(ast),
        Some(b')') => Err(parser.error("unmatched ')'")),
        Some(c) => Err(parser.error(format!("unexpected {}", describe(c)))),
    }
}

pub fn eval_ast(a: &ExprAst) -> WeylElement {
    match a {
        ExprAst::Sum(terms) => terms.iter().fold(WeylElement::zero(), |acc, (sign, t)| {
            let v = eval_ast(t);
            match sign {
                Sign::Plus => &acc + &v,
                Sign::Minus => &acc - &v,
            }
        }),
        ExprAst::Product(factors) => factors
            .iter()
            .fold(WeylElement::one(), |acc, f| &acc * &eval_ast(f)),
        ExprAst::Power(base, n) => eval_ast(base).pow(*n),
        ExprAst::Atom(Atom::P) => WeylElement::p(),
        ExprAst::Atom(Atom::Q) => WeylElement::q(),
        ExprAst::Atom(Atom::Rational(c)) => WeylElement::constant(c.clone()),
    }
}

/// Parses and evaluates in one step.
pub fn parse_element(s: &str) -> Result<WeylElement, ParseError> {
    parse_expr(s).map(|a| eval_ast(&a))
}

/// Canonical text form; always accepted by [`parse_expr`].
pub fn print(x: &WeylElement) -> String {
    x.to_string()
}

fn describe(c: u8) -> String {
    if c.is_ascii_graphic() {
        format!("'{}'", c as char)
    } else {
        format!("byte 0x{c:02x}")
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let first_sign = if self.eat(b'-') { Sign::Minus } else { Sign::Plus };
        let mut terms = vec![(first_sign, self.term()?)];
        loop {
            let sign = if self.eat(b'+') {
                Sign::Plus
            } else if self.eat(b'-') {
                Sign::Minus
            } else {
                break;
            };
            terms.push((sign, self.term()?));
        }
        if terms.len() == 1 && first_sign == Sign::Plus {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(ExprAst::Sum(terms))
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        Ok(ExprAst::Product(factors))
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        match self.peek() {
            Some(b'-') => return Err(self.error("negative exponent")),
            Some(c) if c.is_ascii_digit() => {}
            Some(c) => return Err(self.error(format!("expected exponent, found {}", describe(c)))),
            None => return Err(self.error("expected exponent, found end of input")),
        }
        let start = self.pos;
        let digits = self.digits();
        if self.peek() == Some(b'.') || self.peek() == Some(b'/') {
            return Err(self.error("fractional exponent"));
        }
        let n = digits
            .parse::<u32>()
            .map_err(|_| ParseError {
                offset: start,
                message: "exponent too large".into(),
            })?;
        Ok(ExprAst::Power(Box::new(base), n))
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        self.skip_ws();
        let Some(c) = self.peek() else {
            return Err(self.error("unexpected end of input"));
        };
        match c {
            b'p' => {
                self.pos += 1;
                Ok(ExprAst::Atom(Atom::P))
            }
            b'q' => {
                self.pos += 1;
                Ok(ExprAst::Atom(Atom::Q))
            }
            b'h' => {
                self.pos += 1;
                Ok(ExprAst::Product(vec![
                    ExprAst::Atom(Atom::P),
                    ExprAst::Atom(Atom::Q),
                ]))
            }
            b'(' => {
                self.pos += 1;
                self.skip_ws();
                if self.peek() == Some(b')') {
                    return Err(self.error("empty parentheses"));
                }
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(match self.peek() {
                        None => self.error("missing ')'"),
                        Some(c) => self.error(format!("expected ')', found {}", describe(c))),
                    });
                }
                Ok(inner)
            }
            c if c.is_ascii_digit() => self.rational(),
            c => Err(self.error(format!("unexpected {}", describe(c)))),
        }
    }

    fn rational(&mut self) -> Result<ExprAst, ParseError> {
        let num: BigInt = self.digits().parse().expect("digit run");
        if self.peek() == Some(b'.') {
            return Err(self.error("decimal point; write rationals as a/b"));
        }
        if !self.eat(b'/') {
            return Ok(ExprAst::Atom(Atom::Rational(Scalar::from_integer(num))));
        }
        self.skip_ws();
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error("expected denominator"));
        }
        let start = self.pos;
        let den: BigInt = self.digits().parse().expect("digit run");
        if den.is_zero() {
            return Err(ParseError {
                offset: start,
                message: "zero denominator".into(),
            });
        }
        Ok(ExprAst::Atom(Atom::Rational(Scalar::new(num, den))))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use weyl_core::scalar::{int, ratio};

    fn el(s: &str) -> WeylElement {
        parse_element(s).unwrap()
    }

    #[test]
    fn products_keep_source_order() {
        assert_eq!(
            parse_expr("q*p").unwrap(),
            ExprAst::Product(vec![ExprAst::Atom(Atom::Q), ExprAst::Atom(Atom::P)])
        );
        assert_eq!(el("q*p"), &WeylElement::h() - &WeylElement::one());
    }

    #[test]
    fn h_is_p_times_q() {
        let ast = parse_expr("h^2 - h").unwrap();
        let h = ExprAst::Product(vec![ExprAst::Atom(Atom::P), ExprAst::Atom(Atom::Q)]);
        assert_eq!(
            ast,
            ExprAst::Sum(vec![
                (Sign::Plus, ExprAst::Power(Box::new(h.clone()), 2)),
                (Sign::Minus, h),
            ])
        );
        // h^2 = p(qp)q = p(pq - 1)q
        assert_eq!(el("h^2").to_string(), "p^2*q^2 - p*q");
        assert_eq!(el("h^2 + h").to_string(), "p^2*q^2");
        assert_eq!(el("h^2 - h").to_string(), "p^2*q^2 - 2*p*q");
    }

    #[test]
    fn rationals() {
        assert_eq!(el("1/2 * p"), WeylElement::p().scale(&ratio(1, 2)));
        assert_eq!(el("4/6"), WeylElement::constant(ratio(2, 3)));
        assert_eq!(el("-(3)"), WeylElement::constant(int(-3)));
    }

    #[test]
    fn polygon_example_parses() {
        let x = el("p^4 + p^3*q + p^2*q^2 + q^3 + q");
        assert_eq!(x.len(), 5);
        assert_eq!(x.to_string(), "p^4 + p^3*q + p^2*q^2 + q^3 + q");
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse_expr("p^-1").unwrap_err();
        assert_eq!((e.offset, e.message.as_str()), (2, "negative exponent"));
        let e = parse_expr("p + ").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = parse_expr("2p").unwrap_err();
        assert_eq!((e.offset, e.message.as_str()), (1, "unexpected 'p'"));
        assert_eq!(parse_expr("q^1.5").unwrap_err().message, "fractional exponent");
        assert_eq!(parse_expr("1/0").unwrap_err().offset, 2);
    }

    #[test]
    fn printed_forms_reparse() {
        for s in ["-p", "p^4 - 3*p^2*q^2 + q^3 + q - 1/2", "0", "-7/3*p*q^5"] {
            assert_eq!(print(&el(s)), s);
        }
    }
}
