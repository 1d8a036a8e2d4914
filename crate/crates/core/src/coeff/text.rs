//! Text syntax for coefficient values.
//!
//! Grammar (used by the CLI and by presentation files): integer literals,
//! `p/q` rationals, the ring's parameter or variable names, operators
//! `+ - * / ^` with parentheses; `^` binds tighter than `*` and `/`,
//! which bind tighter than `+` and `-`. Examples: `(q^2+1)/(q-1)`,
//! `3*t1^2 - 1/2`.

use num_bigint::BigInt;

use super::unipoly::{format_rat, Rat};
use super::value::{self, CoeffRingSpec, CoeffValue};
use super::{format_multipoly, format_ratfunc};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    /// Left-fraction separator in CLI fraction literals.
    Backslash,
}

/// A token with its byte offset in the source.
pub type Spanned = (Token, usize);

pub fn tokenize(src: &str) -> Result<Vec<Spanned>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((Token::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Token::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Token::Star, i));
                i += 1;
            }
            '/' => {
                out.push((Token::Slash, i));
                i += 1;
            }
            '^' => {
                out.push((Token::Caret, i));
                i += 1;
            }
            '(' => {
                out.push((Token::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Token::RParen, i));
                i += 1;
            }
            '\\' => {
                out.push((Token::Backslash, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push((Token::Int(n), start));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Token::Ident(src[start..i].to_string()), start));
            }
            other => {
                return Err(Error::parse(i, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

/// Recursive-descent parser over tokens, generic in how identifiers and
/// arithmetic are interpreted so the CLI can reuse it for elements.
pub struct Parser<'t> {
    tokens: &'t [Spanned],
    pos: usize,
    src_len: usize,
}

impl<'t> Parser<'t> {
    pub fn new(tokens: &'t [Spanned], src_len: usize) -> Self {
        Parser {
            tokens,
            pos: 0,
            src_len,
        }
    }

    pub fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    pub fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, o)| *o)
            .unwrap_or(self.src_len)
    }

    pub fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, t: &Token, what: &str) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(Error::parse(self.offset(), format!("expected {what}")))
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    /// Parses a (possibly parenthesized, possibly negated) integer
    /// exponent.
    pub fn exponent(&mut self) -> Result<i64> {
        let parens = self.eat(&Token::LParen);
        let neg = self.eat(&Token::Minus);
        let off = self.offset();
        let Some(Token::Int(n)) = self.bump().cloned() else {
            return Err(Error::parse(off, "expected integer exponent".to_string()));
        };
        let mag: i64 = n
            .try_into()
            .map_err(|_| Error::parse(off, "exponent too large".to_string()))?;
        if parens {
            self.expect(&Token::RParen, "`)` after exponent")?;
        }
        Ok(if neg { -mag } else { mag })
    }
}

struct CoeffParser<'r> {
    ring: &'r CoeffRingSpec,
}

impl CoeffParser<'_> {
    fn expr(&self, p: &mut Parser) -> Result<CoeffValue> {
        let mut acc = self.term(p)?;
        loop {
            if p.eat(&Token::Plus) {
                acc = value::add(&acc, &self.term(p)?)?;
            } else if p.eat(&Token::Minus) {
                acc = value::sub(&acc, &self.term(p)?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&self, p: &mut Parser) -> Result<CoeffValue> {
        let mut acc = self.factor(p)?;
        loop {
            if p.eat(&Token::Star) {
                acc = value::mul(&acc, &self.factor(p)?)?;
            } else if p.eat(&Token::Slash) {
                acc = value::div(&acc, &self.factor(p)?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&self, p: &mut Parser) -> Result<CoeffValue> {
        if p.eat(&Token::Minus) {
            return Ok(self.factor(p)?.neg());
        }
        let base = self.atom(p)?;
        if p.eat(&Token::Caret) {
            let off = p.offset();
            let e = p.exponent()?;
            if e < 0 && !base.is_unit() {
                return Err(Error::parse(
                    off,
                    "negative power of a non-unit coefficient".to_string(),
                ));
            }
            return value::pow_int(&base, e, self.ring);
        }
        Ok(base)
    }

    fn atom(&self, p: &mut Parser) -> Result<CoeffValue> {
        let off = p.offset();
        match p.bump().cloned() {
            Some(Token::Int(n)) => Ok(self.ring.from_rat(Rat::from(n))),
            Some(Token::Ident(name)) => {
                let names = self.ring.generator_names();
                match names.iter().position(|v| *v == name) {
                    Some(i) => Ok(self.ring.generator(i)),
                    None => Err(Error::parse(off, format!("unknown symbol `{name}`"))),
                }
            }
            Some(Token::LParen) => {
                let v = self.expr(p)?;
                p.expect(&Token::RParen, "`)`")?;
                Ok(v)
            }
            _ => Err(Error::parse(off, "expected a coefficient atom".to_string())),
        }
    }
}

/// Parses a coefficient literal over the given ring.
pub fn parse_coeff(ring: &CoeffRingSpec, src: &str) -> Result<CoeffValue> {
    let tokens = tokenize(src)?;
    let mut p = Parser::new(&tokens, src.len());
    let v = CoeffParser { ring }.expr(&mut p)?;
    if !p.at_end() {
        return Err(Error::parse(p.offset(), "trailing input".to_string()));
    }
    Ok(v)
}

/// Canonical display form; `parse_coeff(ring, format_coeff(ring, v)) == v`.
pub fn format_coeff(ring: &CoeffRingSpec, v: &CoeffValue) -> String {
    match (ring, v) {
        (_, CoeffValue::Rational(r)) => format_rat(r),
        (CoeffRingSpec::RationalFunction { parameter }, CoeffValue::RationalFunction(f)) => {
            format_ratfunc(f, parameter)
        }
        (CoeffRingSpec::Polynomial { variables }, CoeffValue::Polynomial(p)) => {
            format_multipoly(p, variables)
        }
        _ => panic!("value not a member of ring"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::unipoly::rat;

    #[test]
    fn parses_rationals() {
        let ring = CoeffRingSpec::rational();
        assert_eq!(parse_coeff(&ring, "5/6").unwrap(), ring.from_rat(rat(5, 6)));
        assert_eq!(parse_coeff(&ring, "-2/4").unwrap(), ring.from_rat(rat(-1, 2)));
        assert_eq!(parse_coeff(&ring, "2 + 3*4").unwrap(), ring.from_int(14));
    }

    #[test]
    fn parses_function_field() {
        let ring = CoeffRingSpec::rational_function("q");
        let v = parse_coeff(&ring, "(q^2+1)/(q-1)").unwrap();
        assert_eq!(parse_coeff(&ring, &format_coeff(&ring, &v)).unwrap(), v);
    }

    #[test]
    fn parses_polynomials() {
        let ring = CoeffRingSpec::polynomial(["t1", "t2"]);
        let v = parse_coeff(&ring, "3*t1^2 - 1/2").unwrap();
        assert_eq!(format_coeff(&ring, &v), "3*t1^2 - 1/2");
        assert!(parse_coeff(&ring, "1/t1").is_err());
        assert!(parse_coeff(&ring, "t3").is_err());
    }

    #[test]
    fn roundtrip_various() {
        let qring = CoeffRingSpec::rational_function("q");
        for s in ["q", "1/q", "q^4", "-q + 1", "(q+1)/(q^2 - 2)", "0", "7/3"] {
            let v = parse_coeff(&qring, s).unwrap();
            assert_eq!(
                parse_coeff(&qring, &format_coeff(&qring, &v)).unwrap(),
                v,
                "roundtrip failed for {s}"
            );
        }
    }

    #[test]
    fn error_positions() {
        let ring = CoeffRingSpec::rational();
        match parse_coeff(&ring, "1 + $") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
