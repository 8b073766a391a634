//! Text grammar for polynomials.
//!
//! Integer coefficients, variables by name, operators `+ - * ^` and
//! parentheses; whitespace is insignificant. Over an extension field the
//! name `a` denotes the field generator. Printing (the `Display` impl on
//! [`Polynomial`]) emits least-nonnegative-residue coefficients and
//! round-trips exactly through this parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' INT)?
//! atom   := INT | NAME | '(' expr ')' | '-' atom
//! ```

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> u8 {
        let c = self.src[self.pos];
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }

    fn tokens(mut self) -> Result<Vec<Spanned>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let (line, col) = (self.line, self.col);
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.bump();
                }
                b'+' => {
                    self.bump();
                    out.push(Spanned {
                        tok: Tok::Plus,
                        line,
                        col,
                    });
                }
                b'-' => {
                    self.bump();
                    out.push(Spanned {
                        tok: Tok::Minus,
                        line,
                        col,
                    });
                }
                b'*' => {
                    self.bump();
                    out.push(Spanned {
                        tok: Tok::Star,
                        line,
                        col,
                    });
                }
                b'^' => {
                    self.bump();
                    out.push(Spanned {
                        tok: Tok::Caret,
                        line,
                        col,
                    });
                }
                b'(' => {
                    self.bump();
                    out.push(Spanned {
                        tok: Tok::LParen,
                        line,
                        col,
                    });
                }
                b')' => {
                    self.bump();
                    out.push(Spanned {
                        tok: Tok::RParen,
                        line,
                        col,
                    });
                }
                b'0'..=b'9' => {
                    let mut v: u64 = 0;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        let d = (self.bump() - b'0') as u64;
                        v = v
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(d))
                            .ok_or_else(|| self.error("integer literal too large"))?;
                    }
                    out.push(Spanned {
                        tok: Tok::Int(v),
                        line,
                        col,
                    });
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric()
                            || self.src[self.pos] == b'_')
                    {
                        self.bump();
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos])
                        .unwrap()
                        .to_string();
                    out.push(Spanned {
                        tok: Tok::Name(name),
                        line,
                        col,
                    });
                }
                other => {
                    return Err(self.error(format!("unexpected character `{}`", other as char)))
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'r> {
    ring: &'r PolyRing,
    toks: Vec<Spanned>,
    pos: usize,
}

impl<'r> Parser<'r> {
    fn error_at(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self
            .toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .or_else(|| self.toks.last().map(|s| (s.line, s.col + 1)))
            .unwrap_or((1, 1));
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.advance();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.advance();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.advance();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.advance();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.advance();
            match self.advance() {
                Some(Tok::Int(e)) => {
                    let e = u32::try_from(e)
                        .map_err(|_| self.error_at("exponent exceeds the 2^31 degree bound"))?;
                    if e > (1 << 31) {
                        return Err(self.error_at("exponent exceeds the 2^31 degree bound"));
                    }
                    Ok(base.pow(e))
                }
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    Err(self.error_at("expected an integer exponent after `^`"))
                }
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.advance();
                Ok(self.ring.constant(self.ring.field().from_u64(v)))
            }
            Some(Tok::Name(name)) => {
                if let Some(i) = self.ring.var_index(&name) {
                    self.advance();
                    Ok(self.ring.var(i))
                } else if name == "a" && self.ring.field().degree() > 1 {
                    self.advance();
                    let gen = self.ring.field().generator().expect("extension field");
                    Ok(self.ring.constant(gen))
                } else {
                    Err(self.error_at(format!("unknown variable `{name}`")))
                }
            }
            Some(Tok::LParen) => {
                self.advance();
                let inner = self.expr()?;
                match self.advance() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => {
                        self.pos = self.pos.saturating_sub(1);
                        Err(self.error_at("expected `)`"))
                    }
                }
            }
            Some(Tok::Minus) => {
                self.advance();
                Ok(self.atom()?.neg())
            }
            _ => Err(self.error_at("expected a number, variable or `(`")),
        }
    }
}

/// Parses a polynomial in the given ring. Errors carry line and column.
pub fn parse_polynomial(ring: &PolyRing, text: &str) -> Result<Polynomial> {
    let toks = Lexer::new(text).tokens()?;
    if toks.is_empty() {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty polynomial".into(),
        });
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.error_at("trailing input after polynomial"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{make_extension, make_prime_field};
    use crate::poly::{random_form, PolyRing};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring() -> PolyRing {
        PolyRing::new(make_prime_field(101).unwrap(), &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_paper_generators() {
        let r = ring();
        let f = parse_polynomial(&r, "x^3 + y^2 + 1").unwrap();
        assert_eq!(f.num_terms(), 3);
        let g = parse_polynomial(&r, "z^3-x^2-y^2+2").unwrap();
        assert_eq!(g.num_terms(), 4);
        assert_eq!(g, parse_polynomial(&r, &g.to_string()).unwrap());
    }

    #[test]
    fn precedence_and_parens() {
        let r = ring();
        assert_eq!(
            parse_polynomial(&r, "2*x+3*y").unwrap(),
            parse_polynomial(&r, "(2*x)+(3*y)").unwrap()
        );
        assert_eq!(
            parse_polynomial(&r, "(x+y)^2").unwrap(),
            parse_polynomial(&r, "x^2+2*x*y+y^2").unwrap()
        );
        // unary minus binds below ^
        assert_eq!(
            parse_polynomial(&r, "-x^2").unwrap(),
            parse_polynomial(&r, "100*x^2").unwrap()
        );
    }

    #[test]
    fn error_positions() {
        let r = ring();
        match parse_polynomial(&r, "x + w") {
            Err(Error::Parse {
                line: 1, col: 5, ..
            }) => {}
            other => panic!("expected parse error at 1:5, got {other:?}"),
        }
        assert!(parse_polynomial(&r, "x +").is_err());
        assert!(parse_polynomial(&r, "x ) y").is_err());
        assert!(parse_polynomial(&r, "").is_err());
    }

    #[test]
    fn extension_generator_in_text() {
        let f5 = make_prime_field(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f25 = make_extension(&f5, 2, &mut rng).unwrap();
        let r = PolyRing::new(f25, &["x", "y"]).unwrap();
        let f = parse_polynomial(&r, "(a+1)*x + a^2").unwrap();
        assert_eq!(f, parse_polynomial(&r, &f.to_string()).unwrap());
    }

    #[test]
    fn print_parse_roundtrip_random() {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for d in 0..4u32 {
            for _ in 0..25 {
                let f = random_form(&r, d, &mut rng);
                let text = f.to_string();
                assert_eq!(parse_polynomial(&r, &text).unwrap(), f, "text was {text}");
            }
        }
    }
}
