//! Text format for Puiseux polynomials and monoid literals.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coeff ['*'] mono | coeff | mono
//! mono   := 'X' ['^' expo]
//! expo   := uint | '(' uint ['/' uint] ')'
//! coeff  := uint ['/' uint]
//! monoid := '<' rat (',' rat)* '>'
//! ```
//!
//! Whitespace is ignored between tokens. Fractional exponents must be
//! parenthesized so that `X^1/2` is rejected rather than misread.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rational_to_string, Coeff, Rat};
use crate::monoid::PuiseuxMonoid;
use crate::poly::PuiseuxPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    X,
    Caret,
    LParen,
    RParen,
    Slash,
    Plus,
    Minus,
    Star,
    Lt,
    Gt,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::X => "`X`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Lt => "`<`".into(),
            Tok::Gt => "`>`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((Tok::Num(n), start));
                continue;
            }
            b'X' => Tok::X,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'/' => Tok::Slash,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'<' => Tok::Lt,
            b'>' => Tok::Gt,
            b',' => Tok::Comma,
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(Error::Parse {
                    offset: i,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, bytes.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        Error::Parse {
            offset: self.offset(),
            message: format!("expected {wanted}, found {}", self.peek().describe()),
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.unexpected(&t.describe()))
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        match self.peek() {
            Tok::Num(_) => match self.bump() {
                Tok::Num(n) => Ok(n),
                _ => unreachable!(),
            },
            _ => Err(self.unexpected("a number")),
        }
    }

    /// `uint ['/' uint]` with the zero-denominator check.
    fn fraction(&mut self) -> Result<Coeff> {
        let num = self.uint()?;
        if !self.eat(&Tok::Slash) {
            return Ok(Coeff::from_integer(num));
        }
        let at = self.offset();
        let den = self.uint()?;
        if den.is_zero() {
            return Err(Error::Semantic {
                offset: at,
                message: "zero denominator".into(),
            });
        }
        Ok(Coeff::new(num, den))
    }

    fn finish(&self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn poly(&mut self) -> Result<PuiseuxPoly> {
        let mut terms = Vec::new();
        let mut negative = self.eat(&Tok::Minus);
        loop {
            let (e, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            terms.push((e, c));
            negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        self.finish()?;
        Ok(PuiseuxPoly::from_terms(terms))
    }

    fn term(&mut self) -> Result<(Rat, Coeff)> {
        match self.peek() {
            Tok::X => Ok((self.mono()?, Coeff::one())),
            Tok::Num(_) => {
                let c = self.fraction()?;
                if self.eat(&Tok::Star) {
                    return Ok((self.mono()?, c));
                }
                if *self.peek() == Tok::X {
                    return Ok((self.mono()?, c));
                }
                Ok((Rat::zero(), c))
            }
            _ => Err(self.unexpected("a term")),
        }
    }

    fn mono(&mut self) -> Result<Rat> {
        self.expect(Tok::X)?;
        if !self.eat(&Tok::Caret) {
            return Ok(Rat::one());
        }
        let at = self.offset();
        match self.peek() {
            Tok::Num(_) => Ok(Rat::from_rational(Coeff::from_integer(self.uint()?)).unwrap()),
            Tok::Minus => Err(Error::Semantic {
                offset: at,
                message: "negative exponent".into(),
            }),
            Tok::LParen => {
                self.bump();
                let neg_at = self.offset();
                if self.eat(&Tok::Minus) {
                    return Err(Error::Semantic {
                        offset: neg_at,
                        message: "negative exponent".into(),
                    });
                }
                let e = self.fraction()?;
                self.expect(Tok::RParen)?;
                Ok(Rat::from_rational(e).expect("non-negative"))
            }
            _ => Err(self.unexpected("an exponent")),
        }
    }

    fn monoid(&mut self) -> Result<PuiseuxMonoid> {
        self.expect(Tok::Lt)?;
        let mut gens = Vec::new();
        loop {
            let at = self.offset();
            if self.eat(&Tok::Minus) {
                return Err(Error::Semantic {
                    offset: at,
                    message: "generator must be positive".into(),
                });
            }
            let g = self.fraction()?;
            if g.is_zero() {
                return Err(Error::Semantic {
                    offset: at,
                    message: "generator must be positive".into(),
                });
            }
            gens.push(Rat::from_rational(g).expect("positive"));
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::Gt)?;
        self.finish()?;
        PuiseuxMonoid::new(gens)
    }
}

/// Parses a Puiseux polynomial; like terms are merged.
pub fn parse_poly(text: &str) -> Result<PuiseuxPoly> {
    Parser::new(text)?.poly()
}

/// Parses a monoid literal such as `<1/2, 2/3>`.
pub fn parse_monoid(text: &str) -> Result<PuiseuxMonoid> {
    Parser::new(text)?.monoid()
}

/// Parses a single non-negative rational `a` or `a/b`.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let mut p = Parser::new(text)?;
    let at = p.offset();
    if p.eat(&Tok::Minus) {
        return Err(Error::Semantic {
            offset: at,
            message: "value must be non-negative".into(),
        });
    }
    let r = p.fraction()?;
    p.finish()?;
    Ok(Rat::from_rational(r).expect("non-negative"))
}

fn write_exponent(out: &mut String, e: &Rat) {
    if e.is_zero() {
        return;
    }
    out.push('X');
    if e.is_integer() {
        if !e.numer().is_one() {
            let _ = write!(out, "^{}", e.numer());
        }
    } else {
        let _ = write!(out, "^({}/{})", e.numer(), e.denom());
    }
}

/// Descending-exponent rendering; `parse_poly(format_poly(f)) == f`.
pub fn format_poly(f: &PuiseuxPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in f.terms().iter().rev().enumerate() {
        let neg = c.is_negative();
        out.push_str(match (i == 0, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        let abs = c.abs();
        if e.is_zero() {
            out.push_str(&rational_to_string(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&rational_to_string(&abs));
                out.push('*');
            }
            write_exponent(&mut out, e);
        }
    }
    out
}

pub fn format_monoid(s: &PuiseuxMonoid) -> String {
    let gens: Vec<String> = s.generators().iter().map(|g| g.to_string()).collect();
    format!("<{}>", gens.join(", "))
}
