use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ast::Expr;
use crate::oracle::Poly;

/// A parse failure at a byte offset of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Unexpected token; `expected` lists what would have been accepted.
    Syntax {
        expected: Vec<&'static str>,
        found: String,
    },
    /// A constructor argument outside its allowed range.
    Range(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => {
                write!(f, "syntax error at byte {}: expected ", self.offset)?;
                for (i, e) in expected.iter().enumerate() {
                    if i > 0 {
                        f.write_str(if i + 1 == expected.len() { " or " } else { ", " })?;
                    }
                    f.write_str(e)?;
                }
                write!(f, ", found {found}")
            }
            ParseErrorKind::Range(msg) => write!(f, "invalid argument at byte {}: {msg}", self.offset),
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Str(String),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => alloc::format!("identifier '{s}'"),
            Tok::Int(n) => alloc::format!("integer {n}"),
            Tok::Str(s) => alloc::format!("string \"{s}\""),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            b'"' => {
                i += 1;
                let mut s = String::new();
                loop {
                    let Some(ch) = src[i..].chars().next() else {
                        return Err(ParseError {
                            offset: i,
                            kind: ParseErrorKind::Syntax {
                                expected: vec!["'\"'"],
                                found: "end of input".into(),
                            },
                        });
                    };
                    i += ch.len_utf8();
                    match ch {
                        '"' => break,
                        '\\' => {
                            let Some(esc) = src[i..].chars().next() else {
                                continue;
                            };
                            i += esc.len_utf8();
                            s.push(esc);
                        }
                        _ => s.push(ch),
                    }
                }
                out.push((start, Tok::Str(s)));
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().unwrap();
                return Err(ParseError {
                    offset: i,
                    kind: ParseErrorKind::Syntax {
                        expected: vec!["expression"],
                        found: alloc::format!("character '{ch}'"),
                    },
                });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

const FUNCS: [&str; 6] = ["join", "suspend", "pow", "quad", "pham", "atom"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

/// A monomial under construction: coefficient and exponents by name.
struct Term {
    coeff: BigRational,
    exps: BTreeMap<String, u32>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            kind: ParseErrorKind::Syntax {
                expected: expected.to_vec(),
                found: self.peek().describe(),
            },
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn int(&mut self) -> Result<(usize, BigInt), ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                let at = self.offset();
                self.bump();
                Ok((at, n))
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    /// Integer argument with a lower bound.
    fn int_arg(&mut self, min: i64, what: &str) -> Result<i64, ParseError> {
        let (at, n) = self.int()?;
        let msg = match n.to_i64() {
            Some(v) if v >= min => return Ok(v),
            Some(_) => alloc::format!("{what} must be at least {min}, got {n}"),
            None => alloc::format!("{what} {n} is out of range"),
        };
        Err(ParseError {
            offset: at,
            kind: ParseErrorKind::Range(msg),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        if let (Tok::Ident(name), Tok::LParen) = (self.peek(), self.peek_at(1)) {
            if FUNCS.contains(&name.as_str()) {
                return self.func();
            }
        }
        self.poly().map(Expr::PolyLiteral)
    }

    fn func(&mut self) -> Result<Expr, ParseError> {
        let (_, Tok::Ident(name)) = self.bump() else {
            unreachable!()
        };
        self.bump(); // '('
        let e = match name.as_str() {
            "join" => {
                let a = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.expr()?;
                Expr::join(a, b)
            }
            "suspend" => {
                let e = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let m = self.int_arg(1, "suspension order")?;
                Expr::suspend(e, m)
            }
            "pow" => Expr::Pow(self.int_arg(2, "pow exponent")?),
            "quad" => Expr::Quad(self.int_arg(1, "quad variable count")?),
            "pham" => {
                let mut list = vec![self.int_arg(2, "pham exponent")?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    list.push(self.int_arg(2, "pham exponent")?);
                }
                Expr::Pham(list)
            }
            "atom" => match self.peek().clone() {
                Tok::Str(s) => {
                    self.bump();
                    Expr::AtomRef(s)
                }
                _ => return Err(self.error(&["quoted atom name"])),
            },
            _ => unreachable!(),
        };
        if *self.peek() != Tok::RParen {
            let expected: &[&'static str] = match name.as_str() {
                "pham" => &["','", "')'"],
                _ => &["')'"],
            };
            return Err(self.error(expected));
        }
        self.bump();
        Ok(e)
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if negate {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }

        let mut names: Vec<String> = terms
            .iter()
            .flat_map(|t| t.exps.keys().cloned())
            .collect();
        names.sort();
        names.dedup();
        let poly = Poly::from_terms(
            names.clone(),
            terms.into_iter().map(|t| {
                let m = names.iter().map(|n| t.exps.get(n).copied().unwrap_or(0)).collect();
                (m, t.coeff)
            }),
        );
        Ok(poly.prune())
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut t = Term {
            coeff: BigRational::from_integer(1.into()),
            exps: BTreeMap::new(),
        };
        self.factor(&mut t)?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    self.factor(&mut t)?;
                }
                // "3x" juxtaposition
                Tok::Ident(_) => self.factor(&mut t)?,
                _ => return Ok(t),
            }
        }
    }

    fn factor(&mut self, t: &mut Term) -> Result<(), ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let mut c = BigRational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let (at, d) = self.int()?;
                    if d.is_zero() {
                        return Err(ParseError {
                            offset: at,
                            kind: ParseErrorKind::Range("zero denominator".into()),
                        });
                    }
                    c /= BigRational::from_integer(d);
                }
                t.coeff *= c;
                Ok(())
            }
            Tok::Ident(name) => {
                if FUNCS.contains(&name.as_str()) && *self.peek_at(1) == Tok::LParen {
                    return Err(self.error(&["monomial"]));
                }
                self.bump();
                let mut e = 1u32;
                if *self.peek() == Tok::Caret {
                    self.bump();
                    let (at, n) = self.int()?;
                    e = n.to_u32().ok_or_else(|| ParseError {
                        offset: at,
                        kind: ParseErrorKind::Range(alloc::format!("exponent {n} is too large")),
                    })?;
                }
                let slot = t.exps.entry(name).or_insert(0);
                *slot = slot.checked_add(e).ok_or_else(|| ParseError {
                    offset: self.offset(),
                    kind: ParseErrorKind::Range("exponent overflow".into()),
                })?;
                Ok(())
            }
            _ => Err(self.error(&["integer", "identifier"])),
        }
    }
}

/// Parses a full expression or polynomial.
pub fn parse(source: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(source)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["end of input"]));
    }
    Ok(e)
}

/// Parses input that must be a polynomial (no atom constructors).
pub fn parse_poly(source: &str) -> Result<Poly, ParseError> {
    let mut p = Parser {
        toks: lex(source)?,
        pos: 0,
    };
    let poly = p.poly()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "'-'", "'*'", "end of input"]));
    }
    Ok(poly)
}
