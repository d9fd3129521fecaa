//! Subgroup literals: `I(alpha=6)`, `II(gamma=3/2,n=2)`, `III(alpha=1/2,beta=1/3,n=2)`,
//! `IV(n=1)` and `gen[(1/2,0),(1/3,0)]`.

use std::fmt;

use chabauty_core::subgroup::{canonicalize_params, RawSubgroup};
use chabauty_core::{classify_from_generators, ClosedSubgroup, Error, PointRZ, Rational};
use num_bigint::BigInt;

/// Syntax error with a 1-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

/// A literal either fails to parse or names parameters the library rejects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiteralError {
    Syntax(ParseError),
    Domain(Error),
}

impl From<Error> for LiteralError {
    fn from(e: Error) -> Self {
        LiteralError::Domain(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Punct(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Punct(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
}

fn tokenize(src: &str, line: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), column));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), column));
        } else if "()[],=/+-".contains(c) {
            out.push((Tok::Punct(c), column));
            i += 1;
        } else {
            return Err(ParseError {
                line,
                column,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn error<T>(&self, message: String) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line,
            column: self.column(),
            message,
        })
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn punct(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Punct(c) {
            self.next();
            Ok(())
        } else {
            self.error(format!("expected '{c}', found {}", self.peek()))
        }
    }

    fn keyword(&mut self, name: &str) -> Result<(), ParseError> {
        if *self.peek() == Tok::Ident(name.into()) {
            self.next();
            Ok(())
        } else {
            self.error(format!("expected {name:?}, found {}", self.peek()))
        }
    }

    fn field(&mut self, name: &str) -> Result<(), ParseError> {
        self.keyword(name)?;
        self.punct('=')
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let negative = match self.peek() {
            Tok::Punct('-') => {
                self.next();
                true
            }
            Tok::Punct('+') => {
                self.next();
                false
            }
            _ => false,
        };
        match self.next() {
            Tok::Int(n) if negative => Ok(-n),
            Tok::Int(n) => Ok(n),
            t => {
                self.pos -= usize::from(t != Tok::End);
                self.error(format!("expected an integer, found {t}"))
            }
        }
    }

    fn small_integer(&mut self) -> Result<i64, ParseError> {
        let column = self.column();
        let n = self.integer()?;
        i64::try_from(&n).map_err(|_| ParseError {
            line: self.line,
            column,
            message: format!("integer {n} out of range"),
        })
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.integer()?;
        if *self.peek() != Tok::Punct('/') {
            return Ok(Rational::from_integer(num));
        }
        self.next();
        let column = self.column();
        match self.next() {
            Tok::Int(d) if d == BigInt::from(0) => Err(ParseError {
                line: self.line,
                column,
                message: "zero denominator".into(),
            }),
            Tok::Int(d) => Ok(Rational::new(num, d)),
            t => {
                self.pos -= usize::from(t != Tok::End);
                self.error(format!("expected a denominator, found {t}"))
            }
        }
    }

    fn alpha(&mut self, allow_inf: bool) -> Result<Option<Rational>, ParseError> {
        if allow_inf && *self.peek() == Tok::Ident("inf".into()) {
            self.next();
            return Ok(None);
        }
        self.rational().map(Some)
    }

    fn point(&mut self) -> Result<PointRZ, ParseError> {
        self.punct('(')?;
        let x = self.rational()?;
        self.punct(',')?;
        let level = self.small_integer()?;
        self.punct(')')?;
        Ok(PointRZ::new(x, level))
    }

    fn literal(&mut self) -> Result<Result<ClosedSubgroup, Error>, ParseError> {
        let head = match self.peek() {
            Tok::Ident(s) => s.clone(),
            t => return self.error(format!("expected a subgroup literal, found {t}")),
        };
        self.next();
        if head == "gen" {
            self.punct('[')?;
            let mut gens = Vec::new();
            if *self.peek() != Tok::Punct(']') {
                gens.push(self.point()?);
                while *self.peek() == Tok::Punct(',') {
                    self.next();
                    gens.push(self.point()?);
                }
            }
            self.punct(']')?;
            return Ok(Ok(classify_from_generators(&gens)));
        }
        self.punct('(')?;
        let raw = match head.as_str() {
            "I" => {
                self.field("alpha")?;
                RawSubgroup::I {
                    alpha: self.alpha(true)?,
                }
            }
            "II" => {
                self.field("gamma")?;
                let gamma = self.rational()?;
                self.punct(',')?;
                self.field("n")?;
                RawSubgroup::II {
                    gamma,
                    n: self.small_integer()?,
                }
            }
            "III" => {
                self.field("alpha")?;
                let alpha = self.alpha(false)?;
                self.punct(',')?;
                self.field("beta")?;
                let beta = self.rational()?;
                self.punct(',')?;
                self.field("n")?;
                RawSubgroup::III {
                    alpha,
                    beta,
                    n: self.small_integer()?,
                }
            }
            "IV" => {
                self.field("n")?;
                RawSubgroup::IV {
                    n: self.small_integer()?,
                }
            }
            _ => {
                self.pos -= 2;
                return self.error(format!("unknown subgroup family {head:?}"));
            }
        };
        self.punct(')')?;
        Ok(canonicalize_params(raw))
    }
}

fn parse_on_line(src: &str, line: usize) -> Result<ClosedSubgroup, LiteralError> {
    let toks = tokenize(src, line).map_err(LiteralError::Syntax)?;
    let mut p = Parser { toks, pos: 0, line };
    let h = p.literal().map_err(LiteralError::Syntax)?;
    if *p.peek() != Tok::End {
        return Err(LiteralError::Syntax(ParseError {
            line,
            column: p.column(),
            message: format!("trailing input starting at {}", p.peek()),
        }));
    }
    Ok(h?)
}

/// Parses one literal and canonicalizes it. Positions are reported on line 1.
pub fn parse_literal(src: &str) -> Result<ClosedSubgroup, LiteralError> {
    parse_on_line(src, 1)
}

/// Parses a sequence file: one literal per line, `#` starts a comment, blank
/// lines are skipped.
pub fn parse_sequence(text: &str) -> Result<Vec<ClosedSubgroup>, LiteralError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        out.push(parse_on_line(body, i + 1)?);
    }
    Ok(out)
}

/// The literal printed for a canonical subgroup; parses back to the same value.
pub fn format_literal(h: &ClosedSubgroup) -> String {
    h.to_string()
}
