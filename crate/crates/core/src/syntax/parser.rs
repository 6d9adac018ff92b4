use std::fmt;

use thiserror::Error;

use super::lexer::{tokenize, Spanned, Tok};
use super::{Formula, Index};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: expected ", self.line, self.column)?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

/// Parses a single formula. `->` and `<->` associate to the right;
/// `~` and `box` bind tighter than `&`, which binds tighter than `|`.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let toks = tokenize(text, 1)?;
    let mut p = Parser::new(&toks);
    let f = p.formula()?;
    p.expect_eof()?;
    Ok(f)
}

pub(crate) struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(toks: &'a [Spanned]) -> Self {
        Parser { toks, pos: 0 }
    }

    pub(crate) fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].tok
    }

    pub(crate) fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn error(&self, expected: &[&str]) -> ParseError {
        let here = &self.toks[self.pos];
        ParseError {
            line: here.line,
            column: here.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: here.tok.describe(),
        }
    }

    pub(crate) fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&tok.describe()]))
        }
    }

    pub(crate) fn expect_eof(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["`->`", "`<->`", "`|`", "`&`", "end of input"]))
        }
    }

    pub(crate) fn name(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Ident(s) if super::is_valid_name(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => Err(self.error(&["NAME"])),
        }
    }

    pub(crate) fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        match self.peek() {
            Tok::Arrow => {
                self.bump();
                Ok(Formula::imp(lhs, self.formula()?))
            }
            Tok::Iff => {
                self.bump();
                Ok(Formula::iff(lhs, self.formula()?))
            }
            _ => Ok(lhs),
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            acc = Formula::or(acc, self.and()?);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::Ident(s) if s == "box" => {
                self.bump();
                Ok(Formula::boxed(self.unary()?))
            }
            _ => self.prim(),
        }
    }

    fn prim(&mut self) -> Result<Formula, ParseError> {
        const PRIM: [&str; 7] = ["`false`", "`true`", "NAME", "`T(`", "`T<k>(`", "`T?(`", "`(`"];
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::TUnknown => {
                self.bump();
                Ok(Formula::TruthAt(Index::Unknown, self.truth_argument()?))
            }
            Tok::Ident(word) => match word.as_str() {
                "false" => {
                    self.bump();
                    Ok(Formula::Falsum)
                }
                "true" => {
                    self.bump();
                    Ok(Formula::verum())
                }
                "T" if *self.peek2() == Tok::LParen => {
                    self.bump();
                    Ok(Formula::TruthOf(self.truth_argument()?))
                }
                w if is_indexed_truth(w) && *self.peek2() == Tok::LParen => {
                    let level: u32 = match w[1..].parse() {
                        Ok(k) if k >= 1 => k,
                        _ => return Err(self.error(&["a truth index of at least 1"])),
                    };
                    self.bump();
                    Ok(Formula::TruthAt(Index::Level(level), self.truth_argument()?))
                }
                _ if super::is_valid_name(&word) => {
                    self.bump();
                    Ok(Formula::Atom(word))
                }
                _ => Err(self.error(&PRIM)),
            },
            _ => Err(self.error(&PRIM)),
        }
    }

    fn truth_argument(&mut self) -> Result<String, ParseError> {
        self.expect(Tok::LParen)?;
        let n = self.name()?;
        self.expect(Tok::RParen)?;
        Ok(n)
    }
}

fn is_indexed_truth(w: &str) -> bool {
    w.len() > 1 && w.starts_with('T') && w[1..].bytes().all(|b| b.is_ascii_digit())
}
