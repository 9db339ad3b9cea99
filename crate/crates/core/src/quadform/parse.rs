//! Parser for polynomial text such as `2x^2 + 3xy - 1/2 y + 7`.
//!
//! Grammar (whitespace is skipped between tokens):
//!
//! ```text
//! form   := sign? term (sign term)*
//! term   := factor ('*'? factor)*
//! factor := integer ('/' integer)? | ('x' | 'y') ('^' integer)?
//! ```

use num_bigint::BigInt;

use super::QuadraticForm;
use crate::error::{Error, Result};
use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        let tok = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            'x' | 'y' => Tok::Var(ch),
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            other => {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.toks.get(self.at).map_or(self.text.len(), |(p, _)| *p)
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.position(), message: message.to_string() }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(_)) => match self.bump() {
                Some(Tok::Int(n)) => Ok(n),
                _ => unreachable!(),
            },
            _ => Err(self.error("expected an integer")),
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Var(_)))
    }

    /// Returns the coefficient and the exponents of x and y.
    fn term(&mut self) -> Result<(Rational, u32, u32)> {
        let start = self.position();
        let mut coef = Rational::one();
        let (mut ex, mut ey) = (0u32, 0u32);
        if !self.starts_factor() {
            return Err(self.error("expected a number or a variable"));
        }
        loop {
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let mut value = Rational::from(n);
                    if self.peek() == Some(&Tok::Slash) {
                        self.bump();
                        let at = self.position();
                        let d = self.integer()?;
                        value = value
                            .checked_div(&Rational::from(d))
                            .map_err(|_| Error::Parse { position: at, message: "zero denominator".into() })?;
                    }
                    coef = coef * value;
                }
                Some(Tok::Var(v)) => {
                    let mut power = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.bump();
                        let at = self.position();
                        let n = self.integer()?;
                        power = u32::try_from(n).map_err(|_| Error::Parse {
                            position: at,
                            message: "exponent too large".into(),
                        })?;
                    }
                    let slot = if v == 'x' { &mut ex } else { &mut ey };
                    *slot = slot.saturating_add(power);
                }
                _ => unreachable!("starts_factor checked"),
            }
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    if !self.starts_factor() {
                        return Err(self.error("expected a factor after `*`"));
                    }
                }
                Some(Tok::Int(_)) | Some(Tok::Var(_)) => {}
                _ => break,
            }
        }
        let degree = ex.saturating_add(ey);
        if degree > 2 {
            let end = self.position();
            return Err(Error::Degree { term: self.text[start..end].trim().to_string(), degree });
        }
        Ok((coef, ex, ey))
    }
}

pub(super) fn parse_form(text: &str) -> Result<QuadraticForm<Rational>> {
    let mut p = Parser { text, toks: lex(text)?, at: 0 };
    if p.toks.is_empty() {
        return Err(p.error("empty form"));
    }
    // a, b, c, d, e, f
    let mut coef: [Rational; 6] = Default::default();
    let mut negate = match p.peek() {
        Some(Tok::Minus) => {
            p.bump();
            true
        }
        Some(Tok::Plus) => {
            p.bump();
            false
        }
        _ => false,
    };
    loop {
        let (value, ex, ey) = p.term()?;
        let slot = match (ex, ey) {
            (2, 0) => 0,
            (1, 1) => 1,
            (0, 2) => 2,
            (1, 0) => 3,
            (0, 1) => 4,
            (0, 0) => 5,
            _ => unreachable!("degree checked"),
        };
        let value = if negate { -value } else { value };
        coef[slot] = &coef[slot] + &value;
        match p.bump() {
            None => break,
            Some(Tok::Plus) => negate = false,
            Some(Tok::Minus) => negate = true,
            Some(_) => {
                p.at -= 1;
                return Err(p.error("expected `+` or `-`"));
            }
        }
    }
    let [a, b, c, d, e, f] = coef;
    Ok(QuadraticForm::new(a, b, c, d, e, f))
}
