//! Expression grammar:
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := coef ['*'] monomial | coef | monomial
//! coef   := integer ['/' integer]
//! monomial := factor ('*' factor)*
//! factor := name ['^' integer]
//! ```
//!
//! Whitespace is ignored. Positions in errors are character offsets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExponentVector, GermSeries, Polynomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Token::Plus,
            '-' | '\u{2212}' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Token::Number(digits.parse().expect("ascii digits"))));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Token::Name(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut poly = Polynomial::zero(self.vars.to_vec());
        if self.peek().is_none() {
            return self.syntax("empty expression");
        }
        let mut first = true;
        while self.peek().is_some() {
            let negative = match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return self.syntax("expected `+` or `-` between terms"),
            };
            first = false;
            let (exp, mut coef) = self.term()?;
            if negative {
                coef = -coef;
            }
            poly.add_term(exp, coef);
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(ExponentVector, BigRational)> {
        let mut coef = BigRational::one();
        let mut exps = vec![0u32; self.vars.len()];
        let mut has_coef = false;
        if let Some(Token::Number(_)) = self.peek() {
            coef = self.coefficient()?;
            has_coef = true;
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    if !matches!(self.peek(), Some(Token::Name(_))) {
                        return self.syntax("expected a variable after `*`");
                    }
                }
                Some(Token::Name(_)) => {}
                _ => return Ok((ExponentVector::new(exps), coef)),
            }
        }
        loop {
            match self.peek() {
                Some(Token::Name(_)) => self.factor(&mut exps)?,
                _ if has_coef => return self.syntax("expected a variable"),
                _ => return self.syntax("expected a coefficient or variable"),
            }
            if let Some(Token::Star) = self.peek() {
                self.pos += 1;
                if !matches!(self.peek(), Some(Token::Name(_))) {
                    return self.syntax("expected a variable after `*`");
                }
            } else {
                break;
            }
        }
        Ok((ExponentVector::new(exps), coef))
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        let Some(Token::Number(numer)) = self.next() else {
            unreachable!("caller checked for a number");
        };
        if let Some(Token::Slash) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            match self.next() {
                Some(Token::Number(denom)) if !denom.is_zero() => {
                    Ok(BigRational::new(numer, denom))
                }
                Some(Token::Number(_)) => Err(Error::Syntax {
                    position: at,
                    message: "zero denominator".into(),
                }),
                _ => Err(Error::Syntax {
                    position: at,
                    message: "expected a denominator".into(),
                }),
            }
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let at = self.offset();
        let Some(Token::Name(name)) = self.next() else {
            unreachable!("caller checked for a name");
        };
        let Some(index) = self.vars.iter().position(|v| *v == name) else {
            return Err(Error::UnknownVariable { name, position: at });
        };
        let mut power = 1u32;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            match self.next() {
                Some(Token::Number(k)) => {
                    power = u32::try_from(&k).map_err(|_| Error::Syntax {
                        position: at,
                        message: "exponent too large".into(),
                    })?;
                    if power == 0 {
                        return Err(Error::Syntax {
                            position: at,
                            message: "exponent must be positive".into(),
                        });
                    }
                }
                Some(Token::Minus) => return Err(Error::NegativeExponent { position: at }),
                _ => {
                    return Err(Error::Syntax {
                        position: at,
                        message: "expected an exponent".into(),
                    })
                }
            }
        }
        exps[index] = exps[index].checked_add(power).ok_or_else(|| Error::Syntax {
            position: at,
            message: "exponent too large".into(),
        })?;
        Ok(())
    }
}

/// Parses and collects a polynomial (constant terms allowed).
pub fn parse_polynomial(text: &str, var_names: &[String]) -> Result<Polynomial> {
    for (i, v) in var_names.iter().enumerate() {
        if var_names[..i].contains(v) {
            return Err(Error::DuplicateVariable(v.clone()));
        }
    }
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
        vars: var_names,
    };
    parser.polynomial()
}

/// Parses a germ; the first variable name denotes the deformation parameter.
pub fn parse_germ(text: &str, var_names: &[String]) -> Result<GermSeries> {
    GermSeries::new(parse_polynomial(text, var_names)?)
}
