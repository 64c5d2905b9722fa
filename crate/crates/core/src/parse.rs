//! Parser for the textual forms of `Q(q)` scalars and algebra elements.
//!
//! Accepts the output of the `Display` impls (`q + q^-1`, `(q^2 - 1)/q`,
//! `x11 x22 - q x12 x21`) and, more generally, any expression built from
//! rational numbers, `q`, generators `xIJ` / `xI_J`, parentheses, `+`, `-`,
//! `*`, `/` (by scalars only), `^` and juxtaposition. Multiplication is the
//! algebra product, so factor order matters for generators.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::qcoeff::RatFunc;
use crate::qmatrix::{QMElement, Shape};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Q,
    Var(usize, usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            'q' => {
                out.push(Tok::Q);
                i += 1
            }
            'x' => {
                i += 1;
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '_') {
                    i += 1;
                }
                let body: String = chars[start..i].iter().collect();
                let (a, b) = if let Some((a, b)) = body.split_once('_') {
                    (a.to_string(), b.to_string())
                } else if body.len() == 2 {
                    (body[..1].to_string(), body[1..].to_string())
                } else {
                    return Err(Error::Parse(format!("ambiguous generator name x{body}")));
                };
                let a = a.parse().map_err(|_| Error::Parse(format!("bad generator x{body}")))?;
                let b = b.parse().map_err(|_| Error::Parse(format!("bad generator x{body}")))?;
                out.push(Tok::Var(a, b));
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Num(s.parse().unwrap()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    shape: Shape,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<QMElement> {
        let mut acc = QMElement::zero(self.shape);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Q | Tok::Var(..) | Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<QMElement> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    let s = f
                        .as_scalar()
                        .ok_or_else(|| Error::Parse("division by a non-scalar".into()))?;
                    acc = acc.scale(&s.inv()?);
                }
                _ if self.starts_factor() => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<QMElement> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let e: i64 = match self.bump() {
            Some(Tok::Num(n)) => n
                .try_into()
                .map_err(|_| Error::Parse("exponent too large".into()))?,
            other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        };
        if neg {
            let s = base
                .as_scalar()
                .ok_or_else(|| Error::Parse("negative power of a non-scalar".into()))?;
            return Ok(QMElement::constant(self.shape, s.pow(-e)?));
        }
        Ok(base.pow(e as u32))
    }

    fn atom(&mut self) -> Result<QMElement> {
        match self.bump() {
            Some(Tok::Num(n)) => Ok(QMElement::constant(
                self.shape,
                RatFunc::from_rational(BigRational::from_integer(n)),
            )),
            Some(Tok::Q) => Ok(QMElement::constant(self.shape, RatFunc::q_power(1))),
            Some(Tok::Var(i, j)) => QMElement::var(self.shape, i, j),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an element of `R_q[M_{m,n}]`.
pub fn parse_element(shape: Shape, s: &str) -> Result<QMElement> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks: &toks, pos: 0, shape };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

/// Parses an element of `Q(q)`.
pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let shape = Shape { m: 1, n: 1 };
    let toks = tokenize(s)?;
    if toks.iter().any(|t| matches!(t, Tok::Var(..))) {
        return Err(Error::Parse("generators are not allowed in a scalar".into()));
    }
    parse_element(shape, s)?
        .as_scalar()
        .ok_or_else(|| Error::Parse("not a scalar".into()))
}

impl std::str::FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_ratfunc(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::{quantum_minor, MinorVariant};

    #[test]
    fn scalars() {
        let a = parse_ratfunc("q + q^-1").unwrap();
        assert_eq!(a, RatFunc::q_power(1).add(&RatFunc::q_power(-1)));
        let b = parse_ratfunc("q/(q^2 - 1)").unwrap();
        assert_eq!(b, RatFunc::q_power(1).sub(&RatFunc::q_power(-1)).inv().unwrap());
        assert_eq!(parse_ratfunc("(q^2-1)/q").unwrap(), RatFunc::q_power(1).sub(&RatFunc::q_power(-1)));
        assert_eq!(parse_ratfunc("3/2 q").unwrap().to_string(), "3/2 q");
        assert!(parse_ratfunc("x11").is_err());
        assert!(parse_ratfunc("1/0").is_err());
    }

    #[test]
    fn elements() {
        let s = Shape::new(2, 2).unwrap();
        let det = quantum_minor(s, &[1, 2], &[1, 2], MinorVariant::First).unwrap();
        assert_eq!(parse_element(s, "x11 x22 - q x12 x21").unwrap(), det);
        assert_eq!(parse_element(s, "x22*x11 - q^-1 x12 x21").unwrap(), det);
        assert_eq!(parse_element(s, &det.to_string()).unwrap(), det);
        let weird = parse_element(s, "x22 x11").unwrap();
        assert_eq!(parse_element(s, &weird.to_string()).unwrap(), weird);
        assert!(parse_element(s, "x31").is_err());
        assert!(parse_element(s, "x11 / x12").is_err());
        assert!(parse_element(s, "").is_err());
        assert!(parse_element(s, "(x11").is_err());
    }
}
