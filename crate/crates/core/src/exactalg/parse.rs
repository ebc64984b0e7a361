//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' INT)?
//! atom  := INT | IDENT | 'u' | 'sqrt' '(' expr ')' | '(' expr ')'
//! ```
//! Division and `sqrt` only accept operands that involve no declared variable.

use std::sync::Arc;

use num_bigint::BigInt;

use super::mpoly::{var_list, MPoly};
use super::rat::Rat;
use super::scalar::Scalar;
use super::AlgError;

pub const RESERVED: [&str; 2] = ["u", "sqrt"];

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, AlgError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Int(s.parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Ident(s)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(AlgError::Syntax { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    vars: &'a Arc<[String]>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgError> {
        Err(AlgError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn constant(&self, s: Scalar) -> MPoly {
        MPoly::constant(self.vars.clone(), s)
    }

    fn expr(&mut self) -> Result<MPoly, AlgError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, AlgError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.checked_mul(&self.unary()?)?;
            } else if self.peek() == Some(&Tok::Sym('/')) {
                self.i += 1;
                let pos = self.pos();
                let d = self.unary()?;
                let c = d.as_constant().ok_or(AlgError::NonConstantDivisor)?;
                if c.is_zero() {
                    return Err(AlgError::Syntax { pos, msg: "division by zero".into() });
                }
                acc = acc.checked_scale(&c.inv()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly, AlgError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MPoly, AlgError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.i += 1;
                    let e: u32 = match u32::try_from(&n) {
                        Ok(e) if e <= 10_000 => e,
                        _ => return self.err("exponent too large"),
                    };
                    return base.checked_pow(e);
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly, AlgError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.i += 1;
                Ok(self.constant(Scalar::Rat(Rat::from_integer(n))))
            }
            Some(Tok::Sym('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                if name == "u" {
                    return Ok(self.constant(Scalar::u()));
                }
                if name == "sqrt" {
                    if !self.eat('(') {
                        return self.err("expected `(` after sqrt");
                    }
                    let e = self.expr()?;
                    if !self.eat(')') {
                        return self.err("expected `)`");
                    }
                    let c = e.as_constant().ok_or(AlgError::Syntax { pos, msg: "sqrt of an expression with variables".into() })?;
                    return Ok(self.constant(c.sqrt()?));
                }
                if self.vars.iter().any(|v| v == &name) {
                    MPoly::var(self.vars.clone(), &name)
                } else {
                    Err(AlgError::UndeclaredVariable { name, pos })
                }
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial in `vars` with coefficients in the scalar tower.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<MPoly, AlgError> {
    parse_poly_in(text, &var_list(vars))
}

pub fn parse_poly_in(text: &str, vars: &Arc<[String]>) -> Result<MPoly, AlgError> {
    for v in vars.iter() {
        if RESERVED.contains(&v.as_str()) {
            return Err(AlgError::ReservedName(v.clone()));
        }
    }
    let toks = lex(text)?;
    let mut p = Parser { toks, i: 0, end: text.len(), vars };
    let e = p.expr()?;
    if p.i < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses a constant expression (no variables other than `u`).
pub fn parse_scalar(text: &str) -> Result<Scalar, AlgError> {
    Ok(parse_poly(text, &[])?.as_constant().expect("no variables"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P5: [&str; 5] = ["x", "y", "z", "t", "w"];

    #[test]
    fn basic_forms() {
        let f = parse_poly("x*w - y*t", &P5).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert!(parse_poly("0", &P5).unwrap().is_zero());
        let q1 = parse_poly("(u-1)*a^2 - u*b^2", &["a", "b"]).unwrap();
        assert_eq!(q1.num_terms(), 2);
        assert_eq!(parse_poly("-x^2", &["x"]).unwrap().to_string(), "-x^2");
        assert_eq!(parse_scalar("3/4").unwrap(), Scalar::ratio(3, 4));
        assert_eq!(parse_scalar("-2^2").unwrap(), Scalar::from(-4));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("x + * y", &["x", "y"]) {
            Err(AlgError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_poly("x + q", &["x"]) {
            Err(AlgError::UndeclaredVariable { name, pos }) => {
                assert_eq!(name, "q");
                assert_eq!(pos, 4);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly("(x", &["x"]), Err(AlgError::Syntax { .. })));
        assert!(matches!(parse_poly("x/y", &["x", "y"]), Err(AlgError::NonConstantDivisor)));
        assert!(matches!(parse_poly("x", &["u"]), Err(AlgError::ReservedName(_))));
        assert!(matches!(parse_poly("x ; y", &["x", "y"]), Err(AlgError::Syntax { pos: 2, .. })));
    }

    #[test]
    fn radicals_and_fractions() {
        let s = parse_scalar("sqrt(u)*sqrt(u)").unwrap();
        assert_eq!(s, Scalar::u());
        let r = parse_scalar("(u^2 - 1)/(u - 1)").unwrap();
        assert_eq!(r, parse_scalar("u + 1").unwrap());
        let back = parse_scalar(&parse_scalar("(2 + sqrt(3))/(u+1)").unwrap().to_string()).unwrap();
        assert_eq!(back, parse_scalar("(2 + sqrt(3))/(u+1)").unwrap());
    }
}
