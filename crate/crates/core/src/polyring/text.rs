//! Canonical text form `c_k*x^k + ... + c_0`, rationals written `p/q`.
//!
//! The parser is a little more forgiving than the printer: it accepts any
//! arithmetic expression in `x` and `t` built from integers, `+ - * / ^` and
//! parentheses, with `/` restricted to nonzero constant divisors.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::bivariate::BPoly;
use super::ring::Rat;
use super::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn monomial_body(abs_coeff: &Rat, vars: &[(&str, usize)]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let is_one = abs_coeff.is_one();
    let has_vars = vars.iter().any(|(_, e)| *e > 0);
    if !is_one || !has_vars {
        parts.push(abs_coeff.to_string());
    }
    for (name, e) in vars {
        match e {
            0 => {}
            1 => parts.push((*name).to_string()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

fn join_terms(terms: &[(bool, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, body)) in terms.iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

fn upoly_terms(f: &UPoly, var: &str) -> Vec<(bool, String)> {
    f.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !Zero::is_zero(*c))
        .map(|(k, c)| (c.is_negative(), monomial_body(&c.abs(), &[(var, k)])))
        .collect()
}

/// `x^2 - x + 1/2` style rendering of a rational polynomial in `var`.
pub fn format_upoly(f: &UPoly, var: &str) -> String {
    join_terms(&upoly_terms(f, var))
}

/// Renders `P(t, x)` grouped by powers of `x`, e.g. `x^2 + (t + 1)*x - t`.
pub fn format_bpoly(p: &BPoly) -> String {
    let mut terms = Vec::new();
    for (k, coeff) in p.coeffs().iter().enumerate().rev() {
        let nonzero: Vec<(usize, &Rat)> = coeff
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .collect();
        match nonzero.len() {
            0 => {}
            1 => {
                let (j, c) = nonzero[0];
                terms.push((c.is_negative(), monomial_body(&c.abs(), &[("t", j), ("x", k)])));
            }
            _ if k == 0 => terms.extend(upoly_terms(coeff, "t")),
            _ => {
                let xpart = if k == 1 { "x".to_string() } else { format!("x^{k}") };
                terms.push((false, format!("({})*{xpart}", format_upoly(coeff, "t"))));
            }
        }
    }
    join_terms(&terms)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = s[start..i].parse().expect("digits");
            out.push((start, Tok::Num(n)));
        } else if c == 'x' || c == 't' {
            out.push((i, Tok::Var(c)));
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ParseError {
                pos: i,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<BPoly, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Op('-')) => {
                negate = true;
                self.at += 1;
            }
            Some(Tok::Op('+')) => self.at += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.at += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.at += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Op('/')) => {
                    self.at += 1;
                    let d = self.factor()?;
                    let c = match (d.degree(), d.coeffs().first()) {
                        (Some(0), Some(c0)) if c0.degree() == Some(0) => c0.coeff(0),
                        _ => return self.err("division only by nonzero constants"),
                    };
                    acc = acc.map(|coeff| coeff.scale(&c.recip()));
                }
                // juxtaposition, as in `2x` or `3(x+1)`
                Some(Tok::Num(_) | Tok::Var(_) | Tok::Op('(')) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<BPoly, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.at += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.at += 1;
                    let e: u32 = match n.try_into() {
                        Ok(e) if e <= 4096 => e,
                        _ => return self.err("exponent too large"),
                    };
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BPoly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(BPoly::constant(UPoly::constant(Rat::from_integer(n))))
            }
            Some(Tok::Var('x')) => {
                self.at += 1;
                Ok(BPoly::x())
            }
            Some(Tok::Var(_)) => {
                self.at += 1;
                Ok(BPoly::t())
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(_) => self.err("expected a number, variable or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial in `x` and `t`.
pub fn parse_bpoly(s: &str) -> Result<BPoly, ParseError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(ParseError {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        len: s.len(),
    };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a polynomial in `x` alone.
pub fn parse_upoly(s: &str) -> Result<UPoly, ParseError> {
    let p = parse_bpoly(s)?;
    if p.t_degree() > 0 {
        return Err(ParseError {
            pos: 0,
            msg: "unexpected variable t".into(),
        });
    }
    Ok(p.map(|c| c.coeff(0)))
}
