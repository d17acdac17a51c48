//! Text front end for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' integer)?
//! base   := integer | identifier | '(' expr ')' | '-' factor
//! ```
//!
//! Multiplication is always explicit, so `xt` is a single identifier. A
//! leading minus negates the whole factor that follows: `-x^2` is `-(x^2)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VariableId};

/// Limits that keep hostile input from exhausting time or memory.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    /// Largest exponent literal accepted after `^`.
    pub max_exponent: u32,
    /// Largest total degree an intermediate result may reach.
    pub max_degree: u64,
    /// Largest number of coefficient products a single `*` or `^` may perform.
    pub max_work: u128,
    /// Parenthesis and unary-minus nesting limit.
    pub max_depth: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            max_exponent: 1 << 16,
            max_degree: 1 << 20,
            max_work: 1 << 24,
            max_depth: 256,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let tok = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '0'..='9' => {
                let mut end = pos;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                Tok::Int(src[pos..end].parse().expect("digits"))
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = pos;
                while let Some(&(i, d)) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                Tok::Ident(src[pos..end].to_string())
            }
            _ => {
                chars.next();
                match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    other => {
                        return Err(Error::Syntax {
                            position: pos,
                            message: format!("unexpected character `{other}`"),
                        })
                    }
                }
            }
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Tok)],
    at: usize,
    end: usize,
    depth: usize,
    opts: ParseOptions,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, expected: &str) -> Error {
        let found = self
            .peek()
            .map_or_else(|| "end of input".to_string(), Tok::describe);
        Error::Syntax {
            position: self.position(),
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn too_large(&self, position: usize, what: &str) -> Error {
        Error::Syntax {
            position,
            message: format!("expression too large: {what}"),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            let negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => return Ok(acc),
            };
            self.at += 1;
            let rhs = self.term()?;
            acc.add_scaled_assign(&rhs, negate);
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            let pos = self.position();
            self.at += 1;
            let rhs = self.factor()?;
            self.check_product(&acc, &rhs, pos)?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.position();
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.at += 1;
                let e = u32::try_from(&n)
                    .ok()
                    .filter(|&e| e <= self.opts.max_exponent)
                    .ok_or_else(|| Error::ExponentTooLarge {
                        position: pos,
                        exponent: n.to_string(),
                        bound: self.opts.max_exponent,
                    })?;
                self.check_power(&base, e, pos)?;
                Ok(base.pow(e))
            }
            Some(Tok::Minus) => Err(Error::NegativeExponent { position: pos }),
            _ => Err(self.error("a nonnegative integer exponent")),
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        let pos = self.position();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Polynomial::constant(n))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                let var = if name == crate::poly::SERIES_VARIABLE {
                    VariableId::series()
                } else {
                    VariableId::new(&name).map_err(|_| Error::Syntax {
                        position: pos,
                        message: format!("invalid identifier `{name}`"),
                    })?
                };
                Ok(Polynomial::var(var))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                self.enter(pos)?;
                let inner = self.expr()?;
                self.depth -= 1;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("`)`"));
                }
                self.at += 1;
                Ok(inner)
            }
            Some(Tok::Minus) => {
                self.at += 1;
                self.enter(pos)?;
                let inner = self.factor()?;
                self.depth -= 1;
                Ok(inner.neg())
            }
            _ => Err(self.error("an integer, identifier, `(` or `-`")),
        }
    }

    fn enter(&mut self, pos: usize) -> Result<()> {
        self.depth += 1;
        if self.depth > self.opts.max_depth {
            return Err(Error::Syntax {
                position: pos,
                message: format!("nesting deeper than {}", self.opts.max_depth),
            });
        }
        Ok(())
    }

    fn check_product(&self, a: &Polynomial, b: &Polynomial, pos: usize) -> Result<()> {
        let degree = a.total_degree().unwrap_or(0) + b.total_degree().unwrap_or(0);
        if degree > self.opts.max_degree {
            return Err(self.too_large(pos, "degree bound exceeded"));
        }
        if (a.term_count() as u128) * (b.term_count() as u128) > self.opts.max_work {
            return Err(self.too_large(pos, "product too large"));
        }
        Ok(())
    }

    fn check_power(&self, base: &Polynomial, e: u32, pos: usize) -> Result<()> {
        let degree = base
            .total_degree()
            .unwrap_or(0)
            .saturating_mul(u64::from(e));
        if degree > self.opts.max_degree {
            return Err(self.too_large(pos, "degree bound exceeded"));
        }
        if base.term_count() <= 1 || e <= 1 {
            return Ok(());
        }
        // The last squaring multiplies two copies of base^(e/2).
        let half_degree = base.total_degree().unwrap_or(0) * u64::from(e.div_ceil(2));
        let half_terms = monomial_bound(half_degree, base.variables().len())
            .min(saturating_pow(base.term_count() as u128, e.div_ceil(2)));
        if half_terms.saturating_mul(half_terms) > self.opts.max_work {
            return Err(self.too_large(pos, "power too large"));
        }
        Ok(())
    }
}

/// Number of monomials of degree ≤ `degree` in `vars` variables, saturating.
fn monomial_bound(degree: u64, vars: usize) -> u128 {
    // C(degree + vars, vars)
    let mut acc: u128 = 1;
    for i in 1..=vars as u128 {
        acc = acc.saturating_mul(u128::from(degree) + i) / i;
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

fn saturating_pow(base: u128, e: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.saturating_mul(base);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

/// Parses an expression that may mention the series variable `t`.
pub fn parse_poly(src: &str) -> Result<Polynomial> {
    parse_poly_with(src, ParseOptions::default())
}

pub fn parse_poly_with(src: &str, opts: ParseOptions) -> Result<Polynomial> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        tokens: &tokens,
        at: 0,
        end: src.len(),
        depth: 0,
        opts,
    };
    let p = parser.expr()?;
    if parser.at != tokens.len() {
        return Err(parser.error("an operator or end of input"));
    }
    Ok(p)
}

/// Parses an expression that must not mention `t`, e.g. a family parameter.
pub fn parse_coefficient(src: &str) -> Result<Polynomial> {
    let p = parse_poly(src)?;
    if p.mentions(&VariableId::series()) {
        return Err(Error::SeriesVariableInCoefficient(p.to_string()));
    }
    Ok(p)
}

/// Coefficients `A₀ … A_m` of the powers of `t`, trailing zeros trimmed.
pub fn split_in_t(p: &Polynomial) -> Vec<Polynomial> {
    p.coefficients_in(&VariableId::series())
}

/// `Σ A_j·tʲ`.
pub fn join_in_t(coeffs: &[Polynomial]) -> Polynomial {
    Polynomial::from_coefficients_in(&VariableId::series(), coeffs)
}

pub fn format_poly(p: &Polynomial) -> String {
    p.to_string()
}
