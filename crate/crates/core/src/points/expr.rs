//! Integer polynomial expressions such as `y^2*z - x^3 - x*z^2 - z^3`.
//!
//! Grammar: integers, variable names, binary `+ - *`, unary `-`, `^` with a
//! nonnegative integer exponent, and parentheses.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Sparse multivariate polynomial with integer coefficients, keyed by
/// exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPoly {
    fn constant(nvars: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        IntPoly { nvars, terms }
    }

    fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        IntPoly { nvars, terms: BTreeMap::from([(e, BigInt::from(1))]) }
    }

    pub fn num_vars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common total degree of all terms, or `None` if they differ. The zero
    /// polynomial counts as homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    fn add(mut self, other: &IntPoly, sign: i32) -> Self {
        for (e, c) in &other.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
            if sign < 0 {
                *entry -= c;
            } else {
                *entry += c;
            }
        }
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    fn mul(&self, other: &IntPoly) -> Self {
        let mut out = IntPoly { nvars: self.nvars, terms: BTreeMap::new() };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *out.terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    fn pow(&self, k: u32) -> Self {
        let mut out = IntPoly::constant(self.nvars, BigInt::from(1));
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Terms with coefficients reduced into `0..p`, zero terms dropped.
    pub fn reduce_mod(&self, p: u64) -> Vec<(Vec<u32>, u64)> {
        let p = BigInt::from(p);
        self.terms
            .iter()
            .filter_map(|(e, c)| {
                let mut r = c % &p;
                if r.is_negative() {
                    r += &p;
                }
                let r = r.to_u64().expect("reduced coefficient fits");
                (r != 0).then(|| (e.clone(), r))
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Int(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Token::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a [String],
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?, 1);
            } else if self.eat('-') {
                acc = acc.add(&self.term()?, -1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<IntPoly> {
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(IntPoly::constant(self.vars.len(), BigInt::zero()).add(&inner, -1));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<IntPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Token::Int(k)) => {
                self.pos += 1;
                let k = k.to_u32().filter(|&k| k <= 64).ok_or_else(|| self.error("exponent out of range"))?;
                Ok(base.pow(k))
            }
            _ => Err(self.error("expected integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<IntPoly> {
        let n = self.vars.len();
        match self.peek().cloned() {
            Some(Token::Int(c)) => {
                self.pos += 1;
                Ok(IntPoly::constant(n, c))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?} in {:?}", self.src)))?;
                Ok(IntPoly::var(n, i))
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

/// Parses `src` as a polynomial in the named variables.
pub fn parse_polynomial(src: &str, vars: &[String]) -> Result<IntPoly> {
    let mut parser = Parser { tokens: tokenize(src)?, pos: 0, vars, src };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn term(p: &IntPoly, e: &[u32]) -> i64 {
        p.terms.get(e).map_or(0, |c| c.to_i64().unwrap())
    }

    #[test]
    fn parses_the_elliptic_curve() {
        let v = vars(&["x", "y", "z"]);
        let p = parse_polynomial("y^2*z - x^3 - x*z^2 - z^3", &v).unwrap();
        assert_eq!(p.terms.len(), 4);
        assert_eq!(term(&p, &[0, 2, 1]), 1);
        assert_eq!(term(&p, &[3, 0, 0]), -1);
        assert_eq!(term(&p, &[1, 0, 2]), -1);
        assert_eq!(term(&p, &[0, 0, 3]), -1);
        assert_eq!(p.homogeneous_degree(), Some(3));
    }

    #[test]
    fn expands_products_and_powers() {
        let v = vars(&["a", "b"]);
        let p = parse_polynomial("(a + b)^2 - 2*a*b", &v).unwrap();
        assert_eq!(p, parse_polynomial("a^2 + b^2", &v).unwrap());
        let p = parse_polynomial("-(a - b)*3", &v).unwrap();
        assert_eq!(term(&p, &[1, 0]), -3);
        assert_eq!(term(&p, &[0, 1]), 3);
        assert!(parse_polynomial("a - a", &v).unwrap().is_zero());
    }

    #[test]
    fn homogeneity() {
        let v = vars(&["x", "y"]);
        assert_eq!(parse_polynomial("x^2 + y", &v).unwrap().homogeneous_degree(), None);
        assert_eq!(parse_polynomial("x", &v).unwrap().homogeneous_degree(), Some(1));
    }

    #[test]
    fn reduction_mod_p() {
        let v = vars(&["x", "y"]);
        let p = parse_polynomial("5*x - 7*y + 10*x*y", &v).unwrap();
        assert_eq!(p.reduce_mod(5), vec![(vec![0, 1], 3)]);
    }

    #[test]
    fn errors() {
        let v = vars(&["x"]);
        for bad in ["x +", "w", "x ^ y", "(x", "x $ 1", "x x"] {
            assert!(matches!(parse_polynomial(bad, &v), Err(Error::Parse(_))), "{bad}");
        }
    }
}
