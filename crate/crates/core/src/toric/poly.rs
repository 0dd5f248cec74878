//! Weighted polynomial rings `ℤ[X₁, …, Xₙ]` with `deg Xᵢ = aᵢ`, and a small
//! expression parser for their elements.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::semigroup::NumericalSemigroup;

pub type Exponents = Vec<u32>;

/// Named variables with positive weights; `φ(Xᵢ) = t^{aᵢ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPolyRing {
    names: Vec<String>,
    weights: Vec<u64>,
}

impl WeightedPolyRing {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u64)>) -> Self {
        let (names, weights) = vars.into_iter().map(|(n, w)| (n.into(), w)).unzip();
        Self { names, weights }
    }

    /// Variables `X1, …, Xn` weighted by the generators of `s`, or `X, Y, Z, W`
    /// when there are at most four of them.
    pub fn for_semigroup(s: &NumericalSemigroup) -> Self {
        let gens = s.generators();
        let short = ["X", "Y", "Z", "W"];
        Self::new(gens.iter().enumerate().map(|(i, &g)| {
            let name = if gens.len() <= short.len() {
                short[i].to_string()
            } else {
                alloc::format!("X{}", i + 1)
            };
            (name, g as u64)
        }))
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, exps: &[u32]) -> u64 {
        exps.iter().zip(&self.weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    /// The variable `Xᵢ` raised to `power`.
    pub fn var(&self, i: usize, power: u32) -> WeightedPolynomial {
        let mut exps = vec![0; self.nvars()];
        exps[i] = power;
        WeightedPolynomial::monomial(exps, BigInt::one())
    }

    /// All exponent vectors of weighted degree `d`, in lexicographic order.
    pub fn monomials_of_degree(&self, d: u64) -> Vec<Exponents> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars()];
        self.fill(0, d, &mut cur, &mut out);
        out
    }

    fn fill(&self, i: usize, rem: u64, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        let n = self.nvars();
        if n == 0 {
            if rem == 0 {
                out.push(Vec::new());
            }
            return;
        }
        if i + 1 == n {
            if rem.is_multiple_of(self.weights[i]) {
                cur[i] = (rem / self.weights[i]) as u32;
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=rem / self.weights[i] {
            cur[i] = e as u32;
            self.fill(i + 1, rem - e * self.weights[i], cur, out);
        }
        cur[i] = 0;
    }

    pub fn parse(&self, text: &str) -> Result<WeightedPolynomial, ParseError> {
        Parser::new(text, self).parse()
    }
}

/// A polynomial with arbitrary-precision integer coefficients, stored
/// sparsely with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightedPolynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

impl WeightedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exps: Exponents, coeff: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, coeff);
        p
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; nvars], c.into())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// Product with the monomial `X^exps`.
    pub fn times_monomial(&self, exps: &[u32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Self { terms }
    }

    /// Weighted-homogeneous components keyed by degree.
    pub fn components(&self, ring: &WeightedPolyRing) -> BTreeMap<u64, WeightedPolynomial> {
        let mut out: BTreeMap<u64, WeightedPolynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(ring.degree(e))
                .or_default()
                .add_term(e.clone(), c.clone());
        }
        out
    }

    /// The common degree of all terms, if there is one. `None` for zero.
    pub fn homogeneous_degree(&self, ring: &WeightedPolyRing) -> Option<u64> {
        let mut degrees = self.terms.keys().map(|e| ring.degree(e));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// `φ(f) = 0`: every homogeneous component has coefficient sum zero,
    /// since all monomials of degree `d` map to `t^d`.
    pub fn in_kernel(&self, ring: &WeightedPolyRing) -> bool {
        self.components(ring)
            .values()
            .all(|p| p.terms.values().fold(BigInt::zero(), |acc, c| acc + c).is_zero())
    }

    /// Membership in the monomial ideal `J = (X₁²) + (X₂, …, Xₙ)`.
    pub fn in_j(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.first().is_some_and(|&x| x >= 2) || e.iter().skip(1).any(|&x| x > 0))
    }

    pub fn display<'a>(&'a self, ring: &'a WeightedPolyRing) -> DisplayPoly<'a> {
        DisplayPoly { poly: self, ring }
    }
}

impl Add for &WeightedPolynomial {
    type Output = WeightedPolynomial;
    fn add(self, rhs: &WeightedPolynomial) -> WeightedPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &WeightedPolynomial {
    type Output = WeightedPolynomial;
    fn sub(self, rhs: &WeightedPolynomial) -> WeightedPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &WeightedPolynomial {
    type Output = WeightedPolynomial;
    fn neg(self) -> WeightedPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        WeightedPolynomial { terms }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &WeightedPolynomial {
    type Output = WeightedPolynomial;
    fn mul(self, rhs: &WeightedPolynomial) -> WeightedPolynomial {
        let mut out = WeightedPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// Renders terms in decreasing lexicographic order, e.g. `-X*Z + Y^2`.
pub struct DisplayPoly<'a> {
    poly: &'a WeightedPolynomial,
    ring: &'a WeightedPolyRing,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (exps, coeff)) in self.poly.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(abs.to_string());
            }
            for (name, &e) in self.ring.names.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(alloc::format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
}

// expr   := sign? term (('+' | '-') term)*
// term   := factor ('*' factor)*
// factor := integer | ident ('^' integer)?
struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
    ring: &'a WeightedPolyRing,
}

impl<'a> Parser<'a> {
    fn new(text: &str, ring: &'a WeightedPolyRing) -> Self {
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Self {
            chars,
            at: 0,
            len: text.len(),
            ring,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(p, _)| p)
    }

    fn error<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            message: message.to_string(),
        })
    }

    fn parse(mut self) -> Result<WeightedPolynomial, ParseError> {
        if self.peek().is_none() {
            return self.error("empty expression");
        }
        let mut acc = WeightedPolynomial::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.at += 1;
                -1
            }
            Some('+') => {
                self.at += 1;
                1
            }
            _ => 1,
        };
        loop {
            let term = self.term()?;
            acc = if sign < 0 { &acc - &term } else { &acc + &term };
            match self.peek() {
                None => return Ok(acc),
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(_) => return self.error("expected `+`, `-` or `*`"),
            }
            self.at += 1;
        }
    }

    fn term(&mut self) -> Result<WeightedPolynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.at += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<WeightedPolynomial, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(WeightedPolynomial::constant(self.ring.nvars(), n))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos();
                let mut name = String::new();
                while let Some(c) = self.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        name.push(c);
                        self.at += 1;
                    } else {
                        break;
                    }
                }
                let Some(i) = self.ring.index_of(&name) else {
                    return Err(ParseError::UnknownVariable { pos: start, name });
                };
                let power = if self.peek() == Some('^') {
                    self.at += 1;
                    let p = self.integer()?;
                    match u32::try_from(&p) {
                        Ok(p) => p,
                        Err(_) => return self.error("exponent out of range"),
                    }
                } else {
                    1
                };
                Ok(self.ring.var(i, power))
            }
            Some(_) => self.error("expected a number or a variable"),
            None => self.error("unexpected end of input"),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            return self.error("expected an integer");
        }
        Ok(digits.parse().expect("ascii digits"))
    }
}
