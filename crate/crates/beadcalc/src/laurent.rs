//! Laurent polynomials over the rationals in one variable `b`, the bead
//! ring. Supports ring arithmetic, the involution `b ↦ b⁻¹`, and a small
//! text format (`"2*b^3 - b^-1 + 1/2"`) used by the diagram files.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::DiagramError;
use crate::lincomb::{rat, Rational};

/// An element of the bead ring: exponent → nonzero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// The monomial `b^exp`.
    pub fn monomial(exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, Rational::one());
        p
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(0, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Rational::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, exp: i64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, k) in &self.terms {
            out.add_term(*e, k.clone() * c.clone());
        }
        out
    }

    /// The involution of the bead ring: `b ↦ b⁻¹` (negates exponents).
    pub fn conjugate(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluate at `b = 1` (sum of coefficients).
    pub fn evaluate_at_one(&self) -> Rational {
        self.terms.values().cloned().sum()
    }

    /// Parse the text form: terms `c`, `c*b^k`, `b^k`, `b`, `-b^-2`, with
    /// rational coefficients `p` or `p/q`, joined by `+`/`-`. `0` parses to
    /// the zero polynomial.
    pub fn parse(input: &str) -> Result<Self, DiagramError> {
        Parser {
            bytes: input.as_bytes(),
            at: 0,
            input,
        }
        .parse()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest exponent first, as one writes polynomials.
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "b")?;
                } else {
                    write!(f, "b^{e}")?;
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    at: usize,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn error(&self, detail: impl Into<String>) -> DiagramError {
        DiagramError::Parse {
            what: "bead polynomial",
            detail: format!("{} (in {:?})", detail.into(), self.input),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.at).is_some_and(u8::is_ascii_whitespace) {
            self.at += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.at).copied()
    }

    fn integer(&mut self) -> Result<i64, DiagramError> {
        let start = self.at;
        if self.peek() == Some(b'-') {
            self.at += 1;
        }
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.at += 1;
        }
        self.input[start..self.at]
            .parse()
            .map_err(|_| self.error(format!("expected an integer at byte {start}")))
    }

    fn parse(mut self) -> Result<LaurentPoly, DiagramError> {
        let mut poly = LaurentPoly::zero();
        self.skip_ws();
        if self.at == self.bytes.len() {
            return Err(self.error("empty input"));
        }
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.at += 1;
                true
            }
            Some(b'+') => {
                self.at += 1;
                false
            }
            _ => false,
        };
        loop {
            self.skip_ws();
            let (coeff, exp) = self.term()?;
            poly.add_term(exp, if negative { -coeff } else { coeff });
            self.skip_ws();
            match self.peek() {
                None => return Ok(poly),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(c) => return Err(self.error(format!("unexpected character {:?}", c as char))),
            }
            self.at += 1;
        }
    }

    /// One unsigned term: `coeff`, `coeff*b^k`, `coeff b^k`, `b^k`, `b`.
    fn term(&mut self) -> Result<(Rational, i64), DiagramError> {
        let mut coeff = Rational::one();
        let mut saw_coeff = false;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let num = self.integer()?;
            self.skip_ws();
            coeff = if self.peek() == Some(b'/') {
                self.at += 1;
                self.skip_ws();
                let den = self.integer()?;
                if den == 0 {
                    return Err(self.error("zero denominator"));
                }
                Rational::new(num.into(), den.into())
            } else {
                rat(num)
            };
            saw_coeff = true;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.at += 1;
                self.skip_ws();
            }
        }
        if self.peek() == Some(b'b') {
            self.at += 1;
            let exp = if self.peek() == Some(b'^') {
                self.at += 1;
                self.integer()?
            } else {
                1
            };
            Ok((coeff, exp))
        } else if saw_coeff {
            Ok((coeff, 0))
        } else {
            Err(self.error(format!("expected a term at byte {}", self.at)))
        }
    }
}
