//! Laurent polynomials on the quarter grid of t.
//!
//! The exponent index k stands for t^(k/4), so one representation carries
//! the bracket variable (A = t^(-1/4) is index -1 per power of A after
//! substitution), the half-integer exponents of multi-component Jones
//! polynomials (k even), and plain powers of t (k divisible by 4).
//! Coefficients are exact rationals; zero coefficients are never stored.

use crate::numerics::{format_rational, parse_rational, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivExactError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("not divisible: remainder is nonzero")]
    NotDivisible,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse polynomial at byte {pos}: {msg}")]
pub struct LaurentParseError {
    pub pos: usize,
    pub msg: &'static str,
}

/// Sparse Laurent polynomial over the rationals with exponents in (1/4)Z.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QuarterLaurent {
    terms: BTreeMap<i64, Rational>,
}

impl QuarterLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// c * t^(k/4).
    pub fn monomial(k: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        QuarterLaurent { terms }
    }

    /// t^e for integer e.
    pub fn t_power(e: i64) -> Self {
        Self::monomial(4 * e, Rational::one())
    }

    /// t^(1/2) + t^(-1/2), the loop value of the reduced theory.
    pub fn delta() -> Self {
        &Self::monomial(2, Rational::one()) + &Self::monomial(-2, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Quarter-grid indices with nonzero coefficient, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coefficient(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_index(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// All exponents are integers (t-grid).
    pub fn is_integer_grid(&self) -> bool {
        self.terms.keys().all(|k| k.rem_euclid(4) == 0)
    }

    /// All exponents lie in (1/2)Z.
    pub fn is_half_grid(&self) -> bool {
        self.terms.keys().all(|k| k.rem_euclid(2) == 0)
    }

    fn insert(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QuarterLaurent {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplication by c * t^(k/4) without building a second polynomial.
    pub fn mul_monomial(&self, k: i64, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QuarterLaurent {
            terms: self.terms.iter().map(|(i, v)| (*i + k, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The substitution t -> 1/t (and A -> 1/A on the bracket grid):
    /// exponent-index negation.
    pub fn invert_variable(&self) -> Self {
        QuarterLaurent {
            terms: self.terms.iter().map(|(k, v)| (-k, v.clone())).collect(),
        }
    }

    /// Sum of coefficients, the exact value at t = 1.
    pub fn evaluate_at_one(&self) -> Rational {
        let mut acc = Rational::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Exact quotient self / divisor, or NotDivisible when the remainder of
    /// the Laurent long division is nonzero. Verified round trip:
    /// quotient * divisor == self.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, DivExactError> {
        if divisor.is_zero() {
            return Err(DivExactError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (dmax, dlead) = {
            let k = divisor.max_index().expect("nonzero divisor");
            (k, divisor.coefficient(k))
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division from the top; in the Laurent ring the quotient may
        // keep dropping below the divisor's span, so the loop ends only when
        // the remainder vanishes or stops shrinking in width.
        while !rem.is_zero() {
            let rmax = rem.max_index().expect("nonzero remainder");
            let rmin = rem.min_index().expect("nonzero remainder");
            let dspan = dmax - divisor.min_index().expect("nonzero divisor");
            if rmax - rmin < dspan {
                return Err(DivExactError::NotDivisible);
            }
            let k = rmax - dmax;
            let c = rem.coefficient(rmax) / dlead.clone();
            quot.insert(k, c.clone());
            rem = &rem - &divisor.mul_monomial(k, &c);
        }
        Ok(quot)
    }
}

impl FromIterator<(i64, Rational)> for QuarterLaurent {
    /// Accumulates repeated indices and drops zero sums.
    fn from_iter<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut out = QuarterLaurent::zero();
        for (k, c) in iter {
            out.insert(k, c);
        }
        out
    }
}

impl Add for &QuarterLaurent {
    type Output = QuarterLaurent;
    fn add(self, rhs: &QuarterLaurent) -> QuarterLaurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms.iter() {
            out.insert(*k, c.clone());
        }
        out
    }
}

impl Sub for &QuarterLaurent {
    type Output = QuarterLaurent;
    fn sub(self, rhs: &QuarterLaurent) -> QuarterLaurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms.iter() {
            out.insert(*k, -c.clone());
        }
        out
    }
}

impl Mul for &QuarterLaurent {
    type Output = QuarterLaurent;
    fn mul(self, rhs: &QuarterLaurent) -> QuarterLaurent {
        let mut out = QuarterLaurent::zero();
        for (k1, c1) in self.terms.iter() {
            for (k2, c2) in rhs.terms.iter() {
                out.insert(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &QuarterLaurent {
    type Output = QuarterLaurent;
    fn neg(self) -> QuarterLaurent {
        QuarterLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

// Rendering. Terms print in descending exponent order:
//   -t^4+t^3+t-1        (integer exponents)
//   t^{7/2}-2t^{1/2}    (fractional and negative exponents in braces)
// Unit coefficients drop the "1"; rationals print as p/q.
impl fmt::Display for QuarterLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let mag = c.abs();
            if k == 0 {
                write!(f, "{}", format_rational(&mag))?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}", format_rational(&mag))?;
            }
            write!(f, "t")?;
            if k == 4 {
                continue;
            }
            if k % 4 == 0 && k > 0 {
                write!(f, "^{}", k / 4)?;
            } else if k % 4 == 0 {
                write!(f, "^{{{}}}", k / 4)?;
            } else if k % 2 == 0 {
                write!(f, "^{{{}/2}}", k / 2)?;
            } else {
                write!(f, "^{{{k}/4}}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QuarterLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &'static str) -> LaurentParseError {
        LaurentParseError { pos: self.pos, msg }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn take_number(&mut self) -> Result<Rational, LaurentParseError> {
        let start = self.pos;
        if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let mut seen_slash = false;
        while let Some(b) = self.peek() {
            if b.is_ascii_digit() {
                self.pos += 1;
            } else if b == b'/' && !seen_slash {
                // a slash must be followed by digits to belong to the number
                if self
                    .bytes
                    .get(self.pos + 1)
                    .map(|b| b.is_ascii_digit())
                    .unwrap_or(false)
                {
                    seen_slash = true;
                    self.pos += 1;
                } else {
                    break;
                }
            } else {
                break;
            }
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        parse_rational(text).map_err(|_| LaurentParseError {
            pos: start,
            msg: "expected a number",
        })
    }

    /// Exponent after '^': either a bare integer or {rational}.
    fn take_exponent(&mut self) -> Result<Rational, LaurentParseError> {
        if self.peek() == Some(b'{') {
            self.pos += 1;
            let e = self.take_number()?;
            if self.peek() != Some(b'}') {
                return Err(self.err("expected '}'"));
            }
            self.pos += 1;
            Ok(e)
        } else {
            self.take_number()
        }
    }

    fn quarter_index(&self, e: &Rational) -> Result<i64, LaurentParseError> {
        let scaled = e * Rational::from_integer(4.into());
        if !scaled.is_integer() {
            return Err(LaurentParseError {
                pos: self.pos,
                msg: "exponent is not on the quarter grid",
            });
        }
        i64::try_from(scaled.numer().clone()).map_err(|_| LaurentParseError {
            pos: self.pos,
            msg: "exponent out of range",
        })
    }
}

impl std::str::FromStr for QuarterLaurent {
    type Err = LaurentParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            bytes: s.as_bytes(),
            pos: 0,
        };
        let mut out = QuarterLaurent::zero();
        p.skip_ws();
        if p.peek().is_none() {
            return Err(p.err("empty input"));
        }
        let mut sign = Rational::one();
        let mut explicit_sign = false;
        loop {
            p.skip_ws();
            match p.peek() {
                None => {
                    if explicit_sign {
                        return Err(p.err("dangling sign"));
                    }
                    break;
                }
                Some(b'+') => {
                    p.pos += 1;
                    explicit_sign = true;
                    continue;
                }
                Some(b'-') => {
                    p.pos += 1;
                    sign = -sign;
                    explicit_sign = true;
                    continue;
                }
                _ => {}
            }
            // one term: [number] ['*'] ['t' ['^' exponent]]
            let saw_number = p.peek().map(|b| b.is_ascii_digit()).unwrap_or(false);
            let mut coeff = if saw_number {
                p.take_number()?
            } else {
                Rational::one()
            };
            p.skip_ws();
            if p.peek() == Some(b'*') {
                p.pos += 1;
                p.skip_ws();
            }
            let mut index = 0i64;
            if p.peek() == Some(b't') {
                p.pos += 1;
                index = 4;
                if p.peek() == Some(b'^') {
                    p.pos += 1;
                    let e = p.take_exponent()?;
                    index = p.quarter_index(&e)?;
                }
            } else if !saw_number {
                return Err(p.err("expected a term"));
            }
            coeff *= sign.clone();
            out.insert(index, coeff);
            sign = Rational::one();
            explicit_sign = false;
            p.skip_ws();
            match p.peek() {
                None => break,
                Some(b'+') | Some(b'-') => continue,
                _ => return Err(p.err("expected '+', '-' or end of input")),
            }
        }
        Ok(out)
    }
}
