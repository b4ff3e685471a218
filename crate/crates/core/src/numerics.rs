//! Exact rational arithmetic: p-adic valuations, factorial-scaled products
//! and the p-power lattice tests behind every divisibility verdict.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Arbitrary precision integer used throughout.
pub type Int = BigInt;

/// Arbitrary precision rational, always in lowest terms with positive
/// denominator (maintained by the underlying representation).
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{0} is not prime")]
pub struct NotPrime(pub u64);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse {0:?} as a rational")]
pub struct RationalParseError(pub String);

/// p-adic valuation; zero gets the distinguished infinite value, which
/// compares greater than every finite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn is_finite(self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// Deterministic trial division; inputs here are small check primes.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn int_valuation(n: &Int, p: u64) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let p = Int::from(p);
    let mut n = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        n = q;
        v += 1;
    }
}

/// v_p of a rational: v_p(numerator) - v_p(denominator), infinite at zero.
pub fn padic_valuation(x: &Rational, p: u64) -> Result<Valuation, NotPrime> {
    if !is_prime(p) {
        return Err(NotPrime(p));
    }
    if x.is_zero() {
        return Ok(Valuation::Infinity);
    }
    let vn = int_valuation(x.numer(), p).finite().expect("nonzero numerator");
    let vd = int_valuation(x.denom(), p).finite().expect("nonzero denominator");
    Ok(Valuation::Finite(vn - vd))
}

/// Decides membership in the integer sublattice p^e * Z for e >= 0: x must
/// be an integer with v_p(x) >= e. For e <= 0 the condition degenerates to
/// x being an integer.
pub fn in_p_power_lattice(x: &Rational, p: u64, e: i64) -> Result<bool, NotPrime> {
    if !is_prime(p) {
        return Err(NotPrime(p));
    }
    if !x.is_integer() {
        return Ok(false);
    }
    if e <= 0 {
        return Ok(true);
    }
    Ok(padic_valuation(x, p)? >= Valuation::Finite(e))
}

/// m (m-1) ... (m-n+1) / n!. A product of n successive integers is always
/// divisible by n!, so the result is an integer and the division is exact.
pub fn falling_factorial_div(m: &Int, n: u32) -> Int {
    let mut num = Int::one();
    let mut fact = Int::one();
    for i in 0..n {
        num *= m - Int::from(i);
        fact *= Int::from(i + 1);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &fact);
    debug_assert!(r.is_zero(), "falling factorial division must be exact");
    q
}

/// Binomial coefficient with arbitrary rational upper argument:
/// alpha (alpha-1) ... (alpha-n+1) / n!.
pub fn generalized_binomial(alpha: &Rational, n: u32) -> Rational {
    let mut num = Rational::one();
    let mut fact = Int::one();
    for i in 0..n {
        num *= alpha - Rational::from_integer(Int::from(i));
        fact *= Int::from(i + 1);
    }
    num / Rational::from_integer(fact)
}

/// Canonical text form: "p/q", with "/q" omitted when the denominator is 1.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the canonical "p/q" form (and bare integers).
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let bad = || RationalParseError(s.to_string());
    match s.split_once('/') {
        None => {
            let n: Int = s.trim().parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: Int = num.trim().parse().map_err(|_| bad())?;
            let d: Int = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}
