//! The averaged Jones polynomial Phi(L;t) as an exact rational function.
//!
//! Phi is 1 on trivial links, V - 1 on knots, and for a mu-component
//! Brunnian link the normalized form (-1)^(mu-1) V / delta^(mu-1) - 1
//! with delta = t^(1/2) + t^(-1/2). Over geometrically split unions Phi
//! multiplies. The numerator and denominator are kept as exact Laurent
//! polynomials so series expansion at t = 1 loses nothing.

use crate::bracket::{jones_reduced, BracketError, ConventionBundle};
use crate::diagram::LinkDiagram;
use crate::laurent::QuarterLaurent;
use crate::numerics::{format_rational, Int, Rational};
use crate::series::{expand_ratio, SeriesAtOne, SeriesError};
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PhiError {
    #[error("expected a single-component diagram, got {mu} components")]
    NotAKnot { mu: usize },
    #[error("expected a diagram with at least two components, got {mu}")]
    NotMultiComponent { mu: usize },
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

/// How a diagram was classified when its Phi was built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkClass {
    Trivial,
    Knot,
    BrunnianDeclared,
    Gsl,
}

impl fmt::Display for LinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinkClass::Trivial => "trivial",
            LinkClass::Knot => "knot",
            LinkClass::BrunnianDeclared => "brunnian",
            LinkClass::Gsl => "gsl",
        })
    }
}

/// Phi(L;t) = num/den with den(1) != 0, plus the component count and the
/// class tag under which it was computed. den is always a power of delta
/// (the zeroth power, 1, for knots and trivial links).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiResult {
    pub num: QuarterLaurent,
    pub den: QuarterLaurent,
    pub mu: usize,
    pub link_class: LinkClass,
}

/// Phi of a trivial (or empty) link is the constant 1, whatever mu is.
pub fn phi_trivial(mu: usize) -> PhiResult {
    PhiResult {
        num: QuarterLaurent::one(),
        den: QuarterLaurent::one(),
        mu,
        link_class: LinkClass::Trivial,
    }
}

/// Phi of a knot diagram: V(K;t) - 1. The crossing-free unknot takes the
/// trivial-link value 1 instead; the two rules genuinely disagree there
/// and the trivial rule wins so that split unknot factors act as the
/// multiplicative identity.
pub fn phi_knot(d: &LinkDiagram, cfg: ConventionBundle) -> Result<PhiResult, PhiError> {
    if d.mu() != 1 {
        return Err(PhiError::NotAKnot { mu: d.mu() });
    }
    if d.crossing_count() == 0 {
        return Ok(phi_trivial(1));
    }
    let v = jones_reduced(d, cfg)?;
    Ok(PhiResult {
        num: &v - &QuarterLaurent::one(),
        den: QuarterLaurent::one(),
        mu: 1,
        link_class: LinkClass::Knot,
    })
}

/// Phi of a declared Brunnian diagram with mu >= 2 components:
/// (-1)^(mu-1) V / delta^(mu-1) - 1, kept as num/den over den =
/// delta^(mu-1). At mu = 1 the same formula degenerates to the knot rule;
/// Brunnian-ness itself is the caller's responsibility (see
/// [`crate::bracket::sublinks_trivial`] for a corpus-scale check).
pub fn phi_brunnian(d: &LinkDiagram, cfg: ConventionBundle) -> Result<PhiResult, PhiError> {
    let mu = d.mu();
    if mu < 2 {
        return Err(PhiError::NotMultiComponent { mu });
    }
    if d.crossing_count() == 0 {
        return Ok(phi_trivial(mu));
    }
    let v = jones_reduced(d, cfg)?;
    let den = QuarterLaurent::delta().pow(mu as u32 - 1);
    let signed_v = if (mu - 1).is_multiple_of(2) { v } else { -&v };
    Ok(PhiResult {
        num: &signed_v - &den,
        den,
        mu,
        link_class: LinkClass::BrunnianDeclared,
    })
}

/// Phi of a geometrically split union: the product over the pieces, each
/// dispatched by its own shape (crossing-free pieces count as trivial,
/// single-component pieces as knots, the rest as declared Brunnian).
/// The empty union is the empty link, Phi = 1.
pub fn phi_gsl(pieces: &[LinkDiagram], cfg: ConventionBundle) -> Result<PhiResult, PhiError> {
    if pieces.is_empty() {
        return Ok(phi_trivial(0));
    }
    let mut num = QuarterLaurent::one();
    let mut den = QuarterLaurent::one();
    let mut mu = 0usize;
    for piece in pieces {
        let factor = if piece.crossing_count() == 0 {
            phi_trivial(piece.mu())
        } else if piece.mu() == 1 {
            phi_knot(piece, cfg)?
        } else {
            phi_brunnian(piece, cfg)?
        };
        num = &num * &factor.num;
        den = &den * &factor.den;
        mu += factor.mu;
    }
    Ok(PhiResult {
        num,
        den,
        mu,
        link_class: LinkClass::Gsl,
    })
}

/// Taylor coefficients a_0..a_n of Phi at t = 1.
pub fn phi_series(phi: &PhiResult, n: usize) -> Result<SeriesAtOne, SeriesError> {
    expand_ratio(&phi.num, &phi.den, n)
}

/// phi_n(L) = (-2)^mu * a_(n+mu) read off an already-expanded series.
pub fn phi_n(series: &SeriesAtOne, mu: usize, n: usize) -> Result<Rational, SeriesError> {
    let a = series.coefficient(n + mu)?;
    let scale = Rational::from_integer(Int::from(-2).pow(mu as u32));
    Ok(a * &scale)
}

/// den recognized as delta^k, if it is one.
fn delta_power_of(den: &QuarterLaurent) -> Option<u32> {
    if *den == QuarterLaurent::one() {
        return Some(0);
    }
    let m = den.max_index()?;
    if m <= 0 || m % 2 != 0 {
        return None;
    }
    let k = u32::try_from(m / 2).ok()?;
    (*den == QuarterLaurent::delta().pow(k)).then_some(k)
}

/// Evaluation at t = -1; defined only on the integer exponent grid.
fn eval_at_minus_one(p: &QuarterLaurent) -> Option<Rational> {
    let mut acc = Rational::zero();
    for (k, c) in p.iter() {
        if k.rem_euclid(4) != 0 {
            return None;
        }
        if (k / 4).rem_euclid(2) == 0 {
            acc += c;
        } else {
            acc -= c;
        }
    }
    Some(acc)
}

impl fmt::Display for PhiResult {
    /// Renders num/delta^k in closed form as a Laurent polynomial plus
    /// partial fractions in (t+1): delta^k = t^(-k/2) (t+1)^k, so
    /// clearing the half powers leaves an exact division chain.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QuarterLaurent::one() {
            return write!(f, "{}", self.num);
        }
        let Some(k) = delta_power_of(&self.den) else {
            return write!(f, "({}) / ({})", self.num, self.den);
        };
        let tp1 = &QuarterLaurent::t_power(1) + &QuarterLaurent::one();
        let mut cur = self.num.mul_monomial(2 * k as i64, &Rational::one());
        // tails[j] = coefficient of (t+1)^(-(k-j)), peeled deepest first
        let mut tails = Vec::with_capacity(k as usize);
        for _ in 0..k {
            let c = eval_at_minus_one(&cur).expect("half powers cleared above");
            cur = (&cur - &QuarterLaurent::constant(c.clone()))
                .div_exact(&tp1)
                .expect("difference vanishes at t = -1");
            tails.push(c);
        }
        let mut wrote = false;
        if !cur.is_zero() {
            write!(f, "{cur}")?;
            wrote = true;
        }
        for j in 1..=k as usize {
            let c = &tails[k as usize - j];
            if c.is_zero() {
                continue;
            }
            if wrote && c.is_positive() {
                f.write_str("+")?;
            }
            if c.abs().is_one() {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(&format_rational(c))?;
            }
            write!(f, "(t+1)^{{-{j}}}")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}
