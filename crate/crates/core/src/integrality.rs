//! Divisibility verdicts over exact series coefficients: vanishing
//! windows, 2- and 3-adic valuation floors, 6Z membership, the
//! double-crossing-change product identity and its coefficient
//! recurrence.
//!
//! Checkers return structured reports instead of throwing on a violated
//! bound; falsification is a first-class outcome here. Only malformed
//! inputs (a series too short for the requested window) raise errors.

use crate::laurent::QuarterLaurent;
use crate::numerics::{format_rational, padic_valuation, Int, Rational, Valuation};
use crate::phi::{phi_n, PhiResult};
use crate::series::SeriesAtOne;
use num_traits::{One, Zero};
use serde_json::json;
use std::fmt;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntegralityError {
    #[error("series order {have} is too low, need at least {needed}")]
    OrderTooLow { needed: usize, have: usize },
}

/// Summary outcome of a report: `Fail` when an unflagged entry fails,
/// `Flagged` when only flagged probe entries fail, `Pass` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Flagged,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Flagged => "flagged",
        })
    }
}

/// One checked coefficient: its value, both small-prime valuations, the
/// bound it was held to and whether it met it. `flag` marks entries whose
/// bound is probed rather than asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationEntry {
    pub i: usize,
    pub a: Rational,
    pub v2: Valuation,
    pub v3: Valuation,
    pub bound: String,
    pub pass: bool,
    pub flag: Option<String>,
}

impl ValuationEntry {
    fn new(i: usize, a: &Rational, bound: String, pass: bool, flag: Option<String>) -> Self {
        ValuationEntry {
            i,
            a: a.clone(),
            v2: padic_valuation(a, 2).expect("2 is prime"),
            v3: padic_valuation(a, 3).expect("3 is prime"),
            bound,
            pass,
            flag,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationReport {
    pub claim: String,
    pub entries: Vec<ValuationEntry>,
    pub verdict: Verdict,
}

impl ValuationReport {
    fn from_entries(claim: String, entries: Vec<ValuationEntry>) -> Self {
        let verdict = if entries.iter().any(|e| !e.pass && e.flag.is_none()) {
            Verdict::Fail
        } else if entries.iter().any(|e| !e.pass) {
            Verdict::Flagged
        } else {
            Verdict::Pass
        };
        ValuationReport {
            claim,
            entries,
            verdict,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let valuation_json = |v: Valuation| match v.finite() {
            Some(n) => json!(n),
            None => json!("inf"),
        };
        json!({
            "claim": self.claim,
            "entries": self.entries.iter().map(|e| json!({
                "i": e.i,
                "a": format_rational(&e.a),
                "v2": valuation_json(e.v2),
                "v3": valuation_json(e.v3),
                "bound": e.bound,
                "pass": e.pass,
                "flag": e.flag,
            })).collect::<Vec<_>>(),
            "verdict": self.verdict.to_string(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("claim: {}\n", self.claim);
        for e in &self.entries {
            let _ = write!(
                out,
                "  i={:<3} a={:<14} v2={:<5} v3={:<5} bound: {:<16} {}",
                e.i,
                format_rational(&e.a),
                e.v2.to_string(),
                e.v3.to_string(),
                e.bound,
                if e.pass { "pass" } else { "FAIL" },
            );
            if let Some(flag) = &e.flag {
                let _ = write!(out, " [{flag}]");
            }
            out.push('\n');
        }
        let _ = write!(out, "verdict: {}", self.verdict);
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("index,value,v2,v3\n");
        for e in &self.entries {
            let _ = writeln!(out, "{},{},{},{}", e.i, format_rational(&e.a), e.v2, e.v3);
        }
        out
    }
}

/// True iff a_0..a_mu all vanish.
pub fn check_eq1_vanishing(series: &SeriesAtOne, mu: usize) -> Result<bool, IntegralityError> {
    if series.order() < mu {
        return Err(IntegralityError::OrderTooLow {
            needed: mu,
            have: series.order(),
        });
    }
    Ok(series.coefficients()[..=mu].iter().all(Rational::is_zero))
}

/// Per-coefficient report behind [`check_eq1_vanishing`].
pub fn eq1_report(series: &SeriesAtOne, mu: usize) -> Result<ValuationReport, IntegralityError> {
    if series.order() < mu {
        return Err(IntegralityError::OrderTooLow {
            needed: mu,
            have: series.order(),
        });
    }
    let entries = series.coefficients()[..=mu]
        .iter()
        .enumerate()
        .map(|(i, a)| ValuationEntry::new(i, a, "a_i = 0".into(), a.is_zero(), None))
        .collect();
    Ok(ValuationReport::from_entries(
        format!("a_i = 0 for all i <= {mu}"),
        entries,
    ))
}

/// True iff every coefficient up to min(n_max, order) is an integer.
pub fn check_gsl_integrality(series: &SeriesAtOne, n_max: usize) -> bool {
    let top = n_max.min(series.order());
    series.coefficients()[..=top]
        .iter()
        .all(Rational::is_integer)
}

/// Iterated Cauchy product of the given series, truncated to the
/// smallest order present. This is the hand convolution route; it must
/// agree with expanding the product of the closed forms.
pub fn convolve_coefficients(list: &[SeriesAtOne]) -> SeriesAtOne {
    assert!(!list.is_empty(), "convolution needs at least one series");
    let mut acc = list[0].clone();
    for s in &list[1..] {
        acc = acc.mul(s);
    }
    acc
}

/// Valuation ladder for a split union of `mu` nontrivial knots:
/// coefficients vanish below 2mu, carry 3-adic valuation at least mu on
/// [2mu, 3mu] (the top end only probed, see below), at least 4mu - i on
/// (3mu, 4mu], and are plain integers beyond. The i = 3mu entry is
/// flagged as a boundary probe rather than asserted: the trefoil-squared
/// series already has v3(a_6) = 1 < 2 there, so the report surfaces the
/// measured valuation and the verdict says "flagged", not "fail".
pub fn check_prop1(series: &SeriesAtOne, mu: usize) -> Result<ValuationReport, IntegralityError> {
    if series.order() < 4 * mu {
        return Err(IntegralityError::OrderTooLow {
            needed: 4 * mu,
            have: series.order(),
        });
    }
    let entries = series
        .coefficients()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let v3 = padic_valuation(a, 3).expect("3 is prime");
            if i < 2 * mu {
                ValuationEntry::new(i, a, "a_i = 0".into(), a.is_zero(), None)
            } else if i <= 3 * mu {
                let flag = (i == 3 * mu).then(|| "boundary probe".to_string());
                ValuationEntry::new(
                    i,
                    a,
                    format!("v3 >= {mu}"),
                    v3 >= Valuation::Finite(mu as i64),
                    flag,
                )
            } else if i <= 4 * mu {
                let floor = (4 * mu - i) as i64;
                ValuationEntry::new(
                    i,
                    a,
                    format!("v3 >= {floor}"),
                    v3 >= Valuation::Finite(floor),
                    None,
                )
            } else {
                ValuationEntry::new(i, a, "integer".into(), a.is_integer(), None)
            }
        })
        .collect();
    Ok(ValuationReport::from_entries(
        format!("3-adic coefficient ladder for a split union of {mu} nontrivial knots"),
        entries,
    ))
}

/// Checks 2^(n-2) * a_n is an integer for every n up to min(n_max, order),
/// recording exact valuations so sharpness is visible in the report.
pub fn check_prop2(series: &SeriesAtOne, n_max: usize) -> ValuationReport {
    let top = n_max.min(series.order());
    let entries = series.coefficients()[..=top]
        .iter()
        .enumerate()
        .map(|(n, a)| {
            let scale = if n >= 2 {
                Rational::from_integer(Int::from(2).pow(n as u32 - 2))
            } else {
                Rational::new(Int::one(), Int::from(2).pow(2 - n as u32))
            };
            let pass = (a * &scale).is_integer();
            ValuationEntry::new(n, a, "2^(n-2)*a_n in Z".into(), pass, None)
        })
        .collect();
    ValuationReport::from_entries(
        format!("2^(n-2)*a_n is an integer for all n <= {top}"),
        entries,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjecture41Outcome {
    /// phi_n = (-2)^mu * a_(n+mu).
    pub phi_n: Rational,
    /// n! * phi_n, the quantity whose 6Z membership is under test.
    pub value: Rational,
    pub in_6z: bool,
}

/// Evaluates n! * phi_n and tests membership in 6Z (integrality first).
pub fn check_conjecture41(
    series: &SeriesAtOne,
    mu: usize,
    n: usize,
) -> Result<Conjecture41Outcome, IntegralityError> {
    if series.order() < n + mu {
        return Err(IntegralityError::OrderTooLow {
            needed: n + mu,
            have: series.order(),
        });
    }
    let phi = phi_n(series, mu, n).expect("order checked above");
    let factorial = (1..=n as u64).map(Int::from).fold(Int::one(), |a, b| a * b);
    let value = &phi * &Rational::from_integer(factorial);
    let in_6z = value.is_integer() && (value.to_integer() % Int::from(6)).is_zero();
    Ok(Conjecture41Outcome {
        phi_n: phi,
        value,
        in_6z,
    })
}

/// Coefficientwise test of (t+1)(F - G) = (t^2 - t)(H - K) to order
/// min(n_max, all orders), in the shifted variable s = t - 1 where
/// t + 1 = 2 + s and t^2 - t = s + s^2.
pub fn double_crossing_identity(
    f: &SeriesAtOne,
    g: &SeriesAtOne,
    h: &SeriesAtOne,
    k: &SeriesAtOne,
    n_max: usize,
) -> bool {
    let top = n_max
        .min(f.order())
        .min(g.order())
        .min(h.order())
        .min(k.order());
    let d = f.sub(g);
    let e = h.sub(k);
    let dc = d.coefficients();
    let ec = e.coefficients();
    let two = rat_two();
    for n in 0..=top {
        let mut lhs = &two * &dc[n];
        if n >= 1 {
            lhs += &dc[n - 1];
        }
        let mut rhs = Rational::zero();
        if n >= 1 {
            rhs += &ec[n - 1];
        }
        if n >= 2 {
            rhs += &ec[n - 2];
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// The same identity on closed forms, cross-multiplied to clear all four
/// denominators; exact, no truncation.
pub fn double_crossing_identity_exact(
    f: &PhiResult,
    g: &PhiResult,
    h: &PhiResult,
    k: &PhiResult,
) -> bool {
    let tp1 = &QuarterLaurent::t_power(1) + &QuarterLaurent::one();
    let t_sq_minus_t = &QuarterLaurent::t_power(2) - &QuarterLaurent::t_power(1);
    let fg = &(&f.num * &g.den) - &(&g.num * &f.den);
    let hk = &(&h.num * &k.den) - &(&k.num * &h.den);
    let lhs = &(&tp1 * &fg) * &(&h.den * &k.den);
    let rhs = &(&t_sq_minus_t * &hk) * &(&f.den * &g.den);
    lhs == rhs
}

fn rat_two() -> Rational {
    Rational::from_integer(Int::from(2))
}

fn coeff_or_zero(s: &[Rational], i: isize) -> Rational {
    if i < 0 {
        return Rational::zero();
    }
    s.get(i as usize).cloned().unwrap_or_default()
}

/// Next coefficient of F forced by the identity, given all earlier ones:
/// a_n(F) = a_n(G) + [a_(n-1)(G) - a_(n-1)(F)]/2
///        + [a_(n-1)(H) - a_(n-1)(K)]/2 + [a_(n-2)(H) - a_(n-2)(K)]/2
/// with coefficients below index 0 (or past a slice's end) read as zero.
/// `f_prefix` holds a_0..a_(n-1) of F, so n = f_prefix.len().
pub fn recurrence_step(
    f_prefix: &[Rational],
    g: &[Rational],
    h: &[Rational],
    k: &[Rational],
) -> Rational {
    let n = f_prefix.len() as isize;
    let half = Rational::new(Int::one(), Int::from(2));
    let mut acc = coeff_or_zero(g, n);
    acc += &(&(coeff_or_zero(g, n - 1) - coeff_or_zero(f_prefix, n - 1)) * &half);
    acc += &(&(coeff_or_zero(h, n - 1) - coeff_or_zero(k, n - 1)) * &half);
    acc += &(&(coeff_or_zero(h, n - 2) - coeff_or_zero(k, n - 2)) * &half);
    acc
}

/// Runs the recurrence from scratch, producing the unique F of the given
/// order that satisfies the double-crossing identity against G, H, K.
/// Coefficients of G, H, K beyond their stored order are read as zero.
pub fn recurrence_extend(
    g: &SeriesAtOne,
    h: &SeriesAtOne,
    k: &SeriesAtOne,
    order: usize,
) -> SeriesAtOne {
    let mut f: Vec<Rational> = Vec::with_capacity(order + 1);
    for _ in 0..=order {
        let next = recurrence_step(&f, g.coefficients(), h.coefficients(), k.coefficients());
        f.push(next);
    }
    SeriesAtOne::from_coefficients(f)
}
