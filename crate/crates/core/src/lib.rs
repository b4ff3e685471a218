//! Exact computation of the averaged Jones polynomial and its Taylor
//! expansion at t = 1.
//!
//! The pipeline runs from planar diagrams to divisibility verdicts:
//! [`diagram`] parses PD codes and performs diagram surgery, [`bracket`]
//! evaluates the Kauffman state sum and the reduced Jones polynomial,
//! [`phi`] assembles the averaged polynomial for knots, Brunnian links and
//! geometrically split links, [`series`] expands it in powers of (t - 1),
//! and [`integrality`] checks the vanishing and p-power divisibility
//! claims with zero tolerance. Everything is computed over arbitrary
//! precision rationals; there is no floating point anywhere.

pub mod bracket;
pub mod corpus;
pub mod diagram;
pub mod integrality;
pub mod laurent;
pub mod numerics;
pub mod phi;
pub mod series;

pub use bracket::{
    calibrate, kauffman_bracket, kauffman_bracket_capped, jones_reduced, sublinks_trivial,
    unlink_jones, BracketError, CalibrationError, ConventionBundle, DEFAULT_CROSSING_CAP,
};
pub use corpus::{builtin_corpus, corpus_diagram, CorpusEntry, UnknownName, CORPUS};
pub use diagram::{parse_pd, ArcId, DiagramOpError, LinkDiagram, PdError};
pub use integrality::{
    check_conjecture41, check_eq1_vanishing, check_gsl_integrality, check_prop1, check_prop2,
    convolve_coefficients, double_crossing_identity, double_crossing_identity_exact,
    eq1_report, recurrence_extend, recurrence_step, Conjecture41Outcome, IntegralityError,
    ValuationEntry, ValuationReport, Verdict,
};
pub use laurent::{DivExactError, LaurentParseError, QuarterLaurent};
pub use numerics::{
    falling_factorial_div, format_rational, generalized_binomial, in_p_power_lattice, is_prime,
    padic_valuation, parse_rational, rat, Int, NotPrime, Rational, Valuation,
};
pub use phi::{phi_brunnian, phi_gsl, phi_knot, phi_n, phi_series, phi_trivial, LinkClass, PhiError, PhiResult};
pub use series::{coefficient_via_derivative, whitehead_closed_form, SeriesAtOne, SeriesError};
