//! Seeded randomized suites: every run draws the same cases, so failures
//! reproduce exactly.

use jlint_core::series::expand_laurent;
use jlint_core::{
    check_prop2, coefficient_via_derivative, double_crossing_identity, falling_factorial_div,
    rat, recurrence_extend, Int, QuarterLaurent, Rational, SeriesAtOne, Verdict,
};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5EED_0000 + salt)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    const DENS: [i64; 6] = [1, 2, 3, 4, 5, 8];
    rat(rng.gen_range(-9..=9), DENS[rng.gen_range(0..DENS.len())])
}

fn random_series(rng: &mut ChaCha8Rng, order: usize) -> SeriesAtOne {
    SeriesAtOne::from_coefficients((0..=order).map(|_| random_rational(rng)).collect())
}

fn random_laurent(rng: &mut ChaCha8Rng) -> QuarterLaurent {
    let terms = rng.gen_range(0..=6);
    (0..terms)
        .map(|_| (rng.gen_range(-24..=24), random_rational(rng)))
        .collect()
}

#[test]
fn falling_factorial_is_always_integral() {
    let mut rng = rng(1);
    for case in 0..1000 {
        let base = Int::from(rng.gen_range(-1_000_000i64..=1_000_000));
        let m = base * Int::from(10).pow(rng.gen_range(0..6));
        let n: u32 = rng.gen_range(0..=20);
        let got = falling_factorial_div(&m, n);
        let mut prod = Rational::one();
        for i in 0..n {
            prod *= Rational::from_integer(&m - Int::from(i));
        }
        let fact = (1..=u64::from(n)).map(Int::from).fold(Int::one(), |a, b| a * b);
        let expected = prod / Rational::from_integer(fact);
        assert!(expected.is_integer(), "case {case}: quotient not integral");
        assert_eq!(got, expected.to_integer(), "case {case}: m={m} n={n}");
    }
}

#[test]
fn expansion_agrees_with_derivative_route() {
    let mut rng = rng(2);
    for case in 0..200 {
        let p = random_laurent(&mut rng);
        let series = expand_laurent(&p, 12);
        for n in 0..=12 {
            assert_eq!(
                *series.coefficient(n).unwrap(),
                coefficient_via_derivative(&p, n),
                "case {case}, n = {n}, p = {p}"
            );
        }
    }
}

#[test]
fn recurrence_and_identity_are_equivalent() {
    let mut rng = rng(3);
    const ORDER: usize = 20;
    for case in 0..100 {
        let g = random_series(&mut rng, ORDER);
        let h = random_series(&mut rng, ORDER);
        let k = random_series(&mut rng, ORDER);
        let f = recurrence_extend(&g, &h, &k, ORDER);
        assert!(
            double_crossing_identity(&f, &g, &h, &k, ORDER),
            "case {case}: recurrence output must satisfy the identity"
        );
        let bump = rng.gen_range(0..=ORDER);
        let mut coeffs = f.coefficients().to_vec();
        coeffs[bump] += Rational::one();
        let perturbed = SeriesAtOne::from_coefficients(coeffs);
        assert!(
            !double_crossing_identity(&perturbed, &g, &h, &k, ORDER),
            "case {case}: perturbation at {bump} must break the identity"
        );
    }
}

#[test]
fn recurrence_closes_over_the_two_power_lattice() {
    let mut rng = rng(4);
    const ORDER: usize = 16;
    let lattice_series = |rng: &mut ChaCha8Rng| {
        let coeffs = (0..=ORDER)
            .map(|m| {
                let c = rat(rng.gen_range(-15..=15), 1);
                if m >= 2 {
                    c * Rational::new(Int::one(), Int::from(2).pow(m as u32 - 2))
                } else {
                    c * Rational::from_integer(Int::from(2).pow(2 - m as u32))
                }
            })
            .collect();
        SeriesAtOne::from_coefficients(coeffs)
    };
    for case in 0..50 {
        let g = lattice_series(&mut rng);
        let h = lattice_series(&mut rng);
        let k = lattice_series(&mut rng);
        for s in [&g, &h, &k] {
            assert_eq!(check_prop2(s, ORDER).verdict, Verdict::Pass);
        }
        let f = recurrence_extend(&g, &h, &k, ORDER);
        assert_eq!(
            check_prop2(&f, ORDER).verdict,
            Verdict::Pass,
            "case {case}: lattice not preserved"
        );
    }
}
