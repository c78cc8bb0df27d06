use std::time::Instant;

use num_bigint::BigInt;
use phi4_core::padic_local::{is_square_qp, CurveModel};
use phi4_core::polyring::{parse_upoly, resultant, Rat, UPoly};
use proptest::prelude::*;

fn curve(s: &str) -> CurveModel {
    CurveModel::from_upoly(&parse_upoly(s).unwrap()).unwrap()
}

fn assert_empty(c: &CurveModel, twists: &[i64], p: u64) {
    for &d in twists {
        let twisted = c.quadratic_twist(&BigInt::from(d)).unwrap();
        let start = Instant::now();
        let report = twisted.local_report(p, None).unwrap();
        assert!(!report.solvable, "twist {d} at p = {p} should have no points");
        assert!(start.elapsed().as_secs() < 10);
    }
}

fn assert_solvable(c: &CurveModel, twists: &[i64], p: u64) {
    for &d in twists {
        let twisted = c.quadratic_twist(&BigInt::from(d)).unwrap();
        assert!(twisted.has_qp_points(p).unwrap(), "twist {d} at p = {p} should have points");
    }
}

const SQUAREFREE_DIVISORS: [i64; 16] = [1, 2, 5, 10, 17, 34, 85, 170, -1, -2, -5, -10, -17, -34, -85, -170];

#[test]
fn genus_one_and_two_pair() {
    let x = curve("(x^2 + 1)(3x^2 + 2x - 3)");
    let y = curve("43x^6 + 48x^5 - 81x^4 - 80x^3 + 81x^2 + 48x - 43");
    assert_empty(&y, &[17, -17], 17);
    assert_empty(&y, &[85, -85], 5);
    assert_empty(&x, &[2, -2, 10, -10, 34, -34, 170, -170], 2);
}

#[test]
fn genus_two_and_three_pair() {
    let g = curve("x^8 - 8x^5 + 2x^4 + 8x^3 + 1");
    assert_empty(&g, &[2, 5, 10, 34, 85, 170], 2);
    assert_empty(&g, &[17], 3);
    assert_solvable(&g, &[1, 17], 2);
    // g is positive on ℝ, so negative twists have no real points
    for d in SQUAREFREE_DIVISORS {
        let t = g.quadratic_twist(&BigInt::from(d)).unwrap();
        assert_eq!(t.has_real_points(), d > 0);
    }
}

#[test]
fn genus_four_and_three_pair() {
    let x = curve("(x^2 + 1)(x^8 - 8x^5 + 2x^4 + 8x^3 + 1)");
    let y = curve("(x^2 - 2x - 1)(x^6 - 3x^4 - 16x^3 + 3x^2 - 1)");
    assert_empty(&x, &[5, 10, 17, 34], 7);
    assert_empty(&y, &[170], 5);
}

#[test]
fn twist_candidates_come_from_resultant_primes() {
    let f = parse_upoly("(x^4 - 1)(x^2 - 2x - 1)").unwrap();
    let g = parse_upoly("x^8 - 8x^5 + 2x^4 + 8x^3 + 1").unwrap();
    let r = resultant(&f, &g).to_integer();
    for p in [2, 5, 17] {
        assert_eq!(&r % BigInt::from(p), BigInt::from(0));
    }
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    // one-sided oracle: an integer or reciprocal x with f(x) a p-adic square
    // is an explicit point, so the decision must agree
    #[test]
    fn explicit_points_are_never_missed(cs in prop::collection::vec(-9i64..=9, 2..=7), p in small_prime()) {
        let f = UPoly::new(cs.iter().map(|&c| Rat::from_integer(c.into())).collect());
        let Ok(c) = CurveModel::from_upoly(&f) else { return Ok(()) };
        let mut samples: Vec<Rat> = (-30..=30).map(|k: i64| Rat::from_integer(k.into())).collect();
        samples.extend((1..=30).map(|k: i64| Rat::new(1.into(), (k * p as i64).into())));
        let explicit = samples.iter().any(|x| is_square_qp(&f.eval(x), p));
        if explicit {
            prop_assert!(c.has_qp_points(p).unwrap());
        }
    }
}
